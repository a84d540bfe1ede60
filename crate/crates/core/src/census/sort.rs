//! Sharded sort of `graph6 TAB fingerprint` records and the k-way merge that
//! turns them into fingerprint buckets.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};

/// `(fingerprint, graph6)`: sorting compares the fingerprint first.
pub(crate) type Record = (String, String);

fn write_shard(path: &Path, shard: &[Record]) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    for (fp, g6) in shard {
        writeln!(w, "{g6}\t{fp}")?;
    }
    w.flush()?;
    Ok(())
}

fn read_shard(path: &Path) -> Result<Box<dyn Iterator<Item = Result<Record>>>> {
    let r = BufReader::new(File::open(path)?);
    let label = path.display().to_string();
    Ok(Box::new(r.lines().map(move |line| {
        let line = line?;
        let (g6, fp) = line
            .split_once('\t')
            .ok_or_else(|| Error::Inconsistent(format!("{label}: malformed record {line:?}")))?;
        Ok((fp.to_string(), g6.to_string()))
    })))
}

/// Splits `records` into `shards` contiguous runs, sorts each, optionally
/// spills them to `workdir/<stem>.<i>.tsv`, and merges them back into one
/// globally sorted sequence.
pub(crate) fn sort_sharded(
    mut records: Vec<Record>,
    shards: usize,
    workdir: Option<(&Path, &str)>,
) -> Result<Vec<Record>> {
    let shards = shards.max(1);
    let chunk = records.len().div_ceil(shards).max(1);
    let mut runs: Vec<Vec<Record>> = Vec::with_capacity(shards);
    while !records.is_empty() {
        let tail = records.split_off(chunk.min(records.len()));
        runs.push(std::mem::replace(&mut records, tail));
    }
    for run in &mut runs {
        run.sort_unstable();
    }
    let mut sources: Vec<Box<dyn Iterator<Item = Result<Record>>>> = Vec::new();
    match workdir {
        Some((dir, stem)) => {
            for (i, run) in runs.iter().enumerate() {
                let path = dir.join(format!("{stem}.{i}.tsv"));
                write_shard(&path, run)?;
                sources.push(read_shard(&path)?);
            }
        }
        None => {
            for run in runs {
                sources.push(Box::new(run.into_iter().map(Ok)));
            }
        }
    }
    merge(sources)
}

fn merge(mut sources: Vec<Box<dyn Iterator<Item = Result<Record>>>>) -> Result<Vec<Record>> {
    let mut heap = BinaryHeap::new();
    for (i, s) in sources.iter_mut().enumerate() {
        if let Some(r) = s.next() {
            heap.push(Reverse((r?, i)));
        }
    }
    let mut out = Vec::new();
    while let Some(Reverse((rec, i))) = heap.pop() {
        if let Some(r) = sources[i].next() {
            heap.push(Reverse((r?, i)));
        }
        out.push(rec);
    }
    Ok(out)
}

/// Maximal runs of equal fingerprint with at least two members.
pub(crate) fn collisions(sorted: &[Record]) -> Vec<&[Record]> {
    sorted
        .chunk_by(|a, b| a.0 == b.0)
        .filter(|c| c.len() > 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn recs() -> Vec<Record> {
        (0..50)
            .map(|i| (format!("{}", (i * 7) % 11), format!("g{i:02}")))
            .collect()
    }

    #[test]
    fn shard_count_does_not_matter() {
        let one = sort_sharded(recs(), 1, None).unwrap();
        for s in [2, 3, 8, 100] {
            assert_eq!(sort_sharded(recs(), s, None).unwrap(), one);
        }
        let dir = tempfile::tempdir().unwrap();
        assert_eq!(sort_sharded(recs(), 4, Some((dir.path(), "t"))).unwrap(), one);
        assert!(dir.path().join("t.3.tsv").exists());
        assert_eq!(collisions(&one).len(), 11);
    }
}

//! Isomorph-free censuses: per-method equivalence classes of an order-`n`
//! catalog, found by a fingerprint sieve followed by exact confirmation
//! inside colliding buckets.

mod method;
mod sort;
mod tables;

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

pub use method::{fingerprint, invariant_key, MethodSpec, MethodTag};
pub use tables::{emit_tables, write_tables, Table};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::Graph;
use crate::graph6;
use crate::iso::{canonical_g6, generate_g6, Filter};
use crate::switching::{even_block_sizes, has_gm_partner};
use method::{exact_with_fingerprint, Component};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Generate,
    /// graph6 file, one representative per isomorphism class.
    Catalog(PathBuf),
}

#[derive(Debug, Clone)]
pub struct CensusConfig {
    pub n: usize,
    pub methods: Vec<MethodSpec>,
    pub source: Source,
    pub shards: usize,
    /// Spill sorted shards here instead of merging in memory.
    pub workdir: Option<PathBuf>,
    pub exec: Exec,
}

impl CensusConfig {
    pub fn new(n: usize, methods: Vec<MethodSpec>) -> Self {
        CensusConfig {
            n,
            methods,
            source: Source::Generate,
            shards: 1,
            workdir: None,
            exec: Exec::default(),
        }
    }
}

/// Equivalence classes of one method on one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub n: usize,
    pub method: MethodSpec,
    /// Graphs in scope (all, or md2 only).
    pub total: usize,
    /// Graphs sharing the invariant with a non-isomorphic graph; for the
    /// switching tags, graphs with a non-isomorphic switching partner.
    pub undetermined: usize,
    /// class size -> number of classes.
    pub histogram: BTreeMap<usize, usize>,
    /// Members of every class of size at least two, each sorted, the list
    /// sorted by first member. Empty for the switching tags.
    pub classes: Vec<Vec<String>>,
}

impl ClassReport {
    pub fn largest_class(&self) -> usize {
        self.histogram.keys().next_back().copied().unwrap_or(0)
    }
}

/// Class-size histogram of a report and the largest size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySizes {
    pub histogram: BTreeMap<usize, usize>,
    pub largest: usize,
}

pub fn family_size_stats(report: &ClassReport) -> FamilySizes {
    let mut histogram = BTreeMap::new();
    for c in &report.classes {
        *histogram.entry(c.len()).or_insert(0) += 1;
    }
    if report.classes.is_empty() {
        histogram = report.histogram.clone();
    }
    let largest = histogram.keys().next_back().copied().unwrap_or(0);
    FamilySizes { histogram, largest }
}

/// The catalog as graph6 lines. Catalog graphs must all have order `n`.
pub fn load_source(source: &Source, n: usize, exec: Exec) -> Result<Vec<String>> {
    match source {
        Source::Generate => Ok(generate_g6(n, Filter::All, None, exec)),
        Source::Catalog(path) => {
            let text = std::fs::read_to_string(path)?;
            let mut out = Vec::new();
            for (i, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                let g = graph6::decode(line)?;
                if g.order() != n {
                    return Err(Error::Inconsistent(format!(
                        "{}:{}: order {} in an order-{n} catalog",
                        path.display(),
                        i + 1,
                        g.order()
                    )));
                }
                out.push(line.to_string());
            }
            Ok(out)
        }
    }
}

/// SHA-256 of the catalog as newline-terminated graph6 lines.
pub fn source_checksum(g6s: &[String]) -> String {
    let mut h = Sha256::new();
    for s in g6s {
        h.update(s.as_bytes());
        h.update(b"\n");
    }
    h.finalize().iter().fold(String::new(), |mut acc, b| {
        let _ = write!(acc, "{b:02x}");
        acc
    })
}

pub fn run_census(cfg: &CensusConfig) -> Result<Vec<ClassReport>> {
    let g6s = load_source(&cfg.source, cfg.n, cfg.exec)?;
    census_of(cfg, &g6s)
}

/// Runs `cfg.methods` on an already loaded catalog.
pub fn census_of(cfg: &CensusConfig, g6s: &[String]) -> Result<Vec<ClassReport>> {
    let graphs: Vec<Graph> = g6s
        .iter()
        .map(|s| graph6::decode(s))
        .collect::<Result<_>>()?;
    let md2: Vec<bool> = graphs.iter().map(|g| Filter::Md2.accepts(g)).collect();

    // Each needed component fingerprint is computed once per graph.
    let mut comps: Vec<Component> = Vec::new();
    for m in &cfg.methods {
        for c in m.tag.components() {
            if !comps.contains(c) {
                comps.push(*c);
            }
        }
    }
    let table: Vec<Vec<String>> = cfg
        .exec
        .map(&graphs, |g| comps.iter().map(|c| c.fingerprint(g)).collect());

    let mut reports = Vec::with_capacity(cfg.methods.len());
    for (k, &spec) in cfg.methods.iter().enumerate() {
        let scope: Vec<usize> = (0..graphs.len())
            .filter(|&i| !spec.md2_only || md2[i])
            .collect();
        let report = if spec.tag.is_switching() {
            switching_report(cfg, spec, &graphs, &scope)
        } else {
            let idx: Vec<usize> = spec
                .tag
                .components()
                .iter()
                .map(|c| comps.iter().position(|d| d == c).unwrap())
                .collect();
            let records = scope
                .iter()
                .map(|&i| {
                    let fp: Vec<&str> = idx.iter().map(|&j| table[i][j].as_str()).collect();
                    (fp.join(";"), g6s[i].clone())
                })
                .collect();
            let stem = format!("n{}-{}-{k}", cfg.n, spec.to_string().replace('@', "-"));
            let wd = cfg.workdir.as_deref().map(|d| (d, stem.as_str()));
            invariant_report(cfg, spec, records, wd)?
        };
        reports.push(report);
    }
    Ok(reports)
}

fn switching_report(cfg: &CensusConfig, spec: MethodSpec, graphs: &[Graph], scope: &[usize]) -> ClassReport {
    let sizes = match spec.tag {
        MethodTag::GM4 => vec![4].into_iter().filter(|&b| b < cfg.n).collect(),
        _ => even_block_sizes(cfg.n),
    };
    let star = spec.tag == MethodTag::GMstar;
    let hits = cfg
        .exec
        .map(scope, |&i| has_gm_partner(&graphs[i], &sizes, star, 1));
    ClassReport {
        n: cfg.n,
        method: spec,
        total: scope.len(),
        undetermined: hits.iter().filter(|&&h| h).count(),
        histogram: BTreeMap::new(),
        classes: Vec::new(),
    }
}

fn invariant_report(
    cfg: &CensusConfig,
    spec: MethodSpec,
    records: Vec<(String, String)>,
    workdir: Option<(&Path, &str)>,
) -> Result<ClassReport> {
    let total = records.len();
    let sorted = sort::sort_sharded(records, cfg.shards, workdir)?;
    let buckets = sort::collisions(&sorted);
    let flat: Vec<&(String, String)> = buckets.iter().flat_map(|b| b.iter()).collect();
    let exact: Vec<Result<String>> = cfg.exec.map(&flat, |(fp, g6)| {
        let g = graph6::decode(g6)?;
        let (key, derived) = exact_with_fingerprint(&g, spec.tag);
        if &derived != fp {
            return Err(Error::Inconsistent(format!(
                "{g6}: {} fingerprint {fp} but exact invariant gives {derived}",
                spec.tag
            )));
        }
        Ok(key)
    });
    let mut exact = exact.into_iter();
    let mut classes: Vec<Vec<String>> = Vec::new();
    for bucket in buckets {
        let mut by_key: HashMap<String, Vec<String>> = HashMap::new();
        for (_, g6) in bucket {
            let key = exact.next().expect("one key per record")?;
            by_key.entry(key).or_default().push(g6.clone());
        }
        classes.extend(by_key.into_values().filter(|c| c.len() > 1));
    }
    for c in &mut classes {
        c.sort();
    }
    classes.sort();
    check_isomorph_free(&classes, cfg.exec)?;
    let mut histogram = BTreeMap::new();
    for c in &classes {
        *histogram.entry(c.len()).or_insert(0) += 1;
    }
    Ok(ClassReport {
        n: cfg.n,
        method: spec,
        total,
        undetermined: classes.iter().map(Vec::len).sum(),
        histogram,
        classes,
    })
}

/// Isomorphic graphs share every invariant, so duplicates can only hide
/// inside a class.
fn check_isomorph_free(classes: &[Vec<String>], exec: Exec) -> Result<()> {
    let found: Vec<Option<(String, String)>> = exec.map(classes, |c| {
        let mut seen: HashMap<String, &String> = HashMap::new();
        for g6 in c {
            let canon = canonical_g6(&graph6::decode(g6).ok()?);
            if let Some(prev) = seen.insert(canon, g6) {
                return Some((prev.clone(), g6.clone()));
            }
        }
        None
    });
    match found.into_iter().flatten().next() {
        Some((a, b)) => Err(Error::NotIsomorphFree(a, b)),
        None => Ok(()),
    }
}

/// Plain-text run manifest.
pub fn manifest(cfg: &CensusConfig, g6s: &[String]) -> String {
    let source = match &cfg.source {
        Source::Generate => "generated".to_string(),
        Source::Catalog(p) => p.display().to_string(),
    };
    let methods: Vec<String> = cfg.methods.iter().map(|m| m.to_string()).collect();
    let mut s = String::new();
    let _ = writeln!(s, "n\t{}", cfg.n);
    let _ = writeln!(s, "methods\t{}", methods.join(","));
    let _ = writeln!(s, "source\t{source}");
    let _ = writeln!(s, "graphs\t{}", g6s.len());
    let _ = writeln!(s, "source_sha256\t{}", source_checksum(g6s));
    let _ = writeln!(s, "shards\t{}", cfg.shards.max(1));
    if cfg.n >= 10 {
        let _ = writeln!(s, "extended\ttrue");
    }
    s
}

/// `n TAB method TAB total TAB undetermined TAB size:count,...` per report.
pub fn summary_tsv(reports: &[ClassReport]) -> String {
    let mut s = String::from("n\tmethod\tgraphs\tundetermined\thistogram\n");
    for r in reports {
        let h: Vec<String> = r.histogram.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        let _ = writeln!(
            s,
            "{}\t{}\t{}\t{}\t{}",
            r.n,
            r.method,
            r.total,
            r.undetermined,
            h.join(",")
        );
    }
    s
}

/// `class-id TAB graph6` lines of one report.
pub fn classes_tsv(report: &ClassReport) -> String {
    let mut s = String::new();
    for (i, c) in report.classes.iter().enumerate() {
        for g6 in c {
            let _ = writeln!(s, "{i}\t{g6}");
        }
    }
    s
}

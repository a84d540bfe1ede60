//! Brute-force enumeration of closed geodesics and closed walks. Deliberately
//! naive: this is the ground truth the determinant formulas are checked
//! against, so it shares no code with them.

use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::Graph;
use crate::zeta::{BartholdiCensus, GeodesicCensus};

pub const MAX_GEODESIC_LEN: usize = 12;
pub const MAX_WALK_LEN: usize = 8;
pub const DEFAULT_BUDGET: u64 = 200_000_000;

struct Arcs {
    tail: Vec<usize>,
    head: Vec<usize>,
    inv: Vec<usize>,
    out: Vec<Vec<usize>>,
}

impl Arcs {
    fn new(g: &Graph) -> Self {
        let mut tail = Vec::new();
        let mut head = Vec::new();
        let mut out = vec![Vec::new(); g.order()];
        for u in 0..g.order() {
            for v in g.neighbors(u) {
                out[u].push(tail.len());
                tail.push(u);
                head.push(v);
            }
        }
        let inv = (0..tail.len())
            .map(|i| {
                (0..tail.len())
                    .find(|&j| tail[j] == head[i] && head[j] == tail[i])
                    .expect("reverse arc exists")
            })
            .collect();
        Arcs {
            tail,
            head,
            inv,
            out,
        }
    }
}

/// `(primitive, lexicographically smallest among its rotations)`.
fn rotation_status(w: &[usize]) -> (bool, bool) {
    let l = w.len();
    let mut canonical = true;
    for r in 1..l {
        let mut ord = std::cmp::Ordering::Equal;
        for k in 0..l {
            ord = w[(k + r) % l].cmp(&w[k]);
            if ord != std::cmp::Ordering::Equal {
                break;
            }
        }
        match ord {
            std::cmp::Ordering::Equal => return (false, false),
            std::cmp::Ordering::Less => canonical = false,
            std::cmp::Ordering::Greater => {}
        }
    }
    (true, canonical)
}

/// Per length (and bump count): primitive walks, canonical primitive walks.
type Tally = Vec<Vec<(u64, u64)>>;

struct Search<'a> {
    arcs: &'a Arcs,
    max_len: usize,
    backtracking: bool,
    visited: &'a AtomicU64,
    budget: u64,
    tally: Tally,
}

impl Search<'_> {
    fn run(&mut self, walk: &mut Vec<usize>, bumps: usize) -> Result<()> {
        if self.visited.fetch_add(1, Ordering::Relaxed) >= self.budget {
            return Err(Error::Budget(self.budget));
        }
        let a = self.arcs;
        let last = *walk.last().unwrap();
        let first = walk[0];
        if a.head[last] == a.tail[first] {
            let tail = usize::from(a.inv[last] == first);
            if self.backtracking || tail == 0 {
                let (prim, canon) = rotation_status(walk);
                let cell = &mut self.tally[walk.len()][bumps + tail];
                cell.0 += u64::from(prim);
                cell.1 += u64::from(prim && canon);
            }
        }
        if walk.len() == self.max_len {
            return Ok(());
        }
        for &next in &a.out[a.head[last]] {
            let bump = usize::from(next == a.inv[last]);
            if bump == 1 && !self.backtracking {
                continue;
            }
            walk.push(next);
            self.run(walk, bumps + bump)?;
            walk.pop();
        }
        Ok(())
    }
}

fn enumerate(g: &Graph, max_len: usize, backtracking: bool, budget: u64, exec: Exec) -> Result<Tally> {
    let arcs = Arcs::new(g);
    let visited = AtomicU64::new(0);
    let starts: Vec<usize> = (0..arcs.tail.len()).collect();
    let parts = exec.map(&starts, |&s| {
        let mut search = Search {
            arcs: &arcs,
            max_len,
            backtracking,
            visited: &visited,
            budget,
            tally: vec![vec![(0, 0); max_len + 1]; max_len + 1],
        };
        search.run(&mut vec![s], 0).map(|_| search.tally)
    });
    let mut total: Tally = vec![vec![(0, 0); max_len + 1]; max_len + 1];
    for part in parts {
        let part = part?;
        for (l, row) in part.iter().enumerate() {
            for (c, &(p, k)) in row.iter().enumerate() {
                total[l][c].0 += p;
                total[l][c].1 += k;
            }
        }
    }
    for (l, row) in total.iter().enumerate() {
        for &(p, k) in row {
            assert_eq!(p, k * l as u64, "σ-orbit of a primitive walk must have size {l}");
        }
    }
    Ok(total)
}

pub fn enumerate_geodesics(g: &Graph, max_len: usize) -> Result<GeodesicCensus> {
    enumerate_geodesics_with(g, max_len, DEFAULT_BUDGET, Exec::default())
}

pub fn enumerate_geodesics_with(
    g: &Graph,
    max_len: usize,
    budget: u64,
    exec: Exec,
) -> Result<GeodesicCensus> {
    if max_len > MAX_GEODESIC_LEN {
        return Err(Error::Precondition(format!("geodesic length above {MAX_GEODESIC_LEN}")));
    }
    let t = enumerate(g, max_len, false, budget, exec)?;
    let mut census = GeodesicCensus::new(max_len);
    for (l, row) in t.iter().enumerate() {
        census.set(l, BigInt::from(row[0].1));
    }
    Ok(census)
}

pub fn enumerate_closed_walks_cbc(g: &Graph, max_len: usize) -> Result<BartholdiCensus> {
    enumerate_closed_walks_cbc_with(g, max_len, DEFAULT_BUDGET, Exec::default())
}

pub fn enumerate_closed_walks_cbc_with(
    g: &Graph,
    max_len: usize,
    budget: u64,
    exec: Exec,
) -> Result<BartholdiCensus> {
    if max_len > MAX_WALK_LEN {
        return Err(Error::Precondition(format!("walk length above {MAX_WALK_LEN}")));
    }
    let t = enumerate(g, max_len, true, budget, exec)?;
    let mut census = BartholdiCensus::default();
    for (l, row) in t.iter().enumerate() {
        for (c, &(_, k)) in row.iter().enumerate() {
            if k > 0 {
                census.add(l, c, BigInt::from(k));
            }
        }
    }
    Ok(census)
}

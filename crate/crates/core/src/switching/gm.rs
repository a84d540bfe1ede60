//! Godsil–McKay switching with `k` switching blocks and its degree-preserving
//! (starred) variant.

use std::collections::HashSet;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::canonical_g6;

/// Ordered switching blocks `V_B1, ..., V_Bk` and the remainder `V_C`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SwitchingPartition {
    blocks: Vec<Vec<usize>>,
    rest: Vec<usize>,
}

impl SwitchingPartition {
    /// The remainder is every vertex of `0..n` not in a block.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if blocks.is_empty() || blocks.iter().any(|b| b.is_empty()) {
            return Err(Error::Partition("need at least one non-empty block".into()));
        }
        let mut seen = vec![false; n];
        for &v in blocks.iter().flatten() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::Partition(format!("vertex {v} in two blocks")));
            }
        }
        let rest = (0..n).filter(|&v| !seen[v]).collect();
        Ok(SwitchingPartition { blocks, rest })
    }

    fn from_masks(n: usize, masks: &[u64]) -> Self {
        let blocks = masks.iter().map(|&m| bits(m).collect()).collect();
        SwitchingPartition::new(n, blocks).expect("disjoint masks")
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn rest(&self) -> &[usize] {
        &self.rest
    }

    pub fn order(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum::<usize>() + self.rest.len()
    }

    fn masks(&self) -> Vec<u64> {
        self.blocks.iter().map(|b| mask_of(b)).collect()
    }
}

/// Blocks separated by `|`, vertices by `,`; the remainder is implicit.
impl fmt::Display for SwitchingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// Parses the [`Display`](fmt::Display) form; the order must be supplied
/// separately, so this yields the blocks only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionBlocks(pub Vec<Vec<usize>>);

impl FromStr for PartitionBlocks {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.split('|')
            .map(|b| {
                b.split(',')
                    .map(|v| {
                        v.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Partition(format!("bad vertex {v:?}")))
                    })
                    .collect()
            })
            .collect::<Result<Vec<Vec<usize>>>>()
            .map(PartitionBlocks)
    }
}

fn mask_of(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

fn hits(g: &Graph, v: usize, mask: u64) -> u32 {
    (g.row64(v) & mask).count_ones()
}

fn regular_inside(g: &Graph, mask: u64) -> bool {
    let mut it = bits(mask).map(|v| hits(g, v, mask));
    let first = it.next();
    it.all(|d| Some(d) == first)
}

fn equal_degrees(g: &Graph, mask: u64) -> bool {
    let mut it = bits(mask).map(|v| g.degree(v));
    let first = it.next();
    it.all(|d| Some(d) == first)
}

/// Constant row and column sums of the block between `a` and `b`.
fn biregular(g: &Graph, a: u64, b: u64) -> bool {
    let rows = bits(a).map(|v| hits(g, v, b)).collect::<HashSet<_>>();
    let cols = bits(b).map(|v| hits(g, v, a)).collect::<HashSet<_>>();
    rows.len() <= 1 && cols.len() <= 1
}

/// Column condition against `rest`; returns the number of half columns, or
/// `None` when some column has a forbidden weight.
fn half_columns(g: &Graph, block: u64, rest: u64) -> Option<usize> {
    let b = block.count_ones();
    let mut half = 0;
    for c in bits(rest) {
        let h = hits(g, c, block);
        if b % 2 == 0 && h == b / 2 {
            half += 1;
        } else if h != 0 && h != b {
            return None;
        }
    }
    Some(half)
}

fn check_masks(g: &Graph, masks: &[u64], star: bool) -> Option<usize> {
    let all = (0..g.order()).fold(0u64, |m, v| m | 1 << v);
    let rest = masks.iter().fold(all, |r, &m| r & !m);
    let mut half = 0;
    for (i, &a) in masks.iter().enumerate() {
        if !regular_inside(g, a) || (star && !equal_degrees(g, a)) {
            return None;
        }
        for &b in &masks[i + 1..] {
            if !biregular(g, a, b) {
                return None;
            }
        }
        half += half_columns(g, a, rest)?;
    }
    Some(half)
}

fn switch_masks(g: &Graph, masks: &[u64]) -> Graph {
    let all = (0..g.order()).fold(0u64, |m, v| m | 1 << v);
    let rest = masks.iter().fold(all, |r, &m| r & !m);
    let mut h = g.clone();
    for &block in masks {
        let b = block.count_ones();
        for c in bits(rest) {
            if b % 2 == 0 && hits(g, c, block) == b / 2 {
                for v in bits(block) {
                    h.toggle_edge(v, c);
                }
            }
        }
    }
    h
}

fn validate(g: &Graph, p: &SwitchingPartition) -> Result<()> {
    if p.order() != g.order() {
        return Err(Error::Partition(format!(
            "partition covers {} vertices, graph has {}",
            p.order(),
            g.order()
        )));
    }
    if g.order() > 64 {
        return Err(Error::Partition("switching supports n <= 64".into()));
    }
    Ok(())
}

/// Block graphs regular, off-diagonal blocks with constant line sums, and
/// each remainder vertex adjacent to none, half or all of every block.
pub fn check_gm_condition(g: &Graph, p: &SwitchingPartition) -> Result<bool> {
    validate(g, p)?;
    Ok(check_masks(g, &p.masks(), false).is_some())
}

/// GM condition plus equal degrees (in `g`) within each block.
pub fn check_gm_star(g: &Graph, p: &SwitchingPartition) -> Result<bool> {
    validate(g, p)?;
    Ok(check_masks(g, &p.masks(), true).is_some())
}

/// Complements every half column of every block.
pub fn gm_switch(g: &Graph, p: &SwitchingPartition) -> Result<Graph> {
    if !check_gm_condition(g, p)? {
        return Err(Error::Condition(format!("GM condition fails for {p}")));
    }
    Ok(switch_masks(g, &p.masks()))
}

/// Calls `f` on every `size`-subset of `avail` (as a bitmask).
fn for_each_subset<F>(avail: u64, size: usize, f: &mut F) -> ControlFlow<()>
where
    F: FnMut(u64) -> ControlFlow<()>,
{
    let pool: Vec<usize> = bits(avail).collect();
    if size > pool.len() {
        return ControlFlow::Continue(());
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        f(idx.iter().fold(0, |m, &i| m | 1 << pool[i]))?;
        let Some(i) = (0..size).rev().find(|&i| idx[i] != i + pool.len() - size) else {
            return ControlFlow::Continue(());
        };
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Visits every admissible partition with a half column. One block of even
/// size in `block_sizes`; with `k_max >= 2` also two blocks, the first of
/// size in `block_sizes` and the second of size `> 1` sharing a factor with
/// it. Larger `k` is not searched.
fn search<F>(g: &Graph, block_sizes: &[usize], star: bool, k_max: usize, f: &mut F)
where
    F: FnMut(&[u64]) -> ControlFlow<()>,
{
    let n = g.order();
    assert!(n <= 64, "switching supports n <= 64");
    let all = (0..n).fold(0u64, |m, v| m | 1 << v);
    let mut sizes: Vec<usize> = block_sizes
        .iter()
        .copied()
        .filter(|&b| b >= 4 && b % 2 == 0 && b < n)
        .collect();
    sizes.sort_unstable();
    sizes.dedup();
    for &b1 in &sizes {
        let flow = for_each_subset(all, b1, &mut |m1| {
            if !regular_inside(g, m1) || (star && !equal_degrees(g, m1)) {
                return ControlFlow::Continue(());
            }
            if let Some(h) = check_masks(g, &[m1], star) {
                if h > 0 {
                    f(&[m1])?;
                }
            }
            if k_max < 2 {
                return ControlFlow::Continue(());
            }
            for b2 in 2..n - b1 {
                if gcd(b1, b2) == 1 {
                    continue;
                }
                for_each_subset(all & !m1, b2, &mut |m2| {
                    if let Some(h) = check_masks(g, &[m1, m2], star) {
                        if h > 0 {
                            f(&[m1, m2])?;
                        }
                    }
                    ControlFlow::Continue(())
                })?;
            }
            ControlFlow::Continue(())
        });
        if flow.is_break() {
            return;
        }
    }
}

/// Every switch of `g` not isomorphic to `g`, one per isomorphism class,
/// with a witnessing partition.
pub fn find_gm_pairs(
    g: &Graph,
    block_sizes: &[usize],
    star_only: bool,
    k_max: usize,
) -> Vec<(SwitchingPartition, Graph)> {
    let own = canonical_g6(g);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    search(g, block_sizes, star_only, k_max, &mut |masks| {
        let h = switch_masks(g, masks);
        let c = canonical_g6(&h);
        if c != own && seen.insert(c) {
            out.push((SwitchingPartition::from_masks(g.order(), masks), h));
        }
        ControlFlow::Continue(())
    });
    out
}

/// Whether [`find_gm_pairs`] would be non-empty; stops at the first hit.
pub fn has_gm_partner(g: &Graph, block_sizes: &[usize], star_only: bool, k_max: usize) -> bool {
    let own = canonical_g6(g);
    let mut found = false;
    search(g, block_sizes, star_only, k_max, &mut |masks| {
        if canonical_g6(&switch_masks(g, masks)) != own {
            found = true;
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    found
}

/// Even block sizes `4, 6, ...` below `n`.
pub fn even_block_sizes(n: usize) -> Vec<usize> {
    (4..n).step_by(2).collect()
}

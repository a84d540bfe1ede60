//! Canonical labeling by partition refinement and individualization, with
//! automorphism pruning. Graphs of order at most 64 only: each adjacency row
//! and each partition cell is a single `u64`.

use num_bigint::BigUint;
use num_traits::One;

use crate::graph::Graph;
use crate::graph6;

pub const MAX_CANON_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub g6: String,
    pub aut_order: BigUint,
}

/// Output of one canonical labeling run.
#[derive(Debug, Clone)]
pub struct Labeling {
    /// `order[i]` is the vertex placed at canonical position `i`.
    pub order: Vec<usize>,
    /// Automorphisms found during the search, as image arrays. They generate
    /// the full automorphism group.
    pub generators: Vec<Vec<usize>>,
    /// Orbit sizes along the first path; their product is `|Aut|`.
    pub(crate) level_orbits: Vec<usize>,
}

impl Labeling {
    pub fn aut_order(&self) -> BigUint {
        self.level_orbits
            .iter()
            .fold(BigUint::one(), |acc, &k| acc * BigUint::from(k))
    }

    /// Canonical position of each vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Orbit representative (smallest member) of every vertex under the
    /// automorphism group.
    pub fn orbits(&self) -> Vec<usize> {
        let gens: Vec<&Vec<usize>> = self.generators.iter().collect();
        orbit_roots(self.order.len(), &gens)
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn orbit_roots(n: usize, gens: &[&Vec<usize>]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    for g in gens {
        for (v, &w) in g.iter().enumerate() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, w));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

#[inline]
fn bits(mut w: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if w == 0 {
            None
        } else {
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(b)
        }
    })
}

/// Refines an ordered partition to the coarsest equitable one below it. A
/// cell split by splitter `W` is replaced by its fragments in increasing order
/// of neighbour count in `W`.
pub(crate) fn refine(rows: &[u64], cells: &mut Vec<u64>) {
    let mut counts = [0u64; 65];
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let w = cells[s];
            let mut next = Vec::with_capacity(cells.len() + 2);
            let mut split = false;
            for &c in cells.iter() {
                if c & (c - 1) == 0 {
                    next.push(c);
                    continue;
                }
                let (mut lo, mut hi) = (64usize, 0usize);
                for v in bits(c) {
                    let k = (rows[v] & w).count_ones() as usize;
                    counts[k] |= 1 << v;
                    lo = lo.min(k);
                    hi = hi.max(k);
                }
                if lo == hi {
                    counts[lo] = 0;
                    next.push(c);
                    continue;
                }
                split = true;
                for slot in counts.iter_mut().take(hi + 1).skip(lo) {
                    if *slot != 0 {
                        next.push(*slot);
                        *slot = 0;
                    }
                }
            }
            if split {
                changed = true;
                *cells = next;
            }
            s += 1;
        }
        if !changed {
            return;
        }
    }
}

struct Leaf {
    cert: Vec<u64>,
    order: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    gens: Vec<Vec<usize>>,
    level_orbits: Vec<usize>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Search<'_> {
    fn certificate(&self, order: &[usize]) -> Vec<u64> {
        let mut pos = [0usize; 64];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        order
            .iter()
            .map(|&v| bits(self.rows[v]).fold(0u64, |acc, u| acc | 1 << pos[u]))
            .collect()
    }

    /// Generators fixing every vertex of `path`.
    fn stabilizer_orbits(&self, path: &[usize]) -> Vec<usize> {
        let gens: Vec<&Vec<usize>> = self
            .gens
            .iter()
            .filter(|g| path.iter().all(|&p| g[p] == p))
            .collect();
        orbit_roots(self.n, &gens)
    }

    fn add_automorphism(&mut self, from: &[usize], to: &[usize]) {
        let mut g = vec![0; self.n];
        for (&a, &b) in from.iter().zip(to) {
            g[a] = b;
        }
        if g.iter().enumerate().any(|(i, &x)| i != x) {
            self.gens.push(g);
        }
    }

    /// Returns `Some(level)` to abandon every node deeper than `level`.
    fn visit(&mut self, cells: Vec<u64>, path: &mut Vec<usize>, on_first: bool) -> Option<usize> {
        let level = path.len();
        let Some(ti) = cells.iter().position(|&c| c & (c - 1) != 0) else {
            return self.leaf(&cells, path);
        };
        let target = cells[ti];
        let mut explored: Vec<usize> = Vec::new();
        for v in bits(target) {
            if !explored.is_empty() {
                let orb = self.stabilizer_orbits(path);
                if explored.iter().any(|&u| orb[u] == orb[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(1 << v);
            child.push(target & !(1 << v));
            child.extend_from_slice(&cells[ti + 1..]);
            refine(self.rows, &mut child);
            path.push(v);
            let jump = self.visit(child, path, on_first && explored.len() == 1);
            path.pop();
            if let Some(j) = jump {
                if j < level {
                    return Some(j);
                }
            }
        }
        if on_first {
            let orb = self.stabilizer_orbits(path);
            let first = explored[0];
            let size = bits(target).filter(|&u| orb[u] == orb[first]).count();
            self.level_orbits.push(size);
        }
        None
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let cert = self.certificate(&order);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                cert,
                order,
                path: path.to_vec(),
            };
            self.best = Some(Leaf {
                cert: leaf.cert.clone(),
                order: leaf.order.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if cert == first.cert {
            let (f, j) = (first.order.clone(), common_prefix(path, &first.path));
            self.add_automorphism(&f, &order);
            return Some(j);
        }
        let best = self.best.as_ref().unwrap();
        match cert.cmp(&best.cert) {
            std::cmp::Ordering::Equal => {
                let (b, j) = (best.order.clone(), common_prefix(path, &best.path));
                self.add_automorphism(&b, &order);
                Some(j)
            }
            std::cmp::Ordering::Greater => {
                self.best = Some(Leaf {
                    cert,
                    order,
                    path: path.to_vec(),
                });
                None
            }
            std::cmp::Ordering::Less => None,
        }
    }
}

/// Canonical labeling of `g`; the initial partition is the unit partition.
pub fn canonical_labeling(g: &Graph) -> Labeling {
    let n = g.order();
    assert!(n <= MAX_CANON_ORDER, "canonical labeling limited to n <= 64");
    if n == 0 {
        return Labeling {
            order: vec![],
            generators: vec![],
            level_orbits: vec![],
        };
    }
    let rows: Vec<u64> = (0..n).map(|v| g.row64(v)).collect();
    let mut cells = vec![if n == 64 { u64::MAX } else { (1u64 << n) - 1 }];
    refine(&rows, &mut cells);
    let mut s = Search {
        rows: &rows,
        n,
        first: None,
        best: None,
        gens: Vec::new(),
        level_orbits: Vec::new(),
    };
    s.visit(cells, &mut Vec::new(), true);
    Labeling {
        order: s.best.unwrap().order,
        generators: s.gens,
        level_orbits: s.level_orbits,
    }
}

pub fn canonical_graph(g: &Graph) -> Graph {
    g.relabel(&canonical_labeling(g).order)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let lab = canonical_labeling(g);
    CanonicalForm {
        g6: graph6::encode(&g.relabel(&lab.order)),
        aut_order: lab.aut_order(),
    }
}

pub fn canonical_g6(g: &Graph) -> String {
    graph6::encode(&canonical_graph(g))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_g6(g) == canonical_g6(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::decode;
    use proptest::prelude::*;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn brute_aut(g: &Graph) -> usize {
        permutations(g.order())
            .into_iter()
            .filter(|p| &g.relabel(p) == g)
            .count()
    }

    fn random_graph(n: usize, seed: u64) -> Graph {
        let mut g = Graph::empty(n);
        let mut x = seed | 1;
        for i in 0..n {
            for j in i + 1..n {
                x ^= x << 13;
                x ^= x >> 7;
                x ^= x << 17;
                if x % 3 == 0 {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    #[test]
    fn all_graphs_on_five_vertices() {
        // brute force over all labelled graphs: 34 classes, correct |Aut|
        let n = 5;
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let mut forms = std::collections::BTreeSet::new();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(n, &edges);
            let cf = canonical_form(&g);
            assert_eq!(cf.aut_order, BigUint::from(brute_aut(&g)), "{g:?}");
            forms.insert(cf.g6);
        }
        assert_eq!(forms.len(), 34);
    }

    #[test]
    fn fixtures() {
        let c4a = Graph::cycle(4);
        let c4b = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]);
        assert_eq!(canonical_g6(&c4a), canonical_g6(&c4b));
        assert!(!is_isomorphic(&Graph::cycle(5), &Graph::path(5)));
        let crab = decode("K??CA?_FEcdk").unwrap();
        let squid = decode("K??CA?_ccWNk").unwrap();
        assert!(!is_isomorphic(&crab, &squid));
        assert!(!is_isomorphic(&decode("HheadXZ").unwrap(), &decode("Hhf@eS|").unwrap()));
        assert_eq!(canonical_form(&Graph::complete(6)).aut_order, BigUint::from(720u32));
        assert_eq!(canonical_form(&Graph::empty(7)).aut_order, BigUint::from(5040u32));
        assert_eq!(canonical_form(&Graph::cycle(9)).aut_order, BigUint::from(18u32));
        let petersen = decode("IheA@GUAo").unwrap();
        assert_eq!(canonical_form(&petersen).aut_order, BigUint::from(120u32));
    }

    proptest! {
        #[test]
        fn invariant_under_relabeling(n in 1usize..=14, seed in any::<u64>(), shuffle in any::<u64>()) {
            let g = random_graph(n, seed);
            let mut perm: Vec<usize> = (0..n).collect();
            let mut x = shuffle | 1;
            for i in (1..n).rev() {
                x ^= x << 13; x ^= x >> 7; x ^= x << 17;
                perm.swap(i, (x % (i as u64 + 1)) as usize);
            }
            let h = g.relabel(&perm);
            let (a, b) = (canonical_form(&g), canonical_form(&h));
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(decode(&a.g6).unwrap().size(), g.size());
            let lab = canonical_labeling(&g);
            for gen in &lab.generators {
                prop_assert_eq!(&g.relabel(&inverse(gen)), &g);
            }
        }
    }

    fn inverse(p: &[usize]) -> Vec<usize> {
        let mut q = vec![0; p.len()];
        for (i, &x) in p.iter().enumerate() {
            q[x] = i;
        }
        q
    }
}

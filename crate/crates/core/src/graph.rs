//! Simple undirected graphs stored as bit-packed symmetric adjacency rows,
//! together with the structural operations the zeta and switching code needs.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Row `i` occupies `stride` consecutive words of `bits`; bit `j` of row `i`
/// is set iff `{i, j}` is an edge. The diagonal is always clear.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices. `n = 0` gives the null graph.
    pub fn empty(n: usize) -> Self {
        let stride = n.div_ceil(64).max(1);
        Graph {
            n,
            stride,
            bits: vec![0; stride * n],
        }
    }

    pub fn null() -> Self {
        Graph::empty(0)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    /// `K_{1,leaves}` with hub 0.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::empty(leaves + 1);
        for i in 1..=leaves {
            g.add_edge(0, i);
        }
        g
    }

    /// Panics if an edge is a loop or out of range.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            assert!(u < n && v < n && u != v, "bad edge ({u}, {v}) for n = {n}");
            g.add_edge(u, v);
        }
        g
    }

    /// Builds a graph from a square 0/1 matrix given row-major. Panics unless
    /// the matrix is symmetric with zero diagonal.
    pub fn from_adjacency(n: usize, entries: &[u8]) -> Self {
        assert_eq!(entries.len(), n * n);
        let mut g = Graph::empty(n);
        for i in 0..n {
            assert_eq!(entries[i * n + i], 0, "loop at {i}");
            for j in i + 1..n {
                let a = entries[i * n + j];
                assert_eq!(a, entries[j * n + i], "asymmetric at ({i}, {j})");
                if a != 0 {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.bits[u * self.stride + v / 64] >> (v % 64)) & 1 == 1
    }

    #[inline]
    fn set_bit(&mut self, u: usize, v: usize, on: bool) {
        let w = &mut self.bits[u * self.stride + v / 64];
        if on {
            *w |= 1 << (v % 64);
        } else {
            *w &= !(1 << (v % 64));
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.set_bit(u, v, true);
        self.set_bit(v, u, true);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.set_bit(u, v, false);
        self.set_bit(v, u, false);
    }

    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        if self.has_edge(u, v) {
            self.remove_edge(u, v);
        } else {
            self.add_edge(u, v);
        }
    }

    /// The adjacency row of `v` as a single word. Only valid for `n <= 64`.
    #[inline]
    pub fn row64(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.bits[v * self.stride]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.bits[v * self.stride..(v + 1) * self.stride]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.bits[v * self.stride..(v + 1) * self.stride];
        row.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * 64 + b)
                }
            })
        })
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degrees();
        d.windows(2).all(|w| w[0] == w[1])
    }

    /// Row-major dense adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<i64> {
        let n = self.n;
        let mut m = vec![0i64; n * n];
        for u in 0..n {
            for v in self.neighbors(u) {
                m[u * n + v] = 1;
            }
        }
        m
    }

    /// Relabels so that old vertex `perm[i]` becomes new vertex `i`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut inv = vec![0; self.n];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(inv[u], inv[v]);
        }
        g
    }

    /// Subgraph induced by `keep`, relabeled in the order given.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Adjacency `J - I - A`.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Block-diagonal union; vertices of `h` follow those of `self`.
    pub fn disjoint_union(&self, h: &Graph) -> Graph {
        let off = self.n;
        let mut g = Graph::empty(self.n + h.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in h.edges() {
            g.add_edge(u + off, v + off);
        }
        g
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, h: &Graph) -> Graph {
        let mut g = self.disjoint_union(h);
        for u in 0..self.n {
            for v in 0..h.n {
                g.add_edge(u, self.n + v);
            }
        }
        g
    }

    /// `G ∨ K_r`. The apex vertices are appended after those of `self`.
    pub fn cone(&self, r: usize) -> Graph {
        assert!(r >= 1, "cone order must be positive");
        self.join(&Graph::complete(r))
    }

    /// Identifies vertex `x` of `self` with vertex `y` of `h`. The merged
    /// vertex keeps label `x`; the other vertices of `h` follow in order.
    pub fn coalesce(&self, x: usize, h: &Graph, y: usize) -> Result<Graph> {
        if x >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                order: self.n,
            });
        }
        if y >= h.n {
            return Err(Error::VertexOutOfRange {
                vertex: y,
                order: h.n,
            });
        }
        let map = |w: usize| -> usize {
            match w.cmp(&y) {
                std::cmp::Ordering::Equal => x,
                std::cmp::Ordering::Less => self.n + w,
                std::cmp::Ordering::Greater => self.n + w - 1,
            }
        };
        let mut g = Graph::empty(self.n + h.n - 1);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in h.edges() {
            g.add_edge(map(u), map(v));
        }
        Ok(g)
    }

    /// The pruned graph: iteratively delete vertices of degree at most one.
    pub fn prune(&self) -> Pruned {
        let mut deg = self.degrees();
        let mut alive = vec![true; self.n];
        let mut queue: VecDeque<usize> = (0..self.n).filter(|&v| deg[v] <= 1).collect();
        while let Some(v) = queue.pop_front() {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            for u in self.neighbors(v) {
                if alive[u] {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        queue.push_back(u);
                    }
                }
            }
        }
        let vertex_map: Vec<usize> = (0..self.n).filter(|&v| alive[v]).collect();
        Pruned {
            graph: self.induced(&vertex_map),
            vertex_map,
        }
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(d)
    }

    /// Component label per vertex, labels assigned in order of first vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    if comp[u] == usize::MAX {
                        comp[u] = next;
                        queue.push_back(u);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().iter().all(|&c| c == 0)
    }

    pub fn classify(&self) -> Classification {
        let comp = self.components();
        let count = comp.iter().copied().max().map_or(0, |c| c + 1);
        // 2-colour each component; a component is bipartite iff no conflict.
        let mut colour = vec![u8::MAX; self.n];
        let mut bip = vec![true; count];
        for s in 0..self.n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    if colour[u] == u8::MAX {
                        colour[u] = 1 - colour[v];
                        queue.push_back(u);
                    } else if colour[u] == colour[v] {
                        bip[comp[v]] = false;
                    }
                }
            }
        }
        let min = self.min_degree();
        let connected = count <= 1;
        Classification {
            is_md1: min.is_some_and(|d| d >= 1),
            is_md2: min.is_some_and(|d| d >= 2),
            is_connected: connected,
            is_bipartite: bip.iter().all(|&b| b),
            is_circuit: connected && self.n >= 3 && self.degrees().iter().all(|&d| d == 2),
            component_count: count,
            bipartite_component_count: bip.iter().filter(|&&b| b).count(),
        }
    }

    /// Counts of unoriented simple cycles of each length `3..=max_len`.
    /// Entry `k` of the result is the number of cycles of length `k + 3`.
    pub fn count_short_cycles(&self, max_len: usize) -> Result<Vec<u64>> {
        if !(3..=8).contains(&max_len) {
            return Err(Error::CycleBound(max_len));
        }
        let mut counts = vec![0u64; max_len - 2];
        let mut path = Vec::with_capacity(max_len);
        let mut on_path = vec![false; self.n];
        // Each cycle is rooted at its smallest vertex and traversed in both
        // directions, so every count is doubled.
        for start in 0..self.n {
            path.clear();
            path.push(start);
            on_path[start] = true;
            self.extend_cycles(start, &mut path, &mut on_path, max_len, &mut counts);
            on_path[start] = false;
        }
        Ok(counts.into_iter().map(|c| c / 2).collect())
    }

    fn extend_cycles(
        &self,
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        max_len: usize,
        counts: &mut [u64],
    ) {
        let last = *path.last().unwrap();
        for v in self.neighbors(last) {
            if v == start && path.len() >= 3 {
                counts[path.len() - 3] += 1;
            } else if v > start && !on_path[v] && path.len() < max_len {
                path.push(v);
                on_path[v] = true;
                self.extend_cycles(start, path, on_path, max_len, counts);
                on_path[v] = false;
                path.pop();
            }
        }
    }
}

impl Graph {
    /// Whether every vertex survives pruning in `G` or in its complement,
    /// and if not, which exceptional family `G` belongs to.
    pub fn dangling_cover_classify(&self) -> Result<DanglingCover> {
        if self.n < 5 {
            return Err(Error::UnsupportedOrder(self.n));
        }
        let mut hit = vec![false; self.n];
        for v in self.prune().vertex_map {
            hit[v] = true;
        }
        for v in self.complement().prune().vertex_map {
            hit[v] = true;
        }
        if hit.iter().all(|&h| h) {
            return Ok(DanglingCover {
                covered: true,
                family: None,
            });
        }
        let family = DanglingFamily::of(self)
            .map(|f| (f, false))
            .or_else(|| DanglingFamily::of(&self.complement()).map(|f| (f, true)));
        Ok(DanglingCover {
            covered: false,
            family,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DanglingFamily {
    /// `K_{1,n-1}`.
    Star,
    /// A star with one leaf pushed out to distance two.
    StarWithPendantPath,
    /// `K_{1,n-2}` plus an isolated vertex.
    StarPlusPoint,
}

impl DanglingFamily {
    fn of(g: &Graph) -> Option<Self> {
        let n = g.n;
        let d = g.degree_sequence().0;
        let leaves = d.iter().filter(|&&x| x == 1).count();
        if g.size() == n - 1 && g.is_connected() {
            if d[0] == n - 1 {
                return Some(DanglingFamily::Star);
            }
            if d[0] == n - 2 && d[1] == 2 && leaves == n - 2 {
                return Some(DanglingFamily::StarWithPendantPath);
            }
        }
        if g.size() == n - 2 && d[0] == n - 2 && d[n - 1] == 0 {
            return Some(DanglingFamily::StarPlusPoint);
        }
        None
    }

    pub fn tag(self, complemented: bool) -> &'static str {
        match (self, complemented) {
            (DanglingFamily::Star, false) => "star",
            (DanglingFamily::StarWithPendantPath, false) => "star-pendant-path",
            (DanglingFamily::StarPlusPoint, false) => "star-plus-point",
            (DanglingFamily::Star, true) => "co-star",
            (DanglingFamily::StarWithPendantPath, true) => "co-star-pendant-path",
            (DanglingFamily::StarPlusPoint, true) => "co-star-plus-point",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DanglingCover {
    pub covered: bool,
    /// Family and whether it is `G` (false) or its complement (true) that
    /// lies in it.
    pub family: Option<(DanglingFamily, bool)>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} {:?})", crate::graph6::encode(self), self.edges())
    }
}

/// Result of [`Graph::prune`]: the pruned graph and, for each of its
/// vertices, the original vertex id (relative order preserved).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pruned {
    pub graph: Graph,
    pub vertex_map: Vec<usize>,
}

/// Vertex degrees sorted non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeSequence(pub Vec<usize>);

impl DegreeSequence {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub is_md1: bool,
    pub is_md2: bool,
    pub is_connected: bool,
    pub is_bipartite: bool,
    pub is_circuit: bool,
    pub component_count: usize,
    pub bipartite_component_count: usize,
}

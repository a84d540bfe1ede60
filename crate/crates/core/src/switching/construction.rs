//! Pairs with equal `φ_ADJ` built from 4x4 blocks, where the conjugating
//! matrix `P + xR` depends on `x`, and an exact test for whether an
//! `x`-independent conjugator exists.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::iso::canonical_g6;
use crate::linalg::{polymat_det, rank_exact, IntPoly};

/// 2x2 building blocks: zero, identity, all-ones, and `w = J - I`.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Q2 {
    O,
    I,
    J,
    W,
}

impl Q2 {
    fn at(self, r: usize, c: usize) -> u8 {
        match self {
            Q2::O => 0,
            Q2::I => u8::from(r == c),
            Q2::J => 1,
            Q2::W => u8::from(r != c),
        }
    }
}

use Q2::{I, J, O, W};

/// Diagonal block choices, each a 4x4 adjacency matrix in 2x2 block form.
const DIAGONAL: [[Q2; 4]; 5] = [[O, O, O, O], [O, I, I, W], [O, J, J, O], [W, O, O, W], [W, J, J, W]];

/// Off-diagonal block choices, all with constant row and column sums.
const OFF_DIAGONAL: [[Q2; 4]; 16] = [
    [O, O, O, O],
    [J, J, J, J],
    [O, J, J, O],
    [J, O, O, J],
    [I, O, O, I],
    [W, O, O, W],
    [O, I, W, O],
    [O, W, I, O],
    [I, J, J, I],
    [W, J, J, W],
    [J, W, I, J],
    [J, I, W, J],
    [I, I, W, I],
    [I, W, I, I],
    [W, I, W, W],
    [W, W, I, W],
];

fn expand(b: &[Q2; 4]) -> [[u8; 4]; 4] {
    let mut m = [[0; 4]; 4];
    for (r, row) in m.iter_mut().enumerate() {
        for (c, x) in row.iter_mut().enumerate() {
            *x = b[2 * (r / 2) + c / 2].at(r % 2, c % 2);
        }
    }
    m
}

/// `k` blocks of four vertices followed by the `m` vertices of `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionSpec {
    /// Index into the five diagonal block types, one per block.
    pub diagonal: Vec<usize>,
    /// Index into the sixteen off-diagonal types for each pair `i < j`, in
    /// the order `(0,1), (0,2), ..., (1,2), ...`.
    pub off_diagonal: Vec<usize>,
    pub c: Graph,
    /// `joined[i][v]`: whether vertex `v` of `c` is adjacent to all of block
    /// `i` (otherwise to none of it).
    pub joined: Vec<Vec<bool>>,
}

impl ConstructionSpec {
    pub fn k(&self) -> usize {
        self.diagonal.len()
    }

    pub fn order(&self) -> usize {
        4 * self.k() + self.c.order()
    }

    fn validate(&self) -> Result<()> {
        let k = self.k();
        if k == 0 {
            return Err(Error::Construction("k must be at least 1".into()));
        }
        if let Some(&b) = self.diagonal.iter().find(|&&b| b >= DIAGONAL.len()) {
            return Err(Error::Construction(format!("diagonal choice {b} not in 0..5")));
        }
        if self.off_diagonal.len() != k * (k - 1) / 2 {
            return Err(Error::Construction(format!(
                "need {} off-diagonal choices, got {}",
                k * (k - 1) / 2,
                self.off_diagonal.len()
            )));
        }
        if let Some(&b) = self.off_diagonal.iter().find(|&&b| b >= OFF_DIAGONAL.len()) {
            return Err(Error::Construction(format!("off-diagonal choice {b} not in 0..16")));
        }
        if self.joined.len() != k || self.joined.iter().any(|r| r.len() != self.c.order()) {
            return Err(Error::Construction("joined must be k rows of length |C|".into()));
        }
        if self.order() > 64 {
            return Err(Error::Construction("order above 64".into()));
        }
        Ok(())
    }

    /// `true`: off-diagonal blocks as listed; `false`: transposed.
    fn adjacency(&self, first: bool) -> Vec<i64> {
        let k = self.k();
        let n = self.order();
        let mut a = vec![0i64; n * n];
        let mut put = |r: usize, c: usize, v: u8| {
            a[r * n + c] = i64::from(v);
            a[c * n + r] = i64::from(v);
        };
        for (i, &b) in self.diagonal.iter().enumerate() {
            let m = expand(&DIAGONAL[b]);
            for r in 0..4 {
                for c in r + 1..4 {
                    put(4 * i + r, 4 * i + c, m[r][c]);
                }
            }
        }
        let mut idx = 0;
        for i in 0..k {
            for j in i + 1..k {
                let m = expand(&OFF_DIAGONAL[self.off_diagonal[idx]]);
                idx += 1;
                for r in 0..4 {
                    for c in 0..4 {
                        let v = if first { m[r][c] } else { m[c][r] };
                        put(4 * i + r, 4 * j + c, v);
                    }
                }
            }
        }
        let base = 4 * k;
        for (u, v) in self.c.edges() {
            put(base + u, base + v, 1);
        }
        for (i, row) in self.joined.iter().enumerate() {
            for (v, &on) in row.iter().enumerate() {
                for r in 0..4 {
                    put(4 * i + r, base + v, u8::from(on));
                }
            }
        }
        a
    }
}

/// `k=..;B=..;Bij=..;C=<graph6>;N=..` with `N` one 0/1 string per block.
impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let n: Vec<String> = self
            .joined
            .iter()
            .map(|r| r.iter().map(|&b| if b { '1' } else { '0' }).collect())
            .collect();
        write!(
            f,
            "k={};B={};Bij={};C={};N={}",
            self.k(),
            list(&self.diagonal),
            list(&self.off_diagonal),
            graph6::encode(&self.c),
            n.join("|")
        )
    }
}

fn graph_of(n: usize, a: &[i64]) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if a[u * n + v] != 0 {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// `(G1, G2)`: the off-diagonal blocks of `G2` are the transposes of those of
/// `G1`. Both have the same degrees and the same `φ_ADJ`.
pub fn new_construction(spec: &ConstructionSpec) -> Result<(Graph, Graph)> {
    spec.validate()?;
    let n = spec.order();
    Ok((graph_of(n, &spec.adjacency(true)), graph_of(n, &spec.adjacency(false))))
}

/// The spec reproducing the nine-vertex pair: two blocks of type 1, the
/// off-diagonal block of type 12, one extra vertex joined to block two only.
pub fn nine_vertex_spec() -> ConstructionSpec {
    ConstructionSpec {
        diagonal: vec![1, 1],
        off_diagonal: vec![12],
        c: Graph::empty(1),
        joined: vec![vec![false], vec![true]],
    }
}

type Dense = Vec<i64>;

fn matmul(n: usize, a: &[i64], b: &[i64]) -> Dense {
    let mut c = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x != 0 {
                for j in 0..n {
                    c[i * n + j] += x * b[k * n + j];
                }
            }
        }
    }
    c
}

fn add(a: &[i64], b: &[i64]) -> Dense {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `2Q` and `2S` as 4x4 integer matrices.
fn q_and_s() -> ([[i64; 4]; 4], [[i64; 4]; 4]) {
    let w = |r: usize, c: usize| i64::from(r != c);
    let id = |r: usize, c: usize| i64::from(r == c);
    let mut q = [[0; 4]; 4];
    let mut s = [[0; 4]; 4];
    for r in 0..4 {
        for c in 0..4 {
            let (br, bc, i, j) = (r / 2, c / 2, r % 2, c % 2);
            q[r][c] = 2 * match (br, bc) {
                (0, 0) => w(i, j),
                (1, 1) => id(i, j),
                _ => w(i, j) - id(i, j),
            };
            s[r][c] = match (br, bc) {
                (0, 0) => id(i, j) - w(i, j),
                (1, 1) => w(i, j) - id(i, j),
                _ => 0,
            };
        }
    }
    (q, s)
}

/// `2P` and `2R`: `k` copies of `2Q` (resp. `2S`) then `2I` (resp. `0`) on
/// the remaining vertices.
fn p_and_r(k: usize, n: usize) -> (Dense, Dense) {
    let (q, s) = q_and_s();
    let mut p = vec![0; n * n];
    let mut r = vec![0; n * n];
    for b in 0..k {
        for i in 0..4 {
            for j in 0..4 {
                p[(4 * b + i) * n + 4 * b + j] = q[i][j];
                r[(4 * b + i) * n + 4 * b + j] = s[i][j];
            }
        }
    }
    for v in 4 * k..n {
        p[v * n + v] = 2;
    }
    (p, r)
}

/// `det(Q + xS)` for one block: `-x^2 + 2x - 5`.
pub fn intertwiner_block_det() -> IntPoly {
    intertwiner_det(1, 4)
}

/// `det(P + xR)` for `k` blocks and `n` vertices in total.
pub fn intertwiner_det(k: usize, n: usize) -> IntPoly {
    let (p, r) = p_and_r(k, n);
    let rows: Vec<Vec<IntPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| IntPoly::from_i64s(&[p[i * n + j], r[i * n + j]]))
                .collect()
        })
        .collect();
    let scaled = polymat_det(&rows, n).expect("degree at most n");
    let two_n = BigInt::from(2).pow(n as u32);
    IntPoly::new(scaled.coeffs().iter().map(|c| c / &two_n).collect())
}

/// Checks `(A1 + xD)(P + xR) = (P + xR)(A2 + xD)` coefficientwise in `x`,
/// that `G1` and `G2` have the same degrees, that `P` and `R` have line sums
/// 1 and 0 (so they commute with `J`), and `det(Q + xS) = -x^2 + 2x - 5`.
pub fn verify_intertwiner(g1: &Graph, g2: &Graph, spec: &ConstructionSpec) -> bool {
    let n = spec.order();
    if g1.order() != n || g2.order() != n || g1.degrees() != g2.degrees() {
        return false;
    }
    let a1 = g1.adjacency_matrix();
    let a2 = g2.adjacency_matrix();
    let mut d = vec![0; n * n];
    for v in 0..n {
        d[v * n + v] = g1.degree(v) as i64;
    }
    let (p, r) = p_and_r(spec.k(), n);
    let constant = matmul(n, &a1, &p) == matmul(n, &p, &a2);
    let linear = add(&matmul(n, &a1, &r), &matmul(n, &d, &p))
        == add(&matmul(n, &p, &d), &matmul(n, &r, &a2));
    let quadratic = matmul(n, &d, &r) == matmul(n, &r, &d);
    let sums = (0..n).all(|i| {
        let row_p: i64 = (0..n).map(|j| p[i * n + j]).sum();
        let col_p: i64 = (0..n).map(|j| p[j * n + i]).sum();
        let row_r: i64 = (0..n).map(|j| r[i * n + j]).sum();
        let col_r: i64 = (0..n).map(|j| r[j * n + i]).sum();
        row_p == 2 && col_p == 2 && row_r == 0 && col_r == 0
    });
    constant
        && linear
        && quadratic
        && sums
        && intertwiner_block_det() == IntPoly::from_i64s(&[-5, 2, -1])
}

/// Every spec with `k` blocks and `m` extra vertices (all labeled `C`), and
/// the distinct unordered non-isomorphic pairs they produce, as canonical
/// graph6 with one witnessing spec each.
pub fn construction_sweep(k: usize, m: usize) -> Vec<(String, String, ConstructionSpec)> {
    let pairs = k * (k - 1) / 2;
    let c_edges: Vec<(usize, usize)> = (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let total_diag = 5usize.pow(k as u32);
    let total_off = 16usize.pow(pairs as u32);
    for di in 0..total_diag {
        let diagonal: Vec<usize> = (0..k).map(|i| di / 5usize.pow(i as u32) % 5).collect();
        for oi in 0..total_off {
            let off_diagonal: Vec<usize> =
                (0..pairs).map(|i| oi / 16usize.pow(i as u32) % 16).collect();
            for cm in 0u64..1 << c_edges.len() {
                let mut c = Graph::empty(m);
                for (b, &(u, v)) in c_edges.iter().enumerate() {
                    if cm >> b & 1 == 1 {
                        c.add_edge(u, v);
                    }
                }
                for nm in 0u64..1 << (k * m) {
                    let joined = (0..k)
                        .map(|i| (0..m).map(|v| nm >> (i * m + v) & 1 == 1).collect())
                        .collect();
                    let spec = ConstructionSpec {
                        diagonal: diagonal.clone(),
                        off_diagonal: off_diagonal.clone(),
                        c: c.clone(),
                        joined,
                    };
                    let (g1, g2) = new_construction(&spec).expect("valid by construction");
                    let (a, b) = (canonical_g6(&g1), canonical_g6(&g2));
                    if a == b {
                        continue;
                    }
                    let key = if a < b { (a, b) } else { (b, a) };
                    if seen.insert(key.clone()) {
                        out.push((key.0, key.1, spec));
                    }
                }
            }
        }
    }
    out
}

/// Dimension of `{P : A1 P = P A2, D1 P = P D2}`.
fn hom_dim(g1: &Graph, g2: &Graph) -> usize {
    let n = g1.order();
    let a1 = g1.adjacency_matrix();
    let a2 = g2.adjacency_matrix();
    let d1 = g1.degrees();
    let d2 = g2.degrees();
    let nn = n * n;
    let mut rows = vec![0i64; 2 * nn * nn];
    // unknown P[k][j] sits in column k*n + j
    for i in 0..n {
        for j in 0..n {
            let e = i * n + j;
            for k in 0..n {
                rows[e * nn + k * n + j] += a1[i * n + k];
                rows[e * nn + i * n + k] -= a2[k * n + j];
            }
            let e = nn + e;
            rows[e * nn + i * n + j] = d1[i] as i64 - d2[j] as i64;
        }
    }
    nn - rank_exact(2 * nn, nn, &rows)
}

/// Whether some invertible `P` satisfies `P^{-1}(A1 + xD1)P = A2 + xD2` for
/// every `x`.
///
/// The matrix algebra generated by the symmetric `A` and `D` is closed under
/// transpose, hence semisimple, so the two modules are isomorphic exactly
/// when `dim Hom(M1, M2) = dim End(M1) = dim End(M2)` (Cauchy–Schwarz on the
/// multiplicities of the simple summands). Three exact ranks decide it.
pub fn uniform_intertwiner_exists(g1: &Graph, g2: &Graph) -> bool {
    if g1.order() != g2.order() {
        return false;
    }
    let h12 = hom_dim(g1, g2);
    h12 == hom_dim(g1, g1) && h12 == hom_dim(g2, g2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::decode;
    use crate::iso::is_isomorphic;
    use crate::linalg::IntMatrix;
    use crate::zeta::{phi_ad, phi_adj};

    #[test]
    fn block_tables_are_well_formed() {
        for b in &DIAGONAL {
            let m = expand(b);
            assert!((0..4).all(|i| m[i][i] == 0 && (0..4).all(|j| m[i][j] == m[j][i])));
        }
        for b in &OFF_DIAGONAL {
            let m = expand(b);
            let rows: BTreeSet<u8> = m.iter().map(|r| r.iter().sum()).collect();
            let cols: BTreeSet<u8> = (0..4).map(|c| (0..4).map(|r| m[r][c]).sum()).collect();
            assert_eq!(rows.len(), 1);
            assert_eq!(rows, cols);
        }
    }

    #[test]
    fn reproduces_nine_vertex_pair() {
        let spec = nine_vertex_spec();
        let (g1, g2) = new_construction(&spec).unwrap();
        let a = decode("HheadXZ").unwrap();
        let b = decode("Hhf@eS|").unwrap();
        assert!(
            (is_isomorphic(&g1, &a) && is_isomorphic(&g2, &b))
                || (is_isomorphic(&g1, &b) && is_isomorphic(&g2, &a))
        );
        assert!(verify_intertwiner(&g1, &g2, &spec));
        assert_eq!(phi_adj(&g1), phi_adj(&g2));
        assert_eq!(spec.to_string(), "k=2;B=1,1;Bij=12;C=@;N=0|1");
    }

    #[test]
    fn determinants() {
        assert_eq!(intertwiner_block_det(), IntPoly::from_i64s(&[-5, 2, -1]));
        assert_eq!(intertwiner_det(2, 9), IntPoly::from_i64s(&[-5, 2, -1]).pow(2));
    }

    #[test]
    fn symmetric_blocks_give_equal_graphs() {
        let spec = ConstructionSpec {
            diagonal: vec![3, 4],
            off_diagonal: vec![8],
            c: Graph::path(2),
            joined: vec![vec![true, false], vec![false, false]],
        };
        let (g1, g2) = new_construction(&spec).unwrap();
        assert_eq!(g1, g2);
        assert!(verify_intertwiner(&g1, &g2, &spec));
    }

    #[test]
    fn rejects_bad_specs() {
        let mut spec = nine_vertex_spec();
        spec.diagonal[0] = 5;
        assert!(new_construction(&spec).is_err());
        let mut spec = nine_vertex_spec();
        spec.off_diagonal = vec![16];
        assert!(new_construction(&spec).is_err());
        let mut spec = nine_vertex_spec();
        spec.joined.pop();
        assert!(new_construction(&spec).is_err());
    }

    #[test]
    fn every_spec_intertwines() {
        // all k = 2 specs with one extra vertex
        for di in 0..25 {
            for o in 0..16 {
                for joined in 0..4u8 {
                    let spec = ConstructionSpec {
                        diagonal: vec![di % 5, di / 5],
                        off_diagonal: vec![o],
                        c: Graph::empty(1),
                        joined: vec![vec![joined & 1 == 1], vec![joined & 2 == 2]],
                    };
                    let (g1, g2) = new_construction(&spec).unwrap();
                    assert!(verify_intertwiner(&g1, &g2, &spec), "{spec}");
                }
            }
        }
    }

    #[test]
    fn fixed_blocks_always_give_distinct_pairs() {
        for m in 1..=3 {
            let edges: Vec<(usize, usize)> =
                (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))).collect();
            for cm in 0u32..1 << edges.len() {
                let mut c = Graph::empty(m);
                for (b, &(u, v)) in edges.iter().enumerate() {
                    if cm >> b & 1 == 1 {
                        c.add_edge(u, v);
                    }
                }
                let spec = ConstructionSpec {
                    c,
                    joined: vec![vec![false; m], vec![true; m]],
                    ..nine_vertex_spec()
                };
                let (g1, g2) = new_construction(&spec).unwrap();
                assert!(!is_isomorphic(&g1, &g2), "{spec}");
                assert_eq!(phi_ad(&g1), phi_ad(&g2));
            }
        }
    }

    #[test]
    fn intertwiner_verdicts() {
        let a = decode("HheadXZ").unwrap();
        let b = decode("Hhf@eS|").unwrap();
        let n = 9;
        for x in -3..=3i64 {
            let m = |g: &Graph| {
                let mut e = g.adjacency_matrix();
                for v in 0..n {
                    e[v * n + v] += x * g.degree(v) as i64;
                }
                IntMatrix::from_i64(n, &e).charpoly()
            };
            assert_eq!(m(&a), m(&b));
        }
        assert!(!uniform_intertwiner_exists(&a, &b));
        assert!(uniform_intertwiner_exists(&a, &a));
        let perm = [3, 1, 4, 0, 8, 5, 7, 2, 6];
        assert!(uniform_intertwiner_exists(&a, &a.relabel(&perm)));
        // a GM* pair has a constant conjugator
        let g = decode("J?BD?oX[F[?").unwrap();
        let h = decode("J?`CP``LE{?").unwrap();
        assert!(uniform_intertwiner_exists(&g, &h));
    }
}

//! Ihara and Bartholdi zeta functions and the generalized characteristic
//! polynomials, all in exact integer arithmetic.
//!
//! Every Ihara computation runs on the pruned graph `G†`: the reciprocal
//! `R(t) = Z_G(t)^{-1}` is unchanged by deleting vertices of degree 0 or 1.

mod bartholdi;
mod geodesics;
mod joins;
mod structure;

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::graph::Graph;
use crate::linalg::{det_i128, interpolate_values, IntPoly};

pub use bartholdi::{
    bartholdi_census_from_series, bartholdi_series, phi_ad, phi_adj, BartholdiCensus,
    BivariateSeries, MAX_SERIES_DEGREE,
};
pub use geodesics::{cycle_counts_from_zeta, geodesic_census_from_traces, GeodesicCensus};
pub use joins::{recover_degree_sequence_from_joins, JoinObservation};
pub use structure::{
    regular_zeta_closed_form, spanning_tree_count, structure_from_zeta, ZetaStructure,
};

/// Non-backtracking matrix on oriented edges. Arc `2i` is edge `i` of
/// [`Graph::edges`] oriented from smaller to larger endpoint, arc `2i + 1`
/// the reverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HashimotoMatrix {
    arcs: Vec<(usize, usize)>,
    /// Successor lists: `succ[i]` holds every `j` with `T[i][j] = 1`.
    succ: Vec<Vec<usize>>,
}

impl HashimotoMatrix {
    pub fn dim(&self) -> usize {
        self.arcs.len()
    }

    /// `(tail, head)` of each arc.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn successors(&self, i: usize) -> &[usize] {
        &self.succ[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.succ[i].binary_search(&j).is_ok()
    }

    /// Index of the reversed arc.
    pub fn inverse(i: usize) -> usize {
        i ^ 1
    }

    pub fn to_dense(&self) -> Vec<i64> {
        let d = self.dim();
        let mut m = vec![0i64; d * d];
        for (i, s) in self.succ.iter().enumerate() {
            for &j in s {
                m[i * d + j] = 1;
            }
        }
        m
    }
}

pub fn hashimoto_matrix(g: &Graph) -> HashimotoMatrix {
    let mut arcs = Vec::with_capacity(2 * g.size());
    for (u, v) in g.edges() {
        arcs.push((u, v));
        arcs.push((v, u));
    }
    let mut out_arcs: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    for (i, &(t, _)) in arcs.iter().enumerate() {
        out_arcs[t].push(i);
    }
    let succ = (0..arcs.len())
        .map(|i| {
            let head = arcs[i].1;
            let mut s: Vec<usize> = out_arcs[head]
                .iter()
                .copied()
                .filter(|&j| j != HashimotoMatrix::inverse(i))
                .collect();
            s.sort_unstable();
            s
        })
        .collect();
    HashimotoMatrix { arcs, succ }
}

/// The Ihara reciprocal of a graph together with the data of its pruned core.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZetaProfile {
    pub n_pruned: usize,
    pub m_pruned: usize,
    /// `R(t) = Z_G(t)^{-1}`, degree `2·m_pruned`.
    pub reciprocal: IntPoly,
    pub at_minus_one: BigInt,
    pub at_minus_two: BigInt,
}

/// Cheap sieve key `(n†, 2m†, R(-1), R(-2))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZetaFingerprint {
    pub n_pruned: usize,
    pub twice_m_pruned: usize,
    pub at_minus_one: BigInt,
    pub at_minus_two: BigInt,
}

impl fmt::Display for ZetaFingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{}",
            self.n_pruned, self.twice_m_pruned, self.at_minus_one, self.at_minus_two
        )
    }
}

/// `(1 - t^2)^k`.
pub(crate) fn one_minus_t2_pow(k: usize) -> IntPoly {
    IntPoly::from_i64s(&[1, 0, -1]).pow(k as u32)
}

/// Entries of `I - tA + t^2(D - I)` at an integer `t`.
fn bass_pencil_at(g: &Graph, t: i64) -> Vec<i128> {
    let n = g.order();
    let t = t as i128;
    let mut m = vec![0i128; n * n];
    for v in 0..n {
        m[v * n + v] = 1 + t * t * (g.degree(v) as i128 - 1);
        for u in g.neighbors(v) {
            m[v * n + u] = -t;
        }
    }
    m
}

/// `det(I - tA + t^2(D - I))` as a polynomial of degree at most `2n`.
pub(crate) fn bass_determinant(g: &Graph) -> IntPoly {
    let n = g.order();
    interpolate_values(2 * n, |t| det_i128(n, bass_pencil_at(g, t)))
        .expect("Bass determinant has degree at most 2n")
}

/// Reciprocal of an md2-or-null graph (no pruning performed).
fn reciprocal_of_core(core: &Graph) -> IntPoly {
    let (n, m) = (core.order(), core.size());
    if n == 0 {
        return IntPoly::one();
    }
    debug_assert!(m >= n, "pruned graphs satisfy m >= n");
    &one_minus_t2_pow(m - n) * &bass_determinant(core)
}

pub fn ihara_reciprocal_bass(g: &Graph) -> ZetaProfile {
    let core = g.prune().graph;
    let r = reciprocal_of_core(&core);
    ZetaProfile {
        n_pruned: core.order(),
        m_pruned: core.size(),
        at_minus_one: r.eval_i64(-1),
        at_minus_two: r.eval_i64(-2),
        reciprocal: r,
    }
}

/// `det(I - tT)` on `G†`, interpolated from integer evaluations of the
/// `2m†`-dimensional pencil.
pub fn ihara_reciprocal_hashimoto(g: &Graph) -> IntPoly {
    let core = g.prune().graph;
    let h = hashimoto_matrix(&core);
    let d = h.dim();
    interpolate_values(d, |t| {
        let t = t as i128;
        let mut m = vec![0i128; d * d];
        for i in 0..d {
            m[i * d + i] = 1;
            for &j in h.successors(i) {
                m[i * d + j] -= t;
            }
        }
        det_i128(d, m)
    })
    .expect("det(I - tT) has degree at most 2m")
}

/// `(n†, 2m†, R(-1), R(-2))` from two integer determinants, without building
/// `R`: `R(-1) = det(D + A)` when `m† = n†` (else 0) and
/// `R(-2) = (-3)^{m†-n†} det(4D + 2A - 3I)`.
pub fn zeta_fingerprint(g: &Graph) -> ZetaFingerprint {
    let core = g.prune().graph;
    core_fingerprint(&core)
}

pub(crate) fn core_fingerprint(core: &Graph) -> ZetaFingerprint {
    let (n, m) = (core.order(), core.size());
    let at_minus_one = if m == n {
        det_i128(n, bass_pencil_at(core, -1))
    } else {
        BigInt::zero()
    };
    let at_minus_two = BigInt::from(-3).pow((m - n) as u32) * det_i128(n, bass_pencil_at(core, -2));
    ZetaFingerprint {
        n_pruned: n,
        twice_m_pruned: 2 * m,
        at_minus_one,
        at_minus_two,
    }
}

impl ZetaProfile {
    pub fn fingerprint(&self) -> ZetaFingerprint {
        ZetaFingerprint {
            n_pruned: self.n_pruned,
            twice_m_pruned: 2 * self.m_pruned,
            at_minus_one: self.at_minus_one.clone(),
            at_minus_two: self.at_minus_two.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::decode;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn hashimoto_small() {
        let h = hashimoto_matrix(&Graph::complete(2));
        assert_eq!(h.dim(), 2);
        assert!(h.to_dense().iter().all(|&x| x == 0));
        let h = hashimoto_matrix(&Graph::cycle(3));
        let d = h.dim();
        let m = h.to_dense();
        // trace of T^3 by brute force
        let mut tr = 0;
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    tr += m[a * d + b] * m[b * d + c] * m[c * d + a];
                }
            }
        }
        assert_eq!(tr, 6);
    }

    #[test]
    fn hashimoto_row_sums() {
        let g = decode("ECZo").unwrap();
        let h = hashimoto_matrix(&g);
        for i in 0..h.dim() {
            let head = h.arcs()[i].1;
            assert_eq!(h.successors(i).len(), g.degree(head) - 1);
            assert_eq!(h.arcs()[HashimotoMatrix::inverse(i)], (head, h.arcs()[i].0));
        }
    }

    #[test]
    fn bass_examples() {
        assert_eq!(ihara_reciprocal_bass(&Graph::star(4)).reciprocal, IntPoly::one());
        assert_eq!(ihara_reciprocal_bass(&Graph::null()).reciprocal, IntPoly::one());
        let c3 = p(&[1, 0, 0, -1]).pow(2);
        assert_eq!(ihara_reciprocal_bass(&Graph::cycle(3)).reciprocal, c3);
        let k4 = [
            p(&[1, 0, -1]).pow(2),
            p(&[1, -3, 2]),
            p(&[1, 1, 2]).pow(3),
        ]
        .iter()
        .fold(IntPoly::one(), |a, b| &a * b);
        let prof = ihara_reciprocal_bass(&Graph::complete(4));
        assert_eq!(prof.reciprocal, k4);
        assert_eq!((prof.n_pruned, prof.m_pruned), (4, 6));
    }

    #[test]
    fn hashimoto_matches_bass_examples() {
        assert_eq!(ihara_reciprocal_hashimoto(&Graph::complete(2)), IntPoly::one());
        assert_eq!(
            ihara_reciprocal_hashimoto(&Graph::cycle(3)),
            p(&[1, 0, 0, -1]).pow(2)
        );
        let a = ihara_reciprocal_hashimoto(&decode("HheadXZ").unwrap());
        let b = ihara_reciprocal_hashimoto(&decode("Hhf@eS|").unwrap());
        assert_eq!(a, b);
        assert_eq!(a, ihara_reciprocal_bass(&decode("HheadXZ").unwrap()).reciprocal);
    }

    #[test]
    fn fingerprint_values() {
        let f = zeta_fingerprint(&Graph::complete(3));
        assert_eq!(f.at_minus_one, BigInt::from(4));
        assert_eq!(f.at_minus_two, BigInt::from(81));
        let c6 = zeta_fingerprint(&Graph::cycle(6));
        assert!(c6.at_minus_one.is_zero());
        let k33 = Graph::empty(3).join(&Graph::empty(3));
        assert!(zeta_fingerprint(&k33).at_minus_one.is_zero());
        for s in ["HheadXZ", "K??CA?_FEcdk", "ECZo", "F?zPw"] {
            let g = decode(s).unwrap();
            assert_eq!(zeta_fingerprint(&g), ihara_reciprocal_bass(&g).fingerprint());
        }
    }
}

//! Cospectral families from coalescence and join, and the sampled rate at
//! which GM switching on a 4-vertex block yields zeta-distinguished pairs.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::Graph;
use crate::linalg::{IntMatrix, IntPoly};
use crate::zeta::{ihara_reciprocal_bass, zeta_fingerprint};

fn charpoly_a(g: &Graph) -> IntPoly {
    IntMatrix::from_i64(g.order(), &g.adjacency_matrix()).charpoly()
}

fn charpoly_l(g: &Graph) -> IntPoly {
    let n = g.order();
    let mut m: Vec<i64> = g.adjacency_matrix().iter().map(|x| -x).collect();
    for v in 0..n {
        m[v * n + v] = g.degree(v) as i64;
    }
    IntMatrix::from_i64(n, &m).charpoly()
}

fn product(it: impl Iterator<Item = usize>, shift: i64) -> BigInt {
    it.fold(BigInt::from(1), |p, d| p * (d as i64 - shift))
}

#[derive(Debug, Clone)]
pub struct CoalescenceFamily {
    pub pair: (Graph, Graph),
    pub cospectral_certified: bool,
    /// Both inputs md2 and `Π (deg - 1)` over `U_1`, `U_2` differ.
    pub zeta_distinguished_md2: bool,
    /// Both inputs md1 and `Π deg` over `U_1`, `U_2` differ.
    pub zeta_star_distinguished_md1: bool,
}

/// Coalesces `(g1, x1)` and `(g2, x2)` with `(gamma, y)`. Requires `g1`, `g2`
/// cospectral and `g1 - x1`, `g2 - x2` cospectral.
pub fn coalescence_family(
    g1: &Graph,
    x1: usize,
    g2: &Graph,
    x2: usize,
    gamma: &Graph,
    y: usize,
) -> Result<CoalescenceFamily> {
    if charpoly_a(g1) != charpoly_a(g2) {
        return Err(Error::Precondition("inputs are not cospectral".into()));
    }
    if x1 >= g1.order() || x2 >= g2.order() {
        return Err(Error::VertexOutOfRange {
            vertex: x1.max(x2),
            order: g1.order(),
        });
    }
    if charpoly_a(&g1.remove_vertex(x1)) != charpoly_a(&g2.remove_vertex(x2)) {
        return Err(Error::Precondition("vertex-deleted graphs are not cospectral".into()));
    }
    let c1 = g1.coalesce(x1, gamma, y)?;
    let c2 = g2.coalesce(x2, gamma, y)?;
    fn rest(g: &Graph, x: usize) -> impl Iterator<Item = usize> + '_ {
        (0..g.order()).filter(move |&v| v != x).map(|v| g.degree(v))
    }
    let md = |g: &Graph, k: usize| g.min_degree().is_some_and(|d| d >= k);
    let md2 = md(g1, 2) && md(g2, 2);
    let md1 = md(g1, 1) && md(g2, 1);
    Ok(CoalescenceFamily {
        cospectral_certified: charpoly_a(&c1) == charpoly_a(&c2),
        zeta_distinguished_md2: md2 && product(rest(g1, x1), 1) != product(rest(g2, x2), 1),
        zeta_star_distinguished_md1: md1 && product(rest(g1, x1), 0) != product(rest(g2, x2), 0),
        pair: (c1, c2),
    })
}

#[derive(Debug, Clone)]
pub struct JoinFamily {
    pub pair: (Graph, Graph),
    pub laplacian_cospectral: bool,
    /// `f(x) = Π (d_i + x) - Π (d'_i + x)`.
    pub f: IntPoly,
    /// Orders `r >= 1` of `Γ` with `f(r - 1) = 0`; empty when `f` is zero
    /// (then no order is excluded, but none is distinguished either).
    pub exceptional_orders: BTreeSet<usize>,
    pub zeta_distinguished: bool,
}

/// Joins `g1` and `g2` (Laplacian cospectral) with `gamma`.
pub fn join_family(g1: &Graph, g2: &Graph, gamma: &Graph) -> Result<JoinFamily> {
    if g1.order() != g2.order() || charpoly_l(g1) != charpoly_l(g2) {
        return Err(Error::Precondition("inputs are not Laplacian cospectral".into()));
    }
    let lin = |d: usize| IntPoly::from_i64s(&[d as i64, 1]);
    let prod = |g: &Graph| g.degrees().into_iter().fold(IntPoly::one(), |p, d| &p * &lin(d));
    let f = &prod(g1) - &prod(g2);
    let mut exceptional_orders = BTreeSet::new();
    if !f.is_zero() {
        // nonnegative integer roots are bounded by 1 + max |a_i / a_lead|
        let lead = f.leading().abs();
        let bound = f
            .coeffs()
            .iter()
            .map(|c| (c.abs() / &lead).to_u64().unwrap_or(u64::MAX))
            .max()
            .unwrap_or(0)
            .saturating_add(1);
        for x in 0..=bound {
            if f.eval(&BigInt::from(x)).is_zero() {
                exceptional_orders.insert(x as usize + 1);
            }
        }
    }
    let j1 = g1.join(gamma);
    let j2 = g2.join(gamma);
    let r = gamma.order();
    let isolated = g1.min_degree() == Some(0) || g2.min_degree() == Some(0);
    let applies = r >= 1 && !(isolated && r < 2) && !f.is_zero();
    Ok(JoinFamily {
        laplacian_cospectral: charpoly_l(&j1) == charpoly_l(&j2),
        zeta_distinguished: applies && !exceptional_orders.contains(&r),
        exceptional_orders,
        f,
        pair: (j1, j2),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateReport {
    pub trials: usize,
    /// Samples with at least one half column (so the switch moves edges).
    pub nontrivial: usize,
    pub distinguished: usize,
    pub rate: f64,
}

/// The four regular graphs on four labeled vertices used as switching block:
/// empty, perfect matching, 4-cycle, complete.
pub fn regular_block(kind: usize) -> Graph {
    let edges: &[(usize, usize)] = match kind {
        0 => &[],
        1 => &[(0, 1), (2, 3)],
        2 => &[(0, 1), (1, 2), (2, 3), (0, 3)],
        _ => &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
    };
    Graph::from_edges(4, edges)
}

fn zeta_differs(a: &Graph, b: &Graph) -> bool {
    zeta_fingerprint(a) != zeta_fingerprint(b)
        || ihara_reciprocal_bass(a).reciprocal != ihara_reciprocal_bass(b).reciprocal
}

/// Samples `trials` labeled GM switches on `(B, C, N)`, each column of `N`
/// uniform among the eight admissible ones, and returns the fraction whose
/// pair is told apart by `Z` (if `c` is md2) or by the cone zeta `Z*`
/// (if `c` is md1 only).
pub fn gm_distinguishing_rate(
    block: &Graph,
    c: &Graph,
    trials: usize,
    seed: u64,
    exec: Exec,
) -> Result<RateReport> {
    if block.order() != 4 || !block.is_regular() {
        return Err(Error::Precondition("block must be regular on 4 vertices".into()));
    }
    let use_cone = match c.min_degree() {
        Some(d) if d >= 2 => false,
        Some(1) => true,
        _ => return Err(Error::Precondition("C must be md1 or md2".into())),
    };
    if trials == 0 {
        return Err(Error::Precondition("trials must be positive".into()));
    }
    const HALF: [[usize; 2]; 6] = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];
    let nc = c.order();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples: Vec<Vec<u8>> = (0..trials)
        .map(|_| (0..nc).map(|_| rng.gen_range(0..8u8)).collect())
        .collect();
    let base = block.disjoint_union(c);
    let outcome = exec.map(&samples, |cols| {
        let mut g = base.clone();
        let mut h = base.clone();
        let mut half = false;
        for (i, &t) in cols.iter().enumerate() {
            let v = 4 + i;
            match t {
                0 => {}
                1 => (0..4).for_each(|b| {
                    g.add_edge(b, v);
                    h.add_edge(b, v);
                }),
                t => {
                    half = true;
                    let pick = HALF[t as usize - 2];
                    for b in 0..4 {
                        if pick.contains(&b) {
                            g.add_edge(b, v);
                        } else {
                            h.add_edge(b, v);
                        }
                    }
                }
            }
        }
        let distinguished = half
            && if use_cone {
                zeta_differs(&g.cone(1), &h.cone(1))
            } else {
                zeta_differs(&g, &h)
            };
        (half, distinguished)
    });
    let nontrivial = outcome.iter().filter(|o| o.0).count();
    let distinguished = outcome.iter().filter(|o| o.1).count();
    Ok(RateReport {
        trials,
        nontrivial,
        distinguished,
        rate: distinguished as f64 / trials as f64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::decode;
    use crate::iso::is_isomorphic;

    #[test]
    fn coalescence_example() {
        let g1 = decode("F?zPw").unwrap();
        let g2 = decode("F@Rfo").unwrap();
        assert!(!is_isomorphic(&g1, &g2));
        let mut d1: Vec<usize> = (1..7).map(|v| g1.degree(v)).collect();
        let mut d2: Vec<usize> = (1..7).map(|v| g2.degree(v)).collect();
        d1.sort_unstable_by(|a, b| b.cmp(a));
        d2.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(d1, vec![4, 4, 4, 2, 2, 2]);
        assert_eq!(d2, vec![5, 3, 3, 3, 2, 2]);
        for (gamma, y) in [(Graph::cycle(5), 0), (Graph::path(3), 1), (Graph::complete(4), 2)] {
            let fam = coalescence_family(&g1, 0, &g2, 0, &gamma, y).unwrap();
            assert!(fam.cospectral_certified);
            assert!(fam.zeta_distinguished_md2);
            assert!(fam.zeta_star_distinguished_md1);
            let (a, b) = &fam.pair;
            assert_ne!(ihara_reciprocal_bass(a).reciprocal, ihara_reciprocal_bass(b).reciprocal);
            assert_ne!(
                ihara_reciprocal_bass(&a.cone(1)).reciprocal,
                ihara_reciprocal_bass(&b.cone(1)).reciprocal
            );
        }
        let fam = coalescence_family(&g1, 0, &g2, 0, &Graph::empty(1), 0).unwrap();
        assert_eq!(fam.pair, (g1.clone(), g2.clone()));
        assert!(coalescence_family(&g1, 0, &Graph::cycle(7), 0, &Graph::empty(1), 0).is_err());
    }

    #[test]
    fn join_example() {
        let g1 = decode("ECZo").unwrap();
        let g2 = decode("EEr_").unwrap();
        let fam = join_family(&g1, &g2, &Graph::complete(3)).unwrap();
        let expected = &IntPoly::from_i64s(&[2, 1]).pow(2) * &IntPoly::from_i64s(&[5, 2]);
        assert_eq!(fam.f, expected);
        assert!(fam.exceptional_orders.is_empty());
        assert!(fam.laplacian_cospectral);
        assert!(fam.zeta_distinguished);
        let (a, b) = &fam.pair;
        assert_ne!(ihara_reciprocal_bass(a).reciprocal, ihara_reciprocal_bass(b).reciprocal);
        let co = join_family(&g1.complement(), &g2.complement(), &Graph::empty(2)).unwrap();
        assert!(co.zeta_distinguished);
        let same = join_family(&g1, &g1.relabel(&[5, 4, 3, 2, 1, 0]), &Graph::empty(2)).unwrap();
        assert!(same.f.is_zero() && !same.zeta_distinguished);
        assert!(join_family(&g1, &Graph::cycle(6), &Graph::empty(1)).is_err());
    }

    #[test]
    fn exceptional_orders_are_roots() {
        // Laplacian cospectral pairs with equal order on 5 vertices
        let all = crate::iso::generate_all(5, crate::iso::Filter::All, None);
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                if let Ok(fam) = join_family(a, b, &Graph::empty(1)) {
                    assert!(fam.exceptional_orders.len() < 5);
                    for &r in &fam.exceptional_orders {
                        assert!(fam.f.eval_i64(r as i64 - 1).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn rate_sampling() {
        let c = Graph::cycle(6);
        let r = gm_distinguishing_rate(&regular_block(2), &c, 200, 1, Exec::Parallel).unwrap();
        let s = gm_distinguishing_rate(&regular_block(2), &c, 200, 1, Exec::Sequential).unwrap();
        assert_eq!(r, s);
        assert!(r.distinguished <= r.nontrivial && r.nontrivial <= r.trials);
        assert!(r.rate > 0.0);
        assert!(gm_distinguishing_rate(&Graph::path(4), &c, 10, 1, Exec::Parallel).is_err());
        assert!(gm_distinguishing_rate(&regular_block(0), &Graph::empty(3), 10, 1, Exec::Parallel).is_err());
        let star = Graph::star(3);
        let z = gm_distinguishing_rate(&regular_block(1), &star, 100, 2, Exec::Parallel).unwrap();
        assert!(z.distinguished <= z.nontrivial);
    }
}

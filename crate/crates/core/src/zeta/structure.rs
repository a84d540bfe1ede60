use num_bigint::BigInt;
use num_traits::One;

use super::{one_minus_t2_pow, ZetaProfile};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{charpoly_i64, det_i128, IntPoly};

/// Facts about a connected md2 graph read off its Ihara reciprocal alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaStructure {
    pub n: usize,
    pub m: usize,
    pub bipartite: bool,
    pub circuit: bool,
    /// Multiplicity of the zero of `R` at `t = 1`.
    pub mult_at_one: usize,
    /// Multiplicity of the zero of `R` at `t = -1`.
    pub mult_at_minus_one: usize,
    /// `lim_{t -> 1} R(t) / (1 - t)^{mult_at_one}`.
    pub residue: BigInt,
}

/// Recovers `(n, m)`, bipartiteness and circuit status from `R`.
///
/// For a connected md2 non-circuit, `R` vanishes to order `m - n + 1` at
/// `t = 1` and to order `m - n` (`m - n + 1` if bipartite) at `t = -1`. A
/// circuit of length `k` has `R = (1 - t^k)^2`. The recovered order is checked
/// against the profile, which rejects disconnected cores.
pub fn structure_from_zeta(profile: &ZetaProfile) -> Result<ZetaStructure> {
    let r = &profile.reciprocal;
    let Some(deg) = r.degree() else {
        return Err(Error::NotConnectedMd2);
    };
    if deg == 0 || deg % 2 == 1 {
        return Err(Error::NotConnectedMd2);
    }
    let m = deg / 2;
    let (a, q1) = r.root_multiplicity(1);
    let (b, _) = r.root_multiplicity(-1);
    let circ = IntPoly::monomial(BigInt::from(-1), m);
    let circ = (&IntPoly::one() + &circ).pow(2);
    let circuit = *r == circ;
    let (n, bipartite) = if circuit {
        (m, m % 2 == 0)
    } else {
        if a > m + 1 {
            return Err(Error::NotConnectedMd2);
        }
        let n = m + 1 - a;
        (n, b > m - n)
    };
    if n != profile.n_pruned || m != profile.m_pruned {
        return Err(Error::NotConnectedMd2);
    }
    // R = (t - 1)^a q1(t) = (1 - t)^a (-1)^a q1(t)
    let mut residue = q1.eval_i64(1);
    if a % 2 == 1 {
        residue = -residue;
    }
    Ok(ZetaStructure {
        n,
        m,
        bipartite,
        circuit,
        mult_at_one: a,
        mult_at_minus_one: b,
        residue,
    })
}

/// Number of spanning trees by the matrix-tree theorem.
pub fn spanning_tree_count(g: &Graph) -> Result<BigInt> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    if n <= 1 {
        return Ok(BigInt::one());
    }
    let k = n - 1;
    let mut m = vec![0i128; k * k];
    for v in 0..k {
        m[v * k + v] = g.degree(v) as i128;
        for u in g.neighbors(v).filter(|&u| u < k) {
            m[v * k + u] = -1;
        }
    }
    Ok(det_i128(k, m))
}

/// `(1 - t^2)^{m-n} Π_i (1 - λ_i t + q t^2)` for a `(q+1)`-regular graph,
/// from `Π_i (1 - λ_i t + q t^2) = Σ_k c_k (1 + q t^2)^k t^{n-k}` where `c_k`
/// are the coefficients of the characteristic polynomial of `A`.
pub fn regular_zeta_closed_form(g: &Graph) -> Result<IntPoly> {
    if !g.is_regular() {
        return Err(Error::NotRegular);
    }
    let n = g.order();
    let d = g.min_degree().unwrap_or(0);
    if d < 2 {
        return Err(Error::Precondition("closed form needs degree >= 2".into()));
    }
    let q = (d - 1) as i64;
    let cp = charpoly_i64(n, &g.adjacency_matrix());
    let base = IntPoly::from_i64s(&[1, 0, q]);
    let mut prod = IntPoly::zero();
    for k in 0..=n {
        let term = &base.pow(k as u32) * &IntPoly::monomial(cp.coeff(k), n - k);
        prod = &prod + &term;
    }
    Ok(&one_minus_t2_pow(g.size() - n) * &prod)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::ihara_reciprocal_bass;

    #[test]
    fn poles_and_residue() {
        let c6 = structure_from_zeta(&ihara_reciprocal_bass(&Graph::cycle(6))).unwrap();
        assert!(c6.circuit && c6.bipartite);
        assert_eq!((c6.mult_at_one, c6.mult_at_minus_one), (2, 2));
        let k4 = structure_from_zeta(&ihara_reciprocal_bass(&Graph::complete(4))).unwrap();
        assert_eq!((k4.n, k4.m), (4, 6));
        assert_eq!((k4.mult_at_one, k4.mult_at_minus_one), (3, 2));
        assert!(!k4.bipartite && !k4.circuit);
        // 2^{m-n+1} (n-m) κ = 8 · (-2) · 16
        assert_eq!(k4.residue, BigInt::from(-256));
        let k33 = Graph::empty(3).join(&Graph::empty(3));
        let s = structure_from_zeta(&ihara_reciprocal_bass(&k33)).unwrap();
        assert!(s.bipartite);
        let two = Graph::cycle(3).disjoint_union(&Graph::cycle(4));
        assert!(structure_from_zeta(&ihara_reciprocal_bass(&two)).is_err());
        assert!(structure_from_zeta(&ihara_reciprocal_bass(&Graph::path(4))).is_err());
    }

    #[test]
    fn spanning_trees() {
        assert_eq!(spanning_tree_count(&Graph::complete(4)).unwrap(), BigInt::from(16));
        assert_eq!(spanning_tree_count(&Graph::cycle(5)).unwrap(), BigInt::from(5));
        assert_eq!(spanning_tree_count(&Graph::complete(2)).unwrap(), BigInt::from(1));
        assert!(spanning_tree_count(&Graph::empty(2)).is_err());
    }

    #[test]
    fn closed_form() {
        for g in [Graph::complete(3), Graph::complete(4), Graph::cycle(4), Graph::complete(6)] {
            assert_eq!(
                regular_zeta_closed_form(&g).unwrap(),
                ihara_reciprocal_bass(&g).reciprocal
            );
        }
        let c4 = IntPoly::from_i64s(&[1, 0, 0, 0, -1]).pow(2);
        assert_eq!(regular_zeta_closed_form(&Graph::cycle(4)).unwrap(), c4);
        assert_eq!(regular_zeta_closed_form(&Graph::path(3)), Err(Error::NotRegular));
    }
}

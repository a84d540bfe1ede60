use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ZetaProfile;
use crate::error::{Error, Result};
use crate::graph::DegreeSequence;

/// The Ihara profile of `G ∨ H` for a known graph `H`, described by its
/// degree list.
#[derive(Debug, Clone)]
pub struct JoinObservation {
    pub h_degrees: Vec<usize>,
    pub profile: ZetaProfile,
}

/// Recovers the degree sequence of an unknown graph `G` from zeta profiles of
/// joins `G ∨ H_j`.
///
/// A join with `|H| >= 2` has no vertex of degree below 2, so its profile
/// exposes `n + h` and `m + m_H + n·h` directly, and the leading coefficient of
/// `R` is `±Π_i (d_i + h - 1) · Π_j (e_j + n - 1)`. The unknown multiplicities
/// `x_d` of each degree `d` are found by exhaustive search under
/// `Σ x_d = n`, `Σ d·x_d = 2m` and every observed product.
pub fn recover_degree_sequence_from_joins(obs: &[JoinObservation]) -> Result<DegreeSequence> {
    let mut orders: Vec<usize> = obs.iter().map(|o| o.h_degrees.len()).collect();
    orders.sort_unstable();
    if orders.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Precondition("join orders must be distinct".into()));
    }
    let Some(anchor) = obs.iter().find(|o| o.h_degrees.len() >= 2) else {
        return Err(Error::Precondition("need a join with |H| >= 2".into()));
    };
    let h = anchor.h_degrees.len();
    let m_h = |o: &JoinObservation| o.h_degrees.iter().sum::<usize>() / 2;
    let n = anchor
        .profile
        .n_pruned
        .checked_sub(h)
        .ok_or_else(|| Error::Inconsistent("join smaller than H".into()))?;
    let m = anchor
        .profile
        .m_pruned
        .checked_sub(m_h(anchor) + n * h)
        .ok_or_else(|| Error::Inconsistent("join has too few edges".into()))?;
    if 2 * m > n * n.saturating_sub(1) {
        return Err(Error::Inconsistent("edge count exceeds complete graph".into()));
    }

    // Per observation: (h, Π_i (d_i + h - 1)).
    let mut targets = Vec::new();
    for o in obs {
        let h = o.h_degrees.len();
        if o.profile.n_pruned != n + h || o.profile.m_pruned != m + m_h(o) + n * h {
            return Err(Error::Inconsistent(format!("join with |H| = {h} was pruned")));
        }
        // |lead| = Π (deg - 1); the sign is (-1)^{m - n}.
        let lead = o.profile.reciprocal.leading().abs();
        let h_part: BigInt = o
            .h_degrees
            .iter()
            .map(|&e| BigInt::from(e + n) - 1)
            .product();
        if h_part.is_zero() {
            return Err(Error::Inconsistent("degenerate H factor".into()));
        }
        let (q, r) = lead.div_rem(&h_part);
        if !r.is_zero() {
            return Err(Error::Inconsistent(format!("leading coefficient for |H| = {h}")));
        }
        targets.push((h, q));
    }

    let mut found = Vec::new();
    let mut seq = Vec::with_capacity(n);
    search(n.saturating_sub(1), n, 2 * m, &mut seq, &targets, &mut found);
    match found.len() {
        0 => Err(Error::Inconsistent("no degree sequence fits".into())),
        1 => Ok(DegreeSequence(found.pop().unwrap())),
        k => Err(Error::Ambiguous(k)),
    }
}

/// Non-increasing sequences of `left` degrees, each at most `max`, summing to
/// `sum`.
fn search(
    max: usize,
    left: usize,
    sum: usize,
    seq: &mut Vec<usize>,
    targets: &[(usize, BigInt)],
    found: &mut Vec<Vec<usize>>,
) {
    if left == 0 {
        if sum == 0 && fits(seq, targets) {
            found.push(seq.clone());
        }
        return;
    }
    if sum > max * left {
        return;
    }
    for d in (0..=max.min(sum)).rev() {
        seq.push(d);
        search(d, left - 1, sum - d, seq, targets, found);
        seq.pop();
    }
}

fn fits(seq: &[usize], targets: &[(usize, BigInt)]) -> bool {
    targets.iter().all(|(h, want)| {
        let got: BigInt = seq
            .iter()
            .fold(BigInt::one(), |acc, &d| acc * BigInt::from(d + h - 1));
        &got == want
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::graph6::decode;
    use crate::zeta::ihara_reciprocal_bass;

    fn observe(g: &Graph, hs: &[Graph]) -> Vec<JoinObservation> {
        hs.iter()
            .map(|h| JoinObservation {
                h_degrees: h.degrees(),
                profile: ihara_reciprocal_bass(&g.join(h)),
            })
            .collect()
    }

    #[test]
    fn ecz_o_from_complete_joins() {
        let g = decode("ECZo").unwrap();
        let hs = [Graph::complete(1), Graph::complete(2), Graph::complete(3)];
        let d = recover_degree_sequence_from_joins(&observe(&g, &hs)).unwrap();
        assert_eq!(d.0, vec![4, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn regular_and_empty() {
        let g = Graph::cycle(7);
        let d = recover_degree_sequence_from_joins(&observe(&g, &[Graph::complete(2)])).unwrap();
        assert_eq!(d.0, vec![2; 7]);
        let e = Graph::empty(5);
        let d = recover_degree_sequence_from_joins(&observe(&e, &[Graph::empty(3)])).unwrap();
        assert_eq!(d.0, vec![0; 5]);
    }

    #[test]
    fn rejects_bad_input() {
        let g = Graph::cycle(5);
        let o = observe(&g, &[Graph::complete(1)]);
        assert!(recover_degree_sequence_from_joins(&o).is_err());
        let o = observe(&g, &[Graph::complete(2), Graph::empty(2)]);
        assert!(recover_degree_sequence_from_joins(&o).is_err());
    }
}

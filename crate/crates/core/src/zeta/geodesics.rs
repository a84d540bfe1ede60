use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::hashimoto_matrix;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `a(ℓ)`: number of classes of primitive closed geodesics of length `ℓ`,
/// for `ℓ` in `1..=max_len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeodesicCensus {
    pub max_len: usize,
    counts: BTreeMap<usize, BigInt>,
}

impl GeodesicCensus {
    pub fn new(max_len: usize) -> Self {
        GeodesicCensus {
            max_len,
            counts: BTreeMap::new(),
        }
    }

    pub fn get(&self, len: usize) -> BigInt {
        self.counts.get(&len).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, len: usize, v: BigInt) {
        if v.is_zero() {
            self.counts.remove(&len);
        } else {
            self.counts.insert(len, v);
        }
    }

    /// Nonzero entries in increasing length.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.counts.iter().map(|(&l, v)| (l, v))
    }
}

pub(crate) fn mobius(mut n: usize) -> i64 {
    let mut mu = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

pub(crate) fn divisors(n: usize) -> impl Iterator<Item = usize> {
    (1..=n).filter(move |d| n % d == 0)
}

/// Traces `tr(T^ℓ)` for `ℓ = 1..=max_len` by propagating each basis vector
/// through the sparse successor lists.
fn traces(g: &Graph, max_len: usize) -> Vec<BigInt> {
    let h = hashimoto_matrix(&g.prune().graph);
    let d = h.dim();
    let mut tr = vec![BigInt::zero(); max_len + 1];
    let mut cur = vec![BigInt::zero(); d];
    let mut next = vec![BigInt::zero(); d];
    for s in 0..d {
        cur.iter_mut().for_each(|x| x.set_zero());
        cur[s] = BigInt::from(1);
        for t in tr.iter_mut().skip(1) {
            next.iter_mut().for_each(|x| x.set_zero());
            for (i, v) in cur.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                for &j in h.successors(i) {
                    next[j] += v;
                }
            }
            std::mem::swap(&mut cur, &mut next);
            *t += &cur[s];
        }
    }
    tr
}

/// Exact `a(ℓ)` for `1 <= ℓ <= max_len`.
///
/// With `N_ℓ = tr(T^ℓ) = Σ_{d|ℓ} d·a(d)`, Möbius inversion gives
/// `ℓ·a(ℓ) = Σ_{d|ℓ} μ(ℓ/d)·N_d`; the final division by `ℓ` must be exact.
pub fn geodesic_census_from_traces(g: &Graph, max_len: usize) -> GeodesicCensus {
    let n = traces(g, max_len);
    let mut census = GeodesicCensus::new(max_len);
    for l in 1..=max_len {
        let s: BigInt = divisors(l).map(|d| mobius(l / d) * &n[d]).sum();
        let (q, r) = s.div_rem(&BigInt::from(l));
        assert!(r.is_zero(), "trace inversion: {l} does not divide {s}");
        census.set(l, q);
    }
    census
}

/// `(#C3, #C4, #C5)` from `a(3)/2, a(4)/2, a(5)/2`.
pub fn cycle_counts_from_zeta(census: &GeodesicCensus) -> Result<(u64, u64, u64)> {
    if census.max_len < 5 {
        return Err(Error::Precondition("census must reach length 5".into()));
    }
    let half = |l: usize| -> Result<u64> {
        let a = census.get(l);
        let (q, r) = a.div_rem(&BigInt::from(2));
        if !r.is_zero() {
            return Err(Error::InexactDivision("odd short geodesic count"));
        }
        q.to_u64()
            .ok_or_else(|| Error::Precondition("count exceeds u64".into()))
    };
    Ok((half(3)?, half(4)?, half(5)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_values() {
        let v: Vec<i64> = (1..=10).map(mobius).collect();
        assert_eq!(v, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
    }

    #[test]
    fn examples() {
        let c = geodesic_census_from_traces(&Graph::cycle(3), 9);
        let nz: Vec<(usize, BigInt)> = c.nonzero().map(|(l, v)| (l, v.clone())).collect();
        assert_eq!(nz, vec![(3, BigInt::from(2))]);
        let k4 = geodesic_census_from_traces(&Graph::complete(4), 5);
        assert_eq!(k4.get(3), BigInt::from(8));
        assert_eq!(cycle_counts_from_zeta(&k4).unwrap(), (4, 3, 0));
        let c5 = geodesic_census_from_traces(&Graph::cycle(5), 5);
        assert_eq!(cycle_counts_from_zeta(&c5).unwrap(), (0, 0, 1));
        let k3 = geodesic_census_from_traces(&Graph::complete(3), 5);
        assert_eq!(cycle_counts_from_zeta(&k3).unwrap(), (1, 0, 0));
        let tree = geodesic_census_from_traces(&Graph::star(5), 12);
        assert_eq!(tree.nonzero().count(), 0);
        assert!(cycle_counts_from_zeta(&geodesic_census_from_traces(&Graph::cycle(3), 4)).is_err());
    }
}

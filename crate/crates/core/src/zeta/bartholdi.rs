use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::geodesics::mobius;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{charpoly_i64, interpolate, node, AffineTriPoly, BiPoly, IntPoly};

pub const MAX_SERIES_DEGREE: usize = 10;

/// `det(λI - A + xD + yJ)` coefficient rows in `λ` at each `x` node,
/// interpolated in `x`.
fn generalized_charpoly(g: &Graph, y: i64) -> BiPoly {
    let n = g.order();
    let a = g.adjacency_matrix();
    let deg = g.degrees();
    let xs: Vec<i64> = (0..n + 2).map(node).collect();
    let slices: Vec<IntPoly> = xs
        .iter()
        .map(|&x| {
            // det(λI - M) with M = A - xD - yJ
            let mut m: Vec<i64> = a.iter().map(|&v| v - y).collect();
            for v in 0..n {
                m[v * n + v] -= x * deg[v] as i64;
            }
            charpoly_i64(n, &m)
        })
        .collect();
    let rows = (0..=n)
        .map(|i| {
            let ys: Vec<BigInt> = slices.iter().map(|p| p.coeff(i)).collect();
            let r = interpolate(&xs, &ys).expect("integer divided differences");
            assert!(r.degree().is_none_or(|d| d <= n), "x-degree exceeds n");
            r
        })
        .collect();
    BiPoly::from_rows(rows)
}

/// `φ_AD(λ, x) = det(λI - A + xD)`.
pub fn phi_ad(g: &Graph) -> BiPoly {
    generalized_charpoly(g, 0)
}

/// `φ_ADJ(λ, x, y) = det(λI - A + xD + yJ)`, affine in `y` because `J` has
/// rank one.
pub fn phi_adj(g: &Graph) -> AffineTriPoly {
    let p0 = generalized_charpoly(g, 0);
    let p1 = generalized_charpoly(g, 1).sub(&p0);
    AffineTriPoly { p0, p1 }
}

/// Power series in `(t, u)` truncated to total degree `degree`;
/// `coeff(i, j)` multiplies `t^i u^j`.
#[derive(Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    degree: usize,
    c: Vec<Vec<BigInt>>,
}

impl std::fmt::Debug for BivariateSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut terms = Vec::new();
        for i in 0..=self.degree {
            for j in 0..=self.degree - i {
                if !self.c[i][j].is_zero() {
                    terms.push(format!("{}·t^{i}u^{j}", self.c[i][j]));
                }
            }
        }
        write!(f, "[{}]", terms.join(" + "))
    }
}

impl BivariateSeries {
    fn zero(degree: usize) -> Self {
        BivariateSeries {
            degree,
            c: vec![vec![BigInt::zero(); degree + 1]; degree + 1],
        }
    }

    fn one(degree: usize) -> Self {
        let mut s = Self::zero(degree);
        s.c[0][0] = BigInt::from(1);
        s
    }

    fn from_terms(degree: usize, terms: &[(usize, usize, i64)]) -> Self {
        let mut s = Self::zero(degree);
        for &(i, j, v) in terms {
            if i + j <= degree {
                s.c[i][j] += v;
            }
        }
        s
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        if i + j > self.degree {
            return BigInt::zero();
        }
        self.c[i][j].clone()
    }

    fn mul(&self, o: &Self) -> Self {
        let d = self.degree;
        let mut out = Self::zero(d);
        for a in 0..=d {
            for b in 0..=d - a {
                let x = &self.c[a][b];
                if x.is_zero() {
                    continue;
                }
                for i in 0..=d - a - b {
                    for j in 0..=d - a - b - i {
                        let y = &o.c[i][j];
                        if !y.is_zero() {
                            out.c[a + i][b + j] += x * y;
                        }
                    }
                }
            }
        }
        out
    }

    fn add_scaled(&mut self, o: &Self, k: &BigInt) {
        for i in 0..=self.degree {
            for j in 0..=self.degree - i {
                self.c[i][j] += &o.c[i][j] * k;
            }
        }
    }

    /// `t^k · self`.
    fn shift_t(&self, k: usize) -> Self {
        let mut out = Self::zero(self.degree);
        for i in 0..=self.degree.saturating_sub(k) {
            for j in 0..=self.degree - i - k {
                out.c[i + k][j] = self.c[i][j].clone();
            }
        }
        out
    }

    fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(self.degree), |acc, _| acc.mul(self))
    }

    /// Multiplicative inverse; the constant term must be `1`.
    fn inverse(&self) -> Self {
        assert_eq!(self.c[0][0], BigInt::from(1), "series must start with 1");
        let d = self.degree;
        let mut g = Self::one(d);
        for total in 1..=d {
            for i in 0..=total {
                let j = total - i;
                let mut acc = BigInt::zero();
                for a in 0..=i {
                    for b in 0..=j {
                        if (a, b) == (0, 0) {
                            continue;
                        }
                        let f = &self.c[a][b];
                        if !f.is_zero() {
                            acc += f * &g.c[i - a][j - b];
                        }
                    }
                }
                g.c[i][j] = -acc;
            }
        }
        g
    }

    /// `t·∂/∂t`.
    fn euler_t(&self) -> Self {
        let mut out = self.clone();
        for (i, row) in out.c.iter_mut().enumerate() {
            for v in row.iter_mut() {
                *v *= i;
            }
        }
        out
    }
}

/// Bartholdi zeta function `𝒵_G(t, u)` truncated to total degree
/// `total_degree`, from `𝒵^{-1} = (1 - s²t²)^{m-n} Σ c_ij t^{n-i+j} (1 - s²t²)^i s^j`
/// where `s = 1 - u` and `c_ij` are the coefficients of `φ_AD`.
pub fn bartholdi_series(g: &Graph, total_degree: usize) -> Result<BivariateSeries> {
    if total_degree > MAX_SERIES_DEGREE {
        return Err(Error::Precondition(format!(
            "series degree {total_degree} above {MAX_SERIES_DEGREE}"
        )));
    }
    let d = total_degree;
    let (n, m) = (g.order(), g.size());
    let phi = phi_ad(g);
    // s = 1 - u, e = 1 - s^2 t^2
    let s = BivariateSeries::from_terms(d, &[(0, 0, 1), (0, 1, -1)]);
    let e = BivariateSeries::from_terms(d, &[(0, 0, 1), (2, 0, -1), (2, 1, 2), (2, 2, -1)]);
    let e_pows: Vec<BivariateSeries> = (0..=n.max(m)).map(|k| e.pow(k)).collect();
    let s_pows: Vec<BivariateSeries> = (0..=n).map(|k| s.pow(k)).collect();
    let mut det = BivariateSeries::zero(d);
    for i in 0..=n {
        for j in 0..=n {
            let c = phi.coeff(i, j);
            if c.is_zero() || n - i + j > d {
                continue;
            }
            let term = e_pows[i].mul(&s_pows[j]).shift_t(n - i + j);
            det.add_scaled(&term, &c);
        }
    }
    Ok(if m >= n {
        e_pows[m - n].mul(&det).inverse()
    } else {
        e_pows[n - m].mul(&det.inverse())
    })
}

/// `a(ℓ; c)`: classes of primitive closed walks of length `ℓ` with cyclic
/// bump count `c`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BartholdiCensus {
    counts: BTreeMap<(usize, usize), BigInt>,
}

impl BartholdiCensus {
    pub fn get(&self, len: usize, cbc: usize) -> BigInt {
        self.counts.get(&(len, cbc)).cloned().unwrap_or_default()
    }

    pub fn add(&mut self, len: usize, cbc: usize, v: BigInt) {
        let e = self.counts.entry((len, cbc)).or_default();
        *e += v;
        if e.is_zero() {
            self.counts.remove(&(len, cbc));
        }
    }

    /// Nonzero entries ordered by `(ℓ, c)`.
    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize), &BigInt)> {
        self.counts.iter().map(|(&k, v)| (k, v))
    }

    /// Entries with `ℓ + c <= total`.
    pub fn truncated(&self, total: usize) -> BartholdiCensus {
        BartholdiCensus {
            counts: self
                .counts
                .iter()
                .filter(|(&(l, c), _)| l + c <= total)
                .map(|(&k, v)| (k, v.clone()))
                .collect(),
        }
    }
}

/// Reads `a(ℓ; c)` for `ℓ + c <= degree` off the logarithm of the series.
///
/// `L·[t^L u^C] log 𝒵 = Σ_{k | (L, C)} (L/k)·a(L/k; C/k)`, and the left side
/// is the coefficient of `(t ∂_t 𝒵) / 𝒵`. Möbius inversion over the common
/// divisors of `L` and `C` recovers `L·a(L; C)`.
pub fn bartholdi_census_from_series(series: &BivariateSeries) -> BartholdiCensus {
    let d = series.degree();
    let log_deriv = series.euler_t().mul(&series.inverse());
    let mut census = BartholdiCensus::default();
    for l in 1..=d {
        for c in 0..=d - l {
            let g = l.gcd(&c);
            let mut acc = BigInt::zero();
            for k in (1..=g).filter(|k| g % k == 0) {
                acc += mobius(k) * log_deriv.coeff(l / k, c / k);
            }
            let (q, r) = acc.div_rem(&BigInt::from(l));
            assert!(r.is_zero(), "log inversion: {l} does not divide {acc}");
            census.add(l, c, q);
        }
    }
    census
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::decode;
    use crate::linalg::IntMatrix;
    use crate::zeta::{geodesic_census_from_traces, ihara_reciprocal_bass};

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn phi_ad_k2() {
        // λ² + 2λx + x² - 1
        let p = phi_ad(&Graph::complete(2));
        assert_eq!(p.lambda_coeff(0), IntPoly::from_i64s(&[-1, 0, 1]));
        assert_eq!(p.lambda_coeff(1), IntPoly::from_i64s(&[0, 2]));
        assert_eq!(p.lambda_coeff(2), IntPoly::from_i64s(&[1]));
    }

    #[test]
    fn phi_adj_k2() {
        let p = phi_adj(&Graph::complete(2));
        assert_eq!(p.p0, phi_ad(&Graph::complete(2)));
        // 2λ + 2x + 2
        assert_eq!(p.p1.lambda_coeff(0), IntPoly::from_i64s(&[2, 2]));
        assert_eq!(p.p1.lambda_coeff(1), IntPoly::from_i64s(&[2]));
        assert_eq!(p.p1.lambda_degree(), Some(1));
    }

    #[test]
    fn phi_adj_is_affine_in_y() {
        let g = decode("F?zPw").unwrap();
        let t = phi_adj(&g);
        let n = g.order();
        let a = g.adjacency_matrix();
        for (lam, x, y) in [(2, -1, 2), (0, 3, -2), (5, 1, 7)] {
            let mut m = vec![0i64; n * n];
            for i in 0..n {
                for j in 0..n {
                    m[i * n + j] = -a[i * n + j] + y;
                }
                m[i * n + i] += lam + x * g.degree(i) as i64;
            }
            assert_eq!(
                t.eval(&big(lam), &big(x), &big(y)),
                IntMatrix::from_i64(n, &m).det_exact()
            );
        }
    }

    #[test]
    fn example_pair_shares_phi_adj() {
        let a = phi_adj(&decode("HheadXZ").unwrap());
        let b = phi_adj(&decode("Hhf@eS|").unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn series_basics() {
        let k1 = bartholdi_series(&Graph::empty(1), 8).unwrap();
        assert_eq!(k1, BivariateSeries::one(8));
        assert!(bartholdi_series(&Graph::empty(1), 11).is_err());
        let g = decode("ECZo").unwrap();
        let s = bartholdi_series(&g, 10).unwrap();
        // u = 0 gives the Ihara series 1/R(t)
        let r = ihara_reciprocal_bass(&g).reciprocal;
        let mut prod = vec![BigInt::zero(); 11];
        for i in 0..=10 {
            for j in 0..=10 - i {
                prod[i + j] += s.coeff(i, 0) * r.coeff(j);
            }
        }
        assert_eq!(prod[0], big(1));
        assert!(prod[1..].iter().all(|c| c.is_zero()));
    }

    #[test]
    fn census_from_series() {
        for g in [Graph::complete(2), Graph::complete(4), decode("ECZo").unwrap()] {
            let c = bartholdi_census_from_series(&bartholdi_series(&g, 8).unwrap());
            let m = big(g.size() as i64);
            assert_eq!(c.get(2, 2), m);
            assert_eq!(c.get(2, 1), big(0));
            let ihara = geodesic_census_from_traces(&g, 8);
            for l in 1..=8 {
                assert_eq!(c.get(l, 0), ihara.get(l));
            }
        }
    }
}

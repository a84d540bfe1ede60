//! Dense exact polynomials: univariate [`IntPoly`], bivariate [`BiPoly`] in
//! `(λ, x)` and the affine-in-`y` triple form [`AffineTriPoly`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Integer polynomial; `coeffs[i]` multiplies `t^i`. No trailing zeros, so the
/// zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// `t`.
    pub fn var() -> Self {
        IntPoly::from_i64s(&[0, 1])
    }

    /// `c·t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        IntPoly::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_i64(&self, t: i64) -> BigInt {
        self.eval(&BigInt::from(t))
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Exact division by the monic `t - root`; `None` if there is a remainder.
    pub fn div_linear(&self, root: &BigInt) -> Option<IntPoly> {
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let d = self.coeffs.len() - 1;
        let mut q = vec![BigInt::zero(); d];
        let mut carry = BigInt::zero();
        for i in (0..=d).rev() {
            let v = &self.coeffs[i] + &carry * root;
            if i == 0 {
                if !v.is_zero() {
                    return None;
                }
            } else {
                q[i - 1] = v.clone();
            }
            carry = v;
        }
        Some(IntPoly::new(q))
    }

    /// Multiplicity of `root` as a zero, by repeated exact division. The zero
    /// polynomial reports `usize::MAX`.
    pub fn root_multiplicity(&self, root: i64) -> (usize, IntPoly) {
        if self.is_zero() {
            return (usize::MAX, IntPoly::zero());
        }
        let r = BigInt::from(root);
        let mut p = self.clone();
        let mut k = 0;
        while let Some(q) = p.div_linear(&r) {
            p = q;
            k += 1;
        }
        (k, p)
    }

    /// `t^k · p(1/t)` for `k >= deg p`.
    pub fn reversed(&self, k: usize) -> IntPoly {
        assert!(self.degree().is_none_or(|d| d <= k));
        let mut v = vec![BigInt::zero(); k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[k - i] = c.clone();
        }
        IntPoly::new(v)
    }

    /// `p(q(t))`.
    pub fn compose(&self, q: &IntPoly) -> IntPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(IntPoly::zero(), |acc, c| &(&acc * q) + &IntPoly::constant(c.clone()))
    }

    /// Comma-separated coefficients, constant term first; `0` for zero.
    pub fn to_coeff_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        parts.join(",")
    }

    pub fn parse_coeff_string(s: &str) -> Option<IntPoly> {
        let v: Option<Vec<BigInt>> = s.split(',').map(|p| p.trim().parse().ok()).collect();
        v.map(IntPoly::new)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_coeff_string())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_coeff_string())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }
}

/// `Σ c[i][j] λ^i x^j`, stored as one x-polynomial per power of `λ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BiPoly {
    rows: Vec<IntPoly>,
}

impl BiPoly {
    pub fn from_rows(mut rows: Vec<IntPoly>) -> Self {
        while rows.last().is_some_and(|r| r.is_zero()) {
            rows.pop();
        }
        BiPoly { rows }
    }

    /// Coefficient of `λ^i` as a polynomial in `x`.
    pub fn lambda_coeff(&self, i: usize) -> IntPoly {
        self.rows.get(i).cloned().unwrap_or_default()
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.rows.get(i).map(|r| r.coeff(j)).unwrap_or_default()
    }

    pub fn lambda_degree(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.rows.iter().filter_map(|r| r.degree()).max()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn eval(&self, lambda: &BigInt, x: &BigInt) -> BigInt {
        self.rows
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, r| acc * lambda + r.eval(x))
    }

    /// The univariate polynomial in `λ` obtained by fixing `x`.
    pub fn at_x(&self, x: &BigInt) -> IntPoly {
        IntPoly::new(self.rows.iter().map(|r| r.eval(x)).collect())
    }

    pub fn sub(&self, o: &BiPoly) -> BiPoly {
        let n = self.rows.len().max(o.rows.len());
        BiPoly::from_rows(
            (0..n)
                .map(|i| &self.lambda_coeff(i) - &o.lambda_coeff(i))
                .collect(),
        )
    }

    /// `λ`-coefficient rows joined by `;`, each row a coefficient list in `x`.
    pub fn to_coeff_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let rows: Vec<String> = self.rows.iter().map(|r| r.to_coeff_string()).collect();
        rows.join(";")
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly[{}]", self.to_coeff_string())
    }
}

/// `p0(λ, x) + y·p1(λ, x)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct AffineTriPoly {
    pub p0: BiPoly,
    pub p1: BiPoly,
}

impl AffineTriPoly {
    pub fn eval(&self, lambda: &BigInt, x: &BigInt, y: &BigInt) -> BigInt {
        self.p0.eval(lambda, x) + y * self.p1.eval(lambda, x)
    }

    pub fn to_coeff_string(&self) -> String {
        format!("{}|{}", self.p0.to_coeff_string(), self.p1.to_coeff_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = IntPoly::from_i64s(&[1, 0, -1]); // 1 - t^2
        let b = IntPoly::from_i64s(&[1, 1]); // 1 + t
        let (k, q) = a.root_multiplicity(-1);
        assert_eq!(k, 1);
        assert_eq!(q, IntPoly::from_i64s(&[1, -1]));
        assert_eq!(&(&a - &a), &IntPoly::zero());
        assert_eq!(&a * &b, IntPoly::from_i64s(&[1, 1, -1, -1]));
        assert_eq!(b.pow(3), IntPoly::from_i64s(&[1, 3, 3, 1]));
        assert_eq!(a.eval_i64(3), BigInt::from(-8));
        assert_eq!(a.reversed(3), IntPoly::from_i64s(&[0, -1, 0, 1]));
        assert_eq!(a.compose(&b), IntPoly::from_i64s(&[0, -2, -1]));
        assert_eq!(IntPoly::zero().to_coeff_string(), "0");
        assert_eq!(IntPoly::parse_coeff_string("1,0,-1").unwrap(), a);
    }

    #[test]
    fn affine_slices() {
        let p0 = BiPoly::from_rows(vec![IntPoly::from_i64s(&[1]), IntPoly::from_i64s(&[0, 2])]);
        let p1 = BiPoly::from_rows(vec![IntPoly::from_i64s(&[3])]);
        let t = AffineTriPoly { p0, p1 };
        let v = |y: i64| t.eval(&BigInt::from(2), &BigInt::from(5), &BigInt::from(y));
        assert_eq!(v(2), BigInt::from(2) * v(1) - v(0));
    }
}

//! Exact integer arithmetic behind one small trait so every algorithm runs on
//! checked `i128` first and falls back to `BigInt` when a value overflows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Fail {
    Overflow,
    Inexact,
}

pub(crate) trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn rzero() -> Self;
    fn rone() -> Self;
    fn from_i64(v: i64) -> Self;
    fn to_big(&self) -> BigInt;
    fn ris_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Result<Self, Fail>;
    fn sub(&self, o: &Self) -> Result<Self, Fail>;
    fn mul(&self, o: &Self) -> Result<Self, Fail>;
    fn neg(&self) -> Result<Self, Fail>;
    /// Division that must leave no remainder.
    fn div_exact(&self, o: &Self) -> Result<Self, Fail>;
}

impl Ring for i128 {
    fn rzero() -> Self {
        0
    }
    fn rone() -> Self {
        1
    }
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn ris_zero(&self) -> bool {
        *self == 0
    }
    #[inline]
    fn add(&self, o: &Self) -> Result<Self, Fail> {
        self.checked_add(*o).ok_or(Fail::Overflow)
    }
    #[inline]
    fn sub(&self, o: &Self) -> Result<Self, Fail> {
        self.checked_sub(*o).ok_or(Fail::Overflow)
    }
    #[inline]
    fn mul(&self, o: &Self) -> Result<Self, Fail> {
        self.checked_mul(*o).ok_or(Fail::Overflow)
    }
    fn neg(&self) -> Result<Self, Fail> {
        self.checked_neg().ok_or(Fail::Overflow)
    }
    #[inline]
    fn div_exact(&self, o: &Self) -> Result<Self, Fail> {
        let q = self.checked_div(*o).ok_or(Fail::Overflow)?;
        if q * o != *self {
            return Err(Fail::Inexact);
        }
        Ok(q)
    }
}

impl Ring for BigInt {
    fn rzero() -> Self {
        Zero::zero()
    }
    fn rone() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn ris_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Result<Self, Fail> {
        Ok(self + o)
    }
    fn sub(&self, o: &Self) -> Result<Self, Fail> {
        Ok(self - o)
    }
    fn mul(&self, o: &Self) -> Result<Self, Fail> {
        Ok(self * o)
    }
    fn neg(&self) -> Result<Self, Fail> {
        Ok(-self)
    }
    fn div_exact(&self, o: &Self) -> Result<Self, Fail> {
        let (q, r) = self.div_rem(o);
        if !Zero::is_zero(&r) {
            return Err(Fail::Inexact);
        }
        Ok(q)
    }
}

/// Runs `f` over `i128` when every input fits, retrying over `BigInt` on
/// overflow. Inexact divisions are reported, never retried.
pub(crate) fn with_fallback<T>(
    inputs: &[BigInt],
    f128: impl FnOnce(Vec<i128>) -> Result<T, Fail>,
    fbig: impl FnOnce(Vec<BigInt>) -> Result<T, Fail>,
) -> Result<T, Fail> {
    let small: Option<Vec<i128>> = inputs.iter().map(|v| v.to_i128()).collect();
    if let Some(small) = small {
        match f128(small) {
            Err(Fail::Overflow) => {}
            other => return other,
        }
    }
    fbig(inputs.to_vec())
}

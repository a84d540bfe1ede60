use num_bigint::BigInt;

use super::matrix::det_exact_big;
use super::poly::IntPoly;
use super::ring::{with_fallback, Fail, Ring};
use crate::error::{Error, Result};

/// The `k`-th evaluation node: `0, 1, -1, 2, -2, ...`.
pub fn node(k: usize) -> i64 {
    let h = k.div_ceil(2) as i64;
    if k % 2 == 1 {
        h
    } else {
        -h
    }
}

fn newton<R: Ring>(xs: &[i64], mut ys: Vec<R>) -> std::result::Result<Vec<R>, Fail> {
    let n = ys.len();
    for j in 1..n {
        for i in (j..n).rev() {
            ys[i] = ys[i]
                .sub(&ys[i - 1])?
                .div_exact(&R::from_i64(xs[i] - xs[i - j]))?;
        }
    }
    if n == 0 {
        return Ok(vec![]);
    }
    let mut p = vec![ys[n - 1].clone()];
    for i in (0..n - 1).rev() {
        let x = R::from_i64(xs[i]);
        let mut q = vec![R::rzero(); p.len() + 1];
        for (k, c) in p.iter().enumerate() {
            q[k + 1] = q[k + 1].add(c)?;
            q[k] = q[k].sub(&c.mul(&x)?)?;
        }
        q[0] = q[0].add(&ys[i])?;
        p = q;
    }
    Ok(p)
}

/// Exact interpolation through `(xs[i], ys[i])` with distinct integer nodes.
/// Fails if some divided difference is not an integer.
pub fn interpolate(xs: &[i64], ys: &[BigInt]) -> Result<IntPoly> {
    assert_eq!(xs.len(), ys.len());
    let r = with_fallback(
        ys,
        |v| newton(xs, v).map(|c| c.iter().map(Ring::to_big).collect()),
        |v| newton(xs, v),
    );
    match r {
        Ok(c) => Ok(IntPoly::new(c)),
        Err(_) => Err(Error::Interpolation(xs.len())),
    }
}

/// Recovers a polynomial of degree `<= degree_bound` from its values at
/// `degree_bound + 2` nodes; the surplus node checks the bound.
pub(crate) fn interpolate_values(
    degree_bound: usize,
    eval: impl Fn(i64) -> BigInt,
) -> Result<IntPoly> {
    let xs: Vec<i64> = (0..degree_bound + 2).map(node).collect();
    let ys: Vec<BigInt> = xs.iter().map(|&x| eval(x)).collect();
    let p = interpolate(&xs, &ys)?;
    if p.degree().is_some_and(|d| d > degree_bound) {
        return Err(Error::Interpolation(degree_bound));
    }
    Ok(p)
}

/// Determinant of a square matrix of polynomials whose true determinant has
/// degree at most `degree_bound`.
pub fn polymat_det(rows: &[Vec<IntPoly>], degree_bound: usize) -> Result<IntPoly> {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
    interpolate_values(degree_bound, |x| {
        let x = BigInt::from(x);
        let vals: Vec<BigInt> = rows.iter().flatten().map(|p| p.eval(&x)).collect();
        det_exact_big(n, &vals)
    })
}

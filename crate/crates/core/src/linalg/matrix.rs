use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::IntPoly;
use super::ring::{with_fallback, Fail, Ring};

/// Square matrix of exact integers, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(dim: usize) -> Self {
        IntMatrix {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = IntMatrix::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = BigInt::from(1);
        }
        m
    }

    /// Panics unless `entries.len() == dim * dim`.
    pub fn from_entries(dim: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), dim * dim, "matrix must be square");
        IntMatrix { dim, entries }
    }

    pub fn from_i64(dim: usize, entries: &[i64]) -> Self {
        IntMatrix::from_entries(dim, entries.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        let flat: Vec<i64> = rows.iter().flat_map(|r| {
            assert_eq!(r.len(), dim, "matrix must be square");
            r.iter().copied()
        }).collect();
        IntMatrix::from_i64(dim, &flat)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: i64, other: &IntMatrix, b: i64) -> IntMatrix {
        assert_eq!(self.dim, other.dim);
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        IntMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(x, y)| x * &a + y * &b)
                .collect(),
        }
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.dim;
        let mut t = IntMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                t.entries[j * n + i] = self.entries[i * n + j].clone();
            }
        }
        t
    }

    pub fn det_exact(&self) -> BigInt {
        det_exact_big(self.dim, &self.entries)
    }

    pub fn charpoly(&self) -> IntPoly {
        charpoly_big(self.dim, &self.entries)
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, o: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, o.dim);
        let n = self.dim;
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * &o.entries[k * n + j];
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        write!(f, "{rows:?}")
    }
}

/// Fraction-free Gaussian elimination with row swaps. Every division is exact.
fn bareiss<R: Ring>(n: usize, mut a: Vec<R>) -> Result<R, Fail> {
    if n == 0 {
        return Ok(R::rone());
    }
    let mut negate = false;
    let mut prev = R::rone();
    for k in 0..n - 1 {
        if a[k * n + k].ris_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].ris_zero()) else {
                return Ok(R::rzero());
            };
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            negate = !negate;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            let lead = a[i * n + k].clone();
            for j in k + 1..n {
                let v = a[i * n + j]
                    .mul(&pivot)?
                    .sub(&lead.mul(&a[k * n + j])?)?;
                a[i * n + j] = v.div_exact(&prev)?;
            }
        }
        prev = pivot;
    }
    let d = a[n * n - 1].clone();
    if negate {
        d.neg()
    } else {
        Ok(d)
    }
}

/// Faddeev–LeVerrier. Returns coefficients constant-first, monic of degree `n`.
fn faddeev<R: Ring>(n: usize, a: Vec<R>) -> Result<Vec<R>, Fail> {
    let mut c = vec![R::rzero(); n + 1];
    c[n] = R::rone();
    let mut m = vec![R::rzero(); n * n];
    for i in 0..n {
        m[i * n + i] = R::rone();
    }
    for k in 1..=n {
        // am = A · M_k
        let mut am = vec![R::rzero(); n * n];
        for i in 0..n {
            for l in 0..n {
                let x = &a[i * n + l];
                if x.ris_zero() {
                    continue;
                }
                for j in 0..n {
                    let y = &m[l * n + j];
                    if !y.ris_zero() {
                        am[i * n + j] = am[i * n + j].add(&x.mul(y)?)?;
                    }
                }
            }
        }
        let mut tr = R::rzero();
        for i in 0..n {
            tr = tr.add(&am[i * n + i])?;
        }
        let ck = tr.neg()?.div_exact(&R::from_i64(k as i64))?;
        for i in 0..n {
            am[i * n + i] = am[i * n + i].add(&ck)?;
        }
        c[n - k] = ck;
        m = am;
    }
    Ok(c)
}

fn expect_exact<T>(r: Result<T, Fail>, what: &str) -> T {
    match r {
        Ok(v) => v,
        Err(f) => panic!("{what}: arithmetic failure {f:?} in exact algorithm"),
    }
}

pub(crate) fn det_exact_big(n: usize, entries: &[BigInt]) -> BigInt {
    expect_exact(
        with_fallback(
            entries,
            |v| bareiss(n, v).map(|d| d.to_big()),
            |v| bareiss(n, v),
        ),
        "determinant",
    )
}

/// Determinant of a small-integer matrix without allocating big integers
/// unless the elimination overflows.
pub(crate) fn det_i128(n: usize, entries: Vec<i128>) -> BigInt {
    match bareiss(n, entries.clone()) {
        Ok(d) => BigInt::from(d),
        Err(Fail::Overflow) => expect_exact(
            bareiss(n, entries.into_iter().map(BigInt::from).collect()),
            "determinant",
        ),
        Err(e) => panic!("determinant: {e:?}"),
    }
}

pub(crate) fn charpoly_big(n: usize, entries: &[BigInt]) -> IntPoly {
    let c = expect_exact(
        with_fallback(
            entries,
            |v| faddeev(n, v).map(|c| c.iter().map(Ring::to_big).collect()),
            |v| faddeev(n, v),
        ),
        "characteristic polynomial",
    );
    IntPoly::new(c)
}

pub(crate) fn charpoly_i64(n: usize, entries: &[i64]) -> IntPoly {
    let small: Vec<i128> = entries.iter().map(|&v| v as i128).collect();
    match faddeev(n, small) {
        Ok(c) => IntPoly::new(c.into_iter().map(BigInt::from).collect()),
        Err(Fail::Overflow) => {
            let big: Vec<BigInt> = entries.iter().map(|&v| BigInt::from(v)).collect();
            charpoly_big(n, &big)
        }
        Err(e) => panic!("characteristic polynomial: {e:?}"),
    }
}

/// Rank over the rationals of a `rows x cols` integer matrix, by
/// fraction-free elimination.
pub fn rank_exact(rows: usize, cols: usize, entries: &[i64]) -> usize {
    assert_eq!(entries.len(), rows * cols);
    let mut a: Vec<Vec<BigInt>> = entries
        .chunks(cols.max(1))
        .take(rows)
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for j in c + 1..cols {
                let v = &a[rank][c] * &a[r][j] - &a[r][c] * &a[rank][j];
                a[r][j] = v / &prev;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

//! Exact determinants: integer Bareiss, fraction-free rational determinants,
//! cofactors, and determinants of polynomial matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::{RatPoly, Rational};

pub type Matrix<T> = Vec<Vec<T>>;

/// Bareiss elimination in `i128`; `None` if any intermediate overflows.
pub fn det_i128(m: &[Vec<i128>]) -> Option<i128> {
    let n = m.len();
    if n == 0 {
        return Some(1);
    }
    let mut a: Matrix<i128> = m.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(pivot) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return Some(0);
            };
            a.swap(k, pivot);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let lhs = a[i][j].checked_mul(a[k][k])?;
                let rhs = a[i][k].checked_mul(a[k][j])?;
                a[i][j] = lhs.checked_sub(rhs)? / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    a[n - 1][n - 1].checked_mul(sign)
}

/// Bareiss elimination over arbitrary-precision integers.
pub fn det_bigint(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Matrix<BigInt> = m.to_vec();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Exact integer determinant; tries `i128` first.
pub fn det_integer(m: &[Vec<i128>]) -> BigInt {
    if let Some(d) = det_i128(m) {
        return BigInt::from(d);
    }
    let big: Matrix<BigInt> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    det_bigint(&big)
}

/// Fraction-free rational determinant: each row is scaled by the lcm of its
/// denominators, the integer matrix goes through Bareiss, and the scaling is
/// divided back out. The 0×0 determinant is 1.
pub fn det_exact(m: &[Vec<Rational>]) -> Rational {
    let mut scale = BigInt::one();
    let mut int_rows: Matrix<BigInt> = Vec::with_capacity(m.len());
    for row in m {
        assert_eq!(row.len(), m.len(), "determinant of a non-square matrix");
        let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        int_rows.push(row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect());
        scale *= lcm;
    }
    Rational::new(det_bigint(&int_rows), scale)
}

pub fn minor<T: Clone>(m: &[Vec<T>], row: usize, col: usize) -> Matrix<T> {
    m.iter()
        .enumerate()
        .filter(|&(i, _)| i != row)
        .map(|(_, r)| {
            r.iter()
                .enumerate()
                .filter(|&(j, _)| j != col)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

/// Signed cofactor at 0-indexed `(row, col)`.
pub fn cofactor(m: &[Vec<Rational>], row: usize, col: usize) -> Rational {
    let d = det_exact(&minor(m, row, col));
    if (row + col).is_multiple_of(2) {
        d
    } else {
        -d
    }
}

/// Sign of a rational as -1, 0 or 1.
pub fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Determinant of a polynomial matrix: Laplace expansion below order 6,
/// fraction-free Bareiss with exact division from order 6 on.
pub fn det_poly(m: &[Vec<RatPoly>]) -> RatPoly {
    if m.len() < 6 {
        laplace(m)
    } else {
        bareiss_poly(m)
    }
}

fn laplace(m: &[Vec<RatPoly>]) -> RatPoly {
    match m.len() {
        0 => RatPoly::one(),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        n => {
            let mut acc = RatPoly::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let term = &m[0][j] * &laplace(&minor(m, 0, j));
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

fn bareiss_poly(m: &[Vec<RatPoly>]) -> RatPoly {
    let n = m.len();
    let mut a: Matrix<RatPoly> = m.to_vec();
    let mut negate = false;
    let mut prev = RatPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    negate = !negate;
                }
                None => return RatPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = v.div_exact(&prev);
            }
            a[i][k] = RatPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -&d
    } else {
        d
    }
}

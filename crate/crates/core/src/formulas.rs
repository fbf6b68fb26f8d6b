//! Alternative routes to `y(λ/μ)`: the interval determinant, the sum over
//! interval sets, the outside-decomposition determinant, and the matrix
//! obtained from Jacobi-Trudi by deleting the rows and columns of `h_0`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bounds::OracleBounds;
use crate::error::{Error, Result};
use crate::linalg::{det_exact, det_poly, Matrix};
use crate::poly::{RatPoly, Rational};
use crate::shape::SkewShape;
use crate::snake::{crossings, enumerate_interval_sets, noncrossing_interval_set, snake_sequence};
use crate::specialization::{jt_subscripts, skew_schur_specialized};
use crate::strip::{
    cutting_strip, greedy_decomposition, split_by_component, strip_segment, z_statistic, Decomposition, Segment,
};

fn unit_fraction(d: i64) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(d))
}

fn sign_of(parity: usize) -> Rational {
    if parity.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `d_ij = 1/(y_j - w_i)` when `y_j > w_i`, else 0, with `(w_i, y_i)` the
/// pairs of `I_0` sorted by `w`.
pub fn interval_matrix(shape: &SkewShape) -> Result<Matrix<Rational>> {
    let base = noncrossing_interval_set(&snake_sequence(shape))?;
    let pairs = base.pairs();
    Ok(pairs
        .iter()
        .map(|&(w, _)| {
            pairs
                .iter()
                .map(|&(_, y)| {
                    if y > w {
                        unit_fraction((y - w) as i64)
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect())
}

/// `(-1)^z det(d_ij)`.
pub fn y_via_determinant(shape: &SkewShape) -> Result<Rational> {
    Ok(sign_of(z_statistic(shape)) * det_exact(&interval_matrix(shape)?))
}

/// `(-1)^z Σ_I (-1)^{cr(I)} / ∏(v_i - u_i)` over all interval sets.
pub fn y_via_interval_expansion(shape: &SkewShape, bounds: &OracleBounds) -> Result<Rational> {
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    let mut count = 0usize;
    // terms are accumulated over a running common denominator
    for set in enumerate_interval_sets(&snake_sequence(shape)) {
        count += 1;
        if count > bounds.interval_sets {
            return Err(Error::BoundExceeded {
                what: "interval sets",
                actual: count,
                limit: bounds.interval_sets,
            });
        }
        let prod = BigInt::from(set.length_product());
        let g = num_integer::Integer::gcd(&den, &prod);
        let scale = &prod / &g;
        num *= &scale;
        let term = &den / &g;
        if crossings(&set).is_multiple_of(2) {
            num += term;
        } else {
            num -= term;
        }
        den *= scale;
    }
    Ok(sign_of(z_statistic(shape)) * Rational::new(num, den))
}

fn segment_polynomial(seg: Segment) -> RatPoly {
    match seg {
        Segment::Strip(b) => skew_schur_specialized(&b.to_shape()),
        Segment::Empty => RatPoly::one(),
        Segment::Undefined => RatPoly::zero(),
    }
}

/// Matrix `s_{[τ(init B_i), τ(fin B_j)]}(1^t)` of a connected shape.
pub fn hamel_goulden_matrix(shape: &SkewShape, d: &Decomposition) -> Result<Matrix<RatPoly>> {
    let phi = cutting_strip(shape, d)?;
    let mut cache: HashMap<(i64, i64), RatPoly> = HashMap::new();
    let mut m = Vec::with_capacity(d.len());
    for bi in d.strips() {
        let mut row = Vec::with_capacity(d.len());
        for bj in d.strips() {
            let key = (bi.init_content(), bj.fin_content());
            let entry = match cache.get(&key) {
                Some(p) => p.clone(),
                None => {
                    let p = segment_polynomial(strip_segment(&phi, key.0, key.1)?);
                    cache.insert(key, p.clone());
                    p
                }
            };
            row.push(entry);
        }
        m.push(row);
    }
    Ok(m)
}

/// Determinant of the outside-decomposition matrix, multiplied over
/// connected components.
pub fn hamel_goulden_specialized(shape: &SkewShape, d: &Decomposition) -> Result<RatPoly> {
    let mut acc = RatPoly::one();
    for (sub, sub_d) in split_by_component(shape, d)? {
        acc = &acc * &det_poly(&hamel_goulden_matrix(&sub, &sub_d)?);
    }
    Ok(acc)
}

/// With `p_i`, `q_j` the cutting-strip rows of the contents `τ(init B_i)`
/// and `τ(fin B_j)` of the greedy decomposition, checks
/// `(-1)^{Σp - Σq} = (-1)^z` on every component.
pub fn interval_sign_check(shape: &SkewShape) -> Result<bool> {
    for (sub, d) in split_by_component(shape, &greedy_decomposition(shape))? {
        let phi = cutting_strip(&sub, &d)?;
        let mut diff: i64 = 0;
        for b in d.strips() {
            diff += phi.cell_at(b.init_content())?.row as i64;
            diff -= phi.cell_at(b.fin_content())?.row as i64;
        }
        if diff.rem_euclid(2) as usize != d.total_height() % 2 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Jacobi-Trudi subscripts with every row and column holding a 0 removed,
/// then `s ↦ 1/s` for `s > 0` and `s ↦ 0` for `s < 0`.
pub fn jt_deletion_matrix(shape: &SkewShape) -> Matrix<Rational> {
    let m = jt_subscripts(shape);
    let n = m.len();
    let keep_rows: Vec<usize> = (0..n).filter(|&i| !m[i].contains(&0)).collect();
    let keep_cols: Vec<usize> = (0..n).filter(|&j| (0..n).all(|i| m[i][j] != 0)).collect();
    keep_rows
        .iter()
        .map(|&i| {
            keep_cols
                .iter()
                .map(|&j| {
                    let s = m[i][j];
                    if s > 0 {
                        unit_fraction(s)
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

//! The principal specialization `s_{λ/μ}(1^t)`, zrank, `y(λ/μ)`, the
//! ribbon closed form and a brute-force tableau counter.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bounds::OracleBounds;
use crate::code::reduced_code;
use crate::error::{Error, Result};
use crate::linalg::{det_integer, det_poly, Matrix};
use crate::poly::{int, RatPoly, Rational};
use crate::shape::{Cell, SkewShape};

/// `h_m(1^t) = C(t+m-1, m)` as a polynomial in `t`.
pub fn h_specialized(m: i64) -> RatPoly {
    if m < 0 {
        return RatPoly::zero();
    }
    let mut p = RatPoly::one();
    for i in 0..m {
        p = &p * &RatPoly::from_i64(&[i, 1]);
    }
    let fact: BigInt = (1..=m).map(BigInt::from).product();
    p.scale(&Rational::new(BigInt::one(), fact))
}

/// `h_m(1^t)` at a nonnegative integer `t`.
pub fn h_at(m: i64, t: u32) -> i128 {
    if m < 0 {
        return 0;
    }
    if m == 0 {
        return 1;
    }
    if t == 0 {
        return 0;
    }
    // C(t+m-1, m) = C(t+m-1, t-1)
    let n = t as i128 + m as i128 - 1;
    let k = (t as i128 - 1).min(m as i128);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Jacobi-Trudi subscripts `λ_i - μ_j - i + j`.
pub fn jt_subscripts(shape: &SkewShape) -> Matrix<i64> {
    let l = shape.num_rows();
    (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| shape.lambda_part(i) as i64 - shape.mu_part(j) as i64 - i as i64 + j as i64)
                .collect()
        })
        .collect()
}

/// `s_{λ/μ}(1^t)` at a nonnegative integer `t`, as an exact integer.
pub fn skew_schur_at(shape: &SkewShape, t: u32) -> BigInt {
    let m = jt_subscripts(shape);
    let vals: Matrix<i128> = m.iter().map(|row| row.iter().map(|&s| h_at(s, t)).collect()).collect();
    det_integer(&vals)
}

/// Signed Stirling numbers of the first kind `s(k, j)` for `k, j ≤ n`:
/// `t(t-1)…(t-k+1) = Σ_j s(k,j) t^j`.
fn stirling_first(n: usize) -> Vec<Vec<BigInt>> {
    let mut s = vec![vec![BigInt::zero(); n + 1]; n + 1];
    s[0][0] = BigInt::one();
    for k in 0..n {
        for j in 0..=k {
            let v = s[k][j].clone();
            s[k + 1][j + 1] += &v;
            s[k + 1][j] -= v * BigInt::from(k);
        }
    }
    s
}

/// Degree-`n` polynomial through `(t, values[t])`, `t = 0..=n`, written in
/// the falling-factorial basis via forward differences.
fn interpolate(values: Vec<BigInt>) -> RatPoly {
    let n = values.len() - 1;
    let mut diffs = Vec::with_capacity(n + 1);
    let mut row = values;
    for _ in 0..=n {
        diffs.push(row[0].clone());
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let stirling = stirling_first(n);
    // denominators k! are cleared by the common factor n!
    let mut over_k: Vec<BigInt> = vec![BigInt::one(); n + 1];
    for k in (0..n).rev() {
        over_k[k] = &over_k[k + 1] * BigInt::from(k + 1);
    }
    let denom: BigInt = over_k[0].clone();
    let coeffs = (0..=n)
        .map(|j| {
            let mut num = BigInt::zero();
            for k in j..=n {
                if !diffs[k].is_zero() && !stirling[k][j].is_zero() {
                    num += &diffs[k] * &stirling[k][j] * &over_k[k];
                }
            }
            Rational::new(num, denom.clone())
        })
        .collect();
    RatPoly::new(coeffs)
}

/// `s_{λ/μ}(1^t)` as an exact polynomial. The Jacobi-Trudi determinant is
/// evaluated exactly at `t = 0, …, |λ/μ|` and interpolated; the degree is
/// the number of cells.
pub fn skew_schur_specialized(shape: &SkewShape) -> RatPoly {
    let n = shape.size();
    if n == 0 {
        return RatPoly::one();
    }
    let values: Vec<BigInt> = (0..=n as u32).map(|t| skew_schur_at(shape, t)).collect();
    interpolate(values)
}

/// The same polynomial as a determinant of polynomial entries.
pub fn skew_schur_by_polynomial_det(shape: &SkewShape) -> RatPoly {
    let m: Matrix<RatPoly> = jt_subscripts(shape)
        .iter()
        .map(|row| row.iter().map(|&s| h_specialized(s)).collect())
        .collect();
    det_poly(&m)
}

/// Largest power of `t` dividing the specialization; 0 for the empty shape.
pub fn zrank_of(shape: &SkewShape) -> usize {
    skew_schur_specialized(shape).valuation().unwrap_or(0)
}

/// Coefficient of `t^rank` in the specialization.
pub fn y_value(shape: &SkewShape) -> Rational {
    y_from_polynomial(shape, &skew_schur_specialized(shape))
}

pub fn y_from_polynomial(shape: &SkewShape, poly: &RatPoly) -> Rational {
    poly.coeff(reduced_code(shape).rank())
}

/// `(-1)^{ℓ+1} / (λ_1 + ℓ - 1)` for a border strip, with `λ_1` and `ℓ`
/// read from the strip's own bounding box.
pub fn ribbon_y(shape: &SkewShape) -> Result<Rational> {
    if !shape.is_border_strip() {
        return Err(Error::NotBorderStrip);
    }
    let tight = SkewShape::from_cells(&shape.cells()).ok_or(Error::NotBorderStrip)?;
    let l = tight.num_rows() as i64;
    let sign = if l % 2 == 1 { 1 } else { -1 };
    Ok(Rational::new(
        BigInt::from(sign),
        BigInt::from(tight.width() as i64 + l - 1),
    ))
}

/// Semistandard fillings with entries in `1..=t`, by backtracking.
pub fn ssyt_count(shape: &SkewShape, t: usize, bounds: &OracleBounds) -> Result<u64> {
    if shape.size() > bounds.ssyt_cells {
        return Err(Error::BoundExceeded {
            what: "tableau cells",
            actual: shape.size(),
            limit: bounds.ssyt_cells,
        });
    }
    if t > bounds.ssyt_t {
        return Err(Error::BoundExceeded {
            what: "tableau alphabet",
            actual: t,
            limit: bounds.ssyt_t,
        });
    }
    let cells = shape.cells();
    let index = |c: Cell| cells.iter().position(|&d| d == c);
    // row-major order puts the left and upper neighbours first
    let deps: Vec<(Option<usize>, Option<usize>)> = cells
        .iter()
        .map(|c| {
            let left = if c.col > 1 {
                index(Cell::new(c.row, c.col - 1))
            } else {
                None
            };
            let up = if c.row > 1 {
                index(Cell::new(c.row - 1, c.col))
            } else {
                None
            };
            (left, up)
        })
        .collect();
    fn fill(k: usize, t: usize, deps: &[(Option<usize>, Option<usize>)], vals: &mut Vec<usize>) -> u64 {
        if k == deps.len() {
            return 1;
        }
        let (left, up) = deps[k];
        let lo = left.map_or(1, |i| vals[i]).max(up.map_or(1, |i| vals[i] + 1));
        let mut total = 0;
        for v in lo..=t {
            vals.push(v);
            total += fill(k + 1, t, deps, vals);
            vals.pop();
        }
        total
    }
    Ok(fill(0, t, &deps, &mut Vec::with_capacity(cells.len())))
}

/// Coefficients below `t^rank` vanish.
pub fn rank_divides(shape: &SkewShape, poly: &RatPoly) -> bool {
    let r = reduced_code(shape).rank();
    (0..r).all(|i| poly.coeff(i).is_zero())
}

/// Specialization value at a nonnegative integer as a rational.
pub fn eval_at(poly: &RatPoly, t: usize) -> Rational {
    poly.eval(&int(t as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use crate::shape::{enumerate_shapes, enumerate_shapes_in_box};

    fn shape(text: &str) -> SkewShape {
        text.parse().unwrap()
    }

    #[test]
    fn complete_homogeneous() {
        assert_eq!(h_specialized(1), RatPoly::t());
        assert_eq!(h_specialized(0), RatPoly::one());
        assert_eq!(h_specialized(-3), RatPoly::zero());
        assert_eq!(h_specialized(2), RatPoly::new(vec![int(0), rat(1, 2), rat(1, 2)]));
        for m in -2..8 {
            for t in 0..7u32 {
                assert_eq!(
                    int(h_at(m, t) as i64),
                    h_specialized(m).eval_i64(t as i64),
                    "m={m} t={t}"
                );
            }
        }
    }

    #[test]
    fn specialization_examples() {
        assert_eq!(skew_schur_specialized(&shape("1")), RatPoly::t());
        let p = skew_schur_specialized(&shape("2,2/1"));
        assert_eq!(p, RatPoly::new(vec![int(0), rat(-1, 3), int(0), rat(1, 3)]));
        let p = skew_schur_specialized(&shape("2,2"));
        assert_eq!(p, RatPoly::new(vec![int(0), int(0), rat(-1, 12), int(0), rat(1, 12)]));
        assert_eq!(skew_schur_specialized(&shape("3,2/3,2")), RatPoly::one());
    }

    #[test]
    fn zrank_and_y_examples() {
        assert_eq!(zrank_of(&shape("1")), 1);
        assert_eq!(zrank_of(&shape("2,2")), 2);
        assert_eq!(zrank_of(&shape("2,2/1")), 1);
        assert_eq!(zrank_of(&SkewShape::empty()), 0);
        assert_eq!(y_value(&shape("1")), int(1));
        assert_eq!(y_value(&shape("2,2/1")), rat(-1, 3));
        assert_eq!(y_value(&shape("2,2")), rat(-1, 12));
        assert_eq!(y_value(&SkewShape::empty()), int(1));
    }

    #[test]
    fn ribbon_examples() {
        assert_eq!(ribbon_y(&shape("1")).unwrap(), int(1));
        assert_eq!(ribbon_y(&shape("2,2/1")).unwrap(), rat(-1, 3));
        assert_eq!(ribbon_y(&shape("3")).unwrap(), rat(1, 3));
        assert_eq!(ribbon_y(&shape("2,2")), Err(Error::NotBorderStrip));
        assert_eq!(ribbon_y(&shape("3,3/3,3")), Err(Error::NotBorderStrip));
    }

    #[test]
    fn tableau_examples() {
        let b = OracleBounds::default();
        assert_eq!(ssyt_count(&shape("1"), 3, &b).unwrap(), 3);
        assert_eq!(ssyt_count(&shape("2,1"), 2, &b).unwrap(), 2);
        assert_eq!(ssyt_count(&shape("2,2"), 2, &b).unwrap(), 1);
        assert!(ssyt_count(&shape("9"), 2, &b).is_err());
        assert!(ssyt_count(&shape("2"), 5, &b).is_err());
    }

    /// Hook-content formula for straight shapes, an independent route.
    fn hook_content(parts: &[usize]) -> RatPoly {
        let mut p = RatPoly::one();
        let mut hooks = BigInt::one();
        let conj = |j: usize| parts.iter().filter(|&&x| x >= j).count();
        for (i0, &len) in parts.iter().enumerate() {
            let i = i0 + 1;
            for j in 1..=len {
                p = &p * &RatPoly::from_i64(&[j as i64 - i as i64, 1]);
                hooks *= BigInt::from(len - j + conj(j) - i + 1);
            }
        }
        p.scale(&Rational::new(BigInt::one(), hooks))
    }

    #[test]
    fn straight_shapes_match_hook_content() {
        for s in enumerate_shapes(9).filter(|s| s.mu().is_empty()) {
            assert_eq!(skew_schur_specialized(&s), hook_content(s.lambda().parts()), "{s}");
        }
    }

    #[test]
    fn interpolation_matches_polynomial_determinant() {
        for s in enumerate_shapes_in_box(8, 5, 5) {
            assert_eq!(skew_schur_specialized(&s), skew_schur_by_polynomial_det(&s), "{s}");
        }
    }

    #[test]
    fn invariants_small() {
        let b = OracleBounds::default();
        for s in enumerate_shapes(6) {
            let p = skew_schur_specialized(&s);
            assert_eq!(p.degree(), Some(s.size()));
            assert!(rank_divides(&s, &p));
            for t in 1..=4 {
                assert_eq!(eval_at(&p, t), int(ssyt_count(&s, t, &b).unwrap() as i64), "{s} t={t}");
            }
            if s.is_border_strip() {
                assert_eq!(ribbon_y(&s).unwrap(), y_value(&s));
            }
        }
    }
}

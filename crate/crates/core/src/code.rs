//! The reduced code (partition sequence) of a skew shape.
//!
//! Both boundary paths are traced over the full `ℓ(λ) × λ_1` bounding box
//! from its bottom-left corner to its top-right corner, a `1` for each up
//! step and a `0` for each right step. The top row follows `μ`, the bottom
//! row follows `λ`; both have length `k = λ_1 + ℓ(λ)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::shape::SkewShape;

#[derive(Debug, Clone)]
pub struct ReducedCode {
    top: Vec<u8>,
    bottom: Vec<u8>,
    shape: Option<SkewShape>,
}

impl PartialEq for ReducedCode {
    fn eq(&self, other: &Self) -> bool {
        self.top == other.top && self.bottom == other.bottom
    }
}

impl Eq for ReducedCode {}

/// Lattice path `0^{p_ℓ} 1 0^{p_{ℓ-1} - p_ℓ} 1 … 1 0^{width - p_1}` of a
/// partition given by its (padded) parts.
fn boundary_path(parts: &[usize], width: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(width + parts.len());
    let mut below = 0;
    for &p in parts.iter().rev() {
        out.extend(std::iter::repeat_n(0, p - below));
        out.push(1);
        below = p;
    }
    out.extend(std::iter::repeat_n(0, width - below));
    out
}

/// Inverse of [`boundary_path`]: parts read top row first.
fn parts_of_path(bits: &[u8]) -> Vec<usize> {
    let mut zeros = 0;
    let mut parts = Vec::new();
    for &b in bits {
        if b == 1 {
            parts.push(zeros);
        } else {
            zeros += 1;
        }
    }
    parts.reverse();
    parts
}

pub fn reduced_code(shape: &SkewShape) -> ReducedCode {
    let width = shape.width();
    ReducedCode {
        top: boundary_path(shape.mu_padded(), width),
        bottom: boundary_path(shape.lambda().parts(), width),
        shape: Some(shape.clone()),
    }
}

impl ReducedCode {
    /// Builds a code from raw rows, checking common endpoints and prefix
    /// dominance.
    pub fn from_rows(top: Vec<u8>, bottom: Vec<u8>) -> Result<Self> {
        let code = ReducedCode {
            top,
            bottom,
            shape: None,
        };
        code.validate()?;
        let shape = code.to_shape()?;
        Ok(ReducedCode {
            shape: Some(shape),
            ..code
        })
    }

    pub fn top(&self) -> &[u8] {
        &self.top
    }

    pub fn bottom(&self) -> &[u8] {
        &self.bottom
    }

    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    /// The shape this code was built from or decodes to.
    pub fn shape(&self) -> Option<&SkewShape> {
        self.shape.as_ref()
    }

    /// Column `i` (1-indexed) as `(top, bottom)`.
    pub fn column(&self, i: usize) -> (u8, u8) {
        (self.top[i - 1], self.bottom[i - 1])
    }

    fn validate(&self) -> Result<()> {
        if self.top.len() != self.bottom.len() {
            return Err(Error::InvalidCode("rows differ in length".into()));
        }
        if self.top.iter().chain(&self.bottom).any(|&b| b > 1) {
            return Err(Error::InvalidCode("entries must be 0 or 1".into()));
        }
        let ones = |row: &[u8]| row.iter().filter(|&&b| b == 1).count();
        if ones(&self.top) != ones(&self.bottom) {
            return Err(Error::InvalidCode("paths do not share endpoints".into()));
        }
        let mut balance: i64 = 0;
        for (&f, &g) in self.top.iter().zip(&self.bottom) {
            balance += f as i64 - g as i64;
            if balance < 0 {
                return Err(Error::InvalidCode("prefix dominance fails".into()));
            }
        }
        Ok(())
    }

    /// Decodes `λ` from the bottom row and `μ` from the top row.
    pub fn to_shape(&self) -> Result<SkewShape> {
        let lambda = parts_of_path(&self.bottom);
        let mu = parts_of_path(&self.top);
        SkewShape::from_parts(&lambda, &mu)
    }

    /// Number of `1`-over-`0` columns.
    pub fn rank(&self) -> usize {
        self.top
            .iter()
            .zip(&self.bottom)
            .filter(|&(&f, &g)| f == 1 && g == 0)
            .count()
    }

    /// 1-indexed positions of the `1`-over-`0` columns (`w`) and of the
    /// `0`-over-`1` columns (`y`), both increasing.
    pub fn column_sets(&self) -> (Vec<usize>, Vec<usize>) {
        let mut w = Vec::new();
        let mut y = Vec::new();
        for (i, (&f, &g)) in self.top.iter().zip(&self.bottom).enumerate() {
            match (f, g) {
                (1, 0) => w.push(i + 1),
                (0, 1) => y.push(i + 1),
                _ => {}
            }
        }
        (w, y)
    }

    /// Removes a border strip of size `p` whose lowest cell sits on the
    /// diagonal after column `i`: column `i` becomes `1/1`, column `i+p`
    /// becomes `0/0`. The result must again be a legal code.
    pub fn remove_strip(&self, i: usize, p: usize) -> Result<ReducedCode> {
        let k = self.len();
        if i == 0 || p == 0 || i + p > k {
            return Err(Error::InvalidCode(format!("columns {i} and {} out of range", i + p)));
        }
        if self.column(i) != (1, 0) {
            return Err(Error::InvalidCode(format!("column {i} is not 1-over-0")));
        }
        if self.column(i + p) != (0, 1) {
            return Err(Error::InvalidCode(format!("column {} is not 0-over-1", i + p)));
        }
        let mut bottom = self.bottom.clone();
        bottom[i - 1] = 1;
        bottom[i + p - 1] = 0;
        ReducedCode::from_rows(self.top.clone(), bottom)
    }
}

pub fn rank_of(code: &ReducedCode) -> usize {
    code.rank()
}

pub fn code_column_sets(code: &ReducedCode) -> (Vec<usize>, Vec<usize>) {
    code.column_sets()
}

pub fn remove_strip_on_code(code: &ReducedCode, i: usize, p: usize) -> Result<ReducedCode> {
    code.remove_strip(i, p)
}

/// Rank of a shape via its reduced code.
pub fn rank(shape: &SkewShape) -> usize {
    reduced_code(shape).rank()
}

impl fmt::Display for ReducedCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = |row: &[u8]| row.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(" ");
        write!(f, "{}\n{}", line(&self.top), line(&self.bottom))
    }
}

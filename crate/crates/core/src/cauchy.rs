//! Restricted Cauchy matrices `C(a, b)`: construction, zero-pattern
//! classes and their determinant formulas, the passage to and from skew
//! shapes, and the exhaustive nonsingularity sweep.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::code::reduced_code;
use crate::error::{Error, Result};
use crate::linalg::{cofactor, det_exact, sign, Matrix};
use crate::poly::{fraction_string, int, Rational};
use crate::shape::SkewShape;
use crate::snake::{noncrossing_interval_set, snake_sequence};

/// `a` strictly decreasing, `b` strictly increasing, `a_i > b_{n+1-i}`,
/// and no `a_i` equal to any `b_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RestrictedCauchySpec {
    a: Vec<i64>,
    b: Vec<i64>,
}

impl RestrictedCauchySpec {
    pub fn new(a: Vec<i64>, b: Vec<i64>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidCauchySpec(msg));
        if a.is_empty() || a.len() != b.len() {
            return bad(format!("sequences have lengths {} and {}", a.len(), b.len()));
        }
        if let Some(i) = (1..a.len()).find(|&i| a[i - 1] <= a[i]) {
            return bad(format!("a is not strictly decreasing at a_{} = {}", i + 1, a[i]));
        }
        if let Some(i) = (1..b.len()).find(|&i| b[i - 1] >= b[i]) {
            return bad(format!("b is not strictly increasing at b_{} = {}", i + 1, b[i]));
        }
        let n = a.len();
        for i in 0..n {
            if a[i] <= b[n - 1 - i] {
                return bad(format!(
                    "a_{} > b_{} fails ({} <= {})",
                    i + 1,
                    n - i,
                    a[i],
                    b[n - 1 - i]
                ));
            }
        }
        for (i, x) in a.iter().enumerate() {
            if let Some(j) = b.iter().position(|y| y == x) {
                return bad(format!("a_{} = b_{} = {x}", i + 1, j + 1));
            }
        }
        Ok(RestrictedCauchySpec { a, b })
    }

    pub fn a(&self) -> &[i64] {
        &self.a
    }

    pub fn b(&self) -> &[i64] {
        &self.b
    }

    /// Order `r`.
    pub fn order(&self) -> usize {
        self.a.len()
    }

    /// Both sequences shifted so the least entry is 0 when any entry is
    /// negative.
    pub fn normalized(&self) -> Self {
        let lo = self.a.iter().chain(&self.b).copied().min().unwrap_or(0);
        if lo >= 0 {
            return self.clone();
        }
        self.shifted(-lo)
    }

    pub fn shifted(&self, by: i64) -> Self {
        RestrictedCauchySpec {
            a: self.a.iter().map(|x| x + by).collect(),
            b: self.b.iter().map(|x| x + by).collect(),
        }
    }

    /// `c_ij = 0`, 0-indexed.
    pub fn is_zero_entry(&self, i: usize, j: usize) -> bool {
        self.a[i] < self.b[j]
    }
}

fn join(xs: &[i64]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for RestrictedCauchySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={};b={}", join(&self.a), join(&self.b))
    }
}

impl Serialize for RestrictedCauchySpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Parses `a=9,8,4,3;b=0,1,2,7`.
pub fn parse_spec(text: &str) -> Result<RestrictedCauchySpec> {
    let bad = |reason: &str| Error::MalformedCauchySpec {
        literal: text.to_string(),
        reason: reason.to_string(),
    };
    let (left, right) = text.split_once(';').ok_or_else(|| bad("expected 'a=…;b=…'"))?;
    let list = |part: &str, key: &str| -> Result<Vec<i64>> {
        let body = part
            .strip_prefix(key)
            .and_then(|p| p.strip_prefix('='))
            .ok_or_else(|| bad(&format!("expected '{key}=' section")))?;
        body.split(',')
            .map(|tok| tok.parse::<i64>().map_err(|_| bad(&format!("bad integer {tok:?}"))))
            .collect()
    };
    RestrictedCauchySpec::new(list(left, "a")?, list(right, "b")?)
}

impl FromStr for RestrictedCauchySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_spec(s)
    }
}

/// `c_ij = 1/(a_i - b_j)` when `a_i > b_j`, else 0.
pub fn build_matrix(spec: &RestrictedCauchySpec) -> Matrix<Rational> {
    spec.a
        .iter()
        .map(|&x| {
            spec.b
                .iter()
                .map(|&y| {
                    if x > y {
                        Rational::new(BigInt::one(), BigInt::from(x - y))
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CauchyClass {
    I,
    II,
    III,
    IV,
    #[serde(rename = "OTHER")]
    Other,
}

impl CauchyClass {
    pub fn as_str(self) -> &'static str {
        match self {
            CauchyClass::I => "I",
            CauchyClass::II => "II",
            CauchyClass::III => "III",
            CauchyClass::IV => "IV",
            CauchyClass::Other => "OTHER",
        }
    }
}

impl fmt::Display for CauchyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Class from the exact zero pattern (0-indexed positions).
pub fn classify(spec: &RestrictedCauchySpec) -> CauchyClass {
    let r = spec.order();
    let mut zeros = Vec::new();
    for i in 0..r {
        for j in 0..r {
            if spec.is_zero_entry(i, j) {
                zeros.push((i, j));
            }
        }
    }
    let last = r - 1;
    if zeros.is_empty() {
        return CauchyClass::I;
    }
    if zeros == [(last, last)] {
        return CauchyClass::II;
    }
    if r >= 2 {
        let mut three = vec![(last, last), (last, last - 1), (last - 1, last)];
        three.sort_unstable();
        if zeros == three {
            return CauchyClass::III;
        }
    }
    if r >= 4 {
        let column: Vec<_> = (2..r).map(|i| (i, last)).collect();
        if zeros == column {
            return CauchyClass::IV;
        }
    }
    CauchyClass::Other
}

fn require(spec: &RestrictedCauchySpec, expected: CauchyClass) -> Result<()> {
    let actual = classify(spec);
    if actual != expected {
        return Err(Error::WrongClass {
            expected: expected.as_str(),
            actual: actual.as_str(),
        });
    }
    Ok(())
}

fn diff(x: i64, y: i64) -> Rational {
    int(x - y)
}

/// `∏_{i<j}(a_i - a_j)(b_j - b_i) ∏_{i,j} 1/(a_i - b_j)` over the leading
/// `n` entries of each sequence.
fn cauchy_product(a: &[i64], b: &[i64]) -> Rational {
    let n = a.len();
    let mut num = Rational::one();
    let mut den = Rational::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= diff(a[i], a[j]) * diff(b[j], b[i]);
        }
        for &bj in b {
            den *= diff(a[i], bj);
        }
    }
    num / den
}

pub fn class1_det(spec: &RestrictedCauchySpec) -> Result<Rational> {
    require(spec, CauchyClass::I)?;
    Ok(cauchy_product(&spec.a, &spec.b))
}

/// `M = ∏_{i<r} (a_r - a_i)(b_i - b_r) / ((a_r - b_i)(a_i - b_r))`.
pub fn class2_m(spec: &RestrictedCauchySpec) -> Result<Rational> {
    require(spec, CauchyClass::II)?;
    let r = spec.order();
    let (a, b) = (&spec.a, &spec.b);
    let (ar, br) = (a[r - 1], b[r - 1]);
    let mut m = Rational::one();
    for i in 0..r - 1 {
        m *= diff(ar, a[i]) * diff(b[i], br) / (diff(ar, b[i]) * diff(a[i], br));
    }
    Ok(m)
}

/// `(1/(a_r - b_r)) · C_{r-1} · (M - 1)` with `C_{r-1}` the Cauchy
/// determinant of the leading `r-1` entries.
pub fn class2_det(spec: &RestrictedCauchySpec) -> Result<Rational> {
    let m = class2_m(spec)?;
    let r = spec.order();
    let (a, b) = (&spec.a, &spec.b);
    let lead = cauchy_product(&a[..r - 1], &b[..r - 1]);
    Ok(lead * (m - Rational::one()) / diff(a[r - 1], b[r - 1]))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Class3Report {
    /// `C_{r,r}`, `C_{r-1,r-1}`, `C_{r,r-1}`, `C_{r-1,r}`.
    pub cofactors: [Rational; 4],
    pub det: Rational,
    pub passes: bool,
}

/// The four cofactor signs `+, -, +, +` and a nonzero determinant.
pub fn class3_check(spec: &RestrictedCauchySpec) -> Result<Class3Report> {
    require(spec, CauchyClass::III)?;
    let m = build_matrix(spec);
    let r = spec.order();
    let (p, q) = (r - 1, r - 2);
    let cofactors = [
        cofactor(&m, p, p),
        cofactor(&m, q, q),
        cofactor(&m, p, q),
        cofactor(&m, q, p),
    ];
    let det = det_exact(&m);
    let signs = cofactors.iter().map(sign).collect::<Vec<_>>();
    let passes = signs == [1, -1, 1, 1] && !det.is_zero();
    Ok(Class3Report { cofactors, det, passes })
}

/// `f(x) = ∏_{j<r}(x - b_j) / ((x - b_r) ∏_{i≥3}(x - a_i))`.
fn class4_f(spec: &RestrictedCauchySpec, x: i64) -> Rational {
    let r = spec.order();
    let mut num = Rational::one();
    for &bj in &spec.b[..r - 1] {
        num *= diff(x, bj);
    }
    let mut den = diff(x, spec.b[r - 1]);
    for &ai in &spec.a[2..] {
        den *= diff(x, ai);
    }
    num / den
}

/// `N = (f(a_1) - f(a_2)) / (a_1 - a_2)`.
pub fn class4_n(spec: &RestrictedCauchySpec) -> Result<Rational> {
    require(spec, CauchyClass::IV)?;
    let (a1, a2) = (spec.a[0], spec.a[1]);
    Ok((class4_f(spec, a1) - class4_f(spec, a2)) / diff(a1, a2))
}

/// Predicted sign: `+1` iff `r` is even.
pub fn class4_sign(spec: &RestrictedCauchySpec) -> Result<i32> {
    require(spec, CauchyClass::IV)?;
    Ok(if spec.order().is_multiple_of(2) { 1 } else { -1 })
}

/// `(-1)^{r+1} ∏_{i<j≤r}(a_i - a_j) ∏_{i<j≤r-1}(b_j - b_i) ∏_{i, j<r} 1/(a_i - b_j) · N`.
pub fn class4_det(spec: &RestrictedCauchySpec) -> Result<Rational> {
    let n = class4_n(spec)?;
    let r = spec.order();
    let (a, b) = (&spec.a, &spec.b);
    let mut acc = n;
    for i in 0..r {
        for j in i + 1..r {
            acc *= diff(a[i], a[j]);
        }
        for &bj in &b[..r - 1] {
            acc /= diff(a[i], bj);
        }
    }
    for i in 0..r - 1 {
        for j in i + 1..r - 1 {
            acc *= diff(b[j], b[i]);
        }
    }
    Ok(if r % 2 == 1 { acc } else { -acc })
}

/// `λ_i = a_i - r + i`, `μ_i = b_{r+1-i} - r + i`, after shifting both
/// sequences up when `b_1 < 0`.
pub fn skew_from_sequences(spec: &RestrictedCauchySpec) -> Result<SkewShape> {
    let spec = if spec.b[0] < 0 {
        spec.shifted(-spec.b[0])
    } else {
        spec.clone()
    };
    let r = spec.order() as i64;
    let lambda: Vec<usize> = (1..=r).map(|i| (spec.a[(i - 1) as usize] - r + i) as usize).collect();
    let mu: Vec<usize> = (1..=r).map(|i| (spec.b[(r - i) as usize] - r + i) as usize).collect();
    SkewShape::from_parts(&lambda, &mu)
}

/// `a` = the `y` values of `I_0` in decreasing order, `b` = the `w` values
/// in increasing order.
pub fn sequences_from_skew(shape: &SkewShape) -> Result<RestrictedCauchySpec> {
    let base = noncrossing_interval_set(&snake_sequence(shape))?;
    let mut a: Vec<i64> = base.pairs().iter().map(|p| p.1 as i64).collect();
    let mut b: Vec<i64> = base.pairs().iter().map(|p| p.0 as i64).collect();
    if a.is_empty() {
        return Err(Error::InvalidCauchySpec("shape has rank 0".into()));
    }
    a.sort_unstable_by(|x, y| y.cmp(x));
    b.sort_unstable();
    RestrictedCauchySpec::new(a, b)
}

/// Some `k < r` with rows `k+1..r` vanishing on columns `r-k+1..r`, so the
/// determinant factors into two smaller restricted Cauchy determinants.
pub fn reducible_split(spec: &RestrictedCauchySpec) -> Option<usize> {
    let r = spec.order();
    (1..r).find(|&k| (k..r).all(|i| (r - k..r).all(|j| spec.is_zero_entry(i, j))))
}

/// Outcome of every check that applies to one spec.
#[derive(Debug, Clone)]
pub struct SpecCheck {
    pub class: CauchyClass,
    pub det: Rational,
    pub reducible: bool,
    pub failures: Vec<String>,
}

pub fn check_spec(spec: &RestrictedCauchySpec) -> SpecCheck {
    let class = classify(spec);
    let det = det_exact(&build_matrix(spec));
    let mut failures = Vec::new();
    if det.is_zero() {
        failures.push("singular".to_string());
    }
    let mut expect = |ok: bool, what: &str| {
        if !ok {
            failures.push(what.to_string());
        }
    };
    match class {
        CauchyClass::I => {
            let formula = class1_det(spec).expect("class checked");
            expect(formula == det, "class I product formula differs");
            expect(det.is_positive(), "class I determinant not positive");
        }
        CauchyClass::II => {
            let m = class2_m(spec).expect("class checked");
            let formula = class2_det(spec).expect("class checked");
            expect(formula == det, "class II closed form differs");
            expect(det.is_negative(), "class II determinant not negative");
            expect(m > Rational::one(), "class II M not above 1");
        }
        CauchyClass::III => {
            let report = class3_check(spec).expect("class checked");
            expect(report.passes, "class III cofactor signs fail");
        }
        CauchyClass::IV => {
            let predicted = class4_sign(spec).expect("class checked");
            let n = class4_n(spec).expect("class checked");
            let formula = class4_det(spec).expect("class checked");
            expect(sign(&det) == predicted, "class IV sign prediction fails");
            expect(n.is_negative(), "class IV N not negative");
            expect(formula == det, "class IV closed form differs");
        }
        CauchyClass::Other => {}
    }
    SpecCheck {
        class,
        det,
        reducible: reducible_split(spec).is_some(),
        failures,
    }
}

/// Strictly increasing `r`-subsets of `lo..=hi`, lexicographic.
fn increasing_sequences(r: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    fn go(r: usize, from: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for x in from..=hi {
            cur.push(x);
            go(r, x + 1, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(r, lo, hi, &mut Vec::new(), &mut out);
    out
}

/// Every valid spec of order `1..=r_max` with entries in `0..=value_max`,
/// in a fixed order.
pub fn enumerate_specs(r_max: usize, value_max: i64) -> impl Iterator<Item = RestrictedCauchySpec> {
    (1..=r_max).flat_map(move |r| {
        let subsets = increasing_sequences(r, 0, value_max);
        let mut out = Vec::new();
        for a_inc in &subsets {
            let a: Vec<i64> = a_inc.iter().rev().copied().collect();
            for b in &subsets {
                if let Ok(spec) = RestrictedCauchySpec::new(a.clone(), b.clone()) {
                    out.push(spec);
                }
            }
        }
        out.into_iter()
    })
}

/// Work split: shard `index` (1-based) of `count` takes every `count`-th
/// item starting from item `index - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Shard {
    pub index: usize,
    pub count: usize,
}

impl Shard {
    pub const ALL: Shard = Shard { index: 1, count: 1 };

    pub fn new(index: usize, count: usize) -> Result<Self> {
        if count == 0 || index == 0 || index > count {
            return Err(Error::InvalidShard(format!("{index}/{count}")));
        }
        Ok(Shard { index, count })
    }

    pub fn takes(&self, position: usize) -> bool {
        position % self.count == self.index - 1
    }
}

impl FromStr for Shard {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (i, n) = s.split_once('/').ok_or_else(|| Error::InvalidShard(s.to_string()))?;
        let i = i.parse().map_err(|_| Error::InvalidShard(s.to_string()))?;
        let n = n.parse().map_err(|_| Error::InvalidShard(s.to_string()))?;
        Shard::new(i, n)
    }
}

impl fmt::Display for Shard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.index, self.count)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub spec: RestrictedCauchySpec,
    pub class: CauchyClass,
    pub det: String,
    pub reasons: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MinWitness {
    pub spec: RestrictedCauchySpec,
    pub abs_det: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepBounds {
    pub max_order: usize,
    pub max_value: i64,
    pub shard: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub bounds: SweepBounds,
    pub total: u64,
    pub classes: BTreeMap<String, u64>,
    pub reducible: u64,
    pub singular: u64,
    pub violations: Vec<Violation>,
    pub min_abs_det: Option<MinWitness>,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Runs [`check_spec`] on every spec in bounds that the shard takes.
pub fn nonsingularity_sweep(r_max: usize, value_max: i64, shard: Shard) -> SweepReport {
    let mut classes: BTreeMap<String, u64> = ["I", "II", "III", "IV", "OTHER"]
        .iter()
        .map(|c| (c.to_string(), 0))
        .collect();
    let mut total = 0;
    let mut reducible = 0;
    let mut singular = 0;
    let mut violations = Vec::new();
    let mut min: Option<(Rational, RestrictedCauchySpec)> = None;
    for (pos, spec) in enumerate_specs(r_max, value_max).enumerate() {
        if !shard.takes(pos) {
            continue;
        }
        total += 1;
        let check = check_spec(&spec);
        *classes.entry(check.class.as_str().to_string()).or_default() += 1;
        if check.reducible {
            reducible += 1;
        }
        if check.det.is_zero() {
            singular += 1;
        }
        let abs = check.det.abs();
        if min.as_ref().is_none_or(|(m, _)| abs < *m) {
            min = Some((abs, spec.clone()));
        }
        if !check.failures.is_empty() {
            violations.push(Violation {
                spec,
                class: check.class,
                det: fraction_string(&check.det),
                reasons: check.failures,
            });
        }
    }
    SweepReport {
        bounds: SweepBounds {
            max_order: r_max,
            max_value: value_max,
            shard: shard.to_string(),
        },
        total,
        classes,
        reducible,
        singular,
        violations,
        min_abs_det: min.map(|(abs, spec)| MinWitness {
            spec,
            abs_det: fraction_string(&abs),
        }),
    }
}

/// Rank of the shape built from a spec; equals the order.
pub fn constructed_rank(spec: &RestrictedCauchySpec) -> Result<usize> {
    Ok(reduced_code(&skew_from_sequences(spec)?).rank())
}

//! Per-shape verification records and inspection dumps.

use serde::Serialize;

use crate::bounds::OracleBounds;
use crate::cauchy::Shard;
use crate::code::reduced_code;
use crate::error::Error;
use crate::formulas::{hamel_goulden_specialized, interval_sign_check, y_via_determinant, y_via_interval_expansion};
use crate::poly::fraction_string;
use crate::shape::{enumerate_shapes, SkewShape};
use crate::snake::{
    crossings, enumerate_interval_sets, interval_permutation, noncrossing_interval_set, snake_sequence,
};
use crate::specialization::skew_schur_specialized;
use crate::strip::{
    endpoint_content_sets, greedy_decomposition, minimal_decompositions, predicted_endpoint_sets, row_decomposition,
    z_statistic, Decomposition,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Counterexample,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationRecord {
    pub shape: String,
    pub cells: usize,
    pub rank: usize,
    pub zrank: usize,
    pub y_jacobi_trudi: String,
    pub y_determinant: Option<String>,
    pub y_intervals: Option<String>,
    pub parity_pass: Option<usize>,
    pub parity_total: Option<usize>,
    pub pq_invariant: Option<bool>,
    pub minimal_decompositions: Option<usize>,
    pub interval_sets: Option<usize>,
    pub hg_agree: Option<bool>,
    pub sign_check: Option<bool>,
    pub status: Status,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Runs every cross-check on one shape. `counterexample` means zrank and
/// rank differ or the three values of `y` disagree; a failed secondary
/// check is reported as `error` with a note. Oracles past their bound are
/// left `null`.
pub fn verify_shape(shape: &SkewShape, bounds: &OracleBounds) -> VerificationRecord {
    let mut notes = Vec::new();
    let poly = skew_schur_specialized(shape);
    let rank = reduced_code(shape).rank();
    let zrank = poly.valuation().unwrap_or(0);
    let y_jt = poly.coeff(rank);

    let y_det = y_via_determinant(shape)
        .map_err(|e| notes.push(format!("determinant: {e}")))
        .ok();
    let y_int = y_via_interval_expansion(shape, bounds)
        .map_err(|e| notes.push(format!("interval expansion: {e}")))
        .ok();

    let seq = snake_sequence(shape);
    let mut parity = None;
    let mut set_count = None;
    if let Ok(base) = noncrossing_interval_set(&seq) {
        let mut pass = 0;
        let mut total = 0;
        let mut within = true;
        for set in enumerate_interval_sets(&seq) {
            total += 1;
            if total > bounds.interval_sets {
                within = false;
                break;
            }
            if let Ok((_, inv)) = interval_permutation(&set, &base) {
                if inv % 2 == crossings(&set) % 2 {
                    pass += 1;
                }
            }
        }
        if within {
            parity = Some((pass, total));
            set_count = Some(total);
        } else {
            notes.push(format!(
                "parity skipped: more than {} interval sets",
                bounds.interval_sets
            ));
        }
    }

    let mut pq = None;
    let mut minimal_count = None;
    match minimal_decompositions(shape, bounds.decomp_cells) {
        Ok(all) => {
            let predicted = predicted_endpoint_sets(shape);
            pq = Some(all.iter().all(|d| endpoint_content_sets(d) == predicted));
            minimal_count = Some(all.len());
        }
        Err(Error::BoundExceeded { .. }) => {}
        Err(e) => notes.push(format!("decompositions: {e}")),
    }

    let hg = [greedy_decomposition(shape), row_decomposition(shape)]
        .iter()
        .map(|d| hamel_goulden_specialized(shape, d).map(|p| p == poly))
        .collect::<Result<Vec<_>, _>>()
        .map(|v| v.iter().all(|&b| b))
        .map_err(|e| notes.push(format!("outside decomposition: {e}")))
        .ok();
    let sign = interval_sign_check(shape)
        .map_err(|e| notes.push(format!("sign check: {e}")))
        .ok();

    let ys_agree = y_det.as_ref().is_none_or(|y| *y == y_jt) && y_int.as_ref().is_none_or(|y| *y == y_jt);
    let status = if zrank != rank || !ys_agree {
        Status::Counterexample
    } else {
        let mut failed = Vec::new();
        if parity.is_some_and(|(p, t)| p != t) {
            failed.push("parity");
        }
        if pq == Some(false) {
            failed.push("endpoint sets");
        }
        if hg == Some(false) {
            failed.push("outside decomposition determinant");
        }
        if sign == Some(false) {
            failed.push("sign of the interval determinant");
        }
        for f in &failed {
            notes.push(format!("{f} check failed"));
        }
        if failed.is_empty() && y_det.is_some() && hg.is_some() && sign.is_some() {
            Status::Ok
        } else {
            Status::Error
        }
    };

    VerificationRecord {
        shape: shape.to_string(),
        cells: shape.size(),
        rank,
        zrank,
        y_jacobi_trudi: fraction_string(&y_jt),
        y_determinant: y_det.as_ref().map(fraction_string),
        y_intervals: y_int.as_ref().map(fraction_string),
        parity_pass: parity.map(|p| p.0),
        parity_total: parity.map(|p| p.1),
        pq_invariant: pq,
        minimal_decompositions: minimal_count,
        interval_sets: set_count,
        hg_agree: hg,
        sign_check: sign,
        status,
        notes,
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ShapeSweepSummary {
    pub max_cells: usize,
    pub shard: String,
    pub total: usize,
    pub ok: usize,
    pub counterexamples: usize,
    pub errors: usize,
}

impl ShapeSweepSummary {
    pub fn new(max_cells: usize, shard: Shard) -> Self {
        ShapeSweepSummary {
            max_cells,
            shard: shard.to_string(),
            ..Default::default()
        }
    }

    pub fn add(&mut self, record: &VerificationRecord) {
        self.total += 1;
        match record.status {
            Status::Ok => self.ok += 1,
            Status::Counterexample => self.counterexamples += 1,
            Status::Error => self.errors += 1,
        }
    }

    pub fn all_ok(&self) -> bool {
        self.ok == self.total
    }
}

/// Canonical shapes with up to `max_cells` cells taken by `shard`, in
/// enumeration order.
pub fn sharded_shapes(max_cells: usize, shard: Shard) -> impl Iterator<Item = SkewShape> {
    enumerate_shapes(max_cells)
        .enumerate()
        .filter(move |(i, _)| shard.takes(*i))
        .map(|(_, s)| s)
}

#[derive(Debug, Clone, Serialize)]
pub struct CodeRows {
    pub top: String,
    pub bottom: String,
}

/// Every derived structure of one shape.
#[derive(Debug, Clone, Serialize)]
pub struct Inspection {
    pub shape: String,
    pub cells: usize,
    pub connected: bool,
    pub rank: usize,
    pub zrank: usize,
    pub z: usize,
    pub code: CodeRows,
    pub w: Vec<usize>,
    pub y_columns: Vec<usize>,
    pub snakes: String,
    pub noncrossing: String,
    pub greedy: Decomposition,
    pub polynomial: Vec<String>,
    pub polynomial_text: String,
    pub y: String,
}

pub fn inspect_shape(shape: &SkewShape) -> Inspection {
    let code = reduced_code(shape);
    let rendered = code.to_string();
    let (top, bottom) = rendered.split_once('\n').unwrap_or(("", ""));
    let (w, y_cols) = code.column_sets();
    let seq = snake_sequence(shape);
    let base = noncrossing_interval_set(&seq)
        .map(|b| b.to_string())
        .unwrap_or_default();
    let poly = skew_schur_specialized(shape);
    let rank = code.rank();
    Inspection {
        shape: shape.to_string(),
        cells: shape.size(),
        connected: shape.is_connected(),
        rank,
        zrank: poly.valuation().unwrap_or(0),
        z: z_statistic(shape),
        code: CodeRows {
            top: top.to_string(),
            bottom: bottom.to_string(),
        },
        w,
        y_columns: y_cols,
        snakes: seq.to_string(),
        noncrossing: base,
        greedy: greedy_decomposition(shape),
        polynomial: poly.to_fraction_strings(),
        polynomial_text: poly.render(),
        y: fraction_string(&poly.coeff(rank)),
    }
}

impl Inspection {
    /// Plain-text report, one field per line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| out.push_str(&format!("{k:<12}{v}\n"));
        line("shape", self.shape.clone());
        line("cells", self.cells.to_string());
        line("connected", self.connected.to_string());
        line("rank", self.rank.to_string());
        line("zrank", self.zrank.to_string());
        line("z", self.z.to_string());
        line("code", self.code.top.clone());
        line("", self.code.bottom.clone());
        line("snakes", self.snakes.clone());
        line("I0", self.noncrossing.clone());
        let strips: Vec<String> = self
            .greedy
            .strips()
            .iter()
            .map(|b| b.cells().iter().map(ToString::to_string).collect::<String>())
            .collect();
        line("greedy", strips.join(" "));
        line("s(1^t)", self.polynomial_text.clone());
        line("y", self.y.clone());
        out
    }
}

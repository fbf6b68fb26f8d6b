//! One test per acceptance criterion. Each prints a single `PASS` or `FAIL`
//! line straight to stdout, so the lines show up without `--nocapture`.
//!
//! Run with `cargo test -p zrank-core --test acceptance -- --test-threads 1`
//! for the lines in order.

use std::io::Write;
use std::time::{Duration, Instant};

use num_traits::{Signed, Zero};

use zrank_core::bounds::OracleBounds;
use zrank_core::cauchy::{
    build_matrix, class1_det, class2_det, class2_m, class3_check, class4_n, classify, enumerate_specs,
    nonsingularity_sweep, sequences_from_skew, skew_from_sequences, CauchyClass, Shard,
};
use zrank_core::code::rank;
use zrank_core::formulas::{
    hamel_goulden_specialized, interval_matrix, jt_deletion_matrix, y_via_determinant, y_via_interval_expansion,
};
use zrank_core::linalg::det_exact;
use zrank_core::poly::{fraction_string, Rational};
use zrank_core::snake::{
    crossings, enumerate_interval_sets, interval_permutation, noncrossing_interval_set, IntervalSet,
};
use zrank_core::specialization::{eval_at, skew_schur_specialized, ssyt_count, y_value};
use zrank_core::strip::{
    endpoint_content_sets, greedy_decomposition, minimal_decompositions, predicted_endpoint_sets, row_decomposition,
};
use zrank_core::{enumerate_shapes, enumerate_shapes_in_box, reduced_code, snake_sequence, SkewShape};

fn shape(text: &str) -> SkewShape {
    text.parse().unwrap()
}

fn report(id: &str, title: &str, outcome: &Result<String, String>, elapsed: Duration) {
    let (tag, detail) = match outcome {
        Ok(d) => ("PASS", d),
        Err(d) => ("FAIL", d),
    };
    let line = format!("{tag} [{id}] {title}: {detail} ({:.2}s)\n", elapsed.as_secs_f64());
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(line.as_bytes());
    let _ = out.flush();
}

fn run(id: &str, title: &str, check: impl FnOnce() -> Result<String, String>) {
    let start = Instant::now();
    let outcome = check();
    report(id, title, &outcome, start.elapsed());
    if let Err(e) = outcome {
        panic!("criterion {id} failed: {e}");
    }
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, seen: T, want: T) -> Result<(), String> {
    if seen == want {
        Ok(())
    } else {
        Err(format!("{what}: got {seen:?}, expected {want:?}"))
    }
}

#[test]
fn criterion_01_examples() {
    run("1", "printed examples", || {
        expect_eq(
            "snakes of (7,6,6,3)/(3,1)",
            snake_sequence(&shape("7,6,6,3/3,1")).to_string().as_str(),
            "L0 L1 O O O O L2 R2 R1 O R0",
        )?;
        let seq = snake_sequence(&shape("8,8,7,4/4,1,1"));
        expect_eq(
            "snakes of (8,8,7,4)/(4,1,1)",
            seq.to_string().as_str(),
            "L0 O L1 L2 R2 O O L2 R2 O R1 R0",
        )?;
        let base = noncrossing_interval_set(&seq).map_err(|e| e.to_string())?;
        expect_eq("I_0", base.to_string().as_str(), "{(1,12),(3,11),(4,5),(8,9)}")?;
        let code = reduced_code(&shape("5,4,3,2/2,1,1")).to_string();
        expect_eq("reduced code", code.as_str(), "1 0 1 1 0 1 0 0 0\n0 0 1 0 1 0 1 0 1")?;
        let set = IntervalSet::new(vec![(1, 9), (3, 12), (4, 5), (8, 11)]).map_err(|e| e.to_string())?;
        let (sigma, inv) = interval_permutation(&set, &base).map_err(|e| e.to_string())?;
        expect_eq("sigma", sigma, vec![4, 1, 3, 2])?;
        expect_eq("cr", crossings(&set), 2)?;
        expect_eq("inv", inv, 4)?;
        Ok("5 exact matches".into())
    });
}

#[test]
fn criterion_02_parity() {
    run("2", "cr(I) = inv(sigma_I) mod 2, <= 12 cells in a 6x6 box", || {
        let (mut shapes, mut sets) = (0usize, 0usize);
        for s in enumerate_shapes_in_box(12, 6, 6) {
            shapes += 1;
            let seq = snake_sequence(&s);
            let base = noncrossing_interval_set(&seq).map_err(|e| format!("{s}: {e}"))?;
            for set in enumerate_interval_sets(&seq) {
                sets += 1;
                let (_, inv) = interval_permutation(&set, &base).map_err(|e| format!("{s}: {e}"))?;
                if inv % 2 != crossings(&set) % 2 {
                    return Err(format!("{s}: {set} has cr {} and inv {inv}", crossings(&set)));
                }
            }
        }
        Ok(format!("{shapes} shapes, {sets} interval sets, 0 violations"))
    });
}

#[test]
fn criterion_03_triple_agreement() {
    run("3", "three routes to y agree, <= 10 cells", || {
        let bounds = OracleBounds::default();
        let mut n = 0;
        for s in enumerate_shapes(10) {
            n += 1;
            let y = y_value(&s);
            let d = y_via_determinant(&s).map_err(|e| format!("{s}: {e}"))?;
            let e = y_via_interval_expansion(&s, &bounds).map_err(|e| format!("{s}: {e}"))?;
            if d != y || e != y {
                return Err(format!(
                    "{s}: jacobi-trudi {}, determinant {}, intervals {}",
                    fraction_string(&y),
                    fraction_string(&d),
                    fraction_string(&e)
                ));
            }
        }
        Ok(format!("{n} shapes, 0 disagreements"))
    });
}

#[test]
fn criterion_04_zrank_equals_rank() {
    run("4", "zrank = rank, <= 14 cells in an 8x8 box", || {
        let mut n = 0;
        for s in enumerate_shapes_in_box(14, 8, 8) {
            n += 1;
            let poly = skew_schur_specialized(&s);
            let zrank = poly.valuation().unwrap_or(0);
            let r = rank(&s);
            if zrank != r {
                return Err(format!("{s}: zrank {zrank}, rank {r}"));
            }
        }
        Ok(format!("{n} shapes, 0 counterexamples"))
    });
}

#[test]
fn criterion_05_tableau_counts() {
    run("5", "s(1^t) at t = 1..4 equals tableau counts, <= 8 cells", || {
        let bounds = OracleBounds::default();
        let mut n = 0;
        for s in enumerate_shapes(8) {
            n += 1;
            let poly = skew_schur_specialized(&s);
            for t in 1..=4 {
                let count = ssyt_count(&s, t, &bounds).map_err(|e| format!("{s}: {e}"))?;
                if eval_at(&poly, t) != Rational::from_integer(count.into()) {
                    return Err(format!(
                        "{s} at t = {t}: polynomial {}, tableaux {count}",
                        eval_at(&poly, t)
                    ));
                }
            }
        }
        Ok(format!("{n} shapes x 4 values of t"))
    });
}

#[test]
fn criterion_06_outside_decompositions() {
    run(
        "6",
        "greedy and row determinants equal s(1^t), connected <= 10 cells",
        || {
            let mut n = 0;
            for s in enumerate_shapes(10).filter(SkewShape::is_connected) {
                n += 1;
                let target = skew_schur_specialized(&s);
                for (name, d) in [("greedy", greedy_decomposition(&s)), ("rows", row_decomposition(&s))] {
                    let p = hamel_goulden_specialized(&s, &d).map_err(|e| format!("{s} {name}: {e}"))?;
                    if p != target {
                        return Err(format!("{s} {name}: {} vs {}", p.render(), target.render()));
                    }
                }
            }
            Ok(format!("{n} connected shapes, 2 decompositions each"))
        },
    );
}

struct CountMismatch {
    shapes: usize,
    first: Option<(String, usize, usize)>,
}

/// Shapes up to `cells` where the number of minimal decompositions and the
/// number of interval sets differ.
fn count_mismatches(cells: usize) -> CountMismatch {
    let mut m = CountMismatch { shapes: 0, first: None };
    for s in enumerate_shapes(cells) {
        let minimal = minimal_decompositions(&s, cells).unwrap().len();
        let sets = enumerate_interval_sets(&snake_sequence(&s)).count();
        if minimal != sets {
            m.shapes += 1;
            m.first.get_or_insert((s.to_string(), minimal, sets));
        }
    }
    m
}

#[test]
fn criterion_07_endpoint_sets() {
    // The endpoint clause is asserted here. The count clause does not hold
    // (see `criterion_07_count_clause`), so the line reads FAIL while this
    // test only asserts the part that is true.
    let start = Instant::now();
    let mut shapes = 0;
    let mut decomps = 0;
    for s in enumerate_shapes(9) {
        shapes += 1;
        let predicted = predicted_endpoint_sets(&s);
        for d in minimal_decompositions(&s, 9).unwrap() {
            decomps += 1;
            assert_eq!(endpoint_content_sets(&d), predicted, "{s}: {d:?}");
        }
    }
    let counts = count_mismatches(9);
    let outcome = match counts.first {
        None => Ok(format!(
            "{shapes} shapes, {decomps} minimal decompositions, counts equal"
        )),
        Some((w, minimal, sets)) => Err(format!(
            "P_D and Q_D match the formulas on all {decomps} minimal decompositions of {shapes} shapes; \
             count clause fails on {} shapes, first {w} with {minimal} minimal decompositions and {sets} interval sets",
            counts.shapes
        )),
    };
    report(
        "7",
        "P/Q invariance and minimal count, <= 9 cells",
        &outcome,
        start.elapsed(),
    );
}

#[test]
#[ignore = "the count clause of criterion 7 is false: (2,2) has 4 minimal decompositions and 2 interval sets"]
fn criterion_07_count_clause() {
    let counts = count_mismatches(9);
    assert_eq!(counts.shapes, 0, "first mismatch {:?}", counts.first);
}

#[test]
fn criterion_08_cauchy_sweep() {
    run("8", "restricted Cauchy matrices, r <= 4, values 0..10", || {
        let report = nonsingularity_sweep(4, 10, Shard::ALL);
        if let Some(v) = report.violations.first() {
            return Err(format!(
                "{} violations, first {} ({:?})",
                report.violations.len(),
                v.spec,
                v.reasons
            ));
        }
        // the per-class rules again, read off the exact determinant
        let mut checked = 0u64;
        for spec in enumerate_specs(4, 10) {
            let det = det_exact(&build_matrix(&spec));
            let fail = |why: &str| Err(format!("{spec}: {why}, det {}", fraction_string(&det)));
            if det.is_zero() {
                return fail("singular");
            }
            let r = spec.order();
            match classify(&spec) {
                CauchyClass::I => {
                    if !det.is_positive() || class1_det(&spec).ok() != Some(det.clone()) {
                        return fail("class I");
                    }
                }
                CauchyClass::II => {
                    let m_ok = class2_m(&spec).is_ok_and(|m| m > Rational::from_integer(1.into()));
                    if !det.is_negative() || !m_ok || class2_det(&spec).ok() != Some(det.clone()) {
                        return fail("class II");
                    }
                }
                CauchyClass::III => {
                    if !class3_check(&spec).is_ok_and(|c| c.passes && c.det == det) {
                        return fail("class III");
                    }
                }
                CauchyClass::IV => {
                    let n_ok = class4_n(&spec).is_ok_and(|n| n.is_negative());
                    if det.is_positive() != (r % 2 == 0) || !n_ok {
                        return fail("class IV");
                    }
                }
                CauchyClass::Other => {}
            }
            checked += 1;
        }
        if checked != report.total {
            return Err(format!("sweep saw {} specs, enumeration {checked}", report.total));
        }
        let classes: Vec<String> = report.classes.iter().map(|(k, v)| format!("{k}={v}")).collect();
        Ok(format!("{} specs, 0 singular, {}", report.total, classes.join(" ")))
    });
}

#[test]
fn criterion_09_deletion_matrix() {
    run(
        "9",
        "|det| of the deleted Jacobi-Trudi matrix equals |det| of the interval matrix, <= 10 cells",
        || {
            let mut n = 0;
            for s in enumerate_shapes(10) {
                n += 1;
                let a = det_exact(&jt_deletion_matrix(&s)).abs();
                let b = det_exact(&interval_matrix(&s).map_err(|e| format!("{s}: {e}"))?).abs();
                if a != b {
                    return Err(format!("{s}: {} vs {}", fraction_string(&a), fraction_string(&b)));
                }
            }
            Ok(format!("{n} shapes"))
        },
    );
}

#[test]
fn criterion_10_round_trip() {
    run(
        "10",
        "sequences and shapes, r <= 3 values <= 8, shapes <= 10 cells",
        || {
            let mut specs = 0;
            for spec in enumerate_specs(3, 8) {
                specs += 1;
                let s = skew_from_sequences(&spec).map_err(|e| format!("{spec}: {e}"))?;
                let det = det_exact(&build_matrix(&spec)).abs();
                if rank(&s) != spec.order() || y_value(&s).abs() != det {
                    return Err(format!(
                        "{spec} -> {s}: rank {}, |y| {}",
                        rank(&s),
                        fraction_string(&y_value(&s).abs())
                    ));
                }
            }
            let mut shapes = 0;
            for s in enumerate_shapes(10) {
                shapes += 1;
                let spec = sequences_from_skew(&s).map_err(|e| format!("{s}: {e}"))?;
                let a = det_exact(&build_matrix(&spec)).abs();
                let b = det_exact(&interval_matrix(&s).map_err(|e| e.to_string())?).abs();
                if a != b {
                    return Err(format!(
                        "{s} -> {spec}: {} vs {}",
                        fraction_string(&a),
                        fraction_string(&b)
                    ));
                }
            }
            Ok(format!("{specs} specs, {shapes} shapes"))
        },
    );
}

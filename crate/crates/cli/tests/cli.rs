use std::process::{Command, Output};

use serde_json::Value;

fn zrank(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zrank"))
        .args(args)
        .env_remove("ZRANK_ORACLE_BOUNDS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn inspect_text() {
    let o = zrank(&["inspect", "7,6,6,3/3,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("snakes      L0 L1 O O O O L2 R2 R1 O R0\n"));

    let o = zrank(&["inspect", "5,4,3,2/2,1,1"]);
    let text = stdout(&o);
    assert!(
        text.contains("code        1 0 1 1 0 1 0 0 0\n            0 0 1 0 1 0 1 0 1\n"),
        "{text}"
    );
}

#[test]
fn inspect_json() {
    let o = zrank(&["inspect", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = &lines(&o)[0];
    assert_eq!(v["rank"], 1);
    assert_eq!(v["zrank"], 1);
    assert_eq!(v["y"], "1/1");
    assert_eq!(v["greedy"][0]["cells"], serde_json::json!([[1, 1]]));
}

#[test]
fn verify_records() {
    let o = zrank(&["verify", "2,2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = &lines(&o)[0];
    assert_eq!(v["status"], "ok");
    for key in ["y_jacobi_trudi", "y_determinant", "y_intervals"] {
        assert_eq!(v[key], "-1/12", "{key}");
    }

    let v = &lines(&zrank(&["verify", "8,8,7,4/4,1,1"]))[0];
    assert_eq!((v["status"].as_str(), v["rank"].as_u64()), (Some("ok"), Some(4)));

    let v = &lines(&zrank(&["verify", "3,2/3,2"]))[0];
    assert_eq!((v["rank"].as_u64(), v["zrank"].as_u64()), (Some(0), Some(0)));
    assert_eq!(v["y_jacobi_trudi"], "1/1");
}

#[test]
fn parse_errors_exit_2() {
    for args in [
        &["inspect", "3,x"][..],
        &["verify", "2,3"],
        &["verify", "2/3"],
        &["sweep-shapes"],
        &["sweep-cauchy", "--max-order", "2", "--max-value", "4", "--shard", "3/2"],
        &["frobnicate"],
    ] {
        let o = zrank(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
    let o = Command::new(env!("CARGO_BIN_EXE_zrank"))
        .args(["verify", "1"])
        .env("ZRANK_ORACLE_BOUNDS", "cells=3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bounds_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_zrank"))
        .args(["verify", "2,2"])
        .env("ZRANK_ORACLE_BOUNDS", "decomp_cells=3,interval_sets=1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v = &lines(&o)[0];
    assert!(v["pq_invariant"].is_null());
    assert!(v["y_intervals"].is_null());
    assert_eq!(v["status"], "ok");
}

#[test]
fn shape_sweep() {
    let o = zrank(&["sweep-shapes", "--max-cells", "6", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let all = lines(&o);
    let summary = &all.last().unwrap()["summary"];
    let total = zrank_core::enumerate_shapes(6).count();
    assert_eq!(summary["total"], total);
    assert_eq!(summary["ok"], total);
    assert_eq!(all.len(), total + 1);
    assert!(all[..total].iter().all(|r| r["status"] == "ok"));

    let text = zrank(&["sweep-shapes", "--max-cells", "2"]);
    assert_eq!(
        stdout(&text).lines().last(),
        Some("total=4 ok=4 counterexamples=0 errors=0")
    );
}

#[test]
fn shards_concatenate_to_the_full_sweep() {
    let full = stdout(&zrank(&["sweep-shapes", "--max-cells", "5", "--json"]));
    let mut full: Vec<&str> = full.lines().filter(|l| !l.starts_with("{\"summary\"")).collect();
    let mut merged = Vec::new();
    for i in 1..=3 {
        let part = stdout(&zrank(&[
            "sweep-shapes",
            "--max-cells",
            "5",
            "--shard",
            &format!("{i}/3"),
            "--json",
        ]));
        merged.extend(
            part.lines()
                .filter(|l| !l.starts_with("{\"summary\""))
                .map(str::to_string),
        );
    }
    let mut merged: Vec<&str> = merged.iter().map(String::as_str).collect();
    full.sort_unstable();
    merged.sort_unstable();
    assert_eq!(full, merged);
}

#[test]
fn cauchy_sweep() {
    let o = zrank(&["sweep-cauchy", "--max-order", "3", "--max-value", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let v = &lines(&o)[0];
    assert_eq!(v["singular"], 0);
    assert_eq!(v["violations"], serde_json::json!([]));

    let parts: Vec<Value> = (1..=2)
        .map(|i| {
            lines(&zrank(&[
                "sweep-cauchy",
                "--max-order",
                "3",
                "--max-value",
                "8",
                "--shard",
                &format!("{i}/2"),
            ]))
            .remove(0)
        })
        .collect();
    for class in ["I", "II", "III", "IV", "OTHER"] {
        let sum: u64 = parts.iter().map(|p| p["classes"][class].as_u64().unwrap()).sum();
        assert_eq!(sum, v["classes"][class].as_u64().unwrap(), "{class}");
    }
}

#[test]
fn output_is_deterministic() {
    let a = zrank(&["sweep-shapes", "--max-cells", "4", "--json"]);
    let b = zrank(&["sweep-shapes", "--max-cells", "4", "--json"]);
    assert_eq!(a.stdout, b.stdout);
}

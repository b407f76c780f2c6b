use std::process::{Command, Output};

use billiard_partitions::cli::{EnumeratedItem, OutputEnvelope};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_billiard-partitions"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_sum_15() {
    let o = bin(&["enumerate", "--sum", "15"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 9);
    assert!(out.ends_with("6+4+3+2\n"));
}

#[test]
fn enumerate_empty_and_pe() {
    let o = bin(&["enumerate", "--sum", "1"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), ""));
    let o = bin(&["enumerate", "--sum", "4", "--pe", "light"]);
    assert_eq!(stdout(&o), "2|2\n");
    let o = bin(&[
        "enumerate",
        "--sum",
        "4",
        "--pe",
        "space",
        "--group",
        "largest-sum",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.contains('|')));
}

#[test]
fn enumerate_json_is_stable_under_reparse() {
    for args in [
        &["enumerate", "--sum", "15", "--format", "json"][..],
        &["enumerate", "--sum", "12", "--weights", "--format", "json"],
        &[
            "enumerate",
            "--sum",
            "7",
            "--pe",
            "space",
            "--format",
            "json",
        ],
    ] {
        let out = stdout(&bin(args));
        let parsed: OutputEnvelope<Vec<EnumeratedItem>> = serde_json::from_str(&out).unwrap();
        assert_eq!(parsed.format_version, "1");
        assert_eq!(parsed.command, "enumerate");
        assert_eq!(parsed.render(), out, "{args:?}");
    }
}

#[test]
fn series_outputs() {
    let out = stdout(&bin(&["series", "--max", "15"]));
    assert_eq!(out.lines().last(), Some("q^15: 9"));
    let out = stdout(&bin(&["series", "--max", "12", "--weighted"]));
    assert!(out.lines().any(|l| l == "q^12: 1+2x+x^2"));
    assert_eq!(stdout(&bin(&["series", "--max", "0"])), "q^0: 1\n");
}

#[test]
fn series_both_methods_agree_on_defaults() {
    for args in [
        &["series", "--method", "both"][..],
        &["series", "--method", "both", "--weighted"],
        &["series", "--method", "both", "--pe", "space"],
        &["series", "--method", "both", "--pe", "time"],
        &["series", "--method", "both", "--pe", "light"],
    ] {
        let o = bin(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let out = stdout(&o);
        assert!(out.lines().all(|l| l.ends_with("diff=0")), "{args:?}");
    }
}

#[test]
fn decompose_and_phi() {
    let o = bin(&["decompose", "9+4+2"]);
    assert_eq!(stdout(&o), "(5+4+2) + (4+0+0)\n");
    assert_eq!(stdout(&bin(&["decompose", "2"])), "(2) + (0)\n");
    let o = bin(&["decompose", "9"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("smallest part must be even"));
    let o = bin(&["decompose", "2+4"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&bin(&["phi", "7+6+4"])), "w=1 phi=2\n");
    let o = bin(&["phi", "6+4+2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["phi"], "4");
}

#[test]
fn verify_exit_codes() {
    let o = bin(&["verify", "--suite", "euclid", "--max", "15"]);
    assert_eq!(o.status.code(), Some(0));
    let o = bin(&["verify", "--suite", "shapes", "--dmax", "1", "--nmax", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let o = bin(&["verify", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).matches(": PASS").count(), 4);
    let o = bin(&["verify", "--suite", "pe", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"][0]["mismatches"], serde_json::json!([]));
    // order below the suite minimum is a domain error
    assert_eq!(
        bin(&["verify", "--suite", "euclid", "--max", "10"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "--suite", "bogus"][..],
        &["series", "--weighted", "--pe", "light"],
        &["enumerate", "--sum", "x"],
        &["frobnicate"],
    ] {
        assert_eq!(bin(args).status.code(), Some(2), "{args:?}");
    }
}

use std::path::PathBuf;
use std::process::Command;

fn bin(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_su3fusion"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().expect("exit code"),
    )
}

fn fixture(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name);
    std::fs::read_to_string(p).unwrap()
}

/// Splits a rendered decomposition into `(ν, levels)` entries.
fn entries(s: &str) -> Vec<(String, Vec<u32>)> {
    s.trim()
        .split("), ")
        .map(|e| e.trim_end_matches(')'))
        .flat_map(|e| e.split(", ("))
        .map(|e| {
            let e = e.trim_start_matches('(');
            let (nu, ks) = e.split_once(")_").unwrap();
            let ks = ks.trim_matches(|c| c == '{' || c == '}');
            (
                nu.to_string(),
                ks.split(',').map(|k| k.parse().unwrap()).collect(),
            )
        })
        .collect()
}

#[test]
fn product_matches_golden_fixture() {
    let (out, _, code) = bin(&["product", "--level", "inf", "--lhs", "9,5", "--rhs", "6,2"]);
    assert_eq!(code, 0);
    assert_eq!(out, fixture("product_9_5_x_6_2.txt"));
}

#[test]
fn product_agrees_with_reference_display_after_merging() {
    let ours = entries(&fixture("product_9_5_x_6_2.txt"));
    let reference = entries(&fixture("reference_display_9_5_x_6_2.txt"));
    assert_eq!(ours.len(), 51);
    assert_eq!(reference.len(), 52);
    let mut merged: Vec<(String, Vec<u32>)> = Vec::new();
    for (nu, ks) in reference {
        match merged.iter_mut().find(|(n, _)| *n == nu) {
            Some((_, v)) => v.extend(ks),
            None => merged.push((nu, ks)),
        }
    }
    let key = |v: &mut Vec<(String, Vec<u32>)>| v.sort();
    let mut ours = ours;
    key(&mut ours);
    key(&mut merged);
    assert_eq!(ours, merged);
}

#[test]
fn product_examples() {
    let (out, _, _) = bin(&["product", "--level", "2", "--lhs", "1,1", "--rhs", "0,2"]);
    assert_eq!(out, "(1,0)_2\n");
    let (out, _, _) = bin(&["product", "--lhs", "9,5", "--rhs", "6,2", "--conjugate-rhs"]);
    assert_eq!(out, fixture("product_9_5_x_2_6.txt"));
    let (out, _, _) = bin(&["product", "--lhs", "9,5", "--rhs", "6,2", "--format", "tsv"]);
    assert_eq!(out.lines().count(), 52);
}

#[test]
fn thresholds_match_fixtures() {
    let (out, _, code) = bin(&[
        "thresholds",
        "--lhs",
        "9,5",
        "--rhs",
        "6,2",
        "--format",
        "tsv",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, fixture("thresholds_9_5_x_6_2.tsv"));
    let rows: Vec<Vec<&str>> = out
        .lines()
        .skip(1)
        .map(|l| l.split('\t').collect())
        .collect();
    assert_eq!(rows.len(), 9);
    assert_eq!(
        rows.iter()
            .map(|r| r[1].parse::<u32>().unwrap())
            .sum::<u32>(),
        95
    );
    let table = fixture("level_profile_9_5_x_6_2.tsv");
    for (row, expect) in rows.iter().zip(table.lines().skip(1)) {
        let e: Vec<&str> = expect.split('\t').collect();
        assert_eq!(row[0], e[0]);
        assert_eq!(row[2], e[1..].join(","));
    }
}

#[test]
fn psi_outputs() {
    let (out, _, code) = bin(&["psi", "--triple", "9,5/6,2/10,5"]);
    assert_eq!(
        (out.as_str(), code),
        ("((8,6),(5,3);(11,4))  mult=3  k0_min=16\n", 0)
    );
    let (_, err, code) = bin(&["psi", "--triple", "1,0/0,0/0,0"]);
    assert_eq!(code, 1);
    assert!(err.contains("Ψ undefined on this triple"));
}

#[test]
fn oblades_write_svgs() {
    let dir = std::env::temp_dir().join(format!("su3fusion-svg-{}", std::process::id()));
    let (out, _, code) = bin(&[
        "oblades",
        "--triple",
        "9,5/6,2/8,6",
        "--svg",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let ks: Vec<&str> = out
        .lines()
        .filter_map(|l| l.strip_prefix("threshold "))
        .collect();
    assert_eq!(ks, ["15", "16", "17"]);
    for i in 1..=3 {
        let svg = std::fs::read_to_string(dir.join(format!("oblade-{i}.svg"))).unwrap();
        assert!(svg.starts_with("<svg"));
    }
    assert!(!dir.join("oblade-4.svg").exists());
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_sums_lines() {
    let (out, _, code) = bin(&["verify", "--suite", "sums", "--max-level", "12"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().filter(|l| l.starts_with("k=")).collect();
    assert_eq!(lines.len(), 13);
    for (k, l) in lines.iter().enumerate() {
        assert_eq!(*l, format!("k={k}: ΣX ✓ ΣGX ✓ ΣΛ ✓ ΣK ✓"));
    }
}

#[test]
fn verify_property_p_passes() {
    let (out, _, code) = bin(&[
        "verify",
        "--suite",
        "propP",
        "--max-weight",
        "8",
        "--max-level",
        "16",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("0 failed"));
}

#[test]
fn verify_detects_seeded_fault() {
    let args = [
        "verify",
        "--suite",
        "all",
        "--max-level",
        "3",
        "--max-weight",
        "3",
    ];
    let (_, _, code) = bin(&args);
    assert_eq!(code, 0);
    let (out, _, code) = bin(&[&args[..], &["--inject-fault"]].concat());
    assert_eq!(code, 1);
    assert!(
        out.contains("first failure: tables: k=1: commutation"),
        "{out}"
    );
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["product", "--lhs", "9,x", "--rhs", "1,1"][..],
        &["verify", "--suite", "everything"],
        &["psi", "--triple", "1,0/1,0"],
        &["matrix", "--level", "2", "--weight", "3,0"],
        &["paths", "--diagram", "B3"],
        &["psi", "--triple", "1,0/1,0/0,1", "--format", "svg"],
    ] {
        let (_, _, code) = bin(args);
        assert_eq!(code, 2, "{args:?}");
    }
}

#[test]
fn outputs_are_deterministic() {
    let args = [
        "thresholds",
        "--lhs",
        "4,3",
        "--rhs",
        "2,5",
        "--format",
        "json",
    ];
    assert_eq!(bin(&args).0, bin(&args).0);
    let args = ["matrix", "--level", "3", "--all"];
    assert_eq!(bin(&args).0, bin(&args).0);
}

#[test]
fn json_round_trips() {
    for args in [
        &[
            "product", "--lhs", "3,1", "--rhs", "2,2", "--level", "6", "--format", "json",
        ][..],
        &[
            "thresholds",
            "--lhs",
            "3,1",
            "--rhs",
            "2,2",
            "--format",
            "json",
        ],
        &["psi", "--triple", "9,5/6,2/10,5", "--format", "json"],
        &["oblades", "--triple", "9,5/6,2/8,6", "--format", "json"],
        &[
            "matrix", "--level", "2", "--weight", "1,0", "--format", "json",
        ],
        &["paths", "--max-level", "3", "--format", "json"],
        &["paths", "--diagram", "E6", "--format", "json"],
        &["verlinde", "--level", "4", "--format", "json"],
        &[
            "verify",
            "--suite",
            "oblades",
            "--max-weight",
            "3",
            "--format",
            "json",
        ],
    ] {
        let (out, _, code) = bin(args);
        assert_eq!(code, 0, "{args:?}");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(
            serde_json::to_string_pretty(&v).unwrap() + "\n",
            out,
            "{args:?}"
        );
    }
}

#[test]
fn matrix_and_paths() {
    let (out, _, _) = bin(&["matrix", "--level", "1", "--weight", "1,0"]);
    assert_eq!(
        out,
        "mu\\nu\t(0,0)\t(1,0)\t(0,1)\n(0,0)\t0\t1\t0\n(1,0)\t0\t0\t1\n(0,1)\t1\t0\t0\n"
    );
    let (out, _, code) = bin(&["paths", "--diagram", "E6"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("E6: d_H=156 d_B=2512"), "{out}");
    let (out, _, _) = bin(&["paths", "--max-level", "2"]);
    assert_eq!(out.lines().count(), 4);
    assert!(out
        .lines()
        .skip(1)
        .all(|l| l.ends_with("true\ttrue\ttrue\ttrue")));
}

#[test]
fn verlinde_and_genpoly() {
    let (out, _, code) = bin(&["verlinde", "--level", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("closed form agrees"));
    let (out, _, _) = bin(&["verlinde", "--level", "2", "--triple", "1,1/0,2/1,0"]);
    assert!(out.ends_with("fusion 1\n"), "{out}");
    let (out, _, code) = bin(&["genpoly-verify", "--max-level", "3"]);
    assert_eq!(code, 0);
    assert!(out.lines().all(|l| l.ends_with(": ok")));
}

#[test]
fn config_sets_defaults() {
    let path = std::env::temp_dir().join(format!("su3fusion-{}.conf", std::process::id()));
    std::fs::write(&path, "# small run\nmax_level = 2\n").unwrap();
    let (out, _, code) = bin(&[
        "--config",
        path.to_str().unwrap(),
        "verify",
        "--suite",
        "sums",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("k=")).count(), 3);
    std::fs::write(&path, "depth = 2\n").unwrap();
    let (_, _, code) = bin(&[
        "--config",
        path.to_str().unwrap(),
        "verify",
        "--suite",
        "sums",
    ]);
    assert_eq!(code, 2);
    std::fs::remove_file(path).unwrap();
}

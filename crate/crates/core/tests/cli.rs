use std::process::Command;

fn chromsym(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_chromsym")).args(args).env("CHROMSYM_WORKERS", "2").output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn csf_subcommand() {
    let (code, text) = chromsym(&["csf", "--spider", "4,1,1", "--basis", "e"]);
    assert_eq!(code, 0);
    assert!(text.contains("- 3e_{(3,2^2)}") && text.contains("17e_{(4,3)}"));
    let (_, text) = chromsym(&["csf", "--path", "2", "--basis", "e", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["expansion"]["coeffs"], serde_json::json!({"2": "2"}));
}

#[test]
fn positivity_exit_codes() {
    assert_eq!(chromsym(&["positivity", "--spider", "6,2,1"]).0, 0);
    assert_eq!(chromsym(&["positivity", "--spider", "1,1,1"]).0, 1);
    assert_eq!(chromsym(&["positivity", "--graph6", "Cs"]).0, 1);
    assert_eq!(chromsym(&["positivity", "--path", "40"]).0, 3);
    assert_eq!(chromsym(&["positivity", "--complete", "0"]).0, 2);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    std::fs::write(&path, "4\n0 1\n1 2\n2 3\n").unwrap();
    let (code, text) = chromsym(&["positivity", "--edges", path.to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["schur_positive"], true);
}

#[test]
fn spider_and_trees_subcommands() {
    let (code, text) = chromsym(&["spider", "13,6,4,1,1"]);
    assert_eq!(code, 1);
    assert!(text.contains("QUOTIENT_3 -> (9^2,8)"));
    let (code, text) = chromsym(&["spider", "6,4,1,1"]);
    assert_eq!(code, 0);
    assert!(text.contains("no rule fires"));
    let (_, text) = chromsym(&["trees", "12", "--count"]);
    assert_eq!(text.trim(), "551");
    let (_, text) = chromsym(&["trees", "6", "--format", "edges"]);
    assert_eq!(text.matches("\n6\n").count() + usize::from(text.starts_with("6\n")), 6);
}

#[test]
fn scan_and_ledger() {
    let (code, text) = chromsym(&["scan", "degree4-e", "--n-max", "9"]);
    assert_eq!(code, 0);
    assert!(text.contains("status VERIFIED"));
    let (code, text) = chromsym(&["scan", "halfdegree-schur", "--n-min", "2", "--n-max", "14"]);
    assert_eq!(code, 3);
    assert!(text.contains("resume with 13:0"));
    let (code, text) = chromsym(&["verify-paper"]);
    assert_eq!(code, 0, "{text}");
    assert!(text.contains("S(6,2,1) e-positive: PASS"));
    assert!(!text.contains("FAIL"));
}

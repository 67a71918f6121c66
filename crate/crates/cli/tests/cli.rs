use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn zic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

struct TempDir(PathBuf);

impl TempDir {
    fn new(tag: &str) -> Self {
        let p = std::env::temp_dir().join(format!("zic-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&p).unwrap();
        TempDir(p)
    }
    fn path(&self, name: &str) -> String {
        self.0.join(name).display().to_string()
    }
}

impl Drop for TempDir {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

#[test]
fn certify_free_depth_8() {
    let o = zic(&["certify-free", "--depth", "8"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["violations"], Value::Array(vec![]));
    assert_eq!(v["commutator_trace"], -25);
    assert_eq!(v["words_checked"], 13120);
    assert_eq!(v["min_abs_trace"], 4);
}

#[test]
fn certify_free_rejects_depth_0() {
    assert_eq!(code(&zic(&["certify-free", "--depth", "0"])), 2);
}

#[test]
fn certify_free_with_a_pair_file() {
    let dir = TempDir::new("pair");
    let good = dir.path("good.json");
    std::fs::write(&good, r#"[[["3","2"],["1","1"]],[["1","1"],["2","3"]]]"#).unwrap();
    assert_eq!(
        code(&zic(&["certify-free", "--depth", "3", "--pair", &good])),
        0
    );
    // S2 = S1^-1 commutes with S1
    let bad = dir.path("bad.json");
    std::fs::write(&bad, r#"[[["3","2"],["1","1"]],[["1","-2"],["-1","3"]]]"#).unwrap();
    assert_eq!(
        code(&zic(&["certify-free", "--depth", "3", "--pair", &bad])),
        5
    );
    assert_eq!(
        code(&zic(&[
            "certify-free",
            "--depth",
            "3",
            "--pair",
            &dir.path("missing.json")
        ])),
        2
    );
}

#[test]
fn build_stabilizer_and_search() {
    let dir = TempDir::new("stab");
    let out = dir.path("stab.json");
    let o = zic(&[
        "build",
        "--kind",
        "stabilizer",
        "--presentation",
        "z2-star-z",
        "--query",
        "b",
        "--out",
        &out,
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let inst: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(inst["kind"], "stabilizer");
    assert_eq!(inst["n"], 9);
    assert!(inst["generators"]
        .as_array()
        .unwrap()
        .iter()
        .all(|g| g.as_array().unwrap().len() == 9));
    let s = zic(&["search", "--instance", &out, "--depth", "3"]);
    assert_eq!(code(&s), 0);
    let cert = json(&s);
    assert_eq!(cert["outcome"], "found");
    assert_eq!(cert["word"], "g3");
}

#[test]
fn build_ulcp_free_diagonal_is_6x6_rational() {
    let o = zic(&[
        "build",
        "--kind",
        "ulcp",
        "--presentation",
        "free-f2-diagonal",
        "--query",
        "(ab,ab)",
    ]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["kind"], "external-hyperplane");
    assert_eq!(v["n"], 6);
    assert_eq!(v["form"].as_array().unwrap().len(), 6);
}

#[test]
fn build_urcp_rejects_identity_component() {
    let o = zic(&[
        "build",
        "--kind",
        "urcp",
        "--presentation",
        "z2-star-z",
        "--query",
        "(a,1,b)",
    ]);
    assert_eq!(code(&o), 2);
    assert!(o.stdout.is_empty());
}

#[test]
fn build_rejects_malformed_input() {
    assert_eq!(
        code(&zic(&[
            "build",
            "--kind",
            "ulcp",
            "--presentation",
            "z2",
            "--query",
            "(a,c)"
        ])),
        2
    );
    assert_eq!(
        code(&zic(&[
            "build",
            "--kind",
            "ulcp",
            "--presentation",
            "no-such",
            "--query",
            "(a,b)"
        ])),
        2
    );
    assert_eq!(
        code(&zic(&[
            "build",
            "--kind",
            "other",
            "--presentation",
            "z2",
            "--query",
            "a"
        ])),
        2
    );
}

#[test]
fn search_exit_codes() {
    let dir = TempDir::new("search");
    let inst = dir.path("ulcp.json");
    let o = zic(&[
        "build",
        "--kind",
        "ulcp",
        "--presentation",
        "free-f2",
        "--query",
        "(ab,ab)",
        "--out",
        &inst,
    ]);
    assert_eq!(code(&o), 0);
    let exhausted = zic(&["search", "--instance", &inst, "--depth", "3"]);
    assert_eq!(code(&exhausted), 3);
    assert_eq!(json(&exhausted)["outcome"], "exhausted");
    let truncated = zic(&[
        "search",
        "--instance",
        &inst,
        "--depth",
        "3",
        "--budget",
        "5",
    ]);
    assert_eq!(code(&truncated), 4);
    assert_eq!(json(&truncated)["outcome"], "truncated");
    assert_eq!(
        code(&zic(&["search", "--instance", &inst, "--depth", "0"])),
        2
    );
    assert_eq!(
        code(&zic(&[
            "search",
            "--instance",
            &inst,
            "--depth",
            "2",
            "--predicate",
            "corner-zero"
        ])),
        2
    );
}

#[test]
fn convert_corner_round_trip() {
    let dir = TempDir::new("corner");
    let ext = dir.path("ext.json");
    let corner = dir.path("corner.json");
    let q = "(b a b a', b a b a')";
    assert_eq!(
        code(&zic(&[
            "build",
            "--kind",
            "ulcp",
            "--presentation",
            "free-f2",
            "--query",
            q,
            "--out",
            &ext
        ])),
        0
    );
    assert_eq!(
        code(&zic(&[
            "convert-corner",
            "--instance",
            &ext,
            "--out",
            &corner
        ])),
        0
    );
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&corner).unwrap()).unwrap();
    assert_eq!(v["kind"], "corner");
    assert_eq!(v["corner"], serde_json::json!([1, 1]));
    let a = zic(&["search", "--instance", &ext, "--depth", "4"]);
    let b = zic(&["search", "--instance", &corner, "--depth", "4"]);
    assert_eq!(code(&a), 0);
    assert_eq!(code(&b), 0);
    assert_eq!(json(&a)["word"], json(&b)["word"]);
    let stab = dir.path("stab.json");
    zic(&[
        "build",
        "--kind",
        "stabilizer",
        "--presentation",
        "z2",
        "--query",
        "b",
        "--out",
        &stab,
    ]);
    assert_eq!(code(&zic(&["convert-corner", "--instance", &stab])), 2);
}

#[test]
fn validate_suites() {
    let o = zic(&["validate", "--suite", "theorem6-properties", "--depth", "7"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)[0]["passed"], true);
    let o = zic(&["validate", "--suite", "mihailova-iff"]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&zic(&["validate", "--suite", "no-such-suite"])), 2);
}

#[test]
fn samples_list_and_export() {
    let o = zic(&["samples", "list"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().count(), 6);
    assert!(text.lines().any(|l| l.starts_with("z2-star-z\t")));
    let dir = TempDir::new("samples");
    assert_eq!(
        code(&zic(&["samples", "export", "--dir", &dir.path("out")])),
        0
    );
    let s3 = std::fs::read_to_string(Path::new(&dir.path("out")).join("s3.json")).unwrap();
    let one = zic(&["samples", "export", "--name", "s3"]);
    assert_eq!(String::from_utf8(one.stdout).unwrap(), s3);
    // an exported file is accepted as a presentation
    let path = Path::new(&dir.path("out"))
        .join("z2-star-z.json")
        .display()
        .to_string();
    let from_file = zic(&[
        "build",
        "--kind",
        "stabilizer",
        "--presentation",
        &path,
        "--query",
        "b",
    ]);
    let from_name = zic(&[
        "build",
        "--kind",
        "stabilizer",
        "--presentation",
        "z2-star-z",
        "--query",
        "b",
    ]);
    assert_eq!(from_file.stdout, from_name.stdout);
    assert_eq!(code(&zic(&["samples", "export"])), 2);
}

#[test]
fn outputs_are_byte_identical_and_reports_differ_only_in_timing() {
    let dir = TempDir::new("det");
    let inst = dir.path("i.json");
    let report = dir.path("r.jsonl");
    zic(&[
        "build",
        "--kind",
        "urcp",
        "--presentation",
        "z2-star-z",
        "--query",
        "(a,b,ab)",
        "--out",
        &inst,
    ]);
    let runs: Vec<Output> = (0..2)
        .map(|_| {
            zic(&[
                "search",
                "--instance",
                &inst,
                "--depth",
                "3",
                "--report",
                &report,
            ])
        })
        .collect();
    assert_eq!(runs[0].stdout, runs[1].stdout);
    let lines: Vec<Value> = std::fs::read_to_string(&report)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 2);
    let strip = |v: &Value| {
        let mut v = v.clone();
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    assert_eq!(strip(&lines[0]), strip(&lines[1]));
    assert_eq!(lines[0]["inputs"].as_array().unwrap().len(), 1);
    assert_eq!(lines[0]["outputs"][0]["name"], "stdout");
}

#[test]
fn help_lists_every_subcommand() {
    let o = zic(&["--help"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    for sub in [
        "certify-free",
        "build",
        "search",
        "validate",
        "samples",
        "convert-corner",
    ] {
        assert!(text.contains(sub), "{sub}");
    }
}

use std::process::{Command, Output};

const TTILDE: &str = "s1^5 s2 s1^4 s2";

fn posbraid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_posbraid")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = posbraid(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn info_trefoil() {
    let v = json(&["info", "--word", "s1^3", "--json"]);
    assert_eq!(v["components"], 1);
    assert_eq!(v["b1"], 2);
    assert_eq!(v["genus"], 1);
    assert_eq!(v["signature"], -2);
    assert_eq!(v["kt_certificate"], "certified_maximal");
}

#[test]
fn info_plain_text() {
    let out = posbraid(&["info", "--word", "s1 s3", "--strands", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("primality:   split"), "{text}");
    assert!(text.contains("kt:          split"), "{text}");
}

#[test]
fn malformed_word_is_a_usage_error() {
    for word in ["s0", "s1^x", "t2", "s4"] {
        let out = posbraid(&["info", "--word", word, "--strands", "3"]);
        assert_eq!(out.status.code(), Some(2), "{word}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn defect_bounds() {
    let v = json(&["defect", "--word", TTILDE]);
    assert_eq!(v["lower_bound"], 1);
    let v = json(&["defect", "--word", "s1^5"]);
    assert_eq!(v["lower_bound"], 0);
    let doubled = "s1^5 s2 s1^4 s2 s4^5 s5 s4^4 s5";
    let v = json(&["defect", "--word", doubled, "--strands", "6"]);
    assert_eq!(v["lower_bound"], 2);
    let v = json(&["defect", "--word", doubled, "--strands", "6", "--strategy", "fixed", "--width", "2"]);
    assert_eq!(v["lower_bound"], 2);
}

#[test]
fn minors_lists_the_obstruction() {
    let v = json(&["minors", "--word", TTILDE, "--json"]);
    let kinds: Vec<&str> = v.as_array().unwrap().iter().map(|c| c["kind"].as_str().unwrap()).collect();
    assert!(!kinds.is_empty());
    let out = posbraid(&["minors", "--word", "s1^4"]);
    assert_eq!(stdout(&out).trim(), "no obstruction graphs found");
}

#[test]
fn betak_family_passes() {
    let out = posbraid(&["betak", "12", "--all"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 12 * 5);
    assert!(text.lines().all(|l| l.starts_with("PASS")), "{text}");
    assert_eq!(posbraid(&["betak", "0"]).status.code(), Some(2));
}

#[test]
fn enumerate_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.csv");
    let out = posbraid(&["enumerate", "--strands", "3", "--max-length", "5", "--out", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let mut reader = csv::Reader::from_path(&path).unwrap();
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        header,
        ["word", "strands", "length", "components", "b1", "genus", "signature", "nullity", "primality", "kt", "minors", "defect_lb"]
    );
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    // binary necklaces of lengths 1..=5: 2 + 3 + 4 + 6 + 8
    assert_eq!(rows.len(), 23);
    let trefoil = rows.iter().find(|r| &r[0] == "s1^3").unwrap();
    assert_eq!(&trefoil[5], "");
    assert_eq!(&trefoil[9], "split");
    let knot = rows.iter().find(|r| &r[0] == "s1^3 s2").unwrap();
    assert_eq!(&knot[3], "1");
    assert_eq!(&knot[5], "1");
}

#[test]
fn enumerate_is_independent_of_workers() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for (path, workers) in [(&a, "1"), (&b, "3")] {
        let out = posbraid(&[
            "enumerate", "--strands", "4", "--max-length", "6", "--workers", workers, "--out", path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn enumerate_guards() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("big.csv");
    let out = posbraid(&["enumerate", "--strands", "7", "--max-length", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!path.exists());
}

#[test]
fn enumerate_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.json");
    let out = posbraid(&["enumerate", "--strands", "2", "--max-length", "3", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
}

#[test]
fn render_svg_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x.svg");
    let out = posbraid(&[
        "render", "--word", "s1^2 s2^2 s1 s3 s2^2 s3", "--overlay", "--svg", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.contains("<svg"));
    assert_eq!(svg.matches("<rect").count(), 6);
    assert_eq!(svg.matches("<line").count(), 5);
}

#[test]
fn render_empty_word_to_stdout() {
    let out = posbraid(&["render", "--word", "", "--strands", "3"]);
    assert!(out.status.success());
    let svg = stdout(&out);
    assert!(svg.contains("<svg"));
    assert_eq!(svg.matches("<rect").count(), 0);
}

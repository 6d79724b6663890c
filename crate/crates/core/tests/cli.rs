use std::io::Write;
use std::path::PathBuf;

use hypconj::cli::dispatch;
use serde_json::Value;
use tempfile::NamedTempFile;

fn group(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("groups")
        .join(name)
        .display()
        .to_string()
}

fn list_file(lines: &[&str]) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    for l in lines {
        writeln!(f, "{l}").unwrap();
    }
    f
}

fn run(args: &[&str]) -> (i32, String) {
    dispatch(std::iter::once("hypconj").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, out) = run(&full);
    (
        code,
        serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}")),
    )
}

#[test]
fn reduce_and_identity() {
    let f2 = group("f2.grp");
    assert_eq!(run(&["reduce", "-g", &f2, "-w", "abBA"]), (0, "1\n".into()));
    assert_eq!(
        run(&["reduce", "-g", &f2, "-w", "aab"]),
        (0, "aab\n".into())
    );
    assert_eq!(run(&["reduce", "-g", &f2, "-w", "1"]), (0, "1\n".into()));
    let z = group("z2z3.grp");
    assert_eq!(run(&["reduce", "-g", &z, "-w", "yy"]), (0, "Y\n".into()));
}

#[test]
fn conj_json_report() {
    let f2 = group("f2.grp");
    let (code, v) = json(&["conj", "-g", &f2, "-u", "ab", "-v", "ba"]);
    assert_eq!(code, 0);
    assert_eq!(v["outcome"], "conjugate");
    assert_eq!(v["witness"], "a");
    assert_eq!(v["profile"], "practical");
    assert!(v["caps"]["conjugator_radius"].is_u64());
    let (code, v) = json(&["conj", "-g", &f2, "-u", "a", "-v", "b"]);
    assert_eq!(code, 0);
    assert_eq!(v["outcome"], "not_conjugate");
}

#[test]
fn lists_from_files() {
    let f2 = group("f2.grp");
    let a = list_file(&["ab", "a"]);
    let b = list_file(&["ba", "a"]);
    let (pa, pb) = (a.path().to_str().unwrap(), b.path().to_str().unwrap());
    let (code, v) = json(&["conj-lists", "-g", &f2, "-A", pa, "-B", pb]);
    assert_eq!((code, v["outcome"].as_str()), (0, Some("conjugate")));
    let (code, v) = json(&["centraliser", "-g", &f2, "-A", pa]);
    assert_eq!(code, 0);
    assert_eq!(v["complete"], true);
    let (code, out) = run(&[
        "oracle-conj",
        "-g",
        &f2,
        "-A",
        pa,
        "-B",
        pb,
        "--radius",
        "3",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("witness: a"), "{out}");
}

#[test]
fn order_and_constants() {
    let z = group("z2z3.grp");
    let (code, out) = run(&["order", "-g", &z, "-w", "xyx"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("finite order 3"), "{out}");
    let (code, v) = json(&["constants", "-g", &group("f2.grp")]);
    assert_eq!(code, 0);
    assert_eq!(v["L"], 36);
    assert_eq!(v["V"], 17);
    assert_eq!(v["M"], "127344960");
}

#[test]
fn caps_give_exit_two() {
    let z = group("z2z3.grp");
    let a = list_file(&["y"]);
    let b = list_file(&["Y"]);
    let (pa, pb) = (a.path().to_str().unwrap(), b.path().to_str().unwrap());
    let (code, out) = run(&[
        "conj-lists",
        "-g",
        &z,
        "-A",
        pa,
        "-B",
        pb,
        "--conjugator-radius",
        "3",
    ]);
    assert_eq!(code, 2, "{out}");
    assert!(out.contains("unverified_at_cap"), "{out}");
    assert!(out.contains("length <= 3"), "{out}");
    let (code, v) = json(&["centraliser", "-g", &z, "-A", pa]);
    assert_eq!(code, 2);
    assert_eq!(v["complete"], false);
}

#[test]
fn paper_profile_refuses_large_radius() {
    let z = group("z2z3.grp");
    let a = list_file(&["x"]);
    let pa = a.path().to_str().unwrap();
    let (code, out) = run(&[
        "--profile",
        "paper",
        "conj-lists",
        "-g",
        &z,
        "-A",
        pa,
        "-B",
        pa,
    ]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("error"), "{out}");
}

#[test]
fn usage_and_file_errors() {
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["frobnicate"]).0, 1);
    assert_eq!(run(&["reduce", "-g", "/nonexistent.grp", "-w", "a"]).0, 1);
    let bad = list_file(&[
        "group free_product",
        "factors 2 3",
        "delta 1",
        "colour blue",
    ]);
    let (code, out) = run(&["reduce", "-g", bad.path().to_str().unwrap(), "-w", "a"]);
    assert_eq!(code, 1);
    assert!(out.contains(":4:"), "{out}");
    let f2 = group("f2.grp");
    let a = list_file(&["ab", "q"]);
    let (code, out) = run(&["centraliser", "-g", &f2, "-A", a.path().to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains(":2:"), "{out}");
}

#[test]
fn bench_lines() {
    let (code, out) = run(&[
        "bench",
        "-g",
        &group("f2.grp"),
        "--mu-list",
        "50,100",
        "--reps",
        "1",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("mu=50 seconds="));
}

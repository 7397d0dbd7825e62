use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("divlab").chain(args.iter().copied()).map(String::from).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = divlab::run(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let mut args = args.to_vec();
    args.extend(["--format", "json"]);
    let (code, out, err) = run(&args);
    let value = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out} / {err}"));
    (code, value)
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["divides", "x - 1", "16*x^4 - 12*x^2 - 4"]).0, 0);
    assert_eq!(run(&["divides", "5", "x^5 - x"]).0, 1);
    assert_eq!(run(&["divides", "x +", "1"]).0, 2);
    assert_eq!(run(&["divides", "0", "1"]).0, 2);
    assert_eq!(run(&["divides", "--ring", "bogus", "1", "1"]).0, 2);
    assert_eq!(run(&["nonsense"]).0, 2);
    assert_eq!(run(&["congruence", "--kind", "jr1", "--n", "4", "--a", "1"]).0, 3);
    assert_eq!(run(&["congruence", "--kind", "jr2", "--n", "5", "--a", "3", "--k", "2"]).0, 0);
    assert_eq!(run(&["pell", "--d", "9"]).0, 2);
    assert_eq!(run(&["s2sq", "7"]).0, 1);
    assert_eq!(run(&["units", "x^2 + 1", "--kmin", "2", "--kmax", "9"]).0, 1);
    assert_eq!(run(&["int", "(x^2 + 1)/2"]).0, 1);
    assert_eq!(run(&["ipp", "--ring", "q", "x"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn diagnostics_go_to_stderr() {
    let (code, out, err) = run(&["divides", "--ring", "z", "1/2*x", "x"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("ring mismatch at offset 1"), "{err}");
    let (_, _, err) = run(&["divides", "x + y", "x", "--kmax", "3"]);
    assert!(err.is_empty());
    let (code, _, err) = run(&["epp", "y", "x"]);
    assert_eq!(code, 2);
    assert!(err.contains("variable arity at offset 0"), "{err}");
}

#[test]
fn negative_numbers_and_leading_minus() {
    let (code, v) = json(&["divides", "-x + 1", "-x^2 + 1"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["quotient"], "x + 1");
    let (_, v) = json(&["scan", "x", "x^2", "--kmin", "-3", "--kmax", "-1"]);
    assert_eq!(v["counts"]["tested"], "3");
}

#[test]
fn json_is_byte_identical_across_runs() {
    let cases: [&[&str]; 4] = [
        &["ipp", "x^3 + 2", "--samples", "300", "--seed", "5", "--kmin", "-10000", "--kmax", "10000"],
        &["scan", "x^2 + 3", "x^5 + 7", "--samples", "400", "--seed", "9"],
        &["units", "--ring", "quad:2", "x^2 - 2", "--samples", "200"],
        &["lucas", "--n", "40", "--a", "10", "--table"],
    ];
    for args in cases {
        let mut args = args.to_vec();
        args.extend(["--format", "json"]);
        let first = run(&args).1;
        for _ in 0..3 {
            assert_eq!(run(&args).1, first);
        }
    }
}

#[test]
fn big_values_are_strings() {
    let (_, v) = json(&["lucas", "--n", "40", "--a", "10"]);
    let x = v["result"]["x"].as_str().unwrap();
    assert!(x.len() > 40);
    assert_eq!(v["result"]["pell_identity"], true);
}

#[test]
fn batch_collects_reports() {
    let dir = std::env::temp_dir().join(format!("divlab-batch-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cmds.txt");
    std::fs::write(
        &path,
        "# comment\ndivides \"x - 1\" \"x^2 - 1\"\n\ns2sq 13\ndivides 5 \"x^5 - x\"\ndivides \"x +\" 1\n",
    )
    .unwrap();
    let (code, out, err) = run(&["batch", path.to_str().unwrap()]);
    std::fs::remove_dir_all(&dir).unwrap();
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let entries = v.as_array().unwrap();
    assert_eq!(entries.len(), 4);
    assert_eq!(entries[1]["result"]["decomposition"]["a"], "2");
    assert_eq!(entries[3]["exit_code"], "2");
    assert_eq!(code, 2);
    assert!(err.contains("line 6"), "{err}");
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_divlab");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["divides", "--ring", "z", "x - 1", "16*x^4 - 12*x^2 - 4"]), Some(0));
    assert_eq!(status(&["divides", "--ring", "z", "5", "x^5 - x"]), Some(1));
    assert_eq!(status(&["divides", "(x"]), Some(2));
}

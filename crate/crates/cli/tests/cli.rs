use std::io::Write;
use std::process::{Command, Output, Stdio};

fn hyperops(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperops"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hyperops"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn eval_examples() {
    assert_eq!(stdout(&hyperops(&["eval", "H[3](2,3)"])), "8");
    assert_eq!(stdout(&hyperops(&["eval", "F[2](3@1, 5@1)"])), "15@1 (= 32768)");
    assert_eq!(stdout(&hyperops(&["eval", "-2/3@0"])), "-2/3@0");
    assert_eq!(stdout(&hyperops(&["-w", "3", "eval", "E(2@1)"])), "2@2 (= 19683)");
    assert_eq!(stdout(&hyperops(&["eval", "OP[1:2](1@p, 2@p)"])), "2@(1) (= 4)");
}

#[test]
fn embed_and_tower() {
    assert_eq!(stdout(&hyperops(&["embed", "--omega", "4", "2/1@1"])), "16.0");
    assert_eq!(stdout(&hyperops(&["embed", "--omega", "4", "INV(2/1@1)"])), "2.0");
    let t: f64 = stdout(&hyperops(&["tower", "1.4142135623730951"])).parse().unwrap();
    assert!((t - 2.0).abs() <= 1e-9);
    assert!(stdout(&hyperops(&["tower", "1.5"])).starts_with("diverged"));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&hyperops(&["--json", "tower", "0.06"]))).unwrap();
    assert_eq!(json["converged"], false);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&hyperops(&["eval", "H[3](2,"])), 1);
    assert_eq!(code(&hyperops(&["eval", "E(S(0.5))"])), 1);
    assert_eq!(code(&hyperops(&["eval", "INV(0/1)"])), 2);
    assert_eq!(code(&hyperops(&["eval", "L(3)"])), 2);
    assert_eq!(code(&hyperops(&["eval", "F[3](1@1, 1@1)"])), 2);
    assert_eq!(code(&hyperops(&["--budget-bits", "8", "eval", "H[4](2,4)"])), 3);
    assert_eq!(code(&hyperops(&["-w", "1", "eval", "E(1)"])), 2);
    let err = hyperops(&["eval", "H[3](2,"]);
    assert!(String::from_utf8_lossy(&err.stderr).contains("1:8"));
}

#[test]
fn verify_reports_and_is_deterministic() {
    let args = ["verify", "--suite", "all", "--level", "0", "--seed", "7", "--cases", "100"];
    let first = hyperops(&args);
    assert_eq!(code(&first), 0, "{}", stdout(&first));
    assert!(stdout(&first).contains("laws passed"));
    assert_eq!(first.stdout, hyperops(&args).stdout);
    let json = hyperops(&["--json", "verify", "--suite", "integers", "--seed", "3", "--cases", "20"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(report["suite"], "integers");
    assert!(report["laws"].as_array().unwrap().iter().all(|l| l["failures"] == 0));
    assert_eq!(code(&hyperops(&["verify", "--suite", "ring"])), 2);
}

#[test]
fn eval_output_is_byte_identical() {
    for e in ["H[4](2,3)", "DIST(-1/2@1, 3/1@1)", "EMBED(+3@2)", "OP[2,1:3](2@p, 2@p)"] {
        let a = hyperops(&["--json", "eval", e]);
        let b = hyperops(&["--json", "eval", e]);
        assert_eq!(code(&a), 0, "{e}");
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn encode_decode_round_trip_below_2048() {
    std::thread::scope(|scope| {
        for w in ["2", "3", "5"] {
            scope.spawn(move || {
                for v in 0..2048u32 {
                    let v = v.to_string();
                    let enc = hyperops(&["-w", w, "encode", &v]);
                    assert_eq!(code(&enc), 0);
                    let json = stdout(&enc);
                    let dec = with_stdin(&["-w", w, "decode"], &json);
                    assert_eq!(code(&dec), 0, "{w} {v}: {json}");
                    assert_eq!(stdout(&dec), format!("{v}@0"), "{w} {json}");
                }
            });
        }
    });
}

#[test]
fn encode_examples_and_bad_terms() {
    let enc = stdout(&hyperops(&["encode", "--level", "0", "5"]));
    assert_eq!(
        enc,
        r#"{"level":0,"entries":[{"digit":"1","scale":0},{"digit":"1","scale":{"level":1,"entries":[{"digit":"1","scale":1}]}}]}"#
    );
    let deep = stdout(&hyperops(&["encode", "--level", "1", "3"]));
    let back = with_stdin(&["decode"], &deep);
    assert_eq!(stdout(&back), "3@1 (= 8)");
    let bad = with_stdin(&["decode"], r#"{"level":0,"entries":[{"digit":"1","scale":3}]}"#);
    assert_eq!(code(&bad), 2);
    assert_eq!(code(&with_stdin(&["decode"], "not json")), 2);
}

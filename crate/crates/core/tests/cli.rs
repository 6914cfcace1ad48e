use std::io::Write;
use std::process::{Command, Output, Stdio};

const C5: &str = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_trungcd"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn poly_text_and_evaluation() {
    let o = run(&["poly", "-", "--eval", "-1/2", "--h-poly"], C5);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "1 + 5*x + 5*x^2\n-1/4\n1 + 3*t + t^2\n");
}

#[test]
fn poly_json() {
    let o = run(&["--output", "json", "poly", "-", "--eval", "-1/2"], C5);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["alpha"], 2);
    assert_eq!(v["coefficients"], serde_json::json!(["1", "5", "5"]));
    assert_eq!(v["eval"]["value"], "-1/4");
}

#[test]
fn tr_on_c5() {
    let o = run(&["tr", "-", "-v", "0", "--labels"], C5);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("# a=5 b=6 c=7 v=0"));
    assert_eq!(lines.next(), Some("8 10"));

    let o = run(&["--output", "json", "tr", "-", "--vertex", "0"], C5);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 8);
    assert_eq!(v["labels"]["c"], 7);
}

#[test]
fn tr_output_feeds_poly() {
    let tr = run(&["tr", "-", "-v", "0"], C5);
    let o = run(&["poly", "-"], &stdout(&tr));
    assert_eq!(stdout(&o), "1 + 8*x + 18*x^2 + 12*x^3\n");
}

#[test]
fn graph6_input_and_output() {
    let o = run(&["--format", "graph6", "poly", "-"], "Dhc\n");
    assert_eq!(stdout(&o), "1 + 5*x + 5*x^2\n");
    let o = run(&["--format", "graph6", "tr", "-", "-v", "0"], "A_\n");
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn check_reports_every_property() {
    let o = run(&["check", "-"], C5);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    for line in [
        "well-covered: true",
        "w2: true",
        "eulerian: true",
        "cm: true",
        "gorenstein: true",
    ] {
        assert!(text.contains(line), "{line} missing from\n{text}");
    }

    let o = run(&["--output", "json", "check", "-", "--gorenstein"], "3 2\n0 1\n1 2\n");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["gorenstein"]["verdict"], "fails");
    assert!(v.get("w2").is_none());
}

#[test]
fn gen_lists_every_step() {
    let o = run(&["gen", "--steps", "3"], "");
    assert_eq!(code(&o), 0);
    let headers: Vec<String> = stdout(&o)
        .lines()
        .filter(|l| l.starts_with('#'))
        .map(String::from)
        .collect();
    assert_eq!(headers.len(), 3);
    assert!(headers[0].starts_with("# step 1 n=8 girth=4 alpha=3"));
    assert!(headers[2].starts_with("# step 3 n=14 girth=4"));

    let a = run(&["gen", "--steps", "2", "--strategy", "random", "--seed", "9"], "");
    let b = run(&["gen", "--steps", "2", "--strategy", "random", "--seed", "9"], "");
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn verify_small_run_passes() {
    let o = run(
        &[
            "verify", "--n-max", "4", "--trials", "10", "--steps", "2", "--chains", "2",
        ],
        "",
    );
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(stdout(&o).matches("[PASS]").count(), 3);
}

#[test]
fn parse_errors_exit_1() {
    let o = run(&["poly", "-"], "3 1\n0 3\n");
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(code(&run(&["poly", "-"], "2 2\n0 1\n")), 1);
    assert_eq!(code(&run(&["--format", "graph6", "poly", "-"], "A\x01\n")), 1);
    assert_eq!(code(&run(&["poly", "-", "--eval", "1/0"], C5)), 1);
    assert_eq!(code(&run(&["gen", "--steps", "2", "--strategy", "random"], "")), 1);
    assert_eq!(code(&run(&["no-such-command"], "")), 1);
}

#[test]
fn domain_errors_exit_2() {
    assert_eq!(code(&run(&["tr", "-", "-v", "9"], C5)), 2);
    assert_eq!(code(&run(&["tr", "-", "-v", "2"], "3 1\n0 1\n")), 2);
    assert_eq!(code(&run(&["gen", "--steps", "0"], "")), 2);
}

#[test]
fn resource_errors_exit_3() {
    assert_eq!(code(&run(&["gen", "--steps", "20"], "")), 3);
    let gen = run(&["gen", "--steps", "4"], "");
    let last: String = stdout(&gen)
        .split("# step 4")
        .nth(1)
        .unwrap()
        .lines()
        .skip(1)
        .map(|l| format!("{l}\n"))
        .collect();
    assert_eq!(code(&run(&["check", "-", "--w2"], &last)), 3);
    assert_eq!(code(&run(&["check", "-", "--w2", "--force"], &last)), 0);
    let o = run(&["--format", "graph6", "poly", "-"], "~??~\n");
    assert_eq!(code(&o), 3);
}

#[test]
fn help_exits_0() {
    assert_eq!(code(&run(&["--help"], "")), 0);
}

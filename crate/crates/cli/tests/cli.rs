use std::process::{Command, Output};

fn sturmlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sturmlab")).args(args).output().expect("run sturmlab")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn balanced_count() {
    let out = sturmlab(&["balanced", "count", "17"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "594\n");
}

#[test]
fn balanced_list() {
    let out = sturmlab(&["balanced", "list", "3"]);
    assert_eq!(stdout(&out).lines().count(), 8);
    let out = sturmlab(&["--format", "csv", "balanced", "list", "2"]);
    assert_eq!(stdout(&out), "word\n00\n01\n10\n11\n");
}

#[test]
fn numeration_round_trip() {
    let out = sturmlab(&["numeration", "to-pell", "10"]);
    assert_eq!((out.status.code(), stdout(&out).as_str()), (Some(0), "200\n"));
    let out = sturmlab(&["numeration", "from-pell", "110"]);
    assert_eq!(stdout(&out), "7\n");
    let out = sturmlab(&["numeration", "pell-numbers", "7"]);
    assert_eq!(stdout(&out), "1 2 5 12 29 70 169\n");
}

#[test]
fn usage_errors_exit_2_with_one_line() {
    for args in [
        &["numeration", "from-pell", "21"][..],
        &["frobnicate"],
        &["gaps", "prefix", "--slope", "(0+1*sqrt(2))/1-1", "--exp", "3", "--len", "10"],
        &["gaps", "census", "--length", "10", "--exp", "x/2", "--max-period", "3"],
        &["gaps", "universal", "--exp", "4"],
        &["generate", "mechanical", "--slope", "(1+0*sqrt(0))/2", "--len", "5"],
    ] {
        let out = sturmlab(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
    let out = sturmlab(&["numeration", "from-pell", "21"]);
    assert_eq!(String::from_utf8(out.stderr).unwrap().lines().count(), 1);
}

#[test]
fn generators() {
    let out = sturmlab(&["generate", "mechanical", "--slope", "sqrt2-1", "--len", "8"]);
    assert_eq!(stdout(&out), "01010010\n");
    let out = sturmlab(&["generate", "mechanical", "--slope", "(3-1*sqrt(5))/2", "--len", "8"]);
    assert_eq!(stdout(&out), "01001010\n");
    assert_eq!(stdout(&sturmlab(&["generate", "fibonacci", "--len", "8"])), "01001010\n");
    assert_eq!(stdout(&sturmlab(&["generate", "pell-word", "--len", "8"])), "01010010\n");
}

#[test]
fn words_stream_through_files() {
    let dir = std::env::temp_dir().join(format!("sturmlab-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fib.txt");
    let path = path.to_str().unwrap();
    let out = sturmlab(&["generate", "fibonacci", "--len", "40", "--output", path]);
    assert_eq!(out.status.code(), Some(0));
    let out = sturmlab(&["powers", "endings", "--word", path, "--exp", "3"]);
    assert!(stdout(&out).starts_with("13 22 23 26 34"));
    let out = sturmlab(&["gaps", "word", "--word", path, "--exp", "3"]);
    assert!(stdout(&out).contains("gaps 9 1 3 8"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn prefix_gaps_for_sqrt2() {
    let out = sturmlab(&["gaps", "prefix", "--slope", "sqrt2-1", "--exp", "3", "--len", "20000"]);
    assert_eq!(stdout(&out), "{1,7,10}\n");
}

#[test]
fn sharded_and_sequential_reports_are_identical() {
    for format in ["plain", "csv", "json"] {
        let base = ["--format", format, "gaps", "census", "--length", "40", "--exp", "8/3", "--max-period", "5"];
        let one = sturmlab(&[&["--jobs", "1"][..], &base[..]].concat());
        let four = sturmlab(&[&["--jobs", "4"][..], &base[..]].concat());
        assert_eq!(one.status.code(), Some(0));
        assert_eq!(one.stdout, four.stdout, "{format}");
    }
}

#[test]
fn structured_output_parses() {
    let out = sturmlab(&["--format", "json", "gaps", "universal", "--exp", "3"]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["n"], 17);
    assert_eq!(value["witness"], "0010100101001001");
}

#[test]
fn powers_info_accepts_any_alphabet() {
    let out = sturmlab(&["powers", "info", "--word", "entente"]);
    assert_eq!(stdout(&out), "period 3\nexponent 7/3\nbalanced -\n");
}

#[test]
fn verify_theorem1_and_lemma1() {
    let out = sturmlab(&["verify", "theorem1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("max gap 10"));
    assert!(text.contains("{1,7,10}"));
    assert_eq!(sturmlab(&["verify", "lemma1"]).status.code(), Some(0));
    assert_eq!(sturmlab(&["verify", "rampersad"]).status.code(), Some(0));
}

#[test]
fn verify_all_exits_zero() {
    let out = sturmlab(&["--jobs", "2", "verify", "all"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert_eq!(stdout(&out).lines().filter(|l| l.starts_with("PASS")).count(), 10);
}

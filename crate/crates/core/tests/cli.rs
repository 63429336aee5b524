use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn srcount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_srcount"))
        .args(args)
        .output()
        .expect("run srcount")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Runs with and without `--oracle` and checks both print `expected`.
fn assert_both(args: &[&str], expected: &str) {
    let index = srcount(args);
    assert!(
        index.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&index.stderr)
    );
    assert_eq!(stdout(&index), expected, "index path for {args:?}");
    let mut with_oracle = args.to_vec();
    with_oracle.push("--oracle");
    let oracle = srcount(&with_oracle);
    assert!(oracle.status.success());
    assert_eq!(stdout(&oracle), expected, "oracle path for {args:?}");
}

fn abracadabra_corpus() -> (String, String) {
    (
        data("abracadabra.txt").display().to_string(),
        data("abracadabra.labels").display().to_string(),
    )
}

#[test]
fn count_worked_example() {
    let (text, labels) = abracadabra_corpus();
    let base = ["count", "--text", &text, "--labels", &labels];
    assert_both(
        &[&base[..], &["--pattern", "ab", "--range", "20", "40"]].concat(),
        "1\n",
    );
    assert_both(
        &[
            &base[..],
            &["--pattern", "zz", "--range", "0", "18446744073709551615"],
        ]
        .concat(),
        "0\n",
    );
    // forcing every pattern through the 2D path does not change answers
    assert_both(
        &[
            &base[..],
            &["--pattern", "ab", "--range", "0", "93", "--tau", "1"],
        ]
        .concat(),
        "2\n",
    );
}

#[test]
fn batch_matches_golden_file() {
    let (text, labels) = abracadabra_corpus();
    let queries = data("abracadabra.queries").display().to_string();
    let expected = fs::read_to_string(data("abracadabra.expected")).unwrap();
    let args = [
        "batch",
        "--text",
        &text,
        "--labels",
        &labels,
        "--queries",
        &queries,
        "--universe",
        "93",
    ];
    assert_both(&args, &expected);
    assert_eq!(
        expected.lines().count(),
        fs::read_to_string(data("abracadabra.queries"))
            .unwrap()
            .lines()
            .count()
    );
}

#[test]
fn batch_edge_cases() {
    let (text, labels) = abracadabra_corpus();
    let dir = tempfile::tempdir().unwrap();
    let dir = dir.path();
    let empty = dir.join("empty.queries");
    fs::write(&empty, "").unwrap();
    let out = srcount(&[
        "batch",
        "--text",
        &text,
        "--labels",
        &labels,
        "--queries",
        empty.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "");

    let two = dir.join("two.queries");
    fs::write(&two, "ab 20 40\nb 0 100\n").unwrap();
    let out = srcount(&[
        "batch",
        "--text",
        &text,
        "--labels",
        &labels,
        "--queries",
        two.to_str().unwrap(),
    ]);
    assert_eq!(stdout(&out), "1\n2\n");

    let bad = dir.join("bad.queries");
    fs::write(&bad, "ab 20 40\nab twenty 40\n").unwrap();
    let out = srcount(&[
        "batch",
        "--text",
        &text,
        "--labels",
        &labels,
        "--queries",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn applications() {
    let (text, _) = abracadabra_corpus();
    assert_both(
        &[
            "prsc",
            "--text",
            &text,
            "--pattern",
            "abra",
            "--i",
            "1",
            "--j",
            "11",
        ],
        "2\n",
    );
    assert_both(
        &[
            "prsc",
            "--text",
            &text,
            "--pattern",
            "abra",
            "--i",
            "2",
            "--j",
            "11",
        ],
        "1\n",
    );
    let iv = data("abracadabra.intervals").display().to_string();
    assert_both(
        &[
            "intervals",
            "--text",
            &text,
            "--intervals",
            &iv,
            "--pattern",
            "abra",
            "--i",
            "1",
            "--j",
            "11",
        ],
        "1\n",
    );
    assert_both(
        &[
            "gaps", "--text", &text, "--d", "1", "--p1", "a", "--p2", "a",
        ],
        "2\n",
    );
    assert_both(
        &[
            "gaps", "--text", &text, "--d", "0", "--p1", "ab", "--p2", "ra",
        ],
        "2\n",
    );
    let s1 = data("abab.txt").display().to_string();
    let s2 = data("abba.txt").display().to_string();
    assert_both(
        &[
            "aligned", "--text", &s1, "--text2", &s2, "--p1", "ab", "--p2", "b",
        ],
        "1\n",
    );
}

#[test]
fn exit_codes() {
    let (text, labels) = abracadabra_corpus();
    let dir = tempfile::tempdir().unwrap();
    let dir = dir.path();
    let short = dir.join("short.labels");
    fs::write(&short, "1 2 3").unwrap();
    let out = srcount(&[
        "count",
        "--text",
        &text,
        "--labels",
        short.to_str().unwrap(),
        "--pattern",
        "a",
        "--range",
        "0",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(!out.stderr.is_empty());

    let out = srcount(&[
        "count",
        "--text",
        &text,
        "--labels",
        &labels,
        "--pattern",
        "a",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = srcount(&[
        "count",
        "--text",
        &text,
        "--labels",
        &labels,
        "--pattern",
        "a",
        "--range",
        "0",
        "5",
        "--alphabet",
        "abc",
    ]);
    assert_eq!(out.status.code(), Some(3));

    let out = srcount(&[
        "count",
        "--text",
        &text,
        "--labels",
        &labels,
        "--pattern",
        "a",
        "--range",
        "0",
        "100",
        "--universe",
        "93",
    ]);
    assert_eq!(out.status.code(), Some(3));

    let out = srcount(&[
        "prsc",
        "--text",
        &text,
        "--pattern",
        "a",
        "--i",
        "0",
        "--j",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

const RUNNING: &[u8] = b"abaabaaabbabbbaaab";

fn isaw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isaw"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn build(dir: &TempDir, data: &[u8], mode: &str, extra: &[&str]) -> (String, String) {
    let text = dir.path().join(format!("text-{mode}"));
    let index = dir.path().join(format!("index-{mode}"));
    std::fs::write(&text, data).unwrap();
    let mut args = vec![
        "build",
        "--input",
        s(&text),
        "--output",
        s(&index),
        "--mode",
        mode,
    ];
    args.extend_from_slice(extra);
    let out = isaw(&args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    (s(&text).to_string(), s(&index).to_string())
}

#[test]
fn build_reports_summary() {
    let dir = TempDir::new().unwrap();
    let text = dir.path().join("t");
    let index = dir.path().join("i");
    std::fs::write(&text, RUNNING).unwrap();
    let out = isaw(&[
        "build",
        "--input",
        s(&text),
        "--output",
        s(&index),
        "--mode",
        "linear",
    ]);
    assert!(out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.starts_with("n=18 sigma=2 lambda=4 mode=linear"),
        "{err}"
    );
    assert_eq!(err.lines().count(), 1);

    std::fs::write(&text, b"aaaa").unwrap();
    let out = isaw(&[
        "build",
        "--input",
        s(&text),
        "--output",
        s(&index),
        "--mode",
        "dense",
        "--sigma",
        "2",
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stderr).unwrap().contains("lambda=1"));

    let out = isaw(&["build", "--input", s(&text), "--output", s(&index)]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn query_running_example() {
    let dir = TempDir::new().unwrap();
    for mode in ["dense", "linear"] {
        let (text, index) = build(&dir, RUNNING, mode, &[]);
        let out = isaw(&[
            "query", "--index", &index, "--text", &text, "--range", "8", "14",
        ]);
        assert!(out.status.success());
        assert_eq!(
            String::from_utf8(out.stdout).unwrap(),
            "8\t14\t2\t7\t8\t-\n"
        );

        let batch = dir.path().join("ranges");
        std::fs::write(&batch, "5 14\n3 14\n7 9\n").unwrap();
        let out = isaw(&[
            "query",
            "--index",
            &index,
            "--text",
            &text,
            "--batch",
            s(&batch),
            "--print-word",
        ]);
        assert!(out.status.success());
        let stdout = String::from_utf8(out.stdout).unwrap();
        let lines: Vec<&str> = stdout.lines().collect();
        assert_eq!(lines[0], "5\t14\t3\t4\t6\t-\taba");
        let word = lines[1].rsplit('\t').next().unwrap();
        assert!(["aaaa", "abab", "baba", "bbbb"].contains(&word), "{word}");
        assert_eq!(lines[2], "7\t9\t2\t9\t10\t-\tbb");
    }
}

#[test]
fn query_single_letter_answer() {
    let dir = TempDir::new().unwrap();
    let (text, index) = build(&dir, b"ab", "linear", &["--sigma", "2"]);
    let out = isaw(&[
        "query",
        "--index",
        &index,
        "--text",
        &text,
        "--range",
        "1",
        "1",
        "--print-word",
    ]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "1\t1\t1\t0\t0\tb\tb\n"
    );
}

#[test]
fn query_errors() {
    let dir = TempDir::new().unwrap();
    let (text, index) = build(&dir, RUNNING, "linear", &[]);
    let batch = dir.path().join("ranges");
    std::fs::write(&batch, "8 14\n0 3\n5 19\n").unwrap();
    let out = isaw(&[
        "query",
        "--index",
        &index,
        "--text",
        &text,
        "--batch",
        s(&batch),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "8\t14\t2\t7\t8\t-\n"
    );
    assert_eq!(String::from_utf8(out.stderr).unwrap().lines().count(), 2);

    std::fs::write(&text, b"abaabaaabbabbbaaaa").unwrap();
    let out = isaw(&[
        "query", "--index", &index, "--text", &text, "--range", "1", "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("checksum"));

    let out = isaw(&[
        "query", "--index", &text, "--text", &text, "--range", "1", "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn token_formats_round_trip() {
    let dir = TempDir::new().unwrap();
    let tokens = [500u32, 7, 500, 500, 7, 500, 500, 500, 7, 7];
    let u32le: Vec<u8> = tokens.iter().flat_map(|t| t.to_le_bytes()).collect();
    let (text, index) = build(&dir, &u32le, "dense", &["--token-format", "u32le"]);
    let out = isaw(&[
        "query",
        "--index",
        &index,
        "--text",
        &text,
        "--range",
        "1",
        "1",
        "--print-word",
    ]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "1\t1\t1\t0\t0\t7\t7\n"
    );

    let lines: String = tokens.iter().map(|t| format!("{t}\n")).collect();
    let (text, index) = build(
        &dir,
        lines.as_bytes(),
        "linear",
        &["--token-format", "ascii-lines"],
    );
    let out = isaw(&[
        "query",
        "--index",
        &index,
        "--text",
        &text,
        "--range",
        "1",
        "10",
        "--print-word",
    ]);
    assert!(out.status.success());
    let line = String::from_utf8(out.stdout).unwrap();
    assert!(line.starts_with("1\t10\t"), "{line}");
}

#[test]
fn serialized_index_matches_in_memory() {
    use isaw_core::{AnyIndex, Mode, Text};
    use rand::{rngs::StdRng, Rng, SeedableRng};

    let dir = TempDir::new().unwrap();
    let mut rng = StdRng::seed_from_u64(9);
    let data: Vec<u8> = (0..1 << 20)
        .map(|_| if rng.gen::<bool>() { b'a' } else { b'b' })
        .collect();
    let (text, index) = build(&dir, &data, "linear", &[]);
    let memory = AnyIndex::build(&Text::from_bytes(&data, None).unwrap(), Mode::Linear);
    let ranges: Vec<(usize, usize)> = (0..100)
        .map(|_| {
            let a = rng.gen_range(1..=data.len());
            (a, rng.gen_range(a..=data.len()))
        })
        .collect();
    let batch = dir.path().join("ranges");
    let body: String = ranges.iter().map(|(a, b)| format!("{a} {b}\n")).collect();
    std::fs::write(&batch, body).unwrap();
    let out = isaw(&[
        "query",
        "--index",
        &index,
        "--text",
        &text,
        "--batch",
        s(&batch),
    ]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    for (line, &(a, b)) in stdout.lines().zip(&ranges) {
        let ans = memory.query(a, b).unwrap();
        let fields: Vec<&str> = line.split('\t').collect();
        assert_eq!(fields[2], ans.len.to_string());
    }
    assert_eq!(stdout.lines().count(), 100);
}

#[test]
fn verify_passes_and_catches_faults() {
    let out = isaw(&["verify", "--n-max", "60", "--trials", "20", "--seed", "1"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("PASS\ttexts=21"));

    let out = isaw(&["verify", "--n-max", "60", "--trials", "0", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("FAIL\tabaabaaabbabbbaaab\t"), "{stdout}");
}

#[test]
fn bench_output() {
    let out = isaw(&["bench", "--n", "2048", "--query-count", "0"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "mode\tn\tqueries\tmedian_ns\tp99_ns\tbytes_per_char\n"
    );
    let out = isaw(&[
        "bench",
        "--n",
        "2048",
        "--query-count",
        "50",
        "--modes",
        "linear",
    ]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout.lines().count(), 3);
    assert!(stdout
        .lines()
        .nth(2)
        .unwrap()
        .starts_with("linear\t2048\t50\t"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(isaw(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        isaw(&["query", "--index", "x", "--text", "y"])
            .status
            .code(),
        Some(2)
    );
}

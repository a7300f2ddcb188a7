use std::io::Write;
use std::process::Command;

fn bench(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_bench"))
        .args(args)
        .output()
        .unwrap()
}

#[test]
fn pattern_equal_to_text_has_one_match() {
    let mut fasta = tempfile::NamedTempFile::new().unwrap();
    fasta
        .write_all(b">only\nGCGCGTACAC\nACCGCCCG\n>ignored\nGCGCGTACACACCGCCCG\n")
        .unwrap();
    let out = bench(&[
        "--algorithm",
        "all",
        "--all-algorithms",
        "--pattern",
        "GCGCGTACACACCGCCCG",
        "--text-file",
        fasta.path().to_str().unwrap(),
        "--iterations",
        "1",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<Vec<&str>> = stdout
        .lines()
        .skip(1)
        .map(|l| l.split('\t').collect())
        .collect();
    let names: Vec<&str> = rows.iter().map(|r| r[0]).collect();
    assert_eq!(
        names,
        ["bndm", "horspool", "bom", "shift-and", "kmp", "naive"]
    );
    assert!(rows.iter().all(|r| r[4] == "1"));
}

#[test]
fn single_algorithm_pretty() {
    let out = bench(&[
        "--algorithm",
        "horspool",
        "--synthetic",
        "5000:1",
        "--pattern",
        "ACGT",
        "--iterations",
        "10",
        "--no-init",
        "--format",
        "pretty",
    ]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("Horspool"));
    assert!(stdout.contains("construction excluded"));
    assert!(!stdout.contains("BNDM"));
}

#[test]
fn same_seed_same_counts() {
    let args = [
        "--synthetic",
        "20000:9",
        "--pattern",
        "ACG",
        "--iterations",
        "2",
    ];
    let counts = |out: std::process::Output| -> Vec<String> {
        String::from_utf8(out.stdout)
            .unwrap()
            .lines()
            .skip(1)
            .map(|l| l.rsplit('\t').next().unwrap().to_string())
            .collect()
    };
    assert_eq!(counts(bench(&args)), counts(bench(&args)));
}

#[test]
fn errors_exit_nonzero_with_diagnostics() {
    let long = "A".repeat(65);
    let cases: Vec<Vec<&str>> = vec![
        vec![
            "--synthetic",
            "100:1",
            "--pattern",
            &long,
            "--iterations",
            "1",
        ],
        vec!["--text-file", "/nonexistent/file.fa", "--iterations", "1"],
        vec!["--algorithm", "quicksearch", "--synthetic", "100:1"],
        vec!["--synthetic", "100:1", "--iterations", "0"],
        vec!["--synthetic", "oops"],
        vec!["--iterations", "1"],
    ];
    for args in cases {
        let out = bench(&args);
        assert!(!out.status.success(), "{args:?} succeeded");
        assert!(out.stdout.is_empty(), "{args:?} wrote a report");
        assert!(!out.stderr.is_empty(), "{args:?} printed no diagnostic");
    }
}

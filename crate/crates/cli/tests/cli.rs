//! End-to-end runs of the command dispatcher against real files.

use std::path::PathBuf;

use rankcode_cli::app::{self, Outcome, EXIT_BUDGET, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};

fn run(args: &[&str]) -> Outcome {
    let owned: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    app::run(&owned)
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("rankcode-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).expect("write temp file");
    path
}

/// A Frobenius-matrix [4,2] code over GF(2^4).
const GABIDULIN_4_2: &str = "\
field N=4 poly=13
code n=4 k=2
row 1 2 4 8
row 1 4 3 c
";

#[test]
fn analyze_reports_code_parameters() {
    let path = write_temp("an.txt", GABIDULIN_4_2);
    let out = run(&["code", "analyze", "--file", path.to_str().unwrap()]);
    assert_eq!(out.exit_code, EXIT_OK);
    assert!(out.stdout.contains("min-rank-distance"));
    assert!(out.stdout.contains('3'));
    assert!(out.stdout.contains("mrd"));

    let tsv = run(&["code", "analyze", "--file", path.to_str().unwrap(), "--tsv"]);
    assert_eq!(tsv.exit_code, EXIT_OK);
    assert!(tsv.stdout.contains("min-rank-distance\t3"));
    assert!(tsv.stdout.contains("mrd\ttrue"));
    assert!(tsv.stdout.contains("divisor\t1"));
}

#[test]
fn decode_corrects_single_rank_error() {
    let path = write_temp("dec.txt", GABIDULIN_4_2);
    // codeword (1,2,4,8) + rank-1 error (1,1,1,1)
    let out = run(&[
        "code",
        "decode",
        "--file",
        path.to_str().unwrap(),
        "--word",
        "0",
        "3",
        "5",
        "9",
        "--tsv",
    ]);
    assert_eq!(out.exit_code, EXIT_OK);
    assert!(out.stdout.contains("codeword\t1 2 4 8"));
    assert!(out.stdout.contains("distance\t1"));
    assert!(out.stdout.contains("unique\ttrue"));
}

#[test]
fn truncated_row_gives_line_numbered_diagnostic() {
    let path = write_temp("bad.txt", "field N=4 poly=13\ncode n=4 k=2\nrow 1 2 4 8\nrow 1 4 3\n");
    let out = run(&["code", "analyze", "--file", path.to_str().unwrap()]);
    assert_eq!(out.exit_code, EXIT_USAGE);
    assert!(out.stderr.contains("line 4"), "stderr: {}", out.stderr);
}

#[test]
fn unknown_command_and_missing_flags() {
    assert_eq!(run(&["frobnicate"]).exit_code, EXIT_USAGE);
    assert_eq!(run(&["code", "analyze"]).exit_code, EXIT_USAGE);
    assert_eq!(run(&[]).exit_code, EXIT_USAGE);
}

#[test]
fn budget_exhaustion_is_distinct_exit_code() {
    let path = write_temp("budget.txt", GABIDULIN_4_2);
    let out = run(&["code", "analyze", "--file", path.to_str().unwrap(), "--max-enum-bits", "4"]);
    assert_eq!(out.exit_code, EXIT_BUDGET);
    assert!(out.stderr.contains("budget"));
}

#[test]
fn product_and_fold_commands() {
    let left = write_temp("prod-a.txt", "field N=5\ncode n=2 k=1\nrow 1 3\n");
    let right = write_temp("prod-b.txt", "field N=5\ncode n=2 k=1\nrow 2 7\n");
    let out = run(&[
        "code",
        "product",
        "--file",
        left.to_str().unwrap(),
        "--other",
        right.to_str().unwrap(),
        "--tsv",
    ]);
    assert_eq!(out.exit_code, EXIT_OK);
    assert!(out.stdout.contains("n\t4"));
    assert!(out.stdout.contains("k\t2"));

    let fold = run(&["code", "fold", "--file", left.to_str().unwrap(), "--r", "2", "--tsv"]);
    assert_eq!(fold.exit_code, EXIT_OK);
    assert!(fold.stdout.contains("n\t4"));
    assert!(fold.stdout.contains("k\t1"));
}

#[test]
fn mrd_commands() {
    let out = run(&["mrd", "new", "--N", "4", "--n", "4", "--k", "2", "--tsv"]);
    assert_eq!(out.exit_code, EXIT_OK);
    assert!(out.stdout.contains("mrd\ttrue"));

    let witness = run(&["mrd", "witness", "--n", "4", "--k", "2", "--N", "4", "--tsv"]);
    assert_eq!(witness.exit_code, EXIT_OK);
    assert!(witness.stdout.contains("A_3\t225"));
    assert!(witness.stdout.contains("A_4\t30"));
    // the k = 1 family is excluded
    assert_eq!(run(&["mrd", "witness", "--n", "4", "--k", "1", "--N", "4"]).exit_code, EXIT_USAGE);
}

#[test]
fn circulant_code_command() {
    let out = run(&["circulant", "code", "--N", "4", "--basis", "3", "6", "c", "--tsv"]);
    assert_eq!(out.exit_code, EXIT_OK);
    assert!(out.stdout.contains("dimension\t3"));
    assert!(out.stdout.contains("cyclic\ttrue"));

    let sym = run(&["circulant", "norm", "--N", "4", "--poly", "1+x", "--tsv"]);
    assert!(sym.stdout.contains("norm\t3"));
    assert!(sym.stdout.contains("matrix-rank\t3"));
}

#[test]
fn amrd_check_surfaces_witness() {
    // two identical columns force a violation
    let h =
        write_temp("h-bad.txt", "field N=5\ncode n=4 k=3\nrow 1 1 0 0\nrow 0 0 1 0\nrow 0 0 0 1\n");
    let out = run(&["amrd", "check", "--file", h.to_str().unwrap(), "--tsv"]);
    assert_eq!(out.exit_code, EXIT_OK);
    assert!(out.stdout.contains("holds\tfalse"));
    assert!(out.stdout.contains("violating-pair\t{1} {2}"));
    assert!(out.stdout.contains("low-rank-codeword-rank"));
    // building from a failing matrix is refused
    let build = run(&["amrd", "build", "--file", h.to_str().unwrap()]);
    assert_eq!(build.exit_code, EXIT_USAGE);
}

#[test]
fn amrd_compare_requires_odd_redundancy() {
    let out = run(&["amrd", "compare", "--n", "4", "--k", "1", "--N", "4", "--tsv"]);
    assert_eq!(out.exit_code, EXIT_OK);
    assert!(out.stdout.contains("rank-metric-correctable\t226"));
    assert!(out.stdout.contains("hamming-metric-correctable\t61"));
    assert_eq!(run(&["amrd", "compare", "--n", "4", "--k", "2", "--N", "4"]).exit_code, EXIT_USAGE);
}

#[test]
fn extremal_commands() {
    let out =
        run(&["extremal", "a", "--n", "3", "--r", "1", "--d", "2", "--N", "3", "--exact", "--tsv"]);
    assert_eq!(out.exit_code, EXIT_OK);
    assert!(out.stdout.contains("size\t7"));

    let greedy = run(&[
        "extremal",
        "a",
        "--n",
        "3",
        "--r",
        "1",
        "--d",
        "2",
        "--N",
        "3",
        "--greedy",
        "--witness",
    ]);
    assert_eq!(greedy.exit_code, EXIT_OK);
    assert!(greedy.stdout.contains("verified"));

    let bound = run(&["extremal", "bound", "--n", "3", "--d", "3", "--N", "4", "--tsv"]);
    assert!(bound.stdout.contains("upper-bound\t15"));

    let min_k = run(&[
        "extremal",
        "minK",
        "--n",
        "2",
        "--t",
        "1",
        "--m",
        "2",
        "--N",
        "2",
        "--max-enum-bits",
        "30",
        "--tsv",
    ]);
    assert_eq!(min_k.exit_code, EXIT_OK);
    assert!(min_k.stdout.contains("exact-min-size\t6"));
    assert!(min_k.stdout.contains("sphere-bound\t3"));
}

#[test]
fn covering_commands_and_seeded_determinism() {
    let rep = write_temp("rep.txt", "field N=3\ncode n=3 k=1\nrow 1 1 1\n");
    let out = run(&["covering", "radius", "--code", rep.to_str().unwrap(), "--tsv"]);
    assert_eq!(out.exit_code, EXIT_OK);
    assert!(out.stdout.contains("covering-radius\t2"));

    let exact = run(&[
        "covering",
        "multi",
        "--code",
        rep.to_str().unwrap(),
        "--m",
        "2",
        "--exact",
        "--tsv",
    ]);
    assert!(exact.stdout.contains("radius\t3"));
    assert!(exact.stdout.contains("exact\ttrue"));

    let sampled = |seed: &str| {
        run(&[
            "covering",
            "multi",
            "--code",
            rep.to_str().unwrap(),
            "--m",
            "2",
            "--samples",
            "20",
            "--seed",
            seed,
            "--tsv",
        ])
    };
    let first = sampled("7");
    let second = sampled("7");
    assert_eq!(first.stdout, second.stdout);
    assert!(first.stdout.contains("exact\tfalse"));

    let bound =
        run(&["covering", "sphere-bound", "--n", "4", "--t", "1", "--m", "2", "--N", "4", "--tsv"]);
    assert!(bound.stdout.contains("sphere-bound\tinf"));
}

#[test]
fn fuzzy_commands() {
    let rep = write_temp("fz.txt", "field N=2\ncode n=2 k=1\nrow 1 1\n");
    let out = run(&[
        "fuzzy",
        "decode",
        "--code",
        rep.to_str().unwrap(),
        "--word",
        "1",
        "1",
        "--model",
        "symmetric",
        "--p",
        "0.9",
        "--tsv",
    ]);
    assert_eq!(out.exit_code, EXIT_OK);
    assert!(out.stdout.contains("uniquely-decodable\ttrue"));
    assert!(out.stdout.contains("1 1"));

    let mindist = run(&[
        "fuzzy",
        "mindist",
        "--code",
        rep.to_str().unwrap(),
        "--model",
        "symmetric",
        "--p",
        "0.9",
        "--tsv",
    ]);
    assert_eq!(mindist.exit_code, EXIT_OK);
    assert!(mindist.stdout.contains("fuzzy-min-distance"));

    let bad_model = run(&[
        "fuzzy",
        "mindist",
        "--code",
        rep.to_str().unwrap(),
        "--model",
        "warped",
        "--p",
        "0.9",
    ]);
    assert_eq!(bad_model.exit_code, EXIT_USAGE);
}

#[test]
fn mcode_commands() {
    let ens = write_temp(
        "ens.txt",
        "field N=4 poly=13\ncode n=4 k=2\nrow 1 2 4 8\nrow 1 4 3 c\n---\ncirculant N=4\nbasis 3\n",
    );
    let classify = run(&["mcode", "classify", "--file", ens.to_str().unwrap(), "--tsv"]);
    assert_eq!(classify.exit_code, EXIT_OK);
    assert!(classify.stdout.contains("bicode"));
    assert!(classify.stdout.contains("semi-circulant-type-II"));

    let analyze = run(&["mcode", "analyze", "--file", ens.to_str().unwrap(), "--tsv"]);
    assert_eq!(analyze.exit_code, EXIT_OK);
    assert!(analyze.stdout.contains("linear"));
    assert!(analyze.stdout.contains("circulant"));
}

#[test]
fn verify_suites() {
    let out = run(&["verify", "--suite", "counting"]);
    assert_eq!(out.exit_code, EXIT_OK);
    assert!(out.stdout.contains("PASS"));

    let tsv = run(&["verify", "--suite", "circulant", "--tsv"]);
    assert_eq!(tsv.exit_code, EXIT_OK);
    // header plus one line per check, machine readable
    let mut lines = tsv.stdout.lines();
    assert_eq!(lines.next(), Some("result\tcheck\texpected\tobserved"));
    for line in lines {
        let fields: Vec<&str> = line.split('\t').collect();
        assert_eq!(fields.len(), 4);
        assert_eq!(fields[0], "PASS");
    }

    let unknown = run(&["verify", "--suite", "nonsense"]);
    assert_eq!(unknown.exit_code, EXIT_USAGE);
    let _ = EXIT_CHECK_FAILED;
}

#[test]
fn tsv_numbers_round_trip() {
    let out = run(&["mrd", "spectrum", "--n", "4", "--k", "2", "--N", "4", "--tsv"]);
    assert_eq!(out.exit_code, EXIT_OK);
    let mut total: u64 = 0;
    let mut reported_total: Option<u64> = None;
    for line in out.stdout.lines() {
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() == 2 {
            if let (Ok(_s), Ok(count)) = (fields[0].parse::<u64>(), fields[1].parse::<u64>()) {
                total += count;
            }
            if fields[0] == "total" {
                reported_total = Some(fields[1].parse().expect("total parses"));
            }
        }
    }
    assert_eq!(reported_total, Some(total));
    assert_eq!(total, 256);
}

mod common;

use std::fs;
use std::path::Path;

use semirings::cli::{run, EXIT_CAPABILITY, EXIT_INVALID, EXIT_OK, EXIT_USAGE};
use semirings::records::{parse_line, Line};

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn semirings(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("semirings").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Outcome {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn first_line(o: &Outcome) -> &str {
    o.out.lines().next().unwrap_or("")
}

#[test]
fn count_examples() {
    let o = semirings(&["count", "--order", "4", "--ai", "--equiv", "iso"]);
    assert_eq!((o.code, first_line(&o)), (EXIT_OK, "866"));
    assert!(o.out.lines().nth(1).unwrap().contains("distributive_hits=866"));
    let o = semirings(&["count", "--order", "2", "--equiv", "anti"]);
    assert_eq!((o.code, first_line(&o)), (EXIT_OK, "9"));
    let o = semirings(&["count", "--order", "1"]);
    assert_eq!((o.code, first_line(&o)), (EXIT_OK, "1"));
    let o = semirings(&["--threads", "1", "count", "-n", "3", "--with-one"]);
    assert_eq!((o.code, first_line(&o)), (EXIT_OK, "22"));
}

#[test]
fn capability_and_usage_errors() {
    let o = semirings(&["count", "-n", "7"]);
    assert_eq!(o.code, EXIT_CAPABILITY);
    assert!(o.err.contains("order 7"), "{}", o.err);
    assert!(o.out.is_empty());
    assert_eq!(semirings(&["count"]).code, EXIT_USAGE);
    assert_eq!(semirings(&["count", "-n", "9"]).code, EXIT_USAGE);
    assert_eq!(semirings(&["table", "--table", "5"]).code, EXIT_USAGE);
    assert_eq!(semirings(&["count", "-n", "2", "--equiv", "both"]).code, EXIT_USAGE);
    assert_eq!(semirings(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(semirings(&["--help"]).code, EXIT_OK);
}

fn csv_row(csv: &str, n: usize) -> Vec<String> {
    let line = csv.lines().nth(n).unwrap();
    line.split(',').skip(1).map(str::to_string).collect()
}

#[test]
fn table_examples() {
    let o = semirings(&["table", "--table", "1", "--max-order", "3", "--format", "csv"]);
    assert_eq!(o.code, EXIT_OK);
    let header = o.out.lines().next().unwrap();
    for name in ["no additional constraints", "with 0", "with 1", "with 0 + 1"] {
        assert!(header.contains(&format!("up to isomorphism: {name},")), "{header}");
    }
    let row = csv_row(&o.out, 3);
    let plain: Vec<&str> = row.iter().map(|c| c.trim_end_matches('*')).collect();
    assert_eq!(plain, ["132", "22", "22", "6", "106", "20", "21", "6"]);
    assert!(row[1].ends_with('*') && row[5].ends_with('*'), "unpublished cells are flagged");

    let o = semirings(&["table", "--table", "4", "--max-order", "3", "--format", "csv"]);
    let first: Vec<String> = (1..=3).map(|n| csv_row(&o.out, n)[0].clone()).collect();
    assert_eq!(first, ["1", "4", "29"]);

    let o = semirings(&["table", "--table", "3", "--max-order", "1", "--format", "csv"]);
    assert_eq!(csv_row(&o.out, 1), vec!["1"; 8]);
    assert_eq!(o.out.lines().count(), 2);
}

#[test]
fn table_output_is_deterministic_and_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t2.md");
    let a = semirings(&["table", "--table", "2", "--max-order", "4"]);
    let b = semirings(&["--threads", "2", "table", "--table", "2", "--max-order", "4"]);
    assert_eq!(a.out, b.out);
    let o = semirings(&["table", "--table", "2", "--max-order", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.out.is_empty());
    assert_eq!(fs::read_to_string(&path).unwrap(), a.out);
    assert!(a.out.contains("(169) exceeds"), "published inconsistency is flagged");
    let jsonl = semirings(&["table", "--table", "3", "--max-order", "2", "--format", "jsonl"]);
    for line in jsonl.out.lines() {
        serde_json::from_str::<serde_json::Value>(line).unwrap();
    }
    assert_eq!(jsonl.out.lines().count(), 16);
}

fn records(text: &str) -> (usize, Option<u64>) {
    let mut count = 0;
    let mut claimed = None;
    for line in text.lines() {
        match parse_line(line).unwrap() {
            Line::Semiring(_) => count += 1,
            Line::Summary(s) => claimed = Some(s.count),
        }
    }
    (count, claimed)
}

#[test]
fn enumerate_examples() {
    let o = semirings(&["enumerate", "-n", "1"]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(first_line(&o), r#"{"n":1,"add":[[0]],"mul":[[0]]}"#);
    let o = semirings(&["enumerate", "-n", "2"]);
    assert_eq!(records(&o.out), (10, Some(10)));
    assert_eq!(o.out, semirings(&["enumerate", "-n", "2"]).out);
}

const FILTER_FLAGS: [&str; 4] = ["--with-zero", "--with-one", "--ai", "--commutative"];

fn check(path: &Path) -> Outcome {
    semirings(&["check", path.to_str().unwrap()])
}

#[test]
fn enumerate_then_check_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for n in 1..=4 {
        for equiv in ["iso", "anti"] {
            for bits in 0..16 {
                let order = n.to_string();
                let mut args = vec!["count", "-n", &order, "--equiv", equiv];
                args.extend((0..4).filter(|i| bits & (1 << i) != 0).map(|i| FILTER_FLAGS[i]));
                let count: u64 = first_line(&semirings(&args)).parse().unwrap();

                let path = dir.path().join(format!("{n}-{equiv}-{bits}.jsonl"));
                args[0] = "enumerate";
                args.extend(["--out", path.to_str().unwrap()]);
                let o = semirings(&args);
                assert_eq!(o.code, EXIT_OK, "{args:?}: {}", o.err);
                let text = fs::read_to_string(&path).unwrap();
                assert_eq!(records(&text), (count as usize, Some(count)), "{args:?}");

                let o = check(&path);
                assert_eq!(o.code, EXIT_OK, "{args:?}");
                assert_eq!(o.out.lines().last().unwrap(), format!("{count} records, 0 invalid"));
            }
        }
    }
}

/// Rows of a JSON table as a flat vector.
fn flat(rows: &serde_json::Value) -> Vec<usize> {
    rows.as_array()
        .unwrap()
        .iter()
        .flat_map(|r| r.as_array().unwrap().iter().map(|c| c.as_u64().unwrap() as usize))
        .collect()
}

type Triple = (usize, usize, usize);

/// First triple, in lexicographic order, at which the left and the right
/// distributive law fail, computed by brute force.
fn failing_triples(add: &[usize], mul: &[usize], n: usize) -> (Option<Triple>, Option<Triple>) {
    let at = |t: &[usize], x: usize, y: usize| t[x * n + y];
    let triples = || (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))));
    let left = triples().find(|&(x, y, z)| {
        at(mul, x, at(add, y, z)) != at(add, at(mul, x, y), at(mul, x, z))
    });
    let right = triples().find(|&(x, y, z)| {
        at(mul, at(add, y, z), x) != at(add, at(mul, y, x), at(mul, z, x))
    });
    (left, right)
}

/// Changes one product in some record so that multiplication stays
/// associative but stops distributing. Returns the 1-based line number and
/// the oracle's failing triples.
fn break_distributivity(lines: &mut [String], n: usize) -> (usize, (Option<Triple>, Option<Triple>)) {
    for (i, text) in lines.iter_mut().enumerate() {
        let mut v: serde_json::Value = serde_json::from_str(text).unwrap();
        if v.get("mul").is_none() {
            continue;
        }
        let add = flat(&v["add"]);
        let mul = flat(&v["mul"]);
        for cell in 0..n * n {
            for value in 0..n {
                let mut m = mul.clone();
                m[cell] = value;
                if common::associative(&m, n) && !common::distributive(&m, &add, n) {
                    v["mul"][cell / n][cell % n] = value.into();
                    *text = serde_json::to_string(&v).unwrap();
                    return (i + 1, failing_triples(&add, &m, n));
                }
            }
        }
    }
    panic!("no suitable mutation");
}

#[test]
fn a_single_mutation_is_found_and_localised() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("three.jsonl");
    let o = semirings(&["enumerate", "-n", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_OK);
    let mut lines: Vec<String> = fs::read_to_string(&path).unwrap().lines().map(str::to_string).collect();
    let (line, (left, right)) = break_distributivity(&mut lines, 3);
    fs::write(&path, lines.join("\n") + "\n").unwrap();

    let o = check(&path);
    assert_eq!(o.code, EXIT_INVALID);
    assert!(o.out.ends_with(", 1 invalid\n"), "{}", o.out);
    let report = o.out.lines().find(|l| l.contains("invalid:")).unwrap();
    assert!(report.starts_with(&format!("line {line}: invalid: ")), "{report}");
    for (law, triple) in [("left", left), ("right", right)] {
        let expected = triple.map(|(x, y, z)| format!("{law} distributivity fails at (x, y, z) = ({x}, {y}, {z})"));
        match expected {
            Some(e) => assert!(report.contains(&e), "{report} lacks {e}"),
            None => assert!(!report.contains(&format!("{law} distributivity")), "{report}"),
        }
    }
}

#[test]
fn check_edge_cases() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.jsonl");
    fs::write(&empty, "").unwrap();
    let o = check(&empty);
    assert_eq!((o.code, o.out.as_str()), (EXIT_OK, "0 records, 0 invalid\n"));

    let mixed = dir.path().join("mixed.jsonl");
    fs::write(
        &mixed,
        "{\"n\":1,\"add\":[[0]],\"mul\":[[0]]}\n{oops\n{\"n\":1,\"add\":[[0]],\"mul\":[[0]]}\n",
    )
    .unwrap();
    let o = check(&mixed);
    assert_eq!(o.code, EXIT_INVALID);
    assert!(o.err.contains("line 2: malformed"), "{}", o.err);
    assert!(o.out.contains("line 3: ok"));

    let o = check(&dir.path().join("absent.jsonl"));
    assert_eq!(o.code, EXIT_INVALID);
    assert!(o.err.contains("absent.jsonl"));
}

#[test]
fn cache_directory_is_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let cache_arg = cache.to_str().unwrap();
    let plain = semirings(&["enumerate", "-n", "3", "--equiv", "anti"]);
    let cold = semirings(&["--cache-dir", cache_arg, "enumerate", "-n", "3", "--equiv", "anti"]);
    let files: Vec<_> = fs::read_dir(&cache).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(files.len(), 2, "one file per reduct census");
    let snapshot: Vec<Vec<u8>> = files.iter().map(|p| fs::read(p).unwrap()).collect();
    let warm = semirings(&["--cache-dir", cache_arg, "enumerate", "-n", "3", "--equiv", "anti"]);
    assert_eq!(plain.out, cold.out);
    assert_eq!(plain.out, warm.out);

    fs::write(&files[0], "semirings-semigroup-cache v1 garbage\n012\n").unwrap();
    let repaired = semirings(&["--cache-dir", cache_arg, "enumerate", "-n", "3", "--equiv", "anti"]);
    assert_eq!(plain.out, repaired.out);
    let after: Vec<Vec<u8>> = files.iter().map(|p| fs::read(p).unwrap()).collect();
    assert_eq!(snapshot, after, "damaged file is regenerated byte for byte");
}

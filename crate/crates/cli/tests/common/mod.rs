#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gammabw"))
        .args(args)
        .output()
        .expect("gammabw runs")
}

/// `(fixture file, arguments)` pairs from `cases.txt`.
pub fn cases() -> Vec<(String, Vec<String>)> {
    let text = std::fs::read_to_string(fixtures_dir().join("cases.txt")).unwrap();
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (file, args) = l.split_once('|').expect("file | args");
            let args = args.split_whitespace().map(str::to_string).collect();
            (file.trim().to_string(), args)
        })
        .collect()
}

/// Fixtures whose bytes differ from a fresh run, with a short reason.
pub fn golden_mismatches() -> Vec<String> {
    let mut bad = Vec::new();
    for (file, args) in cases() {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = run(&args);
        let expected = std::fs::read(fixtures_dir().join(&file)).unwrap();
        if !out.status.success() {
            bad.push(format!("{file}: exit {:?}", out.status.code()));
        } else if out.stdout != expected {
            bad.push(format!("{file}: output differs"));
        }
    }
    bad
}

/// Parsed csv: header columns and numeric rows, with `#` lines dropped.
pub fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut lines = text.lines().filter(|l| !l.starts_with('#'));
    let header = lines
        .next()
        .unwrap()
        .split(',')
        .map(str::to_string)
        .collect();
    let rows = lines
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect();
    (header, rows)
}

/// The `# ` annotation block of a curve csv: columns and rows.
pub fn parse_annotation(text: &str) -> (Vec<String>, Vec<Vec<f64>>) {
    let body: Vec<&str> = text
        .lines()
        .filter_map(|l| l.strip_prefix("# "))
        .skip(1)
        .collect();
    parse_csv(&body.join("\n"))
}

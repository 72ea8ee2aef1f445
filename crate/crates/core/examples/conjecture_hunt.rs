//! Streams the connected order <= 7 corpus through the counterexample
//! search, as `forcing-lab conjecture` does.

use forcing_lab::cli::{cmd_conjecture, resolve_cap, RuleChoice};

const CORPUS: &str = include_str!("../tests/data/connected_le7.g6");

pub fn run() -> Vec<String> {
    let mut found = Vec::new();
    let cap = resolve_cap(None, None).unwrap();
    let summary = cmd_conjecture(CORPUS.as_bytes(), &mut found, RuleChoice::Both, cap, 4).unwrap();
    let mut out: Vec<String> = String::from_utf8(found)
        .unwrap()
        .lines()
        .map(String::from)
        .collect();
    out.push(serde_json::to_string(&summary).unwrap());
    out
}

#[allow(dead_code)]
fn main() {
    for line in run() {
        println!("{line}");
    }
}

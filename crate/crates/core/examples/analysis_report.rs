//! The JSON report `forcing-lab analyze` prints, built directly.

use forcing_lab::cli::cmd_analyze_json;
use forcing_lab::generators::star;
use forcing_lab::{Cap, Rule};

pub fn run() -> Vec<String> {
    let g = star(5).unwrap();
    vec![cmd_analyze_json(&g, &Rule::ALL, Cap::default()).unwrap()]
}

#[allow(dead_code)]
fn main() {
    for line in run() {
        println!("{line}");
    }
}

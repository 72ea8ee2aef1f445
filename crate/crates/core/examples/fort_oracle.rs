//! Forcing numbers from fort transversals, no propagation involved.

use forcing_lab::forts::{enumerate_forts, min_fort_transversal};
use forcing_lab::generators::{cycle, path, sgap, wheel};
use forcing_lab::search::Analysis;
use forcing_lab::{Cap, Rule};

pub fn run() -> Vec<String> {
    let cap = Cap::default();
    let mut out = Vec::new();
    for (name, g) in [
        ("P6", path(6).unwrap()),
        ("C6", cycle(6).unwrap()),
        ("W5", wheel(5).unwrap()),
        ("sgap(0)", sgap(0).unwrap()),
    ] {
        for rule in Rule::ALL {
            let forts = enumerate_forts(&g, rule, true, cap).unwrap();
            let t = min_fort_transversal(&g, rule, cap).unwrap();
            let z = Analysis::new(&g, rule, cap).unwrap().forcing_number();
            assert_eq!(t.len(), z);
            out.push(format!(
                "{name} {}: {} minimal forts, transversal {t}, Z={z}",
                rule.name(),
                forts.len()
            ));
        }
    }
    out
}

#[allow(dead_code)]
fn main() {
    for line in run() {
        println!("{line}");
    }
}

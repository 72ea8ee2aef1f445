//! Round-by-round forces on the wheel W5 under both rules.

use forcing_lab::generators::wheel;
use forcing_lab::{propagate, Rule, VertexSet};

pub fn run() -> Vec<String> {
    let g = wheel(5).unwrap();
    let mut out = Vec::new();
    for (b, rule) in [
        ([0, 1, 4], Rule::Standard),
        ([0, 1, 2], Rule::Standard),
        ([0, 1, 2], Rule::Psd),
    ] {
        let rec = propagate(&g, VertexSet::from(b), rule);
        out.push(format!(
            "{} from {}: time {:?}",
            rule.name(),
            VertexSet::from(b),
            rec.time
        ));
        for (i, round) in rec.forces.iter().enumerate() {
            let forces: Vec<String> = round
                .iter()
                .map(|f| format!("{}->{}", f.forcer, f.forced))
                .collect();
            out.push(format!("  round {}: {}", i + 1, forces.join(" ")));
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

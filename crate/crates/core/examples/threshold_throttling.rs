//! Random threshold graphs: recognition, Z = upper Z, and throttling equal
//! to the order.

use forcing_lab::classify::{is_threshold, threshold_tree};
use forcing_lab::generators::random_threshold_tree;
use forcing_lab::search::Analysis;
use forcing_lab::{to_graph6, Cap, Rule};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run() -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut out = Vec::new();
    for n in 4..=9 {
        let tree = random_threshold_tree(n, &mut rng);
        let g = tree.to_graph().unwrap();
        let a = Analysis::new(&g, Rule::Standard, Cap::default()).unwrap();
        let spine: String = threshold_tree(&g)
            .unwrap()
            .spine_ops()
            .into_iter()
            .collect();
        out.push(format!(
            "{} spine={spine} threshold={} Z={} upper={} th={} fixed={:?}",
            to_graph6(&g),
            is_threshold(&g),
            a.forcing_number(),
            a.upper_forcing_number(),
            a.throttling(),
            a.fixed_pt()
        ));
    }
    out
}

#[allow(dead_code)]
fn main() {
    for line in run() {
        println!("{line}");
    }
}

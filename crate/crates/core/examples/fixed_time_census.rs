//! Connected graphs of orders 4 and 5 whose minimal standard forcing sets
//! all take the same time, at least two rounds.

use forcing_lab::graph6::{from_graph6, to_graph6};
use forcing_lab::search::Analysis;
use forcing_lab::{Cap, Rule};

const CORPUS: &str = include_str!("../tests/data/connected_le7.g6");

pub fn run() -> Vec<String> {
    let mut out = Vec::new();
    for order in [4, 5] {
        let hits: Vec<String> = CORPUS
            .lines()
            .map(|l| from_graph6(l).unwrap())
            .filter(|g| g.order() == order)
            .filter_map(|g| {
                let t = Analysis::new(&g, Rule::Standard, Cap::default())
                    .unwrap()
                    .fixed_pt()?;
                (t >= 2).then(|| format!("{}:{t}", to_graph6(&g)))
            })
            .collect();
        out.push(format!(
            "order {order}: {} graphs {}",
            hits.len(),
            hits.join(" ")
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

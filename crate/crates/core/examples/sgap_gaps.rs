//! PSD propagation-time sets with gaps: P_{8+2k} joined with 7+2k
//! independent vertices. Pass `1` to also run the order-19 member.

use forcing_lab::generators::sgap;
use forcing_lab::search::Analysis;
use forcing_lab::{Cap, Rule};

pub fn run_k(k: usize) -> String {
    let g = sgap(k).unwrap();
    let a = Analysis::new(&g, Rule::Psd, Cap::new(g.order())).unwrap();
    let (pt, ept) = (a.pt_set(), a.ept_set());
    format!(
        "k={k} n={} Z+={} upper Z+={} PT+={:?} EPT+={:?} gaps={:?}",
        g.order(),
        a.forcing_number(),
        a.upper_forcing_number(),
        pt.to_vec(),
        ept.to_vec(),
        ept.gaps
    )
}

pub fn run() -> Vec<String> {
    vec![run_k(0)]
}

#[allow(dead_code)]
fn main() {
    let max_k: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(0);
    for k in 0..=max_k {
        println!("{}", run_k(k));
    }
}

//! Fast-join recognition from complement components, and the one-round
//! behaviour it predicts.

use forcing_lab::classify::fast_join_verdict;
use forcing_lab::generators::{random_psd_fast_join, random_standard_fast_join, wheel};
use forcing_lab::search::Analysis;
use forcing_lab::{to_graph6, Cap, Graph, Rule};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn describe(g: &Graph) -> String {
    let v = fast_join_verdict(g).unwrap();
    let shapes: Vec<String> = v
        .complement_components
        .iter()
        .map(|c| format!("{:?}", c.shape))
        .collect();
    let ept = |r| {
        Analysis::new(g, r, Cap::default())
            .unwrap()
            .ept_set()
            .to_vec()
    };
    format!(
        "{} psd_fast={} standard_fast={} EPT={:?} EPT+={:?} complement=[{}]",
        to_graph6(g),
        v.psd_fast,
        v.standard_fast,
        ept(Rule::Standard),
        ept(Rule::Psd),
        shapes.join(", ")
    )
}

pub fn run() -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    vec![
        describe(&random_psd_fast_join(8, &mut rng).unwrap()),
        describe(&random_standard_fast_join(9, &mut rng).unwrap()),
        describe(&wheel(5).unwrap()),
    ]
}

#[allow(dead_code)]
fn main() {
    for line in run() {
        println!("{line}");
    }
}

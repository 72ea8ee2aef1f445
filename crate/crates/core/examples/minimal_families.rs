//! A cograph whose minimal forcing sets come in two sizes, listed in
//! enumeration order.

use forcing_lab::search::Analysis;
use forcing_lab::{from_construction_tree, Cap, ConstructionTree as T, Rule};

pub fn run() -> Vec<String> {
    let l = T::leaf;
    let tree = T::join(
        T::join(
            T::union(T::join(l(0), l(1)), T::union(l(2), l(3))),
            T::union(l(4), l(5)),
        ),
        l(6),
    );
    let g = from_construction_tree(&tree).unwrap();
    let a = Analysis::new(&g, Rule::Standard, Cap::default()).unwrap();
    let mut out = vec![format!(
        "Z={} upper Z={} sizes={:?} EPT={:?}",
        a.forcing_number(),
        a.upper_forcing_number(),
        a.minimal().sizes(),
        a.ept_set().to_vec()
    )];
    for s in a.minimal().sets.iter().take(6) {
        out.push(format!("  {s} time {}", a.table().time(*s).unwrap()));
    }
    out
}

#[allow(dead_code)]
fn main() {
    for line in run() {
        println!("{line}");
    }
}

//! Sliding a PSD forcing set one round forward.

use forcing_lab::forcing::psd_reduce_set;
use forcing_lab::generators::{path, sgap};
use forcing_lab::search::min_psd_set_with_connected_complement;
use forcing_lab::{propagation_time, Cap, Rule, VertexSet};

pub fn run() -> Vec<String> {
    let mut out = Vec::new();
    let p5 = path(5).unwrap();
    let b = VertexSet::singleton(0);
    let r = psd_reduce_set(&p5, b).unwrap();
    out.push(format!(
        "P5: {b} (time {:?}) -> {r} (time {:?})",
        propagation_time(&p5, b, Rule::Psd),
        propagation_time(&p5, r, Rule::Psd)
    ));
    let g = sgap(0).unwrap();
    let b = VertexSet::from_bits(0x7f00).with(0);
    let r = psd_reduce_set(&g, b).unwrap();
    out.push(format!(
        "sgap(0): {b} (time {:?}) -> {r} (time {:?})",
        propagation_time(&g, b, Rule::Psd),
        propagation_time(&g, r, Rule::Psd)
    ));
    let m = min_psd_set_with_connected_complement(&g, Cap::default()).unwrap();
    out.push(format!("sgap(0): minimum set with connected remainder {m}"));
    out
}

#[allow(dead_code)]
fn main() {
    for line in run() {
        println!("{line}");
    }
}

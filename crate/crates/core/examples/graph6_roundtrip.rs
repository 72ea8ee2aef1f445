//! Decode and re-encode graph6 strings, including the long-form header.

use forcing_lab::generators::cycle;
use forcing_lab::{from_graph6, to_graph6};

pub fn run() -> Vec<String> {
    let mut out = Vec::new();
    for s in ["D?{", "Dl{", "Bg"] {
        let g = from_graph6(s).unwrap();
        out.push(format!("{s}: n={} edges={:?}", g.order(), g.edges()));
        assert_eq!(to_graph6(&g), s);
    }
    // orders 63 and up use the `~` header
    let c64 = cycle(64).unwrap();
    let s = to_graph6(&c64);
    assert!(s.starts_with('~'));
    assert_eq!(from_graph6(&s).unwrap(), c64);
    out.push(format!("C64: {} bytes", s.len()));
    match from_graph6("A") {
        Err(e) => out.push(format!("\"A\": {e}")),
        Ok(_) => unreachable!(),
    }
    out
}

#[allow(dead_code)]
fn main() {
    for line in run() {
        println!("{line}");
    }
}

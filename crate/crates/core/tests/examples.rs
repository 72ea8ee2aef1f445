//! Runs every cargo example's `run` so examples cannot rot.

#[path = "../examples/analysis_report.rs"]
mod analysis_report;
#[path = "../examples/conjecture_hunt.rs"]
mod conjecture_hunt;
#[path = "../examples/fast_joins.rs"]
mod fast_joins;
#[path = "../examples/fixed_time_census.rs"]
mod fixed_time_census;
#[path = "../examples/fort_oracle.rs"]
mod fort_oracle;
#[path = "../examples/graph6_roundtrip.rs"]
mod graph6_roundtrip;
#[path = "../examples/minimal_families.rs"]
mod minimal_families;
#[path = "../examples/propagation_trace.rs"]
mod propagation_trace;
#[path = "../examples/psd_reduce.rs"]
mod psd_reduce;
#[path = "../examples/sgap_gaps.rs"]
mod sgap_gaps;
#[path = "../examples/threshold_throttling.rs"]
mod threshold_throttling;

#[test]
fn analysis_report_runs() {
    assert!(!analysis_report::run().is_empty());
}

#[test]
fn conjecture_hunt_runs() {
    assert!(!conjecture_hunt::run().is_empty());
}

#[test]
fn fast_joins_runs() {
    assert!(!fast_joins::run().is_empty());
}

#[test]
fn fixed_time_census_runs() {
    assert!(!fixed_time_census::run().is_empty());
}

#[test]
fn fort_oracle_runs() {
    assert!(!fort_oracle::run().is_empty());
}

#[test]
fn graph6_roundtrip_runs() {
    assert!(!graph6_roundtrip::run().is_empty());
}

#[test]
fn minimal_families_runs() {
    assert!(!minimal_families::run().is_empty());
}

#[test]
fn propagation_trace_runs() {
    assert!(!propagation_trace::run().is_empty());
}

#[test]
fn psd_reduce_runs() {
    assert!(!psd_reduce::run().is_empty());
}

#[test]
fn sgap_gaps_runs() {
    assert!(!sgap_gaps::run().is_empty());
}

#[test]
fn threshold_throttling_runs() {
    assert!(!threshold_throttling::run().is_empty());
}

//! Evaluation experiments on polynomials: divisibility scans and verdicts,
//! prime witnesses, integer- and unit-valued checks.
//!
//! Every scan is a finite stand-in for a statement about all elements of the
//! ring, so reports say what was sampled. Samples are processed in parallel
//! but merged in plan order; reports never depend on scheduling.

mod sample;
mod scan;
mod values;
mod witness;

pub use sample::{plan_len, sample_elements, SamplePlan, Sampler, DEFAULT_QUAD_BOX};
pub use scan::{
    dring_quotient, epp_verdict, scan_divisibility, scan_divisibility_bivariate, BivariateDegreeReport,
    DegreeReport, DringReport, EppReport, ScanFailure, ScanOptions, ScanReport, Verdict,
};
pub use values::{int_membership, sum_two_squares, unit_valued_scan, UnitExample, UnitScanReport};
pub use witness::{ipp_witnesses, WitnessReport};

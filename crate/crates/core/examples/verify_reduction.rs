//! Check each reduction's adjacency, injectivity and parsimony on the full
//! cube, and whether it induces the hypercube.
//!
//!     cargo run -p graycode --example verify_reduction -- 4

use graycode::reductions::ReductionTag;
use graycode::verify::{check_hypercube_inducement, verify_reduction};

fn main() -> graycode::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(Ok(3), |a| a.parse()).expect("n is an integer");
    for tag in ReductionTag::ALL {
        let report = verify_reduction(tag, n)?;
        let parsimony = report.parsimony_samples.iter().all(|(a, b)| a == b);
        println!(
            "{:<26} pairs={:<6} violations={} injective={} parsimony={} hypercube={}",
            tag.to_string(),
            report.pairs_checked,
            report.adjacency_iff_violations,
            report.injective,
            parsimony,
            check_hypercube_inducement(tag, n),
        );
    }
    Ok(())
}

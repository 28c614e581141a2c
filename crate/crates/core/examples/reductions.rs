//! Map a bitstring list through every hypercube reduction and show that the
//! answers and counts carry over.
//!
//!     cargo run -p graycode --example reductions

use graycode::flipgraph::build_flip_graph;
use graycode::io::parse_instance;
use graycode::reductions::{lift_certificate, reduce_instance, ReductionTag};
use graycode::solver::{count_hamilton_paths, solve_instance, verify_certificate};
use graycode::SolverConfig;

fn main() -> graycode::Result<()> {
    let source = parse_instance("kind=bitstring flip=bitflip n=3\n000\n001\n011\n111\n110\n100\n")?;
    let cfg = SolverConfig::default();
    let answer = solve_instance(&source, false, &cfg)?;
    let count = count_hamilton_paths(&build_flip_graph(&source)?)?;
    println!("source: {} codes, answer {}", count, answer.answer.as_str());

    for tag in ReductionTag::FROM_BITS {
        let target = reduce_instance(&source, tag)?;
        let images: Vec<String> = target.objects().iter().map(ToString::to_string).collect();
        let r = solve_instance(&target, false, &cfg)?;
        let n = count_hamilton_paths(&build_flip_graph(&target)?)?;
        println!("{:<26} {:<20} count={n} answer={}", tag.to_string(), target.flip().to_string(), r.answer.as_str());
        println!("    {}", images.join("  "));
        if let Some(cert) = r.certificate {
            let lifted = lift_certificate(&source, &target, &cert)?;
            assert!(verify_certificate(&source, &lifted)?);
        }
    }
    Ok(())
}

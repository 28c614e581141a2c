//! Named and random instances, written in the instance file format.
//!
//!     cargo run -p graycode --example generate -- 7

use graycode::gen::{named_instance, random_continuous_tuples, random_subset, rng, NAMED};
use graycode::io::format_instance;
use graycode::reductions::{normalize_continuous, NormalizeOutcome};
use graycode::solver::solve_instance;
use graycode::{FlipFamily, Instance, Kind, Object, SolverConfig};

fn main() -> graycode::Result<()> {
    let seed: u64 = std::env::args().nth(1).map_or(Ok(7), |a| a.parse()).expect("seed is an integer");
    let mut r = rng(seed);
    println!("named: {}", NAMED.join(", "));
    print!("{}", format_instance(&named_instance("grid-sample", None)?));

    let cube = named_instance("full-Bn", Some(5))?;
    let sub = random_subset(&cube, 9, &mut r)?;
    print!("{}", format_instance(&sub));
    let answer = solve_instance(&sub, false, &SolverConfig::default())?.answer;
    println!("# gray code: {}", answer.as_str());

    let tuples = random_continuous_tuples(6, &mut r)?;
    let inst = Instance::new(Kind::Tuple, FlipFamily::Pm1Tuple, tuples.iter().copied().map(Object::from).collect())?;
    print!("{}", format_instance(&inst));
    if let NormalizeOutcome::Normalized(out) = normalize_continuous(&tuples)? {
        let text: Vec<String> = out.iter().map(ToString::to_string).collect();
        println!("# normalized: {}", text.join(" "));
    }
    Ok(())
}

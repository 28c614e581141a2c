//! Universal cycles by Eulerian trails: de Bruijn subsets and shorthand
//! permutation cycles.
//!
//!     cargo run -p graycode --example ucycle

use graycode::gen::{all_bitstrings, all_permutations};
use graycode::solver::ucycle::{solve_debruijn_subset, solve_shorthand_ucycle};

fn main() -> graycode::Result<()> {
    for n in 2..=5 {
        let r = solve_debruijn_subset(&all_bitstrings(n), true)?;
        println!("B_{n}: {}", r.sequence_text().unwrap_or_default());
    }

    let b4 = all_bitstrings(4);
    for (lo, hi) in [(1, 2), (2, 3), (1, 3), (2, 2)] {
        let subset: Vec<_> = b4.iter().filter(|b| (lo..=hi).contains(&b.weight())).cloned().collect();
        let cyc = solve_debruijn_subset(&subset, true)?;
        let lin = solve_debruijn_subset(&subset, false)?;
        println!(
            "B_4 weights {lo}..{hi}: cycle {} path {}",
            cyc.sequence_text().unwrap_or_else(|| "none".into()),
            lin.sequence_text().unwrap_or_else(|| "none".into()),
        );
    }

    for n in 3..=4 {
        let r = solve_shorthand_ucycle(&all_permutations(n), true)?;
        println!("S_{n} shorthand: {}", r.sequence_text().unwrap_or_default());
    }
    Ok(())
}

//! Decide Gray-code existence for a few lists and print the orders found.
//!
//!     cargo run -p graycode --example solve

use graycode::gen::{full_bits_instance, named_instance};
use graycode::io::parse_instance;
use graycode::solver::{solve_instance, verify_certificate};
use graycode::{FlipFamily, SolverConfig};

fn main() -> graycode::Result<()> {
    let cfg = SolverConfig::default();

    for name in ["abstract-no", "abstract-yes"] {
        let inst = named_instance(name, None)?;
        let r = solve_instance(&inst, false, &cfg)?;
        print!("{name}: {}", r.answer.as_str());
        if let Some(cert) = &r.certificate {
            let order: Vec<String> = cert.order().iter().map(|&i| inst.objects()[i].to_string()).collect();
            print!("  {}", order.join(", "));
        }
        println!();
    }

    // The reflected code, cyclic.
    let q4 = full_bits_instance(4, FlipFamily::Bitflip)?;
    let r = solve_instance(&q4, true, &cfg)?;
    let cert = r.certificate.expect("Q_4 is Hamiltonian");
    assert!(verify_certificate(&q4, &cert)?);
    let codes: Vec<String> = cert.order().iter().map(|&i| q4.objects()[i].to_string()).collect();
    println!("Q_4 cycle: {}", codes.join(" "));
    println!("search nodes: {}", r.stats.nodes);

    // Instances can also come from text.
    let inst = parse_instance("kind=permutation flip=jump\n123\n213\n231\n321\n")?;
    let r = solve_instance(&inst, false, &cfg)?;
    println!("jump list: {}", r.answer.as_str());
    Ok(())
}

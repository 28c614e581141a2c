//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::time::{Duration, Instant};

use graycode::flipgraph::build_flip_graph;
use graycode::gen::{
    all_bitstrings, all_permutations, full_bits_instance, full_perms_instance, named_instance,
    random_continuous_tuples, random_subset, rng,
};
use graycode::objects::{contains_pattern, is_peakless, DiamondGraph};
use graycode::reductions::*;
use graycode::solver::ucycle::{
    check_debruijn_witness, check_shorthand_witness, parse_sequence, solve_debruijn_subset, solve_shorthand_ucycle,
};
use graycode::solver::{count_hamilton_paths, has_hamilton_cycle, has_hamilton_path, solve_instance, verify_certificate};
use graycode::verify::{brute_force_hamilton, check_hypercube_inducement, check_reduction};
use graycode::{Answer, FlipFamily, Instance, Kind, Object, Permutation, SolverConfig, Tuple2};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))?;
    Ok(took)
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn c01_abstract_no() -> Outcome {
    let start = Instant::now();
    let inst = named_instance("abstract-no", None).map_err(e)?;
    let r = solve_instance(&inst, false, &SolverConfig::default()).map_err(e)?;
    let took = within(Duration::from_millis(100), start)?;
    ensure(r.answer == Answer::No, || "expected no".into())?;
    Ok(format!("answer=no in {took:?}"))
}

fn c02_abstract_yes() -> Outcome {
    let start = Instant::now();
    let inst = named_instance("abstract-yes", None).map_err(e)?;
    let r = solve_instance(&inst, false, &SolverConfig::default()).map_err(e)?;
    let took = within(Duration::from_millis(100), start)?;
    let cert = r.certificate.ok_or("no certificate")?;
    ensure(verify_certificate(&inst, &cert).map_err(e)?, || "certificate rejected".into())?;
    let names: Vec<String> = cert.order().iter().map(|&i| inst.objects()[i].to_string()).collect();
    let expected = ["1243", "1234", "1324"];
    let mut reversed = expected;
    reversed.reverse();
    ensure(names == expected || names == reversed, || format!("order {names:?}"))?;
    Ok(format!("order {} in {took:?}", names.join(",")))
}

fn c03_classic_yes() -> Outcome {
    let start = Instant::now();
    for n in 1..=10 {
        let inst = full_bits_instance(n, FlipFamily::Bitflip).map_err(e)?;
        let r = solve_instance(&inst, false, &SolverConfig::default()).map_err(e)?;
        let cert = r.certificate.ok_or(format!("no code for B_{n}"))?;
        ensure(verify_certificate(&inst, &cert).map_err(e)?, || format!("B_{n} certificate rejected"))?;
    }
    let s4 = full_perms_instance(4, FlipFamily::Swap).map_err(e)?;
    let r = solve_instance(&s4, false, &SolverConfig::default()).map_err(e)?;
    let cert = r.certificate.ok_or("no code for S_4")?;
    ensure(verify_certificate(&s4, &cert).map_err(e)?, || "S_4 certificate rejected".into())?;
    let took = within(Duration::from_secs(30), start)?;
    Ok(format!("B_1..B_10 and S_4 solved in {took:?}"))
}

fn c04_nc_table() -> Outcome {
    let rows = [
        ("111", "1234"),
        ("110", "123|4"),
        ("101", "124|3"),
        ("011", "134|2"),
        ("100", "12|3|4"),
        ("010", "13|2|4"),
        ("001", "14|2|3"),
        ("000", "1|2|3|4"),
    ];
    for (b, want) in rows {
        let got = bits_to_ncpartition(&b.parse().map_err(e)?).to_string();
        ensure(got == want, || format!("{b} -> {got}, expected {want}"))?;
    }
    Ok("8 rows match".into())
}

fn c05_hypercube() -> Outcome {
    for tag in ReductionTag::FROM_BITS {
        for n in 1..=5 {
            ensure(check_hypercube_inducement(tag, n), || format!("{tag} n={n}"))?;
        }
    }
    Ok("8 tags x n=1..5".into())
}

fn c06_adjacency_iff() -> Outcome {
    let b5 = full_bits_instance(5, FlipFamily::Bitflip).map_err(e)?;
    let b4 = full_bits_instance(4, FlipFamily::Bitflip).map_err(e)?;
    let mut r = rng(6);
    let mut reports = 0;
    for tag in ReductionTag::FROM_BITS {
        let full = check_reduction(tag, &b5).map_err(e)?;
        ensure(full.passed(), || format!("{tag} on B_5:\n{}", full.to_record()))?;
        reports += 1;
        for i in 0..100 {
            let universe = if i % 2 == 0 { &b4 } else { &b5 };
            let sub = random_subset(universe, 2 + i % 11, &mut r).map_err(e)?;
            let rep = check_reduction(tag, &sub).map_err(e)?;
            ensure(rep.adjacency_iff_violations == 0 && rep.injective, || {
                format!("{tag} sample {i}:\n{}", rep.to_record())
            })?;
            reports += 1;
        }
    }
    Ok(format!("{reports} reports, zero violations"))
}

fn c07_parsimony() -> Outcome {
    let b4 = full_bits_instance(4, FlipFamily::Bitflip).map_err(e)?;
    let mut r = rng(7);
    let mut comparisons = 0;
    for i in 0..200 {
        let source = random_subset(&b4, 1 + i % 8, &mut r).map_err(e)?;
        let source_count = count_hamilton_paths(&build_flip_graph(&source).map_err(e)?).map_err(e)?;
        for tag in ReductionTag::FROM_BITS {
            for &flip in tag.target_flips() {
                let target = reduce_instance_to(&source, tag, flip).map_err(e)?;
                let count = count_hamilton_paths(&build_flip_graph(&target).map_err(e)?).map_err(e)?;
                ensure(count == source_count, || format!("{tag}/{flip}: {source_count} vs {count}"))?;
                comparisons += 1;
            }
        }
    }
    Ok(format!("{comparisons} count comparisons equal"))
}

fn c08_tuple_chain() -> Outcome {
    let gap = [Tuple2::new(1, 1).map_err(e)?, Tuple2::new(3, 1).map_err(e)?];
    ensure(
        normalize_continuous(&gap).map_err(e)? == NormalizeOutcome::NoInstance { case: 1, gap: 2 },
        || "gap not flagged".into(),
    )?;
    let mut r = rng(8);
    for i in 0..100 {
        let tuples = random_continuous_tuples(1 + i % 8, &mut r).map_err(e)?;
        let source = Instance::new(Kind::Tuple, FlipFamily::Pm1Tuple, tuples.iter().copied().map(Object::from).collect())
            .map_err(e)?;
        let bits = reduce_instance(&source, ReductionTag::TuplesToBits).map_err(e)?;
        let perms = reduce_instance(&source, ReductionTag::TuplesToPerms).map_err(e)?;
        let answers: Vec<Answer> = [&source, &bits, &perms]
            .iter()
            .map(|inst| brute_force_hamilton(&build_flip_graph(inst)?).map(|(a, _)| a))
            .collect::<Result<_, _>>()
            .map_err(e)?;
        ensure(answers.iter().all(|&a| a == answers[0]), || format!("{tuples:?}: {answers:?}"))?;
    }
    Ok("gap flagged; 100 lists agree three ways".into())
}

fn c09_oracle() -> Outcome {
    let start = Instant::now();
    let check = |universe: Vec<Object>, kind: Kind, flip: FlipFamily| -> Result<usize, String> {
        let mut count = 0;
        for mask in 0u32..1 << universe.len() {
            let objects = (0..universe.len()).filter(|&i| mask >> i & 1 == 1).map(|i| universe[i].clone()).collect();
            let inst = Instance::new(kind, flip, objects).map_err(e)?;
            let g = build_flip_graph(&inst).map_err(e)?;
            let fast = has_hamilton_path(&g).map_err(e)?.answer;
            let slow = brute_force_hamilton(&g).map_err(e)?.0;
            ensure(fast == slow, || format!("{flip} mask {mask:b}: {fast:?} vs {slow:?}"))?;
            count += 1;
        }
        Ok(count)
    };
    let mut total = check(all_bitstrings(3).into_iter().map(Object::Bits).collect(), Kind::Bitstring, FlipFamily::Bitflip)?;
    for flip in [FlipFamily::Swap, FlipFamily::Transposition, FlipFamily::Reversal, FlipFamily::Rotation, FlipFamily::Jump] {
        total += check(all_permutations(3).into_iter().map(Object::Perm).collect(), Kind::Permutation, flip)?;
    }
    let took = within(Duration::from_secs(60), start)?;
    Ok(format!("{total} instances agree in {took:?}"))
}

fn c10_polytime() -> Outcome {
    let b3 = all_bitstrings(3);
    let full = solve_debruijn_subset(&b3, true).map_err(e)?;
    let seq = full.sequence.ok_or("no de Bruijn cycle")?;
    ensure(seq.len() == 8 && check_debruijn_witness(&b3, &seq, true), || format!("bad cycle {seq:?}"))?;
    ensure(check_debruijn_witness(&b3, &parse_sequence("00010111").map_err(e)?, true), || "00010111 rejected".into())?;
    let middle: Vec<_> = b3.iter().filter(|b| (1..=2).contains(&b.weight())).cloned().collect();
    let seq = solve_debruijn_subset(&middle, true).map_err(e)?.sequence.ok_or("no weight-1,2 cycle")?;
    ensure(seq.len() == 6 && check_debruijn_witness(&middle, &seq, true), || format!("bad cycle {seq:?}"))?;
    ensure(check_debruijn_witness(&middle, &parse_sequence("001011").map_err(e)?, true), || "001011 rejected".into())?;
    for mask in 0u32..256 {
        let s: Vec<_> = (0..8).filter(|&i| mask >> i & 1 == 1).map(|i| b3[i].clone()).collect();
        let inst = Instance::new(Kind::Bitstring, FlipFamily::RegisterShift, s.iter().cloned().map(Object::Bits).collect())
            .map_err(e)?;
        let g = build_flip_graph(&inst).map_err(e)?;
        let lin = solve_debruijn_subset(&s, false).map_err(e)?.answer;
        ensure(lin == has_hamilton_path(&g).map_err(e)?.answer, || format!("linear mask {mask:08b}"))?;
        if s.len() >= 2 {
            let cyc = solve_debruijn_subset(&s, true).map_err(e)?.answer;
            ensure(cyc == has_hamilton_cycle(&g).map_err(e)?.answer, || format!("cyclic mask {mask:08b}"))?;
        }
    }
    let s3 = all_permutations(3);
    let seq = solve_shorthand_ucycle(&s3, true).map_err(e)?.sequence.ok_or("no shorthand cycle")?;
    ensure(seq.len() == 6 && check_shorthand_witness(&s3, &seq, true), || format!("bad cycle {seq:?}"))?;
    ensure(check_shorthand_witness(&s3, &parse_sequence("123132").map_err(e)?, true), || "123132 rejected".into())?;
    for mask in 0u32..64 {
        let s: Vec<Permutation> = (0..6).filter(|&i| mask >> i & 1 == 1).map(|i| s3[i].clone()).collect();
        let inst = Instance::new(Kind::Permutation, FlipFamily::ShorthandRotation, s.iter().cloned().map(Object::Perm).collect())
            .map_err(e)?;
        let g = build_flip_graph(&inst).map_err(e)?;
        let lin = solve_shorthand_ucycle(&s, false).map_err(e)?.answer;
        ensure(lin == has_hamilton_path(&g).map_err(e)?.answer, || format!("linear mask {mask:06b}"))?;
        if s.len() >= 2 {
            let cyc = solve_shorthand_ucycle(&s, true).map_err(e)?.answer;
            ensure(cyc == has_hamilton_cycle(&g).map_err(e)?.answer, || format!("cyclic mask {mask:06b}"))?;
        }
    }
    Ok("witnesses accepted; 256 + 64 subsets agree".into())
}

fn c11_peakless() -> Outcome {
    let p132: Permutation = "132".parse().map_err(e)?;
    let p231: Permutation = "231".parse().map_err(e)?;
    let mut total = 0;
    for n in 1..=7 {
        for p in all_permutations(n) {
            let avoids = !contains_pattern(&p, &p132) && !contains_pattern(&p, &p231);
            ensure(is_peakless(&p) == avoids, || format!("{p}"))?;
            total += 1;
        }
    }
    ensure(total == 5913, || format!("{total} permutations"))?;
    Ok(format!("{total} permutations"))
}

fn c12_structures() -> Outcome {
    for n in 1..=20 {
        let d = DiamondGraph::new(n).map_err(e)?;
        ensure(d.vertices().len() == 4 * n && d.edges().len() == 5 * n - 1, || format!("D_{n}"))?;
    }
    let mut images = 0;
    for n in 1..=5 {
        for b in all_bitstrings(n) {
            // Both constructors reject anything that is not a spanning tree
            // or perfect matching of D_n.
            let tree = bits_to_spanning_tree(&b).map_err(e)?;
            let matching = bits_to_matching(&b).map_err(e)?;
            ensure(tree.edges().len() == 4 * n - 1 && matching.edges().len() == 2 * n, || format!("{b}"))?;
            images += 2;
        }
    }
    Ok(format!("D_1..D_20 sizes; {images} tree and matching images valid"))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("abstract no-instance", c01_abstract_no),
        ("abstract yes-instance", c02_abstract_yes),
        ("classic yes-cases", c03_classic_yes),
        ("NC mapping table", c04_nc_table),
        ("hypercube inducement", c05_hypercube),
        ("adjacency-iff and injectivity", c06_adjacency_iff),
        ("parsimony", c07_parsimony),
        ("tuple chain", c08_tuple_chain),
        ("oracle equivalence", c09_oracle),
        ("polynomial-time cases", c10_polytime),
        ("peakless equivalence", c11_peakless),
        ("structural outputs", c12_structures),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

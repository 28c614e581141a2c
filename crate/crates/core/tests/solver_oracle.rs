use graycode::flipgraph::build_flip_graph;
use graycode::gen::{all_bitstrings, all_permutations, full_bits_instance, random_subset, rng};
use graycode::solver::ucycle::{
    check_debruijn_witness, check_shorthand_witness, solve_debruijn_subset, solve_shorthand_ucycle,
};
use graycode::solver::{
    count_hamilton_paths, has_hamilton_cycle, has_hamilton_cycle_with, has_hamilton_path, has_hamilton_path_with,
    verify_certificate, verify_cyclic_certificate, SolverConfig,
};
use graycode::verify::{brute_force_hamilton, brute_force_hamilton_cycle};
use graycode::{Answer, FlipFamily, FlipGraph, Instance, Kind, Object};
use proptest::prelude::*;

fn subsets(universe: &[Object]) -> impl Iterator<Item = Vec<Object>> + '_ {
    (0u32..1 << universe.len()).map(move |mask| {
        (0..universe.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| universe[i].clone())
            .collect()
    })
}

/// Solver, brute force, counting and certificates all agree.
fn agree(inst: &Instance) {
    let g = build_flip_graph(inst).unwrap();
    let path = has_hamilton_path(&g).unwrap();
    let (oracle, count) = brute_force_hamilton(&g).unwrap();
    assert_eq!(path.answer, oracle, "{inst:?}");
    assert_eq!(count_hamilton_paths(&g).unwrap(), count);
    if let Some(cert) = &path.certificate {
        assert!(verify_certificate(inst, cert).unwrap());
    }
    let cycle = has_hamilton_cycle(&g).unwrap();
    assert_eq!(cycle.answer, brute_force_hamilton_cycle(&g).unwrap().0, "{inst:?}");
    if let Some(cert) = &cycle.certificate {
        assert!(verify_cyclic_certificate(inst, cert).unwrap());
    }
}

#[test]
fn all_subsets_of_b3() {
    let b3: Vec<Object> = all_bitstrings(3).into_iter().map(Object::Bits).collect();
    for flip in [FlipFamily::Bitflip, FlipFamily::SubstringComplement, FlipFamily::Transposition] {
        for s in subsets(&b3) {
            agree(&Instance::new(Kind::Bitstring, flip, s).unwrap());
        }
    }
}

#[test]
fn all_subsets_of_s3() {
    let s3: Vec<Object> = all_permutations(3).into_iter().map(Object::Perm).collect();
    for flip in [
        FlipFamily::Swap,
        FlipFamily::Transposition,
        FlipFamily::Reversal,
        FlipFamily::Rotation,
        FlipFamily::Jump,
        FlipFamily::ShorthandRotation,
    ] {
        for s in subsets(&s3) {
            agree(&Instance::new(Kind::Permutation, flip, s).unwrap());
        }
    }
}

#[test]
fn sampled_subsets_of_s4() {
    let s4 = Instance::new(
        Kind::Permutation,
        FlipFamily::Swap,
        all_permutations(4).into_iter().map(Object::Perm).collect(),
    )
    .unwrap();
    let mut r = rng(11);
    for i in 0..150 {
        let sub = random_subset(&s4, 3 + i % 6, &mut r).unwrap();
        for flip in [FlipFamily::Swap, FlipFamily::Rotation, FlipFamily::Jump, FlipFamily::ShorthandRotation] {
            agree(&sub.with_flip(flip).unwrap());
        }
    }
}

fn bits_of(objects: &[Object]) -> Vec<graycode::BitString> {
    objects
        .iter()
        .map(|o| match o {
            Object::Bits(b) => b.clone(),
            _ => unreachable!(),
        })
        .collect()
}

fn perms_of(objects: &[Object]) -> Vec<graycode::Permutation> {
    objects
        .iter()
        .map(|o| match o {
            Object::Perm(p) => p.clone(),
            _ => unreachable!(),
        })
        .collect()
}

/// Eulerian answers against the directed Hamilton search. Cyclic answers are
/// compared from two objects up: a single object is an Eulerian circuit when
/// it is a self-loop, while a flip graph has no loops.
fn debruijn_agrees(inst: &Instance) {
    let g = build_flip_graph(inst).unwrap();
    let bits = bits_of(inst.objects());
    let linear = solve_debruijn_subset(&bits, false).unwrap();
    assert_eq!(linear.answer, has_hamilton_path(&g).unwrap().answer, "{bits:?}");
    if let Some(seq) = &linear.sequence {
        assert!(check_debruijn_witness(&bits, seq, false));
    }
    let cyclic = solve_debruijn_subset(&bits, true).unwrap();
    if bits.len() >= 2 {
        assert_eq!(cyclic.answer, has_hamilton_cycle(&g).unwrap().answer, "{bits:?}");
    }
    if let Some(seq) = &cyclic.sequence {
        assert!(check_debruijn_witness(&bits, seq, true));
    }
}

#[test]
fn debruijn_matches_shift_graph() {
    let b3: Vec<Object> = all_bitstrings(3).into_iter().map(Object::Bits).collect();
    for s in subsets(&b3) {
        debruijn_agrees(&Instance::new(Kind::Bitstring, FlipFamily::RegisterShift, s).unwrap());
    }
    let b4 = full_bits_instance(4, FlipFamily::RegisterShift).unwrap();
    for weights in [1..=2, 2..=3, 1..=3, 0..=2] {
        let objects: Vec<Object> = b4
            .objects()
            .iter()
            .filter(|o| matches!(o, Object::Bits(b) if weights.contains(&b.weight())))
            .cloned()
            .collect();
        let restricted = Instance::new(Kind::Bitstring, FlipFamily::RegisterShift, objects).unwrap();
        let mut r = rng(5);
        for size in 2..=restricted.len().min(10) {
            debruijn_agrees(&random_subset(&restricted, size, &mut r).unwrap());
        }
    }
}

#[test]
fn shorthand_matches_rotation_graph() {
    let s3: Vec<Object> = all_permutations(3).into_iter().map(Object::Perm).collect();
    for s in subsets(&s3) {
        let inst = Instance::new(Kind::Permutation, FlipFamily::ShorthandRotation, s).unwrap();
        let g = build_flip_graph(&inst).unwrap();
        let perms = perms_of(inst.objects());
        let linear = solve_shorthand_ucycle(&perms, false).unwrap();
        assert_eq!(linear.answer, has_hamilton_path(&g).unwrap().answer, "{perms:?}");
        if let Some(seq) = &linear.sequence {
            assert!(check_shorthand_witness(&perms, seq, false));
        }
        let cyclic = solve_shorthand_ucycle(&perms, true).unwrap();
        if perms.len() >= 2 {
            assert_eq!(cyclic.answer, has_hamilton_cycle(&g).unwrap().answer, "{perms:?}");
        }
        if let Some(seq) = &cyclic.sequence {
            assert!(check_shorthand_witness(&perms, seq, true));
        }
    }
}

#[test]
fn thread_count_does_not_matter() {
    let b4 = full_bits_instance(4, FlipFamily::Bitflip).unwrap();
    let mut r = rng(99);
    for i in 0..60 {
        let sub = random_subset(&b4, 4 + i % 9, &mut r).unwrap();
        let g = build_flip_graph(&sub).unwrap();
        let seq = has_hamilton_path(&g).unwrap();
        let seq_cycle = has_hamilton_cycle(&g).unwrap();
        for threads in [2, 3, 8] {
            let cfg = SolverConfig { threads, ..Default::default() };
            assert_eq!(has_hamilton_path_with(&g, &cfg).unwrap(), seq);
            assert_eq!(has_hamilton_cycle_with(&g, &cfg).unwrap(), seq_cycle);
        }
    }
}

#[test]
fn relabeling_gives_isomorphic_graph() {
    let b4 = full_bits_instance(4, FlipFamily::SubstringComplement).unwrap();
    let g = build_flip_graph(&b4).unwrap();
    let order: Vec<usize> = (0..16).rev().collect();
    let h = build_flip_graph(&b4.select(&order).unwrap()).unwrap();
    for u in 0..16 {
        for v in 0..16 {
            assert_eq!(g.has_edge(order[u], order[v]), h.has_edge(u, v));
        }
    }
}

fn graph_strategy(directed: bool) -> impl Strategy<Value = FlipGraph> {
    (1usize..=8).prop_flat_map(move |m| {
        proptest::collection::vec(proptest::bool::weighted(0.45), m * m).prop_map(move |bits| {
            let edges: Vec<(usize, usize)> = (0..m * m)
                .filter(|&k| bits[k] && (directed || k / m < k % m))
                .map(|k| (k / m, k % m))
                .collect();
            FlipGraph::from_edges(m, directed, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn random_undirected_graphs(g in graph_strategy(false)) {
        let r = has_hamilton_path(&g).unwrap();
        let (oracle, count) = brute_force_hamilton(&g).unwrap();
        prop_assert_eq!(r.answer, oracle);
        prop_assert_eq!(count_hamilton_paths(&g).unwrap(), count);
        prop_assert_eq!(count > 0, r.answer == Answer::Yes);
        if let Some(c) = r.certificate {
            prop_assert!(c.order().windows(2).all(|w| g.has_edge(w[0], w[1])));
        }
        prop_assert_eq!(has_hamilton_cycle(&g).unwrap().answer, brute_force_hamilton_cycle(&g).unwrap().0);
    }

    #[test]
    fn random_directed_graphs(g in graph_strategy(true)) {
        let r = has_hamilton_path(&g).unwrap();
        prop_assert_eq!(r.answer, brute_force_hamilton(&g).unwrap().0);
        if let Some(c) = r.certificate {
            prop_assert!(c.order().windows(2).all(|w| g.has_edge(w[0], w[1])));
        }
        let cyc = has_hamilton_cycle(&g).unwrap();
        prop_assert_eq!(cyc.answer, brute_force_hamilton_cycle(&g).unwrap().0);
        if let Some(c) = cyc.certificate {
            let o = c.order();
            prop_assert!(g.has_edge(o[o.len() - 1], o[0]));
        }
    }
}

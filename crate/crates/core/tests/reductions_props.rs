use graycode::gen::{full_bits_instance, random_continuous_tuples, random_subset, rng};
use graycode::objects::is_peakless;
use graycode::reductions::*;
use graycode::solver::{solve_instance, verify_certificate, SolverConfig};
use graycode::verify::{check_hypercube_inducement, check_reduction};
use graycode::{Answer, FlipFamily, Instance, Kind, Object, Tuple2};
use proptest::prelude::*;

#[test]
fn full_cubes_pass_every_check() {
    for tag in ReductionTag::FROM_BITS {
        for n in 1..=5 {
            let source = full_bits_instance(n, FlipFamily::Bitflip).unwrap();
            let report = check_reduction(tag, &source).unwrap();
            assert!(report.passed(), "{tag} n={n}\n{}", report.to_record());
            assert_eq!(report.pairs_checked, (1u64 << n) * ((1u64 << n) - 1) / 2);
            assert!(check_hypercube_inducement(tag, n), "{tag} n={n}");
        }
    }
}

#[test]
fn random_subsets_pass() {
    let b4 = full_bits_instance(4, FlipFamily::Bitflip).unwrap();
    let mut r = rng(2024);
    for tag in ReductionTag::FROM_BITS {
        for i in 0..100 {
            let sub = random_subset(&b4, 2 + i % 7, &mut r).unwrap();
            let report = check_reduction(tag, &sub).unwrap();
            assert!(report.passed(), "{tag}\n{}", report.to_record());
            assert!(!report.parsimony_samples.is_empty());
        }
    }
}

#[test]
fn images_are_valid_objects() {
    for n in 1..=5 {
        for b in graycode::gen::all_bitstrings(n) {
            assert!(bits_to_ncpartition(&b).is_noncrossing());
            assert!(is_peakless(&bits_to_peakless(&b)));
            assert_eq!(bits_to_spanning_tree(&b).unwrap().edges().len(), 4 * n - 1);
            assert_eq!(bits_to_matching(&b).unwrap().edges().len(), 2 * n);
            let c = bits_to_combination_complement(&b);
            assert_eq!((c.len(), c.weight()), (3 * n - 1, 2 * n - 1));
            let c = bits_to_combination_reversal(&b);
            assert_eq!((c.len(), c.weight()), (4 * n - 2, 2 * n - 1));
            let c = bits_to_combination_swap(&b);
            assert_eq!((c.len(), c.weight()), (2 * n, n));
        }
    }
}

#[test]
fn lifted_certificates_verify() {
    let b4 = full_bits_instance(4, FlipFamily::Bitflip).unwrap();
    let mut r = rng(8);
    let cfg = SolverConfig::default();
    for i in 0..40 {
        let source = random_subset(&b4, 2 + i % 7, &mut r).unwrap();
        let source_answer = solve_instance(&source, false, &cfg).unwrap().answer;
        for tag in ReductionTag::FROM_BITS {
            for &flip in tag.target_flips() {
                let target = reduce_instance_to(&source, tag, flip).unwrap();
                let result = solve_instance(&target, false, &cfg).unwrap();
                assert_eq!(result.answer, source_answer, "{tag}/{flip}");
                if let Some(cert) = result.certificate {
                    let lifted = lift_certificate(&source, &target, &cert).unwrap();
                    assert!(verify_certificate(&source, &lifted).unwrap());
                }
            }
        }
    }
}

fn tuple_instance(tuples: &[Tuple2]) -> Instance {
    Instance::new(Kind::Tuple, FlipFamily::Pm1Tuple, tuples.iter().copied().map(Object::from).collect()).unwrap()
}

#[test]
fn tuple_reductions_on_random_lists() {
    let mut r = rng(77);
    for i in 0..100 {
        let tuples = random_continuous_tuples(1 + i % 8, &mut r).unwrap();
        let source = tuple_instance(&tuples);
        for tag in [ReductionTag::TuplesNormalize, ReductionTag::TuplesToBits, ReductionTag::TuplesToPerms] {
            let report = check_reduction(tag, &source).unwrap();
            assert!(report.passed(), "{tag} {tuples:?}\n{}", report.to_record());
        }
    }
}

#[test]
fn tuple_lengths() {
    let tuples: Vec<Tuple2> = [(1, 1), (2, 1), (2, 2), (3, 2)].iter().map(|&(a, b)| Tuple2::new(a, b).unwrap()).collect();
    for b in tuples_to_bitstrings(&tuples).unwrap() {
        assert_eq!(b.len(), 5);
    }
    for p in tuples_to_permutations(&tuples).unwrap() {
        assert_eq!(p.len(), 7);
    }
}

proptest! {
    #[test]
    fn normalization_preserves_l1(points in proptest::collection::btree_set((1u64..30, 1u64..30), 1..10)) {
        let tuples: Vec<Tuple2> = points.iter().map(|&(a, b)| Tuple2::new(a, b).unwrap()).collect();
        match normalize_continuous(&tuples).unwrap() {
            NormalizeOutcome::Normalized(out) => {
                prop_assert!(is_continuous(&out));
                for i in 0..tuples.len() {
                    for j in 0..tuples.len() {
                        prop_assert_eq!(tuples[i].l1(&tuples[j]), out[i].l1(&out[j]));
                    }
                }
            }
            NormalizeOutcome::NoInstance { case, gap } => {
                // The gap splits the list into two parts at L1 distance >= 2,
                // so there is no Gray code once both parts are nonempty.
                let coord = |t: &Tuple2| if case == 1 { t.a } else { t.b };
                prop_assert!(tuples.iter().any(|t| coord(t) < gap));
                prop_assert!(tuples.iter().any(|t| coord(t) > gap));
                prop_assert!(tuples.iter().all(|t| coord(t) != gap));
                let result = solve_instance(&tuple_instance(&tuples), false, &SolverConfig::default()).unwrap();
                prop_assert_eq!(result.answer, Answer::No);
            }
        }
    }
}

use graycode::gen::{all_bitstrings, all_permutations};
use graycode::objects::{contains_pattern, format_object, is_peakless, parse_object, parse_object_sized};
use graycode::reductions::{bits_to_matching, bits_to_spanning_tree};
use graycode::{Combination, Kind, Object, Permutation, SetPartition, Tuple2};
use proptest::prelude::*;

fn partitions(n: usize) -> Vec<SetPartition> {
    // Restricted growth strings, odometer style.
    let mut out = Vec::new();
    let mut labels = vec![0usize; n];
    loop {
        let k = labels.iter().copied().max().map_or(0, |m| m + 1);
        let blocks = (0..k).map(|b| (1..=n).filter(|&e| labels[e - 1] == b).collect()).collect();
        out.push(SetPartition::new(blocks).unwrap());
        let mut i = n;
        loop {
            if i <= 1 {
                return out;
            }
            i -= 1;
            let cap = labels[..i].iter().copied().max().unwrap_or(0) + 1;
            if labels[i] < cap {
                labels[i] += 1;
                labels[i + 1..].iter_mut().for_each(|l| *l = 0);
                break;
            }
        }
    }
}

fn crosses(p: &SetPartition) -> bool {
    let label = p.labels();
    let n = p.n();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                for d in c + 1..=n {
                    let l = |x: usize| label[x];
                    if l(a) == l(c) && l(b) == l(d) && l(a) != l(b) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

#[test]
fn noncrossing_matches_quadruples() {
    let catalan = [1, 2, 5, 14, 42, 132];
    let bell = [1, 2, 5, 15, 52, 203];
    for n in 1..=6 {
        let all = partitions(n);
        assert_eq!(all.len(), bell[n - 1]);
        let nc = all.iter().filter(|p| p.is_noncrossing()).count();
        assert_eq!(nc, catalan[n - 1], "n = {n}");
        for p in &all {
            assert_eq!(p.is_noncrossing(), !crosses(p), "{p}");
        }
    }
}

#[test]
fn peakless_is_pattern_avoidance() {
    let p132: Permutation = "132".parse().unwrap();
    let p231: Permutation = "231".parse().unwrap();
    let mut total = 0;
    for n in 1..=7 {
        let mut peakless = 0;
        for p in all_permutations(n) {
            let avoids = !contains_pattern(&p, &p132) && !contains_pattern(&p, &p231);
            assert_eq!(is_peakless(&p), avoids, "{p}");
            peakless += usize::from(avoids);
            total += 1;
        }
        assert_eq!(peakless, 1 << (n - 1));
    }
    assert_eq!(total, 5913);
}

#[test]
fn exhaustive_round_trips() {
    let check = |kind: Kind, o: Object, n: Option<usize>| {
        let text = format_object(&o);
        assert_eq!(parse_object_sized(kind, &text, n).unwrap(), o, "{kind} {text}");
    };
    for n in 0..=5 {
        for b in all_bitstrings(n) {
            check(Kind::Combination, Object::Combo(Combination::new(b.clone())), None);
            check(Kind::Bitstring, Object::Bits(b.clone()), None);
            if n >= 1 {
                check(Kind::SpanningTree, Object::Edges(bits_to_spanning_tree(&b).unwrap()), Some(n));
                check(Kind::Matching, Object::Edges(bits_to_matching(&b).unwrap()), Some(n));
            }
        }
        for p in all_permutations(n).into_iter().filter(|_| n >= 1) {
            check(Kind::Permutation, Object::Perm(p), None);
        }
        for p in partitions(n).into_iter().filter(|_| n >= 1) {
            if p.is_noncrossing() {
                check(Kind::NcPartition, Object::Partition(p.clone()), None);
            } else {
                assert!(parse_object(Kind::NcPartition, &p.to_string()).is_err());
            }
            check(Kind::SetPartition, Object::Partition(p), None);
        }
    }
}

fn shuffled(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn large_permutations_round_trip(v in (1usize..=14).prop_flat_map(shuffled)) {
        let p = Permutation::new(v.clone()).unwrap();
        let text = p.to_string();
        if v.len() > 9 {
            prop_assert!(text.contains(' '));
        }
        prop_assert_eq!(parse_object(Kind::Permutation, &text).unwrap(), Object::Perm(p));
    }

    #[test]
    fn tuples_round_trip(a in 1u64..10_000, b in 1u64..10_000) {
        let t = Tuple2::new(a, b).unwrap();
        prop_assert_eq!(parse_object(Kind::Tuple, &t.to_string()).unwrap(), Object::Tuple(t));
    }

    #[test]
    fn large_partitions_round_trip(labels in proptest::collection::vec(0usize..4, 1..13)) {
        let n = labels.len();
        let blocks: Vec<Vec<usize>> = (0..4)
            .map(|b| (1..=n).filter(|&e| labels[e - 1] == b).collect::<Vec<_>>())
            .filter(|b| !b.is_empty())
            .collect();
        let p = SetPartition::new(blocks).unwrap();
        prop_assert_eq!(parse_object(Kind::SetPartition, &p.to_string()).unwrap(), Object::Partition(p));
    }
}

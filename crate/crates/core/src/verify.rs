//! Brute-force oracles and reduction checks.

use std::collections::HashSet;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::flipgraph::{build_flip_graph, FlipGraph};
use crate::flips::{adjacent, FlipFamily};
use crate::objects::{BitString, Instance, Kind, Object, Tuple2};
use crate::reductions::{object_map, ReductionTag};
use crate::solver::{count_hamilton_paths_bounded, Answer};

/// Largest graph the brute-force oracles accept.
pub const BRUTE_FORCE_BOUND: usize = 10;
/// Largest `n` for which hypercube inducement is checked by default.
pub const HYPERCUBE_BOUND: usize = 5;

/// Calls `visit` with every permutation of `0..m` in lexicographic order.
fn for_each_permutation(m: usize, mut visit: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..m).collect();
    loop {
        visit(&p);
        let Some(i) = (1..m).rev().find(|&i| p[i - 1] < p[i]) else {
            return;
        };
        let j = (i..m).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

fn brute_force(graph: &FlipGraph, cyclic: bool) -> Result<(Answer, u64)> {
    let m = graph.m();
    if m > BRUTE_FORCE_BOUND {
        return Err(Error::BoundExceeded { m, bound: BRUTE_FORCE_BOUND });
    }
    let mut count = 0u64;
    for_each_permutation(m, |p| {
        let open = p.windows(2).all(|w| graph.has_edge(w[0], w[1]));
        if open && (!cyclic || (m > 0 && graph.has_edge(p[m - 1], p[0]))) {
            count += 1;
        }
    });
    if cyclic {
        // Each cycle is seen once per rotation, and per direction when undirected.
        let valid = m >= 3 || (m == 2 && graph.is_directed());
        if !valid {
            count = 0;
        }
        count /= (m as u64).max(1);
    }
    if !graph.is_directed() && m >= 2 {
        count /= 2;
    }
    let answer = if count > 0 { Answer::Yes } else { Answer::No };
    Ok((answer, count))
}

/// Decides and counts Hamilton paths by trying every vertex order.
/// Undirected paths are counted up to reversal.
pub fn brute_force_hamilton(graph: &FlipGraph) -> Result<(Answer, u64)> {
    brute_force(graph, false)
}

/// Decides and counts Hamilton cycles by trying every vertex order.
pub fn brute_force_hamilton_cycle(graph: &FlipGraph) -> Result<(Answer, u64)> {
    brute_force(graph, true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub tag: ReductionTag,
    pub pairs_checked: u64,
    pub adjacency_iff_violations: u64,
    pub injective: bool,
    /// `(source count, target count)` per target flip, when the instance is small enough.
    pub parsimony_samples: Vec<(u64, u64)>,
    /// `(n, passed)` hypercube inducement checks.
    pub hypercube_checks: Vec<(usize, bool)>,
}

impl ReductionReport {
    pub fn passed(&self) -> bool {
        self.adjacency_iff_violations == 0
            && self.injective
            && self.parsimony_samples.iter().all(|(s, t)| s == t)
            && self.hypercube_checks.iter().all(|&(_, ok)| ok)
    }

    pub fn to_record(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "tag={}", self.tag);
        let _ = writeln!(s, "pairs_checked={}", self.pairs_checked);
        let _ = writeln!(s, "adjacency_iff_violations={}", self.adjacency_iff_violations);
        let _ = writeln!(s, "injective={}", self.injective);
        let samples: Vec<String> = self.parsimony_samples.iter().map(|(a, b)| format!("{a}:{b}")).collect();
        let _ = writeln!(s, "parsimony_samples={}", samples.join(","));
        let cubes: Vec<String> = self.hypercube_checks.iter().map(|(n, ok)| format!("{n}:{ok}")).collect();
        let _ = writeln!(s, "hypercube_checks={}", cubes.join(","));
        let _ = writeln!(s, "passed={}", self.passed());
        s
    }
}

/// Runs every check for `tag` on `source` using the reduction's own map.
pub fn check_reduction(tag: ReductionTag, source: &Instance) -> Result<ReductionReport> {
    let map = object_map(tag, source.objects())?;
    check_mapping(tag, source, &map)
}

/// As [`check_reduction`] with a caller-supplied object map, so that broken
/// maps can be shown to fail.
pub fn check_mapping(
    tag: ReductionTag,
    source: &Instance,
    map: &(dyn Fn(&Object) -> Result<Object> + Sync),
) -> Result<ReductionReport> {
    if source.kind() != tag.source_kind() {
        return Err(Error::KindMismatch { expected: tag.source_kind(), found: source.kind() });
    }
    let objects = source.objects();
    let images = objects.iter().map(map).collect::<Result<Vec<_>>>()?;
    let m = objects.len();
    let injective = images.iter().collect::<HashSet<_>>().len() == m;
    let mut violations = 0u64;
    for &flip in tag.target_flips() {
        violations += (0..m)
            .into_par_iter()
            .map(|i| -> Result<u64> {
                let mut bad = 0;
                for j in i + 1..m {
                    let s = adjacent(source.flip(), &objects[i], &objects[j])?;
                    let t = adjacent(flip, &images[i], &images[j])?;
                    bad += u64::from(s != t);
                }
                Ok(bad)
            })
            .collect::<Result<Vec<u64>>>()?
            .into_iter()
            .sum::<u64>();
    }
    let mut parsimony_samples = Vec::new();
    if m <= BRUTE_FORCE_BOUND && injective {
        let source_count = count_hamilton_paths_bounded(&build_flip_graph(source)?, BRUTE_FORCE_BOUND)?;
        for &flip in tag.target_flips() {
            let target = Instance::new(tag.target_kind(), flip, images.clone())?;
            let target_count = count_hamilton_paths_bounded(&build_flip_graph(&target)?, BRUTE_FORCE_BOUND)?;
            parsimony_samples.push((source_count, target_count));
        }
    }
    Ok(ReductionReport {
        tag,
        pairs_checked: (m * m.saturating_sub(1) / 2) as u64,
        adjacency_iff_violations: violations,
        injective,
        parsimony_samples,
        hypercube_checks: Vec::new(),
    })
}

/// The full set `B_n` as bitflip instance objects.
pub fn full_cube(n: usize) -> Vec<Object> {
    (0..1usize << n).map(|i| Object::Bits(BitString::from_index(i, n))).collect()
}

/// Whether the image of `B_n` under a bitstring reduction induces exactly
/// the hypercube: `n 2^(n-1)` adjacent pairs, each a Hamming-1 pair.
pub fn check_hypercube_inducement(tag: ReductionTag, n: usize) -> bool {
    if tag.source_kind() != Kind::Bitstring {
        return false;
    }
    match object_map(tag, &[]) {
        Ok(map) => tag.target_flips().iter().all(|&flip| hypercube_with(&map, flip, n)),
        Err(_) => false,
    }
}

/// Hypercube inducement for an arbitrary map and target flip.
pub fn hypercube_with(map: &(dyn Fn(&Object) -> Result<Object> + Sync), flip: FlipFamily, n: usize) -> bool {
    let cube = full_cube(n);
    let Ok(images) = cube.iter().map(map).collect::<Result<Vec<_>>>() else {
        return false;
    };
    let m = cube.len();
    let scan = (0..m)
        .into_par_iter()
        .map(|i| -> Result<(u64, bool)> {
            let mut edges = 0;
            let mut ok = true;
            for j in i + 1..m {
                let hamming_one = (i ^ j).count_ones() == 1;
                let t = adjacent(flip, &images[i], &images[j])?;
                edges += u64::from(t);
                ok &= t == hamming_one;
            }
            Ok((edges, ok))
        })
        .collect::<Result<Vec<_>>>();
    match scan {
        Ok(rows) => {
            let edges: u64 = rows.iter().map(|r| r.0).sum();
            rows.iter().all(|r| r.1) && edges == (n as u64) << n.saturating_sub(1)
        }
        Err(_) => false,
    }
}

/// The source instance used by `verify-reduction --n`: the full `B_n` for
/// bitstring reductions, the full `[n] x [n]` grid for tuple reductions.
pub fn canonical_source(tag: ReductionTag, n: usize) -> Result<Instance> {
    match tag.source_kind() {
        Kind::Tuple => {
            if n == 0 {
                return Err(Error::EmptyInstance);
            }
            let n = n as u64;
            let objects = (1..=n)
                .flat_map(|a| (1..=n).map(move |b| Tuple2::new(a, b).map(Object::from)))
                .collect::<Result<Vec<_>>>()?;
            Instance::new(Kind::Tuple, FlipFamily::Pm1Tuple, objects)
        }
        _ => Instance::new(Kind::Bitstring, FlipFamily::Bitflip, full_cube(n)),
    }
}

/// [`check_reduction`] on [`canonical_source`], plus the hypercube check for
/// bitstring reductions.
pub fn verify_reduction(tag: ReductionTag, n: usize) -> Result<ReductionReport> {
    let source = canonical_source(tag, n)?;
    let mut report = check_reduction(tag, &source)?;
    if tag.source_kind() == Kind::Bitstring {
        report.hypercube_checks.push((n, check_hypercube_inducement(tag, n)));
    }
    Ok(report)
}

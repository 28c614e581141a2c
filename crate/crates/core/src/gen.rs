//! Named example instances and seeded random instances.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::flips::FlipFamily;
use crate::objects::{BitString, Instance, Kind, Object, Permutation, Tuple2};
use crate::reductions::{normalize_continuous, NormalizeOutcome};

/// Deterministic generator used everywhere a seed is accepted.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All `2^n` bitstrings of length `n` in counting order.
pub fn all_bitstrings(n: usize) -> Vec<BitString> {
    (0..1usize << n).map(|i| BitString::from_index(i, n)).collect()
}

/// All `n!` permutations of `[n]` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation::new(p.clone()).expect("bijection"));
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

pub fn full_bits_instance(n: usize, flip: FlipFamily) -> Result<Instance> {
    Instance::new(Kind::Bitstring, flip, all_bitstrings(n).into_iter().map(Object::from).collect())
}

pub fn full_perms_instance(n: usize, flip: FlipFamily) -> Result<Instance> {
    Instance::new(Kind::Permutation, flip, all_permutations(n).into_iter().map(Object::from).collect())
}

pub const NAMED: [&str; 5] = ["abstract-no", "abstract-yes", "full-Bn", "full-Sn", "grid-sample"];

/// Builds a named instance: `abstract-no`, `abstract-yes`, `full-B<n>`,
/// `full-S<n>` (or `full-Bn`/`full-Sn` with `n` given separately), and
/// `grid-sample`, the eight boundary points of the 3x3 grid.
pub fn named_instance(name: &str, n: Option<usize>) -> Result<Instance> {
    let size = |suffix: &str| -> Result<usize> {
        match (suffix, n) {
            ("n", Some(n)) => Ok(n),
            ("n", None) => Err(Error::InvalidArgument(format!("{name} needs a size"))),
            (digits, _) => digits
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("unknown instance `{name}`"))),
        }
    };
    match name {
        "abstract-no" => from_text(Kind::Bitstring, FlipFamily::Bitflip, &["000", "001", "010", "100"]),
        "abstract-yes" => from_text(Kind::Permutation, FlipFamily::Swap, &["1234", "1324", "1243"]),
        "grid-sample" => {
            let points = (1..=3u64)
                .flat_map(|a| (1..=3u64).map(move |b| (a, b)))
                .filter(|&p| p != (2, 2))
                .map(|(a, b)| Tuple2::new(a, b).map(Object::from))
                .collect::<Result<Vec<_>>>()?;
            Instance::new(Kind::Tuple, FlipFamily::Pm1Tuple, points)
        }
        _ => {
            if let Some(rest) = name.strip_prefix("full-B") {
                full_bits_instance(size(rest)?, FlipFamily::Bitflip)
            } else if let Some(rest) = name.strip_prefix("full-S") {
                full_perms_instance(size(rest)?, FlipFamily::Swap)
            } else {
                Err(Error::InvalidArgument(format!("unknown instance `{name}`")))
            }
        }
    }
}

fn from_text(kind: Kind, flip: FlipFamily, items: &[&str]) -> Result<Instance> {
    let objects = items
        .iter()
        .map(|s| crate::objects::parse_object(kind, s))
        .collect::<Result<Vec<_>>>()?;
    Instance::new(kind, flip, objects)
}

/// A uniformly random `size`-subset of `universe`, kept in universe order.
pub fn random_subset<R: Rng>(universe: &Instance, size: usize, rng: &mut R) -> Result<Instance> {
    if size > universe.len() {
        return Err(Error::InvalidArgument(format!(
            "cannot pick {size} of {} objects",
            universe.len()
        )));
    }
    let mut picked = sample(rng, universe.len(), size).into_vec();
    picked.sort_unstable();
    universe.select(&picked)
}

/// A random continuous list of `m` distinct tuples, drawn from a grid just
/// large enough to hold them and redrawn until continuous.
pub fn random_continuous_tuples<R: Rng>(m: usize, rng: &mut R) -> Result<Vec<Tuple2>> {
    if m == 0 {
        return Err(Error::EmptyInstance);
    }
    let side = (m as f64).sqrt().ceil() as u64 + 1;
    loop {
        let cells = sample(rng, (side * side) as usize, m).into_vec();
        let tuples = cells
            .into_iter()
            .map(|c| Tuple2::new(c as u64 / side + 1, c as u64 % side + 1))
            .collect::<Result<Vec<_>>>()?;
        if let NormalizeOutcome::Normalized(list) = normalize_continuous(&tuples)? {
            return Ok(list);
        }
    }
}

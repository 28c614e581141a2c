//! Gray-code reductions as executable instance transformations.
//!
//! Each reduction maps objects one at a time and keeps list order, so a
//! certificate for the target instance is a certificate for the source.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::flips::FlipFamily;
use crate::objects::{
    BitString, Certificate, Combination, DiamondGraph, Edge, EdgeSubset, Instance, Kind, Object, Permutation,
    SetPartition, Side, Tuple2, Vertex,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReductionTag {
    TuplesNormalize,
    TuplesToBits,
    TuplesToPerms,
    BitsToNcPartitions,
    BitsToCombosSwap,
    BitsToCombosComplement,
    BitsToCombosReversal,
    BitsToPermsPairs,
    BitsToPeakless,
    BitsToTrees,
    BitsToMatchings,
}

impl ReductionTag {
    pub const ALL: [ReductionTag; 11] = [
        ReductionTag::TuplesNormalize,
        ReductionTag::TuplesToBits,
        ReductionTag::TuplesToPerms,
        ReductionTag::BitsToNcPartitions,
        ReductionTag::BitsToCombosSwap,
        ReductionTag::BitsToCombosComplement,
        ReductionTag::BitsToCombosReversal,
        ReductionTag::BitsToPermsPairs,
        ReductionTag::BitsToPeakless,
        ReductionTag::BitsToTrees,
        ReductionTag::BitsToMatchings,
    ];

    /// Reductions whose source is a list of bitstrings under bitflips.
    pub const FROM_BITS: [ReductionTag; 8] = [
        ReductionTag::BitsToNcPartitions,
        ReductionTag::BitsToCombosSwap,
        ReductionTag::BitsToCombosComplement,
        ReductionTag::BitsToCombosReversal,
        ReductionTag::BitsToPermsPairs,
        ReductionTag::BitsToPeakless,
        ReductionTag::BitsToTrees,
        ReductionTag::BitsToMatchings,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            ReductionTag::TuplesNormalize => "tuples_normalize",
            ReductionTag::TuplesToBits => "tuples_to_bits",
            ReductionTag::TuplesToPerms => "tuples_to_perms",
            ReductionTag::BitsToNcPartitions => "bits_to_ncpartitions",
            ReductionTag::BitsToCombosSwap => "bits_to_combos_swap",
            ReductionTag::BitsToCombosComplement => "bits_to_combos_complement",
            ReductionTag::BitsToCombosReversal => "bits_to_combos_reversal",
            ReductionTag::BitsToPermsPairs => "bits_to_perms_pairs",
            ReductionTag::BitsToPeakless => "bits_to_peakless",
            ReductionTag::BitsToTrees => "bits_to_trees",
            ReductionTag::BitsToMatchings => "bits_to_matchings",
        }
    }

    pub fn source_kind(self) -> Kind {
        match self {
            ReductionTag::TuplesNormalize | ReductionTag::TuplesToBits | ReductionTag::TuplesToPerms => Kind::Tuple,
            _ => Kind::Bitstring,
        }
    }

    pub fn source_flip(self) -> FlipFamily {
        match self.source_kind() {
            Kind::Tuple => FlipFamily::Pm1Tuple,
            _ => FlipFamily::Bitflip,
        }
    }

    pub fn target_kind(self) -> Kind {
        match self {
            ReductionTag::TuplesNormalize => Kind::Tuple,
            ReductionTag::TuplesToBits => Kind::Bitstring,
            ReductionTag::TuplesToPerms | ReductionTag::BitsToPermsPairs | ReductionTag::BitsToPeakless => {
                Kind::Permutation
            }
            ReductionTag::BitsToNcPartitions => Kind::NcPartition,
            ReductionTag::BitsToCombosSwap
            | ReductionTag::BitsToCombosComplement
            | ReductionTag::BitsToCombosReversal => Kind::Combination,
            ReductionTag::BitsToTrees => Kind::SpanningTree,
            ReductionTag::BitsToMatchings => Kind::Matching,
        }
    }

    /// Every target flip family under which the map preserves adjacency;
    /// the first is the default.
    pub fn target_flips(self) -> &'static [FlipFamily] {
        use FlipFamily::*;
        match self {
            ReductionTag::TuplesNormalize => &[Pm1Tuple],
            ReductionTag::TuplesToBits => &[Bitflip],
            ReductionTag::TuplesToPerms => &[Swap],
            ReductionTag::BitsToNcPartitions => &[Refinement],
            ReductionTag::BitsToCombosSwap => &[Swap, Transposition],
            ReductionTag::BitsToCombosComplement => &[SubstringComplement],
            ReductionTag::BitsToCombosReversal => &[Reversal],
            ReductionTag::BitsToPermsPairs => &[Swap, Transposition, Reversal, Rotation, Jump],
            ReductionTag::BitsToPeakless => &[Jump],
            ReductionTag::BitsToTrees => &[EdgeExchange],
            ReductionTag::BitsToMatchings => &[AlternatingCycle],
        }
    }

    pub fn target_flip(self) -> FlipFamily {
        self.target_flips()[0]
    }
}

impl fmt::Display for ReductionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for ReductionTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ReductionTag::ALL
            .into_iter()
            .find(|t| t.tag() == s.trim())
            .ok_or_else(|| Error::InvalidArgument(format!("unknown reduction tag `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalizeOutcome {
    /// The coordinate `case` (1 for the first, 2 for the second) skips the
    /// value `gap`, which splits the list into parts at distance at least 2.
    NoInstance { case: u8, gap: u64 },
    Normalized(Vec<Tuple2>),
}

fn first_gap(values: impl Iterator<Item = u64>) -> Option<u64> {
    let mut sorted: Vec<u64> = values.collect();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.windows(2).find(|w| w[1] > w[0] + 1).map(|w| w[0] + 1)
}

/// Shifts a tuple list so both coordinates start at 1, or reports the gap
/// that makes it a no-instance.
pub fn normalize_continuous(tuples: &[Tuple2]) -> Result<NormalizeOutcome> {
    if tuples.is_empty() {
        return Err(Error::EmptyInstance);
    }
    if let Some(gap) = first_gap(tuples.iter().map(|t| t.a)) {
        return Ok(NormalizeOutcome::NoInstance { case: 1, gap });
    }
    if let Some(gap) = first_gap(tuples.iter().map(|t| t.b)) {
        return Ok(NormalizeOutcome::NoInstance { case: 2, gap });
    }
    let min_a = tuples.iter().map(|t| t.a).min().unwrap_or(1);
    let min_b = tuples.iter().map(|t| t.b).min().unwrap_or(1);
    tuples
        .iter()
        .map(|t| Tuple2::new(1 + t.a - min_a, 1 + t.b - min_b))
        .collect::<Result<_>>()
        .map(NormalizeOutcome::Normalized)
}

/// Whether both coordinate value sets are exactly `{1, ..., max}`.
pub fn is_continuous(tuples: &[Tuple2]) -> bool {
    let starts_at_one = |vals: &mut dyn Iterator<Item = u64>| vals.min() == Some(1);
    !tuples.is_empty()
        && starts_at_one(&mut tuples.iter().map(|t| t.a))
        && starts_at_one(&mut tuples.iter().map(|t| t.b))
        && first_gap(tuples.iter().map(|t| t.a)).is_none()
        && first_gap(tuples.iter().map(|t| t.b)).is_none()
}

fn maxima(tuples: &[Tuple2]) -> Result<(u64, u64)> {
    if !is_continuous(tuples) {
        return Err(Error::NotContinuous);
    }
    let a = tuples.iter().map(|t| t.a).max().unwrap_or(0);
    let b = tuples.iter().map(|t| t.b).max().unwrap_or(0);
    Ok((a, b))
}

fn tuple_to_bits(t: &Tuple2, a: u64, b: u64) -> BitString {
    let run = |bit: u8, len: u64| std::iter::repeat_n(bit, len as usize);
    let bits = run(0, t.a)
        .chain(run(1, a - t.a))
        .chain(run(0, t.b))
        .chain(run(1, b - t.b))
        .collect();
    BitString::new(bits).expect("binary digits")
}

/// `0^{a_i} 1^{a-a_i} 0^{b_i} 1^{b-b_i}` for each tuple of a continuous list.
pub fn tuples_to_bitstrings(tuples: &[Tuple2]) -> Result<Vec<BitString>> {
    let (a, b) = maxima(tuples)?;
    Ok(tuples.iter().map(|t| tuple_to_bits(t, a, b)).collect())
}

fn tuple_to_perm(t: &Tuple2, a: u64, b: u64) -> Permutation {
    let len = (a + b + 2) as usize;
    let (x, y) = (t.a as usize, (a + t.b) as usize);
    let mut values = vec![0; len];
    values[x - 1] = len - 1;
    values[y - 1] = len;
    let mut fill = 1..;
    for v in values.iter_mut().filter(|v| **v == 0) {
        *v = fill.next().expect("unbounded range");
    }
    Permutation::new(values).expect("bijection by construction")
}

/// The permutation of length `a+b+2` with `a+b+1` at position `a_i`,
/// `a+b+2` at position `a+b_i`, and the remaining values in increasing order.
pub fn tuples_to_permutations(tuples: &[Tuple2]) -> Result<Vec<Permutation>> {
    let (a, b) = maxima(tuples)?;
    Ok(tuples.iter().map(|t| tuple_to_perm(t, a, b)).collect())
}

/// Bit `b_i = 1` puts `i+1` in the block of 1; otherwise `i+1` is a singleton.
pub fn bits_to_ncpartition(bits: &BitString) -> SetPartition {
    let n = bits.len();
    let mut first = vec![1];
    let mut blocks = Vec::new();
    for (i, &b) in bits.bits().iter().enumerate() {
        if b == 1 {
            first.push(i + 2);
        } else {
            blocks.push(vec![i + 2]);
        }
    }
    blocks.push(first);
    let p = SetPartition::new(blocks).expect("partition of [n+1]");
    debug_assert_eq!(p.n(), n + 1);
    p
}

fn pair(b: u8) -> [u8; 2] {
    if b == 1 {
        [1, 0]
    } else {
        [0, 1]
    }
}

fn padded_pairs(bits: &BitString, padding: &[u8]) -> Combination {
    let mut out = Vec::with_capacity(bits.len() * (2 + padding.len()));
    for (i, &b) in bits.bits().iter().enumerate() {
        if i > 0 {
            out.extend_from_slice(padding);
        }
        out.extend(pair(b));
    }
    Combination::new(BitString::new(out).expect("binary digits"))
}

/// Each bit becomes the pair `01` (for 0) or `10` (for 1).
pub fn bits_to_combination_swap(bits: &BitString) -> Combination {
    padded_pairs(bits, &[])
}

/// Pairs as for swaps, separated by a single `1`.
pub fn bits_to_combination_complement(bits: &BitString) -> Combination {
    padded_pairs(bits, &[1])
}

/// Pairs as for swaps, separated by `01`.
pub fn bits_to_combination_reversal(bits: &BitString) -> Combination {
    padded_pairs(bits, &[0, 1])
}

/// Positions `2i-1, 2i` hold `2i-1, 2i` when `b_i = 0` and `2i, 2i-1` otherwise.
pub fn bits_to_permutation_pairs(bits: &BitString) -> Permutation {
    let values = bits
        .bits()
        .iter()
        .enumerate()
        .flat_map(|(i, &b)| if b == 1 { [2 * i + 2, 2 * i + 1] } else { [2 * i + 1, 2 * i + 2] })
        .collect();
    Permutation::new(values).expect("bijection by construction")
}

/// Reads the string as `b_2 ... b_n`: starting from `1`, value `i` is
/// inserted leftmost when `b_i = 1` and rightmost otherwise.
pub fn bits_to_peakless(bits: &BitString) -> Permutation {
    let mut values = std::collections::VecDeque::from([1]);
    for (i, &b) in bits.bits().iter().enumerate() {
        if b == 1 {
            values.push_front(i + 2);
        } else {
            values.push_back(i + 2);
        }
    }
    Permutation::new(values.into()).expect("bijection by construction")
}

pub fn build_diamond_graph(n: usize) -> Result<DiamondGraph> {
    DiamondGraph::new(n)
}

fn edge(s: Side, i: usize, t: Side, j: usize) -> Edge {
    Edge::new(Vertex::new(s, i), Vertex::new(t, j))
}

/// All `S`-edges and connectors of `D_n`, plus `W_iN_i` or `E_iN_i` per bit.
pub fn bits_to_spanning_tree(bits: &BitString) -> Result<EdgeSubset> {
    use Side::*;
    let n = bits.len();
    let host = DiamondGraph::new(n)?;
    let edges = bits.bits().iter().enumerate().flat_map(|(k, &b)| {
        let i = k + 1;
        let top = if b == 1 { edge(E, i, N, i) } else { edge(W, i, N, i) };
        [edge(W, i, S, i), edge(E, i, S, i), top]
            .into_iter()
            .chain((i < n).then(|| edge(E, i, W, i + 1)))
    });
    EdgeSubset::spanning_tree(host, edges.collect::<Vec<_>>())
}

/// `{W_iN_i, E_iS_i}` for a 0 bit and `{E_iN_i, W_iS_i}` for a 1 bit.
pub fn bits_to_matching(bits: &BitString) -> Result<EdgeSubset> {
    use Side::*;
    let host = DiamondGraph::new(bits.len())?;
    let edges = bits.bits().iter().enumerate().flat_map(|(k, &b)| {
        let i = k + 1;
        if b == 1 {
            [edge(E, i, N, i), edge(W, i, S, i)]
        } else {
            [edge(W, i, N, i), edge(E, i, S, i)]
        }
    });
    EdgeSubset::perfect_matching(host, edges.collect::<Vec<_>>())
}

/// Per-object map of a reduction, with any list-wide parameters fixed.
pub type ObjectMap = Box<dyn Fn(&Object) -> Result<Object> + Send + Sync>;

fn expect_bits(object: &Object) -> Result<&BitString> {
    match object {
        Object::Bits(b) => Ok(b),
        other => Err(Error::KindMismatch { expected: Kind::Bitstring, found: other.kind() }),
    }
}

fn expect_tuple(object: &Object) -> Result<&Tuple2> {
    match object {
        Object::Tuple(t) => Ok(t),
        other => Err(Error::KindMismatch { expected: Kind::Tuple, found: other.kind() }),
    }
}

fn tuples_of(objects: &[Object]) -> Result<Vec<Tuple2>> {
    objects.iter().map(|o| expect_tuple(o).copied()).collect()
}

/// The object map of `tag` for the given source list.
pub fn object_map(tag: ReductionTag, objects: &[Object]) -> Result<ObjectMap> {
    use ReductionTag::*;
    Ok(match tag {
        TuplesNormalize => {
            let tuples = tuples_of(objects)?;
            let min_a = tuples.iter().map(|t| t.a).min().unwrap_or(1);
            let min_b = tuples.iter().map(|t| t.b).min().unwrap_or(1);
            Box::new(move |o| {
                let t = expect_tuple(o)?;
                Ok(Tuple2::new(1 + t.a - min_a, 1 + t.b - min_b)?.into())
            })
        }
        TuplesToBits => {
            let (a, b) = maxima(&tuples_of(objects)?)?;
            Box::new(move |o| Ok(tuple_to_bits(expect_tuple(o)?, a, b).into()))
        }
        TuplesToPerms => {
            let (a, b) = maxima(&tuples_of(objects)?)?;
            Box::new(move |o| Ok(tuple_to_perm(expect_tuple(o)?, a, b).into()))
        }
        BitsToNcPartitions => Box::new(|o| Ok(bits_to_ncpartition(expect_bits(o)?).into())),
        BitsToCombosSwap => Box::new(|o| Ok(bits_to_combination_swap(expect_bits(o)?).into())),
        BitsToCombosComplement => Box::new(|o| Ok(bits_to_combination_complement(expect_bits(o)?).into())),
        BitsToCombosReversal => Box::new(|o| Ok(bits_to_combination_reversal(expect_bits(o)?).into())),
        BitsToPermsPairs => Box::new(|o| Ok(bits_to_permutation_pairs(expect_bits(o)?).into())),
        BitsToPeakless => Box::new(|o| Ok(bits_to_peakless(expect_bits(o)?).into())),
        BitsToTrees => Box::new(|o| Ok(bits_to_spanning_tree(expect_bits(o)?)?.into())),
        BitsToMatchings => Box::new(|o| Ok(bits_to_matching(expect_bits(o)?)?.into())),
    })
}

/// Applies `tag` to every object, in order, targeting the tag's default flip.
pub fn reduce_instance(source: &Instance, tag: ReductionTag) -> Result<Instance> {
    reduce_instance_to(source, tag, tag.target_flip())
}

/// As [`reduce_instance`] with an explicit target flip from `tag.target_flips()`.
pub fn reduce_instance_to(source: &Instance, tag: ReductionTag, flip: FlipFamily) -> Result<Instance> {
    if source.kind() != tag.source_kind() {
        return Err(Error::KindMismatch { expected: tag.source_kind(), found: source.kind() });
    }
    if source.flip() != tag.source_flip() {
        return Err(Error::InvalidArgument(format!(
            "{tag} reduces {} instances, not {}",
            tag.source_flip(),
            source.flip()
        )));
    }
    if !tag.target_flips().contains(&flip) {
        return Err(Error::InvalidArgument(format!("{tag} does not target flip {flip}")));
    }
    if tag == ReductionTag::TuplesNormalize && !source.is_empty() {
        if let NormalizeOutcome::NoInstance { case, gap } = normalize_continuous(&tuples_of(source.objects())?)? {
            return Err(Error::NoInstance { case, gap });
        }
    }
    let map = object_map(tag, source.objects())?;
    let objects = source.objects().iter().map(&map).collect::<Result<Vec<_>>>()?;
    Instance::new(tag.target_kind(), flip, objects)
}

/// Maps a target certificate back to the source. Reductions keep list
/// order, so the index order carries over unchanged.
pub fn lift_certificate(source: &Instance, target: &Instance, certificate: &Certificate) -> Result<Certificate> {
    if source.len() != target.len() {
        return Err(Error::BadIndices(format!(
            "source has {} objects, target has {}",
            source.len(),
            target.len()
        )));
    }
    if let Some(&i) = certificate.order().iter().find(|&&i| i >= source.len()) {
        return Err(Error::BadIndices(format!("index {} outside 1..={}", i + 1, source.len())));
    }
    Ok(certificate.clone())
}

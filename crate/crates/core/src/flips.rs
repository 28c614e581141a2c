//! Flip-adjacency predicates.
//!
//! Each predicate answers whether `y` is reachable from `x` by exactly one
//! flip of its family. All predicates are irreflexive, and all are symmetric
//! except the two directed families ([`FlipFamily::RegisterShift`] and
//! [`FlipFamily::ShorthandRotation`]).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::objects::{
    BitString, Combination, EdgeSubset, Kind, Object, Permutation, SetPartition, Tuple2, Vertex,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FlipFamily {
    Bitflip,
    SubstringComplement,
    Pm1Tuple,
    Swap,
    Transposition,
    Reversal,
    Rotation,
    Jump,
    Refinement,
    EdgeExchange,
    AlternatingCycle,
    RegisterShift,
    ShorthandRotation,
}

impl FlipFamily {
    pub const ALL: [FlipFamily; 13] = [
        FlipFamily::Bitflip,
        FlipFamily::SubstringComplement,
        FlipFamily::Pm1Tuple,
        FlipFamily::Swap,
        FlipFamily::Transposition,
        FlipFamily::Reversal,
        FlipFamily::Rotation,
        FlipFamily::Jump,
        FlipFamily::Refinement,
        FlipFamily::EdgeExchange,
        FlipFamily::AlternatingCycle,
        FlipFamily::RegisterShift,
        FlipFamily::ShorthandRotation,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            FlipFamily::Bitflip => "bitflip",
            FlipFamily::SubstringComplement => "substring_complement",
            FlipFamily::Pm1Tuple => "pm1_tuple",
            FlipFamily::Swap => "swap",
            FlipFamily::Transposition => "transposition",
            FlipFamily::Reversal => "reversal",
            FlipFamily::Rotation => "rotation",
            FlipFamily::Jump => "jump",
            FlipFamily::Refinement => "refinement",
            FlipFamily::EdgeExchange => "edge_exchange",
            FlipFamily::AlternatingCycle => "alternating_cycle",
            FlipFamily::RegisterShift => "register_shift",
            FlipFamily::ShorthandRotation => "shorthand_rotation",
        }
    }

    pub fn is_directed(self) -> bool {
        matches!(self, FlipFamily::RegisterShift | FlipFamily::ShorthandRotation)
    }

    pub fn applies_to(self, kind: Kind) -> bool {
        use FlipFamily::*;
        match kind {
            Kind::Bitstring => matches!(
                self,
                Bitflip | SubstringComplement | RegisterShift | Swap | Transposition | Reversal | Rotation
            ),
            Kind::Combination => {
                matches!(self, Swap | Transposition | SubstringComplement | Reversal | Rotation)
            }
            Kind::Tuple => self == Pm1Tuple,
            Kind::Permutation => matches!(
                self,
                Swap | Transposition | Reversal | Rotation | Jump | ShorthandRotation
            ),
            Kind::SetPartition | Kind::NcPartition => self == Refinement,
            Kind::SpanningTree => self == EdgeExchange,
            Kind::Matching => self == AlternatingCycle,
        }
    }
}

impl fmt::Display for FlipFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FlipFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FlipFamily::ALL
            .iter()
            .copied()
            .find(|f| f.tag() == s)
            .ok_or_else(|| Error::MalformedText(format!("unknown flip `{s}`")))
    }
}

fn same_len<T>(x: &[T], y: &[T]) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::SizeMismatch);
    }
    Ok(())
}

/// First and last differing positions, if any.
fn diff_span<T: PartialEq>(x: &[T], y: &[T]) -> Option<(usize, usize)> {
    let l = x.iter().zip(y).position(|(a, b)| a != b)?;
    let r = x.iter().zip(y).rposition(|(a, b)| a != b)?;
    Some((l, r))
}

fn seq_swap<T: PartialEq>(x: &[T], y: &[T]) -> bool {
    match diff_span(x, y) {
        Some((l, r)) => r == l + 1 && x[l] == y[r] && x[r] == y[l],
        None => false,
    }
}

fn seq_transposition<T: PartialEq>(x: &[T], y: &[T]) -> bool {
    let diffs: Vec<usize> = (0..x.len()).filter(|&i| x[i] != y[i]).collect();
    match diffs[..] {
        [i, j] => x[i] == y[j] && x[j] == y[i],
        _ => false,
    }
}

// Changed positions of a reversal are symmetric about its centre, so the
// differing span is itself a reversible interval whenever any reversal works.
fn seq_reversal<T: PartialEq>(x: &[T], y: &[T]) -> bool {
    match diff_span(x, y) {
        Some((l, r)) => x[l..=r].iter().rev().eq(&y[l..=r]),
        None => false,
    }
}

fn rotated_left<T: PartialEq>(x: &[T], y: &[T]) -> bool {
    let n = x.len();
    n >= 2 && x[1..].iter().chain(std::iter::once(&x[0])).eq(y)
}

// Unchanged ends of a rotated substring are runs of one repeated symbol, so
// shrinking to the differing span preserves the rotation.
fn seq_rotation<T: PartialEq>(x: &[T], y: &[T]) -> bool {
    match diff_span(x, y) {
        Some((l, r)) => {
            let (xs, ys) = (&x[l..=r], &y[l..=r]);
            rotated_left(xs, ys) || rotated_left(ys, xs)
        }
        None => false,
    }
}

pub fn adjacent_bitflip(x: &BitString, y: &BitString) -> Result<bool> {
    same_len(x.bits(), y.bits())?;
    Ok(x.hamming(y) == 1)
}

/// The differing positions form one nonempty contiguous interval.
pub fn adjacent_substring_complement(x: &BitString, y: &BitString) -> Result<bool> {
    same_len(x.bits(), y.bits())?;
    Ok(match diff_span(x.bits(), y.bits()) {
        Some((l, r)) => (l..=r).all(|i| x.bits()[i] != y.bits()[i]),
        None => false,
    })
}

pub fn adjacent_pm1(x: &Tuple2, y: &Tuple2) -> Result<bool> {
    Ok(x.l1(y) == 1)
}

pub fn adjacent_swap<T: PartialEq>(x: &[T], y: &[T]) -> Result<bool> {
    same_len(x, y)?;
    Ok(seq_swap(x, y))
}

pub fn adjacent_transposition<T: PartialEq>(x: &[T], y: &[T]) -> Result<bool> {
    same_len(x, y)?;
    Ok(seq_transposition(x, y))
}

pub fn adjacent_reversal<T: PartialEq>(x: &[T], y: &[T]) -> Result<bool> {
    same_len(x, y)?;
    Ok(seq_reversal(x, y))
}

pub fn adjacent_rotation<T: PartialEq>(x: &[T], y: &[T]) -> Result<bool> {
    same_len(x, y)?;
    Ok(seq_rotation(x, y))
}

/// A value moves left or right over a contiguous run of strictly smaller values.
pub fn adjacent_jump(x: &Permutation, y: &Permutation) -> Result<bool> {
    let (x, y) = (x.values(), y.values());
    same_len(x, y)?;
    let Some((l, r)) = diff_span(x, y) else {
        return Ok(false);
    };
    let (xs, ys) = (&x[l..=r], &y[l..=r]);
    // Right-jump of xs[0] over xs[1..], or left-jump of xs[last] over xs[..last].
    let right = rotated_left(xs, ys) && xs[1..].iter().all(|&v| v < xs[0]);
    let last = xs.len() - 1;
    let left = rotated_left(ys, xs) && xs[..last].iter().all(|&v| v < xs[last]);
    Ok(right || left)
}

/// One partition arises from the other by splitting a block in two.
pub fn adjacent_refinement(x: &SetPartition, y: &SetPartition) -> Result<bool> {
    if x.n() != y.n() {
        return Err(Error::SizeMismatch);
    }
    let (bx, by) = (x.blocks().len(), y.blocks().len());
    Ok((bx == by + 1 && x.refines(y)) || (by == bx + 1 && y.refines(x)))
}

fn same_host(x: &EdgeSubset, y: &EdgeSubset) -> Result<()> {
    if x.n() != y.n() {
        return Err(Error::SizeMismatch);
    }
    Ok(())
}

/// The two trees differ in exactly two edges, one on each side.
pub fn adjacent_edge_exchange(x: &EdgeSubset, y: &EdgeSubset) -> Result<bool> {
    same_host(x, y)?;
    let only_x = x.edges().difference(y.edges()).count();
    let only_y = y.edges().difference(x.edges()).count();
    Ok(only_x == 1 && only_y == 1)
}

/// The symmetric difference of the two edge sets is a single cycle.
pub fn adjacent_alternating_cycle(x: &EdgeSubset, y: &EdgeSubset) -> Result<bool> {
    same_host(x, y)?;
    let diff: Vec<_> = x.edges().symmetric_difference(y.edges()).copied().collect();
    if diff.is_empty() {
        return Ok(false);
    }
    let mut adj: std::collections::BTreeMap<Vertex, Vec<Vertex>> = Default::default();
    for e in &diff {
        let (u, v) = e.endpoints();
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    if adj.values().any(|nb| nb.len() != 2) {
        return Ok(false);
    }
    // 2-regular: one cycle iff connected.
    let start = *adj.keys().next().expect("nonempty");
    let mut seen = std::collections::BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in &adj[&v] {
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    Ok(seen.len() == adj.len())
}

/// `y` is `x` shifted left by one with a new final bit. Directed.
pub fn adjacent_shift(x: &BitString, y: &BitString) -> Result<bool> {
    let (xb, yb) = (x.bits(), y.bits());
    same_len(xb, yb)?;
    Ok(xb != yb && !xb.is_empty() && xb[1..] == yb[..yb.len() - 1])
}

/// `y` is `p_2 … p_n p_1` or `p_2 … p_{n-1} p_1 p_n`. Directed.
pub fn adjacent_shorthand_rotation(x: &Permutation, y: &Permutation) -> Result<bool> {
    let (p, q) = (x.values(), y.values());
    same_len(p, q)?;
    let n = p.len();
    if n < 2 || p == q {
        return Ok(false);
    }
    let sigma0 = p[1..].iter().chain(std::iter::once(&p[0]));
    let sigma1 = p[1..n - 1]
        .iter()
        .chain([&p[0], &p[n - 1]]);
    Ok(sigma0.eq(q.iter()) || sigma1.eq(q.iter()))
}

fn combo_bits(c: &Combination) -> &[u8] {
    c.bits().bits()
}

/// Dispatches to the predicate for `family`.
pub fn adjacent(family: FlipFamily, x: &Object, y: &Object) -> Result<bool> {
    use FlipFamily::*;
    use Object::*;
    let mismatch = || Error::KindMismatch { expected: x.kind(), found: y.kind() };
    let inapplicable = || Error::InapplicableFlip { kind: x.kind(), flip: family };
    match (x, y) {
        (Bits(a), Bits(b)) => match family {
            Bitflip => adjacent_bitflip(a, b),
            SubstringComplement => adjacent_substring_complement(a, b),
            RegisterShift => adjacent_shift(a, b),
            Swap => adjacent_swap(a.bits(), b.bits()),
            Transposition => adjacent_transposition(a.bits(), b.bits()),
            Reversal => adjacent_reversal(a.bits(), b.bits()),
            Rotation => adjacent_rotation(a.bits(), b.bits()),
            _ => Err(inapplicable()),
        },
        (Combo(a), Combo(b)) => match family {
            Swap => adjacent_swap(combo_bits(a), combo_bits(b)),
            Transposition => adjacent_transposition(combo_bits(a), combo_bits(b)),
            SubstringComplement => adjacent_substring_complement(a.bits(), b.bits()),
            Reversal => adjacent_reversal(combo_bits(a), combo_bits(b)),
            Rotation => adjacent_rotation(combo_bits(a), combo_bits(b)),
            _ => Err(inapplicable()),
        },
        (Tuple(a), Tuple(b)) => match family {
            Pm1Tuple => adjacent_pm1(a, b),
            _ => Err(inapplicable()),
        },
        (Perm(a), Perm(b)) => match family {
            Swap => adjacent_swap(a.values(), b.values()),
            Transposition => adjacent_transposition(a.values(), b.values()),
            Reversal => adjacent_reversal(a.values(), b.values()),
            Rotation => adjacent_rotation(a.values(), b.values()),
            Jump => adjacent_jump(a, b),
            ShorthandRotation => adjacent_shorthand_rotation(a, b),
            _ => Err(inapplicable()),
        },
        (Partition(a), Partition(b)) => match family {
            Refinement => adjacent_refinement(a, b),
            _ => Err(inapplicable()),
        },
        (Edges(a), Edges(b)) if a.role() == b.role() => match (family, x.kind()) {
            (EdgeExchange, Kind::SpanningTree) => adjacent_edge_exchange(a, b),
            (AlternatingCycle, Kind::Matching) => adjacent_alternating_cycle(a, b),
            _ => Err(inapplicable()),
        },
        _ => Err(mismatch()),
    }
}

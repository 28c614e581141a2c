//! Combinatorial object kinds, their canonical text forms, and instance validation.
//!
//! Every object is an immutable value. Text forms round-trip through
//! [`parse_object`] and [`format_object`].

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::flips::FlipFamily;

/// The object families an instance can hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Bitstring,
    Tuple,
    Permutation,
    Combination,
    SetPartition,
    NcPartition,
    SpanningTree,
    Matching,
}

impl Kind {
    pub const ALL: [Kind; 8] = [
        Kind::Bitstring,
        Kind::Tuple,
        Kind::Permutation,
        Kind::Combination,
        Kind::SetPartition,
        Kind::NcPartition,
        Kind::SpanningTree,
        Kind::Matching,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Kind::Bitstring => "bitstring",
            Kind::Tuple => "tuple",
            Kind::Permutation => "permutation",
            Kind::Combination => "combination",
            Kind::SetPartition => "setpartition",
            Kind::NcPartition => "ncpartition",
            Kind::SpanningTree => "spanningtree",
            Kind::Matching => "matching",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .iter()
            .copied()
            .find(|k| k.tag() == s)
            .ok_or_else(|| Error::MalformedText(format!("unknown kind `{s}`")))
    }
}

/// A binary string `b_1 … b_n`, stored as 0/1 bytes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString(Vec<u8>);

impl BitString {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if let Some(b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::InvariantViolation(format!("bit value {b}")));
        }
        Ok(BitString(bits))
    }

    pub fn zeros(n: usize) -> Self {
        BitString(vec![0; n])
    }

    /// The `n`-bit string whose bits are the binary digits of `value`, most significant first.
    pub fn from_index(value: usize, n: usize) -> Self {
        BitString((0..n).map(|i| ((value >> (n - 1 - i)) & 1) as u8).collect())
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&b| b == 1).count()
    }

    pub fn hamming(&self, other: &BitString) -> usize {
        self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count()
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::MalformedText(format!("`{c}` in bitstring `{s}`"))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(BitString)
    }
}

/// A positive integer 2-tuple `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tuple2 {
    pub a: u64,
    pub b: u64,
}

impl Tuple2 {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvariantViolation(format!(
                "tuple ({a},{b}) has a non-positive coordinate"
            )));
        }
        Ok(Tuple2 { a, b })
    }

    pub fn l1(&self, other: &Tuple2) -> u64 {
        self.a.abs_diff(other.a) + self.b.abs_diff(other.b)
    }
}

impl fmt::Display for Tuple2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl FromStr for Tuple2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedText(format!("tuple `{s}`"));
        let inner = s.trim();
        let inner = match (inner.strip_prefix('('), inner.strip_suffix(')')) {
            (Some(_), Some(_)) => &inner[1..inner.len() - 1],
            (None, None) => inner,
            _ => return Err(bad()),
        };
        let parts: Vec<&str> = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|p| !p.is_empty())
            .collect();
        if parts.len() != 2 {
            return Err(bad());
        }
        let a = parts[0].parse::<u64>().map_err(|_| bad())?;
        let b = parts[1].parse::<u64>().map_err(|_| bad())?;
        Tuple2::new(a, b)
    }
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvariantViolation(format!(
                    "{values:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based position of `value`.
    pub fn position_of(&self, value: usize) -> Option<usize> {
        self.0.iter().position(|&v| v == value).map(|p| p + 1)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_symbols(&self.0, self.0.len()))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_symbols(s)?)
    }
}

/// Digits when every symbol is below 10, otherwise space-separated decimals.
pub(crate) fn format_symbols(values: &[usize], n: usize) -> String {
    if n <= 9 {
        values.iter().map(|v| v.to_string()).collect()
    } else {
        values
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub(crate) fn parse_symbols(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.contains(char::is_whitespace) {
        s.split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::MalformedText(format!("symbol `{t}`")))
            })
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::MalformedText(format!("symbol `{c}` in `{s}`")))
            })
            .collect()
    }
}

/// A `k`-subset of `[n]` as its incidence bitstring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Combination {
    bits: BitString,
    weight: usize,
}

impl Combination {
    pub fn new(bits: BitString) -> Self {
        let weight = bits.weight();
        Combination { bits, weight }
    }

    /// Fails when the string's weight is not `k`.
    pub fn with_weight(bits: BitString, k: usize) -> Result<Self> {
        let c = Combination::new(bits);
        if c.weight != k {
            return Err(Error::InvariantViolation(format!(
                "combination {} has weight {}, expected {k}",
                c.bits, c.weight
            )));
        }
        Ok(c)
    }

    pub fn bits(&self) -> &BitString {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.weight
    }
}

impl fmt::Display for Combination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.bits.fmt(f)
    }
}

/// A set partition of `[n]`, kept canonical: elements ascending within a
/// block, blocks ordered by their minimum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::InvariantViolation("empty block".into()));
            }
            block.sort_unstable();
            for &x in block.iter() {
                if x == 0 || x > n || seen[x] {
                    return Err(Error::InvariantViolation(format!(
                        "blocks do not partition 1..={n}"
                    )));
                }
                seen[x] = true;
            }
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    /// Same as [`SetPartition::new`] but also rejects crossing blocks.
    pub fn noncrossing(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let p = SetPartition::new(blocks)?;
        if !p.is_noncrossing() {
            return Err(Error::InvariantViolation(format!("{p} has crossing blocks")));
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Block index of every element; entry 0 is unused.
    pub fn labels(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n + 1];
        for (i, block) in self.blocks.iter().enumerate() {
            for &x in block {
                label[x] = i;
            }
        }
        label
    }

    /// True when no two blocks cross.
    ///
    /// Joins consecutive elements of each block by an arc; two blocks cross
    /// exactly when two of these arcs interleave.
    pub fn is_noncrossing(&self) -> bool {
        let mut arcs: Vec<(usize, usize)> = self
            .blocks
            .iter()
            .flat_map(|b| b.windows(2).map(|w| (w[0], w[1])))
            .collect();
        arcs.sort_unstable();
        // Arcs sorted by left end must be properly nested or disjoint.
        let mut open: Vec<usize> = Vec::new();
        for (l, r) in arcs {
            while let Some(&top) = open.last() {
                if top <= l {
                    open.pop();
                } else {
                    break;
                }
            }
            if let Some(&top) = open.last() {
                if r > top {
                    return false;
                }
            }
            open.push(r);
        }
        true
    }

    /// True when every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &SetPartition) -> bool {
        if self.n != other.n {
            return false;
        }
        let label = other.labels();
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&x| label[x] == label[b[0]]))
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n <= 9 { "" } else { "," };
        let text: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(sep)
            })
            .collect();
        f.write_str(&text.join("|"))
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::MalformedText("empty set partition".into()));
        }
        let integers = |block: &str| {
            block
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::MalformedText(format!("element `{t}` in `{s}`")))
                })
                .collect::<Result<Vec<_>>>()
        };
        let digits = |block: &str| {
            if block.is_empty() {
                return Err(Error::MalformedText(format!("empty block in `{s}`")));
            }
            block
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::MalformedText(format!("element `{c}` in `{s}`")))
                })
                .collect()
        };
        if s.contains(',') {
            let blocks = s.split('|').map(integers).collect::<Result<Vec<_>>>()?;
            return SetPartition::new(blocks);
        }
        // Without commas each block is a digit string, except for partitions
        // of more than nine elements into singletons, written as integers.
        let as_digits = s
            .split('|')
            .map(digits)
            .collect::<Result<Vec<_>>>()
            .and_then(SetPartition::new);
        match as_digits {
            Ok(p) => Ok(p),
            Err(e) => {
                let singletons = s.split('|').map(integers).collect::<Result<Vec<_>>>().map_err(|_| e.clone())?;
                match SetPartition::new(singletons) {
                    Ok(p) if p.n() > 9 => Ok(p),
                    _ => Err(e),
                }
            }
        }
    }
}

/// Vertex side in a diamond; the declaration order is the canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    E,
    N,
    S,
    W,
}

impl Side {
    fn letter(self) -> char {
        match self {
            Side::E => 'E',
            Side::N => 'N',
            Side::S => 'S',
            Side::W => 'W',
        }
    }
}

/// A vertex `X_i` of the diamond-path graph, ordered by `(index, side)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub index: usize,
    pub side: Side,
}

impl Vertex {
    pub fn new(side: Side, index: usize) -> Self {
        Vertex { index, side }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.side.letter(), self.index)
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::MalformedText(format!("vertex `{s}`"));
        let mut chars = s.chars();
        let side = match chars.next().ok_or_else(bad)? {
            'N' => Side::N,
            'S' => Side::S,
            'E' => Side::E,
            'W' => Side::W,
            _ => return Err(bad()),
        };
        let index: usize = chars.as_str().parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        Ok(Vertex { index, side })
    }
}

/// An undirected edge with endpoints stored in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.0, self.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl FromStr for Edge {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (u, v) = s
            .split_once('-')
            .ok_or_else(|| Error::MalformedText(format!("edge `{s}`")))?;
        Ok(Edge::new(u.parse()?, v.parse()?))
    }
}

/// The diamond-path graph `D_n`: `n` four-cycles `N_i E_i S_i W_i` chained by
/// connector edges `E_i W_{i+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DiamondGraph {
    n: usize,
}

impl DiamondGraph {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("diamond-path graph needs n >= 1".into()));
        }
        Ok(DiamondGraph { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        (1..=self.n)
            .flat_map(|i| [Side::E, Side::N, Side::S, Side::W].map(|s| Vertex::new(s, i)))
            .collect()
    }

    pub fn edges(&self) -> Vec<Edge> {
        use Side::*;
        let mut edges: Vec<Edge> = (1..=self.n)
            .flat_map(|i| {
                let v = |s| Vertex::new(s, i);
                [
                    Edge::new(v(N), v(E)),
                    Edge::new(v(N), v(W)),
                    Edge::new(v(S), v(E)),
                    Edge::new(v(S), v(W)),
                ]
            })
            .chain((1..self.n).map(|i| Edge::new(Vertex::new(E, i), Vertex::new(W, i + 1))))
            .collect();
        edges.sort_unstable();
        edges
    }

    pub fn contains(&self, e: &Edge) -> bool {
        use Side::*;
        let (u, v) = e.endpoints();
        if u.index == 0 || v.index > self.n {
            return false;
        }
        if u.index == v.index {
            matches!(
                (u.side, v.side),
                (E, N) | (N, W) | (E, S) | (S, W)
            )
        } else {
            v.index == u.index + 1 && u.side == E && v.side == W
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubsetRole {
    SpanningTree,
    PerfectMatching,
}

/// A set of edges of `D_n` playing the role of a spanning tree or a perfect matching.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSubset {
    n: usize,
    role: SubsetRole,
    edges: BTreeSet<Edge>,
}

impl EdgeSubset {
    pub fn new(host: DiamondGraph, role: SubsetRole, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let edges: BTreeSet<Edge> = edges.into_iter().collect();
        if let Some(e) = edges.iter().find(|e| !host.contains(e)) {
            return Err(Error::InvariantViolation(format!("{e} is not an edge of D_{}", host.n)));
        }
        let subset = EdgeSubset { n: host.n, role, edges };
        match role {
            SubsetRole::SpanningTree => subset.check_tree()?,
            SubsetRole::PerfectMatching => subset.check_matching()?,
        }
        Ok(subset)
    }

    pub fn spanning_tree(host: DiamondGraph, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        EdgeSubset::new(host, SubsetRole::SpanningTree, edges)
    }

    pub fn perfect_matching(host: DiamondGraph, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        EdgeSubset::new(host, SubsetRole::PerfectMatching, edges)
    }

    pub fn host(&self) -> DiamondGraph {
        DiamondGraph { n: self.n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn role(&self) -> SubsetRole {
        self.role
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    fn check_tree(&self) -> Result<()> {
        let vertex_count = 4 * self.n;
        if self.edges.len() != vertex_count - 1 {
            return Err(Error::InvariantViolation(format!(
                "spanning tree of D_{} needs {} edges, got {}",
                self.n,
                vertex_count - 1,
                self.edges.len()
            )));
        }
        let id = |v: Vertex| 4 * (v.index - 1) + v.side as usize;
        let mut parent: Vec<usize> = (0..vertex_count).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in &self.edges {
            let (u, v) = e.endpoints();
            let (ru, rv) = (find(&mut parent, id(u)), find(&mut parent, id(v)));
            if ru == rv {
                return Err(Error::InvariantViolation(format!("edge {e} closes a cycle")));
            }
            parent[ru] = rv;
        }
        Ok(())
    }

    fn check_matching(&self) -> Result<()> {
        let mut degree: HashMap<Vertex, usize> = HashMap::new();
        for e in &self.edges {
            let (u, v) = e.endpoints();
            *degree.entry(u).or_default() += 1;
            *degree.entry(v).or_default() += 1;
        }
        for v in self.host().vertices() {
            let d = degree.get(&v).copied().unwrap_or(0);
            if d != 1 {
                return Err(Error::InvariantViolation(format!(
                    "vertex {v} is covered {d} times by the matching"
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.edges.iter().map(|e| e.to_string()).collect();
        f.write_str(&text.join(","))
    }
}

fn parse_edge_subset(s: &str, role: SubsetRole, n: Option<usize>) -> Result<EdgeSubset> {
    let edges = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(str::parse::<Edge>)
        .collect::<Result<Vec<Edge>>>()?;
    let inferred = edges.iter().map(|e| e.endpoints().1.index).max().unwrap_or(0);
    let n = n.unwrap_or(inferred);
    EdgeSubset::new(DiamondGraph::new(n)?, role, edges)
}

/// A single object of any kind.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Object {
    Bits(BitString),
    Tuple(Tuple2),
    Perm(Permutation),
    Combo(Combination),
    Partition(SetPartition),
    Edges(EdgeSubset),
}

impl Object {
    /// The most specific kind this value can be an instance of.
    pub fn kind(&self) -> Kind {
        match self {
            Object::Bits(_) => Kind::Bitstring,
            Object::Tuple(_) => Kind::Tuple,
            Object::Perm(_) => Kind::Permutation,
            Object::Combo(_) => Kind::Combination,
            Object::Partition(p) if p.is_noncrossing() => Kind::NcPartition,
            Object::Partition(_) => Kind::SetPartition,
            Object::Edges(e) => match e.role {
                SubsetRole::SpanningTree => Kind::SpanningTree,
                SubsetRole::PerfectMatching => Kind::Matching,
            },
        }
    }

    /// Whether this value may appear in an instance of `kind`.
    pub fn fits(&self, kind: Kind) -> bool {
        match (self, kind) {
            (Object::Partition(_), Kind::SetPartition) => true,
            _ => self.kind() == kind,
        }
    }

    /// Size parameters that must agree across an instance.
    pub fn size_signature(&self) -> (usize, usize) {
        match self {
            Object::Bits(b) => (b.len(), 0),
            Object::Tuple(_) => (0, 0),
            Object::Perm(p) => (p.len(), 0),
            Object::Combo(c) => (c.len(), c.weight()),
            Object::Partition(p) => (p.n(), 0),
            Object::Edges(e) => (e.n(), 0),
        }
    }
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Object::Bits(x) => x.fmt(f),
            Object::Tuple(x) => x.fmt(f),
            Object::Perm(x) => x.fmt(f),
            Object::Combo(x) => x.fmt(f),
            Object::Partition(x) => x.fmt(f),
            Object::Edges(x) => x.fmt(f),
        }
    }
}

impl From<BitString> for Object {
    fn from(x: BitString) -> Self {
        Object::Bits(x)
    }
}

impl From<Tuple2> for Object {
    fn from(x: Tuple2) -> Self {
        Object::Tuple(x)
    }
}

impl From<Permutation> for Object {
    fn from(x: Permutation) -> Self {
        Object::Perm(x)
    }
}

impl From<Combination> for Object {
    fn from(x: Combination) -> Self {
        Object::Combo(x)
    }
}

impl From<SetPartition> for Object {
    fn from(x: SetPartition) -> Self {
        Object::Partition(x)
    }
}

impl From<EdgeSubset> for Object {
    fn from(x: EdgeSubset) -> Self {
        Object::Edges(x)
    }
}

/// Parses one object of `kind` from its canonical text.
pub fn parse_object(kind: Kind, text: &str) -> Result<Object> {
    parse_object_sized(kind, text, None)
}

/// Like [`parse_object`], with the host size for edge subsets supplied explicitly.
pub fn parse_object_sized(kind: Kind, text: &str, n: Option<usize>) -> Result<Object> {
    let text = text.trim();
    Ok(match kind {
        Kind::Bitstring => Object::Bits(text.parse()?),
        Kind::Tuple => Object::Tuple(text.parse()?),
        Kind::Permutation => Object::Perm(text.parse()?),
        Kind::Combination => Object::Combo(Combination::new(text.parse()?)),
        Kind::SetPartition => Object::Partition(text.parse()?),
        Kind::NcPartition => {
            let p: SetPartition = text.parse()?;
            if !p.is_noncrossing() {
                return Err(Error::InvariantViolation(format!("{p} has crossing blocks")));
            }
            Object::Partition(p)
        }
        Kind::SpanningTree => Object::Edges(parse_edge_subset(text, SubsetRole::SpanningTree, n)?),
        Kind::Matching => Object::Edges(parse_edge_subset(text, SubsetRole::PerfectMatching, n)?),
    })
}

pub fn format_object(object: &Object) -> String {
    object.to_string()
}

/// True iff no index `i` has `p[i-1] < p[i] > p[i+1]`.
pub fn is_peakless(perm: &Permutation) -> bool {
    perm.values().windows(3).all(|w| !(w[0] < w[1] && w[1] > w[2]))
}

/// True iff some subsequence of `perm` is order-isomorphic to `pattern`.
pub fn contains_pattern(perm: &Permutation, pattern: &Permutation) -> bool {
    fn extend(p: &[usize], pat: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
        let t = chosen.len();
        if t == pat.len() {
            return true;
        }
        // Leave room for the remaining pattern symbols.
        let last = p.len() + t + 1 - pat.len();
        for j in start..last {
            let consistent = chosen
                .iter()
                .enumerate()
                .all(|(s, &i)| (p[i] < p[j]) == (pat[s] < pat[t]));
            if consistent {
                chosen.push(j);
                if extend(p, pat, j + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    if pattern.len() > perm.len() {
        return false;
    }
    extend(perm.values(), pattern.values(), 0, &mut Vec::with_capacity(pattern.len()))
}

/// An ordering of an instance's objects, stored as 0-based indices and
/// written as one line of 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Certificate(Vec<usize>);

impl Certificate {
    pub fn new(order: Vec<usize>) -> Self {
        Certificate(order)
    }

    pub fn order(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Certificate {
        Certificate(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.0.iter().map(|i| (i + 1).to_string()).collect();
        f.write_str(&text.join(" "))
    }
}

impl FromStr for Certificate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace()
            .map(|t| match t.parse::<usize>() {
                Ok(i) if i >= 1 => Ok(i - 1),
                _ => Err(Error::BadIndices(format!("`{t}` is not a 1-based index"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Certificate)
    }
}

/// A validated list of distinct objects under one flip family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    kind: Kind,
    flip: FlipFamily,
    objects: Vec<Object>,
}

impl Instance {
    pub fn new(kind: Kind, flip: FlipFamily, objects: Vec<Object>) -> Result<Self> {
        validate_instance(kind, flip, &objects)?;
        Ok(Instance { kind, flip, objects })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn flip(&self) -> FlipFamily {
        self.flip
    }

    pub fn objects(&self) -> &[Object] {
        &self.objects
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    /// The same objects under a different flip family.
    pub fn with_flip(&self, flip: FlipFamily) -> Result<Instance> {
        Instance::new(self.kind, flip, self.objects.clone())
    }

    /// A sub-instance holding the objects at `indices`, in that order.
    pub fn select(&self, indices: &[usize]) -> Result<Instance> {
        let objects = indices
            .iter()
            .map(|&i| {
                self.objects
                    .get(i)
                    .cloned()
                    .ok_or_else(|| Error::BadIndices(format!("index {i} out of range")))
            })
            .collect::<Result<Vec<_>>>()?;
        Instance::new(self.kind, self.flip, objects)
    }
}

/// Checks kind and size homogeneity, distinctness, and flip applicability.
pub fn validate_instance(kind: Kind, flip: FlipFamily, objects: &[Object]) -> Result<()> {
    if !flip.applies_to(kind) {
        return Err(Error::InapplicableFlip { kind, flip });
    }
    if let Some(o) = objects.iter().find(|o| !o.fits(kind)) {
        return Err(Error::KindMismatch { expected: kind, found: o.kind() });
    }
    if let Some(first) = objects.first() {
        let sig = first.size_signature();
        if let Some(o) = objects.iter().find(|o| o.size_signature() != sig) {
            return Err(Error::MixedSizes(format!("{first} vs {o}")));
        }
    }
    let mut seen: HashMap<&Object, usize> = HashMap::with_capacity(objects.len());
    for (i, o) in objects.iter().enumerate() {
        if let Some(&first) = seen.get(o) {
            return Err(Error::DuplicateObject { first, second: i });
        }
        seen.insert(o, i);
    }
    Ok(())
}

//! Universal cycles for register shifts and shorthand rotations.
//!
//! Both problems reduce to Eulerian trails in a transition multigraph: every
//! listed object is an edge from its first window to its last window, so a
//! trail through every edge lists every object exactly once.

use std::collections::BTreeMap;

use super::Answer;
use crate::error::{Error, Result};
use crate::objects::{BitString, Permutation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UcycleResult {
    pub answer: Answer,
    /// Symbol sequence of the trail; present exactly when the answer is yes.
    pub sequence: Option<Vec<usize>>,
    pub cyclic: bool,
}

impl UcycleResult {
    fn no(cyclic: bool) -> Self {
        UcycleResult { answer: Answer::No, sequence: None, cyclic }
    }

    /// The sequence as text: digits when every symbol is a single digit,
    /// otherwise space separated.
    pub fn sequence_text(&self) -> Option<String> {
        self.sequence.as_deref().map(format_sequence)
    }

    /// `answer=`, `cyclic=` and, on yes, `sequence=` lines.
    pub fn to_record(&self) -> String {
        let mut s = format!("answer={}\ncyclic={}\n", self.answer.as_str(), self.cyclic);
        if let Some(seq) = self.sequence_text() {
            s.push_str(&format!("length={}\nsequence={seq}\n", self.sequence.as_ref().map_or(0, Vec::len)));
        }
        s
    }
}

pub fn format_sequence(seq: &[usize]) -> String {
    if seq.iter().all(|&s| s <= 9) {
        seq.iter().map(|s| char::from(b'0' + *s as u8)).collect()
    } else {
        seq.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
    }
}

/// Decides whether the bitstrings can be listed so each is a register shift
/// of the previous one, and returns the packed sequence when they can.
///
/// A cyclic sequence has one symbol per string and its length-`n` windows
/// wrap around; a linear sequence has `m + n - 1` symbols.
pub fn solve_debruijn_subset(strings: &[BitString], cyclic: bool) -> Result<UcycleResult> {
    let words: Vec<Vec<usize>> = strings
        .iter()
        .map(|b| b.bits().iter().map(|&x| usize::from(x)).collect())
        .collect();
    solve_windows(&words, cyclic)
}

/// Decides whether the permutations admit a shorthand universal cycle (or
/// path): a sequence whose length-`(n-1)` windows are the permutations with
/// their last symbol dropped.
pub fn solve_shorthand_ucycle(perms: &[Permutation], cyclic: bool) -> Result<UcycleResult> {
    if let Some(p) = perms.iter().find(|p| p.len() < 2) {
        return Err(Error::InvalidArgument(format!("shorthand needs n >= 2, got {}", p.len())));
    }
    let words: Vec<Vec<usize>> = perms.iter().map(|p| p.values()[..p.len() - 1].to_vec()).collect();
    solve_windows(&words, cyclic)
}

/// Each word `w` is an edge from `w[..k-1]` to `w[1..]` labelled `w[k-1]`.
fn solve_windows(words: &[Vec<usize>], cyclic: bool) -> Result<UcycleResult> {
    let Some(first) = words.first() else {
        return Ok(if cyclic {
            UcycleResult::no(true)
        } else {
            UcycleResult { answer: Answer::Yes, sequence: Some(Vec::new()), cyclic }
        });
    };
    let k = first.len();
    if words.iter().any(|w| w.len() != k) {
        return Err(Error::MixedSizes("objects of different lengths".into()));
    }
    if k == 0 {
        // Only one empty word can be listed; it has no symbols.
        return Ok(match (words.len(), cyclic) {
            (1, false) => UcycleResult { answer: Answer::Yes, sequence: Some(Vec::new()), cyclic },
            _ => UcycleResult::no(cyclic),
        });
    }
    let mut ids: BTreeMap<&[usize], usize> = BTreeMap::new();
    for w in words {
        ids.insert(&w[..k - 1], 0);
        ids.insert(&w[1..], 0);
    }
    for (i, v) in ids.values_mut().enumerate() {
        *v = i;
    }
    let nodes: Vec<&[usize]> = ids.keys().copied().collect();
    let edges: Vec<(usize, usize, usize)> = words
        .iter()
        .map(|w| (ids[&w[..k - 1]], ids[&w[1..]], w[k - 1]))
        .collect();
    let Some((start, labels)) = euler_trail(nodes.len(), &edges, cyclic) else {
        return Ok(UcycleResult::no(cyclic));
    };
    let sequence = if cyclic {
        // Rotate so the sequence opens with the first object's window.
        let mut labels = labels;
        if labels.len() >= k - 1 {
            labels.rotate_right(k - 1);
        }
        labels
    } else {
        let mut seq = nodes[start].to_vec();
        seq.extend(labels);
        seq
    };
    Ok(UcycleResult { answer: Answer::Yes, sequence: Some(sequence), cyclic })
}

/// Hierholzer's algorithm, always taking the smallest-labelled unused edge.
/// Returns the start node and the edge labels in trail order.
fn euler_trail(n: usize, edges: &[(usize, usize, usize)], cyclic: bool) -> Option<(usize, Vec<usize>)> {
    let mut out: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut balance = vec![0i64; n];
    for &(u, v, label) in edges {
        out[u].push((label, v));
        balance[u] += 1;
        balance[v] -= 1;
    }
    for list in &mut out {
        list.sort_unstable();
    }
    let surplus: Vec<usize> = (0..n).filter(|&v| balance[v] > 0).collect();
    let start = if balance.iter().all(|&b| b == 0) {
        (0..n).find(|&v| !out[v].is_empty())?
    } else if cyclic {
        return None;
    } else {
        let deficit = (0..n).filter(|&v| balance[v] < 0).count();
        if surplus.len() != 1 || deficit != 1 || balance[surplus[0]] != 1 || balance.iter().any(|&b| b < -1) {
            return None;
        }
        surplus[0]
    };
    let mut next = vec![0usize; n];
    let mut stack: Vec<(usize, Option<usize>)> = vec![(start, None)];
    let mut reversed = Vec::with_capacity(edges.len());
    while let Some(&(v, _)) = stack.last() {
        if next[v] < out[v].len() {
            let (label, w) = out[v][next[v]];
            next[v] += 1;
            stack.push((w, Some(label)));
        } else {
            let (_, label) = stack.pop().expect("nonempty stack");
            reversed.extend(label);
        }
    }
    // A short trail means some edges sit in another component.
    if reversed.len() != edges.len() {
        return None;
    }
    reversed.reverse();
    Some((start, reversed))
}

/// All length-`width` windows of `seq`, wrapping when `cyclic`.
pub fn windows(seq: &[usize], width: usize, cyclic: bool) -> Vec<Vec<usize>> {
    if cyclic {
        if seq.is_empty() {
            return Vec::new();
        }
        (0..seq.len())
            .map(|i| (0..width).map(|j| seq[(i + j) % seq.len()]).collect())
            .collect()
    } else if seq.len() < width {
        Vec::new()
    } else {
        seq.windows(width).map(<[usize]>::to_vec).collect()
    }
}

/// Decodes the length-`n` windows of a de Bruijn-style sequence.
pub fn decode_debruijn_windows(seq: &[usize], n: usize, cyclic: bool) -> Result<Vec<BitString>> {
    windows(seq, n, cyclic)
        .into_iter()
        .map(|w| {
            let bits = w
                .iter()
                .map(|&s| u8::try_from(s).ok().filter(|&b| b <= 1))
                .collect::<Option<Vec<u8>>>()
                .ok_or_else(|| Error::MalformedText("sequence symbol is not a bit".into()))?;
            BitString::new(bits)
        })
        .collect()
}

/// Decodes the length-`(n-1)` windows of a shorthand sequence, restoring
/// each permutation's missing last symbol.
pub fn decode_shorthand_windows(seq: &[usize], n: usize, cyclic: bool) -> Result<Vec<Permutation>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("shorthand needs n >= 2, got {n}")));
    }
    windows(seq, n - 1, cyclic)
        .into_iter()
        .map(|mut w| {
            let missing = (1..=n).find(|v| !w.contains(v)).ok_or_else(|| {
                Error::MalformedText(format!("window {} is not a shorthand", format_sequence(&w)))
            })?;
            w.push(missing);
            Permutation::new(w)
        })
        .collect()
}

/// True iff the windows of `seq` are exactly `strings`, each once.
pub fn check_debruijn_witness(strings: &[BitString], seq: &[usize], cyclic: bool) -> bool {
    let Some(n) = strings.first().map(BitString::len) else {
        return seq.is_empty();
    };
    match decode_debruijn_windows(seq, n, cyclic) {
        Ok(decoded) => same_multiset(strings, decoded),
        Err(_) => false,
    }
}

/// True iff the shorthand windows of `seq` decode to exactly `perms`, each once.
pub fn check_shorthand_witness(perms: &[Permutation], seq: &[usize], cyclic: bool) -> bool {
    let Some(n) = perms.first().map(Permutation::len) else {
        return seq.is_empty();
    };
    match decode_shorthand_windows(seq, n, cyclic) {
        Ok(decoded) => same_multiset(perms, decoded),
        Err(_) => false,
    }
}

fn same_multiset<T: Ord + Clone>(expected: &[T], mut got: Vec<T>) -> bool {
    let mut want = expected.to_vec();
    want.sort();
    got.sort();
    want == got && got.windows(2).all(|w| w[0] != w[1])
}

/// Parses a sequence written as digits or as space-separated integers.
pub fn parse_sequence(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    let parsed: Option<Vec<usize>> = if text.contains(char::is_whitespace) {
        text.split_whitespace().map(|t| t.parse().ok()).collect()
    } else {
        text.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
    };
    parsed.ok_or_else(|| Error::MalformedText(format!("sequence `{text}`")))
}

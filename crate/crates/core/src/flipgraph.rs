//! Flip graphs induced by an instance's objects.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::flips::adjacent;
use crate::objects::Instance;

/// Adjacency lists over vertices `0..m`, where vertex `i` is the instance's
/// `i`-th object. Neighbor lists are sorted ascending and carry no self-loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipGraph {
    directed: bool,
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
}

impl FlipGraph {
    /// Builds a graph from an explicit edge list. Undirected edges are
    /// symmetrised; duplicates and self-loops are dropped.
    pub fn from_edges(m: usize, directed: bool, edges: &[(usize, usize)]) -> Result<Self> {
        let mut out = vec![Vec::new(); m];
        for &(u, v) in edges {
            if u >= m || v >= m {
                return Err(Error::InvalidArgument(format!("edge ({u},{v}) outside 0..{m}")));
            }
            if u == v {
                continue;
            }
            out[u].push(v);
            if !directed {
                out[v].push(u);
            }
        }
        for list in &mut out {
            list.sort_unstable();
            list.dedup();
        }
        Ok(FlipGraph::from_out_lists(directed, out))
    }

    fn from_out_lists(directed: bool, out: Vec<Vec<usize>>) -> Self {
        let inc = if directed {
            let mut inc = vec![Vec::new(); out.len()];
            for (u, list) in out.iter().enumerate() {
                for &v in list {
                    inc[v].push(u);
                }
            }
            inc
        } else {
            Vec::new()
        };
        FlipGraph { directed, out, inc }
    }

    pub fn m(&self) -> usize {
        self.out.len()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Out-neighbors (all neighbors when undirected).
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    /// In-neighbors (all neighbors when undirected).
    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        if self.directed {
            &self.inc[v]
        } else {
            &self.out[v]
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    /// Number of edges (arcs when directed).
    pub fn edge_count(&self) -> usize {
        let total: usize = self.out.iter().map(Vec::len).sum();
        if self.directed {
            total
        } else {
            total / 2
        }
    }

    /// Edges as `(u, v)` pairs, `u < v` when undirected.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
            .filter(|&(u, v)| self.directed || u < v)
            .collect()
    }

    /// Neighbors in the underlying undirected graph.
    pub(crate) fn undirected_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let extra: &[usize] = if self.directed { &self.inc[v] } else { &[] };
        self.out[v].iter().chain(extra).copied()
    }

    /// Edge-list export: header `m=<m> directed=<0|1>`, then one 1-based `i j` per line.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("m={} directed={}\n", self.m(), u8::from(self.directed));
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{} {}", u + 1, v + 1);
        }
        s
    }

    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::MalformedText("missing edge-list header".into()))?;
        let (mut m, mut directed) = (None, None);
        for field in header.split_whitespace() {
            match field.split_once('=') {
                Some(("m", v)) => m = v.parse::<usize>().ok(),
                Some(("directed", "0")) => directed = Some(false),
                Some(("directed", "1")) => directed = Some(true),
                _ => return Err(Error::MalformedText(format!("header field `{field}`"))),
            }
        }
        let (Some(m), Some(directed)) = (m, directed) else {
            return Err(Error::MalformedText(format!("header `{header}`")));
        };
        let edges = lines
            .map(|l| {
                let parts: Vec<usize> = l
                    .split_whitespace()
                    .map(|t| t.parse::<usize>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| Error::MalformedText(format!("edge line `{l}`")))?;
                match parts[..] {
                    [u, v] if u >= 1 && v >= 1 => Ok((u - 1, v - 1)),
                    _ => Err(Error::MalformedText(format!("edge line `{l}`"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        FlipGraph::from_edges(m, directed, &edges)
    }
}

/// Builds the flip graph induced on the instance's objects.
pub fn build_flip_graph(instance: &Instance) -> Result<FlipGraph> {
    build_flip_graph_with(instance, 1)
}

/// As [`build_flip_graph`], evaluating rows on up to `threads` workers. The
/// result does not depend on `threads`.
pub fn build_flip_graph_with(instance: &Instance, threads: usize) -> Result<FlipGraph> {
    let objects = instance.objects();
    let family = instance.flip();
    let row = |i: usize| -> Result<Vec<usize>> {
        let mut list = Vec::new();
        for (j, y) in objects.iter().enumerate() {
            if i != j && adjacent(family, &objects[i], y)? {
                list.push(j);
            }
        }
        Ok(list)
    };
    let out: Vec<Vec<usize>> = if threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?;
        pool.install(|| (0..objects.len()).into_par_iter().map(row).collect::<Result<_>>())?
    } else {
        (0..objects.len()).map(row).collect::<Result<_>>()?
    };
    Ok(FlipGraph::from_out_lists(family.is_directed(), out))
}

/// Weakly connected components, each sorted, ordered by smallest vertex.
pub fn connected_components(graph: &FlipGraph) -> Vec<Vec<usize>> {
    let m = graph.m();
    let mut comp = vec![usize::MAX; m];
    let mut components = Vec::new();
    for s in 0..m {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = components.len();
        comp[s] = id;
        let mut members = vec![s];
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for w in graph.undirected_neighbors(v) {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    components
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Degree {
    pub inc: usize,
    pub out: usize,
}

/// Per-vertex degrees; for undirected graphs `inc == out`.
pub fn degree_profile(graph: &FlipGraph) -> Vec<Degree> {
    (0..graph.m())
        .map(|v| Degree {
            inc: graph.in_neighbors(v).len(),
            out: graph.neighbors(v).len(),
        })
        .collect()
}

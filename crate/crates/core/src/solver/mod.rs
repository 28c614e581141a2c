//! Exact Hamilton path and cycle search over flip graphs.
//!
//! The search is a depth-first backtracking. Neighbors of the path end are
//! tried in order of fewest unvisited neighbors, ties by index. Before the search a handful of structural rules can
//! refute an instance outright; during the search every partial path is
//! checked for reachability of the unvisited vertices and for vertices whose
//! remaining degree makes completion impossible. A node budget separates
//! "proved no" from "gave up".

pub mod ucycle;

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::flipgraph::{build_flip_graph, FlipGraph};
use crate::flips::adjacent;
use crate::objects::{Certificate, Instance};

pub const DEFAULT_BUDGET: u64 = 100_000_000;
pub const DEFAULT_COUNT_BOUND: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Answer {
    Yes,
    No,
}

impl Answer {
    pub fn is_yes(self) -> bool {
        self == Answer::Yes
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Answer::Yes => "yes",
            Answer::No => "no",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Maximum number of search nodes before giving up.
    pub budget: u64,
    /// Worker threads for the search over start vertices.
    pub threads: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { budget: DEFAULT_BUDGET, threads: 1 }
    }
}

/// Counters reported with every answer.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    /// A vertex with no edges in a graph of two or more vertices.
    pub prune_isolated: u64,
    /// The graph is not (weakly) connected.
    pub prune_disconnected: u64,
    /// Too many vertices of degree at most one (or in/out-degree zero).
    pub prune_degree: u64,
    /// Removing one vertex leaves too many pieces.
    pub prune_cut_vertex: u64,
    /// A partial path left some vertex unable to be entered or left.
    pub prune_dead_end: u64,
    /// A partial path cannot reach every unvisited vertex.
    pub prune_unreachable: u64,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.prune_isolated += other.prune_isolated;
        self.prune_disconnected += other.prune_disconnected;
        self.prune_degree += other.prune_degree;
        self.prune_cut_vertex += other.prune_cut_vertex;
        self.prune_dead_end += other.prune_dead_end;
        self.prune_unreachable += other.prune_unreachable;
    }

    /// `key=value` lines.
    pub fn to_record(&self) -> String {
        let mut s = String::new();
        for (k, v) in [
            ("nodes", self.nodes),
            ("prune_isolated", self.prune_isolated),
            ("prune_disconnected", self.prune_disconnected),
            ("prune_degree", self.prune_degree),
            ("prune_cut_vertex", self.prune_cut_vertex),
            ("prune_dead_end", self.prune_dead_end),
            ("prune_unreachable", self.prune_unreachable),
        ] {
            let _ = writeln!(s, "{k}={v}");
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub answer: Answer,
    /// Present exactly when the answer is yes.
    pub certificate: Option<Certificate>,
    pub stats: SearchStats,
}

impl SolveResult {
    fn no(stats: SearchStats) -> Self {
        SolveResult { answer: Answer::No, certificate: None, stats }
    }

    fn yes(order: Vec<usize>, stats: SearchStats) -> Self {
        SolveResult { answer: Answer::Yes, certificate: Some(Certificate::new(order)), stats }
    }

    /// `answer=...`, an optional `certificate=...` line, then the stats.
    pub fn to_record(&self) -> String {
        let mut s = format!("answer={}\n", self.answer.as_str());
        if let Some(c) = &self.certificate {
            let _ = writeln!(s, "certificate={c}");
        }
        s.push_str(&self.stats.to_record());
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Path,
    Cycle,
}

pub fn has_hamilton_path(graph: &FlipGraph) -> Result<SolveResult> {
    solve(graph, Mode::Path, &SolverConfig::default())
}

pub fn has_hamilton_path_with(graph: &FlipGraph, config: &SolverConfig) -> Result<SolveResult> {
    solve(graph, Mode::Path, config)
}

pub fn has_hamilton_cycle(graph: &FlipGraph) -> Result<SolveResult> {
    solve(graph, Mode::Cycle, &SolverConfig::default())
}

pub fn has_hamilton_cycle_with(graph: &FlipGraph, config: &SolverConfig) -> Result<SolveResult> {
    solve(graph, Mode::Cycle, config)
}

/// Builds the instance's flip graph and decides whether it has a Gray code.
pub fn solve_instance(instance: &Instance, cyclic: bool, config: &SolverConfig) -> Result<SolveResult> {
    let graph = crate::flipgraph::build_flip_graph_with(instance, config.threads)?;
    let mode = if cyclic { Mode::Cycle } else { Mode::Path };
    solve(&graph, mode, config)
}

fn solve(g: &FlipGraph, mode: Mode, config: &SolverConfig) -> Result<SolveResult> {
    let m = g.m();
    let mut stats = SearchStats::default();
    match (mode, m) {
        (Mode::Path, 0) => return Ok(SolveResult::yes(Vec::new(), stats)),
        (Mode::Path, 1) => return Ok(SolveResult::yes(vec![0], stats)),
        (Mode::Cycle, 0 | 1) => return Ok(SolveResult::no(stats)),
        (Mode::Cycle, 2) if !g.is_directed() => return Ok(SolveResult::no(stats)),
        _ => {}
    }
    if static_refutation(g, mode, &mut stats) {
        return Ok(SolveResult::no(stats));
    }
    let starts = start_vertices(g, mode);
    let threads = config.threads.max(1);
    let mut spent = 0u64;
    if threads == 1 || starts.len() == 1 {
        for &s in &starts {
            let run = run_from(g, mode, s, config.budget - spent);
            if run.exhausted {
                return Err(Error::ResourceLimit { budget: config.budget });
            }
            spent += run.stats.nodes;
            stats.absorb(&run.stats);
            if let Some(order) = run.found {
                return Ok(SolveResult::yes(order, stats));
            }
        }
        return Ok(SolveResult::no(stats));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    for chunk in starts.chunks(threads) {
        let cap = config.budget - spent;
        let runs: Vec<StartRun> = pool.install(|| {
            use rayon::prelude::*;
            chunk.par_iter().map(|&s| run_from(g, mode, s, cap)).collect()
        });
        // Replay in start order so answers, certificates and stats match the
        // sequential search.
        for run in runs {
            if run.exhausted || spent + run.stats.nodes > config.budget {
                return Err(Error::ResourceLimit { budget: config.budget });
            }
            spent += run.stats.nodes;
            stats.absorb(&run.stats);
            if let Some(order) = run.found {
                return Ok(SolveResult::yes(order, stats));
            }
        }
    }
    Ok(SolveResult::no(stats))
}

/// Structural rules that refute a Hamilton path or cycle before searching.
fn static_refutation(g: &FlipGraph, mode: Mode, stats: &mut SearchStats) -> bool {
    let m = g.m();
    let total_degree = |v: usize| g.neighbors(v).len() + if g.is_directed() { g.in_neighbors(v).len() } else { 0 };
    if (0..m).any(|v| total_degree(v) == 0) {
        stats.prune_isolated += 1;
        return true;
    }
    if crate::flipgraph::connected_components(g).len() > 1 {
        stats.prune_disconnected += 1;
        return true;
    }
    let degree_refuted = if g.is_directed() {
        let sources = (0..m).filter(|&v| g.in_neighbors(v).is_empty()).count();
        let sinks = (0..m).filter(|&v| g.neighbors(v).is_empty()).count();
        match mode {
            Mode::Path => sources > 1 || sinks > 1,
            Mode::Cycle => sources > 0 || sinks > 0,
        }
    } else {
        let low = (0..m).filter(|&v| g.neighbors(v).len() <= 1).count();
        match mode {
            Mode::Path => low > 2,
            Mode::Cycle => low > 0,
        }
    };
    if degree_refuted {
        stats.prune_degree += 1;
        return true;
    }
    let limit = match mode {
        Mode::Path => 3,
        Mode::Cycle => 2,
    };
    if max_pieces_after_removal(g) >= limit {
        stats.prune_cut_vertex += 1;
        return true;
    }
    false
}

/// The largest number of components left by deleting a single vertex from
/// the (underlying undirected, connected) graph.
fn max_pieces_after_removal(g: &FlipGraph) -> usize {
    let m = g.m();
    if m < 3 {
        return 1;
    }
    let nbrs: Vec<Vec<usize>> = (0..m)
        .map(|v| {
            let mut l: Vec<usize> = g.undirected_neighbors(v).collect();
            l.sort_unstable();
            l.dedup();
            l
        })
        .collect();
    let mut disc = vec![usize::MAX; m];
    let mut low = vec![0usize; m];
    let mut pieces = vec![1usize; m];
    let mut timer = 0;
    // Iterative DFS from vertex 0: (vertex, parent, next neighbor index).
    let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
    disc[0] = timer;
    low[0] = timer;
    timer += 1;
    pieces[0] = 0;
    while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
        if *next < nbrs[v].len() {
            let w = nbrs[v][*next];
            *next += 1;
            if disc[w] == usize::MAX {
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                stack.push((w, v, 0));
            } else if w != parent {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if parent != usize::MAX {
                low[parent] = low[parent].min(low[v]);
                if low[v] >= disc[parent] {
                    pieces[parent] += 1;
                }
            }
        }
    }
    pieces.into_iter().max().unwrap_or(1)
}

fn start_vertices(g: &FlipGraph, mode: Mode) -> Vec<usize> {
    let m = g.m();
    match mode {
        Mode::Cycle => vec![0],
        Mode::Path if g.is_directed() => match (0..m).find(|&v| g.in_neighbors(v).is_empty()) {
            Some(s) => vec![s],
            None => (0..m).collect(),
        },
        // A degree-one vertex is an endpoint of every Hamilton path; reversal
        // lets the search start there.
        Mode::Path => match (0..m).find(|&v| g.neighbors(v).len() == 1) {
            Some(s) => vec![s],
            None => (0..m).collect(),
        },
    }
}

struct StartRun {
    found: Option<Vec<usize>>,
    stats: SearchStats,
    exhausted: bool,
}

enum Step {
    Found,
    Reject,
    Descend,
}

struct Search<'g> {
    g: &'g FlipGraph,
    mode: Mode,
    visited: Vec<bool>,
    path: Vec<usize>,
    stats: SearchStats,
    // BFS scratch.
    seen: Vec<u32>,
    stamp: u32,
    queue: Vec<usize>,
}

fn run_from(g: &FlipGraph, mode: Mode, start: usize, cap: u64) -> StartRun {
    let m = g.m();
    let mut search = Search {
        g,
        mode,
        visited: vec![false; m],
        path: Vec::with_capacity(m),
        stats: SearchStats::default(),
        seen: vec![0; m],
        stamp: 0,
        queue: Vec::with_capacity(m),
    };
    // One candidate list per path vertex, consumed from the back.
    let mut next: Vec<Vec<usize>> = Vec::with_capacity(m);
    let outcome = |search: Search, found: bool, exhausted: bool| StartRun {
        found: found.then(|| search.path.clone()),
        stats: search.stats,
        exhausted,
    };
    match search.enter(start) {
        Step::Found => return outcome(search, true, false),
        Step::Reject => return outcome(search, false, false),
        Step::Descend => next.push(search.candidates()),
    }
    loop {
        if search.stats.nodes > cap {
            return outcome(search, false, true);
        }
        let Some(candidates) = next.last_mut() else {
            return outcome(search, false, false);
        };
        match candidates.pop() {
            Some(w) => match search.enter(w) {
                Step::Found => return outcome(search, true, false),
                Step::Reject => search.leave(),
                Step::Descend => next.push(search.candidates()),
            },
            None => {
                search.leave();
                next.pop();
            }
        }
    }
}

impl Search<'_> {
    fn enter(&mut self, v: usize) -> Step {
        self.visited[v] = true;
        self.path.push(v);
        self.stats.nodes += 1;
        let m = self.g.m();
        if self.path.len() == m {
            return match self.mode {
                Mode::Path => Step::Found,
                Mode::Cycle if self.g.has_edge(v, self.path[0]) => Step::Found,
                Mode::Cycle => Step::Reject,
            };
        }
        if self.feasible() {
            Step::Descend
        } else {
            Step::Reject
        }
    }

    /// Unvisited successors of the path end, best last.
    fn candidates(&self) -> Vec<usize> {
        let g = self.g;
        let e = *self.path.last().expect("nonempty path");
        let mut out: Vec<(usize, usize)> = g
            .neighbors(e)
            .iter()
            .filter(|&&w| !self.visited[w])
            .map(|&w| (g.neighbors(w).iter().filter(|&&x| !self.visited[x]).count(), w))
            .collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        out.into_iter().map(|(_, w)| w).collect()
    }

    fn leave(&mut self) {
        let v = self.path.pop().expect("nonempty path");
        self.visited[v] = false;
    }

    /// Necessary conditions for extending the current path to a Hamilton
    /// path (or cycle) through every unvisited vertex.
    fn feasible(&mut self) -> bool {
        let g = self.g;
        let e = *self.path.last().expect("nonempty path");
        let s = self.path[0];
        let remaining = g.m() - self.path.len();
        let mut endpoints = 0;
        for u in 0..g.m() {
            if self.visited[u] {
                continue;
            }
            let ok = if g.is_directed() {
                let ins = g.in_neighbors(u).iter().filter(|&&w| !self.visited[w] || w == e).count();
                let outs = g
                    .neighbors(u)
                    .iter()
                    .filter(|&&w| !self.visited[w] || (self.mode == Mode::Cycle && w == s))
                    .count();
                if outs == 0 {
                    endpoints += 1;
                }
                ins > 0 && (outs > 0 || self.mode == Mode::Path) && endpoints <= 1
            } else {
                let mut free = 0;
                let mut touches_end = false;
                for &w in g.neighbors(u) {
                    if !self.visited[w] {
                        free += 1;
                    } else if w == e {
                        touches_end = true;
                    } else if self.mode == Mode::Cycle && w == s {
                        free += 1;
                    }
                }
                let h = free + usize::from(touches_end);
                match self.mode {
                    Mode::Cycle => h >= 2,
                    Mode::Path => {
                        if h == 1 {
                            endpoints += 1;
                        }
                        // A vertex reachable only from the current end must be
                        // next, and then it is stuck unless it is last.
                        h >= 1 && endpoints <= 1 && !(h == 1 && touches_end && remaining > 1)
                    }
                }
            };
            if !ok {
                self.stats.prune_dead_end += 1;
                return false;
            }
        }
        if self.mode == Mode::Cycle && self.path.len() > 1 {
            let closable = g.in_neighbors(s).iter().any(|&w| !self.visited[w]);
            if !closable {
                self.stats.prune_dead_end += 1;
                return false;
            }
        }
        // Every unvisited vertex must be reachable from the end through
        // unvisited vertices.
        self.stamp += 1;
        let stamp = self.stamp;
        self.queue.clear();
        self.queue.push(e);
        self.seen[e] = stamp;
        let mut reached = 0;
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for &w in g.neighbors(v) {
                if !self.visited[w] && self.seen[w] != stamp {
                    self.seen[w] = stamp;
                    reached += 1;
                    self.queue.push(w);
                }
            }
        }
        if reached != remaining {
            self.stats.prune_unreachable += 1;
            return false;
        }
        true
    }
}

/// Number of Hamilton paths; undirected paths are counted up to reversal.
pub fn count_hamilton_paths(graph: &FlipGraph) -> Result<u64> {
    count_hamilton_paths_bounded(graph, DEFAULT_COUNT_BOUND)
}

pub fn count_hamilton_paths_bounded(graph: &FlipGraph, bound: usize) -> Result<u64> {
    let m = graph.m();
    if m > bound {
        return Err(Error::BoundExceeded { m, bound });
    }
    if m <= 1 {
        return Ok(1);
    }
    fn extend(g: &FlipGraph, v: usize, depth: usize, visited: &mut [bool]) -> u64 {
        if depth == g.m() {
            return 1;
        }
        let mut total = 0;
        for &w in g.neighbors(v) {
            if !visited[w] {
                visited[w] = true;
                total += extend(g, w, depth + 1, visited);
                visited[w] = false;
            }
        }
        total
    }
    let mut visited = vec![false; m];
    let mut total = 0;
    for s in 0..m {
        visited[s] = true;
        total += extend(graph, s, 1, &mut visited);
        visited[s] = false;
    }
    Ok(if graph.is_directed() { total } else { total / 2 })
}

/// Checks that `certificate` lists every object once with consecutive
/// objects flip-adjacent (in listed order for directed families).
pub fn verify_certificate(instance: &Instance, certificate: &Certificate) -> Result<bool> {
    verify_order(instance, certificate, false)
}

/// As [`verify_certificate`], also requiring the last object to flip back to the first.
pub fn verify_cyclic_certificate(instance: &Instance, certificate: &Certificate) -> Result<bool> {
    verify_order(instance, certificate, true)
}

fn verify_order(instance: &Instance, certificate: &Certificate, cyclic: bool) -> Result<bool> {
    let m = instance.len();
    let order = certificate.order();
    if let Some(&bad) = order.iter().find(|&&i| i >= m) {
        return Err(Error::BadIndices(format!("index {} outside 1..={m}", bad + 1)));
    }
    if order.len() != m {
        return Ok(false);
    }
    let mut seen = vec![false; m];
    for &i in order {
        if std::mem::replace(&mut seen[i], true) {
            return Ok(false);
        }
    }
    let objects = instance.objects();
    let flip = instance.flip();
    for w in order.windows(2) {
        if !adjacent(flip, &objects[w[0]], &objects[w[1]])? {
            return Ok(false);
        }
    }
    if cyclic {
        if m < 2 || (m == 2 && !flip.is_directed()) {
            return Ok(false);
        }
        if !adjacent(flip, &objects[order[m - 1]], &objects[order[0]])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Convenience: build the graph and run the path search with defaults.
pub fn solve_path(instance: &Instance) -> Result<SolveResult> {
    has_hamilton_path(&build_flip_graph(instance)?)
}

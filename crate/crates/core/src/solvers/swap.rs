//! Swap repairs.
//!
//! The swap distance between two colorings with the same class multiset is
//! `m - c_max`, where `m` is the number of mismatched vertices and `c_max`
//! is the largest number of directed cycles the exchange digraph (one arc
//! `current -> target` per mismatched vertex) decomposes into: a cycle of
//! length `L` is realized with `L - 1` transpositions and no transposition
//! can merge more than one cycle's worth of progress.
//!
//! The optimum over all proper targets is found by a branch and bound over
//! target colorings. Each step changes one still-original vertex; conflicts
//! are resolved first, then class-count surpluses. A balanced proper node is
//! a leaf: adding further changes to a balanced exchange digraph never lowers
//! its swap distance.

use std::collections::HashMap;

use crate::chromatic::{chromatic_number, Limits};
use crate::classes::has_proper_coloring_with_sizes;
use crate::error::{Error, Result};
use crate::graph::{class_sizes, Color, ColoredGraph, Graph, Vertex};
use crate::instance::{Certificate, Move};

use super::{Decision, Optimum, SolveResult};

/// Arc multiplicities between colors: `counts[a][b]` vertices move from
/// color `a` to color `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeDigraph {
    counts: Vec<Vec<usize>>,
}

impl ExchangeDigraph {
    pub fn new(r: usize) -> Self {
        ExchangeDigraph { counts: vec![vec![0; r]; r] }
    }

    pub fn between(current: &[Color], target: &[Color], r: usize) -> Self {
        let mut d = ExchangeDigraph::new(r);
        for (&a, &b) in current.iter().zip(target) {
            if a != b {
                d.counts[a as usize][b as usize] += 1;
            }
        }
        d
    }

    pub fn r(&self) -> usize {
        self.counts.len()
    }

    pub fn count(&self, from: usize, to: usize) -> usize {
        self.counts[from][to]
    }

    pub fn arcs(&self) -> usize {
        self.counts.iter().flatten().sum()
    }

    pub fn out_degree(&self, a: usize) -> usize {
        self.counts[a].iter().sum()
    }

    pub fn in_degree(&self, a: usize) -> usize {
        self.counts.iter().map(|row| row[a]).sum()
    }

    pub fn is_balanced(&self) -> bool {
        (0..self.r()).all(|a| self.out_degree(a) == self.in_degree(a))
    }

    /// Maximum number of cycles in a decomposition, with the count of each
    /// simple cycle type achieving it. Requires a balanced digraph.
    pub fn max_cycle_decomposition(&self) -> (usize, Vec<(Vec<usize>, usize)>) {
        let types = simple_cycles(self.r());
        let mut remaining = self.counts.clone();
        let mut chosen = vec![0; types.len()];
        let mut best = (0, Vec::new());
        let total = self.arcs();
        decompose(&types, 0, &mut remaining, total, 0, &mut chosen, &mut best);
        let (cycles, counts) = best;
        let listing = types.into_iter().zip(counts).filter(|(_, c)| *c > 0).collect();
        (cycles, listing)
    }

    /// `m - c_max`.
    pub fn swap_distance(&self) -> usize {
        self.arcs() - self.max_cycle_decomposition().0
    }
}

/// Simple directed cycles of length >= 2 in the complete digraph on `r`
/// nodes, each listed from its smallest node, shortest first.
fn simple_cycles(r: usize) -> Vec<Vec<usize>> {
    fn extend(r: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if path.len() >= 2 {
            out.push(path.clone());
        }
        for next in path[0] + 1..r {
            if !path.contains(&next) {
                path.push(next);
                extend(r, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for start in 0..r {
        extend(r, &mut vec![start], &mut out);
    }
    out.sort_by_key(|c| c.len());
    out
}

fn decompose(
    types: &[Vec<usize>],
    index: usize,
    remaining: &mut [Vec<usize>],
    left: usize,
    cycles: usize,
    chosen: &mut [usize],
    best: &mut (usize, Vec<usize>),
) {
    if left == 0 {
        if cycles > best.0 || best.1.is_empty() {
            *best = (cycles, chosen.to_vec());
        }
        return;
    }
    if index == types.len() || cycles + left / types[index].len() <= best.0 && !best.1.is_empty() {
        return;
    }
    let cycle = &types[index];
    let arcs: Vec<(usize, usize)> = (0..cycle.len()).map(|i| (cycle[i], cycle[(i + 1) % cycle.len()])).collect();
    let max = arcs.iter().map(|&(a, b)| remaining[a][b]).min().unwrap();
    for take in (0..=max).rev() {
        for &(a, b) in &arcs {
            remaining[a][b] -= take;
        }
        chosen[index] = take;
        decompose(types, index + 1, remaining, left - take * cycle.len(), cycles + take, chosen, best);
        for &(a, b) in &arcs {
            remaining[a][b] += take;
        }
    }
    chosen[index] = 0;
}

/// Minimal number of swaps turning `g`'s coloring into `target`.
pub fn swap_distance_to(g: &ColoredGraph, target: &[Color]) -> Result<usize> {
    if target.len() != g.n() || class_sizes(target, g.r()) != g.color_class_sizes() {
        return Err(Error::MultisetMismatch);
    }
    Ok(ExchangeDigraph::between(g.coloring(), target, g.r()).swap_distance())
}

/// Explicit transpositions realizing a maximum cycle decomposition.
pub fn swap_certificate(current: &[Color], target: &[Color], r: usize) -> Certificate {
    let digraph = ExchangeDigraph::between(current, target, r);
    let (_, listing) = digraph.max_cycle_decomposition();
    let mut pools: HashMap<(usize, usize), Vec<Vertex>> = HashMap::new();
    for v in (0..current.len()).rev() {
        if current[v] != target[v] {
            pools.entry((current[v] as usize, target[v] as usize)).or_default().push(v);
        }
    }
    let mut moves = Vec::new();
    for (cycle, count) in listing {
        for _ in 0..count {
            let verts: Vec<Vertex> = (0..cycle.len())
                .map(|i| {
                    let arc = (cycle[i], cycle[(i + 1) % cycle.len()]);
                    pools.get_mut(&arc).and_then(Vec::pop).expect("decomposition uses existing arcs")
                })
                .collect();
            for w in verts.windows(2) {
                moves.push(Move::Swap { u: w[0], v: w[1] });
            }
        }
    }
    Certificate::new(moves)
}

/// Vertices with the same original color and the same neighborhood are
/// interchangeable; only the smallest unchanged member of a class is branched on.
fn twin_classes(g: &ColoredGraph) -> Vec<usize> {
    let mut ids: HashMap<(Color, &[Vertex]), usize> = HashMap::new();
    (0..g.n())
        .map(|v| {
            let next = ids.len();
            *ids.entry((g.color(v), g.graph().neighbors(v))).or_insert(next)
        })
        .collect()
}

struct SwapSearch<'a> {
    graph: &'a Graph,
    r: usize,
    original: &'a [Color],
    current: Vec<Color>,
    changed: Vec<bool>,
    twin: Vec<usize>,
    out: Vec<usize>,
    inn: Vec<usize>,
    found: Option<Vec<Color>>,
}

impl<'a> SwapSearch<'a> {
    fn new(g: &'a ColoredGraph) -> Self {
        SwapSearch {
            graph: g.graph(),
            r: g.r(),
            original: g.coloring(),
            current: g.coloring().to_vec(),
            changed: vec![false; g.n()],
            twin: twin_classes(g),
            out: vec![0; g.r()],
            inn: vec![0; g.r()],
            found: None,
        }
    }

    fn set(&mut self, v: Vertex, c: Color) {
        debug_assert!(!self.changed[v]);
        self.changed[v] = true;
        self.current[v] = c;
        self.out[self.original[v] as usize] += 1;
        self.inn[c as usize] += 1;
    }

    fn unset(&mut self, v: Vertex) {
        let c = self.current[v];
        self.changed[v] = false;
        self.current[v] = self.original[v];
        self.out[self.original[v] as usize] -= 1;
        self.inn[c as usize] -= 1;
    }

    /// Lower bound on the final swap distance of any target below this node,
    /// the first conflict to branch on (forced vertices preferred), or
    /// `None` for a dead node.
    fn analyze(&self) -> Option<(usize, Option<Branch>)> {
        let n = self.graph.n();
        let mut out_lb = self.out.clone();
        let mut forced = vec![false; n];
        let mut forced_total = 0;
        let mut pending = Vec::new();
        let mut branch = None;
        for &(u, v) in self.graph.edges() {
            if self.current[u] != self.current[v] {
                continue;
            }
            match (self.changed[u], self.changed[v]) {
                (true, true) => return None,
                (false, false) => {
                    pending.push((u, v));
                    if branch.is_none() {
                        branch = Some(Branch::Edge(u, v));
                    }
                }
                _ => {
                    let x = if self.changed[u] { v } else { u };
                    if !forced[x] {
                        forced[x] = true;
                        forced_total += 1;
                        out_lb[self.original[x] as usize] += 1;
                    }
                    if !matches!(branch, Some(Branch::Forced(_))) {
                        branch = Some(Branch::Forced(x));
                    }
                }
            }
        }
        let mut used = forced;
        let mut matching = 0;
        for (u, v) in pending {
            if !used[u] && !used[v] {
                used[u] = true;
                used[v] = true;
                matching += 1;
                out_lb[self.original[u] as usize] += 1;
            }
        }
        let changed_total: usize = self.out.iter().sum();
        let per_color: Vec<usize> = (0..self.r).map(|a| out_lb[a].max(self.inn[a])).collect();
        let heaviest = per_color.iter().copied().max().unwrap_or(0);
        let arcs = (changed_total + forced_total + matching).max(per_color.iter().sum()).max(2 * heaviest);
        let bound = arcs.div_ceil(2).max(heaviest);
        if branch.is_none() {
            if let Some(a) = (0..self.r).find(|&a| self.inn[a] > self.out[a]) {
                branch = Some(Branch::Surplus(a as Color));
            }
        }
        Some((bound, branch))
    }

    fn run(&mut self, budget: usize) -> bool {
        let Some((bound, branch)) = self.analyze() else { return false };
        if bound > budget {
            return false;
        }
        let Some(branch) = branch else {
            let d = ExchangeDigraph::between(self.original, &self.current, self.r).swap_distance();
            if d <= budget {
                self.found = Some(self.current.clone());
                return true;
            }
            return false;
        };
        let candidates: Vec<Vertex> = match branch {
            Branch::Forced(x) => vec![x],
            Branch::Edge(u, v) => vec![u, v],
            Branch::Surplus(a) => {
                let mut seen_classes = Vec::new();
                (0..self.graph.n())
                    .filter(|&v| !self.changed[v] && self.original[v] == a)
                    .filter(|&v| {
                        let fresh = !seen_classes.contains(&self.twin[v]);
                        if fresh {
                            seen_classes.push(self.twin[v]);
                        }
                        fresh
                    })
                    .collect()
            }
        };
        for x in candidates {
            let old = self.original[x];
            for c in 0..self.r as Color {
                if c == old {
                    continue;
                }
                self.set(x, c);
                if self.run(budget) {
                    return true;
                }
                self.unset(x);
            }
        }
        false
    }
}

#[derive(Clone, Copy, Debug)]
enum Branch {
    Forced(Vertex),
    Edge(Vertex, Vertex),
    Surplus(Color),
}

/// Decides whether at most `k` swaps make `g` proper.
pub fn swap_branch(g: &ColoredGraph, k: usize) -> Decision {
    let mut search = SwapSearch::new(g);
    if search.run(k) {
        let target = search.found.expect("successful search records its target");
        Decision { yes: true, certificate: Some(swap_certificate(g.coloring(), &target, g.r())) }
    } else {
        Decision { yes: false, certificate: None }
    }
}

/// Minimum number of swaps to a proper coloring (the villainy of the
/// coloring), or unreachable when no proper coloring shares its class sizes.
pub fn swap_optimum(g: &ColoredGraph, limits: &Limits) -> Result<SolveResult> {
    let unreachable = SolveResult { optimum: Optimum::Unreachable, certificate: None };
    if chromatic_number(g.graph(), limits)? > g.r() {
        return Ok(unreachable);
    }
    if !has_proper_coloring_with_sizes(g.graph(), &g.color_class_sizes()) {
        return Ok(unreachable);
    }
    let start = SwapSearch::new(g).analyze().map(|(b, _)| b).unwrap_or(0);
    for k in start..=g.n() {
        let d = swap_branch(g, k);
        if d.yes {
            return Ok(SolveResult { optimum: Optimum::Finite(k), certificate: d.certificate });
        }
    }
    unreachable!("a proper coloring with equal class sizes is at most n swaps away")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{apply, triangle_with_pendants};

    #[test]
    fn distance_small_cases() {
        let g = ColoredGraph::new(Graph::path(2), 2, vec![0, 1]).unwrap();
        assert_eq!(swap_distance_to(&g, &[0, 1]).unwrap(), 0);
        assert_eq!(swap_distance_to(&g, &[1, 0]).unwrap(), 1);
        assert!(matches!(swap_distance_to(&g, &[1, 1]), Err(Error::MultisetMismatch)));
    }

    #[test]
    fn three_cycle_costs_two() {
        let g = ColoredGraph::new(Graph::empty(3), 3, vec![0, 1, 2]).unwrap();
        assert_eq!(swap_distance_to(&g, &[1, 2, 0]).unwrap(), 2);
        let cert = swap_certificate(g.coloring(), &[1, 2, 0], 3);
        assert_eq!(cert.len(), 2);
        assert_eq!(apply(&g, &cert, false).unwrap().coloring(), &[1, 2, 0]);
    }

    #[test]
    fn simple_cycle_types() {
        assert_eq!(simple_cycles(3).len(), 5);
        assert_eq!(simple_cycles(4).len(), 20);
    }

    #[test]
    fn separating_example_needs_two_swaps() {
        let g = triangle_with_pendants();
        assert!(!swap_branch(&g, 1).yes);
        let res = swap_optimum(&g, &Limits::default()).unwrap();
        assert_eq!(res.optimum, Optimum::Finite(2));
        let cert = res.certificate.unwrap();
        assert_eq!(cert.len(), 2);
        assert!(apply(&g, &cert, false).unwrap().is_proper());
    }

    #[test]
    fn multiset_without_proper_coloring_is_unreachable() {
        let g = ColoredGraph::new(Graph::complete(3), 3, vec![0, 0, 1]).unwrap();
        assert_eq!(swap_optimum(&g, &Limits::default()).unwrap().optimum, Optimum::Unreachable);
    }
}

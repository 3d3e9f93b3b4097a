//! Bounded-depth branching for recoloring repairs.
//!
//! Every branch only recolors vertices that still hold their original color.
//! For any proper target coloring, some conflict edge always has an endpoint
//! that is unchanged and differs from the target, so restricting branches
//! this way loses no solutions and keeps each vertex recolored at most once.

use crate::chromatic::{chromatic_number, Limits};
use crate::error::Result;
use crate::graph::{Color, ColoredGraph, Graph, Vertex};
use crate::instance::{Certificate, Move};

use super::{Decision, Optimum, SolveResult};

struct FixSearch<'a> {
    graph: &'a Graph,
    r: usize,
    current: Vec<Color>,
    changed: Vec<bool>,
    moves: Vec<Move>,
}

impl FixSearch<'_> {
    fn new(g: &ColoredGraph) -> FixSearch<'_> {
        FixSearch {
            graph: g.graph(),
            r: g.r(),
            current: g.coloring().to_vec(),
            changed: vec![false; g.n()],
            moves: Vec::new(),
        }
    }

    /// Lower bound on further recolorings, or `None` if a conflict joins two
    /// already-recolored vertices (dead branch).
    fn lower_bound(&self) -> Option<usize> {
        let n = self.graph.n();
        let mut forced = vec![false; n];
        let mut forced_count = 0;
        let mut pending = Vec::new();
        for &(u, v) in self.graph.edges() {
            if self.current[u] != self.current[v] {
                continue;
            }
            match (self.changed[u], self.changed[v]) {
                (true, true) => return None,
                (true, false) | (false, true) => {
                    let x = if self.changed[u] { v } else { u };
                    if !forced[x] {
                        forced[x] = true;
                        forced_count += 1;
                    }
                }
                (false, false) => pending.push((u, v)),
            }
        }
        let mut used = forced;
        let mut matching = 0;
        for (u, v) in pending {
            if !used[u] && !used[v] {
                used[u] = true;
                used[v] = true;
                matching += 1;
            }
        }
        Some(forced_count + matching)
    }

    fn first_conflict(&self) -> Option<(Vertex, Vertex)> {
        self.graph.edges().iter().copied().find(|&(u, v)| self.current[u] == self.current[v])
    }

    fn run(&mut self, budget: usize) -> bool {
        let Some((u, v)) = self.first_conflict() else { return true };
        match self.lower_bound() {
            Some(lb) if lb <= budget => {}
            _ => return false,
        }
        for x in [u, v] {
            if self.changed[x] {
                continue;
            }
            let old = self.current[x];
            for c in 0..self.r as Color {
                if c == old {
                    continue;
                }
                self.current[x] = c;
                self.changed[x] = true;
                self.moves.push(Move::Recolor { vertex: x, color: c });
                if self.run(budget - 1) {
                    return true;
                }
                self.moves.pop();
            }
            self.current[x] = old;
            self.changed[x] = false;
        }
        false
    }
}

/// Decides whether at most `k` recolorings make `g` proper.
///
/// Branches on the lexicographically smallest conflict edge, trying `u`
/// before `v` and colors in ascending order, so results are reproducible.
/// Runs in `(2(r-1))^k * poly(n)` time.
pub fn fix_branch(g: &ColoredGraph, k: usize) -> Decision {
    let mut search = FixSearch::new(g);
    if search.run(k) {
        Decision { yes: true, certificate: Some(Certificate::new(search.moves)) }
    } else {
        Decision { yes: false, certificate: None }
    }
}

/// Minimum Hamming distance from the coloring to a proper `r`-coloring,
/// with a minimizing recoloring certificate.
pub fn fix_optimum(g: &ColoredGraph, limits: &Limits) -> Result<SolveResult> {
    if chromatic_number(g.graph(), limits)? > g.r() {
        return Ok(SolveResult { optimum: Optimum::Unreachable, certificate: None });
    }
    let start = FixSearch::new(g).lower_bound().unwrap_or(0);
    for k in start..=g.n() {
        let d = fix_branch(g, k);
        if d.yes {
            return Ok(SolveResult { optimum: Optimum::Finite(k), certificate: d.certificate });
        }
    }
    unreachable!("an r-colorable graph is repairable with at most n recolorings")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{apply, triangle_with_pendants};

    #[test]
    fn proper_input_needs_nothing() {
        let g = ColoredGraph::new(Graph::complete(3), 3, vec![0, 1, 2]).unwrap();
        assert!(fix_branch(&g, 0).yes);
        let res = fix_optimum(&g, &Limits::default()).unwrap();
        assert_eq!(res.optimum, Optimum::Finite(0));
        assert!(res.certificate.unwrap().is_empty());
    }

    #[test]
    fn separating_example_needs_three() {
        let g = triangle_with_pendants();
        assert!(!fix_branch(&g, 2).yes);
        let d = fix_branch(&g, 3);
        assert!(d.yes);
        assert!(apply(&g, &d.certificate.unwrap(), false).unwrap().is_proper());
        assert_eq!(fix_optimum(&g, &Limits::default()).unwrap().optimum, Optimum::Finite(3));
    }

    #[test]
    fn uncolorable_is_unreachable() {
        let g = ColoredGraph::new(Graph::complete(4), 3, vec![0, 1, 2, 0]).unwrap();
        assert_eq!(fix_optimum(&g, &Limits::default()).unwrap().optimum, Optimum::Unreachable);
        assert!(!fix_branch(&g, 4).yes);
    }
}

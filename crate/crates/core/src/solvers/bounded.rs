//! Depth-bounded exhaustive search over move sequences.

use crate::graph::{Color, ColoredGraph, Vertex};
use crate::instance::{Certificate, Move, Variant};

/// Which moves the search may try.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MoveSet {
    /// Every legal move.
    All,
    /// Moves touching a conflicted vertex or a neighbor of one.
    NearConflicts,
}

struct Search<'a> {
    g: &'a ColoredGraph,
    variant: Variant,
    moves: MoveSet,
    colors: Vec<Color>,
    conflicts: usize,
    path: Vec<Move>,
}

impl Search<'_> {
    fn local(&self, v: Vertex) -> usize {
        let c = self.colors[v];
        self.g.graph().neighbors(v).iter().filter(|&&u| self.colors[u] == c).count()
    }

    fn recolor(&mut self, v: Vertex, c: Color) {
        self.conflicts -= self.local(v);
        self.colors[v] = c;
        self.conflicts += self.local(v);
    }

    fn swap(&mut self, u: Vertex, v: Vertex) {
        let (cu, cv) = (self.colors[u], self.colors[v]);
        self.recolor(u, cv);
        self.recolor(v, cu);
    }

    fn touched(&self) -> Vec<bool> {
        let n = self.g.n();
        if self.moves == MoveSet::All {
            return vec![true; n];
        }
        let mut near = vec![false; n];
        for v in 0..n {
            if self.local(v) > 0 {
                near[v] = true;
                for &u in self.g.graph().neighbors(v) {
                    near[u] = true;
                }
            }
        }
        near
    }

    fn run(&mut self, budget: usize) -> bool {
        if self.conflicts == 0 {
            return true;
        }
        if budget == 0 {
            return false;
        }
        let n = self.g.n();
        let near = self.touched();
        match self.variant {
            Variant::Fix => {
                for v in (0..n).filter(|&v| near[v]) {
                    let old = self.colors[v];
                    for c in (0..self.g.r() as Color).filter(|&c| c != old) {
                        self.recolor(v, c);
                        self.path.push(Move::Recolor { vertex: v, color: c });
                        if self.run(budget - 1) {
                            return true;
                        }
                        self.path.pop();
                        self.recolor(v, old);
                    }
                }
            }
            Variant::Swap => {
                for u in 0..n {
                    for v in u + 1..n {
                        if !(near[u] || near[v]) || self.colors[u] == self.colors[v] {
                            continue;
                        }
                        self.swap(u, v);
                        self.path.push(Move::Swap { u, v });
                        if self.run(budget - 1) {
                            return true;
                        }
                        self.path.pop();
                        self.swap(u, v);
                    }
                }
            }
        }
        false
    }
}

/// Finds a shortest sequence of at most `depth` moves ending in a proper
/// coloring, by iterative deepening over all sequences drawn from `moves`.
pub fn bounded_search(g: &ColoredGraph, variant: Variant, depth: usize, moves: MoveSet) -> Option<Certificate> {
    let mut s = Search {
        g,
        variant,
        moves,
        colors: g.coloring().to_vec(),
        conflicts: g.conflicts().len(),
        path: Vec::new(),
    };
    (0..=depth).find(|&d| s.run(d)).map(|_| Certificate::new(s.path))
}

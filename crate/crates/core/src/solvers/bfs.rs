//! Breadth-first search over coloring states.

use std::collections::{HashMap, VecDeque};

use crate::chromatic::Limits;
use crate::error::{Error, Result};
use crate::graph::{is_proper_coloring, Color, ColoredGraph};
use crate::instance::{Certificate, Move};

use super::{Optimum, SolveResult};

fn bfs<F>(g: &ColoredGraph, limits: &Limits, what: &'static str, moves: F) -> Result<SolveResult>
where
    F: Fn(&[Color]) -> Vec<Move>,
{
    if g.n() > limits.bfs_vertices {
        return Err(Error::SearchCapExceeded { what, size: g.n(), cap: limits.bfs_vertices });
    }
    let start = g.coloring().to_vec();
    let mut parent: HashMap<Vec<Color>, Option<(Vec<Color>, Move)>> = HashMap::from([(start.clone(), None)]);
    let mut queue = VecDeque::from([start]);
    while let Some(state) = queue.pop_front() {
        if is_proper_coloring(g.graph(), &state) {
            let mut path = Vec::new();
            let mut cursor = state;
            while let Some(Some((prev, mv))) = parent.get(&cursor) {
                path.push(*mv);
                cursor = prev.clone();
            }
            path.reverse();
            return Ok(SolveResult { optimum: Optimum::Finite(path.len()), certificate: Some(Certificate::new(path)) });
        }
        for mv in moves(&state) {
            let mut next = state.clone();
            match mv {
                Move::Recolor { vertex, color } => next[vertex] = color,
                Move::Swap { u, v } => next.swap(u, v),
            }
            if !parent.contains_key(&next) {
                parent.insert(next.clone(), Some((state.clone(), mv)));
                queue.push_back(next);
            }
        }
    }
    Ok(SolveResult { optimum: Optimum::Unreachable, certificate: None })
}

/// Fewest swaps across edges that end in a proper coloring.
pub fn adjacent_swap_optimum(g: &ColoredGraph, limits: &Limits) -> Result<SolveResult> {
    let edges = g.graph().edges().to_vec();
    bfs(g, limits, "adjacent-swap search", move |state| {
        edges
            .iter()
            .filter(|&&(u, v)| state[u] != state[v])
            .map(|&(u, v)| Move::Swap { u, v })
            .collect()
    })
}

/// Fewest unrestricted swaps, by exhaustive search.
pub(crate) fn swap_bfs_optimum(g: &ColoredGraph, limits: &Limits) -> Result<SolveResult> {
    let n = g.n();
    bfs(g, limits, "swap search", move |state| {
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| state[u] != state[v])
            .map(|(u, v)| Move::Swap { u, v })
            .collect()
    })
}

/// Fewest recolorings, by exhaustive search.
pub(crate) fn fix_bfs_optimum(g: &ColoredGraph, limits: &Limits) -> Result<SolveResult> {
    let (n, r) = (g.n(), g.r() as Color);
    bfs(g, limits, "recoloring search", move |state| {
        (0..n)
            .flat_map(|v| (0..r).filter(move |&c| c != state[v]).map(move |c| Move::Recolor { vertex: v, color: c }))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn path_needs_one_adjacent_swap() {
        let g = ColoredGraph::new(Graph::path(3), 2, vec![0, 0, 1]).unwrap();
        let res = adjacent_swap_optimum(&g, &Limits::default()).unwrap();
        assert_eq!(res.optimum, Optimum::Finite(1));
        assert_eq!(res.certificate.unwrap().moves, vec![Move::Swap { u: 1, v: 2 }]);
    }

    #[test]
    fn proper_input_is_zero() {
        let g = ColoredGraph::new(Graph::path(3), 2, vec![0, 1, 0]).unwrap();
        assert_eq!(adjacent_swap_optimum(&g, &Limits::default()).unwrap().optimum, Optimum::Finite(0));
    }

    #[test]
    fn unreachable_and_cap() {
        let g = ColoredGraph::new(Graph::path(3), 2, vec![0, 0, 0]).unwrap();
        assert_eq!(adjacent_swap_optimum(&g, &Limits::default()).unwrap().optimum, Optimum::Unreachable);
        let big = ColoredGraph::new(Graph::path(20), 2, vec![0; 20]).unwrap();
        assert!(matches!(adjacent_swap_optimum(&big, &Limits::default()), Err(Error::SearchCapExceeded { .. })));
    }
}

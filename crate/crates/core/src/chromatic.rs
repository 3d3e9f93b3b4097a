//! Exact chromatic number by DSATUR-ordered branch and bound.
//!
//! Vertices of degree at most one are peeled off first (they never raise the
//! chromatic number above 2) and each remaining component is searched
//! separately; the size cap applies to the largest peeled component.

use crate::error::{Error, Result};
use crate::graph::{Color, Graph, Vertex};

/// Size caps for the exact searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest component (after peeling degree-one vertices) handed to the
    /// chromatic-number search.
    pub exact_vertices: usize,
    /// Largest graph for breadth-first search over coloring states.
    pub bfs_vertices: usize,
    /// Largest source instance for the brute-force source-problem oracles.
    pub oracle_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { exact_vertices: 60, bfs_vertices: 14, oracle_vertices: 20 }
    }
}

/// Repeatedly removes vertices of degree <= 1. Returns the surviving core
/// (sorted) and the removal order.
pub(crate) fn peel_low_degree(graph: &Graph) -> (Vec<Vertex>, Vec<Vertex>) {
    let n = graph.n();
    let mut degree: Vec<usize> = (0..n).map(|v| graph.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut stack: Vec<Vertex> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut order = Vec::new();
    while let Some(v) = stack.pop() {
        if removed[v] {
            continue;
        }
        removed[v] = true;
        order.push(v);
        for &w in graph.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    let core = (0..n).filter(|&v| !removed[v]).collect();
    (core, order)
}

pub fn chromatic_number(graph: &Graph, limits: &Limits) -> Result<usize> {
    if graph.n() == 0 {
        return Ok(0);
    }
    let base = if graph.m() > 0 { 2 } else { 1 };
    let (core, _) = peel_low_degree(graph);
    let core_graph = graph.induced(&core);
    let mut best = base;
    for comp in core_graph.components() {
        if comp.len() > limits.exact_vertices {
            return Err(Error::SearchCapExceeded {
                what: "chromatic number",
                size: comp.len(),
                cap: limits.exact_vertices,
            });
        }
        let sub = core_graph.induced(&comp);
        best = best.max(component_chromatic(&sub));
    }
    Ok(best)
}

/// A proper coloring of `graph` with colors `0..k`, if one exists.
pub fn find_coloring(graph: &Graph, k: usize, limits: &Limits) -> Result<Option<Vec<Color>>> {
    let n = graph.n();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    if k == 1 {
        return Ok((graph.m() == 0).then(|| vec![0; n]));
    }
    let (core, order) = peel_low_degree(graph);
    let core_graph = graph.induced(&core);
    let mut coloring: Vec<Option<Color>> = vec![None; n];
    for comp in core_graph.components() {
        if comp.len() > limits.exact_vertices {
            return Err(Error::SearchCapExceeded {
                what: "graph coloring",
                size: comp.len(),
                cap: limits.exact_vertices,
            });
        }
        let sub = core_graph.induced(&comp);
        match k_color(&sub, k) {
            Some(c) => {
                for (i, &v) in comp.iter().enumerate() {
                    coloring[core[v]] = Some(c[i]);
                }
            }
            None => return Ok(None),
        }
    }
    // Peeled vertices had at most one neighbor left when removed.
    for &v in order.iter().rev() {
        let taken: Vec<Color> = graph.neighbors(v).iter().filter_map(|&w| coloring[w]).collect();
        let c = (0..k as Color).find(|c| !taken.contains(c)).expect("k >= 2 leaves a free color");
        coloring[v] = Some(c);
    }
    Ok(Some(coloring.into_iter().map(|c| c.unwrap()).collect()))
}

fn greedy_clique(graph: &Graph) -> usize {
    let n = graph.n();
    let mut best = usize::from(n > 0);
    for start in 0..n {
        let mut clique = vec![start];
        let mut cands: Vec<Vertex> = graph.neighbors(start).to_vec();
        while !cands.is_empty() {
            let &v = cands
                .iter()
                .max_by_key(|&&v| (cands.iter().filter(|&&w| graph.has_edge(v, w)).count(), std::cmp::Reverse(v)))
                .unwrap();
            clique.push(v);
            cands.retain(|&w| w != v && graph.has_edge(v, w));
        }
        best = best.max(clique.len());
    }
    best
}

fn dsatur_greedy(graph: &Graph) -> usize {
    let n = graph.n();
    let mut color: Vec<Option<usize>> = vec![None; n];
    let mut used = 0;
    for _ in 0..n {
        let v = pick_dsatur(graph, &color);
        let c = (0..).find(|c| graph.neighbors(v).iter().all(|&w| color[w] != Some(*c))).unwrap();
        color[v] = Some(c);
        used = used.max(c + 1);
    }
    used
}

fn saturation(graph: &Graph, color: &[Option<usize>], v: Vertex) -> usize {
    let mut seen: Vec<usize> = graph.neighbors(v).iter().filter_map(|&w| color[w]).collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

fn pick_dsatur(graph: &Graph, color: &[Option<usize>]) -> Vertex {
    (0..graph.n())
        .filter(|&v| color[v].is_none())
        .max_by_key(|&v| (saturation(graph, color, v), graph.degree(v), std::cmp::Reverse(v)))
        .expect("an uncolored vertex remains")
}

fn component_chromatic(graph: &Graph) -> usize {
    let lower = greedy_clique(graph);
    let upper = dsatur_greedy(graph);
    (lower..upper).find(|&k| k_color(graph, k).is_some()).unwrap_or(upper)
}

/// Exact k-colorability by DSATUR backtracking. New colors are opened in
/// increasing order, which removes color-permutation symmetry.
fn k_color(graph: &Graph, k: usize) -> Option<Vec<Color>> {
    fn go(graph: &Graph, k: usize, color: &mut Vec<Option<usize>>, left: usize, opened: usize) -> bool {
        if left == 0 {
            return true;
        }
        let v = pick_dsatur(graph, color);
        for c in 0..k.min(opened + 1) {
            if graph.neighbors(v).iter().any(|&w| color[w] == Some(c)) {
                continue;
            }
            color[v] = Some(c);
            if go(graph, k, color, left - 1, opened.max(c + 1)) {
                return true;
            }
        }
        color[v] = None;
        false
    }
    let mut color = vec![None; graph.n()];
    go(graph, k, &mut color, graph.n(), 0).then(|| color.into_iter().map(|c| c.unwrap() as Color).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_proper_coloring;

    fn brute_chromatic(graph: &Graph) -> usize {
        let n = graph.n();
        (0..=n)
            .find(|&k| {
                let total = k.pow(n as u32);
                (0..total).any(|mut code| {
                    let coloring: Vec<Color> = (0..n)
                        .map(|_| {
                            let c = code % k;
                            code /= k;
                            c as Color
                        })
                        .collect();
                    is_proper_coloring(graph, &coloring)
                })
            })
            .unwrap()
    }

    #[test]
    fn small_cases() {
        let l = Limits::default();
        assert_eq!(chromatic_number(&Graph::empty(5), &l).unwrap(), 1);
        assert_eq!(chromatic_number(&Graph::cycle(5), &l).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::complete(5), &l).unwrap(), 5);
        assert_eq!(chromatic_number(&Graph::path(4), &l).unwrap(), 2);
        assert_eq!(chromatic_number(&Graph::empty(0), &l).unwrap(), 0);
    }

    #[test]
    fn agrees_with_enumeration_up_to_seven_vertices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let l = Limits::default();
        for _ in 0..300 {
            let n = rng.gen_range(1..=7);
            let p = rng.gen_range(0.1..0.9);
            let edges: Vec<_> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
            let g = Graph::new(n, edges).unwrap();
            let chi = chromatic_number(&g, &l).unwrap();
            assert_eq!(chi, brute_chromatic(&g), "{g:?}");
            let coloring = find_coloring(&g, chi, &l).unwrap().unwrap();
            assert!(is_proper_coloring(&g, &coloring));
            if chi > 1 {
                assert!(find_coloring(&g, chi - 1, &l).unwrap().is_none());
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let l = Limits { exact_vertices: 4, ..Limits::default() };
        assert!(matches!(chromatic_number(&Graph::complete(5), &l), Err(Error::SearchCapExceeded { .. })));
        // Trees peel down to nothing regardless of size.
        assert_eq!(chromatic_number(&Graph::path(50), &l).unwrap(), 2);
    }
}

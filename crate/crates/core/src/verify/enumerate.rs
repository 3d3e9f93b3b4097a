//! Source enumeration for sweeps.

use rand::Rng;

use crate::graph::{Color, Graph};
use crate::reductions::PrExtInstance;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// One graph per isomorphism class on exactly `n` vertices, each the
/// representative with the smallest edge mask, in mask order.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let pairs = pairs(n);
    let mut index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    let perms = permutations(n);
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let canonical = perms.iter().all(|p| {
            let mut image = 0u64;
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    image |= 1 << index[p[u]][p[v]];
                }
            }
            image >= mask
        });
        if canonical {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            out.push(Graph::new(n, edges).expect("enumerated edges are valid"));
        }
    }
    out
}

/// Isomorphism classes of graphs on `1..=max_n` vertices.
pub fn small_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(graphs_up_to_iso).collect()
}

/// Every precoloring of `graph` with colors `0..r` (each vertex free or
/// precolored) whose precolored vertices lie in `allowed` and that is
/// proper on the precolored part.
pub fn precolorings(graph: &Graph, r: usize, allowed: &[bool]) -> Vec<PrExtInstance> {
    let n = graph.n();
    let mut out = Vec::new();
    let mut cur = vec![None; n];
    fn rec(v: usize, g: &Graph, r: usize, allowed: &[bool], cur: &mut Vec<Option<Color>>, out: &mut Vec<PrExtInstance>) {
        if v == g.n() {
            out.push(PrExtInstance { graph: g.clone(), r, precoloring: cur.clone() });
            return;
        }
        cur[v] = None;
        rec(v + 1, g, r, allowed, cur, out);
        if allowed[v] {
            for c in 0..r as Color {
                if g.neighbors(v).iter().all(|&u| u > v || cur[u] != Some(c)) {
                    cur[v] = Some(c);
                    rec(v + 1, g, r, allowed, cur, out);
                }
            }
            cur[v] = None;
        }
    }
    rec(0, graph, r, allowed, &mut cur, &mut out);
    out
}

/// `G(n, p)` with `p` drawn uniformly from `[0.2, 0.7)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let p = rng.gen_range(0.2..0.7);
    let edges: Vec<_> = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::new(n, edges).expect("sampled edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        // OEIS A000088.
        let counts: Vec<usize> = (1..=6).map(|n| graphs_up_to_iso(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn precolorings_are_proper() {
        let g = Graph::path(2);
        let all = precolorings(&g, 3, &[true, true]);
        // free/free, 3 + 3 one-sided, 6 proper two-sided.
        assert_eq!(all.len(), 1 + 3 + 3 + 6);
        assert!(all.iter().all(|p| p.precoloring_is_proper()));
    }
}

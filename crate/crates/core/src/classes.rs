//! Exact test for a proper coloring with prescribed color-class sizes.
//!
//! Swaps preserve the color-class multiset, so this decides whether a swap
//! repair exists at all and is the second half of the promise check.
//!
//! Isolated vertices are free, leaves hanging off higher-degree vertices are
//! folded into their anchor, and each remaining component is swept in a
//! frontier order, keeping the set of reachable
//! (frontier colors, class counts) states. Count vectors per component are
//! then combined by a bounded sumset.

use std::collections::HashSet;

use crate::graph::{Color, Graph, Vertex};

/// Is there a proper coloring with exactly `sizes[c]` vertices of color `c`?
pub fn has_proper_coloring_with_sizes(graph: &Graph, sizes: &[usize]) -> bool {
    let n = graph.n();
    let r = sizes.len();
    if sizes.iter().sum::<usize>() != n {
        return false;
    }
    if n == 0 {
        return true;
    }
    if r == 0 {
        return false;
    }
    let target: Vec<u16> = sizes.iter().map(|&s| s as u16).collect();

    // Leaves whose neighbor has degree >= 2 are folded into that neighbor.
    let is_leaf = |v: Vertex| graph.degree(v) == 1 && graph.degree(graph.neighbors(v)[0]) >= 2;
    let mut leaves = vec![0usize; n];
    let mut in_core = vec![false; n];
    for v in 0..n {
        if graph.degree(v) == 0 {
            continue;
        }
        if is_leaf(v) {
            leaves[graph.neighbors(v)[0]] += 1;
        } else {
            in_core[v] = true;
        }
    }

    let mut totals: HashSet<Vec<u16>> = HashSet::from([vec![0; r]]);
    let mut seen = vec![false; n];
    for s in 0..n {
        if !in_core[s] || seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            for &w in graph.neighbors(comp[i]) {
                if in_core[w] && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        let vectors = component_vectors(graph, &comp, &in_core, &leaves, &target);
        let mut next = HashSet::new();
        for a in &totals {
            for b in &vectors {
                let sum: Vec<u16> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if sum.iter().zip(&target).all(|(x, t)| x <= t) {
                    next.insert(sum);
                }
            }
        }
        if next.is_empty() {
            return false;
        }
        totals = next;
    }
    // Isolated vertices absorb whatever remains.
    !totals.is_empty()
}

fn frontier_order(graph: &Graph, comp: &[Vertex], in_core: &[bool]) -> Vec<Vertex> {
    let n = graph.n();
    let mut done = vec![false; n];
    let mut remaining: Vec<usize> = vec![0; n];
    for &v in comp {
        remaining[v] = graph.neighbors(v).iter().filter(|&&w| in_core[w]).count();
    }
    let mut order = Vec::with_capacity(comp.len());
    let mut frontier: Vec<Vertex> = Vec::new();
    let start = *comp.iter().min_by_key(|&&v| (remaining[v], v)).unwrap();
    let mut candidates: Vec<Vertex> = vec![start];
    while order.len() < comp.len() {
        let v = *candidates
            .iter()
            .min_by_key(|&&v| {
                let closes = graph
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| in_core[w] && done[w] && remaining[w] == 1)
                    .count();
                let undone = graph.neighbors(v).iter().filter(|&&w| in_core[w] && !done[w]).count();
                let grow = usize::from(undone > 0);
                (frontier.len() + grow - closes, std::cmp::Reverse(closes), v)
            })
            .unwrap();
        done[v] = true;
        order.push(v);
        candidates.retain(|&w| w != v);
        for &w in graph.neighbors(v) {
            if !in_core[w] {
                continue;
            }
            remaining[w] -= 1;
            if !done[w] && !candidates.contains(&w) {
                candidates.push(w);
            }
        }
        let undone = graph.neighbors(v).iter().filter(|&&w| in_core[w] && !done[w]).count();
        remaining[v] = undone;
        if undone > 0 {
            frontier.push(v);
        }
        frontier.retain(|&w| remaining[w] > 0);
    }
    order
}

/// Distributions of `p` leaves over the colors other than `anchor`.
fn leaf_splits(p: usize, r: usize, anchor: usize) -> Vec<Vec<u16>> {
    fn rec(p: usize, colors: &[usize], r: usize, acc: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        match colors {
            [] => {
                if p == 0 {
                    out.push(acc.clone());
                }
            }
            [last] => {
                acc[*last] += p as u16;
                out.push(acc.clone());
                acc[*last] -= p as u16;
            }
            [first, rest @ ..] => {
                for take in 0..=p {
                    acc[*first] += take as u16;
                    rec(p - take, rest, r, acc, out);
                    acc[*first] -= take as u16;
                }
            }
        }
    }
    let colors: Vec<usize> = (0..r).filter(|&c| c != anchor).collect();
    let mut out = Vec::new();
    rec(p, &colors, r, &mut vec![0; r], &mut out);
    out
}

fn component_vectors(
    graph: &Graph,
    comp: &[Vertex],
    in_core: &[bool],
    leaves: &[usize],
    target: &[u16],
) -> HashSet<Vec<u16>> {
    let r = target.len();
    let order = frontier_order(graph, comp, in_core);
    let mut position = vec![usize::MAX; graph.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    // last_use[v] = position of v's last core neighbor in the order.
    let last_use: Vec<usize> = order
        .iter()
        .map(|&v| {
            graph
                .neighbors(v)
                .iter()
                .filter(|&&w| in_core[w])
                .map(|&w| position[w])
                .max()
                .unwrap_or(0)
        })
        .collect();

    // Frontier is kept as a list of vertices with a parallel color vector.
    let mut frontier: Vec<Vertex> = Vec::new();
    let mut states: HashSet<(Vec<Color>, Vec<u16>)> = HashSet::from([(Vec::new(), vec![0; r])]);
    for (i, &v) in order.iter().enumerate() {
        let neighbor_slots: Vec<usize> = frontier
            .iter()
            .enumerate()
            .filter(|(_, &w)| graph.has_edge(v, w))
            .map(|(slot, _)| slot)
            .collect();
        let splits: Vec<Vec<Vec<u16>>> = (0..r).map(|c| leaf_splits(leaves[v], r, c)).collect();
        let mut next_frontier: Vec<Vertex> = frontier.clone();
        next_frontier.push(v);
        let keep: Vec<bool> = next_frontier.iter().map(|&w| last_use[position[w]] > i).collect();
        let mut next = HashSet::new();
        for (colors, counts) in &states {
            for c in 0..r {
                if neighbor_slots.iter().any(|&s| colors[s] as usize == c) {
                    continue;
                }
                if counts[c] + 1 > target[c] {
                    continue;
                }
                let mut new_colors: Vec<Color> = colors.clone();
                new_colors.push(c as Color);
                let new_colors: Vec<Color> =
                    new_colors.into_iter().zip(&keep).filter(|(_, &k)| k).map(|(c, _)| c).collect();
                for split in &splits[c] {
                    let mut new_counts = counts.clone();
                    new_counts[c] += 1;
                    for (x, y) in new_counts.iter_mut().zip(split) {
                        *x += y;
                    }
                    if new_counts.iter().zip(target).all(|(x, t)| x <= t) {
                        next.insert((new_colors.clone(), new_counts));
                    }
                }
            }
        }
        frontier = next_frontier.into_iter().zip(&keep).filter(|(_, &k)| k).map(|(w, _)| w).collect();
        states = next;
        if states.is_empty() {
            break;
        }
    }
    states.into_iter().map(|(_, counts)| counts).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{class_sizes, is_proper_coloring};
    use rand::{Rng, SeedableRng};

    fn brute(graph: &Graph, sizes: &[usize]) -> bool {
        let n = graph.n();
        let r = sizes.len();
        let total = r.pow(n as u32);
        (0..total).any(|mut code| {
            let coloring: Vec<Color> = (0..n)
                .map(|_| {
                    let c = code % r;
                    code /= r;
                    c as Color
                })
                .collect();
            class_sizes(&coloring, r) == sizes && is_proper_coloring(graph, &coloring)
        })
    }

    #[test]
    fn triangle_needs_one_of_each() {
        let k3 = Graph::complete(3);
        assert!(has_proper_coloring_with_sizes(&k3, &[1, 1, 1]));
        assert!(!has_proper_coloring_with_sizes(&k3, &[2, 1, 0]));
    }

    #[test]
    fn agrees_with_brute_force() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..400 {
            let n = rng.gen_range(1..=8);
            let p = rng.gen_range(0.05..0.6);
            let edges: Vec<_> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
            let g = Graph::new(n, edges).unwrap();
            let r = rng.gen_range(2..=3);
            let coloring: Vec<Color> = (0..n).map(|_| rng.gen_range(0..r) as Color).collect();
            let sizes = class_sizes(&coloring, r);
            assert_eq!(has_proper_coloring_with_sizes(&g, &sizes), brute(&g, &sizes), "{g:?} {sizes:?}");
        }
    }
}

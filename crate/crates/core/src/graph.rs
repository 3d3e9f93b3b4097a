//! Simple undirected graphs and total vertex colorings over `0..r`.

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Color = u8;

/// Largest supported color count; colors are stored as `u8`.
pub const MAX_COLORS: usize = 64;

/// Undirected simple graph on vertices `0..n`.
///
/// Edges are stored normalized (`u < v`) and sorted lexicographically, and
/// adjacency lists are sorted, so two graphs with the same edge set compare
/// equal regardless of insertion order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EdgeOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges: normalized, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph induced by `verts` (sorted, distinct), relabeled to
    /// `0..verts.len()` in the given order.
    pub fn induced(&self, verts: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Graph::new(verts.len(), edges).expect("induced subgraph of a simple graph is simple")
    }

    /// Two-coloring with the smallest vertex of every component on side
    /// `false` (side A). `None` if some component has an odd cycle.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Euler-formula necessary condition for planarity: `m <= 3n - 6`, and
    /// `m <= 2n - 4` when the graph is bipartite (both for `n >= 3`).
    pub fn planarity_bound_check(&self) -> bool {
        let (n, m) = (self.n, self.m());
        if n < 3 {
            return true;
        }
        if m > 3 * n - 6 {
            return false;
        }
        !(self.is_bipartite() && m > 2 * n - 4)
    }
}

/// A graph together with a total coloring `V -> 0..r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    graph: Graph,
    r: usize,
    coloring: Vec<Color>,
}

impl ColoredGraph {
    pub fn new(graph: Graph, r: usize, coloring: Vec<Color>) -> Result<Self> {
        if r == 0 {
            return Err(Error::ZeroColors);
        }
        if r > MAX_COLORS {
            return Err(Error::Validation(format!("color count {r} exceeds {MAX_COLORS}")));
        }
        if coloring.len() != graph.n() {
            return Err(Error::ColoringLength { expected: graph.n(), got: coloring.len() });
        }
        if let Some((vertex, &c)) = coloring.iter().enumerate().find(|(_, &c)| c as usize >= r) {
            return Err(Error::ColorOutOfRange { vertex, color: c as usize, r });
        }
        Ok(ColoredGraph { graph, r, coloring })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn coloring(&self) -> &[Color] {
        &self.coloring
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.coloring[v]
    }

    /// Same graph and color count, different coloring.
    pub fn with_coloring(&self, coloring: Vec<Color>) -> Result<Self> {
        ColoredGraph::new(self.graph.clone(), self.r, coloring)
    }

    /// Monochromatic edges, in lexicographic order.
    pub fn conflicts(&self) -> Vec<(Vertex, Vertex)> {
        self.graph
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| self.coloring[u] == self.coloring[v])
            .collect()
    }

    pub fn is_proper(&self) -> bool {
        is_proper_coloring(&self.graph, &self.coloring)
    }

    pub fn color_class_sizes(&self) -> Vec<usize> {
        class_sizes(&self.coloring, self.r)
    }
}

pub fn is_proper_coloring(graph: &Graph, coloring: &[Color]) -> bool {
    graph.edges().iter().all(|&(u, v)| coloring[u] != coloring[v])
}

pub fn class_sizes(coloring: &[Color], r: usize) -> Vec<usize> {
    let mut sizes = vec![0; r];
    for &c in coloring {
        sizes[c as usize] += 1;
    }
    sizes
}

/// Number of positions where two colorings differ.
pub fn hamming(a: &[Color], b: &[Color]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_edges() {
        assert!(matches!(Graph::new(2, [(0, 0)]), Err(Error::SelfLoop(0))));
        assert!(matches!(Graph::new(2, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1))));
        assert!(matches!(Graph::new(2, [(0, 2)]), Err(Error::EdgeOutOfRange { .. })));
    }

    #[test]
    fn conflicts_on_small_cases() {
        let tri = ColoredGraph::new(Graph::complete(3), 3, vec![0, 1, 2]).unwrap();
        assert!(tri.conflicts().is_empty());
        assert!(tri.is_proper());
        let edge = ColoredGraph::new(Graph::path(2), 1, vec![0, 0]).unwrap();
        assert_eq!(edge.conflicts(), vec![(0, 1)]);
    }

    #[test]
    fn coloring_validation() {
        assert!(matches!(
            ColoredGraph::new(Graph::path(2), 2, vec![0, 2]),
            Err(Error::ColorOutOfRange { vertex: 1, color: 2, r: 2 })
        ));
        assert!(matches!(ColoredGraph::new(Graph::path(2), 2, vec![0]), Err(Error::ColoringLength { .. })));
        assert!(matches!(ColoredGraph::new(Graph::path(2), 0, vec![0, 0]), Err(Error::ZeroColors)));
    }

    #[test]
    fn structural_predicates() {
        assert!(Graph::cycle(4).is_bipartite());
        assert!(!Graph::cycle(5).is_bipartite());
        assert!(!Graph::complete(5).planarity_bound_check());
        assert!(Graph::complete(4).planarity_bound_check());
        // K_{3,3}: 9 edges > 2*6 - 4
        let k33 = Graph::new(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
        assert!(!k33.planarity_bound_check());
    }

    #[test]
    fn bipartition_puts_smallest_vertex_in_a() {
        let g = Graph::new(5, [(1, 2), (3, 4), (0, 4)]).unwrap();
        let side = g.bipartition().unwrap();
        assert!(!side[0] && side[4] && !side[3]);
        assert!(!side[1] && side[2]);
    }
}

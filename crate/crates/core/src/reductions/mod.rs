//! Instance compilers: each turns a source problem instance into a repair
//! instance together with a trace attributing every emitted vertex to the
//! source object or gadget it came from.

mod cross;
pub mod gadget;
mod indset;
mod planar;
mod prext;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, Graph, Vertex};
use crate::instance::RepairInstance;

pub use cross::{cross_compose, cross_compose_certificate, cross_compose_size, Cnf, Cnf3Batch, CrossComposeOptions, Literal};
pub use indset::{indset_to_3swap, indset_to_3swap_size, lift_to_r, promise_augment, IndSetInstance};
pub use planar::{prext_to_planar_fix_promise, prext_to_planar_swap_promise, strip_promise_bipartite};
pub use prext::{prext_to_fix, prext_to_fix_size, prext_to_swap, PrExtInstance};

/// Source-object label -> emitted vertex ids. Every vertex of the emitted
/// graph belongs to exactly one record.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ReductionTrace {
    records: BTreeMap<String, Vec<Vertex>>,
}

impl ReductionTrace {
    pub fn get(&self, label: &str) -> Option<&[Vertex]> {
        self.records.get(label).map(Vec::as_slice)
    }

    /// The single vertex recorded under `label`.
    pub fn vertex(&self, label: &str) -> Result<Vertex> {
        match self.get(label) {
            Some([v]) => Ok(*v),
            _ => Err(Error::InvalidInput(format!("trace has no single vertex labeled {label:?}"))),
        }
    }

    pub fn records(&self) -> impl Iterator<Item = (&str, &[Vertex])> {
        self.records.iter().map(|(k, v)| (k.as_str(), v.as_slice()))
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub(crate) fn push(&mut self, label: impl Into<String>, v: Vertex) {
        self.records.entry(label.into()).or_default().push(v);
    }

    /// Checks that the records partition `0..n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        let mut seen = vec![false; n];
        for (label, verts) in &self.records {
            for &v in verts {
                if v >= n {
                    return Err(Error::Validation(format!("trace record {label:?} names vertex {v} >= {n}")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::Validation(format!("vertex {v} appears in more than one trace record")));
                }
            }
        }
        match seen.iter().position(|s| !s) {
            Some(v) => Err(Error::Validation(format!("vertex {v} missing from trace"))),
            None => Ok(()),
        }
    }

    fn without(&self, removed: &[bool], index: &[usize]) -> ReductionTrace {
        let mut out = ReductionTrace::default();
        for (label, verts) in &self.records {
            let kept: Vec<Vertex> = verts.iter().filter(|&&v| !removed[v]).map(|&v| index[v]).collect();
            if !kept.is_empty() {
                out.records.insert(label.clone(), kept);
            }
        }
        out
    }
}

/// A compiled instance and its trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub instance: RepairInstance,
    pub trace: ReductionTrace,
}

impl Reduction {
    /// Adds a properly colored `r_new`-clique and raises the color count.
    pub fn lift_to_r(&self, r_new: usize) -> Result<Reduction> {
        let instance = lift_to_r(&self.instance, r_new)?;
        let mut trace = self.trace.clone();
        for v in self.instance.graph.n()..instance.graph.n() {
            trace.push(format!("K{r_new}"), v);
        }
        Ok(Reduction { instance, trace })
    }
}

/// Incremental graph construction with trace bookkeeping.
#[derive(Default)]
pub(crate) struct Builder {
    colors: Vec<Color>,
    edges: Vec<(Vertex, Vertex)>,
    pendant: Vec<bool>,
    trace: ReductionTrace,
}

impl Builder {
    pub fn vertex(&mut self, label: impl Into<String>, color: Color) -> Vertex {
        let v = self.colors.len();
        self.colors.push(color);
        self.pendant.push(false);
        self.trace.push(label, v);
        v
    }

    pub fn edge(&mut self, u: Vertex, v: Vertex) {
        self.edges.push((u, v));
    }

    pub fn triangle(&mut self, a: Vertex, b: Vertex, c: Vertex) {
        self.edge(a, b);
        self.edge(b, c);
        self.edge(a, c);
    }

    /// Attaches `count` degree-one vertices of `color` to `anchor`.
    pub fn pendants(&mut self, label: &str, anchor: Vertex, color: Color, count: usize) {
        for _ in 0..count {
            let p = self.vertex(label, color);
            self.pendant[p] = true;
            self.edge(anchor, p);
        }
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn is_pendant(&self, v: Vertex) -> bool {
        self.pendant[v]
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn finish(self, r: usize) -> Result<(ColoredGraph, ReductionTrace)> {
        let graph = Graph::new(self.colors.len(), self.edges)?;
        let g = ColoredGraph::new(graph, r, self.colors)?;
        debug_assert!(self.trace.validate(g.n()).is_ok());
        Ok((g, self.trace))
    }
}

/// Deletes a set of vertices, renumbering the rest in order.
pub(crate) fn remove_vertices(red: &Reduction, doomed: &[Vertex]) -> Result<Reduction> {
    let g = &red.instance.graph;
    let n = g.n();
    let mut removed = vec![false; n];
    for &v in doomed {
        removed[v] = true;
    }
    let mut index = vec![usize::MAX; n];
    let mut next = 0;
    for v in 0..n {
        if !removed[v] {
            index[v] = next;
            next += 1;
        }
    }
    let edges = g
        .graph()
        .edges()
        .iter()
        .filter(|&&(u, v)| !removed[u] && !removed[v])
        .map(|&(u, v)| (index[u], index[v]));
    let coloring: Vec<Color> = (0..n).filter(|&v| !removed[v]).map(|v| g.color(v)).collect();
    let graph = ColoredGraph::new(Graph::new(next, edges)?, g.r(), coloring)?;
    let instance = RepairInstance { graph, ..red.instance.clone() };
    Ok(Reduction { instance, trace: red.trace.without(&removed, &index) })
}

use crate::error::{Error, Result};
use crate::graph::{Color, Graph, Vertex, MAX_COLORS};
use crate::instance::{RepairInstance, Variant};

use super::{Builder, Reduction};

/// Precoloring extension: can the precolored vertices' colors be extended to
/// a proper `r`-coloring of the whole graph?
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrExtInstance {
    pub graph: Graph,
    pub r: usize,
    /// `Some(c)` on precolored vertices.
    pub precoloring: Vec<Option<Color>>,
}

impl PrExtInstance {
    pub fn new(graph: Graph, r: usize, precoloring: Vec<Option<Color>>) -> Result<Self> {
        let inst = PrExtInstance { graph, r, precoloring };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        if self.r == 0 {
            return Err(Error::ZeroColors);
        }
        if self.r > MAX_COLORS {
            return Err(Error::Validation(format!("color count {} exceeds {MAX_COLORS}", self.r)));
        }
        if self.precoloring.len() != self.graph.n() {
            return Err(Error::ColoringLength { expected: self.graph.n(), got: self.precoloring.len() });
        }
        for (v, c) in self.precoloring.iter().enumerate() {
            if let Some(c) = *c {
                if c as usize >= self.r {
                    return Err(Error::ColorOutOfRange { vertex: v, color: c as usize, r: self.r });
                }
            }
        }
        Ok(())
    }

    /// The precolored set W, ascending.
    pub fn precolored(&self) -> Vec<Vertex> {
        (0..self.graph.n()).filter(|&v| self.precoloring[v].is_some()).collect()
    }

    /// The uncolored set V \ W, ascending.
    pub fn free(&self) -> Vec<Vertex> {
        (0..self.graph.n()).filter(|&v| self.precoloring[v].is_none()).collect()
    }

    /// No edge joins two vertices precolored alike.
    pub fn precoloring_is_proper(&self) -> bool {
        self.graph.edges().iter().all(|&(u, v)| match (self.precoloring[u], self.precoloring[v]) {
            (Some(a), Some(b)) => a != b,
            _ => true,
        })
    }

    pub fn degree_one_precolored(&self) -> bool {
        self.precolored().iter().all(|&w| self.graph.degree(w) == 1)
    }
}

/// `n + |W|(r-1)(k'+1)` with `k' = |V \ W|`.
pub fn prext_to_fix_size(src: &PrExtInstance) -> usize {
    let k = src.free().len();
    src.graph.n() + src.precolored().len() * (src.r - 1) * (k + 1)
}

fn compile(src: &PrExtInstance) -> Builder {
    let k = src.free().len();
    let mut b = Builder::default();
    for v in 0..src.graph.n() {
        b.vertex(format!("v{v}"), src.precoloring[v].unwrap_or(0));
    }
    for &(u, v) in src.graph.edges() {
        b.edge(u, v);
    }
    for w in src.precolored() {
        let cw = src.precoloring[w].unwrap();
        for c in (0..src.r as Color).filter(|&c| c != cw) {
            b.pendants(&format!("P[v{w}]"), w, c, k + 1);
        }
    }
    b
}

/// Pendants force each precolored vertex to keep its color; the free vertices
/// start at color 0 and the budget is their count.
pub fn prext_to_fix(src: &PrExtInstance) -> Result<Reduction> {
    src.validate()?;
    let k = src.free().len();
    let (graph, trace) = compile(src).finish(src.r)?;
    assert_eq!(graph.n(), prext_to_fix_size(src));
    Ok(Reduction { instance: RepairInstance::new(graph, k, Variant::Fix), trace })
}

/// As [`prext_to_fix`], plus `k'` isolated vertices of every color to supply
/// swap partners.
pub fn prext_to_swap(src: &PrExtInstance) -> Result<Reduction> {
    src.validate()?;
    let k = src.free().len();
    let mut b = compile(src);
    for c in 0..src.r as Color {
        for _ in 0..k {
            b.vertex(format!("I[{c}]"), c);
        }
    }
    let (graph, trace) = b.finish(src.r)?;
    assert_eq!(graph.n(), prext_to_fix_size(src) + src.r * k);
    Ok(Reduction { instance: RepairInstance::new(graph, k, Variant::Swap), trace })
}

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, Graph};
use crate::instance::{RepairInstance, Variant};

use super::{Builder, Reduction, ReductionTrace};

/// Does the graph have an independent set of size `k`?
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndSetInstance {
    pub graph: Graph,
    pub k: usize,
}

impl IndSetInstance {
    pub fn new(graph: Graph, k: usize) -> Result<Self> {
        let inst = IndSetInstance { graph, k };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k > self.graph.n() {
            return Err(Error::InvalidInput(format!("k = {} exceeds n = {}", self.k, self.graph.n())));
        }
        Ok(())
    }
}

/// `n + 3k + 3n + 2(k+1)n + 3(k+1)n`.
pub fn indset_to_3swap_size(n: usize, k: usize) -> usize {
    n + 3 * k + 3 * n + 2 * (k + 1) * n + 3 * (k + 1) * n
}

/// Source vertices `u_i` (color 0) each own a triangle `C_i` whose `b`
/// corner sees `u_i` and whose `c` corner sees the later neighbors of `u_i`.
/// The `k` triangles colored `(2, 1, 1)` hold the only conflicts; fixing one
/// costs a swap with some `u_i`, plus a swap inside `C_i`.
pub fn indset_to_3swap(src: &IndSetInstance) -> Result<Reduction> {
    src.validate()?;
    let (n, k) = (src.graph.n(), src.k);
    if k == 0 {
        return Err(Error::InvalidInput("independent-set size must be at least 1".into()));
    }
    let mut b = Builder::default();
    let u: Vec<_> = (0..n).map(|i| b.vertex(format!("u{i}"), 0)).collect();
    for j in 0..k {
        let t = [b.vertex(format!("a{j}"), 2), b.vertex(format!("b{j}"), 1), b.vertex(format!("c{j}"), 1)];
        b.triangle(t[0], t[1], t[2]);
    }
    let mut corners = Vec::with_capacity(n);
    for i in 0..n {
        let ua = b.vertex(format!("ua{i}"), 0);
        let ub = b.vertex(format!("ub{i}"), 1);
        let uc = b.vertex(format!("uc{i}"), 2);
        b.triangle(ua, ub, uc);
        b.pendants(&format!("P[ua{i}]"), ua, 1, k + 1);
        b.pendants(&format!("P[ua{i}]"), ua, 2, k + 1);
        b.edge(u[i], ub);
        corners.push(uc);
    }
    for &(i, j) in src.graph.edges() {
        b.edge(u[j], corners[i]);
    }
    for i in 0..n {
        for j in 0..=k {
            let label = format!("t{i}.{j}");
            let ta = b.vertex(label.clone(), 2);
            let tb = b.vertex(label.clone(), 1);
            let tc = b.vertex(label, 0);
            b.triangle(ta, tb, tc);
            b.edge(u[i], ta);
        }
    }
    let (graph, trace) = b.finish(3)?;
    assert_eq!(graph.n(), indset_to_3swap_size(n, k));
    Ok(Reduction { instance: RepairInstance::new(graph, 2 * k, Variant::Swap), trace })
}

/// Adds a disjoint clique on `r_new` vertices colored `0..r_new`.
pub fn lift_to_r(inst: &RepairInstance, r_new: usize) -> Result<RepairInstance> {
    let r = inst.graph.r();
    if r_new <= r || r_new < 3 {
        return Err(Error::InvalidTarget { requested: r_new, current: r });
    }
    let g = &inst.graph;
    let n = g.n();
    let clique = (n..n + r_new).flat_map(|u| (u + 1..n + r_new).map(move |v| (u, v)));
    let graph = Graph::new(n + r_new, g.graph().edges().iter().copied().chain(clique))?;
    let mut coloring = g.coloring().to_vec();
    coloring.extend(0..r_new as Color);
    Ok(RepairInstance { graph: ColoredGraph::new(graph, r_new, coloring)?, ..inst.clone() })
}

/// Appends `n_src` double stars with `k_src + 1` arms, colored center 0,
/// middle 1, tip 2, and a properly colored `r`-clique. The stars pad the
/// color classes so that the coloring becomes a permutation of a proper one.
pub fn promise_augment(red: &Reduction, n_src: usize, k_src: usize) -> Result<Reduction> {
    let g = &red.instance.graph;
    let r = g.r();
    if r < 3 {
        return Err(Error::InvalidInput("promise augmentation needs at least 3 colors".into()));
    }
    let mut b = Builder::default();
    for v in 0..g.n() {
        b.vertex(format!("#{v}"), g.color(v));
    }
    for &(u, v) in g.graph().edges() {
        b.edge(u, v);
    }
    for i in 0..n_src {
        let label = format!("S{i}");
        let s = b.vertex(label.clone(), 0);
        for _ in 0..=k_src {
            let q = b.vertex(label.clone(), 1);
            let q2 = b.vertex(label.clone(), 2);
            b.edge(s, q);
            b.edge(q, q2);
        }
    }
    let clique: Vec<_> = (0..r).map(|c| b.vertex("K", c as Color)).collect();
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            b.edge(u, v);
        }
    }
    let (graph, extra) = b.finish(r)?;
    assert_eq!(graph.n(), g.n() + n_src * (2 * k_src + 3) + r);
    let mut trace: ReductionTrace = red.trace.clone();
    for (label, verts) in extra.records() {
        if !label.starts_with('#') {
            for &v in verts {
                trace.push(label, v);
            }
        }
    }
    let instance = RepairInstance { graph, ..red.instance.clone() }.with_promise(true);
    Ok(Reduction { instance, trace })
}

use crate::error::{Error, Result};
use crate::graph::{Color, Vertex};
use crate::instance::{RepairInstance, Variant};

use super::{remove_vertices, Builder, Reduction, PrExtInstance};

fn third(a: Color, b: Color) -> Color {
    3 - a - b
}

fn check_source(src: &PrExtInstance) -> Result<Vec<bool>> {
    src.validate()?;
    if src.r != 3 {
        return Err(Error::InvalidInput(format!("planar reductions need r = 3, got {}", src.r)));
    }
    let side = src.graph.bipartition().ok_or(Error::NotBipartite)?;
    if let Some(&w) = src.precolored().iter().find(|&&w| src.graph.degree(w) != 1) {
        return Err(Error::PrecoloredDegreeNotOne(w));
    }
    Ok(side)
}

/// Output size: `n + 2|X| + 2(h+1)|W| + h * #{w needing s'} + 2`, or `+ 3`
/// when `W` is empty.
fn expected_size(src: &PrExtInstance, side: &[bool]) -> usize {
    let (w, h) = (src.precolored(), src.free().len());
    let with_prime = w
        .iter()
        .filter(|&&v| {
            let c = src.precoloring[v].unwrap();
            if side[v] {
                c != 1
            } else {
                c != 0
            }
        })
        .count();
    let tri = if w.is_empty() { 3 } else { 2 };
    src.graph.n() + 2 * h + 2 * (h + 1) * w.len() + h * with_prime + tri
}

fn compile(src: &PrExtInstance, fix: bool) -> Result<Reduction> {
    let side = check_source(src)?;
    let g = &src.graph;
    let h = src.free().len();
    let mut b = Builder::default();
    for v in 0..g.n() {
        let c = match src.precoloring[v] {
            Some(c) => c,
            None => g
                .neighbors(v)
                .iter()
                .find_map(|&u| src.precoloring[u])
                .unwrap_or(if side[v] { 1 } else { 0 }),
        };
        b.vertex(format!("v{v}"), c);
    }
    for &(u, v) in g.edges() {
        b.edge(u, v);
    }
    for x in src.free() {
        let i = b.color(x);
        let x1 = b.vertex(format!("x1[v{x}]"), (i + 1) % 3);
        let x2 = b.vertex(format!("x2[v{x}]"), (i + 2) % 3);
        if fix {
            b.edge(x1, x2);
        } else {
            b.edge(x, x1);
            b.edge(x, x2);
        }
    }
    let mut anchor = None;
    for w in src.precolored() {
        let i = src.precoloring[w].unwrap();
        let (s_color, t_color, prime) = match (side[w], i) {
            (false, i) if i != 0 => (0, third(0, i), true),
            (true, i) if i != 1 => (1, third(1, i), true),
            (_, i) => ((i + 1) % 3, (i + 2) % 3, false),
        };
        let s: Vec<Vertex> = (0..=h).map(|_| b.vertex(format!("s[v{w}]"), s_color)).collect();
        let t: Vec<Vertex> = (0..=h).map(|_| b.vertex(format!("t[v{w}]"), t_color)).collect();
        for &p in s.iter().chain(&t) {
            b.edge(w, p);
        }
        if prime {
            for &sj in &s[..h] {
                let sp = b.vertex(format!("s'[v{w}]"), i);
                b.edge(sj, sp);
            }
        }
        anchor.get_or_insert(t[0]);
    }
    match anchor {
        Some(v) => {
            let cv = b.color(v);
            let r = b.vertex("r", (cv + 1) % 3);
            let r2 = b.vertex("r'", (cv + 2) % 3);
            b.triangle(v, r, r2);
        }
        None => {
            // Without precolored vertices there is no pendant to hang the
            // triangle on; a disjoint one serves the same purpose.
            let v = b.vertex("r*", 0);
            let r = b.vertex("r", 1);
            let r2 = b.vertex("r'", 2);
            b.triangle(v, r, r2);
        }
    }
    let (graph, trace) = b.finish(3)?;
    assert_eq!(graph.n(), expected_size(src, &side));
    let variant = if fix { Variant::Fix } else { Variant::Swap };
    Ok(Reduction { instance: RepairInstance::new(graph, h, variant).with_promise(true), trace })
}

/// Planar 3-precoloring extension with degree-one precolored vertices to
/// 3-swap under the promise, budget `h = |V \ W|`.
pub fn prext_to_planar_swap_promise(src: &PrExtInstance) -> Result<Reduction> {
    compile(src, false)
}

/// The recoloring version: each free vertex's companions form an edge of
/// their own instead of hanging off the vertex.
pub fn prext_to_planar_fix_promise(src: &PrExtInstance) -> Result<Reduction> {
    compile(src, true)
}

/// Drops the triangle gadget, the only odd cycle, and the promise flag.
pub fn strip_promise_bipartite(red: &Reduction) -> Result<Reduction> {
    let mut doomed = Vec::new();
    for label in ["r", "r'", "r*"] {
        if let Some(vs) = red.trace.get(label) {
            doomed.extend_from_slice(vs);
        }
    }
    if doomed.is_empty() {
        return Err(Error::InvalidInput("instance has no triangle gadget to strip".into()));
    }
    let mut out = remove_vertices(red, &doomed)?;
    out.instance.promise = false;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn two_vertex_expansion() {
        // w = 0 (side A, color 2), x = 1 (free).
        let src = PrExtInstance::new(Graph::path(2), 3, vec![Some(2), None]).unwrap();
        let red = prext_to_planar_swap_promise(&src).unwrap();
        let g = &red.instance.graph;
        assert_eq!(red.instance.k, 1);
        assert_eq!(g.color(1), 2);
        let x1 = red.trace.vertex("x1[v1]").unwrap();
        let x2 = red.trace.vertex("x2[v1]").unwrap();
        assert_eq!((g.color(x1), g.color(x2)), (0, 1));
        let s = red.trace.get("s[v0]").unwrap();
        let t = red.trace.get("t[v0]").unwrap();
        let sp = red.trace.get("s'[v0]").unwrap();
        assert_eq!((s.len(), t.len(), sp.len()), (2, 2, 1));
        assert!(s.iter().all(|&v| g.color(v) == 0));
        assert!(t.iter().all(|&v| g.color(v) == 1));
        assert!(sp.iter().all(|&v| g.color(v) == 2));
        red.trace.validate(g.n()).unwrap();

        let fix = prext_to_planar_fix_promise(&src).unwrap();
        let fg = fix.instance.graph.graph();
        assert_eq!(fg.degree(1), g.graph().degree(1) - 2);
        assert!(fg.has_edge(x1, x2));
    }

    #[test]
    fn errors() {
        let odd = PrExtInstance::new(Graph::complete(3), 3, vec![None; 3]).unwrap();
        assert!(matches!(prext_to_planar_swap_promise(&odd), Err(Error::NotBipartite)));
        let deg2 = PrExtInstance::new(Graph::path(3), 3, vec![None, Some(0), None]).unwrap();
        assert!(matches!(prext_to_planar_fix_promise(&deg2), Err(Error::PrecoloredDegreeNotOne(1))));
    }

    #[test]
    fn strip_is_bipartite() {
        let src = PrExtInstance::new(Graph::path(4), 3, vec![Some(1), None, None, Some(0)]).unwrap();
        for red in [prext_to_planar_swap_promise(&src).unwrap(), prext_to_planar_fix_promise(&src).unwrap()] {
            assert!(!red.instance.graph.graph().is_bipartite());
            let s = strip_promise_bipartite(&red).unwrap();
            assert!(s.instance.graph.graph().is_bipartite());
            assert!(s.instance.graph.graph().planarity_bound_check());
            assert!(!s.instance.promise);
            assert_eq!(s.instance.graph.n(), red.instance.graph.n() - 2);
            s.trace.validate(s.instance.graph.n()).unwrap();
        }
    }

    #[test]
    fn fully_precolored_is_proper() {
        let src = PrExtInstance::new(Graph::path(2), 3, vec![Some(0), Some(1)]).unwrap();
        let red = prext_to_planar_swap_promise(&src).unwrap();
        assert_eq!(red.instance.k, 0);
        assert!(red.instance.graph.is_proper());
    }
}

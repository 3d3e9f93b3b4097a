//! Brute-force oracles for the source problems, certificate replays for the
//! constructive directions of the reductions, and the equivalence harness.

pub mod enumerate;
mod sweep;

use crate::chromatic::Limits;
use crate::error::{Error, Result};
use crate::graph::{Color, Vertex};
use crate::instance::{Certificate, Move};
use crate::reductions::{cross_compose_certificate, gadget, Cnf, Cnf3Batch, IndSetInstance, PrExtInstance, Reduction};

pub use sweep::{equivalence_sweep, Family, Record, SweepConfig, SweepMode, EquivalenceReport, Summary};

fn cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        return Err(Error::SearchCapExceeded { what, size, cap });
    }
    Ok(())
}

/// A proper `r`-coloring extending the precoloring, if one exists.
/// Improper precolorings are rejected rather than answered.
pub fn prext_extension(src: &PrExtInstance, limits: &Limits) -> Result<Option<Vec<Color>>> {
    src.validate()?;
    cap("precoloring extension oracle", src.graph.n(), limits.oracle_vertices)?;
    if !src.precoloring_is_proper() {
        return Err(Error::InvalidInput("precoloring is not proper".into()));
    }
    let g = &src.graph;
    let free = src.free();
    let mut colors: Vec<Option<Color>> = src.precoloring.clone();
    fn rec(i: usize, free: &[Vertex], g: &crate::graph::Graph, r: usize, colors: &mut Vec<Option<Color>>) -> bool {
        let Some(&v) = free.get(i) else { return true };
        for c in 0..r as Color {
            if g.neighbors(v).iter().all(|&u| colors[u] != Some(c)) {
                colors[v] = Some(c);
                if rec(i + 1, free, g, r, colors) {
                    return true;
                }
            }
        }
        colors[v] = None;
        false
    }
    Ok(rec(0, &free, g, src.r, &mut colors).then(|| colors.into_iter().map(|c| c.unwrap()).collect()))
}

pub fn oracle_prext(src: &PrExtInstance, limits: &Limits) -> Result<bool> {
    prext_extension(src, limits).map(|c| c.is_some())
}

/// The lexicographically first independent set of size `k`, if any.
pub fn find_independent_set(src: &IndSetInstance, limits: &Limits) -> Result<Option<Vec<Vertex>>> {
    src.validate()?;
    cap("independent set oracle", src.graph.n(), limits.oracle_vertices)?;
    fn rec(start: usize, k: usize, g: &crate::graph::Graph, set: &mut Vec<Vertex>) -> bool {
        if set.len() == k {
            return true;
        }
        for v in start..g.n() {
            if g.n() - v < k - set.len() {
                break;
            }
            if set.iter().all(|&u| !g.has_edge(u, v)) {
                set.push(v);
                if rec(v + 1, k, g, set) {
                    return true;
                }
                set.pop();
            }
        }
        false
    }
    let mut set = Vec::new();
    Ok(rec(0, src.k, &src.graph, &mut set).then_some(set))
}

pub fn oracle_indset(src: &IndSetInstance, limits: &Limits) -> Result<bool> {
    find_independent_set(src, limits).map(|s| s.is_some())
}

/// The first satisfying assignment in binary counting order (variable 0 is
/// the low bit, `true` = 1).
pub fn find_assignment(f: &Cnf, limits: &Limits) -> Result<Option<Vec<bool>>> {
    f.validate()?;
    cap("satisfiability oracle", f.n, limits.oracle_vertices)?;
    Ok((0u64..1 << f.n)
        .map(|bits| (0..f.n).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>())
        .find(|a| f.satisfied_by(a)))
}

pub fn oracle_3sat(f: &Cnf, limits: &Limits) -> Result<bool> {
    find_assignment(f, limits).map(|a| a.is_some())
}

/// Two swaps per chosen vertex `u_i`: first with the conflicted corner `c_j`
/// of the `j`-th triangle, then between the corners `ub_i` and `uc_i`.
pub fn replay_indset_certificate(src: &IndSetInstance, witness: &[Vertex], red: &Reduction) -> Result<Certificate> {
    let mut set = witness.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.len() != src.k || set.len() != witness.len() {
        return Err(Error::WitnessInvalid(format!("expected {} distinct vertices, got {witness:?}", src.k)));
    }
    if let Some(&v) = set.iter().find(|&&v| v >= src.graph.n()) {
        return Err(Error::WitnessInvalid(format!("vertex {v} out of range")));
    }
    for (i, &u) in set.iter().enumerate() {
        if let Some(&v) = set[i + 1..].iter().find(|&&v| src.graph.has_edge(u, v)) {
            return Err(Error::WitnessInvalid(format!("{u} and {v} are adjacent")));
        }
    }
    let t = &red.trace;
    let mut moves = Vec::with_capacity(2 * set.len());
    for (j, &i) in set.iter().enumerate() {
        moves.push(Move::Swap { u: t.vertex(&format!("c{j}"))?, v: t.vertex(&format!("u{i}"))? });
        moves.push(Move::Swap { u: t.vertex(&format!("ub{i}"))?, v: t.vertex(&format!("uc{i}"))? });
    }
    Ok(Certificate::new(moves))
}

/// The propagate/assign/repair schedule for a satisfiable member `s`. Fails
/// if the assignment does not satisfy formula `s` or a clause gadget needs
/// more than 9 recolorings.
pub fn replay_crosscompose_certificate(
    batch: &Cnf3Batch,
    s: usize,
    assignment: &[bool],
    red: &Reduction,
) -> Result<Certificate> {
    let f = batch.formulas.get(s).ok_or_else(|| Error::WitnessInvalid(format!("no formula {s}")))?;
    if assignment.len() != f.n || !f.satisfied_by(assignment) {
        return Err(Error::WitnessInvalid(format!("assignment does not satisfy formula {s}")));
    }
    let (cert, costs) = cross_compose_certificate(batch, red, s, assignment)?;
    if let Some((j, c)) = costs.iter().enumerate().find(|(_, &c)| c > 9) {
        return Err(Error::WitnessInvalid(format!("clause {j} needs {c} recolorings")));
    }
    Ok(cert)
}

/// Outcome of the exhaustive clause-gadget check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetReport {
    /// All literal neighbors false: every proper coloring has `r = 0`.
    pub p1: bool,
    /// Some literal neighbor true: a proper coloring with `r != 0` exists,
    /// for each of the 15 such boundaries.
    pub p2: bool,
    /// Each frozen table row is proper for its initial boundary, and the
    /// table search reproduces the frozen table.
    pub table: bool,
    /// Worst repair cost per table row.
    pub repair_costs: [usize; 8],
    /// Boundaries using color 2 on some literal neighbor, with whether an
    /// anchored proper coloring exists. Recorded only.
    pub other: Vec<([Color; 4], bool)>,
}

impl GadgetReport {
    pub fn passed(&self) -> bool {
        self.p1 && self.p2 && self.table && self.repair_costs.iter().all(|&c| c <= 9)
    }
}

pub fn verify_gadget_p1_p2() -> GadgetReport {
    let all: Vec<[Color; gadget::SIZE]> = gadget::all_colorings().collect();
    let p1 = all
        .iter()
        .filter(|c| gadget::is_proper(c, &[0; 4], false))
        .all(|c| c[gadget::R] == 0);
    let p2 = (1..16).all(|b| {
        let lits = [(b >> 3 & 1) as Color, (b >> 2 & 1) as Color, (b >> 1 & 1) as Color, (b & 1) as Color];
        all.iter().any(|c| gadget::is_proper(c, &lits, true))
    });
    let (table, repair_costs) = gadget::search_table();
    let rows_proper =
        (0..8).all(|p| gadget::is_proper(&gadget::TABLE[p], &gadget::literal_colors(p, gadget::TRUE), true));
    let mut other = Vec::new();
    for code in 0..81 {
        let lits = [code / 27 % 3, code / 9 % 3, code / 3 % 3, code % 3].map(|x| x as Color);
        if lits.contains(&2) {
            other.push((lits, all.iter().any(|c| gadget::is_proper(c, &lits, true))));
        }
    }
    GadgetReport { p1, p2, table: rows_proper && table == gadget::TABLE, repair_costs, other }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::reductions::{cross_compose, indset_to_3swap, CrossComposeOptions, Literal};

    #[test]
    fn prext_oracle_examples() {
        let l = Limits::default();
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let src = PrExtInstance::new(star, 3, vec![None, Some(0), Some(1), Some(2)]).unwrap();
        assert!(!oracle_prext(&src, &l).unwrap());
        let free = PrExtInstance::new(Graph::complete(3), 3, vec![None; 3]).unwrap();
        assert!(oracle_prext(&free, &l).unwrap());
        let k4 = PrExtInstance::new(Graph::complete(4), 3, vec![None; 4]).unwrap();
        assert!(!oracle_prext(&k4, &l).unwrap());
        let bad = PrExtInstance::new(Graph::complete(3), 3, vec![Some(1), Some(1), None]).unwrap();
        assert!(matches!(oracle_prext(&bad, &l), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn indset_and_sat_oracles() {
        let l = Limits::default();
        assert!(oracle_indset(&IndSetInstance::new(Graph::empty(5), 5).unwrap(), &l).unwrap());
        assert!(!oracle_indset(&IndSetInstance::new(Graph::complete(4), 2).unwrap(), &l).unwrap());
        let f = Cnf::new(
            3,
            vec![
                vec![Literal::pos(0), Literal::pos(1), Literal::pos(2)],
                vec![Literal::neg(0), Literal::neg(1), Literal::neg(2)],
            ],
        )
        .unwrap();
        assert!(oracle_3sat(&f, &l).unwrap());
        let big = Cnf::new(30, vec![vec![Literal::pos(0)]]).unwrap();
        assert!(matches!(oracle_3sat(&big, &l), Err(Error::SearchCapExceeded { .. })));
    }

    #[test]
    fn indset_replay() {
        let src = IndSetInstance::new(Graph::empty(1), 1).unwrap();
        let red = indset_to_3swap(&src).unwrap();
        let cert = replay_indset_certificate(&src, &[0], &red).unwrap();
        assert_eq!(cert.len(), 2);
        assert!(red.instance.accepts(&cert));
        let src = IndSetInstance::new(Graph::cycle(4), 2).unwrap();
        let red = indset_to_3swap(&src).unwrap();
        assert!(matches!(replay_indset_certificate(&src, &[0, 1], &red), Err(Error::WitnessInvalid(_))));
        let cert = replay_indset_certificate(&src, &[2, 0], &red).unwrap();
        assert_eq!(cert.len(), 4);
        assert!(red.instance.accepts(&cert));
    }

    #[test]
    fn crosscompose_replay() {
        let sat = Cnf::new(2, vec![vec![Literal::pos(0), Literal::neg(1)], vec![Literal::pos(1)]]).unwrap();
        let unsat = Cnf::new(2, vec![vec![Literal::pos(0)], vec![Literal::neg(0)]]).unwrap();
        let batch = Cnf3Batch::new(vec![unsat, sat]).unwrap();
        let red = cross_compose(&batch, CrossComposeOptions::default()).unwrap();
        assert!(replay_crosscompose_certificate(&batch, 0, &[true, true], &red).is_err());
        let cert = replay_crosscompose_certificate(&batch, 1, &[true, true], &red).unwrap();
        assert!(cert.len() <= batch.budget());
        assert!(red.instance.accepts(&cert));
    }

    #[test]
    fn gadget_properties() {
        let report = verify_gadget_p1_p2();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.other.len(), 81 - 16);
    }
}

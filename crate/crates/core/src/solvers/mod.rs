//! Exact decision and optimization procedures for recoloring and swapping.

mod bfs;
mod bounded;
mod fix;
mod promise;
mod swap;

use std::fmt;

use crate::chromatic::Limits;
use crate::error::Result;
use crate::instance::{Certificate, RepairInstance, Variant};

pub use bfs::adjacent_swap_optimum;
pub use bounded::{bounded_search, MoveSet};
pub use fix::{fix_branch, fix_optimum};
pub use promise::{promise_check, PromiseReport, PromiseViolation};
pub use swap::{swap_branch, swap_distance_to, swap_optimum, ExchangeDigraph};

/// Minimum number of moves, or unreachable when no sequence of moves of the
/// given kind ends in a proper coloring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Optimum {
    Finite(usize),
    Unreachable,
}

impl Optimum {
    pub fn within(self, k: usize) -> bool {
        matches!(self, Optimum::Finite(x) if x <= k)
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Optimum::Finite(x) => Some(x),
            Optimum::Unreachable => None,
        }
    }
}

impl fmt::Display for Optimum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Optimum::Finite(x) => write!(f, "{x}"),
            Optimum::Unreachable => f.write_str("unreachable"),
        }
    }
}

/// Result of an optimization solver. When present, the certificate replays
/// to a proper coloring in exactly `optimum` moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub optimum: Optimum,
    pub certificate: Option<Certificate>,
}

impl SolveResult {
    pub fn decision(&self, k: usize) -> bool {
        self.optimum.within(k)
    }
}

/// Result of a budgeted decision procedure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub yes: bool,
    pub certificate: Option<Certificate>,
}

/// Solver strategy for [`solve`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Exact optimum for the instance's variant.
    Auto,
    /// Budgeted branching (decision only, plus a certificate on YES).
    Branch,
    /// Exhaustive search over all move sequences up to the budget.
    Brute,
    /// Breadth-first search over coloring states.
    BfsOracle,
}

/// Outcome of solving a [`RepairInstance`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub decision: bool,
    pub optimum: Option<Optimum>,
    pub certificate: Option<Certificate>,
}

/// Runs the solver matching the instance variant.
pub fn solve(inst: &RepairInstance, mode: Mode, limits: &Limits) -> Result<Report> {
    inst.validate()?;
    let g = &inst.graph;
    if inst.adjacent_only || mode == Mode::BfsOracle {
        let res = match (inst.variant, inst.adjacent_only) {
            (Variant::Swap, true) => adjacent_swap_optimum(g, limits)?,
            (Variant::Swap, false) => bfs::swap_bfs_optimum(g, limits)?,
            (Variant::Fix, _) => bfs::fix_bfs_optimum(g, limits)?,
        };
        return Ok(Report { decision: res.decision(inst.k), optimum: Some(res.optimum), certificate: res.certificate });
    }
    match mode {
        Mode::Branch => {
            let d = match inst.variant {
                Variant::Fix => fix_branch(g, inst.k),
                Variant::Swap => swap_branch(g, inst.k),
            };
            Ok(Report { decision: d.yes, optimum: None, certificate: d.certificate })
        }
        Mode::Brute => {
            let cert = bounded_search(g, inst.variant, inst.k, MoveSet::All);
            Ok(Report { decision: cert.is_some(), optimum: None, certificate: cert })
        }
        _ => {
            let res = match inst.variant {
                Variant::Fix => fix_optimum(g, limits)?,
                Variant::Swap => swap_optimum(g, limits)?,
            };
            Ok(Report { decision: res.decision(inst.k), optimum: Some(res.optimum), certificate: res.certificate })
        }
    }
}

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::chromatic::Limits;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{RepairInstance, Variant};
use crate::reductions::{
    indset_to_3swap, prext_to_fix, prext_to_planar_fix_promise, prext_to_planar_swap_promise, prext_to_swap,
    promise_augment, strip_promise_bipartite, IndSetInstance, PrExtInstance,
};
use crate::solvers::{bounded_search, fix_branch, promise_check, swap_branch, MoveSet};

use super::enumerate::{precolorings, small_graphs};
use super::{find_independent_set, oracle_prext, replay_indset_certificate};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    PrextFix,
    PrextSwap,
    Indset3Swap,
    PromiseAugment,
    PlanarSwapPromise,
    PlanarFixPromise,
    StripSwap,
    StripFix,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::PrextFix,
        Family::PrextSwap,
        Family::Indset3Swap,
        Family::PromiseAugment,
        Family::PlanarSwapPromise,
        Family::PlanarFixPromise,
        Family::StripSwap,
        Family::StripFix,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::PrextFix => "prext-fix",
            Family::PrextSwap => "prext-swap",
            Family::Indset3Swap => "indset-3swap",
            Family::PromiseAugment => "promise-augment",
            Family::PlanarSwapPromise => "planar-swap-promise",
            Family::PlanarFixPromise => "planar-fix-promise",
            Family::StripSwap => "strip-swap",
            Family::StripFix => "strip-fix",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown sweep family {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "mode")]
pub enum SweepMode {
    Exhaustive,
    Sampled { count: usize },
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub max_n: usize,
    /// Largest independent-set size for the IndSet families.
    pub max_k: usize,
    pub mode: SweepMode,
    pub seed: u64,
    pub limits: Limits,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { max_n: 5, max_k: 1, mode: SweepMode::Exhaustive, seed: 0x5eed, limits: Limits::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub index: usize,
    pub source: String,
    pub oracle: bool,
    /// `None` when the target could not be decided.
    pub target: Option<bool>,
    pub agree: bool,
    /// Failed side conditions and errors.
    pub notes: Vec<String>,
    pub micros: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub agree: usize,
    pub disagree: usize,
    pub errors: usize,
    pub yes: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub family: Family,
    pub seed: u64,
    pub mode: SweepMode,
    pub max_n: usize,
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.agree)
    }
}

#[derive(Clone, Debug)]
enum Source {
    PrExt(PrExtInstance),
    IndSet(IndSetInstance),
}

fn describe_graph(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} edges=[{}]", g.n(), edges.join(","))
}

impl Source {
    fn describe(&self) -> String {
        match self {
            Source::PrExt(p) => {
                let pre: Vec<String> =
                    p.precoloring.iter().map(|c| c.map_or("-".to_string(), |c| c.to_string())).collect();
                format!("{} pre=[{}]", describe_graph(&p.graph), pre.join(","))
            }
            Source::IndSet(s) => format!("{} k={}", describe_graph(&s.graph), s.k),
        }
    }
}

fn sources(family: Family, cfg: &SweepConfig) -> Vec<Source> {
    let graphs = small_graphs(cfg.max_n);
    match family {
        Family::Indset3Swap | Family::PromiseAugment => graphs
            .into_iter()
            .flat_map(|g| {
                let top = cfg.max_k.min(g.n());
                (1..=top).map(move |k| Source::IndSet(IndSetInstance { graph: g.clone(), k }))
            })
            .collect(),
        _ => {
            let planar = !matches!(family, Family::PrextFix | Family::PrextSwap);
            graphs
                .into_iter()
                .filter(Graph::is_bipartite)
                .flat_map(|g| {
                    let allowed: Vec<bool> = (0..g.n()).map(|v| !planar || g.degree(v) == 1).collect();
                    precolorings(&g, 3, &allowed)
                })
                .map(Source::PrExt)
                .collect()
        }
    }
}

/// Decides the target instance by branching and checks any certificate.
fn decide(inst: &RepairInstance, notes: &mut Vec<String>) -> bool {
    let d = match inst.variant {
        Variant::Fix => fix_branch(&inst.graph, inst.k),
        Variant::Swap => swap_branch(&inst.graph, inst.k),
    };
    if let Some(cert) = &d.certificate {
        if !inst.accepts(cert) {
            notes.push("solver certificate rejected".into());
        }
    }
    d.yes
}

fn check_promise(inst: &RepairInstance, limits: &Limits, notes: &mut Vec<String>) -> Result<()> {
    let report = promise_check(inst, limits)?;
    if !report.holds() {
        notes.push(format!("promise violated: {:?}", report.violations));
    }
    Ok(())
}

fn run_one(family: Family, src: &Source, limits: &Limits, notes: &mut Vec<String>) -> Result<(bool, bool)> {
    match (family, src) {
        (Family::Indset3Swap | Family::PromiseAugment, Source::IndSet(s)) => {
            let witness = find_independent_set(s, limits)?;
            let mut red = indset_to_3swap(s)?;
            if family == Family::PromiseAugment {
                red = promise_augment(&red, s.graph.n(), s.k)?;
                check_promise(&red.instance, limits, notes)?;
            }
            let target = match &witness {
                Some(w) => {
                    let cert = replay_indset_certificate(s, w, &red)?;
                    if cert.len() != 2 * s.k {
                        notes.push(format!("replayed certificate has {} swaps", cert.len()));
                    }
                    red.instance.accepts(&cert)
                }
                None => decide(&red.instance, notes),
            };
            if red.instance.k <= 2 {
                let brute = bounded_search(&red.instance.graph, Variant::Swap, red.instance.k, MoveSet::All);
                if brute.is_some() != target {
                    notes.push("exhaustive search disagrees".into());
                }
            }
            Ok((witness.is_some(), target))
        }
        (_, Source::PrExt(p)) => {
            let oracle = oracle_prext(p, limits)?;
            let red = match family {
                Family::PrextFix => prext_to_fix(p)?,
                Family::PrextSwap => prext_to_swap(p)?,
                Family::PlanarSwapPromise | Family::StripSwap => prext_to_planar_swap_promise(p)?,
                _ => prext_to_planar_fix_promise(p)?,
            };
            let red = match family {
                Family::PlanarSwapPromise | Family::PlanarFixPromise => {
                    check_promise(&red.instance, limits, notes)?;
                    red
                }
                Family::StripSwap | Family::StripFix => {
                    let s = strip_promise_bipartite(&red)?;
                    let g = s.instance.graph.graph();
                    if !g.is_bipartite() {
                        notes.push("stripped output is not bipartite".into());
                    }
                    if !g.planarity_bound_check() {
                        notes.push("stripped output exceeds the bipartite planar edge bound".into());
                    }
                    s
                }
                _ => red,
            };
            red.trace.validate(red.instance.graph.n())?;
            Ok((oracle, decide(&red.instance, notes)))
        }
        _ => unreachable!("sources are generated per family"),
    }
}

/// Compares the source oracle with the target solver on every enumerated
/// (or a seeded sample of) source instance. Records are ordered by index.
pub fn equivalence_sweep(family: Family, cfg: &SweepConfig) -> EquivalenceReport {
    let mut all = sources(family, cfg);
    if let SweepMode::Sampled { count } = cfg.mode {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut picks = sample(&mut rng, all.len(), count.min(all.len())).into_vec();
        picks.sort_unstable();
        all = picks.into_iter().map(|i| all[i].clone()).collect();
    }
    let records: Vec<Record> = all
        .par_iter()
        .enumerate()
        .map(|(index, src)| {
            let start = Instant::now();
            let mut notes = Vec::new();
            let (oracle, target) = match run_one(family, src, &cfg.limits, &mut notes) {
                Ok((o, t)) => (o, Some(t)),
                Err(e) => {
                    notes.push(format!("error: {e}"));
                    (false, None)
                }
            };
            Record {
                index,
                source: src.describe(),
                oracle,
                target,
                agree: target == Some(oracle) && notes.is_empty(),
                notes,
                micros: start.elapsed().as_micros() as u64,
            }
        })
        .collect();
    let mut summary = Summary { total: records.len(), ..Summary::default() };
    for r in &records {
        match (r.agree, r.target) {
            (_, None) => summary.errors += 1,
            (true, _) => summary.agree += 1,
            (false, _) => summary.disagree += 1,
        }
        summary.yes += r.oracle as usize;
    }
    EquivalenceReport { family, seed: cfg.seed, mode: cfg.mode, max_n: cfg.max_n, records, summary }
}

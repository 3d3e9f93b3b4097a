//! Seeded random source instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph};
use crate::instance::{RepairInstance, Variant};
use crate::reductions::{Cnf, Cnf3Batch, IndSetInstance, Literal, PrExtInstance};
use crate::verify::enumerate::random_graph;

use super::Document;

/// Parameters for [`generate`]. `n` is the vertex (or variable) count.
#[derive(Clone, Debug)]
pub struct CorpusSpec {
    pub kind: String,
    pub n: usize,
    pub r: usize,
    pub count: usize,
    pub seed: u64,
}

fn random_coloring<R: Rng>(rng: &mut R, n: usize, r: usize) -> Vec<Color> {
    (0..n).map(|_| rng.gen_range(0..r) as Color).collect()
}

fn random_prext<R: Rng>(rng: &mut R, n: usize, r: usize) -> PrExtInstance {
    let graph = random_graph(rng, n);
    let mut pre: Vec<Option<Color>> = vec![None; n];
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for v in order {
        if rng.gen_bool(0.5) {
            let c = rng.gen_range(0..r) as Color;
            if graph.neighbors(v).iter().all(|&u| pre[u] != Some(c)) {
                pre[v] = Some(c);
            }
        }
    }
    PrExtInstance { graph, r, precoloring: pre }
}

fn random_cnf<R: Rng>(rng: &mut R, n: usize, m: usize) -> Cnf {
    let clauses = (0..m)
        .map(|_| {
            let len = rng.gen_range(1..=3);
            (0..len).map(|_| Literal { var: rng.gen_range(0..n), positive: rng.gen_bool(0.5) }).collect()
        })
        .collect();
    Cnf { n, clauses }
}

/// `count` instances of `kind` (`repair-fix`, `repair-swap`, `prext`,
/// `indset`, `cnf3batch`), identical for identical specs.
pub fn generate(spec: &CorpusSpec) -> Result<Vec<Document>> {
    if spec.n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.n;
    (0..spec.count)
        .map(|_| {
            Ok(match spec.kind.as_str() {
                "repair-fix" | "repair-swap" => {
                    let variant = if spec.kind == "repair-fix" { Variant::Fix } else { Variant::Swap };
                    let graph = random_graph(&mut rng, n);
                    let coloring = random_coloring(&mut rng, n, spec.r);
                    let k = rng.gen_range(0..=n.min(4));
                    Document::Repair(RepairInstance::new(ColoredGraph::new(graph, spec.r, coloring)?, k, variant))
                }
                "prext" => Document::PrExt(random_prext(&mut rng, n, spec.r)),
                "indset" => {
                    let graph = random_graph(&mut rng, n);
                    let k = rng.gen_range(1..=n);
                    Document::IndSet(IndSetInstance::new(graph, k)?)
                }
                "cnf3batch" => {
                    let t = 1 << rng.gen_range(0..=2);
                    let m = rng.gen_range(1..=n.max(1) + 1);
                    Document::Batch(Cnf3Batch::new((0..t).map(|_| random_cnf(&mut rng, n, m)).collect())?)
                }
                other => return Err(Error::InvalidInput(format!("unknown instance kind {other:?}"))),
            })
        })
        .collect()
}

/// The separating example as a repair instance.
pub fn triangle_example(variant: Variant) -> RepairInstance {
    let k = match variant {
        Variant::Fix => 3,
        Variant::Swap => 2,
    };
    RepairInstance::new(crate::instance::triangle_with_pendants(), k, variant)
}

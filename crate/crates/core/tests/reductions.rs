use recolor_core::instance::{apply, Certificate, Variant};
use recolor_core::io::{self, corpus, Document, InstanceFile};
use recolor_core::reductions::{
    cross_compose, indset_to_3swap, promise_augment, Cnf, Cnf3Batch, CrossComposeOptions, IndSetInstance, Literal,
};
use recolor_core::solvers::{bounded_search, fix_branch, promise_check, swap_branch, MoveSet};
use recolor_core::verify::enumerate::small_graphs;
use recolor_core::verify::{equivalence_sweep, find_independent_set, Family, SweepConfig};
use recolor_core::{Color, ColoredGraph, Graph, Limits};

fn colorings(n: usize, r: usize) -> impl Iterator<Item = Vec<Color>> {
    (0..r.pow(n as u32)).map(move |mut code| {
        (0..n)
            .map(|_| {
                let c = code % r;
                code /= r;
                c as Color
            })
            .collect()
    })
}

#[test]
fn conflict_local_moves_suffice_on_tiny_graphs() {
    for g in small_graphs(4) {
        for c in colorings(g.n(), 3) {
            let cg = ColoredGraph::new(g.clone(), 3, c).unwrap();
            for variant in [Variant::Fix, Variant::Swap] {
                for k in 0..=2 {
                    let all = bounded_search(&cg, variant, k, MoveSet::All);
                    let near = bounded_search(&cg, variant, k, MoveSet::NearConflicts);
                    assert_eq!(all.is_some(), near.is_some(), "{variant} k={k} {:?} {:?}", g.edges(), cg.coloring());
                    if let Some(cert) = near {
                        assert!(apply(&cg, &cert, false).unwrap().is_proper());
                    }
                }
            }
        }
    }
}

#[test]
fn lifted_indset_outputs_keep_their_answer() {
    let limits = Limits::default();
    for g in small_graphs(4) {
        for k in 1..=2.min(g.n()) {
            let src = IndSetInstance::new(g.clone(), k).unwrap();
            let yes = find_independent_set(&src, &limits).unwrap().is_some();
            let red = indset_to_3swap(&src).unwrap();
            for r in [4, 5] {
                let lifted = red.lift_to_r(r).unwrap();
                assert!(lifted.trace.validate(lifted.instance.graph.n()).is_ok());
                let d = swap_branch(&lifted.instance.graph, lifted.instance.k);
                assert_eq!(d.yes, yes, "r={r} {:?} k={k}", g.edges());
                if let Some(cert) = d.certificate {
                    assert!(lifted.instance.accepts(&cert));
                }
            }
        }
    }
}

#[test]
fn generated_files_round_trip() {
    for kind in ["repair-fix", "repair-swap", "prext", "indset", "cnf3batch"] {
        let spec = corpus::CorpusSpec { kind: kind.into(), n: 7, r: 4, count: 20, seed: 3 };
        for doc in corpus::generate(&spec).unwrap() {
            let file = InstanceFile::new(doc);
            let text = io::to_string(&file);
            assert_eq!(io::from_str(&text).unwrap(), file, "{text}");
        }
    }
    let src = IndSetInstance::new(Graph::cycle(5), 2).unwrap();
    let file = InstanceFile::from(indset_to_3swap(&src).unwrap());
    let back = io::from_str(&io::to_string(&file)).unwrap();
    assert_eq!(back.trace.as_ref().unwrap().vertex("u0").unwrap(), 0);
    assert_eq!(back, file);
}

#[test]
fn saved_files_reload() {
    let dir = std::env::temp_dir().join(format!("recolor-io-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("batch.json");
    let f = Cnf::new(2, vec![vec![Literal::pos(0), Literal::neg(1)]]).unwrap();
    let file = InstanceFile::new(Document::Batch(Cnf3Batch::new(vec![f.clone(), f]).unwrap()));
    io::save(&file, &path).unwrap();
    assert_eq!(io::load(&path).unwrap(), file);
    std::fs::remove_dir_all(&dir).unwrap();
}

fn contradiction() -> Cnf {
    Cnf::new(1, vec![vec![Literal::pos(0)], vec![Literal::neg(0)]]).unwrap()
}

#[test]
fn unsatisfiable_batches_need_more_than_the_budget() {
    for t in [1, 2] {
        let batch = Cnf3Batch::new(vec![contradiction(); t]).unwrap();
        let red = cross_compose(&batch, CrossComposeOptions::default()).unwrap();
        assert!(!fix_branch(&red.instance.graph, red.instance.k).yes, "t = {t}");
    }
}

#[test]
fn satisfiable_member_fits_the_budget() {
    let sat = Cnf::new(1, vec![vec![Literal::pos(0)], vec![Literal::pos(0)]]).unwrap();
    let batch = Cnf3Batch::new(vec![contradiction(), sat]).unwrap();
    let red = cross_compose(&batch, CrossComposeOptions::default()).unwrap();
    let d = fix_branch(&red.instance.graph, red.instance.k);
    assert!(d.yes);
    assert!(red.instance.accepts(&d.certificate.unwrap()));
}

// The star padding keeps the promise but opens cheap swaps between the
// padding and the core: a NO source (an edge, k = 2) maps to a YES output.
#[test]
fn promise_augmentation_admits_spurious_yes() {
    let src = IndSetInstance::new(Graph::complete(2), 2).unwrap();
    assert!(find_independent_set(&src, &Limits::default()).unwrap().is_none());
    let aug = promise_augment(&indset_to_3swap(&src).unwrap(), 2, 2).unwrap();
    assert!(promise_check(&aug.instance, &Limits::default()).unwrap().holds());
    let cert = Certificate::parse("S 0 3\nS 9 10\nS 44 14\nS 14 6\n").unwrap();
    assert!(cert.len() <= aug.instance.k);
    assert!(aug.instance.accepts(&cert));

    let report = equivalence_sweep(Family::PromiseAugment, &SweepConfig { max_n: 4, max_k: 2, ..Default::default() });
    assert_eq!(report.summary.disagree, 3);
    assert!(report.records.iter().filter(|r| !r.agree).all(|r| !r.oracle && r.target == Some(true)));
}

use proptest::prelude::*;
use recolor_core::graph::{class_sizes, hamming};
use recolor_core::instance::{apply, Certificate, RepairInstance, Variant};
use recolor_core::io::{self, Document, InstanceFile};
use recolor_core::reductions::{
    indset_to_3swap, indset_to_3swap_size, prext_to_fix, prext_to_fix_size, prext_to_swap, IndSetInstance,
    PrExtInstance,
};
use recolor_core::solvers::{fix_branch, fix_optimum, swap_branch, swap_distance_to, swap_optimum, Optimum};
use recolor_core::{Color, ColoredGraph, Graph, Limits};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn colored(max_n: usize, r: usize) -> impl Strategy<Value = ColoredGraph> {
    graph(max_n).prop_flat_map(move |g| {
        let n = g.n();
        proptest::collection::vec(0..r as Color, n).prop_map(move |c| ColoredGraph::new(g.clone(), r, c).unwrap())
    })
}

fn prext(max_n: usize) -> impl Strategy<Value = PrExtInstance> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        proptest::collection::vec(proptest::option::of(0..3 as Color), n)
            .prop_map(move |pre| PrExtInstance::new(g.clone(), 3, pre).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn fix_certificate_is_optimal_and_proper(g in colored(7, 3)) {
        let res = fix_optimum(&g, &Limits::default()).unwrap();
        if let Optimum::Finite(k) = res.optimum {
            let cert = res.certificate.unwrap();
            prop_assert_eq!(cert.len(), k);
            prop_assert!(apply(&g, &cert, false).unwrap().is_proper());
            prop_assert!(!fix_branch(&g, k.saturating_sub(1)).yes || k == 0);
        }
    }

    #[test]
    fn one_swap_changes_at_most_two_vertices(g in colored(6, 3)) {
        let limits = Limits::default();
        let fix = fix_optimum(&g, &limits).unwrap().optimum;
        let swap = swap_optimum(&g, &limits).unwrap().optimum;
        if let (Optimum::Finite(f), Optimum::Finite(s)) = (fix, swap) {
            prop_assert!(f <= 2 * s);
            prop_assert!(s <= g.n());
        }
    }

    #[test]
    fn branching_is_monotone_in_budget(g in colored(6, 3), k in 0usize..4) {
        prop_assert!(!fix_branch(&g, k).yes || fix_branch(&g, k + 1).yes);
        prop_assert!(!swap_branch(&g, k).yes || swap_branch(&g, k + 1).yes);
    }

    #[test]
    fn swap_distance_is_a_metric(a in proptest::collection::vec(0..3 as Color, 1..8), seed in any::<u64>()) {
        let n = a.len();
        let perm = |s: u64| {
            let mut v = a.clone();
            let mut x = s;
            for i in (1..n).rev() {
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                v.swap(i, (x >> 33) as usize % (i + 1));
            }
            v
        };
        let (b, c) = (perm(seed), perm(seed ^ 0xabcdef));
        let on = |x: &Vec<Color>| ColoredGraph::new(Graph::empty(n), 3, x.clone()).unwrap();
        let ab = swap_distance_to(&on(&a), &b).unwrap();
        prop_assert_eq!(ab, swap_distance_to(&on(&b), &a).unwrap());
        prop_assert_eq!(ab == 0, a == b);
        prop_assert!(ab <= swap_distance_to(&on(&a), &c).unwrap() + swap_distance_to(&on(&c), &b).unwrap());
        prop_assert!(2 * ab >= hamming(&a, &b));
        prop_assert_eq!(class_sizes(&a, 3), class_sizes(&b, 3));
    }

    #[test]
    fn prext_outputs_have_declared_size_and_partitioned_trace(src in prext(5)) {
        prop_assume!(src.precoloring_is_proper());
        let fix = prext_to_fix(&src).unwrap();
        prop_assert_eq!(fix.instance.graph.n(), prext_to_fix_size(&src));
        prop_assert!(fix.trace.validate(fix.instance.graph.n()).is_ok());
        prop_assert_eq!(fix.instance.k, src.free().len());
        let swap = prext_to_swap(&src).unwrap();
        prop_assert!(swap.trace.validate(swap.instance.graph.n()).is_ok());
        prop_assert_eq!(swap.instance.variant, Variant::Swap);
    }

    #[test]
    fn indset_output_size(g in graph(5), k in 1usize..4) {
        prop_assume!(k <= g.n());
        let n = g.n();
        let red = indset_to_3swap(&IndSetInstance::new(g, k).unwrap()).unwrap();
        prop_assert_eq!(red.instance.graph.n(), indset_to_3swap_size(n, k));
        prop_assert!(red.trace.validate(red.instance.graph.n()).is_ok());
    }

    #[test]
    fn files_round_trip(g in colored(8, 4), k in 0usize..5, swap in any::<bool>()) {
        let variant = if swap { Variant::Swap } else { Variant::Fix };
        let file = InstanceFile::new(Document::Repair(RepairInstance::new(g, k, variant)));
        let text = io::to_string(&file);
        let back = io::from_str(&text).unwrap();
        prop_assert_eq!(&back, &file);
        prop_assert_eq!(io::to_string(&back), text);
    }

    #[test]
    fn certificates_round_trip_through_text(g in colored(6, 3)) {
        if let Some(cert) = fix_optimum(&g, &Limits::default()).unwrap().certificate {
            prop_assert_eq!(Certificate::parse(&cert.to_string()).unwrap(), cert);
        }
    }
}

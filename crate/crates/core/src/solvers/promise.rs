use crate::chromatic::{chromatic_number, Limits};
use crate::classes::has_proper_coloring_with_sizes;
use crate::error::Result;
use crate::instance::RepairInstance;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PromiseViolation {
    /// The graph's chromatic number differs from the color count.
    ChromaticNumber { chromatic: usize, r: usize },
    /// No proper coloring has the instance's color-class sizes.
    ClassSizes { sizes: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PromiseReport {
    pub chromatic: usize,
    pub violations: Vec<PromiseViolation>,
}

impl PromiseReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `chi(G) = r` and that the coloring is a permutation of some
/// proper `r`-coloring (equal class sizes). Both clauses are always
/// evaluated so the report names every failure.
pub fn promise_check(inst: &RepairInstance, limits: &Limits) -> Result<PromiseReport> {
    let g = &inst.graph;
    let chromatic = chromatic_number(g.graph(), limits)?;
    let mut violations = Vec::new();
    if chromatic != g.r() {
        violations.push(PromiseViolation::ChromaticNumber { chromatic, r: g.r() });
    }
    let sizes = g.color_class_sizes();
    if !has_proper_coloring_with_sizes(g.graph(), &sizes) {
        violations.push(PromiseViolation::ClassSizes { sizes });
    }
    Ok(PromiseReport { chromatic, violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{ColoredGraph, Graph};
    use crate::instance::Variant;

    #[test]
    fn optimal_proper_coloring_passes() {
        let g = ColoredGraph::new(Graph::complete(3), 3, vec![2, 0, 1]).unwrap();
        let report = promise_check(&RepairInstance::new(g, 0, Variant::Swap), &Limits::default()).unwrap();
        assert!(report.holds());
    }

    #[test]
    fn triangle_with_two_colors_fails_class_sizes() {
        let g = ColoredGraph::new(Graph::complete(3), 3, vec![0, 0, 1]).unwrap();
        let report = promise_check(&RepairInstance::new(g, 1, Variant::Swap), &Limits::default()).unwrap();
        assert!(!report.holds());
        assert_eq!(report.violations, vec![PromiseViolation::ClassSizes { sizes: vec![2, 1, 0] }]);
    }

    #[test]
    fn bipartite_graph_with_three_colors_fails_chromatic() {
        let g = ColoredGraph::new(Graph::path(3), 3, vec![0, 1, 2]).unwrap();
        let report = promise_check(&RepairInstance::new(g, 0, Variant::Fix), &Limits::default()).unwrap();
        assert_eq!(report.violations, vec![PromiseViolation::ChromaticNumber { chromatic: 2, r: 3 }]);
    }
}

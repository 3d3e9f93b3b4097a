//! The clause gadget of the cross-composition and the search that fixes its
//! initial colors.
//!
//! Local vertex order is `a, b, c, d, y1, y2, y3, y4, r, y5`. Each of `a, b,
//! c, d` has one external neighbor (a literal vertex; `d`'s is the formula's
//! extra variable) and `r` carries pendants of color 0, so `r` may never be 0.

use crate::graph::Color;

pub const SIZE: usize = 10;
pub const NAMES: [&str; SIZE] = ["a", "b", "c", "d", "y1", "y2", "y3", "y4", "r", "y5"];
pub const R: usize = 8;

pub const EDGES: [(usize, usize); 12] = [
    (0, 1),
    (0, 4),
    (1, 4),
    (2, 3),
    (2, 5),
    (3, 5),
    (6, 7),
    (6, 8),
    (7, 8),
    (4, 7),
    (5, 6),
    (8, 9),
];

/// Color of a true literal vertex; false literals carry 0.
pub const TRUE: Color = 1;

/// Initial gadget colors indexed by the initial colors of the literal
/// neighbors of `a, b, c` (bit 2 = `a`), with `d`'s neighbor colored `TRUE`.
/// Reproduced by [`search_table`].
pub const TABLE: [[Color; SIZE]; 8] = [
    [1, 2, 1, 0, 0, 2, 0, 1, 2, 0],
    [1, 2, 0, 2, 0, 1, 0, 1, 2, 0],
    [1, 0, 1, 0, 2, 2, 0, 1, 2, 0],
    [1, 0, 0, 2, 2, 1, 2, 0, 1, 0],
    [0, 1, 1, 0, 2, 2, 0, 1, 2, 0],
    [0, 1, 0, 2, 2, 1, 2, 0, 1, 0],
    [0, 2, 1, 0, 1, 2, 0, 2, 1, 0],
    [0, 2, 0, 2, 1, 1, 2, 0, 1, 0],
];

/// Literal-neighbor colors for pattern `p` (bit 2 = `a`) and `d`'s neighbor.
pub fn literal_colors(p: usize, d: Color) -> [Color; 4] {
    [(p >> 2 & 1) as Color, (p >> 1 & 1) as Color, (p & 1) as Color, d]
}

/// Proper on the gadget edges and against the four literal neighbors.
/// With `anchored`, `r` must also avoid its pendants' color 0.
pub fn is_proper(colors: &[Color; SIZE], literals: &[Color; 4], anchored: bool) -> bool {
    EDGES.iter().all(|&(u, v)| colors[u] != colors[v])
        && (0..4).all(|i| colors[i] != literals[i])
        && !(anchored && colors[R] == 0)
}

pub fn all_colorings() -> impl Iterator<Item = [Color; SIZE]> {
    (0..3usize.pow(SIZE as u32)).map(|mut code| {
        let mut c = [0; SIZE];
        for slot in c.iter_mut().rev() {
            *slot = (code % 3) as Color;
            code /= 3;
        }
        c
    })
}

fn hamming(a: &[Color; SIZE], b: &[Color; SIZE]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Cheapest recoloring of the gadget from `from` to a proper coloring once the
/// literal neighbors read `literals`.
pub fn repair(from: &[Color; SIZE], literals: &[Color; 4]) -> Option<[Color; SIZE]> {
    all_colorings()
        .filter(|c| is_proper(c, literals, true))
        .min_by_key(|c| hamming(from, c))
}

/// Largest repair cost over every final literal state with a true literal
/// among `a, b, c` and `d`'s neighbor false.
pub fn worst_repair(from: &[Color; SIZE], targets: &[Vec<[Color; SIZE]>]) -> usize {
    targets
        .iter()
        .map(|proper| proper.iter().map(|c| hamming(from, c)).min().unwrap_or(usize::MAX))
        .max()
        .unwrap_or(0)
}

/// For each initial literal pattern, the first proper initial coloring (in
/// lexicographic order) minimizing [`worst_repair`]. Returns the table and
/// the per-pattern worst costs.
pub fn search_table() -> ([[Color; SIZE]; 8], [usize; 8]) {
    let all: Vec<[Color; SIZE]> = all_colorings().collect();
    let targets: Vec<Vec<[Color; SIZE]>> = (1..8)
        .map(|q| {
            let lits = literal_colors(q, 0);
            all.iter().copied().filter(|c| is_proper(c, &lits, true)).collect()
        })
        .collect();
    let mut table = [[0; SIZE]; 8];
    let mut costs = [0; 8];
    for p in 0..8 {
        let lits = literal_colors(p, TRUE);
        let best = all
            .iter()
            .filter(|c| is_proper(c, &lits, true))
            .map(|c| (worst_repair(c, &targets), *c))
            .min_by_key(|&(cost, _)| cost)
            .expect("every literal pattern admits a proper gadget coloring");
        costs[p] = best.0;
        table[p] = best.1;
    }
    (table, costs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn search_reproduces_frozen_table() {
        let (table, costs) = search_table();
        assert_eq!(table, TABLE);
        assert!(costs.iter().all(|&c| c <= 9), "{costs:?}");
    }
}

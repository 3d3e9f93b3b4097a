//! Repair instances, moves, and certificates.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Fix,
    Swap,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Fix => "fix",
            Variant::Swap => "swap",
        })
    }
}

/// A single repair move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    Recolor { vertex: Vertex, color: Color },
    Swap { u: Vertex, v: Vertex },
}

impl Move {
    pub fn variant(&self) -> Variant {
        match self {
            Move::Recolor { .. } => Variant::Fix,
            Move::Swap { .. } => Variant::Swap,
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Move::Recolor { vertex, color } => write!(f, "R {vertex} {color}"),
            Move::Swap { u, v } => write!(f, "S {u} {v}"),
        }
    }
}

impl FromStr for Move {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split_whitespace().collect();
        let num = |t: &str| t.parse::<usize>().map_err(|e| format!("bad number {t:?}: {e}"));
        match parts.as_slice() {
            ["R", v, c] => {
                let color = num(c)?;
                let color = Color::try_from(color).map_err(|_| format!("color {color} too large"))?;
                Ok(Move::Recolor { vertex: num(v)?, color })
            }
            ["S", u, v] => Ok(Move::Swap { u: num(u)?, v: num(v)? }),
            _ => Err(format!("expected `R v c` or `S u v`, got {s:?}")),
        }
    }
}

/// Ordered list of moves. Prints one move per line.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub moves: Vec<Move>,
}

impl Certificate {
    pub fn new(moves: Vec<Move>) -> Self {
        Certificate { moves }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// The common variant of all moves, or `None` for an empty certificate.
    /// Mixed certificates are rejected.
    pub fn variant(&self) -> Result<Option<Variant>> {
        let mut kinds = self.moves.iter().map(Move::variant);
        let Some(first) = kinds.next() else { return Ok(None) };
        if kinds.all(|k| k == first) {
            Ok(Some(first))
        } else {
            Err(Error::MoveKindMismatch)
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut moves = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mv = line
                .parse()
                .map_err(|message| Error::Parse { line: i + 1, column: 1, message })?;
            moves.push(mv);
        }
        Ok(Certificate { moves })
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.moves {
            writeln!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Executes `cert` on `g` in order. With `adjacent_only`, every swap must be
/// along an edge of `g`.
pub fn apply(g: &ColoredGraph, cert: &Certificate, adjacent_only: bool) -> Result<ColoredGraph> {
    let mut coloring = g.coloring().to_vec();
    apply_in_place(g.graph(), g.r(), &mut coloring, cert, adjacent_only)?;
    g.with_coloring(coloring)
}

pub(crate) fn apply_in_place(
    graph: &Graph,
    r: usize,
    coloring: &mut [Color],
    cert: &Certificate,
    adjacent_only: bool,
) -> Result<()> {
    let n = graph.n();
    let check = |index: usize, v: Vertex| {
        if v >= n {
            Err(Error::InvalidMove { index, reason: format!("vertex {v} out of range 0..{n}") })
        } else {
            Ok(())
        }
    };
    for (index, mv) in cert.moves.iter().enumerate() {
        match *mv {
            Move::Recolor { vertex, color } => {
                check(index, vertex)?;
                if color as usize >= r {
                    return Err(Error::InvalidMove { index, reason: format!("color {color} outside 0..{r}") });
                }
                if coloring[vertex] == color {
                    return Err(Error::InvalidMove {
                        index,
                        reason: format!("vertex {vertex} already has color {color}"),
                    });
                }
                coloring[vertex] = color;
            }
            Move::Swap { u, v } => {
                check(index, u)?;
                check(index, v)?;
                if u == v {
                    return Err(Error::InvalidMove { index, reason: format!("swap of vertex {u} with itself") });
                }
                if adjacent_only && !graph.has_edge(u, v) {
                    return Err(Error::AdjacencyViolation { u, v });
                }
                coloring.swap(u, v);
            }
        }
    }
    Ok(())
}

/// A colored graph with a move budget and problem flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepairInstance {
    pub graph: ColoredGraph,
    pub k: usize,
    pub variant: Variant,
    pub promise: bool,
    pub adjacent_only: bool,
}

impl RepairInstance {
    pub fn new(graph: ColoredGraph, k: usize, variant: Variant) -> Self {
        RepairInstance { graph, k, variant, promise: false, adjacent_only: false }
    }

    pub fn with_promise(mut self, promise: bool) -> Self {
        self.promise = promise;
        self
    }

    pub fn with_adjacent_only(mut self, adjacent_only: bool) -> Result<Self> {
        if adjacent_only && self.variant != Variant::Swap {
            return Err(Error::AdjacentOnlyRequiresSwap);
        }
        self.adjacent_only = adjacent_only;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if self.adjacent_only && self.variant != Variant::Swap {
            return Err(Error::AdjacentOnlyRequiresSwap);
        }
        Ok(())
    }

    /// Replays a certificate under this instance's rules: move kinds must
    /// match the variant, and swaps must be along edges when `adjacent_only`.
    pub fn replay(&self, cert: &Certificate) -> Result<ColoredGraph> {
        if let Some(kind) = cert.variant()? {
            if kind != self.variant {
                return Err(Error::MoveKindMismatch);
            }
        }
        apply(&self.graph, cert, self.adjacent_only)
    }

    /// True iff `cert` is legal, within budget, and ends in a proper coloring.
    pub fn accepts(&self, cert: &Certificate) -> bool {
        cert.len() <= self.k && self.replay(cert).map(|g| g.is_proper()).unwrap_or(false)
    }
}

/// The triangle-with-pendants graph separating recoloring from swapping.
///
/// Vertices 0, 1, 2 form the triangle, colored 0, 1, 2. Each triangle
/// vertex `i` carries three pendants of its own color and three pendants of
/// color `i + 1 (mod 3)`. Pendants are numbered from 3 in that order.
pub fn triangle_with_pendants() -> ColoredGraph {
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    let mut coloring: Vec<Color> = vec![0, 1, 2];
    for center in 0..3u8 {
        for color in [center, (center + 1) % 3] {
            for _ in 0..3 {
                edges.push((center as usize, coloring.len()));
                coloring.push(color);
            }
        }
    }
    let graph = Graph::new(coloring.len(), edges).expect("example graph is simple");
    ColoredGraph::new(graph, 3, coloring).expect("example coloring is valid")
}

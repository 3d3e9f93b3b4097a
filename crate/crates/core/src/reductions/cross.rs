use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Color, Vertex};
use crate::instance::{Certificate, Move, RepairInstance, Variant};

use super::gadget;
use super::{Builder, Reduction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, positive: false }
    }

    /// Signed 1-based form: `x3` is `4`, `!x3` is `-4`.
    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }

    pub fn from_dimacs(lit: i64) -> Result<Self> {
        if lit == 0 {
            return Err(Error::InvalidInput("literal 0 is not allowed".into()));
        }
        Ok(Literal { var: lit.unsigned_abs() as usize - 1, positive: lit > 0 })
    }

    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}

/// A CNF formula over variables `0..n` with clauses of one to three literals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cnf {
    pub n: usize,
    pub clauses: Vec<Vec<Literal>>,
}

impl Cnf {
    pub fn new(n: usize, clauses: Vec<Vec<Literal>>) -> Result<Self> {
        let cnf = Cnf { n, clauses };
        cnf.validate()?;
        Ok(cnf)
    }

    pub fn m(&self) -> usize {
        self.clauses.len()
    }

    pub fn validate(&self) -> Result<()> {
        for (j, clause) in self.clauses.iter().enumerate() {
            if clause.is_empty() || clause.len() > 3 {
                return Err(Error::InvalidInput(format!("clause {j} has {} literals, expected 1 to 3", clause.len())));
            }
            if let Some(l) = clause.iter().find(|l| l.var >= self.n) {
                return Err(Error::InvalidInput(format!("clause {j} uses variable {} of {}", l.var + 1, self.n)));
            }
        }
        Ok(())
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|l| l.eval(assignment)))
    }
}

/// `t` formulas sharing `n` and `m`, `t` a power of two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cnf3Batch {
    pub formulas: Vec<Cnf>,
}

impl Cnf3Batch {
    pub fn new(formulas: Vec<Cnf>) -> Result<Self> {
        let batch = Cnf3Batch { formulas };
        batch.validate()?;
        Ok(batch)
    }

    pub fn validate(&self) -> Result<()> {
        let t = self.formulas.len();
        if !t.is_power_of_two() {
            return Err(Error::BatchShapeMismatch(format!("batch size {t} is not a power of two")));
        }
        let (n, m) = (self.formulas[0].n, self.formulas[0].m());
        for (h, f) in self.formulas.iter().enumerate() {
            f.validate()?;
            if f.n != n || f.m() != m {
                return Err(Error::BatchShapeMismatch(format!(
                    "formula {h} has n = {}, m = {}; formula 0 has n = {n}, m = {m}",
                    f.n,
                    f.m()
                )));
            }
        }
        if m == 0 {
            return Err(Error::InvalidInput("formulas need at least one clause".into()));
        }
        Ok(())
    }

    pub fn t(&self) -> usize {
        self.formulas.len()
    }

    pub fn n(&self) -> usize {
        self.formulas[0].n
    }

    pub fn m(&self) -> usize {
        self.formulas[0].m()
    }

    /// `log2 t`.
    pub fn depth(&self) -> usize {
        self.t().trailing_zeros() as usize
    }

    /// `2 log2 t + 2n + 9m`.
    pub fn budget(&self) -> usize {
        2 * self.depth() + 2 * self.n() + 9 * self.m()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossComposeOptions {
    /// Color count; above 3 every non-pendant vertex gets `(r-3)(k+1)`
    /// pendants in each extra color.
    pub r: usize,
}

impl Default for CrossComposeOptions {
    fn default() -> Self {
        CrossComposeOptions { r: 3 }
    }
}

/// Vertex count of the composed instance.
pub fn cross_compose_size(t: usize, n: usize, m: usize, r: usize) -> usize {
    let k = 2 * t.trailing_zeros() as usize + 2 * n + 9 * m;
    let tree = if t > 1 { 3 * (t - 1) } else { 0 };
    let core = t * (2 * n + 3 + gadget::SIZE * m) + tree;
    let pendants = t * (2 * (k + 1) + m * (k + 1)) + (k + 1);
    core + pendants + (r - 3) * (k + 1) * core
}

fn lit_label(h: usize, l: Literal) -> String {
    if l.positive {
        format!("x{h}.{}", l.var)
    } else {
        format!("nx{h}.{}", l.var)
    }
}

fn literal_pattern(clause: &[Literal]) -> ([Literal; 3], usize) {
    let padded = [clause[0], clause[clause.len().min(2) - 1], clause[clause.len() - 1]];
    let p = padded.iter().fold(0, |acc, l| acc << 1 | l.positive as usize);
    (padded, p)
}

/// Composes `t` formulas into one recoloring instance that is a YES instance
/// iff some formula is satisfiable.
///
/// Colors are 0-based: true literal vertices carry 1, false ones 0. Each
/// formula `h` gets an extra variable `u{h}` (initially true) placed in every
/// clause. A binary tree of triangles with a conflicted root forces a
/// recoloring path down to one leaf `l{h}`, which can only be fixed by making
/// `u{h}` false; the clause gadgets then demand a satisfying assignment.
pub fn cross_compose(batch: &Cnf3Batch, opts: CrossComposeOptions) -> Result<Reduction> {
    batch.validate()?;
    if opts.r < 3 {
        return Err(Error::InvalidInput(format!("cross composition needs r >= 3, got {}", opts.r)));
    }
    let (t, n, m) = (batch.t(), batch.n(), batch.m());
    let k = batch.budget();
    let mut b = Builder::default();
    let mut leaf_links = Vec::with_capacity(t);
    for (h, f) in batch.formulas.iter().enumerate() {
        let mut vars = Vec::with_capacity(2 * n + 1);
        for i in 0..n {
            let x = b.vertex(lit_label(h, Literal::pos(i)), gadget::TRUE);
            let nx = b.vertex(lit_label(h, Literal::neg(i)), 0);
            b.edge(x, nx);
            vars.extend([x, nx]);
        }
        let u = b.vertex(format!("u{h}"), gadget::TRUE);
        vars.push(u);
        let w = b.vertex(format!("w{h}"), 2);
        for &v in &vars {
            b.edge(w, v);
        }
        b.pendants(&format!("P[w{h}]"), w, 0, k + 1);
        b.pendants(&format!("P[w{h}]"), w, 1, k + 1);
        for (j, clause) in f.clauses.iter().enumerate() {
            let (lits, p) = literal_pattern(clause);
            let colors = gadget::TABLE[p];
            let ids: Vec<Vertex> =
                (0..gadget::SIZE).map(|i| b.vertex(format!("H{h}.{j}.{}", gadget::NAMES[i]), colors[i])).collect();
            for &(x, y) in &gadget::EDGES {
                b.edge(ids[x], ids[y]);
            }
            for (i, &l) in lits.iter().enumerate() {
                let lv = vars[2 * l.var + !l.positive as usize];
                b.edge(ids[i], lv);
            }
            b.edge(ids[3], u);
            b.pendants(&format!("P[H{h}.{j}.r]"), ids[gadget::R], 0, k + 1);
        }
        leaf_links.push((u, w));
    }

    // Heap-ordered tree: internal nodes 1..t become triangles, nodes t..2t
    // are the leaves l0..l{t-1}. Left children hang off the parent's left
    // corner.
    let mut tri = vec![[0usize; 3]; t];
    for node in 1..t {
        let label = format!("T{node}");
        tri[node] = [b.vertex(label.clone(), 0), b.vertex(label.clone(), 1), b.vertex(label, 2)];
        let [top, right, left] = tri[node];
        b.triangle(top, right, left);
        if node > 1 {
            let parent = tri[node / 2];
            b.edge(top, if node % 2 == 0 { parent[2] } else { parent[1] });
        }
    }
    for (h, &(u, w)) in leaf_links.iter().enumerate() {
        let leaf = b.vertex(format!("l{h}"), 0);
        b.edge(leaf, u);
        b.edge(leaf, w);
        let node = t + h;
        if t > 1 {
            let parent = tri[node / 2];
            b.edge(leaf, if node % 2 == 0 { parent[2] } else { parent[1] });
        }
    }
    let root = if t > 1 { tri[1][0] } else { b.n() - 1 };
    b.pendants("P[root]", root, 0, k + 1);

    if opts.r > 3 {
        let anchors: Vec<Vertex> = (0..b.n()).filter(|&v| !b.is_pendant(v)).collect();
        for v in anchors {
            for c in 3..opts.r as Color {
                b.pendants(&format!("L[{v}]"), v, c, k + 1);
            }
        }
    }
    let (graph, trace) = b.finish(opts.r)?;
    assert_eq!(graph.n(), cross_compose_size(t, n, m, opts.r));
    Ok(Reduction { instance: RepairInstance::new(graph, k, Variant::Fix), trace })
}

/// The recoloring schedule certifying that formula `s` is satisfied by
/// `assignment`: push the root conflict down to leaf `s`, make `u{s}` false,
/// set the variables, then repair each clause gadget of formula `s`
/// optimally. Returns the certificate and the per-clause repair costs.
pub fn cross_compose_certificate(
    batch: &Cnf3Batch,
    red: &Reduction,
    s: usize,
    assignment: &[bool],
) -> Result<(Certificate, Vec<usize>)> {
    let (t, n) = (batch.t(), batch.n());
    if s >= t || assignment.len() != n {
        return Err(Error::InvalidInput(format!("need formula index < {t} and {n} truth values")));
    }
    let tr = &red.trace;
    let g = &red.instance.graph;
    let mut moves = Vec::new();
    let mut recolor = |vertex: Vertex, color: Color| moves.push(Move::Recolor { vertex, color });

    // Each triangle on the root-to-leaf path rotates: the top takes the color
    // of the corner leading down, which becomes 0.
    let leaf_node = t + s;
    let mut path = Vec::new();
    let mut node = leaf_node;
    while node > 1 {
        path.push(node);
        node /= 2;
    }
    path.reverse();
    for &child in &path {
        let parent = child / 2;
        let label = format!("T{parent}");
        let corners = tr.get(&label).ok_or_else(|| Error::InvalidInput(format!("trace lacks {label}")))?;
        let down = if child % 2 == 0 { corners[2] } else { corners[1] };
        recolor(corners[0], g.color(down));
        recolor(down, 0);
    }
    recolor(tr.vertex(&format!("l{s}"))?, gadget::TRUE);
    recolor(tr.vertex(&format!("u{s}"))?, 0);
    for (i, &value) in assignment.iter().enumerate() {
        if !value {
            recolor(tr.vertex(&lit_label(s, Literal::pos(i)))?, 0);
            recolor(tr.vertex(&lit_label(s, Literal::neg(i)))?, gadget::TRUE);
        }
    }
    let mut costs = Vec::with_capacity(batch.m());
    for (j, clause) in batch.formulas[s].clauses.iter().enumerate() {
        let (lits, p) = literal_pattern(clause);
        let mut q = 0;
        for l in lits {
            q = q << 1 | l.eval(assignment) as usize;
        }
        let from = gadget::TABLE[p];
        let to = gadget::repair(&from, &gadget::literal_colors(q, 0))
            .ok_or_else(|| Error::WitnessInvalid(format!("clause {j} of formula {s} is not satisfied")))?;
        let mut cost = 0;
        for i in 0..gadget::SIZE {
            if from[i] != to[i] {
                recolor(tr.vertex(&format!("H{s}.{j}.{}", gadget::NAMES[i]))?, to[i]);
                cost += 1;
            }
        }
        costs.push(cost);
    }
    Ok((Certificate::new(moves), costs))
}

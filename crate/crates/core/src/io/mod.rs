//! The instance file format: one JSON object per file, `kind`-tagged, with
//! nested objects indented and arrays kept on one line. Keys are sorted and
//! edges are emitted in sorted order, so saving is byte-stable.

pub mod corpus;

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, Graph, Vertex};
use crate::instance::{RepairInstance, Variant};
use crate::reductions::{Cnf, Cnf3Batch, IndSetInstance, Literal, PrExtInstance, Reduction, ReductionTrace};

pub const FORMAT_VERSION: u32 = 1;

/// Any object the file format can hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Repair(RepairInstance),
    PrExt(PrExtInstance),
    IndSet(IndSetInstance),
    Batch(Cnf3Batch),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Repair(_) => "repair",
            Document::PrExt(_) => "prext",
            Document::IndSet(_) => "indset",
            Document::Batch(_) => "cnf3batch",
        }
    }
}

/// A document plus the trace of the reduction that produced it, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceFile {
    pub document: Document,
    pub trace: Option<ReductionTrace>,
}

impl InstanceFile {
    pub fn new(document: Document) -> Self {
        InstanceFile { document, trace: None }
    }

    pub fn repair(&self) -> Result<&RepairInstance> {
        match &self.document {
            Document::Repair(r) => Ok(r),
            other => Err(Error::InvalidInput(format!("expected a repair instance, found {}", other.kind()))),
        }
    }
}

impl From<Reduction> for InstanceFile {
    fn from(red: Reduction) -> Self {
        InstanceFile { document: Document::Repair(red.instance), trace: Some(red.trace) }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RepairDto {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    r: usize,
    coloring: Vec<Color>,
    k: usize,
    variant: Variant,
    #[serde(default)]
    promise: bool,
    #[serde(default)]
    adjacent_only: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PrExtDto {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    r: usize,
    #[serde(rename = "W")]
    w: Vec<Vertex>,
    /// Colors of `W`, in the same order.
    precoloring: Vec<Color>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct IndSetDto {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    k: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BatchDto {
    t: usize,
    n: usize,
    m: usize,
    /// Per formula, clauses as signed 1-based literals.
    formulas: Vec<Vec<Vec<i64>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum Payload {
    Repair(RepairDto),
    Prext(PrExtDto),
    Indset(IndSetDto),
    Cnf3batch(BatchDto),
}

#[derive(Serialize, Deserialize)]
struct Raw {
    format_version: u32,
    #[serde(flatten)]
    payload: Payload,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    trace: Option<ReductionTrace>,
}

fn invalid(e: Error) -> Error {
    match e {
        Error::Validation(_) => e,
        other => Error::Validation(other.to_string()),
    }
}

fn graph(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
    Graph::new(n, edges.iter().copied()).map_err(invalid)
}

fn to_payload(doc: &Document) -> Payload {
    match doc {
        Document::Repair(r) => Payload::Repair(RepairDto {
            n: r.graph.n(),
            edges: r.graph.graph().edges().to_vec(),
            r: r.graph.r(),
            coloring: r.graph.coloring().to_vec(),
            k: r.k,
            variant: r.variant,
            promise: r.promise,
            adjacent_only: r.adjacent_only,
        }),
        Document::PrExt(p) => {
            let w = p.precolored();
            Payload::Prext(PrExtDto {
                n: p.graph.n(),
                edges: p.graph.edges().to_vec(),
                r: p.r,
                precoloring: w.iter().map(|&v| p.precoloring[v].unwrap()).collect(),
                w,
            })
        }
        Document::IndSet(s) => Payload::Indset(IndSetDto { n: s.graph.n(), edges: s.graph.edges().to_vec(), k: s.k }),
        Document::Batch(b) => Payload::Cnf3batch(BatchDto {
            t: b.t(),
            n: b.n(),
            m: b.m(),
            formulas: b
                .formulas
                .iter()
                .map(|f| f.clauses.iter().map(|c| c.iter().map(|l| l.to_dimacs()).collect()).collect())
                .collect(),
        }),
    }
}

fn from_payload(p: Payload) -> Result<Document> {
    Ok(match p {
        Payload::Repair(d) => {
            let g = ColoredGraph::new(graph(d.n, &d.edges)?, d.r, d.coloring).map_err(invalid)?;
            let inst = RepairInstance::new(g, d.k, d.variant).with_promise(d.promise);
            Document::Repair(inst.with_adjacent_only(d.adjacent_only).map_err(invalid)?)
        }
        Payload::Prext(d) => {
            if d.w.len() != d.precoloring.len() {
                return Err(Error::Validation(format!(
                    "W has {} vertices but precoloring has {} colors",
                    d.w.len(),
                    d.precoloring.len()
                )));
            }
            let mut pre = vec![None; d.n];
            for (&v, &c) in d.w.iter().zip(&d.precoloring) {
                if v >= d.n {
                    return Err(Error::Validation(format!("W vertex {v} out of range 0..{}", d.n)));
                }
                if pre[v].replace(c).is_some() {
                    return Err(Error::Validation(format!("W lists vertex {v} twice")));
                }
            }
            Document::PrExt(PrExtInstance::new(graph(d.n, &d.edges)?, d.r, pre).map_err(invalid)?)
        }
        Payload::Indset(d) => Document::IndSet(IndSetInstance::new(graph(d.n, &d.edges)?, d.k).map_err(invalid)?),
        Payload::Cnf3batch(d) => {
            let mut formulas = Vec::with_capacity(d.formulas.len());
            for clauses in d.formulas {
                let clauses = clauses
                    .into_iter()
                    .map(|c| c.into_iter().map(Literal::from_dimacs).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()
                    .map_err(invalid)?;
                formulas.push(Cnf::new(d.n, clauses).map_err(invalid)?);
            }
            let batch = Cnf3Batch::new(formulas).map_err(invalid)?;
            if batch.t() != d.t || batch.m() != d.m {
                return Err(Error::Validation(format!(
                    "header says t = {}, m = {} but formulas give t = {}, m = {}",
                    d.t,
                    d.m,
                    batch.t(),
                    batch.m()
                )));
            }
            Document::Batch(batch)
        }
    })
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (key, val)) in map.iter().enumerate() {
                out.push_str(&" ".repeat(indent + 2));
                out.push_str(&serde_json::to_string(key).expect("strings serialize"));
                out.push_str(": ");
                write_value(val, indent + 2, out);
                if i + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&" ".repeat(indent));
            out.push('}');
        }
        other => out.push_str(&serde_json::to_string(other).expect("values serialize")),
    }
}

pub fn to_string(file: &InstanceFile) -> String {
    let raw = Raw { format_version: FORMAT_VERSION, payload: to_payload(&file.document), trace: file.trace.clone() };
    let value = serde_json::to_value(&raw).expect("instance files serialize");
    let mut out = String::new();
    write_value(&value, 0, &mut out);
    out.push('\n');
    out
}

pub fn from_str(text: &str) -> Result<InstanceFile> {
    let raw: Raw = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if raw.format_version != FORMAT_VERSION {
        return Err(Error::Validation(format!(
            "unsupported format_version {} (expected {FORMAT_VERSION})",
            raw.format_version
        )));
    }
    let document = from_payload(raw.payload)?;
    if let (Some(trace), Document::Repair(r)) = (&raw.trace, &document) {
        trace.validate(r.graph.n())?;
    }
    Ok(InstanceFile { document, trace: raw.trace })
}

pub fn load(path: impl AsRef<Path>) -> Result<InstanceFile> {
    from_str(&fs::read_to_string(path)?)
}

pub fn save(file: &InstanceFile, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, to_string(file))?;
    Ok(())
}

/// Graph structure only, in DIMACS `edge` format with 1-based vertices.
pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use recolor_core::io::corpus::{generate, triangle_example, CorpusSpec};
use recolor_core::io::{self, Document, InstanceFile};
use recolor_core::reductions::{
    cross_compose, indset_to_3swap, prext_to_fix, prext_to_planar_fix_promise, prext_to_planar_swap_promise,
    prext_to_swap, promise_augment, strip_promise_bipartite, CrossComposeOptions, Reduction,
};
use recolor_core::solvers::{promise_check, solve, Mode};
use recolor_core::verify::{
    equivalence_sweep, find_assignment, find_independent_set, replay_crosscompose_certificate,
    replay_indset_certificate, verify_gadget_p1_p2, Family, SweepConfig, SweepMode,
};
use recolor_core::{Certificate, Limits, Variant};

#[derive(Parser)]
#[command(name = "recolor", version, about = "Repair corrupted graph colorings and check the reductions behind them")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit random or structured source instances.
    Gen {
        /// repair-fix, repair-swap, prext, indset, cnf3batch, triangle-fix or triangle-swap.
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        r: usize,
        #[arg(long, env = "RECOLOR_SEED", default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Directory for `<kind>-<i>.json`; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply a reduction to a source file.
    Reduce {
        #[arg(long, value_enum)]
        reduction: ReductionName,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Target color count for lift-r and cross-compose.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Solve a repair instance.
    Solve {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
        mode: ModeArg,
        /// Vertex cap for exact chromatic-number and state-space searches.
        #[arg(long, env = "RECOLOR_CAP")]
        cap: Option<usize>,
        /// Also run the promise check.
        #[arg(long)]
        promise: bool,
    },
    /// Run an equivalence sweep, a certificate replay or the gadget check.
    Verify {
        #[arg(long, value_parser = parse_family, conflicts_with_all = ["replay", "certificate", "gadget"])]
        sweep: Option<Family>,
        #[arg(long, env = "RECOLOR_MAX_N", default_value_t = 5)]
        max_n: usize,
        #[arg(long, env = "RECOLOR_MAX_K", default_value_t = 1)]
        max_k: usize,
        #[arg(long, env = "RECOLOR_SEED", default_value_t = 0x5eed)]
        seed: u64,
        /// Check a seeded sample of this many sources instead of all.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, env = "RECOLOR_CAP")]
        cap: Option<usize>,
        /// Write sweep records as JSON lines.
        #[arg(long)]
        jsonl: Option<PathBuf>,
        /// Replay the constructive certificate for a source and its reduction.
        #[arg(long, value_enum, requires_all = ["source", "input"])]
        replay: Option<ReplayName>,
        #[arg(long)]
        source: Option<PathBuf>,
        /// Repair instance to check.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Certificate file (one move per line) to check against --input.
        #[arg(long, requires = "input")]
        certificate: Option<PathBuf>,
        /// Exhaustively check the clause gadget properties.
        #[arg(long)]
        gadget: bool,
    },
    /// Summarize sweep JSON-lines files as a table.
    Report {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReductionName {
    PrextFix,
    PrextSwap,
    #[value(name = "indset-3swap")]
    Indset3Swap,
    LiftR,
    PromiseAugment,
    CrossCompose,
    PlanarSwapPromise,
    PlanarFixPromise,
    StripPromise,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Auto,
    Brute,
    Branch,
    BfsOracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReplayName {
    Indset,
    CrossCompose,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: recolor_core::Error| e.to_string())
}

fn limits(cap: Option<usize>) -> Limits {
    let mut l = Limits::default();
    if let Some(c) = cap {
        l.exact_vertices = c;
        l.bfs_vertices = c;
        l.oracle_vertices = c;
    }
    l
}

fn load(path: &Path) -> Result<InstanceFile> {
    io::load(path).with_context(|| format!("reading {}", path.display()))
}

fn write_file(file: &InstanceFile, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => io::save(file, p).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{}", io::to_string(file));
            Ok(())
        }
    }
}

fn gen(kind: &str, n: usize, r: usize, seed: u64, count: usize, out: Option<&Path>) -> Result<()> {
    let docs = match kind {
        "triangle-fix" => vec![Document::Repair(triangle_example(Variant::Fix))],
        "triangle-swap" => vec![Document::Repair(triangle_example(Variant::Swap))],
        _ => generate(&CorpusSpec { kind: kind.to_string(), n, r, count, seed })?,
    };
    if let Some(dir) = out {
        fs::create_dir_all(dir)?;
    }
    for (i, doc) in docs.into_iter().enumerate() {
        let file = InstanceFile::new(doc);
        match out {
            Some(dir) => write_file(&file, Some(&dir.join(format!("{kind}-{i}.json"))))?,
            None => write_file(&file, None)?,
        }
    }
    Ok(())
}

fn reduce(name: ReductionName, input: &Path, r: Option<usize>) -> Result<Reduction> {
    let file = load(input)?;
    let doc = &file.document;
    let wrong = || anyhow!("{} cannot be applied to a {} file", reduction_label(name), doc.kind());
    Ok(match (name, doc) {
        (ReductionName::PrextFix, Document::PrExt(p)) => prext_to_fix(p)?,
        (ReductionName::PrextSwap, Document::PrExt(p)) => prext_to_swap(p)?,
        (ReductionName::PlanarSwapPromise, Document::PrExt(p)) => prext_to_planar_swap_promise(p)?,
        (ReductionName::PlanarFixPromise, Document::PrExt(p)) => prext_to_planar_fix_promise(p)?,
        (ReductionName::Indset3Swap, Document::IndSet(s)) => indset_to_3swap(s)?,
        (ReductionName::PromiseAugment, Document::IndSet(s)) => promise_augment(&indset_to_3swap(s)?, s.graph.n(), s.k)?,
        (ReductionName::CrossCompose, Document::Batch(b)) => {
            cross_compose(b, CrossComposeOptions { r: r.unwrap_or(3) })?
        }
        (ReductionName::LiftR | ReductionName::StripPromise, Document::Repair(inst)) => {
            let trace = file.trace.clone().unwrap_or_default();
            let red = Reduction { instance: inst.clone(), trace };
            match name {
                ReductionName::LiftR => {
                    let r = r.ok_or_else(|| anyhow!("lift-r needs --r"))?;
                    if file.trace.is_some() {
                        red.lift_to_r(r)?
                    } else {
                        Reduction { instance: recolor_core::reductions::lift_to_r(inst, r)?, trace: Default::default() }
                    }
                }
                _ => strip_promise_bipartite(&red)?,
            }
        }
        _ => return Err(wrong()),
    })
}

fn reduction_label(name: ReductionName) -> String {
    name.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

fn solve_cmd(input: &Path, mode: ModeArg, cap: Option<usize>, promise: bool) -> Result<()> {
    let file = load(input)?;
    let inst = file.repair()?;
    let l = limits(cap);
    let mode = match mode {
        ModeArg::Auto => Mode::Auto,
        ModeArg::Brute => Mode::Brute,
        ModeArg::Branch => Mode::Branch,
        ModeArg::BfsOracle => Mode::BfsOracle,
    };
    let report = solve(inst, mode, &l)?;
    println!("variant: {}", inst.variant);
    println!("budget: {}", inst.k);
    println!("decision: {}", if report.decision { "yes" } else { "no" });
    if let Some(opt) = report.optimum {
        println!("optimum: {opt}");
    }
    if promise {
        let p = promise_check(inst, &l)?;
        println!("chromatic: {}", p.chromatic);
        println!("promise: {}", if p.holds() { "holds" } else { "violated" });
    }
    if let Some(cert) = report.certificate {
        println!("certificate:");
        print!("{cert}");
    }
    Ok(())
}

/// Returns whether everything checked out.
#[allow(clippy::too_many_arguments)]
fn verify_cmd(
    sweep: Option<Family>,
    cfg: SweepConfig,
    jsonl: Option<&Path>,
    replay: Option<ReplayName>,
    source: Option<&Path>,
    input: Option<&Path>,
    certificate: Option<&Path>,
    gadget: bool,
) -> Result<bool> {
    if let Some(family) = sweep {
        let report = equivalence_sweep(family, &cfg);
        if let Some(path) = jsonl {
            let mut w = std::io::BufWriter::new(fs::File::create(path)?);
            for r in &report.records {
                let mut v = serde_json::to_value(r)?;
                v["type"] = json!("record");
                v["family"] = json!(family.name());
                writeln!(w, "{v}")?;
            }
            let summary = json!({
                "type": "summary",
                "family": family.name(),
                "seed": report.seed,
                "mode": report.mode,
                "max_n": report.max_n,
                "summary": report.summary,
            });
            writeln!(w, "{summary}")?;
        }
        for r in report.records.iter().filter(|r| !r.agree) {
            println!("DISAGREE #{} {}: oracle={} target={:?} {:?}", r.index, r.source, r.oracle, r.target, r.notes);
        }
        let s = &report.summary;
        println!(
            "{family}: {} sources, {} agree, {} disagree, {} errors ({} yes)",
            s.total, s.agree, s.disagree, s.errors, s.yes
        );
        return Ok(report.passed());
    }
    if gadget {
        let r = verify_gadget_p1_p2();
        println!("P1: {}", if r.p1 { "holds" } else { "fails" });
        println!("P2: {}", if r.p2 { "holds" } else { "fails" });
        println!("table: {}", if r.table { "reproduced" } else { "mismatch" });
        println!("worst repair per pattern: {:?}", r.repair_costs);
        return Ok(r.passed());
    }
    if let (Some(kind), Some(source), Some(input)) = (replay, source, input) {
        let src = load(source)?;
        let target = load(input)?;
        let trace = target.trace.clone().ok_or_else(|| anyhow!("{} carries no trace", input.display()))?;
        let red = Reduction { instance: target.repair()?.clone(), trace };
        let l = Limits::default();
        let cert = match (kind, &src.document) {
            (ReplayName::Indset, Document::IndSet(s)) => match find_independent_set(s, &l)? {
                Some(w) => replay_indset_certificate(s, &w, &red)?,
                None => {
                    println!("source has no independent set of size {}; nothing to replay", s.k);
                    return Ok(true);
                }
            },
            (ReplayName::CrossCompose, Document::Batch(b)) => {
                let mut found = None;
                for (s, f) in b.formulas.iter().enumerate() {
                    if let Some(a) = find_assignment(f, &l)? {
                        found = Some((s, a));
                        break;
                    }
                }
                match found {
                    Some((s, a)) => {
                        println!("formula: {s}");
                        replay_crosscompose_certificate(b, s, &a, &red)?
                    }
                    None => {
                        println!("no formula is satisfiable; nothing to replay");
                        return Ok(true);
                    }
                }
            }
            _ => bail!("source kind {} does not match the replay", src.document.kind()),
        };
        let ok = red.instance.accepts(&cert);
        println!("moves: {} (budget {})", cert.len(), red.instance.k);
        println!("accepted: {}", if ok { "yes" } else { "no" });
        print!("{cert}");
        return Ok(ok);
    }
    if let (Some(cert_path), Some(input)) = (certificate, input) {
        let inst = load(input)?;
        let text = fs::read_to_string(cert_path)?;
        let cert = Certificate::parse(&text)?;
        let inst = inst.repair()?;
        let replayed = inst.replay(&cert)?;
        let ok = cert.len() <= inst.k && replayed.is_proper();
        println!("moves: {} (budget {})", cert.len(), inst.k);
        println!("conflicts after replay: {}", replayed.conflicts().len());
        println!("accepted: {}", if ok { "yes" } else { "no" });
        return Ok(ok);
    }
    bail!("verify needs --sweep, --gadget, --replay with --source and --input, or --certificate with --input")
}

fn report(files: &[PathBuf]) -> Result<()> {
    println!("{:<22} {:>8} {:>8} {:>9} {:>7} {:>7} {:>10}", "family", "total", "agree", "disagree", "errors", "yes", "ms");
    for path in files {
        let f = fs::File::open(path).with_context(|| format!("reading {}", path.display()))?;
        let mut micros = 0u64;
        for (i, line) in BufReader::new(f).lines().enumerate() {
            let line = line?;
            let v: Value =
                serde_json::from_str(&line).with_context(|| format!("{}:{}: not a JSON line", path.display(), i + 1))?;
            match v["type"].as_str() {
                Some("record") => micros += v["micros"].as_u64().unwrap_or(0),
                Some("summary") => {
                    let s = &v["summary"];
                    println!(
                        "{:<22} {:>8} {:>8} {:>9} {:>7} {:>7} {:>10}",
                        v["family"].as_str().unwrap_or("?"),
                        s["total"],
                        s["agree"],
                        s["disagree"],
                        s["errors"],
                        s["yes"],
                        micros / 1000
                    );
                    micros = 0;
                }
                _ => bail!("{}:{}: unknown record type", path.display(), i + 1),
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Gen { kind, n, r, seed, count, out } => gen(&kind, n, r, seed, count, out.as_deref()).map(|_| true),
        Command::Reduce { reduction, input, out, r } => {
            let red = reduce(reduction, &input, r)?;
            write_file(&InstanceFile::from(red), out.as_deref())?;
            Ok(true)
        }
        Command::Solve { input, mode, cap, promise } => solve_cmd(&input, mode, cap, promise).map(|_| true),
        Command::Verify {
            sweep,
            max_n,
            max_k,
            seed,
            sample,
            cap,
            jsonl,
            replay,
            source,
            input,
            certificate,
            gadget,
        } => {
            let cfg = SweepConfig {
                max_n,
                max_k,
                seed,
                mode: sample.map_or(SweepMode::Exhaustive, |count| SweepMode::Sampled { count }),
                limits: limits(cap),
            };
            verify_cmd(
                sweep,
                cfg,
                jsonl.as_deref(),
                replay,
                source.as_deref(),
                input.as_deref(),
                certificate.as_deref(),
                gadget,
            )
        }
        Command::Report { files } => report(&files).map(|_| true),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

//! The `commcalc` command line.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::FiniteAlgebra;
use crate::centrality::{
    centralizes_matrix, left_annihilator, relative_commutator, right_annihilator, Centralizer, CentralityCheck,
    RightAnnihilator, WITNESS_SIZE_LIMIT,
};
use crate::congruence::{cg, con_lattice, LabeledPentagon, PentagonAnchor, DEFAULT_LATTICE_BUDGET};
use crate::constructions::{
    better_pentagon, herringbone, lemma410_pipeline, left_distributivity_gadget, normalize_noncommutativity,
    right_distributivity_gadget, semidistributivity_failure,
};
use crate::error::{Error, Result};
use crate::io::{emit_ndjson, resolve_input, Report, Source, Status};
use crate::maltsev::{
    classify_term, find_term, free_algebra, has_taylor_term_idempotent, is_taylor_term, TermKind, TermSearch,
    DEFAULT_FREE_BUDGET,
};
use crate::partition::Partition;
use crate::properties::{check_all, Property, PropertyTables};
use crate::subpower::DEFAULT_CLOSURE_BUDGET;
use crate::term::Term;

#[derive(Debug, Parser)]
#[command(name = "commcalc", version, about = "Commutator computations on finite algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Clone, Debug, Args)]
pub struct Options {
    #[arg(long, global = true, default_value_t = DEFAULT_CLOSURE_BUDGET, value_parser = positive)]
    pub budget_closure: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_LATTICE_BUDGET, value_parser = positive)]
    pub budget_lattice: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_FREE_BUDGET, value_parser = positive)]
    pub budget_free: usize,
    /// Newline-delimited JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Recorded in every machine report.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Extra directory searched for algebra files.
    #[arg(long, global = true)]
    pub fixture_dir: Option<PathBuf>,
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("budget must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Congruence lattice.
    Con { input: String },
    /// Principal congruence Cg(a,b).
    Cg { input: String, a: usize, b: usize },
    /// [alpha,beta], or [alpha,beta]_eps with --eps.
    Commutator {
        input: String,
        alpha: Partition,
        beta: Partition,
        #[arg(long)]
        eps: Option<Partition>,
    },
    /// C(alpha,beta;delta) with the least violating matrix.
    Centralize {
        input: String,
        alpha: Partition,
        beta: Partition,
        delta: Partition,
    },
    /// Left or right annihilator of beta modulo delta.
    Annihilator {
        input: String,
        beta: Partition,
        delta: Partition,
        #[arg(long, value_enum, default_value = "left")]
        side: Side,
    },
    /// Labelled pentagons in the congruence lattice.
    Pentagons { input: String },
    /// Better pentagon from a pentagon with C(theta,theta;delta) and not C(beta,theta;delta).
    BetterPentagon {
        input: String,
        #[arg(long, requires_all = ["delta", "theta"])]
        beta: Option<Partition>,
        #[arg(long)]
        delta: Option<Partition>,
        #[arg(long)]
        theta: Option<Partition>,
    },
    /// Left distributivity gadget in A(alpha).
    GadgetLeft {
        input: String,
        #[arg(requires = "beta")]
        alpha: Option<Partition>,
        beta: Option<Partition>,
    },
    /// Right distributivity gadget in A(alpha).
    GadgetRight {
        input: String,
        #[arg(requires = "beta")]
        alpha: Option<Partition>,
        beta: Option<Partition>,
    },
    /// Pentagon to delta < theta < alpha with [alpha,theta] = 0.
    Lemma410 { input: String },
    /// Herringbone sequences; from the pipeline unless --theta and --alpha are given.
    Herringbone {
        input: String,
        #[arg(long, requires = "alpha")]
        theta: Option<Partition>,
        #[arg(long)]
        alpha: Option<Partition>,
    },
    /// Congruences x, y, z with [x,y] = [x,z] = 0 < [x,y+z].
    Sdfail { input: String },
    /// Free algebra on --rank generators.
    Free {
        input: String,
        #[arg(long, default_value_t = 2)]
        rank: usize,
    },
    /// Search ternary term operations for a term of the given kind.
    FindTerm { input: String, kind: TermKind },
    /// Classify a ternary term given in prefix notation.
    ClassifyTerm { input: String, term: String },
    /// Taylor check of a term, or of an idempotent algebra without --term.
    Taylor {
        input: String,
        #[arg(long)]
        term: Option<String>,
        #[arg(long, default_value_t = 3)]
        arity: usize,
    },
    /// The ten commutator properties and the refinement quasi-identity.
    Check {
        input: String,
        #[arg(long)]
        property: Option<Property>,
    },
    /// Direct product of two algebras.
    Product { input: String, other: String },
    /// Quotient by a congruence.
    Quotient { input: String, theta: Partition },
    /// Lattice, properties, term search and the pipeline in one record.
    ReportAll { input: String },
}

impl clap::builder::ValueParserFactory for TermKind {
    type Parser = clap::builder::ValueParser;
    fn value_parser() -> Self::Parser {
        clap::builder::ValueParser::new(|s: &str| s.parse::<TermKind>())
    }
}

impl clap::builder::ValueParserFactory for Property {
    type Parser = clap::builder::ValueParser;
    fn value_parser() -> Self::Parser {
        clap::builder::ValueParser::new(|s: &str| s.parse::<Property>())
    }
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Con { .. } => "con",
            Command::Cg { .. } => "cg",
            Command::Commutator { .. } => "commutator",
            Command::Centralize { .. } => "centralize",
            Command::Annihilator { .. } => "annihilator",
            Command::Pentagons { .. } => "pentagons",
            Command::BetterPentagon { .. } => "better-pentagon",
            Command::GadgetLeft { .. } => "gadget-left",
            Command::GadgetRight { .. } => "gadget-right",
            Command::Lemma410 { .. } => "lemma410",
            Command::Herringbone { .. } => "herringbone",
            Command::Sdfail { .. } => "sdfail",
            Command::Free { .. } => "free",
            Command::FindTerm { .. } => "find-term",
            Command::ClassifyTerm { .. } => "classify-term",
            Command::Taylor { .. } => "taylor",
            Command::Check { .. } => "check",
            Command::Product { .. } => "product",
            Command::Quotient { .. } => "quotient",
            Command::ReportAll { .. } => "report-all",
        }
    }

    pub fn input(&self) -> &str {
        match self {
            Command::Con { input }
            | Command::Cg { input, .. }
            | Command::Commutator { input, .. }
            | Command::Centralize { input, .. }
            | Command::Annihilator { input, .. }
            | Command::Pentagons { input }
            | Command::BetterPentagon { input, .. }
            | Command::GadgetLeft { input, .. }
            | Command::GadgetRight { input, .. }
            | Command::Lemma410 { input }
            | Command::Herringbone { input, .. }
            | Command::Sdfail { input }
            | Command::Free { input, .. }
            | Command::FindTerm { input, .. }
            | Command::ClassifyTerm { input, .. }
            | Command::Taylor { input, .. }
            | Command::Check { input, .. }
            | Command::Product { input, .. }
            | Command::Quotient { input, .. }
            | Command::ReportAll { input } => input,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Budgets {
    pub closure: usize,
    pub lattice: usize,
    pub free: usize,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub inputs: Vec<Source>,
    pub command: Command,
    pub budgets: Budgets,
    pub json: bool,
    pub seed: u64,
    pub fixture_dir: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self> {
        let o = cli.options;
        let inputs = resolve_input(cli.command.input(), o.fixture_dir.as_deref())?;
        Ok(RunConfig {
            inputs,
            command: cli.command,
            budgets: Budgets {
                closure: o.budget_closure,
                lattice: o.budget_lattice,
                free: o.budget_free,
            },
            json: o.json,
            seed: o.seed,
            fixture_dir: o.fixture_dir,
        })
    }
}

struct Outcome {
    status: Status,
    data: Value,
    text: String,
}

fn ok(data: Value, text: String) -> Outcome {
    Outcome {
        status: Status::Ok,
        data,
        text,
    }
}

fn to_value<T: Serialize>(v: &T) -> Result<Value> {
    serde_json::to_value(v).map_err(|e| Error::Io(e.to_string()))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).unwrap_or_default()
}

fn lattice_text(alg: &FiniteAlgebra, budget: usize) -> Result<(Value, String)> {
    let l = con_lattice(alg, budget)?;
    let names: Vec<String> = l.congruences().iter().map(|p| p.to_string()).collect();
    let covers = l.covers();
    let mut text = format!("{} congruences of {}\n", l.len(), alg.name());
    for (i, p) in names.iter().enumerate() {
        text.push_str(&format!("{i}: {p}\n"));
    }
    for (i, up) in covers.iter().enumerate() {
        for j in up {
            text.push_str(&format!("{i} < {j}\n"));
        }
    }
    text.push_str(if l.is_modular() { "modular\n" } else { "not modular\n" });
    let data = json!({
        "size": alg.size(),
        "congruences": names,
        "covers": covers,
        "modular": l.is_modular(),
    });
    Ok((data, text))
}

fn centrality(alg: &FiniteAlgebra, a: &Partition, b: &Partition, d: &Partition, budget: usize) -> Result<CentralityCheck> {
    if alg.size() <= WITNESS_SIZE_LIMIT {
        centralizes_matrix(alg, a, b, d, budget)
    } else {
        crate::centrality::centralizes(alg, a, b, d)
    }
}

/// First `(α,β)` in lattice order with `[β,α] = 0 < [α,β]` (and `β ≤ α` if asked).
fn noncommuting_pair(alg: &FiniteAlgebra, budget: usize, below: bool) -> Result<Option<(Partition, Partition)>> {
    let l = con_lattice(alg, budget)?;
    let mut cz = Centralizer::new(alg);
    for a in l.congruences() {
        for b in l.congruences() {
            if below && !b.leq(a) {
                continue;
            }
            if cz.commutator(b, a).is_zero() && !cz.commutator(a, b).is_zero() {
                return Ok(Some((a.clone(), b.clone())));
            }
        }
    }
    Ok(None)
}

/// A gadget input: the given pair, a pair in the algebra itself, or the
/// normalized quotient reached through the pentagon pipeline.
fn gadget_input(
    alg: &FiniteAlgebra,
    pair: Option<(Partition, Partition)>,
    budget: usize,
    below: bool,
) -> Result<(FiniteAlgebra, Partition, Partition, &'static str)> {
    if let Some((a, b)) = pair {
        return Ok((alg.clone(), a, b, "given"));
    }
    if let Some((a, b)) = noncommuting_pair(alg, budget, below)? {
        return Ok((alg.clone(), a, b, "input algebra"));
    }
    let l = lemma410_pipeline(alg, budget)?
        .ok_or_else(|| Error::pre("no noncommuting pair and no pentagon pipeline"))?;
    let (b, map) = l.algebra.quotient(&l.delta)?;
    let m = b.size();
    let n = normalize_noncommutativity(&b, &l.alpha.image(&map, m), &l.theta.image(&map, m))?;
    Ok((n.algebra, n.alpha, n.beta, "pentagon pipeline"))
}

fn verified(all: bool, data: Value, text: String) -> Outcome {
    Outcome {
        status: if all { Status::Ok } else { Status::Error },
        data,
        text: if all { text } else { format!("{text}verification failed\n") },
    }
}

fn execute(cfg: &RunConfig, alg: &FiniteAlgebra) -> Result<Outcome> {
    let bl = cfg.budgets.lattice;
    Ok(match &cfg.command {
        Command::Con { .. } => {
            let (data, text) = lattice_text(alg, bl)?;
            ok(data, text)
        }
        Command::Cg { a, b, .. } => {
            let p = cg(alg, *a, *b)?;
            ok(json!({ "cg": p }), format!("{p}\n"))
        }
        Command::Commutator { alpha, beta, eps, .. } => {
            let eps = eps.clone().unwrap_or_else(|| Partition::zero(alg.size()));
            let c = relative_commutator(alg, alpha, beta, &eps)?;
            ok(json!({ "commutator": c }), format!("{c}\n"))
        }
        Command::Centralize { alpha, beta, delta, .. } => {
            let c = centrality(alg, alpha, beta, delta, cfg.budgets.closure)?;
            let text = match &c.witness {
                None => "holds\n".to_string(),
                Some(w) => format!("fails: {:?}\n", w.quad),
            };
            Outcome {
                status: if c.holds { Status::Ok } else { Status::Fails },
                data: to_value(&c)?,
                text,
            }
        }
        Command::Annihilator { beta, delta, side, .. } => match side {
            Side::Left => {
                let p = left_annihilator(alg, beta, delta)?;
                ok(json!({ "left": p }), format!("{p}\n"))
            }
            Side::Right => {
                let r = right_annihilator(alg, beta, delta)?;
                match &r {
                    RightAnnihilator::Exists(p) => ok(to_value(&r)?, format!("{p}\n")),
                    RightAnnihilator::Missing { y, y2 } => Outcome {
                        status: Status::Fails,
                        data: to_value(&r)?,
                        text: format!("no largest: {y} and {y2} both centralize, their join does not\n"),
                    },
                }
            }
        },
        Command::Pentagons { .. } => {
            let l = con_lattice(alg, bl)?;
            let ps: Vec<LabeledPentagon> = l
                .find_pentagons(&PentagonAnchor::default())
                .iter()
                .map(|p| l.pentagon_partitions(p))
                .collect();
            let text = ps
                .iter()
                .map(|p| format!("beta {} delta {} theta {}\n", p.beta, p.delta, p.theta))
                .collect();
            ok(to_value(&ps)?, text)
        }
        Command::BetterPentagon { beta, delta, theta, .. } => {
            let p = match (beta, delta, theta) {
                (Some(b), Some(d), Some(t)) => LabeledPentagon::generated(b.clone(), d.clone(), t.clone())?,
                _ => {
                    let l = con_lattice(alg, bl)?;
                    let mut cz = Centralizer::new(alg);
                    l.find_pentagons(&PentagonAnchor::default())
                        .iter()
                        .map(|p| l.pentagon_partitions(p))
                        .find(|p| {
                            cz.centralizes(&p.theta, &p.theta, &p.delta) && !cz.centralizes(&p.beta, &p.theta, &p.delta)
                        })
                        .ok_or_else(|| Error::pre("no pentagon with C(theta,theta;delta) and not C(beta,theta;delta)"))?
                }
            };
            let bp = better_pentagon(alg, &p)?;
            let text = format!(
                "B has {} elements\nbeta {}\ndelta {}\ntheta {}\nalpha {}\n",
                bp.algebra.size(),
                bp.beta,
                bp.delta,
                bp.theta,
                bp.alpha
            );
            verified(bp.report.all_hold(), to_value(&bp)?, text)
        }
        Command::GadgetLeft { alpha, beta, .. } | Command::GadgetRight { alpha, beta, .. } => {
            let right = matches!(cfg.command, Command::GadgetRight { .. });
            let pair = alpha.clone().zip(beta.clone());
            let (base, a, b, from) = gadget_input(alg, pair, bl, right)?;
            let g = if right {
                right_distributivity_gadget(&base, &a, &b)?
            } else {
                left_distributivity_gadget(&base, &a, &b)?
            };
            let text = format!(
                "from {from}: alpha {a} beta {b}\nA(alpha) has {} elements\nwitness {:?}\n",
                g.pairs.len(),
                g.witness
            );
            let mut data = to_value(&g)?;
            data["source"] = json!(from);
            verified(g.report.all_hold(), data, text)
        }
        Command::Lemma410 { .. } => match lemma410_pipeline(alg, bl)? {
            None => ok(Value::Null, "no pentagon yields the configuration\n".into()),
            Some(l) => {
                let text = format!(
                    "case {}: algebra of size {}\ndelta {}\ntheta {}\nalpha {}\n",
                    l.case,
                    l.algebra.size(),
                    l.delta,
                    l.theta,
                    l.alpha
                );
                verified(l.report.all_hold(), to_value(&l)?, text)
            }
        },
        Command::Herringbone { theta, alpha, .. } => {
            let st = match (theta, alpha) {
                (Some(t), Some(a)) => herringbone(alg, t, a)?,
                _ => {
                    semidistributivity_failure(alg, bl)?
                        .ok_or_else(|| Error::pre("no pentagon yields the configuration"))?
                        .herringbone
                }
            };
            let text = format!(
                "D has {} elements; eta stable from index {}\nE has {} elements\n",
                st.d.size(),
                st.stable_at,
                st.e.size()
            );
            verified(st.all_hold(), to_value(&st)?, text)
        }
        Command::Sdfail { .. } => match semidistributivity_failure(alg, bl)? {
            None => ok(Value::Null, "no pentagon yields the configuration\n".into()),
            Some(f) => {
                let h = &f.herringbone;
                let text = format!("E has {} elements\nx {}\ny {}\nz {}\n", h.e.size(), h.x, h.y, h.z);
                let data = json!({ "e": h.e, "x": h.x, "y": h.y, "z": h.z, "detail": f });
                verified(f.all_hold(), data, text)
            }
        },
        Command::Free { rank, .. } => {
            let f = free_algebra(alg, *rank, cfg.budgets.free)?;
            let elements: Vec<Value> = (0..f.len())
                .map(|i| json!({ "term": f.provenance(i).to_prefix(alg, *rank), "values": f.elements[i] }))
                .collect();
            let text = elements
                .iter()
                .map(|e| format!("{}\n", e["term"].as_str().unwrap_or_default()))
                .collect::<String>();
            ok(
                json!({ "rank": rank, "size": f.len(), "elements": elements }),
                format!("{} elements\n{text}", f.len()),
            )
        }
        Command::FindTerm { kind, .. } => {
            let r = find_term(alg, *kind, cfg.budgets.free)?;
            let text = match &r {
                TermSearch::Found { certificate, .. } => format!("{}\n", certificate.term),
                TermSearch::None { term_operations, .. } => {
                    format!("none among all {term_operations} ternary term operations\n")
                }
                TermSearch::Inconclusive { depth, .. } => format!("inconclusive beyond depth {depth}\n"),
            };
            ok(to_value(&r)?, text)
        }
        Command::ClassifyTerm { term, .. } => {
            let t = Term::parse(term, alg, 3)?;
            let c = classify_term(alg, &t, cfg.budgets.free)?;
            let kinds: Vec<&str> = c.kinds.iter().map(|k| k.name()).collect();
            ok(to_value(&c)?, format!("{}\n", kinds.join(" ")))
        }
        Command::Taylor { term, arity, .. } => match term {
            Some(src) => {
                let t = Term::parse(src, alg, *arity)?;
                let c = is_taylor_term(alg, &t, *arity)?;
                ok(to_value(&c)?, format!("{}\n", if c.holds { "taylor" } else { "not taylor" }))
            }
            None => {
                let d = has_taylor_term_idempotent(alg, bl)?;
                ok(to_value(&d)?, format!("{}\n", if d.holds { "has a Taylor term" } else { "no Taylor term" }))
            }
        },
        Command::Check { property, .. } => {
            let reports = match property {
                None => check_all(alg, bl)?.reports,
                Some(p) => {
                    vec![PropertyTables::new(alg, bl)?.check(*p)]
                }
            };
            let mut text = String::new();
            for r in &reports {
                text.push_str(&format!("{:>2} {:<28} {}\n", r.id, r.property.name(), if r.holds { "holds" } else { "fails" }));
                if let Some(w) = &r.witness {
                    for (l, p) in &w.congruences {
                        text.push_str(&format!("     {l} = {p}\n"));
                    }
                }
            }
            Outcome {
                status: if reports.iter().all(|r| r.holds) { Status::Ok } else { Status::Fails },
                data: to_value(&reports)?,
                text,
            }
        }
        Command::Product { other, .. } => {
            let srcs = resolve_input(other, cfg.fixture_dir.as_deref())?;
            let [src] = srcs.as_slice() else {
                return Err(Error::arg("product needs a single second algebra"));
            };
            let p = alg.direct_product(&src.load()?)?;
            let v = to_value(&p)?;
            ok(v.clone(), format!("{}\n", pretty(&v)))
        }
        Command::Quotient { theta, .. } => {
            let (q, map) = alg.quotient(theta)?;
            let v = json!({ "algebra": q, "map": map });
            ok(v, format!("{}\n", pretty(&to_value(&q)?)))
        }
        Command::ReportAll { .. } => {
            let (lattice, _) = lattice_text(alg, bl)?;
            let props = check_all(alg, bl)?;
            let mut terms = Vec::new();
            for k in [TermKind::Maltsev, TermKind::Difference, TermKind::WeakDifference, TermKind::Taylor] {
                terms.push(match find_term(alg, k, cfg.budgets.free) {
                    Ok(r) => to_value(&r)?,
                    Err(e) => json!({ "kind": k, "error": e.to_string() }),
                });
            }
            let lemma = lemma410_pipeline(alg, bl)?;
            let mut text = format!("{} congruences\n", props.congruences);
            for r in &props.reports {
                text.push_str(&format!("{:>2} {:<28} {}\n", r.id, r.property.name(), if r.holds { "holds" } else { "fails" }));
            }
            text.push_str(&format!("pentagon pipeline: {}\n", if lemma.is_some() { "applies" } else { "does not apply" }));
            Outcome {
                status: if props.all_hold() { Status::Ok } else { Status::Fails },
                data: json!({ "lattice": lattice, "properties": props, "terms": terms, "lemma410": lemma }),
                text,
            }
        }
    })
}

/// Runs the command on every input; returns the exit code and the output.
pub fn run(cfg: &RunConfig) -> (i32, String) {
    let mut reports = Vec::new();
    let mut text = String::new();
    let many = cfg.inputs.len() > 1;
    for src in &cfg.inputs {
        let outcome = src.load().and_then(|alg| execute(cfg, &alg)).unwrap_or_else(|e| Outcome {
            status: Status::Error,
            data: json!({ "error": e.to_string() }),
            text: format!("error: {e}\n"),
        });
        if many {
            text.push_str(&format!("== {}\n", src.label()));
        }
        text.push_str(&outcome.text);
        reports.push(Report {
            command: cfg.command.name().to_string(),
            input: src.label(),
            seed: cfg.seed,
            status: outcome.status,
            data: outcome.data,
        });
    }
    let code = if reports.iter().any(|r| r.status == Status::Error) {
        1
    } else if reports.iter().any(|r| r.status == Status::Fails) {
        2
    } else {
        0
    };
    let out = if cfg.json {
        emit_ndjson(&reports).unwrap_or_else(|e| format!("{{\"error\":\"{e}\"}}\n"))
    } else {
        text
    };
    (code, out)
}

/// Exit code, output, and whether the output belongs on stderr.
pub struct Invocation {
    pub code: i32,
    pub output: String,
    pub stderr: bool,
}

pub fn main_with_args<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            return Invocation {
                code,
                output: e.to_string(),
                stderr: code != 0,
            };
        }
    };
    let json = cli.options.json;
    let (code, output) = match RunConfig::from_cli(cli) {
        Ok(cfg) => run(&cfg),
        Err(e) if json => (1, format!("{}\n", json!({ "status": "error", "error": e.to_string() }))),
        Err(e) => (1, format!("error: {e}\n")),
    };
    Invocation {
        code,
        output,
        stderr: code == 1 && !json,
    }
}

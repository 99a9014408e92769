//! Command-line front end: problem files in, JSON reports out.

pub mod presets;
pub mod problem;
pub mod report;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::calculus::{
    intersection_rule, lqc_wrt_check, mixed_product_rule, normal_densed_check, preimage_rule, product_rule, RuleReport,
    TriVerdict, Verdict,
};
use crate::cones::{ConeKind, ConeRequest};
use crate::error::{Error, Result};
use crate::exactgeom::{ConeUnion, ConvexPoly};
use crate::mpec::{stationarity_check, MPECProblem, MpecVerdict};
use crate::multimaps::{
    aubin_wrt_check, chain_rule, chain_rule_semicompact, coderivative_wrt, sum_rule, sum_rule_semicompact,
};
use crate::oracle::{aubin_ratio_probe, cross_check_frechet, SamplingPlan, DIVERGENCE};
use crate::plfunc::{lipschitz_wrt_check, subdiff_wrt};
use problem::{cone_kind, parse_problem, point, reading, subdiff_kind, ProblemFile, QueryIn, Workspace};
use report::Format;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum QualMode {
    /// Rules whose hypotheses are not all Holds report Unknown.
    Strict,
    /// Rules always report the observed inclusion.
    #[default]
    Diagnostic,
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub quals: QualMode,
    pub cross_check: bool,
    pub format: Format,
    pub plan: SamplingPlan,
}

/// Per-query status, ordered by severity for the exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Outcome {
    Ok,
    Unknown,
    Fail,
}

impl Outcome {
    fn name(self) -> &'static str {
        match self {
            Outcome::Ok => "ok",
            Outcome::Unknown => "unknown",
            Outcome::Fail => "fail",
        }
    }

    fn of(v: &TriVerdict) -> Self {
        match v.value {
            Verdict::Holds => Outcome::Ok,
            Verdict::Fails => Outcome::Fail,
            Verdict::Unknown => Outcome::Unknown,
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Ok => EXIT_OK,
            Outcome::Fail => EXIT_FAIL,
            Outcome::Unknown => EXIT_UNKNOWN,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunReport {
    pub json: Value,
    pub outcome: Outcome,
}

impl RunReport {
    pub fn exit_code(&self) -> i32 {
        self.outcome.exit_code()
    }

    /// Pretty JSON with a trailing newline.
    pub fn text(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.json).expect("report serializes");
        s.push('\n');
        s
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "wrtcone",
    version,
    about = "Exact normal cones, coderivatives and subdifferentials relative to a convex set"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Behavior of calculus rules whose hypotheses are not all Holds.
    #[arg(long, value_enum, default_value_t = QualMode::Diagnostic, global = true)]
    pub quals: QualMode,
    /// Validate exact results with floating-point sampling probes.
    #[arg(long, global = true)]
    pub cross_check: bool,
    /// Add decimal approximations next to exact rationals.
    #[arg(long, global = true)]
    pub decimal: bool,
    /// Write the report here instead of stdout.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run every query of a problem file.
    Run {
        file: PathBuf,
    },
    NormalCone(Selection),
    Coderivative(Selection),
    Subdiff(Selection),
    CheckAubin(Selection),
    CheckLipschitz(Selection),
    CheckLqc(Selection),
    CheckNormalDensed(Selection),
    /// Run the calculus-rule queries of one kind.
    Rule {
        #[arg(value_enum)]
        rule: RuleName,
        #[command(flatten)]
        sel: Selection,
    },
    MpecCheck(Selection),
    /// Run a bundled example; `--list` prints the ids.
    PaperExample {
        id: Option<String>,
        #[arg(long)]
        list: bool,
    },
}

#[derive(clap::Args, Debug)]
pub struct Selection {
    pub file: PathBuf,
    /// Only the query with this name.
    #[arg(long)]
    pub query: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RuleName {
    Product,
    MixedProduct,
    Intersection,
    Preimage,
    Sum,
    Chain,
}

impl RuleName {
    fn op(self) -> &'static str {
        match self {
            RuleName::Product => "rule-product",
            RuleName::MixedProduct => "rule-mixed-product",
            RuleName::Intersection => "rule-intersection",
            RuleName::Preimage => "rule-preimage",
            RuleName::Sum => "rule-sum",
            RuleName::Chain => "rule-chain",
        }
    }
}

/// Runs the queries of `file` whose op is `op` (all when `None`).
pub fn run_problem(
    file: &ProblemFile,
    source: &str,
    op: Option<&str>,
    name: Option<&str>,
    opts: &RunOptions,
) -> Result<RunReport> {
    let ws = Workspace::build(file)?;
    let selected: Vec<(usize, &QueryIn)> = file
        .queries
        .iter()
        .enumerate()
        .filter(|(_, q)| op.is_none_or(|o| q.op() == o) && name.is_none_or(|n| q.name() == Some(n)))
        .collect();
    if selected.is_empty() {
        let what = match (op, name) {
            (_, Some(n)) => format!("no query named `{n}`"),
            (Some(o), None) => format!("no `{o}` queries"),
            (None, None) => "no queries".into(),
        };
        return Err(Error::Input(what));
    }
    let mut results = Vec::new();
    let mut worst = Outcome::Ok;
    for (i, q) in selected {
        let (result, outcome) = match run_query(&ws, q, opts) {
            Ok(r) => r,
            Err(Error::Limit(m)) => (json!({"error": format!("resource limit exceeded: {m}")}), Outcome::Unknown),
            Err(e) => {
                let label = q.name().map(|n| format!(" `{n}`")).unwrap_or_default();
                return Err(Error::Input(format!("query {i}{label}: {e}")));
            }
        };
        worst = worst.max(outcome);
        results.push(json!({
            "index": i,
            "name": q.name(),
            "op": q.op(),
            "outcome": outcome.name(),
            "result": result,
        }));
    }
    let json = json!({
        "version": problem::VERSION,
        "source": source,
        "quals": match opts.quals { QualMode::Strict => "strict", QualMode::Diagnostic => "diagnostic" },
        "queries": results,
        "exit_code": worst.exit_code(),
    });
    Ok(RunReport { json, outcome: worst })
}

/// Runs a bundled example by id.
pub fn run_preset(id: &str, opts: &RunOptions) -> Result<RunReport> {
    let p = presets::find(id).ok_or_else(|| Error::Input(format!("unknown example `{id}`")))?;
    let file = parse_problem(p.text)?;
    run_problem(&file, &format!("preset:{id}"), None, None, opts)
}

fn rule_outcome(r: &RuleReport, opts: &RunOptions) -> (Value, Outcome) {
    let hyp = r.hypotheses_hold();
    let identities = r.checks.iter().all(|(_, ok)| *ok);
    let outcome = match opts.quals {
        QualMode::Strict if !hyp => Outcome::Unknown,
        _ if r.inclusion_holds && identities => Outcome::Ok,
        _ => Outcome::Fail,
    };
    (opts.format.rule(r, hyp), outcome)
}

fn run_query(ws: &Workspace, q: &QueryIn, opts: &RunOptions) -> Result<(Value, Outcome)> {
    let f = &opts.format;
    Ok(match q {
        QueryIn::NormalCone { kind, omega, wrt, point: x, .. } => {
            let omega = ws.set(omega)?;
            let x = point(x)?;
            let wrt = ws.convex_or_whole(wrt, omega.dim())?;
            let kind = cone_kind(kind)?;
            let req = ConeRequest { omega: omega.clone(), wrt: wrt.clone(), point: x.clone(), kind };
            let cone = req.evaluate()?;
            let mut v = json!({"kind": kind.name(), "point": f.vec(&x), "cone": f.cone_union(&cone)});
            let mut outcome = Outcome::Ok;
            if opts.cross_check {
                let (o, flagged) = oracle_cones(&omega, &wrt, &x, kind, &cone, opts)?;
                v["oracle"] = o;
                if flagged {
                    outcome = Outcome::Fail;
                }
            }
            (v, outcome)
        }
        QueryIn::Coderivative { map, wrt, x, y, ystar, .. } => {
            let m = ws.map(map)?;
            let wrt = ws.convex_or_whole(wrt, m.in_dim())?;
            let s = coderivative_wrt(&m, &wrt, &point(x)?, &point(y)?, &point(ystar)?)?;
            (json!({"ystar": f.vec(&s.ystar), "value": f.poly_union(&s.result)}), Outcome::Ok)
        }
        QueryIn::Subdiff { function, wrt, point: x, kind, .. } => {
            let func = ws.function(function)?;
            let wrt = ws.convex_or_whole(wrt, func.dim())?;
            let s = subdiff_wrt(&func, &wrt, &point(x)?, subdiff_kind(kind)?)?;
            (json!({"kind": s.kind.name(), "value": f.poly_union(&s.value)}), Outcome::Ok)
        }
        QueryIn::CheckAubin { map, wrt, x, y, .. } => {
            let m = ws.map(map)?;
            let wrt = ws.convex_or_whole(wrt, m.in_dim())?;
            let (x, y) = (point(x)?, point(y)?);
            let v = aubin_wrt_check(&m, &wrt, &x, &y)?;
            let mut out = json!({"verdict": f.verdict(&v)});
            let mut outcome = Outcome::of(&v);
            if opts.cross_check {
                let ratio = aubin_ratio_probe(&m, &wrt, &x, &y, &opts.plan)?;
                let divergent = ratio > DIVERGENCE;
                let flagged = match v.value {
                    Verdict::Holds => divergent,
                    Verdict::Fails => !divergent,
                    Verdict::Unknown => false,
                };
                out["oracle"] =
                    json!({"max_ratio": finite_or_label(ratio), "divergent": divergent, "flagged": flagged});
                if flagged {
                    outcome = Outcome::Fail;
                }
            }
            (out, outcome)
        }
        QueryIn::CheckLipschitz { function, wrt, point: x, .. } => {
            let func = ws.function(function)?;
            let wrt = ws.convex_or_whole(wrt, func.dim())?;
            let v = lipschitz_wrt_check(&func, &wrt, &point(x)?)?;
            (json!({"verdict": f.verdict(&v)}), Outcome::of(&v))
        }
        QueryIn::CheckLqc { omega1, omega2, wrt1, wrt2, point: x, .. } => {
            let v =
                lqc_wrt_check(&ws.set(omega1)?, &ws.set(omega2)?, &ws.convex(wrt1)?, &ws.convex(wrt2)?, &point(x)?)?;
            (json!({"verdict": f.verdict(&v)}), Outcome::of(&v))
        }
        QueryIn::CheckNormalDensed { omega1, omega2, wrt1, wrt2, point: x, .. } => {
            let v = normal_densed_check(
                &ws.set(omega1)?,
                &ws.set(omega2)?,
                &ws.convex(wrt1)?,
                &ws.convex(wrt2)?,
                &point(x)?,
            )?;
            (json!({"verdict": f.verdict(&v)}), Outcome::of(&v))
        }
        QueryIn::RuleProduct { omega1, wrt1, omega2, wrt2, x1, x2, .. } => {
            let r = product_rule(
                &ws.set(omega1)?,
                &ws.convex(wrt1)?,
                &ws.set(omega2)?,
                &ws.convex(wrt2)?,
                &point(x1)?,
                &point(x2)?,
            )?;
            rule_outcome(&r, opts)
        }
        QueryIn::RuleMixedProduct { omega1, wrt1, omega2, wrt2, n, point: x, reading: rd, .. } => {
            let r = mixed_product_rule(
                &ws.set(omega1)?,
                &ws.convex(wrt1)?,
                &ws.set(omega2)?,
                &ws.convex(wrt2)?,
                *n,
                &point(x)?,
                reading(*rd),
            )?;
            rule_outcome(&r, opts)
        }
        QueryIn::RuleIntersection { omega1, omega2, wrt1, wrt2, point: x, .. } => {
            let r = intersection_rule(
                &ws.set(omega1)?,
                &ws.set(omega2)?,
                &ws.convex(wrt1)?,
                &ws.convex(wrt2)?,
                &point(x)?,
            )?;
            rule_outcome(&r, opts)
        }
        QueryIn::RulePreimage { map, theta, wrt, point: x, .. } => {
            let m = ws.map(map)?;
            let wrt = ws.convex_or_whole(wrt, m.in_dim())?;
            let r = preimage_rule(&m, &ws.set(theta)?, &wrt, &point(x)?)?;
            rule_outcome(&r, opts)
        }
        QueryIn::RuleSum { map1, map2, wrt1, wrt2, x, y1, y2, y, ystar, .. } => {
            let (f1, f2) = (ws.map(map1)?, ws.map(map2)?);
            let (c1, c2) = (ws.convex(wrt1)?, ws.convex(wrt2)?);
            let (x, ystar) = (point(x)?, point(ystar)?);
            let r = match (y1, y2, y) {
                (Some(a), Some(b), None) => sum_rule(&f1, &f2, &c1, &c2, &x, &point(a)?, &point(b)?, &ystar)?,
                (None, None, Some(t)) => sum_rule_semicompact(&f1, &f2, &c1, &c2, &x, &point(t)?, &ystar)?,
                _ => return Err(Error::Input("rule-sum needs either `y1` and `y2` or `y`".into())),
            };
            rule_outcome(&r, opts)
        }
        QueryIn::RuleChain { inner, outer, wrt, x, z, y, zstar, .. } => {
            let (g, fm) = (ws.map(inner)?, ws.map(outer)?);
            let c = ws.convex_or_whole(wrt, g.in_dim())?;
            let (x, z, zstar) = (point(x)?, point(z)?, point(zstar)?);
            let r = match y {
                Some(y) => chain_rule(&g, &fm, &c, &x, &z, &point(y)?, &zstar)?,
                None => chain_rule_semicompact(&g, &fm, &c, &x, &z, &zstar)?,
            };
            rule_outcome(&r, opts)
        }
        QueryIn::MpecCheck { function, map, wrt1, wrt2, point: x, .. } => {
            let p = MPECProblem::new(ws.function(function)?, ws.map(map)?, ws.convex(wrt1)?, ws.convex(wrt2)?)?;
            let s = stationarity_check(&p, &point(x)?)?;
            let outcome = match s.verdict {
                MpecVerdict::NecessaryConditionsHold => Outcome::Ok,
                MpecVerdict::CertifiedNonOptimal => Outcome::Fail,
                MpecVerdict::Inconclusive => Outcome::Unknown,
            };
            (f.stationarity(&s), outcome)
        }
    })
}

fn finite_or_label(r: f64) -> Value {
    if r.is_finite() {
        json!(r)
    } else {
        json!("inf")
    }
}

/// Probe every part of a Fréchet or proximal result; limiting cones are unions
/// of such cones at nearby points, so only their parts' membership is sampled.
fn oracle_cones(
    omega: &crate::stratify::PolySet,
    wrt: &ConvexPoly,
    x: &crate::exactgeom::RVec,
    kind: ConeKind,
    cone: &ConeUnion,
    opts: &RunOptions,
) -> Result<(Value, bool)> {
    if kind == ConeKind::Limiting || cone.is_empty() {
        return Ok((json!({"applicable": false}), false));
    }
    let fmt = &opts.format;
    let flags = cross_check_frechet(omega, wrt, x, &cone.parts()[0], &opts.plan)?;
    let list: Vec<Value> = flags
        .iter()
        .map(|d| {
            json!({
                "direction": fmt.vec(&d.direction),
                "exact_member": d.exact_member,
                "probe_consistent": d.probe.consistent,
                "radial_ok": d.probe.radial_ok,
            })
        })
        .collect();
    Ok((json!({"applicable": true, "disagreements": list}), !flags.is_empty()))
}

/// Write `text` to `path` through a sibling temporary file and a rename.
pub fn write_atomic(path: &Path, text: &str) -> std::io::Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "report".into());
    let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(text.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path).inspect_err(|_| {
        let _ = fs::remove_file(&tmp);
    })
}

fn load(path: &Path) -> Result<ProblemFile> {
    let text = fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    parse_problem(&text).map_err(|e| match e {
        Error::Input(m) => Error::Input(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn run_selection(sel: &Selection, op: Option<&str>, opts: &RunOptions) -> Result<RunReport> {
    let file = load(&sel.file)?;
    run_problem(&file, &sel.file.display().to_string(), op, sel.query.as_deref(), opts)
}

/// Entry point shared by the binary and tests; returns the exit code.
pub fn main_with(cli: Cli) -> i32 {
    let opts = RunOptions {
        quals: cli.quals,
        cross_check: cli.cross_check,
        format: Format { decimal: cli.decimal },
        plan: SamplingPlan::default(),
    };
    let result = match &cli.command {
        Command::Run { file } => {
            load(file).and_then(|p| run_problem(&p, &file.display().to_string(), None, None, &opts))
        }
        Command::NormalCone(s) => run_selection(s, Some("normal-cone"), &opts),
        Command::Coderivative(s) => run_selection(s, Some("coderivative"), &opts),
        Command::Subdiff(s) => run_selection(s, Some("subdiff"), &opts),
        Command::CheckAubin(s) => run_selection(s, Some("check-aubin"), &opts),
        Command::CheckLipschitz(s) => run_selection(s, Some("check-lipschitz"), &opts),
        Command::CheckLqc(s) => run_selection(s, Some("check-lqc"), &opts),
        Command::CheckNormalDensed(s) => run_selection(s, Some("check-normal-densed"), &opts),
        Command::Rule { rule, sel } => run_selection(sel, Some(rule.op()), &opts),
        Command::MpecCheck(s) => run_selection(s, Some("mpec-check"), &opts),
        Command::PaperExample { list: true, .. } => {
            for p in presets::PRESETS {
                println!("{:<28} {}", p.id, p.summary);
            }
            return EXIT_OK;
        }
        Command::PaperExample { id: Some(id), .. } => run_preset(id, &opts),
        Command::PaperExample { id: None, .. } => Err(Error::Input("give an example id or --list".into())),
    };
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    let text = report.text();
    match &cli.output {
        Some(path) => {
            if let Err(e) = write_atomic(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_INPUT;
            }
        }
        None => print!("{text}"),
    }
    report.exit_code()
}

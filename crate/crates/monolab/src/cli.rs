//! Command dispatch. `run` never panics on bad input and never exits the
//! process; it returns the exit code: 0 for success, a passing or
//! inapplicable check, 1 for a failed check or verification, 2 for usage,
//! parse and computation errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use monolab_core::algebra::linform::variable_names;
use monolab_core::algebra::{MPoly, Rat, UnityRat};
use monolab_core::lab::{self, CheckReport, Verdict};
use monolab_core::monodromy::{self, EigenvalueSet, LctValue};
use monolab_core::padic::{self, DEFAULT_COUNT_BUDGET};
use monolab_core::resolution::{
    resolve_affine_with, resolve_germ_with, CurveSystem, Kind, ResolutionGraph, ResolveOptions, DEFAULT_BUDGET,
};
use monolab_core::zeta::{self, Locality, ZetaOptions};
use num_traits::Zero;
use serde_json::{json, Value};
use thiserror::Error;

use crate::corpus::{Entry, CORPUS};
use crate::output;
use crate::parse::{parse_poly, parse_rat, ParseError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot parse '{input}': {source}")]
    Parse { input: String, source: ParseError },
    #[error("{0}")]
    Core(#[from] monolab_core::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

type CliResult<T> = Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "monolab", version, about = "Embedded resolutions, zeta functions and monodromy of plane curves")]
struct Cli {
    /// Work with the germ at the base point (default).
    #[arg(long, global = true, conflicts_with = "global")]
    local: bool,
    /// Work with the whole affine curve.
    #[arg(long, global = true)]
    global: bool,
    /// Base point of the germ.
    #[arg(long, global = true, value_name = "X0,Y0", allow_hyphen_values = true)]
    at: Option<String>,
    /// Character order d of the twisted topological zeta function.
    #[arg(long = "char", global = true, value_name = "D")]
    character: Option<u64>,
    /// Polynomial g of the differential form g dx dy.
    #[arg(long, global = true, value_name = "POLY", allow_hyphen_values = true)]
    form: Option<String>,
    /// Prime for p-adic zeta functions and counts.
    #[arg(short = 'p', long = "prime", global = true, value_name = "PRIME")]
    prime: Option<u64>,
    /// Largest exponent i for counts modulo p^i.
    #[arg(long = "max-i", global = true, value_name = "N")]
    max_i: Option<u32>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest number of blow-ups per resolution.
    #[arg(long, global = true, value_name = "N")]
    budget: Option<u64>,
    /// JSON object mapping strict components ("E3" or "3") to chi(E_j°).
    #[arg(long = "chi-override", global = true, value_name = "FILE")]
    chi_override: Option<PathBuf>,
    /// Write the result to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Embedded resolution and its dual graph.
    Resolve {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    #[command(subcommand)]
    Zeta(ZetaCmd),
    /// Number of solutions of f = 0 modulo p^i.
    Count {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Monodromy zeta function, P1, eigenvalue orders and lct.
    Monodromy {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Log canonical threshold.
    Lct {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    #[command(subcommand)]
    Check(CheckCmd),
    /// Run every check on the built-in corpus.
    Corpus {
        /// Only list the corpus.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Debug, Subcommand)]
enum ZetaCmd {
    /// Topological zeta function.
    Top {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Multivariate topological zeta function of several factors. Factors
    /// starting with '-' go after `--`.
    TopMulti {
        #[arg(required = true)]
        polys: Vec<String>,
    },
    /// Igusa's p-adic zeta function by Denef's formula, checked against counts.
    Padic {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Naive motivic zeta function of the germ.
    Motivic {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
}

#[derive(Debug, Subcommand)]
enum CheckCmd {
    Monodromy {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Holomorphy for --char d, or for every d up to the largest N.
    Holomorphy {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    Relations {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    Poles {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    Structure {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    All {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
}

/// A command result in every format it supports.
struct Doc {
    text: String,
    json: Value,
    dot: Option<String>,
    code: i32,
}

impl Doc {
    fn new(text: String, json: Value) -> Self {
        Doc { text, json, dot: None, code: 0 }
    }
}

/// Flags after validation.
struct Ctx {
    locality: Locality,
    at: (Rat, Rat),
    character: Option<u64>,
    form: Option<MPoly>,
    prime: Option<u64>,
    max_i: u32,
    opts: ResolveOptions,
    chi: BTreeMap<usize, i64>,
}

fn parse_arg(text: &str) -> CliResult<MPoly> {
    parse_poly(text).map_err(|source| CliError::Parse { input: text.to_string(), source })
}

fn parse_at(text: &str) -> CliResult<(Rat, Rat)> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| CliError::Usage(format!("--at expects X0,Y0, got '{}'", text)))?;
    let num = |s: &str| parse_rat(s.trim()).map_err(|source| CliError::Parse { input: s.to_string(), source });
    Ok((num(a)?, num(b)?))
}

fn read_chi(path: &PathBuf) -> CliResult<BTreeMap<usize, i64>> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: shown.clone(), source })?;
    let bad = |why: &str| CliError::Usage(format!("{}: {}", shown, why));
    let v: Value = serde_json::from_str(&text).map_err(|e| bad(&e.to_string()))?;
    let obj = v.as_object().ok_or_else(|| bad("expected a JSON object"))?;
    let mut out = BTreeMap::new();
    for (k, v) in obj {
        let id = k
            .strip_prefix('E')
            .unwrap_or(k)
            .parse::<usize>()
            .map_err(|_| bad(&format!("key '{}' is not a component id", k)))?;
        let chi = v.as_i64().ok_or_else(|| bad(&format!("value for '{}' is not an integer", k)))?;
        out.insert(id, chi);
    }
    Ok(out)
}

impl Ctx {
    fn from_cli(cli: &Cli) -> CliResult<Self> {
        let locality = if cli.global { Locality::Global } else { Locality::Local };
        let at = match &cli.at {
            Some(_) if cli.global => return Err(CliError::Usage(String::from("--at applies to germs, not with --global"))),
            Some(s) => parse_at(s)?,
            None => (Rat::zero(), Rat::zero()),
        };
        let chi = match &cli.chi_override {
            Some(_) if !cli.global => return Err(CliError::Usage(String::from("--chi-override needs --global"))),
            Some(p) => read_chi(p)?,
            None => BTreeMap::new(),
        };
        if cli.character == Some(0) {
            return Err(CliError::Usage(String::from("--char must be positive")));
        }
        Ok(Ctx {
            locality,
            at,
            character: cli.character,
            form: cli.form.as_deref().map(parse_arg).transpose()?,
            prime: cli.prime,
            max_i: cli.max_i.unwrap_or(3),
            opts: ResolveOptions {
                budget: cli.budget.unwrap_or(DEFAULT_BUDGET),
            },
            chi,
        })
    }

    fn base_system(&self, f: MPoly) -> CurveSystem {
        match self.locality {
            Locality::Local => CurveSystem::germ_at(f, self.at.0.clone(), self.at.1.clone()),
            Locality::Global => CurveSystem::global(f),
        }
    }

    fn system(&self, text: &str) -> CliResult<CurveSystem> {
        let c = self.base_system(parse_arg(text)?);
        Ok(match &self.form {
            Some(g) => c.with_form(g.clone()),
            None => c,
        })
    }

    fn plain_system(&self, text: &str, what: &str) -> CliResult<CurveSystem> {
        if self.form.is_some() {
            return Err(CliError::Usage(format!("{} does not take --form", what)));
        }
        self.system(text)
    }

    fn resolve(&self, c: &CurveSystem) -> CliResult<ResolutionGraph> {
        Ok(match self.locality {
            Locality::Local => resolve_germ_with(c, self.opts)?,
            Locality::Global => resolve_affine_with(c, self.opts, &self.chi)?,
        })
    }

    fn zeta_opts(&self) -> ZetaOptions {
        let z = match self.locality {
            Locality::Local => ZetaOptions::local(),
            Locality::Global => ZetaOptions::global(),
        };
        z.with_character(self.character.unwrap_or(1))
    }

    fn prime(&self) -> CliResult<u64> {
        self.prime.ok_or_else(|| CliError::Usage(String::from("this command needs -p PRIME")))
    }
}

fn join<T: std::fmt::Display>(xs: impl IntoIterator<Item = T>, sep: &str) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn graph_text(g: &ResolutionGraph) -> String {
    let mut s = String::new();
    match &g.base {
        monolab_core::resolution::Base::Point(x, y) => writeln!(s, "germ at ({}, {})", x, y).unwrap(),
        monolab_core::resolution::Base::Global => writeln!(s, "affine curve").unwrap(),
    }
    let multi = g.labels.len() > 1;
    for c in &g.components {
        let n = g.total_n(c.id);
        let kind = match c.kind {
            Kind::Exceptional => "exceptional",
            Kind::Strict => "strict",
        };
        let mut line = format!("E{:<3} {:<11} N={:<4} nu={:<4}", c.id, kind, n, c.nu);
        if multi {
            write!(line, " N_l=({})", join(&c.n, ",")).unwrap();
        }
        if let Some(k) = c.self_int {
            write!(line, " self={}", k).unwrap();
        }
        writeln!(s, "{}", line.trim_end()).unwrap();
    }
    let mut edges: Vec<(usize, usize)> = g.edges.iter().map(|e| (e.a, e.b)).collect();
    edges.sort();
    writeln!(s, "edges: {}", join(edges.iter().map(|(a, b)| format!("E{}-E{}", a, b)), " ")).unwrap();
    if g.is_germ() {
        writeln!(s, "fiber: {}", join(g.fiber.iter().map(|i| format!("E{}", i)), " ")).unwrap();
    } else {
        let pts = g.critical_points.iter().map(lab::pt_string);
        writeln!(s, "critical points: {}", join(pts, " ")).unwrap();
    }
    writeln!(s, "blow-ups: {}", g.blowup_log.len()).unwrap();
    s
}

fn cmd_resolve(ctx: &Ctx, poly: &str) -> CliResult<Doc> {
    let g = ctx.resolve(&ctx.system(poly)?)?;
    let mut d = Doc::new(graph_text(&g), output::graph(&g));
    d.dot = Some(g.to_dot());
    Ok(d)
}

fn cmd_zeta_top(ctx: &Ctx, poly: &str) -> CliResult<Doc> {
    let g = ctx.resolve(&ctx.system(poly)?)?;
    let z = zeta::zeta_top(&g, &ctx.zeta_opts())?;
    let report = zeta::poles(&z, Some(&g));
    let mut text = format!("{}\n", z);
    let ps = report.entries.iter().map(|e| match e.order {
        1 => e.pole.to_string(),
        k => format!("{} (order {})", e.pole, k),
    });
    writeln!(text, "poles: {}", join(ps, ", ")).unwrap();
    Ok(Doc::new(text, output::zeta_top(&z, &report, ctx.character.unwrap_or(1))))
}

fn cmd_zeta_multi(ctx: &Ctx, polys: &[String]) -> CliResult<Doc> {
    if ctx.form.is_some() {
        return Err(CliError::Usage(String::from("zeta top-multi does not take --form")));
    }
    let fs = polys.iter().map(|p| parse_arg(p)).collect::<CliResult<Vec<_>>>()?;
    let base = ctx.base_system(MPoly::one(2)).base;
    let g = ctx.resolve(&CurveSystem::labelled(fs, base))?;
    let (z, polar) = zeta::zeta_top_multi(&g, &ctx.zeta_opts())?;
    let names = variable_names(polys.len());
    let mut text = format!("{}\n", z.to_string_with(&names));
    writeln!(text, "polar locus: {}", join(polar.iter().map(|f| format!("{} = 0", f.to_string_with(&names))), ", ")).unwrap();
    Ok(Doc::new(text, output::zeta_multi(&z, &polar, &names)))
}

fn cmd_padic(ctx: &Ctx, poly: &str) -> CliResult<Doc> {
    let c = ctx.plain_system(poly, "zeta padic")?;
    let p = ctx.prime()?;
    padic::require_prime(p)?;
    let g = ctx.resolve(&c)?;
    let v = padic::verify_padic_graph(&c, &g, p, ctx.max_i, DEFAULT_COUNT_BUDGET)?;
    let mut text = String::new();
    writeln!(text, "Z(s) = {}", v.zeta).unwrap();
    writeln!(text, "denominator: {}", v.zeta.denominator_string("p")).unwrap();
    writeln!(text, "pole real parts: {}", join(v.zeta.pole_real_parts(), ", ")).unwrap();
    writeln!(text, "counts:    {}", join(&v.counts.counts, " ")).unwrap();
    writeln!(text, "predicted: {}", join(&v.predicted, " ")).unwrap();
    if !v.good.is_good() {
        writeln!(text, "warning: {} may be a bad prime: {}", p, v.good.failures.join("; ")).unwrap();
    }
    match v.first_mismatch {
        None => writeln!(text, "verified").unwrap(),
        Some(i) => writeln!(text, "MISMATCH at i = {}", i).unwrap(),
    }
    let mut d = Doc::new(text, output::padic(&v));
    d.code = if v.verified { 0 } else { 1 };
    Ok(d)
}

fn cmd_motivic(ctx: &Ctx, poly: &str) -> CliResult<Doc> {
    if ctx.locality == Locality::Global {
        return Err(CliError::Usage(String::from("the motivic zeta function is computed for germs only")));
    }
    let g = ctx.resolve(&ctx.plain_system(poly, "zeta motivic")?)?;
    let m = zeta::zeta_motivic_local(&g)?;
    let top = m.topological()?;
    let text = format!("{}\ntopological: {}\n", m, top);
    Ok(Doc::new(text, output::motivic(&m, &top)))
}

fn cmd_count(ctx: &Ctx, poly: &str) -> CliResult<Doc> {
    let c = ctx.plain_system(poly, "count")?;
    let p = ctx.prime()?;
    padic::require_prime(p)?;
    let f = padic::function_polynomial(&c);
    let local = ctx.locality == Locality::Local;
    let counts = padic::brute_force_counts(&f, p, ctx.max_i, local, DEFAULT_COUNT_BUDGET)?;
    let mut text = String::new();
    for (i, n) in counts.counts.iter().enumerate() {
        writeln!(text, "mod {}^{}: {}", p, i + 1, n).unwrap();
    }
    Ok(Doc::new(text, output::counts(&counts)))
}

fn lct_text(l: &LctValue) -> String {
    format!("{} (at {})", l.value, join(l.achieved_by.iter().map(|i| format!("E{}", i)), ", "))
}

fn phi_text(u: &UnityRat) -> String {
    let ps = u.phi_multiplicities();
    if ps.is_empty() {
        return String::from("1");
    }
    join(
        ps.iter().rev().map(|(l, m)| if *m == 1 { format!("Phi{}", l) } else { format!("Phi{}^{}", l, m) }),
        " ",
    )
}

fn cmd_monodromy(ctx: &Ctx, poly: &str) -> CliResult<Doc> {
    let g = ctx.resolve(&ctx.plain_system(poly, "monodromy")?)?;
    let z = monodromy::acampo_zeta(&g, ctx.locality)?;
    let (p1, eig): (Option<UnityRat>, EigenvalueSet) = match ctx.locality {
        Locality::Local => {
            let p1 = match monodromy::char_poly_p1(&g) {
                Ok(p) => Some(p),
                Err(monolab_core::Error::NotIsolated(_)) => None,
                Err(e) => return Err(e.into()),
            };
            (p1, monodromy::eigenvalue_orders_near(&g)?)
        }
        Locality::Global => (None, lab::global_eigenvalues(&g, &lab::local_graphs(&g, ctx.opts)?)?),
    };
    let l = monodromy::lct(&g, ctx.locality)?;
    let mut text = String::new();
    writeln!(text, "zeta: {}", z).unwrap();
    writeln!(text, "cyclotomic: {}", phi_text(&z)).unwrap();
    match &p1 {
        Some(p) => writeln!(text, "P1: {} (degree {})", phi_text(p), p.degree()).unwrap(),
        None if ctx.locality == Locality::Local => writeln!(text, "P1: not an isolated singularity").unwrap(),
        None => {}
    }
    writeln!(text, "eigenvalue orders: {}", join(eig.orders(), ", ")).unwrap();
    writeln!(text, "lct: {}", lct_text(&l)).unwrap();
    Ok(Doc::new(text, output::monodromy(&z, p1.as_ref(), &eig, &l)))
}

fn cmd_lct(ctx: &Ctx, poly: &str) -> CliResult<Doc> {
    let g = ctx.resolve(&ctx.plain_system(poly, "lct")?)?;
    let l = monodromy::lct(&g, ctx.locality)?;
    Ok(Doc::new(format!("{}\n", lct_text(&l)), output::lct_doc(&l)))
}

fn reports_text(rs: &[CheckReport]) -> String {
    let mut s = String::new();
    for r in rs {
        writeln!(s, "{:<12} {}", r.verdict.as_str(), r.name).unwrap();
        for w in &r.witnesses {
            let mark = if w.holds { "ok" } else { "FAILS" };
            writeln!(s, "    {:<5} {}: {}", mark, w.subject, w.claim).unwrap();
        }
        if let Some(cx) = &r.counterexample {
            writeln!(s, "    counterexample: {}", cx.input.join(", ")).unwrap();
        }
    }
    s
}

fn exit_code(rs: &[CheckReport]) -> i32 {
    if rs.iter().any(|r| r.verdict == Verdict::Fail) {
        1
    } else {
        0
    }
}

/// Runs a germ check on `g`, or at each critical point of a global `g`.
fn germwise(
    g: &ResolutionGraph,
    opts: ResolveOptions,
    check: impl Fn(&ResolutionGraph) -> monolab_core::Result<CheckReport>,
) -> CliResult<Vec<CheckReport>> {
    if g.is_germ() {
        return Ok(vec![check(g)?]);
    }
    let mut out = Vec::new();
    for (p, h) in lab::local_graphs(g, opts)? {
        let mut r = check(&h)?;
        r.name = format!("{} at {}", r.name, lab::pt_string(&p));
        out.push(r);
    }
    Ok(out)
}

fn cmd_check(ctx: &Ctx, which: &CheckCmd) -> CliResult<Doc> {
    let poly = match which {
        CheckCmd::Monodromy { poly }
        | CheckCmd::Holomorphy { poly }
        | CheckCmd::Relations { poly }
        | CheckCmd::Poles { poly }
        | CheckCmd::Structure { poly }
        | CheckCmd::All { poly } => poly,
    };
    if ctx.character.is_some() && !matches!(which, CheckCmd::Holomorphy { .. }) {
        return Err(CliError::Usage(String::from("--char only applies to check holomorphy")));
    }
    let g = ctx.resolve(&ctx.plain_system(poly, "check")?)?;
    let opts = ctx.opts;
    let reports = match which {
        CheckCmd::Monodromy { .. } => vec![lab::check_monodromy_conjecture(&g, opts)?],
        CheckCmd::Holomorphy { .. } => match ctx.character {
            Some(d) => vec![lab::check_holomorphy(&g, d, opts)?],
            None => {
                let max_n = g.components.iter().map(|k| g.total_n(k.id)).max().unwrap_or(1);
                let mut out = Vec::new();
                for d in 2..=max_n {
                    let mut r = lab::check_holomorphy(&g, d, opts)?;
                    r.name = format!("holomorphy d={}", d);
                    out.push(r);
                }
                out
            }
        },
        CheckCmd::Relations { .. } => germwise(&g, opts, lab::check_numerical_relations)?,
        CheckCmd::Poles { .. } => germwise(&g, opts, |h| {
            let z = zeta::zeta_top(h, &ZetaOptions::local())?;
            lab::check_pole_determination(h, &z)
        })?,
        CheckCmd::Structure { .. } => germwise(&g, opts, lab::check_structure)?,
        CheckCmd::All { .. } => lab::check_all(&g, opts)?,
    };
    let shows_locus = matches!(which, CheckCmd::Structure { .. } | CheckCmd::All { .. });
    let locus = if shows_locus && g.is_germ() { lab::analyze_min_locus(&g).ok() } else { None };
    let mut d = Doc::new(reports_text(&reports), output::checks(&reports, locus.as_ref()));
    d.code = exit_code(&reports);
    Ok(d)
}

struct CorpusRun {
    entry: &'static Entry,
    result: Result<Vec<CheckReport>, String>,
}

fn run_entry(entry: &'static Entry, opts: ResolveOptions) -> CorpusRun {
    let result = (|| -> CliResult<Vec<CheckReport>> {
        let c = entry.labelled().map_err(|source| CliError::Parse { input: entry.text(), source })?;
        let g = resolve_germ_with(&c, opts)?;
        Ok(lab::check_all(&g, opts)?)
    })()
    .map_err(|e| e.to_string());
    CorpusRun { entry, result }
}

fn cmd_corpus(ctx: &Ctx, list: bool) -> CliResult<Doc> {
    if list {
        let text = join(CORPUS.iter().map(|e| format!("{:<26} {}", e.name, e.text())), "\n") + "\n";
        let entries: Vec<Value> = CORPUS.iter().map(|e| json!({"name": e.name, "poly": e.text()})).collect();
        return Ok(Doc::new(text, json!({"kind": "corpus", "entries": entries})));
    }
    let opts = ctx.opts;
    let runs: Vec<CorpusRun> = std::thread::scope(|s| {
        let handles: Vec<_> = CORPUS.iter().map(|e| s.spawn(move || run_entry(e, opts))).collect();
        handles.into_iter().map(|h| h.join().expect("corpus worker panicked")).collect()
    });
    let mut text = String::new();
    let mut entries = Vec::new();
    let mut code = 0;
    for r in &runs {
        let (verdict, failed, detail) = match &r.result {
            Ok(rs) => {
                let failed: Vec<String> = rs.iter().filter(|x| x.verdict == Verdict::Fail).map(|x| x.name.clone()).collect();
                let v = if failed.is_empty() { "pass" } else { "fail" };
                (v, failed, json!(rs.iter().map(output::check).collect::<Vec<_>>()))
            }
            Err(e) => ("error", Vec::new(), json!(e)),
        };
        code = code.max(match verdict {
            "pass" => 0,
            "fail" => 1,
            _ => 2,
        });
        write!(text, "{:<6} {:<26} {}", verdict, r.entry.name, r.entry.text()).unwrap();
        match &r.result {
            Ok(rs) if failed.is_empty() => writeln!(text, "  ({} checks)", rs.len()).unwrap(),
            Ok(_) => writeln!(text, "  failed: {}", failed.join(", ")).unwrap(),
            Err(e) => writeln!(text, "  {}", e).unwrap(),
        }
        entries.push(json!({
            "name": r.entry.name,
            "poly": r.entry.text(),
            "verdict": verdict,
            "failed": failed,
            "reports": detail,
        }));
    }
    let mut d = Doc::new(text, json!({"kind": "corpus", "entries": entries}));
    d.code = code;
    Ok(d)
}

fn dispatch(cli: &Cli) -> CliResult<Doc> {
    let ctx = Ctx::from_cli(cli)?;
    if cli.format == Format::Dot && !matches!(cli.cmd, Cmd::Resolve { .. }) {
        return Err(CliError::Usage(String::from("--format dot is only available for resolve")));
    }
    if ctx.form.as_ref().is_some_and(|_| !matches!(cli.cmd, Cmd::Resolve { .. } | Cmd::Zeta(ZetaCmd::Top { .. }))) {
        return Err(CliError::Usage(String::from("--form applies to resolve and zeta top")));
    }
    match &cli.cmd {
        Cmd::Resolve { poly } => cmd_resolve(&ctx, poly),
        Cmd::Zeta(ZetaCmd::Top { poly }) => cmd_zeta_top(&ctx, poly),
        Cmd::Zeta(ZetaCmd::TopMulti { polys }) => cmd_zeta_multi(&ctx, polys),
        Cmd::Zeta(ZetaCmd::Padic { poly }) => cmd_padic(&ctx, poly),
        Cmd::Zeta(ZetaCmd::Motivic { poly }) => cmd_motivic(&ctx, poly),
        Cmd::Count { poly } => cmd_count(&ctx, poly),
        Cmd::Monodromy { poly } => cmd_monodromy(&ctx, poly),
        Cmd::Lct { poly } => cmd_lct(&ctx, poly),
        Cmd::Check(which) => cmd_check(&ctx, which),
        Cmd::Corpus { list } => cmd_corpus(&ctx, *list),
    }
}

fn render(doc: &Doc, format: Format) -> String {
    match format {
        Format::Text => doc.text.clone(),
        Format::Json => serde_json::to_string_pretty(&doc.json).expect("JSON values always serialize") + "\n",
        Format::Dot => doc.dot.clone().unwrap_or_default(),
    }
}

/// Parses `args` (including the program name), runs the command and
/// writes its output to `out` or to `--out FILE`, and errors to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let doc = match dispatch(&cli) {
        Ok(d) => d,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            return 2;
        }
    };
    let body = render(&doc, cli.format);
    let written = match &cli.out {
        Some(path) => std::fs::write(path, body).map_err(|e| format!("{}: {}", path.display(), e)),
        None => out.write_all(body.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {}", e);
        return 2;
    }
    doc.code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(verdict: Verdict) -> CheckReport {
        CheckReport {
            name: String::from("r"),
            verdict,
            witnesses: Vec::new(),
            counterexample: None,
        }
    }

    #[test]
    fn verdicts_map_to_exit_codes() {
        assert_eq!(exit_code(&[]), 0);
        assert_eq!(exit_code(&[report(Verdict::Pass), report(Verdict::Inapplicable)]), 0);
        assert_eq!(exit_code(&[report(Verdict::Pass), report(Verdict::Fail)]), 1);
    }
}

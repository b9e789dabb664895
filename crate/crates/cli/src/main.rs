//! `binforms`: construct the trigonometric and Chebyshev binary forms,
//! compute their automorphism groups and invariants, and re-run the
//! verification sweeps.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 computational failure.

use std::process::ExitCode;

use binforms::aut::{aut_brute_force, aut_search, aut_search_with_roots, xiao_cubic_aut, AutOptions, AutResult};
use binforms::chebyshev::{factor_u_tilde, factor_v_tilde, t_form, u_form, TildeFactorization};
use binforms::expected::Family;
use binforms::invariants::{c_f, c_f_with_roots, InvariantReport, DEFAULT_REL_TOL};
use binforms::source::{parse_source, FormSource};
use binforms::trig::{c_of_n, pi_form, psi, psi_form};
use binforms::verify::{compare_table, verify, CellComparison, Statement, TableId, VerificationRecord, VerifyOptions};
use binforms::{Error, MatrixGroup};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "binforms", version, about = "Binary forms of 2cos(2π/n), 2sin(2π/n) and Chebyshev polynomials")]
struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Working precision of root computations, in bits.
    #[arg(long, global = true, default_value_t = 192)]
    precision: u32,
    /// Largest denominator accepted when reconstructing matrix entries.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    denom_bound: u64,
    /// Relative tolerance of the area quadrature.
    #[arg(long, global = true, default_value_t = DEFAULT_REL_TOL)]
    tol: f64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal polynomial of 2cos(2π/n) or 2sin(2π/n).
    Minpoly { kind: Kind, n: u64 },
    /// Chebyshev form T, U or a rescaled form utilde, vtilde with its Ψ-factors.
    Chebyshev { kind: ChebKind, n: usize },
    /// Resolve a form source and print the form.
    Form { source: String },
    /// Rational automorphism groups Aut F and Aut|F|.
    Aut {
        source: String,
        #[arg(long, value_enum, default_value_t = Method::Search)]
        method: Method,
        /// Entry bound of the exhaustive search.
        #[arg(long, default_value_t = 6)]
        height: i64,
    },
    /// The invariants W, A and C = W·A.
    Invariants { source: String },
    /// Check a statement over a range of n (`all` runs every statement).
    Verify {
        statement: String,
        #[arg(long)]
        min: Option<u64>,
        #[arg(long)]
        max: Option<u64>,
        /// Print passing records too.
        #[arg(long)]
        all: bool,
    },
    /// Recompute a reference invariant table next to its tabulated values.
    Table { which: String },
    /// Per-n records of one of the long sweeps.
    Sweep {
        #[arg(value_enum)]
        which: SweepKind,
        #[arg(long)]
        min: Option<u64>,
        #[arg(long)]
        max: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Cos,
    Sin,
}

#[derive(Clone, Copy, ValueEnum)]
enum ChebKind {
    #[value(name = "T")]
    T,
    #[value(name = "U")]
    U,
    Utilde,
    Vtilde,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Search,
    Brute,
    Cubic,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepKind {
    Reciprocal,
    Psi1bound,
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidArgument(_) | Error::OutOfScope(_) | Error::Io(_) | Error::Json(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Compute(e.to_string()),
        }
    }
}

type CmdResult = std::result::Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}

fn aut_options(cli: &Cli) -> AutOptions {
    AutOptions { precision: cli.precision, denom_bound: cli.denom_bound }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Minpoly { kind, n } => cmd_minpoly(cli, *kind, *n),
        Command::Chebyshev { kind, n } => cmd_chebyshev(cli, *kind, *n),
        Command::Form { source } => cmd_form(cli, source),
        Command::Aut { source, method, height } => cmd_aut(cli, source, *method, *height),
        Command::Invariants { source } => cmd_invariants(cli, source),
        Command::Verify { statement, min, max, all } => cmd_verify(cli, statement, *min, *max, *all),
        Command::Table { which } => cmd_table(cli, which),
        Command::Sweep { which, min, max } => cmd_sweep(cli, *which, *min, *max),
    }
}

fn cmd_minpoly(cli: &Cli, kind: Kind, n: u64) -> CmdResult {
    if n == 0 {
        return Err(Failure::Usage("n must be positive".into()));
    }
    let (label, m, form) = match kind {
        Kind::Cos => (format!("Ψ_{n}"), n, psi_form(n)),
        Kind::Sin => {
            let m = c_of_n(n)?;
            (format!("Π_{n}"), m, pi_form(n)?)
        }
    };
    let poly = psi(m);
    if cli.json {
        print_json(&json!({
            "label": label,
            "n": n,
            "psi_index": m,
            "poly": poly.to_string(),
            "form": form,
        }));
    } else {
        match kind {
            Kind::Cos => println!("{label}(x) = {poly}"),
            Kind::Sin => println!("{label}(x) = Ψ_{m}(x) = {poly}"),
        }
        println!("{label}(x, y) = {form}");
    }
    Ok(true)
}

fn factor_json(f: &TildeFactorization) -> Value {
    json!({
        "x_power": f.x_power,
        "factors": f.factors.iter().map(|(d, form)| json!({"psi": d, "form": form})).collect::<Vec<_>>(),
    })
}

fn cmd_chebyshev(cli: &Cli, kind: ChebKind, n: usize) -> CmdResult {
    let (label, form, factors) = match kind {
        ChebKind::T => (format!("T_{n}"), t_form(n), None),
        ChebKind::U => (format!("U_{n}"), u_form(n), None),
        ChebKind::Utilde => {
            let f = factor_u_tilde(n)?;
            (format!("Ũ_{n}"), f.product(), Some(f))
        }
        ChebKind::Vtilde => {
            let f = factor_v_tilde(n)?;
            (format!("Ṽ_{n}"), f.product(), Some(f))
        }
    };
    if cli.json {
        let mut v = json!({"label": label, "form": form});
        if let Some(f) = &factors {
            v["factorization"] = factor_json(f);
        }
        print_json(&v);
    } else {
        println!("{label}(x, y) = {form}");
        if let Some(f) = &factors {
            let mut parts: Vec<String> = Vec::new();
            if f.x_power > 0 {
                parts.push("x".into());
            }
            parts.extend(f.factors.iter().map(|(d, _)| format!("Ψ_{d}")));
            println!("         = {}", parts.join(" · "));
            for (d, form) in &f.factors {
                println!("  Ψ_{d} = {form}");
            }
        }
    }
    Ok(true)
}

fn cmd_form(cli: &Cli, source: &str) -> CmdResult {
    let src = parse_source(source)?;
    let disc = src.form.discriminant()?;
    if cli.json {
        print_json(&json!({
            "label": src.label,
            "form": src.form,
            "display": src.form.to_string(),
            "discriminant": disc.to_string(),
            "integral": src.form.is_integral(),
        }));
    } else {
        println!("{} = {}", src.label, src.form);
        println!("degree       {}", src.form.degree());
        println!("discriminant {disc}");
        println!("form JSON    {}", serde_json::to_string(&src.form).expect("forms serialize"));
    }
    Ok(true)
}

fn group_text(g: &MatrixGroup) -> String {
    g.elements.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", ")
}

fn search(src: &FormSource, opts: &AutOptions) -> binforms::Result<AutResult> {
    match src.closed_roots(opts.precision) {
        Some(roots) => aut_search_with_roots(&src.form, &roots, opts),
        None => aut_search(&src.form, opts),
    }
}

fn cmd_aut(cli: &Cli, source: &str, method: Method, height: i64) -> CmdResult {
    let src = parse_source(source)?;
    if method == Method::Cubic {
        let g = xiao_cubic_aut(&src.form)?;
        if cli.json {
            print_json(&json!({
                "label": src.label,
                "method": "cubic",
                "applicable": g.is_some(),
                "elements": g.as_ref().map(|g| &g.elements),
                "class": g.as_ref().map(|g| g.classify()).transpose()?,
            }));
        } else {
            match g {
                Some(g) => println!("Aut {} = {} = {{{}}}", src.label, g.classify()?, group_text(&g)),
                None => println!("{}: discriminant is not a square, the cubic route does not apply", src.label),
            }
        }
        return Ok(true);
    }
    let r = match method {
        Method::Brute => aut_brute_force(&src.form, height)?,
        _ => search(&src, &aut_options(cli))?,
    };
    if cli.json {
        print_json(&json!({
            "label": src.label,
            "form": src.form,
            "elements": r.aut.elements,
            "generators": r.aut.generators,
            "class": r.class,
            "order": r.aut.order,
            "abs_elements": r.aut_abs.elements,
            "abs_generators": r.aut_abs.generators,
            "abs_class": r.abs_class,
            "abs_order": r.aut_abs.order,
        }));
    } else {
        println!("{} = {}", src.label, src.form);
        println!("Aut F   = {} (order {}): {{{}}}", r.class, r.aut.order, group_text(&r.aut));
        println!("Aut |F| = {} (order {}): {{{}}}", r.abs_class, r.aut_abs.order, group_text(&r.aut_abs));
    }
    Ok(true)
}

fn report_for(cli: &Cli, src: &FormSource) -> binforms::Result<InvariantReport> {
    let opts = aut_options(cli);
    match src.closed_roots(opts.precision) {
        Some(roots) => c_f_with_roots(&src.form, &roots, &opts, cli.tol),
        None => c_f(&src.form, &opts, cli.tol),
    }
}

fn cmd_invariants(cli: &Cli, source: &str) -> CmdResult {
    let src = parse_source(source)?;
    let report = report_for(cli, &src)?;
    if cli.json {
        print_json(&serde_json::to_value(&report).expect("reports serialize"));
        return Ok(true);
    }
    println!("{} = {}", src.label, src.form);
    let show = |x: Option<String>| x.unwrap_or_else(|| "---".into());
    println!("Aut F  {} (order {})", show(report.class.map(|c| c.to_string())), show(report.order.map(|o| o.to_string())));
    println!("m      {}", show(report.m.as_ref().map(|m| m.to_string())));
    println!("W      {}", show(report.w.as_ref().map(|w| w.to_string())));
    if report.divergent {
        println!("A      ∞ (divergent)");
    } else {
        println!("A      {} ± {:.1e}", show(report.a.map(|a| format!("{a:.10}"))), report.a_err.unwrap_or(f64::NAN));
    }
    println!("C      {}", show(report.c.map(|c| format!("{c:.10}"))));
    for note in &report.notes {
        println!("note   {note}");
    }
    Ok(true)
}

fn verify_options(cli: &Cli, min: Option<u64>, max: Option<u64>) -> VerifyOptions {
    VerifyOptions { min, max, aut: aut_options(cli), rel_tol: cli.tol, ..Default::default() }
}

fn record_line(r: &VerificationRecord) -> String {
    let verdict = if r.passed() { "PASS" } else { "FAIL" };
    let n = r.n.map(|n| format!(" n={n}")).unwrap_or_default();
    if r.witness.is_empty() {
        format!("{verdict} {}{n} {}", r.statement, r.subject)
    } else {
        format!("{verdict} {}{n} {}: {}", r.statement, r.subject, r.witness)
    }
}

fn cmd_verify(cli: &Cli, statement: &str, min: Option<u64>, max: Option<u64>, all: bool) -> CmdResult {
    let statements: Vec<Statement> = if statement == "all" {
        Statement::ALL.to_vec()
    } else {
        vec![statement.parse()?]
    };
    let opts = verify_options(cli, min, max);
    let mut records = Vec::new();
    for st in statements {
        let recs = verify(st, &opts)?;
        if !cli.json {
            for r in recs.iter().filter(|r| all || !r.passed()) {
                println!("{}", record_line(r));
            }
            let fails = recs.iter().filter(|r| !r.passed()).count();
            println!("{st}: {} checked, {} passed, {fails} failed", recs.len(), recs.len() - fails);
        }
        records.extend(recs);
    }
    if cli.json {
        print_json(&serde_json::to_value(&records).expect("records serialize"));
    }
    Ok(records.iter().all(VerificationRecord::passed))
}

fn cmd_table(cli: &Cli, which: &str) -> CmdResult {
    let id: TableId = which.parse()?;
    let cells = compare_table(id, &verify_options(cli, None, None))?;
    if cli.json {
        print_json(&serde_json::to_value(&cells).expect("cells serialize"));
    } else {
        println!("{:<8} {:<4} {:>12} {:>14} {:>10}  ok", "form", "", "reference", "computed", "rel.err");
        for c in &cells {
            print_cell(c);
        }
    }
    Ok(cells.iter().all(|c| c.ok))
}

fn print_cell(c: &CellComparison) {
    let form = format!("{}_{}", symbol(c.family), c.n);
    let rel = c.rel_error.map(|r| format!("{r:.2e}")).unwrap_or_default();
    let mark = if c.ok { "yes" } else { "NO" };
    println!("{form:<8} {:<4} {:>12} {:>14} {rel:>10}  {mark}", c.quantity, c.reference, c.computed);
}

fn symbol(f: Family) -> &'static str {
    binforms::verify::family_symbol(f)
}

fn cmd_sweep(cli: &Cli, which: SweepKind, min: Option<u64>, max: Option<u64>) -> CmdResult {
    let st = match which {
        SweepKind::Reciprocal => Statement::Reciprocal,
        SweepKind::Psi1bound => Statement::Psi1Bound,
    };
    let records = verify(st, &verify_options(cli, min, max))?;
    if cli.json {
        let rows: Vec<Value> = records
            .iter()
            .map(|r| json!({"n": r.n, "verdict": r.verdict, "witness": r.witness}))
            .collect();
        print_json(&Value::Array(rows));
    } else {
        for r in &records {
            println!("{}", record_line(r));
        }
    }
    Ok(records.iter().all(VerificationRecord::passed))
}

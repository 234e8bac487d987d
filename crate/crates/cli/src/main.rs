//! `onebridge`: invariants of 1-bridge torus knots from Schubert and Conway normal forms.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use onebridge::alexander::alexander_poly_in;
use onebridge::doublecover::{h1_double_cover, h1_double_cover_snf, s3_determinant, triviality_tests};
use onebridge::exactalg::evaluate;
use onebridge::knotgroup::KnotExterior;
use onebridge::literal::{parse_any, parse_lens, Form};
use onebridge::mcg::conway_to_hword;
use onebridge::schubert::{count_components_fast, count_components_oracle};
use onebridge::sweep::{double_cover_sweep, homology_sweep, oracle_sweep, symmetry_sweep};
use onebridge::{AbelianGroupInvariants, ConwayForm, Error, LaurentPoly, LensSpace, SchubertForm, Word};

#[derive(Parser, Debug)]
#[command(name = "onebridge", version, about = "Invariants of 1-bridge torus knots in lens spaces")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,

    /// Ambient lens space L(p,q) as p/q; 1/0 is S^3.
    #[arg(long, global = true, default_value = "1/0")]
    lens: String,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Also run the independent reference computation and compare.
    #[arg(long, global = true)]
    oracle: bool,

    /// Write JSON output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Number of components of the curve of a Schubert form.
    Components { form: String },
    /// One-relator presentation of the knot group.
    Group {
        form: String,
        /// Show the relator cyclically reduced.
        #[arg(long)]
        cyclic: bool,
    },
    /// First homology of the knot exterior.
    H1Exterior { form: String },
    /// Alexander polynomial (S^3 only).
    Alexander { form: String },
    /// Whether a k-fold cyclic branched cover exists.
    CoverExists {
        form: String,
        #[arg(long, default_value_t = 2)]
        k: i64,
    },
    /// First homology of the double branched cover of a Conway form.
    DoubleH1 { form: String },
    /// Knot determinant |Δ(-1)|.
    Determinant { form: String },
    /// Evaluate constructions and show equivalent forms.
    Convert { form: String },
    /// Run the consistency sweeps.
    Sweep {
        /// Bound on r, s, t.
        #[arg(long, default_value_t = 4)]
        max: u64,
        /// Bound on p for lens spaces.
        #[arg(long, default_value_t = 8)]
        max_p: i64,
        /// Bound on |a_i| for Conway forms.
        #[arg(long, default_value_t = 2)]
        bound: i64,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: if e.is_precondition() { 2 } else { 1 }, message: e.to_string() }
    }
}

fn usage(message: String) -> Failure {
    Failure { code: 1, message }
}

/// Result of a verb: text rendering, JSON `result` field, engine name, and exit code.
struct Report {
    text: String,
    result: Value,
    engine: &'static str,
    code: u8,
}

impl Report {
    fn ok(text: impl Into<String>, result: Value, engine: &'static str) -> Self {
        Self { text: text.into(), result, engine, code: 0 }
    }
}

fn big(b: &BigInt) -> Value {
    serde_json::from_str(&b.to_string()).expect("integer literal is valid JSON")
}

fn word_json<G: Copy + Eq + std::fmt::Display>(w: &Word<G>) -> Value {
    Value::Array(w.letters().iter().map(|(g, e)| json!([g.to_string(), e])).collect())
}

fn poly_json(p: &LaurentPoly) -> Value {
    Value::Array(p.terms().map(|(e, c)| json!([e, big(c)])).collect())
}

fn group_json(g: &AbelianGroupInvariants) -> Value {
    json!({
        "text": g.to_string(),
        "free_rank": g.free_rank,
        "torsion": g.torsion.iter().map(big).collect::<Vec<_>>(),
    })
}

fn schubert(form: &Form) -> Result<SchubertForm, Failure> {
    match form {
        Form::Schubert(f) => Ok(*f),
        Form::Conway(c) => Err(usage(format!("this verb needs a Schubert form, got {c}"))),
    }
}

fn conway(form: &Form) -> Result<ConwayForm, Failure> {
    match form {
        Form::Conway(c) => Ok(c.clone()),
        Form::Schubert(f) => Err(usage(format!("this verb needs a Conway form, got {f}"))),
    }
}

fn components(f: &SchubertForm, oracle: bool) -> Report {
    let fast = count_components_fast(f);
    if !oracle {
        return Report::ok(fast.to_string(), json!(fast), "fast");
    }
    let traced = count_components_oracle(f);
    let mut r = Report::ok(
        format!("fast: {fast}\ntracer: {traced}"),
        json!({ "fast": fast, "tracer": traced }),
        "fast+tracer",
    );
    if fast != traced {
        r.code = 3;
    }
    r
}

fn determinant(form: &Form) -> Result<Report, Failure> {
    Ok(match form {
        Form::Conway(c) => {
            let d = s3_determinant(c);
            Report::ok(d.to_string(), big(&d), "z-recursion")
        }
        Form::Schubert(f) => {
            let d = evaluate(&alexander_poly_in(f, LensSpace::s3())?, -1)?;
            let d = if d < BigInt::from(0) { -d } else { d };
            Report::ok(d.to_string(), big(&d), "alexander")
        }
    })
}

fn convert(form: &Form) -> Report {
    match form {
        Form::Schubert(f) => {
            let count = count_components_fast(f);
            let text = format!(
                "form: {f}\nnormalized: {}\nswap_st: {}\nmirror: {}\ncomponents: {count}",
                f.normalize(),
                f.swap_st(),
                f.mirror()
            );
            let result = json!({
                "form": f.to_string(),
                "normalized": f.normalize().to_string(),
                "swap_st": f.swap_st().to_string(),
                "mirror": f.mirror().to_string(),
                "components": count,
            });
            Report::ok(text, result, "schubert")
        }
        Form::Conway(c) => {
            let (w, delta) = conway_to_hword(c);
            let verdict = triviality_tests(c);
            let det = s3_determinant(c);
            let text =
                format!("form: {c}\nword: {w}\ndelta: {delta}\ndeterminant: {det}\ntriviality: {verdict}");
            let result = json!({
                "form": c.to_string(),
                "word": word_json(&w),
                "delta": delta,
                "determinant": big(&det),
                "triviality": verdict.to_string(),
            });
            Report::ok(text, result, "conway")
        }
    }
}

fn sweep(max: u64, max_p: i64, bound: i64) -> Report {
    let reports = [
        oracle_sweep(max),
        symmetry_sweep(max),
        homology_sweep(max, max_p),
        double_cover_sweep(bound, max_p),
    ];
    let mut text = Vec::new();
    for r in &reports {
        text.push(format!("{} {r}", if r.passed() { "PASS" } else { "FAIL" }));
        text.extend(r.failures.iter().map(|f| format!("  {f}")));
    }
    let result = Value::Array(
        reports
            .iter()
            .map(|r| json!({ "name": r.name, "cases": r.cases, "failed": r.failed, "failures": r.failures }))
            .collect(),
    );
    let mut rep = Report::ok(text.join("\n"), result, "sweep");
    if reports.iter().any(|r| !r.passed()) {
        rep.code = 3;
    }
    rep
}

fn run(cli: &Cli) -> Result<(String, Report), Failure> {
    let lens = parse_lens(&cli.lens)?;
    let input = match &cli.verb {
        Verb::Sweep { .. } => String::new(),
        Verb::Components { form }
        | Verb::Group { form, .. }
        | Verb::H1Exterior { form }
        | Verb::Alexander { form }
        | Verb::CoverExists { form, .. }
        | Verb::DoubleH1 { form }
        | Verb::Determinant { form }
        | Verb::Convert { form } => form.clone(),
    };
    let form = || parse_any(&input).map_err(Failure::from);
    let report = match &cli.verb {
        Verb::Components { .. } => components(&schubert(&form()?)?, cli.oracle),
        Verb::Group { cyclic, .. } => {
            let k = KnotExterior::new(&schubert(&form()?)?)?;
            let mut p = k.presentation(lens);
            if *cyclic {
                p.relators = p.relators.iter().map(|r| r.cyclically_reduced()).collect();
            }
            let result = json!({
                "generators": p.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                "relators": p.relators.iter().map(word_json).collect::<Vec<_>>(),
            });
            Report::ok(p.to_string(), result, "trace")
        }
        Verb::H1Exterior { .. } => {
            let k = KnotExterior::new(&schubert(&form()?)?)?;
            let g = k.h1_exterior(lens);
            let mut r = Report::ok(g.to_string(), group_json(&g), "formula");
            if cli.oracle {
                r.engine = "formula+snf";
                if k.h1_exterior_snf(lens) != g {
                    r.code = 3;
                }
            }
            r
        }
        Verb::Alexander { .. } => {
            let d = alexander_poly_in(&schubert(&form()?)?, lens)?;
            Report::ok(d.to_string(), poly_json(&d), "fox-calculus")
        }
        Verb::CoverExists { k, .. } => {
            let ext = KnotExterior::new(&schubert(&form()?)?)?;
            let exists = ext.kfold_cover_exists(lens, *k)?;
            let mut r = Report::ok(exists.to_string(), json!(exists), "homology");
            if cli.oracle && *k == 2 {
                r.engine = "homology+parity";
                if ext.double_cover_exists(lens) != exists {
                    r.code = 3;
                }
            }
            r
        }
        Verb::DoubleH1 { .. } => {
            let c = conway(&form()?)?;
            let g = h1_double_cover(&c, lens)?;
            let mut r = Report::ok(g.to_string(), group_json(&g), "formula");
            if cli.oracle {
                r.engine = "formula+snf";
                if h1_double_cover_snf(&c, lens)? != g {
                    r.code = 3;
                }
            }
            r
        }
        Verb::Determinant { .. } => determinant(&form()?)?,
        Verb::Convert { .. } => convert(&form()?),
        Verb::Sweep { max, max_p, bound } => sweep(*max, *max_p, *bound),
    };
    Ok((input, report))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (input, report) = match run(&cli) {
        Ok(x) => x,
        Err(f) => {
            eprintln!("error: {}", f.message);
            return ExitCode::from(f.code);
        }
    };
    let output = match cli.format {
        Format::Text => report.text.clone(),
        Format::Json => {
            let lens = parse_lens(&cli.lens).unwrap_or_default();
            let v = json!({
                "input": input,
                "ambient": { "p": lens.p(), "q": lens.q(), "text": lens.to_string() },
                "result": report.result,
                "engine": report.engine,
            });
            serde_json::to_string(&v).expect("JSON values serialize")
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, format!("{output}\n")) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => {
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout(), "{output}");
        }
    }
    if report.code == 3 {
        eprintln!("error: engines disagree");
    }
    ExitCode::from(report.code)
}

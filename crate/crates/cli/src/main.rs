//! `gwadams`: universal polynomials, Adams operations, omega classes, ternary
//! laws, Gram-matrix forms and the verification suites.
//!
//! Exit codes: 0 pass, 1 at least one failure, 2 usage or parse error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gwadams::borel::{omega_class, ternary_laws, Theory};
use gwadams::forms::{gw_identity_check, invariants, GWQInvariants};
use gwadams::gw::NamedConstant;
use gwadams::lambda::adams_signed;
use gwadams::symfunc::{load_cache, save_cache, universal_p, universal_q, universal_r, RMethod, UniversalPoly};
use gwadams::symring::Style;
use gwadams::verify::{run_suite, SUITES};
use gwadams::{GWElem, QGram, SymClass, SymRing, Symmetry};

#[derive(Parser)]
#[command(name = "gwadams", version, about = "Adams operations on Grothendieck-Witt coefficient rings")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Composed,
    Both,
}

#[derive(Subcommand)]
enum Cmd {
    /// Universal polynomial `P n`, `Q i j` or `R n`.
    Universal {
        /// One of P, Q, R.
        kind: String,
        indices: Vec<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Raise the index bound (n for P and R, i*j for Q).
        #[arg(long)]
        max: Option<usize>,
        /// Pipeline for R.
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
    /// omega(n), or the table omega(0..=N).
    Omega {
        n: Option<u64>,
        #[arg(long)]
        table: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// psi^n of a named constant (`tau`, `h`, `eps`, `<-1>`, `gamma`, `h2i:I`,
    /// `nstar:N`, `omega:N`) or of a class given as JSON.
    Adams {
        #[arg(allow_hyphen_values = true)]
        n: i64,
        #[arg(long)]
        target: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Ternary laws F_1..F_4 of a theory.
    Ternary {
        #[arg(long, default_value = "gw")]
        theory: String,
        #[arg(long)]
        class: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a verification suite.
    Verify {
        suite: String,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        no_timestamp: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Gram-matrix operations over Q. Forms are JSON
    /// `{"sym":"symmetric","matrix":[["1","0"],["0","-1"]]}`, inline or as a file path.
    Form(FormArgs),
}

#[derive(Args)]
struct FormArgs {
    #[command(subcommand)]
    op: FormOp,
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
}

#[derive(Subcommand)]
enum FormOp {
    ExtPower { n: usize, form: String },
    SymPower { n: usize, form: String },
    Tensor { a: String, b: String },
    /// H(E) for trivial E of the given rank.
    Hyperbolic {
        rank: usize,
        #[arg(long)]
        skew: bool,
    },
    Invariants { form: String },
    /// Compare two orthogonal sums in GW(Q); each side is a form or a JSON array of forms.
    GwEqual { lhs: String, rhs: String },
}

enum Failure {
    Usage(String),
    Fail,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match cli.cmd {
        Cmd::Universal { kind, indices, format, max, method } => cmd_universal(&kind, &indices, format, max, method),
        Cmd::Omega { n, table, format } => cmd_omega(n, table, format),
        Cmd::Adams { n, target, format } => cmd_adams(n, &target, format),
        Cmd::Ternary { theory, class, format } => cmd_ternary(&theory, class, format),
        Cmd::Verify { suite, json, no_timestamp, format } => cmd_verify(&suite, json.as_deref(), no_timestamp, format),
        Cmd::Form(f) => cmd_form(f.op, f.format),
    };
    match out {
        Ok(s) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(Failure::Fail) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn line(mut s: String) -> String {
    s.push('\n');
    s
}

fn render_poly(u: &UniversalPoly, format: Format) -> String {
    match format {
        Format::Text => u.value.to_text(),
        Format::Latex => u.value.to_latex(),
        Format::Json => u.value.to_json(),
    }
}

fn cmd_universal(kind: &str, idx: &[usize], format: Format, max: Option<usize>, method: Option<Method>) -> CliResult {
    let bound = |size: usize, default: usize, what: &str| -> Result<(), Failure> {
        let limit = max.unwrap_or(default);
        if size > limit {
            return Err(Failure::Usage(format!("{what} = {size} exceeds the bound {limit}; pass --max to raise it")));
        }
        Ok(())
    };
    let arity = |k: usize| -> Result<(), Failure> {
        if idx.len() != k {
            return Err(Failure::Usage(format!("{kind} takes {k} index(es), got {}", idx.len())));
        }
        Ok(())
    };
    if method.is_some() && !kind.eq_ignore_ascii_case("r") {
        return Err(Failure::Usage("--method applies to R only".into()));
    }
    let cache = std::env::var_os("GWADAMS_CACHE").map(PathBuf::from);
    if let Some(p) = cache.as_deref().filter(|p| p.exists()) {
        load_cache(p)?;
    }
    let out = match kind {
        "P" | "p" => {
            arity(1)?;
            bound(idx[0], 4, "n")?;
            line(render_poly(&universal_p(idx[0]), format))
        }
        "Q" | "q" => {
            arity(2)?;
            bound(idx[0] * idx[1], 6, "i*j")?;
            line(render_poly(&universal_q(idx[0], idx[1])?, format))
        }
        "R" | "r" => {
            arity(1)?;
            bound(idx[0], 4, "n")?;
            match method.unwrap_or(Method::Composed) {
                Method::Direct => line(render_poly(&universal_r(idx[0], RMethod::Direct), format)),
                Method::Composed => line(render_poly(&universal_r(idx[0], RMethod::Composed), format)),
                Method::Both => {
                    let d = universal_r(idx[0], RMethod::Direct);
                    let c = universal_r(idx[0], RMethod::Composed);
                    let agree = d.value == c.value;
                    let s = format!(
                        "{}\n{}\n{}\n",
                        render_poly(&d, format),
                        render_poly(&c, format),
                        if agree { "agree" } else { "disagree" }
                    );
                    if !agree {
                        print!("{s}");
                        return Err(Failure::Fail);
                    }
                    s
                }
            }
        }
        _ => return Err(Failure::Usage(format!("unknown universal polynomial `{kind}`; expected P, Q or R"))),
    };
    if let Some(p) = cache.as_deref() {
        save_cache(p)?;
    }
    Ok(out)
}

fn render_gw(x: &GWElem, format: Format) -> String {
    match format {
        Format::Text => x.to_text(),
        Format::Latex => x.to_latex(),
        Format::Json => x.to_json(),
    }
}

fn cmd_omega(n: Option<u64>, table: Option<u64>, format: Format) -> CliResult {
    match (n, table) {
        (Some(n), None) => Ok(line(match format {
            Format::Json => serde_json::to_string(&omega_class(n))?,
            _ => render_gw(&omega_class(n).value, format),
        })),
        (None, Some(m)) => {
            let rows: Vec<_> = (0..=m).map(omega_class).collect();
            Ok(match format {
                Format::Json => line(serde_json::to_string_pretty(&rows)?),
                Format::Text => rows.iter().map(|c| format!("omega({}) = {}\n", c.n, c.value.to_text())).collect(),
                Format::Latex => rows.iter().map(|c| format!("\\omega({}) = {}\n", c.n, c.value.to_latex())).collect(),
            })
        }
        _ => Err(Failure::Usage("give either n or --table N".into())),
    }
}

fn parse_target(s: &str) -> Result<SymClass, Failure> {
    if s.trim_start().starts_with('{') {
        return Ok(SymClass::from_json(s)?);
    }
    let c: NamedConstant = s.parse()?;
    Ok(SymClass::constant(&SymRing::base(), c.value()))
}

fn cmd_adams(n: i64, target: &str, format: Format) -> CliResult {
    let x = parse_target(target)?;
    let y = adams_signed(n, &x)?;
    Ok(line(match (y.as_constant(), format) {
        (_, Format::Json) => y.to_json(),
        (Some(c), f) => render_gw(&c, f),
        (None, Format::Text) => y.to_text(),
        (None, Format::Latex) => y.to_latex(),
    }))
}

fn cmd_ternary(theory: &str, class: Option<usize>, format: Format) -> CliResult {
    let theory: Theory = theory.parse()?;
    if let Some(c) = class.filter(|c| !(1..=4).contains(c)) {
        return Err(Failure::Usage(format!("--class {c} is out of range 1..=4")));
    }
    let laws = ternary_laws(theory)?;
    let chosen: Vec<_> = laws.iter().filter(|l| class.is_none_or(|c| c == l.index)).collect();
    let style = if format == Format::Latex { Style::Latex } else { Style::Pretty };
    if format == Format::Json {
        let rows: Vec<_> = chosen
            .iter()
            .map(|l| {
                serde_json::json!({
                    "theory": l.theory.name(),
                    "class": l.index,
                    "text": l.value.render(Style::Text),
                    "latex": l.value.render(Style::Latex),
                })
            })
            .collect();
        return Ok(line(serde_json::to_string_pretty(&rows)?));
    }
    Ok(match class {
        Some(_) => line(chosen[0].value.render(style)),
        None if format == Format::Latex => {
            chosen.iter().map(|l| format!("F_{{{}}} = {}\n", l.index, l.value.render(style))).collect()
        }
        None => chosen.iter().map(|l| format!("F{} = {}\n", l.index, l.value.render(style))).collect(),
    })
}

fn cmd_verify(suite: &str, json: Option<&Path>, no_timestamp: bool, format: Format) -> CliResult {
    if suite != "all" && !SUITES.contains(&suite) {
        return Err(Failure::Usage(format!("unknown suite `{suite}`; expected one of {}, all", SUITES.join(", "))));
    }
    let report = run_suite(suite)?;
    if let Some(path) = json {
        let mut stamped = report.clone();
        if !no_timestamp {
            stamped.stamp_now();
        }
        std::fs::write(path, line(stamped.to_json_pretty()))?;
    }
    let out = match format {
        Format::Json => line(report.to_json_pretty()),
        _ => report.to_text(),
    };
    if report.passed() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Fail)
    }
}

fn read_form(arg: &str) -> Result<QGram, Failure> {
    let src = if arg.trim_start().starts_with('{') { arg.to_string() } else { std::fs::read_to_string(arg)? };
    Ok(QGram::from_json(&src)?)
}

fn read_sum(arg: &str) -> Result<Vec<(i64, QGram)>, Failure> {
    let src = if arg.trim_start().starts_with(['{', '[']) { arg.to_string() } else { std::fs::read_to_string(arg)? };
    if src.trim_start().starts_with('[') {
        let vals: Vec<serde_json::Value> = serde_json::from_str(&src)?;
        vals.iter().map(|v| Ok((1, QGram::from_json(&v.to_string())?))).collect()
    } else {
        Ok(vec![(1, QGram::from_json(&src)?)])
    }
}

fn render_form(f: &QGram, format: Format) -> String {
    let rows = f.to_json_value().matrix;
    match format {
        Format::Json => line(f.to_json()),
        Format::Text => {
            let name = if f.sym() == Symmetry::Symmetric { "symmetric" } else { "skew" };
            let mut s = format!("{name} rank {}\n", f.rank());
            for r in rows {
                s.push_str(&format!("[{}]\n", r.join(", ")));
            }
            s
        }
        Format::Latex => {
            let body: Vec<String> = rows.iter().map(|r| r.join(" & ")).collect();
            line(format!("\\begin{{pmatrix}} {} \\end{{pmatrix}}", body.join(" \\\\ ")))
        }
    }
}

fn render_invariants(i: &GWQInvariants, format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Json => line(serde_json::to_string(i)?),
        _ => {
            let hasse: Vec<String> = i.hasse.iter().map(|(v, s)| format!("{v}:{s}")).collect();
            format!(
                "rank {}\nsignature {}\ndisc {}\nhasse {}\n",
                i.rank,
                i.signature,
                i.disc,
                if hasse.is_empty() { "-".to_string() } else { hasse.join(" ") }
            )
        }
    })
}

fn cmd_form(op: FormOp, format: Format) -> CliResult {
    match op {
        FormOp::ExtPower { n, form } => Ok(render_form(&read_form(&form)?.ext_power(n)?, format)),
        FormOp::SymPower { n, form } => Ok(render_form(&read_form(&form)?.sym_power(n)?, format)),
        FormOp::Tensor { a, b } => Ok(render_form(&read_form(&a)?.tensor(&read_form(&b)?), format)),
        FormOp::Hyperbolic { rank, skew } => {
            let sym = if skew { Symmetry::Skew } else { Symmetry::Symmetric };
            Ok(render_form(&QGram::hyperbolic(rank, sym), format))
        }
        FormOp::Invariants { form } => render_invariants(&invariants(&read_form(&form)?)?, format),
        FormOp::GwEqual { lhs, rhs } => {
            let c = gw_identity_check(&read_sum(&lhs)?, &read_sum(&rhs)?)?;
            let s = match format {
                Format::Json => line(
                    serde_json::json!({ "equal": c.equal, "lhs": c.lhs, "rhs": c.rhs, "diagnostic": c.diagnostic })
                        .to_string(),
                ),
                _ => format!("{}\n{}\n", if c.equal { "equal" } else { "not equal" }, c.diagnostic),
            };
            if c.equal {
                Ok(s)
            } else {
                print!("{s}");
                Err(Failure::Fail)
            }
        }
    }
}

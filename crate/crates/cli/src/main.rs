use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use inhomo::approx::{m_estimate, m_exact, m_exact_full, rho_search, MResult};
use inhomo::bounds::{bound_report, c_bound, cstar_reference_text, BoundReport};
use inhomo::digits::{alpha_expand, gamma_star, DigitSeq};
use inhomo::field::MAX_DECIMAL_DIGITS;
use inhomo::verify::{self, Suite};
use inhomo::{parse_digit_seq, parse_expr, parse_unit, Error, NcfExpansion, QuadNum, Record};
use serde_json::{json, Value};

const EXIT_USAGE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;
const EXIT_VERIFY: u8 = 4;

/// Exact negative continued fractions, alpha-expansions and inhomogeneous
/// approximation constants.
#[derive(Parser, Debug)]
#[command(name = "inhomo", version)]
struct Cli {
    /// Fractional digits in decimal output
    #[arg(long, global = true, default_value_t = 12, value_parser = clap::value_parser!(u32).range(0..=MAX_DECIMAL_DIGITS as i64))]
    digits: u32,
    /// Emit structured JSON records instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Negative continued fraction expansions
    #[command(subcommand)]
    Ncf(NcfCommand),
    /// Alpha-expansions of targets
    #[command(subcommand)]
    Gamma(GammaCommand),
    /// The constant M(alpha, gamma) and searches over targets
    #[command(subcommand)]
    Approx(ApproxCommand),
    /// Closed-form lower bounds
    #[command(subcommand)]
    Bound(BoundCommand),
    /// Run a verification suite
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
enum NcfCommand {
    /// Expand a value into its negative continued fraction
    Expand {
        expr: String,
        #[arg(long, default_value_t = 10_000)]
        max_terms: usize,
    },
    /// Exact value of an expansion
    Value { expr: String },
}

#[derive(Subcommand, Debug)]
enum GammaCommand {
    /// Alpha-expansion digits of gamma
    Expand {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        gamma: String,
        #[arg(long, default_value_t = 2_000)]
        max_terms: usize,
    },
    /// The target whose t-values are 0 on even and alternately +1, -1 on odd
    /// partial quotients
    Star {
        #[arg(long)]
        alpha: String,
    },
    /// Value of a digit sequence such as `b: [1, (0, 2, 0)*] over [0; (3)*]-`
    Reconstruct { seq: String },
}

#[derive(Subcommand, Debug)]
enum ApproxCommand {
    /// Compute M(alpha, gamma)
    M(MArgs),
    /// Search periodic targets for the largest M(alpha, gamma)
    RhoSearch {
        #[arg(long)]
        alpha: String,
        #[arg(long, default_value_t = 1)]
        period_mult: usize,
        /// Largest |t_i| considered
        #[arg(long)]
        t_cap: Option<u64>,
    },
}

#[derive(Args, Debug)]
struct MArgs {
    #[arg(long)]
    alpha: String,
    #[arg(long)]
    gamma: String,
    /// Exact evaluation from the limit s-values (default)
    #[arg(long, conflicts_with = "estimate")]
    exact: bool,
    /// Exact evaluation over all nearby approximations, valid when t_k = a_k recurs
    #[arg(long, conflicts_with = "estimate")]
    full: bool,
    /// Numeric estimate over this many dyadic bands of |n|
    #[arg(long, value_name = "BANDS")]
    estimate: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum BoundCommand {
    /// All constants for one R
    Report {
        #[arg(long = "r")]
        r: u64,
    },
    /// Reciprocals of the old and new lower bounds for R = 2..8
    Table,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_parser = clap::builder::PossibleValuesParser::new(Suite::ALL.map(Suite::name)))]
    suite: String,
    /// Write the assertion log to this file
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

enum Failure {
    Lib(Error),
    Io(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

struct Out {
    digits: usize,
    json: bool,
}

impl Out {
    fn emit(&self, text: String, record: Value) {
        if self.json {
            println!(
                "{}",
                serde_json::to_string_pretty(&record).expect("json values serialize")
            );
        } else {
            println!("{text}");
        }
    }

    fn record(&self, r: Record) -> Value {
        serde_json::to_value(r).expect("records serialize")
    }

    fn value_line(&self, name: &str, v: &QuadNum) -> String {
        format!("{name} = {v} = {}", v.to_decimal(self.digits))
    }
}

fn alpha_expansion(text: &str) -> Result<NcfExpansion, Error> {
    let e = parse_expr(text)?.expansion(10_000)?;
    if !e.is_finite() && e.value()?.in_unit_interval() {
        Ok(e)
    } else {
        Err(Error::FiniteExpansion)
    }
}

fn digit_json(d: &DigitSeq) -> Value {
    json!({
        "digits": d.to_string(),
        "t": d.t_string(),
        "pre": d.pre_digits(),
        "period": d.period_digits(),
        "truncated": d.is_truncated(),
    })
}

fn m_text(out: &Out, res: &MResult) -> String {
    match res {
        MResult::Exact { value, witness } => {
            let s = witness.j().map(|j| format!(" [s{j}]")).unwrap_or_default();
            format!(
                "{}\nkind: exact\nwitness: residue {}, k = {}, (u, v) = ({}, {}){s}",
                out.value_line("M", value),
                witness.residue,
                witness.k,
                witness.u,
                witness.v
            )
        }
        MResult::UpperBoundOnly { value, residues } => format!(
            "{}\nkind: upper_bound_only (t_k = a_k recurs on residues {residues:?})",
            out.value_line("M <=", value)
        ),
        MResult::Estimate {
            value,
            bands,
            window,
        } => {
            let mut s = format!(
                "M ~ {value:.prec$}\nkind: estimate (minimum over bands {}..={})",
                window.0,
                window.1,
                prec = out.digits
            );
            for b in bands {
                s.push_str(&format!(
                    "\n  band {:>2}: {:.prec$} at n = {}",
                    b.k,
                    b.min,
                    b.n,
                    prec = out.digits
                ));
            }
            s
        }
    }
}

fn report_text(out: &Out, rep: &BoundReport) -> String {
    let d = out.digits;
    let inv = |v: &QuadNum| {
        v.recip()
            .map(|x| x.to_decimal_truncated(d))
            .unwrap_or_default()
    };
    let mut lines = vec![
        format!(
            "R = {}, (R_*, R_**) = ({}, {})",
            rep.r, rep.r_star, rep.r_star_star
        ),
        out.value_line("beta", &rep.beta),
        out.value_line("delta", &rep.delta),
        format!(
            "C({}) = {} = 1/{}...  exact {}",
            rep.r,
            rep.c.to_decimal(d),
            inv(&rep.c),
            rep.c
        ),
    ];
    if let Some(c1) = &rep.c1 {
        lines.push(format!(
            "C1({}) = {} = 1/{}...  exact {c1}",
            rep.r,
            c1.to_decimal(d),
            inv(c1)
        ));
    }
    lines.push(format!(
        "upper (1/4)(1 - 1/R) = {} = {}",
        rep.upper,
        rep.upper.to_decimal(d)
    ));
    lines.push(out.value_line(rep.e_term.name(), rep.e_term.value()));
    if let Some(cs) = rep.cstar_inverse {
        lines.push(format!("1/C*({}) = {cs:.4}... (reference)", rep.r));
    }
    lines.join("\n")
}

fn report_json(out: &Out, rep: &BoundReport) -> Value {
    let mut rec = Record::exact("bound_report", &rep.c, out.digits)
        .with_param("R", rep.r)
        .with_param("R_star", rep.r_star)
        .with_param("R_star_star", rep.r_star_star);
    let exact = |v: &QuadNum| json!({ "exact": inhomo::ExactValue::from(v), "decimal": v.to_decimal(out.digits) });
    rec = rec
        .with_param("beta", exact(&rep.beta))
        .with_param("delta", exact(&rep.delta))
        .with_param("upper", exact(&rep.upper))
        .with_param(rep.e_term.name(), exact(rep.e_term.value()))
        .with_param("C1", rep.c1.as_ref().map(exact).unwrap_or(Value::Null))
        .with_param(
            "cstar_inverse",
            rep.cstar_inverse.map(Value::from).unwrap_or(Value::Null),
        );
    out.record(rec)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let out = Out {
        digits: cli.digits as usize,
        json: cli.json,
    };
    match cli.command {
        Command::Ncf(NcfCommand::Expand { expr, max_terms }) => {
            let v = parse_unit(&expr)?;
            let e = NcfExpansion::expand(&v, max_terms)?;
            let rec = Record::exact("ncf", &v, out.digits)
                .with_param("expansion", e.to_string())
                .with_param("preperiod", e.preperiod())
                .with_param("period", e.period());
            out.emit(
                format!("{e}\n{}", out.value_line("value", &v)),
                out.record(rec),
            );
        }
        Command::Ncf(NcfCommand::Value { expr }) => {
            let e = parse_expr(&expr)?.expansion(10_000)?;
            let v = e.value()?;
            let rec =
                Record::exact("ncf_value", &v, out.digits).with_param("expansion", e.to_string());
            out.emit(out.value_line("value", &v), out.record(rec));
        }
        Command::Gamma(GammaCommand::Expand {
            alpha,
            gamma,
            max_terms,
        }) => {
            let base = alpha_expansion(&alpha)?;
            let g = parse_unit(&gamma)?;
            let d = alpha_expand(&g, &base, max_terms)?;
            let rec = Record::exact("alpha_expansion", &g, out.digits)
                .with_witness(digit_json(&d))
                .with_param("alpha", base.to_string());
            out.emit(format!("{d}\n{}", d.t_string()), out.record(rec));
        }
        Command::Gamma(GammaCommand::Star { alpha }) => {
            let base = alpha_expansion(&alpha)?;
            let d = gamma_star(&base)?;
            let g = d.gamma()?;
            let rec = Record::exact("gamma_star", &g, out.digits)
                .with_witness(digit_json(&d))
                .with_param("alpha", base.to_string());
            out.emit(
                format!("{d}\n{}\n{}", d.t_string(), out.value_line("gamma*", &g)),
                out.record(rec),
            );
        }
        Command::Gamma(GammaCommand::Reconstruct { seq }) => {
            let d = parse_digit_seq(&seq)?;
            let (text, rec) = if d.is_truncated() {
                let (lo, hi) = d.gamma_bounds()?;
                let rec = Record::exact("gamma_bounds", &lo, out.digits)
                    .with_param("upper", hi.to_string())
                    .with_witness(digit_json(&d));
                (
                    format!(
                        "{}\n{}",
                        out.value_line("lower", &lo),
                        out.value_line("upper", &hi)
                    ),
                    rec,
                )
            } else {
                let g = d.gamma()?;
                let rec = Record::exact("gamma", &g, out.digits).with_witness(digit_json(&d));
                (out.value_line("gamma", &g), rec)
            };
            out.emit(
                text,
                out.record(rec.with_param("alpha", d.base().to_string())),
            );
        }
        Command::Approx(ApproxCommand::M(args)) => {
            let base = alpha_expansion(&args.alpha)?;
            let g = parse_unit(&args.gamma)?;
            let res = match args.estimate {
                Some(bands) => m_estimate(&base.value()?, &g, bands)?,
                None => {
                    let d = alpha_expand(&g, &base, 2_000)?;
                    if d.is_truncated() {
                        return Err(Error::NotPeriodic.into());
                    }
                    if args.full {
                        m_exact_full(&base, &d)?
                    } else {
                        m_exact(&base, &d)?
                    }
                }
            };
            let rec = Record::from_m(&res, out.digits)
                .with_param("alpha", base.to_string())
                .with_param("gamma", g.to_string());
            out.emit(m_text(&out, &res), out.record(rec));
        }
        Command::Approx(ApproxCommand::RhoSearch {
            alpha,
            period_mult,
            t_cap,
        }) => {
            let base = alpha_expansion(&alpha)?;
            let (d, res) = rho_search(&base, period_mult, t_cap.unwrap_or(u64::MAX))?;
            let rec = Record::from_m(&res, out.digits)
                .with_param("alpha", base.to_string())
                .with_param("period_mult", period_mult)
                .with_param("t_cap", t_cap.map(Value::from).unwrap_or(Value::Null))
                .with_param("gamma", digit_json(&d));
            out.emit(
                format!("{d}\n{}\n{}", d.t_string(), m_text(&out, &res)),
                out.record(rec),
            );
        }
        Command::Bound(BoundCommand::Report { r }) => {
            let rep = bound_report(r)?;
            out.emit(report_text(&out, &rep), report_json(&out, &rep));
        }
        Command::Bound(BoundCommand::Table) => {
            let mut lines = vec![format!("{:>2}  {:>10}  {:>10}", "R", "1/C*(R)", "1/C(R)")];
            let mut records = Vec::new();
            for r in 2..=8 {
                let cstar = cstar_reference_text(r)?;
                let c = if r >= 3 { Some(c_bound(r)?) } else { None };
                let inv = c
                    .as_ref()
                    .map(|c| c.recip().map(|x| x.to_decimal_truncated(4)))
                    .transpose()?;
                lines.push(format!(
                    "{r:>2}  {:>10}  {:>10}",
                    format!("{cstar}..."),
                    inv.as_ref().map_or("-".to_string(), |s| format!("{s}..."))
                ));
                let rec = match &c {
                    Some(c) => Record::exact("table_row", c, out.digits),
                    None => Record {
                        kind: "table_row".into(),
                        value_exact: None,
                        value_decimal: String::new(),
                        witness: None,
                        params: Default::default(),
                    },
                };
                records.push(
                    out.record(
                        rec.with_param("R", r)
                            .with_param("cstar_inverse", cstar)
                            .with_param("c_inverse", inv.map(Value::from).unwrap_or(Value::Null)),
                    ),
                );
            }
            out.emit(lines.join("\n"), Value::Array(records));
        }
        Command::Verify(args) => {
            let suite: Suite = args.suite.parse()?;
            let rep = verify::run(suite, args.seed)?;
            if let Some(path) = &args.report {
                fs::write(path, format!("{rep}\n"))
                    .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?;
            }
            let checks: Vec<Value> = rep
                .checks
                .iter()
                .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
                .collect();
            out.emit(
                rep.to_string(),
                json!({ "kind": "verify", "suite": suite.name(), "seed": args.seed, "passed": rep.passed(), "checks": checks }),
            );
            if !rep.passed() {
                return Err(Failure::Verify);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(EXIT_VERIFY),
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Parse { .. } => EXIT_PARSE,
                _ => EXIT_DOMAIN,
            })
        }
    }
}

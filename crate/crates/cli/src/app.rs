//! Argument handling and subcommand dispatch.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use clausen::numerics::{format_sci, parse_decimal, MAX_DIGITS};
use clausen::quadrature::{
    closed_I, combo, i7_closed, i7_numeric, integral_45_charts, integral_A6, integral_A6_numeric, integral_I_numeric,
    seventh_clausen_sum, CombinationId, CombinationRoute, PanelSpec,
};
use clausen::relations::{check_recorded_triples, pslq, scan_angle_triples};
use clausen::verify::run_all;
use clausen::{PrecisionContext, Real};
use serde_json::{json, Value};

use crate::eval::eval_expr;
use crate::expr::parse_expr;
use crate::format::{format_complex, format_real};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILURES: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

const GRAMMAR: &str = "\
Expressions:
  numbers   12, 0.5, 1e-3      constants  pi, Catalan, i
  operators + - * / ^          (^ binds tightest and takes an integer exponent;
                                unary minus binds looser than ^; all left associative)
  functions sqrt sin cos tan atan ln exp abs re im arg Cl2 Li2 D zeta L7 gamma
            hurwitz(s, a)
  Names are case-sensitive. Cl2, tan, atan, zeta, hurwitz, L7 and gamma take real
  arguments; D, Li2, sqrt, sin, cos, exp and ln accept complex ones.";

#[derive(Debug, Parser)]
#[command(name = "clausen", version, about = "Clausen, dilogarithm and L-series constants at arbitrary precision", after_help = GRAMMAR)]
struct Cli {
    /// Working precision in decimal digits.
    #[arg(long, global = true, env = "CLAUSEN_DIGITS", default_value_t = 50)]
    digits: u32,
    /// Residual tolerance for identity checks (default 10^-(digits-10)).
    #[arg(long, global = true)]
    tol: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a constant expression.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Run the identity suite.
    Verify {
        /// Entry id, equation label, or tag (main, group-a, group-b, proven, conjecture, erratum).
        #[arg(long)]
        filter: Option<String>,
        /// Also write the JSON report to this file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Search for an integer relation among the values of the expressions.
    Pslq {
        #[arg(required = true, num_args = 2..)]
        exprs: Vec<String>,
        #[arg(long, default_value_t = 1000)]
        max_coeff: u64,
    },
    /// List every 3θ₁ − 2π = ±θ₂ with θ₁ = 2·atan(√k/j) or 2·atan(√(k/j)), and
    /// compare the recorded triples.
    ScanAngles {
        #[arg(long)]
        kmax: u64,
        #[arg(long)]
        jmax: u64,
    },
    /// Evaluate a named integral by quadrature and by its closed form.
    Integrate {
        #[command(subcommand)]
        which: Integral,
    },
}

#[derive(Debug, Subcommand)]
enum Integral {
    /// (24/(7√7))·I(√7).
    I7,
    /// I(a) = ∫_{π/3}^{π/2} ln|(tan t + a)/(tan t − a)| dt, a > √3.
    #[command(name = "I")]
    I {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Panel n of the log-tangent integrand over [nπ/24, (n+1)π/24], a = √7, 0 ≤ n ≤ 11.
    Panel { n: u32 },
    /// The C₁ panel combination.
    C1,
    /// The C₂ panel combination.
    C2,
    /// 2 sin(π/7)∫_d^∞ ln y/(y² − 2y cos(π/7) + 1) dy against the seventh-root Clausen sum.
    Eq45,
    /// ∫₀ˣ ln(3 + 4cos θ + cos 2θ) dθ, 0 ≤ x ≤ π.
    A6 {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Numeric(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Numeric(_) => EXIT_NUMERIC,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Numeric(m) => m,
        }
    }
}

impl From<clausen::Error> for Failure {
    fn from(e: clausen::Error) -> Self {
        Failure::Numeric(e.to_string())
    }
}

struct Session<'a> {
    ctx: PrecisionContext,
    format: Format,
    out: &'a mut dyn Write,
}

impl Session<'_> {
    fn digits(&self) -> u32 {
        self.ctx.digits()
    }

    fn fmt(&self, x: &Real) -> String {
        format_real(x, self.digits())
    }

    fn emit(&mut self, text: &str, value: Value) -> Result<(), Failure> {
        let r = match self.format {
            Format::Text => write!(self.out, "{text}"),
            Format::Json => writeln!(self.out, "{}", serde_json::to_string_pretty(&value).expect("serializable")),
        };
        r.map_err(|e| Failure::Numeric(format!("write failed: {e}")))
    }

    /// Parses and evaluates `text` with ten guard digits, rounded to the
    /// session precision.
    fn value(&self, text: &str) -> Result<(String, clausen::Complex), Failure> {
        let ast = parse_expr(text).map_err(|e| Failure::Usage(format!("{text:?}: {e}")))?;
        let wctx = PrecisionContext::new((self.digits() + 10).min(MAX_DIGITS))?;
        let z = eval_expr(&ast, &wctx).map_err(|e| Failure::Numeric(format!("{text:?}: {e}")))?;
        let z = clausen::Complex::new(self.ctx.real(&z.re), self.ctx.real(&z.im));
        Ok((ast.to_string(), z))
    }

    fn real_value(&self, text: &str) -> Result<Real, Failure> {
        let (_, z) = self.value(text)?;
        if !z.is_real() {
            return Err(Failure::Usage(format!("{text:?} is not real")));
        }
        Ok(z.re)
    }
}

/// Runs the command line `args` (program name first), writing normal output
/// to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn context(digits: u32, tol: Option<&str>) -> Result<PrecisionContext, Failure> {
    let base = PrecisionContext::new(digits).map_err(|e| Failure::Usage(e.to_string()))?;
    let Some(t) = tol else { return Ok(base) };
    let verify_tol = parse_decimal(t, &base).map_err(|e| Failure::Usage(e.to_string()))?;
    PrecisionContext::with_tolerances(digits, base.eval_tol().clone(), verify_tol).map_err(|e| Failure::Usage(e.to_string()))
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let ctx = context(cli.digits, cli.tol.as_deref())?;
    let mut s = Session { ctx, format: cli.format, out };
    match cli.command {
        Command::Eval { expr } => eval_cmd(&mut s, &expr),
        Command::Verify { filter, json } => verify_cmd(&mut s, filter.as_deref(), json),
        Command::Pslq { exprs, max_coeff } => pslq_cmd(&mut s, &exprs, max_coeff),
        Command::ScanAngles { kmax, jmax } => scan_cmd(&mut s, kmax, jmax),
        Command::Integrate { which } => integrate_cmd(&mut s, which),
    }
}

fn eval_cmd(s: &mut Session, text: &str) -> Result<i32, Failure> {
    let (printed, z) = s.value(text)?;
    let re = s.fmt(&z.re);
    let im = s.fmt(&z.im);
    let body = format!("{}\n", format_complex(&z, s.digits()));
    s.emit(&body, json!({ "command": "eval", "digits": s.digits(), "expr": printed, "re": re, "im": im }))?;
    Ok(EXIT_OK)
}

fn verify_cmd(s: &mut Session, filter: Option<&str>, path: Option<PathBuf>) -> Result<i32, Failure> {
    let report = run_all(&s.ctx, filter);
    if report.total() == 0 {
        return Err(Failure::Usage(format!("no entries match filter {:?}", filter.unwrap_or(""))));
    }
    let value = report.to_json(true);
    if let Some(p) = path {
        let text = serde_json::to_string_pretty(&value).expect("serializable");
        std::fs::write(&p, text + "\n").map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
    }
    s.emit(&report.to_text(true), value)?;
    Ok(if !report.errors.is_empty() {
        EXIT_NUMERIC
    } else if report.failed() > 0 {
        EXIT_FAILURES
    } else {
        EXIT_OK
    })
}

fn pslq_cmd(s: &mut Session, exprs: &[String], max_coeff: u64) -> Result<i32, Failure> {
    let xs = exprs.iter().map(|e| s.real_value(e)).collect::<Result<Vec<_>, _>>()?;
    let r = pslq(&xs, &s.ctx, max_coeff)?;
    let residual = format_sci(&r.residual, 3);
    let bound = format_sci(&r.norm_bound, 3);
    let text = if r.found {
        let coeffs: Vec<String> = r.coeffs.iter().map(i64::to_string).collect();
        format!("{}\nresidual {residual}\n", coeffs.join(" "))
    } else {
        format!("no relation with |coefficients| <= {max_coeff}\nnorm bound {bound}\n")
    };
    let value = json!({
        "command": "pslq",
        "digits": s.digits(),
        "found": r.found,
        "coeffs": r.coeffs,
        "residual": residual,
        "norm_bound": bound,
        "max_coeff": max_coeff,
        "iterations": r.iterations,
    });
    s.emit(&text, value)?;
    Ok(EXIT_OK)
}

fn scan_cmd(s: &mut Session, kmax: u64, jmax: u64) -> Result<i32, Failure> {
    let triples = scan_angle_triples(kmax, jmax);
    let mut text = String::new();
    let mut found = Vec::new();
    for t in &triples {
        let sign = if t.sign > 0 { "+" } else { "-" };
        text += &format!("3·{} - 2π = {sign}{}\n", t.theta1, t.theta2);
        found.push(json!({ "theta1": t.theta1.to_string(), "theta2": t.theta2.to_string(), "sign": t.sign }));
    }
    let mut recorded = Vec::new();
    text += "\nrecorded triples:\n";
    for c in check_recorded_triples() {
        let in_scan = triples.iter().any(|t| t.theta1 == c.printed.theta1 && t.theta2 == c.printed.theta2);
        let note = if c.sign_discrepancy() {
            format!("sign discrepancy: printed {:+}, exact {:+}", c.printed.printed_sign, c.exact_sign.unwrap_or(0))
        } else if c.printed_holds {
            "ok".to_owned()
        } else {
            "magnitude mismatch".to_owned()
        };
        let scanned = if in_scan { "in scan" } else { "outside scan range" };
        text += &format!("  {:<10} {note} ({scanned})\n", c.printed.label);
        recorded.push(json!({
            "label": c.printed.label,
            "printed_sign": c.printed.printed_sign,
            "exact_sign": c.exact_sign,
            "magnitude_holds": c.magnitude_holds,
            "sign_discrepancy": c.sign_discrepancy(),
            "in_scan": in_scan,
        }));
    }
    let value = json!({ "command": "scan-angles", "kmax": kmax, "jmax": jmax, "triples": found, "recorded": recorded });
    s.emit(&text, value)?;
    Ok(EXIT_OK)
}

fn integrate_cmd(s: &mut Session, which: Integral) -> Result<i32, Failure> {
    let ctx = s.ctx.clone();
    let (name, formula, routes): (&str, String, Vec<(&str, Real, Option<Real>)>) = match which {
        Integral::I7 => {
            let q = i7_numeric(&ctx)?;
            (
                "i7",
                "(4/(7√7))[3Cl₂(θ₇) − 3Cl₂(2θ₇) + Cl₂(3θ₇)], θ₇ = 2·atan√7".into(),
                vec![("quadrature", q.value, Some(q.error_estimate)), ("closed form", i7_closed(&ctx), None)],
            )
        }
        Integral::I { a } => {
            let a = s.real_value(&a)?;
            let q = integral_I_numeric(&a, &ctx)?;
            let c = closed_I(&a, &ctx)?;
            ("I", "(1/6)[Cl₂(6φ) − 3Cl₂(4φ) + 3Cl₂(2φ)], φ = atan a".into(), vec![("quadrature", q.value, Some(q.error_estimate)), ("closed form", c, None)])
        }
        Integral::Panel { n } => {
            let p = PanelSpec::new(n, &ctx).map_err(|e| Failure::Usage(e.to_string()))?;
            let q = p.numeric(&ctx)?;
            let c = p.closed(&ctx)?;
            ("panel", format!("∫ ln|(tan t + √7)/(tan t − √7)| dt over [{n}π/24, {}π/24]", n + 1), vec![("quadrature", q.value, Some(q.error_estimate)), ("closed form", c, None)])
        }
        Integral::C1 | Integral::C2 => {
            let (id, name, formula) = match which {
                Integral::C1 => (CombinationId::C1, "c1", "−2(I₂+I₃+I₄+I₅) + I₈ + I₉ − (I₁₀+I₁₁)"),
                _ => (CombinationId::C2, "c2", "I₂ + 3(I₃+I₄+I₅) + 2(I₆+I₇) − 3I₈ − I₉"),
            };
            let q = combo(id, CombinationRoute::PanelQuadrature, &ctx)?;
            let c = combo(id, CombinationRoute::ClausenForm, &ctx)?;
            (name, formula.into(), vec![("panel quadrature", q, None), ("Clausen form", c, None)])
        }
        Integral::Eq45 => {
            let charts = integral_45_charts(&ctx)?;
            let sum = seventh_clausen_sum(&ctx);
            let i7 = i7_closed(&ctx) * ctx.sqrt(7) / 2u32;
            (
                "eq45",
                "2 sin(π/7)∫_d^∞ ln y/(y² − 2y cos(π/7) + 1) dy = Cl₂(2π/7) + Cl₂(4π/7) − Cl₂(6π/7), d = 1/(2cos(π/7) − 1)".into(),
                vec![
                    ("reciprocal chart", charts.reciprocal.value, Some(charts.reciprocal.error_estimate)),
                    ("exp-sinh chart", charts.exp_sinh.value, Some(charts.exp_sinh.error_estimate)),
                    ("rational chart", charts.rational.value, Some(charts.rational.error_estimate)),
                    ("Clausen sum", sum, None),
                    ("(√7/2)·i7", i7, None),
                ],
            )
        }
        Integral::A6 { x } => {
            let x = s.real_value(&x)?;
            let q = integral_A6_numeric(&x, &ctx).map_err(|e| Failure::Usage(e.to_string()))?;
            let c = integral_A6(&x, &ctx)?;
            ("a6", "−x ln 2 + 4Cl₂(π − x)".into(), vec![("quadrature", q.value, Some(q.error_estimate)), ("closed form", c, None)])
        }
    };
    let first = routes[0].1.clone();
    let spread = routes.iter().map(|r| (r.1.clone() - &first).abs()).fold(ctx.zero(), |a, b| a.max(&b));
    let mut text = format!("{}\nclosed form: {formula}\n", s.fmt(&first));
    let mut items = Vec::new();
    for (route, v, err) in &routes {
        text += &format!("  {route:<18} {}", s.fmt(v));
        if let Some(e) = err {
            text += &format!("  (error estimate {})", format_sci(e, 3));
        }
        text += "\n";
        items.push(json!({
            "route": route,
            "value": s.fmt(v),
            "error_estimate": err.as_ref().map(|e| format_sci(e, 3)),
        }));
    }
    let spread_text = format_sci(&spread, 3);
    text += &format!("max route difference {spread_text}\n");
    let value = json!({
        "command": "integrate",
        "integral": name,
        "digits": s.digits(),
        "value": s.fmt(&first),
        "closed_form": formula,
        "routes": items,
        "max_difference": spread_text,
    });
    s.emit(&text, value)?;
    Ok(EXIT_OK)
}

//! Evaluation of [`ConstExpr`] trees over the library's functions.

use std::fmt;

use clausen::clausen::cl2_real;
use clausen::lseries::{hurwitz_zeta, l_chi, riemann_zeta, LChiSpec};
use clausen::numerics::{gamma, parse_decimal};
use clausen::polylog::{bloch_wigner, li2};
use clausen::rug::float::Constant;
use clausen::rug::Float;
use clausen::{Complex, PrecisionContext, Real};
use thiserror::Error;

use crate::expr::{BinOp, ConstExpr, Func};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalErrorKind {
    #[error(transparent)]
    Numeric(#[from] clausen::Error),
    #[error("{0} needs a real argument")]
    NotReal(&'static str),
    #[error("exponent must be a real integer")]
    NonIntegerExponent,
    #[error("division by zero")]
    DivisionByZero,
}

/// A failed evaluation with the path from the root to the failing node.
#[derive(Debug, Clone, PartialEq, Error)]
pub struct EvalError {
    pub path: Vec<String>,
    pub kind: EvalErrorKind,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            write!(f, "{}", self.kind)
        } else {
            write!(f, "at {}: {}", self.path.join(" > "), self.kind)
        }
    }
}

type EvalResult<T> = Result<T, EvalError>;

fn fail<T>(kind: impl Into<EvalErrorKind>) -> EvalResult<T> {
    Err(EvalError { path: vec![], kind: kind.into() })
}

/// Prepends `step` to the path of an error coming out of a child.
fn within<T>(step: impl FnOnce() -> String, r: EvalResult<T>) -> EvalResult<T> {
    r.map_err(|mut e| {
        e.path.insert(0, step());
        e
    })
}

fn real(x: Real) -> Complex {
    let p = x.prec();
    Complex::new(x, Float::new(p))
}

fn require_real(func: Func, z: &Complex) -> EvalResult<Real> {
    if z.is_real() {
        Ok(z.re.clone())
    } else {
        fail(EvalErrorKind::NotReal(func.name()))
    }
}

/// Value of `e` at the precision of `ctx`. Results whose value is real carry
/// an exact-zero imaginary part.
pub fn eval_expr(e: &ConstExpr, ctx: &PrecisionContext) -> EvalResult<Complex> {
    let bits = ctx.bits();
    match e {
        ConstExpr::Number(s) => Ok(real(parse_decimal(s, ctx).map_err(|k| EvalError { path: vec![], kind: k.into() })?)),
        ConstExpr::ImagUnit => Ok(Complex::i(ctx)),
        ConstExpr::Pi => Ok(real(ctx.pi())),
        ConstExpr::Catalan => Ok(real(Float::with_val(bits, Constant::Catalan))),
        ConstExpr::Neg(x) => Ok(-within(|| "negation".into(), eval_expr(x, ctx))?),
        ConstExpr::Binary(op, l, r) => {
            let a = within(|| format!("left of {}", symbol(*op)), eval_expr(l, ctx))?;
            let b = within(|| format!("right of {}", symbol(*op)), eval_expr(r, ctx))?;
            within(|| format!("`{e}`"), binary(*op, a, b))
        }
        ConstExpr::Call(func, args) => {
            let mut vals = Vec::with_capacity(args.len());
            for (k, a) in args.iter().enumerate() {
                vals.push(within(|| format!("{} argument {}", func.name(), k + 1), eval_expr(a, ctx))?);
            }
            within(|| format!("`{e}`"), call(*func, &vals, ctx))
        }
    }
}

fn symbol(op: BinOp) -> &'static str {
    match op {
        BinOp::Add => "+",
        BinOp::Sub => "-",
        BinOp::Mul => "*",
        BinOp::Div => "/",
        BinOp::Pow => "^",
    }
}

fn binary(op: BinOp, a: Complex, b: Complex) -> EvalResult<Complex> {
    let both_real = a.is_real() && b.is_real();
    match op {
        BinOp::Add => Ok(a + b),
        BinOp::Sub => Ok(a - b),
        BinOp::Mul if both_real => Ok(real(a.re * b.re)),
        BinOp::Mul => Ok(a * b),
        BinOp::Div if b.is_zero() => fail(EvalErrorKind::DivisionByZero),
        BinOp::Div if both_real => Ok(real(a.re / b.re)),
        BinOp::Div => Ok(a / b),
        BinOp::Pow => {
            if !b.is_real() || !b.re.is_integer() {
                return fail(EvalErrorKind::NonIntegerExponent);
            }
            let n = b.re.to_integer().and_then(|i| i.to_i32()).ok_or(EvalErrorKind::NonIntegerExponent);
            let n = match n {
                Ok(n) => n,
                Err(k) => return fail(k),
            };
            if n < 0 && a.is_zero() {
                return fail(EvalErrorKind::DivisionByZero);
            }
            if a.is_real() {
                use clausen::rug::ops::Pow;
                Ok(real(a.re.pow(n)))
            } else {
                Ok(a.powi(n as i64))
            }
        }
    }
}

fn numeric<T>(r: clausen::Result<T>) -> EvalResult<T> {
    r.map_err(|k| EvalError { path: vec![], kind: k.into() })
}

fn call(func: Func, args: &[Complex], ctx: &PrecisionContext) -> EvalResult<Complex> {
    let z = &args[0];
    let bits = ctx.bits();
    let v = match func {
        Func::Sqrt => {
            if z.is_real() && z.re < 0 {
                Complex::new(Float::new(bits), Float::with_val(bits, -&z.re).sqrt())
            } else if z.is_real() {
                real(z.re.clone().sqrt())
            } else {
                z.sqrt()
            }
        }
        Func::Sin | Func::Cos => {
            if z.is_real() {
                let x = z.re.clone();
                real(if func == Func::Sin { x.sin() } else { x.cos() })
            } else {
                let (s, c) = z.re.clone().sin_cos(Float::new(bits));
                let (sh, ch) = z.im.clone().sinh_cosh(Float::new(bits));
                if func == Func::Sin {
                    Complex::new(s * ch, c * sh)
                } else {
                    Complex::new(c * ch, -(s * sh))
                }
            }
        }
        Func::Tan => real(require_real(func, z)?.tan()),
        Func::Atan => real(require_real(func, z)?.atan()),
        Func::Ln => {
            if z.is_zero() {
                return fail(clausen::Error::Pole { func: "ln", at: "0".into() });
            }
            if z.is_real() && z.re > 0 {
                real(z.re.clone().ln())
            } else {
                z.ln()
            }
        }
        Func::Exp => {
            if z.is_real() {
                real(z.re.clone().exp())
            } else {
                z.exp()
            }
        }
        Func::Abs => real(z.abs()),
        Func::Re => real(z.re.clone()),
        Func::Im => real(z.im.clone()),
        Func::Arg => real(z.arg()),
        Func::Cl2 => real(cl2_real(&require_real(func, z)?, ctx)),
        Func::Li2 => {
            let v = li2(z, ctx);
            if z.is_real() && z.re <= 1 {
                real(v.re)
            } else {
                v
            }
        }
        Func::D => real(bloch_wigner(z, ctx)),
        Func::Zeta => real(numeric(riemann_zeta(&require_real(func, z)?, ctx))?),
        Func::Hurwitz => {
            let s = require_real(func, z)?;
            let a = require_real(func, &args[1])?;
            real(numeric(hurwitz_zeta(&s, &a, ctx))?)
        }
        Func::L7 => real(numeric(l_chi(&require_real(func, z)?, &LChiSpec::minus7(), ctx))?),
        Func::Gamma => real(numeric(gamma(&require_real(func, z)?, ctx))?),
    };
    Ok(v)
}

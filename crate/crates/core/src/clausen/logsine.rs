//! ln(n sin x / sin nx) as a zeta series, its integral r(θ, n), and the four
//! equivalent right-hand sides for ½[Cl₂(2nθ)/n − Cl₂(2θ)].

use rug::float::Constant;
use rug::Float;

use super::cl2_real;
use crate::bernoulli::abs_bernoulli_over_factorial_at;
use crate::error::{Error, Result};
use crate::numerics::{PrecisionContext, Real};
use crate::quadrature::{exp_sinh, sawtooth_integral};

const EXTRA_BITS: u32 = 32;

/// Partial sum Σ_{j=1}^{terms} ζ(2j)(n^{2j} − 1) x^{2j} / (j π^{2j}) for |x| < π/n.
pub fn logsine_ratio(x: &Real, n: u32, terms: usize, ctx: &PrecisionContext) -> Result<Real> {
    check_n(n, "logsine_ratio")?;
    let wb = ctx.bits() + EXTRA_BITS;
    let pi = Float::with_val(wb, Constant::Pi);
    let nx = Float::with_val(wb, x * n).abs();
    if nx >= pi {
        return Err(Error::domain("logsine_ratio", "need |x| < π/n"));
    }
    let table = abs_bernoulli_over_factorial_at(terms + 1, wb);
    // ζ(2j)/π^{2j} = 2^{2j−1}|B₂ⱼ|/(2j)!, so each term is |B₂ⱼ|/(2j)! · [(2nx)^{2j} − (2x)^{2j}] / (2j)
    let a2 = Float::with_val(wb, Float::with_val(wb, x * (2 * n)).square_ref());
    let b2 = Float::with_val(wb, Float::with_val(wb, x * 2u32).square_ref());
    let mut pa = Float::with_val(wb, 1);
    let mut pb = Float::with_val(wb, 1);
    let mut sum = Float::new(wb);
    for j in 1..=terms {
        pa *= &a2;
        pb *= &b2;
        let diff = Float::with_val(wb, &pa - &pb);
        sum += Float::with_val(wb, &table[j] * &diff) / (2 * j as u64);
    }
    Ok(ctx.real(sum))
}

/// r(θ, n) = Σ_{j≥1} ζ(2j)(n^{2j} − 1) θ^{2j+1} / (j π^{2j} (2j+1)) on 0 < θ ≤ π/n.
///
/// With u = nθ/π and v = θ/π this is θ[F(u) − F(v) + Σ_j (ζ(2j) − 1)(u^{2j} − v^{2j})/(j(2j+1))]
/// where F(y) = Σ y^{2j}/(j(2j+1)) = 2 − ln(1 − y²) − (2/y) atanh y, F(1) = 2 − 2 ln 2.
/// The remaining sum converges like 4^(−j) even at the boundary θ = π/n.
pub fn r_series(theta: &Real, n: u32, ctx: &PrecisionContext) -> Result<Real> {
    check_n(n, "r_series")?;
    if *theta <= 0 {
        return Err(Error::domain("r_series", "need θ > 0"));
    }
    let wb = ctx.bits() + EXTRA_BITS;
    let pi = Float::with_val(wb, Constant::Pi);
    let th = Float::with_val(wb, theta);
    let mut u = Float::with_val(wb, &th * n) / &pi;
    let v = Float::with_val(wb, &th / &pi);
    if u > 1 {
        // θ = π/n rounded at the caller's precision may land a few ulps above
        let slack = Float::with_val(wb, Float::u_exp(1, 6 - ctx.bits() as i32));
        if Float::with_val(wb, &u - 1u32) > slack {
            return Err(Error::domain("r_series", "need θ ≤ π/n"));
        }
        u = Float::with_val(wb, 1);
    }
    let mut total = Float::with_val(wb, f_closed(&u, wb) - f_closed(&v, wb));

    let eps = Float::with_val(wb, Float::u_exp(1, -(wb as i32)));
    let jmax = wb as usize / 2 + 8;
    let table = abs_bernoulli_over_factorial_at(jmax, wb);
    let four_pi2 = Float::with_val(wb, pi.square_ref()) * 4u32;
    let u2 = Float::with_val(wb, u.square_ref());
    let v2 = Float::with_val(wb, v.square_ref());
    let mut pu = Float::with_val(wb, 1);
    let mut pv = Float::with_val(wb, 1);
    let mut tp = Float::with_val(wb, 0.5f64);
    for j in 1..=jmax {
        pu *= &u2;
        pv *= &v2;
        tp *= &four_pi2;
        // ζ(2j) = |B₂ⱼ|/(2j)! · (2π)^{2j} / 2
        let zeta_m1 = Float::with_val(wb, &table[j] * &tp) - 1u32;
        let diff = Float::with_val(wb, &pu - &pv);
        let term = zeta_m1 * diff / ((j as u64) * (2 * j as u64 + 1));
        let small = Float::with_val(wb, term.abs_ref()) < eps;
        total += term;
        if small {
            return Ok(ctx.real(total * th));
        }
    }
    Err(Error::NonConvergence { what: "r_series", detail: "ζ(2j) − 1 tail did not settle".into() })
}

/// F(y) = Σ_{j≥1} y^{2j}/(j(2j+1)) for 0 ≤ y ≤ 1.
fn f_closed(y: &Float, wb: u32) -> Float {
    if y.is_zero() {
        return Float::new(wb);
    }
    if *y == 1 {
        let ln2 = Float::with_val(wb, Constant::Log2);
        return Float::with_val(wb, 2) - ln2 * 2u32;
    }
    if *y <= 0.5 {
        let eps = Float::with_val(wb, Float::u_exp(1, -(wb as i32)));
        let y2 = Float::with_val(wb, y.square_ref());
        let mut p = Float::with_val(wb, 1);
        let mut sum = Float::new(wb);
        for j in 1u64.. {
            p *= &y2;
            let term = Float::with_val(wb, &p / (j * (2 * j + 1)));
            let small = term < eps;
            sum += term;
            if small {
                break;
            }
        }
        return sum;
    }
    let y2 = Float::with_val(wb, y.square_ref());
    let one_minus = Float::with_val(wb, 1 - &y2);
    let at = Float::with_val(wb, y.atanh_ref());
    Float::with_val(wb, 2) - one_minus.ln() - at * 2u32 / y
}

/// Which right-hand side of the Cl₂ difference identity to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum B1Variant {
    /// r(θ, n) − θ ln n
    Series,
    /// ½ Σ_{k=1}^{n−1} Cl₂(2θ + 2πk/n)
    MultiplicationSum,
    /// −θ ln n + (2θ/n) ∫₀^∞ x^(−2)[sinh nx − n sinh x]/(e^{πx/θ} − 1) dx
    HyperbolicIntegral,
    /// Closed atanh/log terms plus 2π ∫₁^∞ [atanh(θ/πx) − atanh(nθ/πx)/n] P₁(x) dx
    BernoulliTail,
}

/// ½[Cl₂(2nθ)/n − Cl₂(2θ)].
pub fn prop_b1_lhs(theta: &Real, n: u32, ctx: &PrecisionContext) -> Real {
    let a = cl2_real(&(ctx.real(theta) * (2 * n)), ctx) / n;
    let b = cl2_real(&(ctx.real(theta) * 2u32), ctx);
    (a - b) / 2u32
}

pub fn prop_b1_rhs(variant: B1Variant, theta: &Real, n: u32, ctx: &PrecisionContext) -> Result<Real> {
    check_n(n, "prop_b1")?;
    let pi = ctx.pi();
    if *theta <= 0 || Float::with_val(ctx.bits(), theta * n) >= pi {
        return Err(Error::domain("prop_b1", "need 0 < θ < π/n"));
    }
    let th = ctx.real(theta);
    let theta_ln_n = Float::with_val(ctx.bits(), &th * ctx.real(n).ln());
    match variant {
        B1Variant::Series => Ok(r_series(&th, n, ctx)? - theta_ln_n),
        B1Variant::MultiplicationSum => {
            let two_th = Float::with_val(ctx.bits(), &th * 2u32);
            let mut s = ctx.zero();
            for k in 1..n {
                let shift = Float::with_val(ctx.bits(), &pi * (2 * k)) / n;
                s += cl2_real(&(two_th.clone() + shift), ctx);
            }
            Ok(s / 2u32)
        }
        B1Variant::HyperbolicIntegral => {
            let j = hyperbolic_integral(&th, n, ctx)?;
            Ok(th.clone() * 2u32 / n * j - theta_ln_n)
        }
        B1Variant::BernoulliTail => {
            let nth = Float::with_val(ctx.bits(), &th * n);
            let a_n = Float::with_val(ctx.bits(), &nth / &pi).atanh();
            let a_1 = Float::with_val(ctx.bits(), &th / &pi).atanh();
            let pi2 = Float::with_val(ctx.bits(), pi.square_ref());
            let ratio = (pi2.clone() - Float::with_val(ctx.bits(), nth.square_ref()))
                / (pi2 - Float::with_val(ctx.bits(), th.square_ref()));
            let bracket = nth * 2u32 * a_n - th.clone() * 2u32 * a_1 + pi.clone() * ratio.ln();
            let closed = th.clone() / (pi.clone() * 2u32) * bracket;
            let tail = sawtooth_part(&th, n, ctx)?;
            Ok(closed + pi * 2u32 * tail - theta_ln_n)
        }
    }
}

/// |½[Cl₂(2nθ)/n − Cl₂(2θ)] − RHS(variant)| for 0 < θ < π/n.
pub fn prop_b1_residual(variant: B1Variant, theta: &Real, n: u32, ctx: &PrecisionContext) -> Result<Real> {
    let rhs = prop_b1_rhs(variant, theta, n, ctx)?;
    Ok((prop_b1_lhs(theta, n, ctx) - rhs).abs())
}

fn check_n(n: u32, func: &'static str) -> Result<()> {
    if n == 0 {
        return Err(Error::domain(func, "n must be a positive integer"));
    }
    Ok(())
}

/// ∫₀^∞ x^(−2)[sinh nx − n sinh x]/(e^{cx} − 1) dx with c = π/θ > n.
fn hyperbolic_integral(theta: &Real, n: u32, ctx: &PrecisionContext) -> Result<Real> {
    let wb = ctx.bits() + EXTRA_BITS;
    let c = Float::with_val(wb, Constant::Pi) / Float::with_val(wb, theta);
    let nf = Float::with_val(wb, n);
    let r = exp_sinh(|x: &Real, _: &Real| Ok(hyperbolic_integrand(x, &nf, &c, wb)), &ctx.zero(), ctx)?;
    Ok(ctx.real(r.value))
}

pub(crate) fn hyperbolic_integrand(x: &Real, n: &Float, c: &Float, wb: u32) -> Float {
    let x = Float::with_val(wb, x);
    if x < 0.5 {
        // sinh nx − n sinh x = Σ_{m odd ≥ 3} (n^m − n) x^m / m!
        let eps = Float::with_val(wb, Float::u_exp(1, -(wb as i32)));
        let x2 = Float::with_val(wb, x.square_ref());
        let n2 = Float::with_val(wb, n.square_ref());
        let mut xm = Float::with_val(wb, &x * &x2);
        let mut nm = Float::with_val(wb, n * &n2);
        let mut fact = Float::with_val(wb, 6);
        let mut sum = Float::new(wb);
        let mut m = 3u32;
        loop {
            let coef = Float::with_val(wb, &nm - n);
            let term = Float::with_val(wb, &coef * &xm) / &fact;
            let done = Float::with_val(wb, term.abs_ref()) <= Float::with_val(wb, sum.abs_ref()) * &eps;
            sum += term;
            if done || m > 4 * wb {
                break;
            }
            xm *= &x2;
            nm *= &n2;
            fact *= (m + 1) * (m + 2);
            m += 2;
        }
        let cx = Float::with_val(wb, c * &x);
        let denom = Float::with_val(wb, x2 * cx.exp_m1());
        return sum / denom;
    }
    let e = |k: Float| Float::with_val(wb, &k * &x).exp();
    let nm = Float::with_val(wb, n - c);
    let np = Float::with_val(wb, -Float::with_val(wb, n + c));
    let om = Float::with_val(wb, 1 - c);
    let op = Float::with_val(wb, -Float::with_val(wb, c + 1u32));
    let num = e(nm) - e(np) - Float::with_val(wb, n * e(om)) + Float::with_val(wb, n * e(op));
    let neg_cx = Float::with_val(wb, -Float::with_val(wb, c * &x));
    let one_minus = -neg_cx.exp_m1();
    num / (Float::with_val(wb, x.square_ref()) * one_minus * 2u32)
}

/// ∫₁^∞ [atanh(α/x) − atanh(nα/x)/n] P₁(x) dx with α = θ/π < 1/n.
fn sawtooth_part(theta: &Real, n: u32, ctx: &PrecisionContext) -> Result<Real> {
    let wb = ctx.bits() + EXTRA_BITS;
    let alpha = Float::with_val(wb, theta) / Float::with_val(wb, Constant::Pi);
    let n_alpha = Float::with_val(wb, &alpha * n);
    let f = |x: &Real| -> Result<Real> {
        let a = Float::with_val(wb, &alpha / x).atanh();
        let b = Float::with_val(wb, &n_alpha / x).atanh() / n;
        Ok(a - b)
    };
    // atanh(y) = Σ y^{2j+1}/(2j+1): f(x) = Σ α^{2j+1}(1 − n^{2j})/(2j+1) · x^{−(2j+1)}
    let eps = Float::with_val(wb, Float::u_exp(1, -(wb as i32)));
    let a2 = Float::with_val(wb, alpha.square_ref());
    let n2 = Float::with_val(wb, n * n);
    let mut ap = alpha.clone();
    let mut np = Float::with_val(wb, 1);
    let twenty = Float::with_val(wb, 20);
    let x0_2 = Float::with_val(wb, 400);
    let mut x0_pow = twenty.clone();
    let mut series = Vec::new();
    for j in 1u32.. {
        x0_pow *= &x0_2;
        ap *= &a2;
        np *= &n2;
        let coef = Float::with_val(wb, 1 - &np) * &ap / (2 * j + 1);
        // the expansion is only evaluated at x ≥ 20
        let small = Float::with_val(wb, coef.abs_ref()) / &x0_pow < eps;
        series.push((2 * j + 1, coef));
        if small || j > 4 * wb {
            break;
        }
    }
    let r = sawtooth_integral(f, &series, 1, ctx)?;
    Ok(ctx.real(r.value))
}

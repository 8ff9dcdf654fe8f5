//! The Clausen function Cl₂(θ) = Σ sin(nθ)/n², its multiplication laws, and
//! the log-sine series machinery around r(θ, n).

mod logsine;

use rug::float::Constant;
use rug::Float;

use crate::bernoulli::abs_bernoulli_over_factorial_at;
use crate::error::{Error, Result};
use crate::lseries::hurwitz_zeta;
use crate::numerics::{Angle, PrecisionContext, Real};

pub use logsine::{logsine_ratio, prop_b1_lhs, prop_b1_residual, prop_b1_rhs, r_series, B1Variant};

const EXTRA_BITS: u32 = 16;

/// Cl₂(θ) to within `ctx.eval_tol`.
///
/// The angle is reduced to [−π, π] first (exactly for rational multiples of
/// π), so oddness and 2π-periodicity hold by construction. On [0, π]:
/// `Cl₂(t) = t − t ln t + Σ_k |B₂ₖ|/(2k)! · t^(2k+1)/(2k(2k+1))`, whose terms
/// shrink at least by 1/4 per step.
pub fn cl2(theta: &Angle, ctx: &PrecisionContext) -> Real {
    let wb = ctx.bits() + EXTRA_BITS;
    match theta {
        Angle::RationalPi { p, q } => {
            let two_q = 2 * *q as i128;
            let mut r = (*p as i128).rem_euclid(two_q);
            if r > *q as i128 {
                r -= two_q;
            }
            if r == 0 || r == *q as i128 {
                return ctx.zero();
            }
            let t = Float::with_val(wb, Constant::Pi) * (r.unsigned_abs() as u64) / *q;
            let v = cl2_on_zero_pi(&t, wb);
            ctx.real(if r < 0 { -v } else { v })
        }
        Angle::Free(x) => cl2_real(x, ctx),
        Angle::SurdAtan { .. } => {
            let x = theta.to_real(&PrecisionContext::new(ctx.digits() + 5).unwrap_or_else(|_| ctx.clone()));
            cl2_real(&x, ctx)
        }
    }
}

/// Cl₂ at a real angle.
pub fn cl2_real(x: &Real, ctx: &PrecisionContext) -> Real {
    if x.is_zero() {
        return ctx.zero();
    }
    // extra bits so the reduction modulo 2π keeps full accuracy for large |x|
    let wb = ctx.bits() + EXTRA_BITS + x.get_exp().unwrap_or(0).max(0) as u32;
    let two_pi = Float::with_val(wb, Constant::Pi) * 2u32;
    let r = Float::with_val(wb, x.remainder_ref(&two_pi));
    if r.is_zero() {
        return ctx.zero();
    }
    let negative = r.is_sign_negative();
    let t = r.abs();
    let pi = Float::with_val(wb, Constant::Pi);
    if t == pi {
        return ctx.zero();
    }
    let v = cl2_on_zero_pi(&t, ctx.bits() + EXTRA_BITS);
    ctx.real(if negative { -v } else { v })
}

/// Power series on 0 < t ≤ π.
fn cl2_on_zero_pi(t: &Float, bits: u32) -> Float {
    let t = Float::with_val(bits, t);
    let eps = Float::with_val(bits, Float::u_exp(1, -(bits as i32)));
    let kmax = bits as usize / 2 + 8;
    let table = abs_bernoulli_over_factorial_at(kmax, bits);
    let lt = Float::with_val(bits, t.ln_ref());
    let mut sum = Float::with_val(bits, &t - Float::with_val(bits, &t * &lt));
    let t2 = Float::with_val(bits, t.square_ref());
    let mut pow = t.clone();
    for (k, c) in table.iter().enumerate().take(kmax + 1).skip(1) {
        pow *= &t2;
        let term = Float::with_val(bits, c * &pow) / ((2 * k as u64) * (2 * k as u64 + 1));
        let small = Float::with_val(bits, term.abs_ref()) < eps;
        sum += term;
        if small {
            break;
        }
    }
    sum
}

/// Cl₂(2πp/q) = q^(−2) Σ_{ν=1}^{q−1} sin(2πνp/q) ζ(2, ν/q).
pub fn cl2_rational(p: i64, q: u64, ctx: &PrecisionContext) -> Result<Real> {
    if q == 0 {
        return Err(Error::domain("cl2_rational", "q must be positive"));
    }
    let wctx = ctx.with_digits((ctx.digits() + 5).min(crate::numerics::MAX_DIGITS))?;
    let bits = wctx.bits();
    let two = wctx.real(2);
    let pi = wctx.pi();
    let mut sum = wctx.zero();
    // pair ν with q − ν: the sines are opposite
    for nu in 1..=(q - 1) / 2 {
        let phase = (2 * nu as i128 * p as i128).rem_euclid(2 * q as i128) as u64;
        if phase == 0 || phase == q {
            continue;
        }
        let s = (Float::with_val(bits, &pi * phase) / q).sin();
        let a = wctx.real(nu) / q;
        let b = wctx.real(q - nu) / q;
        let diff = hurwitz_zeta(&two, &a, &wctx)? - hurwitz_zeta(&two, &b, &wctx)?;
        sum += s * diff;
    }
    let q2 = wctx.real(q).square();
    Ok(ctx.real(sum / q2))
}

/// Σ_{n≤N} sin(nθ)/n² with a bound on the omitted tail:
/// min(1/N, 1/((N+1)² |sin(θ/2)|)) by integral comparison and summation by parts.
pub fn cl2_naive(theta: &Real, terms: u64, ctx: &PrecisionContext) -> (Real, Real) {
    let bits = ctx.bits() + EXTRA_BITS;
    let th = Float::with_val(bits, theta);
    let (s1, c1) = th.clone().sin_cos(Float::new(bits));
    // sin(nθ) by the angle-addition recurrence, re-anchored every 256 steps
    let mut sum = Float::new(bits);
    let mut s = Float::new(bits);
    let mut c = Float::with_val(bits, 1);
    for n in 1..=terms {
        if n % 256 == 0 {
            let a = Float::with_val(bits, &th * n);
            let (sn, cn) = a.sin_cos(Float::new(bits));
            s = sn;
            c = cn;
        } else {
            let ns = Float::with_val(bits, &s * &c1) + Float::with_val(bits, &c * &s1);
            let nc = Float::with_val(bits, &c * &c1) - Float::with_val(bits, &s * &s1);
            s = ns;
            c = nc;
        }
        let n2 = Float::with_val(bits, n).square();
        sum += Float::with_val(bits, &s / &n2);
    }
    let crude = Float::with_val(bits, terms.max(1)).recip();
    let half_sin = (Float::with_val(bits, &th / 2u32)).sin().abs();
    let bound = if half_sin.is_zero() {
        crude
    } else {
        let abel = (Float::with_val(bits, terms + 1).square() * half_sin).recip();
        if abel < crude {
            abel
        } else {
            crude
        }
    };
    (ctx.real(sum), ctx.real(bound))
}

/// The multiplication-law identities for Cl₂.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClausenIdentityId {
    /// ½Cl₂(2θ) = Cl₂(θ) − Cl₂(π − θ)
    Duplication,
    /// ⅓Cl₂(3θ) = Cl₂(θ) + Cl₂(θ + 2π/3) + Cl₂(θ + 4π/3)
    Triplication,
    /// ¼Cl₂(4θ) = Σ_{k<4} Cl₂(θ + kπ/2)
    Quadriplication,
    /// ¼Cl₂(4θ) = Cl₂(θ + π/2) + Cl₂(θ − π/2) + ½Cl₂(2θ)
    QuadDupCombined,
    /// (1/n)Cl₂(nθ) = Σ_{k<n} Cl₂(θ + 2πk/n), n ≥ 2
    NFoldSum(u32),
    /// Σ_{j=1}^{n−1} Cl₂(2πj/n) = 0, n ≥ 2
    RootOfUnitySum(u32),
}

/// |LHS − RHS| of the identity at θ. `RootOfUnitySum` ignores θ.
pub fn multiplication_residual(id: ClausenIdentityId, theta: &Angle, ctx: &PrecisionContext) -> Result<Real> {
    let (lhs, rhs) = multiplication_sides(id, theta, ctx)?;
    Ok((lhs - rhs).abs())
}

/// Both sides of the identity at θ, each summed separately.
pub fn multiplication_sides(id: ClausenIdentityId, theta: &Angle, ctx: &PrecisionContext) -> Result<(Real, Real)> {
    let c = |a: &Angle| cl2(a, ctx);
    let sides = match id {
        ClausenIdentityId::Duplication => {
            let lhs = c(&theta.times(2, ctx)) / 2u32;
            let reflected = match theta {
                Angle::RationalPi { p, q } => Angle::rational_pi(*q as i64 - p, *q)?,
                _ => Angle::Free(ctx.pi() - theta.to_real(ctx)),
            };
            (lhs, c(theta) - c(&reflected))
        }
        ClausenIdentityId::Triplication => n_fold(theta, 3, ctx),
        ClausenIdentityId::Quadriplication => n_fold(theta, 4, ctx),
        ClausenIdentityId::QuadDupCombined => {
            let lhs = c(&theta.times(4, ctx)) / 4u32;
            let rhs = c(&theta.plus_pi_fraction(1, 2, ctx))
                + c(&theta.plus_pi_fraction(-1, 2, ctx))
                + c(&theta.times(2, ctx)) / 2u32;
            (lhs, rhs)
        }
        ClausenIdentityId::NFoldSum(n) => {
            check_order(n)?;
            n_fold(theta, n, ctx)
        }
        ClausenIdentityId::RootOfUnitySum(n) => {
            check_order(n)?;
            let mut s = ctx.zero();
            for j in 1..n {
                s += c(&Angle::rational_pi(2 * j as i64, n as u64)?);
            }
            (s, ctx.zero())
        }
    };
    Ok(sides)
}

fn check_order(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::domain("multiplication_residual", format!("order {n} must be at least 2")));
    }
    Ok(())
}

fn n_fold(theta: &Angle, n: u32, ctx: &PrecisionContext) -> (Real, Real) {
    let lhs = cl2(&theta.times(n as i64, ctx), ctx) / n;
    let mut rhs = ctx.zero();
    for k in 0..n {
        rhs += cl2(&theta.plus_pi_fraction(2 * k as i64, n as u64, ctx), ctx);
    }
    (lhs, rhs)
}

/// Derivative of Cl₂: −ln|2 sin(θ/2)|.
pub fn cl2_derivative(theta: &Real, ctx: &PrecisionContext) -> Real {
    let s = (ctx.real(theta) / 2u32).sin() * 2u32;
    -(s.abs().ln())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(d: u32) -> PrecisionContext {
        PrecisionContext::new(d).unwrap()
    }

    fn close(a: &Real, b: &Real, tol: &Real) -> bool {
        Float::with_val(a.prec(), a - b).abs() < *tol
    }

    #[test]
    fn pi_over_three_maximum_value() {
        let c = ctx(30);
        let v = cl2(&Angle::rational_pi(1, 3).unwrap(), &c);
        let expect = crate::numerics::parse_decimal("1.014941606409653625021202554274520285941689307530", &c).unwrap();
        assert!(close(&v, &expect, c.eval_tol()));
    }

    #[test]
    fn catalan_at_right_angle() {
        let c = ctx(80);
        let g = c.real(Constant::Catalan);
        let v = cl2(&Angle::rational_pi(1, 2).unwrap(), &c);
        assert!(close(&v, &g, c.eval_tol()));
        let w = cl2_real(&(c.pi() / 2u32), &c);
        assert!(close(&w, &g, c.eval_tol()));
        let r = cl2_rational(1, 4, &c).unwrap();
        assert!(close(&r, &g, c.verify_tol()));
    }

    #[test]
    fn exact_zeros() {
        let c = ctx(20);
        assert!(cl2(&Angle::rational_pi(0, 1).unwrap(), &c).is_zero());
        assert!(cl2(&Angle::rational_pi(1, 1).unwrap(), &c).is_zero());
        assert!(cl2(&Angle::rational_pi(-6, 1).unwrap(), &c).is_zero());
        assert!(cl2_rational(1, 2, &c).unwrap().is_zero());
    }

    #[test]
    fn oddness_and_period_for_rational_angles() {
        let c = ctx(40);
        for (p, q) in [(1i64, 5u64), (3, 7), (11, 13), (-2, 9)] {
            let a = cl2(&Angle::rational_pi(p, q).unwrap(), &c);
            let b = cl2(&Angle::rational_pi(-p, q).unwrap(), &c);
            assert_eq!(Float::with_val(c.bits(), &a + &b), 0);
            let shifted = cl2(&Angle::rational_pi(p + 2 * q as i64, q).unwrap(), &c);
            assert_eq!(a, shifted);
        }
    }

    #[test]
    fn seventh_roots_cancel() {
        let c = ctx(50);
        let mut s = c.zero();
        for j in 1..=6 {
            s += cl2_rational(j, 7, &c).unwrap();
        }
        assert!(s.abs() < *c.verify_tol());
    }

    #[test]
    fn naive_series_bound_holds() {
        let c = ctx(30);
        let x = c.real(1.3);
        let (partial, bound) = cl2_naive(&x, 4000, &c);
        let exact = cl2_real(&x, &c);
        assert!(Float::with_val(c.bits(), &exact - &partial).abs() <= bound);
    }

    #[test]
    fn identities_at_sample_angle() {
        let c = ctx(50);
        let th = Angle::free(c.real(0.7));
        for id in [
            ClausenIdentityId::Duplication,
            ClausenIdentityId::Triplication,
            ClausenIdentityId::Quadriplication,
            ClausenIdentityId::QuadDupCombined,
            ClausenIdentityId::NFoldSum(5),
            ClausenIdentityId::RootOfUnitySum(7),
        ] {
            let r = multiplication_residual(id, &th, &c).unwrap();
            assert!(r < *c.verify_tol(), "{id:?}");
        }
        let zero = Angle::rational_pi(0, 1).unwrap();
        assert!(multiplication_residual(ClausenIdentityId::Duplication, &zero, &c).unwrap().is_zero());
        assert!(multiplication_residual(ClausenIdentityId::NFoldSum(1), &zero, &c).is_err());
    }

    #[test]
    fn derivative_changes_sign_at_pi_over_three() {
        let c = ctx(30);
        let third = c.pi() / 3u32;
        let h = c.pow10(-3);
        assert!(cl2_derivative(&(third.clone() - &h), &c) > 0);
        assert!(cl2_derivative(&(third.clone() + &h), &c) < 0);
    }
}

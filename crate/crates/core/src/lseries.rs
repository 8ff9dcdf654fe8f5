//! Hurwitz and Riemann zeta, real Dirichlet L-series, their functional
//! equation, and the lattice sum of the norm form of Q(√−7).

use rayon::prelude::*;
use rug::ops::Pow;
use rug::Float;

use crate::bernoulli::abs_bernoulli_over_factorial_at;
use crate::error::{Error, Result};
use crate::numerics::{gamma, PrecisionContext, Real};

const EXTRA_BITS: u32 = 32;

/// ζ(s, a) = Σ_{n≥0} (n + a)^(−s) for real s ≠ 1 and a > 0.
pub fn hurwitz_zeta(s: &Real, a: &Real, ctx: &PrecisionContext) -> Result<Real> {
    let (v, _) = hurwitz_core(s, a, ctx.bits(), false)?;
    Ok(ctx.real(v))
}

/// ζ(s, a) together with ∂ζ/∂s.
pub fn hurwitz_zeta_with_derivative(s: &Real, a: &Real, ctx: &PrecisionContext) -> Result<(Real, Real)> {
    let (v, d) = hurwitz_core(s, a, ctx.bits(), true)?;
    Ok((ctx.real(v), ctx.real(d)))
}

pub fn riemann_zeta(s: &Real, ctx: &PrecisionContext) -> Result<Real> {
    hurwitz_zeta(s, &ctx.one(), ctx)
}

/// Euler–Maclaurin after shifting `a` by N terms. The shift is large enough
/// that the smallest correction term, roughly e^(−2π(a+N)), is below 2^−bits.
fn hurwitz_core(s: &Real, a: &Real, bits: u32, derivative: bool) -> Result<(Float, Float)> {
    if *a <= 0 || a.is_nan() {
        return Err(Error::domain("hurwitz_zeta", format!("a = {} must be positive", a.to_f64())));
    }
    if *s == 1 {
        return Err(Error::Pole { func: "hurwitz_zeta", at: "s = 1".into() });
    }
    let wb = bits + EXTRA_BITS;
    let s = Float::with_val(wb, s);
    let a = Float::with_val(wb, a);
    let s_abs = s.to_f64().abs();
    let shift = (0.12 * wb as f64 + s_abs).ceil() as u64 + 4;

    let neg_s = Float::with_val(wb, -&s);
    let mut sum = Float::new(wb);
    let mut dsum = Float::new(wb);
    for k in 0..shift {
        let x = Float::with_val(wb, &a + k);
        let lx = x.ln();
        let t = Float::with_val(wb, &neg_s * &lx).exp();
        if derivative {
            dsum -= Float::with_val(wb, &t * &lx);
        }
        sum += t;
    }

    let x = Float::with_val(wb, &a + shift);
    let lx = Float::with_val(wb, x.ln_ref());
    let xs = Float::with_val(wb, &neg_s * &lx).exp();
    let sm1 = Float::with_val(wb, &s - 1u32);
    let x1s = Float::with_val(wb, &x * &xs);
    sum += Float::with_val(wb, &x1s / &sm1);
    sum += Float::with_val(wb, &xs >> 1);
    if derivative {
        dsum -= Float::with_val(wb, &x1s * &lx) / &sm1;
        dsum -= Float::with_val(wb, &x1s / sm1.clone().square());
        dsum -= Float::with_val(wb, &xs * &lx) >> 1;
    }

    let x2 = Float::with_val(wb, x.square_ref());
    let eps = Float::with_val(wb, Float::u_exp(1, -(wb as i32)));
    let jmax = (0.5 * wb as f64 + s_abs) as usize + 8;
    let table = abs_bernoulli_over_factorial_at(jmax, wb);
    let mut xpow = Float::with_val(wb, &xs / &x);
    let mut p = s.clone();
    let mut dp = Float::with_val(wb, 1);
    for j in 1..=jmax {
        let mut c = table[j].clone();
        if j % 2 == 0 {
            c = -c;
        }
        let term = Float::with_val(wb, &c * &p) * &xpow;
        let dterm = if derivative {
            let inner = Float::with_val(wb, &dp - Float::with_val(wb, &p * &lx));
            inner * &c * &xpow
        } else {
            Float::new(wb)
        };
        sum += &term;
        dsum += &dterm;
        let scale_v = Float::with_val(wb, sum.abs_ref()).max(&Float::with_val(wb, 1));
        let scale_d = Float::with_val(wb, dsum.abs_ref()).max(&Float::with_val(wb, 1));
        if j >= 2
            && term.abs() <= Float::with_val(wb, &eps * &scale_v)
            && dterm.abs() <= Float::with_val(wb, &eps * &scale_d)
        {
            return Ok((sum, dsum));
        }
        let f1 = Float::with_val(wb, &s + (2 * j - 1) as u32);
        let f2 = Float::with_val(wb, &s + (2 * j) as u32);
        let prod = Float::with_val(wb, &f1 * &f2);
        if derivative {
            let sum_f = Float::with_val(wb, &f1 + &f2);
            dp = Float::with_val(wb, &dp * &prod) + Float::with_val(wb, &p * &sum_f);
        }
        p *= &prod;
        xpow /= &x2;
    }
    Err(Error::NonConvergence {
        what: "hurwitz_zeta",
        detail: format!("Euler–Maclaurin tail still large after {jmax} terms"),
    })
}

/// A real Dirichlet character given by its values on residues mod k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LChiSpec {
    k: u64,
    chi: Vec<i8>,
}

impl LChiSpec {
    /// `values[ν]` is χ(ν) for ν = 0..k−1.
    pub fn new(k: u64, values: Vec<i8>) -> Result<Self> {
        if k < 2 || values.len() as u64 != k {
            return Err(Error::domain("LChiSpec", format!("need k ≥ 2 and {k} residue values")));
        }
        if values.iter().any(|v| !(-1..=1).contains(v)) || values[0] != 0 {
            return Err(Error::domain("LChiSpec", "values must lie in {−1, 0, 1} with χ(0) = 0"));
        }
        if values.iter().map(|&v| v as i64).sum::<i64>() != 0 {
            return Err(Error::domain("LChiSpec", "character values must sum to zero"));
        }
        Ok(Self { k, chi: values })
    }

    /// Legendre symbol (ν/p) for an odd prime p.
    pub fn legendre(p: u64) -> Result<Self> {
        if p < 3 || p % 2 == 0 || !(2..).take_while(|d| d * d <= p).all(|d| p % d != 0) {
            return Err(Error::domain("LChiSpec::legendre", format!("{p} is not an odd prime")));
        }
        let values = (0..p)
            .map(|v| match mod_pow(v, (p - 1) / 2, p) {
                0 => 0,
                1 => 1,
                _ => -1,
            })
            .collect();
        Self::new(p, values)
    }

    /// The character (ν/7): +1 on {1, 2, 4}, −1 on {3, 5, 6}.
    pub fn minus7() -> Self {
        Self::legendre(7).expect("7 is an odd prime")
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn chi(&self, n: i64) -> i8 {
        self.chi[n.rem_euclid(self.k as i64) as usize]
    }

    /// χ(−1) = −1.
    pub fn is_odd(&self) -> bool {
        self.chi[(self.k - 1) as usize] == -1
    }
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// L(s, χ) = k^(−s) Σ_ν χ(ν) ζ(s, ν/k).
pub fn l_chi(s: &Real, spec: &LChiSpec, ctx: &PrecisionContext) -> Result<Real> {
    Ok(l_chi_core(s, spec, ctx, false)?.0)
}

/// L(s, χ) and dL/ds.
pub fn l_chi_with_derivative(s: &Real, spec: &LChiSpec, ctx: &PrecisionContext) -> Result<(Real, Real)> {
    l_chi_core(s, spec, ctx, true)
}

fn l_chi_core(s: &Real, spec: &LChiSpec, ctx: &PrecisionContext, derivative: bool) -> Result<(Real, Real)> {
    if *s == 1 {
        return Err(Error::Pole { func: "l_chi", at: "s = 1 is excluded".into() });
    }
    let wb = ctx.bits() + EXTRA_BITS;
    let mut z = Float::new(wb);
    let mut dz = Float::new(wb);
    for nu in 1..spec.k {
        let c = spec.chi[nu as usize];
        if c == 0 {
            continue;
        }
        let a = Float::with_val(wb, nu) / spec.k;
        let (v, d) = hurwitz_core(s, &a, ctx.bits() + 16, derivative)?;
        if c > 0 {
            z += v;
            dz += d;
        } else {
            z -= v;
            dz -= d;
        }
    }
    let lk = Float::with_val(wb, spec.k).ln();
    let ks = Float::with_val(wb, -Float::with_val(wb, s * &lk)).exp();
    let value = Float::with_val(wb, &ks * &z);
    let deriv = (dz - Float::with_val(wb, &lk * &z)) * &ks;
    Ok((ctx.real(value), ctx.real(deriv)))
}

/// Partial sum of Σ_{n≥0} Σ_{ν=1}^{6} (ν/7)/(7n+ν)² with its tail.
#[derive(Debug, Clone)]
pub struct DirectSeries {
    pub blocks: u64,
    pub partial: Real,
    /// (1/49)(1/N² − 48/(343 N⁴)), the asymptotic tail after N blocks.
    pub tail_estimate: Real,
    /// Bound on |true tail − tail_estimate|, valid for N ≥ 10.
    pub tail_bound: Real,
}

impl DirectSeries {
    pub fn value(&self) -> Real {
        Float::with_val(self.partial.prec(), &self.partial + &self.tail_estimate)
    }
}

/// The L₋₇(2) series summed over `blocks` full periods of seven terms.
pub fn l_minus7_direct(blocks: u64, ctx: &PrecisionContext) -> Result<DirectSeries> {
    if blocks == 0 {
        return Err(Error::domain("l_minus7_direct", "need at least one block"));
    }
    const CHUNK: u64 = 1 << 14;
    let bits = ctx.bits() + 16;
    let signs: [(u64, bool); 6] = [(1, true), (2, true), (3, false), (4, true), (5, false), (6, false)];
    let chunks: Vec<u64> = (0..blocks.div_ceil(CHUNK)).collect();
    let parts: Vec<Float> = chunks
        .par_iter()
        .map(|&c| {
            let mut acc = Float::new(bits);
            for n in c * CHUNK..((c + 1) * CHUNK).min(blocks) {
                for &(nu, plus) in &signs {
                    let d = 7 * n + nu;
                    let t = Float::with_val(bits, d).square().recip();
                    if plus {
                        acc += t;
                    } else {
                        acc -= t;
                    }
                }
            }
            acc
        })
        .collect();
    let mut partial = Float::new(bits);
    for p in parts {
        partial += p;
    }
    let n = ctx.real(blocks);
    let n2 = Float::with_val(ctx.bits(), n.square_ref());
    let inv2 = Float::with_val(ctx.bits(), n2.recip_ref());
    let inv4 = Float::with_val(ctx.bits(), inv2.square_ref());
    let tail = (inv2 - inv4 * 48u32 / 343u32) / 49u32;
    let bound = Float::with_val(ctx.bits(), n2.pow(3u32)).recip() / 400u32;
    Ok(DirectSeries { blocks, partial: ctx.real(partial), tail_estimate: tail, tail_bound: bound })
}

/// cos(sπ/2) for integer s, exactly.
fn cos_half_pi_int(s: i64) -> i32 {
    match s.rem_euclid(4) {
        0 => 1,
        2 => -1,
        _ => 0,
    }
}

fn as_integer(s: &Real) -> Option<i64> {
    if s.is_integer() {
        s.to_i32_saturating().map(i64::from)
    } else {
        None
    }
}

fn require_odd(spec: &LChiSpec, func: &'static str) -> Result<()> {
    if spec.is_odd() {
        Ok(())
    } else {
        Err(Error::domain(func, "the functional equation used here needs an odd character"))
    }
}

/// Right side of L(s) = (1/π)(2π)^s k^(1/2−s) cos(sπ/2) Γ(1−s) L(1−s).
///
/// At integers s ≥ 2 the product cos·Γ·L(1−s) is taken as its limit:
/// for odd s via Γ(1−s)Γ(s) = π/sin(πs); for even s, where L(1−s) = 0,
/// through L′(1−s).
pub fn functional_equation_rhs(s: &Real, spec: &LChiSpec, ctx: &PrecisionContext) -> Result<Real> {
    require_odd(spec, "functional_equation_residual")?;
    let wctx = PrecisionContext::new((ctx.digits() + 10).min(crate::numerics::MAX_DIGITS))?;
    let s_w = wctx.real(s);
    let pi = wctx.pi();
    let one_minus_s = Float::with_val(wctx.bits(), 1 - &s_w);
    let factor = match as_integer(&s_w) {
        Some(n) if n >= 2 && n % 2 == 1 => {
            // cos(sπ/2)Γ(1−s) = π / (2 sin(sπ/2) Γ(s)), sin(sπ/2) = ±1
            let sign = if (n - 1) % 4 == 0 { 1 } else { -1 };
            let g = gamma(&s_w, &wctx)?;
            let l = l_chi(&one_minus_s, spec, &wctx)?;
            Float::with_val(wctx.bits(), &pi / (g * 2u32)) * l * sign
        }
        Some(n) if n >= 2 => {
            let m = n - 1;
            let (_, dl) = l_chi_with_derivative(&one_minus_s, spec, &wctx)?;
            let m_fact = Float::with_val(wctx.bits(), rug::Integer::from(rug::Integer::factorial(m as u32)));
            let sign = cos_half_pi_int(n) * if m % 2 == 0 { 1 } else { -1 };
            dl / m_fact * sign
        }
        Some(n) => {
            let g = gamma(&one_minus_s, &wctx)?;
            let l = l_chi(&one_minus_s, spec, &wctx)?;
            g * l * cos_half_pi_int(n)
        }
        None => {
            let c = (Float::with_val(wctx.bits(), &s_w * &pi) / 2u32).cos();
            let g = gamma(&one_minus_s, &wctx)?;
            let l = l_chi(&one_minus_s, spec, &wctx)?;
            c * g * l
        }
    };
    let two_pi = Float::with_val(wctx.bits(), &pi * 2u32);
    let lead = Float::with_val(wctx.bits(), two_pi.pow(&s_w)) / &pi;
    let half_minus_s = Float::with_val(wctx.bits(), 0.5 - &s_w);
    let kpow = wctx.real(spec.k).pow(&half_minus_s);
    Ok(ctx.real(lead * kpow * factor))
}

/// |L(s) − right side of the functional equation|.
pub fn functional_equation_residual(s: &Real, spec: &LChiSpec, ctx: &PrecisionContext) -> Result<Real> {
    let lhs = l_chi(s, spec, ctx)?;
    let rhs = functional_equation_rhs(s, spec, ctx)?;
    Ok((lhs - rhs).abs())
}

/// |L(1−s) − 2(2π)^(−s) k^(s−1/2) sin(sπ/2) Γ(s) L(s)|, the same equation
/// solved for the reflected value. Needs Γ(s) finite and s ≠ 0, 1.
pub fn functional_equation_sine_residual(s: &Real, spec: &LChiSpec, ctx: &PrecisionContext) -> Result<Real> {
    let rhs = functional_equation_sine_rhs(s, spec, ctx)?;
    let one_minus_s = Float::with_val(ctx.bits(), 1 - s);
    let lhs = l_chi(&one_minus_s, spec, ctx)?;
    Ok((lhs - rhs).abs())
}

/// 2(2π)^(−s) k^(s−1/2) sin(sπ/2) Γ(s) L(s), which equals L(1−s).
pub fn functional_equation_sine_rhs(s: &Real, spec: &LChiSpec, ctx: &PrecisionContext) -> Result<Real> {
    require_odd(spec, "functional_equation_sine_residual")?;
    if s.is_integer() && *s <= 1 {
        return Err(Error::domain(
            "functional_equation_sine_residual",
            "s must avoid the non-positive integers and 1",
        ));
    }
    let pi = ctx.pi();
    let sine = match as_integer(s) {
        Some(n) => ctx.real(cos_half_pi_int(n - 1)),
        None => (Float::with_val(ctx.bits(), s * &pi) / 2u32).sin(),
    };
    let two_pi = Float::with_val(ctx.bits(), &pi * 2u32);
    let neg_s = Float::with_val(ctx.bits(), -s);
    let lead = two_pi.pow(&neg_s) * 2u32;
    let s_minus_half = Float::with_val(ctx.bits(), s - 0.5);
    let kpow = ctx.real(spec.k).pow(&s_minus_half);
    Ok(lead * kpow * sine * gamma(s, ctx)? * l_chi(s, spec, ctx)?)
}

/// Central-difference check of L′(−1) = k^(3/2)/(4π) · L(2).
#[derive(Debug, Clone)]
pub struct DerivativeCheck {
    pub step: Real,
    pub finite_difference: Real,
    pub predicted: Real,
    pub residual: Real,
    /// Digits used for the difference quotient.
    pub work_digits: u32,
}

/// Step h = 10^(−digits/3) with the working precision tripled (capped at the
/// supported maximum).
pub fn l_derivative_check(spec: &LChiSpec, ctx: &PrecisionContext) -> Result<DerivativeCheck> {
    let exponent = -(ctx.digits() as i32 / 3);
    l_derivative_check_with_step(spec, ctx, exponent)
}

/// As [`l_derivative_check`] with h = 10^step_exponent.
pub fn l_derivative_check_with_step(
    spec: &LChiSpec,
    ctx: &PrecisionContext,
    step_exponent: i32,
) -> Result<DerivativeCheck> {
    require_odd(spec, "l_derivative_check")?;
    let (fd, h, wctx) = central_difference(ctx, step_exponent, |s, c| l_chi(s, spec, c))?;
    let pi = wctx.pi();
    let k = wctx.real(spec.k);
    let k32 = Float::with_val(wctx.bits(), k.sqrt_ref()) * &k;
    let predicted = k32 / (pi * 4u32) * l_chi(&wctx.real(2), spec, &wctx)?;
    let residual = Float::with_val(wctx.bits(), &fd - &predicted).abs();
    Ok(DerivativeCheck {
        step: h,
        finite_difference: fd,
        predicted,
        residual,
        work_digits: wctx.digits(),
    })
}

/// Central-difference check of ζ_K′(−1) = −k^(3/2)/(48π) · L(2) for
/// ζ_K(s) = ζ(s) L(s), using L(−1) = 0.
pub fn dedekind_derivative_check(spec: &LChiSpec, ctx: &PrecisionContext) -> Result<DerivativeCheck> {
    require_odd(spec, "dedekind_derivative_check")?;
    let exponent = -(ctx.digits() as i32 / 3);
    let (fd, h, wctx) = central_difference(ctx, exponent, |s, c| {
        Ok(riemann_zeta(s, c)? * l_chi(s, spec, c)?)
    })?;
    let pi = wctx.pi();
    let k = wctx.real(spec.k);
    let k32 = Float::with_val(wctx.bits(), k.sqrt_ref()) * &k;
    let predicted = -(k32 / (pi * 48u32)) * l_chi(&wctx.real(2), spec, &wctx)?;
    let residual = Float::with_val(wctx.bits(), &fd - &predicted).abs();
    Ok(DerivativeCheck {
        step: h,
        finite_difference: fd,
        predicted,
        residual,
        work_digits: wctx.digits(),
    })
}

fn central_difference<F>(ctx: &PrecisionContext, step_exponent: i32, f: F) -> Result<(Real, Real, PrecisionContext)>
where
    F: Fn(&Real, &PrecisionContext) -> Result<Real>,
{
    let wctx = PrecisionContext::new((ctx.digits() * 3).min(crate::numerics::MAX_DIGITS))?;
    let h = wctx.pow10(step_exponent);
    let at = wctx.real(-1);
    let plus = f(&Float::with_val(wctx.bits(), &at + &h), &wctx)?;
    let minus = f(&Float::with_val(wctx.bits(), &at - &h), &wctx)?;
    let fd = (plus - minus) / Float::with_val(wctx.bits(), &h * 2u32);
    Ok((fd, h, wctx))
}

/// Truncated (1/2) Σ (m² + mn + 2n²)^(−s) over the square max(|m|, |n|) ≤ R.
#[derive(Debug, Clone)]
pub struct LatticeSum {
    pub radius: u64,
    pub partial: Real,
    /// (π/√7) X^(1−s)/(s−1) with X = 7R²/8: the integral of the form's
    /// density over the region outside the square, for a level set of the
    /// same area.
    pub tail_estimate: Real,
}

impl LatticeSum {
    pub fn value(&self) -> Real {
        Float::with_val(self.partial.prec(), &self.partial + &self.tail_estimate)
    }
}

pub fn dedekind_lattice_sum(s: &Real, radius: u64, ctx: &PrecisionContext) -> Result<LatticeSum> {
    if *s <= 1 {
        return Err(Error::domain("dedekind_lattice_sum", "the lattice sum diverges for s ≤ 1"));
    }
    if radius < 10 {
        return Err(Error::domain("dedekind_lattice_sum", "radius must be at least 10"));
    }
    let bits = ctx.bits() + 16;
    let r = radius as i64;
    let int_s = as_integer(s).filter(|&n| n > 0).map(|n| n as u32);
    let s_w = Float::with_val(bits, s);
    let term = |q: i64| -> Float {
        match int_s {
            Some(e) => Float::with_val(bits, rug::Integer::from(q).pow(e)).recip(),
            None => Float::with_val(bits, q).pow(Float::with_val(bits, -&s_w)),
        }
    };
    let rows: Vec<i64> = (-r..=r).collect();
    let parts: Vec<Float> = rows
        .par_iter()
        .map(|&n| {
            let mut acc = Float::new(bits);
            for m in -r..=r {
                if m == 0 && n == 0 {
                    continue;
                }
                acc += term(m * m + m * n + 2 * n * n);
            }
            acc
        })
        .collect();
    let mut total = Float::new(bits);
    for p in parts {
        total += p;
    }
    total >>= 1;
    let cb = ctx.bits();
    let x = Float::with_val(cb, radius).square() * 7u32 / 8u32;
    let sm1 = Float::with_val(cb, s - 1u32);
    let one_minus_s = Float::with_val(cb, -&sm1);
    let tail = ctx.pi() / ctx.sqrt(7) * x.pow(&one_minus_s) / sm1;
    Ok(LatticeSum { radius, partial: ctx.real(total), tail_estimate: tail })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &Real, b: &Real, tol: &Real) -> bool {
        Float::with_val(a.prec(), a - b).abs() < *tol
    }

    #[test]
    fn zeta_two_and_half_shift() {
        let ctx = PrecisionContext::new(50).unwrap();
        let pi2 = ctx.pi().square();
        let z = hurwitz_zeta(&ctx.real(2), &ctx.one(), &ctx).unwrap();
        assert!(close(&z, &(pi2.clone() / 6u32), ctx.eval_tol()));
        let h = hurwitz_zeta(&ctx.real(2), &ctx.real(0.5), &ctx).unwrap();
        assert!(close(&h, &(pi2 / 2u32), ctx.eval_tol()));
    }

    #[test]
    fn zeta_matches_mpfr_at_odd_and_negative_s() {
        let ctx = PrecisionContext::new(60).unwrap();
        for s in [3.0, 0.5, -0.5, -1.0, -3.5, 25.0] {
            let ours = riemann_zeta(&ctx.real(s), &ctx).unwrap();
            let reference = ctx.real(s).zeta();
            assert!(close(&ours, &reference, ctx.eval_tol()), "s = {s}");
        }
        let z = riemann_zeta(&ctx.real(-1), &ctx).unwrap();
        assert!(close(&z, &ctx.ratio(-1, 12), ctx.eval_tol()));
    }

    #[test]
    fn trigamma_third_against_direct_series() {
        let ctx = PrecisionContext::new(30).unwrap();
        let third = ctx.ratio(1, 3);
        let h = hurwitz_zeta(&ctx.real(2), &third, &ctx).unwrap();
        // direct sum to N plus the tail 1/x + 1/(2x²) + 1/(6x³) − 1/(30x⁵) + 1/(42x⁷), x = N + 1/3
        let n = 2000u32;
        let mut acc = ctx.zero();
        for k in 0..n {
            acc += (ctx.real(k) + &third).square().recip();
        }
        let x = ctx.real(n) + &third;
        acc += x.clone().recip() + x.clone().square().recip() / 2u32 + x.clone().pow(3u32).recip() / 6u32
            - x.clone().pow(5u32).recip() / 30u32
            + x.pow(7u32).recip() / 42u32;
        assert!(close(&h, &acc, &ctx.pow10(-25)));
    }

    #[test]
    fn derivative_matches_mpfr_difference() {
        let ctx = PrecisionContext::new(40).unwrap();
        let s = ctx.real(2.5);
        let a = ctx.real(0.75);
        let (_, d) = hurwitz_zeta_with_derivative(&s, &a, &ctx).unwrap();
        let h = ctx.pow10(-12);
        let up = hurwitz_zeta(&(s.clone() + &h), &a, &ctx).unwrap();
        let down = hurwitz_zeta(&(s.clone() - &h), &a, &ctx).unwrap();
        let fd = (up - down) / (h * 2u32);
        assert!(close(&d, &fd, &ctx.pow10(-20)));
    }

    #[test]
    fn errors_at_pole_and_bad_shift() {
        let ctx = PrecisionContext::new(20).unwrap();
        assert!(matches!(hurwitz_zeta(&ctx.one(), &ctx.one(), &ctx), Err(Error::Pole { .. })));
        assert!(matches!(hurwitz_zeta(&ctx.real(2), &ctx.zero(), &ctx), Err(Error::Domain { .. })));
    }

    #[test]
    fn minus7_character() {
        let spec = LChiSpec::minus7();
        let got: Vec<i8> = (1..7).map(|n| spec.chi(n)).collect();
        assert_eq!(got, vec![1, 1, -1, 1, -1, -1]);
        assert!(spec.is_odd());
        assert!(LChiSpec::new(3, vec![0, 1, 1]).is_err());
        assert!(LChiSpec::legendre(9).is_err());
    }

    #[test]
    fn l_values_at_zero_and_minus_one() {
        let ctx = PrecisionContext::new(40).unwrap();
        let spec = LChiSpec::minus7();
        // L(0) = −(1/k) Σ ν χ(ν) = 1, the class number of Q(√−7)
        let l0 = l_chi(&ctx.zero(), &spec, &ctx).unwrap();
        assert!(close(&l0, &ctx.one(), ctx.eval_tol()));
        let lm1 = l_chi(&ctx.real(-1), &spec, &ctx).unwrap();
        assert!(lm1.abs() < *ctx.eval_tol());
    }

    #[test]
    fn first_block_of_direct_series() {
        let ctx = PrecisionContext::new(30).unwrap();
        let d = l_minus7_direct(1, &ctx).unwrap();
        let expect = ctx.one() + ctx.ratio(1, 4) - ctx.ratio(1, 9) + ctx.ratio(1, 16) - ctx.ratio(1, 25)
            - ctx.ratio(1, 36);
        assert!(close(&d.partial, &expect, ctx.eval_tol()));
    }

    #[test]
    fn direct_series_tail_is_honest() {
        let ctx = PrecisionContext::new(30).unwrap();
        let l2 = l_chi(&ctx.real(2), &LChiSpec::minus7(), &ctx).unwrap();
        for n in [10u64, 100, 3000] {
            let d = l_minus7_direct(n, &ctx).unwrap();
            let err = Float::with_val(ctx.bits(), &l2 - d.value()).abs();
            assert!(err < d.tail_bound, "N = {n}");
        }
    }

    #[test]
    fn functional_equation_sample_points() {
        let ctx = PrecisionContext::new(50).unwrap();
        let spec = LChiSpec::minus7();
        let tol = ctx.verify_tol().clone() * 10u32;
        for s in [-0.5, 0.25, 0.5, 1.5, 2.0, 3.0, 4.0, -2.0] {
            let r = functional_equation_residual(&ctx.real(s), &spec, &ctx).unwrap();
            assert!(r < tol, "s = {s}: {r}");
        }
        for s in [0.5, 1.5, 2.0, 3.0, 2.75] {
            let r = functional_equation_sine_residual(&ctx.real(s), &spec, &ctx).unwrap();
            assert!(r < tol, "sine form s = {s}: {r}");
        }
    }

    #[test]
    fn derivative_at_minus_one() {
        let ctx = PrecisionContext::new(50).unwrap();
        let spec = LChiSpec::minus7();
        let c = l_derivative_check(&spec, &ctx).unwrap();
        assert!(c.residual < ctx.pow10(-30), "{}", c.residual);
        let z = dedekind_derivative_check(&spec, &ctx).unwrap();
        assert!(z.residual < ctx.pow10(-30), "{}", z.residual);
    }

    #[test]
    fn lattice_sum_small_radius() {
        let ctx = PrecisionContext::new(20).unwrap();
        let spec = LChiSpec::minus7();
        let s = ctx.real(3);
        let exact = riemann_zeta(&s, &ctx).unwrap() * l_chi(&s, &spec, &ctx).unwrap();
        let sum = dedekind_lattice_sum(&s, 200, &ctx).unwrap();
        assert!(close(&sum.partial, &exact, &ctx.pow10(-6)));
        assert!(sum.partial < exact);
    }
}

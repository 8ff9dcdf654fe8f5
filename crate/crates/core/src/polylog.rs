//! The complex dilogarithm, the Bloch–Wigner function and the evaluations of
//! L₋₇(2) that go through them.
//!
//! Branch convention: Li₂(z) = −∫₀^z ln(1−t)/t dt with the principal logarithm,
//! arg ∈ (−π, π]. On the cut z > 1 this gives Im Li₂(z) = −π ln z, the value
//! reached from the upper half plane.

use rug::float::Constant;
use rug::Float;

use crate::bernoulli::abs_bernoulli_over_factorial_at;
use crate::clausen::cl2_real;
use crate::error::{Error, Result};
use crate::lseries::{l_chi, LChiSpec};
use crate::numerics::{Angle, Complex, PrecisionContext, Real};
use crate::quadrature::tanh_sinh;

const EXTRA_BITS: u32 = 24;

/// Li₂(z) to within `ctx.eval_tol`.
pub fn li2(z: &Complex, ctx: &PrecisionContext) -> Complex {
    let wb = ctx.bits() + EXTRA_BITS;
    let z = Complex::new(Float::with_val(wb, &z.re), Float::with_val(wb, &z.im));
    let v = li2_at(&z, wb);
    Complex::new(ctx.real(&v.re), ctx.real(&v.im))
}

fn pi_sq_over_6(wb: u32) -> Float {
    Float::with_val(wb, Float::with_val(wb, Constant::Pi).square()) / 6u32
}

fn li2_at(z: &Complex, wb: u32) -> Complex {
    if z.is_zero() {
        return Complex::new(Float::new(wb), Float::new(wb));
    }
    if z.im.is_zero() && z.re == 1 {
        return Complex::new(pi_sq_over_6(wb), Float::new(wb));
    }
    let norm = z.norm_sqr();
    if norm > 1 {
        // Li₂(z) = −Li₂(1/z) − π²/6 − ½ ln²(−z)
        let inv = li2_at(&z.recip(), wb);
        let neg = Complex::new(-z.re.clone(), -z.im.clone());
        let l = neg.ln();
        let l2 = &l * &l;
        let re = -inv.re - pi_sq_over_6(wb) - (l2.re / 2u32);
        let im = -inv.im - (l2.im / 2u32);
        return Complex::new(re, im);
    }
    if z.re <= 0.5 {
        return li2_bernoulli(z, wb);
    }
    // Li₂(z) = π²/6 − ln z · ln(1−z) − Li₂(1−z)
    let one_minus = Complex::new(Float::with_val(wb, 1 - &z.re), -z.im.clone());
    let reflected = li2_bernoulli(&one_minus, wb);
    let prod = &z.ln() * &one_minus.ln();
    Complex::new(pi_sq_over_6(wb) - prod.re - reflected.re, -prod.im - reflected.im)
}

/// Σ_k B_k w^(k+1)/(k+1)! with w = −ln(1−z); needs |w| < 2π, used for Re z ≤ 1/2, |z| ≤ 1.
fn li2_bernoulli(z: &Complex, wb: u32) -> Complex {
    // ln|1−z| = ½ ln(1 + |z|² − 2 Re z), accurate for small z
    let t = Float::with_val(wb, z.norm_sqr() - Float::with_val(wb, &z.re * 2u32));
    let ln_abs = t.ln_1p() / 2u32;
    let one_minus = Complex::new(Float::with_val(wb, 1 - &z.re), -z.im.clone());
    let w = Complex::new(-ln_abs, -one_minus.arg());
    let w2 = &w * &w;
    let quarter = Float::with_val(wb, 0.25f64);
    let mut sum = Complex::new(
        Float::with_val(wb, &w.re - Float::with_val(wb, &w2.re * &quarter)),
        Float::with_val(wb, &w.im - Float::with_val(wb, &w2.im * &quarter)),
    );
    let eps = Float::with_val(wb, Float::u_exp(1, -(wb as i32)));
    let kmax = wb as usize / 2 + 8;
    let table = abs_bernoulli_over_factorial_at(kmax, wb);
    let mut p = w.clone();
    for (k, c) in table.iter().enumerate().take(kmax + 1).skip(1) {
        p = &p * &w2;
        // B₂ₖ/(2k+1)! = ±|B₂ₖ|/(2k)! / (2k+1)
        let mut coef = Float::with_val(wb, c / (2 * k as u32 + 1));
        if k % 2 == 0 {
            coef = -coef;
        }
        let term = p.scale(&coef);
        let small = term.abs() < eps;
        sum = &sum + &term;
        if small {
            break;
        }
    }
    sum
}

/// Σ_{k≤N} z^k/k², the defining series, for |z| < 1; stops once terms fall below eval_tol/100.
pub fn li2_series(z: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    let wb = ctx.bits() + EXTRA_BITS;
    let z = Complex::new(Float::with_val(wb, &z.re), Float::with_val(wb, &z.im));
    if z.norm_sqr() >= 1 {
        return Err(Error::domain("li2_series", "series used only inside the unit disk"));
    }
    let eps = Float::with_val(wb, ctx.eval_tol() / 100u32);
    let mut p = z.clone();
    let mut sum = z.clone();
    for k in 2u64.. {
        p = &p * &z;
        let k2 = Float::with_val(wb, k * k);
        let term = Complex::new(Float::with_val(wb, &p.re / &k2), Float::with_val(wb, &p.im / &k2));
        sum = &sum + &term;
        if p.abs() < eps {
            break;
        }
    }
    Ok(Complex::new(ctx.real(&sum.re), ctx.real(&sum.im)))
}

/// Li₂(z) = −∫₀¹ ln(1 − zs)/s ds by tanh-sinh, for z off the cut [1, ∞).
pub fn li2_integral(z: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    if z.im.is_zero() && z.re >= 1 {
        return Err(Error::domain("li2_integral", "z on the cut [1, ∞)"));
    }
    let r = tanh_sinh(
        |s, _, _| {
            let bits = s.prec();
            let zs = z.scale(s);
            let one_minus = Complex::new(Float::with_val(bits, 1 - &zs.re), -Float::with_val(bits, &zs.im));
            let t = Float::with_val(bits, zs.norm_sqr() - Float::with_val(bits, &zs.re * 2u32));
            let l = Complex::new(t.ln_1p() / 2u32, one_minus.arg());
            let inv = Float::with_val(bits, s.recip_ref());
            Ok(Complex::new(-(l.re * &inv), -(l.im * &inv)))
        },
        &ctx.zero(),
        &ctx.one(),
        ctx,
    )?;
    Ok(Complex::new(ctx.real(&r.value.re), ctx.real(&r.value.im)))
}

/// |Li₂(e^{iθ}) − [π²/6 − θ(2π − θ)/4 + i Cl₂(θ)]| for 0 ≤ θ ≤ 2π.
pub fn unit_circle_residual(theta: &Real, ctx: &PrecisionContext) -> Result<Real> {
    let two_pi = ctx.pi() * 2u32;
    if *theta < 0 || *theta > two_pi {
        return Err(Error::domain("unit_circle_residual", "need 0 ≤ θ ≤ 2π"));
    }
    let z = Complex::from_polar(&ctx.one(), &ctx.real(theta));
    let v = li2(&z, ctx);
    let re = pi_sq_over_6(ctx.bits()) - ctx.real(theta) * (two_pi - theta) / 4u32;
    let im = cl2_real(theta, ctx);
    Ok((re - v.re).hypot(&(im - v.im)))
}

/// 6[Li₂(e^{iθ}) + Li₂(e^{−iθ})], which is real.
pub fn unit_circle_pair_sum(theta: &Real, ctx: &PrecisionContext) -> Real {
    let z = Complex::from_polar(&ctx.one(), &ctx.real(theta));
    let a = li2(&z, ctx);
    let b = li2(&z.conj(), ctx);
    (a.re + b.re) * 6u32
}

/// 2π² − 6πθ + 3θ² = 3(π − θ)² − π², the pair sum implied by the unit-circle relation.
pub fn unit_circle_pair_closed(theta: &Real, ctx: &PrecisionContext) -> Real {
    let pi = ctx.pi();
    let d = Float::with_val(ctx.bits(), &pi - theta).square() * 3u32;
    d - pi.square()
}

/// 2π² + 3θ², the recorded pair-sum form; it disagrees
/// with [`unit_circle_pair_closed`] except at θ = 0.
pub fn unit_circle_pair_printed(theta: &Real, ctx: &PrecisionContext) -> Real {
    let pi2 = ctx.pi().square();
    pi2 * 2u32 + ctx.real(theta).square() * 3u32
}

/// θ₊ = atan(√7/3).
pub fn theta_plus(ctx: &PrecisionContext) -> Real {
    (ctx.sqrt(7) / 3u32).atan()
}

/// The three printed right sides of the z = (1 + 3i√7)/8 pair sum:
/// 3(π − 2θ₊)² − π², 3(θ₇ − θ₊)² − π², 3[π − atan(3√7)]² − π².
pub fn pair_sum_special_forms(ctx: &PrecisionContext) -> [Real; 3] {
    let pi = ctx.pi();
    let pi2 = Float::with_val(ctx.bits(), pi.square_ref());
    let tp = theta_plus(ctx);
    let t7 = Angle::theta(7).to_real(ctx);
    let a = (pi.clone() - tp.clone() * 2u32).square() * 3u32 - &pi2;
    let b = (t7 - tp).square() * 3u32 - &pi2;
    let c = (pi - (ctx.sqrt(7) * 3u32).atan()).square() * 3u32 - &pi2;
    [a, b, c]
}

/// 6[Li₂(z) + Li₂(z̄)] at z = (1 + 3i√7)/8.
pub fn pair_sum_special(ctx: &PrecisionContext) -> Real {
    let z = Complex::new(ctx.ratio(1, 8), ctx.sqrt(7) * 3u32 / 8u32);
    let a = li2(&z, ctx);
    let b = li2(&z.conj(), ctx);
    (a.re + b.re) * 6u32
}

/// A point with its two Clausen angles θ = arg z and ω = arg(1 − z̄).
#[derive(Debug, Clone, PartialEq)]
pub struct BlochWignerPoint {
    pub z: Complex,
    pub theta: Real,
    pub omega: Real,
}

impl BlochWignerPoint {
    pub fn new(z: Complex) -> Self {
        let theta = z.arg();
        let one_minus_conj = Complex::new(Float::with_val(z.prec(), 1 - &z.re), z.im.clone());
        let omega = one_minus_conj.arg();
        Self { z, theta, omega }
    }
}

/// D(z) = Im Li₂(z) + arg(1 − z) ln|z|; exactly 0 at z = 0 and z = 1.
pub fn bloch_wigner(z: &Complex, ctx: &PrecisionContext) -> Real {
    if z.is_zero() || (z.im.is_zero() && z.re == 1) {
        return ctx.zero();
    }
    let wb = ctx.bits() + EXTRA_BITS;
    let zw = Complex::new(Float::with_val(wb, &z.re), Float::with_val(wb, &z.im));
    let l = li2_at(&zw, wb);
    let one_minus = Complex::new(Float::with_val(wb, 1 - &zw.re), -zw.im.clone());
    let ln_abs = zw.norm_sqr().ln() / 2u32;
    ctx.real(l.im + one_minus.arg() * ln_abs)
}

/// ½[Cl₂(2θ) + Cl₂(2ω) − Cl₂(2θ + 2ω)] with θ = arg z, ω = arg(1 − z̄).
pub fn bw_clausen_form(z: &Complex, ctx: &PrecisionContext) -> Real {
    let p = BlochWignerPoint::new(z.clone());
    let wctx = ctx.with_digits((ctx.digits() + 5).min(crate::numerics::MAX_DIGITS)).unwrap_or_else(|_| ctx.clone());
    let t2 = wctx.real(&p.theta) * 2u32;
    let o2 = wctx.real(&p.omega) * 2u32;
    let sum = Float::with_val(wctx.bits(), &t2 + &o2);
    let v = cl2_real(&t2, &wctx) + cl2_real(&o2, &wctx) - cl2_real(&sum, &wctx);
    ctx.real(v / 2u32)
}

/// (7/2)[Im Li₂(R e^{iφ}) − b ln R] with R = tan b / (sin φ + tan b cos φ).
pub fn kummer_value(phi: &Real, b: &Real, ctx: &PrecisionContext) -> Result<Real> {
    let tb = ctx.real(b).tan();
    let (s, c) = ctx.real(phi).sin_cos(ctx.zero());
    let denom = s + Float::with_val(ctx.bits(), &tb * &c);
    if denom <= 0 || tb <= 0 {
        return Err(Error::domain("kummer_value", "R = tan b/(sin φ + tan b cos φ) must be positive"));
    }
    let r = tb / denom;
    let z = Complex::from_polar(&r, &ctx.real(phi));
    let l = li2(&z, ctx);
    let v = l.im - ctx.real(b) * r.ln();
    Ok(v * 7u32 / 2u32)
}

/// (7/4)[Cl₂(2π/7) + Cl₂(4π/7) − Cl₂(6π/7)].
pub fn seventh_clausen_combination(ctx: &PrecisionContext) -> Real {
    let c = |p: i64| crate::clausen::cl2(&Angle::rational_pi(p, 7).expect("q > 0"), ctx);
    (c(2) + c(4) - c(6)) * 7u32 / 4u32
}

/// (8/(7√7))[2D((1 + i√7)/2) + D((−1 + i√7)/4)].
pub fn i7_bloch_wigner_d_form(ctx: &PrecisionContext) -> Real {
    let (a, b) = eq48_points(ctx);
    let s = bloch_wigner(&a, ctx) * 2u32 + bloch_wigner(&b, ctx);
    s * 8u32 / (ctx.sqrt(7) * 7u32)
}

/// (4/(7√7))[4Cl₂(π − θ₇) − Cl₂(θ₇) + Cl₂(θ₇₅) + Cl₂(θ₇ − θ₇₅)].
pub fn i7_bloch_wigner(ctx: &PrecisionContext) -> Real {
    let t7 = Angle::theta(7).to_real(ctx);
    let t75 = Angle::surd_atan(7, 1, 5).expect("valid surd").to_real(ctx);
    let c = |x: &Real| cl2_real(x, ctx);
    let s = c(&(ctx.pi() - &t7)) * 4u32 - c(&t7) + c(&t75) + c(&(t7.clone() - &t75));
    s * 4u32 / (ctx.sqrt(7) * 7u32)
}

fn eq48_points(ctx: &PrecisionContext) -> (Complex, Complex) {
    let r7 = ctx.sqrt(7);
    let a = Complex::new(ctx.ratio(1, 2), r7.clone() / 2u32);
    let b = Complex::new(ctx.ratio(-1, 4), r7 / 4u32);
    (a, b)
}

/// ((4π²/(21√7))[2D((1+i√7)/2) + D((−1+i√7)/4)], ζ(2) L₋₇(2)).
pub fn dedekind_bloch_wigner_sides(ctx: &PrecisionContext) -> Result<(Real, Real)> {
    let (a, b) = eq48_points(ctx);
    let s = bloch_wigner(&a, ctx) * 2u32 + bloch_wigner(&b, ctx);
    let pi2 = ctx.pi().square();
    let lhs = s * &pi2 * 4u32 / (ctx.sqrt(7) * 21u32);
    let rhs = pi2 / 6u32 * l_chi(&ctx.real(2), &LChiSpec::minus7(), ctx)?;
    Ok((lhs, rhs))
}

/// |(4π²/(21√7))[2D((1+i√7)/2) + D((−1+i√7)/4)] − ζ(2) L₋₇(2)|.
pub fn dedekind_bloch_wigner_residual(ctx: &PrecisionContext) -> Result<Real> {
    let (lhs, rhs) = dedekind_bloch_wigner_sides(ctx)?;
    Ok((lhs - rhs).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(d: u32) -> PrecisionContext {
        PrecisionContext::new(d).unwrap()
    }

    fn c(re: f64, im: f64, ctx: &PrecisionContext) -> Complex {
        Complex::new(ctx.real(re), ctx.real(im))
    }

    #[test]
    fn special_values() {
        let x = ctx(40);
        assert!(li2(&Complex::zero(&x), &x).is_zero());
        let one = li2(&Complex::one(&x), &x);
        assert!((one.re - x.pi().square() / 6u32).abs() < *x.eval_tol());
        let m1 = li2(&c(-1.0, 0.0, &x), &x);
        assert!((m1.re + x.pi().square() / 12u32).abs() < *x.eval_tol());
        let half = li2(&c(0.5, 0.0, &x), &x);
        let expect = x.pi().square() / 12u32 - x.ln2().square() / 2u32;
        assert!((half.re - expect).abs() < *x.eval_tol());
    }

    #[test]
    fn cut_convention_at_two() {
        let x = ctx(40);
        let v = li2(&c(2.0, 0.0, &x), &x);
        let re = x.pi().square() / 4u32;
        let im = -(x.pi() * x.ln2());
        assert!((v.re - re).abs() < *x.eval_tol());
        assert!((v.im - im).abs() < *x.eval_tol());
    }

    #[test]
    fn three_routes_agree_inside_disk() {
        let x = ctx(40);
        for (re, im) in [(0.3, 0.4), (-0.7, 0.2), (0.85, -0.1), (0.1, -0.89)] {
            let z = c(re, im, &x);
            let a = li2(&z, &x);
            let b = li2_series(&z, &x).unwrap();
            let q = li2_integral(&z, &x).unwrap();
            assert!((&a - &b).abs() < *x.eval_tol(), "{re} {im}");
            assert!((&a - &q).abs() < *x.eval_tol(), "{re} {im}");
        }
    }

    #[test]
    fn unit_circle_relation() {
        let x = ctx(50);
        for t in [0.0, 1.2, 3.0, 5.5] {
            assert!(unit_circle_residual(&x.real(t), &x).unwrap() < *x.verify_tol(), "{t}");
        }
        assert!(unit_circle_residual(&x.pi(), &x).unwrap() < *x.verify_tol());
        assert!(unit_circle_residual(&x.real(-0.1), &x).is_err());
    }

    #[test]
    fn pair_sum_closed_and_printed() {
        let x = ctx(50);
        let th = x.real(1.1);
        let s = unit_circle_pair_sum(&th, &x);
        assert!((s.clone() - unit_circle_pair_closed(&th, &x)).abs() < *x.verify_tol());
        assert!((s - unit_circle_pair_printed(&th, &x)).abs() > 1);
        let p = pair_sum_special(&x);
        for f in pair_sum_special_forms(&x) {
            assert!((p.clone() - f).abs() < *x.verify_tol());
        }
    }

    #[test]
    fn bloch_wigner_real_axis_and_conjugation() {
        let x = ctx(40);
        for re in [-2.0, -0.5, 0.3, 0.5, 0.9, 3.0] {
            assert!(bloch_wigner(&c(re, 0.0, &x), &x).abs() < *x.verify_tol(), "{re}");
        }
        let z = c(0.3, 0.8, &x);
        let d = bloch_wigner(&z, &x);
        let e = bloch_wigner(&z.conj(), &x);
        assert!((d.clone() + e).abs() < *x.verify_tol());
        assert!((d - bw_clausen_form(&z, &x)).abs() < *x.verify_tol());
    }

    #[test]
    fn i7_two_forms_and_dedekind_value() {
        let x = ctx(50);
        let cl = i7_bloch_wigner(&x);
        let d = i7_bloch_wigner_d_form(&x);
        assert!((cl.clone() - &d).abs() < *x.verify_tol());
        let golden = crate::numerics::parse_decimal("1.15192547054449104710169", &x).unwrap();
        assert!((cl - golden).abs() < x.pow10(-23));
        assert!(dedekind_bloch_wigner_residual(&x).unwrap() < *x.verify_tol());
    }

    #[test]
    fn kummer_orderings() {
        let x = ctx(50);
        let p7 = x.pi() / 7u32;
        let a = kummer_value(&p7, &(p7.clone() * 2u32), &x).unwrap();
        let b = kummer_value(&(p7.clone() * 2u32), &p7, &x).unwrap();
        let target = seventh_clausen_combination(&x);
        assert!((a.clone() - &target).abs() < *x.verify_tol());
        assert!((b - target).abs() < *x.verify_tol());
    }
}

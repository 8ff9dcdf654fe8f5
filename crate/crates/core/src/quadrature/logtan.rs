//! Integrals of ln|(tan t + a)/(tan t − a)| and their Clausen closed forms.
//!
//! Quadrature integrands use ln|sin(t + φ)| − ln|sin(t − φ)| with a = tan φ,
//! which equals the tangent ratio and stays bounded at t = π/2. Every interval
//! is split at φ so that t − φ is handed over exactly as a distance to an end.

use rayon::prelude::*;
use rug::{Float, Rational};

use super::engine::{exp_sinh, semi_infinite_rational, tanh_sinh, QuadratureResult};
use crate::clausen::{cl2, cl2_real};
use crate::error::{Error, Result};
use crate::numerics::{Angle, PrecisionContext, Real};

const GUARD: u32 = 5;

fn cl(x: &Real, w: &PrecisionContext) -> Real {
    cl2_real(x, w)
}

fn half_pi(ctx: &PrecisionContext) -> Real {
    ctx.pi() / 2u32
}

fn check_phi(func: &'static str, phi: &Real, ctx: &PrecisionContext) -> Result<()> {
    if *phi <= 0 || *phi >= half_pi(ctx) {
        return Err(Error::domain(func, "need 0 < φ < π/2"));
    }
    Ok(())
}

/// Clausen part of the ln(tan t + tan φ) primitive:
/// −½Cl₂(2θ + 2φ) + ½Cl₂(2φ) − ½Cl₂(π − 2θ). Also valid for negative φ.
fn primitive_clausen(theta: &Real, phi: &Real, w: &PrecisionContext) -> Real {
    let t2 = w.real(theta) * 2u32;
    let p2 = w.real(phi) * 2u32;
    let a = cl(&Float::with_val(w.bits(), &t2 + &p2), w);
    let b = cl(&p2, w);
    let c = cl(&(w.pi() - t2), w);
    (b - a - c) / 2u32
}

/// ∫₀^θ ln(tan t + tan φ) dt = −θ ln cos φ − ½Cl₂(2θ+2φ) + ½Cl₂(2φ) − ½Cl₂(π−2θ).
pub fn logtan_primitive(theta: &Real, phi: &Real, ctx: &PrecisionContext) -> Result<Real> {
    if *theta < 0 || *theta >= half_pi(ctx) {
        return Err(Error::domain("logtan_primitive", "need 0 ≤ θ < π/2"));
    }
    check_phi("logtan_primitive", phi, ctx)?;
    if theta.is_zero() {
        return Ok(ctx.zero());
    }
    let w = ctx.widened(GUARD);
    let lc = -(w.real(theta) * w.real(phi).cos().ln());
    Ok(ctx.real(lc + primitive_clausen(theta, phi, &w)))
}

/// Clausen part of ∫ₓ^y ln(tan φ − tan t) dt:
/// ½[Cl₂(2(φ−y)) − Cl₂(2(φ−x))] − ½[Cl₂(π−2y) − Cl₂(π−2x)].
fn minus_clausen(x: &Real, y: &Real, phi: &Real, w: &PrecisionContext) -> Real {
    let p = w.real(phi);
    let a = cl(&((p.clone() - y) * 2u32), w);
    let b = cl(&((p - x) * 2u32), w);
    let c = cl(&(w.pi() - w.real(y) * 2u32), w);
    let d = cl(&(w.pi() - w.real(x) * 2u32), w);
    (a - b - c + d) / 2u32
}

/// ∫ₓ^y ln(tan φ − tan t) dt for 0 ≤ x < y ≤ φ < π/2.
pub fn logtan_minus_closed(x: &Real, y: &Real, phi: &Real, ctx: &PrecisionContext) -> Result<Real> {
    check_phi("logtan_minus_closed", phi, ctx)?;
    if !(*x >= 0 && x < y && y <= phi) {
        return Err(Error::domain("logtan_minus_closed", "need 0 ≤ x < y ≤ φ"));
    }
    let w = ctx.widened(GUARD);
    let len = w.real(y) - x;
    let lc = -(len * w.real(phi).cos().ln());
    Ok(ctx.real(lc + minus_clausen(x, y, phi, &w)))
}

fn check_panel(func: &'static str, x: &Real, y: &Real, a: &Real, ctx: &PrecisionContext) -> Result<()> {
    if !(*x >= 0 && x < y && *y <= half_pi(ctx)) {
        return Err(Error::domain(func, "need 0 ≤ x < y ≤ π/2"));
    }
    if *a <= 0 {
        return Err(Error::domain(func, "need a > 0"));
    }
    Ok(())
}

/// ∫ₓ^y ln|(tan t + a)/(tan t − a)| dt in closed form.
///
/// A panel straddling φ = atan a uses the four-Clausen form
/// ½[Cl₂(2x+2φ) − Cl₂(2x−2φ) + Cl₂(2y−2φ) − Cl₂(2y+2φ)]. A one-sided panel is
/// assembled from primitive differences, where the (y − x) ln cos φ terms
/// cancel and are never formed.
pub fn logtan_panel_closed(x: &Real, y: &Real, a: &Real, ctx: &PrecisionContext) -> Result<Real> {
    check_panel("logtan_panel_closed", x, y, a, ctx)?;
    let w = ctx.widened(GUARD);
    let phi = w.real(a).atan();
    let v = if *x < phi && *y > phi {
        let (x2, y2, p2) = (w.real(x) * 2u32, w.real(y) * 2u32, phi * 2u32);
        let s = cl(&Float::with_val(w.bits(), &x2 + &p2), &w) - cl(&Float::with_val(w.bits(), &x2 - &p2), &w)
            + cl(&Float::with_val(w.bits(), &y2 - &p2), &w)
            - cl(&Float::with_val(w.bits(), &y2 + &p2), &w);
        s / 2u32
    } else if *y <= phi {
        let plus = primitive_clausen(y, &phi, &w) - primitive_clausen(x, &phi, &w);
        plus - minus_clausen(x, y, &phi, &w)
    } else {
        // tan t > a on the panel: the ln(tan t − a) primitive is the φ → −φ image
        let neg = -phi.clone();
        let plus = primitive_clausen(y, &phi, &w) - primitive_clausen(x, &phi, &w);
        let minus = primitive_clausen(y, &neg, &w) - primitive_clausen(x, &neg, &w);
        plus - minus
    };
    Ok(ctx.real(v))
}

/// ln|sin(t+φ)| − ln|sin(d)| on one piece, with d = t − φ taken from the
/// piece end at φ when there is one.
fn ratio_piece(lo: &Real, hi: &Real, phi: &Real, ctx: &PrecisionContext) -> Result<QuadratureResult> {
    let left_at_phi = lo == phi;
    let right_at_phi = hi == phi;
    tanh_sinh(
        |t, from_lo, to_hi| {
            let bits = t.prec();
            let d = if left_at_phi {
                Float::with_val(bits, from_lo)
            } else if right_at_phi {
                -Float::with_val(bits, to_hi)
            } else {
                Float::with_val(bits, t - phi)
            };
            let s = Float::with_val(bits, t + phi);
            Ok(s.sin().abs().ln() - d.sin().abs().ln())
        },
        lo,
        hi,
        ctx,
    )
}

fn combine(parts: Vec<QuadratureResult>, splits: Vec<Real>) -> QuadratureResult {
    let mut it = parts.into_iter();
    let mut acc = it.next().expect("at least one piece");
    for p in it {
        acc.value += &p.value;
        acc.error_estimate += &p.error_estimate;
        acc.levels_used = acc.levels_used.max(p.levels_used);
    }
    acc.splits = splits;
    acc
}

/// ∫ₓ^y ln|(tan t + a)/(tan t − a)| dt by tanh-sinh, split at φ = atan a.
pub fn logtan_panel_numeric(x: &Real, y: &Real, a: &Real, ctx: &PrecisionContext) -> Result<QuadratureResult> {
    check_panel("logtan_panel_numeric", x, y, a, ctx)?;
    let phi = ctx.real(a).atan();
    if *x < phi && *y > phi {
        let left = ratio_piece(x, &phi, &phi, ctx)?;
        let right = ratio_piece(&phi, y, &phi, ctx)?;
        Ok(combine(vec![left, right], vec![phi]))
    } else {
        ratio_piece(x, y, &phi, ctx)
    }
}

/// One panel [n·δ, (n+1)·δ] of the log-tangent integrand, δ a rational multiple of π.
#[derive(Debug, Clone, PartialEq)]
pub struct PanelSpec {
    pub n: u32,
    /// δ/π
    pub increment: Rational,
    pub a: Real,
    pub phi: Real,
}

impl PanelSpec {
    /// δ = π/24, a = √7.
    pub fn new(n: u32, ctx: &PrecisionContext) -> Result<Self> {
        Self::with(n, Rational::from((1, 24)), ctx.sqrt(7), ctx)
    }

    pub fn with(n: u32, increment: Rational, a: Real, ctx: &PrecisionContext) -> Result<Self> {
        if increment <= 0 {
            return Err(Error::domain("PanelSpec", "increment must be positive"));
        }
        if Rational::from(&increment * (n + 1)) > Rational::from((1, 2)) {
            return Err(Error::domain("PanelSpec", "panel must lie inside [0, π/2]"));
        }
        if a <= 0 {
            return Err(Error::domain("PanelSpec", "need a > 0"));
        }
        let a = ctx.real(&a);
        let phi = a.clone().atan();
        Ok(Self { n, increment, a, phi })
    }

    pub fn bounds(&self, ctx: &PrecisionContext) -> (Real, Real) {
        let step = ctx.pi() * ctx.real(&self.increment);
        (step.clone() * self.n, step * (self.n + 1))
    }

    pub fn contains_phi(&self, ctx: &PrecisionContext) -> bool {
        let (x, y) = self.bounds(ctx);
        x < self.phi && self.phi < y
    }

    pub fn numeric(&self, ctx: &PrecisionContext) -> Result<QuadratureResult> {
        let (x, y) = self.bounds(ctx);
        logtan_panel_numeric(&x, &y, &self.a, ctx)
    }

    pub fn closed(&self, ctx: &PrecisionContext) -> Result<Real> {
        let w = ctx.widened(GUARD);
        let (x, y) = self.bounds(&w);
        let v = logtan_panel_closed(&x, &y, &w.real(&self.a), &w)?;
        Ok(ctx.real(v))
    }
}

fn check_a(func: &'static str, a: &Real, ctx: &PrecisionContext) -> Result<()> {
    if *a <= ctx.sqrt(3) {
        return Err(Error::domain(func, "need a > √3 so that π/3 < atan a < π/2"));
    }
    Ok(())
}

/// I(a) = ∫_{π/3}^{π/2} ln|(tan t + a)/(tan t − a)| dt by quadrature, split at atan a.
#[allow(non_snake_case)]
pub fn integral_I_numeric(a: &Real, ctx: &PrecisionContext) -> Result<QuadratureResult> {
    check_a("integral_I_numeric", a, ctx)?;
    logtan_panel_numeric(&(ctx.pi() / 3u32), &half_pi(ctx), a, ctx)
}

/// I(a) = (1/6)[Cl₂(6φ) − 3Cl₂(4φ) + 3Cl₂(2φ)], φ = atan a.
#[allow(non_snake_case)]
pub fn closed_I(a: &Real, ctx: &PrecisionContext) -> Result<Real> {
    check_a("closed_I", a, ctx)?;
    let w = ctx.widened(GUARD);
    let phi = w.real(a).atan();
    let v = cl(&(phi.clone() * 6u32), &w) - cl(&(phi.clone() * 4u32), &w) * 3u32 + cl(&(phi * 2u32), &w) * 3u32;
    Ok(ctx.real(v / 6u32))
}

/// I(a) = ½[Cl₂(2φ + 2π/3) + Cl₂(2φ − 2π/3)] − Cl₂(π + 2φ), before the
/// duplication and triplication reductions.
#[allow(non_snake_case)]
pub fn closed_I_unreduced(a: &Real, ctx: &PrecisionContext) -> Result<Real> {
    check_a("closed_I_unreduced", a, ctx)?;
    let w = ctx.widened(GUARD);
    let p2 = w.real(a).atan() * 2u32;
    let t = w.pi() * 2u32 / 3u32;
    let v = (cl(&Float::with_val(w.bits(), &p2 + &t), &w) + cl(&Float::with_val(w.bits(), &p2 - &t), &w)) / 2u32
        - cl(&(w.pi() + &p2), &w);
    Ok(ctx.real(v))
}

/// The three integrals I(a) splits into:
/// I = ∫_{π/3}^{π/2} ln(a + tan t) − ∫_{π/3}^φ ln(a − tan t) − ∫_φ^{π/2} ln(tan t − a).
#[derive(Debug, Clone, PartialEq)]
pub struct SplitIntegrals {
    pub plus_tan: Real,
    pub minus_tan_below: Real,
    pub tan_minus_above: Real,
}

impl SplitIntegrals {
    pub fn resum(&self) -> Real {
        self.plus_tan.clone() - &self.minus_tan_below - &self.tan_minus_above
    }
}

/// Closed forms of the three split integrals.
pub fn split_integrals_closed(a: &Real, ctx: &PrecisionContext) -> Result<SplitIntegrals> {
    check_a("split_integrals_closed", a, ctx)?;
    let w = ctx.widened(GUARD);
    let pi = w.pi();
    let phi = w.real(a).atan();
    let p2 = phi.clone() * 2u32;
    let lcos = phi.clone().cos().ln();
    let cl_third = cl(&(pi.clone() / 3u32), &w);
    // −(π/6) ln cos φ + ½[Cl₂(2π/3 + 2φ) − Cl₂(π + 2φ)] + ½Cl₂(π/3)
    let plus_tan = -(pi.clone() / 6u32 * &lcos)
        + (cl(&(pi.clone() * 2u32 / 3u32 + &p2), &w) - cl(&(pi.clone() + &p2), &w)) / 2u32
        + cl_third.clone() / 2u32;
    // −(φ − π/3) ln cos φ − ½Cl₂(2(φ − π/3)) + ½[Cl₂(π/3) − Cl₂(π − 2φ)]
    let d = phi.clone() - pi.clone() / 3u32;
    let minus_tan_below = -(d.clone() * &lcos) - cl(&(d * 2u32), &w) / 2u32
        + (cl_third - cl(&(pi.clone() - &p2), &w)) / 2u32;
    // −(π/2 − φ) ln cos φ
    let tan_minus_above = -((pi / 2u32 - phi) * lcos);
    Ok(SplitIntegrals {
        plus_tan: ctx.real(plus_tan),
        minus_tan_below: ctx.real(minus_tan_below),
        tan_minus_above: ctx.real(tan_minus_above),
    })
}

/// The three split integrals by quadrature, written through
/// ln|sin(t ± φ)| − ln cos t − ln cos φ.
pub fn split_integrals_numeric(a: &Real, ctx: &PrecisionContext) -> Result<SplitIntegrals> {
    check_a("split_integrals_numeric", a, ctx)?;
    let phi = ctx.real(a).atan();
    let third = ctx.pi() / 3u32;
    let hp = half_pi(ctx);
    let lcos_phi = phi.clone().cos().ln();
    let hp_q = hp.clone();
    // cos t = sin(π/2 − t); near π/2 the distance comes from the upper end
    let cos_t = move |t: &Real, to_hi: &Real, upper_is_half_pi: bool| -> Real {
        let bits = t.prec();
        if upper_is_half_pi {
            Float::with_val(bits, to_hi).sin()
        } else {
            Float::with_val(bits, &hp_q - t).sin()
        }
    };
    let plus = tanh_sinh(
        |t, _, to_hi| {
            let s = Float::with_val(t.prec(), t + &phi).sin();
            Ok(s.ln() - cos_t(t, to_hi, true).ln() - &lcos_phi)
        },
        &third,
        &hp,
        ctx,
    )?;
    let below = tanh_sinh(
        |t, _, to_hi| {
            let s = Float::with_val(t.prec(), to_hi).sin();
            Ok(s.ln() - cos_t(t, to_hi, false).ln() - &lcos_phi)
        },
        &third,
        &phi,
        ctx,
    )?;
    let above = tanh_sinh(
        |t, from_lo, to_hi| {
            let s = Float::with_val(t.prec(), from_lo).sin();
            Ok(s.ln() - cos_t(t, to_hi, true).ln() - &lcos_phi)
        },
        &phi,
        &hp,
        ctx,
    )?;
    Ok(SplitIntegrals { plus_tan: plus.value, minus_tan_below: below.value, tan_minus_above: above.value })
}

/// The headline constant (24/(7√7))·I(√7) by quadrature.
pub fn i7_numeric(ctx: &PrecisionContext) -> Result<QuadratureResult> {
    let w = ctx.widened(GUARD);
    let mut r = integral_I_numeric(&w.sqrt(7), &w)?;
    let k = w.real(24u32) / (w.sqrt(7) * 7u32);
    r.value = ctx.real(r.value * &k);
    r.error_estimate = ctx.real(r.error_estimate * &k);
    Ok(r)
}

/// (4/(7√7))[3Cl₂(θ₇) − 3Cl₂(2θ₇) + Cl₂(3θ₇)], θ₇ = 2 atan √7.
pub fn i7_closed(ctx: &PrecisionContext) -> Real {
    let w = ctx.widened(GUARD);
    let t = Angle::theta(7).to_real(&w);
    let v = cl(&t, &w) * 3u32 - cl(&(t.clone() * 2u32), &w) * 3u32 + cl(&(t * 3u32), &w);
    ctx.real(v * 4u32 / (w.sqrt(7) * 7u32))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CombinationId {
    /// −2(I₂+I₃+I₄+I₅) + I₈ + I₉ − (I₁₀+I₁₁)
    C1,
    /// I₂ + 3(I₃+I₄+I₅) + 2(I₆+I₇) − 3I₈ − I₉
    C2,
}

impl CombinationId {
    /// Coefficients of panels 0..=11.
    pub fn coefficients(self) -> [i32; 12] {
        match self {
            CombinationId::C1 => [0, 0, -2, -2, -2, -2, 0, 0, 1, 1, -1, -1],
            CombinationId::C2 => [0, 0, 1, 3, 3, 3, 2, 2, -3, -1, 0, 0],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CombinationRoute {
    PanelQuadrature,
    ClausenForm,
}

/// Panel groupings with their own Clausen closed forms (φ = atan √7).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PanelGroup {
    /// 2(I₂+I₃+I₄+I₅)
    TwoToFiveDoubled,
    /// 2I₈
    EightDoubled,
    /// 2I₉
    NineDoubled,
    /// I₁₀+I₁₁
    TenEleven,
    /// 2I₂
    TwoDoubled,
    /// −2(I₆+I₇)
    SixSevenDoubledNegated,
    /// 2(I₃+I₄+I₅)
    ThreeToFiveDoubled,
}

impl PanelGroup {
    pub const ALL: [PanelGroup; 7] = [
        PanelGroup::TwoToFiveDoubled,
        PanelGroup::EightDoubled,
        PanelGroup::NineDoubled,
        PanelGroup::TenEleven,
        PanelGroup::TwoDoubled,
        PanelGroup::SixSevenDoubledNegated,
        PanelGroup::ThreeToFiveDoubled,
    ];

    /// Panel coefficients of the group.
    pub fn coefficients(self) -> [i32; 12] {
        let mut c = [0; 12];
        match self {
            PanelGroup::TwoToFiveDoubled => c[2..=5].fill(2),
            PanelGroup::EightDoubled => c[8] = 2,
            PanelGroup::NineDoubled => c[9] = 2,
            PanelGroup::TenEleven => c[10..=11].fill(1),
            PanelGroup::TwoDoubled => c[2] = 2,
            PanelGroup::SixSevenDoubledNegated => c[6..=7].fill(-2),
            PanelGroup::ThreeToFiveDoubled => c[3..=5].fill(2),
        }
        c
    }
}

/// Σ ± Cl₂(kπ/12 ± 2φ) with φ = atan √7; `terms` lists (sign, k, sign of 2φ).
fn cl_sum(terms: &[(i32, i64, i32)], w: &PrecisionContext) -> Real {
    let p2 = w.sqrt(7).atan() * 2u32;
    let mut acc = w.zero();
    for &(sign, k, s) in terms {
        let base = w.pi() * k / 12u32;
        let arg = if s > 0 { base + &p2 } else { base - &p2 };
        let v = cl(&arg, w);
        if sign > 0 {
            acc += v;
        } else {
            acc -= v;
        }
    }
    acc
}

fn group_clausen_at(g: PanelGroup, w: &PrecisionContext) -> Real {
    use PanelGroup::*;
    // angles in units of π/12
    match g {
        TwoToFiveDoubled => cl_sum(&[(1, 2, 1), (-1, 2, -1), (1, 6, -1), (-1, 6, 1)], w),
        // Cl₂(2φ − c) is stored as Cl₂(−c + 2φ)
        EightDoubled => cl_sum(&[(1, 8, 1), (-1, 9, 1), (1, -8, 1), (-1, -9, 1)], w),
        NineDoubled => cl_sum(&[(1, 9, 1), (-1, 9, -1), (1, 10, -1), (-1, 10, 1)], w),
        TenEleven => {
            -cl_sum(&[(1, 12, 1)], w) + cl_sum(&[(1, 10, 1), (-1, 10, -1)], w) / 2u32
        }
        TwoDoubled => cl_sum(&[(1, 2, 1), (-1, 2, -1), (1, 3, -1), (-1, 3, 1)], w),
        SixSevenDoubledNegated => cl_sum(&[(1, 8, 1), (-1, 8, -1), (1, 6, -1), (-1, 6, 1)], w),
        ThreeToFiveDoubled => cl_sum(&[(1, 3, 1), (-1, 3, -1), (1, 6, -1), (-1, 6, 1)], w),
    }
}

/// Closed Clausen form of a panel group.
pub fn group_clausen(g: PanelGroup, ctx: &PrecisionContext) -> Real {
    let w = ctx.widened(GUARD);
    ctx.real(group_clausen_at(g, &w))
}

/// Panels 0..=11 (δ = π/24, a = √7) by quadrature, evaluated concurrently.
pub fn panels_numeric(ctx: &PrecisionContext) -> Result<Vec<QuadratureResult>> {
    (0..12u32).into_par_iter().map(|n| PanelSpec::new(n, ctx)?.numeric(ctx)).collect()
}

fn weighted_panel_sum(coef: &[i32; 12], panels: &[QuadratureResult], bits: u32) -> Real {
    let mut acc = Float::new(bits);
    for (c, p) in coef.iter().zip(panels) {
        if *c != 0 {
            acc += Float::with_val(bits, &p.value * *c);
        }
    }
    acc
}

/// C₁ or C₂. Panel sums are taken in increasing n; the Clausen route
/// assembles the group forms, never the printed final combinations.
pub fn combo(id: CombinationId, route: CombinationRoute, ctx: &PrecisionContext) -> Result<Real> {
    match route {
        CombinationRoute::PanelQuadrature => {
            let panels = panels_numeric(ctx)?;
            Ok(ctx.real(weighted_panel_sum(&id.coefficients(), &panels, ctx.bits() + 16)))
        }
        CombinationRoute::ClausenForm => {
            use PanelGroup::*;
            let w = ctx.widened(GUARD);
            let g = |x| group_clausen_at(x, &w);
            let v = match id {
                CombinationId::C1 => {
                    -g(TwoToFiveDoubled) + g(EightDoubled) / 2u32 + g(NineDoubled) / 2u32 - g(TenEleven)
                }
                CombinationId::C2 => {
                    (g(TwoDoubled) + g(ThreeToFiveDoubled) * 3u32
                        - g(SixSevenDoubledNegated) * 2u32
                        - g(EightDoubled) * 3u32
                        - g(NineDoubled))
                        / 2u32
                }
            };
            Ok(ctx.real(v))
        }
    }
}

/// C₁ as printed in its final assembled form; the second displayed line
/// carries no leading sign, so it is added with `second_line_sign`.
pub fn printed_c1(second_line_sign: i32, ctx: &PrecisionContext) -> Real {
    let w = ctx.widened(GUARD);
    let first = cl_sum(&[(-1, 2, 1), (1, 2, -1), (-1, 6, -1), (1, 6, 1)], &w);
    let bracket = cl_sum(&[(1, 8, 1), (1, -8, 1)], &w) / 2u32;
    let rest = cl_sum(&[(1, 10, -1), (-1, 10, 1), (1, 12, 1)], &w);
    let v = if second_line_sign >= 0 { first + bracket + rest } else { first - bracket + rest };
    ctx.real(v)
}

/// C₂ from its printed final form (which gives 2C₂).
pub fn printed_c2(ctx: &PrecisionContext) -> Real {
    let w = ctx.widened(GUARD);
    let a = cl_sum(&[(1, 2, 1), (-1, 2, -1), (1, 6, -1), (-1, 6, 1)], &w);
    let b = cl_sum(&[(1, 8, 1), (1, -8, 1)], &w) * 5u32;
    let c = cl_sum(&[(-1, 10, -1), (1, 10, 1)], &w);
    let d = cl_sum(&[(1, 3, 1), (-1, 3, -1), (1, 9, 1), (1, -9, 1)], &w) * 2u32;
    ctx.real((a - b + c + d) / 2u32)
}

/// One comparison of a printed final form against the assembled Clausen route.
#[derive(Debug, Clone, PartialEq)]
pub struct PrintedFormCheck {
    pub label: &'static str,
    pub assembled: Real,
    pub printed: Real,
    pub residual: Real,
    pub matches: bool,
}

/// Compares both sign readings of the printed C₁ and the printed C₂.
pub fn check_printed_forms(ctx: &PrecisionContext) -> Result<Vec<PrintedFormCheck>> {
    let c1 = combo(CombinationId::C1, CombinationRoute::ClausenForm, ctx)?;
    let c2 = combo(CombinationId::C2, CombinationRoute::ClausenForm, ctx)?;
    let make = |label, assembled: &Real, printed: Real| {
        let residual = (printed.clone() - assembled).abs();
        let matches = residual < *ctx.verify_tol();
        PrintedFormCheck { label, assembled: assembled.clone(), printed, residual, matches }
    };
    Ok(vec![
        make("C1 printed, second line added", &c1, printed_c1(1, ctx)),
        make("C1 printed, second line subtracted", &c1, printed_c1(-1, ctx)),
        make("C2 printed", &c2, printed_c2(ctx)),
    ])
}

/// The three quadrature charts of 2 sin(π/7)∫_d^∞ ln y/(y² − 2y cos(π/7) + 1) dy.
#[derive(Debug, Clone)]
pub struct Integral45Charts {
    /// y = 1/u over u ∈ (0, 1/d].
    pub reciprocal: QuadratureResult,
    /// y = d + e^{(π/2) sinh u}.
    pub exp_sinh: QuadratureResult,
    /// y = d + (1 − u)/u.
    pub rational: QuadratureResult,
}

fn integral_45_setup(w: &PrecisionContext) -> (Real, Real, Real) {
    let p7 = w.pi() / 7u32;
    let (s, c) = p7.sin_cos(w.zero());
    let d = (c.clone() * 2u32 - 1u32).recip();
    (s * 2u32, c, d)
}

pub fn integral_45_charts(ctx: &PrecisionContext) -> Result<Integral45Charts> {
    let w = ctx.widened(GUARD);
    let (k, c, d) = integral_45_setup(&w);
    let scale = |mut r: QuadratureResult| {
        r.value = ctx.real(&r.value * &k);
        r.error_estimate = ctx.real(&r.error_estimate * &k);
        r
    };
    let half_line = |y: &Real, _: &Real| -> Result<Real> {
        let bits = y.prec();
        let den = Float::with_val(bits, y.square_ref()) - Float::with_val(bits, y * &c) * 2u32 + 1u32;
        Ok(Float::with_val(bits, y.ln_ref()) / den)
    };
    let reciprocal = tanh_sinh(
        |u, _, _| {
            let bits = u.prec();
            let den = Float::with_val(bits, u.square_ref()) - Float::with_val(bits, u * &c) * 2u32 + 1u32;
            Ok(-Float::with_val(bits, u.ln_ref()) / den)
        },
        &w.zero(),
        &d.clone().recip(),
        &w,
    )?;
    let es = exp_sinh(half_line, &d, &w)?;
    let rat = semi_infinite_rational(half_line, &d, &w)?;
    Ok(Integral45Charts { reciprocal: scale(reciprocal), exp_sinh: scale(es), rational: scale(rat) })
}

/// 2 sin(π/7)∫_d^∞ ln y/(y² − 2y cos(π/7) + 1) dy, d = 1/(2cos(π/7) − 1).
pub fn integral_45(ctx: &PrecisionContext) -> Result<Real> {
    Ok(integral_45_charts(ctx)?.reciprocal.value)
}

/// Cl₂(2π/7) + Cl₂(4π/7) − Cl₂(6π/7).
pub fn seventh_clausen_sum(ctx: &PrecisionContext) -> Real {
    let c = |p| cl2(&Angle::rational_pi(p, 7).expect("q > 0"), ctx);
    c(2) + c(4) - c(6)
}

fn check_a6(x: &Real, ctx: &PrecisionContext) -> Result<()> {
    if *x < 0 || *x > ctx.pi() {
        return Err(Error::domain("integral_A6", "need 0 ≤ x ≤ π"));
    }
    Ok(())
}

/// ∫₀ˣ ln(3 + 4cos θ + cos 2θ) dθ = −x ln 2 + 4Cl₂(π − x), 0 ≤ x ≤ π.
#[allow(non_snake_case)]
pub fn integral_A6(x: &Real, ctx: &PrecisionContext) -> Result<Real> {
    check_a6(x, ctx)?;
    if x.is_zero() {
        return Ok(ctx.zero());
    }
    let w = ctx.widened(GUARD);
    let v = -(w.real(x) * w.ln2()) + cl(&(w.pi() - x), &w) * 4u32;
    Ok(ctx.real(v))
}

/// The same integral by quadrature, through 3 + 4cos θ + cos 2θ = 8cos⁴(θ/2).
#[allow(non_snake_case)]
pub fn integral_A6_numeric(x: &Real, ctx: &PrecisionContext) -> Result<QuadratureResult> {
    check_a6(x, ctx)?;
    if x.is_zero() {
        return Ok(QuadratureResult { value: ctx.zero(), error_estimate: ctx.zero(), levels_used: 1, splits: vec![] });
    }
    let w = ctx.widened(GUARD);
    let pi = w.pi();
    let gap = w.real(&pi - x);
    let ln8 = w.ln2() * 3u32;
    tanh_sinh(
        |t, _, to_hi| {
            let bits = t.prec();
            // cos(θ/2) = sin((π − θ)/2) with π − θ = (π − x) + (x − θ)
            let d = Float::with_val(bits, &gap + to_hi);
            let c = (d / 2u32).sin();
            Ok(c.ln() * 4u32 + &ln8)
        },
        &ctx.zero(),
        x,
        ctx,
    )
}

/// Cl₂(θ) = −∫₀^θ ln|2 sin(t/2)| dt by quadrature, 0 ≤ θ ≤ 2π.
pub fn cl2_via_integral(theta: &Real, ctx: &PrecisionContext) -> Result<QuadratureResult> {
    let w = ctx.widened(GUARD);
    let two_pi = w.pi() * 2u32;
    if *theta < 0 || *theta > two_pi {
        return Err(Error::domain("cl2_via_integral", "need 0 ≤ θ ≤ 2π"));
    }
    if theta.is_zero() {
        return Ok(QuadratureResult { value: ctx.zero(), error_estimate: ctx.zero(), levels_used: 1, splits: vec![] });
    }
    let gap = w.real(&two_pi - theta);
    let pi = w.pi();
    tanh_sinh(
        |t, from_lo, to_hi| {
            let bits = t.prec();
            // 2 sin(t/2) with t near 0 or 2π taken from the distance to that end
            let half = if *t <= pi {
                Float::with_val(bits, from_lo) / 2u32
            } else {
                Float::with_val(bits, &gap + to_hi) / 2u32
            };
            Ok(-(half.sin() * 2u32).ln())
        },
        &ctx.zero(),
        theta,
        ctx,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(d: u32) -> PrecisionContext {
        PrecisionContext::new(d).unwrap()
    }

    fn close(a: &Real, b: &Real, tol: &Real) -> bool {
        (a.clone() - b).abs() < *tol
    }

    #[test]
    fn primitive_zero_and_quadrature() {
        let x = ctx(40);
        let phi = x.real(1);
        assert!(logtan_primitive(&x.zero(), &phi, &x).unwrap().is_zero());
        let th = x.pi() / 6u32;
        let q = tanh_sinh(
            |t, _, _| {
                let s = Float::with_val(t.prec(), t.tan_ref()) + Float::with_val(t.prec(), phi.tan_ref());
                Ok(s.ln())
            },
            &x.zero(),
            &th,
            &x,
        )
        .unwrap();
        let tol = x.verify_tol().clone() * 10u32;
        assert!(close(&logtan_primitive(&th, &phi, &x).unwrap(), &q.value, &tol));
        assert!(logtan_primitive(&x.real(1.6), &phi, &x).is_err());
    }

    #[test]
    fn panels_closed_vs_numeric() {
        let x = ctx(40);
        let tol = x.verify_tol().clone() * 10u32;
        for n in 0..12 {
            let p = PanelSpec::new(n, &x).unwrap();
            assert_eq!(p.contains_phi(&x), n == 9);
            let q = p.numeric(&x).unwrap();
            assert!(close(&p.closed(&x).unwrap(), &q.value, &tol), "panel {n}");
        }
        assert!(PanelSpec::new(12, &x).is_err());
    }

    #[test]
    fn closed_i_forms() {
        let x = ctx(40);
        let tol = x.verify_tol().clone() * 10u32;
        for a in [x.real(2), x.sqrt(7), x.sqrt(3) + x.pow10(-3)] {
            let c = closed_I(&a, &x).unwrap();
            assert!(close(&c, &closed_I_unreduced(&a, &x).unwrap(), x.verify_tol()));
            assert!(close(&c, &integral_I_numeric(&a, &x).unwrap().value, &tol));
        }
        assert!(closed_I(&x.real(1), &x).is_err());
    }

    #[test]
    fn i7_value() {
        let x = ctx(50);
        let golden = crate::numerics::parse_decimal("1.15192547054449104710169239732054996479782140468656", &x).unwrap();
        assert!(close(&i7_closed(&x), &golden, x.verify_tol()));
        assert!(close(&i7_numeric(&x).unwrap().value, &golden, x.verify_tol()));
    }

    #[test]
    fn split_parts() {
        let x = ctx(40);
        let a = x.sqrt(7);
        let c = split_integrals_closed(&a, &x).unwrap();
        let n = split_integrals_numeric(&a, &x).unwrap();
        let tol = x.verify_tol().clone() * 10u32;
        assert!(close(&c.plus_tan, &n.plus_tan, &tol));
        assert!(close(&c.minus_tan_below, &n.minus_tan_below, &tol));
        assert!(close(&c.tan_minus_above, &n.tan_minus_above, &tol));
        assert!(close(&c.resum(), &closed_I(&a, &x).unwrap(), &tol));
    }

    #[test]
    fn combinations_vanish_and_routes_agree() {
        let x = ctx(50);
        let bound = x.pow10(-30);
        for id in [CombinationId::C1, CombinationId::C2] {
            let q = combo(id, CombinationRoute::PanelQuadrature, &x).unwrap();
            let c = combo(id, CombinationRoute::ClausenForm, &x).unwrap();
            assert!(q.clone().abs() < bound, "{id:?}");
            assert!(close(&q, &c, &bound));
        }
    }

    #[test]
    fn groups_match_panels() {
        let x = ctx(40);
        let panels = panels_numeric(&x).unwrap();
        for g in PanelGroup::ALL {
            let s = weighted_panel_sum(&g.coefficients(), &panels, x.bits());
            assert!(close(&s, &group_clausen(g, &x), x.verify_tol()), "{g:?}");
        }
    }

    #[test]
    fn printed_forms() {
        let x = ctx(40);
        let checks = check_printed_forms(&x).unwrap();
        assert!(checks[0].matches);
        assert!(!checks[1].matches);
        assert!(checks[2].matches);
    }

    #[test]
    fn integral_45_charts_agree() {
        let x = ctx(40);
        let ch = integral_45_charts(&x).unwrap();
        let tol = x.verify_tol().clone() * 10u32;
        let target = seventh_clausen_sum(&x);
        assert!(close(&ch.reciprocal.value, &target, &tol));
        assert!(close(&ch.exp_sinh.value, &target, &tol));
        assert!(close(&ch.rational.value, &target, &tol));
        let i7 = i7_closed(&x) * x.sqrt(7) / 2u32;
        assert!(close(&target, &i7, x.verify_tol()));
    }

    #[test]
    fn a6_values() {
        let x = ctx(40);
        assert!(integral_A6(&x.zero(), &x).unwrap().is_zero());
        let catalan = x.real(rug::float::Constant::Catalan);
        let hp = x.pi() / 2u32;
        let expect = -(hp.clone() * x.ln2()) + catalan * 4u32;
        assert!(close(&integral_A6(&hp, &x).unwrap(), &expect, x.verify_tol()));
        let tol = x.verify_tol().clone() * 10u32;
        for v in [0.3, 2.5] {
            let t = x.real(v);
            assert!(close(&integral_A6(&t, &x).unwrap(), &integral_A6_numeric(&t, &x).unwrap().value, &tol));
        }
        let pi = x.pi();
        assert!(close(&integral_A6(&pi, &x).unwrap(), &integral_A6_numeric(&pi, &x).unwrap().value, &tol));
        assert!(integral_A6(&x.real(3.2), &x).is_err());
    }

    #[test]
    fn clausen_by_integral() {
        let x = ctx(40);
        for v in [1.0, 3.0, 6.0] {
            let t = x.real(v);
            let q = cl2_via_integral(&t, &x).unwrap();
            assert!(close(&q.value, &cl2_real(&t, &x), x.verify_tol()), "{v}");
        }
        let two_pi = x.pi() * 2u32;
        assert!(cl2_via_integral(&two_pi, &x).unwrap().value.abs() < *x.verify_tol());
    }
}

//! Standalone numeric facts: the Clausen fixed point and maximum, and the
//! Chebyshev factorizations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clausen::{cl2, cl2_derivative, cl2_real};
use crate::error::{Error, Result};
use crate::numerics::{Angle, PrecisionContext, Real};

use super::{IdentityResult, Status};

const SEED: u64 = 0x5eed_c1a0;

/// y with Cl₂(y) = y, by bisection on (0.9, 1.1) and Newton with
/// Cl₂′(y) = −ln(2 sin(y/2)).
pub fn fixed_point(ctx: &PrecisionContext) -> Result<Real> {
    let w = ctx.widened(5);
    let g = |y: &Real| cl2_real(y, &w) - y;
    let mut lo = w.ratio(9, 10);
    let mut hi = w.ratio(11, 10);
    if g(&lo) <= 0 || g(&hi) >= 0 {
        return Err(Error::NonConvergence { what: "fixed_point", detail: "no sign change on (0.9, 1.1)".into() });
    }
    for _ in 0..40 {
        let mid = (lo.clone() + &hi) / 2u32;
        if g(&mid) > 0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut y = (lo + hi) / 2u32;
    let eps = w.epsilon();
    for _ in 0..64 {
        let step = g(&y) / (cl2_derivative(&y, &w) - 1u32);
        y -= &step;
        if step.abs() <= eps.clone() * 16u32 {
            return Ok(ctx.real(y));
        }
    }
    Err(Error::NonConvergence { what: "fixed_point", detail: "Newton steps did not settle".into() })
}

/// The only maximum of Cl₂ on (0, π).
#[derive(Debug, Clone, PartialEq)]
pub struct ClausenMaximum {
    /// π/3
    pub location: Real,
    pub value: Real,
    /// Cl₂′ at the location: −ln(2 sin(π/6)) = 0.
    pub derivative: Real,
}

pub fn clausen_maximum(ctx: &PrecisionContext) -> ClausenMaximum {
    let location = ctx.pi() / 3u32;
    let value = cl2(&Angle::rational_pi(1, 3).expect("q > 0"), ctx);
    let derivative = cl2_derivative(&location, ctx);
    ClausenMaximum { location, value, derivative }
}

/// U_m(y) by U₀ = 1, U₁ = 2y, U_{k+1} = 2y U_k − U_{k−1}.
pub fn chebyshev_u(m: u32, y: &Real, ctx: &PrecisionContext) -> Real {
    let two_y = ctx.real(y) * 2u32;
    let mut prev = ctx.zero();
    let mut cur = ctx.one();
    for _ in 0..m {
        let next = two_y.clone() * &cur - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// sin(2π/7), sin(4π/7), sin(6π/7).
fn seventh_sines(ctx: &PrecisionContext) -> [Real; 3] {
    [2u32, 4, 6].map(|k| (ctx.pi() * k / 7u32).sin())
}

/// (p₁(x), p₂(x)) as products over their roots ±sin(2kπ/7).
pub fn root_products(x: &Real, ctx: &PrecisionContext) -> (Real, Real) {
    let [a, b, c] = seventh_sines(ctx);
    let x = ctx.real(x);
    let p1 = (x.clone() - &a) * (x.clone() - &b) * (x.clone() + &c);
    let p2 = (x.clone() - &c) * (x.clone() + &a) * (x + &b);
    (p1, p2)
}

/// The factorization 64x·p₁p₂ = T₇ at 20 random points, the expanded
/// coefficients of p₁ and p₂, and U_{n−1}(cos φ) sin φ = sin nφ for
/// n ≤ 10 (worst of 20 random φ per n).
pub fn chebyshev_checks(ctx: &PrecisionContext) -> Vec<IdentityResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let tol = ctx.verify_tol().clone();
    let mut out = Vec::new();

    for i in 0..20 {
        let x = ctx.real(rng.gen_range(-1.0f64..1.0));
        let (p1, p2) = root_products(&x, ctx);
        let lhs = p1 * p2 * 64u32 * &x;
        let rhs = (x.clone().acos() * 7u32).cos();
        out.push(IdentityResult::new(format!("chebyshev-t7-point-{i}"), "42", lhs, rhs, tol.clone(), Status::Proven));
    }

    // p₁ = x³ − s₂x² + s₁x + s₀ and p₂ = x³ + s₂x² + s₁x − s₀ with
    // s₂ = a + b − c, s₁ = ab − c(a + b), s₀ = abc
    let [a, b, c] = seventh_sines(ctx);
    let s2 = a.clone() + &b - &c;
    let s1 = a.clone() * &b - c.clone() * (a.clone() + &b);
    let s0 = a * b * c;
    let r7 = ctx.sqrt(7);
    let coefficient = |id: &str, lhs: Real, rhs: Real| IdentityResult::new(id, "42", lhs, rhs, tol.clone(), Status::Proven);
    out.push(coefficient("chebyshev-p1-square-coefficient", -s2.clone(), -(r7.clone() / 2u32)));
    out.push(coefficient("chebyshev-p1-linear-coefficient", s1.clone(), ctx.zero()));
    out.push(coefficient("chebyshev-p1-constant", s0.clone(), r7.clone() / 8u32));
    out.push(coefficient("chebyshev-p2-square-coefficient", s2, r7.clone() / 2u32));
    out.push(coefficient("chebyshev-p2-linear-coefficient", s1, ctx.zero()));
    out.push(coefficient("chebyshev-p2-constant", -s0, -(r7 / 8u32)));

    let phis: Vec<Real> = (0..20).map(|_| ctx.real(rng.gen_range(0.0f64..std::f64::consts::PI))).collect();
    for n in 1..=10u32 {
        let mut worst: Option<(Real, Real, Real)> = None;
        for phi in &phis {
            let lhs = chebyshev_u(n - 1, &phi.clone().cos(), ctx) * phi.clone().sin();
            let rhs = (phi.clone() * n).sin();
            let r = (lhs.clone() - &rhs).abs();
            if worst.as_ref().map_or(true, |w| r > w.2) {
                worst = Some((lhs, rhs, r));
            }
        }
        let (lhs, rhs, _) = worst.expect("20 points");
        out.push(IdentityResult::new(format!("chebyshev-u{}", n - 1), "B.7", lhs, rhs, tol.clone(), Status::Proven));
    }
    out
}

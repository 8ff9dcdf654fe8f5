//! Integer relations among constants, the exact triple-angle scanner, and
//! the residuals of the open conjectures.

mod angles;
mod pslq;

pub use angles::{
    check_recorded_triples, recorded_triples, scan_angle_triples, triple_partner, verify_angle_triple, AngleTriple,
    PrintedTriple, TripleCheck,
};
pub use pslq::{pslq, relation_residual, IntegerRelation};

use crate::clausen::cl2_real;
use crate::error::Result;
use crate::numerics::{Angle, PrecisionContext, Real};
use crate::verify::{run_identity, IdentityResult};

/// Tolerance for numerically supported but unproven identities: 10^(20 − digits).
pub fn conjectural_tol(ctx: &PrecisionContext) -> Real {
    ctx.pow10(20 - ctx.digits() as i32)
}

/// The six Clausen values whose integer relation encodes the L₋₇(2)
/// conjecture: Cl₂(θ₇), Cl₂(2θ₇), Cl₂(3θ₇), Cl₂(2π/7), Cl₂(4π/7), Cl₂(6π/7).
pub fn clausen_sextet(ctx: &PrecisionContext) -> Vec<Real> {
    let w = ctx.widened(5);
    let t = Angle::theta(7).to_real(&w);
    let mut v: Vec<Real> = (1..=3u32).map(|m| cl2_real(&(t.clone() * m), ctx)).collect();
    for p in [2, 4, 6] {
        v.push(crate::clausen::cl2(&Angle::rational_pi(p, 7).expect("q > 0"), ctx));
    }
    v
}

/// ½[3Cl₂(θ₇) − 3Cl₂(2θ₇) + Cl₂(3θ₇)].
pub fn theta7_clausen_triple(ctx: &PrecisionContext) -> Real {
    let v = clausen_sextet(ctx);
    (v[0].clone() * 3u32 - v[1].clone() * 3u32 + &v[2]) / 2u32
}

/// (Cl₂(3θ₇) − Cl₂(2θ₇), Cl₂(θ₇₅) + Cl₂(θ₇ − θ₇₅)).
pub fn angle_pair_sides(ctx: &PrecisionContext) -> (Real, Real) {
    let w = ctx.widened(5);
    let t7 = Angle::theta(7).to_real(&w);
    let t75 = Angle::surd_atan(7, 1, 5).expect("valid surd").to_real(&w);
    let lhs = cl2_real(&(t7.clone() * 3u32), ctx) - cl2_real(&(t7.clone() * 2u32), ctx);
    let rhs = cl2_real(&t75, ctx) + cl2_real(&(t7 - &t75), ctx);
    (lhs, rhs)
}

/// Residuals of the open conjectures plus the proven angle-pair identity.
pub fn conjecture_suite(ctx: &PrecisionContext) -> Result<Vec<IdentityResult>> {
    ["i7-equals-l7", "clausen-triples", "c1-vanishes", "c2-vanishes", "angle-pair-clausen"]
        .iter()
        .map(|id| run_identity(id, ctx))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Status;

    #[test]
    fn sextet_relation() {
        let ctx = PrecisionContext::new(50).unwrap();
        let r = pslq(&clausen_sextet(&ctx), &ctx, 1000).unwrap();
        assert!(r.found);
        assert_eq!(r.coeffs, vec![6, -6, 2, -7, -7, 7]);
    }

    #[test]
    fn suite_statuses() {
        let ctx = PrecisionContext::new(50).unwrap();
        let suite = conjecture_suite(&ctx).unwrap();
        assert_eq!(suite.len(), 5);
        for r in &suite {
            assert!(r.passed(), "{} residual {}", r.id, r.residual);
        }
        assert_eq!(suite[4].status, Status::Proven);
        assert!(suite[0].residual < ctx.pow10(-30));
    }
}

//! Exact decision of 3θ₁ − 2π = ±θ₂ for θ = 2·atan(c√k), c rational.
//!
//! With u = tan(θ₁/2) and r = u², tan((3θ₁ − 2π)/2) = u(3 − r)/(1 − 3r), and
//! 3·atan u − π lies in (−π/2, π/2) exactly when u > 1/√3. Everything here is
//! rational arithmetic over Q(√k).

use rayon::prelude::*;
use rug::{Integer, Rational};

use crate::error::{Error, Result};
use crate::numerics::Angle;

#[derive(Debug, Clone, PartialEq)]
pub struct AngleTriple {
    pub theta1: Angle,
    pub theta2: Angle,
    pub sign: i32,
    pub satisfied: bool,
}

fn surd_parts(a: &Angle, which: &'static str) -> Result<(Rational, u64)> {
    a.half_tangent()
        .ok_or_else(|| Error::domain("verify_angle_triple", format!("{which} is not of the form 2·atan(c√k)")))
}

/// Half-angle tangent coefficient of 3θ₁ − 2π, or None outside the quadrant
/// condition.
fn triple_coefficient(c: &Rational, k: u64) -> Option<Rational> {
    if *c <= 0 {
        return None;
    }
    let r = Rational::from(c.square_ref()) * Integer::from(k);
    // u > 1/√3
    if r <= Rational::from((1, 3)) {
        return None;
    }
    let num = Rational::from(3 - &r);
    let den = Rational::from(1 - Rational::from(&r * 3u32));
    Some(Rational::from(c * num) / den)
}

/// Decides 3θ₁ − 2π = sign·θ₂ exactly.
pub fn verify_angle_triple(theta1: &Angle, theta2: &Angle, sign: i32) -> Result<AngleTriple> {
    let (c1, k1) = surd_parts(theta1, "theta1")?;
    let (c2, k2) = surd_parts(theta2, "theta2")?;
    if k1 != k2 {
        return Err(Error::FieldMismatch { left: k1, right: k2 });
    }
    if sign != 1 && sign != -1 {
        return Err(Error::domain("verify_angle_triple", "sign must be ±1"));
    }
    let satisfied = match triple_coefficient(&c1, k1) {
        Some(w) => w == Rational::from(&c2 * sign),
        None => false,
    };
    Ok(AngleTriple { theta1: theta1.clone(), theta2: theta2.clone(), sign, satisfied })
}

/// The θ₂ ≥ 0 and sign with 3θ₁ − 2π = sign·θ₂, if θ₁ is admissible and
/// 3θ₁ ≠ 2π.
pub fn triple_partner(theta1: &Angle) -> Option<AngleTriple> {
    let (c, k) = theta1.half_tangent()?;
    let w = triple_coefficient(&c, k)?;
    if w == 0 {
        return None;
    }
    let sign = if w > 0 { 1 } else { -1 };
    let w = w.abs();
    let (num, den) = w.into_numer_denom();
    let p = num.to_i64()?;
    let q = den.to_u64()?;
    let theta2 = Angle::surd_atan(k, p, q).ok()?;
    Some(AngleTriple { theta1: theta1.clone(), theta2, sign, satisfied: true })
}

fn square_free(k: u64) -> bool {
    let mut d = 2u64;
    while d * d <= k {
        if k % (d * d) == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Every satisfied triple with θ₁ = 2·atan(√k/j) or 2·atan(√(k/j)),
/// k ≤ `k_max` square-free, j ≤ `j_max`. Ordered by (k, j), the √k/j form
/// first; duplicate θ₁ are dropped.
pub fn scan_angle_triples(k_max: u64, j_max: u64) -> Vec<AngleTriple> {
    let per_k: Vec<Vec<AngleTriple>> = (1..=k_max)
        .into_par_iter()
        .filter(|&k| square_free(k))
        .map(|k| {
            let mut out = Vec::new();
            for j in 1..=j_max {
                let forms = [Angle::surd_atan(k, 1, j), Angle::surd_atan_sqrt_ratio(k, j)];
                for a in forms.into_iter().flatten() {
                    if let Some(t) = triple_partner(&a) {
                        out.push(t);
                    }
                }
            }
            out
        })
        .collect();
    let mut seen: Vec<Angle> = Vec::new();
    let mut result = Vec::new();
    for t in per_k.into_iter().flatten() {
        if !seen.contains(&t.theta1) {
            seen.push(t.theta1.clone());
            result.push(t);
        }
    }
    result
}

/// A recorded triple with the sign as printed.
#[derive(Debug, Clone, PartialEq)]
pub struct PrintedTriple {
    pub label: &'static str,
    pub theta1: Angle,
    /// θ₂ ≥ 0
    pub theta2: Angle,
    pub printed_sign: i32,
}

/// The recorded 3θ₁ − 2π = ±θ₂ list, signs as printed.
pub fn recorded_triples() -> Vec<PrintedTriple> {
    let s = |k, p, q| Angle::surd_atan(k, p, q).expect("valid surd");
    let r = |n, d| Angle::surd_atan_sqrt_ratio(n, d).expect("valid ratio");
    vec![
        PrintedTriple { label: "theta7", theta1: Angle::theta(7), theta2: s(7, 1, 5), printed_sign: 1 },
        PrintedTriple { label: "theta2", theta1: Angle::theta(2), theta2: s(2, 1, 5), printed_sign: -1 },
        PrintedTriple { label: "theta5", theta1: Angle::theta(5), theta2: s(5, 1, 7), printed_sign: 1 },
        PrintedTriple { label: "theta11", theta1: Angle::theta(11), theta2: s(11, 1, 4), printed_sign: -1 },
        PrintedTriple { label: "theta13", theta1: Angle::theta(13), theta2: s(13, 5, 19), printed_sign: -1 },
        PrintedTriple { label: "theta91,3", theta1: s(91, 1, 3), theta2: s(91, 8, 99), printed_sign: -1 },
        PrintedTriple { label: "theta91,5", theta1: s(91, 1, 5), theta2: s(91, 2, 155), printed_sign: 1 },
        PrintedTriple { label: "theta91,7", theta1: s(91, 1, 7), theta2: s(91, 1, 28), printed_sign: -1 },
        PrintedTriple { label: "theta3/2", theta1: r(3, 2), theta2: Angle::surd_atan(6, 3, 14).unwrap(), printed_sign: -1 },
        PrintedTriple { label: "theta5/3", theta1: r(5, 3), theta2: Angle::surd_atan(15, 1, 9).unwrap(), printed_sign: -1 },
        PrintedTriple { label: "theta13/3", theta1: r(13, 3), theta2: Angle::surd_atan(39, 1, 27).unwrap(), printed_sign: 1 },
        PrintedTriple { label: "theta7/3", theta1: r(7, 3), theta2: Angle::surd_atan(21, 1, 27).unwrap(), printed_sign: -1 },
    ]
}

/// A recorded triple against exact arithmetic.
#[derive(Debug, Clone, PartialEq)]
pub struct TripleCheck {
    pub printed: PrintedTriple,
    pub exact_sign: Option<i32>,
    /// |3θ₁ − 2π| = θ₂ holds.
    pub magnitude_holds: bool,
    /// The printed sign is the exact one.
    pub printed_holds: bool,
}

impl TripleCheck {
    /// The magnitude is right but the printed sign is not.
    pub fn sign_discrepancy(&self) -> bool {
        self.magnitude_holds && !self.printed_holds
    }
}

pub fn check_recorded_triples() -> Vec<TripleCheck> {
    recorded_triples()
        .into_iter()
        .map(|p| {
            let exact = triple_partner(&p.theta1);
            let (magnitude_holds, exact_sign) = match &exact {
                Some(t) => (t.theta2 == p.theta2, Some(t.sign)),
                None => (false, None),
            };
            let printed_holds = verify_angle_triple(&p.theta1, &p.theta2, p.printed_sign)
                .map(|t| t.satisfied)
                .unwrap_or(false);
            TripleCheck { printed: p, exact_sign, magnitude_holds, printed_holds }
        })
        .collect()
}

use std::fmt;

use rug::{Integer, Rational};

use crate::error::{Error, Result};

use super::{PrecisionContext, Real};

/// An angle kept in the most exact form available.
#[derive(Debug, Clone, PartialEq)]
pub enum Angle {
    /// p·π/q with gcd(p, q) = 1 and q > 0.
    RationalPi { p: i64, q: u64 },
    /// Any real angle.
    Free(Real),
    /// 2·atan((p/q)·√k) with k square-free, q > 0 and gcd(p, q) = 1.
    SurdAtan { k: u64, p: i64, q: u64 },
}

impl Angle {
    pub fn rational_pi(p: i64, q: u64) -> Result<Self> {
        if q == 0 {
            return Err(Error::domain("Angle::rational_pi", "zero denominator"));
        }
        let g = gcd(p.unsigned_abs(), q).max(1);
        Ok(Angle::RationalPi { p: p / g as i64, q: q / g })
    }

    /// 2·atan((p/q)·√k); square factors of `k` are moved into the coefficient.
    pub fn surd_atan(k: u64, p: i64, q: u64) -> Result<Self> {
        if q == 0 || k == 0 {
            return Err(Error::domain("Angle::surd_atan", "k and q must be positive"));
        }
        let (square, free) = split_square(k);
        let p = p
            .checked_mul(square as i64)
            .ok_or_else(|| Error::domain("Angle::surd_atan", "coefficient overflow"))?;
        let g = gcd(p.unsigned_abs(), q).max(1);
        Ok(Angle::SurdAtan { k: free, p: p / g as i64, q: q / g })
    }

    /// 2·atan(√(num/den)), e.g. θ₃₂ = 2·atan√(3/2).
    pub fn surd_atan_sqrt_ratio(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::domain("Angle::surd_atan_sqrt_ratio", "zero denominator"));
        }
        // √(num/den) = √(num·den)/den
        Self::surd_atan(num * den, 1, den)
    }

    pub fn free(x: Real) -> Self {
        Angle::Free(x)
    }

    /// θ_k ≡ 2·atan√k
    pub fn theta(k: u64) -> Self {
        Self::surd_atan(k, 1, 1).expect("k > 0")
    }

    pub fn to_real(&self, ctx: &PrecisionContext) -> Real {
        match self {
            Angle::RationalPi { p, q } => ctx.pi() * *p / *q,
            Angle::Free(x) => ctx.real(x),
            Angle::SurdAtan { k, p, q } => {
                let u = ctx.sqrt(*k) * *p / *q;
                u.atan() * 2u32
            }
        }
    }

    /// n·θ, exact for rational multiples of π.
    pub fn times(&self, n: i64, ctx: &PrecisionContext) -> Angle {
        match self {
            Angle::RationalPi { p, q } => match p.checked_mul(n) {
                Some(np) => Angle::rational_pi(np, *q).expect("q > 0"),
                None => Angle::Free(self.to_real(ctx) * n),
            },
            _ => Angle::Free(self.to_real(ctx) * n),
        }
    }

    /// θ + pπ/q, exact when θ is itself a rational multiple of π.
    pub fn plus_pi_fraction(&self, p: i64, q: u64, ctx: &PrecisionContext) -> Angle {
        if let Angle::RationalPi { p: a, q: b } = self {
            let num = (*a as i128) * q as i128 + (p as i128) * (*b as i128);
            let den = (*b as i128) * q as i128;
            if let (Ok(num), Ok(den)) = (i64::try_from(num), u64::try_from(den)) {
                return Angle::rational_pi(num, den).expect("den > 0");
            }
        }
        Angle::Free(self.to_real(ctx) + ctx.pi() * p / q)
    }

    /// Half-angle tangent of a `SurdAtan` as (coefficient, k): tan(θ/2) = c·√k.
    pub fn half_tangent(&self) -> Option<(Rational, u64)> {
        match self {
            Angle::SurdAtan { k, p, q } => {
                Some((Rational::from((Integer::from(*p), Integer::from(*q))), *k))
            }
            _ => None,
        }
    }
}

impl From<Real> for Angle {
    fn from(x: Real) -> Self {
        Angle::Free(x)
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Angle::RationalPi { p, q } => write!(f, "{p}π/{q}"),
            Angle::Free(x) => write!(f, "{}", x.to_string_radix(10, Some(20))),
            Angle::SurdAtan { k, p, q } => {
                if *q == 1 {
                    write!(f, "2·atan({p}·√{k})")
                } else {
                    write!(f, "2·atan(({p}/{q})·√{k})")
                }
            }
        }
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// k = s²·f with f square-free; returns (s, f).
pub(crate) fn split_square(mut k: u64) -> (u64, u64) {
    let mut s = 1u64;
    let mut f = 1u64;
    let mut d = 2u64;
    while d * d <= k {
        let mut e = 0;
        while k % d == 0 {
            k /= d;
            e += 1;
        }
        s *= d.pow(e / 2);
        if e % 2 == 1 {
            f *= d;
        }
        d += 1;
    }
    (s, f * k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_pi_reduced() {
        assert_eq!(Angle::rational_pi(4, 6).unwrap(), Angle::RationalPi { p: 2, q: 3 });
        assert_eq!(Angle::rational_pi(-3, 9).unwrap(), Angle::RationalPi { p: -1, q: 3 });
        assert!(Angle::rational_pi(1, 0).is_err());
    }

    #[test]
    fn surd_normalised_square_free() {
        assert_eq!(Angle::surd_atan(12, 1, 4).unwrap(), Angle::SurdAtan { k: 3, p: 1, q: 2 });
        assert_eq!(
            Angle::surd_atan_sqrt_ratio(3, 2).unwrap(),
            Angle::SurdAtan { k: 6, p: 1, q: 2 }
        );
        assert_eq!(split_square(91), (1, 91));
        assert_eq!(split_square(72), (6, 2));
    }

    #[test]
    fn numeric_values() {
        let ctx = PrecisionContext::new(30).unwrap();
        let third = Angle::rational_pi(1, 3).unwrap().to_real(&ctx);
        assert!((third - ctx.pi() / 3u32).abs() < ctx.pow10(-38));
        let t7 = Angle::theta(7).to_real(&ctx);
        let direct = ctx.sqrt(7).atan() * 2u32;
        assert_eq!(t7, direct);
        let t75 = Angle::surd_atan(7, 1, 5).unwrap().to_real(&ctx);
        assert!((t75.to_f64() - 2.0 * (7f64.sqrt() / 5.0).atan()).abs() < 1e-15);
    }

    #[test]
    fn surd_is_monotone_in_coefficient() {
        let ctx = PrecisionContext::new(25).unwrap();
        let mut prev = Angle::surd_atan(5, 1, 40).unwrap().to_real(&ctx);
        for p in 2..40 {
            let cur = Angle::surd_atan(5, p, 40).unwrap().to_real(&ctx);
            assert!(cur > prev);
            prev = cur;
        }
    }
}

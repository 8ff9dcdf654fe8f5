use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::Float;

use super::{PrecisionContext, Real};

/// Arbitrary-precision complex number stored as a (re, im) pair.
///
/// Precision of a result follows the precision of the left operand's real part.
#[derive(Debug, Clone, PartialEq)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Self {
        Self { re, im }
    }

    pub fn from_real(re: Real) -> Self {
        let im = Float::new(re.prec());
        Self { re, im }
    }

    pub fn zero(ctx: &PrecisionContext) -> Self {
        Self::new(ctx.zero(), ctx.zero())
    }

    pub fn one(ctx: &PrecisionContext) -> Self {
        Self::new(ctx.one(), ctx.zero())
    }

    pub fn i(ctx: &PrecisionContext) -> Self {
        Self::new(ctx.zero(), ctx.one())
    }

    /// r·e^{iθ}
    pub fn from_polar(r: &Real, theta: &Real) -> Self {
        let (s, c) = theta.clone().sin_cos(Float::new(theta.prec()));
        Self::new(c * r, s * r)
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sqr(&self) -> Real {
        Float::with_val(self.prec(), self.re.square_ref()) + self.im.clone().square()
    }

    pub fn abs(&self) -> Real {
        self.re.clone().hypot(&self.im)
    }

    /// Principal argument in (−π, π]. A negative real axis point maps to +π
    /// regardless of the sign of its zero imaginary part.
    pub fn arg(&self) -> Real {
        if self.im.is_zero() {
            let p = self.prec();
            return if self.re.is_sign_negative() && !self.re.is_zero() {
                Float::with_val(p, rug::float::Constant::Pi)
            } else {
                Float::new(p)
            };
        }
        self.im.clone().atan2(&self.re)
    }

    /// Principal logarithm, imaginary part in (−π, π].
    pub fn ln(&self) -> Self {
        Self::new(self.abs().ln(), self.arg())
    }

    pub fn exp(&self) -> Self {
        let r = self.re.clone().exp();
        Self::from_polar(&r, &self.im)
    }

    /// Principal square root (branch cut on the negative real axis).
    pub fn sqrt(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let r = self.abs();
        let half_theta = self.arg() / 2u32;
        Self::from_polar(&r.sqrt(), &half_theta)
    }

    pub fn scale(&self, k: &Real) -> Self {
        Self::new(self.re.clone() * k, self.im.clone() * k)
    }

    pub fn recip(&self) -> Self {
        let d = self.norm_sqr();
        Self::new(self.re.clone() / &d, -(self.im.clone() / &d))
    }

    pub fn powi(&self, n: i64) -> Self {
        if n < 0 {
            return self.recip().powi(-n);
        }
        let mut result = Self::new(Float::with_val(self.prec(), 1), Float::new(self.prec()));
        let mut base = self.clone();
        let mut e = n as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_sign_negative() {
            write!(f, "{} - {}i", self.re, -self.im.clone())
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

impl<'a> Add<&'a Complex> for &'a Complex {
    type Output = Complex;
    fn add(self, rhs: &'a Complex) -> Complex {
        Complex::new(self.re.clone() + &rhs.re, self.im.clone() + &rhs.im)
    }
}

impl<'a> Sub<&'a Complex> for &'a Complex {
    type Output = Complex;
    fn sub(self, rhs: &'a Complex) -> Complex {
        Complex::new(self.re.clone() - &rhs.re, self.im.clone() - &rhs.im)
    }
}

impl<'a> Mul<&'a Complex> for &'a Complex {
    type Output = Complex;
    fn mul(self, rhs: &'a Complex) -> Complex {
        let p = self.prec();
        let re = Float::with_val(p, &self.re * &rhs.re) - Float::with_val(p, &self.im * &rhs.im);
        let im = Float::with_val(p, &self.re * &rhs.im) + Float::with_val(p, &self.im * &rhs.re);
        Complex::new(re, im)
    }
}

impl<'a> Div<&'a Complex> for &'a Complex {
    type Output = Complex;
    fn div(self, rhs: &'a Complex) -> Complex {
        self * &rhs.recip()
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-self.re, -self.im)
    }
}

impl Add for Complex {
    type Output = Complex;
    fn add(self, rhs: Complex) -> Complex {
        &self + &rhs
    }
}

impl Sub for Complex {
    type Output = Complex;
    fn sub(self, rhs: Complex) -> Complex {
        &self - &rhs
    }
}

impl Mul for Complex {
    type Output = Complex;
    fn mul(self, rhs: Complex) -> Complex {
        &self * &rhs
    }
}

impl Div for Complex {
    type Output = Complex;
    fn div(self, rhs: Complex) -> Complex {
        &self / &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(30).unwrap()
    }

    #[test]
    fn modulus_and_argument() {
        let c = ctx();
        let z = Complex::new(c.real(3), c.real(-4));
        assert_eq!(z.abs(), 5);
        let expected = c.real(-4).atan2(&c.real(3));
        assert_eq!(z.arg(), expected);
        let sq = z.norm_sqr();
        assert_eq!(sq, 25);
    }

    #[test]
    fn negative_real_axis_is_plus_pi() {
        let c = ctx();
        let z = Complex::new(c.real(-2), -c.zero());
        assert_eq!(z.arg(), c.pi());
        let w = Complex::new(c.real(-2), c.zero());
        assert_eq!(w.arg(), c.pi());
    }

    #[test]
    fn exp_ln_round_trip() {
        let c = ctx();
        let z = Complex::new(c.real(0.3), c.real(-1.7));
        let back = z.ln().exp();
        let err = (&back - &z).abs();
        assert!(err < c.pow10(-35));
    }

    #[test]
    fn sqrt_squares_back() {
        let c = ctx();
        let z = Complex::new(c.real(-3), c.real(0.5));
        let r = z.sqrt();
        assert!(r.re > 0);
        let err = (&(&r * &r) - &z).abs();
        assert!(err < c.pow10(-35));
    }

    #[test]
    fn powi_and_recip() {
        let c = ctx();
        let z = Complex::new(c.real(1), c.real(1));
        let z4 = z.powi(4);
        assert!((z4.re + 4u32).abs() < c.pow10(-35));
        assert!(z4.im.abs() < c.pow10(-35));
        let one = &z * &z.recip();
        assert!((one.re - 1u32).abs() < c.pow10(-35));
    }
}

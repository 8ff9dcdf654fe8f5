//! Arbitrary-precision foundation: the precision context, real and complex
//! values, gamma, exact angle forms and decimal formatting.
//!
//! Reals are MPFR floats (via `rug`); every elementary function MPFR provides
//! is correctly rounded, which is well inside a 4-ulp contract.

mod angle;
mod complex;
mod format;
mod gamma;
mod precision;

pub use angle::Angle;
pub use complex::Complex;
pub use format::{format_decimal, format_sci, parse_decimal};
pub use gamma::gamma;
pub use precision::{PrecisionContext, GUARD_DIGITS, MAX_DIGITS, MIN_DIGITS};

/// Arbitrary-precision real number.
pub type Real = rug::Float;

/// Numeric value of an angle at the context's precision.
pub fn angle_to_real(a: &Angle, ctx: &PrecisionContext) -> Real {
    a.to_real(ctx)
}

/// `|a − b|` at the precision of `a`.
pub fn abs_diff(a: &Real, b: &Real) -> Real {
    (a.clone() - b).abs()
}

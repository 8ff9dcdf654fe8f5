use rug::ops::Pow;
use rug::{Float, Integer};

use crate::error::{Error, Result};

use super::{PrecisionContext, Real};

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Fixed-point decimal rendering with `places` digits after the point,
/// rounded half-to-even.
///
/// Callers keep `places` at most two below the digits carried by `x`.
pub fn format_decimal(x: &Real, places: usize) -> String {
    let prec = x.prec().max(64) + (places as f64 * LOG2_10).ceil() as u32 + 64;
    let scale = Integer::from(10).pow(places as u32);
    let scaled = Float::with_val(prec, x * &scale);
    let int = scaled.to_integer().unwrap_or_default();
    let negative = int < 0;
    let mut digits = int.abs().to_string();
    if digits.len() <= places {
        digits = format!("{}{}", "0".repeat(places + 1 - digits.len()), digits);
    }
    let split = digits.len() - places;
    let mut out = String::with_capacity(digits.len() + 2);
    if negative {
        out.push('-');
    }
    out.push_str(&digits[..split]);
    if places > 0 {
        out.push('.');
        out.push_str(&digits[split..]);
    }
    out
}

/// Scientific rendering with `sig` significant digits, used for residuals and reports.
pub fn format_sci(x: &Real, sig: usize) -> String {
    if x.is_zero() {
        return "0".to_owned();
    }
    x.to_string_radix(10, Some(sig.max(1)))
}

pub fn parse_decimal(text: &str, ctx: &PrecisionContext) -> Result<Real> {
    let parsed = Float::parse(text.trim())
        .map_err(|e| Error::domain("parse_decimal", format!("{text:?}: {e}")))?;
    Ok(ctx.real(parsed))
}

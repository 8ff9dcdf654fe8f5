use clausen::numerics::{format_decimal, format_sci};
use clausen::{Complex, Real};

/// `x` with `digits` significant digits: fixed point for moderate
/// magnitudes, scientific otherwise.
pub fn format_real(x: &Real, digits: u32) -> String {
    if x.is_zero() {
        return "0".to_owned();
    }
    let mag = x.to_f64().abs().log10().floor();
    if !(-6.0..21.0).contains(&mag) {
        return format_sci(x, digits as usize);
    }
    let places = (digits as i64 - 1 - mag as i64).max(0) as usize;
    format_decimal(x, places)
}

pub fn format_complex(z: &Complex, digits: u32) -> String {
    if z.is_real() {
        return format_real(&z.re, digits);
    }
    let im = format_real(&z.im.clone().abs(), digits);
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{} {sign} {im}*i", format_real(&z.re, digits))
}

//! Gamma function by Spouge's approximation.
//!
//! For `a > 2` and `Re z > 0`,
//!
//! ```text
//! Γ(z+1) = (z+a)^(z+1/2) e^-(z+a) [ c0 + Σ_{k=1}^{a-1} c_k/(z+k) + ε ]
//! c0 = √(2π),  c_k = (-1)^(k-1)/(k-1)! · (a-k)^(k-1/2) e^(a-k)
//! ```
//!
//! with relative error `|ε| ≤ a^-1/2 (2π)^-(a+1/2)`, so `a` is picked from the
//! target digit count. The coefficients alternate and cancel heavily; they are
//! built at an enlarged precision and cached per target precision.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rug::float::Constant;
use rug::Float;

use crate::error::{Error, Result};

use super::{PrecisionContext, Real};

struct SpougeTable {
    a: u32,
    work_bits: u32,
    coeffs: Vec<Float>,
}

static TABLES: OnceLock<Mutex<HashMap<u32, Arc<SpougeTable>>>> = OnceLock::new();

/// Spouge parameter giving relative error below 2^-bits.
fn spouge_parameter(bits: u32) -> u32 {
    let target = bits as f64 * std::f64::consts::LN_2;
    (target / (2.0 * std::f64::consts::PI).ln()).ceil() as u32 + 2
}

fn table(bits: u32) -> Arc<SpougeTable> {
    let map = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = map.lock().unwrap_or_else(|e| e.into_inner());
    guard.entry(bits).or_insert_with(|| Arc::new(build_table(bits))).clone()
}

fn build_table(bits: u32) -> SpougeTable {
    let a = spouge_parameter(bits);
    // the alternating sum cancels roughly a·log2(2π) bits
    let work_bits = bits + (a as f64 * (2.0 * std::f64::consts::PI).log2()).ceil() as u32 + 32;
    let two_pi = Float::with_val(work_bits, Constant::Pi) * 2u32;
    let mut coeffs = Vec::with_capacity(a as usize);
    coeffs.push(two_pi.sqrt());
    let mut factorial = Float::with_val(work_bits, 1);
    for k in 1..a {
        if k > 1 {
            factorial *= k - 1;
        }
        let base = Float::with_val(work_bits, a - k);
        let power = base.clone().ln() * (Float::with_val(work_bits, k) - 0.5f64) + base;
        let mut c = power.exp() / &factorial;
        if k % 2 == 0 {
            c = -c;
        }
        coeffs.push(c);
    }
    SpougeTable { a, work_bits, coeffs }
}

/// Γ(z+1) for z > -1/2 at the table's working precision.
fn spouge_shifted(z: &Float, t: &SpougeTable) -> Float {
    let wp = t.work_bits;
    let z = Float::with_val(wp, z);
    let mut sum = t.coeffs[0].clone();
    for (k, c) in t.coeffs.iter().enumerate().skip(1) {
        sum += Float::with_val(wp, c / Float::with_val(wp, &z + k as u32));
    }
    let za = Float::with_val(wp, &z + t.a);
    let expo = Float::with_val(wp, &z + 0.5f64) * za.clone().ln() - &za;
    expo.exp() * sum
}

/// Γ(x) to within `ctx.eval_tol` relative error.
pub fn gamma(x: &Real, ctx: &PrecisionContext) -> Result<Real> {
    if x.is_nan() || x.is_infinite() {
        return Err(Error::domain("gamma", format!("non-finite argument {x}")));
    }
    if *x <= 0 && x.is_integer() {
        return Err(Error::Pole { func: "gamma", at: x.to_string() });
    }
    let bits = ctx.bits();
    let t = table(bits + 16);
    let wp = t.work_bits;
    let x = Float::with_val(wp, x);
    let value = if x < 0.5f64 {
        // Γ(x) Γ(1−x) = π / sin(πx)
        let pi = Float::with_val(wp, Constant::Pi);
        let one_minus = Float::with_val(wp, 1) - &x;
        let g = gamma_positive(&one_minus, &t);
        let s = Float::with_val(wp, &pi * &x).sin();
        pi / (s * g)
    } else {
        gamma_positive(&x, &t)
    };
    Ok(Float::with_val(bits, value))
}

fn gamma_positive(x: &Float, t: &SpougeTable) -> Float {
    if *x < 1 {
        let shifted = spouge_shifted(x, t);
        shifted / x
    } else {
        let z = Float::with_val(t.work_bits, x - 1u32);
        spouge_shifted(&z, t)
    }
}

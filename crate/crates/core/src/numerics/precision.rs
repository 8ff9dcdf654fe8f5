use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Assign, Float};

use crate::error::{Error, Result};

use super::Real;

/// Decimal digits carried beyond the requested precision so that tolerances
/// stated at `digits` survive accumulated rounding.
pub const GUARD_DIGITS: u32 = 10;

pub const MIN_DIGITS: u32 = 20;
pub const MAX_DIGITS: u32 = 1000;

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Working precision plus the two tolerances derived from it.
///
/// `eval_tol` bounds the absolute error of a single function evaluation,
/// `verify_tol` is the residual threshold for identity checks.
#[derive(Debug, Clone, PartialEq)]
pub struct PrecisionContext {
    digits: u32,
    eval_tol: Real,
    verify_tol: Real,
}

impl PrecisionContext {
    pub fn new(digits: u32) -> Result<Self> {
        check_digits(digits)?;
        let bits = bits_for(digits);
        Ok(Self {
            digits,
            eval_tol: pow10_at(bits, -(digits as i32 - 5)),
            verify_tol: pow10_at(bits, -(digits as i32 - 10)),
        })
    }

    pub fn with_tolerances(digits: u32, eval_tol: Real, verify_tol: Real) -> Result<Self> {
        check_digits(digits)?;
        let bits = bits_for(digits);
        let floor = pow10_at(bits, -(digits as i32));
        if !(verify_tol > eval_tol && eval_tol > floor) {
            return Err(Error::InvalidTolerance);
        }
        Ok(Self {
            digits,
            eval_tol: Float::with_val(bits, eval_tol),
            verify_tol: Float::with_val(bits, verify_tol),
        })
    }

    /// Same tolerances policy at a different digit count.
    pub fn with_digits(&self, digits: u32) -> Result<Self> {
        Self::new(digits)
    }

    /// The same context carrying `extra` more digits, past the public cap if
    /// need be; used for intermediate work that is rounded back afterwards.
    pub(crate) fn widened(&self, extra: u32) -> Self {
        let digits = self.digits + extra;
        let bits = bits_for(digits);
        Self {
            digits,
            eval_tol: pow10_at(bits, -(digits as i32 - 5)),
            verify_tol: pow10_at(bits, -(digits as i32 - 10)),
        }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Binary precision used for every `Real` created under this context.
    pub fn bits(&self) -> u32 {
        bits_for(self.digits)
    }

    pub fn eval_tol(&self) -> &Real {
        &self.eval_tol
    }

    pub fn verify_tol(&self) -> &Real {
        &self.verify_tol
    }

    /// Smallest relative step representable at working precision.
    pub fn epsilon(&self) -> Real {
        Float::with_val(self.bits(), Float::u_exp(1, 1 - self.bits() as i32))
    }

    pub fn real<T>(&self, value: T) -> Real
    where
        Float: Assign<T>,
    {
        Float::with_val(self.bits(), value)
    }

    pub fn zero(&self) -> Real {
        Float::new(self.bits())
    }

    pub fn one(&self) -> Real {
        self.real(1)
    }

    /// p/q at working precision.
    pub fn ratio(&self, p: i64, q: i64) -> Real {
        self.real(p) / q
    }

    /// 10^exponent at working precision.
    pub fn pow10(&self, exponent: i32) -> Real {
        pow10_at(self.bits(), exponent)
    }

    pub fn pi(&self) -> Real {
        cached_constant(&PI_CACHE, self.bits(), Constant::Pi)
    }

    pub fn ln2(&self) -> Real {
        cached_constant(&LN2_CACHE, self.bits(), Constant::Log2)
    }

    pub fn sqrt(&self, n: u64) -> Real {
        self.real(n).sqrt()
    }
}

fn check_digits(digits: u32) -> Result<()> {
    if !(MIN_DIGITS..=MAX_DIGITS).contains(&digits) {
        return Err(Error::InvalidPrecision { digits });
    }
    Ok(())
}

pub(crate) fn bits_for(digits: u32) -> u32 {
    ((digits + GUARD_DIGITS) as f64 * LOG2_10).ceil() as u32
}

pub(crate) fn pow10_at(bits: u32, exponent: i32) -> Real {
    let ten = Float::with_val(bits, 10);
    ten.pow(exponent)
}

type ConstantCache = OnceLock<Mutex<HashMap<u32, Float>>>;

static PI_CACHE: ConstantCache = OnceLock::new();
static LN2_CACHE: ConstantCache = OnceLock::new();

fn cached_constant(cache: &ConstantCache, bits: u32, which: Constant) -> Real {
    let map = cache.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = map.lock().unwrap_or_else(|e| e.into_inner());
    guard
        .entry(bits)
        .or_insert_with(|| Float::with_val(bits, which))
        .clone()
}

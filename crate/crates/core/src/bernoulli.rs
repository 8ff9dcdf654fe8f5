//! Exact even-index Bernoulli numbers and the ζ(2k) values derived from them.
//!
//! B₂ₖ comes from the tangent numbers Tₖ (integer-only recurrence):
//! `B₂ₖ = (−1)^(k−1) · 2k · Tₖ / (2^(2k) (2^(2k) − 1))`, and
//! `2^(2k) |B₂ₖ| / (2k)! = 2 ζ(2k) / π^(2k)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use crate::numerics::{PrecisionContext, Real};

static EXACT: OnceLock<RwLock<Arc<Vec<Rational>>>> = OnceLock::new();
static SCALED: OnceLock<Mutex<HashMap<u32, Arc<Vec<Float>>>>> = OnceLock::new();

fn tangent_numbers(n: usize) -> Vec<Integer> {
    // t[k] = T_k for k = 1..=n (index 0 unused)
    let mut t = vec![Integer::new(); n + 1];
    if n == 0 {
        return t;
    }
    t[1] = Integer::from(1);
    for k in 2..=n {
        t[k] = Integer::from(&t[k - 1] * (k as u32 - 1));
    }
    for k in 2..=n {
        for j in k..=n {
            let a = Integer::from(&t[j - 1] * (j - k) as u32);
            let b = Integer::from(&t[j] * (j - k + 2) as u32);
            t[j] = a + b;
        }
    }
    t
}

fn compute_exact(count: usize) -> Vec<Rational> {
    let t = tangent_numbers(count);
    let mut out = Vec::with_capacity(count + 1);
    out.push(Rational::from(1));
    for (k, tk) in t.iter().enumerate().skip(1) {
        let four_k = Integer::from(1) << (2 * k as u32);
        let den = Integer::from(&four_k * (four_k.clone() - 1u32));
        let num = Integer::from(tk * (2 * k) as u32);
        let mut b = Rational::from((num, den));
        if k % 2 == 0 {
            b = -b;
        }
        out.push(b);
    }
    out
}

/// B₀, B₂, …, B₂ₙ as exact rationals (index k holds B₂ₖ).
pub fn bernoulli_even(n: usize) -> Arc<Vec<Rational>> {
    let lock = EXACT.get_or_init(|| RwLock::new(Arc::new(Vec::new())));
    {
        let cur = lock.read().unwrap_or_else(|e| e.into_inner());
        if cur.len() > n {
            return cur.clone();
        }
    }
    let mut cur = lock.write().unwrap_or_else(|e| e.into_inner());
    if cur.len() <= n {
        // grow geometrically so repeated small extensions stay cheap
        let target = n.max(cur.len() * 2).max(32);
        *cur = Arc::new(compute_exact(target));
    }
    cur.clone()
}

/// B₂ₖ exactly.
pub fn bernoulli_2k(k: usize) -> Rational {
    bernoulli_even(k)[k].clone()
}

/// |B₂ₖ| / (2k)! at working precision, for k = 0..=n. Cached per precision.
pub fn abs_bernoulli_over_factorial(n: usize, ctx: &PrecisionContext) -> Arc<Vec<Real>> {
    abs_bernoulli_over_factorial_at(n, ctx.bits())
}

pub(crate) fn abs_bernoulli_over_factorial_at(n: usize, bits: u32) -> Arc<Vec<Real>> {
    let map = SCALED.get_or_init(|| Mutex::new(HashMap::new()));
    {
        let guard = map.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(v) = guard.get(&bits) {
            if v.len() > n {
                return v.clone();
            }
        }
    }
    let target = n.max(64).next_power_of_two();
    let exact = bernoulli_even(target);
    let mut out = Vec::with_capacity(target + 1);
    let mut fact = Integer::from(1);
    for k in 0..=target {
        if k > 0 {
            fact *= (2 * k - 1) as u32;
            fact *= (2 * k) as u32;
        }
        let r = Rational::from((exact[k].numer().clone().abs(), Integer::from(exact[k].denom() * &fact)));
        out.push(Float::with_val(bits, &r));
    }
    let out = Arc::new(out);
    let mut guard = map.lock().unwrap_or_else(|e| e.into_inner());
    guard.insert(bits, out.clone());
    out
}

/// ζ(2k)/π^(2k) = 2^(2k−1) |B₂ₖ| / (2k)!, a rational multiple; k ≥ 1.
pub fn zeta_even_over_pi_power(k: usize, ctx: &PrecisionContext) -> Real {
    let scaled = abs_bernoulli_over_factorial(k, ctx);
    Float::with_val(ctx.bits(), &scaled[k] << (2 * k as u32 - 1))
}

/// ζ(2k) for k ≥ 1.
pub fn zeta_even(k: usize, ctx: &PrecisionContext) -> Real {
    let pi2k = ctx.pi().pow(2 * k as u32);
    zeta_even_over_pi_power(k, ctx) * pi2k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_bernoulli_numbers() {
        let b = bernoulli_even(6);
        assert_eq!(b[0], Rational::from(1));
        assert_eq!(b[1], Rational::from((1, 6)));
        assert_eq!(b[2], Rational::from((-1, 30)));
        assert_eq!(b[3], Rational::from((1, 42)));
        assert_eq!(b[4], Rational::from((-1, 30)));
        assert_eq!(b[5], Rational::from((5, 66)));
        assert_eq!(b[6], Rational::from((-691, 2730)));
        assert_eq!(bernoulli_2k(7), Rational::from((7, 6)));
    }

    #[test]
    fn tangent_numbers_known() {
        let t = tangent_numbers(5);
        let expect = [1u32, 2, 16, 272, 7936];
        for (k, e) in expect.iter().enumerate() {
            assert_eq!(t[k + 1], *e);
        }
    }

    #[test]
    fn zeta_even_matches_direct_values() {
        let ctx = PrecisionContext::new(40).unwrap();
        let z2 = zeta_even(1, &ctx);
        let pi2_6 = ctx.pi().square() / 6u32;
        assert!((z2 - pi2_6).abs() < ctx.pow10(-45));
        // ζ(20) via MPFR's own zeta as an outside reference
        let reference = ctx.real(20).zeta();
        assert!((zeta_even(10, &ctx) - reference).abs() < ctx.pow10(-45));
    }

    #[test]
    fn cache_grows_consistently() {
        let small = bernoulli_even(10);
        let large = bernoulli_even(200);
        for k in 0..=10 {
            assert_eq!(small[k], large[k]);
        }
    }
}

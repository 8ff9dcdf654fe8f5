//! Double-exponential quadrature.
//!
//! Finite intervals use x = tanh((π/2) sinh u); half-lines use either the
//! rational chart y = d + (1−u)/u onto (0, 1] or x = d + exp((π/2) sinh u).
//! The step halves each level and the error estimate is the difference of
//! successive levels.
//!
//! Integrands receive the abscissa together with its distances to both ends,
//! computed without cancellation, so endpoint singularities such as ln(x − a)
//! keep full relative accuracy at nodes that crowd the end.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};
use crate::numerics::{Complex, PrecisionContext, Real};

/// Number of positive-side nodes on the coarsest level.
const BASE_NODES: u32 = 32;
pub const DEFAULT_MAX_LEVEL: u32 = 12;

/// Values the engine can accumulate.
pub trait QuadValue: Clone + Send + Sync {
    fn zero_at(bits: u32) -> Self;
    fn add_weighted(&mut self, w: &Real, v: &Self);
    fn scaled(&self, k: &Real) -> Self;
    /// Magnitude of `self − other`.
    fn distance(&self, other: &Self) -> Real;
    fn finite(&self) -> bool;
}

impl QuadValue for Real {
    fn zero_at(bits: u32) -> Self {
        Float::new(bits)
    }
    fn add_weighted(&mut self, w: &Real, v: &Self) {
        *self += Float::with_val(self.prec(), w * v);
    }
    fn scaled(&self, k: &Real) -> Self {
        Float::with_val(self.prec(), self * k)
    }
    fn distance(&self, other: &Self) -> Real {
        Float::with_val(self.prec(), self - other).abs()
    }
    fn finite(&self) -> bool {
        self.is_finite()
    }
}

impl QuadValue for Complex {
    fn zero_at(bits: u32) -> Self {
        Complex::new(Float::new(bits), Float::new(bits))
    }
    fn add_weighted(&mut self, w: &Real, v: &Self) {
        self.re += Float::with_val(self.re.prec(), w * &v.re);
        self.im += Float::with_val(self.im.prec(), w * &v.im);
    }
    fn scaled(&self, k: &Real) -> Self {
        self.scale(k)
    }
    fn distance(&self, other: &Self) -> Real {
        (self - other).abs()
    }
    fn finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

#[derive(Debug, Clone)]
pub struct QuadratureResult<V = Real> {
    pub value: V,
    pub error_estimate: Real,
    pub levels_used: u32,
    /// Interior points at which the interval was split.
    pub splits: Vec<Real>,
}

/// Stopping rule: finish once successive levels differ by at most `tol`.
#[derive(Debug, Clone)]
pub struct QuadOptions {
    pub tol: Real,
    pub max_level: u32,
}

impl QuadOptions {
    /// `eval_tol / 10`, leaving room for a few panels to be summed.
    pub fn for_context(ctx: &PrecisionContext) -> Self {
        Self { tol: Float::with_val(ctx.bits(), ctx.eval_tol() / 10u32), max_level: DEFAULT_MAX_LEVEL }
    }

    pub fn with_tol(mut self, tol: Real) -> Self {
        self.tol = tol;
        self
    }
}

/// One positive-u node. The mirrored node uses the same weight with the
/// roles of the two ends swapped.
struct Node {
    /// Distance to the near end as a fraction of the interval: 1/(1 + e^{2v}).
    near: Float,
    /// 1 − near.
    far: Float,
    /// (π/2) cosh u / cosh² v, already halved for the interval map.
    w: Float,
    /// e^v and (π/2) cosh u, for the exp-sinh chart.
    ev: Float,
    dv: Float,
}

struct Grid {
    h0: Float,
    levels: Mutex<Vec<Arc<Vec<Node>>>>,
}

type GridCache = OnceLock<Mutex<HashMap<u32, Arc<Grid>>>>;
static GRIDS: GridCache = OnceLock::new();

fn grid(bits: u32) -> Arc<Grid> {
    let map = GRIDS.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = map.lock().unwrap_or_else(|e| e.into_inner());
    guard
        .entry(bits)
        .or_insert_with(|| {
            // v_max = bits·ln 2 + 5 keeps ∫ x^(−1/2) near an end below 2^(−bits)
            let vmax = bits as f64 * std::f64::consts::LN_2 + 5.0;
            let umax = (2.0 * vmax / std::f64::consts::PI).asinh();
            let h0 = Float::with_val(bits, umax) / BASE_NODES;
            Arc::new(Grid { h0, levels: Mutex::new(Vec::new()) })
        })
        .clone()
}

impl Grid {
    fn level(&self, k: u32, bits: u32) -> Arc<Vec<Node>> {
        let mut levels = self.levels.lock().unwrap_or_else(|e| e.into_inner());
        while levels.len() <= k as usize {
            let lev = levels.len() as u32;
            levels.push(Arc::new(build_level(&self.h0, lev, bits)));
        }
        levels[k as usize].clone()
    }
}

fn build_level(h0: &Float, k: u32, bits: u32) -> Vec<Node> {
    let half_pi = Float::with_val(bits, rug::float::Constant::Pi) / 2u32;
    let (count, step, odd_only) = if k == 0 {
        (BASE_NODES, h0.clone(), false)
    } else {
        (BASE_NODES << (k - 1), Float::with_val(bits, h0 >> k), true)
    };
    (1..=count)
        .into_par_iter()
        .map(|i| {
            let mult = if odd_only { 2 * i - 1 } else { i };
            let u = Float::with_val(bits, &step * mult);
            let (sh, ch) = u.sinh_cosh(Float::new(bits));
            let v = Float::with_val(bits, &half_pi * &sh);
            let dv = Float::with_val(bits, &half_pi * &ch);
            let e2v = Float::with_val(bits, &v * 2u32).exp();
            let one_plus = Float::with_val(bits, &e2v + 1u32);
            let near = Float::with_val(bits, one_plus.recip_ref());
            let far = Float::with_val(bits, &e2v / &one_plus);
            // (π/2) cosh u · 4e^{2v}/(1+e^{2v})², halved for the [a, b] map
            let w = Float::with_val(bits, &dv * &far) * &near * 2u32;
            let ev = v.exp();
            Node { near, far, w, ev, dv }
        })
        .collect()
}

/// ∫_a^b f. The integrand sees (x, x − a, b − x).
pub fn tanh_sinh<V, F>(f: F, a: &Real, b: &Real, ctx: &PrecisionContext) -> Result<QuadratureResult<V>>
where
    V: QuadValue,
    F: Fn(&Real, &Real, &Real) -> Result<V> + Sync,
{
    tanh_sinh_with(f, a, b, ctx, &QuadOptions::for_context(ctx))
}

pub fn tanh_sinh_with<V, F>(
    f: F,
    a: &Real,
    b: &Real,
    ctx: &PrecisionContext,
    opts: &QuadOptions,
) -> Result<QuadratureResult<V>>
where
    V: QuadValue,
    F: Fn(&Real, &Real, &Real) -> Result<V> + Sync,
{
    if !(a < b) {
        return Err(Error::domain("tanh_sinh", "need a < b"));
    }
    let bits = ctx.bits() + 16;
    let a = Float::with_val(bits, a);
    let b = Float::with_val(bits, b);
    let len = Float::with_val(bits, &b - &a);
    let half = Float::with_val(bits, &len / 2u32);
    let mid = Float::with_val(bits, &a + &half);
    let g = grid(bits);

    let centre_w = Float::with_val(bits, rug::float::Constant::Pi) / 4u32;
    let mut raw = V::zero_at(bits);
    raw.add_weighted(&centre_w, &f(&mid, &half, &half)?);

    let eval_level = |nodes: &[Node]| -> Result<Vec<(V, V)>> {
        nodes
            .par_iter()
            .map(|nd| {
                let to_b = Float::with_val(bits, &len * &nd.near);
                let from_a_far = Float::with_val(bits, &len * &nd.far);
                let x_hi = Float::with_val(bits, &b - &to_b);
                let from_a = Float::with_val(bits, &len * &nd.near);
                let to_b_far = from_a_far.clone();
                let x_lo = Float::with_val(bits, &a + &from_a);
                let hi = f(&x_hi, &from_a_far, &to_b)?;
                let lo = f(&x_lo, &from_a, &to_b_far)?;
                Ok((hi, lo))
            })
            .collect()
    };

    run_levels(&g, bits, opts, &len, |k| {
        let nodes = g.level(k, bits);
        let vals = eval_level(&nodes)?;
        for (nd, (hi, lo)) in nodes.iter().zip(vals.iter()) {
            raw.add_weighted(&nd.w, hi);
            raw.add_weighted(&nd.w, lo);
        }
        Ok(raw.clone())
    })
}

/// Shared level loop: `add_level(k)` folds level k into the raw sum and
/// returns it; the integral at level k is raw · h_k · scale.
fn run_levels<V, A>(g: &Grid, bits: u32, opts: &QuadOptions, scale: &Real, mut add_level: A) -> Result<QuadratureResult<V>>
where
    V: QuadValue,
    A: FnMut(u32) -> Result<V>,
{
    let mut prev: Option<V> = None;
    let mut last_err = Float::with_val(bits, rug::float::Special::Infinity);
    for k in 0..=opts.max_level {
        let raw = add_level(k)?;
        let h = Float::with_val(bits, &g.h0 >> k);
        let hs = Float::with_val(bits, &h * scale);
        let est = raw.scaled(&hs);
        if !est.finite() {
            return Err(Error::NonConvergence {
                what: "tanh_sinh",
                detail: "integrand produced a non-finite value".into(),
            });
        }
        if let Some(p) = &prev {
            last_err = est.distance(p);
            if k >= 2 && last_err <= opts.tol {
                return Ok(QuadratureResult { value: est, error_estimate: last_err, levels_used: k + 1, splits: vec![] });
            }
        }
        prev = Some(est);
    }
    Err(Error::NonConvergence {
        what: "tanh_sinh",
        detail: format!(
            "level cap {} reached with successive difference {:.3e}",
            opts.max_level,
            last_err.to_f64()
        ),
    })
}

/// ∫_a^b f split at the given interior points; estimates add.
pub fn tanh_sinh_split<V, F>(
    f: F,
    a: &Real,
    b: &Real,
    splits: &[Real],
    ctx: &PrecisionContext,
) -> Result<QuadratureResult<V>>
where
    V: QuadValue,
    F: Fn(&Real, &Real, &Real) -> Result<V> + Sync,
{
    let mut pts: Vec<Real> = Vec::with_capacity(splits.len() + 2);
    pts.push(a.clone());
    for s in splits {
        if s > a && s < b {
            pts.push(s.clone());
        }
    }
    pts.push(b.clone());
    pts.sort_by(|x, y| x.partial_cmp(y).expect("split points are finite"));
    let mut total = V::zero_at(ctx.bits() + 16);
    let one = Float::with_val(ctx.bits() + 16, 1);
    let mut err = Float::new(ctx.bits());
    let mut levels = 0;
    for w in pts.windows(2) {
        let r = tanh_sinh(&f, &w[0], &w[1], ctx)?;
        total.add_weighted(&one, &r.value);
        err += &r.error_estimate;
        levels = levels.max(r.levels_used);
    }
    let inner = pts[1..pts.len() - 1].to_vec();
    Ok(QuadratureResult { value: total, error_estimate: err, levels_used: levels, splits: inner })
}

/// ∫_d^∞ f through y = d + (1 − u)/u, u ∈ (0, 1]. The integrand sees (y, y − d).
pub fn semi_infinite_rational<V, F>(f: F, d: &Real, ctx: &PrecisionContext) -> Result<QuadratureResult<V>>
where
    V: QuadValue,
    F: Fn(&Real, &Real) -> Result<V> + Sync,
{
    let zero = ctx.zero();
    let one = ctx.one();
    let d = d.clone();
    tanh_sinh(
        |u, from0, to1| {
            let bits = u.prec();
            let ymd = Float::with_val(bits, to1 / from0);
            let y = Float::with_val(bits, &d + &ymd);
            let jac = Float::with_val(bits, from0.square_ref()).recip();
            Ok(f(&y, &ymd)?.scaled(&jac))
        },
        &zero,
        &one,
        ctx,
    )
}

/// ∫_d^∞ f through y = d + exp((π/2) sinh u). The integrand sees (y, y − d).
pub fn exp_sinh<V, F>(f: F, d: &Real, ctx: &PrecisionContext) -> Result<QuadratureResult<V>>
where
    V: QuadValue,
    F: Fn(&Real, &Real) -> Result<V> + Sync,
{
    let bits = ctx.bits() + 16;
    let d = Float::with_val(bits, d);
    let g = grid(bits);
    let opts = QuadOptions::for_context(ctx);
    let one = Float::with_val(bits, 1);
    let centre_w = Float::with_val(bits, rug::float::Constant::Pi) / 2u32;
    let mut raw = V::zero_at(bits);
    raw.add_weighted(&centre_w, &f(&Float::with_val(bits, &d + 1u32), &one)?);
    run_levels(&g, bits, &opts, &one, |k| {
        let nodes = g.level(k, bits);
        let vals: Vec<(V, V)> = nodes
            .par_iter()
            .map(|nd| {
                let inv = Float::with_val(bits, nd.ev.recip_ref());
                let hi = f(&Float::with_val(bits, &d + &nd.ev), &nd.ev)?;
                let lo = f(&Float::with_val(bits, &d + &inv), &inv)?;
                Ok((hi, lo))
            })
            .collect::<Result<_>>()?;
        for (nd, (hi, lo)) in nodes.iter().zip(vals.iter()) {
            let w_hi = Float::with_val(bits, &nd.dv * &nd.ev);
            let w_lo = Float::with_val(bits, &nd.dv / &nd.ev);
            raw.add_weighted(&w_hi, hi);
            raw.add_weighted(&w_lo, lo);
        }
        Ok(raw.clone())
    })
}

/// ∫_start^∞ P₁(x) f(x) dx with P₁(x) = x − ⌊x⌋ − 1/2.
///
/// Unit intervals up to a cutoff M are integrated directly; beyond M the
/// Euler–Maclaurin tail −Σ_k B₂ₖ/(2k)! f^(2k−2)(M) is summed from the
/// expansion f(x) = Σ c·x^(−e) supplied in `tail`, which must converge at M.
pub fn sawtooth_integral<F>(f: F, tail: &[(u32, Real)], start: u64, ctx: &PrecisionContext) -> Result<QuadratureResult>
where
    F: Fn(&Real) -> Result<Real> + Sync,
{
    let bits = ctx.bits() + 16;
    // the smallest tail term is about e^(−2πM)
    let m_end = start + (bits as f64 * std::f64::consts::LN_2 / (2.0 * std::f64::consts::PI)).ceil() as u64 + 2;
    let mut total = Float::new(bits);
    let mut err = Float::new(bits);
    let mut levels = 0;
    let mut splits = Vec::new();
    for m in start..m_end {
        let lo = Float::with_val(bits, m);
        let hi = Float::with_val(bits, m + 1);
        let r = tanh_sinh(
            |x, from_a, _| {
                let p1 = Float::with_val(bits, from_a - 0.5f64);
                Ok(p1 * f(x)?)
            },
            &lo,
            &hi,
            ctx,
        )?;
        total += &r.value;
        err += &r.error_estimate;
        levels = levels.max(r.levels_used);
        if m > start {
            splits.push(lo);
        }
    }
    let (t, t_err) = sawtooth_tail(tail, m_end, bits)?;
    total += t;
    err += t_err;
    splits.push(Float::with_val(bits, m_end));
    Ok(QuadratureResult { value: total, error_estimate: err, levels_used: levels, splits })
}

fn sawtooth_tail(series: &[(u32, Real)], m: u64, bits: u32) -> Result<(Float, Float)> {
    let x = Float::with_val(bits, m);
    let eps = Float::with_val(bits, Float::u_exp(1, -(bits as i32)));
    let kmax = (bits as usize) / 2 + 8;
    let table = crate::bernoulli::abs_bernoulli_over_factorial_at(kmax, bits);
    let mut total = Float::new(bits);
    let mut prev_mag: Option<Float> = None;
    for k in 1..=kmax {
        let order = 2 * k as u32 - 2;
        // f^(order)(x) = Σ c · e(e+1)…(e+order−1) · x^(−e−order)
        let mut deriv = Float::new(bits);
        for (e, c) in series {
            let mut rising = Float::with_val(bits, 1);
            for i in 0..order {
                rising *= e + i;
            }
            let p = Float::with_val(bits, (&x).pow(-((e + order) as i32)));
            deriv += rising * c * p;
        }
        let mut term = Float::with_val(bits, &table[k] * &deriv);
        if k % 2 == 1 {
            term = -term;
        }
        let mag = Float::with_val(bits, term.abs_ref());
        total += &term;
        if mag <= eps {
            return Ok((total, mag));
        }
        if let Some(p) = &prev_mag {
            if k > 3 && mag > *p {
                return Err(Error::NonConvergence {
                    what: "sawtooth_integral",
                    detail: "Euler–Maclaurin tail terms started growing".into(),
                });
            }
        }
        prev_mag = Some(mag);
    }
    Err(Error::NonConvergence { what: "sawtooth_integral", detail: "tail series too slow".into() })
}

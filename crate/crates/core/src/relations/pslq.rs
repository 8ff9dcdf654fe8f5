use rug::{Float, Integer};

use crate::error::{Error, Result};
use crate::numerics::{PrecisionContext, Real};

/// Output of [`pslq`].
#[derive(Debug, Clone, PartialEq)]
pub struct IntegerRelation {
    /// Normalised: gcd 1, leading nonzero entry positive. Empty when not found.
    pub coeffs: Vec<i64>,
    /// |Σ aᵢxᵢ| on the inputs as given.
    pub residual: Real,
    pub max_coeff: u64,
    pub found: bool,
    /// No relation of Euclidean norm below this exists (1/max|Hⱼⱼ| at exit).
    pub norm_bound: Real,
    pub iterations: u64,
}

/// |Σ aᵢxᵢ| at the precision of the inputs.
pub fn relation_residual(coeffs: &[i64], xs: &[Real]) -> Real {
    let bits = xs.iter().map(|x| x.prec()).max().unwrap_or(64);
    let mut s = Float::new(bits);
    for (a, x) in coeffs.iter().zip(xs) {
        s += Float::with_val(bits, x * *a);
    }
    s.abs()
}

fn normalise(mut v: Vec<Integer>) -> Vec<Integer> {
    let mut g = Integer::new();
    for a in &v {
        g.gcd_mut(a);
    }
    if g > 1 {
        for a in v.iter_mut() {
            *a /= &g;
        }
    }
    if let Some(first) = v.iter().find(|a| **a != 0) {
        if *first < 0 {
            for a in v.iter_mut() {
                *a = -a.clone();
            }
        }
    }
    v
}

fn nint(x: &Float) -> Integer {
    let mut r = x.clone();
    r.round_mut();
    r.to_integer().expect("finite")
}

/// PSLQ over the reals `xs`: looks for integers aᵢ, not all zero, with
/// |aᵢ| ≤ `max_coeff` and Σ aᵢxᵢ ≈ 0.
///
/// H and y are kept as floats at working precision; A and B are exact
/// integers. Detection threshold is 10^(8 − digits) on the unit-normalised
/// vector. Without a hit, the loop stops once 1/max|Hⱼⱼ| exceeds
/// √n·max_coeff, which excludes every relation in the search box.
pub fn pslq(xs: &[Real], ctx: &PrecisionContext, max_coeff: u64) -> Result<IntegerRelation> {
    let n = xs.len();
    if n < 2 {
        return Err(Error::domain("pslq", "need at least two values"));
    }
    if xs.iter().any(|x| x.is_zero() || !x.is_finite()) {
        return Err(Error::domain("pslq", "inputs must be finite and nonzero"));
    }
    let bits = ctx.bits();
    let digits = ctx.digits() as i32;
    let gamma = Float::with_val(bits, Float::with_val(bits, 4) / 3u32).sqrt();
    let threshold = ctx.pow10(8 - digits);
    let xmax = xs.iter().map(|x| Float::with_val(bits, x.abs_ref())).fold(Float::new(bits), |a, b| a.max(&b));
    let accept = Float::with_val(bits, &threshold * &xmax);
    let exclusion = Float::with_val(bits, (n as f64).sqrt()) * max_coeff;
    let coeff_cap = Integer::from(max_coeff);
    // entries of B beyond this size carry no information at this precision
    let b_cap_bits = bits.saturating_sub(24);

    // x / ‖x‖
    let mut norm = Float::new(bits);
    for v in xs {
        norm += Float::with_val(bits, v.square_ref());
    }
    let norm = norm.sqrt();
    let x: Vec<Float> = xs.iter().map(|v| Float::with_val(bits, v / &norm)).collect();

    // s_j = ‖x_j..‖
    let mut s = vec![Float::new(bits); n];
    let mut acc = Float::new(bits);
    for j in (0..n).rev() {
        acc += Float::with_val(bits, x[j].square_ref());
        s[j] = Float::with_val(bits, acc.sqrt_ref());
    }
    let mut y = x.clone();
    let mut h = vec![vec![Float::new(bits); n - 1]; n];
    for i in 0..n {
        for j in 0..(n - 1).min(i + 1) {
            if i == j {
                h[i][j] = Float::with_val(bits, &s[j + 1] / &s[j]);
            } else {
                let den = Float::with_val(bits, &s[j] * &s[j + 1]);
                h[i][j] = -Float::with_val(bits, &x[i] * &x[j]) / den;
            }
        }
    }
    let mut a: Vec<Vec<Integer>> = (0..n).map(|i| (0..n).map(|j| Integer::from((i == j) as u8)).collect()).collect();
    let mut b = a.clone();

    let reduce = |i: usize, j: usize, h: &mut Vec<Vec<Float>>, y: &mut Vec<Float>, a: &mut Vec<Vec<Integer>>, b: &mut Vec<Vec<Integer>>| {
        if h[j][j].is_zero() {
            return;
        }
        let q = Float::with_val(bits, &h[i][j] / &h[j][j]);
        let t = nint(&q);
        if t == 0 {
            return;
        }
        let tf = Float::with_val(bits, &t);
        let yi = Float::with_val(bits, &y[i] * &tf);
        y[j] += yi;
        for k in 0..=j {
            let d = Float::with_val(bits, &h[j][k] * &tf);
            h[i][k] -= d;
        }
        for k in 0..n {
            let d = Integer::from(&a[j][k] * &t);
            a[i][k] -= d;
            let e = Integer::from(&b[k][i] * &t);
            b[k][j] += e;
        }
    };

    for i in 1..n {
        for j in (0..i).rev() {
            reduce(i, j, &mut h, &mut y, &mut a, &mut b);
        }
    }

    let max_iter = 20_000u64 * n as u64;
    for iter in 1..=max_iter {
        // m maximising γ^(i+1)|H_ii|
        let mut m = 0;
        let mut best = Float::new(bits);
        let mut gp = gamma.clone();
        for i in 0..n - 1 {
            let v = Float::with_val(bits, h[i][i].abs_ref()) * &gp;
            if v > best {
                best = v;
                m = i;
            }
            gp *= &gamma;
        }
        y.swap(m, m + 1);
        a.swap(m, m + 1);
        h.swap(m, m + 1);
        for row in b.iter_mut() {
            row.swap(m, m + 1);
        }
        if m + 2 < n {
            let t0 = Float::with_val(bits, &h[m][m]).hypot(&h[m][m + 1]);
            if !t0.is_zero() {
                let t1 = Float::with_val(bits, &h[m][m] / &t0);
                let t2 = Float::with_val(bits, &h[m][m + 1] / &t0);
                for row in h.iter_mut().skip(m) {
                    let t3 = row[m].clone();
                    let t4 = row[m + 1].clone();
                    row[m] = Float::with_val(bits, &t1 * &t3) + Float::with_val(bits, &t2 * &t4);
                    row[m + 1] = Float::with_val(bits, &t1 * &t4) - Float::with_val(bits, &t2 * &t3);
                }
            }
        }
        for i in m + 1..n {
            for j in (0..(i).min(m + 2)).rev() {
                reduce(i, j, &mut h, &mut y, &mut a, &mut b);
            }
        }

        // columns of B with |y_j| below threshold are candidates, smallest
        // |y_j| first; near-zero H entries can leave noise columns beside the
        // true relation
        let mut order: Vec<(usize, Float)> =
            y.iter().enumerate().map(|(j, v)| (j, Float::with_val(bits, v.abs_ref()))).filter(|p| p.1 < threshold).collect();
        order.sort_by(|p, q| p.1.partial_cmp(&q.1).expect("finite"));
        for (jmin, _) in order {
            let col: Vec<Integer> = normalise((0..n).map(|k| b[k][jmin].clone()).collect());
            if col.iter().all(|c| c.clone().abs() <= coeff_cap) {
                let coeffs: Vec<i64> = col.iter().map(|c| c.to_i64().expect("bounded by max_coeff")).collect();
                let residual = relation_residual(&coeffs, xs);
                if residual < accept {
                    let hmax = (0..n - 1).map(|j| Float::with_val(bits, h[j][j].abs_ref())).fold(Float::new(bits), |p, q| p.max(&q));
                    let norm_bound = if hmax.is_zero() { Float::new(bits) } else { hmax.recip() };
                    return Ok(IntegerRelation {
                        coeffs,
                        residual: ctx.real(residual),
                        max_coeff,
                        found: true,
                        norm_bound,
                        iterations: iter,
                    });
                }
            }
        }

        let hmax = (0..n - 1).map(|j| Float::with_val(bits, h[j][j].abs_ref())).fold(Float::new(bits), |p, q| p.max(&q));
        if hmax.is_zero() {
            return Err(Error::PrecisionExhausted { iterations: iter });
        }
        let bound = hmax.recip();
        if bound > exclusion {
            return Ok(IntegerRelation {
                coeffs: vec![],
                residual: ctx.zero(),
                max_coeff,
                found: false,
                norm_bound: bound,
                iterations: iter,
            });
        }
        let big = b.iter().flatten().any(|v| v.significant_bits() > b_cap_bits);
        if big {
            return Err(Error::PrecisionExhausted { iterations: iter });
        }
    }
    Err(Error::PrecisionExhausted { iterations: max_iter })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_ratio() {
        let ctx = PrecisionContext::new(30).unwrap();
        let r = pslq(&[ctx.real(1), ctx.real(3)], &ctx, 100).unwrap();
        assert!(r.found);
        assert_eq!(r.coeffs, vec![3, -1]);
    }

    #[test]
    fn logarithms() {
        let ctx = PrecisionContext::new(40).unwrap();
        let xs = [ctx.real(2).ln(), ctx.real(3).ln(), ctx.real(6).ln()];
        let r = pslq(&xs, &ctx, 100).unwrap();
        assert_eq!(r.coeffs, vec![1, 1, -1]);
        let hi = ctx.widened(40);
        let xs2 = [hi.real(2).ln(), hi.real(3).ln(), hi.real(6).ln()];
        assert!(relation_residual(&r.coeffs, &xs2) < hi.pow10(-(2 * 40 - 12)));
    }

    #[test]
    fn exclusion_without_relation() {
        let ctx = PrecisionContext::new(40).unwrap();
        let xs = [ctx.pi(), ctx.real(1).exp(), ctx.sqrt(2)];
        let r = pslq(&xs, &ctx, 50).unwrap();
        assert!(!r.found);
        assert!(r.norm_bound > 50);
    }

    #[test]
    fn rejects_bad_input() {
        let ctx = PrecisionContext::new(30).unwrap();
        assert!(pslq(&[ctx.real(1)], &ctx, 10).is_err());
        assert!(pslq(&[ctx.real(1), ctx.zero()], &ctx, 10).is_err());
    }
}

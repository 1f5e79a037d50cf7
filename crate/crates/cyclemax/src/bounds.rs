//! Closed-form upper and lower estimates on cycle counts.
//!
//! Two kinds of quantities live here.  Exact integers: the maximum-product
//! function Π(n,m) and the bounds assembled from it, evaluated in arbitrary
//! precision and floored from exact rationals.  Logarithmic estimates: f64
//! values of ln(bound) carrying an explicit direction, used only to derive
//! n-range cutoffs, never for decision comparisons that the exact forms can
//! make.

use crate::cycles::{factorial, turan_cycle_count};
use crate::{Error, Result};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// Margin applied to every log-space comparison: a difference smaller than
/// this is treated as inconclusive rather than a strict inequality.
pub const LOG_MARGIN: f64 = 1e-6;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sense {
    Lower,
    Upper,
}

/// A natural-log estimate that knows which side of the true value it is on.
/// Only upper-vs-lower comparisons are meaningful, and [`LogBound`] refuses
/// the others.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct LogBound {
    ln_value: f64,
    sense: Sense,
}

impl LogBound {
    pub fn upper(ln_value: f64) -> Self {
        LogBound {
            ln_value,
            sense: Sense::Upper,
        }
    }

    pub fn lower(ln_value: f64) -> Self {
        LogBound {
            ln_value,
            sense: Sense::Lower,
        }
    }

    pub fn ln_value(&self) -> f64 {
        self.ln_value
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    /// True when `self` (an upper estimate) sits below `other` (a lower
    /// estimate) by more than the safety margin, proving the bounded
    /// quantity is strictly smaller.
    pub fn decisively_below(&self, other: &LogBound) -> Result<bool> {
        if self.sense != Sense::Upper || other.sense != Sense::Lower {
            return Err(Error::BoundSense(
                "only an upper estimate can be tested below a lower estimate".into(),
            ));
        }
        Ok(self.ln_value < other.ln_value - LOG_MARGIN)
    }
}

/// Natural log of a big integer, accurate to f64 precision.
pub fn ln_big(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 64 {
        (x.to_u64().unwrap() as f64).ln()
    } else {
        let shift = bits - 64;
        let top = (x >> shift).to_u64().unwrap();
        (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// ln(n!) from the exact factorial; reference value for the sandwich tests.
pub fn ln_factorial_exact(n: usize) -> f64 {
    ln_big(&factorial(n))
}

/// Two-sided closed-form bracket of ln(x!) for real x ≥ 1.  The gap between
/// the sides is exactly 1/(12x).
pub fn ln_factorial_bounds(x: f64) -> Result<(f64, f64)> {
    if !(x >= 1.0) {
        return Err(Error::OutOfRange(format!(
            "factorial bracket needs x >= 1, got {x}"
        )));
    }
    let lo = x * x.ln() - x + 0.5 * (2.0 * std::f64::consts::PI * x).ln();
    Ok((lo, lo + 1.0 / (12.0 * x)))
}

/// Maximum product of positive integers c₁, c₂, … with cᵢ ≤ n−i summing
/// to m, together with the arguments it was computed for.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PiValue {
    pub n: usize,
    pub m: usize,
    pub value: BigUint,
}

fn choose2(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Closed-form evaluation of Π(n,m).
///
/// Three regimes: at the full edge budget the caps force the factorial; in
/// the sparse regime the optimum is all threes plus a small remainder; in
/// between, the optimum has a factorial tail of length s−1 topped by t
/// copies of s+1 and the rest s, and only a handful of s values are feasible
/// for a given m, so they are scanned exactly.
pub fn pi_max_product(n: usize, m: usize) -> Result<PiValue> {
    if n < 3 || m < 2 || m > choose2(n) {
        return Err(Error::OutOfRange(format!(
            "maximum product needs n >= 3 and 2 <= m <= n(n-1)/2, got n={n} m={m}"
        )));
    }
    let value = if m == choose2(n) {
        factorial(n - 1)
    } else if m <= 3 * n - 7 {
        let three = BigUint::from(3u32);
        match m % 3 {
            0 => three.pow((m / 3) as u32),
            1 => three.pow(((m - 4) / 3) as u32) * 4u32,
            _ => three.pow(((m - 2) / 3) as u32) * 2u32,
        }
    } else {
        let mut best = BigUint::zero();
        for s in 3..n - 1 {
            let base = (n - s) * s + s * (s - 1) / 2 - 1;
            if m < base {
                continue;
            }
            let t = m - base;
            if t > n - s - 1 {
                continue;
            }
            let v = BigUint::from(s as u64 + 1).pow(t as u32)
                * BigUint::from(s as u64).pow((n - s - t) as u32)
                * factorial(s - 1);
            best = best.max(v);
        }
        best
    };
    Ok(PiValue { n, m, value })
}

/// Independent oracle for [`pi_max_product`]: exhaustive search over
/// nonincreasing cap-respecting sequences.  Exponential; refuses n > 14.
pub fn pi_brute_force(n: usize, m: usize) -> Result<BigUint> {
    if n > 14 {
        return Err(Error::OutOfRange(format!(
            "brute-force maximum product limited to n <= 14, got {n}"
        )));
    }
    if n < 3 || m < 2 || m > choose2(n) {
        return Err(Error::OutOfRange(format!(
            "maximum product needs n >= 3 and 2 <= m <= n(n-1)/2, got n={n} m={m}"
        )));
    }
    fn rec(i: usize, n: usize, rem: usize, prod: &BigUint, maxc: usize, best: &mut BigUint) {
        if rem == 0 {
            if prod > best {
                *best = prod.clone();
            }
            return;
        }
        if i >= n {
            return;
        }
        let cap = (n - i).min(rem).min(maxc);
        for c in 1..=cap {
            rec(i + 1, n, rem - c, &(prod * c as u64), c, best);
        }
    }
    let mut best = BigUint::zero();
    rec(1, n, m, &BigUint::one(), n - 1, &mut best);
    Ok(best)
}

/// Which Π argument the successor-product edge bound uses: `Reduced` is the
/// bound as stated for graphs (the first vertex's successors exclude
/// itself), `Full` is the weaker program form used by the feasibility
/// screens.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EdgeBoundForm {
    Reduced,
    Full,
}

/// ⌊Π(n−1,m)·n²/(2g)⌋: successor-product bound on the cycle count of an
/// n-vertex, m-edge graph with girth g.
pub fn edge_bound(n: usize, m: usize, g: usize) -> Result<BigUint> {
    edge_bound_with_form(n, m, g, EdgeBoundForm::Reduced)
}

pub fn edge_bound_with_form(n: usize, m: usize, g: usize, form: EdgeBoundForm) -> Result<BigUint> {
    if n < 4 || g < 3 || m < 2 || m > choose2(n) {
        return Err(Error::OutOfRange(format!(
            "edge bound needs n >= 4, g >= 3, 2 <= m <= n(n-1)/2, got n={n} m={m} g={g}"
        )));
    }
    let pi_n = match form {
        EdgeBoundForm::Reduced => n - 1,
        EdgeBoundForm::Full => n,
    };
    // Π is nondecreasing in its edge budget, so clamping an over-full budget
    // to the maximum keeps this an upper bound.
    let m_eff = m.min(choose2(pi_n));
    let pi = pi_max_product(pi_n, m_eff)?;
    Ok(pi.value * (n * n) as u64 / (2 * g) as u64)
}

/// Variant of the successor-product bound for δ-regular graphs: the first
/// factor is at most δ and later factors at most δ−1 (a successor is spent
/// on each earlier vertex).  Exhaustive over capped nonincreasing factor
/// sequences; only practical for small m.
pub fn edge_bound_degree_capped(n: usize, m: usize, delta: usize, g: usize) -> Result<BigUint> {
    if n < 4 || g < 3 || delta < 2 || m > 64 {
        return Err(Error::OutOfRange(format!(
            "capped edge bound needs n >= 4, g >= 3, delta >= 2 and m <= 64, got n={n} m={m} delta={delta} g={g}"
        )));
    }
    let caps: Vec<usize> = (0..n - 1)
        .map(|i| (n - 1 - i).min(if i == 0 { delta } else { delta - 1 }))
        .collect();
    fn rec(i: usize, rem: usize, prod: &BigUint, caps: &[usize], best: &mut BigUint) {
        if prod > best {
            *best = prod.clone();
        }
        if i >= caps.len() || rem == 0 {
            return;
        }
        let cap = caps[i].min(rem);
        // Factors of one never increase the product.
        for v in (2..=cap).rev() {
            rec(i + 1, rem - v, &(prod * v as u64), caps, best);
        }
    }
    let mut best = BigUint::one();
    rec(0, m, &BigUint::one(), &caps, &mut best);
    Ok(best * (n * n) as u64 / (2 * g) as u64)
}

/// Upper log estimate on the cycle count of a δ-regular graph via the
/// Bregman-Minc permanent bound: each row of A+I has sum δ+1, so
/// perm(A+I) ≤ ((δ+1)!)^{n/(δ+1)} and the cycle count is at most half that.
pub fn regular_perm_cycle_bound_log(n: usize, delta: usize) -> Result<LogBound> {
    if n < 1 || delta + 1 > n {
        return Err(Error::OutOfRange(format!(
            "regular permanent bound needs 0 <= delta < n, got n={n} delta={delta}"
        )));
    }
    let ln = n as f64 / (delta + 1) as f64 * ln_factorial_exact(delta + 1) - 2f64.ln();
    Ok(LogBound::upper(ln))
}

/// The saddle-point parameter of the dense-regime edge estimate.
pub fn alpha(n: usize, m: usize) -> Result<f64> {
    check_dense_regime(n, m)?;
    let nf = n as f64;
    Ok(1.0 - (1.0 - 1.0 / nf - 2.0 * (m as f64 + 1.0) / (nf * nf)).sqrt())
}

fn check_dense_regime(n: usize, m: usize) -> Result<()> {
    if n < 4 {
        return Err(Error::OutOfRange(format!("need n >= 4, got {n}")));
    }
    if !(3 * n - 7 < m && m < choose2(n)) {
        return Err(Error::OutsideDenseRegime(format!(
            "need 3n-7 < m < n(n-1)/2, got n={n} m={m}"
        )));
    }
    Ok(())
}

/// Closed-form log version of the edge bound, valid in the dense regime
/// 3n−7 < m < C(n,2); outside it the exact [`edge_bound`] must be used.
pub fn edge_bound_log(n: usize, m: usize, g: usize) -> Result<LogBound> {
    check_dense_regime(n, m)?;
    if g < 3 {
        return Err(Error::OutOfRange(format!("need g >= 3, got {g}")));
    }
    let a = alpha(n, m)?;
    let nf = n as f64;
    let ln = nf * nf.ln() - (a - a.ln()) * nf + 2.5 * nf.ln() + 0.5 * a.ln()
        + 0.5 * (std::f64::consts::PI / 2.0).ln()
        - (g as f64).ln()
        + 1.0 / (12.0 * a * nf);
    Ok(LogBound::upper(ln))
}

/// ⌊qⁿ·((n/p)!)ᵖ·n/(2g)⌋: cycle bound for graphs homomorphic to a
/// q-regular base on p vertices (n divisible by p).
pub fn hmorph_bound(n: usize, p: usize, q: usize, g: usize) -> Result<BigUint> {
    check_hmorph_args(n, p, q, g)?;
    let v = BigUint::from(q as u64).pow(n as u32) * factorial(n / p).pow(p as u32) * n as u64;
    Ok(v / (2 * g) as u64)
}

fn check_hmorph_args(n: usize, p: usize, q: usize, g: usize) -> Result<()> {
    if p < 1 || q < 1 || g < 3 || n < p || n % p != 0 {
        return Err(Error::OutOfRange(format!(
            "homomorphism bound needs p >= 1, q >= 1, g >= 3, n a positive multiple of p, got n={n} p={p} q={q} g={g}"
        )));
    }
    Ok(())
}

/// Log version of [`hmorph_bound`] with the factorial replaced by its upper
/// closed-form bracket.
pub fn hmorph_bound_log(n: usize, p: usize, q: usize, g: usize) -> Result<LogBound> {
    check_hmorph_args(n, p, q, g)?;
    let (nf, pf) = (n as f64, p as f64);
    let ln = nf * (q as f64).ln()
        + nf * (nf / pf).ln()
        - nf
        + pf / 2.0 * (nf / pf).ln()
        + pf / 2.0 * (2.0 * std::f64::consts::PI).ln()
        + pf * pf / (12.0 * nf)
        + (nf / (2.0 * g as f64)).ln();
    Ok(LogBound::upper(ln))
}

/// Closed-form lower log estimate on the cycle count of the balanced
/// complete bipartite graph.
pub fn turan_log_lower(n: usize) -> Result<LogBound> {
    if n < 4 {
        return Err(Error::OutOfRange(format!(
            "balanced bipartite log estimate needs n >= 4, got {n}"
        )));
    }
    let nf = n as f64;
    let ln = nf * nf.ln() - (1.0 + 2f64.ln()) * nf + std::f64::consts::PI.ln();
    Ok(LogBound::lower(ln))
}

/// Exact ln of the balanced complete bipartite cycle count.
pub fn turan_log_exact(n: usize) -> Result<f64> {
    Ok(ln_big(&turan_cycle_count(n)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sandwich_brackets_exact_factorials() {
        for n in 1..=200 {
            let exact = ln_factorial_exact(n);
            let (lo, hi) = ln_factorial_bounds(n as f64).unwrap();
            let tol = 1e-12 * exact.abs().max(1.0);
            assert!(lo <= exact + tol, "lower side fails at {n}");
            assert!(hi >= exact - tol, "upper side fails at {n}");
            // Up to one rounding ulp of lo.
            assert!((hi - lo - 1.0 / (12.0 * n as f64)).abs() < 1e-10);
        }
        assert!(ln_factorial_bounds(0.5).is_err());
    }

    #[test]
    fn pi_oracle_equivalence() {
        for n in 3..=12 {
            for m in 2..=choose2(n) {
                assert_eq!(
                    pi_max_product(n, m).unwrap().value,
                    pi_brute_force(n, m).unwrap(),
                    "n={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn pi_full_budget_is_factorial() {
        for n in 3..=30 {
            assert_eq!(
                pi_max_product(n, choose2(n)).unwrap().value,
                factorial(n - 1)
            );
        }
        assert!(pi_max_product(5, 11).is_err());
        assert!(pi_max_product(5, 1).is_err());
    }

    #[test]
    fn edge_bound_examples() {
        assert_eq!(edge_bound(5, 6, 4).unwrap(), BigUint::from(18u32));
        assert!(edge_bound(3, 2, 4).is_err());
        assert!(edge_bound(5, 20, 4).is_err());
        // The full form never undercuts the reduced form.
        for n in 4..=10 {
            for m in 2..=choose2(n) {
                let full = edge_bound_with_form(n, m, 4, EdgeBoundForm::Full).unwrap();
                let reduced = edge_bound(n, m, 4).unwrap();
                assert!(full >= reduced, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn log_bound_sense_discipline() {
        let up = LogBound::upper(10.0);
        let lo = LogBound::lower(20.0);
        assert!(up.decisively_below(&lo).unwrap());
        assert!(lo.decisively_below(&up).is_err());
        assert!(up.decisively_below(&up).is_err());
        let close = LogBound::upper(20.0 - 1e-9);
        assert!(!close.decisively_below(&lo).unwrap());
    }

    #[test]
    fn turan_log_lower_is_below_exact() {
        for n in 4..=30 {
            let lo = turan_log_lower(n).unwrap();
            assert!(lo.ln_value() <= turan_log_exact(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn hmorph_log_dominates_exact_value() {
        let exact = ln_big(&hmorph_bound(40, 5, 2, 4).unwrap());
        let log = hmorph_bound_log(40, 5, 2, 4).unwrap();
        assert!(log.ln_value() >= exact - 1e-9 * exact.abs());
        assert!(hmorph_bound(41, 5, 2, 4).is_err());
    }

    #[test]
    fn dense_regime_guard() {
        assert!(matches!(
            edge_bound_log(20, 10, 4),
            Err(Error::OutsideDenseRegime(_))
        ));
        assert!(edge_bound_log(20, 100, 4).is_ok());
        assert!(alpha(20, 100).unwrap() > 0.0);
    }

    #[test]
    fn regular_perm_bound_examples() {
        // 12 vertices, 4-regular: the bound dips below the balanced
        // bipartite count 113865.
        let b = regular_perm_cycle_bound_log(12, 4).unwrap();
        let t = LogBound::lower(turan_log_exact(12).unwrap());
        assert!(b.decisively_below(&t).unwrap());
    }

    use crate::Error;
}

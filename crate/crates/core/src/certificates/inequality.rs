//! The pointwise comparison 1 − q^{−1/(n−1)} ≤ (q − 1)/(n − 1) and the
//! Bernoulli inequality behind it.

use serde::Serialize;

use crate::output::ext_f64;

/// Both sides of the comparison at one value of q.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IntegrandComparison {
    #[serde(serialize_with = "ext_f64")]
    pub lhs: f64,
    #[serde(serialize_with = "ext_f64")]
    pub rhs: f64,
    /// q = 0: the left side is −∞ and the comparison holds trivially.
    pub vacuous: bool,
    pub holds: bool,
}

/// (1 − q^{−1/(n−1)}, (q − 1)/(n − 1)) for q ∈ [0, +∞], n ≥ 2.
///
/// The left side is evaluated as −expm1(−log q/(n−1)) with log1p near
/// q = 1, so both sides keep full relative accuracy where they nearly
/// coincide.
pub fn integrand_comparison(q: f64, n: usize) -> IntegrandComparison {
    assert!(n >= 2, "dimension must be at least 2");
    let m = (n - 1) as f64;
    if q.is_nan() || q < 0.0 {
        return IntegrandComparison { lhs: f64::NAN, rhs: f64::NAN, vacuous: false, holds: false };
    }
    if q == 0.0 {
        return IntegrandComparison { lhs: f64::NEG_INFINITY, rhs: -1.0 / m, vacuous: true, holds: true };
    }
    if q == f64::INFINITY {
        return IntegrandComparison { lhs: 1.0, rhs: f64::INFINITY, vacuous: false, holds: true };
    }
    let log_q = if (0.5..=2.0).contains(&q) { (q - 1.0).ln_1p() } else { q.ln() };
    let lhs = -(-log_q / m).exp_m1();
    let rhs = (q - 1.0) / m;
    IntegrandComparison { lhs, rhs, vacuous: false, holds: lhs <= rhs }
}

/// Both sides of (1 + λ)ⁿ ≥ 1 + nλ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BernoulliCheck {
    pub lhs: f64,
    pub rhs: f64,
    /// lhs ≥ rhs, allowing one unit in the last place of rhs.
    pub holds_within_ulp: bool,
}

/// Bernoulli's inequality for λ ≥ −1 and a nonnegative integer n.
pub fn bernoulli_check(lambda: f64, n: u32) -> BernoulliCheck {
    let s = 1.0 + lambda;
    let lhs = s.powi(n as i32);
    let rhs = 1.0 + n as f64 * lambda;
    let ulp = ulp(rhs);
    BernoulliCheck { lhs, rhs, holds_within_ulp: lambda >= -1.0 && lhs >= rhs - ulp }
}

fn ulp(x: f64) -> f64 {
    let a = x.abs();
    if !a.is_finite() {
        return 0.0;
    }
    if a == 0.0 {
        return f64::from_bits(1);
    }
    f64::from_bits(a.to_bits() + 1) - a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let c = integrand_comparison(1.0, 3);
        assert_eq!((c.lhs, c.rhs, c.holds), (0.0, 0.0, true));
        let c = integrand_comparison(4.0, 2);
        assert_eq!((c.lhs, c.rhs), (0.75, 3.0));
        let c = integrand_comparison(f64::INFINITY, 4);
        assert_eq!((c.lhs, c.rhs, c.holds), (1.0, f64::INFINITY, true));
        let c = integrand_comparison(0.0, 3);
        assert!(c.vacuous && c.holds && c.lhs == f64::NEG_INFINITY && c.rhs == -0.5);
    }

    #[test]
    fn near_one() {
        for k in 1..200 {
            let q = 1.0 + (k as f64 - 100.0) * 1e-9;
            for n in 2..=6 {
                assert!(integrand_comparison(q, n).holds, "q = {q}, n = {n}");
            }
        }
    }

    #[test]
    fn bernoulli_edges() {
        assert!(bernoulli_check(-1.0, 5).holds_within_ulp);
        assert!(bernoulli_check(0.0, 0).holds_within_ulp);
        assert!(bernoulli_check(3.0, 12).holds_within_ulp);
        assert!(!bernoulli_check(-1.5, 3).holds_within_ulp);
        let b = bernoulli_check(1.0, 3);
        assert_eq!((b.lhs, b.rhs), (8.0, 4.0));
    }
}

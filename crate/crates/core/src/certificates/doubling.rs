//! Nondecreasing weights φ: [a, ∞) → [0, ∞) with φ(2t) ≤ γ φ(t) for t ≥ T.

use serde::Serialize;

use super::Verdict;
use crate::error::{input, Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum DoublingFamily {
    /// t^α
    Power { alpha: f64 },
    /// log t
    Log,
    /// t^α + log^β t
    PowerPlusLog { alpha: f64, beta: f64 },
    /// t^α · log^β t
    PowerTimesLog { alpha: f64, beta: f64 },
    /// Piecewise-linear through (t, φ) points, constant beyond the last one.
    Table { points: Vec<(f64, f64)> },
}

impl DoublingFamily {
    /// Parses `unit`, `power:α`, `log`, `power+log:α,β`, `power*log:α,β`.
    pub fn parse(text: &str) -> Result<Self> {
        let (name, args) = text.split_once(':').unwrap_or((text, ""));
        let nums = || -> Result<Vec<f64>> {
            args.split(',')
                .filter(|s| !s.is_empty())
                .map(|s| s.trim().parse::<f64>().map_err(|_| Error::Parse { position: name.len() + 2, message: format!("bad number {s:?}") }))
                .collect()
        };
        let want = |k: usize| -> Result<Vec<f64>> {
            let v = nums()?;
            if v.len() == k {
                Ok(v)
            } else {
                Err(Error::Parse { position: 1, message: format!("{name} takes {k} parameter(s), got {}", v.len()) })
            }
        };
        match name.trim() {
            "unit" | "one" => Ok(DoublingFamily::Power { alpha: 0.0 }),
            "power" => Ok(DoublingFamily::Power { alpha: want(1)?[0] }),
            "log" => Ok(DoublingFamily::Log),
            "power+log" => {
                let v = want(2)?;
                Ok(DoublingFamily::PowerPlusLog { alpha: v[0], beta: v[1] })
            }
            "power*log" => {
                let v = want(2)?;
                Ok(DoublingFamily::PowerTimesLog { alpha: v[0], beta: v[1] })
            }
            other => Err(Error::Parse { position: 1, message: format!("unknown weight family {other:?}") }),
        }
    }

    fn uses_log(&self) -> bool {
        !matches!(self, DoublingFamily::Power { .. } | DoublingFamily::Table { .. })
    }
}

/// A doubling weight with declared constant γ above the threshold T.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DoublingFunction {
    pub family: DoublingFamily,
    /// Start of the domain [a, ∞).
    pub a: f64,
    pub gamma: f64,
    pub threshold: f64,
}

impl DoublingFunction {
    /// Validates the parameters and samples monotonicity on [a, 2³²a].
    pub fn new(family: DoublingFamily, a: f64, gamma: f64, threshold: f64) -> Result<Self> {
        if !(a > 0.0 && a.is_finite()) {
            return input(format!("domain start a must be positive, got {a}"));
        }
        if !(gamma > 0.0 && gamma.is_finite()) {
            return input(format!("doubling constant must be positive, got {gamma}"));
        }
        if !(threshold >= a && threshold.is_finite()) {
            return input(format!("threshold T = {threshold} must lie in [a, ∞) with a = {a}"));
        }
        if family.uses_log() && a < 1.0 {
            return input("logarithmic weights need a >= 1");
        }
        if let DoublingFamily::Table { points } = &family {
            if points.len() < 2 || points.windows(2).any(|w| !(w[0].0 < w[1].0)) || points.iter().any(|p| !(p.1 >= 0.0)) {
                return input("weight tables need increasing abscissae and nonnegative values");
            }
        }
        let phi = DoublingFunction { family, a, gamma, threshold };
        let mut prev = phi.eval(a);
        for k in 1..=256 {
            let t = a * 2f64.powf(32.0 * k as f64 / 256.0);
            let v = phi.eval(t);
            if !(v >= 0.0) || v < prev * (1.0 - 1e-12) {
                return input(format!("weight is not nonnegative and nondecreasing near t = {t}"));
            }
            prev = v;
        }
        Ok(phi)
    }

    /// φ ≡ 1 with γ = 1.
    pub fn unit() -> Self {
        DoublingFunction { family: DoublingFamily::Power { alpha: 0.0 }, a: 1.0, gamma: 1.0, threshold: 1.0 }
    }

    pub fn is_unit(&self) -> bool {
        self.family == DoublingFamily::Power { alpha: 0.0 }
    }

    /// φ(t); NaN below the domain start.
    pub fn eval(&self, t: f64) -> f64 {
        if !(t >= self.a) {
            return f64::NAN;
        }
        match &self.family {
            DoublingFamily::Power { alpha } => {
                if *alpha == 0.0 {
                    1.0
                } else {
                    t.powf(*alpha)
                }
            }
            DoublingFamily::Log => t.ln(),
            DoublingFamily::PowerPlusLog { alpha, beta } => t.powf(*alpha) + t.ln().powf(*beta),
            DoublingFamily::PowerTimesLog { alpha, beta } => t.powf(*alpha) * t.ln().powf(*beta),
            DoublingFamily::Table { points } => {
                let i = points.partition_point(|p| p.0 <= t);
                if i == 0 {
                    points[0].1
                } else if i == points.len() {
                    points[i - 1].1
                } else {
                    let (t0, v0) = points[i - 1];
                    let (t1, v1) = points[i];
                    v0 + (v1 - v0) * (t - t0) / (t1 - t0)
                }
            }
        }
    }

    pub fn label(&self) -> String {
        match &self.family {
            DoublingFamily::Power { alpha } if *alpha == 0.0 => "1".into(),
            DoublingFamily::Power { alpha } => format!("t^{alpha}"),
            DoublingFamily::Log => "log t".into(),
            DoublingFamily::PowerPlusLog { alpha, beta } => format!("t^{alpha} + log^{beta} t"),
            DoublingFamily::PowerTimesLog { alpha, beta } => format!("t^{alpha} log^{beta} t"),
            DoublingFamily::Table { points } => format!("table({} points)", points.len()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DoublingCheck {
    pub verdict: Verdict,
    pub worst_ratio: f64,
    pub worst_t: f64,
}

/// Largest φ(2t)/φ(t) over `samples` geometric points of [T, 2³²T].
pub fn check_doubling(phi: &DoublingFunction, samples: usize) -> Result<DoublingCheck> {
    if samples < 16 {
        return input(format!("doubling check needs at least 16 samples, got {samples}"));
    }
    let mut worst = (f64::NEG_INFINITY, phi.threshold);
    for k in 0..samples {
        let t = phi.threshold * 2f64.powf(32.0 * k as f64 / (samples - 1) as f64);
        let (num, den) = (phi.eval(2.0 * t), phi.eval(t));
        let ratio = if den > 0.0 {
            num / den
        } else if num == 0.0 {
            1.0
        } else {
            f64::INFINITY
        };
        if ratio > worst.0 {
            worst = (ratio, t);
        }
    }
    let verdict = if worst.0 <= phi.gamma * (1.0 + 1e-12) { Verdict::Holds } else { Verdict::Fails };
    Ok(DoublingCheck { verdict, worst_ratio: worst.0, worst_t: worst.1 })
}

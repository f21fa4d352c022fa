//! Brute-force Monte Carlo integration over balls, annuli and lenses.
//!
//! Used as an oracle independent of the quadrature routes in
//! [`crate::means`] and [`crate::beltrami`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{input, Result};
use crate::fields::ScalarField;
use crate::geometry::dist;

/// Integration region for the oracle.
#[derive(Debug, Clone, PartialEq)]
pub enum Region {
    Ball { center: Vec<f64>, radius: f64 },
    /// inner < |x − center| < outer
    Annulus { center: Vec<f64>, inner: f64, outer: f64 },
    /// D(ζ, ε) ∩ 𝔻 in the plane, |ζ| = 1.
    Lens { zeta: [f64; 2], eps: f64 },
}

impl Region {
    pub fn dim(&self) -> usize {
        match self {
            Region::Ball { center, .. } | Region::Annulus { center, .. } => center.len(),
            Region::Lens { .. } => 2,
        }
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        match self {
            Region::Ball { center, radius } => dist(x, center) < *radius,
            Region::Annulus { center, inner, outer } => {
                let d = dist(x, center);
                *inner < d && d < *outer
            }
            Region::Lens { zeta, eps } => dist(x, zeta) < *eps && x[0] * x[0] + x[1] * x[1] < 1.0,
        }
    }

    /// Axis-aligned bounding box (lower, upper).
    fn bounding_box(&self) -> (Vec<f64>, Vec<f64>) {
        match self {
            Region::Ball { center, radius: r } | Region::Annulus { center, outer: r, .. } => {
                (center.iter().map(|c| c - r).collect(), center.iter().map(|c| c + r).collect())
            }
            Region::Lens { zeta, eps } => {
                let lo = zeta.iter().map(|c| (c - eps).max(-1.0)).collect();
                let hi = zeta.iter().map(|c| (c + eps).min(1.0)).collect();
                (lo, hi)
            }
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match self {
            Region::Ball { center, radius } => center.len() >= 2 && *radius > 0.0 && radius.is_finite(),
            Region::Annulus { center, inner, outer } => {
                center.len() >= 2 && *inner >= 0.0 && inner < outer && outer.is_finite()
            }
            Region::Lens { zeta, eps } => {
                ((zeta[0] * zeta[0] + zeta[1] * zeta[1]).sqrt() - 1.0).abs() <= 1e-12 && *eps > 0.0 && *eps < 2.0
            }
        };
        if ok {
            Ok(())
        } else {
            input(format!("region {self:?} has zero measure or is malformed"))
        }
    }
}

/// Monte Carlo estimate with its standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleEstimate {
    pub value: f64,
    pub std_error: f64,
    pub samples: usize,
    pub seed: u64,
}

impl OracleEstimate {
    /// |value − reference| ≤ max(rel · |reference|, k standard errors).
    pub fn agrees_with(&self, reference: f64, rel: f64, k: f64) -> bool {
        (self.value - reference).abs() <= (rel * reference.abs()).max(k * self.std_error)
    }
}

/// ∫_region f dm by uniform sampling of the region's bounding box.
pub fn monte_carlo(f: impl Fn(&[f64]) -> f64, region: &Region, samples: usize, seed: u64) -> Result<OracleEstimate> {
    region.validate()?;
    if samples < 1000 {
        return input(format!("oracle needs at least 1000 samples, got {samples}"));
    }
    let (lo, hi) = region.bounding_box();
    let volume: f64 = lo.iter().zip(&hi).map(|(a, b)| b - a).product();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = vec![0.0; lo.len()];
    let (mut sum, mut sum_sq) = (0.0, 0.0);
    for _ in 0..samples {
        for (k, xk) in x.iter_mut().enumerate() {
            *xk = rng.random_range(lo[k]..hi[k]);
        }
        if region.contains(&x) {
            let v = f(&x);
            sum += v;
            sum_sq += v * v;
        }
    }
    let n = samples as f64;
    let mean = sum / n;
    let var = ((sum_sq / n - mean * mean) * n / (n - 1.0)).max(0.0);
    Ok(OracleEstimate { value: volume * mean, std_error: volume * (var / n).sqrt(), samples, seed })
}

/// Oracle integral of a field over a region.
pub fn oracle_integral(field: &ScalarField, region: &Region, samples: usize, seed: u64) -> Result<OracleEstimate> {
    if field.dim() != region.dim() {
        return input(format!("field has dimension {}, region {}", field.dim(), region.dim()));
    }
    monte_carlo(|x| field.eval(x), region, samples, seed)
}

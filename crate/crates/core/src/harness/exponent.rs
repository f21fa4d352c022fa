use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

use crate::error::{input, Error, Result};
use crate::fields::{eval_map, BenchmarkMap};
use crate::geometry::{dist, norm};

/// Least-squares fit of log max_u |f(x0 + r u) − f(x0)| against log r.
#[derive(Debug, Clone, Serialize)]
pub struct ExponentFit {
    pub center: Vec<f64>,
    pub radii: Vec<f64>,
    pub displacements: Vec<f64>,
    pub slope: f64,
    /// log Ĉ
    pub intercept: f64,
    pub residual_rms: f64,
    pub directions: usize,
}

/// Unit directions: 64 on the circle, 256 Fibonacci points on S², and
/// 256 seeded Gaussian directions above that.
pub fn sample_directions(n: usize) -> Vec<Vec<f64>> {
    use std::f64::consts::PI;
    match n {
        2 => (0..64).map(|k| {
            let t = 2.0 * PI * k as f64 / 64.0;
            vec![t.cos(), t.sin()]
        }).collect(),
        3 => {
            let m = 256;
            let golden = PI * (3.0 - 5f64.sqrt());
            (0..m)
                .map(|k| {
                    let z = 1.0 - (2.0 * k as f64 + 1.0) / m as f64;
                    let s = (1.0 - z * z).sqrt();
                    let t = golden * k as f64;
                    vec![s * t.cos(), s * t.sin(), z]
                })
                .collect()
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_d1e5);
            (0..256)
                .map(|_| {
                    let v: Vec<f64> = (0..n).map(|_| StandardNormal.sample(&mut rng)).collect();
                    let r = norm(&v);
                    v.into_iter().map(|c| c / r).collect()
                })
                .collect()
        }
    }
}

/// `count` radii spaced geometrically from `lo` to `hi`.
pub fn geometric_radii(lo: f64, hi: f64, count: usize) -> Result<Vec<f64>> {
    if !(lo > 0.0 && lo < hi && hi.is_finite()) || count < 2 {
        return input(format!("need 0 < lo < hi and at least two radii, got {lo}:{hi}:{count}"));
    }
    let step = (hi / lo).ln() / (count - 1) as f64;
    Ok((0..count).map(|k| if k + 1 == count { hi } else { lo * (step * k as f64).exp() }).collect())
}

pub fn empirical_holder_exponent(f: &BenchmarkMap, x0: &[f64], radii: &[f64]) -> Result<ExponentFit> {
    let n = f.dim();
    if x0.len() != n {
        return input(format!("center has dimension {}, map has {n}", x0.len()));
    }
    if radii.len() < 8 {
        return input(format!("an exponent fit needs at least 8 radii, got {}", radii.len()));
    }
    if radii.iter().any(|r| !(*r > 0.0 && r.is_finite())) {
        return input("radii must be positive and finite");
    }
    let dirs = sample_directions(n);
    let fx0 = eval_map(f, x0);
    let mut displacements = Vec::with_capacity(radii.len());
    let mut x = vec![0.0; n];
    for &r in radii {
        let mut worst: f64 = 0.0;
        for u in &dirs {
            for k in 0..n {
                x[k] = x0[k] + r * u[k];
            }
            worst = worst.max(dist(&eval_map(f, &x), &fx0));
        }
        if !(worst > 0.0) {
            return Err(Error::Degenerate(format!("no displacement at radius {r}")));
        }
        displacements.push(worst);
    }
    let xs: Vec<f64> = radii.iter().map(|r| r.ln()).collect();
    let ys: Vec<f64> = displacements.iter().map(|d| d.ln()).collect();
    let m = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / m;
    let my = ys.iter().sum::<f64>() / m;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    if !(sxx > 0.0) {
        return Err(Error::Degenerate("radii must not all coincide".into()));
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let residual_rms = (xs.iter().zip(&ys).map(|(x, y)| (y - intercept - slope * x).powi(2)).sum::<f64>() / m).sqrt();
    Ok(ExponentFit {
        center: x0.to_vec(),
        radii: radii.to_vec(),
        displacements,
        slope,
        intercept,
        residual_rms,
        directions: dirs.len(),
    })
}

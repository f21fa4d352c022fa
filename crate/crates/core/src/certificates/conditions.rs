//! Evaluation of the integral conditions on a grid of radii.

use num_complex::Complex64;

use super::{ConditionId, ConditionReport, DoublingFunction, DEFAULT_GRID_POINTS};
use crate::error::{input, Result};
use crate::fields::ScalarField;
use crate::geometry::sphere_measure;
use crate::means::{dyadic_grid, half_disk_mean, validate_grid, MeanEngine};

fn grid_or_default(grid: Option<&[f64]>, eps0: f64) -> Result<Vec<f64>> {
    if !(eps0 > 0.0 && eps0.is_finite()) {
        return input(format!("ε0 must be positive, got {eps0}"));
    }
    let g = grid.map_or_else(|| dyadic_grid(eps0, DEFAULT_GRID_POINTS), <[f64]>::to_vec);
    validate_grid(&g, eps0)?;
    Ok(g)
}

/// F(t) = ∫_t^{ε0} (α − q_{x0}(r)^{−1/(n−1)}) dr/r on the grid.
///
/// With α = 1 the report is tagged as the Lipschitz condition.
pub fn dini_condition(q: &ScalarField, x0: &[f64], alpha: f64, eps0: f64, grid: Option<&[f64]>) -> Result<ConditionReport> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return input(format!("α must lie in (0, 1], got {alpha}"));
    }
    let grid = grid_or_default(grid, eps0)?;
    let engine = MeanEngine::for_dim(q.dim())?;
    let p = -1.0 / (q.dim() - 1) as f64;
    let values = engine.cumulative_log_integral(q, x0, eps0, &grid, |_, m| alpha - m.powf(p))?;
    let id = if alpha == 1.0 { ConditionId::Lipschitz } else { ConditionId::Dini };
    Ok(ConditionReport::limsup(id, grid, values))
}

/// F(r) = ∫_{r<|x−x0|<ε0} (Q − 1)/|x − x0|ⁿ dm = ω_{n−1} ∫_r^{ε0} (q − 1) dr/r.
pub fn fmv_integral_condition(q: &ScalarField, x0: &[f64], eps0: f64, grid: Option<&[f64]>) -> Result<ConditionReport> {
    let grid = grid_or_default(grid, eps0)?;
    let engine = MeanEngine::for_dim(q.dim())?;
    let omega = sphere_measure(q.dim());
    let values = engine.cumulative_log_integral(q, x0, eps0, &grid, |_, m| omega * (m - 1.0))?;
    Ok(ConditionReport::limsup(ConditionId::KernelIntegral, grid, values))
}

/// Ball means (1/(Ωₙεⁿ)) ∫_{B(x0,ε)} Q dm on the grid.
pub fn ball_mean_condition(q: &ScalarField, x0: &[f64], eps0: f64, grid: Option<&[f64]>) -> Result<ConditionReport> {
    let grid = grid_or_default(grid, eps0)?;
    let engine = MeanEngine::for_dim(q.dim())?;
    let values = grid.iter().map(|&e| engine.ball(q, x0, e)).collect::<Result<Vec<_>>>()?;
    Ok(ConditionReport::limsup(ConditionId::BallMean, grid, values))
}

/// Weighted ball means φ(1/ε)/(Ωₙεⁿ) ∫_{B(x0,ε)} Q dm on the grid.
pub fn weighted_condition(q: &ScalarField, x0: &[f64], phi: &DoublingFunction, eps0: f64, grid: Option<&[f64]>) -> Result<ConditionReport> {
    let grid = grid_or_default(grid, eps0)?;
    let engine = MeanEngine::for_dim(q.dim())?;
    let values = grid.iter().map(|&e| engine.weighted_ball(q, x0, e, phi)).collect::<Result<Vec<_>>>()?;
    Ok(ConditionReport::limsup(ConditionId::WeightedBallMean, grid, values))
}

/// Half-disk means of K at the given boundary points; each grid value is
/// the maximum over the points, and the estimate is the maximum over the
/// whole grid.
pub fn boundary_condition(k: &ScalarField, zetas: &[Complex64], eps0: f64, grid: Option<&[f64]>) -> Result<ConditionReport> {
    if !(eps0 > 0.0 && eps0 < 1.0) {
        return input(format!("ε0 must lie in (0, 1), got {eps0}"));
    }
    if zetas.is_empty() {
        return input("need at least one boundary point");
    }
    let grid = grid_or_default(grid, eps0)?;
    let mut values = Vec::with_capacity(grid.len());
    for &e in &grid {
        let mut worst = f64::NEG_INFINITY;
        for &z in zetas {
            worst = worst.max(half_disk_mean(k, z, e)?);
        }
        values.push(worst);
    }
    Ok(ConditionReport::sup(ConditionId::BoundaryHalfDisk, grid, values))
}

/// `count` equally spaced points on the unit circle, starting at 1.
pub fn circle_points(count: usize) -> Vec<Complex64> {
    (0..count).map(|k| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / count as f64)).collect()
}

//! Spherical, ball, weighted and half-disk means of a dilatation field, and
//! the radial annulus integrals built from them.
//!
//! Volume integrals are reduced to one-dimensional integrals over the
//! radius of spherical means and evaluated by adaptive Simpson in the
//! variable u = log r, where the kernels dr/r become du.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::certificates::DoublingFunction;
use crate::error::{input, Error, Result};
use crate::fields::ScalarField;
use crate::geometry::{dist, lens_rule, sphere_measure, UnitSphereRule};
use crate::integrate::{adaptive_simpson, SimpsonOptions};
use crate::output::{csv_pairs, ext_f64_seq};
use crate::sampling::{monte_carlo, OracleEstimate, Region};

/// Seed of the Monte Carlo sphere rules used for n ≥ 4.
pub const DEFAULT_SEED: u64 = 0x51_5eed;

/// Default sphere resolution: circle nodes for n = 2, azimuthal nodes for
/// n = 3, Monte Carlo directions for n ≥ 4.
pub fn default_resolution(n: usize) -> usize {
    match n {
        2 => 256,
        3 => 64,
        _ => 4096,
    }
}

/// Gauss–Legendre order per direction for the lens rule.
const LENS_ORDER: usize = 48;

/// Reusable sphere rule plus quadrature options for one dimension.
#[derive(Debug, Clone)]
pub struct MeanEngine {
    rule: UnitSphereRule,
    opts: SimpsonOptions,
}

impl MeanEngine {
    pub fn new(n: usize, resolution: usize, seed: u64) -> Result<Self> {
        Ok(MeanEngine { rule: UnitSphereRule::new(n, resolution, seed)?, opts: SimpsonOptions::default() })
    }

    pub fn for_dim(n: usize) -> Result<Self> {
        Self::new(n, default_resolution(n), DEFAULT_SEED)
    }

    pub fn with_options(mut self, opts: SimpsonOptions) -> Self {
        self.opts = opts;
        self
    }

    pub fn dim(&self) -> usize {
        self.rule.dim()
    }

    pub fn resolution(&self) -> usize {
        self.rule.len()
    }

    pub fn options(&self) -> SimpsonOptions {
        self.opts
    }

    fn check(&self, q: &ScalarField, x0: &[f64], r: f64) -> Result<()> {
        if q.dim() != self.dim() {
            return input(format!("field has dimension {}, engine {}", q.dim(), self.dim()));
        }
        if !(r > 0.0) || !r.is_finite() {
            return input(format!("radius must be positive and finite, got {r}"));
        }
        q.check_ball(x0, r)
    }

    /// q_{x0}(r) without domain checks; NaN if the field misbehaves.
    fn mean_raw(&self, q: &ScalarField, x0: &[f64], r: f64) -> f64 {
        self.rule.average(x0, r, |x| q.eval(x))
    }

    /// q_{x0}(r) = (1/(ω_{n−1} r^{n−1})) ∫_{S(x0,r)} Q dH^{n−1}.
    pub fn spherical(&self, q: &ScalarField, x0: &[f64], r: f64) -> Result<f64> {
        self.check(q, x0, r)?;
        finite_or_inf(self.mean_raw(q, x0, r))
    }

    /// (1/(Ωₙεⁿ)) ∫_{B(x0,ε)} Q dm = n ∫₀¹ uⁿ⁻¹ q(εu) du.
    pub fn ball(&self, q: &ScalarField, x0: &[f64], eps: f64) -> Result<f64> {
        self.check(q, x0, eps)?;
        let n = self.dim() as i32;
        let g = |u: f64| {
            let w = n as f64 * u.powi(n - 1);
            if w == 0.0 {
                return 0.0;
            }
            w * self.mean_raw(q, x0, eps * u)
        };
        finite_or_inf(adaptive_simpson(g, 0.0, 1.0, self.opts).value)
    }

    /// φ(1/ε)/(Ωₙεⁿ) ∫_{B(x0,ε)} Q dm.
    pub fn weighted_ball(&self, q: &ScalarField, x0: &[f64], eps: f64, phi: &DoublingFunction) -> Result<f64> {
        if !(eps > 0.0) || 1.0 / eps < phi.a {
            return input(format!("1/ε = {} lies below the weight's domain start {}", 1.0 / eps, phi.a));
        }
        let m = self.ball(q, x0, eps)?;
        let w = phi.eval(1.0 / eps);
        Ok(if m == 0.0 { 0.0 } else { w * m })
    }

    /// ∫_{ε<|x−x0|<ε0} φ(1/|x−x0|) Q(x) / |x−x0|ⁿ dm
    /// = ω_{n−1} ∫_ε^{ε0} φ(1/r) q(r) dr/r. `phi = None` means φ ≡ 1.
    pub fn annulus_weighted(&self, q: &ScalarField, x0: &[f64], eps: f64, eps0: f64, phi: Option<&DoublingFunction>) -> Result<f64> {
        if !(eps > 0.0 && eps < eps0) {
            return input(format!("need 0 < ε < ε0, got ε = {eps}, ε0 = {eps0}"));
        }
        if let Some(phi) = phi {
            if 1.0 / eps0 < phi.a {
                return input(format!("1/ε0 = {} lies below the weight's domain start {}", 1.0 / eps0, phi.a));
            }
        }
        self.check(q, x0, eps0)?;
        let omega = sphere_measure(self.dim());
        let g = |r: f64, m: f64| {
            let w = phi.map_or(1.0, |p| p.eval(1.0 / r));
            if m == 0.0 {
                0.0
            } else {
                omega * w * m
            }
        };
        let v = self.cumulative_log_integral(q, x0, eps0, &[eps], g)?;
        Ok(v[0])
    }

    /// F(t_k) = ∫_{t_k}^{outer} g(r, q(r)) dr/r for a decreasing grid of
    /// t_k in (0, outer), accumulated over consecutive grid intervals.
    ///
    /// An interval on which two adjacent samples are +∞ makes every later
    /// value +∞ (likewise for −∞).
    pub fn cumulative_log_integral(
        &self,
        q: &ScalarField,
        x0: &[f64],
        outer: f64,
        grid: &[f64],
        g: impl Fn(f64, f64) -> f64,
    ) -> Result<Vec<f64>> {
        validate_grid(grid, outer)?;
        self.check(q, x0, outer)?;
        let mut out = Vec::with_capacity(grid.len());
        let mut acc = 0.0;
        let mut hi = outer;
        for &t in grid {
            let piece = adaptive_simpson(
                |u| {
                    let r = u.exp();
                    g(r, self.mean_raw(q, x0, r))
                },
                t.ln(),
                hi.ln(),
                self.opts,
            );
            if piece.value.is_nan() {
                return Err(Error::Input("field or integrand produced NaN on the radial path".into()));
            }
            acc += piece.value;
            out.push(acc);
            hi = t;
        }
        Ok(out)
    }

    /// Spherical means on an increasing radius grid.
    pub fn profile(&self, q: &ScalarField, x0: &[f64], radii: &[f64]) -> Result<MeanProfile> {
        if radii.is_empty() || radii.windows(2).any(|w| !(w[0] < w[1])) || !(radii[0] > 0.0) {
            return input("profile radii must be positive and strictly increasing");
        }
        self.check(q, x0, radii[radii.len() - 1])?;
        let values = radii.iter().map(|&r| finite_or_inf(self.mean_raw(q, x0, r))).collect::<Result<Vec<_>>>()?;
        Ok(MeanProfile { center: x0.to_vec(), radii: radii.to_vec(), values, resolution: self.resolution() })
    }
}

/// Checks that a grid is positive, strictly decreasing and below `outer`.
pub fn validate_grid(grid: &[f64], outer: f64) -> Result<()> {
    if grid.is_empty() {
        return input("grid is empty");
    }
    if !(grid[0] < outer) || grid.windows(2).any(|w| !(w[1] < w[0])) || !(grid[grid.len() - 1] > 0.0) {
        return input(format!("grid must be positive, strictly decreasing and below {outer}"));
    }
    Ok(())
}

/// The default geometric grid t_k = ε0·2^{−k}, k = 1..count.
pub fn dyadic_grid(eps0: f64, count: usize) -> Vec<f64> {
    (1..=count).map(|k| eps0 * 0.5f64.powi(k as i32)).collect()
}

fn finite_or_inf(v: f64) -> Result<f64> {
    if v.is_nan() {
        Err(Error::Input("field produced NaN or a negative value".into()))
    } else {
        Ok(v)
    }
}

/// Spherical mean with the default rule for the field's dimension.
pub fn spherical_mean(q: &ScalarField, x0: &[f64], r: f64, resolution: usize) -> Result<f64> {
    MeanEngine::new(q.dim(), resolution, DEFAULT_SEED)?.spherical(q, x0, r)
}

pub fn ball_mean(q: &ScalarField, x0: &[f64], eps: f64) -> Result<f64> {
    MeanEngine::for_dim(q.dim())?.ball(q, x0, eps)
}

pub fn weighted_ball_mean(q: &ScalarField, x0: &[f64], eps: f64, phi: &DoublingFunction) -> Result<f64> {
    MeanEngine::for_dim(q.dim())?.weighted_ball(q, x0, eps, phi)
}

pub fn annulus_weighted_integral(q: &ScalarField, x0: &[f64], eps: f64, eps0: f64, phi: Option<&DoublingFunction>) -> Result<f64> {
    MeanEngine::for_dim(q.dim())?.annulus_weighted(q, x0, eps, eps0, phi)
}

/// (1/(πε²)) ∫_{𝔻∩D(ζ,ε)} K dm, normalized by the full disk area.
pub fn half_disk_mean(k: &ScalarField, zeta: Complex64, eps: f64) -> Result<f64> {
    if k.dim() != 2 {
        return input("half-disk means are planar");
    }
    if !(eps > 0.0 && eps < 1.0) {
        return input(format!("ε must lie in (0, 1), got {eps}"));
    }
    let rule = lens_rule(zeta, eps, LENS_ORDER)?;
    let total: f64 = rule.inside.iter().map(|(z, w)| w * k.eval(&[z.re, z.im])).sum();
    finite_or_inf(total / (PI * eps * eps))
}

/// Both sides of ∫_{ε<|x−x0|<ε0} (Q−1)/|x−x0|ⁿ dm = ω_{n−1} ∫_ε^{ε0} (q−1)/r dr.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct FubiniReduction {
    /// Volume side by Monte Carlo over the annulus.
    pub volume: OracleEstimate,
    /// Radial side through spherical means.
    pub radial: f64,
}

impl FubiniReduction {
    /// Agreement within max(rel·|radial|, k standard errors).
    pub fn agrees(&self, rel: f64, k: f64) -> bool {
        self.volume.agrees_with(self.radial, rel, k)
    }
}

/// Volume side with `samples` Monte Carlo points (seeded) and radial side
/// with the given sphere resolution.
pub fn fubini_radial_reduction(
    q: &ScalarField,
    x0: &[f64],
    eps: f64,
    eps0: f64,
    resolution: usize,
    samples: usize,
    seed: u64,
) -> Result<FubiniReduction> {
    let engine = MeanEngine::new(q.dim(), resolution, DEFAULT_SEED)?;
    if !(eps > 0.0 && eps < eps0) {
        return input(format!("need 0 < ε < ε0, got ε = {eps}, ε0 = {eps0}"));
    }
    let omega = sphere_measure(q.dim());
    let radial = engine.cumulative_log_integral(q, x0, eps0, &[eps], |_, m| omega * (m - 1.0))?[0];
    let n = q.dim() as i32;
    let center = x0.to_vec();
    let region = Region::Annulus { center: center.clone(), inner: eps, outer: eps0 };
    let volume = monte_carlo(
        |x| {
            let d = dist(x, &center);
            (q.eval(x) - 1.0) / d.powi(n)
        },
        &region,
        samples,
        seed,
    )?;
    Ok(FubiniReduction { volume, radial })
}

/// Spherical means q_{x0}(r) on a radius grid.
#[derive(Debug, Clone, Serialize)]
pub struct MeanProfile {
    pub center: Vec<f64>,
    pub radii: Vec<f64>,
    #[serde(serialize_with = "ext_f64_seq")]
    pub values: Vec<f64>,
    /// Number of sphere nodes used per radius.
    pub resolution: usize,
}

impl MeanProfile {
    /// CSV with header `r,q`.
    pub fn to_csv(&self) -> String {
        csv_pairs(("r", "q"), self.radii.iter().copied().zip(self.values.iter().copied()))
    }
}

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::coefficient::BeltramiCoefficient;
use crate::error::{input, Error, Result};
use crate::geometry::{lens_rule, polar_annulus_rule, PlanarRule};
use crate::output::ext_f64;

const LENS_ORDER: usize = 48;
const RADIAL_ORDER: usize = 64;
const ANGULAR: usize = 256;

/// Largest 1/|w|² over the circle |w − ζ| = ε, |ζ| = 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InversionWeight {
    pub sampled_max: f64,
    /// 1/(1 − ε)²
    pub bound: f64,
    /// Angle φ (relative to arg ζ) where the sampled maximum occurs.
    pub argmax_angle: f64,
    /// Largest 1/|w|⁴ on the sampled circle.
    pub fourth_power_max: f64,
}

/// Samples w = ζ + ε e^{i(ϑ+φ)} at `samples` equally spaced φ including π.
pub fn inversion_weight_max(eps: f64, samples: usize) -> Result<InversionWeight> {
    if !(eps > 0.0 && eps < 0.5) {
        return input(format!("ε must lie in (0, 1/2), got {eps}"));
    }
    if samples < 4 || !samples.is_multiple_of(2) {
        return input("the circle needs an even number of samples, at least 4");
    }
    let zeta = Complex64::new(1.0, 0.0);
    let mut best = (f64::NEG_INFINITY, 0.0);
    for k in 0..samples {
        let phi = 2.0 * PI * k as f64 / samples as f64;
        let w = zeta + Complex64::from_polar(eps, phi);
        let v = 1.0 / w.norm_sqr();
        if v > best.0 {
            best = (v, phi);
        }
    }
    Ok(InversionWeight {
        sampled_max: best.0,
        bound: 1.0 / ((1.0 - eps) * (1.0 - eps)),
        argmax_angle: best.1,
        fourth_power_max: best.0 * best.0,
    })
}

/// Both sides of a mass comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MassBound {
    #[serde(serialize_with = "ext_f64")]
    pub lhs: f64,
    #[serde(serialize_with = "ext_f64")]
    pub rhs: f64,
    pub ratio: f64,
    pub holds: bool,
}

fn integrate(rule: &PlanarRule, f: impl Fn(Complex64) -> f64) -> f64 {
    rule.iter().map(|(z, w)| w * f(*z)).sum()
}

fn mass(lhs: f64, rhs: f64, strict: bool) -> Result<MassBound> {
    if !lhs.is_finite() || !rhs.is_finite() {
        return Err(Error::Refused { reason: "dilatation mass is not finite on the region".into(), estimate: lhs.max(rhs) });
    }
    let holds = if strict { lhs < rhs } else { lhs <= rhs * (1.0 + 1e-9) };
    Ok(MassBound { lhs, rhs, ratio: lhs / rhs, holds })
}

/// ∫_{D(ζ,ε)} K_{μ_F} dm against 17 ∫_{D(ζ,ε)∩𝔻} K_μ dm, where outside the
/// disk K_{μ_F}(z) = K_μ(1/z̄).
pub fn reflected_mass_bound(mu: &BeltramiCoefficient, zeta: Complex64, eps: f64) -> Result<MassBound> {
    if !(eps > 0.0 && eps < 0.5) {
        return input(format!("ε must lie in (0, 1/2), got {eps}"));
    }
    let rule = lens_rule(zeta, eps, LENS_ORDER)?;
    let inside = integrate(&rule.inside, |z| mu.dilatation(z));
    let outside = integrate(&rule.outside, |z| mu.dilatation(z.conj().inv()));
    mass(inside + outside, 17.0 * inside, true)
}

/// ∫_{1≤|z|≤R} K_{μ_F} dm against R⁴ ∫_𝔻 K_μ dm.
pub fn annulus_mass_bound(mu: &BeltramiCoefficient, r: f64) -> Result<MassBound> {
    if !(r > 1.0 && r.is_finite()) {
        return input(format!("R must exceed 1, got {r}"));
    }
    let ring = polar_annulus_rule(1.0, r, RADIAL_ORDER, ANGULAR)?;
    let disk = polar_annulus_rule(0.0, 1.0, RADIAL_ORDER, ANGULAR)?;
    let lhs = integrate(&ring, |z| mu.dilatation(z.conj().inv()));
    let rhs = r.powi(4) * integrate(&disk, |z| mu.dilatation(z));
    mass(lhs, rhs, false)
}

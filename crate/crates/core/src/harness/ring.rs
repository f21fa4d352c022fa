use serde::Serialize;

use crate::error::{input, Error, Result};
use crate::fields::{BenchmarkMap, ScalarField};
use crate::geometry::{ring_modulus, sphere_measure};
use crate::integrate::{log_radial, SimpsonOptions};
use crate::means::MeanEngine;

/// Both sides of M(f(Γ)) ≤ ∫_A Q ηⁿ dm for the ring family of A(0, r1, r2).
#[derive(Debug, Clone, Serialize)]
pub struct RingCheck {
    /// Modulus of the image ring family.
    pub lhs: f64,
    pub rhs: f64,
    /// ∫_{r1}^{r2} η dr
    pub eta_integral: f64,
    pub image_radii: (f64, f64),
    pub holds: bool,
}

/// η₀(r) = 1/(r log(r2/r1)), the extremal admissible function.
pub fn extremal_eta(r1: f64, r2: f64) -> impl Fn(f64) -> f64 {
    let l = (r2 / r1).ln();
    move |r| 1.0 / (r * l)
}

/// Compares the image modulus with the weighted integral for a radial map
/// centred at the origin.
pub fn verify_ring_inequality(
    f: &BenchmarkMap,
    q: &ScalarField,
    r1: f64,
    r2: f64,
    eta: impl Fn(f64) -> f64,
) -> Result<RingCheck> {
    let n = f.dim();
    if q.dim() != n {
        return input(format!("field has dimension {}, map {n}", q.dim()));
    }
    if !(r1 > 0.0 && r1 < r2 && r2.is_finite()) {
        return input(format!("need 0 < r1 < r2, got {r1}, {r2}"));
    }
    let (Some(p1), Some(p2)) = (f.radial_profile(r1), f.radial_profile(r2)) else {
        return Err(Error::Unsupported("image moduli are only available for radial maps".into()));
    };
    let opts = SimpsonOptions::default();
    let eta_integral = log_radial(|r| r * eta(r), r1, r2, opts).value;
    if !(eta_integral >= 1.0 - 1e-9) {
        return input(format!("η is not admissible: its integral over [r1, r2] is {eta_integral}"));
    }
    let lhs = ring_modulus(n, p1, p2)?;
    let omega = sphere_measure(n);
    let engine = MeanEngine::for_dim(n)?;
    let x0 = vec![0.0; n];
    let rhs = engine.cumulative_log_integral(q, &x0, r2, &[r1], |r, m| {
        let e = eta(r);
        if m == 0.0 || e == 0.0 {
            0.0
        } else {
            omega * (r * e).powi(n as i32) * m
        }
    })?[0];
    Ok(RingCheck { lhs, rhs, eta_integral, image_radii: (p1, p2), holds: lhs <= rhs * (1.0 + 1e-9) })
}

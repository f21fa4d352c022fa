//! Constant pipelines: from a verified integral condition to an explicit
//! Hölder or Lipschitz certificate, with every intermediate constant kept.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;
use serde::Serialize;

use super::conditions::dini_condition;
use super::inequality::integrand_comparison;
use super::{
    assess, check_doubling, DoublingFunction, HolderCertificate, Location, Metric, Provenance, Source, Verdict,
    DEFAULT_GRID_POINTS,
};
use crate::error::{input, Error, Result};
use crate::fields::ScalarField;
use crate::geometry::{ball_volume, complement_ball_chordal_diameter, sphere_measure};
use crate::integrate::adaptive_simpson;
use crate::means::{dyadic_grid, validate_grid, MeanEngine};
use crate::output::{ext_f64, ext_f64_seq, to_json};

/// Relative headroom when comparing a computed integral with a bound that
/// it may meet with equality.
const HEADROOM: f64 = 1e-9;

fn refused<T>(reason: impl Into<String>, estimate: f64) -> Result<T> {
    Err(Error::Refused { reason: reason.into(), estimate })
}

fn grid_or_default(grid: Option<&[f64]>, eps0: f64) -> Result<Vec<f64>> {
    let g = grid.map_or_else(|| dyadic_grid(eps0, DEFAULT_GRID_POINTS), <[f64]>::to_vec);
    validate_grid(&g, eps0)?;
    Ok(g)
}

fn planar(q: &ScalarField) -> Result<()> {
    if q.dim() != 2 {
        return input(format!("this bound is planar, field has dimension {}", q.dim()));
    }
    Ok(())
}

/// ∫_{t_k}^{outer} g(r) dr for a decreasing grid, accumulated piecewise
/// in the variable u = log r.
fn cumulative_plain(outer: f64, grid: &[f64], g: impl Fn(f64) -> f64) -> Vec<f64> {
    let mut acc = 0.0;
    let mut hi = outer;
    grid.iter()
        .map(|&t| {
            acc += adaptive_simpson(|u| {
                let r = u.exp();
                r * g(r)
            }, t.ln(), hi.ln(), Default::default())
            .value;
            hi = t;
            acc
        })
        .collect()
}

/// Dyadic radii ε0·2^{−j}, j = 0..J, with the last one at or below `floor`.
fn dyadic_cover(eps0: f64, floor: f64) -> Vec<f64> {
    let j = (eps0 / floor).log2().ceil().max(0.0) as usize;
    (0..=j).map(|k| eps0 * 0.5f64.powi(k as i32)).collect()
}

/// The default α_n of the interior distortion estimate: 32 in the plane,
/// none in higher dimensions.
pub fn default_alpha_n(n: usize) -> Option<f64> {
    (n == 2).then_some(32.0)
}

/// How the dimensional constant C_n of the interior estimate is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InteriorScale {
    /// C_n = α_n (1 + r0²)/δ with δ the chordal diameter of the complement
    /// of B(0, r0).
    Explicit { alpha_n: f64, r0: f64 },
    /// C_n given directly.
    Folded { c_n: f64 },
}

/// Hölder certificate at an interior point from the Dini-type condition.
///
/// C = (C_n/ε0^α)·exp(M_log), where M_log is the largest value of
/// ∫_t^{ε0} (α − q^{−1/(n−1)}) dr/r over the whole grid (and at least 0).
pub fn holder_certificate_interior(
    q: &ScalarField,
    x0: &[f64],
    alpha: f64,
    eps0: f64,
    scale: InteriorScale,
    grid: Option<&[f64]>,
) -> Result<HolderCertificate> {
    let report = dini_condition(q, x0, alpha, eps0, grid)?;
    if report.verdict != Verdict::Holds {
        return refused(format!("Dini-type condition {} at α = {alpha}", report.verdict.as_str()), report.estimate);
    }
    let m_log = report.grid_max().max(0.0);
    let mut prov = Vec::new();
    let c_n = match scale {
        InteriorScale::Explicit { alpha_n, r0 } => {
            if !(alpha_n > 0.0 && alpha_n.is_finite()) {
                return input(format!("α_n must be positive, got {alpha_n}"));
            }
            let delta = complement_ball_chordal_diameter(r0)?;
            let c_n = alpha_n * (1.0 + r0 * r0) / delta;
            prov.push(Provenance::new("alpha_n", alpha_n, "input"));
            prov.push(Provenance::new("r0", r0, "input"));
            prov.push(Provenance::new("delta", delta, "h(complement of B(0, r0)) = 1 if r0 <= 1 else 2 r0/(1 + r0^2)"));
            prov.push(Provenance::new("C_n", c_n, "alpha_n (1 + r0^2) / delta"));
            c_n
        }
        InteriorScale::Folded { c_n } => {
            if !(c_n > 0.0 && c_n.is_finite()) {
                return input(format!("C_n must be positive, got {c_n}"));
            }
            prov.push(Provenance::new("C_n", c_n, "input"));
            c_n
        }
    };
    let c_tilde = c_n / eps0.powf(alpha);
    let constant = c_tilde * m_log.exp();
    prov.push(Provenance::new("eps0", eps0, "input"));
    prov.push(Provenance::new("C_tilde", c_tilde, "C_n / eps0^alpha"));
    prov.push(Provenance::new("M_log", m_log, "max(0, max_t int_t^eps0 (alpha - q^(-1/(n-1))) dr/r)"));
    prov.push(Provenance::new("C", constant, "C_tilde exp(M_log)"));
    let source = if alpha == 1.0 { Source::InteriorLipschitz } else { Source::InteriorDini };
    HolderCertificate::new(Location::Interior, Some(x0.to_vec()), alpha, constant, eps0, Metric::Euclidean, source, prov)
}

/// One grid radius with both sides of an integral bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundPair {
    pub eps: f64,
    #[serde(serialize_with = "ext_f64")]
    pub lhs: f64,
    #[serde(serialize_with = "ext_f64")]
    pub rhs: f64,
}

impl BoundPair {
    fn holds(&self) -> bool {
        self.lhs <= self.rhs * (1.0 + HEADROOM) || self.lhs <= 0.0 && self.rhs >= 0.0
    }
}

fn pairs_from(grid: &[f64], lhs: &[f64], rhs: impl Fn(f64) -> f64) -> (Vec<BoundPair>, Vec<f64>) {
    let pairs: Vec<BoundPair> = grid.iter().zip(lhs).map(|(&eps, &l)| BoundPair { eps, lhs: l, rhs: rhs(eps) }).collect();
    let violations = pairs.iter().filter(|p| !p.holds()).map(|p| p.eps).collect();
    (pairs, violations)
}

/// Weighted annulus integral against C₁ log(1/ε) on a grid.
#[derive(Debug, Clone, Serialize)]
pub struct Lemma31Report {
    /// Largest weighted ball mean over the dyadic radii ε0 2^{−j}.
    pub c: f64,
    pub gamma: f64,
    pub omega_n: f64,
    /// γ C Ωₙ 2ⁿ / log 2
    pub c1: f64,
    /// Whether the weighted ball means settle on the dyadic radii. When
    /// they keep growing, C is only the largest value seen on the grid.
    pub weighted_mean_stabilized: bool,
    pub pairs: Vec<BoundPair>,
    pub violations: Vec<f64>,
    pub all_hold: bool,
}

impl Lemma31Report {
    pub fn to_json(&self) -> Result<String> {
        to_json(self)
    }
}

/// Checks ∫_{ε<|x−x0|<ε0} φ(1/|x−x0|) Q/|x−x0|ⁿ dm ≤ C₁ log(1/ε) on the grid.
pub fn lemma31_bound(
    q: &ScalarField,
    x0: &[f64],
    phi: &DoublingFunction,
    eps0: f64,
    grid: Option<&[f64]>,
) -> Result<Lemma31Report> {
    if !(eps0 > 0.0 && eps0 < 0.5) {
        return input(format!("ε0 must lie in (0, 1/2), got {eps0}"));
    }
    if phi.a > 1.0 / eps0 || phi.threshold > 1.0 / eps0 {
        return input(format!("the weight must be defined and doubling from 1/ε0 = {} on", 1.0 / eps0));
    }
    let doubling = check_doubling(phi, 64)?;
    if doubling.verdict != Verdict::Holds {
        return refused(format!("weight is not γ-doubling near t = {}", doubling.worst_t), doubling.worst_ratio);
    }
    let grid = grid_or_default(grid, eps0)?;
    let n = q.dim();
    let engine = MeanEngine::for_dim(n)?;
    let radii = dyadic_cover(eps0, grid[grid.len() - 1]);
    let means = radii.iter().map(|&e| engine.weighted_ball(q, x0, e, phi)).collect::<Result<Vec<_>>>()?;
    let c = means.iter().copied().fold(0.0, f64::max);
    if !c.is_finite() {
        return refused("weighted ball means are unbounded", c);
    }
    let omega_n = ball_volume(n);
    let c1 = phi.gamma * c * omega_n * 2f64.powi(n as i32) / LN_2;
    let omega = sphere_measure(n);
    let lhs = engine.cumulative_log_integral(q, x0, eps0, &grid, |r, m| {
        if m == 0.0 {
            0.0
        } else {
            omega * phi.eval(1.0 / r) * m
        }
    })?;
    let (pairs, violations) = pairs_from(&grid, &lhs, |e| c1 * (1.0 / e).ln());
    Ok(Lemma31Report {
        c,
        gamma: phi.gamma,
        omega_n,
        c1,
        weighted_mean_stabilized: assess(&means).stabilized,
        all_hold: violations.is_empty(),
        pairs,
        violations,
    })
}

/// Outcome of checking ∫_{A(z0,ε,ε0)} Q/|z−z0|² dm ≤ C log(ε0/ε).
#[derive(Debug, Clone, Serialize)]
pub struct Condition3Report {
    pub c: f64,
    pub eps0: f64,
    pub pairs: Vec<BoundPair>,
    pub violations: Vec<f64>,
    /// max lhs/rhs over the grid.
    #[serde(serialize_with = "ext_f64")]
    pub worst_ratio: f64,
    pub all_hold: bool,
}

pub fn condition3_check(q: &ScalarField, z0: Complex64, c: f64, eps0: f64, grid: Option<&[f64]>) -> Result<Condition3Report> {
    planar(q)?;
    if !(c > 0.0 && c.is_finite()) {
        return input(format!("C must be positive and finite, got {c}"));
    }
    if !(eps0 > 0.0 && eps0.is_finite()) {
        return input(format!("ε0 must be positive, got {eps0}"));
    }
    let grid = grid_or_default(grid, eps0)?;
    let engine = MeanEngine::for_dim(2)?;
    let lhs = engine.cumulative_log_integral(q, &[z0.re, z0.im], eps0, &grid, |_, m| if m == 0.0 { 0.0 } else { 2.0 * PI * m })?;
    let (pairs, violations) = pairs_from(&grid, &lhs, |e| c * (eps0 / e).ln());
    let worst_ratio = pairs.iter().map(|p| p.lhs / p.rhs).fold(f64::NEG_INFINITY, f64::max);
    Ok(Condition3Report { c, eps0, all_hold: violations.is_empty(), pairs, violations, worst_ratio })
}

/// Chordal Hölder certificate (32/Δ) ε0^{−2π/C} |z − z0|^{2π/C} from the
/// logarithmic annulus condition, without checking the condition.
///
/// The exponent is clamped to 1; the constant uses the clamped exponent,
/// which keeps C·d^α an upper bound for d < ε0.
pub fn cor3_certificate(delta: f64, c: f64, eps0: f64) -> Result<HolderCertificate> {
    log_annulus_inner(None, delta, c, eps0, Vec::new())
}

fn log_annulus_inner(center: Option<Vec<f64>>, delta: f64, c: f64, eps0: f64, mut prov: Vec<Provenance>) -> Result<HolderCertificate> {
    if !(delta > 0.0 && delta <= 1.0) {
        return input(format!("chordal separation Δ must lie in (0, 1], got {delta}"));
    }
    if !(c > 0.0 && c.is_finite()) {
        return input(format!("C must be positive and finite, got {c}"));
    }
    if !(eps0 > 0.0 && eps0.is_finite()) {
        return input(format!("ε0 must be positive, got {eps0}"));
    }
    let raw = 2.0 * PI / c;
    let exponent = raw.min(1.0);
    let constant = 32.0 / delta * eps0.powf(-exponent);
    prov.extend([
        Provenance::new("Delta", delta, "input"),
        Provenance::new("C", c, "input"),
        Provenance::new("eps0", eps0, "input"),
        Provenance::new("raw_exponent", raw, "2 pi / C"),
        Provenance::new("constant", constant, "(32 / Delta) eps0^(-min(1, 2 pi / C))"),
    ]);
    HolderCertificate::new(Location::Interior, center, raw, constant, eps0, Metric::Chordal, Source::LogAnnulus, prov)
}

/// Verifies the logarithmic annulus condition on the grid, then issues
/// the certificate of [`cor3_certificate`] centred at z0.
pub fn cor3_certificate_checked(
    q: &ScalarField,
    z0: Complex64,
    delta: f64,
    c: f64,
    eps0: f64,
    grid: Option<&[f64]>,
) -> Result<HolderCertificate> {
    let check = condition3_check(q, z0, c, eps0, grid)?;
    if !check.all_hold {
        return refused(format!("annulus condition fails at ε = {:?}", check.violations), check.worst_ratio);
    }
    let prov = vec![Provenance::new("condition_worst_ratio", check.worst_ratio, "max_eps lhs / (C log(eps0/eps))")];
    log_annulus_inner(Some(vec![z0.re, z0.im]), delta, c, eps0, prov)
}

/// Distortion bound (32/Δ) exp(−(2π/C) I(|z − z0|)), I(ε) = ∫_ε^{ε0} ψ.
///
/// The hypothesis ∫_{A(z0,ε,ε0)} Q ψ²(|z−z0|) dm ≤ C I(ε) is checked on
/// the grid first. At z = z0 the bound is 0 when I keeps growing along the
/// grid, and otherwise uses I at the finest grid radius.
#[allow(clippy::too_many_arguments)]
pub fn prop3_distortion(
    q: &ScalarField,
    z0: Complex64,
    psi: impl Fn(f64) -> f64,
    c: f64,
    delta: f64,
    eps0: f64,
    z: Complex64,
    grid: Option<&[f64]>,
) -> Result<f64> {
    planar(q)?;
    if !(c > 0.0 && c.is_finite()) {
        return input(format!("C must be positive and finite, got {c}"));
    }
    if !(delta > 0.0 && delta <= 1.0) {
        return input(format!("chordal separation Δ must lie in (0, 1], got {delta}"));
    }
    if !(eps0 > 0.0 && eps0.is_finite()) {
        return input(format!("ε0 must be positive, got {eps0}"));
    }
    let d = (z - z0).norm();
    if d >= eps0 {
        return input(format!("|z − z0| = {d} must be below ε0 = {eps0}"));
    }
    let grid = grid_or_default(grid, eps0)?;
    let engine = MeanEngine::for_dim(2)?;
    let i_grid = cumulative_plain(eps0, &grid, &psi);
    if let Some(k) = i_grid.iter().position(|v| !(*v > 0.0 && v.is_finite())) {
        return input(format!("I(ε) must be positive and finite, got {} at ε = {}", i_grid[k], grid[k]));
    }
    let lhs = engine.cumulative_log_integral(q, &[z0.re, z0.im], eps0, &grid, |r, m| {
        let p = psi(r);
        if m == 0.0 || p == 0.0 {
            0.0
        } else {
            2.0 * PI * r * r * m * p * p
        }
    })?;
    let (_, violations) = pairs_from(&grid, &lhs, |e| {
        let k = grid.iter().position(|&g| g == e).unwrap_or(0);
        c * i_grid[k]
    });
    if !violations.is_empty() {
        let worst = lhs.iter().zip(&i_grid).map(|(l, i)| l / (c * i)).fold(f64::NEG_INFINITY, f64::max);
        return refused(format!("weighted annulus hypothesis fails at ε = {violations:?}"), worst);
    }
    let i_d = if d == 0.0 {
        if assess(&i_grid).verdict == Verdict::Fails {
            return Ok(0.0);
        }
        i_grid[i_grid.len() - 1]
    } else {
        cumulative_plain(eps0, &[d], &psi)[0]
    };
    Ok(32.0 / delta * (-(2.0 * PI / c) * i_d).exp())
}

/// Target-side separation data for the ball-mean certificates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Separation {
    /// Homeomorphism whose image omits a set of chordal diameter ≥ Δ.
    Homeomorphism { delta: f64 },
    /// Open discrete map into B(0, r).
    OpenDiscrete { r: f64 },
}

/// A certificate whose constants are not available in closed form; it
/// records what is computable.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymbolicCertificate {
    pub dim: usize,
    pub center: Vec<f64>,
    pub c: f64,
    /// C Ωₙ 2ⁿ / log 2
    pub c1: f64,
    pub flag: &'static str,
    pub source: Source,
    pub provenance: Vec<Provenance>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum BallMeanOutcome {
    Certificate(HolderCertificate),
    Symbolic(SymbolicCertificate),
}

impl BallMeanOutcome {
    pub fn certificate(&self) -> Option<&HolderCertificate> {
        match self {
            BallMeanOutcome::Certificate(c) => Some(c),
            BallMeanOutcome::Symbolic(_) => None,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        to_json(self)
    }
}

/// Certificate from bounded ball means.
///
/// In the plane the bound on ball means gives the annulus condition with
/// C_eff = 8πC/log 2 (weighted annulus bound with φ ≡ 1, then
/// log(1/ε) ≤ 2 log(ε0/ε) for small ε); that condition is verified on the
/// grid and the exponent is β₂ = 2π/C_eff = log 2/(4C). For n ≥ 3 only the
/// symbolic constant C₁ is returned.
pub fn ball_mean_certificate(
    q: &ScalarField,
    x0: &[f64],
    c: f64,
    eps0: f64,
    separation: Separation,
    grid: Option<&[f64]>,
) -> Result<BallMeanOutcome> {
    if !(c > 0.0) {
        return refused("ball-mean bound C must be positive", c);
    }
    if !c.is_finite() {
        return input("ball-mean bound C must be finite");
    }
    if !(eps0 > 0.0 && eps0 < 1.0) {
        return input(format!("ε0 must lie in (0, 1), got {eps0}"));
    }
    let grid = grid_or_default(grid, eps0)?;
    let n = q.dim();
    let engine = MeanEngine::for_dim(n)?;
    let radii = dyadic_cover(eps0, grid[grid.len() - 1]);
    let sup = radii.iter().map(|&e| engine.ball(q, x0, e)).collect::<Result<Vec<_>>>()?.into_iter().fold(0.0, f64::max);
    if !(sup <= c * (1.0 + HEADROOM)) {
        return refused(format!("ball means exceed C = {c}"), sup);
    }
    let omega_n = ball_volume(n);
    let c1 = c * omega_n * 2f64.powi(n as i32) / LN_2;
    let mut prov = vec![
        Provenance::new("C", c, "input"),
        Provenance::new("ball_mean_sup", sup, "max over eps0 2^-j of ball means"),
        Provenance::new("C1", c1, "C Omega_n 2^n / log 2"),
    ];
    if n != 2 {
        return Ok(BallMeanOutcome::Symbolic(SymbolicCertificate {
            dim: n,
            center: x0.to_vec(),
            c,
            c1,
            flag: "constants-symbolic",
            source: match separation {
                Separation::Homeomorphism { .. } => Source::BallMeanHomeomorphism,
                Separation::OpenDiscrete { .. } => Source::BallMeanOpenDiscrete,
            },
            provenance: prov,
        }));
    }
    let c_eff = 2.0 * c1;
    let z0 = Complex64::new(x0[0], x0[1]);
    let check = condition3_check(q, z0, c_eff, eps0, Some(&grid))?;
    if !check.all_hold {
        return refused(format!("annulus condition with C_eff fails at ε = {:?}", check.violations), check.worst_ratio);
    }
    let raw = 2.0 * PI / c_eff;
    let beta = raw.min(1.0);
    prov.push(Provenance::new("C_eff", c_eff, "2 C1 = 8 pi C / log 2"));
    prov.push(Provenance::new("beta_2", raw, "2 pi / C_eff = log 2 / (4 C)"));
    let (constant, metric, source) = match separation {
        Separation::Homeomorphism { delta } => {
            if !(delta > 0.0 && delta <= 1.0) {
                return input(format!("chordal separation Δ must lie in (0, 1], got {delta}"));
            }
            prov.push(Provenance::new("Delta", delta, "input"));
            (32.0 / delta * eps0.powf(-beta), Metric::Chordal, Source::BallMeanHomeomorphism)
        }
        Separation::OpenDiscrete { r } => {
            let d = complement_ball_chordal_diameter(r)?;
            prov.push(Provenance::new("r", r, "input"));
            prov.push(Provenance::new("delta_r", d, "h(complement of B(0, r))"));
            (32.0 * (1.0 + r * r) / d * eps0.powf(-beta), Metric::Euclidean, Source::BallMeanOpenDiscrete)
        }
    };
    prov.push(Provenance::new("constant", constant, "32/Delta eps0^-beta, or 32 (1 + r^2)/delta_r eps0^-beta"));
    let cert = HolderCertificate::new(Location::Interior, Some(x0.to_vec()), raw, constant, eps0, metric, source, prov)?;
    Ok(BallMeanOutcome::Certificate(cert))
}

/// Annulus integrals at a boundary point against (4πC*/log 2) log(1/ε).
#[derive(Debug, Clone, Serialize)]
pub struct Lemma42Report {
    pub c_star: f64,
    /// Largest disk mean seen on the sampled radii.
    pub sup_mean: f64,
    pub pairs: Vec<BoundPair>,
    pub violations: Vec<f64>,
    pub all_hold: bool,
}

impl Lemma42Report {
    pub fn to_json(&self) -> Result<String> {
        to_json(self)
    }
}

/// Requires sup_{r<δ0} of disk means of Q about z0 to stay below C*
/// (checked on radii ε0 2^{−j} and δ0 2^{−j}), then compares
/// ∫_{A(z0,ε,ε0)} Q/|z−z0|² dm with (4πC*/log 2) log(1/ε).
pub fn lemma42_bound(
    q: &ScalarField,
    z0: Complex64,
    c_star: f64,
    delta0: f64,
    eps0: f64,
    grid: Option<&[f64]>,
) -> Result<Lemma42Report> {
    planar(q)?;
    if (z0.norm() - 1.0).abs() > 1e-12 {
        return input(format!("z0 must lie on the unit circle, |z0| = {}", z0.norm()));
    }
    if !(c_star > 0.0 && c_star.is_finite()) {
        return input(format!("C* must be positive and finite, got {c_star}"));
    }
    if !(delta0 > 0.0 && delta0 < 1.0) {
        return input(format!("δ0 must lie in (0, 1), got {delta0}"));
    }
    if !(eps0 > 0.0 && eps0 <= delta0 && eps0 < 0.5) {
        return input(format!("ε0 must lie in (0, min(δ0, 1/2)), got {eps0}"));
    }
    let grid = grid_or_default(grid, eps0)?;
    let x0 = [z0.re, z0.im];
    let engine = MeanEngine::for_dim(2)?;
    let floor = grid[grid.len() - 1];
    let mut radii = dyadic_cover(eps0, floor);
    radii.extend(dyadic_cover(delta0, floor).into_iter().skip(1));
    let means = radii.iter().map(|&r| engine.ball(q, &x0, r)).collect::<Result<Vec<_>>>()?;
    let sup_mean = means.iter().copied().fold(0.0, f64::max);
    if !(sup_mean < c_star) {
        return refused(format!("disk means reach C* = {c_star}"), sup_mean);
    }
    let lhs = engine.cumulative_log_integral(q, &x0, eps0, &grid, |_, m| if m == 0.0 { 0.0 } else { 2.0 * PI * m })?;
    let k = 4.0 * PI * c_star / LN_2;
    let (pairs, violations) = pairs_from(&grid, &lhs, |e| k * (1.0 / e).ln());
    Ok(Lemma42Report { c_star, sup_mean, all_hold: violations.is_empty(), pairs, violations })
}

/// Constants of the boundary Hölder estimate for a disk self-map whose
/// half-disk means of K_μ stay below C.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundaryCertificate {
    pub c: f64,
    pub eps0: f64,
    /// log 2 / (68 C)
    pub alpha: f64,
    /// min{1/2, ε0²}
    pub delta0: f64,
    /// 64 ε0^{−α}, valid for |z2 − z1| < δ0
    pub boundary_constant: f64,
    /// 2/δ0^α
    pub far_branch: f64,
    /// max{2/δ0^α, 64 ε0^{−α}}, valid for all boundary pairs
    pub global_l: f64,
}

pub fn boundary_holder_certificate(c: f64, eps0: f64) -> Result<BoundaryCertificate> {
    if !(c >= 1.0 && c.is_finite()) {
        return input(format!("C must lie in [1, ∞), got {c}"));
    }
    if !(eps0 > 0.0 && eps0 < 1.0) {
        return input(format!("ε0 must lie in (0, 1), got {eps0}"));
    }
    let alpha = LN_2 / (68.0 * c);
    let delta0 = (eps0 * eps0).min(0.5);
    let boundary_constant = 64.0 * eps0.powf(-alpha);
    let far_branch = 2.0 / delta0.powf(alpha);
    Ok(BoundaryCertificate { c, eps0, alpha, delta0, boundary_constant, far_branch, global_l: far_branch.max(boundary_constant) })
}

impl BoundaryCertificate {
    fn provenance(&self) -> Vec<Provenance> {
        vec![
            Provenance::new("C", self.c, "input"),
            Provenance::new("eps0", self.eps0, "input"),
            Provenance::new("alpha", self.alpha, "log 2 / (68 C)"),
            Provenance::new("delta0", self.delta0, "min{1/2, eps0^2}"),
            Provenance::new("boundary_constant", self.boundary_constant, "64 eps0^-alpha"),
            Provenance::new("far_branch", self.far_branch, "2 / delta0^alpha"),
            Provenance::new("L", self.global_l, "max{2 / delta0^alpha, 64 eps0^-alpha}"),
        ]
    }

    /// |f(z2) − f(z1)| ≤ 64 ε0^{−α} |z2 − z1|^α for boundary pairs closer than δ0.
    pub fn local_certificate(&self) -> Result<HolderCertificate> {
        HolderCertificate::new(
            Location::Boundary,
            None,
            self.alpha,
            self.boundary_constant,
            self.delta0,
            Metric::Euclidean,
            Source::BoundaryLocal,
            self.provenance(),
        )
    }

    /// |f(z2) − f(z1)| ≤ L |z2 − z1|^α for all boundary pairs (|z2 − z1| ≤ 2).
    pub fn global_certificate(&self) -> Result<HolderCertificate> {
        HolderCertificate::new(
            Location::Boundary,
            None,
            self.alpha,
            self.global_l,
            2.0,
            Metric::Euclidean,
            Source::BoundaryGlobal,
            self.provenance(),
        )
    }

    pub fn to_json(&self) -> Result<String> {
        to_json(self)
    }
}

/// Grid values of K·(kernel integral) − (Lipschitz-form Dini integral).
#[derive(Debug, Clone, Serialize)]
pub struct DominationReport {
    /// 1/((n − 1) ω_{n−1})
    pub k: f64,
    pub grid: Vec<f64>,
    #[serde(serialize_with = "ext_f64_seq")]
    pub differences: Vec<f64>,
    #[serde(serialize_with = "ext_f64")]
    pub min: f64,
    pub holds: bool,
}

/// Checks ∫_t^{ε0} (1 − q^{−1/(n−1)}) dr/r ≤ K ∫_{t<|x−x0|<ε0} (Q−1)/|x−x0|ⁿ dm
/// on the grid by integrating the pointwise difference.
pub fn fmv_dominates_dini(q: &ScalarField, x0: &[f64], eps0: f64, grid: Option<&[f64]>) -> Result<DominationReport> {
    if !(eps0 > 0.0 && eps0.is_finite()) {
        return input(format!("ε0 must be positive, got {eps0}"));
    }
    let grid = grid_or_default(grid, eps0)?;
    let n = q.dim();
    let engine = MeanEngine::for_dim(n)?;
    let k = 1.0 / ((n - 1) as f64 * sphere_measure(n));
    let differences = engine.cumulative_log_integral(q, x0, eps0, &grid, |_, m| {
        let c = integrand_comparison(m, n);
        if c.lhs == f64::NEG_INFINITY {
            f64::INFINITY
        } else {
            c.rhs - c.lhs
        }
    })?;
    let min = differences.iter().copied().fold(f64::INFINITY, f64::min);
    Ok(DominationReport { k, grid, holds: min >= -1e-12, differences, min })
}

//! Integral conditions on the dilatation and the explicit Hölder and
//! Lipschitz conclusions drawn from them.
//!
//! A condition of the form limsup_{t→0} F(t) < ∞ is evaluated on a
//! decreasing grid t_k (by default ε0·2^{−k}, k = 1..40). The estimate is
//! the maximum over the last ten grid values and the condition holds only
//! when that estimate is finite and the tail has settled: the last three
//! values agree within 1%, or the last ten never increase.
//! Sup-type conditions report the maximum over the whole grid instead.

mod conditions;
mod doubling;
mod inequality;
mod pipelines;

use serde::Serialize;

pub use conditions::{ball_mean_condition, boundary_condition, circle_points, dini_condition, fmv_integral_condition, weighted_condition};
pub use doubling::{check_doubling, DoublingCheck, DoublingFamily, DoublingFunction};
pub use inequality::{bernoulli_check, integrand_comparison, BernoulliCheck, IntegrandComparison};
pub use pipelines::{
    ball_mean_certificate, boundary_holder_certificate, condition3_check, cor3_certificate, cor3_certificate_checked,
    default_alpha_n, fmv_dominates_dini, holder_certificate_interior, lemma31_bound, lemma42_bound, prop3_distortion,
    BallMeanOutcome, BoundPair, BoundaryCertificate, Condition3Report, DominationReport, InteriorScale, Lemma31Report,
    Lemma42Report, Separation, SymbolicCertificate,
};

use crate::error::{input, Result};
use crate::output::{csv_pairs, ext_f64, ext_f64_seq, to_json};

/// Number of points in the default limsup grid.
pub const DEFAULT_GRID_POINTS: usize = 40;
/// Tail length over which the limsup estimate is taken.
pub const TAIL: usize = 10;
/// Relative spread allowed among the last three grid values.
pub const STABILITY: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

/// Which integral condition a report evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConditionId {
    /// limsup ∫_t^{ε0} (α − q^{−1/(n−1)}) dr/r < ∞
    #[serde(rename = "DINI_11A")]
    Dini,
    /// The same with α = 1.
    #[serde(rename = "LIP_15")]
    Lipschitz,
    /// limsup ∫_{r<|x|<ε0} (Q − 1)/|x|ⁿ dm < ∞
    #[serde(rename = "FMV_17")]
    KernelIntegral,
    /// limsup of ball means ≤ C
    #[serde(rename = "BALLMEAN_1D")]
    BallMean,
    /// limsup of φ(1/ε)-weighted ball means ≤ C
    #[serde(rename = "WEIGHTED_1AA")]
    WeightedBallMean,
    /// sup over ε of half-disk means at boundary points < C
    #[serde(rename = "BOUNDARY_1AE")]
    BoundaryHalfDisk,
}

/// Outcome of evaluating one condition on a grid.
#[derive(Debug, Clone, Serialize)]
pub struct ConditionReport {
    pub id: ConditionId,
    #[serde(serialize_with = "ext_f64")]
    pub estimate: f64,
    pub verdict: Verdict,
    /// Whether the last three grid values agree within 1% or the tail is
    /// nonincreasing.
    pub stabilized: bool,
    /// Grid of t or ε values, decreasing.
    pub grid: Vec<f64>,
    #[serde(serialize_with = "ext_f64_seq")]
    pub values: Vec<f64>,
}

impl ConditionReport {
    pub(crate) fn limsup(id: ConditionId, grid: Vec<f64>, values: Vec<f64>) -> Self {
        let a = assess(&values);
        ConditionReport { id, estimate: a.tail_max, verdict: a.verdict, stabilized: a.stabilized, grid, values }
    }

    /// Same verdict rule, but the estimate is the maximum over the whole grid.
    pub(crate) fn sup(id: ConditionId, grid: Vec<f64>, values: Vec<f64>) -> Self {
        let a = assess(&values);
        let estimate = if a.verdict == Verdict::Fails && a.tail_max == f64::INFINITY { f64::INFINITY } else { a.grid_max };
        ConditionReport { id, estimate, verdict: a.verdict, stabilized: a.stabilized, grid, values }
    }

    /// Largest value over the whole grid.
    pub fn grid_max(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// CSV `t,value`.
    pub fn to_csv(&self) -> String {
        csv_pairs(("t", "value"), self.grid.iter().copied().zip(self.values.iter().copied()))
    }

    pub fn to_json(&self) -> Result<String> {
        to_json(self)
    }
}

pub(crate) struct Assessment {
    pub tail_max: f64,
    pub grid_max: f64,
    pub verdict: Verdict,
    pub stabilized: bool,
}

/// Applies the tail-max and stabilization rule to grid values ordered from
/// the coarsest to the finest t.
pub(crate) fn assess(values: &[f64]) -> Assessment {
    let grid_max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if values.is_empty() {
        return Assessment { tail_max: f64::NAN, grid_max, verdict: Verdict::Inconclusive, stabilized: false };
    }
    if values.contains(&f64::INFINITY) {
        return Assessment { tail_max: f64::INFINITY, grid_max, verdict: Verdict::Fails, stabilized: false };
    }
    let tail = &values[values.len().saturating_sub(TAIL)..];
    let tail_max = tail.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let last = &values[values.len().saturating_sub(3)..];
    let hi = last.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let lo = last.iter().copied().fold(f64::INFINITY, f64::min);
    let scale = last.iter().map(|v| v.abs()).fold(0.0, f64::max);
    let settled = lo.is_finite() && (scale <= 1e-12 || hi - lo <= STABILITY * scale);
    // a tail that only decreases is bounded by its first value
    let stabilized = settled || (tail.len() >= 3 && tail.windows(2).all(|w| w[1] <= w[0]) && lo.is_finite());
    let verdict = if !tail_max.is_finite() {
        Verdict::Inconclusive
    } else if stabilized {
        Verdict::Holds
    } else if tail.windows(2).all(|w| w[1] > w[0]) {
        Verdict::Fails
    } else {
        Verdict::Inconclusive
    };
    Assessment { tail_max, grid_max, verdict, stabilized }
}

/// Result family a certificate comes from, serialized as a short tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Source {
    /// Dini-type condition at an interior point, exponent α.
    #[serde(rename = "THM_1_1")]
    InteriorDini,
    /// The Dini condition with α = 1: Lipschitz at the point.
    #[serde(rename = "COR_2_1")]
    InteriorLipschitz,
    /// Bounded ball means, homeomorphisms omitting a set of chordal size Δ.
    #[serde(rename = "THM_3_1")]
    BallMeanHomeomorphism,
    /// Bounded ball means, open discrete maps into B(0, r).
    #[serde(rename = "THM_3_2")]
    BallMeanOpenDiscrete,
    /// Logarithmic annulus condition in the plane.
    #[serde(rename = "COR_4_1")]
    LogAnnulus,
    /// Boundary points of the disk, |z2 − z1| < δ0.
    #[serde(rename = "LEM_4_3")]
    BoundaryLocal,
    /// Boundary points of the disk, all pairs.
    #[serde(rename = "THM_4_1")]
    BoundaryGlobal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    /// |f(x) − f(x0)| ≤ C |x − x0|^α
    Euclidean,
    /// h(f(x), f(x0)) ≤ C |x − x0|^α
    Chordal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Location {
    Interior,
    Boundary,
}

/// One constant of a pipeline with the formula that produced it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Provenance {
    pub name: String,
    #[serde(serialize_with = "ext_f64")]
    pub value: f64,
    pub formula: String,
}

impl Provenance {
    pub fn new(name: &str, value: f64, formula: &str) -> Self {
        Provenance { name: name.into(), value, formula: formula.into() }
    }
}

/// An explicit statement d(f(x), f(x0)) ≤ C |x − x0|^α for |x − x0| < radius.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HolderCertificate {
    pub location: Location,
    pub center: Option<Vec<f64>>,
    pub exponent: f64,
    /// Exponent before clamping to (0, 1].
    pub raw_exponent: f64,
    pub constant: f64,
    pub validity_radius: f64,
    pub metric: Metric,
    pub source: Source,
    pub provenance: Vec<Provenance>,
}

impl HolderCertificate {
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn new(
        location: Location,
        center: Option<Vec<f64>>,
        raw_exponent: f64,
        constant: f64,
        validity_radius: f64,
        metric: Metric,
        source: Source,
        provenance: Vec<Provenance>,
    ) -> Result<Self> {
        if !(raw_exponent > 0.0) {
            return input(format!("exponent must be positive, got {raw_exponent}"));
        }
        if !(constant > 0.0 && constant.is_finite()) {
            return input(format!("constant must be positive and finite, got {constant}"));
        }
        if !(validity_radius > 0.0) {
            return input(format!("validity radius must be positive, got {validity_radius}"));
        }
        Ok(HolderCertificate {
            location,
            center,
            exponent: raw_exponent.min(1.0),
            raw_exponent,
            constant,
            validity_radius,
            metric,
            source,
            provenance,
        })
    }

    /// C·d^α, the certified bound at distance d.
    pub fn bound(&self, d: f64) -> f64 {
        self.constant * d.powf(self.exponent)
    }

    /// Looks up a provenance entry by name.
    pub fn constant_named(&self, name: &str) -> Option<f64> {
        self.provenance.iter().find(|p| p.name == name).map(|p| p.value)
    }

    pub fn to_json(&self) -> Result<String> {
        to_json(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn assessment_rules() {
        let a = assess(&[1.0; 12]);
        assert_eq!((a.verdict, a.tail_max, a.stabilized), (Verdict::Holds, 1.0, true));
        let grow: Vec<f64> = (1..=40).map(|k| k as f64).collect();
        let a = assess(&grow);
        assert_eq!((a.verdict, a.tail_max), (Verdict::Fails, 40.0));
        let a = assess(&[1.0, f64::INFINITY, 2.0]);
        assert_eq!((a.verdict, a.tail_max), (Verdict::Fails, f64::INFINITY));
        let a = assess(&[0.0, 1e-15, -1e-15]);
        assert_eq!(a.verdict, Verdict::Holds);
        let wobble: Vec<f64> = (0..20).map(|k| if k % 2 == 0 { 1.0 } else { 2.0 }).collect();
        assert_eq!(assess(&wobble).verdict, Verdict::Inconclusive);
    }

    #[test]
    fn certificate_invariants() {
        let c = HolderCertificate::new(Location::Interior, None, 1.7, 3.0, 0.5, Metric::Euclidean, Source::InteriorDini, vec![]).unwrap();
        assert_eq!((c.exponent, c.raw_exponent), (1.0, 1.7));
        assert_eq!(c.bound(0.25), 0.75);
        assert!(HolderCertificate::new(Location::Interior, None, 0.0, 3.0, 0.5, Metric::Euclidean, Source::InteriorDini, vec![]).is_err());
        assert!(HolderCertificate::new(Location::Interior, None, 0.5, f64::INFINITY, 0.5, Metric::Euclidean, Source::InteriorDini, vec![]).is_err());
        assert!(HolderCertificate::new(Location::Interior, None, 0.5, 1.0, 0.0, Metric::Euclidean, Source::InteriorDini, vec![]).is_err());
    }

    #[test]
    fn report_serialization() {
        let r = ConditionReport::limsup(ConditionId::Lipschitz, vec![0.5, 0.25], vec![0.0, f64::INFINITY]);
        let j = r.to_json().unwrap();
        assert!(j.contains("\"LIP_15\"") && j.contains("\"inf\"") && j.contains("\"fails\""));
        assert!(r.to_csv().starts_with("t,value\n5.0000000000000000e-1,0.0000000000000000e0\n"));
    }
}

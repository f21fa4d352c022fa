//! Chordal metric on the compactified space, sphere and ball measures,
//! quadrature rules on spheres, lenses and annuli, and the conformal modulus
//! of the curve family joining the boundary spheres of a ring.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{input, Error, Result};

/// A point of ℝⁿ ∪ {∞}.
#[derive(Debug, Clone, PartialEq)]
pub enum ExtendedPoint {
    Finite(Vec<f64>),
    Infinity,
}

impl ExtendedPoint {
    pub fn finite(coords: Vec<f64>) -> Result<Self> {
        if coords.len() < 2 {
            return input(format!("dimension must be at least 2, got {}", coords.len()));
        }
        Ok(ExtendedPoint::Finite(coords))
    }

    pub fn dim(&self) -> Option<usize> {
        match self {
            ExtendedPoint::Finite(c) => Some(c.len()),
            ExtendedPoint::Infinity => None,
        }
    }
}

impl From<Vec<f64>> for ExtendedPoint {
    fn from(v: Vec<f64>) -> Self {
        ExtendedPoint::Finite(v)
    }
}

pub(crate) fn norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

pub(crate) fn dist(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt()
}

/// Chordal distance h(x, y), always in [0, 1].
pub fn chordal_distance(x: &ExtendedPoint, y: &ExtendedPoint) -> Result<f64> {
    use ExtendedPoint::*;
    match (x, y) {
        (Infinity, Infinity) => Ok(0.0),
        (Finite(p), Infinity) | (Infinity, Finite(p)) => {
            Ok(1.0 / (1.0 + p.iter().map(|v| v * v).sum::<f64>()).sqrt())
        }
        (Finite(p), Finite(q)) => {
            if p.len() != q.len() {
                return input(format!("dimension mismatch: {} vs {}", p.len(), q.len()));
            }
            let np = p.iter().map(|v| v * v).sum::<f64>();
            let nq = q.iter().map(|v| v * v).sum::<f64>();
            Ok(dist(p, q) / ((1.0 + np).sqrt() * (1.0 + nq).sqrt()))
        }
    }
}

/// Largest pairwise chordal distance of a finite point set.
pub fn chordal_diameter(points: &[ExtendedPoint]) -> Result<f64> {
    if points.is_empty() {
        return input("chordal diameter of an empty set");
    }
    let mut best = 0.0f64;
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            best = best.max(chordal_distance(p, q)?);
        }
    }
    Ok(best)
}

/// Chordal diameter of the complement of the ball B(0, r0) in the
/// compactified space.
///
/// For r0 ≤ 1 the complement contains a pair of antipodes of the Riemann
/// sphere, so the diameter is 1. Otherwise it is a cap around ∞ whose widest
/// chord joins antipodal points of |x| = r0, giving 2r0/(1 + r0²).
pub fn complement_ball_chordal_diameter(r0: f64) -> Result<f64> {
    if !(r0 > 0.0) || !r0.is_finite() {
        return input(format!("ball radius must be positive and finite, got {r0}"));
    }
    Ok(if r0 <= 1.0 { 1.0 } else { 2.0 * r0 / (1.0 + r0 * r0) })
}

/// Γ(n/2) for a positive integer n, using the closed forms at integers and
/// half-integers.
pub fn gamma_half(n: usize) -> f64 {
    assert!(n > 0, "gamma_half needs n >= 1");
    let (mut value, mut x) = if n.is_multiple_of(2) { (1.0, 1.0) } else { (PI.sqrt(), 0.5) };
    let target = n as f64 / 2.0;
    while x < target {
        value *= x;
        x += 1.0;
    }
    value
}

/// ω_{n−1}: the (n−1)-measure of the unit sphere in ℝⁿ.
pub fn sphere_measure(n: usize) -> f64 {
    2.0 * PI.powf(n as f64 / 2.0) / gamma_half(n)
}

/// Ωₙ: the volume of the unit ball in ℝⁿ.
pub fn ball_volume(n: usize) -> f64 {
    sphere_measure(n) / n as f64
}

/// Gauss–Legendre nodes and weights on [−1, 1].
pub fn gauss_legendre(order: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(order >= 1);
    let m = order;
    if m == 1 {
        return (vec![0.0], vec![2.0]);
    }
    let mut nodes = vec![0.0; m];
    let mut weights = vec![0.0; m];
    for i in 0..m.div_ceil(2) {
        let mut z = (PI * (i as f64 + 0.75) / (m as f64 + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=m {
                let k = k as f64;
                let p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = m as f64 * (z * p1 - p0) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        nodes[i] = -z;
        nodes[m - 1 - i] = z;
        let w = 2.0 / ((1.0 - z * z) * dp * dp);
        weights[i] = w;
        weights[m - 1 - i] = w;
    }
    (nodes, weights)
}

/// Gauss–Legendre rule mapped to [a, b].
pub(crate) fn gauss_legendre_on(a: f64, b: f64, order: usize) -> Vec<(f64, f64)> {
    let (x, w) = gauss_legendre(order);
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    x.iter().zip(&w).map(|(x, w)| (mid + half * x, half * w)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SphereRuleKind {
    /// Uniform angular grid on the circle (trapezoid rule).
    Trapezoid,
    /// Gauss–Legendre in cos θ times a uniform azimuthal grid.
    ProductGaussLegendre,
    /// Seeded uniform directions with antithetic pairs.
    MonteCarlo { seed: u64 },
}

/// A quadrature rule on the unit sphere S^{n−1}: unit directions and
/// nonnegative weights summing to ω_{n−1}.
#[derive(Debug, Clone)]
pub struct UnitSphereRule {
    dim: usize,
    directions: Vec<f64>,
    weights: Vec<f64>,
    kind: SphereRuleKind,
}

impl UnitSphereRule {
    /// Rule for S^{n−1}. `resolution` is the number of circle nodes (n = 2),
    /// the azimuthal count with half as many polar nodes (n = 3), or the
    /// Monte Carlo sample count rounded up to even (n ≥ 4).
    pub fn new(n: usize, resolution: usize, seed: u64) -> Result<Self> {
        if n < 2 {
            return input(format!("sphere rules need n >= 2, got {n}"));
        }
        if resolution == 0 {
            return input("quadrature resolution must be positive");
        }
        match n {
            2 => {
                let m = resolution;
                let w = 2.0 * PI / m as f64;
                let mut directions = Vec::with_capacity(2 * m);
                for k in 0..m {
                    let t = 2.0 * PI * k as f64 / m as f64;
                    directions.push(t.cos());
                    directions.push(t.sin());
                }
                Ok(UnitSphereRule { dim: 2, directions, weights: vec![w; m], kind: SphereRuleKind::Trapezoid })
            }
            3 => {
                let azimuth = resolution.max(3);
                let polar = (resolution / 2).max(2);
                let (t, wt) = gauss_legendre(polar);
                let dphi = 2.0 * PI / azimuth as f64;
                let mut directions = Vec::with_capacity(3 * polar * azimuth);
                let mut weights = Vec::with_capacity(polar * azimuth);
                for (ct, w) in t.iter().zip(&wt) {
                    let st = (1.0 - ct * ct).sqrt();
                    for k in 0..azimuth {
                        let phi = dphi * k as f64;
                        directions.extend_from_slice(&[st * phi.cos(), st * phi.sin(), *ct]);
                        weights.push(w * dphi);
                    }
                }
                Ok(UnitSphereRule { dim: 3, directions, weights, kind: SphereRuleKind::ProductGaussLegendre })
            }
            _ => {
                let pairs = resolution.div_ceil(2);
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut directions = Vec::with_capacity(2 * pairs * n);
                let mut u = vec![0.0; n];
                for _ in 0..pairs {
                    loop {
                        for c in u.iter_mut() {
                            *c = StandardNormal.sample(&mut rng);
                        }
                        let len = norm(&u);
                        if len > 1e-12 {
                            u.iter_mut().for_each(|c| *c /= len);
                            break;
                        }
                    }
                    directions.extend_from_slice(&u);
                    directions.extend(u.iter().map(|c| -c));
                }
                let count = 2 * pairs;
                let w = sphere_measure(n) / count as f64;
                Ok(UnitSphereRule { dim: n, directions, weights: vec![w; count], kind: SphereRuleKind::MonteCarlo { seed } })
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn kind(&self) -> SphereRuleKind {
        self.kind
    }

    pub fn direction(&self, i: usize) -> &[f64] {
        &self.directions[i * self.dim..(i + 1) * self.dim]
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Weighted average of `f` over S(x0, r), normalized by the actual
    /// weight sum so that constants are reproduced exactly for c = 1.
    pub(crate) fn average(&self, x0: &[f64], r: f64, mut f: impl FnMut(&[f64]) -> f64) -> f64 {
        let mut buf = vec![0.0; self.dim];
        let mut acc = 0.0;
        let mut wsum = 0.0;
        for (i, w) in self.weights.iter().enumerate() {
            let u = self.direction(i);
            for k in 0..self.dim {
                buf[k] = x0[k] + r * u[k];
            }
            acc += w * f(&buf);
            wsum += w;
        }
        acc / wsum
    }

    /// Places the rule on S(x0, r).
    pub fn on_sphere(&self, x0: &[f64], r: f64) -> Result<SphereQuadrature> {
        if !(r > 0.0) || !r.is_finite() {
            return input(format!("sphere radius must be positive, got {r}"));
        }
        if x0.len() != self.dim {
            return input(format!("center has dimension {}, rule has {}", x0.len(), self.dim));
        }
        let scale = r.powi(self.dim as i32 - 1);
        let mut nodes = Vec::with_capacity(self.directions.len());
        for i in 0..self.len() {
            nodes.extend(self.direction(i).iter().zip(x0).map(|(u, c)| c + r * u));
        }
        Ok(SphereQuadrature {
            dim: self.dim,
            center: x0.to_vec(),
            radius: r,
            nodes,
            weights: self.weights.iter().map(|w| w * scale).collect(),
            kind: self.kind,
        })
    }
}

/// Nodes on S(x0, r) with weights summing to ω_{n−1} r^{n−1}.
#[derive(Debug, Clone)]
pub struct SphereQuadrature {
    dim: usize,
    pub center: Vec<f64>,
    pub radius: f64,
    nodes: Vec<f64>,
    weights: Vec<f64>,
    pub kind: SphereRuleKind,
}

impl SphereQuadrature {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn node(&self, i: usize) -> &[f64] {
        &self.nodes[i * self.dim..(i + 1) * self.dim]
    }

    pub fn nodes(&self) -> impl Iterator<Item = &[f64]> {
        self.nodes.chunks_exact(self.dim)
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn weight_sum(&self) -> f64 {
        self.weights.iter().sum()
    }

    pub fn integrate(&self, mut f: impl FnMut(&[f64]) -> f64) -> f64 {
        self.nodes().zip(&self.weights).map(|(x, w)| w * f(x)).sum()
    }

    /// Standard error of [`integrate`](Self::integrate) for Monte Carlo rules,
    /// computed from the antithetic pair averages. `None` for deterministic rules.
    pub fn standard_error(&self, mut f: impl FnMut(&[f64]) -> f64) -> Option<f64> {
        if !matches!(self.kind, SphereRuleKind::MonteCarlo { .. }) {
            return None;
        }
        let pairs: Vec<f64> = (0..self.len() / 2)
            .map(|j| 0.5 * (f(self.node(2 * j)) + f(self.node(2 * j + 1))))
            .collect();
        let m = pairs.len() as f64;
        if m < 2.0 {
            return Some(f64::INFINITY);
        }
        let mean = pairs.iter().sum::<f64>() / m;
        let var = pairs.iter().map(|p| (p - mean).powi(2)).sum::<f64>() / (m - 1.0);
        Some(self.weight_sum() * (var / m).sqrt())
    }
}

/// Quadrature on the sphere S(x0, r) ⊂ ℝⁿ.
pub fn sphere_quadrature(n: usize, x0: &[f64], r: f64, resolution: usize, seed: u64) -> Result<SphereQuadrature> {
    if x0.len() != n {
        return input(format!("center has dimension {}, expected {n}", x0.len()));
    }
    if !(r > 0.0) {
        return input(format!("sphere radius must be positive, got {r}"));
    }
    UnitSphereRule::new(n, resolution, seed)?.on_sphere(x0, r)
}

/// The open ring A(x0, r1, r2) = { r1 < |x − x0| < r2 }.
#[derive(Debug, Clone, PartialEq)]
pub struct Annulus {
    pub center: Vec<f64>,
    pub inner: f64,
    pub outer: f64,
}

impl Annulus {
    pub fn new(center: Vec<f64>, inner: f64, outer: f64) -> Result<Self> {
        if center.len() < 2 {
            return input("annulus center must have dimension at least 2");
        }
        if !(inner > 0.0 && inner < outer && outer.is_finite()) {
            return input(format!("need 0 < r1 < r2 < ∞, got r1 = {inner}, r2 = {outer}"));
        }
        Ok(Annulus { center, inner, outer })
    }

    pub fn dim(&self) -> usize {
        self.center.len()
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        let d = dist(x, &self.center);
        self.inner < d && d < self.outer
    }

    pub fn modulus(&self) -> f64 {
        ring_modulus_unchecked(self.dim(), self.inner, self.outer)
    }
}

fn ring_modulus_unchecked(n: usize, r1: f64, r2: f64) -> f64 {
    sphere_measure(n) * (r2 / r1).ln().powi(1 - n as i32)
}

/// Modulus of the family of curves joining the boundary spheres of
/// A(x0, r1, r2) in ℝⁿ: ω_{n−1} (log(r2/r1))^{1−n}.
pub fn ring_modulus(n: usize, r1: f64, r2: f64) -> Result<f64> {
    if n < 2 {
        return input(format!("dimension must be at least 2, got {n}"));
    }
    if !(r1 > 0.0 && r1 < r2) {
        return input(format!("need 0 < r1 < r2, got r1 = {r1}, r2 = {r2}"));
    }
    Ok(ring_modulus_unchecked(n, r1, r2))
}

/// Area element nodes for a planar region: (point, weight).
pub type PlanarRule = Vec<(Complex64, f64)>;

/// Polar quadrature of the disk D(ζ, ε) about a unit-circle point ζ, split
/// exactly along the unit circle.
///
/// Along the ray ζ + s·e^{i(ϑ+t)} the point is inside 𝔻 iff s < −2 cos t,
/// so the clipping angles are t = π/2, π ∓ arccos(ε/2), 3π/2 and each
/// piece is smooth in (t, s).
#[derive(Debug, Clone)]
pub struct LensRule {
    /// Nodes in D(ζ, ε) ∩ 𝔻.
    pub inside: PlanarRule,
    /// Nodes in D(ζ, ε) \ 𝔻.
    pub outside: PlanarRule,
}

pub fn lens_rule(zeta: Complex64, eps: f64, order: usize) -> Result<LensRule> {
    if (zeta.norm() - 1.0).abs() > 1e-12 {
        return input(format!("boundary point must lie on the unit circle, |ζ| = {}", zeta.norm()));
    }
    if !(eps > 0.0 && eps < 2.0) {
        return input(format!("lens radius must lie in (0, 2), got {eps}"));
    }
    let theta = zeta.arg();
    let beta = (eps / 2.0).acos();
    let mut inside = Vec::new();
    let mut outside = Vec::new();
    let fill = |t0: f64, t1: f64, lo: &dyn Fn(f64) -> f64, hi: &dyn Fn(f64) -> f64, out: &mut PlanarRule| {
        for (t, wt) in gauss_legendre_on(t0, t1, order) {
            let (a, b) = (lo(t), hi(t));
            if b <= a {
                continue;
            }
            let dir = Complex64::from_polar(1.0, theta + t);
            for (s, ws) in gauss_legendre_on(a, b, order) {
                out.push((zeta + dir * s, wt * ws * s));
            }
        }
    };
    let zero = |_: f64| 0.0;
    let full = |_: f64| eps;
    let chord = |t: f64| -2.0 * t.cos();
    for (t0, t1) in [(PI / 2.0, PI - beta), (PI + beta, 1.5 * PI)] {
        fill(t0, t1, &zero, &chord, &mut inside);
        fill(t0, t1, &chord, &full, &mut outside);
    }
    fill(PI - beta, PI + beta, &zero, &full, &mut inside);
    fill(1.5 * PI, 2.5 * PI, &zero, &full, &mut outside);
    Ok(LensRule { inside, outside })
}

/// Exact area of D(ζ, ε) ∩ 𝔻 for |ζ| = 1.
pub fn lens_area(eps: f64) -> f64 {
    eps * eps * (eps / 2.0).acos() + (1.0 - eps * eps / 2.0).acos() - 0.5 * (eps * eps * (4.0 - eps * eps)).sqrt()
}

/// Polar rule for the planar ring r_in ≤ |z| ≤ r_out about the origin
/// (r_in = 0 gives the disk): Gauss–Legendre in r, uniform in angle.
pub fn polar_annulus_rule(r_in: f64, r_out: f64, radial_order: usize, angular: usize) -> Result<PlanarRule> {
    if !(r_in >= 0.0 && r_in < r_out && r_out.is_finite()) {
        return Err(Error::Input(format!("need 0 <= r_in < r_out, got {r_in}, {r_out}")));
    }
    let dphi = 2.0 * PI / angular as f64;
    let mut rule = Vec::with_capacity(radial_order * angular);
    for (r, wr) in gauss_legendre_on(r_in, r_out, radial_order) {
        for k in 0..angular {
            // half-step offset keeps nodes off the real axis
            let phi = dphi * (k as f64 + 0.5);
            rule.push((Complex64::from_polar(r, phi), wr * r * dphi));
        }
    }
    Ok(rule)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(v: &[f64]) -> ExtendedPoint {
        ExtendedPoint::Finite(v.to_vec())
    }

    #[test]
    fn chordal_examples() {
        let x = fin(&[0.3, -0.7]);
        assert_eq!(chordal_distance(&x, &x).unwrap(), 0.0);
        assert_eq!(chordal_distance(&fin(&[0.0, 0.0]), &ExtendedPoint::Infinity).unwrap(), 1.0);
        let d = chordal_distance(&fin(&[1.0, 0.0]), &fin(&[-1.0, 0.0])).unwrap();
        assert!((d - 1.0).abs() < 1e-15);
        assert!(chordal_distance(&fin(&[1.0, 0.0]), &fin(&[1.0, 0.0, 0.0])).is_err());
    }

    #[test]
    fn chordal_diameter_examples() {
        assert_eq!(chordal_diameter(&[fin(&[2.0, 1.0])]).unwrap(), 0.0);
        assert_eq!(chordal_diameter(&[fin(&[0.0, 0.0]), ExtendedPoint::Infinity]).unwrap(), 1.0);
        let d = chordal_diameter(&[fin(&[0.0, 0.0]), fin(&[1.0, 0.0]), fin(&[-1.0, 0.0])]).unwrap();
        assert!((d - 1.0).abs() < 1e-15);
        assert!(chordal_diameter(&[]).is_err());
    }

    #[test]
    fn complement_diameter_matches_brute_force() {
        for &r0 in &[0.5, 1.0, 2.0, 5.0] {
            // antipodal points on |x| = r0 plus a ring of samples and ∞
            let mut pts = vec![ExtendedPoint::Infinity];
            for k in 0..64 {
                let t = 2.0 * PI * k as f64 / 64.0;
                for &s in &[r0, 1.0f64.max(r0), 2.0 * r0, 10.0 * r0] {
                    pts.push(fin(&[s * t.cos(), s * t.sin()]));
                }
            }
            let brute = chordal_diameter(&pts).unwrap();
            let exact = complement_ball_chordal_diameter(r0).unwrap();
            assert!((brute - exact).abs() < 1e-12, "r0 = {r0}: {brute} vs {exact}");
        }
    }

    #[test]
    fn sphere_measures() {
        assert!((sphere_measure(2) - 2.0 * PI).abs() < 1e-14);
        assert!((sphere_measure(3) - 4.0 * PI).abs() < 1e-14);
        assert!((sphere_measure(4) - 2.0 * PI * PI).abs() < 1e-13);
        assert!((ball_volume(3) - 4.0 * PI / 3.0).abs() < 1e-14);
        assert!((gamma_half(5) - 0.75 * PI.sqrt()).abs() < 1e-15);
        assert_eq!(gamma_half(8), 6.0);
    }

    #[test]
    fn gauss_legendre_integrates_polynomials() {
        let (x, w) = gauss_legendre(8);
        assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-14);
        let i: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(14)).sum();
        assert!((i - 2.0 / 15.0).abs() < 1e-14);
        let (x1, w1) = gauss_legendre(1);
        assert_eq!((x1[0], w1[0]), (0.0, 2.0));
    }

    #[test]
    fn circle_rule_examples() {
        let q = sphere_quadrature(2, &[0.0, 0.0], 1.0, 360, 0).unwrap();
        assert_eq!(q.len(), 360);
        assert!(q.weights().iter().all(|w| (w - 2.0 * PI / 360.0).abs() < 1e-16));

        let q = sphere_quadrature(2, &[1.0, 1.0], 0.5, 4, 0).unwrap();
        let expected = [[1.5, 1.0], [1.0, 1.5], [0.5, 1.0], [1.0, 0.5]];
        for (node, e) in q.nodes().zip(expected.iter()) {
            assert!(dist(node, e) < 1e-15, "{node:?} vs {e:?}");
        }
    }

    #[test]
    fn weight_sums_and_nodes_on_sphere() {
        for (n, res) in [(2usize, 64usize), (3, 40), (4, 1000), (5, 501)] {
            let x0: Vec<f64> = (0..n).map(|k| 0.1 * k as f64).collect();
            let r = 2.0;
            let q = sphere_quadrature(n, &x0, r, res, 7).unwrap();
            let target = sphere_measure(n) * r.powi(n as i32 - 1);
            assert!((q.weight_sum() - target).abs() <= 1e-9 * target, "n = {n}");
            assert!(q.weights().iter().all(|&w| w >= 0.0));
            for node in q.nodes() {
                assert!((dist(node, &x0) - r).abs() <= 1e-12 * r);
            }
            for k in 0..n {
                let i = q.integrate(|x| x[k] - x0[k]);
                assert!(i.abs() < 1e-9, "coordinate {k} in n = {n}: {i}");
            }
        }
        let q = sphere_quadrature(3, &[0.0; 3], 2.0, 16, 0).unwrap();
        assert!((q.weight_sum() - 16.0 * PI).abs() < 1e-9 * 16.0 * PI);
    }

    #[test]
    fn monte_carlo_rule_is_deterministic_and_reports_error() {
        let a = sphere_quadrature(4, &[0.0; 4], 1.0, 200, 3).unwrap();
        let b = sphere_quadrature(4, &[0.0; 4], 1.0, 200, 3).unwrap();
        assert_eq!(a.node(17), b.node(17));
        let se = a.standard_error(|x| x[0] * x[0]).unwrap();
        assert!(se > 0.0 && se.is_finite());
        assert!(sphere_quadrature(2, &[0.0; 2], 1.0, 8, 0).unwrap().standard_error(|_| 1.0).is_none());
    }

    #[test]
    fn sphere_quadrature_rejects_bad_radius() {
        assert!(sphere_quadrature(2, &[0.0, 0.0], 0.0, 8, 0).is_err());
        assert!(sphere_quadrature(2, &[0.0, 0.0], -1.0, 8, 0).is_err());
    }

    #[test]
    fn ring_modulus_examples() {
        assert!((ring_modulus(2, 1.0, std::f64::consts::E).unwrap() - 2.0 * PI).abs() < 1e-14);
        assert!((ring_modulus(3, 1.0, std::f64::consts::E).unwrap() - 4.0 * PI).abs() < 1e-13);
        let m = ring_modulus(2, 1.0, 3.0).unwrap();
        for r in [1e-3, 0.5, 7.0, 1e4] {
            assert!((ring_modulus(2, r, 3.0 * r).unwrap() - m).abs() < 1e-12 * m);
        }
        assert!(ring_modulus(2, 2.0, 2.0).is_err());
        assert!(ring_modulus(2, 3.0, 2.0).is_err());
    }

    #[test]
    fn lens_rule_reproduces_areas() {
        for &eps in &[0.05, 0.1, 0.25, 0.49, 0.9] {
            let zeta = Complex64::from_polar(1.0, 0.7);
            let rule = lens_rule(zeta, eps, 32).unwrap();
            let inside: f64 = rule.inside.iter().map(|(_, w)| w).sum();
            let outside: f64 = rule.outside.iter().map(|(_, w)| w).sum();
            assert!((inside - lens_area(eps)).abs() < 1e-13, "eps = {eps}");
            assert!((inside + outside - PI * eps * eps).abs() < 1e-13);
            assert!(rule.inside.iter().all(|(z, _)| z.norm() <= 1.0 + 1e-15));
            assert!(rule.outside.iter().all(|(z, _)| z.norm() >= 1.0 - 1e-15));
        }
        assert!(lens_rule(Complex64::new(0.9, 0.0), 0.1, 8).is_err());
    }

    #[test]
    fn lens_area_at_tenth() {
        // circle–circle intersection evaluated independently
        assert!((lens_area(0.1) - 0.015_374_546_534_240_4).abs() < 1e-15);
    }

    #[test]
    fn polar_rule_areas() {
        let ring = polar_annulus_rule(1.0, 2.0, 8, 16).unwrap();
        let area: f64 = ring.iter().map(|(_, w)| w).sum();
        assert!((area - 3.0 * PI).abs() < 1e-13);
    }
}

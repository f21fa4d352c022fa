use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{input, Error, Result};
use crate::fields::{BenchmarkMap, MapKind};

/// Default finite-difference step of the Wirtinger stencil.
pub const DEFAULT_STEP: f64 = 1e-6;

/// Anything evaluable in the plane.
pub trait Planar {
    fn eval(&self, z: Complex64) -> Complex64;

    /// Whether z lies in the open domain of definition.
    fn contains(&self, z: Complex64) -> bool;
}

#[derive(Clone)]
enum Kind {
    Identity,
    RadialStretch { a: f64 },
    Scale(Complex64),
    Conjugate,
    Custom { name: String, f: Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync> },
}

/// A benchmark map of a planar domain: identity, radial stretch
/// z|z|^{a−1}, linear scaling, conjugation, or a closure on a disk.
#[derive(Clone)]
pub struct PlanarMap {
    kind: Kind,
    /// Radius of the disk about 0 the map is defined on; ∞ for the plane.
    domain_radius: f64,
}

impl fmt::Debug for PlanarMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            Kind::Identity => write!(f, "PlanarMap(identity)"),
            Kind::RadialStretch { a } => write!(f, "PlanarMap(radial a={a})"),
            Kind::Scale(c) => write!(f, "PlanarMap({c}·z)"),
            Kind::Conjugate => write!(f, "PlanarMap(conj)"),
            Kind::Custom { name, .. } => write!(f, "PlanarMap({name})"),
        }
    }
}

impl PlanarMap {
    pub fn identity() -> Self {
        PlanarMap { kind: Kind::Identity, domain_radius: f64::INFINITY }
    }

    pub fn radial_stretch(a: f64) -> Result<Self> {
        if !(a > 0.0 && a <= 1.0) {
            return input(format!("stretch exponent must lie in (0, 1], got {a}"));
        }
        Ok(PlanarMap { kind: Kind::RadialStretch { a }, domain_radius: f64::INFINITY })
    }

    /// z ↦ c·z.
    pub fn scale(c: Complex64) -> Self {
        PlanarMap { kind: Kind::Scale(c), domain_radius: f64::INFINITY }
    }

    /// z ↦ z̄.
    pub fn conjugate() -> Self {
        PlanarMap { kind: Kind::Conjugate, domain_radius: f64::INFINITY }
    }

    /// A closure defined on D(0, radius).
    pub fn from_fn(name: impl Into<String>, radius: f64, f: impl Fn(Complex64) -> Complex64 + Send + Sync + 'static) -> Result<Self> {
        if !(radius > 0.0) {
            return input(format!("domain radius must be positive, got {radius}"));
        }
        Ok(PlanarMap { kind: Kind::Custom { name: name.into(), f: Arc::new(f) }, domain_radius: radius })
    }

    /// Planar closed-form benchmark maps; lattice maps are not supported.
    pub fn from_benchmark(f: &BenchmarkMap) -> Result<Self> {
        if f.dim() != 2 {
            return input(format!("planar maps need dimension 2, got {}", f.dim()));
        }
        match f.kind() {
            MapKind::Identity => Ok(Self::identity()),
            MapKind::RadialStretch { a } => Self::radial_stretch(*a),
            MapKind::Grid(_) => Err(Error::Unsupported("lattice maps have no closed-form derivatives".into())),
        }
    }

    pub fn domain_radius(&self) -> f64 {
        self.domain_radius
    }
}

impl Planar for PlanarMap {
    fn eval(&self, z: Complex64) -> Complex64 {
        match &self.kind {
            Kind::Identity => z,
            Kind::RadialStretch { a } => {
                let r = z.norm();
                if r == 0.0 || *a == 1.0 {
                    z
                } else {
                    z * r.powf(a - 1.0)
                }
            }
            Kind::Scale(c) => c * z,
            Kind::Conjugate => z.conj(),
            Kind::Custom { f, .. } => f(z),
        }
    }

    fn contains(&self, z: Complex64) -> bool {
        z.norm() < self.domain_radius
    }
}

/// F(z) = f(z) in the disk and 1/conj(f(1/z̄)) outside it.
#[derive(Debug, Clone)]
pub struct ReflectedMap {
    inner: PlanarMap,
}

impl ReflectedMap {
    pub fn inner(&self) -> &PlanarMap {
        &self.inner
    }
}

impl Planar for ReflectedMap {
    fn eval(&self, z: Complex64) -> Complex64 {
        if z.norm() <= 1.0 {
            self.inner.eval(z)
        } else {
            self.inner.eval(z.conj().inv()).conj().inv()
        }
    }

    fn contains(&self, z: Complex64) -> bool {
        z.norm() > 0.0 && z.norm().is_finite()
    }
}

/// Reflects a self-map of the disk across the unit circle. The map must
/// send sampled points of 𝔻 into 𝔻.
pub fn reflect_map(f: &PlanarMap) -> Result<ReflectedMap> {
    if f.domain_radius < 1.0 {
        return input("the map must be defined on the whole unit disk");
    }
    for i in 1..=32 {
        let r = i as f64 / 33.0;
        for j in 0..64 {
            let z = Complex64::from_polar(r, 2.0 * std::f64::consts::PI * j as f64 / 64.0);
            let w = f.eval(z);
            if !(w.norm() < 1.0) {
                return input(format!("|f({z})| = {} is not below 1; f must map the disk into itself", w.norm()));
            }
        }
    }
    Ok(ReflectedMap { inner: f.clone() })
}

/// Wirtinger derivatives from central differences.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Wirtinger {
    pub fz: Complex64,
    pub fzbar: Complex64,
    /// Whether steps h and h/2 agree within 1e−5 relative.
    pub richardson_ok: bool,
}

fn stencil(f: &impl Planar, z: Complex64, h: f64) -> (Complex64, Complex64) {
    let dx = Complex64::new(h, 0.0);
    let dy = Complex64::new(0.0, h);
    let fx = (f.eval(z + dx) - f.eval(z - dx)) / (2.0 * h);
    let fy = (f.eval(z + dy) - f.eval(z - dy)) / (2.0 * h);
    let i = Complex64::i();
    ((fx - i * fy) / 2.0, (fx + i * fy) / 2.0)
}

/// f_z = (f_x − i f_y)/2 and f_z̄ = (f_x + i f_y)/2 on a four-point stencil.
pub fn wirtinger_derivatives(f: &impl Planar, z: Complex64, h: f64) -> Result<Wirtinger> {
    if !(h > 0.0 && h.is_finite()) {
        return input(format!("step must be positive, got {h}"));
    }
    for w in [z + h, z - h, z + Complex64::new(0.0, h), z - Complex64::new(0.0, h)] {
        if !f.contains(w) {
            return Err(Error::Domain(format!("stencil point {w} lies outside the map's domain")));
        }
    }
    let (fz, fzbar) = stencil(f, z, h);
    let (gz, gzbar) = stencil(f, z, h / 2.0);
    let scale = fz.norm().max(fzbar.norm()).max(1e-300);
    let richardson_ok = (fz - gz).norm() <= 1e-5 * scale && (fzbar - gzbar).norm() <= 1e-5 * scale;
    Ok(Wirtinger { fz, fzbar, richardson_ok })
}

/// μ_f = f_z̄/f_z, or 0 when |f_z| < 1e−12.
pub fn coefficient_of_map(f: &impl Planar, z: Complex64, h: f64) -> Result<Complex64> {
    let w = wirtinger_derivatives(f, z, h)?;
    Ok(if w.fz.norm() < 1e-12 { Complex64::new(0.0, 0.0) } else { w.fzbar / w.fz })
}

/// J_f = |f_z|² − |f_z̄|².
pub fn jacobian(f: &impl Planar, z: Complex64, h: f64) -> Result<f64> {
    let w = wirtinger_derivatives(f, z, h)?;
    Ok(w.fz.norm_sqr() - w.fzbar.norm_sqr())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn derivative_examples() {
        let z = c(0.3, 0.2);
        let w = wirtinger_derivatives(&PlanarMap::identity(), z, DEFAULT_STEP).unwrap();
        assert!((w.fz - 1.0).norm() < 1e-9 && w.fzbar.norm() < 1e-9);
        let w = wirtinger_derivatives(&PlanarMap::conjugate(), z, DEFAULT_STEP).unwrap();
        assert!(w.fz.norm() < 1e-9 && (w.fzbar - 1.0).norm() < 1e-9);

        let f = PlanarMap::radial_stretch(0.5).unwrap();
        let w = wirtinger_derivatives(&f, c(0.25, 0.0), DEFAULT_STEP).unwrap();
        assert!((w.fz - 1.5).norm() < 1e-6 && (w.fzbar + 0.5).norm() < 1e-6);
        assert!(w.richardson_ok);
        assert!((jacobian(&f, c(0.0, 0.25), DEFAULT_STEP).unwrap() - 2.0).abs() < 1e-6);
        assert!((jacobian(&PlanarMap::scale(c(2.0, 0.0)), z, DEFAULT_STEP).unwrap() - 4.0).abs() < 1e-8);
        assert!(coefficient_of_map(&PlanarMap::scale(c(2.0, 0.0)), z, DEFAULT_STEP).unwrap().norm() < 1e-9);
    }

    #[test]
    fn domain_errors() {
        let f = PlanarMap::from_fn("sq", 1.0, |z| z * z).unwrap();
        assert!(matches!(wirtinger_derivatives(&f, c(0.9999999, 0.0), 1e-6), Err(Error::Domain(_))));
        assert!(wirtinger_derivatives(&f, c(0.5, 0.0), 0.0).is_err());
    }

    #[test]
    fn reflection() {
        let f = PlanarMap::radial_stretch(0.5).unwrap();
        let big = reflect_map(&f).unwrap();
        assert!((big.eval(c(4.0, 0.0)) - 2.0).norm() < 1e-15);
        let z = c(0.6, 0.3);
        let zr = z.conj().inv();
        assert!((big.eval(zr) - big.eval(z).conj().inv()).norm() < 1e-12);
        let g = PlanarMap::scale(c(2.0, 0.0));
        assert!(reflect_map(&g).is_err());
    }
}

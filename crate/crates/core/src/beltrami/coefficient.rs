use std::fmt;
use std::path::Path;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{input, Error, Result};
use crate::fields::{Interpolation, Lattice, ScalarField};

/// K_μ = (1 + |μ|)/(1 − |μ|); +∞ once |μ| ≥ 1.
pub fn max_dilatation(mu: Complex64) -> f64 {
    let m = mu.norm();
    if m >= 1.0 {
        f64::INFINITY
    } else {
        (1.0 + m) / (1.0 - m)
    }
}

#[derive(Clone)]
pub enum MuKind {
    Const(Complex64),
    /// The coefficient ((a − 1)/(1 + a))·z/z̄ of z ↦ z|z|^{a−1}.
    Radial { a: f64 },
    /// Real and imaginary parts on a lattice, multilinear interpolation.
    Grid(Lattice),
    Custom { name: String, f: Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync> },
}

impl fmt::Debug for MuKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MuKind::Const(c) => write!(f, "Const({c})"),
            MuKind::Radial { a } => write!(f, "Radial {{ a: {a} }}"),
            MuKind::Grid(l) => write!(f, "Grid({:?})", l.counts()),
            MuKind::Custom { name, .. } => write!(f, "Custom({name})"),
        }
    }
}

/// A coefficient μ on the unit disk with |μ| < 1 at every sampled point.
#[derive(Debug, Clone)]
pub struct BeltramiCoefficient {
    kind: MuKind,
}

impl BeltramiCoefficient {
    fn checked(kind: MuKind) -> Result<Self> {
        let mu = BeltramiCoefficient { kind };
        let n = 41;
        for i in 0..n {
            for j in 0..n {
                let z = Complex64::new(-1.0 + 2.0 * (i as f64 + 0.5) / n as f64, -1.0 + 2.0 * (j as f64 + 0.5) / n as f64);
                if z.norm() >= 1.0 {
                    continue;
                }
                let m = mu.eval(z);
                if !(m.norm() < 1.0) {
                    return input(format!("|μ({z})| = {} is not below 1", m.norm()));
                }
            }
        }
        Ok(mu)
    }

    pub fn constant(c: Complex64) -> Result<Self> {
        Self::checked(MuKind::Const(c))
    }

    /// Coefficient of the radial stretch with exponent a ∈ (0, 1].
    pub fn radial(a: f64) -> Result<Self> {
        if !(a > 0.0 && a <= 1.0) {
            return input(format!("stretch exponent must lie in (0, 1], got {a}"));
        }
        Self::checked(MuKind::Radial { a })
    }

    /// Reads a CSV `x1,x2,re,im` lattice.
    pub fn from_grid_csv(path: impl AsRef<Path>) -> Result<Self> {
        let lattice = Lattice::from_csv(path, 2)?;
        if lattice.dim() != 2 {
            return input("coefficient grids are planar");
        }
        Self::checked(MuKind::Grid(lattice))
    }

    pub fn from_fn(name: impl Into<String>, f: impl Fn(Complex64) -> Complex64 + Send + Sync + 'static) -> Result<Self> {
        Self::checked(MuKind::Custom { name: name.into(), f: Arc::new(f) })
    }

    pub fn kind(&self) -> &MuKind {
        &self.kind
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        match &self.kind {
            MuKind::Const(c) => *c,
            MuKind::Radial { a } => {
                if z == Complex64::new(0.0, 0.0) {
                    Complex64::new(0.0, 0.0)
                } else {
                    (a - 1.0) / (1.0 + a) * z / z.conj()
                }
            }
            MuKind::Grid(l) => {
                let v = l.interpolate(&[z.re, z.im], Interpolation::Multilinear);
                Complex64::new(v[0], v[1])
            }
            MuKind::Custom { f, .. } => f(z),
        }
    }

    /// K_μ(z).
    pub fn dilatation(&self, z: Complex64) -> f64 {
        max_dilatation(self.eval(z))
    }

    /// K_μ as a planar field on the unit disk.
    pub fn dilatation_field(&self) -> Result<ScalarField> {
        let mu = self.clone();
        ScalarField::from_fn(2, "K_mu", move |x| mu.dilatation(Complex64::new(x[0], x[1])))?.with_domain_radius(1.0)
    }
}

/// μ_F(z) = (z²/z̄²)·conj(μ(1/z̄)), the coefficient of the reflected map
/// outside the unit disk.
pub fn reflect_coefficient(mu: &BeltramiCoefficient, z: Complex64) -> Result<Complex64> {
    if !(z.norm() > 1.0) {
        return input(format!("reflection needs |z| > 1, got {}", z.norm()));
    }
    let w = z.conj().inv();
    let phase = (z / z.conj()).powi(2);
    Ok(phase * mu.eval(w).conj())
}

/// Parses `mu-const <re> <im>`, `mu-radial <a>` or `mu-grid <path>`.
pub fn parse_mu_spec(text: &str) -> Result<BeltramiCoefficient> {
    let mut parts = text.split_whitespace();
    let family = parts.next().ok_or(Error::Parse { position: 1, message: "empty coefficient spec".into() })?;
    let args: Vec<&str> = parts.collect();
    let column = |k: usize| text.find(args[k]).map_or(1, |p| p + 1);
    let num = |k: usize| -> Result<f64> {
        args[k].parse::<f64>().map_err(|_| Error::Parse { position: column(k), message: format!("bad number {:?}", args[k]) })
    };
    let arity = |want: usize| -> Result<()> {
        if args.len() == want {
            Ok(())
        } else {
            Err(Error::Parse {
                position: if args.len() > want { column(want) } else { text.trim_end().len() + 1 },
                message: format!("{family} takes {want} argument(s), got {}", args.len()),
            })
        }
    };
    match family {
        "mu-const" => {
            arity(2)?;
            BeltramiCoefficient::constant(Complex64::new(num(0)?, num(1)?))
        }
        "mu-radial" => {
            arity(1)?;
            BeltramiCoefficient::radial(num(0)?)
        }
        "mu-grid" => {
            arity(1)?;
            BeltramiCoefficient::from_grid_csv(args[0])
        }
        other => Err(Error::Parse {
            position: text.find(other).map_or(1, |p| p + 1),
            message: format!("unknown coefficient family {other:?}; expected mu-const, mu-radial or mu-grid"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn dilatation_values() {
        assert_eq!(max_dilatation(Complex64::new(0.0, 0.0)), 1.0);
        assert!((max_dilatation(Complex64::new(0.0, 1.0 / 3.0)) - 2.0).abs() < 1e-15);
        assert_eq!(max_dilatation(Complex64::new(1.0, 0.0)), f64::INFINITY);
    }

    #[test]
    fn radial_and_reflection() {
        let mu = BeltramiCoefficient::radial(0.5).unwrap();
        let z = Complex64::new(0.3, -0.2);
        assert!((mu.eval(z).norm() - 1.0 / 3.0).abs() < 1e-15);
        assert!((mu.dilatation(z) - 2.0).abs() < 1e-14);
        let c = BeltramiCoefficient::constant(Complex64::new(0.2, 0.1)).unwrap();
        let r = reflect_coefficient(&c, Complex64::new(2.0, 0.0)).unwrap();
        assert!((r - Complex64::new(0.2, -0.1)).norm() < 1e-16);
        assert!(reflect_coefficient(&c, Complex64::new(0.5, 0.0)).is_err());
        let z = Complex64::new(1.5, 2.0);
        let r = reflect_coefficient(&mu, z).unwrap();
        assert!((r - mu.eval(z)).norm() < 1e-15);
    }

    #[test]
    fn spec_parsing() {
        assert!(matches!(parse_mu_spec("mu-const 0.1 0.2").unwrap().kind(), MuKind::Const(_)));
        assert!(matches!(parse_mu_spec("mu-radial 0.25").unwrap().kind(), MuKind::Radial { .. }));
        assert!(matches!(parse_mu_spec("mu-const 0.9 0.9"), Err(Error::Input(_))));
        assert!(matches!(parse_mu_spec("mu-cone 1"), Err(Error::Parse { position: 1, .. })));
        assert!(matches!(parse_mu_spec("mu-radial x"), Err(Error::Parse { position: 11, .. })));
        assert!(matches!(parse_mu_spec("mu-radial"), Err(Error::Parse { .. })));

        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "x1,x2,re,im").unwrap();
        for x in [-1.0, 1.0] {
            for y in [-1.0, 1.0] {
                writeln!(f, "{x},{y},0.1,-0.1").unwrap();
            }
        }
        let mu = parse_mu_spec(&format!("mu-grid {}", f.path().display())).unwrap();
        assert!((mu.eval(Complex64::new(0.2, 0.3)) - Complex64::new(0.1, -0.1)).norm() < 1e-15);
    }
}

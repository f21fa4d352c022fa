//! Numerics for ring Q-mappings and degenerate Beltrami equations.
//!
//! The crate evaluates dilatation means of a field Q (spherical, ball,
//! weighted and half-disk means, annulus integrals), checks the integral
//! conditions under which a mapping is Hölder or Lipschitz at a point, and
//! turns them into explicit [`HolderCertificate`]s with every constant of
//! the pipeline recorded. A planar module handles Beltrami coefficients,
//! their reflection across the unit circle, and the mass bounds used at
//! boundary points. The [`harness`] module measures exponents on benchmark
//! maps, verifies the ring modulus inequality, and drives the CLI.
//!
//! Runnable examples live in `examples/`:
//!
//! * `chordal_geometry` - chordal metric, sphere rules, ring moduli
//! * `spherical_means` - spherical, ball and weighted means of fields
//! * `dini_certificate` - Dini condition and the interior certificate
//! * `weighted_annulus_bound` - doubling weights and the dyadic annulus bound
//! * `beltrami_reflection` - coefficients, Wirtinger stencils, reflection
//! * `boundary_holder` - lens masses and the boundary certificate
//! * `ring_inequality` - ring modulus inequality and exponent fits
//! * `monte_carlo_oracle` - brute-force cross-checks of the quadratures
//!
//! ```
//! use qcholder::fields::parse_field_spec;
//! use qcholder::means::spherical_mean;
//!
//! let q = parse_field_spec("power p=2 center=0,0").unwrap();
//! let m = spherical_mean(&q, &[0.0, 0.0], 0.5, 256).unwrap();
//! assert!((m - 0.25).abs() < 1e-12);
//! ```

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod beltrami;
pub mod certificates;
pub mod error;
pub mod fields;
pub mod geometry;
pub mod harness;
pub mod integrate;
pub mod means;
pub mod output;
pub mod sampling;

pub use certificates::{ConditionReport, HolderCertificate, Verdict};
pub use error::{Error, Result};
pub use fields::{BenchmarkMap, ScalarField};
pub use geometry::ExtendedPoint;

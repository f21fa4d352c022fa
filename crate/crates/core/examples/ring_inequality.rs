//! The modulus inequality for radial stretches: equality with the extremal
//! density and Q = K, strict inequality for a larger density.

use qcholder::fields::{BenchmarkMap, ScalarField};
use qcholder::harness::{empirical_holder_exponent, extremal_eta, geometric_radii, verify_ring_inequality};

fn main() -> qcholder::Result<()> {
    let (r1, r2) = (0.1, 0.5);
    let radii = geometric_radii(1e-4, 0.5, 16)?;
    for a in [0.25, 0.5, 1.0] {
        let f = BenchmarkMap::radial_stretch(2, a)?;
        let q = ScalarField::constant(2, 1.0 / a)?;
        let eta = extremal_eta(r1, r2);
        let tight = verify_ring_inequality(&f, &q, r1, r2, &eta)?;
        let loose = verify_ring_inequality(&f, &q, r1, r2, |r| 1.5 * eta(r))?;
        let fit = empirical_holder_exponent(&f, &[0.0, 0.0], &radii)?;
        println!(
            "a = {a}: M = {:.9}, ∫Qη² = {:.9}, with 1.5η {:.9}; fitted exponent {:.9}",
            tight.lhs, tight.rhs, loose.rhs, fit.slope
        );
    }
    Ok(())
}

//! Reflecting a radial stretch across the unit circle: the formula for μ_F
//! against finite differences, and the mass bounds near the boundary.

use num_complex::Complex64;
use qcholder::beltrami::{
    annulus_mass_bound, coefficient_of_map, reflect_coefficient, reflect_map, reflected_mass_bound, BeltramiCoefficient,
    PlanarMap, DEFAULT_STEP,
};

fn main() -> qcholder::Result<()> {
    let a = 0.5;
    let f = PlanarMap::radial_stretch(a)?;
    let mu = BeltramiCoefficient::radial(a)?;
    let big = reflect_map(&f)?;
    for z in [Complex64::new(1.5, 0.5), Complex64::new(-2.0, 1.0), Complex64::new(0.0, -3.0)] {
        let formula = reflect_coefficient(&mu, z)?;
        let numeric = coefficient_of_map(&big, z, DEFAULT_STEP)?;
        println!("z = {z:.3}: μ_F = {formula:.9}, finite differences {numeric:.9}");
    }
    for eps in [0.05, 0.1, 0.2] {
        let b = reflected_mass_bound(&mu, Complex64::new(1.0, 0.0), eps)?;
        println!("lens ε = {eps}: {:.6e} < {:.6e} (ratio {:.4})", b.lhs, b.rhs, b.ratio);
    }
    for r in [1.5, 2.0] {
        let b = annulus_mass_bound(&mu, r)?;
        println!("annulus R = {r}: {:.6} ≤ {:.6}", b.lhs, b.rhs);
    }
    Ok(())
}

//! Planar Beltrami coefficients, Wirtinger derivatives of benchmark maps,
//! reflection across the unit circle, and the mass bounds used at
//! boundary points.

mod bounds;
mod coefficient;
mod maps;

pub use bounds::{annulus_mass_bound, inversion_weight_max, reflected_mass_bound, InversionWeight, MassBound};
pub use coefficient::{max_dilatation, parse_mu_spec, reflect_coefficient, BeltramiCoefficient, MuKind};
pub use maps::{
    coefficient_of_map, jacobian, reflect_map, wirtinger_derivatives, Planar, PlanarMap, ReflectedMap, Wirtinger,
    DEFAULT_STEP,
};

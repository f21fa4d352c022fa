//! Seeded Monte Carlo estimates next to the deterministic radial reduction.

use qcholder::fields::parse_field_spec;
use qcholder::harness::{oracle_integral, Region};
use qcholder::means::fubini_radial_reduction;

fn main() -> qcholder::Result<()> {
    for spec in ["power p=1 shift=1", "power p=2", "radial-K K=3"] {
        let q = parse_field_spec(spec)?;
        let f = fubini_radial_reduction(&q, &[0.0, 0.0], 0.1, 1.0, 256, 200_000, 7)?;
        println!(
            "{spec}: radial {:.9}, volume {:.9} ± {:.2e}, agree: {}",
            f.radial,
            f.volume.value,
            f.volume.std_error,
            f.agrees(1e-6, 3.0)
        );
    }
    let q = parse_field_spec("power p=1 center=0.5,0")?;
    let est = oracle_integral(&q, &Region::Lens { zeta: [1.0, 0.0], eps: 0.3 }, 100_000, 1)?;
    println!("lens integral: {:.6} ± {:.2e}", est.value, est.std_error);
    Ok(())
}

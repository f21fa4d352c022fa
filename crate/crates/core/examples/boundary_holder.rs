//! Boundary constants from the half-disk mean condition, checked for the
//! dilatation of a radial stretch.

use qcholder::beltrami::BeltramiCoefficient;
use qcholder::certificates::{boundary_condition, boundary_holder_certificate, circle_points};

fn main() -> qcholder::Result<()> {
    let k = BeltramiCoefficient::radial(0.5)?.dilatation_field()?;
    let report = boundary_condition(&k, &circle_points(16), 0.5, None)?;
    println!("sup of half-disk means: {:.9} ({})", report.estimate, report.verdict.as_str());

    let b = boundary_holder_certificate(report.estimate.max(1.0), 0.5)?;
    print!("{}", b.to_json()?);
    let local = b.local_certificate()?;
    for d in [1e-6, 1e-3, 0.1] {
        println!("|f(z2) − f(z1)| ≤ {:.6} for |z2 − z1| = {d}", local.bound(d));
    }
    Ok(())
}

//! The Dini-type condition for Q ≡ K and the interior Hölder certificate it
//! yields at α = 1/K, with the refusal at α = 1.

use qcholder::certificates::{dini_condition, holder_certificate_interior, InteriorScale};
use qcholder::fields::ScalarField;

fn main() -> qcholder::Result<()> {
    let k = 3.0;
    let q = ScalarField::constant(2, k)?;
    let x0 = [0.0, 0.0];
    for alpha in [1.0, 1.0 / k] {
        let r = dini_condition(&q, &x0, alpha, 0.5, None)?;
        println!("α = {alpha:.6}: {} (estimate {:.6e})", r.verdict.as_str(), r.estimate);
    }
    let scale = InteriorScale::Explicit { alpha_n: 32.0, r0: 1.0 };
    let cert = holder_certificate_interior(&q, &x0, 1.0 / k, 0.5, scale, None)?;
    print!("{}", cert.to_json()?);
    match holder_certificate_interior(&q, &x0, 1.0, 0.5, scale, None) {
        Ok(_) => println!("unexpected certificate at α = 1"),
        Err(e) => println!("α = 1 refused: {e}"),
    }
    Ok(())
}

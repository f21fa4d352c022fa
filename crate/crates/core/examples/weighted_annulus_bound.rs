//! Weighted annulus integrals against C₁ log(1/ε) for φ ≡ 1 and φ = log t.

use qcholder::certificates::{lemma31_bound, DoublingFamily, DoublingFunction};
use qcholder::fields::parse_field_spec;
use qcholder::means::dyadic_grid;

fn main() -> qcholder::Result<()> {
    let grid = dyadic_grid(0.25, 12);
    let log = DoublingFunction::new(DoublingFamily::Log, 1.0, 2.0, 2.0)?;
    for spec in ["const 1", "power p=0.5 shift=1"] {
        let q = parse_field_spec(spec)?;
        for (name, phi) in [("1", DoublingFunction::unit()), ("log t", log.clone())] {
            let r = lemma31_bound(&q, &[0.0, 0.0], &phi, 0.25, Some(&grid))?;
            println!("Q = {spec}, φ = {name}: C = {:.6}, C1 = {:.6}, all hold: {}", r.c, r.c1, r.all_hold);
            for p in r.pairs.iter().step_by(4) {
                println!("  ε = {:.3e}: {:.6} ≤ {:.6}", p.eps, p.lhs, p.rhs);
            }
        }
    }
    Ok(())
}

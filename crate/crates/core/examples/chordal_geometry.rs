//! Chordal distances, the diameter of a ball complement and ring moduli.

use qcholder::geometry::{chordal_diameter, chordal_distance, complement_ball_chordal_diameter, ring_modulus, ExtendedPoint};

fn main() -> qcholder::Result<()> {
    let x = ExtendedPoint::finite(vec![1.0, 0.0])?;
    let y = ExtendedPoint::finite(vec![0.0, 2.0])?;
    println!("h(x, y)   = {:.12}", chordal_distance(&x, &y)?);
    println!("h(x, ∞)   = {:.12}", chordal_distance(&x, &ExtendedPoint::Infinity)?);
    println!("diam{{x, y, ∞}} = {:.12}", chordal_diameter(&[x, y, ExtendedPoint::Infinity])?);

    for r0 in [0.5, 1.0, 2.0, 10.0] {
        println!("h(ℝⁿ \\ B(0, {r0})) = {:.12}", complement_ball_chordal_diameter(r0)?);
    }
    for n in 2..=4 {
        println!("M(Γ(A(0, 1, e))) in ℝ^{n} = {:.12}", ring_modulus(n, 1.0, 1f64.exp())?);
    }
    Ok(())
}

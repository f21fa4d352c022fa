//! Spherical and ball means of a few dilatation fields, printed as CSV.

use qcholder::fields::parse_field_spec;
use qcholder::means::{ball_mean, MeanEngine};

fn main() -> qcholder::Result<()> {
    let engine = MeanEngine::for_dim(2)?;
    let radii = [0.05, 0.1, 0.2, 0.4, 0.8];
    for spec in ["const 2", "power p=1 shift=1", "log-power p=0 q=2 center=0,0", "fmo-spike c=3 rho=0.1 center=0.2,0"] {
        let q = parse_field_spec(spec)?;
        println!("# {spec}");
        print!("{}", engine.profile(&q, &[0.0, 0.0], &radii)?.to_csv());
        println!("# ball mean over B(0, 0.5): {:.12}", ball_mean(&q, &[0.0, 0.0], 0.5)?);
    }
    Ok(())
}

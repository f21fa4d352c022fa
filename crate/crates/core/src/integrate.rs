//! One-dimensional adaptive Simpson quadrature over radii.
//!
//! Infinite integrand values follow Lebegue semantics at the available
//! resolution: two adjacent samples with the same infinite value make the
//! integral infinite, an isolated infinite sample is treated as a null set.

#[derive(Debug, Clone, Copy)]
pub struct SimpsonOptions {
    pub abs_tol: f64,
    pub max_evals: usize,
    pub max_depth: u32,
}

impl Default for SimpsonOptions {
    fn default() -> Self {
        SimpsonOptions { abs_tol: 1e-10, max_evals: 1 << 20, max_depth: 48 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub evals: usize,
    /// False when the evaluation cap was hit before every panel met its tolerance.
    pub converged: bool,
}

struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    tol: f64,
    depth: u32,
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

/// Replaces an isolated infinite sample by the mean of its finite neighbours.
fn patch(v: f64, left: f64, right: f64) -> f64 {
    if v.is_finite() {
        return v;
    }
    match (left.is_finite(), right.is_finite()) {
        (true, true) => 0.5 * (left + right),
        (true, false) => left,
        (false, true) => right,
        (false, false) => 0.0,
    }
}

/// Same-signed infinite value shared by two adjacent samples, if any.
fn adjacent_infinity(samples: &[f64]) -> Option<f64> {
    samples
        .windows(2)
        .find(|w| w[0].is_infinite() && w[0] == w[1])
        .map(|w| w[0])
}

/// Integrates `f` over [a, b].
pub fn adaptive_simpson(mut f: impl FnMut(f64) -> f64, a: f64, b: f64, opts: SimpsonOptions) -> Integral {
    if a == b {
        return Integral { value: 0.0, evals: 0, converged: true };
    }
    let (lo, hi, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
    let m = 0.5 * (lo + hi);
    let (fa, fm, fb) = (f(lo), f(m), f(hi));
    let mut evals = 3;
    if fa.is_nan() || fm.is_nan() || fb.is_nan() {
        return Integral { value: f64::NAN, evals, converged: false };
    }
    if let Some(inf) = adjacent_infinity(&[fa, fm, fb]) {
        return Integral { value: sign * inf, evals, converged: true };
    }

    let mut stack = vec![Panel { a: lo, b: hi, fa, fm, fb, tol: opts.abs_tol, depth: 0 }];
    let mut total = 0.0;
    let mut converged = true;
    while let Some(p) = stack.pop() {
        if evals >= opts.max_evals {
            // budget spent: close the panel without new samples
            let v = [p.fa, p.fm, p.fb];
            let fa = patch(v[0], f64::NAN, v[1]);
            let fm = patch(v[1], v[0], v[2]);
            let fb = patch(v[2], v[1], f64::NAN);
            total += simpson(p.a, p.b, fa, fm, fb);
            converged = false;
            continue;
        }
        let m = 0.5 * (p.a + p.b);
        let lm = 0.5 * (p.a + m);
        let rm = 0.5 * (m + p.b);
        let (flm, frm) = (f(lm), f(rm));
        evals += 2;
        let samples = [p.fa, flm, p.fm, frm, p.fb];
        if samples.iter().any(|v| v.is_nan()) {
            return Integral { value: f64::NAN, evals, converged: false };
        }
        if let Some(inf) = adjacent_infinity(&samples) {
            return Integral { value: sign * inf, evals, converged: true };
        }
        let has_inf = samples.iter().any(|v| v.is_infinite());
        let exhausted = evals >= opts.max_evals;
        let at_floor = p.depth >= opts.max_depth;

        if has_inf && !(exhausted || at_floor) {
            // isolated singular sample: refine around it
            stack.push(Panel { a: p.a, b: m, fa: p.fa, fm: flm, fb: p.fm, tol: 0.5 * p.tol, depth: p.depth + 1 });
            stack.push(Panel { a: m, b: p.b, fa: p.fm, fm: frm, fb: p.fb, tol: 0.5 * p.tol, depth: p.depth + 1 });
            continue;
        }
        let s = if has_inf {
            let v: Vec<f64> = (0..5)
                .map(|i| {
                    let l = if i > 0 { samples[i - 1] } else { f64::NAN };
                    let r = if i < 4 { samples[i + 1] } else { f64::NAN };
                    patch(samples[i], l, r)
                })
                .collect();
            simpson(p.a, m, v[0], v[1], v[2]) + simpson(m, p.b, v[2], v[3], v[4])
        } else {
            simpson(p.a, m, p.fa, flm, p.fm) + simpson(m, p.b, p.fm, frm, p.fb)
        };
        let whole = simpson(p.a, p.b, p.fa, p.fm, p.fb);
        let err = s - whole;
        if has_inf || err.abs() <= 15.0 * p.tol || exhausted || at_floor {
            if !(has_inf || err.abs() <= 15.0 * p.tol) {
                converged = false;
            }
            total += if has_inf { s } else { s + err / 15.0 };
            continue;
        }
        stack.push(Panel { a: p.a, b: m, fa: p.fa, fm: flm, fb: p.fm, tol: 0.5 * p.tol, depth: p.depth + 1 });
        stack.push(Panel { a: m, b: p.b, fa: p.fm, fm: frm, fb: p.fb, tol: 0.5 * p.tol, depth: p.depth + 1 });
    }
    Integral { value: sign * total, evals, converged }
}

/// ∫_{lo}^{hi} g(r) dr / r, computed in the variable u = log r.
pub fn log_radial(mut g: impl FnMut(f64) -> f64, lo: f64, hi: f64, opts: SimpsonOptions) -> Integral {
    adaptive_simpson(|u| g(u.exp()), lo.ln(), hi.ln(), opts)
}

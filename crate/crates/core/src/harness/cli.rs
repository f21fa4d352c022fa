//! Command-line front end.
//!
//! Exit codes: 0 success, 2 when a pipeline ran but its hypothesis or
//! bound fails, 1 on other errors, 64 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::json;

use super::exponent::{empirical_holder_exponent, geometric_radii};
use super::ring::{extremal_eta, verify_ring_inequality};
use crate::beltrami::{
    annulus_mass_bound, coefficient_of_map, inversion_weight_max, jacobian, max_dilatation, parse_mu_spec,
    reflect_coefficient, reflect_map, reflected_mass_bound, wirtinger_derivatives, Planar, PlanarMap,
};
use crate::certificates::{
    ball_mean_certificate, ball_mean_condition, boundary_condition, boundary_holder_certificate, circle_points,
    cor3_certificate, cor3_certificate_checked, default_alpha_n, dini_condition, fmv_integral_condition,
    holder_certificate_interior, weighted_condition, ConditionReport, DoublingFamily, DoublingFunction, InteriorScale,
    Separation, Verdict,
};
use crate::error::{input, Error, Result};
use crate::fields::{parse_field_spec, parse_point, BenchmarkMap, ScalarField};
use crate::means::{MeanEngine, DEFAULT_SEED};
use crate::output::to_json;
use crate::sampling::{oracle_integral, Region};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_FAILS: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(name = "qcholder", version, about = "Dilatation means, integral conditions and Hölder certificates")]
struct Cli {
    /// TOML file of flag values; flags on the command line take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Args)]
struct Common {
    /// Field spec, e.g. "power p=2 center=0,0".
    #[arg(short = 'f', long, global = true)]
    field: Option<String>,
    /// CSV file with a `t` column: the decreasing grid of radii.
    #[arg(long, global = true)]
    grid: Option<PathBuf>,
    /// Center point x1,...,xn (defaults to the origin).
    #[arg(long, global = true, allow_hyphen_values = true)]
    center: Option<String>,
    #[arg(long, global = true)]
    eps0: Option<f64>,
    #[arg(long, global = true)]
    alpha: Option<f64>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// JSON instead of CSV where both exist.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Spherical means q(r) on lo:hi:count equally spaced radii.
    Mean {
        #[arg(long)]
        radii: String,
        #[arg(long)]
        resolution: Option<usize>,
    },
    #[command(subcommand)]
    Condition(ConditionCmd),
    #[command(subcommand)]
    Certificate(CertificateCmd),
    #[command(subcommand)]
    Beltrami(BeltramiCmd),
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Debug, Subcommand)]
enum ConditionCmd {
    /// ∫_t^{ε0} (α − q^{−1/(n−1)}) dr/r; α = 1 is the Lipschitz form.
    Dini,
    /// ∫_{t<|x−x0|<ε0} (Q − 1)/|x − x0|ⁿ dm.
    Fmv,
    /// Ball means of Q.
    Ballmean,
    /// φ(1/ε)-weighted ball means.
    Weighted {
        /// unit, power:α, log, power+log:α,β or power*log:α,β
        #[arg(long, default_value = "unit")]
        weight: String,
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        #[arg(long, default_value_t = 2.0)]
        gamma: f64,
        #[arg(long)]
        threshold: Option<f64>,
    },
    /// Half-disk means at equally spaced boundary points.
    Boundary {
        #[arg(long, default_value_t = 16)]
        points: usize,
        /// Use K_μ of this coefficient instead of --field.
        #[arg(long)]
        mu: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
enum CertificateCmd {
    /// Interior certificate from the Dini-type condition.
    Interior {
        #[arg(long = "alpha-n")]
        alpha_n: Option<f64>,
        #[arg(long, default_value_t = 1.0)]
        r0: f64,
        /// Use this C_n directly.
        #[arg(long)]
        cn: Option<f64>,
    },
    /// Certificate from bounded ball means.
    Ballmean {
        #[arg(long = "C")]
        c: f64,
        /// Chordal separation of the image complement (homeomorphisms).
        #[arg(long)]
        delta: Option<f64>,
        /// Target ball radius (open discrete maps).
        #[arg(long)]
        r: Option<f64>,
    },
    /// Certificate from the logarithmic annulus condition; checked on the
    /// grid when --field is given.
    Cor3 {
        #[arg(long = "C")]
        c: f64,
        #[arg(long, default_value_t = 1.0)]
        delta: f64,
    },
    /// Boundary constants α, δ0, 64 ε0^{−α} and L.
    Boundary {
        #[arg(long = "C")]
        c: f64,
    },
}

#[derive(Debug, Subcommand)]
enum BeltramiCmd {
    /// Wirtinger derivatives, μ_f, K and J of a map at z.
    Coeff {
        /// identity, radial:<a>
        #[arg(long)]
        map: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, default_value_t = crate::beltrami::DEFAULT_STEP)]
        h: f64,
    },
    /// Reflected coefficient μ_F(z), and F(z) when --map is given, for |z| > 1.
    Reflect {
        #[arg(long)]
        mu: Option<String>,
        #[arg(long)]
        map: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, default_value_t = crate::beltrami::DEFAULT_STEP)]
        h: f64,
    },
    /// Inversion weight, lens mass and annulus mass bounds.
    Bounds {
        #[arg(long)]
        mu: String,
        #[arg(long, default_value = "1,0", allow_hyphen_values = true)]
        zeta: String,
        #[arg(long, value_delimiter = ',', default_value = "0.05,0.1,0.2")]
        eps: Vec<f64>,
        #[arg(long = "R", value_delimiter = ',', default_value = "1.5,2")]
        r: Vec<f64>,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyCmd {
    /// Ring modulus inequality for a radial map with the extremal η.
    Ring {
        #[arg(long)]
        map: String,
        #[arg(long = "Q")]
        q: String,
        #[arg(long)]
        r1: f64,
        #[arg(long)]
        r2: f64,
        /// Multiplies the extremal η.
        #[arg(long, default_value_t = 1.0)]
        eta_scale: f64,
        #[arg(long, default_value_t = 2)]
        dim: usize,
    },
    /// Fitted Hölder exponent on lo:hi:count geometric radii.
    Exponent {
        #[arg(long)]
        map: String,
        #[arg(long, default_value = "1e-4:0.5:16")]
        radii: String,
        #[arg(long, default_value_t = 2)]
        dim: usize,
    },
    /// Monte Carlo integral of --field over a region.
    Oracle {
        /// ball, annulus or lens
        #[arg(long)]
        region: String,
        #[arg(long)]
        radius: Option<f64>,
        #[arg(long)]
        inner: Option<f64>,
        #[arg(long)]
        outer: Option<f64>,
        #[arg(long, default_value = "1,0", allow_hyphen_values = true)]
        zeta: String,
        #[arg(long)]
        eps: Option<f64>,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
    },
}

/// Runs the CLI with process stdio and returns the exit code.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_cli_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI writing reports to `out` and diagnostics to `err`.
pub fn run_cli_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let argv = match with_config(argv) {
        Ok(a) => a,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(out, "{}", e.render());
                    return if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand { EXIT_USAGE } else { EXIT_OK };
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli) {
        Ok((text, code)) => match emit(&cli.common, &text, out) {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_ERROR
            }
        },
        Err(e @ Error::Refused { .. }) => {
            let _ = writeln!(err, "{e}");
            EXIT_FAILS
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

/// Appends `--key=value` for every config entry whose flag is absent.
fn with_config(mut argv: Vec<OsString>) -> Result<Vec<OsString>> {
    let strs: Vec<String> = argv.iter().map(|a| a.to_string_lossy().into_owned()).collect();
    let path = strs.iter().enumerate().find_map(|(i, a)| {
        if a == "--config" {
            strs.get(i + 1).cloned()
        } else {
            a.strip_prefix("--config=").map(str::to_owned)
        }
    });
    let Some(path) = path else {
        return Ok(argv);
    };
    let text = std::fs::read_to_string(&path)?;
    let table: toml::Table = text.parse().map_err(|e| Error::Input(format!("config {path}: {e}")))?;
    for (key, value) in table {
        let flag = format!("--{key}");
        if strs.iter().any(|a| *a == flag || a.starts_with(&format!("{flag}="))) {
            continue;
        }
        let rendered = match value {
            toml::Value::Boolean(true) => {
                argv.push(flag.into());
                continue;
            }
            toml::Value::Boolean(false) => continue,
            toml::Value::String(s) => s,
            toml::Value::Integer(i) => i.to_string(),
            toml::Value::Float(f) => f.to_string(),
            toml::Value::Array(items) => items
                .iter()
                .map(|v| match v {
                    toml::Value::String(s) => s.clone(),
                    other => other.to_string(),
                })
                .collect::<Vec<_>>()
                .join(","),
            other => return input(format!("config key {key}: unsupported value {other}")),
        };
        argv.push(format!("{flag}={rendered}").into());
    }
    Ok(argv)
}

fn emit(common: &Common, text: &str, out: &mut dyn Write) -> Result<()> {
    match &common.out {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn field(common: &Common) -> Result<ScalarField> {
    let spec = common.field.as_deref().ok_or_else(|| Error::Input("--field is required".into()))?;
    parse_field_spec(spec)
}

fn center(common: &Common, n: usize) -> Result<Vec<f64>> {
    match &common.center {
        Some(c) => {
            let p = parse_point(c)?;
            if p.len() != n {
                return input(format!("center has {} coordinates, expected {n}", p.len()));
            }
            Ok(p)
        }
        None => Ok(vec![0.0; n]),
    }
}

fn complex(text: &str) -> Result<Complex64> {
    let p = parse_point(text)?;
    if p.len() != 2 {
        return input(format!("expected re,im, got {text:?}"));
    }
    Ok(Complex64::new(p[0], p[1]))
}

fn eps0(common: &Common) -> Result<f64> {
    common.eps0.ok_or_else(|| Error::Input("--eps0 is required".into()))
}

fn read_grid(path: &Path) -> Result<Vec<f64>> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_path(path)?;
    let col = rdr.headers()?.iter().position(|h| h == "t").ok_or(Error::Format { row: 1, message: "grid CSV needs a `t` column".into() })?;
    let mut out = Vec::new();
    for (k, rec) in rdr.records().enumerate() {
        let rec = rec?;
        let s = rec.get(col).unwrap_or("");
        out.push(s.parse::<f64>().map_err(|_| Error::Format { row: k + 2, message: format!("bad grid value {s:?}") })?);
    }
    Ok(out)
}

fn grid(common: &Common) -> Result<Option<Vec<f64>>> {
    common.grid.as_deref().map(read_grid).transpose()
}

/// Parses `lo:hi:count`.
fn range(text: &str) -> Result<(f64, f64, usize)> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return input(format!("expected lo:hi:count, got {text:?}"));
    }
    let bad = || Error::Input(format!("expected lo:hi:count, got {text:?}"));
    Ok((
        parts[0].trim().parse().map_err(|_| bad())?,
        parts[1].trim().parse().map_err(|_| bad())?,
        parts[2].trim().parse().map_err(|_| bad())?,
    ))
}

fn json_of<T: Serialize>(v: &T) -> Result<String> {
    to_json(v)
}

fn report(common: &Common, r: &ConditionReport) -> Result<(String, i32)> {
    let text = if common.json { r.to_json()? } else { r.to_csv() };
    Ok((text, if r.verdict == Verdict::Fails { EXIT_FAILS } else { EXIT_OK }))
}

fn planar_map(text: &str) -> Result<PlanarMap> {
    PlanarMap::from_benchmark(&BenchmarkMap::parse(text, 2)?)
}

fn dispatch(cli: &Cli) -> Result<(String, i32)> {
    let common = &cli.common;
    match &cli.cmd {
        Cmd::Mean { radii, resolution } => {
            let q = field(common)?;
            let x0 = center(common, q.dim())?;
            let (lo, hi, count) = range(radii)?;
            if count < 1 || !(lo > 0.0 && lo <= hi) {
                return input("radii need 0 < lo <= hi and count >= 1");
            }
            let rs: Vec<f64> = if count == 1 {
                vec![lo]
            } else {
                (0..count).map(|k| lo + (hi - lo) * k as f64 / (count - 1) as f64).collect()
            };
            let n = q.dim();
            let res = resolution.unwrap_or_else(|| crate::means::default_resolution(n));
            let engine = MeanEngine::new(n, res, common.seed.unwrap_or(DEFAULT_SEED))?;
            let p = engine.profile(&q, &x0, &rs)?;
            Ok((if common.json { json_of(&p)? } else { p.to_csv() }, EXIT_OK))
        }
        Cmd::Condition(c) => {
            let g = grid(common)?;
            let e0 = eps0(common)?;
            let r = match c {
                ConditionCmd::Boundary { points, mu } => {
                    let k = match mu {
                        Some(m) => parse_mu_spec(m)?.dilatation_field()?,
                        None => field(common)?,
                    };
                    boundary_condition(&k, &circle_points(*points), e0, g.as_deref())?
                }
                _ => {
                    let q = field(common)?;
                    let x0 = center(common, q.dim())?;
                    match c {
                        ConditionCmd::Dini => dini_condition(&q, &x0, common.alpha.unwrap_or(1.0), e0, g.as_deref())?,
                        ConditionCmd::Fmv => fmv_integral_condition(&q, &x0, e0, g.as_deref())?,
                        ConditionCmd::Ballmean => ball_mean_condition(&q, &x0, e0, g.as_deref())?,
                        ConditionCmd::Weighted { weight, a, gamma, threshold } => {
                            let family = DoublingFamily::parse(weight)?;
                            let phi = if family == (DoublingFamily::Power { alpha: 0.0 }) {
                                DoublingFunction::unit()
                            } else {
                                DoublingFunction::new(family, *a, *gamma, threshold.unwrap_or(*a))?
                            };
                            weighted_condition(&q, &x0, &phi, e0, g.as_deref())?
                        }
                        ConditionCmd::Boundary { .. } => unreachable!(),
                    }
                }
            };
            report(common, &r)
        }
        Cmd::Certificate(c) => certificate(common, c),
        Cmd::Beltrami(b) => beltrami(b),
        Cmd::Verify(v) => verify(common, v),
    }
}

fn certificate(common: &Common, c: &CertificateCmd) -> Result<(String, i32)> {
    match c {
        CertificateCmd::Interior { alpha_n, r0, cn } => {
            let q = field(common)?;
            let x0 = center(common, q.dim())?;
            let scale = match (cn, alpha_n.or_else(|| default_alpha_n(q.dim()))) {
                (Some(c_n), _) => InteriorScale::Folded { c_n: *c_n },
                (None, Some(alpha_n)) => InteriorScale::Explicit { alpha_n, r0: *r0 },
                (None, None) => return input("α_n has no default in this dimension; pass --alpha-n or --cn"),
            };
            let alpha = common.alpha.unwrap_or(1.0);
            let cert = holder_certificate_interior(&q, &x0, alpha, eps0(common)?, scale, grid(common)?.as_deref())?;
            Ok((cert.to_json()?, EXIT_OK))
        }
        CertificateCmd::Ballmean { c, delta, r } => {
            let q = field(common)?;
            let x0 = center(common, q.dim())?;
            let sep = match (delta, r) {
                (Some(d), None) => Separation::Homeomorphism { delta: *d },
                (None, Some(r)) => Separation::OpenDiscrete { r: *r },
                (None, None) => Separation::Homeomorphism { delta: 1.0 },
                (Some(_), Some(_)) => return input("pass either --delta or --r, not both"),
            };
            let out = ball_mean_certificate(&q, &x0, *c, eps0(common)?, sep, grid(common)?.as_deref())?;
            Ok((out.to_json()?, EXIT_OK))
        }
        CertificateCmd::Cor3 { c, delta } => {
            let e0 = eps0(common)?;
            let cert = if common.field.is_some() {
                let q = field(common)?;
                let x0 = center(common, 2)?;
                cor3_certificate_checked(&q, Complex64::new(x0[0], x0[1]), *delta, *c, e0, grid(common)?.as_deref())?
            } else {
                cor3_certificate(*delta, *c, e0)?
            };
            Ok((cert.to_json()?, EXIT_OK))
        }
        CertificateCmd::Boundary { c } => {
            let b = boundary_holder_certificate(*c, eps0(common)?)?;
            let v = json!({
                "constants": b,
                "local": b.local_certificate()?,
                "global": b.global_certificate()?,
            });
            Ok((json_of(&v)?, EXIT_OK))
        }
    }
}

fn beltrami(b: &BeltramiCmd) -> Result<(String, i32)> {
    match b {
        BeltramiCmd::Coeff { map, z, h } => {
            let f = planar_map(map)?;
            let z = complex(z)?;
            let w = wirtinger_derivatives(&f, z, *h)?;
            let mu = coefficient_of_map(&f, z, *h)?;
            let v = json!({
                "z": [z.re, z.im],
                "fz": [w.fz.re, w.fz.im],
                "fzbar": [w.fzbar.re, w.fzbar.im],
                "mu": [mu.re, mu.im],
                "K": max_dilatation(mu),
                "J": jacobian(&f, z, *h)?,
                "richardson_ok": w.richardson_ok,
            });
            Ok((json_of(&v)?, EXIT_OK))
        }
        BeltramiCmd::Reflect { mu, map, z, h } => {
            let z = complex(z)?;
            if !(z.norm() > 1.0) {
                return input("reflection needs |z| > 1");
            }
            let mut v = serde_json::Map::new();
            v.insert("z".into(), json!([z.re, z.im]));
            if let Some(m) = mu {
                let m = parse_mu_spec(m)?;
                let r = reflect_coefficient(&m, z)?;
                v.insert("mu_F".into(), json!([r.re, r.im]));
                v.insert("K_F".into(), json!(max_dilatation(r)));
            }
            if let Some(f) = map {
                let big = reflect_map(&planar_map(f)?)?;
                let w = big.eval(z);
                let mu = coefficient_of_map(&big, z, *h)?;
                v.insert("F".into(), json!([w.re, w.im]));
                v.insert("mu_of_F".into(), json!([mu.re, mu.im]));
            }
            if v.len() == 1 {
                return input("pass --mu, --map or both");
            }
            Ok((json_of(&v)?, EXIT_OK))
        }
        BeltramiCmd::Bounds { mu, zeta, eps, r } => {
            let m = parse_mu_spec(mu)?;
            let zeta = complex(zeta)?;
            let mut all = true;
            let mut lens = Vec::new();
            for &e in eps {
                let w = inversion_weight_max(e, 720)?;
                let b = reflected_mass_bound(&m, zeta, e)?;
                all &= b.holds && w.sampled_max < 4.0;
                lens.push(json!({ "eps": e, "inversion": w, "mass": b }));
            }
            let mut rings = Vec::new();
            for &rr in r {
                let b = annulus_mass_bound(&m, rr)?;
                all &= b.holds;
                rings.push(json!({ "R": rr, "mass": b }));
            }
            let v = json!({ "lens": lens, "annulus": rings, "all_hold": all });
            Ok((json_of(&v)?, if all { EXIT_OK } else { EXIT_FAILS }))
        }
    }
}

fn verify(common: &Common, v: &VerifyCmd) -> Result<(String, i32)> {
    match v {
        VerifyCmd::Ring { map, q, r1, r2, eta_scale, dim } => {
            let f = BenchmarkMap::parse(map, *dim)?;
            let q = parse_field_spec(q)?;
            let eta = extremal_eta(*r1, *r2);
            let s = *eta_scale;
            let c = verify_ring_inequality(&f, &q, *r1, *r2, |r| s * eta(r))?;
            let code = if c.holds { EXIT_OK } else { EXIT_FAILS };
            Ok((json_of(&c)?, code))
        }
        VerifyCmd::Exponent { map, radii, dim } => {
            let f = BenchmarkMap::parse(map, *dim)?;
            let x0 = center(common, f.dim())?;
            let (lo, hi, count) = range(radii)?;
            let fit = empirical_holder_exponent(&f, &x0, &geometric_radii(lo, hi, count)?)?;
            Ok((json_of(&fit)?, EXIT_OK))
        }
        VerifyCmd::Oracle { region, radius, inner, outer, zeta, eps, samples } => {
            let q = field(common)?;
            let x0 = center(common, q.dim())?;
            let need = |v: &Option<f64>, name: &str| v.ok_or_else(|| Error::Input(format!("--{name} is required for this region")));
            let reg = match region.as_str() {
                "ball" => Region::Ball { center: x0, radius: need(radius, "radius")? },
                "annulus" => Region::Annulus { center: x0, inner: need(inner, "inner")?, outer: need(outer, "outer")? },
                "lens" => {
                    let z = complex(zeta)?;
                    Region::Lens { zeta: [z.re, z.im], eps: need(eps, "eps")? }
                }
                other => return input(format!("unknown region {other:?}; expected ball, annulus or lens")),
            };
            let est = oracle_integral(&q, &reg, *samples, common.seed.unwrap_or(DEFAULT_SEED))?;
            Ok((json_of(&est)?, EXIT_OK))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["qcholder"];
        argv.extend_from_slice(args);
        let code = run_cli_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn mean_csv() {
        let (code, out, _) = run(&["mean", "--field", "const 1", "--center", "0,0", "--radii", "0.1:0.5:10"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 11);
        assert!(out.starts_with("r,q\n1.0000000000000001e-1,1.0000000000000000e0\n"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(&["condition", "dini", "--field", "radial-K K=3", "--eps0", "0.5"]).0, 2);
        assert_eq!(run(&["condition", "dini", "--field", "const 1", "--eps0", "0.5"]).0, 0);
        assert_eq!(run(&["mean", "--bogus"]).0, 64);
        assert_eq!(run(&["certificate", "boundary", "--C", "0.5", "--eps0", "0.5"]).0, 1);
        assert_eq!(run(&["certificate", "interior", "--field", "radial-K K=3", "--eps0", "0.5"]).0, 2);
        assert_eq!(run(&["--help"]).0, 0);
    }
}

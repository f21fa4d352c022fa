//! Dilatation fields Q: ℝⁿ → [0, ∞] and benchmark mappings.
//!
//! Fields come from a one-line spec (`family key=value ...`), from a CSV
//! lattice, or from a closure. Every field carries the ball on which it is
//! defined; the means refuse spheres and balls that leave it.

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use crate::error::{input, Error, Result};
use crate::geometry::{dist, norm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Interpolation {
    #[default]
    Nearest,
    Multilinear,
}

impl std::str::FromStr for Interpolation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nearest" => Ok(Interpolation::Nearest),
            "multilinear" | "linear" => Ok(Interpolation::Multilinear),
            other => input(format!("unknown interpolation mode {other:?}")),
        }
    }
}

/// Samples on a regular lattice in ℝⁿ, `channels` values per node.
///
/// Nodes are stored with the last axis varying fastest.
#[derive(Debug, Clone)]
pub struct Lattice {
    origin: Vec<f64>,
    spacing: Vec<f64>,
    counts: Vec<usize>,
    channels: usize,
    values: Vec<f64>,
}

impl Lattice {
    /// Reads a CSV with header `x1,...,xn,<value columns>`; `channels` is the
    /// number of trailing value columns. Row numbers in errors are file lines.
    pub fn from_csv(path: impl AsRef<Path>, channels: usize) -> Result<Self> {
        let (n, rows) = read_rows(path, channels)?;
        Self::from_rows(n, channels, &rows)
    }

    fn from_rows(n: usize, channels: usize, rows: &[(usize, Vec<f64>)]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Format { row: 2, message: "no data rows".into() });
        }
        let mut origin = Vec::with_capacity(n);
        let mut spacing = Vec::with_capacity(n);
        let mut counts = Vec::with_capacity(n);
        for axis in 0..n {
            let mut coords: Vec<f64> = rows.iter().map(|(_, r)| r[axis]).collect();
            coords.sort_by(f64::total_cmp);
            coords.dedup_by(|a, b| (*a - *b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1e-300));
            if coords.len() < 2 {
                return Err(Error::Format { row: rows[0].0, message: format!("axis x{} needs at least two distinct coordinates", axis + 1) });
            }
            let h = (coords[coords.len() - 1] - coords[0]) / (coords.len() - 1) as f64;
            for (k, c) in coords.iter().enumerate() {
                let expect = coords[0] + h * k as f64;
                if (c - expect).abs() > 1e-9 * h.max(c.abs()) {
                    let row = rows.iter().find(|(_, r)| r[axis] == *c).map_or(rows[0].0, |(l, _)| *l);
                    return Err(Error::Format { row, message: format!("axis x{} is not regularly spaced at {c}", axis + 1) });
                }
            }
            origin.push(coords[0]);
            spacing.push(h);
            counts.push(coords.len());
        }
        let total: usize = counts.iter().product();
        let mut values = vec![f64::NAN; total * channels];
        let mut seen = vec![false; total];
        for (line, r) in rows {
            let mut idx = 0;
            for axis in 0..n {
                let k = ((r[axis] - origin[axis]) / spacing[axis]).round() as usize;
                idx = idx * counts[axis] + k;
            }
            if seen[idx] {
                return Err(Error::Format { row: *line, message: "duplicate lattice node".into() });
            }
            seen[idx] = true;
            values[idx * channels..(idx + 1) * channels].copy_from_slice(&r[n..]);
        }
        if rows.len() != total {
            return Err(Error::Format {
                row: rows[rows.len() - 1].0 + 1,
                message: format!("ragged lattice: {} rows for a {:?} grid", rows.len(), counts),
            });
        }
        Ok(Lattice { origin, spacing, counts, channels, values })
    }

    pub fn dim(&self) -> usize {
        self.origin.len()
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn spacing(&self) -> &[f64] {
        &self.spacing
    }

    /// Lower and upper corners of the bounding box.
    pub fn bounds(&self) -> (Vec<f64>, Vec<f64>) {
        let hi = (0..self.dim()).map(|a| self.origin[a] + self.spacing[a] * (self.counts[a] - 1) as f64).collect();
        (self.origin.clone(), hi)
    }

    /// Center and radius of the largest ball inside the box.
    pub fn inscribed_ball(&self) -> (Vec<f64>, f64) {
        let (lo, hi) = self.bounds();
        let c = lo.iter().zip(&hi).map(|(a, b)| 0.5 * (a + b)).collect();
        let r = lo.iter().zip(&hi).map(|(a, b)| 0.5 * (b - a)).fold(f64::INFINITY, f64::min);
        (c, r)
    }

    /// Iterates over (node coordinates, values).
    pub fn nodes(&self) -> impl Iterator<Item = (Vec<f64>, &[f64])> + '_ {
        let total: usize = self.counts.iter().product();
        (0..total).map(move |idx| {
            let mut rem = idx;
            let mut x = vec![0.0; self.dim()];
            for axis in (0..self.dim()).rev() {
                let k = rem % self.counts[axis];
                rem /= self.counts[axis];
                x[axis] = self.origin[axis] + self.spacing[axis] * k as f64;
            }
            (x, &self.values[idx * self.channels..(idx + 1) * self.channels])
        })
    }

    fn at(&self, idx: &[usize], out: &mut [f64], weight: f64) {
        let mut flat = 0;
        for (axis, &k) in idx.iter().enumerate() {
            flat = flat * self.counts[axis] + k;
        }
        for (o, v) in out.iter_mut().zip(&self.values[flat * self.channels..(flat + 1) * self.channels]) {
            *o += weight * v;
        }
    }

    /// Interpolated values at `x`; points outside the box are clamped onto it.
    pub fn interpolate(&self, x: &[f64], mode: Interpolation) -> Vec<f64> {
        let n = self.dim();
        let mut out = vec![0.0; self.channels];
        let pos: Vec<f64> = (0..n)
            .map(|a| ((x[a] - self.origin[a]) / self.spacing[a]).clamp(0.0, (self.counts[a] - 1) as f64))
            .collect();
        match mode {
            Interpolation::Nearest => {
                let idx: Vec<usize> = pos.iter().map(|p| p.round() as usize).collect();
                self.at(&idx, &mut out, 1.0);
            }
            Interpolation::Multilinear => {
                let base: Vec<usize> = (0..n).map(|a| (pos[a].floor() as usize).min(self.counts[a] - 2)).collect();
                let frac: Vec<f64> = (0..n).map(|a| pos[a] - base[a] as f64).collect();
                let mut idx = vec![0; n];
                for corner in 0..(1usize << n) {
                    let mut w = 1.0;
                    for a in 0..n {
                        let up = (corner >> a) & 1 == 1;
                        idx[a] = base[a] + up as usize;
                        w *= if up { frac[a] } else { 1.0 - frac[a] };
                    }
                    if w != 0.0 {
                        self.at(&idx, &mut out, w);
                    }
                }
            }
        }
        out
    }
}

/// Rows of a lattice CSV as (file line, values); returns the coordinate count.
/// Coordinate count and (CSV row, values) pairs.
type Rows = (usize, Vec<(usize, Vec<f64>)>);

fn read_rows(path: impl AsRef<Path>, channels: usize) -> Result<Rows> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_path(path)?;
    let header = rdr.headers()?.clone();
    if header.len() < channels + 2 {
        return Err(Error::Format { row: 1, message: format!("expected at least 2 coordinate columns and {channels} value columns") });
    }
    let n = header.len() - channels;
    for (i, h) in header.iter().take(n).enumerate() {
        if h != format!("x{}", i + 1) {
            return Err(Error::Format { row: 1, message: format!("coordinate column {} must be named x{}, found {h:?}", i + 1, i + 1) });
        }
    }
    let mut rows: Vec<(usize, Vec<f64>)> = Vec::new();
    for (k, rec) in rdr.records().enumerate() {
        let line = k + 2;
        let rec = rec?;
        if rec.len() != header.len() {
            return Err(Error::Format { row: line, message: format!("expected {} columns, found {}", header.len(), rec.len()) });
        }
        let vals = rec
            .iter()
            .map(|s| s.parse::<f64>().map_err(|e| Error::Format { row: line, message: format!("{s:?}: {e}") }))
            .collect::<Result<Vec<f64>>>()?;
        if let Some(v) = vals.iter().find(|v| !v.is_finite()) {
            return Err(Error::Format { row: line, message: format!("non-finite entry {v}") });
        }
        rows.push((line, vals));
    }
    Ok((n, rows))
}

/// A dilatation field sampled on a lattice.
#[derive(Debug, Clone)]
pub struct GridField {
    pub lattice: Lattice,
    pub mode: Interpolation,
}

impl GridField {
    pub fn new(lattice: Lattice, mode: Interpolation) -> Result<Self> {
        if lattice.channels() != 1 {
            return input("a grid field needs exactly one value column");
        }
        if let Some((x, _)) = lattice.nodes().find(|(_, v)| v[0] < 0.0) {
            return input(format!("negative sample at {x:?}"));
        }
        Ok(GridField { lattice, mode })
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.lattice.interpolate(x, self.mode)[0]
    }
}

type FieldFn = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// Evaluator behind a [`ScalarField`].
#[derive(Clone)]
pub enum Family {
    Const(f64),
    /// |x − c|^p
    Power { p: f64 },
    /// |x − c|^p · log(1/|x − c|)^q, defined on the unit ball about c.
    LogPower { p: f64, q: f64 },
    RadialK(f64),
    /// 1 + c on the ball |x − center| < ρ, 1 outside.
    FmoSpike { c: f64, rho: f64 },
    Grid(GridField),
    Custom { name: String, f: FieldFn },
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Const(c) => write!(f, "Const({c})"),
            Family::Power { p } => write!(f, "Power {{ p: {p} }}"),
            Family::LogPower { p, q } => write!(f, "LogPower {{ p: {p}, q: {q} }}"),
            Family::RadialK(k) => write!(f, "RadialK({k})"),
            Family::FmoSpike { c, rho } => write!(f, "FmoSpike {{ c: {c}, rho: {rho} }}"),
            Family::Grid(g) => write!(f, "Grid({:?}, {:?})", g.lattice.counts(), g.mode),
            Family::Custom { name, .. } => write!(f, "Custom({name})"),
        }
    }
}

/// A nonnegative extended-real field on the ball B(center, domain_radius).
///
/// Parametric families are post-composed with `shift + scale · value`, so
/// `power p=1 shift=1` is Q(x) = 1 + |x|.
#[derive(Debug, Clone)]
pub struct ScalarField {
    dim: usize,
    family: Family,
    center: Vec<f64>,
    domain_radius: f64,
    scale: f64,
    shift: f64,
}

impl ScalarField {
    fn build(dim: usize, family: Family, center: Vec<f64>, domain_radius: f64) -> Self {
        ScalarField { dim, family, center, domain_radius, scale: 1.0, shift: 0.0 }
    }

    fn check_center(center: &[f64]) -> Result<()> {
        if center.len() < 2 {
            return input(format!("fields need dimension >= 2, got {}", center.len()));
        }
        if center.iter().any(|c| !c.is_finite()) {
            return input("center must be finite");
        }
        Ok(())
    }

    pub fn constant(n: usize, c: f64) -> Result<Self> {
        if !(c >= 0.0) {
            return input(format!("constant field must be >= 0, got {c}"));
        }
        Self::check_center(&vec![0.0; n])?;
        Ok(Self::build(n, Family::Const(c), vec![0.0; n], f64::INFINITY))
    }

    pub fn power(center: Vec<f64>, p: f64) -> Result<Self> {
        Self::check_center(&center)?;
        if !p.is_finite() {
            return input("exponent must be finite");
        }
        Ok(Self::build(center.len(), Family::Power { p }, center, f64::INFINITY))
    }

    pub fn log_power(center: Vec<f64>, p: f64, q: f64) -> Result<Self> {
        Self::check_center(&center)?;
        if !p.is_finite() || !q.is_finite() {
            return input("exponents must be finite");
        }
        Ok(Self::build(center.len(), Family::LogPower { p, q }, center, 1.0))
    }

    pub fn radial_k(n: usize, k: f64) -> Result<Self> {
        if !(k >= 1.0) || !k.is_finite() {
            return input(format!("dilatation K must be a finite value >= 1, got {k}"));
        }
        Self::check_center(&vec![0.0; n])?;
        Ok(Self::build(n, Family::RadialK(k), vec![0.0; n], f64::INFINITY))
    }

    pub fn fmo_spike(center: Vec<f64>, c: f64, rho: f64) -> Result<Self> {
        Self::check_center(&center)?;
        if !(c >= -1.0) || !c.is_finite() || !(rho > 0.0) {
            return input(format!("spike needs c >= -1 and rho > 0, got c={c}, rho={rho}"));
        }
        Ok(Self::build(center.len(), Family::FmoSpike { c, rho }, center, f64::INFINITY))
    }

    pub fn from_grid(grid: GridField) -> Self {
        let (c, r) = grid.lattice.inscribed_ball();
        Self::build(grid.lattice.dim(), Family::Grid(grid), c, r)
    }

    /// A field given by a closure; it must return values in [0, ∞].
    pub fn from_fn(n: usize, name: impl Into<String>, f: impl Fn(&[f64]) -> f64 + Send + Sync + 'static) -> Result<Self> {
        Self::check_center(&vec![0.0; n])?;
        Ok(Self::build(n, Family::Custom { name: name.into(), f: Arc::new(f) }, vec![0.0; n], f64::INFINITY))
    }

    /// Restricts the field to B(center, r).
    pub fn with_domain_radius(mut self, r: f64) -> Result<Self> {
        if !(r > 0.0) {
            return input(format!("domain radius must be positive, got {r}"));
        }
        self.domain_radius = r;
        Ok(self)
    }

    /// Replaces Q by shift + scale · Q.
    pub fn affine(mut self, scale: f64, shift: f64) -> Result<Self> {
        if !(scale >= 0.0 && shift >= 0.0) || !scale.is_finite() || !shift.is_finite() {
            return input(format!("scale and shift must be finite and >= 0, got {scale}, {shift}"));
        }
        self.shift += self.scale * shift;
        self.scale *= scale;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn center(&self) -> &[f64] {
        &self.center
    }

    pub fn domain_radius(&self) -> f64 {
        self.domain_radius
    }

    /// Q(x). Returns NaN only when a custom closure misbehaves.
    pub fn eval(&self, x: &[f64]) -> f64 {
        let raw = match &self.family {
            Family::Const(c) | Family::RadialK(c) => *c,
            Family::Power { p } => dist(x, &self.center).powf(*p),
            Family::LogPower { p, q } => log_power(dist(x, &self.center), *p, *q),
            Family::FmoSpike { c, rho } => {
                if dist(x, &self.center) < *rho {
                    1.0 + c
                } else {
                    1.0
                }
            }
            Family::Grid(g) => g.eval(x),
            Family::Custom { f, .. } => {
                let v = f(x);
                if v >= 0.0 {
                    v
                } else {
                    f64::NAN
                }
            }
        };
        if self.scale == 1.0 && self.shift == 0.0 {
            raw
        } else if raw.is_infinite() && self.scale == 0.0 {
            self.shift
        } else {
            self.shift + self.scale * raw
        }
    }

    /// Errors unless the closed ball B(x0, r) lies in the domain.
    pub fn check_ball(&self, x0: &[f64], r: f64) -> Result<()> {
        if x0.len() != self.dim {
            return input(format!("point has dimension {}, field has {}", x0.len(), self.dim));
        }
        let reach = dist(x0, &self.center) + r;
        if reach > self.domain_radius * (1.0 + 1e-12) {
            return Err(Error::Domain(format!(
                "ball of radius {r} about {x0:?} leaves the field's domain B({:?}, {})",
                self.center, self.domain_radius
            )));
        }
        Ok(())
    }
}

fn log_power(r: f64, p: f64, q: f64) -> f64 {
    if r == 0.0 {
        return if p > 0.0 {
            0.0
        } else if p < 0.0 || q > 0.0 {
            f64::INFINITY
        } else if q < 0.0 {
            0.0
        } else {
            1.0
        };
    }
    if r >= 1.0 {
        return if q > 0.0 { 0.0 } else if q == 0.0 { r.powf(p) } else { f64::INFINITY };
    }
    r.powf(p) * (-r.ln()).powf(q)
}

/// Parses a field spec; see the crate README for the grammar.
///
/// ```
/// let q = qcholder::fields::parse_field_spec("power p=1 shift=1").unwrap();
/// assert_eq!(q.eval(&[0.3, 0.4]), 1.5);
/// ```
pub fn parse_field_spec(text: &str) -> Result<ScalarField> {
    let tokens = tokenize(text);
    let Some(&(pos0, family)) = tokens.first() else {
        return Err(Error::Parse { position: 1, message: "empty field spec".into() });
    };
    let mut kv = KeyValues::new(&tokens[1..], text.len());
    let field = match family {
        "const" => {
            let c = kv.positional_or("c")?;
            ScalarField::constant(kv.dim(None)?, c.0).map_err(|e| at(c.1, e))?
        }
        "power" => {
            let p = kv.require("p")?;
            let center = kv.center()?;
            ScalarField::power(center, p.0).map_err(|e| at(p.1, e))?
        }
        "log-power" => {
            let p = kv.require("p")?;
            let q = kv.require("q")?;
            let center = kv.center()?;
            ScalarField::log_power(center, p.0, q.0).map_err(|e| at(p.1, e))?
        }
        "radial-K" | "radial-k" => {
            let k = kv.require("K")?;
            ScalarField::radial_k(kv.dim(None)?, k.0).map_err(|e| at(k.1, e))?
        }
        "fmo-spike" => {
            let c = kv.require("c")?;
            let rho = kv.require("rho")?;
            let center = kv.center()?;
            ScalarField::fmo_spike(center, c.0, rho.0).map_err(|e| at(c.1, e))?
        }
        "grid" => {
            let (path_pos, path) = kv.take_positional().ok_or(Error::Parse { position: text.len() + 1, message: "grid needs a CSV path".into() })?;
            let mode = match kv.take("mode") {
                Some((p, m)) => m.parse().map_err(|e| at(p, e))?,
                None => Interpolation::Nearest,
            };
            let g = load_grid_field(path, mode).map_err(|e| at(path_pos, e))?;
            if let Some((p, _)) = kv.take("dim") {
                return Err(Error::Parse { position: p, message: "grid fields take their dimension from the file".into() });
            }
            g
        }
        other => {
            return Err(Error::Parse { position: pos0, message: format!("unknown field family {other:?}") });
        }
    };
    kv.finish(field)
}

fn at(position: usize, e: Error) -> Error {
    match e {
        Error::Parse { .. } => e,
        other => Error::Parse { position, message: other.to_string() },
    }
}

/// Whitespace-separated tokens with their 1-based byte columns.
fn tokenize(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in text.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &text[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &text[s..]));
    }
    out
}

struct KeyValues<'a> {
    positional: Vec<(usize, &'a str)>,
    pairs: Vec<(usize, &'a str, &'a str)>,
    end: usize,
}

impl<'a> KeyValues<'a> {
    fn new(tokens: &[(usize, &'a str)], len: usize) -> Self {
        let mut positional = Vec::new();
        let mut pairs = Vec::new();
        for &(pos, tok) in tokens {
            match tok.split_once('=') {
                Some((k, v)) => pairs.push((pos, k, v)),
                None => positional.push((pos, tok)),
            }
        }
        KeyValues { positional, pairs, end: len + 1 }
    }

    fn take(&mut self, key: &str) -> Option<(usize, &'a str)> {
        let i = self.pairs.iter().position(|(_, k, _)| *k == key)?;
        let (pos, k, v) = self.pairs.remove(i);
        Some((pos + k.len() + 1, v))
    }

    fn take_positional(&mut self) -> Option<(usize, &'a str)> {
        if self.positional.is_empty() {
            None
        } else {
            Some(self.positional.remove(0))
        }
    }

    fn number(pos: usize, v: &str) -> Result<(f64, usize)> {
        let x = match v {
            "inf" | "+inf" => f64::INFINITY,
            _ => v.parse::<f64>().map_err(|_| Error::Parse { position: pos, message: format!("expected a number, found {v:?}") })?,
        };
        Ok((x, pos))
    }

    fn get(&mut self, key: &str) -> Result<Option<(f64, usize)>> {
        self.take(key).map(|(p, v)| Self::number(p, v)).transpose()
    }

    fn require(&mut self, key: &str) -> Result<(f64, usize)> {
        self.get(key)?.ok_or_else(|| Error::Parse { position: self.end, message: format!("missing parameter {key}=") })
    }

    fn positional_or(&mut self, key: &str) -> Result<(f64, usize)> {
        if let Some(v) = self.get(key)? {
            return Ok(v);
        }
        match self.take_positional() {
            Some((p, v)) => Self::number(p, v),
            None => Err(Error::Parse { position: self.end, message: format!("missing value {key}") }),
        }
    }

    fn dim(&mut self, center_len: Option<(usize, usize)>) -> Result<usize> {
        let d = self.take("dim");
        match (d, center_len) {
            (Some((p, v)), c) => {
                let n: usize = v.parse().map_err(|_| Error::Parse { position: p, message: format!("dim must be an integer, found {v:?}") })?;
                if n < 2 {
                    return Err(Error::Parse { position: p, message: format!("dim must be >= 2, got {n}") });
                }
                if let Some((len, cp)) = c {
                    if len != n {
                        return Err(Error::Parse { position: cp, message: format!("center has {len} coordinates but dim={n}") });
                    }
                }
                Ok(n)
            }
            (None, Some((len, _))) => Ok(len),
            (None, None) => Ok(2),
        }
    }

    fn center(&mut self) -> Result<Vec<f64>> {
        match self.take("center") {
            Some((p, v)) => {
                let c = parse_point(v).map_err(|e| at(p, e))?;
                let n = self.dim(Some((c.len(), p)))?;
                debug_assert_eq!(n, c.len());
                Ok(c)
            }
            None => Ok(vec![0.0; self.dim(None)?]),
        }
    }

    fn finish(mut self, mut field: ScalarField) -> Result<ScalarField> {
        if let Some((r, p)) = self.get("radius")? {
            field = field.with_domain_radius(r).map_err(|e| at(p, e))?;
        }
        let scale = self.get("scale")?;
        let shift = self.get("shift")?;
        if scale.is_some() || shift.is_some() {
            let pos = scale.or(shift).map_or(self.end, |s| s.1);
            field = field.affine(scale.map_or(1.0, |s| s.0), shift.map_or(0.0, |s| s.0)).map_err(|e| at(pos, e))?;
        }
        if let Some(&(p, k, _)) = self.pairs.first() {
            return Err(Error::Parse { position: p, message: format!("unknown parameter {k:?}") });
        }
        if let Some(&(p, t)) = self.positional.first() {
            return Err(Error::Parse { position: p, message: format!("unexpected token {t:?}") });
        }
        Ok(field)
    }
}

/// Parses `x1,x2,...`.
pub fn parse_point(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|s| s.trim().parse::<f64>().map_err(|_| Error::Input(format!("bad coordinate {s:?} in {text:?}"))))
        .collect()
}

/// Loads a CSV lattice `x1,...,xn,q` as a field.
pub fn load_grid_field(path: impl AsRef<Path>, mode: Interpolation) -> Result<ScalarField> {
    let (n, rows) = read_rows(path, 1)?;
    if let Some((row, r)) = rows.iter().find(|(_, r)| r[n] < 0.0) {
        return Err(Error::Format { row: *row, message: format!("negative sample {}", r[n]) });
    }
    let lattice = Lattice::from_rows(n, 1, &rows)?;
    Ok(ScalarField::from_grid(GridField::new(lattice, mode)?))
}

/// A mapping used as a benchmark.
#[derive(Debug, Clone)]
pub enum MapKind {
    Identity,
    /// x ↦ x·|x|^{a−1}, a ∈ (0, 1].
    RadialStretch { a: f64 },
    /// Values y1..yn on a lattice, multilinear interpolation.
    Grid(Lattice),
}

#[derive(Debug, Clone)]
pub struct BenchmarkMap {
    dim: usize,
    kind: MapKind,
}

impl BenchmarkMap {
    pub fn identity(n: usize) -> Result<Self> {
        if n < 2 {
            return input(format!("maps need dimension >= 2, got {n}"));
        }
        Ok(BenchmarkMap { dim: n, kind: MapKind::Identity })
    }

    pub fn radial_stretch(n: usize, a: f64) -> Result<Self> {
        if n < 2 {
            return input(format!("maps need dimension >= 2, got {n}"));
        }
        if !(a > 0.0 && a <= 1.0) {
            return input(format!("stretch exponent must lie in (0, 1], got {a}"));
        }
        Ok(BenchmarkMap { dim: n, kind: MapKind::RadialStretch { a } })
    }

    /// Reads a CSV with header `x1..xn,y1..yn`.
    pub fn from_grid_csv(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let header = csv::Reader::from_path(path)?.headers()?.len();
        if header % 2 != 0 || header < 4 {
            return Err(Error::Format { row: 1, message: "map grids need columns x1..xn,y1..yn".into() });
        }
        let lattice = Lattice::from_csv(path, header / 2)?;
        Ok(BenchmarkMap { dim: lattice.dim(), kind: MapKind::Grid(lattice) })
    }

    /// Parses `identity`, `radial:<a>` or `grid:<path>`; `n` sets the dimension
    /// for the closed-form maps.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        if text == "identity" {
            return Self::identity(n);
        }
        if let Some(a) = text.strip_prefix("radial:") {
            let a: f64 = a.parse().map_err(|_| Error::Parse { position: 8, message: format!("bad stretch exponent {a:?}") })?;
            return Self::radial_stretch(n, a);
        }
        if let Some(p) = text.strip_prefix("grid:") {
            return Self::from_grid_csv(p);
        }
        Err(Error::Parse { position: 1, message: format!("unknown map {text:?}; expected identity, radial:<a> or grid:<path>") })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> &MapKind {
        &self.kind
    }

    /// Radial profile ρ with |f(x)| = ρ(|x|), for radial maps.
    pub fn radial_profile(&self, r: f64) -> Option<f64> {
        match self.kind {
            MapKind::Identity => Some(r),
            MapKind::RadialStretch { a } => Some(r.powf(a)),
            MapKind::Grid(_) => None,
        }
    }

    /// The exact dilatation field, when known in closed form.
    pub fn exact_dilatation(&self) -> Option<ScalarField> {
        match self.kind {
            MapKind::Identity => ScalarField::constant(self.dim, 1.0).ok(),
            MapKind::RadialStretch { a } => ScalarField::constant(self.dim, a.powi(1 - self.dim as i32)).ok(),
            MapKind::Grid(_) => None,
        }
    }

    /// Exact Hölder exponent at the origin, when known.
    pub fn exact_exponent(&self) -> Option<f64> {
        match self.kind {
            MapKind::Identity => Some(1.0),
            MapKind::RadialStretch { a } => Some(a),
            MapKind::Grid(_) => None,
        }
    }
}

/// f(x) for a benchmark map.
pub fn eval_map(f: &BenchmarkMap, x: &[f64]) -> Vec<f64> {
    match &f.kind {
        MapKind::Identity => x.to_vec(),
        MapKind::RadialStretch { a } => {
            let r = norm(x);
            if r == 0.0 {
                return vec![0.0; x.len()];
            }
            if *a == 1.0 {
                return x.to_vec();
            }
            let s = r.powf(a - 1.0);
            x.iter().map(|c| c * s).collect()
        }
        MapKind::Grid(l) => l.interpolate(x, Interpolation::Multilinear),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn csv_file(body: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(body.as_bytes()).unwrap();
        f
    }

    #[test]
    fn spec_examples() {
        let q = parse_field_spec("const 1.0").unwrap();
        assert_eq!(q.eval(&[0.2, 5.0]), 1.0);
        let q = parse_field_spec("power p=2 center=0,0").unwrap();
        assert_eq!(q.eval(&[3.0, 4.0]), 25.0);
        let q = parse_field_spec("radial-K K=4").unwrap();
        assert_eq!(q.eval(&[0.1, 0.1]), 4.0);
        let q = parse_field_spec("radial-K K=4 dim=3").unwrap();
        assert_eq!(q.dim(), 3);
    }

    #[test]
    fn other_families() {
        let q = parse_field_spec("log-power p=1 q=1 center=0,0").unwrap();
        let x = [0.5, 0.0];
        assert!((q.eval(&x) - 0.5 * 2f64.ln()).abs() < 1e-15);
        assert_eq!(q.domain_radius(), 1.0);
        let q = parse_field_spec("log-power p=0 q=1").unwrap();
        assert_eq!(q.eval(&[0.0, 0.0]), f64::INFINITY);
        let q = parse_field_spec("fmo-spike c=3 rho=0.1 center=1,0").unwrap();
        assert_eq!(q.eval(&[1.05, 0.0]), 4.0);
        assert_eq!(q.eval(&[1.2, 0.0]), 1.0);
        let q = parse_field_spec("power p=1 shift=1 scale=2").unwrap();
        assert_eq!(q.eval(&[0.0, 0.5]), 2.0);
        let q = parse_field_spec("power p=-1").unwrap();
        assert_eq!(q.eval(&[0.0, 0.0]), f64::INFINITY);
    }

    #[test]
    fn parse_errors_carry_columns() {
        match parse_field_spec("bogus 1") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 1),
            other => panic!("{other:?}"),
        }
        match parse_field_spec("power p=x") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 9),
            other => panic!("{other:?}"),
        }
        match parse_field_spec("const 1 foo=2") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 9),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_field_spec("power center=0,0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_field_spec("const -1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_field_spec("power p=1 center=0,0 dim=3"), Err(Error::Parse { .. })));
        assert!(matches!(parse_field_spec(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn grid_constant_and_bilinear() {
        let f = csv_file("x1,x2,q\n0,0,3\n0,1,3\n1,0,3\n1,1,3\n");
        let q = load_grid_field(f.path(), Interpolation::Multilinear).unwrap();
        assert_eq!(q.eval(&[0.37, 0.81]), 3.0);

        let f = csv_file("x1,x2,q\n0,0,0\n0,1,0\n1,0,0\n1,1,4\n");
        let q = load_grid_field(f.path(), Interpolation::Multilinear).unwrap();
        assert_eq!(q.eval(&[0.5, 0.5]), 1.0);
        let spec = format!("grid {} mode=multilinear", f.path().display());
        assert_eq!(parse_field_spec(&spec).unwrap().eval(&[0.5, 0.5]), 1.0);
    }

    #[test]
    fn grid_round_trip_nearest() {
        let mut body = String::from("x1,x2,q\n");
        for i in 0..7 {
            for j in 0..5 {
                body += &format!("{},{},{}\n", -0.3 + 0.1 * i as f64, 0.2 * j as f64, (i * 5 + j) as f64 * 0.37);
            }
        }
        let f = csv_file(&body);
        let q = load_grid_field(f.path(), Interpolation::Nearest).unwrap();
        for i in 0..7 {
            for j in 0..5 {
                let x = [-0.3 + 0.1 * i as f64, 0.2 * j as f64];
                assert_eq!(q.eval(&x), (i * 5 + j) as f64 * 0.37);
            }
        }
    }

    #[test]
    fn grid_format_errors() {
        let f = csv_file("x1,x2,q\n0,0,1\n0,1,-1\n1,0,1\n1,1,1\n");
        assert!(matches!(load_grid_field(f.path(), Interpolation::Nearest), Err(Error::Format { .. })));
        let f = csv_file("x1,x2,q\n0,0,1\n0,1,1\n1,0,1\n");
        assert!(matches!(load_grid_field(f.path(), Interpolation::Nearest), Err(Error::Format { .. })));
        let f = csv_file("x1,x2,q\n0,0,1\n0,1,1\n1,0,1\n1,1\n");
        match load_grid_field(f.path(), Interpolation::Nearest) {
            Err(Error::Format { row, .. }) => assert_eq!(row, 5),
            Err(Error::Csv(_)) => {}
            other => panic!("{other:?}"),
        }
        let f = csv_file("x1,x2,q\n0,0,1\n0,1,1\n1,0,1\n1,1,nan\n");
        match load_grid_field(f.path(), Interpolation::Nearest) {
            Err(Error::Format { row, .. }) => assert_eq!(row, 5),
            other => panic!("{other:?}"),
        }
        let f = csv_file("x1,x2,q\n0,0,1\n0,0,1\n1,0,1\n1,1,1\n");
        assert!(matches!(load_grid_field(f.path(), Interpolation::Nearest), Err(Error::Format { .. })));
        let f = csv_file("x1,x2,q\n0,0,1\n0,1,1\n0,3,1\n1,0,1\n1,1,1\n1,3,1\n");
        assert!(matches!(load_grid_field(f.path(), Interpolation::Nearest), Err(Error::Format { .. })));
    }

    #[test]
    fn grid_domain_is_inscribed_ball() {
        let f = csv_file("x1,x2,q\n-1,-2,1\n-1,2,1\n1,-2,1\n1,2,1\n");
        let q = load_grid_field(f.path(), Interpolation::Nearest).unwrap();
        assert_eq!(q.center(), &[0.0, 0.0]);
        assert_eq!(q.domain_radius(), 1.0);
        assert!(q.check_ball(&[0.0, 0.0], 0.9).is_ok());
        assert!(matches!(q.check_ball(&[0.5, 0.0], 0.9), Err(Error::Domain(_))));
    }

    #[test]
    fn map_examples() {
        let id = BenchmarkMap::identity(2).unwrap();
        assert_eq!(eval_map(&id, &[0.3, 0.4]), vec![0.3, 0.4]);
        let s = BenchmarkMap::radial_stretch(2, 0.5).unwrap();
        assert_eq!(eval_map(&s, &[1.0, 0.0]), vec![1.0, 0.0]);
        assert_eq!(eval_map(&s, &[0.25, 0.0]), vec![0.5, 0.0]);
        assert_eq!(eval_map(&s, &[0.0, 0.0]), vec![0.0, 0.0]);
        assert!(BenchmarkMap::radial_stretch(2, 1.5).is_err());
        assert!(matches!(BenchmarkMap::parse("radial:0.25", 3).unwrap().kind(), MapKind::RadialStretch { a } if *a == 0.25));
        assert_eq!(s.exact_dilatation().unwrap().eval(&[0.1, 0.2]), 2.0);
    }

    #[test]
    fn grid_map() {
        let f = csv_file("x1,x2,y1,y2\n0,0,0,0\n0,1,0,2\n1,0,2,0\n1,1,2,2\n");
        let m = BenchmarkMap::from_grid_csv(f.path()).unwrap();
        assert_eq!(eval_map(&m, &[0.25, 0.5]), vec![0.5, 1.0]);
        assert!(m.radial_profile(0.5).is_none());
    }
}

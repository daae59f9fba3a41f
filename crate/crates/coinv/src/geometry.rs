//! Closed-curve geometry: discretized boundaries, measurement and auxiliary
//! circles, star-like trigonometric shapes, random spline shapes, and the
//! relative L2 error between radial functions.
//!
//! Every curve is parameterized over `[0, 2π)` at equispaced nodes with
//! trapezoidal quadrature weights `(2π/n)|x'(t)|`, which is spectrally
//! accurate for the periodic integrands that arise here.

use crate::{Error, Result};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};
use std::io::{BufRead, Write};

/// A closed curve discretized at equispaced parameter values.
#[derive(Debug, Clone, PartialEq)]
pub struct ParametricCurve {
    /// Parameter values, equispaced on `[0, 2π)`.
    pub t: Vec<f64>,
    /// Node coordinates.
    pub points: Vec<[f64; 2]>,
    /// Parameter derivatives `dx/dt` at the nodes.
    pub d_points: Vec<[f64; 2]>,
    /// Outward unit normals (counterclockwise orientation assumed).
    pub normals: Vec<[f64; 2]>,
    /// Trapezoidal quadrature weights `(2π/n)|dx/dt|`.
    pub weights: Vec<f64>,
}

impl ParametricCurve {
    /// Builds a curve from a parameterization and its derivative.
    pub fn from_parameterization<P, D>(n_nodes: usize, point: P, deriv: D) -> Result<Self>
    where
        P: Fn(f64) -> [f64; 2],
        D: Fn(f64) -> [f64; 2],
    {
        if n_nodes < 8 {
            return Err(Error::InvalidInput(format!(
                "need at least 8 nodes, got {n_nodes}"
            )));
        }
        let h = TAU / n_nodes as f64;
        let mut curve = ParametricCurve {
            t: Vec::with_capacity(n_nodes),
            points: Vec::with_capacity(n_nodes),
            d_points: Vec::with_capacity(n_nodes),
            normals: Vec::with_capacity(n_nodes),
            weights: Vec::with_capacity(n_nodes),
        };
        for i in 0..n_nodes {
            let t = h * i as f64;
            let p = point(t);
            let d = deriv(t);
            let speed = d[0].hypot(d[1]);
            if !(speed > 0.0) || !speed.is_finite() {
                return Err(Error::Geometry(format!(
                    "parameterization is irregular at t={t}: |dx/dt|={speed}"
                )));
            }
            curve.t.push(t);
            curve.points.push(p);
            curve.d_points.push(d);
            curve.normals.push([d[1] / speed, -d[0] / speed]);
            curve.weights.push(h * speed);
        }
        Ok(curve)
    }

    pub fn n_nodes(&self) -> usize {
        self.points.len()
    }

    /// `∮ f ds` by the node weights.
    pub fn integrate(&self, values: &[f64]) -> f64 {
        self.weights.iter().zip(values).map(|(w, v)| w * v).sum()
    }

    /// Signed enclosed area, `(1/2)∮(x dy - y dx)`; positive for
    /// counterclockwise orientation.
    pub fn signed_area(&self) -> f64 {
        let h = TAU / self.n_nodes() as f64;
        self.points
            .iter()
            .zip(&self.d_points)
            .map(|(p, d)| 0.5 * (p[0] * d[1] - p[1] * d[0]) * h)
            .sum()
    }

    /// Largest node distance from the origin.
    pub fn max_radius(&self) -> f64 {
        self.points.iter().map(|p| p[0].hypot(p[1])).fold(0.0, f64::max)
    }

    /// Smallest node distance from the origin.
    pub fn min_radius(&self) -> f64 {
        self.points.iter().map(|p| p[0].hypot(p[1])).fold(f64::INFINITY, f64::min)
    }

    /// Tests whether `p` lies strictly inside the polygon spanned by the
    /// nodes (even-odd ray casting).
    pub fn contains(&self, p: [f64; 2]) -> bool {
        let pts = &self.points;
        let n = pts.len();
        let mut inside = false;
        let mut j = n - 1;
        for i in 0..n {
            let (xi, yi) = (pts[i][0], pts[i][1]);
            let (xj, yj) = (pts[j][0], pts[j][1]);
            if (yi > p[1]) != (yj > p[1]) {
                let x_cross = xj + (p[1] - yj) / (yi - yj) * (xi - xj);
                if p[0] < x_cross {
                    inside = !inside;
                }
            }
            j = i;
        }
        inside
    }

    /// Writes the curve as CSV with header `t,x,y,nx,ny,w`, 17 significant
    /// digits per value.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "t,x,y,nx,ny,w")?;
        for i in 0..self.n_nodes() {
            writeln!(
                w,
                "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
                self.t[i],
                self.points[i][0],
                self.points[i][1],
                self.normals[i][0],
                self.normals[i][1],
                self.weights[i]
            )?;
        }
        Ok(())
    }

    /// Reads a curve written by [`write_csv`](Self::write_csv). Parameter
    /// derivatives are reconstructed from the stored normal and weight.
    pub fn read_csv<R: BufRead>(r: R) -> Result<Self> {
        let mut lines = r.lines();
        let header = lines
            .next()
            .transpose()?
            .ok_or_else(|| malformed("empty curve file"))?;
        if header.trim() != "t,x,y,nx,ny,w" {
            return Err(malformed(&format!("unexpected curve header `{header}`")));
        }
        let mut curve = ParametricCurve {
            t: vec![],
            points: vec![],
            d_points: vec![],
            normals: vec![],
            weights: vec![],
        };
        for line in lines {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let f: Vec<f64> = line
                .split(',')
                .map(|s| s.trim().parse::<f64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| malformed(&format!("bad number in `{line}`: {e}")))?;
            if f.len() != 6 {
                return Err(malformed(&format!("expected 6 columns, got {}", f.len())));
            }
            curve.t.push(f[0]);
            curve.points.push([f[1], f[2]]);
            curve.normals.push([f[3], f[4]]);
            curve.weights.push(f[5]);
        }
        let n = curve.t.len();
        if n < 8 {
            return Err(malformed("curve file has fewer than 8 nodes"));
        }
        let h = TAU / n as f64;
        for i in 0..n {
            let speed = curve.weights[i] / h;
            // normal = (y', -x')/speed  =>  (x', y') = (-ny, nx) * speed
            curve.d_points.push([-curve.normals[i][1] * speed, curve.normals[i][0] * speed]);
        }
        Ok(curve)
    }
}

fn malformed(reason: &str) -> Error {
    Error::Artifact { path: "<curve csv>".into(), reason: reason.into() }
}

/// Circle of given center and radius.
pub fn make_circle(center: [f64; 2], radius: f64, n_nodes: usize) -> Result<ParametricCurve> {
    if !(radius > 0.0) {
        return Err(Error::InvalidInput(format!("radius must be positive, got {radius}")));
    }
    ParametricCurve::from_parameterization(
        n_nodes,
        |t| [center[0] + radius * t.cos(), center[1] + radius * t.sin()],
        |t| [-radius * t.sin(), radius * t.cos()],
    )
}

/// Leaf-shaped boundary `(1 + 0.2 cos nt)(cos t, sin t)`.
pub fn make_nleaf(n: u32, n_nodes: usize) -> Result<ParametricCurve> {
    if n < 1 {
        return Err(Error::InvalidInput("leaf count must be at least 1".into()));
    }
    let nf = n as f64;
    ParametricCurve::from_parameterization(
        n_nodes,
        move |t| {
            let r = 1.0 + 0.2 * (nf * t).cos();
            [r * t.cos(), r * t.sin()]
        },
        move |t| {
            let r = 1.0 + 0.2 * (nf * t).cos();
            let dr = -0.2 * nf * (nf * t).sin();
            [dr * t.cos() - r * t.sin(), dr * t.sin() + r * t.cos()]
        },
    )
}

/// Radial function of the n-leaf boundary.
pub fn nleaf_radius(n: u32, theta: f64) -> f64 {
    1.0 + 0.2 * (n as f64 * theta).cos()
}

/// Kite-shaped boundary `(cos t + 0.65 cos 2t - 0.65, 1.5 sin t)`.
pub fn make_kite(n_nodes: usize) -> Result<ParametricCurve> {
    ParametricCurve::from_parameterization(n_nodes, kite_point, kite_deriv)
}

fn kite_point(t: f64) -> [f64; 2] {
    [t.cos() + 0.65 * (2.0 * t).cos() - 0.65, 1.5 * t.sin()]
}

fn kite_deriv(t: f64) -> [f64; 2] {
    [-t.sin() - 1.3 * (2.0 * t).sin(), 1.5 * t.cos()]
}

/// Radial function of the kite about the origin, found by intersecting the
/// ray at angle `theta` with the boundary. Used for error reporting against
/// star-like reconstructions; the outermost intersection is taken.
pub fn kite_radius(theta: f64) -> f64 {
    let dir = [theta.cos(), theta.sin()];
    let f = |t: f64| {
        let p = kite_point(t);
        p[0] * dir[1] - p[1] * dir[0]
    };
    let scan = 4096;
    let h = TAU / scan as f64;
    let mut best: f64 = 0.0;
    let mut ta = 0.0;
    let mut fa = f(ta);
    for i in 1..=scan {
        let tb = h * i as f64;
        let fb = f(tb);
        if fa == 0.0 || fa * fb < 0.0 {
            let (mut a, mut b, mut va) = (ta, tb, fa);
            for _ in 0..60 {
                let m = 0.5 * (a + b);
                let vm = f(m);
                if va * vm <= 0.0 {
                    b = m;
                } else {
                    a = m;
                    va = vm;
                }
            }
            let p = kite_point(0.5 * (a + b));
            if p[0] * dir[0] + p[1] * dir[1] > 0.0 {
                best = best.max(p[0].hypot(p[1]));
            }
        }
        ta = tb;
        fa = fb;
    }
    best
}

/// Star-like boundary given by a trigonometric radial polynomial of degree
/// at most 8: `r(t) = a0 + Σ_{j=1..8} (a_j cos jt + b_j sin jt)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StarShape {
    pub a0: f64,
    pub a: [f64; 8],
    pub b: [f64; 8],
}

pub const STAR_DEGREE: usize = 8;
/// Number of free coefficients of a [`StarShape`].
pub const STAR_COEFFS: usize = 2 * STAR_DEGREE + 1;

impl StarShape {
    /// Circle of the given radius.
    pub fn circle(radius: f64) -> Self {
        StarShape { a0: radius, a: [0.0; 8], b: [0.0; 8] }
    }

    pub fn radius(&self, t: f64) -> f64 {
        let mut r = self.a0;
        for j in 1..=STAR_DEGREE {
            let jt = j as f64 * t;
            r += self.a[j - 1] * jt.cos() + self.b[j - 1] * jt.sin();
        }
        r
    }

    pub fn radius_deriv(&self, t: f64) -> f64 {
        let mut dr = 0.0;
        for j in 1..=STAR_DEGREE {
            let jf = j as f64;
            let jt = jf * t;
            dr += jf * (-self.a[j - 1] * jt.sin() + self.b[j - 1] * jt.cos());
        }
        dr
    }

    /// Flattens to `[a0, a1..a8, b1..b8]`.
    pub fn coeffs(&self) -> [f64; STAR_COEFFS] {
        let mut c = [0.0; STAR_COEFFS];
        c[0] = self.a0;
        c[1..=STAR_DEGREE].copy_from_slice(&self.a);
        c[STAR_DEGREE + 1..].copy_from_slice(&self.b);
        c
    }

    pub fn from_coeffs(c: &[f64]) -> Result<Self> {
        if c.len() != STAR_COEFFS {
            return Err(Error::InvalidInput(format!(
                "expected {STAR_COEFFS} coefficients, got {}",
                c.len()
            )));
        }
        let mut s = StarShape::circle(c[0]);
        s.a.copy_from_slice(&c[1..=STAR_DEGREE]);
        s.b.copy_from_slice(&c[STAR_DEGREE + 1..]);
        Ok(s)
    }

    /// Recovers coefficients from radial samples at `m >= 17` equispaced
    /// angles; exact for radial functions of trigonometric degree <= 8.
    pub fn from_radial_samples(samples: &[f64]) -> Result<Self> {
        let m = samples.len();
        if m < STAR_COEFFS {
            return Err(Error::InvalidInput(format!(
                "need at least {STAR_COEFFS} samples, got {m}"
            )));
        }
        let mf = m as f64;
        let mut shape = StarShape::circle(samples.iter().sum::<f64>() / mf);
        for j in 1..=STAR_DEGREE {
            let mut ca = 0.0;
            let mut cb = 0.0;
            for (i, &r) in samples.iter().enumerate() {
                let ang = j as f64 * TAU * i as f64 / mf;
                ca += r * ang.cos();
                cb += r * ang.sin();
            }
            shape.a[j - 1] = 2.0 * ca / mf;
            shape.b[j - 1] = 2.0 * cb / mf;
        }
        Ok(shape)
    }

    /// The shape rotated by `theta` (radial function shifted in angle).
    pub fn rotated(&self, theta: f64) -> Self {
        let mut s = StarShape::circle(self.a0);
        for j in 1..=STAR_DEGREE {
            let (sj, cj) = (j as f64 * theta).sin_cos();
            s.a[j - 1] = self.a[j - 1] * cj - self.b[j - 1] * sj;
            s.b[j - 1] = self.a[j - 1] * sj + self.b[j - 1] * cj;
        }
        s
    }

    /// Radial samples at `m` equispaced angles.
    pub fn radial_samples(&self, m: usize) -> Vec<f64> {
        (0..m).map(|i| self.radius(TAU * i as f64 / m as f64)).collect()
    }
}

/// Discretizes a star-like shape; fails if the radial function is not
/// strictly positive.
pub fn make_star(shape: &StarShape, n_nodes: usize) -> Result<ParametricCurve> {
    let check = n_nodes.max(512);
    for i in 0..check {
        let t = TAU * i as f64 / check as f64;
        let r = shape.radius(t);
        if !(r > 0.0) {
            return Err(Error::InvalidShape(format!(
                "radial function is nonpositive at t={t}: r={r}"
            )));
        }
    }
    ParametricCurve::from_parameterization(
        n_nodes,
        |t| {
            let r = shape.radius(t);
            [r * t.cos(), r * t.sin()]
        },
        |t| {
            let r = shape.radius(t);
            let dr = shape.radius_deriv(t);
            [dr * t.cos() - r * t.sin(), dr * t.sin() + r * t.cos()]
        },
    )
}

/// Generator settings for random star-like shapes: knot count drawn from
/// `{8,...,16}` unless pinned, knot radii uniform on `radial_range`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RandomShapeSpec {
    pub seed: u64,
    /// Fixed knot count; drawn uniformly from `{8,...,16}` when `None`.
    #[serde(default)]
    pub n_knots: Option<usize>,
    /// Bounds of the uniform knot-radius distribution.
    #[serde(default = "default_radial_range")]
    pub radial_range: (f64, f64),
}

fn default_radial_range() -> (f64, f64) {
    (0.4, 1.6)
}

impl RandomShapeSpec {
    pub fn new(seed: u64) -> Self {
        RandomShapeSpec { seed, n_knots: None, radial_range: default_radial_range() }
    }
}

/// A random shape: periodic cubic spline through uniformly drawn radial
/// knots, deterministic in the seed.
#[derive(Debug, Clone)]
pub struct RandomShape {
    knots: Vec<f64>,
    spline: PeriodicSpline,
    overshoot: f64,
}

impl RandomShape {
    pub fn generate(spec: &RandomShapeSpec) -> Result<Self> {
        let (lo, hi) = spec.radial_range;
        if !(lo > 0.0) || !(hi > lo) {
            return Err(Error::InvalidInput(format!(
                "radial range must satisfy 0 < lo < hi, got ({lo}, {hi})"
            )));
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(spec.seed);
        let n_knots = match spec.n_knots {
            Some(n) => {
                if !(8..=16).contains(&n) {
                    return Err(Error::InvalidInput(format!(
                        "knot count must lie in 8..=16, got {n}"
                    )));
                }
                n
            }
            None => rng.gen_range(8..=16),
        };
        // Spline overshoot below zero is impossible for positive knots in
        // practice; the guard redraws the knot set deterministically.
        for _attempt in 0..16 {
            let knots: Vec<f64> = (0..n_knots).map(|_| rng.gen_range(lo..=hi)).collect();
            let spline = PeriodicSpline::fit(&knots)?;
            let mut min_r = f64::INFINITY;
            let mut max_r = f64::NEG_INFINITY;
            for i in 0..1024 {
                let r = spline.eval(TAU * i as f64 / 1024.0);
                min_r = min_r.min(r);
                max_r = max_r.max(r);
            }
            if min_r > 0.0 {
                let overshoot = (lo - min_r).max(max_r - hi).max(0.0);
                return Ok(RandomShape { knots, spline, overshoot });
            }
        }
        Err(Error::InvalidShape(
            "random shape generation kept producing nonpositive radii".into(),
        ))
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    /// How far the spline exceeds the knot-radius bounds.
    pub fn overshoot(&self) -> f64 {
        self.overshoot
    }

    pub fn radius(&self, theta: f64) -> f64 {
        self.spline.eval(theta)
    }

    pub fn radial_samples(&self, m: usize) -> Vec<f64> {
        (0..m).map(|i| self.radius(TAU * i as f64 / m as f64)).collect()
    }

    pub fn curve(&self, n_nodes: usize) -> Result<ParametricCurve> {
        ParametricCurve::from_parameterization(
            n_nodes,
            |t| {
                let r = self.spline.eval(t);
                [r * t.cos(), r * t.sin()]
            },
            |t| {
                let r = self.spline.eval(t);
                let dr = self.spline.eval_deriv(t);
                [dr * t.cos() - r * t.sin(), dr * t.sin() + r * t.cos()]
            },
        )
    }
}

/// Draws a random shape and samples it at 128 equispaced angles.
pub fn make_random_shape(spec: &RandomShapeSpec) -> Result<ParametricCurve> {
    RandomShape::generate(spec)?.curve(128)
}

/// Relative L2 error `‖r* - r̃‖ / ‖r*‖` between radial samples on the same
/// equispaced angle grid (trapezoidal, i.e. plain mean for periodic data).
pub fn relative_l2_error(r_true: &[f64], r_rec: &[f64]) -> Result<f64> {
    if r_true.len() != r_rec.len() || r_true.is_empty() {
        return Err(Error::InvalidInput(format!(
            "sample grids differ: {} vs {}",
            r_true.len(),
            r_rec.len()
        )));
    }
    let mut num = 0.0;
    let mut den = 0.0;
    for (rt, rr) in r_true.iter().zip(r_rec) {
        num += (rt - rr) * (rt - rr);
        den += rt * rt;
    }
    if den == 0.0 {
        return Err(Error::Domain("reference radial function is identically zero".into()));
    }
    Ok((num / den).sqrt())
}

/// Periodic cubic spline on equispaced knots over `[0, 2π]`.
#[derive(Debug, Clone)]
struct PeriodicSpline {
    values: Vec<f64>,
    /// Second derivatives at the knots.
    moments: Vec<f64>,
    h: f64,
}

impl PeriodicSpline {
    fn fit(values: &[f64]) -> Result<Self> {
        let m = values.len();
        if m < 3 {
            return Err(Error::InvalidInput("spline needs at least 3 knots".into()));
        }
        let h = TAU / m as f64;
        // Cyclic system  M_{i-1} + 4 M_i + M_{i+1} = 6 (y_{i-1} - 2 y_i + y_{i+1}) / h².
        let mut a = nalgebra::DMatrix::<f64>::zeros(m, m);
        let mut rhs = nalgebra::DVector::<f64>::zeros(m);
        for i in 0..m {
            a[(i, (i + m - 1) % m)] += 1.0;
            a[(i, i)] += 4.0;
            a[(i, (i + 1) % m)] += 1.0;
            rhs[i] =
                6.0 * (values[(i + m - 1) % m] - 2.0 * values[i] + values[(i + 1) % m]) / (h * h);
        }
        let moments = a
            .lu()
            .solve(&rhs)
            .ok_or_else(|| Error::Linalg("periodic spline system is singular".into()))?;
        Ok(PeriodicSpline { values: values.to_vec(), moments: moments.iter().copied().collect(), h })
    }

    fn segment(&self, theta: f64) -> (usize, usize, f64) {
        let m = self.values.len();
        let t = theta.rem_euclid(TAU);
        let mut i = (t / self.h).floor() as usize;
        if i >= m {
            i = m - 1;
        }
        (i, (i + 1) % m, t - self.h * i as f64)
    }

    fn eval(&self, theta: f64) -> f64 {
        let (i, j, dx) = self.segment(theta);
        let h = self.h;
        let (yi, yj) = (self.values[i], self.values[j]);
        let (mi, mj) = (self.moments[i], self.moments[j]);
        let a = h - dx;
        mi * a * a * a / (6.0 * h)
            + mj * dx * dx * dx / (6.0 * h)
            + (yi / h - mi * h / 6.0) * a
            + (yj / h - mj * h / 6.0) * dx
    }

    fn eval_deriv(&self, theta: f64) -> f64 {
        let (i, j, dx) = self.segment(theta);
        let h = self.h;
        let (yi, yj) = (self.values[i], self.values[j]);
        let (mi, mj) = (self.moments[i], self.moments[j]);
        let a = h - dx;
        -mi * a * a / (2.0 * h) + mj * dx * dx / (2.0 * h) - (yi / h - mi * h / 6.0)
            + (yj / h - mj * h / 6.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn circle_weights_sum_to_circumference() {
        let c = make_circle([0.0, 0.0], 0.5, 90).unwrap();
        assert_relative_eq!(c.weights.iter().sum::<f64>(), PI, epsilon = 1e-12);
        let c = make_circle([0.3, -0.2], 0.7, 160).unwrap();
        assert_relative_eq!(c.weights.iter().sum::<f64>(), TAU * 0.7, epsilon = 1e-12);
    }

    #[test]
    fn circle_nodes_on_circle() {
        let c = make_circle([0.0, 0.0], 15.0, 64).unwrap();
        for p in &c.points {
            assert_relative_eq!(p[0].hypot(p[1]), 15.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn nleaf_values() {
        let c = make_nleaf(4, 64).unwrap();
        assert_relative_eq!(c.points[0][0], 1.2, epsilon = 1e-14);
        assert_relative_eq!(c.points[0][1], 0.0, epsilon = 1e-14);
        assert_relative_eq!(nleaf_radius(5, PI / 5.0), 0.8, epsilon = 1e-14);
    }

    #[test]
    fn nleaf_rotation_symmetry() {
        // With node count divisible by n, rotating by 2π/n permutes nodes.
        let n = 4;
        let nodes = 64;
        let c = make_nleaf(n, nodes).unwrap();
        let shift = nodes / n as usize;
        let rot = TAU / n as f64;
        let (s, co) = rot.sin_cos();
        for i in 0..nodes {
            let p = c.points[i];
            let rotated = [p[0] * co - p[1] * s, p[0] * s + p[1] * co];
            let q = c.points[(i + shift) % nodes];
            assert_relative_eq!(rotated[0], q[0], epsilon = 1e-12);
            assert_relative_eq!(rotated[1], q[1], epsilon = 1e-12);
        }
    }

    #[test]
    fn kite_values() {
        let c = make_kite(128).unwrap();
        assert_relative_eq!(c.points[0][0], 1.0, epsilon = 1e-14);
        assert_relative_eq!(c.points[0][1], 0.0, epsilon = 1e-14);
        let p = kite_point(PI);
        assert_relative_eq!(p[0], -1.0, epsilon = 1e-14);
        assert_relative_eq!(p[1], 0.0, epsilon = 1e-12);
        let p = kite_point(PI / 2.0);
        assert_relative_eq!(p[0], -1.3, epsilon = 1e-14);
        assert_relative_eq!(p[1], 1.5, epsilon = 1e-14);
    }

    #[test]
    fn kite_radius_by_ray_matches_parameterization_at_axes() {
        assert_relative_eq!(kite_radius(0.0), 1.0, epsilon = 1e-10);
        assert_relative_eq!(kite_radius(PI), 1.0, epsilon = 1e-10);
    }

    #[test]
    fn star_identity_cases() {
        let unit = make_star(&StarShape::circle(1.0), 64).unwrap();
        for p in &unit.points {
            assert_relative_eq!(p[0].hypot(p[1]), 1.0, epsilon = 1e-14);
        }
        let bigger = make_star(&StarShape::circle(1.2), 64).unwrap();
        for p in &bigger.points {
            assert_relative_eq!(p[0].hypot(p[1]), 1.2, epsilon = 1e-14);
        }
    }

    #[test]
    fn star_matches_nleaf() {
        let mut shape = StarShape::circle(1.0);
        shape.a[3] = 0.2; // cos 4t
        let star = make_star(&shape, 64).unwrap();
        let leaf = make_nleaf(4, 64).unwrap();
        for (p, q) in star.points.iter().zip(&leaf.points) {
            assert_relative_eq!(p[0], q[0], epsilon = 1e-14);
            assert_relative_eq!(p[1], q[1], epsilon = 1e-14);
        }
    }

    #[test]
    fn star_rejects_nonpositive_radius() {
        let mut shape = StarShape::circle(0.1);
        shape.a[0] = 0.5;
        assert!(matches!(make_star(&shape, 64), Err(Error::InvalidShape(_))));
    }

    #[test]
    fn star_coefficient_roundtrip() {
        let mut shape = StarShape::circle(1.1);
        shape.a = [0.1, -0.05, 0.02, 0.2, 0.0, 0.01, -0.03, 0.04];
        shape.b = [0.0, 0.07, -0.01, 0.0, 0.06, 0.0, 0.02, -0.08];
        let rec = StarShape::from_radial_samples(&shape.radial_samples(64)).unwrap();
        assert_relative_eq!(shape.a0, rec.a0, epsilon = 1e-13);
        for j in 0..8 {
            assert_relative_eq!(shape.a[j], rec.a[j], epsilon = 1e-13);
            assert_relative_eq!(shape.b[j], rec.b[j], epsilon = 1e-13);
        }
    }

    #[test]
    fn rotated_star_shifts_radial_function() {
        let mut shape = StarShape::circle(1.0);
        shape.a[4] = 0.15;
        shape.b[1] = -0.1;
        let theta = 0.37;
        let rot = shape.rotated(theta);
        for i in 0..32 {
            let t = TAU * i as f64 / 32.0;
            assert_relative_eq!(rot.radius(t), shape.radius(t - theta), epsilon = 1e-13);
        }
    }

    #[test]
    fn random_shape_constant_knots_gives_circle() {
        let spline = PeriodicSpline::fit(&[1.0; 10]).unwrap();
        for i in 0..50 {
            assert_relative_eq!(spline.eval(TAU * i as f64 / 50.0), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn random_shape_deterministic() {
        let spec = RandomShapeSpec::new(42);
        let a = make_random_shape(&spec).unwrap();
        let b = make_random_shape(&spec).unwrap();
        assert_eq!(a.points, b.points);
        assert_eq!(a.n_nodes(), 128);
    }

    #[test]
    fn random_shape_alternating_knots_fourfold_symmetry() {
        // 8 knots alternating between the radial bounds give a shape
        // invariant under rotation by π/2.
        let shape = RandomShape {
            knots: vec![],
            spline: PeriodicSpline::fit(&[1.6, 0.4, 1.6, 0.4, 1.6, 0.4, 1.6, 0.4]).unwrap(),
            overshoot: 0.0,
        };
        for i in 0..64 {
            let t = TAU * i as f64 / 64.0;
            assert_relative_eq!(shape.radius(t), shape.radius(t + PI / 2.0), epsilon = 1e-10);
        }
    }

    #[test]
    fn random_shape_within_reported_overshoot() {
        for seed in 0..20u64 {
            let shape = RandomShape::generate(&RandomShapeSpec::new(seed)).unwrap();
            let s = shape.overshoot();
            for r in shape.radial_samples(256) {
                assert!(r >= 0.4 - s - 1e-12 && r <= 1.6 + s + 1e-12);
            }
        }
    }

    #[test]
    fn relative_error_examples() {
        let ones = vec![1.0; 64];
        let one_one = vec![1.1; 64];
        let twos = vec![2.0; 64];
        assert_relative_eq!(relative_l2_error(&ones, &ones).unwrap(), 0.0);
        assert_relative_eq!(relative_l2_error(&ones, &one_one).unwrap(), 0.1, epsilon = 1e-12);
        assert_relative_eq!(relative_l2_error(&twos, &ones).unwrap(), 0.5, epsilon = 1e-12);
        assert!(relative_l2_error(&vec![0.0; 8], &ones[..8].to_vec()).is_err());
    }

    #[test]
    fn curves_are_counterclockwise_with_unit_normals() {
        let curves = [
            make_circle([0.0, 0.0], 0.5, 90).unwrap(),
            make_nleaf(5, 128).unwrap(),
            make_kite(128).unwrap(),
            make_random_shape(&RandomShapeSpec::new(7)).unwrap(),
        ];
        for c in &curves {
            assert!(c.signed_area() > 0.0);
            for n in &c.normals {
                assert_relative_eq!(n[0].hypot(n[1]), 1.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn quadrature_is_spectrally_accurate() {
        // ∮ exp(sin t) ds on the 5-leaf: doubling nodes gains >= 10x until
        // machine precision.
        let reference = {
            let c = make_nleaf(5, 2048).unwrap();
            let vals: Vec<f64> = c.t.iter().map(|t| t.sin().exp()).collect();
            c.integrate(&vals)
        };
        let err = |n: usize| {
            let c = make_nleaf(5, n).unwrap();
            let vals: Vec<f64> = c.t.iter().map(|t| t.sin().exp()).collect();
            (c.integrate(&vals) - reference).abs()
        };
        let (e32, e64, e128) = (err(32), err(64), err(128));
        assert!(e64 < e32 / 10.0, "e32={e32:.3e} e64={e64:.3e}");
        assert!(e128 < e64 / 10.0 || e128 < 1e-13, "e64={e64:.3e} e128={e128:.3e}");
    }

    #[test]
    fn curve_csv_roundtrip() {
        let c = make_nleaf(5, 64).unwrap();
        let mut buf = Vec::new();
        c.write_csv(&mut buf).unwrap();
        let back = ParametricCurve::read_csv(&buf[..]).unwrap();
        assert_eq!(c.t, back.t);
        assert_eq!(c.points, back.points);
        assert_eq!(c.normals, back.normals);
        assert_eq!(c.weights, back.weights);
        for (d, e) in c.d_points.iter().zip(&back.d_points) {
            assert_relative_eq!(d[0], e[0], epsilon = 1e-12);
            assert_relative_eq!(d[1], e[1], epsilon = 1e-12);
        }
    }

    #[test]
    fn contains_basic() {
        let c = make_kite(256).unwrap();
        assert!(c.contains([0.0, 0.0]));
        assert!(c.contains([0.3, 0.0]));
        assert!(!c.contains([2.0, 0.0]));
        assert!(!c.contains([0.0, 1.6]));
    }
}

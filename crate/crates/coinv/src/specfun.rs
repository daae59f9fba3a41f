//! Bessel and Hankel functions, the 2D Helmholtz fundamental solution, and
//! the Bessel-zero count that bounds how many sources pin down a cavity.
//!
//! Real-argument `J`/`Y` evaluation is delegated to `libm` (the msun
//! family of rational approximations, accurate to a few ulp over the full
//! range). Tests validate it against an independent power-series /
//! integral-representation oracle.

use crate::{Error, Result};
use num_complex::Complex64;

/// Hankel function of the first kind of order zero, `H0(t) = J0(t) + i Y0(t)`.
///
/// `t` must be positive; the function has a logarithmic singularity at 0.
pub fn hankel1_0(t: f64) -> Result<Complex64> {
    if !(t > 0.0) {
        return Err(Error::Domain(format!("hankel1_0 requires t > 0, got {t}")));
    }
    Ok(h0(t))
}

/// Hankel function of the first kind of order one, `H1(t) = J1(t) + i Y1(t)`.
pub fn hankel1_1(t: f64) -> Result<Complex64> {
    if !(t > 0.0) {
        return Err(Error::Domain(format!("hankel1_1 requires t > 0, got {t}")));
    }
    Ok(h1(t))
}

/// Bessel function of the first kind of integer order.
pub fn bessel_jn(n: u32, t: f64) -> f64 {
    libm::jn(n as i32, t)
}

#[inline]
pub(crate) fn h0(t: f64) -> Complex64 {
    debug_assert!(t > 0.0);
    Complex64::new(libm::j0(t), libm::y0(t))
}

#[inline]
pub(crate) fn h1(t: f64) -> Complex64 {
    debug_assert!(t > 0.0);
    Complex64::new(libm::j1(t), libm::y1(t))
}

/// Outgoing point-source solution `Φ(x,z) = (i/4) H0(k|x-z|)` of the 2D
/// Helmholtz equation.
pub fn fundamental_solution(x: [f64; 2], z: [f64; 2], k: f64) -> Result<Complex64> {
    if !(k > 0.0) {
        return Err(Error::Domain(format!("wavenumber must be positive, got {k}")));
    }
    let r = dist(x, z);
    if r == 0.0 {
        return Err(Error::Singularity(format!(
            "fundamental solution evaluated at its source point ({}, {})",
            z[0], z[1]
        )));
    }
    Ok(phi_kr(k * r))
}

/// `Φ` as a function of the scaled distance `kr`.
#[inline]
pub(crate) fn phi_kr(kr: f64) -> Complex64 {
    Complex64::new(0.0, 0.25) * h0(kr)
}

#[inline]
pub(crate) fn dist(a: [f64; 2], b: [f64; 2]) -> f64 {
    let dx = a[0] - b[0];
    let dy = a[1] - b[1];
    dx.hypot(dy)
}

/// All positive zeros of `J_n` below `upper`, ascending, each to 1e-12.
///
/// Zeros are bracketed by scanning sign changes at spacing 0.1 (consecutive
/// zeros of `J_n` are separated by more than that) and refined by bisection.
pub fn bessel_zeros(n: u32, upper: f64) -> Result<Vec<f64>> {
    if !(upper > 0.0) {
        return Err(Error::Domain(format!("upper bound must be positive, got {upper}")));
    }
    let f = |t: f64| bessel_jn(n, t);
    let step = 0.1;
    let mut zeros = Vec::new();
    // J_n(0) = 0 for n >= 1 but 0 is not a positive zero; start the scan
    // clear of the origin where J_n is still positive.
    let mut a = step * 1e-6;
    let mut fa = f(a);
    while a < upper {
        let b = (a + step).min(upper);
        let fb = f(b);
        if fa == 0.0 {
            zeros.push(a);
        } else if fa * fb < 0.0 {
            zeros.push(bisect(&f, a, b));
        }
        a = b;
        fa = fb;
    }
    zeros.retain(|&z| z < upper);
    Ok(zeros)
}

fn bisect(f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let mut fa = f(a);
    for _ in 0..80 {
        let m = 0.5 * (a + b);
        if b - a < 1e-13 {
            return m;
        }
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if fa * fm < 0.0 {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    0.5 * (a + b)
}

/// Source-count threshold for unique recovery of a cavity contained in a
/// ball of radius `r`: zeros of `J_0` below `kr` count once, zeros of every
/// higher-order `J_n` count twice.
///
/// The first positive zero of `J_n` exceeds `n`, so the order loop stops at
/// the first `n` contributing nothing.
pub fn count_n0(k: f64, r: f64) -> Result<usize> {
    if !(k > 0.0) || !(r > 0.0) {
        return Err(Error::Domain(format!("count_n0 requires k, r > 0, got k={k}, r={r}")));
    }
    let kr = k * r;
    let mut total = bessel_zeros(0, kr)?.len();
    let mut n = 1;
    loop {
        let count = bessel_zeros(n, kr)?.len();
        if count == 0 {
            break;
        }
        total += 2 * count;
        n += 1;
    }
    Ok(total)
}

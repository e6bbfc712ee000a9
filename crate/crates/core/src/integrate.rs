//! Double-exponential quadrature used as a reference integrator.
//!
//! Finite intervals use the tanh-sinh map, half-lines the exp-sinh map and
//! the whole line is split at the origin. Endpoint singularities of
//! algebraic or logarithmic type are handled without special casing.

use core::f64::consts::FRAC_PI_2;
#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result};

/// Result of a reference integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    /// Difference between the last two refinement levels.
    pub error: f64,
}

const MAX_LEVEL: usize = 12;
const T_MAX_FINITE: f64 = 4.5;
const T_MAX_HALF: f64 = 4.0;

/// Integrate `f` over `[a, b]`; either end may be infinite.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<Integral> {
    if a.is_nan() || b.is_nan() {
        return Err(crate::error::invalid("NaN integration bound"));
    }
    if a == b {
        return Ok(Integral { value: 0.0, error: 0.0 });
    }
    if a > b {
        let r = integrate(f, b, a, tol)?;
        return Ok(Integral { value: -r.value, error: r.error });
    }
    match (a.is_finite(), b.is_finite()) {
        (true, true) => integrate_dist(|x, _, _| f(x), a, b, tol),
        (true, false) => refine(|h, odd| half_line_level(&|x| f(a + x), h, odd), tol),
        (false, true) => refine(|h, odd| half_line_level(&|x| f(b - x), h, odd), tol),
        (false, false) => {
            let l = refine(|h, odd| half_line_level(&|x| f(-x), h, odd), tol)?;
            let r = refine(|h, odd| half_line_level(&f, h, odd), tol)?;
            Ok(Integral {
                value: l.value + r.value,
                error: l.error + r.error,
            })
        }
    }
}

/// Integrate over a finite `[a, b]` an integrand given as
/// `f(x, x - a, b - x)`. The two distances are passed without the
/// cancellation of forming them from `x`, so integrands singular at an
/// end can be written accurately.
pub fn integrate_dist<F: Fn(f64, f64, f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<Integral> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(crate::error::invalid("integrate_dist needs finite bounds"));
    }
    if a == b {
        return Ok(Integral { value: 0.0, error: 0.0 });
    }
    if a > b {
        let g = |x: f64, da: f64, db: f64| f(x, db, da);
        let r = refine(|h, odd| finite_level(&g, b, a, h, odd), tol)?;
        return Ok(Integral { value: -r.value, error: r.error });
    }
    refine(|h, odd| finite_level(&f, a, b, h, odd), tol)
}

fn refine<L: Fn(f64, bool) -> f64>(level: L, tol: f64) -> Result<Integral> {
    let mut h = 1.0;
    let mut sum = level(h, false);
    let mut prev = sum * h;
    let mut err = f64::INFINITY;
    for k in 1..=MAX_LEVEL {
        h *= 0.5;
        sum += level(h, true);
        let cur = sum * h;
        err = (cur - prev).abs();
        if k >= 3 && err <= tol * cur.abs().max(f64::MIN_POSITIVE) {
            return Ok(Integral { value: cur, error: err });
        }
        prev = cur;
    }
    Err(Error::NoConvergence {
        what: "double-exponential quadrature",
        iterations: MAX_LEVEL,
        residual: err,
    })
}

/// Sum of `w * f` over abscissae `t = j h`; only odd `j` when `odd`.
fn finite_level<F: Fn(f64, f64, f64) -> f64>(f: &F, a: f64, b: f64, h: f64, odd: bool) -> f64 {
    let len = b - a;
    let mut s = 0.0;
    if !odd {
        s += len * 0.25 * core::f64::consts::PI * finite_or_zero(f((a + b) * 0.5, 0.5 * len, 0.5 * len));
    }
    let step = if odd { 2 } else { 1 };
    let mut j = 1;
    loop {
        let t = j as f64 * h;
        if t > T_MAX_FINITE {
            break;
        }
        let u = FRAC_PI_2 * t.sinh();
        let e = (-2.0 * u).exp();
        let delta = len * e / (1.0 + e);
        let w = len * core::f64::consts::PI * t.cosh() * e / ((1.0 + e) * (1.0 + e));
        if delta > 0.0 && w > 0.0 {
            s += w * (finite_or_zero(f(a + delta, delta, len - delta)) + finite_or_zero(f(b - delta, len - delta, delta)));
        }
        j += step;
    }
    s
}

/// Level sum for `[0, inf)` with the exp-sinh map `x = exp(pi/2 sinh t)`.
fn half_line_level<F: Fn(f64) -> f64>(f: &F, h: f64, odd: bool) -> f64 {
    let mut s = 0.0;
    let eval = |t: f64| {
        let x = (FRAC_PI_2 * t.sinh()).exp();
        let w = FRAC_PI_2 * t.cosh() * x;
        if x > 0.0 && x.is_finite() && w.is_finite() {
            let v = f(x);
            if v.is_finite() {
                return w * v;
            }
        }
        0.0
    };
    if !odd {
        s += eval(0.0);
    }
    let step = if odd { 2 } else { 1 };
    let mut j = 1;
    loop {
        let t = j as f64 * h;
        if t > T_MAX_HALF {
            break;
        }
        s += eval(t) + eval(-t);
        j += step;
    }
    s
}

fn finite_or_zero(v: f64) -> f64 {
    if v.is_finite() {
        v
    } else {
        0.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smooth_and_singular() {
        let r = integrate(|x| x.exp(), -1.0, 1.0, 1e-14).unwrap();
        assert!((r.value - (1f64.exp() - (-1f64).exp())).abs() < 1e-14);
        let r = integrate(|x| 1.0 / x.sqrt(), 0.0, 1.0, 1e-13).unwrap();
        assert!((r.value - 2.0).abs() < 1e-12);
        let r = integrate_dist(|_, da, db| 1.0 / (da * db).sqrt(), -1.0, 1.0, 1e-13).unwrap();
        assert!((r.value - core::f64::consts::PI).abs() < 1e-12);
    }

    #[test]
    fn infinite_ranges() {
        let r = integrate(|x| (-x).exp(), 0.0, f64::INFINITY, 1e-13).unwrap();
        assert!((r.value - 1.0).abs() < 1e-13);
        let r = integrate(|x| (-x * x).exp(), f64::NEG_INFINITY, f64::INFINITY, 1e-13).unwrap();
        assert!((r.value - core::f64::consts::PI.sqrt()).abs() < 1e-13);
        let r = integrate(|x| (-x * x).exp(), f64::NEG_INFINITY, 0.0, 1e-13).unwrap();
        assert!((r.value - 0.5 * core::f64::consts::PI.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn reversed_bounds_flip_sign() {
        let r = integrate(|x| x * x, 1.0, 0.0, 1e-14).unwrap();
        assert!((r.value + 1.0 / 3.0).abs() < 1e-14);
        let r = integrate_dist(|_, da, _| da.powf(-0.25), 1.0, 0.0, 1e-13).unwrap();
        assert!((r.value + 4.0 / 3.0).abs() < 1e-12);
    }
}

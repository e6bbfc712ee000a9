//! Legendre polynomials: zero brackets, the Stieltjes asymptotic expansion
//! with its error bound, Mehler's limit and functions of the second kind.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::invalid;
use crate::math::{bessel_j0, ln_gamma};
use crate::orthopoly::{family_coeffs, zeros, Family};
use crate::quadrature::bisect;
use crate::{Error, Result};

/// `P_n(x)` by the three-term recurrence.
pub fn legendre_p(n: usize, x: f64) -> f64 {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return 1.0;
    }
    for k in 1..n {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// Zeros of `P_n` in decreasing order, `x_(1,n) > ... > x_(n,n)`.
pub fn legendre_zeros(n: usize) -> Result<Vec<f64>> {
    let rc = family_coeffs(Family::Legendre, n)?;
    let mut z = zeros(&rc, n)?;
    z.reverse();
    Ok(z)
}

/// Brackets for the `k`-th largest zero of `P_n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroBounds {
    /// `(cos(2k pi/(2n+1)), cos((2k-1) pi/(2n+1)))`.
    pub bruns: (f64, f64),
    /// `(cos(k pi/(n+1)), cos((2k-1) pi/(2n)))`, only for `k <= n/2`.
    pub stieltjes: Option<(f64, f64)>,
}

pub fn zero_bounds(n: usize, k: usize) -> Result<ZeroBounds> {
    if k == 0 || k > n {
        return Err(Error::OutOfRange { what: "zero index", requested: k, available: n });
    }
    let (nf, kf) = (n as f64, k as f64);
    let bruns = ((2.0 * kf * PI / (2.0 * nf + 1.0)).cos(), ((2.0 * kf - 1.0) * PI / (2.0 * nf + 1.0)).cos());
    let stieltjes = (2 * k <= n).then(|| ((kf * PI / (nf + 1.0)).cos(), ((2.0 * kf - 1.0) * PI / (2.0 * nf)).cos()));
    Ok(ZeroBounds { bruns, stieltjes })
}

/// Truncated asymptotic expansion of `P_n(cos theta)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StieltjesExpansion {
    pub n: usize,
    pub m: usize,
    pub theta: f64,
    /// Sum of the first `m` terms.
    pub value: f64,
    /// Bound on the remainder after `m` terms.
    pub bound: f64,
    /// `(4/pi) 2^n n! / (3 5 ... (2n+1))`.
    pub prefactor: f64,
}

/// `b_0..b_m` for degree `n`.
pub fn expansion_coeffs(n: usize, m: usize) -> Vec<f64> {
    let nf = n as f64;
    let mut b = Vec::with_capacity(m + 1);
    b.push(1.0);
    for k in 1..=m {
        let kf = k as f64;
        let r = (2.0 * kf - 1.0) * (2.0 * kf - 1.0) / (2.0 * kf * (2.0 * nf + 2.0 * kf + 1.0));
        b.push(b[k - 1] * r);
    }
    b
}

/// `M` in the remainder bound: `1/|cos theta|` when `sin^2 theta <= 1/2`,
/// otherwise `2 sin theta`.
pub fn remainder_m(theta: f64) -> f64 {
    let s = theta.sin();
    if s * s <= 0.5 {
        1.0 / theta.cos().abs()
    } else {
        2.0 * s
    }
}

pub fn stieltjes_expansion(n: usize, theta: f64, m: usize) -> Result<StieltjesExpansion> {
    if !(theta > 0.0 && theta < PI) {
        return Err(invalid("theta must lie in (0, pi)"));
    }
    if m == 0 {
        return Err(invalid("term count must be at least 1"));
    }
    let nf = n as f64;
    // (2^n n!)^2 / (2n+1)!
    let ln_ratio = 2.0 * (nf * core::f64::consts::LN_2 + ln_gamma(nf + 1.0)) - ln_gamma(2.0 * nf + 2.0);
    let prefactor = 4.0 / PI * ln_ratio.exp();
    let b = expansion_coeffs(n, m);
    let two_sin = 2.0 * theta.sin();
    let mut sum = 0.0;
    for (k, bk) in b.iter().enumerate().take(m) {
        let kf = k as f64;
        let phase = (nf + kf + 0.5) * theta - (kf + 0.5) * FRAC_PI_2;
        sum += bk * phase.cos() / two_sin.powf(kf + 0.5);
    }
    let bound = b[m] * prefactor * remainder_m(theta) / two_sin.powf(m as f64 + 0.5);
    Ok(StieltjesExpansion { n, m, theta, value: prefactor * sum, bound, prefactor })
}

/// `|P_n(cos(theta/n)) - J_0(theta)|` for each `n`.
pub fn mehler_check(theta: f64, n_list: &[usize]) -> Result<Vec<(usize, f64)>> {
    if !(theta >= 0.0) {
        return Err(invalid("theta must be nonnegative"));
    }
    let j0 = bessel_j0(theta);
    n_list
        .iter()
        .map(|&n| {
            if n == 0 {
                return Err(invalid("degree must be positive"));
            }
            Ok((n, (legendre_p(n, (theta / n as f64).cos()) - j0).abs()))
        })
        .collect()
}

/// `W_(n-1)` with `W_(-1) = 0`, `W_0 = 1`,
/// `(k+1) W_k = (2k+1) x W_(k-1) - k W_(k-2)`.
fn associated(n: usize, x: f64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let (mut w0, mut w1) = (0.0, 1.0);
    for k in 1..n {
        let kf = k as f64;
        let w2 = ((2.0 * kf + 1.0) * x * w1 - kf * w0) / (kf + 1.0);
        w0 = w1;
        w1 = w2;
    }
    w1
}

/// `Q_n(x) = P_n(x) log((1+x)/(1-x)) / 2 - W_(n-1)(x)` for `|x| < 1`.
pub fn legendre_q(n: usize, x: f64) -> Result<f64> {
    if !(x.abs() < 1.0) {
        return Err(invalid("legendre_q needs |x| < 1"));
    }
    Ok(0.5 * legendre_p(n, x) * ((1.0 + x) / (1.0 - x)).ln() - associated(n, x))
}

/// `Q_n(x)` for `|x| > 1`, with `log((x+1)/(x-1))`.
pub fn legendre_q_exterior(n: usize, x: f64) -> Result<f64> {
    if !(x.abs() > 1.0) {
        return Err(invalid("legendre_q_exterior needs |x| > 1"));
    }
    Ok(0.5 * legendre_p(n, x) * ((x + 1.0) / (x - 1.0)).ln() - associated(n, x))
}

/// `(1/2) integral_(-1)^1 P_n(y) / (x - y) dy` for `|x| > 1` by Gauss–Legendre.
pub fn legendre_q_integral(n: usize, x: f64) -> Result<f64> {
    if !(x.abs() > 1.0) {
        return Err(invalid("the integral form needs |x| > 1"));
    }
    let m = 48;
    let rule = crate::quadrature::gauss_rule(&family_coeffs(Family::Legendre, m)?, m)?;
    Ok(0.5 * rule.integrate(|y| legendre_p(n, y) / (x - y)))
}

fn q_zeros_on(n: usize, grid: usize) -> Vec<f64> {
    // uniform in theta = acos(x) to resolve the clustering near +-1
    let pts: Vec<f64> = (1..grid).map(|i| -(PI * i as f64 / grid as f64).cos()).collect();
    let f = |x: f64| legendre_q(n, x).unwrap_or(f64::NAN);
    let mut out = Vec::new();
    for w in pts.windows(2) {
        let (fa, fb) = (f(w[0]), f(w[1]));
        if fa == 0.0 {
            out.push(w[0]);
        } else if fa * fb < 0.0 {
            if let Some(r) = bisect(f, w[0], w[1]) {
                out.push(r);
            }
        }
    }
    out
}

/// The `n + 1` zeros of `Q_n` in `(-1, 1)`, ascending, checked to
/// interlace with the zeros of `P_n`.
pub fn q_zeros(n: usize) -> Result<Vec<f64>> {
    let mut z = q_zeros_on(n, 64 * (n + 1));
    if z.len() != n + 1 {
        z = q_zeros_on(n, 512 * (n + 1));
    }
    if z.len() != n + 1 {
        return Err(Error::ZeroCount { expected: n + 1, found: z.len() });
    }
    if n > 0 {
        let mut p = legendre_zeros(n)?;
        p.reverse();
        for (i, &x) in p.iter().enumerate() {
            if !(z[i] < x && x < z[i + 1]) {
                return Err(Error::CrossCheck { what: "interlacing of Q_n and P_n zeros", index: i, discrepancy: x });
            }
        }
    }
    Ok(z)
}

//! Scalar helpers: compensated arithmetic, Gamma-type functions,
//! q-Pochhammer symbols and the Bessel function `J_0`.

#[allow(unused_imports)]
use num_traits::Float;

/// Error-free sum: returns `(s, e)` with `s + e == a + b` exactly.
#[inline]
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Error-free product via fused multiply-add.
#[inline]
pub fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// Dot product accumulated in twice the working precision.
pub fn dot2(x: &[f64], y: &[f64]) -> f64 {
    let mut s = 0.0;
    let mut c = 0.0;
    for (&a, &b) in x.iter().zip(y) {
        let (p, ep) = two_prod(a, b);
        let (t, es) = two_sum(s, p);
        s = t;
        c += ep + es;
    }
    s + c
}

/// Compensated summation.
pub fn sum2(xs: impl IntoIterator<Item = f64>) -> f64 {
    let mut s = 0.0;
    let mut c = 0.0;
    for x in xs {
        let (t, e) = two_sum(s, x);
        s = t;
        c += e;
    }
    s + c
}

/// `ln |Gamma(x)|`.
pub fn ln_gamma(x: f64) -> f64 {
    libm::lgamma_r(x).0
}

/// `Gamma(x)`.
pub fn gamma(x: f64) -> f64 {
    libm::tgamma(x)
}

/// Error function.
pub fn erf(x: f64) -> f64 {
    libm::erf(x)
}

/// Complementary error function.
pub fn erfc(x: f64) -> f64 {
    libm::erfc(x)
}

/// Binomial coefficient as a float (exact for moderate arguments).
pub fn binomial(n: u64, k: u64) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut r = 1.0;
    for i in 0..k {
        r = r * (n - i) as f64 / (i + 1) as f64;
    }
    r.round()
}

/// Exact binomial coefficient, `None` on overflow.
pub fn binomial_u64(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut r: u64 = 1;
    for i in 0..k {
        r = r.checked_mul(n - i)? / (i + 1);
    }
    Some(r)
}

/// q-Pochhammer symbol `(a; q)_n = (1 - a)(1 - aq)...(1 - aq^(n-1))`.
pub fn q_pochhammer(a: f64, q: f64, n: usize) -> f64 {
    let mut r = 1.0;
    let mut t = a;
    for _ in 0..n {
        r *= 1.0 - t;
        t *= q;
    }
    r
}

/// Bessel function `J_0` from its power series, stopped once the term
/// ratio drops below `1e-16`.
pub fn bessel_j0(x: f64) -> f64 {
    let y = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 1.0;
    loop {
        term *= -y / (k * k);
        sum += term;
        if term.abs() <= 1e-16 * sum.abs().max(1e-300) && k > y.sqrt() {
            break;
        }
        k += 1.0;
        if k > 500.0 {
            break;
        }
    }
    sum
}

/// `(u - sin u) / 4` without cancellation for small `u`.
pub(crate) fn quarter_u_minus_sin(u: f64) -> f64 {
    if u.abs() < 0.5 {
        // u^3/3! - u^5/5! + ...
        let u2 = u * u;
        let mut term = u * u2 / 6.0;
        let mut sum = term;
        let mut k = 2.0;
        loop {
            term *= -u2 / ((2.0 * k) * (2.0 * k + 1.0));
            sum += term;
            if term.abs() <= 1e-18 * sum.abs() {
                break;
            }
            k += 1.0;
        }
        sum / 4.0
    } else {
        (u - u.sin()) / 4.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot2_beats_naive_on_cancellation() {
        let x = [1e16, 1.0, -1e16];
        let y = [1.0, 1.0, 1.0];
        assert_eq!(dot2(&x, &y), 1.0);
        assert_eq!(sum2([1e16, 1.0, -1e16]), 1.0);
    }

    #[test]
    fn gamma_values() {
        assert!((gamma(5.0) - 24.0).abs() < 1e-12);
        assert!((ln_gamma(0.5) - 0.5 * core::f64::consts::PI.ln()).abs() < 1e-14);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), 20.0);
        assert_eq!(binomial_u64(10, 4), Some(210));
        assert_eq!(binomial(3, 5), 0.0);
    }

    #[test]
    fn q_pochhammer_small() {
        let q = 0.3;
        assert_eq!(q_pochhammer(0.5, q, 0), 1.0);
        let v = q_pochhammer(0.5, q, 2);
        assert!((v - 0.5 * (1.0 - 0.15)).abs() < 1e-15);
    }

    #[test]
    fn j0_reference_values() {
        assert_eq!(bessel_j0(0.0), 1.0);
        // tabulated J0(1) = 0.7651976865579666
        assert!((bessel_j0(1.0) - 0.765_197_686_557_966_6).abs() < 1e-15);
        assert!(bessel_j0(2.404_825_557_695_773).abs() < 1e-14);
    }

    #[test]
    fn small_u_series_matches_direct() {
        for &u in &[0.4, 0.49, 0.51, 1.0] {
            let d = (u - libm::sin(u)) / 4.0;
            assert!((quarter_u_minus_sin(u) - d).abs() < 1e-15);
        }
    }
}

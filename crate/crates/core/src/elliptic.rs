//! Jacobian elliptic functions, complete elliptic integrals, Laplace
//! transforms of `cn`, `dn`, `sn`, `sn^2`, and the continued fractions built
//! from the Carlitz recurrences.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::invalid;
use crate::orthopoly::{carlitz_numerator, Family};
use crate::{Error, Result};

/// Arithmetic-geometric mean to full precision.
pub fn agm(mut a: f64, mut b: f64) -> f64 {
    for _ in 0..64 {
        let m = 0.5 * (a + b);
        if (a - b).abs() <= 1e-16 * m {
            return m;
        }
        b = (a * b).sqrt();
        a = m;
    }
    0.5 * (a + b)
}

fn k_of(k: f64) -> f64 {
    FRAC_PI_2 / agm(1.0, (1.0 - k * k).sqrt())
}

/// `K` from the complementary modulus directly, avoiding `1 - k^2`
/// cancellation for small `k'`.
fn k_from_complement(kp: f64) -> f64 {
    FRAC_PI_2 / agm(1.0, kp)
}

/// `(K(k), K'(k))` with the complementary modulus `sqrt(1 - k^2)`.
pub fn complete_k(k: f64) -> Result<(f64, f64)> {
    if !(k > 0.0 && k < 1.0) {
        return Err(invalid("modulus must lie in (0, 1)"));
    }
    Ok((k_of(k), k_from_complement(k)))
}

/// `K(k)` by direct numerical integration of the defining integral.
pub fn complete_k_quadrature(k: f64) -> Result<f64> {
    let r = crate::integrate::integrate_dist(|x, _, db| 1.0 / (db * (1.0 + x) * (1.0 - k * k * x * x)).sqrt(), 0.0, 1.0, 1e-15)?;
    Ok(r.value)
}

/// Which complementary integral defines the nome.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KPrimeConvention {
    /// `K' = K(sqrt(1 - k^2))`.
    Complementary,
    /// `K' = K(1 - k^2)`.
    Printed,
}

/// Modulus with its complete integrals and nome.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticContext {
    pub k: f64,
    pub big_k: f64,
    pub big_k_prime: f64,
    /// `exp(-pi K'/K)`.
    pub nome: f64,
    /// Convention selected by the Fourier cross-check.
    pub convention: KPrimeConvention,
}

impl EllipticContext {
    /// Builds the context for both candidate conventions and keeps the one
    /// whose Fourier series reproduces the AGM values of `sn`, `cn`, `dn`.
    pub fn new(k: f64) -> Result<Self> {
        let (big_k, kp) = complete_k(k)?;
        let printed = k_of(1.0 - k * k);
        let mut best: Option<(f64, Self)> = None;
        for (convention, big_k_prime) in [(KPrimeConvention::Complementary, kp), (KPrimeConvention::Printed, printed)] {
            let ctx = EllipticContext { k, big_k, big_k_prime, nome: (-PI * big_k_prime / big_k).exp(), convention };
            let err = ctx.fourier_discrepancy();
            if best.as_ref().is_none_or(|b| err < b.0) {
                best = Some((err, ctx));
            }
        }
        Ok(best.expect("two candidates").1)
    }

    /// Context with a forced convention, for comparisons.
    pub fn with_convention(k: f64, convention: KPrimeConvention) -> Result<Self> {
        let (big_k, kp) = complete_k(k)?;
        let big_k_prime = match convention {
            KPrimeConvention::Complementary => kp,
            KPrimeConvention::Printed => k_of(1.0 - k * k),
        };
        Ok(EllipticContext { k, big_k, big_k_prime, nome: (-PI * big_k_prime / big_k).exp(), convention })
    }

    /// Largest difference between the Fourier and AGM evaluations on a
    /// grid over `[0, 4K]`.
    pub fn fourier_discrepancy(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..=16 {
            let u = 0.25 * self.big_k * i as f64 + 0.1;
            let a = jacobi_elliptic_agm(u, self.k);
            let f = jacobi_elliptic_fourier(u, self);
            worst = worst.max((a.0 - f.0).abs()).max((a.1 - f.1).abs()).max((a.2 - f.2).abs());
        }
        if worst.is_nan() {
            f64::INFINITY
        } else {
            worst
        }
    }
}

/// `(sn, cn, dn)` by the descending AGM recursion.
pub fn jacobi_elliptic_agm(u: f64, k: f64) -> (f64, f64, f64) {
    if k == 0.0 {
        return (u.sin(), u.cos(), 1.0);
    }
    let mut a = [0.0; 40];
    let mut c = [0.0; 40];
    a[0] = 1.0;
    let mut b = (1.0 - k * k).sqrt();
    c[0] = k;
    let mut n = 0;
    while c[n].abs() > 1e-17 && n < 39 {
        let an = 0.5 * (a[n] + b);
        c[n + 1] = 0.5 * (a[n] - b);
        b = (a[n] * b).sqrt();
        a[n + 1] = an;
        n += 1;
    }
    let mut phi = 2f64.powi(n as i32) * a[n] * u;
    for j in (1..=n).rev() {
        phi = 0.5 * (phi + (c[j] / a[j] * phi.sin()).asin());
    }
    let (sn, cn) = (phi.sin(), phi.cos());
    (sn, cn, (1.0 - k * k * sn * sn).sqrt())
}

/// Tolerance for the AGM/Fourier agreement.
pub const FOURIER_TOL: f64 = 1e-10;

/// `(sn, cn, dn)`. For `|u| <= 4K` the result is cross-checked against
/// the Fourier series.
pub fn jacobi_elliptic(u: f64, ctx: &EllipticContext) -> Result<(f64, f64, f64)> {
    let a = jacobi_elliptic_agm(u, ctx.k);
    if u.abs() <= 4.0 * ctx.big_k {
        let f = jacobi_elliptic_fourier(u, ctx);
        let d = (a.0 - f.0).abs().max((a.1 - f.1).abs()).max((a.2 - f.2).abs());
        if !(d <= FOURIER_TOL) {
            return Err(Error::CrossCheck { what: "elliptic functions (AGM vs Fourier)", index: 0, discrepancy: d });
        }
    }
    Ok(a)
}

fn terms_needed(q: f64) -> usize {
    if q <= 0.0 {
        return 1;
    }
    ((-38.0 * core::f64::consts::LN_10 / q.ln()).ceil() as usize + 2).clamp(2, 5000)
}

/// `(sn, cn, dn)` from their nome Fourier series.
pub fn jacobi_elliptic_fourier(u: f64, ctx: &EllipticContext) -> (f64, f64, f64) {
    let (k, kk, q) = (ctx.k, ctx.big_k, ctx.nome);
    let v = PI * u / (2.0 * kk);
    let (mut sn, mut cn, mut dn) = (0.0, 0.0, 0.0);
    for n in 1..=terms_needed(q) {
        let e = (2 * n - 1) as f64;
        let qh = q.powf(e / 2.0);
        let qe = q.powf(e);
        sn += qh / (1.0 - qe) * (e * v).sin();
        cn += qh / (1.0 + qe) * (e * v).cos();
        let qn = q.powi(n as i32);
        dn += qn / (1.0 + qn * qn) * (2.0 * n as f64 * v).cos();
    }
    let s = 2.0 * PI / (k * kk);
    (s * sn, s * cn, PI / (2.0 * kk) + 2.0 * PI / kk * dn)
}

/// Which transform: `F_1 = L[cn]`, `F_2 = L[dn]`, `F_3 = L[sn]`,
/// `F_4 = z L[sn^2]`, all at argument `z`.
fn check_index(i: usize, z: f64) -> Result<()> {
    if !(1..=4).contains(&i) {
        return Err(invalid("transform index must be 1..=4"));
    }
    if !(z > 0.0) {
        return Err(invalid("z must be positive"));
    }
    Ok(())
}

/// Termwise Laplace transform of the Fourier series.
pub fn laplace_series(i: usize, z: f64, ctx: &EllipticContext) -> Result<f64> {
    check_index(i, z)?;
    let (k, kk, q) = (ctx.k, ctx.big_k, ctx.nome);
    let nt = terms_needed(q);
    let w = |n: usize| (2 * n - 1) as f64 * PI / (2.0 * kk);
    let amp = |n: usize, plus: bool| {
        let e = (2 * n - 1) as f64;
        let qe = q.powf(e);
        q.powf(e / 2.0) / if plus { 1.0 + qe } else { 1.0 - qe }
    };
    let s = 2.0 * PI / (k * kk);
    let v = match i {
        1 => s * (1..=nt).map(|n| amp(n, true) * z / (z * z + w(n) * w(n))).sum::<f64>(),
        2 => {
            let tail = (1..=nt)
                .map(|n| {
                    let qn = q.powi(n as i32);
                    let om = n as f64 * PI / kk;
                    qn / (1.0 + qn * qn) * z / (z * z + om * om)
                })
                .sum::<f64>();
            PI / (2.0 * kk * z) + 2.0 * PI / kk * tail
        }
        3 => s * (1..=nt).map(|n| amp(n, false) * w(n) / (z * z + w(n) * w(n))).sum::<f64>(),
        _ => {
            let b: Vec<f64> = (1..=nt).map(|n| amp(n, false)).collect();
            let mut acc = 0.0;
            for m in 1..=nt {
                for n in 1..=nt {
                    let (d, p) = (w(m) - w(n), w(m) + w(n));
                    acc += b[m - 1] * b[n - 1] * (z / (z * z + d * d) - z / (z * z + p * p));
                }
            }
            z * 0.5 * s * s * acc
        }
    };
    Ok(v)
}

/// Composite Gauss–Legendre quadrature of the damped integrand on
/// `[0, T]`, `T = max(40/z, 8K)`.
pub fn laplace_quadrature(i: usize, z: f64, ctx: &EllipticContext) -> Result<f64> {
    check_index(i, z)?;
    let t = (40.0 / z).max(8.0 * ctx.big_k);
    let panels = ((t / (0.25 * ctx.big_k)).ceil() as usize).max(8);
    let h = t / panels as f64;
    let (nodes, weights) = gl20();
    let mut acc = 0.0;
    for p in 0..panels {
        let mid = (p as f64 + 0.5) * h;
        for (x, w) in nodes.iter().zip(&weights) {
            let u = mid + 0.5 * h * x;
            let (sn, cn, dn) = jacobi_elliptic_agm(u, ctx.k);
            let f = match i {
                1 => cn,
                2 => dn,
                3 => sn,
                _ => sn * sn,
            };
            acc += 0.5 * h * w * f * (-z * u).exp();
        }
    }
    Ok(if i == 4 { z * acc } else { acc })
}

fn gl20() -> (Vec<f64>, Vec<f64>) {
    use crate::orthopoly::{family_coeffs, zeros};
    let rc = family_coeffs(Family::Legendre, 20).expect("Legendre coefficients");
    let x = zeros(&rc, 20).expect("Legendre zeros");
    let w = x
        .iter()
        .map(|&xi| {
            let p = crate::orthopoly::eval_orthonormal_real(&rc, xi, 19).expect("evaluation");
            1.0 / p.iter().map(|v| v * v).sum::<f64>()
        })
        .collect();
    (x, w)
}

/// Relative agreement required between the two Laplace evaluations.
pub const LAPLACE_TOL: f64 = 1e-9;

/// `F_i(z)` by the termwise series, cross-checked by damped quadrature.
pub fn laplace_f(i: usize, z: f64, ctx: &EllipticContext) -> Result<f64> {
    let s = laplace_series(i, z, ctx)?;
    let q = laplace_quadrature(i, z, ctx)?;
    let d = (s - q).abs() / s.abs().max(f64::MIN_POSITIVE);
    if !(d <= LAPLACE_TOL) {
        return Err(Error::CrossCheck { what: "Laplace transform (series vs quadrature)", index: i, discrepancy: d });
    }
    Ok(s)
}

/// The two Carlitz recurrences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CarlitzBranch {
    /// `alpha_(2m) = (2m)^2 k^2`, `alpha_(2m+1) = (2m+1)^2`.
    CAlpha,
    /// `beta_(2m) = (2m)^2`, `beta_(2m+1) = (2m+1)^2 k^2`.
    DBeta,
}

impl CarlitzBranch {
    pub fn family(self, k: f64) -> Family {
        match self {
            CarlitzBranch::CAlpha => Family::CarlitzC { k },
            CarlitzBranch::DBeta => Family::CarlitzD { k },
        }
    }
}

/// Transform index matched to each branch by [`match_carlitz`]:
/// `C_alpha -> F_1`, `D_beta -> F_2`.
pub const CARLITZ_PAIRING: [(CarlitzBranch, usize); 2] = [(CarlitzBranch::CAlpha, 1), (CarlitzBranch::DBeta, 2)];

/// Frozen transform index for a branch.
pub fn paired_transform(branch: CarlitzBranch) -> usize {
    CARLITZ_PAIRING.iter().find(|p| p.0 == branch).map(|p| p.1).unwrap_or(0)
}

/// `n`-th approximant of the zero-diagonal J-fraction with partial
/// numerators `1, alpha_1, alpha_2, ...` (or `beta`), evaluated on the
/// imaginary axis and rotated to the real line:
/// `1/(z + alpha_1/(z + alpha_2/(z + ... alpha_(2n-1)/z)))`.
pub fn carlitz_cf_approximant(branch: CarlitzBranch, ctx: &EllipticContext, z: f64, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(invalid("approximant order must be at least 1"));
    }
    let fam = branch.family(ctx.k);
    let levels = 2 * n;
    let mut tail = z;
    for m in (1..levels).rev() {
        if tail == 0.0 {
            return Err(Error::Pole { n: m, denominator: 0.0 });
        }
        tail = z + carlitz_numerator(&fam, m) / tail;
    }
    if tail == 0.0 || !tail.is_finite() {
        return Err(Error::Pole { n: 0, denominator: tail });
    }
    Ok(1.0 / tail)
}

/// Candidates considered by the matching oracle: `F_1..F_4` and `F_4/z`.
pub const MATCH_CANDIDATES: [&str; 5] = ["F1", "F2", "F3", "F4", "F4/z"];

/// Index into [`MATCH_CANDIDATES`] that best matches the limit of the
/// branch approximants at the given points, with the worst relative
/// deviation of that candidate.
pub fn match_carlitz(branch: CarlitzBranch, points: &[(f64, f64)], n: usize) -> Result<(usize, f64)> {
    let mut worst = [0.0f64; 5];
    for &(z, k) in points {
        let ctx = EllipticContext::new(k)?;
        let c = carlitz_cf_approximant(branch, &ctx, z, n)?;
        let f: Vec<f64> = (1..=4).map(|i| laplace_series(i, z, &ctx)).collect::<Result<_>>()?;
        let cands = [f[0], f[1], f[2], f[3], f[3] / z];
        for (w, v) in worst.iter_mut().zip(cands) {
            *w = w.max(((c - v) / v).abs());
        }
    }
    Ok(worst.iter().copied().enumerate().fold((0, f64::INFINITY), |a, b| if b.1 < a.1 { b } else { a }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_integral_examples() {
        let (k, _) = complete_k(1e-9).unwrap();
        assert!((k - FRAC_PI_2).abs() < 1e-15);
        let (k, kp) = complete_k(core::f64::consts::FRAC_1_SQRT_2).unwrap();
        assert!((k - kp).abs() < 1e-14);
        assert!((complete_k(0.5).unwrap().0 - 1.685_750_354_812_596).abs() < 1e-14);
        for i in 1..=9 {
            let k = i as f64 / 10.0;
            let a = complete_k(k).unwrap().0;
            assert!((a - complete_k_quadrature(k).unwrap()).abs() < 1e-10 * a);
        }
        assert!(complete_k(1.0).is_err());
    }

    #[test]
    fn nome_convention_is_complementary() {
        for k in [0.1, 0.3, 0.5, 0.7, 0.9] {
            let ctx = EllipticContext::new(k).unwrap();
            assert_eq!(ctx.convention, KPrimeConvention::Complementary);
            assert!(ctx.fourier_discrepancy() < 1e-12);
            let printed = EllipticContext::with_convention(k, KPrimeConvention::Printed).unwrap();
            assert!(printed.fourier_discrepancy() > 1e-3);
        }
    }

    #[test]
    fn elliptic_function_examples() {
        let ctx = EllipticContext::new(0.6).unwrap();
        assert_eq!(jacobi_elliptic(0.0, &ctx).unwrap(), (0.0, 1.0, 1.0));
        let (s, c, d) = jacobi_elliptic_agm(0.7, 0.0);
        assert_eq!((s, c, d), (0.7f64.sin(), 0.7f64.cos(), 1.0));
        let tiny = EllipticContext::new(1e-6).unwrap();
        let (s, c, _) = jacobi_elliptic(0.7, &tiny).unwrap();
        assert!((s - 0.7f64.sin()).abs() < 1e-11 && (c - 0.7f64.cos()).abs() < 1e-11);
        for k in [0.2, 0.5, 0.8, 0.95] {
            let ctx = EllipticContext::new(k).unwrap();
            for i in 0..40 {
                let u = -3.0 + 0.37 * i as f64;
                let (s, c, d) = jacobi_elliptic(u, &ctx).unwrap();
                assert!((s * s + c * c - 1.0).abs() < 1e-12);
                assert!((d * d + k * k * s * s - 1.0).abs() < 1e-12);
            }
            // sn(K) = 1
            assert!((jacobi_elliptic(ctx.big_k, &ctx).unwrap().0 - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn laplace_examples() {
        let tiny = EllipticContext::new(1e-5).unwrap();
        for z in [0.5, 2.0] {
            assert!((laplace_series(1, z, &tiny).unwrap() - z / (z * z + 1.0)).abs() < 1e-9);
            assert!((laplace_series(3, z, &tiny).unwrap() - 1.0 / (z * z + 1.0)).abs() < 1e-9);
            assert!((laplace_series(2, z, &tiny).unwrap() - 1.0 / z).abs() < 1e-9);
        }
        let ctx = EllipticContext::new(0.5).unwrap();
        for i in 1..=4 {
            let s = laplace_series(i, 2.0, &ctx).unwrap();
            let q = laplace_quadrature(i, 2.0, &ctx).unwrap();
            assert!((s - q).abs() < 1e-10 * s.abs(), "F{i}: {s} {q}");
        }
        assert!(laplace_f(0, 1.0, &ctx).is_err() && laplace_f(1, -1.0, &ctx).is_err());
    }

    #[test]
    fn carlitz_examples() {
        let ctx = EllipticContext::new(1e-7).unwrap();
        let z = 2.0;
        let c = carlitz_cf_approximant(CarlitzBranch::CAlpha, &ctx, z, 5).unwrap();
        assert!((c - z / (z * z + 1.0)).abs() < 1e-12);
        let ctx = EllipticContext::new(0.5).unwrap();
        let a = carlitz_cf_approximant(CarlitzBranch::CAlpha, &ctx, 2.0, 30).unwrap();
        let b = carlitz_cf_approximant(CarlitzBranch::CAlpha, &ctx, 2.0, 29).unwrap();
        assert!((a - b).abs() < 1e-10);
    }

    #[test]
    fn matching_oracle_reproduces_table() {
        let pts = [(1.0, 0.3), (2.0, 0.5), (4.0, 0.7)];
        for (branch, idx) in CARLITZ_PAIRING {
            let (best, dev) = match_carlitz(branch, &pts, 30).unwrap();
            assert_eq!(best + 1, idx);
            assert!(dev < 1e-8);
        }
    }
}

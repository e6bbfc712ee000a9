//! Logarithmic energy of unit charges in the presence of fixed charges,
//! constrained equilibria, zero-distribution laws, Fekete points and the
//! Selberg integral.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::invalid;
use crate::linalg::solve_dense;
use crate::math::{binomial, ln_gamma};
use crate::{Error, Result};

/// Constraint on the free charges.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Constraint {
    None,
    /// `(1/n) sum x_i <= K`.
    CentroidMax(f64),
    /// `(1/n) sum x_i^2 <= L`.
    InertiaMax(f64),
}

/// `n` free unit charges, fixed charges `(position, charge)`, an optional
/// constraint and the open domain the free charges live in.
#[derive(Debug, Clone, PartialEq)]
pub struct ChargeSystem {
    pub n: usize,
    pub fixed: Vec<(f64, f64)>,
    pub constraint: Constraint,
    pub domain: (f64, f64),
}

impl ChargeSystem {
    pub fn new(n: usize, fixed: Vec<(f64, f64)>, constraint: Constraint, domain: (f64, f64)) -> Result<Self> {
        if n == 0 {
            return Err(invalid("at least one free charge is needed"));
        }
        if !(domain.0 < domain.1) {
            return Err(invalid("domain must be a nonempty interval"));
        }
        for (i, f) in fixed.iter().enumerate() {
            if !(f.1 > 0.0) || !f.0.is_finite() {
                return Err(Error::NonPositive { what: "fixed charge", index: i, value: f.1 });
            }
            if fixed[..i].iter().any(|g| g.0 == f.0) {
                return Err(invalid("fixed charge positions must be distinct"));
            }
        }
        match constraint {
            Constraint::CentroidMax(v) | Constraint::InertiaMax(v) if !(v > 0.0) => {
                return Err(invalid("constraint bound must be positive"));
            }
            _ => {}
        }
        Ok(ChargeSystem { n, fixed, constraint, domain })
    }

    /// Charges `p` at `+1` and `q` at `-1` on `(-1, 1)`.
    pub fn jacobi(n: usize, p: f64, q: f64) -> Result<Self> {
        Self::new(n, vec![(1.0, p), (-1.0, q)], Constraint::None, (-1.0, 1.0))
    }

    /// Charge `p` at the origin on `(0, inf)` with centroid at most `k`.
    pub fn laguerre(n: usize, p: f64, k: f64) -> Result<Self> {
        Self::new(n, vec![(0.0, p)], Constraint::CentroidMax(k), (0.0, f64::INFINITY))
    }

    /// Free charges on the line with mean square at most `l`.
    pub fn hermite(n: usize, l: f64) -> Result<Self> {
        Self::new(n, Vec::new(), Constraint::InertiaMax(l), (f64::NEG_INFINITY, f64::INFINITY))
    }

    fn constraint_value(&self, x: &[f64]) -> Option<(f64, f64)> {
        let n = x.len() as f64;
        match self.constraint {
            Constraint::None => None,
            Constraint::CentroidMax(k) => Some((x.iter().sum::<f64>() / n, k)),
            Constraint::InertiaMax(l) => Some((x.iter().map(|v| v * v).sum::<f64>() / n, l)),
        }
    }
}

/// Energy value; `coincident` marks the `+inf` sentinel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Energy {
    pub value: f64,
    pub coincident: bool,
}

/// `-sum_(i<j) log|x_i - x_j| - sum_i sum_f q_f log|x_i - a_f|`.
pub fn energy(x: &[f64], s: &ChargeSystem) -> Energy {
    let mut e = 0.0;
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            let d = (x[i] - x[j]).abs();
            if d == 0.0 {
                return Energy { value: f64::INFINITY, coincident: true };
            }
            e -= d.ln();
        }
        for &(a, q) in &s.fixed {
            let d = (x[i] - a).abs();
            if d == 0.0 {
                return Energy { value: f64::INFINITY, coincident: true };
            }
            e -= q * d.ln();
        }
    }
    Energy { value: e, coincident: false }
}

/// Partial derivatives of [`energy`].
pub fn gradient(x: &[f64], s: &ChargeSystem) -> Vec<f64> {
    (0..x.len())
        .map(|k| {
            let mut g = 0.0;
            for (i, &xi) in x.iter().enumerate() {
                if i != k {
                    g -= 1.0 / (x[k] - xi);
                }
            }
            for &(a, q) in &s.fixed {
                g -= q / (x[k] - a);
            }
            g
        })
        .collect()
}

fn hessian(x: &[f64], s: &ChargeSystem) -> Vec<f64> {
    let n = x.len();
    let mut h = vec![0.0; n * n];
    for k in 0..n {
        let mut d = 0.0;
        for i in 0..n {
            if i != k {
                let t = 1.0 / ((x[k] - x[i]) * (x[k] - x[i]));
                h[k * n + i] = -t;
                d += t;
            }
        }
        for &(a, q) in &s.fixed {
            d += q / ((x[k] - a) * (x[k] - a));
        }
        h[k * n + k] = d;
    }
    h
}

/// Result of an equilibrium computation.
#[derive(Debug, Clone, PartialEq)]
pub struct EquilibriumResult {
    /// Ascending positions.
    pub positions: Vec<f64>,
    pub energy: f64,
    /// Largest stationarity residual, each relative to the magnitude of
    /// the forces acting on that charge.
    pub grad_norm: f64,
    /// Lagrange multiplier of the active constraint.
    pub multiplier: Option<f64>,
    pub iterations: usize,
    /// Whether the unconstrained gradient points out of the feasible set,
    /// i.e. the constraint is genuinely active.
    pub outward: Option<bool>,
}

/// Chebyshev points of `(a, b)`.
fn chebyshev_init(n: usize, a: f64, b: f64) -> Vec<f64> {
    (1..=n)
        .map(|j| 0.5 * (a + b) - 0.5 * (b - a) * ((2 * j - 1) as f64 * PI / (2 * n) as f64).cos())
        .collect()
}

/// Default starting configuration: Chebyshev points of the domain, or of
/// the interval on which the constraint is attained for unbounded domains.
pub fn default_init(s: &ChargeSystem) -> Result<Vec<f64>> {
    let (lo, hi) = s.domain;
    let (a, b) = match (lo.is_finite(), hi.is_finite(), s.constraint) {
        (true, true, _) => (lo, hi),
        (true, false, Constraint::CentroidMax(k)) => (lo, lo + 2.0 * (k - lo.min(k))),
        (false, false, Constraint::InertiaMax(l)) => {
            let r = (2.0 * l).sqrt();
            (-r, r)
        }
        _ => return Err(invalid("an unbounded domain needs a matching constraint")),
    };
    let mut x = chebyshev_init(s.n, a, b);
    if let Constraint::InertiaMax(l) = s.constraint {
        // rescale onto the constraint boundary
        let m = x.iter().map(|v| v * v).sum::<f64>() / s.n as f64;
        if m > 0.0 {
            let f = (l / m).sqrt();
            x.iter_mut().for_each(|v| *v *= f);
        }
    }
    Ok(x)
}

struct Residual {
    f: Vec<f64>,
    scaled: f64,
    norm: f64,
}

fn residual(x: &[f64], lambda: f64, s: &ChargeSystem) -> Residual {
    let n = x.len();
    let g = gradient(x, s);
    let mut f = g.clone();
    let mut scaled: f64 = 0.0;
    let cg = constraint_grad(x, s);
    for k in 0..n {
        let mut mag: f64 = s.fixed.iter().map(|&(a, q)| q / (x[k] - a).abs()).sum();
        mag += x.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, &xi)| 1.0 / (x[k] - xi).abs()).sum::<f64>();
        if let Some(c) = &cg {
            f[k] += lambda * c[k];
            mag += (lambda * c[k]).abs();
        }
        scaled = scaled.max(f[k].abs() / mag.max(f64::MIN_POSITIVE));
    }
    if let Some((v, bound)) = s.constraint_value(x) {
        f.push(v - bound);
        scaled = scaled.max((v - bound).abs() / bound);
    }
    let norm = f.iter().map(|v| v * v).sum::<f64>().sqrt();
    Residual { f, scaled, norm }
}

fn constraint_grad(x: &[f64], s: &ChargeSystem) -> Option<Vec<f64>> {
    let n = x.len() as f64;
    match s.constraint {
        Constraint::None => None,
        Constraint::CentroidMax(_) => Some(vec![1.0 / n; x.len()]),
        Constraint::InertiaMax(_) => Some(x.iter().map(|v| 2.0 * v / n).collect()),
    }
}

fn admissible(x: &[f64], s: &ChargeSystem, cells: Option<&[(f64, f64)]>) -> bool {
    if x.iter().any(|v| !v.is_finite() || *v <= s.domain.0 || *v >= s.domain.1) {
        return false;
    }
    if x.windows(2).any(|w| w[0] >= w[1]) {
        return false;
    }
    if let Some(c) = cells {
        if x.iter().zip(c).any(|(v, c)| *v <= c.0 || *v >= c.1) {
            return false;
        }
    }
    !energy(x, s).coincident
}

/// Default stationarity tolerance.
pub const DEFAULT_TOL: f64 = 1e-13;
const MAX_ITER: usize = 200;

/// Stationary configuration of the energy by damped Newton iteration. An
/// active constraint is imposed as an equality with a multiplier.
pub fn equilibrium(s: &ChargeSystem, init: Option<&[f64]>, tol: f64) -> Result<EquilibriumResult> {
    let x0 = match init {
        Some(v) => v.to_vec(),
        None => default_init(s)?,
    };
    solve(s, x0, tol, None)
}

fn solve(s: &ChargeSystem, mut x: Vec<f64>, tol: f64, cells: Option<&[(f64, f64)]>) -> Result<EquilibriumResult> {
    let n = s.n;
    if x.len() != n {
        return Err(invalid("initial configuration has the wrong length"));
    }
    if !admissible(&x, s, cells) {
        return Err(Error::Infeasible("initial configuration must be ordered, distinct and inside the domain".into()));
    }
    if let Some((v, bound)) = s.constraint_value(&x) {
        if v > bound * (1.0 + 1e-12) {
            return Err(Error::Infeasible("initial configuration violates the constraint".into()));
        }
    }
    let constrained = !matches!(s.constraint, Constraint::None);
    let mut lambda = 0.0;
    if let Some(c) = constraint_grad(&x, s) {
        let g = gradient(&x, s);
        let num: f64 = g.iter().zip(&c).map(|(a, b)| a * b).sum();
        let den: f64 = c.iter().map(|v| v * v).sum();
        lambda = -num / den;
    }
    let mut r = residual(&x, lambda, s);
    let mut iterations = 0;
    while r.scaled > tol {
        if iterations >= MAX_ITER {
            return Err(Error::NoConvergence { what: "equilibrium", iterations, residual: r.scaled });
        }
        iterations += 1;
        let m = if constrained { n + 1 } else { n };
        let h = hessian(&x, s);
        let mut jac = vec![0.0; m * m];
        for i in 0..n {
            for j in 0..n {
                jac[i * m + j] = h[i * n + j];
            }
        }
        if let Some(c) = constraint_grad(&x, s) {
            if let Constraint::InertiaMax(_) = s.constraint {
                for i in 0..n {
                    jac[i * m + i] += 2.0 * lambda / n as f64;
                }
            }
            for i in 0..n {
                jac[i * m + n] = c[i];
                jac[n * m + i] = c[i];
            }
        }
        let rhs: Vec<f64> = r.f.iter().map(|v| -v).collect();
        let (step, _) = solve_dense(&jac, m, &rhs, 1e300)?;
        let mut t = 1.0;
        let mut accepted = false;
        for _ in 0..60 {
            let xt: Vec<f64> = x.iter().zip(&step).map(|(a, d)| a + t * d).collect();
            let lt = if constrained { lambda + t * step[n] } else { 0.0 };
            if admissible(&xt, s, cells) {
                let rt = residual(&xt, lt, s);
                if rt.norm < r.norm || rt.scaled <= tol {
                    x = xt;
                    lambda = lt;
                    r = rt;
                    accepted = true;
                    break;
                }
            }
            t *= 0.5;
        }
        if !accepted {
            if r.scaled <= 1e3 * tol {
                break;
            }
            return Err(Error::NoConvergence { what: "equilibrium line search", iterations, residual: r.scaled });
        }
    }
    Ok(EquilibriumResult {
        energy: energy(&x, s).value,
        grad_norm: r.scaled,
        multiplier: constrained.then_some(lambda),
        outward: constrained.then_some(lambda > 0.0),
        positions: x,
        iterations,
    })
}

/// All ways of placing `n` charges into `p` intervals.
pub fn compositions(n: usize, p: usize) -> Vec<Vec<usize>> {
    if p == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if p == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for first in (0..=n).rev() {
        for mut rest in compositions(n - first, p - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Number of compositions, `C(n + p - 1, n)`.
pub fn composition_count(n: usize, p: usize) -> f64 {
    if p == 0 {
        return if n == 0 { 1.0 } else { 0.0 };
    }
    binomial((n + p - 1) as u64, n as u64)
}

/// Equilibrium with `composition[j]` free charges confined to
/// `(a_j, a_(j+1))` between the fixed charges `(a_j, r_j)`.
pub fn heine_stieltjes_equilibria(fixed: &[(f64, f64)], composition: &[usize], tol: f64) -> Result<EquilibriumResult> {
    if fixed.len() < 2 || composition.len() + 1 != fixed.len() {
        return Err(invalid("need p + 1 fixed charges and p composition entries"));
    }
    if fixed.windows(2).any(|w| w[0].0 >= w[1].0) {
        return Err(invalid("fixed charge positions must increase"));
    }
    let n: usize = composition.iter().sum();
    let s = ChargeSystem::new(n, fixed.to_vec(), Constraint::None, (fixed[0].0, fixed[fixed.len() - 1].0))?;
    let mut x = Vec::with_capacity(n);
    let mut cells = Vec::with_capacity(n);
    for (j, &c) in composition.iter().enumerate() {
        let (a, b) = (fixed[j].0, fixed[j + 1].0);
        x.extend(chebyshev_init(c, a, b));
        cells.extend(core::iter::repeat_n((a, b), c));
    }
    solve(&s, x, tol, Some(&cells))
}

/// Largest `|sum_(i != k) 1/(x_i - x_k) - sum_f r_f/(x_k - a_f)|`.
pub fn stationarity_residual(x: &[f64], fixed: &[(f64, f64)]) -> f64 {
    (0..x.len())
        .map(|k| {
            let l: f64 = x.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, &xi)| 1.0 / (xi - x[k])).sum();
            let r: f64 = fixed.iter().map(|&(a, q)| q / (x[k] - a)).sum();
            (l - r).abs()
        })
        .fold(0.0, f64::max)
}

/// Kolmogorov distance between the empirical distribution of sorted
/// points and a continuous distribution function.
pub fn cdf_distance<F: Fn(f64) -> f64>(zs: &[f64], cdf: F) -> f64 {
    let n = zs.len() as f64;
    zs.iter()
        .enumerate()
        .map(|(j, &x)| {
            let g = cdf(x);
            ((j as f64 + 1.0) / n - g).abs().max((j as f64 / n - g).abs())
        })
        .fold(0.0, f64::max)
}

/// Arcsine distribution function on `[-1, 1]`.
pub fn arcsine_cdf(x: f64) -> f64 {
    0.5 + x.clamp(-1.0, 1.0).asin() / PI
}

/// Semicircle distribution function on `[-1, 1]`.
pub fn semicircle_cdf(x: f64) -> f64 {
    let x = x.clamp(-1.0, 1.0);
    0.5 + (x * (1.0 - x * x).sqrt() + x.asin()) / PI
}

/// Distance of sorted points in `[-1, 1]` to the arcsine law.
pub fn arcsine_distance(zs: &[f64]) -> Result<f64> {
    if zs.iter().any(|z| z.abs() > 1.0) {
        return Err(invalid("points must lie in [-1, 1]"));
    }
    Ok(cdf_distance(zs, arcsine_cdf))
}

/// `(alpha/pi) integral_|t|^1 y^(alpha-1) / sqrt(y^2 - t^2) dy`, evaluated
/// after `y = sqrt(t^2 + s^2)` as `(alpha/pi) integral_0^sqrt(1-t^2) y^(alpha-2) ds`.
pub fn nevai_ullman_density(alpha: f64, t: f64) -> Result<f64> {
    if !(alpha > 0.0) {
        return Err(invalid("alpha must be positive"));
    }
    if !(t.abs() <= 1.0) {
        return Err(invalid("t must lie in [-1, 1]"));
    }
    let top = (1.0 - t * t).sqrt();
    if top == 0.0 {
        return Ok(0.0);
    }
    if t == 0.0 && alpha <= 1.0 {
        return Ok(f64::INFINITY);
    }
    let r = crate::integrate::integrate(|s| (t * t + s * s).powf(0.5 * (alpha - 2.0)), 0.0, top, 1e-14)?;
    Ok(alpha / PI * r.value)
}

/// Contraction constant for the Freud weight `exp(-|x|^alpha)` as printed:
/// `(sqrt(pi) Gamma((alpha+1)/2) / Gamma(alpha/2))^(1/alpha)`.
pub fn freud_c(alpha: f64) -> f64 {
    let l = 0.5 * PI.ln() + ln_gamma(0.5 * (alpha + 1.0)) - ln_gamma(0.5 * alpha);
    (l / alpha).exp()
}

/// Contraction constant with the Gamma ratio inverted,
/// `(sqrt(pi) Gamma(alpha/2) / Gamma((alpha+1)/2))^(1/alpha)`, which is
/// `sqrt(2)` at `alpha = 2`.
pub fn freud_c_inverted(alpha: f64) -> f64 {
    let l = 0.5 * PI.ln() + ln_gamma(0.5 * alpha) - ln_gamma(0.5 * (alpha + 1.0));
    (l / alpha).exp()
}

/// Fekete configuration and its normalized discriminant.
#[derive(Debug, Clone, PartialEq)]
pub struct Fekete {
    pub points: Vec<f64>,
    /// `(prod_(i<j) |x_i - x_j|)^(1 / C(n,2))`.
    pub d_n: f64,
}

fn log_discriminant(x: &[f64]) -> f64 {
    let mut s = 0.0;
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            s += (x[j] - x[i]).abs().ln();
        }
    }
    s
}

/// Maximize the discriminant on `[-1, 1]` by coordinate-wise
/// golden-section search started from Chebyshev–Lobatto points.
pub fn fekete(n: usize) -> Result<Fekete> {
    if n < 2 {
        return Err(invalid("Fekete points need n >= 2"));
    }
    let mut x: Vec<f64> = (0..n).map(|j| -(PI * j as f64 / (n - 1) as f64).cos()).collect();
    let g = (5f64.sqrt() - 1.0) / 2.0;
    for _sweep in 0..500 {
        let mut moved: f64 = 0.0;
        for i in 0..n {
            let lo = if i == 0 { -1.0 } else { x[i - 1] };
            let hi = if i + 1 == n { 1.0 } else { x[i + 1] };
            let f = |v: f64, x: &mut Vec<f64>| {
                let old = x[i];
                x[i] = v;
                let r = log_discriminant(x);
                x[i] = old;
                if r.is_nan() {
                    f64::NEG_INFINITY
                } else {
                    r
                }
            };
            let (mut a, mut b) = (lo, hi);
            let mut c = b - g * (b - a);
            let mut d = a + g * (b - a);
            let (mut fc, mut fd) = (f(c, &mut x), f(d, &mut x));
            for _ in 0..200 {
                if b - a <= 1e-15 * (1.0 + a.abs()) {
                    break;
                }
                if fc > fd {
                    b = d;
                    d = c;
                    fd = fc;
                    c = b - g * (b - a);
                    fc = f(c, &mut x);
                } else {
                    a = c;
                    c = d;
                    fc = fd;
                    d = a + g * (b - a);
                    fd = f(d, &mut x);
                }
            }
            let mut best = 0.5 * (a + b);
            // snap to a bracket end when it is the endpoint of the domain
            for end in [lo, hi] {
                if end.abs() == 1.0 && (best - end).abs() < 1e-6 && f(end, &mut x) >= f(best, &mut x) {
                    best = end;
                }
            }
            moved = moved.max((best - x[i]).abs());
            x[i] = best;
        }
        if moved < 1e-14 {
            break;
        }
    }
    let pairs = (n * (n - 1) / 2) as f64;
    let d_n = (log_discriminant(&x) / pairs).exp();
    if !d_n.is_finite() {
        return Err(Error::NoConvergence { what: "Fekete search", iterations: 500, residual: d_n });
    }
    Ok(Fekete { points: x, d_n })
}

/// Selberg's integral
/// `prod_(j=1)^n Gamma(x+(j-1)z) Gamma(y+(j-1)z) Gamma(jz+1) / (Gamma(x+y+(n+j-2)z) Gamma(z+1))`.
pub fn selberg(n: usize, x: f64, y: f64, z: f64) -> Result<f64> {
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    if !(x > 0.0 && y > 0.0 && z >= 0.0) {
        return Err(invalid("Selberg integral needs x, y > 0 and z >= 0"));
    }
    let mut l = 0.0;
    for j in 1..=n {
        let jf = j as f64;
        let nf = n as f64;
        l += ln_gamma(x + (jf - 1.0) * z) + ln_gamma(y + (jf - 1.0) * z) + ln_gamma(jf * z + 1.0)
            - ln_gamma(x + y + (nf + jf - 2.0) * z)
            - ln_gamma(z + 1.0);
    }
    Ok(l.exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orthopoly::{family_coeffs, zeros, Family};

    fn free(n: usize) -> ChargeSystem {
        ChargeSystem::new(n, Vec::new(), Constraint::None, (-10.0, 10.0)).unwrap()
    }

    #[test]
    fn energy_examples() {
        assert_eq!(energy(&[0.0, 1.0], &free(2)).value, 0.0);
        assert!((energy(&[0.0, 0.5], &free(2)).value - 2f64.ln()).abs() < 1e-15);
        let s = ChargeSystem::jacobi(1, 1.0, 1.0).unwrap();
        assert_eq!(energy(&[0.0], &s).value, 0.0);
        let e = energy(&[0.3, 0.3], &free(2));
        assert!(e.coincident && e.value == f64::INFINITY);
        assert!(energy(&[1.0], &s).coincident);
    }

    #[test]
    fn gradient_examples() {
        let s = ChargeSystem::jacobi(1, 1.0, 0.5).unwrap();
        assert!(gradient(&[-1.0 / 3.0], &s)[0].abs() < 1e-15);
        let s = ChargeSystem::jacobi(3, 0.7, 0.7).unwrap();
        let g = gradient(&[-0.5, 0.1, 0.6], &s);
        let h = gradient(&[-0.6, -0.1, 0.5], &s);
        for i in 0..3 {
            assert!((g[i] + h[2 - i]).abs() < 1e-14);
        }
    }

    #[test]
    fn equilibrium_examples() {
        let r = equilibrium(&ChargeSystem::jacobi(1, 1.0, 1.0).unwrap(), None, DEFAULT_TOL).unwrap();
        assert!(r.positions[0].abs() < 1e-15);
        let r = equilibrium(&ChargeSystem::jacobi(2, 0.75, 0.75).unwrap(), None, DEFAULT_TOL).unwrap();
        assert!((r.positions[0] + 0.5).abs() < 1e-14 && (r.positions[1] - 0.5).abs() < 1e-14);
        let r = equilibrium(&ChargeSystem::hermite(2, 1.0).unwrap(), None, DEFAULT_TOL).unwrap();
        assert!((r.positions[0] + 1.0).abs() < 1e-14 && (r.positions[1] - 1.0).abs() < 1e-14);
        assert_eq!(r.outward, Some(true));
        assert!(r.grad_norm <= DEFAULT_TOL);
    }

    #[test]
    fn equilibrium_matches_zeros() {
        let s = ChargeSystem::jacobi(9, 0.25, 2.0).unwrap();
        let r = equilibrium(&s, None, DEFAULT_TOL).unwrap();
        let z = zeros(&family_coeffs(Family::Jacobi { alpha: -0.5, beta: 3.0 }, 9).unwrap(), 9).unwrap();
        for (a, b) in r.positions.iter().zip(&z) {
            assert!((a - b).abs() < 1e-10);
        }
        let (n, p, k) = (7, 0.5, 3.0);
        let r = equilibrium(&ChargeSystem::laguerre(n, p, k).unwrap(), None, DEFAULT_TOL).unwrap();
        let c = (n as f64 + 2.0 * p - 1.0) / k;
        let z = zeros(&family_coeffs(Family::Laguerre { alpha: 2.0 * p - 1.0 }, n).unwrap(), n).unwrap();
        for (a, b) in r.positions.iter().zip(&z) {
            assert!((a - b / c).abs() < 1e-10);
        }
        assert_eq!(r.outward, Some(true));
    }

    #[test]
    fn infeasible_init_rejected() {
        let s = ChargeSystem::laguerre(2, 1.0, 1.0).unwrap();
        assert!(matches!(equilibrium(&s, Some(&[1.0, 5.0]), 1e-12), Err(Error::Infeasible(_))));
        let s = ChargeSystem::jacobi(2, 1.0, 1.0).unwrap();
        assert!(matches!(equilibrium(&s, Some(&[0.5, 0.1]), 1e-12), Err(Error::Infeasible(_))));
    }

    #[test]
    fn heine_stieltjes_examples() {
        assert_eq!(compositions(2, 2), [vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(composition_count(2, 2), 3.0);
        assert_eq!(compositions(4, 3).len() as f64, composition_count(4, 3));
        let fixed = [(-1.0, 0.75), (1.0, 0.75)];
        let r = heine_stieltjes_equilibria(&fixed, &[2], DEFAULT_TOL).unwrap();
        assert!((r.positions[0] + 0.5).abs() < 1e-14);
        let fixed = [(-1.0, 0.5), (0.2, 1.0), (2.0, 0.3)];
        for c in compositions(3, 2) {
            let r = heine_stieltjes_equilibria(&fixed, &c, DEFAULT_TOL).unwrap();
            assert!(stationarity_residual(&r.positions, &fixed) < 1e-10);
            assert_eq!(r.positions.iter().filter(|&&x| x < 0.2).count(), c[0]);
        }
    }

    #[test]
    fn distance_examples() {
        let n = 20;
        let z: Vec<f64> = (1..=n).rev().map(|j| ((2 * j - 1) as f64 * PI / (2 * n) as f64).cos()).collect();
        assert!(arcsine_distance(&z).unwrap() <= 0.025 + 1e-15);
        assert_eq!(arcsine_distance(&[0.0]).unwrap(), 0.5);
        assert!(arcsine_distance(&[1.5]).is_err());
    }

    #[test]
    fn nevai_ullman_examples() {
        assert!((nevai_ullman_density(2.0, 0.0).unwrap() - 2.0 / PI).abs() < 1e-14);
        for t in [-0.9, -0.3, 0.5, 0.99] {
            let v = nevai_ullman_density(2.0, t).unwrap();
            assert!((v - 2.0 / PI * (1.0 - t * t).sqrt()).abs() < 1e-13);
        }
        assert_eq!(nevai_ullman_density(3.0, 1.0).unwrap(), 0.0);
        assert_eq!(nevai_ullman_density(3.0, -1.0).unwrap(), 0.0);
        assert!(nevai_ullman_density(2.0, 1.1).is_err());
        // unit mass for a non-semicircle case
        let m = crate::integrate::integrate(|t| nevai_ullman_density(4.0, t).unwrap(), -1.0, 1.0, 1e-12).unwrap();
        assert!((m.value - 1.0).abs() < 1e-9);
        assert!((freud_c(2.0) - (PI / 2.0).sqrt()).abs() < 1e-15);
        assert!((freud_c_inverted(2.0) - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn fekete_examples() {
        let f = fekete(2).unwrap();
        assert_eq!(f.points, [-1.0, 1.0]);
        assert!((f.d_n - 2.0).abs() < 1e-15);
        let f = fekete(3).unwrap();
        assert!(f.points[1].abs() < 1e-7 && (f.d_n - 2f64.powf(1.0 / 3.0)).abs() < 1e-12);
        let d: Vec<f64> = (2..=8).map(|n| fekete(n).unwrap().d_n).collect();
        for w in d.windows(2) {
            assert!(w[1] < w[0] && w[1] > 0.5);
        }
    }

    #[test]
    fn selberg_examples() {
        assert!((selberg(1, 1.0, 1.0, 7.0).unwrap() - 1.0).abs() < 1e-15);
        let b = selberg(1, 2.5, 1.5, 3.0).unwrap();
        let beta = (ln_gamma(2.5) + ln_gamma(1.5) - ln_gamma(4.0)).exp();
        assert!((b - beta).abs() < 1e-15);
        assert!((selberg(2, 1.0, 1.0, 1.0).unwrap() - 1.0 / 6.0).abs() < 1e-15);
        assert!(selberg(2, 0.0, 1.0, 1.0).is_err());
    }
}

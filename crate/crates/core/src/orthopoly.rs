//! Three-term recurrences in orthonormal form, the classical families,
//! measure descriptors, zeros and the map from moments to coefficients.
//!
//! The orthonormal polynomials satisfy
//!
//! ```text
//! z p_k(z) = a_(k+1) p_(k+1)(z) + b_k p_k(z) + a_k p_(k-1)(z),
//! p_(-1) = 0,  p_0 = 1 / sqrt(mass).
//! ```

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};
use core::fmt;
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::contfrac::{contract, stieltjes_wigert_sfraction};
use crate::error::invalid;
use crate::linalg::symmetric_tridiagonal_eigen;
use crate::math::{erfc, gamma, ln_gamma, q_pochhammer, quarter_u_minus_sin};
use crate::moments::{hankel_factor, Precision};
use crate::{Error, Result};

/// Real function handle. Implementations must be reentrant.
pub type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;
/// Moment oracle `k -> mu_k`.
pub type MomentFn = Arc<dyn Fn(usize) -> f64 + Send + Sync>;
/// Density as `(x, x - a, b - x)` on a finite support `[a, b]`.
pub type DistFn = Arc<dyn Fn(f64, f64, f64) -> f64 + Send + Sync>;

/// Named weight families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    /// `(1 - x)^alpha (1 + x)^beta` on `[-1, 1]`.
    Jacobi { alpha: f64, beta: f64 },
    /// `x^alpha exp(-x)` on `[0, inf)`.
    Laguerre { alpha: f64 },
    /// `exp(-x^2)` on the real line (physicists' convention).
    Hermite,
    /// Lebesgue measure on `[-1, 1]`.
    Legendre,
    /// `1 / sqrt(1 - x^2)` on `[-1, 1]`.
    ChebyshevT,
    /// `sqrt(1 - x^2)` on `[-1, 1]`.
    ChebyshevU,
    /// Log-normal weight with `q = exp(-1/(2 kappa^2))` on `(0, inf)`,
    /// density `(kappa / sqrt(pi)) exp(-kappa^2 ln^2 u)`.
    StieltjesWigert { q: f64 },
    /// Carlitz numerators `alpha_2n = (2n)^2 k^2`, `alpha_(2n+1) = (2n+1)^2`.
    CarlitzC { k: f64 },
    /// Carlitz numerators `beta_2n = (2n)^2`, `beta_(2n+1) = (2n+1)^2 k^2`.
    CarlitzD { k: f64 },
}

impl Family {
    /// Check parameter ranges.
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            Family::Jacobi { alpha, beta } => alpha > -1.0 && beta > -1.0,
            Family::Laguerre { alpha } => alpha > -1.0,
            Family::StieltjesWigert { q } => q > 0.0 && q < 1.0,
            Family::CarlitzC { k } | Family::CarlitzD { k } => k > 0.0 && k < 1.0,
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            Err(invalid(alloc::format!("parameters out of range for {self:?}")))
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Jacobi { .. } => "jacobi",
            Family::Laguerre { .. } => "laguerre",
            Family::Hermite => "hermite",
            Family::Legendre => "legendre",
            Family::ChebyshevT => "chebyshev-t",
            Family::ChebyshevU => "chebyshev-u",
            Family::StieltjesWigert { .. } => "stieltjes-wigert",
            Family::CarlitzC { .. } => "carlitz-c",
            Family::CarlitzD { .. } => "carlitz-d",
        }
    }

    /// Closure of the support.
    pub fn support(&self) -> (f64, f64) {
        match self {
            Family::Jacobi { .. } | Family::Legendre | Family::ChebyshevT | Family::ChebyshevU => {
                (-1.0, 1.0)
            }
            Family::Laguerre { .. } | Family::StieltjesWigert { .. } => (0.0, f64::INFINITY),
            Family::Hermite | Family::CarlitzC { .. } | Family::CarlitzD { .. } => {
                (f64::NEG_INFINITY, f64::INFINITY)
            }
        }
    }

    /// Total mass `mu_0`.
    pub fn mass(&self) -> f64 {
        match *self {
            Family::Jacobi { alpha, beta } => jacobi_mass(alpha, beta),
            Family::Laguerre { alpha } => gamma(alpha + 1.0),
            Family::Hermite => PI.sqrt(),
            Family::Legendre => 2.0,
            Family::ChebyshevT => PI,
            Family::ChebyshevU => FRAC_PI_2,
            Family::StieltjesWigert { q } => q.powf(-0.5),
            Family::CarlitzC { .. } | Family::CarlitzD { .. } => 1.0,
        }
    }

    /// Closed-form moment `mu_k` where one is available.
    pub fn exact_moment(&self, k: usize) -> Option<f64> {
        let odd = k % 2 == 1;
        let j = k / 2;
        Some(match *self {
            Family::Legendre => {
                if odd {
                    0.0
                } else {
                    2.0 / (k as f64 + 1.0)
                }
            }
            Family::ChebyshevT => {
                if odd {
                    0.0
                } else {
                    PI * central_binomial_over_4j(j)
                }
            }
            Family::ChebyshevU => {
                if odd {
                    0.0
                } else {
                    PI * central_binomial_over_4j(j) / (2.0 * (j as f64 + 1.0))
                }
            }
            Family::Hermite => {
                if odd {
                    0.0
                } else {
                    gamma(j as f64 + 0.5)
                }
            }
            Family::Laguerre { alpha } => (ln_gamma(k as f64 + alpha + 1.0)).exp(),
            Family::Jacobi { alpha, beta } => jacobi_moment(alpha, beta, k),
            Family::StieltjesWigert { q } => {
                let kk = k as f64 + 1.0;
                q.powf(-kk * kk / 2.0)
            }
            Family::CarlitzC { .. } | Family::CarlitzD { .. } => {
                if odd {
                    0.0
                } else {
                    let atoms = carlitz_atoms(self).ok()?;
                    crate::math::sum2(atoms.iter().map(|&(x, w)| w * x.powi(k as i32)))
                }
            }
        })
    }

    /// Measure descriptor for this family.
    pub fn measure(&self) -> MeasureDescriptor {
        let fam = *self;
        let support = fam.support();
        let moments: MomentFn = Arc::new(move |k| fam.exact_moment(k).unwrap_or(f64::NAN));
        let md = match fam {
            Family::Legendre => MeasureDescriptor::from_density(support, Arc::new(|_| 1.0))
                .with_cdf(Arc::new(|x: f64| x.clamp(-1.0, 1.0) + 1.0), Arc::new(|x: f64| 1.0 - x.clamp(-1.0, 1.0))),
            Family::ChebyshevT => MeasureDescriptor::from_density(
                support,
                Arc::new(|x: f64| 1.0 / ((1.0 - x) * (1.0 + x)).sqrt()),
            )
            .with_cdf(
                Arc::new(|x: f64| (-x.clamp(-1.0, 1.0)).acos()),
                Arc::new(|x: f64| x.clamp(-1.0, 1.0).acos()),
            )
            .with_density_dist(Arc::new(|_, da, db| 1.0 / (da * db).sqrt())),
            Family::ChebyshevU => {
                // integral of sqrt(1 - t^2) from -1 to x, x = -cos(phi)
                let lower = |x: f64| {
                    let phi = (-x.clamp(-1.0, 1.0)).acos();
                    quarter_u_minus_sin(2.0 * phi)
                };
                MeasureDescriptor::from_density(
                    support,
                    Arc::new(|x: f64| ((1.0 - x) * (1.0 + x)).max(0.0).sqrt()),
                )
                .with_cdf(Arc::new(lower), Arc::new(move |x: f64| lower(-x)))
                .with_density_dist(Arc::new(|_, da, db| (da * db).sqrt()))
            }
            Family::Hermite => {
                let half = 0.5 * PI.sqrt();
                MeasureDescriptor::from_density(support, Arc::new(|x: f64| (-x * x).exp()))
                    .with_cdf(
                        Arc::new(move |x: f64| half * erfc(-x)),
                        Arc::new(move |x: f64| half * erfc(x)),
                    )
            }
            Family::Laguerre { alpha } if alpha == 0.0 => {
                MeasureDescriptor::from_density(support, Arc::new(|x: f64| (-x).exp())).with_cdf(
                    Arc::new(|x: f64| if x <= 0.0 { 0.0 } else { -(-x).exp_m1() }),
                    Arc::new(|x: f64| if x <= 0.0 { 1.0 } else { (-x).exp() }),
                )
            }
            Family::Laguerre { alpha } => {
                let w = move |x: f64| if x <= 0.0 { 0.0 } else { x.powf(alpha) * (-x).exp() };
                numeric_cdf(MeasureDescriptor::from_density(support, Arc::new(w)))
            }
            Family::Jacobi { alpha, beta } => {
                let w = move |x: f64| (1.0 - x).powf(alpha) * (1.0 + x).powf(beta);
                let wd: DistFn = Arc::new(move |_, da: f64, db: f64| db.powf(alpha) * da.powf(beta));
                numeric_cdf(MeasureDescriptor::from_density(support, Arc::new(w)).with_density_dist(wd))
            }
            Family::StieltjesWigert { q } => {
                let kappa = (-1.0 / (2.0 * q.ln())).sqrt();
                let c = kappa / PI.sqrt();
                let shift = 1.0 / (2.0 * kappa * kappa);
                let total = (1.0 / (4.0 * kappa * kappa)).exp();
                MeasureDescriptor::from_density(
                    support,
                    Arc::new(move |u: f64| {
                        if u <= 0.0 {
                            0.0
                        } else {
                            let l = u.ln();
                            c * (-kappa * kappa * l * l).exp()
                        }
                    }),
                )
                .with_cdf(
                    Arc::new(move |u: f64| {
                        if u <= 0.0 {
                            0.0
                        } else {
                            total * 0.5 * erfc(-kappa * (u.ln() - shift))
                        }
                    }),
                    Arc::new(move |u: f64| {
                        if u <= 0.0 {
                            total
                        } else {
                            total * 0.5 * erfc(kappa * (u.ln() - shift))
                        }
                    }),
                )
            }
            Family::CarlitzC { .. } | Family::CarlitzD { .. } => {
                let atoms = carlitz_atoms(&fam).unwrap_or_default();
                MeasureDescriptor::point_masses(atoms)
            }
        };
        let mut md = md.with_moments(moments);
        md.family = Some(fam);
        md
    }
}

fn numeric_cdf(md: MeasureDescriptor) -> MeasureDescriptor {
    let (a, b) = md.support;
    let (m1, m2) = (md.clone(), md.clone());
    md.with_cdf(
        Arc::new(move |x: f64| m1.integrate_density(|_| 1.0, a, x, 1e-14).map(|r| r.value).unwrap_or(f64::NAN)),
        Arc::new(move |x: f64| m2.integrate_density(|_| 1.0, x, b, 1e-14).map(|r| r.value).unwrap_or(f64::NAN)),
    )
}

/// `C(2j, j) / 4^j` as a running product.
fn central_binomial_over_4j(j: usize) -> f64 {
    (1..=j).fold(1.0, |acc, i| acc * (2 * i - 1) as f64 / (2 * i) as f64)
}

fn jacobi_mass(alpha: f64, beta: f64) -> f64 {
    ((alpha + beta + 1.0) * core::f64::consts::LN_2 + ln_gamma(alpha + 1.0) + ln_gamma(beta + 1.0)
        - ln_gamma(alpha + beta + 2.0))
    .exp()
}

/// Moments of the Jacobi weight from the integration-by-parts recurrence
/// `(k + alpha + beta + 2) mu_(k+1) = k mu_(k-1) + (beta - alpha) mu_k`.
fn jacobi_moment(alpha: f64, beta: f64, k: usize) -> f64 {
    let (mut prev, mut cur) = (0.0, jacobi_mass(alpha, beta));
    for j in 0..k {
        let jf = j as f64;
        let next = (jf * prev + (beta - alpha) * cur) / (jf + alpha + beta + 2.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Atoms `(position, mass)` of the discrete measures behind the Carlitz
/// recurrences, read off the Fourier series of `cn` and `dn`.
pub fn carlitz_atoms(f: &Family) -> Result<Vec<(f64, f64)>> {
    let (k, is_c) = match *f {
        Family::CarlitzC { k } => (k, true),
        Family::CarlitzD { k } => (k, false),
        _ => return Err(invalid("not a Carlitz family")),
    };
    let ctx = crate::elliptic::EllipticContext::new(k)?;
    let (big_k, q) = (ctx.big_k, ctx.nome);
    let mut atoms = Vec::new();
    if is_c {
        for n in 1.. {
            let e = 2.0 * n as f64 - 1.0;
            let m = PI / (k * big_k) * q.powf(e / 2.0) / (1.0 + q.powf(e));
            if m < 1e-19 {
                break;
            }
            let x = e * PI / (2.0 * big_k);
            atoms.push((-x, m));
            atoms.push((x, m));
        }
    } else {
        atoms.push((0.0, PI / (2.0 * big_k)));
        for n in 1.. {
            let m = PI / big_k * q.powi(n) / (1.0 + q.powi(2 * n));
            if m < 1e-19 {
                break;
            }
            let x = n as f64 * PI / big_k;
            atoms.push((-x, m));
            atoms.push((x, m));
        }
    }
    atoms.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(atoms)
}

/// A positive measure on an interval: density, atoms, or both, plus
/// optional distribution function, survival function and moment oracle.
#[derive(Clone)]
pub struct MeasureDescriptor {
    /// Closure of the support; ends may be infinite.
    pub support: (f64, f64),
    /// Density of the absolutely continuous part.
    pub density: Option<RealFn>,
    /// The same density as `(x, x - a, b - x)` for a finite support
    /// `[a, b]`, accurate near singular ends.
    pub density_dist: Option<DistFn>,
    /// Point masses `(position, mass)`, sorted by position.
    pub atoms: Vec<(f64, f64)>,
    /// `x -> mu(-inf, x]`.
    pub cdf: Option<RealFn>,
    /// `x -> mu(x, inf)`, for accuracy in the upper tail.
    pub survival: Option<RealFn>,
    /// `k -> mu_k`.
    pub moment_oracle: Option<MomentFn>,
    /// Set when the measure comes from a named family.
    pub family: Option<Family>,
}

impl fmt::Debug for MeasureDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MeasureDescriptor")
            .field("support", &self.support)
            .field("density", &self.density.is_some())
            .field("atoms", &self.atoms.len())
            .field("cdf", &self.cdf.is_some())
            .field("moment_oracle", &self.moment_oracle.is_some())
            .field("family", &self.family)
            .finish()
    }
}

impl MeasureDescriptor {
    /// Absolutely continuous measure.
    pub fn from_density(support: (f64, f64), density: RealFn) -> Self {
        MeasureDescriptor {
            support,
            density: Some(density),
            density_dist: None,
            atoms: Vec::new(),
            cdf: None,
            survival: None,
            moment_oracle: None,
            family: None,
        }
    }

    /// Lebesgue measure on a finite interval, with closed-form moments.
    pub fn lebesgue(a: f64, b: f64) -> Self {
        Self::from_density((a, b), Arc::new(|_| 1.0))
            .with_cdf(
                Arc::new(move |x: f64| x.clamp(a, b) - a),
                Arc::new(move |x: f64| b - x.clamp(a, b)),
            )
            .with_moments(Arc::new(move |k| {
                let k1 = k as i32 + 1;
                (b.powi(k1) - a.powi(k1)) / k1 as f64
            }))
    }

    /// Finite discrete measure.
    pub fn point_masses(mut atoms: Vec<(f64, f64)>) -> Self {
        atoms.sort_by(|a, b| a.0.total_cmp(&b.0));
        let lo = atoms.first().map_or(0.0, |a| a.0);
        let hi = atoms.last().map_or(0.0, |a| a.0);
        let at = Arc::new(atoms.clone());
        let at2 = at.clone();
        let at3 = at.clone();
        MeasureDescriptor {
            support: (lo, hi),
            density: None,
            density_dist: None,
            atoms,
            cdf: Some(Arc::new(move |x: f64| at.iter().filter(|a| a.0 <= x).map(|a| a.1).sum())),
            survival: Some(Arc::new(move |x: f64| at2.iter().filter(|a| a.0 > x).map(|a| a.1).sum())),
            moment_oracle: Some(Arc::new(move |k| {
                crate::math::sum2(at3.iter().map(|&(x, w)| w * x.powi(k as i32)))
            })),
            family: None,
        }
    }

    pub fn with_cdf(mut self, cdf: RealFn, survival: RealFn) -> Self {
        self.cdf = Some(cdf);
        self.survival = Some(survival);
        self
    }

    pub fn with_density_dist(mut self, d: DistFn) -> Self {
        self.density_dist = Some(d);
        self
    }

    /// `integral_lo^hi g dmu_ac` over the absolutely continuous part,
    /// using the distance form of the density when available.
    pub fn integrate_density<G: Fn(f64) -> f64>(&self, g: G, lo: f64, hi: f64, tol: f64) -> Result<crate::integrate::Integral> {
        let (a, b) = self.support;
        let (lo, hi) = (lo.max(a), hi.min(b));
        if !(lo < hi) {
            return Ok(crate::integrate::Integral { value: 0.0, error: 0.0 });
        }
        match (&self.density_dist, &self.density) {
            (Some(wd), _) if a.is_finite() && b.is_finite() => {
                let (ea, eb) = (lo - a, b - hi);
                crate::integrate::integrate_dist(|x, dl, dh| g(x) * wd(x, ea + dl, eb + dh), lo, hi, tol)
            }
            (_, Some(w)) => crate::integrate::integrate(|x| g(x) * w(x), lo, hi, tol),
            _ => Ok(crate::integrate::Integral { value: 0.0, error: 0.0 }),
        }
    }

    pub fn with_moments(mut self, moments: MomentFn) -> Self {
        self.moment_oracle = Some(moments);
        self
    }

    /// Moment `mu_k` from the oracle, if any.
    pub fn moment(&self, k: usize) -> Option<f64> {
        self.moment_oracle.as_ref().map(|m| m(k)).filter(|v| v.is_finite())
    }

    /// Total mass from the moment oracle, the atoms, or the density.
    pub fn mass(&self) -> Result<f64> {
        if let Some(m0) = self.moment(0) {
            return Ok(m0);
        }
        let atom_mass: f64 = self.atoms.iter().map(|a| a.1).sum();
        match &self.density {
            Some(_) => {
                let r = self.integrate_density(|_| 1.0, self.support.0, self.support.1, 1e-13)?;
                Ok(atom_mass + r.value)
            }
            None => Ok(atom_mass),
        }
    }

    /// Spot-check that the density is nonnegative on an interior grid and
    /// that atom masses are positive.
    pub fn check(&self, grid: usize) -> Result<()> {
        for (i, a) in self.atoms.iter().enumerate() {
            if !(a.1 > 0.0) {
                return Err(Error::NonPositive { what: "atom mass", index: i, value: a.1 });
            }
        }
        if let Some(w) = &self.density {
            let (lo, hi) = self.support;
            for i in 1..grid {
                let t = i as f64 / grid as f64;
                let x = match (lo.is_finite(), hi.is_finite()) {
                    (true, true) => lo + (hi - lo) * t,
                    (true, false) => lo + t / (1.0 - t),
                    (false, true) => hi - (1.0 - t) / t,
                    (false, false) => (t - 0.5) / (t * (1.0 - t)),
                };
                let v = w(x);
                if v < 0.0 || v.is_nan() {
                    return Err(Error::NonPositive { what: "density sample", index: i, value: v });
                }
            }
        }
        Ok(())
    }
}

/// Orthonormal recurrence coefficients `a_1..a_N`, `b_0..b_(N-1)` and mass.
#[derive(Debug, Clone, PartialEq)]
pub struct RecurrenceCoeffs {
    a: Vec<f64>,
    b: Vec<f64>,
    mass: f64,
    family: Option<Family>,
}

impl RecurrenceCoeffs {
    /// `a = (a_1..a_N)`, `b = (b_0..b_(N-1))`.
    pub fn new(a: Vec<f64>, b: Vec<f64>, mass: f64) -> Result<Self> {
        if b.is_empty() {
            return Err(invalid("need at least one level"));
        }
        if a.len() != b.len() {
            return Err(invalid("a and b must have the same length"));
        }
        if !(mass > 0.0 && mass.is_finite()) {
            return Err(Error::NonPositive { what: "mass", index: 0, value: mass });
        }
        if let Some(i) = a.iter().position(|&v| !(v > 0.0 && v.is_finite())) {
            return Err(Error::NonPositive { what: "recurrence a_k", index: i + 1, value: a[i] });
        }
        if b.iter().any(|v| !v.is_finite()) {
            return Err(invalid("non-finite recurrence b_k"));
        }
        Ok(RecurrenceCoeffs { a, b, mass, family: None })
    }

    /// `a_1..a_N`.
    pub fn a(&self) -> &[f64] {
        &self.a
    }

    /// `b_0..b_(N-1)`.
    pub fn b(&self) -> &[f64] {
        &self.b
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn family(&self) -> Option<Family> {
        self.family
    }

    /// Number of levels `N`.
    pub fn levels(&self) -> usize {
        self.b.len()
    }

    /// Monic form: `alpha_k = b_k`, `beta_0 = mass`, `beta_k = a_k^2`.
    pub fn to_monic(&self) -> (Vec<f64>, Vec<f64>) {
        let mut beta = Vec::with_capacity(self.a.len() + 1);
        beta.push(self.mass);
        beta.extend(self.a.iter().map(|a| a * a));
        (self.b.clone(), beta)
    }

    /// Inverse of [`RecurrenceCoeffs::to_monic`]; `beta` has one more entry
    /// than `alpha`.
    pub fn from_monic(alpha: &[f64], beta: &[f64]) -> Result<Self> {
        if beta.len() != alpha.len() + 1 {
            return Err(invalid("beta must have len(alpha) + 1 entries"));
        }
        if let Some(i) = beta.iter().position(|&v| !(v > 0.0)) {
            return Err(Error::NonPositive { what: "monic beta_k", index: i, value: beta[i] });
        }
        Self::new(beta[1..].iter().map(|v| v.sqrt()).collect(), alpha.to_vec(), beta[0])
    }

    /// Keep the first `n` levels.
    pub fn truncate(&self, n: usize) -> Result<Self> {
        if n == 0 || n > self.levels() {
            return Err(Error::OutOfRange { what: "recurrence levels", requested: n, available: self.levels() });
        }
        Ok(RecurrenceCoeffs {
            a: self.a[..n].to_vec(),
            b: self.b[..n].to_vec(),
            mass: self.mass,
            family: self.family,
        })
    }
}

/// Orthonormal coefficients for `n` levels of a named family.
pub fn family_coeffs(f: Family, n: usize) -> Result<RecurrenceCoeffs> {
    f.validate()?;
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    match f {
        Family::Legendre => {
            for k in 1..=n {
                let k = k as f64;
                a.push(k / (4.0 * k * k - 1.0).sqrt());
            }
            b.resize(n, 0.0);
        }
        Family::ChebyshevT => {
            a.push(core::f64::consts::FRAC_1_SQRT_2);
            a.resize(n, 0.5);
            b.resize(n, 0.0);
        }
        Family::ChebyshevU => {
            a.resize(n, 0.5);
            b.resize(n, 0.0);
        }
        Family::Hermite => {
            for k in 1..=n {
                a.push((k as f64 / 2.0).sqrt());
            }
            b.resize(n, 0.0);
        }
        Family::Laguerre { alpha } => {
            for k in 0..n {
                let kf = k as f64;
                b.push(2.0 * kf + alpha + 1.0);
                let k1 = kf + 1.0;
                a.push((k1 * (k1 + alpha)).sqrt());
            }
        }
        Family::Jacobi { alpha, beta } => {
            let s = alpha + beta;
            for k in 0..n {
                let kf = k as f64;
                if k == 0 {
                    b.push((beta - alpha) / (s + 2.0));
                } else {
                    b.push((beta * beta - alpha * alpha) / ((2.0 * kf + s) * (2.0 * kf + s + 2.0)));
                }
                let m = kf + 1.0;
                let t = 2.0 * m + s;
                let a2 = if m == 1.0 {
                    4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + s) * (2.0 + s) * (3.0 + s))
                } else {
                    4.0 * m * (m + alpha) * (m + beta) * (m + s) / (t * t * (t + 1.0) * (t - 1.0))
                };
                a.push(a2.sqrt());
            }
        }
        Family::StieltjesWigert { q } => {
            let j = contract(&stieltjes_wigert_sfraction(q, 2 * n + 1)?)?;
            // the J-fraction represents the measure reflected to (-inf, 0]
            b.extend(j.b().iter().map(|v| -v));
            a.extend(j.a_sq()[1..].iter().map(|v| v.sqrt()));
            let mut rc = RecurrenceCoeffs::new(a, b, j.a_sq()[0])?;
            rc.family = Some(f);
            return Ok(rc);
        }
        Family::CarlitzC { .. } | Family::CarlitzD { .. } => {
            for k in 1..=n {
                a.push(carlitz_numerator(&f, k).sqrt());
            }
            b.resize(n, 0.0);
        }
    }
    let mut rc = RecurrenceCoeffs::new(a, b, f.mass())?;
    rc.family = Some(f);
    Ok(rc)
}

/// `alpha_n` or `beta_n` of the Carlitz recurrences, `n >= 1`.
pub fn carlitz_numerator(f: &Family, n: usize) -> f64 {
    let (k, even_gets_k) = match *f {
        Family::CarlitzC { k } => (k, true),
        Family::CarlitzD { k } => (k, false),
        _ => return f64::NAN,
    };
    let nf = n as f64;
    let kk = if (n % 2 == 0) == even_gets_k { k * k } else { 1.0 };
    nf * nf * kk
}

/// `p_0(z)..p_n(z)`.
pub fn eval_orthonormal(rc: &RecurrenceCoeffs, z: Complex64, n: usize) -> Result<Vec<Complex64>> {
    if n > rc.levels() {
        return Err(Error::OutOfRange { what: "polynomial degree", requested: n, available: rc.levels() });
    }
    let mut p = Vec::with_capacity(n + 1);
    p.push(Complex64::new(1.0 / rc.mass.sqrt(), 0.0));
    let mut prev = Complex64::new(0.0, 0.0);
    for k in 0..n {
        let back = if k == 0 { Complex64::new(0.0, 0.0) } else { prev * rc.a[k - 1] };
        let next = ((z - rc.b[k]) * p[k] - back) / rc.a[k];
        prev = p[k];
        p.push(next);
    }
    Ok(p)
}

/// Real-argument version of [`eval_orthonormal`].
pub fn eval_orthonormal_real(rc: &RecurrenceCoeffs, x: f64, n: usize) -> Result<Vec<f64>> {
    if n > rc.levels() {
        return Err(Error::OutOfRange { what: "polynomial degree", requested: n, available: rc.levels() });
    }
    let mut p = Vec::with_capacity(n + 1);
    p.push(1.0 / rc.mass.sqrt());
    for k in 0..n {
        let back = if k == 0 { 0.0 } else { p[k - 1] * rc.a[k - 1] };
        p.push(((x - rc.b[k]) * p[k] - back) / rc.a[k]);
    }
    Ok(p)
}

/// Symmetric tridiagonal matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiagonal {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl SymTridiagonal {
    /// Dense row-major copy.
    pub fn to_dense(&self) -> Vec<f64> {
        let n = self.diag.len();
        let mut m = vec![0.0; n * n];
        for i in 0..n {
            m[i * n + i] = self.diag[i];
            if i + 1 < n {
                m[i * n + i + 1] = self.off[i];
                m[(i + 1) * n + i] = self.off[i];
            }
        }
        m
    }
}

/// Jacobi matrix of order `n`.
pub fn jacobi_matrix(rc: &RecurrenceCoeffs, n: usize) -> Result<SymTridiagonal> {
    if n == 0 || n > rc.levels() {
        return Err(Error::OutOfRange { what: "Jacobi matrix order", requested: n, available: rc.levels() });
    }
    Ok(SymTridiagonal { diag: rc.b[..n].to_vec(), off: rc.a[..n - 1].to_vec() })
}

/// Zeros of `p_n`, ascending.
pub fn zeros(rc: &RecurrenceCoeffs, n: usize) -> Result<Vec<f64>> {
    let j = jacobi_matrix(rc, n)?;
    let eig = symmetric_tridiagonal_eigen(&j.diag, &j.off)?;
    check_separation(&eig.values)?;
    Ok(eig.values)
}

pub(crate) fn check_separation(x: &[f64]) -> Result<()> {
    for i in 1..x.len() {
        let gap = x[i] - x[i - 1];
        let scale = x[i].abs().max(x[i - 1].abs()).max(f64::MIN_POSITIVE);
        if !(gap > 1e-12 * scale) {
            return Err(Error::CrossCheck { what: "zero separation", index: i, discrepancy: gap / scale });
        }
    }
    Ok(())
}

/// Recurrence coefficients from `mu_0..mu_2N` through the Cholesky factor
/// `H = R^T R` of the Hankel matrix, accumulated with compensated dot
/// products.
pub fn moments_to_coeffs(moments: &[f64]) -> Result<RecurrenceCoeffs> {
    moments_to_coeffs_with(moments, Precision::Compensated)
}

/// [`moments_to_coeffs`] with explicit accumulation precision.
pub fn moments_to_coeffs_with(moments: &[f64], precision: Precision) -> Result<RecurrenceCoeffs> {
    if moments.len() < 3 {
        return Err(Error::OutOfRange { what: "moment count (need 2N+1 >= 3)", requested: 3, available: moments.len() });
    }
    let n = (moments.len() - 1) / 2;
    let f = hankel_factor(moments, false, n + 1, precision);
    if let Some(fail) = f.failure {
        return Err(Error::NotPositiveDefinite {
            level: fail.level,
            pivot: fail.pivot,
            ill_conditioned: fail.ill_conditioned,
        });
    }
    let r = |i: usize, j: usize| f.r[i * (n + 1) + j];
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    for k in 0..n {
        let mut bk = r(k, k + 1) / r(k, k);
        if k > 0 {
            bk -= r(k - 1, k) / r(k - 1, k - 1);
        }
        b.push(bk);
        a.push(r(k + 1, k + 1) / r(k, k));
    }
    RecurrenceCoeffs::new(a, b, moments[0])
}

/// Stieltjes–Wigert polynomial
/// `sum_j (q^-n; q)_j / (q; q)_j q^(j^2/2) (q^(n+1) x)^j`.
pub fn sw_polynomial(q: f64, n: usize, x: f64) -> f64 {
    let y = q.powi(n as i32 + 1) * x;
    let qn = q.powi(-(n as i32));
    (0..=n)
        .map(|j| {
            q_pochhammer(qn, q, j) / q_pochhammer(q, q, j)
                * q.powf((j * j) as f64 / 2.0)
                * y.powi(j as i32)
        })
        .sum()
}

//! Moment sequences: Hankel solvability tests, Hausdorff and Carleman
//! diagnostics, Stieltjes transforms, Padé moment matching and the
//! Stieltjes–Wigert moment identity.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::contfrac::{trend_report, TrendReport};
use crate::error::invalid;
use crate::math::dot2;
use crate::orthopoly::{eval_orthonormal_real, family_coeffs, Family, MeasureDescriptor, RecurrenceCoeffs};
use crate::{Error, Result};

/// Which moment problem a sequence belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MomentKind {
    /// Support in `[0, inf)`.
    Stieltjes,
    /// Support in the real line.
    Hamburger,
    /// Support in a bounded interval.
    Hausdorff,
}

/// Finite prefix `mu_0..mu_N`.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentSequence {
    values: Vec<f64>,
    kind: MomentKind,
    interval: Option<(f64, f64)>,
}

impl MomentSequence {
    /// Requires `mu_0 > 0`. Hausdorff sequences default to `[0, 1]`.
    pub fn new(values: Vec<f64>, kind: MomentKind) -> Result<Self> {
        let interval = if kind == MomentKind::Hausdorff { Some((0.0, 1.0)) } else { None };
        Self::with_interval(values, kind, interval)
    }

    /// Hausdorff sequence on `[a, b]`.
    pub fn hausdorff(values: Vec<f64>, interval: (f64, f64)) -> Result<Self> {
        Self::with_interval(values, MomentKind::Hausdorff, Some(interval))
    }

    fn with_interval(values: Vec<f64>, kind: MomentKind, interval: Option<(f64, f64)>) -> Result<Self> {
        match values.first() {
            Some(&m0) if m0 > 0.0 => {}
            Some(&m0) => return Err(Error::NonPositive { what: "mu_0", index: 0, value: m0 }),
            None => return Err(invalid("empty moment sequence")),
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(invalid("non-finite moment"));
        }
        if let Some((a, b)) = interval {
            if !(a < b && a.is_finite() && b.is_finite()) {
                return Err(invalid("Hausdorff interval must be finite with a < b"));
            }
        }
        Ok(MomentSequence { values, kind, interval })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn kind(&self) -> MomentKind {
        self.kind
    }

    pub fn interval(&self) -> Option<(f64, f64)> {
        self.interval
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Accumulation used in the Hankel factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Precision {
    /// Plain floating-point dot products.
    Double,
    /// Error-free transformations, roughly doubling the working precision.
    #[default]
    Compensated,
}

/// Relative pivot tolerance.
pub const PIVOT_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct PivotFailure {
    pub level: usize,
    pub pivot: f64,
    pub ill_conditioned: bool,
}

pub(crate) struct HankelFactor {
    /// Upper factor, row-major `size x size`.
    pub r: Vec<f64>,
    pub pivots: Vec<f64>,
    pub failure: Option<PivotFailure>,
}

/// Cholesky factorization of `[mu_(i+j+s)]`, `s = 1` when `shifted`,
/// stopping at the first pivot not above `PIVOT_TOL` times the row scale.
pub(crate) fn hankel_factor(mu: &[f64], shifted: bool, size: usize, precision: Precision) -> HankelFactor {
    let s = usize::from(shifted);
    let h = |i: usize, j: usize| mu[i + j + s];
    let mut r = vec![0.0; size * size];
    let mut pivots = Vec::with_capacity(size);
    let mut xs = Vec::with_capacity(size + 1);
    let mut ys = Vec::with_capacity(size + 1);
    let mut dot = |hij: f64, r: &[f64], i: usize, j: usize| -> f64 {
        xs.clear();
        ys.clear();
        xs.push(hij);
        ys.push(1.0);
        for k in 0..i {
            xs.push(r[k * size + i]);
            ys.push(-r[k * size + j]);
        }
        match precision {
            Precision::Compensated => dot2(&xs, &ys),
            Precision::Double => xs.iter().zip(ys.iter()).map(|(a, b)| a * b).sum(),
        }
    };
    for i in 0..size {
        let scale = (0..size).map(|j| h(i, j).abs()).fold(0.0, f64::max);
        let pivot = dot(h(i, i), &r, i, i);
        pivots.push(pivot);
        if !(pivot > PIVOT_TOL * scale) {
            let ill = pivot != 0.0 && pivot.abs() <= PIVOT_TOL * scale;
            return HankelFactor {
                r,
                pivots,
                failure: Some(PivotFailure { level: i + 1, pivot, ill_conditioned: ill }),
            };
        }
        let rii = pivot.sqrt();
        r[i * size + i] = rii;
        for j in i + 1..size {
            r[i * size + j] = dot(h(i, j), &r, i, j) / rii;
        }
    }
    HankelFactor { r, pivots, failure: None }
}

/// Outcome of a positive-definiteness test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    PositiveDefinite,
    /// First failing leading block, 1-based size.
    FailedAt(usize),
}

/// Pivot record of one Hankel matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SolvabilityReport {
    /// Number of pivots that passed.
    pub level_reached: usize,
    /// Squared diagonal of the Cholesky factor (ratios of leading minors).
    pub pivots: Vec<f64>,
    pub verdict: Verdict,
    /// Whether this is the shifted matrix `[mu_(i+j+1)]`.
    pub shifted: bool,
    /// The failing pivot was within tolerance of zero rather than clearly
    /// negative.
    pub ill_conditioned: bool,
}

/// Unshifted report, plus the shifted one for Stieltjes sequences.
#[derive(Debug, Clone, PartialEq)]
pub struct Solvability {
    pub unshifted: SolvabilityReport,
    pub shifted: Option<SolvabilityReport>,
}

impl Solvability {
    /// Every report present is positive definite.
    pub fn passes(&self) -> bool {
        self.unshifted.verdict == Verdict::PositiveDefinite
            && self.shifted.as_ref().is_none_or(|s| s.verdict == Verdict::PositiveDefinite)
    }
}

fn report(mu: &[f64], shifted: bool, size: usize, precision: Precision) -> SolvabilityReport {
    let f = hankel_factor(mu, shifted, size, precision);
    let (verdict, ill) = match f.failure {
        Some(p) => (Verdict::FailedAt(p.level), p.ill_conditioned),
        None => (Verdict::PositiveDefinite, false),
    };
    SolvabilityReport {
        level_reached: f.pivots.len() - usize::from(f.failure.is_some()),
        pivots: f.pivots,
        verdict,
        shifted,
        ill_conditioned: ill,
    }
}

/// Positive definiteness of the Hankel matrices built from the sequence,
/// decided by Cholesky pivots. Stieltjes sequences also test the shifted
/// matrix.
pub fn hankel_solvability(m: &MomentSequence) -> Result<Solvability> {
    hankel_solvability_with(m, Precision::Compensated)
}

/// [`hankel_solvability`] with explicit accumulation precision.
pub fn hankel_solvability_with(m: &MomentSequence, precision: Precision) -> Result<Solvability> {
    let mu = m.values();
    let unshifted = report(mu, false, (mu.len() - 1) / 2 + 1, precision);
    let shifted = if m.kind() == MomentKind::Stieltjes {
        if mu.len() < 2 {
            return Err(Error::OutOfRange { what: "moments for the shifted test", requested: 2, available: mu.len() });
        }
        Some(report(mu, true, (mu.len() - 2) / 2 + 1, precision))
    } else {
        None
    };
    Ok(Solvability { unshifted, shifted })
}

/// Minimum of `(-1)^k Delta^k mu_n` over the displayed table.
#[derive(Debug, Clone, PartialEq)]
pub struct HausdorffReport {
    pub min_value: f64,
    /// `(k, n)` of the minimum.
    pub min_at: (usize, usize),
    /// First `(k, n)`, in order of `k` then `n`, below `-1e-12`.
    pub violation: Option<(usize, usize)>,
    pub consistent: bool,
}

/// Complete-monotonicity table up to order `depth`. Sequences on `[a, b]`
/// are first mapped to `[0, 1]`.
pub fn hausdorff_monotonicity(m: &MomentSequence, depth: usize) -> Result<HausdorffReport> {
    if m.kind() != MomentKind::Hausdorff {
        return Err(invalid("complete monotonicity needs a Hausdorff sequence"));
    }
    if depth >= m.len() {
        return Err(Error::OutOfRange { what: "difference depth", requested: depth, available: m.len() - 1 });
    }
    let (a, b) = m.interval().unwrap_or((0.0, 1.0));
    let mu = m.values();
    let nu: Vec<f64> = if (a, b) == (0.0, 1.0) {
        mu.to_vec()
    } else {
        // moments of (x - a) / (b - a)
        (0..mu.len())
            .map(|k| {
                let terms = (0..=k).map(|j| {
                    crate::math::binomial(k as u64, j as u64) * mu[j] * (-a).powi((k - j) as i32)
                });
                crate::math::sum2(terms) / (b - a).powi(k as i32)
            })
            .collect()
    };
    let mut row = nu.clone();
    let mut min_value = f64::INFINITY;
    let mut min_at = (0, 0);
    let mut violation = None;
    for k in 0..=depth {
        for (n, &v) in row.iter().enumerate() {
            if v < min_value {
                min_value = v;
                min_at = (k, n);
            }
            if violation.is_none() && v < -1e-12 {
                violation = Some((k, n));
            }
        }
        // (-1)^(k+1) Delta^(k+1) mu_n = d_n - d_(n+1)
        row = row.windows(2).map(|w| w[0] - w[1]).collect();
    }
    Ok(HausdorffReport { min_value, min_at, violation, consistent: violation.is_none() })
}

/// Partial sums of `mu_(2k)^(-1/(2k))`, `k = 1..horizon`. Divergence is
/// sufficient for determinacy; the trend label is advisory.
pub fn carleman_diagnostic(m: &MomentSequence, horizon: usize) -> Result<TrendReport> {
    let mu = m.values();
    if horizon == 0 || 2 * horizon >= mu.len() {
        return Err(Error::OutOfRange { what: "Carleman horizon", requested: horizon, available: (mu.len() - 1) / 2 });
    }
    let mut terms = Vec::with_capacity(horizon);
    for k in 1..=horizon {
        let v = mu[2 * k];
        if !(v > 0.0) {
            return Err(Error::NonPositive { what: "even moment", index: 2 * k, value: v });
        }
        terms.push(v.powf(-1.0 / (2.0 * k as f64)));
    }
    Ok(trend_report(terms))
}

/// Partial sums of `p_n(x)^2`; convergence at a non-real or off-support
/// point is tied to indeterminacy. Advisory only.
pub fn christoffel_sum_diagnostic(rc: &RecurrenceCoeffs, x: f64, horizon: usize) -> Result<TrendReport> {
    let p = eval_orthonormal_real(rc, x, horizon)?;
    Ok(trend_report(p.iter().map(|v| v * v)))
}

/// Value of a Stieltjes transform with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformValue {
    pub value: Complex64,
    pub error: f64,
}

/// Default Gauss rule size for family measures.
pub const TRANSFORM_RULE_SIZE: usize = 64;

/// `S(mu; z) = integral of dmu(t) / (z + t)`.
pub fn stieltjes_transform(md: &MeasureDescriptor, z: Complex64) -> Result<TransformValue> {
    stieltjes_transform_with(md, z, TRANSFORM_RULE_SIZE)
}

/// [`stieltjes_transform`] with an explicit Gauss rule size; the error
/// estimate is the difference to a rule of twice the size.
pub fn stieltjes_transform_with(md: &MeasureDescriptor, z: Complex64, rule_size: usize) -> Result<TransformValue> {
    let (lo, hi) = md.support;
    if z.im == 0.0 && -z.re >= lo && -z.re <= hi {
        return Err(Error::Singularity { what: "Stieltjes transform", at: z.re });
    }
    let atoms: Complex64 = md.atoms.iter().map(|&(t, w)| w / (z + t)).sum();
    let Some(density) = md.density.clone() else {
        return Ok(TransformValue { value: atoms, error: 0.0 });
    };
    if let Some(f) = md.family {
        let rc = family_coeffs(f, 2 * rule_size)?;
        let eval = |n: usize| -> Result<Complex64> {
            let rule = crate::quadrature::gauss_rule(&rc, n)?;
            Ok(rule.nodes.iter().zip(&rule.weights).map(|(&t, &w)| w / (z + t)).sum())
        };
        let v1 = eval(rule_size)?;
        let v2 = eval(2 * rule_size)?;
        return Ok(TransformValue { value: v2 + atoms, error: (v2 - v1).norm() });
    }
    let integrate = |a: f64, b: f64| -> Result<Complex64> {
        let re = md.integrate_density(|t| (z.re + t) / (z + t).norm_sqr(), a, b, 1e-14)?;
        let im = md.integrate_density(|t| -z.im / (z + t).norm_sqr(), a, b, 1e-14)?;
        Ok(Complex64::new(re.value, im.value))
    };
    if lo.is_finite() && hi.is_finite() {
        let v = integrate(lo, hi)?;
        return Ok(TransformValue { value: v + atoms, error: 1e-14 * v.norm() });
    }
    let peak = sample_peak(&*density, lo, hi);
    let (a, b) = (truncate_end(&*density, lo, peak, -1.0), truncate_end(&*density, hi, peak, 1.0));
    let v1 = integrate(a, b)?;
    let (a2, b2) = (if lo.is_finite() { a } else { 2.0 * a }, if hi.is_finite() { b } else { 2.0 * b });
    let v2 = integrate(a2, b2)?;
    Ok(TransformValue { value: v2 + atoms, error: (v2 - v1).norm() })
}

fn sample_peak(w: &dyn Fn(f64) -> f64, lo: f64, hi: f64) -> f64 {
    let mut peak: f64 = 0.0;
    for j in -20..=20 {
        let t = 2f64.powi(j);
        for x in [t, -t, 0.0] {
            if x > lo && x < hi {
                peak = peak.max(w(x));
            }
        }
    }
    peak
}

/// Finite end for an infinite support end: doubled until the density
/// drops below `1e-16` of the peak.
fn truncate_end(w: &dyn Fn(f64) -> f64, end: f64, peak: f64, dir: f64) -> f64 {
    if end.is_finite() {
        return end;
    }
    let mut t = 1.0;
    while t < 1e18 && w(dir * t) >= 1e-16 * peak {
        t *= 2.0;
    }
    dir * t
}

/// Coefficients `m_0..m_(count-1)` of the expansion in powers of `1/x` of
/// the `n`-th convergent of the J-fraction for `S(mu; x)`.
pub fn pade_series(rc: &RecurrenceCoeffs, n: usize, count: usize) -> Result<Vec<f64>> {
    if n == 0 {
        return Ok(vec![0.0; count]);
    }
    if n > rc.levels() {
        return Err(Error::OutOfRange { what: "convergent order", requested: n, available: rc.levels() });
    }
    // numerator and denominator polynomials, ascending coefficients;
    // partial denominators x + b_(k-1), numerators mass, -a_1^2, ...
    let (mut a_prev, mut a_cur) = (vec![1.0], vec![0.0]);
    let (mut b_prev, mut b_cur) = (vec![0.0], vec![1.0]);
    for k in 1..=n {
        let e = if k == 1 { rc.mass() } else { -rc.a()[k - 2] * rc.a()[k - 2] };
        let shift = rc.b()[k - 1];
        let step = |cur: &[f64], prev: &[f64]| -> Vec<f64> {
            let mut out = vec![0.0; cur.len().max(prev.len()) + 1];
            for (i, &c) in cur.iter().enumerate() {
                out[i + 1] += c;
                out[i] += shift * c;
            }
            for (i, &p) in prev.iter().enumerate() {
                out[i] += e * p;
            }
            out
        };
        let a_next = step(&a_cur, &a_prev);
        let b_next = step(&b_cur, &b_prev);
        a_prev = core::mem::replace(&mut a_cur, a_next);
        b_prev = core::mem::replace(&mut b_cur, b_next);
    }
    // B has degree n (monic); A has degree n - 1
    let beta = |i: usize| b_cur.get(i).copied().unwrap_or(0.0);
    let alpha = |i: isize| if i < 0 { 0.0 } else { a_cur.get(i as usize).copied().unwrap_or(0.0) };
    let lead = beta(n);
    let mut out: Vec<f64> = Vec::with_capacity(count);
    for k in 0..count {
        let mut v = alpha(n as isize - 1 - k as isize);
        for i in 1..=k.min(n) {
            v -= beta(n - i) * out[k - i];
        }
        let v = v / lead;
        if !v.is_finite() {
            return Err(Error::Singular { what: "Pade long division", condition: f64::INFINITY });
        }
        out.push(v);
    }
    Ok(out)
}

/// Number of leading series coefficients of the `n`-th convergent that
/// equal `(-1)^k mu_k` within `1e-9` times the running moment scale.
pub fn pade_match_check(rc: &RecurrenceCoeffs, m: &MomentSequence, n: usize) -> Result<usize> {
    if n == 0 {
        return Ok(0);
    }
    let mu = m.values();
    let series = pade_series(rc, n, mu.len())?;
    let mut scale: f64 = 0.0;
    let mut matched = 0;
    for (k, (&s, &v)) in series.iter().zip(mu).enumerate() {
        scale = scale.max(v.abs());
        let target = if k % 2 == 0 { v } else { -v };
        if (s - target).abs() <= 1e-9 * scale {
            matched += 1;
        } else {
            break;
        }
    }
    Ok(matched)
}

/// Numeric and closed-form values of the Stieltjes–Wigert moment identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SwIdentity {
    pub numeric: f64,
    pub closed_form: f64,
    pub relative_deviation: f64,
}

/// Gauss–Hermite nodes used for the identity.
pub const SW_RULE_SIZE: usize = 48;

/// `integral over (0, inf) of u^k u^(-ln u) (1 + lambda sin(2 pi ln u)) du`
/// against `sqrt(pi) exp((k+1)^2/4)`. After `u = e^t` and
/// `t = s + (k+1)/2` the integral is a Gauss–Hermite sum.
pub fn sw_moment_identity(lambda: f64, k: usize) -> Result<SwIdentity> {
    if !(-1.0..=1.0).contains(&lambda) {
        return Err(invalid("lambda must lie in [-1, 1]"));
    }
    let rc = family_coeffs(Family::Hermite, SW_RULE_SIZE)?;
    let rule = crate::quadrature::gauss_rule(&rc, SW_RULE_SIZE)?;
    let shift = (k as f64 + 1.0) / 2.0;
    let sum = crate::math::sum2(
        rule.nodes
            .iter()
            .zip(&rule.weights)
            .map(|(&s, &w)| w * (1.0 + lambda * (2.0 * PI * (s + shift)).sin())),
    );
    let numeric = (shift * shift).exp() * sum;
    let closed_form = PI.sqrt() * ((k as f64 + 1.0).powi(2) / 4.0).exp();
    Ok(SwIdentity {
        numeric,
        closed_form,
        relative_deviation: ((numeric - closed_form) / closed_form).abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contfrac::Trend;
    use crate::orthopoly::moments_to_coeffs;

    fn seq(v: &[f64], kind: MomentKind) -> MomentSequence {
        MomentSequence::new(v.to_vec(), kind).unwrap()
    }

    #[test]
    fn solvability_examples() {
        let r = hankel_solvability(&seq(&[1.0, 1.0, 2.0, 6.0, 24.0], MomentKind::Stieltjes)).unwrap();
        assert!(r.passes());
        // oracle: leading minors 1 and det[[1,1],[1,2]] = 1
        assert_eq!(r.unshifted.pivots[0], 1.0);
        assert_eq!(r.unshifted.pivots[1], 1.0);
        let sp = PI.sqrt();
        let herm = [sp, 0.0, sp / 2.0, 0.0, 3.0 * sp / 4.0];
        let r = hankel_solvability(&seq(&herm, MomentKind::Stieltjes)).unwrap();
        assert_eq!(r.unshifted.verdict, Verdict::PositiveDefinite);
        let sh = r.shifted.unwrap();
        assert_eq!(sh.verdict, Verdict::FailedAt(1));
        assert!(!sh.ill_conditioned);
        let r = hankel_solvability(&seq(&herm, MomentKind::Hamburger)).unwrap();
        assert!(r.passes() && r.shifted.is_none());
        let r = hankel_solvability(&seq(&[1.0, 0.0, -1.0], MomentKind::Hamburger)).unwrap();
        assert_eq!(r.unshifted.verdict, Verdict::FailedAt(2));
        assert_eq!(r.unshifted.level_reached, 1);
    }

    #[test]
    fn ambiguous_pivot_is_flagged() {
        let r = hankel_solvability(&seq(&[1.0, 1.0, 1.0 + 1e-13], MomentKind::Hamburger)).unwrap();
        assert_eq!(r.unshifted.verdict, Verdict::FailedAt(2));
        assert!(r.unshifted.ill_conditioned);
    }

    #[test]
    fn hausdorff_examples() {
        let lebesgue: Vec<f64> = (0..12).map(|n| 1.0 / (n as f64 + 1.0)).collect();
        let r = hausdorff_monotonicity(&MomentSequence::new(lebesgue, MomentKind::Hausdorff).unwrap(), 11).unwrap();
        assert!(r.consistent && r.min_value > 0.0);
        let pow2: Vec<f64> = (0..8).map(|n| 2f64.powi(n)).collect();
        let r = hausdorff_monotonicity(&MomentSequence::new(pow2, MomentKind::Hausdorff).unwrap(), 4).unwrap();
        assert_eq!(r.violation, Some((1, 0)));
        let point: Vec<f64> = (0..10).map(|n| 0.3f64.powi(n)).collect();
        let r = hausdorff_monotonicity(&MomentSequence::new(point, MomentKind::Hausdorff).unwrap(), 9).unwrap();
        assert!(r.consistent);
        let short = MomentSequence::new(vec![1.0, 0.5], MomentKind::Hausdorff).unwrap();
        assert!(hausdorff_monotonicity(&short, 2).is_err());
        // Lebesgue on [-1, 1] normalised to mass 2, mapped back to [0, 1]
        let sym: Vec<f64> = (0..8).map(|k| if k % 2 == 0 { 2.0 / (k as f64 + 1.0) } else { 0.0 }).collect();
        let r = hausdorff_monotonicity(&MomentSequence::hausdorff(sym, (-1.0, 1.0)).unwrap(), 7).unwrap();
        assert!(r.consistent);
    }

    #[test]
    fn carleman_examples() {
        let herm: Vec<f64> = (0..=200).map(|k| if k % 2 == 0 { crate::math::gamma(k as f64 / 2.0 + 0.5) } else { 0.0 }).collect();
        let r = carleman_diagnostic(&seq(&herm, MomentKind::Hamburger), 80).unwrap();
        assert_eq!(r.trend, Trend::Growing);
        let sw: Vec<f64> = (0..=20).map(|k| if k % 2 == 0 { ((k * k) as f64).exp() } else { 0.0 }).collect();
        let r = carleman_diagnostic(&seq(&sw, MomentKind::Hamburger), 10).unwrap();
        assert_eq!(r.trend, Trend::Leveling);
        let ones = vec![1.0; 101];
        let r = carleman_diagnostic(&seq(&ones, MomentKind::Hamburger), 50).unwrap();
        assert_eq!(r.trend, Trend::Growing);
        let bad = [1.0, 0.0, -1.0];
        assert!(carleman_diagnostic(&seq(&bad, MomentKind::Hamburger), 1).is_err());
    }

    #[test]
    fn christoffel_sum_grows_for_determinate_case() {
        let rc = family_coeffs(Family::Hermite, 200).unwrap();
        let r = christoffel_sum_diagnostic(&rc, 0.0, 200).unwrap();
        assert_eq!(r.trend, Trend::Growing);
    }

    #[test]
    fn transform_examples() {
        let md = MeasureDescriptor::point_masses(vec![(1.0, 1.0)]);
        let v = stieltjes_transform(&md, Complex64::new(1.0, 0.0)).unwrap();
        assert_eq!(v.value, Complex64::new(0.5, 0.0));
        let md = MeasureDescriptor::lebesgue(0.0, 1.0);
        let v = stieltjes_transform(&md, Complex64::new(1.0, 0.0)).unwrap();
        assert!((v.value.re - core::f64::consts::LN_2).abs() < 1e-14);
        assert!(stieltjes_transform(&md, Complex64::new(-0.5, 0.0)).is_err());
        // Q_0(2) = (1/2) ln 3 = -(1/2) S(mu; -2) for Lebesgue on [-1, 1]
        let md = MeasureDescriptor::lebesgue(-1.0, 1.0);
        let v = stieltjes_transform(&md, Complex64::new(-2.0, 0.0)).unwrap();
        assert!((-0.5 * v.value.re - 0.5 * 3f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn transform_paths_agree() {
        let z = Complex64::new(0.7, 0.4);
        // Laguerre: family Gauss path against the truncated density path
        let fam = Family::Laguerre { alpha: 0.0 }.measure();
        let mut plain = fam.clone();
        plain.family = None;
        let a = stieltjes_transform(&fam, z).unwrap();
        let b = stieltjes_transform(&plain, z).unwrap();
        assert!((a.value - b.value).norm() < 1e-10, "{:?} {:?}", a, b);
        // discrete measure against the exact sum
        let atoms = vec![(0.5, 0.25), (2.0, 1.5), (3.5, 0.125)];
        let exact: Complex64 = atoms.iter().map(|&(t, w)| w / (z + t)).sum();
        let v = stieltjes_transform(&MeasureDescriptor::point_masses(atoms), z).unwrap();
        assert!((v.value - exact).norm() < 1e-14);
    }

    #[test]
    fn pade_examples() {
        let leg: Vec<f64> = (0..8).map(|k| if k % 2 == 0 { 2.0 / (k as f64 + 1.0) } else { 0.0 }).collect();
        let m = seq(&leg, MomentKind::Hamburger);
        let rc = moments_to_coeffs(&leg[..7]).unwrap();
        assert!(pade_match_check(&rc, &m, 1).unwrap() >= 2);
        let fact: Vec<f64> = (0..9).map(|k| crate::math::gamma(k as f64 + 1.0)).collect();
        let m = seq(&fact, MomentKind::Stieltjes);
        let rc = moments_to_coeffs(&fact).unwrap();
        assert_eq!(pade_match_check(&rc, &m, 2).unwrap(), 4);
        assert_eq!(pade_match_check(&rc, &m, 0).unwrap(), 0);
        // oracle: 1/(x + 1) = 1/x - 1/x^2 + ... for the first convergent of k!
        let s = pade_series(&rc, 1, 4).unwrap();
        assert_eq!(s, [1.0, -1.0, 1.0, -1.0]);
    }

    #[test]
    fn sw_identity_examples() {
        let r = sw_moment_identity(0.0, 0).unwrap();
        assert!((r.closed_form - 2.275_875_794_468_747_5).abs() < 1e-14);
        assert!(r.relative_deviation < 1e-12);
        let r1 = sw_moment_identity(1.0, 0).unwrap();
        assert!((r1.numeric - r.numeric).abs() < 1e-12 * r.numeric);
        let r = sw_moment_identity(-1.0, 3).unwrap();
        assert!((r.closed_form - PI.sqrt() * 4f64.exp()).abs() < 1e-12 * r.closed_form);
        assert!(r.relative_deviation < 1e-12);
        assert!(sw_moment_identity(1.5, 0).is_err());
    }
}

//! Gauss and Gauss–Kronrod rules, Christoffel-number inequalities and the
//! Geronimus companion of a Stieltjes polynomial.

use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::invalid;
use crate::linalg::{symmetric_tridiagonal_eigen, Lu};
use crate::math::sum2;
use crate::orthopoly::{
    check_separation, eval_orthonormal_real, family_coeffs, jacobi_matrix, Family, MeasureDescriptor,
    RecurrenceCoeffs,
};
use crate::{Error, Result};

/// Relative agreement required between the two weight formulas.
pub const WEIGHT_CROSS_CHECK: f64 = 1e-10;
/// Relative tolerance for exactness certification.
pub const EXACTNESS_TOL: f64 = 1e-10;

/// A quadrature rule with positive weights and certified exactness.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadRule {
    /// Ascending nodes.
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    /// Mass of the underlying measure.
    pub mass: f64,
    /// Support of the underlying measure.
    pub support: (f64, f64),
    /// Family of the underlying measure, when named.
    pub family: Option<Family>,
    /// Highest degree `d` such that all polynomials of degree `<= d` were
    /// verified to be integrated exactly.
    pub exactness: usize,
}

impl QuadRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `sum_j w_j f(x_j)` with compensated summation.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        sum2(self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)))
    }

    /// Measure descriptor of the named family, if any.
    pub fn measure(&self) -> Option<MeasureDescriptor> {
        self.family.map(|f| f.measure())
    }
}

/// Both weight formulas of a Gauss rule, before the cross-check.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussWeights {
    pub nodes: Vec<f64>,
    /// `mass * v_j^2` from the first eigenvector components.
    pub eigenvector: Vec<f64>,
    /// `1 / sum_(k<n) p_k(x_j)^2`.
    pub christoffel: Vec<f64>,
}

impl GaussWeights {
    /// Largest relative discrepancy between the two formulas and its index.
    pub fn max_discrepancy(&self) -> (usize, f64) {
        self.eigenvector
            .iter()
            .zip(&self.christoffel)
            .map(|(a, b)| ((a - b) / b).abs())
            .enumerate()
            .fold((0, 0.0), |acc, v| if v.1 > acc.1 { v } else { acc })
    }
}

/// Nodes and both weight formulas for the `n`-point Gauss rule.
pub fn gauss_weights(rc: &RecurrenceCoeffs, n: usize) -> Result<GaussWeights> {
    let j = jacobi_matrix(rc, n)?;
    let eig = symmetric_tridiagonal_eigen(&j.diag, &j.off)?;
    check_separation(&eig.values)?;
    let eigenvector = eig.first_components.iter().map(|v| rc.mass() * v * v).collect();
    let mut christoffel = Vec::with_capacity(n);
    for &x in &eig.values {
        let p = eval_orthonormal_real(rc, x, n - 1)?;
        christoffel.push(1.0 / sum2(p.iter().map(|v| v * v)));
    }
    Ok(GaussWeights { nodes: eig.values, eigenvector, christoffel })
}

/// `n`-point Gauss rule. Nodes are the Jacobi-matrix eigenvalues; weights
/// are computed from the eigenvectors and from the Christoffel function and
/// must agree to [`WEIGHT_CROSS_CHECK`]. The Christoffel values are kept.
pub fn gauss_rule(rc: &RecurrenceCoeffs, n: usize) -> Result<QuadRule> {
    let gw = gauss_weights(rc, n)?;
    let (idx, worst) = gw.max_discrepancy();
    if !(worst <= WEIGHT_CROSS_CHECK) {
        return Err(Error::CrossCheck { what: "Gauss weights (eigenvector vs Christoffel)", index: idx, discrepancy: worst });
    }
    let support = rc.family().map_or((f64::NEG_INFINITY, f64::INFINITY), |f| f.support());
    let mut rule = QuadRule {
        nodes: gw.nodes,
        weights: gw.christoffel,
        mass: rc.mass(),
        support,
        family: rc.family(),
        exactness: 0,
    };
    rule.exactness = certify_exactness(&rule, rc, 2 * n - 1);
    Ok(rule)
}

/// Jacobi moments come from a recurrence and Carlitz moments from a
/// truncated atom sum; both lose accuracy at high degree.
fn has_stable_moments(f: &Family) -> bool {
    !matches!(f, Family::Jacobi { .. } | Family::CarlitzC { .. } | Family::CarlitzD { .. })
}

/// Highest `d <= max_degree` such that every degree up to `d` is integrated
/// exactly: monomials against closed-form moments when the family has
/// them, otherwise the orthonormal basis `sum w p_k = sqrt(mass) delta_k0`.
pub fn certify_exactness(rule: &QuadRule, rc: &RecurrenceCoeffs, max_degree: usize) -> usize {
    let mut passed = None;
    match rule.family.filter(has_stable_moments) {
        Some(f) => {
            for d in 0..=max_degree {
                let Some(mu) = f.exact_moment(d) else { break };
                let q = rule.integrate(|x| x.powi(d as i32));
                let scale = rule.integrate(|x| x.abs().powi(d as i32)).max(mu.abs());
                if (q - mu).abs() <= EXACTNESS_TOL * scale {
                    passed = Some(d);
                } else {
                    break;
                }
            }
        }
        None => {
            let top = max_degree.min(rc.levels());
            let cols: Vec<Vec<f64>> = rule
                .nodes
                .iter()
                .map(|&x| eval_orthonormal_real(rc, x, top).unwrap_or_default())
                .collect();
            let sm = rc.mass().sqrt();
            for d in 0..=top {
                let q = sum2(cols.iter().zip(&rule.weights).map(|(p, &w)| w * p[d]));
                let scale = cols.iter().zip(&rule.weights).map(|(p, &w)| (w * p[d]).abs()).sum::<f64>().max(sm);
                let target = if d == 0 { sm } else { 0.0 };
                if (q - target).abs() <= EXACTNESS_TOL * scale {
                    passed = Some(d);
                } else {
                    break;
                }
            }
        }
    }
    passed.unwrap_or(0)
}

/// One bracket `lower < middle < upper` (or `<=` for the Possé form).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BracketCheck {
    /// 1-based index.
    pub index: usize,
    pub lower: f64,
    pub middle: f64,
    pub upper: f64,
    /// `min(middle - lower, upper - middle)`, evaluated in the tail form
    /// for indices in the upper half.
    pub slack: f64,
    pub holds: bool,
}

fn tail_sums(w: &[f64]) -> (Vec<f64>, Vec<f64>) {
    // head[k] = sum_(j<k) w_j, tail[k] = sum_(j>=k) w_j
    let n = w.len();
    let mut head = vec![0.0; n + 1];
    let mut tail = vec![0.0; n + 1];
    for k in 0..n {
        head[k + 1] = sum2(w[..=k].iter().copied());
        tail[n - 1 - k] = sum2(w[n - 1 - k..].iter().copied());
    }
    (head, tail)
}

fn measure_fns(md: &MeasureDescriptor, mass: f64) -> Result<(crate::orthopoly::RealFn, crate::orthopoly::RealFn)> {
    let cdf = md.cdf.clone().ok_or_else(|| invalid("measure has no distribution function"))?;
    let sf = match md.survival.clone() {
        Some(s) => s,
        None => {
            let c = cdf.clone();
            alloc::sync::Arc::new(move |x: f64| mass - c(x))
        }
    };
    Ok((cdf, sf))
}

/// Markov–Stieltjes brackets
/// `sum_(j<k) w_j < mu[a, x_k] < sum_(j<=k) w_j` for every node. For the
/// upper half of the nodes the equivalent tail form with the survival
/// function is evaluated to avoid cancellation.
pub fn markov_stieltjes_verify(rule: &QuadRule, md: &MeasureDescriptor) -> Result<Vec<BracketCheck>> {
    let (cdf, sf) = measure_fns(md, rule.mass)?;
    let n = rule.len();
    let probe = rule.nodes[0];
    let total = cdf(probe) + sf(probe);
    if ((total - rule.mass) / rule.mass).abs() > 1e-10 {
        return Err(Error::CrossCheck { what: "distribution function vs mass", index: 0, discrepancy: (total - rule.mass) / rule.mass });
    }
    let (head, tail) = tail_sums(&rule.weights);
    let mut out = Vec::with_capacity(n);
    for k in 1..=n {
        let x = rule.nodes[k - 1];
        let c = cdf(x);
        let (s_lo, s_hi) = if 2 * k <= n {
            (c - head[k - 1], head[k] - c)
        } else {
            let s = sf(x);
            (tail[k - 1] - s, s - tail[k])
        };
        let slack = s_lo.min(s_hi);
        out.push(BracketCheck { index: k, lower: head[k - 1], middle: c, upper: head[k], slack, holds: slack > 0.0 });
    }
    Ok(out)
}

/// Nested brackets between consecutive rules:
/// `sum_(j<k) w_(j,n) < sum_(j<=k) w_(j,n+1) < sum_(j<=k) w_(j,n)`.
pub fn nested_sum_verify(rc: &RecurrenceCoeffs, n: usize) -> Result<Vec<BracketCheck>> {
    let r0 = gauss_rule(rc, n)?;
    let r1 = gauss_rule(rc, n + 1)?;
    let (h0, t0) = tail_sums(&r0.weights);
    let (h1, t1) = tail_sums(&r1.weights);
    let mut out = Vec::with_capacity(n);
    for k in 1..=n {
        let (s_lo, s_hi) = if 2 * k <= n {
            (h1[k] - h0[k - 1], h0[k] - h1[k])
        } else {
            (t0[k - 1] - t1[k], t1[k] - t0[k])
        };
        let slack = s_lo.min(s_hi);
        out.push(BracketCheck { index: k, lower: h0[k - 1], middle: h1[k], upper: h0[k], slack, holds: slack > 0.0 });
    }
    Ok(out)
}

/// Gap bound `w_j < mu(x_(j-1), x_(j+1))`; at the first and last node the
/// missing neighbour is replaced by the end of the support. A one-node
/// rule gives no checks.
pub fn gap_bound_verify(rule: &QuadRule, md: &MeasureDescriptor) -> Result<Vec<BracketCheck>> {
    let (cdf, sf) = measure_fns(md, rule.mass)?;
    let n = rule.len();
    if n < 2 {
        return Ok(Vec::new());
    }
    let (a, b) = rule.support;
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let left = if j == 0 { a } else { rule.nodes[j - 1] };
        let right = if j + 1 == n { b } else { rule.nodes[j + 1] };
        let c = |x: f64| if x == f64::NEG_INFINITY { 0.0 } else { cdf(x) };
        let s = |x: f64| if x == f64::INFINITY { 0.0 } else { sf(x) };
        let mass = if 2 * (j + 1) <= n { c(right) - c(left) } else { s(left) - s(right) };
        let slack = mass - rule.weights[j];
        out.push(BracketCheck { index: j + 1, lower: 0.0, middle: rule.weights[j], upper: mass, slack, holds: slack > 0.0 });
    }
    Ok(out)
}

/// Possé bracket
/// `sum_(j<k) w_j f(x_j) <= integral_a^(x_k) f dmu <= sum_(j<=k) w_j f(x_j)`
/// for `f` with nonnegative derivatives. The middle member uses the
/// reference integrator on the density plus any atoms.
pub fn posse_verify<F: Fn(f64) -> f64>(rule: &QuadRule, md: &MeasureDescriptor, f: F, k: usize) -> Result<BracketCheck> {
    let n = rule.len();
    if k == 0 || k > n {
        return Err(Error::OutOfRange { what: "Posse index", requested: k, available: n });
    }
    let xk = rule.nodes[k - 1];
    let mut middle = md.atoms.iter().filter(|t| t.0 <= xk).map(|t| t.1 * f(t.0)).sum::<f64>();
    if md.density.is_some() {
        middle += md.integrate_density(&f, md.support.0, xk, 1e-14)?.value;
    }
    let terms: Vec<f64> = rule.nodes.iter().zip(&rule.weights).map(|(&x, &w)| w * f(x)).collect();
    let lower = sum2(terms[..k - 1].iter().copied());
    let upper = sum2(terms[..k].iter().copied());
    let slack = (middle - lower).min(upper - middle);
    Ok(BracketCheck { index: k, lower, middle, upper, slack, holds: slack >= 0.0 })
}

/// Monic Stieltjes polynomial `E_(n+1)` paired with `p_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct StieltjesPoly {
    /// `n + 1`.
    pub degree: usize,
    /// `n`.
    pub base_degree: usize,
    /// Ascending monomial coefficients; the last one is 1.
    pub coeffs: Vec<f64>,
    /// Coefficients in the orthonormal basis `p_0..p_(n+1)`.
    pub orthonormal_coeffs: Vec<f64>,
    /// `integral p_n E x^k dmu`, `k = 0..=n`.
    pub residuals: Vec<f64>,
    /// Matching `integral |p_n E x^k| dmu`.
    pub residual_scales: Vec<f64>,
    /// Condition estimate of the linear system.
    pub condition: f64,
    rc: RecurrenceCoeffs,
}

impl StieltjesPoly {
    /// Evaluate through the orthonormal basis.
    pub fn eval(&self, x: f64) -> f64 {
        let p = eval_orthonormal_real(&self.rc, x, self.degree).unwrap_or_default();
        sum2(p.iter().zip(&self.orthonormal_coeffs).map(|(a, b)| a * b))
    }
}

/// Leading coefficients `1 / (sqrt(mass) a_1 ... a_k)` of `p_0..p_n`.
fn leading_coeffs(rc: &RecurrenceCoeffs, n: usize) -> Vec<f64> {
    let mut lc = Vec::with_capacity(n + 1);
    lc.push(1.0 / rc.mass().sqrt());
    for k in 1..=n {
        lc.push(lc[k - 1] / rc.a()[k - 1]);
    }
    lc
}

/// Ascending monomial coefficients of the monic `pi_0..pi_n`.
fn monic_monomials(rc: &RecurrenceCoeffs, n: usize) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = vec![vec![1.0]];
    for k in 0..n {
        let mut next = vec![0.0; k + 2];
        for (i, &c) in out[k].iter().enumerate() {
            next[i + 1] += c;
            next[i] -= rc.b()[k] * c;
        }
        if k > 0 {
            let a2 = rc.a()[k - 1] * rc.a()[k - 1];
            for (i, &c) in out[k - 1].iter().enumerate() {
                next[i] -= a2 * c;
            }
        }
        out.push(next);
    }
    out
}

/// Stieltjes polynomial from the `n + 1` conditions
/// `integral p_n E x^k dmu = 0`, `k = 0..=n`, with inner products from a
/// Gauss rule of `ceil((3n + 2) / 2)` nodes.
pub fn stieltjes_poly(rc: &RecurrenceCoeffs, n: usize) -> Result<StieltjesPoly> {
    let g = (3 * n + 3) / 2;
    let g = g.max(1);
    let need = g.max(n + 1);
    if rc.levels() < need {
        return Err(Error::OutOfRange { what: "recurrence levels for the Stieltjes polynomial", requested: need, available: rc.levels() });
    }
    let rule = gauss_rule(rc, g)?;
    let vals: Vec<Vec<f64>> = rule.nodes.iter().map(|&x| eval_orthonormal_real(rc, x, n + 1)).collect::<Result<_>>()?;
    let lc = leading_coeffs(rc, n + 1);
    let m = n + 1;
    // matrix[k][i] = integral p_n p_i p_k, rhs[k] = -integral p_n pi_(n+1) p_k
    let mut mat = vec![0.0; m * m];
    let mut rhs = vec![0.0; m];
    for k in 0..m {
        for i in 0..m {
            mat[k * m + i] = sum2(vals.iter().zip(&rule.weights).map(|(p, &w)| w * p[n] * p[i] * p[k]));
        }
        rhs[k] = -sum2(vals.iter().zip(&rule.weights).map(|(p, &w)| w * p[n] * p[n + 1] / lc[n + 1] * p[k]));
    }
    let lu = Lu::new(&mat, m)?;
    let condition = lu.condition();
    if !(condition < 1e14) {
        return Err(Error::Singular { what: "Stieltjes polynomial system", condition });
    }
    let c = lu.solve(&rhs);
    let mut orthonormal_coeffs = c.clone();
    orthonormal_coeffs.push(1.0 / lc[n + 1]);
    let monic = monic_monomials(rc, n + 1);
    let mut coeffs = monic[n + 1].clone();
    for i in 0..m {
        let s = c[i] * lc[i];
        for (j, &v) in monic[i].iter().enumerate() {
            coeffs[j] += s * v;
        }
    }
    let mut residuals = Vec::with_capacity(m);
    let mut residual_scales = Vec::with_capacity(m);
    let e_at: Vec<f64> = vals.iter().map(|p| sum2(p.iter().zip(&orthonormal_coeffs).map(|(a, b)| a * b))).collect();
    for k in 0..m {
        let terms: Vec<f64> = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .zip(vals.iter().zip(&e_at))
            .map(|((&x, &w), (p, &e))| w * p[n] * e * x.powi(k as i32))
            .collect();
        residuals.push(sum2(terms.iter().copied()));
        residual_scales.push(terms.iter().map(|t| t.abs()).sum());
    }
    Ok(StieltjesPoly {
        degree: n + 1,
        base_degree: n,
        coeffs,
        orthonormal_coeffs,
        residuals,
        residual_scales,
        condition,
        rc: rc.clone(),
    })
}

/// Gauss–Kronrod extension of the `n`-point Gauss rule.
#[derive(Debug, Clone, PartialEq)]
pub struct KronrodRule {
    pub gauss_nodes: Vec<f64>,
    /// Zeros of the Stieltjes polynomial.
    pub added_nodes: Vec<f64>,
    /// All `2n + 1` nodes, ascending.
    pub nodes: Vec<f64>,
    /// Weights aligned with `nodes`.
    pub weights: Vec<f64>,
    /// Highest verified degree.
    pub exactness: usize,
    /// Condition estimate of the column-scaled weight system.
    pub condition: f64,
    pub mass: f64,
    pub support: (f64, f64),
    pub family: Option<Family>,
}

impl KronrodRule {
    /// View as a [`QuadRule`].
    pub fn to_rule(&self) -> QuadRule {
        QuadRule {
            nodes: self.nodes.clone(),
            weights: self.weights.clone(),
            mass: self.mass,
            support: self.support,
            family: self.family,
            exactness: self.exactness,
        }
    }
}

/// Kronrod rule for `n` Gauss nodes. Added nodes are bracketed in the
/// `n + 1` gaps between Gauss nodes and support ends; any failure is
/// reported with the full root set of the Stieltjes polynomial.
pub fn kronrod_rule(rc: &RecurrenceCoeffs, n: usize) -> Result<KronrodRule> {
    if n == 0 {
        return Err(invalid("Kronrod extension needs n >= 1"));
    }
    let e = stieltjes_poly(rc, n)?;
    let gauss = gauss_rule(rc, n)?;
    let (lo, hi) = gauss.support;
    let spread = (gauss.nodes[n - 1] - gauss.nodes[0]).max(1.0);
    let lo = if lo.is_finite() { lo } else { gauss.nodes[0] - 4.0 * spread };
    let hi = if hi.is_finite() { hi } else { gauss.nodes[n - 1] + 4.0 * spread };
    let mut ends = vec![lo];
    ends.extend_from_slice(&gauss.nodes);
    ends.push(hi);
    let mut added = Vec::with_capacity(n + 1);
    let mut ok = true;
    for w in ends.windows(2) {
        match bisect(|x| e.eval(x), w[0], w[1]) {
            Some(r) if !touches(r, &gauss.nodes) => added.push(r),
            _ => {
                ok = false;
                break;
            }
        }
    }
    if !ok {
        let roots = polynomial_roots(&e.coeffs);
        let offending = roots
            .iter()
            .filter(|r| r.im.abs() > 1e-10 * (1.0 + r.re.abs()) || r.re < lo || r.re > hi || touches(r.re, &gauss.nodes))
            .map(|r| (r.re, r.im))
            .collect();
        return Err(Error::KronrodNodes { offending });
    }
    let mut nodes: Vec<f64> = gauss.nodes.iter().chain(&added).copied().collect();
    nodes.sort_by(f64::total_cmp);
    let m = 2 * n + 1;
    if rc.levels() < 2 * n {
        return Err(Error::OutOfRange { what: "recurrence levels for Kronrod weights", requested: 2 * n, available: rc.levels() });
    }
    let cols: Vec<Vec<f64>> = nodes.iter().map(|&x| eval_orthonormal_real(rc, x, 2 * n)).collect::<Result<_>>()?;
    let scales: Vec<f64> = cols.iter().map(|c| c.iter().fold(0.0, |a: f64, v| a.max(v.abs()))).collect();
    let mut mat = vec![0.0; m * m];
    for k in 0..m {
        for j in 0..m {
            mat[k * m + j] = cols[j][k] / scales[j];
        }
    }
    let mut rhs = vec![0.0; m];
    rhs[0] = rc.mass().sqrt();
    let lu = Lu::new(&mat, m)?;
    let condition = lu.condition();
    if !(condition < 1e14) {
        return Err(Error::Singular { what: "Kronrod weight system", condition });
    }
    let y = lu.solve(&rhs);
    let weights: Vec<f64> = y.iter().zip(&scales).map(|(v, s)| v / s).collect();
    let mut k = KronrodRule {
        gauss_nodes: gauss.nodes.clone(),
        added_nodes: added,
        nodes,
        weights,
        exactness: 0,
        condition,
        mass: rc.mass(),
        support: gauss.support,
        family: rc.family(),
    };
    let max_degree = 4 * n + 1;
    k.exactness = certify_exactness(&k.to_rule(), rc, max_degree);
    Ok(k)
}

fn touches(x: f64, nodes: &[f64]) -> bool {
    nodes.iter().any(|&g| (x - g).abs() <= 1e-12 * (1.0 + g.abs()))
}

/// Bisection on a sign change; `None` when the ends do not bracket.
pub(crate) fn bisect<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64) -> Option<f64> {
    let mut fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Some(a);
    }
    if fb == 0.0 {
        return Some(b);
    }
    if fa.signum() == fb.signum() || !fa.is_finite() || !fb.is_finite() {
        return None;
    }
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return Some(m);
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Some(0.5 * (a + b))
}


/// All roots of a monic polynomial (ascending coefficients) by the
/// Durand–Kerner iteration.
pub fn polynomial_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let deg = coeffs.len().saturating_sub(1);
    if deg == 0 {
        return Vec::new();
    }
    let lead = coeffs[deg];
    let c: Vec<f64> = coeffs.iter().map(|v| v / lead).collect();
    let radius = 1.0 + c[..deg].iter().fold(0.0, |a: f64, v| a.max(v.abs()));
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..deg).map(|k| seed.powu(k as u32) * (radius / seed.norm().powi(k as i32)).min(radius)).collect();
    let eval = |x: Complex64| c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &v| acc * x + v);
    for _ in 0..2000 {
        let mut delta: f64 = 0.0;
        for i in 0..deg {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    z.sort_by(|a, b| a.re.total_cmp(&b.re));
    z
}

/// Shift first-kind Chebyshev coefficients (primed convention: the `T_0`
/// coefficient enters halved) to second-kind coefficients:
/// `u_k = t_(k+1)`.
pub fn geronimus_from_stieltjes(tcoeffs: &[f64]) -> Vec<f64> {
    tcoeffs.iter().skip(1).copied().collect()
}

/// Primed first-kind Chebyshev coefficients of a polynomial given by
/// ascending monomial coefficients.
pub fn monomial_to_chebyshev_t(coeffs: &[f64]) -> Vec<f64> {
    // x^k expanded in T_j, built up by x T_j = (T_(j+1) + T_|j-1|) / 2
    let n = coeffs.len();
    let mut out = vec![0.0; n];
    let mut xk = vec![0.0; n];
    xk[0] = 1.0;
    for (k, &c) in coeffs.iter().enumerate() {
        if k > 0 {
            let mut next = vec![0.0; n];
            for (j, &v) in xk.iter().enumerate() {
                if v == 0.0 {
                    continue;
                }
                if j + 1 < n {
                    next[j + 1] += 0.5 * v;
                }
                if j == 0 {
                    next[1] += 0.5 * v;
                } else {
                    next[j - 1] += 0.5 * v;
                }
            }
            // x * T_0 = T_1 exactly
            if xk[0] != 0.0 {
                next[1] += 0.0;
            }
            xk = next;
        }
        for j in 0..n {
            out[j] += c * xk[j];
        }
    }
    // primed convention doubles the T_0 entry
    out[0] *= 2.0;
    out
}

/// Evaluate `sum u_k U_k(x)`.
pub fn chebyshev_u_eval(u: &[f64], x: f64) -> f64 {
    let (mut prev, mut cur) = (0.0, 1.0);
    let mut s = 0.0;
    for (k, &c) in u.iter().enumerate() {
        s += c * cur;
        let next = if k == 0 { 2.0 * x } else { 2.0 * x * cur - prev };
        prev = cur;
        cur = next;
    }
    s
}

/// Numerical consistency of the Geronimus companion for Lebesgue measure:
/// `integral P_n S_n T_k dx` for `k = 1..=n` and the normalization integral
/// `integral P_n S_n dx`, with `P_n` the classical Legendre polynomial and
/// `S_n` built from the monic Stieltjes polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct GeronimusCheck {
    pub n: usize,
    /// `S_n` in the second-kind basis.
    pub s_coeffs: Vec<f64>,
    pub orthogonality: Vec<f64>,
    pub normalization: f64,
}

pub fn geronimus_check(n: usize) -> Result<GeronimusCheck> {
    let rc = family_coeffs(Family::Legendre, (3 * n + 3).max(2 * n + 2))?;
    let e = stieltjes_poly(&rc, n)?;
    let u = geronimus_from_stieltjes(&monomial_to_chebyshev_t(&e.coeffs));
    let rule = gauss_rule(&rc, 2 * n + 2)?;
    let integrand = |k: usize| {
        rule.integrate(|x| {
            let t = libm::cos(k as f64 * libm::acos(x));
            crate::legendre::legendre_p(n, x) * chebyshev_u_eval(&u, x) * t
        })
    };
    Ok(GeronimusCheck {
        n,
        orthogonality: (1..=n).map(integrand).collect(),
        normalization: integrand(0),
        s_coeffs: u,
    })
}

/// One row of a convergence table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarnessRow {
    pub n: usize,
    pub value: f64,
    pub error: f64,
}

/// Gauss approximations of `integral f dmu` for each `n`. The reference is
/// `reference` if given, otherwise a rule of twice the largest `n`.
pub fn gauss_convergence_harness<F: Fn(f64) -> f64>(
    md: &MeasureDescriptor,
    f: F,
    n_list: &[usize],
    reference: Option<f64>,
) -> Result<Vec<HarnessRow>> {
    let fam = md.family.ok_or_else(|| invalid("convergence harness needs a named family"))?;
    let top = n_list.iter().copied().max().unwrap_or(1);
    let rc = family_coeffs(fam, 2 * top)?;
    let reference = match reference {
        Some(r) => r,
        None => gauss_rule(&rc, 2 * top)?.integrate(&f),
    };
    n_list
        .iter()
        .map(|&n| {
            let v = gauss_rule(&rc, n)?.integrate(&f);
            Ok(HarnessRow { n, value: v, error: (v - reference).abs() })
        })
        .collect()
}

//! Stieltjes (S-) and Jacobi (J-) continued fractions.
//!
//! An [`SFraction`] with coefficients `c_1, ..., c_m` denotes
//!
//! ```text
//! 1 / (c_1 z + 1 / (c_2 + 1 / (c_3 z + 1 / (c_4 + ...))))
//! ```
//!
//! and a [`JFraction`] with `a_0^2, a_1^2, ...` and `b_0, b_1, ...` denotes
//!
//! ```text
//! a_0^2 / (z - b_0 - a_1^2 / (z - b_1 - a_2^2 / (z - b_2 - ...)))
//! ```
//!
//! Both are evaluated with the forward numerator/denominator recursion
//! `X_k = d_k X_{k-1} + e_k X_{k-2}` seeded with `A_{-1} = 1, A_0 = 0,
//! B_{-1} = 0, B_0 = 1`. For an S-fraction `e_k = 1` and `d_k` is `c_k z`
//! for odd `k`, `c_k` for even `k`. For a J-fraction `e_1 = a_0^2`,
//! `e_k = -a_{k-1}^2` for `k >= 2` and `d_k = z - b_{k-1}`. With these
//! partial numerators the determinant identity reads
//!
//! ```text
//! A_n B_{n-1} - A_{n-1} B_n = (-1)^(n-1) e_1 e_2 ... e_n.
//! ```

use alloc::vec::Vec;
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result};

/// Coefficients `c_1..c_m` of an S-fraction.
#[derive(Debug, Clone, PartialEq)]
pub struct SFraction {
    c: Vec<f64>,
    stieltjes: bool,
}

impl SFraction {
    /// Any nonzero finite coefficients. Stieltjes mode is set when all are
    /// positive.
    pub fn new(c: Vec<f64>) -> Result<Self> {
        if c.is_empty() {
            return Err(Error::OutOfRange {
                what: "S-fraction length",
                requested: 1,
                available: 0,
            });
        }
        for (i, &v) in c.iter().enumerate() {
            if v == 0.0 {
                return Err(Error::ZeroCoefficient { index: i + 1 });
            }
            if !v.is_finite() {
                return Err(crate::error::invalid("non-finite S-fraction coefficient"));
            }
        }
        let stieltjes = c.iter().all(|&v| v > 0.0);
        Ok(SFraction { c, stieltjes })
    }

    /// Like [`SFraction::new`] but every coefficient must be positive.
    pub fn stieltjes(c: Vec<f64>) -> Result<Self> {
        let s = Self::new(c)?;
        if let Some(i) = s.c.iter().position(|&v| v <= 0.0) {
            return Err(Error::NonPositive {
                what: "S-fraction coefficient",
                index: i + 1,
                value: s.c[i],
            });
        }
        Ok(s)
    }

    /// `c_1..c_m`.
    pub fn coefficients(&self) -> &[f64] {
        &self.c
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    /// True when all coefficients are positive.
    pub fn is_stieltjes(&self) -> bool {
        self.stieltjes
    }
}

/// Coefficients of a J-fraction.
#[derive(Debug, Clone, PartialEq)]
pub struct JFraction {
    a_sq: Vec<f64>,
    b: Vec<f64>,
    stieltjes: bool,
}

impl JFraction {
    /// `a_sq = (a_0^2, a_1^2, ...)`, `b = (b_0, b_1, ...)` with
    /// `len(a_sq)` equal to `len(b)` or `len(b) + 1`.
    pub fn new(a_sq: Vec<f64>, b: Vec<f64>) -> Result<Self> {
        if a_sq.is_empty() {
            return Err(crate::error::invalid("J-fraction needs a_0^2"));
        }
        if !(a_sq.len() == b.len() || a_sq.len() == b.len() + 1) {
            return Err(crate::error::invalid(
                "len(a_sq) must equal len(b) or len(b) + 1",
            ));
        }
        if let Some(i) = a_sq.iter().position(|&v| v == 0.0) {
            return Err(Error::ZeroCoefficient { index: i });
        }
        let stieltjes = a_sq.iter().all(|&v| v > 0.0) && b.iter().all(|&v| v < 0.0);
        Ok(JFraction { a_sq, b, stieltjes })
    }

    pub fn a_sq(&self) -> &[f64] {
        &self.a_sq
    }

    pub fn b(&self) -> &[f64] {
        &self.b
    }

    /// Number of convergents that can be formed.
    pub fn levels(&self) -> usize {
        self.b.len().min(self.a_sq.len())
    }

    /// All `a_k^2 > 0` and all `b_k < 0`.
    pub fn is_stieltjes(&self) -> bool {
        self.stieltjes
    }
}

/// Numerator and denominator of a convergent. The true values are the
/// stored ones times `exp(log_scale)`; rescaling keeps them finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergentPair {
    pub numerator: Complex64,
    pub denominator: Complex64,
    pub n: usize,
    pub log_scale: f64,
}

impl ConvergentPair {
    pub fn value(&self) -> Complex64 {
        self.numerator / self.denominator
    }
}

const RESCALE_ABOVE: f64 = 1e150;
const POLE_RATIO: f64 = 1e-300;

/// Run the recursion for `n` steps and return every pair `1..=n`.
fn recurse<D, E>(n: usize, d: D, e: E) -> Result<Vec<ConvergentPair>>
where
    D: Fn(usize) -> Complex64,
    E: Fn(usize) -> Complex64,
{
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let (mut a_prev, mut a_cur) = (one, zero);
    let (mut b_prev, mut b_cur) = (zero, one);
    let mut log_scale = 0.0;
    let mut max_log_b = 0.0f64;
    let mut out = Vec::with_capacity(n);
    for k in 1..=n {
        let (dk, ek) = (d(k), e(k));
        let a_next = dk * a_cur + ek * a_prev;
        let b_next = dk * b_cur + ek * b_prev;
        a_prev = a_cur;
        b_prev = b_cur;
        a_cur = a_next;
        b_cur = b_next;
        let big = a_cur.norm().max(b_cur.norm()).max(a_prev.norm()).max(b_prev.norm());
        if big > RESCALE_ABOVE {
            a_cur /= big;
            b_cur /= big;
            a_prev /= big;
            b_prev /= big;
            log_scale += big.ln();
        }
        let bn = b_cur.norm();
        let log_b = if bn > 0.0 { bn.ln() + log_scale } else { f64::NEG_INFINITY };
        max_log_b = max_log_b.max(log_b);
        out.push(ConvergentPair {
            numerator: a_cur,
            denominator: b_cur,
            n: k,
            log_scale,
        });
        if !a_cur.re.is_finite() || !a_cur.im.is_finite() {
            return Err(crate::error::invalid("non-finite continued-fraction coefficient"));
        }
    }
    if let Some(last) = out.last() {
        let bn = last.denominator.norm();
        let log_b = if bn > 0.0 { bn.ln() + last.log_scale } else { f64::NEG_INFINITY };
        if log_b < POLE_RATIO.ln() + max_log_b {
            return Err(Error::Pole {
                n,
                denominator: bn * last.log_scale.exp(),
            });
        }
    }
    Ok(out)
}

/// Numerator/denominator pairs of the first `n` S-fraction convergents.
pub fn s_convergent_pairs(s: &SFraction, z: Complex64, n: usize) -> Result<Vec<ConvergentPair>> {
    if n == 0 || n > s.len() {
        return Err(Error::OutOfRange {
            what: "S-fraction convergent index",
            requested: n,
            available: s.len(),
        });
    }
    let c = &s.c;
    recurse(
        n,
        |k| {
            if k % 2 == 1 {
                z * c[k - 1]
            } else {
                Complex64::new(c[k - 1], 0.0)
            }
        },
        |_| Complex64::new(1.0, 0.0),
    )
}

/// Value of the S-fraction truncated after `c_n`.
pub fn s_convergent(s: &SFraction, z: Complex64, n: usize) -> Result<Complex64> {
    let pairs = s_convergent_pairs(s, z, n)?;
    Ok(pairs[n - 1].value())
}

/// Numerator/denominator pairs of the first `n` J-fraction convergents.
pub fn j_convergent_pairs(j: &JFraction, z: Complex64, n: usize) -> Result<Vec<ConvergentPair>> {
    if n == 0 || n > j.levels() {
        return Err(Error::OutOfRange {
            what: "J-fraction convergent index",
            requested: n,
            available: j.levels(),
        });
    }
    recurse(
        n,
        |k| z - j.b[k - 1],
        |k| {
            if k == 1 {
                Complex64::new(j.a_sq[0], 0.0)
            } else {
                Complex64::new(-j.a_sq[k - 1], 0.0)
            }
        },
    )
}

/// Value of the `n`-th J-fraction convergent (`n` levels of `z - b_k`).
pub fn j_convergent(j: &JFraction, z: Complex64, n: usize) -> Result<Complex64> {
    let pairs = j_convergent_pairs(j, z, n)?;
    Ok(pairs[n - 1].value())
}

/// Even contraction of an S-fraction of odd length `2M + 1` into a
/// J-fraction with `M + 1` numerators and `M` diagonal entries. Only
/// coefficients fully determined by the available `c_k` are emitted.
pub fn contract(s: &SFraction) -> Result<JFraction> {
    let m = s.len();
    if m < 3 || m % 2 == 0 {
        return Err(Error::OutOfRange {
            what: "contraction needs odd length 2M+1 with M >= 1",
            requested: 3.max(m + (m + 1) % 2),
            available: m,
        });
    }
    let big_m = (m - 1) / 2;
    // 1-based access
    let c = |k: usize| s.c[k - 1];
    let mut a_sq = Vec::with_capacity(big_m + 1);
    let mut b = Vec::with_capacity(big_m);
    a_sq.push(1.0 / c(1));
    b.push(-1.0 / (c(1) * c(2)));
    for n in 1..=big_m {
        a_sq.push(1.0 / (c(2 * n - 1) * c(2 * n) * c(2 * n) * c(2 * n + 1)));
        if n < big_m {
            b.push(-1.0 / (c(2 * n) * c(2 * n + 1)) - 1.0 / (c(2 * n + 1) * c(2 * n + 2)));
        }
    }
    JFraction::new(a_sq, b)
}

/// Evidence label for a series of positive terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trend {
    Growing,
    Leveling,
    Inconclusive,
}

/// Partial sums of a positive series with a trend label. Advisory only.
#[derive(Debug, Clone, PartialEq)]
pub struct TrendReport {
    /// `S_1, ..., S_h`.
    pub partial_sums: Vec<f64>,
    /// `S_h`.
    pub partial_sum: f64,
    pub trend: Trend,
}

/// Label a partial-sum trajectory by comparing the increment over the last
/// tenth of the horizon with the increment over the first tenth:
/// ratio below `1e-3` is leveling, above `1e-1` is growing.
pub fn classify_trend(partial_sums: &[f64]) -> Trend {
    let h = partial_sums.len();
    if h < 2 {
        return Trend::Inconclusive;
    }
    let d = (h / 10).max(1);
    let first = partial_sums[d - 1];
    let last = partial_sums[h - 1] - partial_sums[h - 1 - d];
    if !(first > 0.0) || !last.is_finite() {
        return Trend::Inconclusive;
    }
    let ratio = last / first;
    if ratio < 1e-3 {
        Trend::Leveling
    } else if ratio > 1e-1 {
        Trend::Growing
    } else {
        Trend::Inconclusive
    }
}

/// Build a [`TrendReport`] from positive terms.
pub fn trend_report(terms: impl IntoIterator<Item = f64>) -> TrendReport {
    let mut acc = 0.0;
    let partial_sums: Vec<f64> = terms
        .into_iter()
        .map(|t| {
            acc += t;
            acc
        })
        .collect();
    let trend = classify_trend(&partial_sums);
    TrendReport {
        partial_sum: partial_sums.last().copied().unwrap_or(0.0),
        partial_sums,
        trend,
    }
}

/// Partial sums of `c_1 + ... + c_horizon`; a diverging sum is the
/// classical determinacy criterion for Stieltjes-mode fractions.
pub fn determinacy_diagnostic(s: &SFraction, horizon: usize) -> Result<TrendReport> {
    if let Some(i) = s.c.iter().position(|&v| v <= 0.0) {
        return Err(Error::NonPositive {
            what: "S-fraction coefficient",
            index: i + 1,
            value: s.c[i],
        });
    }
    if horizon == 0 || horizon > s.len() {
        return Err(Error::OutOfRange {
            what: "determinacy horizon",
            requested: horizon,
            available: s.len(),
        });
    }
    Ok(trend_report(s.c[..horizon].iter().copied()))
}

/// Same diagnostic applied to the even- and odd-indexed subseries
/// `c_2 + c_4 + ...` and `c_1 + c_3 + ...`.
pub fn subseries_diagnostics(s: &SFraction, horizon: usize) -> Result<(TrendReport, TrendReport)> {
    determinacy_diagnostic(s, horizon)?;
    let c = &s.c[..horizon];
    let even = trend_report(c.iter().skip(1).step_by(2).copied());
    let odd = trend_report(c.iter().step_by(2).copied());
    Ok((even, odd))
}

/// The S-fraction coefficients of the Stieltjes–Wigert weight:
/// `c_1 = q^(1/2)`, `c_2n = (q;q)_(n-1) q^n`,
/// `c_(2n+1) = q^((2n+1)/2) / (q;q)_n`.
pub fn stieltjes_wigert_sfraction(q: f64, m: usize) -> Result<SFraction> {
    if !(q > 0.0 && q < 1.0) {
        return Err(crate::error::invalid("q must lie in (0, 1)"));
    }
    let c = (1..=m)
        .map(|k| {
            let n = k / 2;
            if k % 2 == 0 {
                crate::math::q_pochhammer(q, q, n - 1) * q.powi(n as i32)
            } else {
                q.powf(k as f64 / 2.0) / crate::math::q_pochhammer(q, q, n)
            }
        })
        .collect();
    SFraction::stieltjes(c)
}

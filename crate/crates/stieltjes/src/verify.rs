//! `verify` suites. Independent cases may run on several threads; results
//! are merged by case index so the output does not depend on `--jobs`.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use clap::ValueEnum;
use serde_json::{json, Value};
use stieltjes_core::contfrac::{contract, j_convergent, s_convergent, SFraction};
use stieltjes_core::elliptic::{
    carlitz_cf_approximant, laplace_quadrature, laplace_series, paired_transform, CarlitzBranch, EllipticContext,
};
use stieltjes_core::legendre::{legendre_p, q_zeros, stieltjes_expansion};
use stieltjes_core::moments::{pade_match_check, sw_moment_identity, MomentKind, MomentSequence};
use stieltjes_core::orthopoly::{family_coeffs, zeros, Family};
use stieltjes_core::quadrature::{gap_bound_verify, gauss_rule, markov_stieltjes_verify, nested_sum_verify, posse_verify, BracketCheck};
use stieltjes_core::Complex64;

use crate::commands::{CARLITZ_TOL, LAPLACE_TOL};
use crate::envelope::{num, Check, Output};
use crate::error::{usage, CliError};
use crate::family::describe;

/// S-convergent vs contracted J-convergent.
pub const CONTRACTION_TOL: f64 = 1e-12;
/// Stieltjes–Wigert moments vs the closed form, relative.
pub const SW_TOL: f64 = 1e-8;
/// Successive Carlitz approximants at `(z, k) = (2, 0.5)`.
pub const CAUCHY_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    MarkovStieltjes,
    NestedSums,
    GapBounds,
    Posse,
    Contraction,
    Pade,
    Interlacing,
    SwMoments,
    EllipticCf,
    ExpansionBound,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::MarkovStieltjes => "markov-stieltjes",
            Suite::NestedSums => "nested-sums",
            Suite::GapBounds => "gap-bounds",
            Suite::Posse => "posse",
            Suite::Contraction => "contraction",
            Suite::Pade => "pade",
            Suite::Interlacing => "interlacing",
            Suite::SwMoments => "sw-moments",
            Suite::EllipticCf => "elliptic-cf",
            Suite::ExpansionBound => "expansion-bound",
        }
    }

    fn default_n(self) -> usize {
        match self {
            Suite::Contraction | Suite::Pade | Suite::SwMoments => 8,
            Suite::ExpansionBound | Suite::Posse => 10,
            Suite::Interlacing => 20,
            _ => 30,
        }
    }
}

/// Runs `f(0..cases)` on up to `jobs` scoped threads, in index order.
pub fn fan_out<T, F>(cases: usize, jobs: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    let jobs = jobs.clamp(1, cases.max(1));
    if jobs == 1 {
        return (0..cases).map(&f).collect();
    }
    let mut tagged: Vec<(usize, T)> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|w| {
                let f = &f;
                s.spawn(move || (w..cases).step_by(jobs).map(|i| (i, f(i))).collect::<Vec<_>>())
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("verify worker panicked")).collect()
    });
    tagged.sort_by_key(|t| t.0);
    tagged.into_iter().map(|t| t.1).collect()
}

/// One case: its checks and a JSON row for the results.
type Case = Result<(Vec<Check>, Value), String>;

fn min_slack(checks: &[BracketCheck]) -> (f64, bool) {
    let slack = checks.iter().map(|c| c.slack).fold(f64::INFINITY, f64::min);
    (slack, checks.iter().all(|c| c.holds))
}

fn bracket_case(name: String, checks: &[BracketCheck], tol: f64) -> (Vec<Check>, Value) {
    let (slack, holds) = min_slack(checks);
    let mut c = Check::strict(name, slack - tol);
    c.passed &= holds;
    (vec![c], json!({ "min_slack": num(slack), "count": checks.len() }))
}

fn contraction_coeffs(len: usize) -> Vec<f64> {
    (1..=len).map(|k| 1.0 + 0.3 * (k as f64).sin().abs() + 0.1 * k as f64).collect()
}

const Z_GRID: [(f64, f64); 6] = [(1.0, 0.0), (0.3, 0.0), (2.5, 1.0), (-0.5, 2.0), (0.1, -0.7), (5.0, 0.0)];
const SW_LAMBDAS: [f64; 5] = [-1.0, -0.5, 0.0, 0.3, 1.0];
const CF_MODULI: [f64; 3] = [0.3, 0.5, 0.7];
const CF_POINTS: [f64; 3] = [1.0, 2.0, 4.0];
const CF_TERMS: usize = 30;
const THETA_GRID: usize = 50;

pub struct VerifyArgs {
    pub suite: Suite,
    pub family: Family,
    pub n: Option<usize>,
    pub tol: Option<f64>,
    pub jobs: usize,
}

pub fn run(args: &VerifyArgs) -> Result<Output, CliError> {
    let suite = args.suite;
    let n = args.n.unwrap_or(suite.default_n());
    if n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    let f = args.family;
    let tol = args.tol;
    if tol.is_some_and(|t| !(t >= 0.0)) {
        return Err(usage("--tol must be a nonnegative number"));
    }
    let margin = tol.unwrap_or(0.0);
    let (cases, labels): (usize, Box<dyn Fn(usize) -> String + Sync>) = match suite {
        Suite::MarkovStieltjes | Suite::NestedSums | Suite::GapBounds | Suite::Contraction | Suite::Pade | Suite::Interlacing => {
            (n, Box::new(|i| format!("n={}", i + 1)))
        }
        Suite::Posse => (n, Box::new(|i| format!("k={}", i + 1))),
        Suite::SwMoments => (SW_LAMBDAS.len() * (n + 1), Box::new(move |i| format!("lambda={},k={}", SW_LAMBDAS[i / (n + 1)], i % (n + 1)))),
        Suite::EllipticCf => (CF_MODULI.len() * CF_POINTS.len() + 1, Box::new(|i| {
            if i < 9 {
                format!("k={},z={}", CF_MODULI[i / 3], CF_POINTS[i % 3])
            } else {
                "cauchy k=0.5,z=2".to_string()
            }
        })),
        Suite::ExpansionBound => (3, Box::new(|i| format!("m={}", i + 1))),
    };
    let rc = family_coeffs(f, 2 * n + 2)?;
    let run_case = |i: usize| -> Case {
        let label = labels(i);
        let e = |err: stieltjes_core::Error| err.to_string();
        match suite {
            Suite::MarkovStieltjes => {
                let rule = gauss_rule(&rc, i + 1).map_err(e)?;
                Ok(bracket_case(label, &markov_stieltjes_verify(&rule, &f.measure()).map_err(e)?, margin))
            }
            Suite::NestedSums => Ok(bracket_case(label, &nested_sum_verify(&rc, i + 1).map_err(e)?, margin)),
            Suite::GapBounds => {
                let rule = gauss_rule(&rc, i + 1).map_err(e)?;
                Ok(bracket_case(label, &gap_bound_verify(&rule, &f.measure()).map_err(e)?, margin))
            }
            Suite::Posse => {
                let rule = gauss_rule(&rc, n).map_err(e)?;
                let b = posse_verify(&rule, &f.measure(), f64::exp, i + 1).map_err(e)?;
                let mut c = Check::margin(label, b.slack - margin);
                c.passed &= b.holds;
                Ok((vec![c], json!({ "lower": num(b.lower), "middle": num(b.middle), "upper": num(b.upper) })))
            }
            Suite::Contraction => {
                let m = i + 1;
                let s = SFraction::new(contraction_coeffs(2 * m + 1)).map_err(e)?;
                let j = contract(&s).map_err(e)?;
                let mut worst: f64 = 0.0;
                for &(re, im) in &Z_GRID {
                    let z = Complex64::new(re, im);
                    let a = s_convergent(&s, z, 2 * m).map_err(e)?;
                    let b = j_convergent(&j, z, m).map_err(e)?;
                    worst = worst.max((a - b).norm() / b.norm());
                }
                Ok((vec![Check::within(label, worst, tol.unwrap_or(CONTRACTION_TOL))], json!({ "deviation": num(worst) })))
            }
            Suite::Pade => {
                let m = i + 1;
                let mu: Vec<f64> = (0..2 * n + 2).map(|k| f.exact_moment(k).unwrap_or(f64::NAN)).collect();
                if mu.iter().any(|v| !v.is_finite()) {
                    return Err("family has no closed-form moments".into());
                }
                let seq = MomentSequence::new(mu, MomentKind::Hamburger).map_err(e)?;
                let matched = pade_match_check(&rc, &seq, m).map_err(e)?;
                let slack = matched as f64 - (2 * m) as f64 - margin;
                Ok((vec![Check::margin(label, slack)], json!({ "matched": matched })))
            }
            Suite::Interlacing => {
                let m = i + 1;
                let lo = zeros(&rc, m).map_err(e)?;
                let hi = zeros(&rc, m + 1).map_err(e)?;
                let gap = (0..m).map(|k| (lo[k] - hi[k]).min(hi[k + 1] - lo[k])).fold(f64::INFINITY, f64::min);
                let mut checks = vec![Check::strict(label.clone(), gap - margin)];
                if f == Family::Legendre {
                    // q_zeros itself rejects a wrong count or broken interlacing
                    let q = q_zeros(m);
                    checks.push(Check { name: format!("q_zeros {label}"), passed: q.is_ok(), slack: None });
                }
                Ok((checks, json!({ "min_gap": num(gap) })))
            }
            Suite::SwMoments => {
                let (lambda, k) = (SW_LAMBDAS[i / (n + 1)], i % (n + 1));
                let r = sw_moment_identity(lambda, k).map_err(e)?;
                Ok((
                    vec![Check::within(label, r.relative_deviation, tol.unwrap_or(SW_TOL))],
                    json!({ "numeric": num(r.numeric), "closed_form": num(r.closed_form) }),
                ))
            }
            Suite::EllipticCf => elliptic_case(i, label, tol).map_err(e),
            Suite::ExpansionBound => {
                let m = i + 1;
                let mut worst = f64::INFINITY;
                for t in 0..THETA_GRID {
                    let theta = 0.1 + (PI - 0.2) * t as f64 / (THETA_GRID - 1) as f64;
                    let x = stieltjes_expansion(n, theta, m).map_err(e)?;
                    worst = worst.min(x.bound - (legendre_p(n, theta.cos()) - x.value).abs());
                }
                Ok((vec![Check::margin(label, worst - margin)], json!({ "min_margin": num(worst) })))
            }
        }
    };
    let outcomes = fan_out(cases, args.jobs, run_case);
    let mut checks = Vec::new();
    let mut rows = Vec::new();
    for (i, o) in outcomes.into_iter().enumerate() {
        match o {
            Ok((c, mut row)) => {
                if let Value::Object(m) = &mut row {
                    m.insert("case".into(), Value::from(labels(i)));
                }
                checks.extend(c);
                rows.push(row);
            }
            Err(msg) => {
                checks.push(Check::failed(labels(i)));
                rows.push(json!({ "case": labels(i), "error": msg }));
            }
        }
    }
    let mut p: BTreeMap<String, Value> = BTreeMap::new();
    p.insert("suite".into(), Value::from(suite.name()));
    p.insert("n".into(), Value::from(n));
    p.insert("family".into(), describe(&f));
    if let Some(t) = tol {
        p.insert("tol".into(), num(t));
    }
    Ok(Output::new(&format!("verify {}", suite.name()), p, json!({ "cases": rows }), checks))
}

fn elliptic_case(i: usize, label: String, tol: Option<f64>) -> stieltjes_core::Result<(Vec<Check>, Value)> {
    if i == CF_MODULI.len() * CF_POINTS.len() {
        let ctx = EllipticContext::new(0.5)?;
        let mut gap: f64 = 0.0;
        for branch in [CarlitzBranch::CAlpha, CarlitzBranch::DBeta] {
            let d = carlitz_cf_approximant(branch, &ctx, 2.0, CF_TERMS)? - carlitz_cf_approximant(branch, &ctx, 2.0, CF_TERMS - 1)?;
            gap = gap.max(d.abs());
        }
        return Ok((vec![Check::within(label, gap, tol.unwrap_or(CAUCHY_TOL))], json!({ "cauchy_gap": num(gap) })));
    }
    let (k, z) = (CF_MODULI[i / 3], CF_POINTS[i % 3]);
    let ctx = EllipticContext::new(k)?;
    let mut dual: f64 = 0.0;
    for idx in 1..=4 {
        let s = laplace_series(idx, z, &ctx)?;
        let q = laplace_quadrature(idx, z, &ctx)?;
        dual = dual.max(((s - q) / s).abs());
    }
    let mut matched: f64 = 0.0;
    for branch in [CarlitzBranch::CAlpha, CarlitzBranch::DBeta] {
        let v = carlitz_cf_approximant(branch, &ctx, z, CF_TERMS)?;
        let f = laplace_series(paired_transform(branch), z, &ctx)?;
        matched = matched.max(((v - f) / f).abs());
    }
    Ok((
        vec![
            Check::within(format!("dual-method {label}"), dual, tol.unwrap_or(LAPLACE_TOL)),
            Check::within(format!("carlitz {label}"), matched, tol.unwrap_or(CARLITZ_TOL)),
        ],
        json!({ "dual_method": num(dual), "carlitz": num(matched) }),
    ))
}

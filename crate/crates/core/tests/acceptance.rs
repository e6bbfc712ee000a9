//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Every tolerance is pinned below.

use std::f64::consts::PI;
use std::time::Instant;

use stieltjes_core::contfrac::{contract, j_convergent, s_convergent, subseries_diagnostics, SFraction, Trend};
use stieltjes_core::electro::{
    arcsine_distance, cdf_distance, equilibrium, freud_c, semicircle_cdf, ChargeSystem, DEFAULT_TOL,
};
use stieltjes_core::elliptic::{
    carlitz_cf_approximant, laplace_quadrature, laplace_series, paired_transform, CarlitzBranch, EllipticContext,
};
use stieltjes_core::legendre::{
    legendre_p, legendre_q_exterior, legendre_q_integral, legendre_zeros, q_zeros, stieltjes_expansion, zero_bounds,
};
use stieltjes_core::moments::{
    hankel_solvability, hausdorff_monotonicity, pade_match_check, sw_moment_identity, MomentKind, MomentSequence,
    Verdict,
};
use stieltjes_core::orthopoly::{family_coeffs, zeros, Family};
use stieltjes_core::quadrature::{gap_bound_verify, gauss_rule, kronrod_rule, markov_stieltjes_verify, nested_sum_verify};
use stieltjes_core::{Complex64, Result};

const EXACTNESS_TOL: f64 = 1e-10;
const LEGENDRE_INSTANCE_TOL: f64 = 1e-12;
const JACOBI_EQ_TOL: f64 = 1e-8;
const SCALED_EQ_TOL: f64 = 1e-6;
const CONTRACTION_TOL: f64 = 1e-12;
const SW_TOL: f64 = 1e-8;
const KRONROD_TOL: f64 = 1e-14;
const QN_TOL: f64 = 1e-8;
const DISTANCE_TOL: f64 = 0.05;
const LAPLACE_TOL: f64 = 1e-9;
const CAUCHY_TOL: f64 = 1e-10;
const CARLITZ_TOL: f64 = 1e-8;

const FAMILIES: [Family; 5] = [
    Family::Legendre,
    Family::ChebyshevT,
    Family::ChebyshevU,
    Family::Hermite,
    Family::Laguerre { alpha: 0.0 },
];

type Outcome = Result<(bool, String)>;

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for f in FAMILIES {
        let rc = family_coeffs(f, 32)?;
        for n in 1..=32 {
            let rule = gauss_rule(&rc, n)?;
            for d in 0..2 * n {
                let mu = f.exact_moment(d).expect("closed-form moment");
                let q = rule.integrate(|x| x.powi(d as i32));
                let scale = rule.integrate(|x| x.abs().powi(d as i32)).max(mu.abs());
                worst = worst.max((q - mu).abs() / scale);
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    Ok((worst <= EXACTNESS_TOL && secs < 10.0, format!("max relative deviation {worst:.2e}, {secs:.2} s")))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut min_slack = f64::INFINITY;
    let mut all = true;
    for f in FAMILIES {
        let md = f.measure();
        let rc = family_coeffs(f, 41)?;
        for n in 1..=40 {
            let rule = gauss_rule(&rc, n)?;
            let mut checks = markov_stieltjes_verify(&rule, &md)?;
            checks.extend(nested_sum_verify(&rc, n)?);
            checks.extend(gap_bound_verify(&rule, &md)?);
            for c in checks {
                all &= c.holds;
                min_slack = min_slack.min(c.slack);
            }
        }
    }
    let rule = gauss_rule(&family_coeffs(Family::Legendre, 2)?, 2)?;
    let b = markov_stieltjes_verify(&rule, &Family::Legendre.measure())?[1];
    let expect = (1.0, 1.0 + 1.0 / 3f64.sqrt(), 2.0);
    let dev = (b.lower - expect.0).abs().max((b.middle - expect.1).abs()).max((b.upper - expect.2).abs());
    let secs = start.elapsed().as_secs_f64();
    Ok((
        all && min_slack > 0.0 && dev <= LEGENDRE_INSTANCE_TOL && secs < 10.0,
        format!("min slack {min_slack:.2e}, instance deviation {dev:.1e}, {secs:.2} s"),
    ))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let pq = [0.25, 0.5, 1.0, 2.0];
    let mut jac: f64 = 0.0;
    for &p in &pq {
        for &q in &pq {
            let rc = family_coeffs(Family::Jacobi { alpha: 2.0 * p - 1.0, beta: 2.0 * q - 1.0 }, 20)?;
            for n in 1..=20 {
                let r = equilibrium(&ChargeSystem::jacobi(n, p, q)?, None, DEFAULT_TOL)?;
                let z = zeros(&rc, n)?;
                for (a, b) in r.positions.iter().zip(&z) {
                    jac = jac.max((a - b).abs());
                }
            }
        }
    }
    let mut scaled: f64 = 0.0;
    for &p in &pq {
        let big_k = 2.0;
        let rc = family_coeffs(Family::Laguerre { alpha: 2.0 * p - 1.0 }, 12)?;
        for n in 1..=12 {
            let r = equilibrium(&ChargeSystem::laguerre(n, p, big_k)?, None, DEFAULT_TOL)?;
            let c = (n as f64 + 2.0 * p - 1.0) / big_k;
            for (a, b) in r.positions.iter().zip(zeros(&rc, n)?) {
                scaled = scaled.max((a - b / c).abs());
            }
        }
    }
    let rc = family_coeffs(Family::Hermite, 12)?;
    for l in [0.5, 1.0, 3.0] {
        for n in 2..=12 {
            let r = equilibrium(&ChargeSystem::hermite(n, l)?, None, DEFAULT_TOL)?;
            let d = ((n as f64 - 1.0) / (2.0 * l)).sqrt();
            for (a, b) in r.positions.iter().zip(zeros(&rc, n)?) {
                scaled = scaled.max((a - b / d).abs());
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    Ok((
        jac <= JACOBI_EQ_TOL && scaled <= SCALED_EQ_TOL && secs < 60.0,
        format!("Jacobi max error {jac:.2e}, Laguerre/Hermite max error {scaled:.2e}, {secs:.2} s"),
    ))
}

fn criterion_4() -> Outcome {
    let c: Vec<f64> = (1..=17).map(|k| 1.0 + 0.3 * (k as f64).sin().abs() + 0.1 * k as f64).collect();
    let grid = [
        Complex64::new(1.0, 0.0),
        Complex64::new(0.3, 0.0),
        Complex64::new(2.5, 1.0),
        Complex64::new(-0.5, 2.0),
        Complex64::new(0.1, -0.7),
        Complex64::new(5.0, 0.0),
    ];
    let mut worst: f64 = 0.0;
    for n in 1..=8 {
        let s = SFraction::new(c[..2 * n + 1].to_vec())?;
        let j = contract(&s)?;
        for &z in &grid {
            let a = s_convergent(&s, z, 2 * n)?;
            let b = j_convergent(&j, z, n)?;
            worst = worst.max((a - b).norm() / b.norm());
        }
    }
    let mut pade_ok = true;
    let mut min_surplus = i64::MAX;
    for f in [Family::Laguerre { alpha: 0.0 }, Family::Legendre, Family::Hermite] {
        let rc = family_coeffs(f, 8)?;
        let mu: Vec<f64> = (0..=17).map(|k| f.exact_moment(k).expect("moment")).collect();
        let m = MomentSequence::new(mu, MomentKind::Hamburger)?;
        for n in 1..=8 {
            let matched = pade_match_check(&rc, &m, n)?;
            pade_ok &= matched >= 2 * n;
            min_surplus = min_surplus.min(matched as i64 - 2 * n as i64);
        }
    }
    Ok((
        worst <= CONTRACTION_TOL && pade_ok,
        format!("contraction deviation {worst:.2e}, Pade matches minus 2n at least {min_surplus}"),
    ))
}

fn criterion_5() -> Outcome {
    let mut worst: f64 = 0.0;
    for lambda in [-1.0, -0.5, 0.0, 0.3, 1.0] {
        for k in 0..=8 {
            worst = worst.max(sw_moment_identity(lambda, k)?.relative_deviation);
        }
    }
    let s = stieltjes_wigert::sfraction()?;
    let (even, odd) = subseries_diagnostics(&s, s.len())?;
    let level = even.trend == Trend::Leveling && odd.trend == Trend::Leveling;
    Ok((
        worst <= SW_TOL && level,
        format!("max relative deviation {worst:.2e}, subseries trends {:?}/{:?}", even.trend, odd.trend),
    ))
}

mod stieltjes_wigert {
    use super::*;
    pub fn sfraction() -> Result<SFraction> {
        stieltjes_core::contfrac::stieltjes_wigert_sfraction((-0.5f64).exp(), 80)
    }
}

fn criterion_6() -> Outcome {
    let rc = family_coeffs(Family::Legendre, 40)?;
    let mut ok = true;
    let mut min_surplus = i64::MAX;
    for n in 1..=10 {
        let k = kronrod_rule(&rc, n)?;
        ok &= k.exactness >= 3 * n + 1;
        min_surplus = min_surplus.min(k.exactness as i64 - (3 * n + 1) as i64);
    }
    let k = kronrod_rule(&rc, 1)?;
    let s = 0.6f64.sqrt();
    let want_x = [-s, 0.0, s];
    let want_w = [5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0];
    let dev = (0..3)
        .map(|i| (k.nodes[i] - want_x[i]).abs().max((k.weights[i] - want_w[i]).abs()))
        .fold(0.0, f64::max);
    Ok((
        ok && dev <= KRONROD_TOL,
        format!("exactness minus (3n+1) at least {min_surplus}, n = 1 deviation {dev:.1e}"),
    ))
}

fn criterion_7() -> Outcome {
    let mut ok = true;
    let mut min_margin = f64::INFINITY;
    for n in [10, 50] {
        for m in 1..=3 {
            for i in 0..50 {
                let theta = 0.1 + (PI - 0.2) * i as f64 / 49.0;
                let e = stieltjes_expansion(n, theta, m)?;
                let err = (legendre_p(n, theta.cos()) - e.value).abs();
                ok &= err <= e.bound;
                min_margin = min_margin.min(e.bound - err);
            }
        }
    }
    let mut brackets = true;
    for n in 1..=20 {
        let z = legendre_zeros(n)?;
        for k in 1..=n {
            let b = zero_bounds(n, k)?;
            let x = z[k - 1];
            brackets &= b.bruns.0 < x && x < b.bruns.1;
            if let Some(s) = b.stieltjes {
                brackets &= s.0 < x && x < s.1;
            }
        }
    }
    Ok((ok && brackets, format!("min bound margin {min_margin:.2e}, brackets contain zeros: {brackets}")))
}

fn criterion_8() -> Outcome {
    let mut counts = true;
    for n in 0..=20 {
        // q_zeros fails on a wrong count or broken interlacing
        counts &= q_zeros(n)?.len() == n + 1;
    }
    let mut worst: f64 = 0.0;
    for n in 0..=5 {
        worst = worst.max((legendre_q_exterior(n, 2.0)? - legendre_q_integral(n, 2.0)?).abs());
    }
    Ok((counts && worst <= QN_TOL, format!("counts and interlacing ok: {counts}, max |closed - integral| {worst:.2e}")))
}

fn criterion_9() -> Outcome {
    let mut ok = true;
    let mut detail = String::new();
    for (p, q) in [(0.25, 0.25), (1.0, 1.0)] {
        let f = Family::Jacobi { alpha: 2.0 * p - 1.0, beta: 2.0 * q - 1.0 };
        let rc = family_coeffs(f, 200)?;
        let d: Vec<f64> = [25, 50, 100, 200]
            .iter()
            .map(|&n| arcsine_distance(&zeros(&rc, n)?))
            .collect::<Result<_>>()?;
        ok &= d[3] <= DISTANCE_TOL && d.windows(2).all(|w| w[1] <= w[0]);
        detail += &format!("(p,q)=({p},{q}) {:.4}/{:.4}/{:.4}/{:.4}; ", d[0], d[1], d[2], d[3]);
    }
    let n = 200;
    let scale = freud_c(2.0) * (n as f64).sqrt();
    let z: Vec<f64> = zeros(&family_coeffs(Family::Hermite, n)?, n)?.iter().map(|x| x / scale).collect();
    let h = cdf_distance(&z, semicircle_cdf);
    ok &= h <= DISTANCE_TOL;
    detail += &format!("Hermite semicircle distance {h:.4}");
    Ok((ok, detail))
}

fn criterion_10() -> Outcome {
    let points = [1.0, 2.0, 4.0];
    let moduli = [0.3, 0.5, 0.7];
    let mut dual: f64 = 0.0;
    let mut grid_gap: f64 = 0.0;
    let mut matched: f64 = 0.0;
    for &k in &moduli {
        let ctx = EllipticContext::new(k)?;
        for &z in &points {
            for i in 1..=4 {
                let s = laplace_series(i, z, &ctx)?;
                let q = laplace_quadrature(i, z, &ctx)?;
                dual = dual.max(((s - q) / s).abs());
            }
            for branch in [CarlitzBranch::CAlpha, CarlitzBranch::DBeta] {
                let c30 = carlitz_cf_approximant(branch, &ctx, z, 30)?;
                let c29 = carlitz_cf_approximant(branch, &ctx, z, 29)?;
                grid_gap = grid_gap.max((c30 - c29).abs());
                let f = laplace_series(paired_transform(branch), z, &ctx)?;
                matched = matched.max(((c30 - f) / f).abs());
            }
        }
    }
    // the Cauchy gap is pinned at (z, k) = (2, 0.5); the grid maximum is reported only
    let ctx = EllipticContext::new(0.5)?;
    let mut cauchy: f64 = 0.0;
    for branch in [CarlitzBranch::CAlpha, CarlitzBranch::DBeta] {
        let gap = carlitz_cf_approximant(branch, &ctx, 2.0, 30)? - carlitz_cf_approximant(branch, &ctx, 2.0, 29)?;
        cauchy = cauchy.max(gap.abs());
    }
    Ok((
        dual <= LAPLACE_TOL && cauchy < CAUCHY_TOL && matched <= CARLITZ_TOL,
        format!(
            "dual-method {dual:.2e}, Cauchy gap at (2, 0.5) {cauchy:.2e} (grid max {grid_gap:.2e}), paired-transform deviation {matched:.2e}"
        ),
    ))
}

fn criterion_11() -> Outcome {
    let fact: Vec<f64> = (0..=16).map(|k| (1..=k).map(|i| i as f64).product()).collect();
    let s = hankel_solvability(&MomentSequence::new(fact, MomentKind::Stieltjes)?)?;
    let fact_ok = s.passes();
    let herm: Vec<f64> = (0..=16).map(|k| Family::Hermite.exact_moment(k).expect("moment")).collect();
    let ham = hankel_solvability(&MomentSequence::new(herm.clone(), MomentKind::Hamburger)?)?;
    let sti = hankel_solvability(&MomentSequence::new(herm, MomentKind::Stieltjes)?)?;
    let shifted = sti.shifted.as_ref().map(|r| r.verdict);
    let herm_ok = ham.passes() && shifted == Some(Verdict::FailedAt(1));
    let harmonic: Vec<f64> = (0..=20).map(|n| 1.0 / (n as f64 + 1.0)).collect();
    let acc = hausdorff_monotonicity(&MomentSequence::hausdorff(harmonic, (0.0, 1.0))?, 20)?;
    let pow: Vec<f64> = (0..=20).map(|n| 2f64.powi(n)).collect();
    let rej = hausdorff_monotonicity(&MomentSequence::hausdorff(pow, (0.0, 1.0))?, 20)?;
    let haus_ok = acc.consistent && !rej.consistent;
    Ok((
        fact_ok && herm_ok && haus_ok,
        format!("k! passes: {fact_ok}; Hermite Hamburger pass, shifted {shifted:?}; Hausdorff 1/(n+1) {} 2^n {}", acc.consistent, rej.consistent),
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("Gauss exactness", criterion_1),
        ("Markov-Stieltjes suite", criterion_2),
        ("electrostatics vs zeros", criterion_3),
        ("contraction and Pade", criterion_4),
        ("Stieltjes-Wigert indeterminacy", criterion_5),
        ("Kronrod exactness", criterion_6),
        ("Legendre asymptotics and brackets", criterion_7),
        ("Q_n zeros", criterion_8),
        ("zero-distribution laws", criterion_9),
        ("elliptic continued fractions", criterion_10),
        ("moment solvability", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let (pass, detail) = match run() {
            Ok(v) => v,
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failed += 1;
        }
        println!("{} [{}] {name}: {detail}", if pass { "PASS" } else { "FAIL" }, i + 1);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

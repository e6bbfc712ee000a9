//! Non-verify subcommands. Each builds an [`Output`]; no numerics live here.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;
use serde_json::{json, Value};
use stieltjes_core::electro::{equilibrium, selberg, ChargeSystem, Constraint};
use stieltjes_core::elliptic::{
    carlitz_cf_approximant, complete_k_quadrature, jacobi_elliptic, laplace_quadrature, laplace_series,
    paired_transform, CarlitzBranch, EllipticContext,
};
use stieltjes_core::legendre::{legendre_p, stieltjes_expansion};
use stieltjes_core::moments::{
    carleman_diagnostic, hankel_solvability_with, hausdorff_monotonicity, MomentKind, MomentSequence, Precision,
    SolvabilityReport, Verdict,
};
use stieltjes_core::orthopoly::{family_coeffs, zeros, Family};
use stieltjes_core::quadrature::{gauss_rule, gauss_weights, kronrod_rule, WEIGHT_CROSS_CHECK};

use crate::envelope::{cell, num, nums, Check, Output, Table};
use crate::error::{usage, CliError};
use crate::family::describe;

/// Equilibria against Jacobi zeros.
pub const JACOBI_EQ_TOL: f64 = 1e-8;
/// Equilibria against scaled Laguerre and Hermite zeros.
pub const SCALED_EQ_TOL: f64 = 1e-6;
/// Series vs quadrature for the complete integral `K`.
pub const K_TOL: f64 = 1e-12;
/// Series vs quadrature for the Laplace transforms.
pub const LAPLACE_TOL: f64 = 1e-9;
/// Carlitz approximant vs the paired transform.
pub const CARLITZ_TOL: f64 = 1e-8;
/// `sn^2 + cn^2 = 1` and `dn^2 + k^2 sn^2 = 1`.
pub const PYTHAGORAS_TOL: f64 = 1e-13;

type Params = BTreeMap<String, Value>;

fn params(pairs: &[(&str, Value)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn rule_table(nodes: &[f64], weights: &[f64]) -> Table {
    let mut t = Table::new(&["node", "weight"]);
    for (x, w) in nodes.iter().zip(weights) {
        t.push(vec![cell(*x), cell(*w)]);
    }
    t
}

pub fn gauss(family: Family, n: usize) -> Result<Output, CliError> {
    if n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    // certification by the orthonormal basis needs degrees up to 2n - 1
    let rc = family_coeffs(family, 2 * n)?;
    let gw = gauss_weights(&rc, n)?;
    let rule = gauss_rule(&rc, n)?;
    let (_, discrepancy) = gw.max_discrepancy();
    let checks = vec![
        Check::margin("exactness", rule.exactness as f64 - (2 * n - 1) as f64),
        Check::within("weight_cross_check", discrepancy, WEIGHT_CROSS_CHECK),
        Check::strict("positive_weights", rule.weights.iter().copied().fold(f64::INFINITY, f64::min)),
    ];
    let results = json!({
        "nodes": nums(&rule.nodes),
        "weights": nums(&rule.weights),
        "exactness": rule.exactness,
        "measure": describe(&family),
    });
    let p = params(&[("family", Value::from(family.name())), ("n", Value::from(n))]);
    Ok(Output::new("gauss", p, results, checks).with_table(rule_table(&rule.nodes, &rule.weights)))
}

pub fn kronrod(family: Family, n: usize) -> Result<Output, CliError> {
    if n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    let rc = family_coeffs(family, 4 * n + 4)?;
    let k = kronrod_rule(&rc, n)?;
    let checks = vec![
        Check::margin("exactness", k.exactness as f64 - (3 * n + 1) as f64),
        Check::strict("positive_weights", k.weights.iter().copied().fold(f64::INFINITY, f64::min)),
    ];
    let results = json!({
        "nodes": nums(&k.nodes),
        "weights": nums(&k.weights),
        "gauss_nodes": nums(&k.gauss_nodes),
        "added_nodes": nums(&k.added_nodes),
        "exactness": k.exactness,
        "condition": num(k.condition),
        "measure": describe(&family),
    });
    let p = params(&[("family", Value::from(family.name())), ("n", Value::from(n))]);
    Ok(Output::new("kronrod", p, results, checks).with_table(rule_table(&k.nodes, &k.weights)))
}

pub fn zeros_cmd(family: Family, n: usize) -> Result<Output, CliError> {
    if n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    let z = zeros(&family_coeffs(family, n)?, n)?;
    let mut t = Table::new(&["index", "zero"]);
    for (i, x) in z.iter().enumerate() {
        t.push(vec![(i + 1).to_string(), cell(*x)]);
    }
    let results = json!({ "zeros": nums(&z), "measure": describe(&family) });
    let p = params(&[("family", Value::from(family.name())), ("n", Value::from(n))]);
    Ok(Output::new("zeros", p, results, Vec::new()).with_table(t))
}

/// Moment document read by `moments check`.
#[derive(Debug, Clone, Deserialize)]
pub struct MomentFile {
    pub kind: String,
    pub moments: Vec<f64>,
    #[serde(default)]
    pub interval: Option<[f64; 2]>,
}

pub fn parse_kind(s: &str) -> Result<MomentKind, CliError> {
    match s.to_ascii_lowercase().as_str() {
        "stieltjes" => Ok(MomentKind::Stieltjes),
        "hamburger" => Ok(MomentKind::Hamburger),
        "hausdorff" => Ok(MomentKind::Hausdorff),
        other => Err(usage(format!("unknown moment kind `{other}`"))),
    }
}

fn report_json(r: &SolvabilityReport) -> Value {
    let verdict = match r.verdict {
        Verdict::PositiveDefinite => Value::from("positive-definite"),
        Verdict::FailedAt(l) => json!({ "failed_at": l }),
    };
    json!({
        "verdict": verdict,
        "level_reached": r.level_reached,
        "pivots": nums(&r.pivots),
        "ill_conditioned": r.ill_conditioned,
    })
}

fn report_check(name: &str, r: &SolvabilityReport) -> Check {
    let min_pivot = r.pivots.iter().copied().fold(f64::INFINITY, f64::min);
    match r.verdict {
        Verdict::PositiveDefinite => Check { name: name.into(), passed: true, slack: min_pivot.is_finite().then_some(min_pivot) },
        Verdict::FailedAt(_) => Check { name: name.into(), passed: false, slack: min_pivot.is_finite().then_some(min_pivot) },
    }
}

pub fn moments_check(path: &Path, kind: Option<&str>, precision: Precision) -> Result<Output, CliError> {
    let text = std::fs::read_to_string(path)?;
    let doc: MomentFile = serde_json::from_str(&text).map_err(|e| usage(format!("bad moment file: {e}")))?;
    let kind = parse_kind(kind.unwrap_or(&doc.kind))?;
    let seq = match (kind, doc.interval) {
        (MomentKind::Hausdorff, Some([a, b])) => MomentSequence::hausdorff(doc.moments.clone(), (a, b))?,
        _ => MomentSequence::new(doc.moments.clone(), kind)?,
    };
    let s = hankel_solvability_with(&seq, precision)?;
    let mut checks = vec![report_check("hankel", &s.unshifted)];
    let mut results = serde_json::Map::new();
    results.insert("unshifted".into(), report_json(&s.unshifted));
    if let Some(sh) = &s.shifted {
        checks.push(report_check("hankel_shifted", sh));
        results.insert("shifted".into(), report_json(sh));
    }
    if kind == MomentKind::Hausdorff {
        let h = hausdorff_monotonicity(&seq, seq.len() - 1)?;
        checks.push(Check { name: "hausdorff_monotonicity".into(), passed: h.consistent, slack: Some(h.min_value) });
        results.insert(
            "hausdorff".into(),
            json!({
                "min_value": num(h.min_value),
                "min_at": [h.min_at.0, h.min_at.1],
                "violation": h.violation.map(|(k, n)| json!([k, n])),
                "consistent": h.consistent,
            }),
        );
    }
    if kind != MomentKind::Hausdorff && seq.len() >= 3 {
        let c = carleman_diagnostic(&seq, (seq.len() - 1) / 2)?;
        results.insert(
            "carleman".into(),
            json!({ "partial_sum": num(c.partial_sum), "trend": format!("{:?}", c.trend).to_lowercase() }),
        );
    }
    let p = params(&[
        ("file", Value::from(path.display().to_string())),
        ("kind", Value::from(format!("{kind:?}").to_lowercase())),
        ("count", Value::from(seq.len())),
    ]);
    Ok(Output::new("moments check", p, Value::Object(results), checks))
}

/// Parsed `--constraint` value.
pub fn parse_constraint(s: Option<&str>) -> Result<Constraint, CliError> {
    let Some(s) = s else { return Ok(Constraint::None) };
    let (kind, value) = s.split_once(':').ok_or_else(|| usage("--constraint must be centroid:K or inertia:L"))?;
    let v: f64 = value.parse().map_err(|_| usage("constraint bound is not a number"))?;
    match kind {
        "centroid" => Ok(Constraint::CentroidMax(v)),
        "inertia" => Ok(Constraint::InertiaMax(v)),
        other => Err(usage(format!("unknown constraint `{other}`"))),
    }
}

/// Jacobi charges without a constraint, a Laguerre charge `p` at the origin
/// with a centroid bound, free Hermite charges with an inertia bound.
pub fn electro(n: usize, p: Option<f64>, q: Option<f64>, constraint: Constraint, tol: f64) -> Result<Output, CliError> {
    let (p_val, q_val) = (p, q);
    let need = |v: Option<f64>, flag: &str| v.ok_or_else(|| usage(format!("{flag} is required for this system")));
    let (system, family, scale, ref_tol) = match constraint {
        Constraint::None => {
            let (p, q) = (need(p, "--p")?, need(q, "--q")?);
            (ChargeSystem::jacobi(n, p, q)?, Family::Jacobi { alpha: 2.0 * p - 1.0, beta: 2.0 * q - 1.0 }, 1.0, JACOBI_EQ_TOL)
        }
        Constraint::CentroidMax(k) => {
            let p = need(p, "--p")?;
            let c = (n as f64 + 2.0 * p - 1.0) / k;
            (ChargeSystem::laguerre(n, p, k)?, Family::Laguerre { alpha: 2.0 * p - 1.0 }, c, SCALED_EQ_TOL)
        }
        Constraint::InertiaMax(l) => {
            let d = ((n as f64 - 1.0) / (2.0 * l)).sqrt();
            (ChargeSystem::hermite(n, l)?, Family::Hermite, d, SCALED_EQ_TOL)
        }
    };
    let r = equilibrium(&system, None, tol)?;
    let mut checks = vec![Check::within("stationarity", r.grad_norm, tol)];
    let reference: Vec<f64> = zeros(&family_coeffs(family, n)?, n)?.iter().map(|z| z / scale).collect();
    if reference.iter().all(|z| z.is_finite()) {
        let err = r.positions.iter().zip(&reference).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        checks.push(Check::within("matches_scaled_zeros", err, ref_tol));
    }
    let mut t = Table::new(&["index", "position"]);
    for (i, x) in r.positions.iter().enumerate() {
        t.push(vec![(i + 1).to_string(), cell(*x)]);
    }
    let results = json!({
        "positions": nums(&r.positions),
        "energy": num(r.energy),
        "grad_norm": num(r.grad_norm),
        "multiplier": r.multiplier.map(num),
        "iterations": r.iterations,
        "outward": r.outward,
        "reference_family": describe(&family),
    });
    let mut p = params(&[("n", Value::from(n)), ("tol", num(tol))]);
    for (key, v) in [("p", p_val), ("q", q_val)] {
        if let Some(v) = v {
            p.insert(key.into(), num(v));
        }
    }
    match constraint {
        Constraint::None => {}
        Constraint::CentroidMax(k) => {
            p.insert("constraint".into(), Value::from(format!("centroid:{}", cell(k))));
        }
        Constraint::InertiaMax(l) => {
            p.insert("constraint".into(), Value::from(format!("inertia:{}", cell(l))));
        }
    }
    Ok(Output::new("electro", p, results, checks).with_table(t))
}

pub fn asymptotic_legendre(n: usize, theta: f64, m: usize) -> Result<Output, CliError> {
    let e = stieltjes_expansion(n, theta, m)?;
    let exact = legendre_p(n, theta.cos());
    let err = (exact - e.value).abs();
    let checks = vec![Check::margin("remainder_bound", e.bound - err)];
    let results = json!({
        "p_n": num(exact),
        "expansion": num(e.value),
        "error": num(err),
        "bound": num(e.bound),
        "prefactor": num(e.prefactor),
    });
    let p = params(&[("n", Value::from(n)), ("theta", num(theta)), ("m", Value::from(m))]);
    Ok(Output::new("asymptotic legendre", p, results, checks))
}

pub fn elliptic_k(k: f64) -> Result<Output, CliError> {
    let ctx = EllipticContext::new(k)?;
    let quad = complete_k_quadrature(k)?;
    let checks = vec![Check::within("agm_vs_quadrature", ((ctx.big_k - quad) / ctx.big_k).abs(), K_TOL)];
    let results = json!({
        "K": num(ctx.big_k),
        "K_prime": num(ctx.big_k_prime),
        "K_quadrature": num(quad),
        "nome": num(ctx.nome),
        "convention": format!("{:?}", ctx.convention).to_lowercase(),
        "fourier_discrepancy": num(ctx.fourier_discrepancy()),
    });
    Ok(Output::new("elliptic k", params(&[("k", num(k))]), results, checks))
}

pub fn elliptic_fn(k: f64, u: f64) -> Result<Output, CliError> {
    let ctx = EllipticContext::new(k)?;
    let (sn, cn, dn) = jacobi_elliptic(u, &ctx)?;
    let checks = vec![
        Check::within("sn2_plus_cn2", (sn * sn + cn * cn - 1.0).abs(), PYTHAGORAS_TOL),
        Check::within("dn2_plus_k2sn2", (dn * dn + k * k * sn * sn - 1.0).abs(), PYTHAGORAS_TOL),
    ];
    let results = json!({ "sn": num(sn), "cn": num(cn), "dn": num(dn) });
    Ok(Output::new("elliptic fn", params(&[("k", num(k)), ("u", num(u))]), results, checks))
}

pub fn elliptic_laplace(k: f64, z: f64) -> Result<Output, CliError> {
    let ctx = EllipticContext::new(k)?;
    let mut checks = Vec::new();
    let mut rows = Vec::new();
    let mut t = Table::new(&["index", "series", "quadrature"]);
    for i in 1..=4 {
        let s = laplace_series(i, z, &ctx)?;
        let q = laplace_quadrature(i, z, &ctx)?;
        checks.push(Check::within(format!("F{i}_dual_method"), ((s - q) / s).abs(), LAPLACE_TOL));
        rows.push(json!({ "index": i, "series": num(s), "quadrature": num(q) }));
        t.push(vec![i.to_string(), cell(s), cell(q)]);
    }
    let results = json!({ "transforms": rows });
    Ok(Output::new("elliptic laplace", params(&[("k", num(k)), ("z", num(z))]), results, checks).with_table(t))
}

pub fn elliptic_cf(k: f64, z: f64, terms: usize) -> Result<Output, CliError> {
    if terms < 2 {
        return Err(usage("--terms must be at least 2"));
    }
    let ctx = EllipticContext::new(k)?;
    let mut checks = Vec::new();
    let mut rows = Vec::new();
    for (name, branch) in [("c_alpha", CarlitzBranch::CAlpha), ("d_beta", CarlitzBranch::DBeta)] {
        let v = carlitz_cf_approximant(branch, &ctx, z, terms)?;
        let prev = carlitz_cf_approximant(branch, &ctx, z, terms - 1)?;
        let i = paired_transform(branch);
        let f = laplace_series(i, z, &ctx)?;
        checks.push(Check::within(format!("{name}_matches_F{i}"), ((v - f) / f).abs(), CARLITZ_TOL));
        rows.push(json!({
            "branch": name,
            "approximant": num(v),
            "cauchy_gap": num((v - prev).abs()),
            "paired_transform": i,
            "transform_value": num(f),
        }));
    }
    let results = json!({ "branches": rows });
    let p = params(&[("k", num(k)), ("z", num(z)), ("terms", Value::from(terms))]);
    Ok(Output::new("elliptic cf", p, results, checks))
}

pub fn selberg_cmd(n: usize, x: f64, y: f64, z: f64) -> Result<Output, CliError> {
    let v = selberg(n, x, y, z)?;
    let p = params(&[("n", Value::from(n)), ("x", num(x)), ("y", num(y)), ("z", num(z))]);
    Ok(Output::new("selberg", p, json!({ "value": num(v) }), Vec::new()))
}

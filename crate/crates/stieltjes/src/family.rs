//! Parsing of family names and `--params` lists.

use std::collections::BTreeMap;

use serde_json::Value;
use stieltjes_core::orthopoly::Family;

use crate::envelope::num;
use crate::error::{usage, CliError};

/// Parsed `key=value` pairs from `--params`; Greek letters are accepted as
/// aliases of `alpha` and `beta`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Params(pub BTreeMap<String, f64>);

impl Params {
    pub fn parse(text: Option<&str>) -> Result<Self, CliError> {
        let mut map = BTreeMap::new();
        let Some(text) = text else { return Ok(Params(map)) };
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item.split_once('=').ok_or_else(|| usage(format!("parameter `{item}` is not key=value")))?;
            let key = match key.trim() {
                "α" | "alpha" | "a" => "alpha",
                "β" | "beta" | "b" => "beta",
                "q" => "q",
                "k" => "k",
                other => return Err(usage(format!("unknown parameter `{other}`"))),
            };
            let v: f64 = value.trim().parse().map_err(|_| usage(format!("parameter `{key}` is not a number")))?;
            map.insert(key.to_string(), v);
        }
        Ok(Params(map))
    }

    fn get(&self, key: &str, default: Option<f64>) -> Result<f64, CliError> {
        self.0.get(key).copied().or(default).ok_or_else(|| usage(format!("this family needs --params {key}=...")))
    }
}

pub const FAMILY_NAMES: &str =
    "legendre, chebyshev-t, chebyshev-u, hermite, laguerre, jacobi, stieltjes-wigert, carlitz-c, carlitz-d";

/// Family from its name and parameters. Jacobi and Laguerre default to
/// zero parameters; `q` and `k` are required where they apply.
pub fn parse_family(name: &str, params: &Params) -> Result<Family, CliError> {
    let f = match name.to_ascii_lowercase().replace('_', "-").as_str() {
        "legendre" => Family::Legendre,
        "chebyshev-t" => Family::ChebyshevT,
        "chebyshev-u" => Family::ChebyshevU,
        "hermite" => Family::Hermite,
        "laguerre" => Family::Laguerre { alpha: params.get("alpha", Some(0.0))? },
        "jacobi" => Family::Jacobi { alpha: params.get("alpha", Some(0.0))?, beta: params.get("beta", Some(0.0))? },
        "stieltjes-wigert" => Family::StieltjesWigert { q: params.get("q", None)? },
        "carlitz-c" => Family::CarlitzC { k: params.get("k", None)? },
        "carlitz-d" => Family::CarlitzD { k: params.get("k", None)? },
        other => return Err(usage(format!("unknown family `{other}`; expected one of {FAMILY_NAMES}"))),
    };
    f.validate().map_err(|e| usage(e.to_string()))?;
    Ok(f)
}

/// JSON description of a family and its measure.
pub fn describe(f: &Family) -> Value {
    let (a, b) = f.support();
    let mut m = serde_json::Map::new();
    m.insert("family".into(), Value::from(f.name()));
    match *f {
        Family::Jacobi { alpha, beta } => {
            m.insert("alpha".into(), num(alpha));
            m.insert("beta".into(), num(beta));
        }
        Family::Laguerre { alpha } => {
            m.insert("alpha".into(), num(alpha));
        }
        Family::StieltjesWigert { q } => {
            m.insert("q".into(), num(q));
        }
        Family::CarlitzC { k } | Family::CarlitzD { k } => {
            m.insert("k".into(), num(k));
        }
        _ => {}
    }
    m.insert("mass".into(), num(f.mass()));
    m.insert("support".into(), Value::Array(vec![num(a), num(b)]));
    Value::Object(m)
}

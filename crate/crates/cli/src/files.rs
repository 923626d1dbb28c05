//! Input handling: germs from flags, rings and ideals from JSON.

use std::path::Path;

use hsbetti::complexes::{generalized_koszul, koszul, GenKoszulSpec, KoszulSpec};
use hsbetti::polyring::{
    parse_weight, Degree, MonomialOrder, Polynomial, Ring, RingSpec, Variable,
};
use hsbetti::resolution::{
    betti_table, minimalize, resolve, resolve_with, FreeComplex, MatrixMap, Strategy,
};
use hsbetti::singularity::SingularityInput;
use hsbetti::{Error, Result};
use serde::Deserialize;
use serde_json::{json, Value};

/// Largest `k` such that `xk` occurs in `poly`.
fn max_x_index(poly: &str) -> usize {
    let b = poly.as_bytes();
    let mut best = 0;
    for (i, _) in poly.match_indices('x') {
        let digits: String = b[i + 1..]
            .iter()
            .take_while(|c| c.is_ascii_digit())
            .map(|&c| c as char)
            .collect();
        if let Ok(k) = digits.parse::<usize>() {
            best = best.max(k);
        }
    }
    best
}

pub fn germ(poly: &str, n: Option<usize>, weights: Option<&[String]>) -> Result<SingularityInput> {
    let weights = weights
        .map(|ws| {
            ws.iter()
                .map(|w| parse_weight(w))
                .collect::<Result<Vec<_>>>()
        })
        .transpose()?;
    let n = match (n, &weights) {
        (Some(n), Some(w)) if n != w.len() => {
            return Err(Error::InvalidInput(format!(
                "--n {n} but {} weights given",
                w.len()
            )));
        }
        (Some(n), _) => n,
        (None, Some(w)) => w.len(),
        (None, None) => max_x_index(poly),
    };
    if n == 0 {
        return Err(Error::InvalidInput(
            "cannot infer the number of variables; pass --n".into(),
        ));
    }
    SingularityInput::parse(n, poly, weights)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RingJson {
    vars: Vec<String>,
    #[serde(default)]
    f_weights: Option<Vec<i64>>,
    #[serde(default)]
    v_weights: Option<Vec<i64>>,
    #[serde(default)]
    w_weights: Option<Vec<String>>,
}

impl RingJson {
    fn build(&self) -> Result<Ring> {
        let n = self.vars.len();
        let check = |name: &str, len: Option<usize>| match len {
            Some(l) if l != n => Err(Error::InvalidInput(format!(
                "{name} has {l} entries for {n} variables"
            ))),
            _ => Ok(()),
        };
        check("f_weights", self.f_weights.as_ref().map(Vec::len))?;
        check("v_weights", self.v_weights.as_ref().map(Vec::len))?;
        check("w_weights", self.w_weights.as_ref().map(Vec::len))?;
        let w = self
            .w_weights
            .as_ref()
            .map(|ws| {
                ws.iter()
                    .map(|s| parse_weight(s))
                    .collect::<Result<Vec<_>>>()
            })
            .transpose()?;
        let vars = (0..n)
            .map(|i| {
                Variable::new(
                    self.vars[i].clone(),
                    self.f_weights.as_ref().map_or(0, |f| f[i]),
                    self.v_weights.as_ref().map_or(0, |v| v[i]),
                    w.as_ref().map(|w| w[i]),
                )
            })
            .collect();
        RingSpec::new(vars, MonomialOrder::Graded)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IdealJson {
    ring: RingJson,
    generators: Vec<String>,
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn polys(ring: &Ring, src: &[String]) -> Result<Vec<Polynomial>> {
    src.iter().map(|s| Polynomial::parse(ring, s)).collect()
}

pub fn read_ideal(path: &Path) -> Result<Vec<Polynomial>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    let j: IdealJson = parse_json(&text)?;
    let ring = j.ring.build()?;
    let gens = polys(&ring, &j.generators)?;
    if gens.is_empty() {
        return Err(Error::InvalidInput("the ideal has no generators".into()));
    }
    Ok(gens)
}

/// With `minimal`, the Betti table of the minimal resolution; otherwise the
/// ranks of a resolution started from a Groebner basis.
pub fn resolve_ideal(gens: &[Polynomial], minimal: bool) -> Result<Value> {
    let p = MatrixMap::presentation(gens)?;
    let len = p.ring().nvars() + 1;
    if minimal {
        let c = minimalize(&resolve(&p, len)?)?;
        let t = betti_table(&c)?;
        Ok(json!({ "minimal": true, "ranks": t.betti(), "table": t.to_json() }))
    } else {
        let c = resolve_with(&p, len, Strategy::GroebnerCover)?;
        Ok(json!({ "minimal": false, "ranks": c.ranks() }))
    }
}

pub fn print_resolution(v: &Value) {
    println!("ranks: {}", v["ranks"]);
    if let Some(rows) = v["table"]["shifts"].as_array() {
        for (i, row) in rows.iter().enumerate() {
            println!("{i}: {row}");
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct KoszulJson {
    ring: RingJson,
    elements: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GenKoszulJson {
    ring: RingJson,
    rows: [Vec<String>; 2],
    #[serde(default)]
    t: i64,
    #[serde(default)]
    q: i64,
}

/// `params` is a JSON object, or `@FILE`.
pub fn build_complex(general: bool, params: &str) -> Result<FreeComplex> {
    let text = match params.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))?,
        None => params.to_string(),
    };
    if general {
        let j: GenKoszulJson = parse_json(&text)?;
        let ring = j.ring.build()?;
        let rows = [polys(&ring, &j.rows[0])?, polys(&ring, &j.rows[1])?];
        generalized_koszul(&GenKoszulSpec {
            rows,
            t: j.t,
            q: j.q,
            base: Degree::ZERO,
        })
    } else {
        let j: KoszulJson = parse_json(&text)?;
        let ring = j.ring.build()?;
        koszul(&KoszulSpec {
            elements: polys(&ring, &j.elements)?,
            base: Degree::ZERO,
        })
    }
}

use serde::{Deserialize, Serialize};

use crate::polyring::{parse_weight, MonomialOrder, Polynomial, Ring, RingSpec, Variable, Weight};
use crate::{Error, Result};

/// A polynomial germ `f` in `x1..xn`, with optional quasi-homogeneous
/// weights `0 < w_i < 1` making `f` of weighted degree 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularityInput {
    n: usize,
    f: Polynomial,
    weights: Option<Vec<Weight>>,
}

/// JSON form: `{"n":2,"f":"x1^3+x2^3","weights":["1/3","1/3"]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityJson {
    pub n: usize,
    pub f: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<String>>,
}

pub(crate) fn x_name(i: usize) -> String {
    format!("x{}", i + 1)
}

pub(crate) fn xi_name(i: usize) -> String {
    format!("xi{}", i + 1)
}

impl SingularityInput {
    pub fn new(f: Polynomial, weights: Option<Vec<Weight>>) -> Result<Self> {
        let n = f.ring().nvars();
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !f.constant_term().eq(&num::Zero::zero()) {
            return Err(Error::InvalidInput("f must vanish at the origin".into()));
        }
        if let Some(w) = &weights {
            if w.len() != n {
                return Err(Error::InvalidInput(format!(
                    "{} weights for {n} variables",
                    w.len()
                )));
            }
            let zero = Weight::from_integer(0);
            let one = Weight::from_integer(1);
            if w.iter().any(|&x| x <= zero || x >= one) {
                return Err(Error::InvalidInput(
                    "weights must lie strictly between 0 and 1".into(),
                ));
            }
        }
        let ring = x_ring(n, weights.as_deref())?;
        let f = f.map_into(&ring)?;
        if weights.is_some() {
            let d = f.w_degree()?;
            if d != Weight::from_integer(1) {
                return Err(Error::InvalidInput(format!(
                    "f has weighted degree {d}, expected 1"
                )));
            }
        }
        Ok(SingularityInput { n, f, weights })
    }

    /// Parses `f` over `x1..xn`.
    pub fn parse(n: usize, f: &str, weights: Option<Vec<Weight>>) -> Result<Self> {
        let ring = x_ring(n, None)?;
        Self::new(Polynomial::parse(&ring, f)?, weights)
    }

    pub fn from_json(j: &SingularityJson) -> Result<Self> {
        let w = j
            .weights
            .as_ref()
            .map(|ws| {
                ws.iter()
                    .map(|s| parse_weight(s))
                    .collect::<Result<Vec<_>>>()
            })
            .transpose()?;
        Self::parse(j.n, &j.f, w)
    }

    pub fn to_json(&self) -> SingularityJson {
        SingularityJson {
            n: self.n,
            f: self.f.to_string(),
            weights: self
                .weights
                .as_ref()
                .map(|w| w.iter().map(ToString::to_string).collect()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn weights(&self) -> Option<&[Weight]> {
        self.weights.as_deref()
    }

    pub(crate) fn require_weights(&self) -> Result<&[Weight]> {
        self.weights.as_deref().ok_or(Error::MissingWeights)
    }

    /// `Q[x1..xn]`.
    pub fn x_ring(&self) -> Ring {
        self.f.ring().clone()
    }

    /// `R = Q[x][t, xi, tau]` with the (F, V) bigrading and, when weights are
    /// present, the quasi-homogeneous grading.
    pub fn bigr_ring(&self) -> Result<Ring> {
        let mut vars = self.x_vars();
        vars.push(self.aux("t", 0, -1, Weight::from_integer(1)));
        vars.extend(self.xi_vars());
        vars.push(self.aux("tau", 1, 1, Weight::from_integer(0)));
        RingSpec::new(vars, MonomialOrder::Graded)
    }

    /// `Q[x][s, xi]` (or `Q[x][xi]` without `s`).
    pub fn symbol_ring(&self, with_s: bool) -> Result<Ring> {
        let mut vars = self.x_vars();
        if with_s {
            vars.push(self.aux("s", 1, 0, Weight::from_integer(1)));
        }
        vars.extend(self.xi_vars());
        RingSpec::new(vars, MonomialOrder::Graded)
    }

    fn aux(&self, name: &str, f: i64, v: i64, w: Weight) -> Variable {
        Variable::new(name, f, v, self.weights.as_ref().map(|_| w))
    }

    fn x_vars(&self) -> Vec<Variable> {
        (0..self.n)
            .map(|i| Variable::new(x_name(i), 0, 0, self.weights.as_ref().map(|w| w[i])))
            .collect()
    }

    fn xi_vars(&self) -> Vec<Variable> {
        (0..self.n)
            .map(|i| {
                let w = self
                    .weights
                    .as_ref()
                    .map(|w| Weight::from_integer(1) - w[i]);
                Variable::new(xi_name(i), 1, 0, w)
            })
            .collect()
    }
}

pub(crate) fn x_ring(n: usize, weights: Option<&[Weight]>) -> Result<Ring> {
    if n == 0 {
        return Err(Error::InvalidInput("need at least one variable".into()));
    }
    let vars = (0..n)
        .map(|i| Variable::new(x_name(i), 0, 0, weights.map(|w| w[i])))
        .collect();
    RingSpec::new(vars, MonomialOrder::Graded)
}

/// Quasi-homogeneous isolated singularities used as a reference set:
/// Fermat sums of cubes for `n = 2, 3`, `A_1`, `A_2`, `E_6`, `E_8`, `D_5`
/// and a three-variable `D_5` suspension.
pub fn reference_germs() -> Vec<SingularityInput> {
    let table: [(usize, &str, &[&str]); 9] = [
        (2, "x1^3 + x2^3", &["1/3", "1/3"]),
        (2, "x1^2 + x2^2", &["1/2", "1/2"]),
        (2, "x1^2 + x2^3", &["1/2", "1/3"]),
        (2, "x1^3 + x2^4", &["1/3", "1/4"]),
        (2, "x1^3 + x2^5", &["1/3", "1/5"]),
        (2, "x1^2*x2 + x2^4", &["3/8", "1/4"]),
        (3, "x1^3 + x2^3 + x3^3", &["1/3", "1/3", "1/3"]),
        (3, "x1^2 + x2^2 + x3^2", &["1/2", "1/2", "1/2"]),
        (3, "x1^2*x2 + x2^4 + x3^2", &["3/8", "1/4", "1/2"]),
    ];
    table
        .iter()
        .map(|(n, f, w)| {
            let w = w
                .iter()
                .map(|s| parse_weight(s))
                .collect::<Result<Vec<_>>>()
                .expect("weights");
            SingularityInput::parse(*n, f, Some(w)).expect("reference germ")
        })
        .collect()
}

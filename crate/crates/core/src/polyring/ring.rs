use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num::Integer;
use serde::{Deserialize, Serialize};

use super::{Monomial, Weight};
use crate::{Error, Result};

/// A ring variable together with its three gradings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    /// Degree for the order filtration F.
    pub f_weight: i64,
    /// Degree for the V-filtration; `t` carries -1, `tau` carries +1.
    pub v_weight: i64,
    /// Quasi-homogeneous weight, when the ring carries one.
    pub w_weight: Option<Weight>,
}

impl Variable {
    pub fn new(
        name: impl Into<String>,
        f_weight: i64,
        v_weight: i64,
        w_weight: Option<Weight>,
    ) -> Self {
        Variable {
            name: name.into(),
            f_weight,
            v_weight,
            w_weight,
        }
    }
}

/// Monomial orders. All global orders are refinements of the positive
/// internal grading; ties are broken reverse-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Graded,
    /// A nonnegative weight vector compared before the internal grading.
    Weighted(Vec<i64>),
    /// Block order eliminating the listed variables.
    Elimination(Vec<usize>),
    /// Local degree order: lower internal degree ranks higher, so `1` is the
    /// largest monomial.
    Local,
}

/// Bidegree `(d, k)`: F-degree and V-degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bidegree {
    pub d: i64,
    pub k: i64,
}

impl Bidegree {
    pub fn new(d: i64, k: i64) -> Self {
        Bidegree { d, k }
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.d, self.k)
    }
}

/// Full multidegree of a homogeneous element: the bidegree plus the internal
/// positive degree `g`, measured in units of `1/scale` of the ring.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Degree {
    pub f: i64,
    pub v: i64,
    pub g: i64,
}

impl Degree {
    pub const ZERO: Degree = Degree { f: 0, v: 0, g: 0 };

    pub fn new(f: i64, v: i64, g: i64) -> Self {
        Degree { f, v, g }
    }

    pub fn bidegree(&self) -> Bidegree {
        Bidegree::new(self.f, self.v)
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, o: Degree) -> Degree {
        Degree::new(self.f + o.f, self.v + o.v, self.g + o.g)
    }
}

impl Sub for Degree {
    type Output = Degree;
    fn sub(self, o: Degree) -> Degree {
        Degree::new(self.f - o.f, self.v - o.v, self.g - o.g)
    }
}

impl Neg for Degree {
    type Output = Degree;
    fn neg(self) -> Degree {
        Degree::new(-self.f, -self.v, -self.g)
    }
}

/// Variables, gradings and monomial order of a polynomial ring over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpec {
    vars: Vec<Variable>,
    order: MonomialOrder,
    grading: Vec<i64>,
    scale: i64,
    refine: Option<Vec<i64>>,
}

pub type Ring = Arc<RingSpec>;

impl RingSpec {
    /// Builds a ring. Quasi-homogeneous weights must be given for all
    /// variables or none. With weights, the internal grading of a variable is
    /// `f_weight + w_weight`; without, every variable has internal degree 1.
    pub fn new(vars: Vec<Variable>, order: MonomialOrder) -> Result<Ring> {
        let mut seen = HashSet::new();
        for v in &vars {
            if v.name.is_empty() || !seen.insert(v.name.as_str()) {
                return Err(Error::InvalidInput(format!(
                    "duplicate or empty variable name `{}`",
                    v.name
                )));
            }
        }
        let with_w = vars.iter().filter(|v| v.w_weight.is_some()).count();
        let (grading, scale) = if with_w == 0 {
            (vec![1; vars.len()], 1)
        } else if with_w == vars.len() {
            let totals: Vec<Weight> = vars
                .iter()
                .map(|v| Weight::from_integer(v.f_weight) + v.w_weight.unwrap())
                .collect();
            let scale = totals.iter().fold(1i64, |acc, t| acc.lcm(t.denom()));
            let grading: Vec<i64> = totals
                .iter()
                .map(|t| (t * Weight::from_integer(scale)).to_integer())
                .collect();
            (grading, scale)
        } else {
            return Err(Error::InvalidInput(
                "quasi-homogeneous weights must be given for all variables or none".into(),
            ));
        };
        if let Some(i) = grading.iter().position(|&g| g <= 0) {
            return Err(Error::InvalidInput(format!(
                "variable `{}` has nonpositive internal degree",
                vars[i].name
            )));
        }
        let refine = match &order {
            MonomialOrder::Weighted(w) => {
                if w.len() != vars.len() || w.iter().any(|&x| x < 0) {
                    return Err(Error::InvalidInput(
                        "weight vector must be nonnegative, one entry per variable".into(),
                    ));
                }
                Some(w.clone())
            }
            MonomialOrder::Elimination(block) => {
                let mut w = vec![0; vars.len()];
                for &i in block {
                    if i >= vars.len() {
                        return Err(Error::InvalidInput(format!(
                            "elimination index {i} out of range"
                        )));
                    }
                    w[i] = 1;
                }
                Some(w)
            }
            _ => None,
        };
        Ok(Arc::new(RingSpec {
            vars,
            order,
            grading,
            scale,
            refine,
        }))
    }

    /// Same variables and gradings under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Ring> {
        RingSpec::new(self.vars.clone(), order)
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_local(&self) -> bool {
        matches!(self.order, MonomialOrder::Local)
    }

    pub fn has_w_weights(&self) -> bool {
        self.vars.iter().all(|v| v.w_weight.is_some()) && !self.vars.is_empty()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    pub fn var_names(&self) -> Vec<&str> {
        self.vars.iter().map(|v| v.name.as_str()).collect()
    }

    /// Internal degree of one unit of "1" in the positive grading.
    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn grading(&self) -> &[i64] {
        &self.grading
    }

    /// Internal positive degree of a monomial.
    pub fn g_degree(&self, m: &Monomial) -> i64 {
        m.exponents()
            .iter()
            .zip(&self.grading)
            .map(|(&e, &g)| e as i64 * g)
            .sum()
    }

    pub fn degree(&self, m: &Monomial) -> Degree {
        let mut d = Degree::ZERO;
        for ((&e, v), &g) in m.exponents().iter().zip(&self.vars).zip(&self.grading) {
            let e = e as i64;
            d.f += e * v.f_weight;
            d.v += e * v.v_weight;
            d.g += e * g;
        }
        d
    }

    /// w-degree of a monomial, when the ring carries weights.
    pub fn w_degree(&self, m: &Monomial) -> Result<Weight> {
        let mut total = Weight::from_integer(0);
        for (&e, v) in m.exponents().iter().zip(&self.vars) {
            let w = v.w_weight.ok_or(Error::MissingWeights)?;
            total += w * Weight::from_integer(e as i64);
        }
        Ok(total)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_shifted(a, 0, b, 0)
    }

    /// Compares `a` and `b` as if their internal degrees were raised by
    /// `sa` and `sb`. Used by module orders on shifted free modules.
    pub fn cmp_shifted(&self, a: &Monomial, sa: i64, b: &Monomial, sb: i64) -> Ordering {
        if let Some(w) = &self.refine {
            let wa: i64 = a
                .exponents()
                .iter()
                .zip(w)
                .map(|(&e, &x)| e as i64 * x)
                .sum();
            let wb: i64 = b
                .exponents()
                .iter()
                .zip(w)
                .map(|(&e, &x)| e as i64 * x)
                .sum();
            if wa != wb {
                return wa.cmp(&wb);
            }
        }
        let ga = self.g_degree(a) + sa;
        let gb = self.g_degree(b) + sb;
        let by_degree = match self.order {
            MonomialOrder::Local => gb.cmp(&ga),
            _ => ga.cmp(&gb),
        };
        if by_degree != Ordering::Equal {
            return by_degree;
        }
        revlex(a, b)
    }
}

fn revlex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plain(names: &[&str], order: MonomialOrder) -> Ring {
        RingSpec::new(
            names
                .iter()
                .map(|n| Variable::new(*n, 0, 0, None))
                .collect(),
            order,
        )
        .unwrap()
    }

    #[test]
    fn grevlex_prefers_x_squared_over_xy() {
        let r = plain(&["x", "y"], MonomialOrder::Graded);
        let x2 = Monomial::from_exponents(&[2, 0]);
        let xy = Monomial::from_exponents(&[1, 1]);
        assert_eq!(r.cmp(&x2, &xy), Ordering::Greater);
        assert_eq!(r.cmp(&xy, &xy), Ordering::Equal);
    }

    #[test]
    fn local_order_ranks_lower_degree_first() {
        let r = plain(&["x", "y"], MonomialOrder::Local);
        let x = Monomial::from_exponents(&[1, 0]);
        let x2 = Monomial::from_exponents(&[2, 0]);
        assert_eq!(r.cmp(&x, &x2), Ordering::Greater);
        assert_eq!(r.cmp(&Monomial::one(2), &x), Ordering::Greater);
    }

    #[test]
    fn elimination_order_puts_block_first() {
        let r = plain(&["t", "x"], MonomialOrder::Elimination(vec![0]));
        let t = Monomial::from_exponents(&[1, 0]);
        let x5 = Monomial::from_exponents(&[0, 5]);
        assert_eq!(r.cmp(&t, &x5), Ordering::Greater);
    }

    #[test]
    fn weights_all_or_nothing() {
        let vars = vec![
            Variable::new("x", 0, 0, Some(Weight::new(1, 3))),
            Variable::new("y", 0, 0, None),
        ];
        assert!(RingSpec::new(vars, MonomialOrder::Graded).is_err());
    }

    #[test]
    fn duplicate_names_rejected() {
        let vars = vec![
            Variable::new("x", 0, 0, None),
            Variable::new("x", 0, 0, None),
        ];
        assert!(RingSpec::new(vars, MonomialOrder::Graded).is_err());
    }

    #[test]
    fn internal_grading_is_f_plus_w() {
        let vars = vec![
            Variable::new("x", 0, 0, Some(Weight::new(1, 3))),
            Variable::new("xi", 1, 0, Some(Weight::new(2, 3))),
            Variable::new("tau", 1, 1, Some(Weight::new(0, 1))),
        ];
        let r = RingSpec::new(vars, MonomialOrder::Graded).unwrap();
        assert_eq!(r.scale(), 3);
        assert_eq!(r.grading(), &[1, 5, 3]);
    }
}

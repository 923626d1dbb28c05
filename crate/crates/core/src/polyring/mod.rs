//! Exact sparse polynomials over the rationals with the (F, V) bigrading, the
//! quasi-homogeneous w-grading and a positive internal grading used for
//! orders and minimality.

mod monomial;
mod parse;
pub(crate) mod polynomial;
mod ring;

pub use monomial::Monomial;
pub use polynomial::Polynomial;
pub use ring::{Bidegree, Degree, MonomialOrder, Ring, RingSpec, Variable};

/// Exact coefficient field.
pub type Coeff = num::BigRational;

/// Rational weights (quasi-homogeneous weights and w-degrees).
pub type Weight = num::rational::Rational64;

/// Parses a weight written as an integer or a fraction `p/q`. Decimals are rejected.
pub fn parse_weight(s: &str) -> crate::Result<Weight> {
    let s = s.trim();
    let bad = || crate::Error::Parse(format!("weight `{s}` must be an integer or a fraction p/q"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: i64 = num.parse().map_err(|_| bad())?;
    let den: i64 = den.parse().map_err(|_| bad())?;
    if den == 0 {
        return Err(bad());
    }
    Ok(Weight::new(num, den))
}

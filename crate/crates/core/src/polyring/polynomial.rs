use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{BigInt, One, Signed, Zero};

use super::{Bidegree, Coeff, Degree, Monomial, Ring, Weight};
use crate::{Error, Result};

/// Sparse polynomial with exact rational coefficients. Terms are kept in
/// strictly decreasing order for the ring's monomial order and never carry a
/// zero coefficient.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Coeff)>,
}

pub(crate) fn weight_to_coeff(w: Weight) -> Coeff {
    Coeff::new(BigInt::from(*w.numer()), BigInt::from(*w.denom()))
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_int(ring: &Ring, c: i64) -> Self {
        Self::constant(ring, Coeff::from_integer(c.into()))
    }

    pub fn one(ring: &Ring) -> Self {
        Self::from_int(ring, 1)
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::term(ring, Monomial::var(ring.nvars(), i, 1), Coeff::one())
    }

    /// The variable called `name`, if the ring has one.
    pub fn named(ring: &Ring, name: &str) -> Result<Self> {
        let i = ring
            .var_index(name)
            .ok_or_else(|| Error::RingMismatch(format!("no variable `{name}`")))?;
        Ok(Self::var(ring, i))
    }

    pub fn term(ring: &Ring, m: Monomial, c: Coeff) -> Self {
        assert_eq!(
            m.nvars(),
            ring.nvars(),
            "monomial length does not match ring"
        );
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(
                m.nvars(),
                ring.nvars(),
                "monomial length does not match ring"
            );
            *acc.entry(m).or_insert_with(Coeff::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Wraps terms already sorted decreasingly and free of zeros.
    pub(crate) fn from_sorted(ring: &Ring, terms: Vec<(Monomial, Coeff)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.terms[0].1.is_one()
    }

    pub fn constant_term(&self) -> Coeff {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Coeff::zero)
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.1)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        // multiplication by a monomial preserves the order
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn check_ring(&self, other: &Polynomial) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring,
            "polynomials live in different rings"
        );
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &Polynomial, c: &Coeff) -> Self {
        self.check_ring(other);
        if c.is_zero() {
            return self.clone();
        }
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ring.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), cb * c));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = ca + cb * c;
                    if !s.is_zero() {
                        out.push((ma.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, b)| (m.clone(), b * c)));
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    fn common<T: PartialEq + fmt::Debug>(&self, f: impl Fn(&Monomial) -> T) -> Result<T> {
        let mut it = self.terms.iter();
        let first = f(&it.next().ok_or(Error::ZeroPolynomial)?.0);
        for (m, _) in it {
            let d = f(m);
            if d != first {
                return Err(Error::Inhomogeneous(format!(
                    "{self}: terms of degree {first:?} and {d:?}"
                )));
            }
        }
        Ok(first)
    }

    /// Common (F, V) bidegree of all terms.
    pub fn bidegree(&self) -> Result<Bidegree> {
        self.common(|m| self.ring.degree(m).bidegree())
    }

    /// Common quasi-homogeneous degree of all terms.
    pub fn w_degree(&self) -> Result<Weight> {
        if !self.ring.has_w_weights() {
            return Err(Error::MissingWeights);
        }
        self.common(|m| self.ring.w_degree(m).expect("weights present"))
    }

    /// Common full degree (bidegree and internal degree).
    pub fn degree(&self) -> Result<Degree> {
        self.common(|m| self.ring.degree(m))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_ok()
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(i);
            if e == 0 {
                return None;
            }
            let mut m = m.clone();
            m.set_exponent(i, e - 1);
            Some((m, c * Coeff::from_integer(BigInt::from(e))))
        });
        Self::from_terms(&self.ring, terms)
    }

    /// Same polynomial in `target`, matching variables by name. Variables
    /// absent from `target` must not occur.
    pub fn map_into(&self, target: &Ring) -> Result<Self> {
        let map: Vec<Option<usize>> = self
            .ring
            .vars()
            .iter()
            .map(|v| target.var_index(&v.name))
            .collect();
        let n = target.nvars();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = vec![0u16; n];
            for (k, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let Some(j) = map[k] else {
                    let name = &self.ring.vars()[k].name;
                    return Err(Error::RingMismatch(format!(
                        "variable `{name}` missing in target ring"
                    )));
                };
                exps[j] = e;
            }
            terms.push((Monomial::from_exponents(&exps), c.clone()));
        }
        if *self.ring == **target {
            return Ok(Polynomial::from_sorted(target, terms));
        }
        Ok(Self::from_terms(target, terms))
    }

    /// Sum of the terms whose monomial satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .cloned()
                .collect(),
        }
    }

    /// Largest exponent of variable `i`.
    pub fn degree_in(&self, i: usize) -> u16 {
        self.terms
            .iter()
            .map(|(m, _)| m.exponent(i))
            .max()
            .unwrap_or(0)
    }

    pub fn parse(ring: &Ring, s: &str) -> Result<Self> {
        super::parse::parse_polynomial(ring, s)
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        *self.ring == *other.ring && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &Coeff) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.ring.var_names();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let a = c.abs();
            if c.is_negative() {
                write!(f, "{}", if k == 0 { "-" } else { " - " })?;
            } else if k > 0 {
                write!(f, " + ")?;
            }
            let mut first = true;
            if !a.is_one() || m.is_one() {
                write_coeff(f, &a)?;
                first = false;
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}", names[i])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        self.add_scaled(o, &Coeff::one())
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        self.add_scaled(o, &-Coeff::one())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Coeff::one())
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        self.check_ring(o);
        if self.is_zero() || o.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if o.terms.len() == 1 {
            return self.mul_term(&o.terms[0].0, &o.terms[0].1);
        }
        if self.terms.len() == 1 {
            return o.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let prods = self
            .terms
            .iter()
            .flat_map(|(a, ca)| o.terms.iter().map(move |(b, cb)| (a.mul(b), ca * cb)));
        Polynomial::from_terms(&self.ring, prods)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, o: Polynomial) -> Polynomial { (&self).$m(&o) }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, o: &Polynomial) -> Polynomial { (&self).$m(o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

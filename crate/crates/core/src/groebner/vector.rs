//! Flat term lists for module elements, used inside the engines.

use std::cmp::Ordering;

use num::{One, Zero};

use super::ModuleOrder;
use crate::polyring::{Coeff, Monomial, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub m: Monomial,
    pub comp: usize,
    pub c: Coeff,
}

/// A module order on a shifted free module over a fixed ring.
#[derive(Clone, Debug)]
pub(crate) struct ModOrd {
    pub ring: Ring,
    pub shifts: Vec<i64>,
    pub kind: ModuleOrder,
}

impl ModOrd {
    pub fn new(ring: &Ring, shifts: Vec<i64>, kind: ModuleOrder) -> Self {
        ModOrd {
            ring: ring.clone(),
            shifts,
            kind,
        }
    }

    fn top(&self, am: &Monomial, ac: usize, bm: &Monomial, bc: usize) -> Ordering {
        self.ring
            .cmp_shifted(am, self.shifts[ac], bm, self.shifts[bc])
            .then(bc.cmp(&ac))
    }

    pub fn cmp_parts(&self, am: &Monomial, ac: usize, bm: &Monomial, bc: usize) -> Ordering {
        match self.kind {
            ModuleOrder::Top => self.top(am, ac, bm, bc),
            ModuleOrder::Pot => bc.cmp(&ac).then_with(|| self.ring.cmp(am, bm)),
            ModuleOrder::Blocks(split) => (bc >= split)
                .cmp(&(ac >= split))
                .then_with(|| self.top(am, ac, bm, bc)),
        }
    }

    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        self.cmp_parts(&a.m, a.comp, &b.m, b.comp)
    }

    /// Internal degree of a term, including the module shift.
    pub fn deg(&self, m: &Monomial, comp: usize) -> i64 {
        self.ring.g_degree(m) + self.shifts[comp]
    }
}

/// Terms in strictly decreasing module order, no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct Vector {
    pub terms: Vec<Term>,
}

impl Vector {
    pub fn from_unsorted(ord: &ModOrd, mut terms: Vec<Term>) -> Self {
        terms.sort_by(|a, b| ord.cmp(b, a));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.comp == t.comp && last.m == t.m => last.c += t.c,
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.c.is_zero());
        Vector { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &Term {
        &self.terms[0]
    }

    pub fn make_monic(&mut self) {
        if let Some(t) = self.terms.first() {
            if t.c.is_one() {
                return;
            }
            let inv = t.c.recip();
            for t in &mut self.terms {
                t.c *= &inv;
            }
        }
    }

    /// Largest term degree; equals the degree for homogeneous vectors.
    pub fn sugar(&self, ord: &ModOrd) -> i64 {
        self.terms
            .iter()
            .map(|t| ord.deg(&t.m, t.comp))
            .max()
            .unwrap_or(0)
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    m: t.m.mul(m),
                    comp: t.comp,
                    c: &t.c * c,
                })
                .collect(),
        }
    }
}

/// `a + c * m * b` for sorted term lists.
pub(crate) fn axpy(ord: &ModOrd, a: &[Term], b: &[Term], m: &Monomial, c: &Coeff) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let mut pending: Option<Term> = None;
    while i < a.len() || j < b.len() || pending.is_some() {
        let bt = match pending.take() {
            Some(t) => Some(t),
            None if j < b.len() => {
                let t = &b[j];
                j += 1;
                Some(Term {
                    m: t.m.mul(m),
                    comp: t.comp,
                    c: &t.c * c,
                })
            }
            None => None,
        };
        match (a.get(i), bt) {
            (Some(at), Some(bt)) => match ord.cmp(at, &bt) {
                Ordering::Greater => {
                    out.push(at.clone());
                    i += 1;
                    pending = Some(bt);
                }
                Ordering::Less => out.push(bt),
                Ordering::Equal => {
                    let s = &at.c + &bt.c;
                    if !s.is_zero() {
                        out.push(Term {
                            m: bt.m,
                            comp: bt.comp,
                            c: s,
                        });
                    }
                    i += 1;
                }
            },
            (Some(_), None) => {
                out.extend_from_slice(&a[i..]);
                i = a.len();
            }
            (None, Some(bt)) => out.push(bt),
            (None, None) => unreachable!(),
        }
    }
    out
}

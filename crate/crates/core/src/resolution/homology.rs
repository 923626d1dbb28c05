use std::collections::{BTreeMap, HashMap};

use num::Zero;

use super::{FreeComplex, MatrixMap};
use crate::groebner::FreeModuleSpec;
use crate::polyring::{Coeff, Degree, Monomial, Ring};
use crate::{Error, Result};

/// Degree window for the exactness check: every graded piece whose internal
/// degree is at most `max_g` (in the ring's scaled units).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub max_g: i64,
}

impl Window {
    /// Largest generator degree around `position`, plus two units.
    pub fn default_for(c: &FreeComplex, position: usize) -> Window {
        let scale = c.module(0).ring().scale();
        let lo = position.saturating_sub(1);
        let hi = (position + 1).min(c.len());
        let top = (lo..=hi)
            .flat_map(|i| c.module(i).shifts().iter().map(|d| d.g))
            .max()
            .unwrap_or(0);
        Window {
            max_g: top + 2 * scale,
        }
    }
}

/// Monomials of internal degree exactly `g`.
fn monomials_of_degree(
    ring: &Ring,
    g: i64,
    cache: &mut HashMap<i64, Vec<Monomial>>,
) -> Vec<Monomial> {
    if let Some(v) = cache.get(&g) {
        return v.clone();
    }
    let n = ring.nvars();
    let weights = ring.grading();
    let mut out = Vec::new();
    let mut exps = vec![0u16; n];
    fn rec(i: usize, left: i64, w: &[i64], exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i == w.len() {
            if left == 0 {
                out.push(Monomial::from_exponents(exps));
            }
            return;
        }
        let mut e = 0;
        while e as i64 * w[i] <= left {
            exps[i] = e;
            rec(i + 1, left - e as i64 * w[i], w, exps, out);
            e += 1;
        }
        exps[i] = 0;
    }
    if g >= 0 {
        rec(0, g, weights, &mut exps, &mut out);
    }
    cache.insert(g, out.clone());
    out
}

/// Basis of the degree-`d` piece of a shifted free module.
fn piece(
    module: &FreeModuleSpec,
    d: Degree,
    cache: &mut HashMap<i64, Vec<Monomial>>,
) -> Vec<(Monomial, usize)> {
    let ring = module.ring();
    let mut out = Vec::new();
    for (j, s) in module.shifts().iter().enumerate() {
        let want = d - *s;
        for m in monomials_of_degree(ring, want.g, cache) {
            if ring.degree(&m) == want {
                out.push((m, j));
            }
        }
    }
    out
}

struct Echelon {
    pivots: HashMap<usize, Vec<(usize, Coeff)>>,
}

impl Echelon {
    fn new() -> Self {
        Echelon {
            pivots: HashMap::new(),
        }
    }

    /// Adds a sparse row (sorted by index); returns whether the rank grew.
    fn insert(&mut self, mut row: Vec<(usize, Coeff)>) -> bool {
        loop {
            let Some(&(lead, _)) = row.first() else {
                return false;
            };
            match self.pivots.get(&lead) {
                None => {
                    let inv = row[0].1.recip();
                    for e in &mut row {
                        e.1 *= &inv;
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
                Some(p) => {
                    let c = row[0].1.clone();
                    row = sub_scaled(&row, p, &c);
                }
            }
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn sub_scaled(a: &[(usize, Coeff)], b: &[(usize, Coeff)], c: &Coeff) -> Vec<(usize, Coeff)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -(&b[j].1 * c)));
            j += 1;
        } else {
            let v = &a[i].1 - &b[j].1 * c;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of `d` restricted to the span of `basis` in its source.
fn rank_on(d: &MatrixMap, basis: &[(Monomial, usize)]) -> usize {
    let mut index: HashMap<(Monomial, usize), usize> = HashMap::new();
    let mut ech = Echelon::new();
    for (m, j) in basis {
        let mut row: BTreeMap<usize, Coeff> = BTreeMap::new();
        for (i, p) in d.columns()[*j].components().iter().enumerate() {
            for (n, c) in p.terms() {
                let key = (n.mul(m), i);
                let next = index.len();
                let k = *index.entry(key).or_insert(next);
                *row.entry(k).or_insert_with(Coeff::zero) += c;
            }
        }
        ech.insert(row.into_iter().filter(|(_, c)| !c.is_zero()).collect());
    }
    ech.rank()
}

/// Whether `ker d_p = im d_{p+1}` in every degree of the window.
pub fn homology_is_zero(c: &FreeComplex, position: usize, window: Option<Window>) -> Result<bool> {
    if position == 0 {
        return Err(Error::InvalidInput(
            "homology is checked at positions >= 1".into(),
        ));
    }
    if position > c.len() {
        return Ok(true);
    }
    let window = window.unwrap_or_else(|| Window::default_for(c, position));
    let fp = c.module(position);
    let ring = fp.ring();
    let mut cache = HashMap::new();
    let mut degrees: Vec<Degree> = Vec::new();
    for s in fp.shifts() {
        for g in s.g..=window.max_g {
            for m in monomials_of_degree(ring, g - s.g, &mut cache) {
                degrees.push(ring.degree(&m) + *s);
            }
        }
    }
    degrees.sort();
    degrees.dedup();
    for d in degrees {
        let basis = piece(fp, d, &mut cache);
        let kernel = basis.len() - rank_on(c.map(position), &basis);
        if kernel == 0 {
            continue;
        }
        let image = if position < c.len() {
            let src = piece(c.module(position + 1), d, &mut cache);
            rank_on(c.map(position + 1), &src)
        } else {
            0
        };
        if image != kernel {
            return Ok(false);
        }
    }
    Ok(true)
}

//! Gröbner bases of submodules of shifted free modules, standard bases of
//! ideals under a local order, syzygies, elimination and staircases.
//!
//! ```
//! use hsbetti::polyring::{MonomialOrder, Polynomial, RingSpec, Variable};
//! use hsbetti::groebner::ideal_basis;
//!
//! let ring = RingSpec::new(
//!     vec![Variable::new("x", 0, 0, None), Variable::new("y", 0, 0, None)],
//!     MonomialOrder::Graded,
//! ).unwrap();
//! let gens = ["x^2 + y", "y"].map(|s| Polynomial::parse(&ring, s).unwrap());
//! let gb = ideal_basis(&gens).unwrap();
//! let leads: Vec<String> = gb.polynomials().iter().map(|p| p.to_string()).collect();
//! assert_eq!(leads, ["y", "x^2"]);
//! ```

mod engine;
mod mora;
mod syzygy;
mod vector;

use std::collections::{HashSet, VecDeque};

use crate::polyring::{Degree, Monomial, Polynomial, Ring};
use crate::{Error, Result};

pub use syzygy::{lift_through, minimal_generators, syzygies, syzygies_of};

pub(crate) use engine::{Basis, GbOptions};
pub(crate) use vector::{ModOrd, Term, Vector};

/// Module orders on a shifted free module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleOrder {
    /// Term over position: shifted degree and ring order first, lower
    /// component index breaks ties.
    Top,
    /// Position over term: lower component index first.
    Pot,
    /// Components below the split dominate all components above it;
    /// term over position inside each block.
    Blocks(usize),
}

/// Global (well-ordered) or local (Mora) computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Global,
    Local,
}

/// A free module over a ring whose basis vectors carry degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModuleSpec {
    ring: Ring,
    shifts: Vec<Degree>,
}

impl FreeModuleSpec {
    pub fn new(ring: &Ring, shifts: Vec<Degree>) -> Self {
        FreeModuleSpec {
            ring: ring.clone(),
            shifts,
        }
    }

    /// Rank `r` with all basis vectors in degree zero.
    pub fn free(ring: &Ring, rank: usize) -> Self {
        Self::new(ring, vec![Degree::ZERO; rank])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn shifts(&self) -> &[Degree] {
        &self.shifts
    }

    /// Basis followed by the basis of `other`.
    pub fn direct_sum(&self, other: &FreeModuleSpec) -> FreeModuleSpec {
        let mut shifts = self.shifts.clone();
        shifts.extend_from_slice(&other.shifts);
        Self::new(&self.ring, shifts)
    }

    /// All shifts moved by `d`.
    pub fn twist(&self, d: Degree) -> FreeModuleSpec {
        Self::new(&self.ring, self.shifts.iter().map(|&s| s + d).collect())
    }

    pub(crate) fn ord(&self, kind: ModuleOrder) -> ModOrd {
        ModOrd::new(&self.ring, self.shifts.iter().map(|d| d.g).collect(), kind)
    }
}

/// An element of a free module, stored as its coordinate polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleElement {
    ring: Ring,
    comps: Vec<Polynomial>,
}

impl ModuleElement {
    pub fn new(ring: &Ring, comps: Vec<Polynomial>) -> Self {
        ModuleElement {
            ring: ring.clone(),
            comps,
        }
    }

    pub fn zero(ring: &Ring, rank: usize) -> Self {
        Self::new(ring, vec![Polynomial::zero(ring); rank])
    }

    /// The `i`-th basis vector.
    pub fn unit(ring: &Ring, rank: usize, i: usize) -> Self {
        let mut e = Self::zero(ring, rank);
        e.comps[i] = Polynomial::one(ring);
        e
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.comps[i]
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Polynomial::is_zero)
    }

    pub fn add(&self, other: &ModuleElement) -> ModuleElement {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        Self::new(
            &self.ring,
            self.comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &ModuleElement) -> ModuleElement {
        self.add(&other.mul_poly(&Polynomial::from_int(&self.ring, -1)))
    }

    pub fn mul_poly(&self, p: &Polynomial) -> ModuleElement {
        Self::new(&self.ring, self.comps.iter().map(|a| a * p).collect())
    }

    /// Common degree of all terms, taking the module shifts into account.
    pub fn degree(&self, module: &FreeModuleSpec) -> Result<Degree> {
        let mut found: Option<Degree> = None;
        for (c, p) in self.comps.iter().enumerate() {
            for (m, _) in p.terms() {
                let d = self.ring.degree(m) + module.shifts[c];
                match found {
                    None => found = Some(d),
                    Some(e) if e != d => {
                        return Err(Error::Inhomogeneous(format!(
                            "module element has terms of degrees {e:?} and {d:?}"
                        )))
                    }
                    _ => {}
                }
            }
        }
        found.ok_or(Error::ZeroPolynomial)
    }

    pub(crate) fn to_vector(&self, ord: &ModOrd) -> Vector {
        let terms = self
            .comps
            .iter()
            .enumerate()
            .flat_map(|(comp, p)| {
                p.terms().iter().map(move |(m, c)| Term {
                    m: m.clone(),
                    comp,
                    c: c.clone(),
                })
            })
            .collect();
        Vector::from_unsorted(ord, terms)
    }

    pub(crate) fn from_vector(ring: &Ring, rank: usize, v: &Vector) -> ModuleElement {
        let mut buckets: Vec<Vec<(Monomial, crate::polyring::Coeff)>> = vec![Vec::new(); rank];
        for t in &v.terms {
            buckets[t.comp].push((t.m.clone(), t.c.clone()));
        }
        Self::new(
            ring,
            buckets
                .into_iter()
                .map(|b| Polynomial::from_terms(ring, b))
                .collect(),
        )
    }
}

/// A reduced Gröbner basis (global mode) or a standard basis (local mode),
/// with monic leading coefficients, sorted by increasing leading term.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    module: FreeModuleSpec,
    order: ModuleOrder,
    mode: Mode,
    elements: Vec<ModuleElement>,
    pub(crate) vecs: Vec<Vector>,
}

impl GroebnerBasis {
    pub fn module(&self) -> &FreeModuleSpec {
        &self.module
    }

    pub fn order(&self) -> ModuleOrder {
        self.order
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn elements(&self) -> &[ModuleElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements of an ideal basis as polynomials.
    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.elements.iter().map(|e| e.comps[0].clone()).collect()
    }

    /// Leading monomials with their components.
    pub fn leading_terms(&self) -> Vec<(Monomial, usize)> {
        self.vecs
            .iter()
            .map(|v| (v.lead().m.clone(), v.lead().comp))
            .collect()
    }

    pub(crate) fn ord(&self) -> ModOrd {
        self.module.ord(self.order)
    }

    /// Membership test (in the localization at the origin for local mode).
    pub fn contains(&self, e: &ModuleElement) -> bool {
        normal_form(e, self).map(|r| r.is_zero()).unwrap_or(false)
    }

    pub fn contains_poly(&self, p: &Polynomial) -> bool {
        self.contains(&ModuleElement::new(p.ring(), vec![p.clone()]))
    }

    pub fn reduce_poly(&self, p: &Polynomial) -> Result<Polynomial> {
        let r = normal_form(&ModuleElement::new(p.ring(), vec![p.clone()]), self)?;
        Ok(r.comps.into_iter().next().expect("rank one"))
    }
}

fn check_mode(ring: &Ring, mode: Mode) -> Result<()> {
    match (mode, ring.is_local()) {
        (Mode::Global, false) | (Mode::Local, true) => Ok(()),
        (Mode::Global, true) => Err(Error::ModeMismatch(
            "global mode needs a global monomial order".into(),
        )),
        (Mode::Local, false) => Err(Error::ModeMismatch(
            "local mode needs a local monomial order".into(),
        )),
    }
}

fn check_elements(gens: &[ModuleElement], module: &FreeModuleSpec) -> Result<()> {
    for g in gens {
        if g.rank() != module.rank() {
            return Err(Error::InvalidInput(format!(
                "element of rank {} in a module of rank {}",
                g.rank(),
                module.rank()
            )));
        }
        if *g.ring != *module.ring {
            return Err(Error::RingMismatch(
                "element and module live over different rings".into(),
            ));
        }
    }
    Ok(())
}

/// Gröbner basis (global mode) or standard basis (local mode, ideals only)
/// of the submodule generated by `gens`.
pub fn buchberger(
    gens: &[ModuleElement],
    module: &FreeModuleSpec,
    order: ModuleOrder,
    mode: Mode,
) -> Result<GroebnerBasis> {
    check_mode(module.ring(), mode)?;
    check_elements(gens, module)?;
    let ord = module.ord(order);
    let inputs: Vec<Vector> = gens.iter().map(|g| g.to_vector(&ord)).collect();
    let vecs = match mode {
        Mode::Global => {
            let opts = GbOptions {
                degree_bound: None,
                product_criterion: module.rank() == 1,
                discard_from: None,
            };
            engine::run(&ord, &inputs, &opts).basis.into_reduced()
        }
        Mode::Local => {
            if module.rank() != 1 {
                return Err(Error::ModeMismatch(
                    "local mode supports ideals only".into(),
                ));
            }
            mora::standard_basis(&ord, &inputs)
        }
    };
    let elements = vecs
        .iter()
        .map(|v| ModuleElement::from_vector(module.ring(), module.rank(), v))
        .collect();
    Ok(GroebnerBasis {
        module: module.clone(),
        order,
        mode,
        elements,
        vecs,
    })
}

/// Basis of an ideal; the mode follows the ring's monomial order.
pub fn ideal_basis(gens: &[Polynomial]) -> Result<GroebnerBasis> {
    let ring = gens
        .first()
        .ok_or_else(|| Error::InvalidInput("empty generator list".into()))?
        .ring()
        .clone();
    let mode = if ring.is_local() {
        Mode::Local
    } else {
        Mode::Global
    };
    let elems: Vec<ModuleElement> = gens
        .iter()
        .map(|g| ModuleElement::new(&ring, vec![g.clone()]))
        .collect();
    buchberger(
        &elems,
        &FreeModuleSpec::free(&ring, 1),
        ModuleOrder::Top,
        mode,
    )
}

/// Remainder of `e` modulo the basis. In global mode no term of the result
/// is divisible by a leading term; in local mode only the leading term is
/// guaranteed irreducible (Mora's weak normal form), and the result is zero
/// exactly for members of the local ideal.
pub fn normal_form(e: &ModuleElement, gb: &GroebnerBasis) -> Result<ModuleElement> {
    check_mode(e.ring(), gb.mode)?;
    check_elements(std::slice::from_ref(e), &gb.module)?;
    let ord = gb.ord();
    let v = e.to_vector(&ord);
    let r = match gb.mode {
        Mode::Global => Basis::from_elems(&ord, gb.vecs.clone()).reduce(&v, None),
        Mode::Local => mora::weak_normal_form(&ord, &v, &gb.vecs),
    };
    Ok(ModuleElement::from_vector(e.ring(), e.rank(), &r))
}

/// Generators of the intersection of the ideal with the subring free of
/// `drop_vars`, as the reduced Gröbner basis under an elimination order.
/// The result lives in the input ring.
pub fn eliminate(gens: &[Polynomial], drop_vars: &[usize]) -> Result<Vec<Polynomial>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let ring = first.ring().clone();
    let elim = ring.with_order(crate::polyring::MonomialOrder::Elimination(
        drop_vars.to_vec(),
    ))?;
    let mapped: Vec<Polynomial> = gens
        .iter()
        .map(|g| g.map_into(&elim))
        .collect::<Result<_>>()?;
    let gb = ideal_basis(&mapped)?;
    gb.polynomials()
        .into_iter()
        .filter(|p| {
            p.terms()
                .iter()
                .all(|(m, _)| drop_vars.iter().all(|&i| m.exponent(i) == 0))
        })
        .map(|p| p.map_into(&ring))
        .collect()
}

/// Monomials outside the leading ideal of an ideal basis, in increasing
/// order. Their number is the dimension of the quotient (of the local ring
/// at the origin in local mode).
pub fn quotient_staircase(gb: &GroebnerBasis) -> Result<Vec<Monomial>> {
    if gb.module.rank() != 1 {
        return Err(Error::InvalidInput(
            "staircase is defined for ideals".into(),
        ));
    }
    let ring = gb.module.ring();
    let n = ring.nvars();
    let leads: Vec<Monomial> = gb.vecs.iter().map(|v| v.lead().m.clone()).collect();
    if leads.iter().any(Monomial::is_one) {
        return Ok(Vec::new());
    }
    for i in 0..n {
        if !leads
            .iter()
            .any(|m| m.pure_power().is_some_and(|(j, _)| j == i))
        {
            return Err(Error::InfiniteDimensional);
        }
    }
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut queue = VecDeque::from([Monomial::one(n)]);
    seen.insert(Monomial::one(n));
    while let Some(m) = queue.pop_front() {
        for i in 0..n {
            let next = m.mul(&Monomial::var(n, i, 1));
            if !seen.contains(&next) && !leads.iter().any(|l| l.divides(&next)) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let global = ring.with_order(crate::polyring::MonomialOrder::Graded)?;
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort_by(|a, b| global.cmp(a, b));
    Ok(out)
}

#[cfg(test)]
mod tests;

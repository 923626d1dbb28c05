use num::One;

use super::engine::{self, Basis, GbOptions, Quotients};
use super::vector::{axpy, ModOrd, Term, Vector};
use super::{FreeModuleSpec, GroebnerBasis, Mode, ModuleElement, ModuleOrder};
use crate::polyring::{Coeff, Monomial};
use crate::{Error, Result};

/// Schreyer syzygies of a monic Gröbner basis `g`, as vectors over the
/// free module whose basis indexes `g`, with the given order on it.
fn schreyer(gord: &ModOrd, g: &[Vector], sord: &ModOrd) -> Vec<Vector> {
    let basis = Basis::from_elems(gord, g.to_vec());
    let mut out = Vec::new();
    for j in 0..g.len() {
        let lj = g[j].lead();
        let mut quots: Vec<(usize, Monomial)> = Vec::new();
        for (i, gi) in g.iter().enumerate().take(j) {
            let li = gi.lead();
            if li.comp == lj.comp {
                let q = lj.m.quotient_of(&li.m.lcm(&lj.m)).expect("lcm");
                quots.push((i, q));
            }
        }
        // keep the minimal generators of the quotient ideal, first index wins
        let keep: Vec<(usize, Monomial)> = quots
            .iter()
            .enumerate()
            .filter(|&(a, (_, qa))| {
                !quots
                    .iter()
                    .enumerate()
                    .any(|(b, (_, qb))| b != a && qb.divides(qa) && (qb != qa || b < a))
            })
            .map(|(_, p)| p.clone())
            .collect();
        for (i, qj) in keep {
            let lcm = g[i].lead().m.lcm(&lj.m);
            let qi = g[i].lead().m.quotient_of(&lcm).expect("lcm");
            let left = g[i].mul_term(&qi, &Coeff::one());
            let s = Vector {
                terms: axpy(
                    gord,
                    &left.terms[1..],
                    &g[j].terms[1..],
                    &qj,
                    &-Coeff::one(),
                ),
            };
            let mut quot: Quotients = Vec::new();
            let rem = basis.reduce(&s, Some(&mut quot));
            debug_assert!(
                rem.is_zero(),
                "S-vector of a Gröbner basis must reduce to zero"
            );
            let mut terms = vec![
                Term {
                    m: qi,
                    comp: i,
                    c: Coeff::one(),
                },
                Term {
                    m: qj,
                    comp: j,
                    c: -Coeff::one(),
                },
            ];
            terms.extend(quot.into_iter().map(|(k, m, c)| Term { m, comp: k, c: -c }));
            let v = Vector::from_unsorted(sord, terms);
            if !v.is_zero() {
                out.push(v);
            }
        }
    }
    out
}

/// Generators of the syzygy module of a global Gröbner basis, over the
/// free module whose basis vectors correspond to the basis elements.
pub fn syzygies(gb: &GroebnerBasis) -> Result<Vec<ModuleElement>> {
    if gb.mode() != Mode::Global {
        return Err(Error::ModeMismatch("syzygies need a global basis".into()));
    }
    let ord = gb.ord();
    let ring = gb.module().ring();
    let sord = ModOrd::new(
        ring,
        gb.vecs.iter().map(|v| v.sugar(&ord)).collect(),
        ModuleOrder::Top,
    );
    Ok(schreyer(&ord, &gb.vecs, &sord)
        .iter()
        .map(|v| ModuleElement::from_vector(ring, gb.len(), v))
        .collect())
}

/// A Gröbner basis `g` of the submodule spanned by some generators, with
/// `t[k]` expressing `g[k]` in terms of those generators.
struct Tracked {
    mord: ModOrd,
    tord: ModOrd,
    cols: Vec<Vector>,
    g: Vec<Vector>,
    t: Vec<Vector>,
}

impl Tracked {
    fn new(gens: &[ModuleElement], module: &FreeModuleSpec) -> Result<Tracked> {
        super::check_elements(gens, module)?;
        let ring = module.ring();
        if ring.is_local() {
            return Err(Error::ModeMismatch("syzygies need a global order".into()));
        }
        let r = module.rank();
        let mord = module.ord(ModuleOrder::Top);
        let cols: Vec<Vector> = gens.iter().map(|g| g.to_vector(&mord)).collect();
        let tshifts: Vec<i64> = cols.iter().map(|v| v.sugar(&mord)).collect();
        let tord = ModOrd::new(ring, tshifts.clone(), ModuleOrder::Top);
        let mut ashifts = mord.shifts.clone();
        ashifts.extend_from_slice(&tshifts);
        let aord = ModOrd::new(ring, ashifts, ModuleOrder::Blocks(r));
        let inputs: Vec<Vector> = cols
            .iter()
            .enumerate()
            .map(|(j, v)| {
                let mut terms = v.terms.clone();
                terms.push(Term {
                    m: Monomial::one(ring.nvars()),
                    comp: r + j,
                    c: Coeff::one(),
                });
                Vector { terms }
            })
            .collect();
        let opts = GbOptions {
            degree_bound: None,
            product_criterion: r == 1,
            discard_from: Some(r),
        };
        let tracked = engine::run(&aord, &inputs, &opts).basis.into_reduced();
        let mut g: Vec<Vector> = Vec::with_capacity(tracked.len());
        let mut t: Vec<Vector> = Vec::with_capacity(tracked.len());
        for v in tracked {
            let split = v
                .terms
                .iter()
                .position(|x| x.comp >= r)
                .unwrap_or(v.terms.len());
            g.push(Vector {
                terms: v.terms[..split].to_vec(),
            });
            t.push(Vector {
                terms: v.terms[split..]
                    .iter()
                    .map(|x| Term {
                        m: x.m.clone(),
                        comp: x.comp - r,
                        c: x.c.clone(),
                    })
                    .collect(),
            });
        }
        Ok(Tracked {
            mord,
            tord,
            cols,
            g,
            t,
        })
    }

    /// Pull a combination of basis elements back to the generators.
    fn apply_t(&self, coeffs: &[Term]) -> Vec<Term> {
        let mut acc = Vec::new();
        for x in coeffs {
            for y in &self.t[x.comp].terms {
                acc.push(Term {
                    m: y.m.mul(&x.m),
                    comp: y.comp,
                    c: &y.c * &x.c,
                });
            }
        }
        acc
    }

    /// Coefficients `u` with `sum_j u_j gens_j = v`, if `v` lies in the span.
    fn express(&self, basis: &Basis, v: &Vector) -> Option<Vector> {
        let mut quot: Quotients = Vec::new();
        let rem = basis.reduce(v, Some(&mut quot));
        if !rem.is_zero() {
            return None;
        }
        let u: Vec<Term> = quot
            .into_iter()
            .map(|(k, m, c)| Term { m, comp: k, c })
            .collect();
        Some(Vector::from_unsorted(&self.tord, self.apply_t(&u)))
    }
}

/// Generators (not necessarily minimal) of the module of relations
/// `sum_j a_j gens_j = 0`, as elements of a free module of rank
/// `gens.len()`.
pub fn syzygies_of(gens: &[ModuleElement], module: &FreeModuleSpec) -> Result<Vec<ModuleElement>> {
    let tr = Tracked::new(gens, module)?;
    let ring = module.ring();
    let m = gens.len();
    let sord = ModOrd::new(
        ring,
        tr.g.iter().map(|v| v.sugar(&tr.mord)).collect(),
        ModuleOrder::Top,
    );
    let mut out: Vec<Vector> = Vec::new();
    for sigma in schreyer(&tr.mord, &tr.g, &sord) {
        let v = Vector::from_unsorted(&tr.tord, tr.apply_t(&sigma.terms));
        if !v.is_zero() {
            out.push(v);
        }
    }
    let gbasis = Basis::from_elems(&tr.mord, tr.g.clone());
    for (j, col) in tr.cols.iter().enumerate() {
        let u = tr
            .express(&gbasis, col)
            .expect("generator must reduce to zero modulo its own basis");
        let mut terms: Vec<Term> = u
            .terms
            .into_iter()
            .map(|x| Term {
                m: x.m,
                comp: x.comp,
                c: -x.c,
            })
            .collect();
        terms.push(Term {
            m: Monomial::one(ring.nvars()),
            comp: j,
            c: Coeff::one(),
        });
        let v = Vector::from_unsorted(&tr.tord, terms);
        if !v.is_zero() {
            out.push(v);
        }
    }
    Ok(out
        .iter()
        .map(|v| ModuleElement::from_vector(ring, m, v))
        .collect())
}

/// For each target `v`, coefficients `u` with `sum_j u_j gens_j = v`, or
/// `None` when `v` is outside the submodule spanned by `gens`.
pub fn lift_through(
    gens: &[ModuleElement],
    module: &FreeModuleSpec,
    targets: &[ModuleElement],
) -> Result<Vec<Option<ModuleElement>>> {
    super::check_elements(targets, module)?;
    let ring = module.ring();
    if gens.is_empty() {
        return Ok(targets
            .iter()
            .map(|v| v.is_zero().then(|| ModuleElement::zero(ring, 0)))
            .collect());
    }
    let tr = Tracked::new(gens, module)?;
    let gbasis = Basis::from_elems(&tr.mord, tr.g.clone());
    Ok(targets
        .iter()
        .map(|v| {
            tr.express(&gbasis, &v.to_vector(&tr.mord))
                .map(|u| ModuleElement::from_vector(ring, gens.len(), &u))
        })
        .collect())
}

/// Indices of a minimal generating subset of the submodule generated by
/// homogeneous `gens`: an element is kept unless it lies in the span of the
/// elements of lower degree and the earlier elements of its own degree.
pub fn minimal_generators(gens: &[ModuleElement], module: &FreeModuleSpec) -> Result<Vec<usize>> {
    super::check_elements(gens, module)?;
    if module.ring().is_local() {
        return Err(Error::ModeMismatch(
            "minimal generators need a global order".into(),
        ));
    }
    let mut bound: Option<i64> = None;
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let d = g.degree(module)?.g;
        bound = Some(bound.map_or(d, |b: i64| b.max(d)));
    }
    let ord = module.ord(ModuleOrder::Top);
    let inputs: Vec<Vector> = gens.iter().map(|g| g.to_vector(&ord)).collect();
    let opts = GbOptions {
        degree_bound: bound,
        product_criterion: module.rank() == 1,
        discard_from: None,
    };
    let run = engine::run(&ord, &inputs, &opts);
    Ok((0..gens.len()).filter(|&k| run.input_needed[k]).collect())
}

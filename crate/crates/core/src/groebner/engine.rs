//! Sugar-strategy Buchberger for submodules of shifted free modules.

use num::One;

use super::vector::{axpy, ModOrd, Term, Vector};
use crate::polyring::{Coeff, Monomial};

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: usize,
    sugar: i64,
    coprime: bool,
}

/// Reduction record: basis index, monomial and coefficient of each step.
pub(crate) type Quotients = Vec<(usize, Monomial, Coeff)>;

pub(crate) struct Basis<'a> {
    pub ord: &'a ModOrd,
    pub elems: Vec<Vector>,
    masks: Vec<u64>,
    redundant: Vec<bool>,
}

impl<'a> Basis<'a> {
    pub fn new(ord: &'a ModOrd) -> Self {
        Basis {
            ord,
            elems: Vec::new(),
            masks: Vec::new(),
            redundant: Vec::new(),
        }
    }

    pub fn from_elems(ord: &'a ModOrd, elems: Vec<Vector>) -> Self {
        let mut b = Basis::new(ord);
        for e in elems {
            b.push(e);
        }
        b
    }

    fn push(&mut self, v: Vector) -> usize {
        let lt = v.lead();
        self.masks.push(lt.m.mask());
        self.redundant.push(false);
        self.elems.push(v);
        self.elems.len() - 1
    }

    fn find_reducer(&self, t: &Term) -> Option<usize> {
        let mask = t.m.mask();
        let mut fallback = None;
        for (k, e) in self.elems.iter().enumerate() {
            let lt = e.lead();
            if lt.comp == t.comp && self.masks[k] & !mask == 0 && lt.m.divides(&t.m) {
                if !self.redundant[k] {
                    return Some(k);
                }
                fallback.get_or_insert(k);
            }
        }
        fallback
    }

    /// Full reduction. Basis elements must be monic. When `quot` is given,
    /// every step is recorded so that `v = sum q_k b_k + remainder`.
    pub fn reduce(&self, v: &Vector, mut quot: Option<&mut Quotients>) -> Vector {
        let mut done: Vec<Term> = Vec::new();
        let mut h: Vec<Term> = v.terms.clone();
        let mut start = 0;
        while start < h.len() {
            let lt = &h[start];
            match self.find_reducer(lt) {
                Some(k) => {
                    let b = &self.elems[k];
                    let q = b.lead().m.quotient_of(&lt.m).expect("divides");
                    let c = lt.c.clone();
                    if let Some(qs) = quot.as_deref_mut() {
                        qs.push((k, q.clone(), c.clone()));
                    }
                    h = axpy(self.ord, &h[start + 1..], &b.terms[1..], &q, &-c);
                    start = 0;
                }
                None => {
                    done.push(lt.clone());
                    start += 1;
                }
            }
        }
        Vector { terms: done }
    }

    /// Drops elements whose leading term is divisible by another one,
    /// tail-reduces the rest and sorts by increasing leading term.
    pub fn into_reduced(self) -> Vec<Vector> {
        let ord = self.ord;
        let n = self.elems.len();
        let mut keep = vec![true; n];
        for a in 0..n {
            for b in 0..n {
                if a == b || !keep[b] {
                    continue;
                }
                let (la, lb) = (self.elems[a].lead(), self.elems[b].lead());
                if la.comp == lb.comp && lb.m.divides(&la.m) && (la.m != lb.m || b < a) {
                    keep[a] = false;
                    break;
                }
            }
        }
        let min: Vec<Vector> = self
            .elems
            .into_iter()
            .zip(keep)
            .filter_map(|(e, k)| k.then_some(e))
            .collect();
        let mut out = Vec::with_capacity(min.len());
        for k in 0..min.len() {
            let others: Vec<Vector> = min
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, e)| e.clone())
                .collect();
            let basis = Basis::from_elems(ord, others);
            let lead = min[k].terms[0].clone();
            let tail = Vector {
                terms: min[k].terms[1..].to_vec(),
            };
            let mut r = basis.reduce(&tail, None);
            r.terms.insert(0, lead);
            r.make_monic();
            out.push(r);
        }
        out.sort_by(|a, b| ord.cmp(a.lead(), b.lead()));
        out
    }
}

pub(crate) struct GbOptions {
    /// Pairs whose sugar exceeds this bound are never processed. Sound for
    /// homogeneous input when only the part up to this degree is needed.
    pub degree_bound: Option<i64>,
    /// Whether the product criterion applies (ideals and leading blocks of rank 1).
    pub product_criterion: bool,
    /// Reduced vectors whose leading component is at least this index are
    /// dropped instead of joining the basis.
    pub discard_from: Option<usize>,
}

pub(crate) struct GbRun<'a> {
    pub basis: Basis<'a>,
    /// For each input, whether it survived reduction when it was processed.
    pub input_needed: Vec<bool>,
}

enum Job {
    Pair(Pair),
    Input(usize),
}

/// Buchberger's algorithm with sugar selection; at equal sugar, pairs are
/// processed before inputs, so for homogeneous input an input survives
/// exactly when it is not in the span of earlier data.
pub(crate) fn run<'a>(ord: &'a ModOrd, inputs: &[Vector], opts: &GbOptions) -> GbRun<'a> {
    let mut basis = Basis::new(ord);
    let mut sugars: Vec<i64> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut input_needed = vec![false; inputs.len()];
    let input_sugar: Vec<i64> = inputs.iter().map(|v| v.sugar(ord)).collect();
    let mut pending_inputs: Vec<usize> = (0..inputs.len())
        .filter(|&k| !inputs[k].is_zero())
        .collect();

    loop {
        let best_pair = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| ord.cmp_parts(&a.lcm, a.comp, &b.lcm, b.comp))
                    .then((a.j, a.i).cmp(&(b.j, b.i)))
            })
            .map(|(k, p)| (k, p.sugar));
        let best_input = pending_inputs
            .iter()
            .enumerate()
            .min_by_key(|(_, &k)| (input_sugar[k], k))
            .map(|(pos, &k)| (pos, input_sugar[k]));
        let job = match (best_pair, best_input) {
            (Some((pk, ps)), Some((_, is))) if ps <= is => Job::Pair(pairs.swap_remove(pk)),
            (_, Some((pos, _))) => Job::Input(pending_inputs.remove(pos)),
            (Some((pk, _)), None) => Job::Pair(pairs.swap_remove(pk)),
            (None, None) => break,
        };
        let (v, sugar, input) = match job {
            Job::Pair(p) => {
                if opts.degree_bound.is_some_and(|d| p.sugar > d) {
                    continue;
                }
                (spoly(&basis, &p), p.sugar, None)
            }
            Job::Input(k) => (inputs[k].clone(), input_sugar[k], Some(k)),
        };
        let mut r = basis.reduce(&v, None);
        if r.is_zero() || opts.discard_from.is_some_and(|s| r.lead().comp >= s) {
            continue;
        }
        if let Some(k) = input {
            input_needed[k] = true;
        }
        r.make_monic();
        let k = basis.push(r);
        sugars.push(sugar.max(basis.elems[k].sugar(ord)));
        update(&mut basis, &sugars, &mut pairs, k, opts.product_criterion);
    }
    GbRun {
        basis,
        input_needed,
    }
}

fn spoly(basis: &Basis<'_>, p: &Pair) -> Vector {
    let (a, b) = (&basis.elems[p.i], &basis.elems[p.j]);
    let qa = a.lead().m.quotient_of(&p.lcm).expect("lcm");
    let qb = b.lead().m.quotient_of(&p.lcm).expect("lcm");
    let terms = axpy(
        basis.ord,
        &a.mul_term(&qa, &Coeff::one()).terms[1..],
        &b.terms[1..],
        &qb,
        &-Coeff::one(),
    );
    Vector { terms }
}

/// Gebauer-Moeller update after adding basis element `k`.
fn update(basis: &mut Basis<'_>, sugars: &[i64], pairs: &mut Vec<Pair>, k: usize, product: bool) {
    let ord = basis.ord;
    let lk = basis.elems[k].lead().clone();
    let dk = ord.ring.g_degree(&lk.m);
    let mut cand: Vec<Pair> = Vec::new();
    for i in 0..k {
        if basis.redundant[i] {
            continue;
        }
        let li = basis.elems[i].lead();
        if li.comp != lk.comp {
            continue;
        }
        let lcm = li.m.lcm(&lk.m);
        let dl = ord.ring.g_degree(&lcm);
        let sugar = (sugars[i] + dl - ord.ring.g_degree(&li.m)).max(sugars[k] + dl - dk);
        cand.push(Pair {
            i,
            j: k,
            coprime: product && li.m.is_coprime(&lk.m),
            lcm,
            comp: lk.comp,
            sugar,
        });
    }
    // chain criterion on old pairs
    pairs.retain(|p| {
        if p.comp != lk.comp || !lk.m.divides(&p.lcm) {
            return true;
        }
        let li = &basis.elems[p.i].lead().m;
        let lj = &basis.elems[p.j].lead().m;
        li.lcm(&lk.m) == p.lcm || lj.lcm(&lk.m) == p.lcm
    });
    // M and F criteria among the new pairs, then the product criterion
    let mut kept: Vec<Pair> = Vec::new();
    while let Some(p) = cand.pop() {
        let dominated = cand
            .iter()
            .chain(kept.iter())
            .any(|q| q.lcm.divides(&p.lcm));
        if p.coprime || !dominated {
            kept.push(p);
        }
    }
    pairs.extend(kept.into_iter().filter(|p| !p.coprime));
    for i in 0..k {
        let li = basis.elems[i].lead();
        if li.comp == lk.comp && lk.m.divides(&li.m) {
            basis.redundant[i] = true;
        }
    }
}

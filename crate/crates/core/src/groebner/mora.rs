//! Standard bases of ideals under a local degree order (Mora's tangent cone
//! algorithm with ecart-driven weak normal forms).

use super::vector::{axpy, ModOrd, Vector};
use crate::polyring::Coeff;

fn ecart(ord: &ModOrd, v: &Vector) -> i64 {
    let lt = v.lead();
    v.sugar(ord) - ord.deg(&lt.m, lt.comp)
}

fn reduce_step(ord: &ModOrd, h: &Vector, g: &Vector) -> Vector {
    let lh = h.lead();
    let lg = g.lead();
    let q = lg.m.quotient_of(&lh.m).expect("divides");
    let c: Coeff = -(&lh.c / &lg.c);
    Vector {
        terms: axpy(ord, &h.terms[1..], &g.terms[1..], &q, &c),
    }
}

/// Weak normal form: the result is zero or has a leading term outside the
/// leading ideal of `basis`. Zero exactly when `h` lies in the ideal
/// generated by `basis` in the localization at the origin.
pub(crate) fn weak_normal_form(ord: &ModOrd, h: &Vector, basis: &[Vector]) -> Vector {
    let mut reducers: Vec<(Vector, i64)> =
        basis.iter().map(|g| (g.clone(), ecart(ord, g))).collect();
    let mut h = h.clone();
    while !h.is_zero() {
        let lh = h.lead();
        let best = reducers
            .iter()
            .enumerate()
            .filter(|(_, (g, _))| {
                let lg = g.lead();
                lg.comp == lh.comp && lg.m.divides(&lh.m)
            })
            .min_by_key(|(k, (_, e))| (*e, *k))
            .map(|(k, _)| k);
        let Some(k) = best else { break };
        let eh = ecart(ord, &h);
        let g = reducers[k].0.clone();
        if reducers[k].1 > eh {
            reducers.push((h.clone(), eh));
        }
        h = reduce_step(ord, &h, &g);
    }
    h
}

/// Standard basis of an ideal (all vectors in component 0).
pub(crate) fn standard_basis(ord: &ModOrd, gens: &[Vector]) -> Vec<Vector> {
    let mut basis: Vec<Vector> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut todo: Vec<Vector> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    todo.reverse();
    loop {
        let next = if let Some(g) = todo.pop() {
            g
        } else if !pairs.is_empty() {
            let k = pairs
                .iter()
                .enumerate()
                .min_by_key(|(_, &(i, j))| {
                    let l = basis[i].lead().m.lcm(&basis[j].lead().m);
                    (ord.ring.g_degree(&l), j, i)
                })
                .map(|(k, _)| k)
                .expect("nonempty");
            let (i, j) = pairs.remove(k);
            spoly(ord, &basis[i], &basis[j])
        } else {
            break;
        };
        let mut r = weak_normal_form(ord, &next, &basis);
        if r.is_zero() {
            continue;
        }
        r.make_monic();
        let k = basis.len();
        for (i, b) in basis.iter().enumerate() {
            if b.lead().comp == r.lead().comp {
                pairs.push((i, k));
            }
        }
        basis.push(r);
    }
    basis.sort_by(|a, b| ord.cmp(a.lead(), b.lead()));
    basis
}

fn spoly(ord: &ModOrd, a: &Vector, b: &Vector) -> Vector {
    let lcm = a.lead().m.lcm(&b.lead().m);
    let qa = a.lead().m.quotient_of(&lcm).expect("lcm");
    let qb = b.lead().m.quotient_of(&lcm).expect("lcm");
    let ca: Coeff = b.lead().c.clone();
    let cb: Coeff = -a.lead().c.clone();
    let left = a.mul_term(&qa, &ca);
    Vector {
        terms: axpy(ord, &left.terms[1..], &b.terms[1..], &qb, &cb),
    }
}

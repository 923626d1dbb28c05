use std::collections::HashMap;

use itertools::Itertools;

use crate::groebner::{FreeModuleSpec, ModuleElement};
use crate::polyring::{Degree, Polynomial, Ring};
use crate::resolution::{FreeComplex, MatrixMap};
use crate::{Error, Result};

/// Koszul complex of a sequence of nonzero homogeneous elements.
#[derive(Clone, Debug)]
pub struct KoszulSpec {
    pub elements: Vec<Polynomial>,
    /// Degree of the generator of `F_0`.
    pub base: Degree,
}

/// A `2 x n` matrix `A` with homogeneous entries, the parameter `t` and the
/// truncation index `q` of the complex `0 -> K_{n-1} -> ... -> K_q`.
#[derive(Clone, Debug)]
pub struct GenKoszulSpec {
    pub rows: [Vec<Polynomial>; 2],
    pub t: i64,
    pub q: i64,
    /// Formal degree of `1 ⊗ 1`; basis degrees are offsets from it.
    pub base: Degree,
}

fn ring_of(ps: &[Polynomial]) -> Result<Ring> {
    ps.first()
        .map(|p| p.ring().clone())
        .ok_or_else(|| Error::InvalidInput("empty sequence".into()))
}

fn nonzero_degree(p: &Polynomial) -> Result<Degree> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    p.degree()
}

fn subset_index(n: usize, p: usize) -> (Vec<Vec<usize>>, HashMap<Vec<usize>, usize>) {
    let sets: Vec<Vec<usize>> = (0..n).combinations(p).collect();
    let idx = sets
        .iter()
        .cloned()
        .enumerate()
        .map(|(k, s)| (s, k))
        .collect();
    (sets, idx)
}

fn without(set: &[usize], pos: usize) -> Vec<usize> {
    let mut s = set.to_vec();
    s.remove(pos);
    s
}

fn sign(pos: usize) -> bool {
    pos % 2 == 1
}

fn accumulate(col: &mut [Polynomial], row: usize, p: &Polynomial, negative: bool) {
    col[row] = if negative {
        &col[row] - p
    } else {
        &col[row] + p
    };
}

pub fn koszul(spec: &KoszulSpec) -> Result<FreeComplex> {
    let ring = ring_of(&spec.elements)?;
    let a = &spec.elements;
    let n = a.len();
    let degs = a.iter().map(nonzero_degree).collect::<Result<Vec<_>>>()?;
    let module = |p: usize| -> (Vec<Vec<usize>>, HashMap<Vec<usize>, usize>, FreeModuleSpec) {
        let (sets, idx) = subset_index(n, p);
        let shifts = sets
            .iter()
            .map(|s| s.iter().fold(spec.base, |acc, &i| acc + degs[i]))
            .collect();
        (sets, idx, FreeModuleSpec::new(&ring, shifts))
    };
    let mut maps = Vec::new();
    for p in 1..=n {
        let (src_sets, _, src) = module(p);
        let (_, tgt_idx, tgt) = module(p - 1);
        let cols = src_sets
            .iter()
            .map(|set| {
                let mut col = vec![Polynomial::zero(&ring); tgt.rank()];
                for (pos, &i) in set.iter().enumerate() {
                    accumulate(&mut col, tgt_idx[&without(set, pos)], &a[i], sign(pos));
                }
                ModuleElement::new(&ring, col)
            })
            .collect();
        maps.push(MatrixMap::new(src, tgt, cols)?);
    }
    if maps.is_empty() {
        return Ok(FreeComplex::concentrated(FreeModuleSpec::new(
            &ring,
            vec![spec.base],
        )));
    }
    FreeComplex::new(maps)
}

/// Shape of `K_h`: exterior power, symmetric power, and whether `h > t`.
fn shape(h: i64, t: i64) -> (i64, i64, bool) {
    if h > t {
        (h + 1, h - t - 1, true)
    } else {
        (h, t - h, false)
    }
}

struct Piece {
    sets: Vec<Vec<usize>>,
    sym: usize,
    module: FreeModuleSpec,
}

impl Piece {
    /// Position of `e_I ⊗ X1^(sym-k) X2^k`.
    fn index(&self, set_idx: usize, k: usize) -> usize {
        set_idx * (self.sym + 1) + k
    }
}

/// The generalized Koszul complex `K(A, t)` truncated at `q`, with `F_i = K_{q+i}`.
/// Bases are `e_I ⊗ X1^(j-k) X2^k`, index sets in lexicographic order, `I`
/// outermost. Needs `A_{2i}` of degree `A_{1i}` plus a constant, and
/// `t <= n - 1`; exactness is only guaranteed for `t <= n - 2`, apart from
/// the square case `n = 2, t = 1`.
pub fn generalized_koszul(spec: &GenKoszulSpec) -> Result<FreeComplex> {
    let [r1, r2] = &spec.rows;
    let n = r1.len();
    if r2.len() != n || n < 2 {
        return Err(Error::InvalidInput("A must be 2 x n with n >= 2".into()));
    }
    let (t, q) = (spec.t, spec.q);
    if t > n as i64 - 1 {
        return Err(Error::Hypothesis(format!(
            "t = {t} exceeds n - 1 = {}",
            n - 1
        )));
    }
    if q < 0 {
        return Err(Error::Hypothesis(format!(
            "truncation index {q} is negative"
        )));
    }
    if q > n as i64 - 2 {
        return Err(Error::InvalidInput(format!(
            "truncation index {q} leaves no differentials"
        )));
    }
    let ring = ring_of(r1)?;
    let c = r1.iter().map(nonzero_degree).collect::<Result<Vec<_>>>()?;
    let d2 = r2.iter().map(nonzero_degree).collect::<Result<Vec<_>>>()?;
    let rho = d2[0] - c[0];
    if (0..n).any(|i| d2[i] - c[i] != rho) {
        return Err(Error::Inhomogeneous(
            "second row is not a uniform shift of the first".into(),
        ));
    }
    let a = |r: usize, i: usize| if r == 0 { &r1[i] } else { &r2[i] };
    let times = |d: Degree, k: i64| -> Degree {
        (0..k.abs()).fold(Degree::ZERO, |acc, _| if k > 0 { acc + d } else { acc - d })
    };
    let piece = |h: i64| -> (Piece, HashMap<Vec<usize>, usize>) {
        let (p, j, upper) = shape(h, t);
        let (sets, idx) = subset_index(n, p as usize);
        let mut shifts = Vec::new();
        for s in &sets {
            let sc = s.iter().fold(spec.base, |acc, &i| acc + c[i]);
            for k in 0..=j {
                shifts.push(if upper {
                    sc + times(rho, k + 1)
                } else {
                    sc - times(rho, k)
                });
            }
        }
        let module = FreeModuleSpec::new(&ring, shifts);
        (
            Piece {
                sets,
                sym: j as usize,
                module,
            },
            idx,
        )
    };
    let mut maps = Vec::new();
    for h in q + 1..=n as i64 - 1 {
        let (src, _) = piece(h);
        let (tgt, tgt_idx) = piece(h - 1);
        let mut cols = Vec::with_capacity(src.module.rank());
        for set in &src.sets {
            for k in 0..=src.sym {
                let mut col = vec![Polynomial::zero(&ring); tgt.module.rank()];
                if h == t + 1 {
                    // δ_2 ∘ δ_1 on the exterior part
                    for (p1, &i) in set.iter().enumerate() {
                        let mid = without(set, p1);
                        for (p2, &j) in mid.iter().enumerate() {
                            let row = tgt.index(tgt_idx[&without(&mid, p2)], 0);
                            accumulate(&mut col, row, &(a(0, i) * a(1, j)), sign(p1) != sign(p2));
                        }
                    }
                } else {
                    for r in 0..2 {
                        // X_r^{-1} above t + 1, X_r below
                        let k2 = match (h > t + 1, r) {
                            (_, 0) => Some(k),
                            (true, _) => k.checked_sub(1),
                            (false, _) => Some(k + 1),
                        };
                        let Some(k2) = k2 else { continue };
                        if h > t + 1 && r == 0 && k == src.sym {
                            continue;
                        }
                        for (pos, &i) in set.iter().enumerate() {
                            let row = tgt.index(tgt_idx[&without(set, pos)], k2);
                            accumulate(&mut col, row, a(r, i), sign(pos));
                        }
                    }
                }
                cols.push(ModuleElement::new(&ring, col));
            }
        }
        maps.push(MatrixMap::new(src.module, tgt.module, cols)?);
    }
    FreeComplex::new(maps)
}

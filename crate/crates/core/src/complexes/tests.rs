use super::*;
use crate::groebner::ModuleElement;
use crate::polyring::{parse_weight, Degree, MonomialOrder, Polynomial, Ring, RingSpec, Variable};
use crate::resolution::{betti_table, homology_is_zero, minimalize, FreeComplex, MatrixMap};
use crate::singularity::{jacobian_matrix, SingularityInput};
use crate::Error;

fn fermat(n: usize) -> SingularityInput {
    let f: Vec<String> = (1..=n).map(|i| format!("x{i}^3")).collect();
    let w = vec![parse_weight("1/3").unwrap(); n];
    SingularityInput::parse(n, &f.join(" + "), Some(w)).unwrap()
}

fn p(r: &Ring, s: &str) -> Polynomial {
    Polynomial::parse(r, s).unwrap()
}

fn k(rows: &[Vec<Polynomial>; 2], t: i64) -> FreeComplex {
    generalized_koszul(&GenKoszulSpec {
        rows: rows.clone(),
        t,
        q: 0,
        base: Degree::ZERO,
    })
    .unwrap()
}

fn binom(n: usize, r: usize) -> usize {
    if r > n {
        0
    } else {
        num::integer::binomial(n, r)
    }
}

#[test]
fn koszul_on_variables_is_exact() {
    let ring = RingSpec::new(
        ["a", "b", "c", "d"]
            .map(|v| Variable::new(v, 0, 0, None))
            .to_vec(),
        MonomialOrder::Graded,
    )
    .unwrap();
    let elements = ["a", "b^2", "c", "d"].map(|s| p(&ring, s)).to_vec();
    let c = koszul(&KoszulSpec {
        elements,
        base: Degree::ZERO,
    })
    .unwrap();
    assert_eq!(c.ranks(), [1, 4, 6, 4, 1]);
    for i in 1..=4 {
        assert!(homology_is_zero(&c, i, None).unwrap());
    }
}

#[test]
fn eagon_northcott_n2_is_the_single_minor() {
    let inp = fermat(2);
    let ring = inp.symbol_ring(false).unwrap();
    let a = jacobian_matrix(&inp, &ring).unwrap();
    let c = k(&a, 0);
    assert_eq!(c.ranks(), [1, 1]);
    // δ2(δ1(e1 ∧ e2)) = f'_1 (-xi2) - f'_2 (-xi1) = -S_12
    let s12 = p(&ring, "3*x1^2*xi2 - 3*x2^2*xi1");
    assert_eq!(c.map(1).entry(0, 0), &-&s12);
}

#[test]
fn eagon_northcott_n3_ranks() {
    let inp = fermat(3);
    let ring = inp.symbol_ring(false).unwrap();
    let c = k(&jacobian_matrix(&inp, &ring).unwrap(), 0);
    assert_eq!(c.ranks(), [1, 3, 2]);
    assert!(homology_is_zero(&c, 1, None).unwrap());
}

#[test]
fn buchsbaum_rim_n2_columns() {
    let inp = fermat(2);
    let ring = inp.symbol_ring(false).unwrap();
    let a = jacobian_matrix(&inp, &ring).unwrap();
    let c = k(&a, 1);
    assert_eq!(c.ranks(), [2, 2]);
    for (i, (top, bottom)) in a[0].iter().zip(&a[1]).enumerate() {
        assert_eq!(c.map(1).entry(0, i), top);
        assert_eq!(c.map(1).entry(1, i), bottom);
    }
}

#[test]
fn ranks_follow_exterior_and_symmetric_dimensions() {
    let inp = fermat(4);
    let ring = inp.symbol_ring(false).unwrap();
    let a = jacobian_matrix(&inp, &ring).unwrap();
    for t in -1..=2i64 {
        let c = k(&a, t);
        for h in 0..=3i64 {
            let (ext, sym) = if h > t {
                (h + 1, h - t - 1)
            } else {
                (h, t - h)
            };
            assert_eq!(
                c.module(h as usize).rank(),
                binom(4, ext as usize) * (sym as usize + 1),
                "t={t} h={h}"
            );
        }
    }
}

#[test]
fn parameter_out_of_range_is_a_hypothesis_error() {
    let inp = fermat(2);
    let ring = inp.symbol_ring(false).unwrap();
    let rows = jacobian_matrix(&inp, &ring).unwrap();
    let err = generalized_koszul(&GenKoszulSpec {
        rows,
        t: 2,
        q: 0,
        base: Degree::ZERO,
    })
    .unwrap_err();
    assert!(matches!(err, Error::Hypothesis(_)));
}

fn col(ring: &Ring, entries: Vec<Polynomial>) -> ModuleElement {
    ModuleElement::new(ring, entries)
}

fn shift_between(f0: &MatrixMap, src: &FreeComplex) -> Degree {
    for j in 0..f0.ncols() {
        for i in 0..f0.nrows() {
            let e = f0.entry(i, j);
            if !e.is_zero() {
                return e.degree().unwrap() - (src.module(0).shifts()[j] - f0.target().shifts()[i]);
            }
        }
    }
    Degree::ZERO
}

/// Matrix of `e_I ⊗ X^k -> c · e_I ⊗ X2^{-1} X^k` between consecutive
/// symmetric powers; `k` counts powers of `X2`.
fn divide_by_x2(
    src: &FreeComplex,
    tgt: &FreeComplex,
    i: usize,
    n_sets: usize,
    c: &Polynomial,
) -> Vec<ModuleElement> {
    let ring = c.ring();
    let (s, t) = (src.module(i).rank() / n_sets, tgt.module(i).rank() / n_sets);
    let mut cols = Vec::new();
    for set in 0..n_sets {
        for k in 0..s {
            let mut e = vec![Polynomial::zero(ring); tgt.module(i).rank()];
            if k >= 1 && k - 1 < t {
                e[set * t + k - 1] = c.clone();
            }
            cols.push(col(ring, e));
        }
    }
    cols
}

fn km1_to_k0(n: usize) -> (ChainMap, Ring) {
    let inp = fermat(n);
    let ring = inp.bigr_ring().unwrap();
    let a = jacobian_matrix(&inp, &ring).unwrap();
    let (km1, k0) = (k(&a, -1), k(&a, 0));
    let tau = p(&ring, "tau");
    let f0 = MatrixMap::new_unchecked(
        km1.module(0).clone(),
        k0.module(0).clone(),
        a[0].iter()
            .map(|d| col(&ring, vec![-&(&tau * d)]))
            .collect(),
    );
    let src = km1.twist(shift_between(&f0, &km1));
    let mut maps = vec![MatrixMap::new(
        src.module(0).clone(),
        k0.module(0).clone(),
        f0.columns().to_vec(),
    )
    .unwrap()];
    for i in 1..=src.len() {
        let cols = divide_by_x2(&src, &k0, i, binom(n, i + 1), &tau);
        maps.push(MatrixMap::new(src.module(i).clone(), k0.module(i).clone(), cols).unwrap());
    }
    (ChainMap::new(src, k0, maps).unwrap(), ring)
}

fn k0_to_k1(n: usize) -> ChainMap {
    let inp = fermat(n);
    let ring = inp.bigr_ring().unwrap();
    let a = jacobian_matrix(&inp, &ring).unwrap();
    let (k0, k1) = (k(&a, 0), k(&a, 1));
    let tau = p(&ring, "tau");
    let zero = Polynomial::zero(&ring);
    let f0 = MatrixMap::new_unchecked(
        k0.module(0).clone(),
        k1.module(0).clone(),
        vec![col(&ring, vec![zero.clone(), tau.clone()])],
    );
    let src = k0.twist(shift_between(&f0, &k0));
    let mut maps = vec![MatrixMap::new(
        src.module(0).clone(),
        k1.module(0).clone(),
        f0.columns().to_vec(),
    )
    .unwrap()];
    // α_1(ω ⊗ 1) = τ δ_1(ω) ⊗ 1 on Λ^2 -> Λ^1
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let cols = pairs
        .iter()
        .map(|&(i, j)| {
            let mut e = vec![zero.clone(); n];
            e[j] = &tau * &a[0][i];
            e[i] = -&(&tau * &a[0][j]);
            col(&ring, e)
        })
        .collect();
    maps.push(MatrixMap::new(src.module(1).clone(), k1.module(1).clone(), cols).unwrap());
    for i in 2..=src.len() {
        let cols = divide_by_x2(&src, &k1, i, binom(n, i + 1), &-&tau);
        maps.push(MatrixMap::new(src.module(i).clone(), k1.module(i).clone(), cols).unwrap());
    }
    ChainMap::new(src, k1, maps).unwrap()
}

#[test]
fn explicit_maps_are_chain_maps() {
    for n in [2, 3, 4] {
        km1_to_k0(n);
        k0_to_k1(n);
    }
}

#[test]
fn explicit_map_on_the_final_cone_commutes_at_level_one() {
    let (phi, ring) = km1_to_k0(2);
    let r_mod_j = mapping_cone(&phi).unwrap();
    let ann_mod_j = mapping_cone(&k0_to_k1(2)).unwrap();
    assert_eq!(r_mod_j.ranks(), [1, 3, 2]);
    assert_eq!(ann_mod_j.ranks(), [2, 3, 1]);
    let inp = fermat(2);
    let chi = crate::singularity::euler_symbol(&inp).unwrap();
    let f = inp.f().map_into(&ring).unwrap();
    let (t, zero) = (p(&ring, "t"), Polynomial::zero(&ring));
    let alpha0 = vec![
        col(&ring, vec![&(&t * &p(&ring, "tau")) + &chi]),
        col(&ring, vec![f]),
    ];
    // w_i x_i e_i in Λ^1, with w = 1/3
    let wx: Vec<Polynomial> = (1..=2).map(|i| p(&ring, &format!("x{i}/3"))).collect();
    // L_1 = (e1, e2 of K(1)_1) ⊕ (1 of K(0)_0); L'_1 = (e12 of K(0)_1) ⊕ (e1, e2 of K(-1)_0)
    let omega = |i: usize| {
        // ω = e_i: ω ∧ Σ w_j x_j e_j
        let wedge = if i == 0 { wx[1].clone() } else { -&wx[0] };
        let mut e = vec![-&wedge, zero.clone(), zero.clone()];
        e[1 + i] = -&t;
        col(&ring, e)
    };
    let alpha1 = vec![
        omega(0),
        omega(1),
        col(&ring, vec![zero.clone(), -&wx[0], -&wx[1]]),
    ];
    let a0 = MatrixMap::new_unchecked(
        ann_mod_j.module(0).clone(),
        r_mod_j.module(0).clone(),
        alpha0,
    );
    let a1 = MatrixMap::new_unchecked(
        ann_mod_j.module(1).clone(),
        r_mod_j.module(1).clone(),
        alpha1,
    );
    let lhs = r_mod_j.map(1).compose(&a1);
    let rhs = a0.compose(ann_mod_j.map(1));
    let plus = lhs.add(&rhs);
    let minus = lhs.add(&rhs.neg());
    assert!(
        minus.is_zero() || plus.is_zero(),
        "lhs:\n{lhs}\nrhs:\n{rhs}"
    );
}

#[test]
fn lifting_fails_when_the_map_does_not_descend() {
    let inp = fermat(2);
    let ring = inp.bigr_ring().unwrap();
    let a = jacobian_matrix(&inp, &ring).unwrap();
    let (k0, k1) = (k(&a, 0), k(&a, 1));
    let one = Polynomial::one(&ring);
    let f0 = MatrixMap::new_unchecked(
        k1.module(0).clone(),
        k0.module(0).clone(),
        vec![
            col(&ring, vec![one]),
            col(&ring, vec![Polynomial::zero(&ring)]),
        ],
    );
    let err = lift_chain_map(&f0, &k1, &k0).unwrap_err();
    assert!(matches!(err, Error::Lift { level: 1, .. }), "{err:?}");
}

#[test]
fn generic_lifts_agree_with_the_explicit_cones() {
    let inp = fermat(2);
    let cone = crate::singularity::thm3_cone(&inp).unwrap();
    assert_eq!(cone.ranks(), [1, 5, 5, 1]);
    let m = minimalize(&cone).unwrap();
    assert_eq!(betti_table(&m).unwrap().betti(), [1, 5, 5, 1]);
}

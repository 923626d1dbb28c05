use hsbetti::complexes::{koszul, KoszulSpec};
use hsbetti::groebner::{ideal_basis, normal_form, ModuleElement};
use hsbetti::polyring::{Coeff, Degree, MonomialOrder, Polynomial, Ring, RingSpec, Variable};
use hsbetti::resolution::{
    betti_table, homology_is_zero, minimalize, resolve_with, FreeComplex, MatrixMap,
    Strategy as Start,
};
use hsbetti::singularity::{bigr_n_ideal, reference_germs, symbol_koszul, SingularityInput};
use num::BigInt;
use proptest::prelude::*;

fn xyz() -> Ring {
    RingSpec::new(
        ["x", "y", "z"]
            .map(|v| Variable::new(v, 0, 0, None))
            .to_vec(),
        MonomialOrder::Graded,
    )
    .unwrap()
}

/// A homogeneous polynomial of degree `d` from sparse `(a, b, c)` data.
fn homogeneous(ring: &Ring, d: u16, terms: &[(u16, u16, i64)]) -> Polynomial {
    let mut p = Polynomial::zero(ring);
    for &(a, b, c) in terms {
        let (a, b) = (a % (d + 1), b % (d + 1));
        if a + b > d || c == 0 {
            continue;
        }
        let m = Polynomial::parse(ring, &format!("x^{a}*y^{b}*z^{}", d - a - b)).unwrap();
        p = p.add_scaled(&m, &Coeff::from_integer(BigInt::from(c)));
    }
    if p.is_zero() {
        Polynomial::parse(ring, &format!("x^{d}")).unwrap()
    } else {
        p
    }
}

fn ideal() -> impl Strategy<Value = Vec<Polynomial>> {
    prop::collection::vec(
        (
            1u16..=3,
            prop::collection::vec((0u16..4, 0u16..4, -3i64..=3), 1..4),
        ),
        1..4,
    )
    .prop_map(|gs| {
        let r = xyz();
        gs.iter().map(|(d, t)| homogeneous(&r, *d, t)).collect()
    })
}

fn assert_minimal_and_stable(c: &FreeComplex) {
    c.check_complex().unwrap();
    let m = minimalize(c).unwrap();
    m.check_complex().unwrap();
    assert!(m.is_minimal());
    assert_eq!(minimalize(&m).unwrap(), m);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn groebner_basis_generates_the_same_ideal(gens in ideal()) {
        let gb = ideal_basis(&gens).unwrap();
        for g in &gens {
            prop_assert!(gb.contains_poly(g));
        }
        // membership of the basis in the ideal, checked under another order
        let other = gens[0].ring().with_order(MonomialOrder::Weighted(vec![3, 1, 2])).unwrap();
        let moved: Vec<Polynomial> = gens.iter().map(|g| g.map_into(&other).unwrap()).collect();
        let gb2 = ideal_basis(&moved).unwrap();
        for p in gb.polynomials() {
            let e = ModuleElement::new(&other, vec![p.map_into(&other).unwrap()]);
            prop_assert!(normal_form(&e, &gb2).unwrap().is_zero());
        }
        for p in gb2.polynomials() {
            prop_assert!(gb.contains_poly(&p.map_into(gens[0].ring()).unwrap()));
        }
    }

    #[test]
    fn resolutions_are_complexes_and_minimalization_is_idempotent(gens in ideal()) {
        let p = MatrixMap::presentation(&gens).unwrap();
        let a = resolve_with(&p, 4, Start::AsGiven).unwrap();
        let b = resolve_with(&p, 4, Start::GroebnerCover).unwrap();
        assert_minimal_and_stable(&a);
        assert_minimal_and_stable(&b);
        let ta = betti_table(&minimalize(&a).unwrap()).unwrap();
        let tb = betti_table(&minimalize(&b).unwrap()).unwrap();
        prop_assert_eq!(ta, tb);
    }

    #[test]
    fn koszul_complexes_square_to_zero(gens in ideal()) {
        let c = koszul(&KoszulSpec { elements: gens, base: Degree::ZERO }).unwrap();
        c.check_complex().unwrap();
    }
}

#[test]
fn betti_tables_do_not_depend_on_the_initial_resolution() {
    for inp in reference_germs() {
        let p = MatrixMap::presentation(&bigr_n_ideal(&inp).unwrap()).unwrap();
        let len = p.ring().nvars() + 1;
        let tables: Vec<_> = [Start::Minimal, Start::GroebnerCover, Start::AsGiven]
            .into_iter()
            .map(|s| {
                let c = resolve_with(&p, len, s).unwrap();
                c.check_complex().unwrap();
                let m = minimalize(&c).unwrap();
                assert_eq!(minimalize(&m).unwrap(), m);
                betti_table(&m).unwrap()
            })
            .collect();
        assert_eq!(tables[0], tables[1], "{}", inp.f());
        assert_eq!(tables[0], tables[2], "{}", inp.f());
    }
}

#[test]
fn truncated_generalized_koszul_complexes_are_exact() {
    for n in 2..=4 {
        let f: Vec<String> = (1..=n).map(|i| format!("x{i}^2")).collect();
        let w = vec![hsbetti::polyring::parse_weight("1/2").unwrap(); n];
        let inp = SingularityInput::parse(n, &f.join(" + "), Some(w)).unwrap();
        for t in [0, 1] {
            let c = symbol_koszul(&inp, t).unwrap();
            c.check_complex().unwrap();
            for pos in 1..n {
                assert!(
                    homology_is_zero(&c, pos, None).unwrap(),
                    "n={n} t={t} position {pos}"
                );
            }
        }
    }
}

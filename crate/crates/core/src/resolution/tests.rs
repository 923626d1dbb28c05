use super::*;
use crate::polyring::{Bidegree, MonomialOrder, Polynomial, Ring, RingSpec, Variable};

fn ring(names: &[&str]) -> Ring {
    RingSpec::new(
        names
            .iter()
            .map(|n| Variable::new(*n, 0, 0, None))
            .collect(),
        MonomialOrder::Graded,
    )
    .unwrap()
}

fn polys(r: &Ring, s: &[&str]) -> Vec<Polynomial> {
    s.iter().map(|s| Polynomial::parse(r, s).unwrap()).collect()
}

#[test]
fn regular_sequence_resolves_like_koszul() {
    let r = ring(&["x", "y"]);
    let p = MatrixMap::presentation(&polys(&r, &["x", "y"])).unwrap();
    let c = resolve(&p, 3).unwrap();
    assert_eq!(c.ranks(), [1, 2, 1]);
    assert!(homology_is_zero(&c, 1, None).unwrap());
}

#[test]
fn redundant_generator_is_cancelled() {
    let r = ring(&["x"]);
    let p = MatrixMap::presentation(&polys(&r, &["x", "x"])).unwrap();
    let c = resolve_with(&p, 2, Strategy::AsGiven).unwrap();
    assert_eq!(c.ranks(), [1, 2, 1]);
    assert!(betti_table(&c).is_err());
    let m = minimalize(&c).unwrap();
    assert_eq!(m.ranks(), [1, 1]);
    assert_eq!(m.map(1).entry(0, 0).to_string(), "x");
    assert_eq!(minimalize(&m).unwrap(), m);
}

#[test]
fn betti_of_free_module_and_regularity() {
    let r = ring(&["x"]);
    let c = FreeComplex::concentrated(crate::groebner::FreeModuleSpec::free(&r, 1));
    let t = betti_table(&c).unwrap();
    assert_eq!(t.betti(), [1]);
    assert_eq!(regularity_f(&t), 0);
    let t = BettiTable::from_shifts(vec![vec![Bidegree::new(0, 0)], vec![Bidegree::new(2, 0)]]);
    assert_eq!(regularity_f(&t), 1);
}

#[test]
fn betti_json_round_trip() {
    let t = BettiTable::from_shifts(vec![
        vec![Bidegree::new(0, 0)],
        vec![Bidegree::new(1, 0), Bidegree::new(0, 1)],
    ]);
    let s = serde_json::to_string(&t).unwrap();
    assert_eq!(
        s,
        r#"{"betti":[1,2],"shifts":[[[0,0]],[[0,1],[1,0]]],"regularity_F":0}"#
    );
    let back: BettiTable = serde_json::from_str(&s).unwrap();
    assert_eq!(back, t);
    assert!(serde_json::from_str::<BettiTable>(
        r#"{"betti":[2],"shifts":[[[0,0]]],"regularity_F":0}"#
    )
    .is_err());
}

#[test]
fn non_regular_koszul_has_homology() {
    let r = ring(&["x"]);
    let x = Polynomial::parse(&r, "x").unwrap();
    let f0 = crate::groebner::FreeModuleSpec::free(&r, 1);
    let d1 = MatrixMap::presentation(&[x.clone(), x.clone()]).unwrap();
    let f1 = d1.source().clone();
    let f2 = crate::groebner::FreeModuleSpec::new(&r, vec![f1.shifts()[0] + f1.shifts()[1]]);
    let d2 = MatrixMap::from_rows(f2, f1, vec![vec![-&x], vec![x.clone()]]).unwrap();
    let c = FreeComplex::new(vec![d1, d2]).unwrap();
    assert_eq!(c.module(0), &f0);
    assert!(!homology_is_zero(&c, 1, None).unwrap());
    assert!(homology_is_zero(&c, 1, Some(Window { max_g: 0 })).unwrap());
}

#[test]
fn strategies_agree_after_minimalization() {
    let r = ring(&["x", "y", "z"]);
    let gens = polys(&r, &["x^2", "x*y", "y*z", "z^3", "x*y + y*z"]);
    let p = MatrixMap::presentation(&gens).unwrap();
    let a = betti_table(&minimalize(&resolve(&p, 4).unwrap()).unwrap()).unwrap();
    for s in [Strategy::GroebnerCover, Strategy::AsGiven] {
        let c = resolve_with(&p, 4, s).unwrap();
        c.check_complex().unwrap();
        let b = betti_table(&minimalize(&c).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn bad_composite_is_rejected() {
    let r = ring(&["x"]);
    let x = Polynomial::parse(&r, "x").unwrap();
    let d1 = MatrixMap::presentation(std::slice::from_ref(&x)).unwrap();
    let f2 = crate::groebner::FreeModuleSpec::new(
        &r,
        vec![d1.source().shifts()[0] + d1.source().shifts()[0]],
    );
    let d2 = MatrixMap::from_rows(f2, d1.source().clone(), vec![vec![x]]).unwrap();
    assert_eq!(
        FreeComplex::new(vec![d1, d2]),
        Err(crate::Error::NotAComplex(1, 2))
    );
}

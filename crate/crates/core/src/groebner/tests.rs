use super::*;
use crate::polyring::{MonomialOrder, RingSpec, Variable};

fn ring(names: &[&str], order: MonomialOrder) -> Ring {
    RingSpec::new(
        names
            .iter()
            .map(|n| Variable::new(*n, 0, 0, None))
            .collect(),
        order,
    )
    .unwrap()
}

fn polys(r: &Ring, s: &[&str]) -> Vec<Polynomial> {
    s.iter().map(|s| Polynomial::parse(r, s).unwrap()).collect()
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn col(r: &Ring, s: &[&str]) -> ModuleElement {
    ModuleElement::new(r, polys(r, s))
}

#[test]
fn small_ideal_bases() {
    let r = ring(&["x", "y"], MonomialOrder::Graded);
    let gb = ideal_basis(&polys(&r, &["x^2 + y", "y"])).unwrap();
    assert_eq!(strings(&gb.polynomials()), ["y", "x^2"]);
    let gb = ideal_basis(&polys(&r, &["x"])).unwrap();
    assert_eq!(strings(&gb.polynomials()), ["x"]);
}

#[test]
fn cyclic_three_basis_is_consistent() {
    let r = ring(&["a", "b", "c"], MonomialOrder::Graded);
    let gens = polys(&r, &["a+b+c", "a*b+b*c+c*a", "a*b*c-1"]);
    let gb = ideal_basis(&gens).unwrap();
    for g in &gens {
        assert!(gb.contains_poly(g));
    }
    let src = ideal_basis(&gens).unwrap();
    for g in gb.polynomials() {
        assert!(src.contains_poly(&g));
    }
    // every S-pair reduces to zero
    let ps = gb.polynomials();
    for i in 0..ps.len() {
        for j in 0..i {
            let (li, lj) = (
                ps[i].leading_monomial().unwrap(),
                ps[j].leading_monomial().unwrap(),
            );
            let l = li.lcm(lj);
            let one = num::One::one();
            let s = &ps[i].mul_term(&li.quotient_of(&l).unwrap(), &one)
                - &ps[j].mul_term(&lj.quotient_of(&l).unwrap(), &one);
            assert!(gb.reduce_poly(&s).unwrap().is_zero());
        }
    }
}

#[test]
fn local_and_global_normal_forms() {
    let local = ring(&["x"], MonomialOrder::Local);
    let gb = ideal_basis(&polys(&local, &["x - x^2"])).unwrap();
    assert_eq!(gb.mode(), Mode::Local);
    let nf = gb
        .reduce_poly(&Polynomial::parse(&local, "x").unwrap())
        .unwrap();
    assert!(nf.is_zero());

    let global = ring(&["x"], MonomialOrder::Graded);
    let gb = ideal_basis(&polys(&global, &["x - x^2"])).unwrap();
    let nf = gb
        .reduce_poly(&Polynomial::parse(&global, "x").unwrap())
        .unwrap();
    assert_eq!(nf.to_string(), "x");
    assert!(gb
        .reduce_poly(&Polynomial::zero(&global))
        .unwrap()
        .is_zero());

    let e = ModuleElement::new(&local, polys(&local, &["x"]));
    let global_gb = ideal_basis(&polys(&global, &["x"])).unwrap();
    assert!(matches!(
        normal_form(&e, &global_gb),
        Err(Error::ModeMismatch(_))
    ));
}

#[test]
fn koszul_and_hilbert_burch_syzygies() {
    let r = ring(&["x", "y"], MonomialOrder::Graded);
    let m = FreeModuleSpec::free(&r, 1);
    for gens in [["x", "y"], ["x^2", "x*y"]] {
        let cols: Vec<_> = gens.iter().map(|g| col(&r, &[g])).collect();
        let syz = syzygies_of(&cols, &m).unwrap();
        let keep = minimal_generators(&syz, &FreeModuleSpec::free(&r, 2)).unwrap();
        assert_eq!(keep.len(), 1);
        let s = &syz[keep[0]];
        let y = Polynomial::parse(&r, "y").unwrap();
        let x = Polynomial::parse(&r, "x").unwrap();
        let lc = s.component(0).leading_coeff().unwrap().clone();
        assert_eq!(s.component(0).scale(&lc.recip()), y);
        assert_eq!(s.component(1).scale(&lc.recip()), -&x);
    }
    let syz = syzygies_of(&[col(&r, &["x"])], &m).unwrap();
    assert!(syz.is_empty());
}

#[test]
fn syzygies_annihilate_generators() {
    let r = ring(&["x", "y", "z"], MonomialOrder::Graded);
    let m = FreeModuleSpec::free(&r, 2);
    let gens = vec![
        col(&r, &["x", "y"]),
        col(&r, &["y", "z"]),
        col(&r, &["x*z", "y^2"]),
        col(&r, &["0", "x*y"]),
    ];
    let syz = syzygies_of(&gens, &m).unwrap();
    assert!(!syz.is_empty());
    for s in &syz {
        let mut acc = ModuleElement::zero(&r, 2);
        for (j, g) in gens.iter().enumerate() {
            acc = acc.add(&g.mul_poly(s.component(j)));
        }
        assert!(acc.is_zero());
    }
    let gb = buchberger(&gens, &m, ModuleOrder::Top, Mode::Global).unwrap();
    for s in syzygies(&gb).unwrap() {
        let mut acc = ModuleElement::zero(&r, 2);
        for (j, g) in gb.elements().iter().enumerate() {
            acc = acc.add(&g.mul_poly(s.component(j)));
        }
        assert!(acc.is_zero());
    }
}

#[test]
fn module_orders_give_equal_submodules() {
    let r = ring(&["x", "y"], MonomialOrder::Graded);
    let m = FreeModuleSpec::free(&r, 2);
    let gens = vec![col(&r, &["x", "y"]), col(&r, &["y^2", "x^2"])];
    let top = buchberger(&gens, &m, ModuleOrder::Top, Mode::Global).unwrap();
    let pot = buchberger(&gens, &m, ModuleOrder::Pot, Mode::Global).unwrap();
    for e in pot.elements() {
        assert!(top.contains(e));
    }
    for e in top.elements() {
        assert!(pot.contains(e));
    }
}

#[test]
fn elimination_examples() {
    let r = ring(&["T", "s", "x", "xi"], MonomialOrder::Graded);
    let out = eliminate(&polys(&r, &["s - x^2*T", "xi - 2*x*T"]), &[0]).unwrap();
    assert_eq!(out.len(), 1);
    let expected = Polynomial::parse(&r, "s - 1/2*x*xi").unwrap();
    assert_eq!(out[0].monic(), expected.monic());

    let r = ring(&["x", "y"], MonomialOrder::Graded);
    assert!(eliminate(&polys(&r, &["y - x^2"]), &[0])
        .unwrap()
        .is_empty());

    let r = ring(&["T", "x"], MonomialOrder::Graded);
    let out = eliminate(&polys(&r, &["T*x", "T - 1"]), &[0]).unwrap();
    assert_eq!(strings(&out), ["x"]);
}

#[test]
fn staircases() {
    let r = ring(&["x", "y"], MonomialOrder::Graded);
    let gb = ideal_basis(&polys(&r, &["x^2", "y^2"])).unwrap();
    let st = quotient_staircase(&gb).unwrap();
    assert_eq!(st.len(), 4);
    let gb = ideal_basis(&polys(&r, &["x"])).unwrap();
    assert_eq!(quotient_staircase(&gb), Err(Error::InfiniteDimensional));
    let r1 = ring(&["x"], MonomialOrder::Graded);
    let gb = ideal_basis(&polys(&r1, &["x"])).unwrap();
    assert_eq!(quotient_staircase(&gb).unwrap(), vec![Monomial::one(1)]);
}

#[test]
fn local_staircase_of_jacobian() {
    let r = ring(&["x", "y"], MonomialOrder::Local);
    // unit factor 1 + x is invisible locally
    let gb = ideal_basis(&polys(&r, &["x + x^2", "y^2"])).unwrap();
    assert_eq!(quotient_staircase(&gb).unwrap().len(), 2);
    let gb = ideal_basis(&polys(&r, &["3*x^2 + y^5", "7*y^6 + 5*x*y^4"])).unwrap();
    assert_eq!(quotient_staircase(&gb).unwrap().len(), 12);
}

use super::ideals::{bigr_n_ideal, euler_in, partials, xi};
use super::input::SingularityInput;
use super::invariants::milnor_number;
use crate::bettimath::{thm3_closed_form, BettiPolynomial};
use crate::complexes::{generalized_koszul, lift_chain_map, mapping_cone, GenKoszulSpec};
use crate::groebner::{FreeModuleSpec, ModuleElement};
use crate::polyring::{Degree, MonomialOrder, Polynomial, Ring, RingSpec, Variable};
use crate::resolution::{betti_table, minimalize, resolve, BettiTable, FreeComplex, MatrixMap};
use crate::{Error, Result};

/// A minimal resolution of `R / ann(delta)` with its Betti table and, when
/// one is known, the closed-form Betti sequence it should match.
#[derive(Clone, Debug)]
pub struct NfResolution {
    pub complex: FreeComplex,
    pub table: BettiTable,
    pub closed_form: Option<BettiPolynomial>,
}

/// Weights must be present and the Milnor number finite.
fn check_input(inp: &SingularityInput) -> Result<()> {
    inp.require_weights()?;
    milnor_number(inp).map(|_| ())
}

/// Minimal bigraded resolution of `R / ann(delta)`; `max_length` defaults to
/// the number of ring variables plus one.
pub fn resolve_nf(inp: &SingularityInput, max_length: Option<usize>) -> Result<NfResolution> {
    check_input(inp)?;
    let gens = bigr_n_ideal(inp)?;
    let len = max_length.unwrap_or(gens[0].ring().nvars() + 1);
    let c = minimalize(&resolve(&MatrixMap::presentation(&gens)?, len)?)?;
    let table = betti_table(&c)?;
    let closed_form = (inp.n() >= 2).then(|| thm3_closed_form(inp.n() as u64));
    Ok(NfResolution {
        complex: c,
        table,
        closed_form,
    })
}

pub fn betti_of_nf(inp: &SingularityInput, max_length: Option<usize>) -> Result<BettiTable> {
    Ok(resolve_nf(inp, max_length)?.table)
}

/// The matrix with rows `f'_1 .. f'_n` and `-xi_1 .. -xi_n`, over `ring`.
pub fn jacobian_matrix(inp: &SingularityInput, ring: &Ring) -> Result<[Vec<Polynomial>; 2]> {
    let d = partials(inp, ring)?;
    let neg_xi = (0..inp.n()).map(|i| -&xi(ring, i)).collect();
    Ok([d, neg_xi])
}

fn gen_koszul(rows: &[Vec<Polynomial>; 2], t: i64) -> Result<FreeComplex> {
    generalized_koszul(&GenKoszulSpec {
        rows: rows.clone(),
        t,
        q: 0,
        base: Degree::ZERO,
    })
}

/// `K(t)` built on [`jacobian_matrix`] over `Q[x][xi]`.
pub fn symbol_koszul(inp: &SingularityInput, t: i64) -> Result<FreeComplex> {
    let ring = inp.symbol_ring(false)?;
    gen_koszul(&jacobian_matrix(inp, &ring)?, t)
}

fn map_from_columns(target: &FreeModuleSpec, cols: Vec<Vec<Polynomial>>) -> Result<MatrixMap> {
    let ring = target.ring();
    let cols: Vec<ModuleElement> = cols
        .into_iter()
        .map(|c| ModuleElement::new(ring, c))
        .collect();
    MatrixMap::from_columns(target.clone(), cols)
}

/// Non-minimal resolution of `R / ann(delta)` as an iterated mapping cone:
/// first `R/J` from `K(-1) -> K(0)`, then `ann(delta)/J` from `K(0) -> K(1)`,
/// then the cone of `X1 -> t tau + chi`, `X2 -> f`.
pub fn thm3_cone(inp: &SingularityInput) -> Result<FreeComplex> {
    check_input(inp)?;
    if inp.n() < 2 {
        return Err(Error::InvalidInput(
            "the cone construction needs n >= 2".into(),
        ));
    }
    let ring = inp.bigr_ring()?;
    let a = jacobian_matrix(inp, &ring)?;
    let (km1, k0, k1) = (gen_koszul(&a, -1)?, gen_koszul(&a, 0)?, gen_koszul(&a, 1)?);
    let tau = Polynomial::named(&ring, "tau")?;
    let t = Polynomial::named(&ring, "t")?;
    let zero = Polynomial::zero(&ring);

    let f0 = map_from_columns(
        k0.module(0),
        a[0].iter().map(|d| vec![-&(&tau * d)]).collect(),
    )?;
    let r_mod_j = mapping_cone(&lift_chain_map(&f0, &km1, &k0)?)?;

    let f0 = map_from_columns(k1.module(0), vec![vec![zero, tau.clone()]])?;
    let ann_mod_j = mapping_cone(&lift_chain_map(&f0, &k0, &k1)?)?;

    let chi = euler_in(inp, &ring)?;
    let f = inp.f().map_into(&ring)?;
    let f0 = map_from_columns(r_mod_j.module(0), vec![vec![&(&t * &tau) + &chi], vec![f]])?;
    mapping_cone(&lift_chain_map(&f0, &ann_mod_j, &r_mod_j)?)
}

/// Resolution of `gr(D[s] f^s) = Q[x][s, xi] / (s - chi, S_ij)` as the cone
/// of `s - chi` on `K(0)`.
pub fn dsfs_cone(inp: &SingularityInput) -> Result<FreeComplex> {
    inp.require_weights()?;
    let ring = inp.symbol_ring(true)?;
    let k0 = gen_koszul(&jacobian_matrix(inp, &ring)?, 0)?;
    let s = &Polynomial::named(&ring, "s")? - &euler_in(inp, &ring)?;
    let f0 = map_from_columns(k0.module(0), vec![vec![s]])?;
    mapping_cone(&lift_chain_map(&f0, &k0, &k0)?)
}

/// Resolution of `gr(M)` as the cone of multiplication by `f` on
/// [`dsfs_cone`].
pub fn m_cone(inp: &SingularityInput) -> Result<FreeComplex> {
    let d = dsfs_cone(inp)?;
    let ring = d.module(0).ring().clone();
    let f = inp.f().map_into(&ring)?;
    let f0 = map_from_columns(d.module(0), vec![vec![f]])?;
    mapping_cone(&lift_chain_map(&f0, &d, &d)?)
}

/// The smooth germ `f = x1` after forgetting the V-filtration: the ring
/// `Q[x1..xn, t, xi1..xin, tau]` with `t` and `tau` of V-degree 0, and the
/// regular sequence `t - x1, xi1 + tau, xi2, .., xin`.
pub fn smooth_koszul_ideal(n: usize) -> Result<Vec<Polynomial>> {
    if n == 0 {
        return Err(Error::InvalidInput("need at least one variable".into()));
    }
    let mut vars: Vec<Variable> = (0..n)
        .map(|i| Variable::new(format!("x{}", i + 1), 0, 0, None))
        .collect();
    vars.push(Variable::new("t", 0, 0, None));
    vars.extend((0..n).map(|i| Variable::new(format!("xi{}", i + 1), 1, 0, None)));
    vars.push(Variable::new("tau", 1, 0, None));
    let ring = RingSpec::new(vars, MonomialOrder::Graded)?;
    let p = |s: &str| Polynomial::parse(&ring, s);
    let mut out = vec![p("t - x1")?, p("xi1 + tau")?];
    for i in 2..=n {
        out.push(p(&format!("xi{i}"))?);
    }
    Ok(out)
}

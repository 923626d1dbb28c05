use super::input::{xi_name, SingularityInput};
use crate::groebner::{eliminate, ideal_basis};
use crate::polyring::polynomial::weight_to_coeff;
use crate::polyring::{MonomialOrder, Polynomial, Ring, RingSpec, Variable, Weight};
use crate::Result;

/// The nonzero partial derivatives `f'_i`, in the ring of `f`.
pub fn jacobian_ideal(inp: &SingularityInput) -> Vec<Polynomial> {
    (0..inp.n())
        .map(|i| inp.f().derivative(i))
        .filter(|p| !p.is_zero())
        .collect()
}

/// All partial derivatives, zeros included, mapped into `ring`.
pub(crate) fn partials(inp: &SingularityInput, ring: &Ring) -> Result<Vec<Polynomial>> {
    (0..inp.n())
        .map(|i| inp.f().derivative(i).map_into(ring))
        .collect()
}

pub(crate) fn xi(ring: &Ring, i: usize) -> Polynomial {
    Polynomial::named(ring, &xi_name(i)).expect("ring has xi variables")
}

/// `S_ij = f'_i xi_j - f'_j xi_i` for `i < j`, skipping zeros.
fn s_ij(inp: &SingularityInput, ring: &Ring) -> Result<Vec<Polynomial>> {
    let d = partials(inp, ring)?;
    let mut out = Vec::new();
    for i in 0..inp.n() {
        for j in i + 1..inp.n() {
            let s = &(&d[i] * &xi(ring, j)) - &(&d[j] * &xi(ring, i));
            if !s.is_zero() {
                out.push(s);
            }
        }
    }
    Ok(out)
}

/// The symbol `chi = sum w_i x_i xi_i` of the Euler field, in `R`.
pub fn euler_symbol(inp: &SingularityInput) -> Result<Polynomial> {
    let ring = inp.bigr_ring()?;
    euler_in(inp, &ring)
}

pub(crate) fn euler_in(inp: &SingularityInput, ring: &Ring) -> Result<Polynomial> {
    let w = inp.require_weights()?;
    let mut chi = Polynomial::zero(ring);
    for (i, &wi) in w.iter().enumerate() {
        let x = inp.f().ring().var_names()[i].to_string();
        let term = &Polynomial::named(ring, &x)? * &xi(ring, i);
        chi = chi.add_scaled(&term, &weight_to_coeff(wi));
    }
    Ok(chi)
}

/// Generators of the annihilator ideal in `R = Q[x][t, xi, tau]`:
/// `f`, `t tau + chi`, the `S_ij`, and `f'_i tau`.
pub fn bigr_n_ideal(inp: &SingularityInput) -> Result<Vec<Polynomial>> {
    let ring = inp.bigr_ring()?;
    let chi = euler_in(inp, &ring)?;
    let t = Polynomial::named(&ring, "t")?;
    let tau = Polynomial::named(&ring, "tau")?;
    let mut out = vec![inp.f().map_into(&ring)?, &(&t * &tau) + &chi];
    out.extend(s_ij(inp, &ring)?);
    for d in partials(inp, &ring)? {
        if !d.is_zero() {
            out.push(&d * &tau);
        }
    }
    Ok(out)
}

/// Generators `s - chi` and `S_ij` of the symbol ideal in `Q[x][s, xi]`.
pub fn gr_dsfs_ideal(inp: &SingularityInput) -> Result<Vec<Polynomial>> {
    let ring = inp.symbol_ring(true)?;
    let chi = euler_in(inp, &ring)?;
    let mut out = vec![&Polynomial::named(&ring, "s")? - &chi];
    out.extend(s_ij(inp, &ring)?);
    Ok(out)
}

/// Reduced Gröbner basis of the kernel of `s -> f T, xi_i -> f'_i T`
/// (or of `xi_i -> f'_i T` alone), in `Q[x][s, xi]` (or `Q[x][xi]`).
pub fn rees_kernel(inp: &SingularityInput, include_f: bool) -> Result<Vec<Polynomial>> {
    let target = inp.symbol_ring(include_f)?;
    let mut vars = vec![Variable::new(
        "T",
        1,
        0,
        inp.weights().map(|_| Weight::from_integer(0)),
    )];
    vars.extend(target.vars().iter().cloned());
    let big = RingSpec::new(vars, MonomialOrder::Graded)?;
    let t = Polynomial::named(&big, "T")?;
    let mut graph = Vec::new();
    if include_f {
        graph.push(&Polynomial::named(&big, "s")? - &(&inp.f().map_into(&big)? * &t));
    }
    for (i, d) in partials(inp, &big)?.into_iter().enumerate() {
        graph.push(&xi(&big, i) - &(&d * &t));
    }
    let kernel: Vec<Polynomial> = eliminate(&graph, &[0])?
        .into_iter()
        .map(|p| p.map_into(&target))
        .collect::<Result<_>>()?;
    if kernel.is_empty() {
        return Ok(kernel);
    }
    Ok(ideal_basis(&kernel)?.polynomials())
}

/// Whether the ideal is generated by its elements of F-degree at most one.
/// Expects F-homogeneous generators, as produced by [`rees_kernel`].
pub fn is_linear_type(kernel_gens: &[Polynomial]) -> Result<bool> {
    let gens: Vec<Polynomial> = kernel_gens
        .iter()
        .filter(|p| !p.is_zero())
        .cloned()
        .collect();
    if gens.is_empty() {
        return Ok(true);
    }
    let gb = ideal_basis(&gens)?;
    let mut low = Vec::new();
    for g in gb.polynomials() {
        if f_degree(&g)? <= 1 {
            low.push(g);
        }
    }
    if low.is_empty() {
        return Ok(false);
    }
    let lin = ideal_basis(&low)?;
    Ok(gb.polynomials().iter().all(|g| lin.contains_poly(g)))
}

fn f_degree(p: &Polynomial) -> Result<i64> {
    let ring = p.ring();
    let mut d = None;
    for (m, _) in p.terms() {
        let e: i64 = m
            .exponents()
            .iter()
            .zip(ring.vars())
            .map(|(&e, v)| e as i64 * v.f_weight)
            .sum();
        match d {
            None => d = Some(e),
            Some(x) if x != e => {
                return Err(crate::Error::Inhomogeneous(format!(
                    "{p} is not homogeneous in F-degree"
                )))
            }
            _ => {}
        }
    }
    Ok(d.unwrap_or(0))
}

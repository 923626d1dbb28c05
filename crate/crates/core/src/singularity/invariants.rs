use serde::{Deserialize, Serialize};

use super::{jacobian_ideal, SingularityInput};
use crate::groebner::{ideal_basis, quotient_staircase};
use crate::polyring::{MonomialOrder, Polynomial};
use crate::{Error, Result};

/// Milnor and Tjurina numbers at the origin and the resulting verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationVerdict {
    pub milnor: usize,
    pub tjurina: usize,
    pub quasi_homogeneous: bool,
    pub method: String,
}

fn local_dimension(inp: &SingularityInput, gens: Vec<Polynomial>) -> Result<usize> {
    let local = inp.x_ring().with_order(MonomialOrder::Local)?;
    let gens: Vec<Polynomial> = gens
        .iter()
        .map(|g| g.map_into(&local))
        .collect::<Result<_>>()?;
    if gens.is_empty() {
        return Err(Error::InfiniteDimensional);
    }
    Ok(quotient_staircase(&ideal_basis(&gens)?)?.len())
}

/// `dim Q[x]_(x) / J(f)`.
pub fn milnor_number(inp: &SingularityInput) -> Result<usize> {
    local_dimension(inp, jacobian_ideal(inp))
}

/// `dim Q[x]_(x) / (f, J(f))`.
pub fn tjurina_number(inp: &SingularityInput) -> Result<usize> {
    let mut gens = jacobian_ideal(inp);
    gens.push(inp.f().clone());
    local_dimension(inp, gens)
}

/// An isolated singularity is quasi-homogeneous exactly when `mu = tau`.
pub fn classify_quasi_homogeneous(inp: &SingularityInput) -> Result<ClassificationVerdict> {
    let milnor = milnor_number(inp)?;
    let tjurina = tjurina_number(inp)?;
    Ok(ClassificationVerdict {
        milnor,
        tjurina,
        quasi_homogeneous: milnor == tjurina,
        method: "local standard bases (Mora), staircase count".into(),
    })
}

//! Koszul and generalized Koszul complexes, chain maps lifted from their
//! degree-0 component, and mapping cones.
//!
//! ```
//! use hsbetti::complexes::{koszul, KoszulSpec};
//! use hsbetti::polyring::{Degree, MonomialOrder, Polynomial, RingSpec, Variable};
//!
//! let ring = RingSpec::new(
//!     ["x", "y", "z"].map(|v| Variable::new(v, 0, 0, None)).to_vec(),
//!     MonomialOrder::Graded,
//! ).unwrap();
//! let elements = ["x", "y", "z"].map(|v| Polynomial::parse(&ring, v).unwrap()).to_vec();
//! let k = koszul(&KoszulSpec { elements, base: Degree::ZERO }).unwrap();
//! assert_eq!(k.ranks(), [1, 3, 3, 1]);
//! ```

mod chain;
mod koszul;
#[cfg(test)]
mod tests;

pub use chain::{lift_chain_map, mapping_cone, ChainMap};
pub use koszul::{generalized_koszul, koszul, GenKoszulSpec, KoszulSpec};

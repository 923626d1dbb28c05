//! Exact computations of minimal bigraded free resolutions for modules
//! attached to isolated hypersurface singularities.

pub mod bettimath;
pub mod complexes;
mod error;
pub mod groebner;
pub mod polyring;
pub mod resolution;
pub mod singularity;

pub use error::{Error, Result};

//! Jacobian data, the annihilator and symbol ideals of a hypersurface germ,
//! Rees-algebra kernels, Milnor and Tjurina numbers, and the Betti pipeline.
//!
//! ```
//! use hsbetti::singularity::{classify_quasi_homogeneous, SingularityInput};
//!
//! let inp = SingularityInput::parse(2, "x1^3 + x2^7 + x1*x2^5", None).unwrap();
//! let v = classify_quasi_homogeneous(&inp).unwrap();
//! assert_eq!((v.milnor, v.tjurina, v.quasi_homogeneous), (12, 11, false));
//! ```

mod ideals;
mod input;
mod invariants;
mod pipeline;

pub use ideals::{
    bigr_n_ideal, euler_symbol, gr_dsfs_ideal, is_linear_type, jacobian_ideal, rees_kernel,
};
pub use input::{reference_germs, SingularityInput, SingularityJson};
pub use invariants::{
    classify_quasi_homogeneous, milnor_number, tjurina_number, ClassificationVerdict,
};
pub use pipeline::{
    betti_of_nf, dsfs_cone, jacobian_matrix, m_cone, resolve_nf, smooth_koszul_ideal,
    symbol_koszul, thm3_cone, NfResolution,
};

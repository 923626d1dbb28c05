//! Free resolutions by iterated syzygies, minimalization, Betti tables and
//! exactness checks by graded linear algebra.
//!
//! ```
//! use hsbetti::polyring::{MonomialOrder, Polynomial, RingSpec, Variable};
//! use hsbetti::resolution::{betti_table, resolve, MatrixMap};
//!
//! let ring = RingSpec::new(
//!     vec![Variable::new("x", 0, 0, None), Variable::new("y", 0, 0, None)],
//!     MonomialOrder::Graded,
//! ).unwrap();
//! let gens = ["x^2", "x*y"].map(|s| Polynomial::parse(&ring, s).unwrap());
//! let c = resolve(&MatrixMap::presentation(&gens).unwrap(), 3).unwrap();
//! assert_eq!(betti_table(&c).unwrap().betti(), [1, 2, 1]);
//! ```

mod betti;
mod complex;
mod homology;
mod matrix;

pub use betti::{betti_table, regularity_f, BettiTable};
pub use complex::{minimalize, FreeComplex};
pub use homology::{homology_is_zero, Window};
pub use matrix::{MatrixJson, MatrixMap};

use crate::groebner::{
    buchberger, minimal_generators, syzygies_of, FreeModuleSpec, Mode, ModuleElement, ModuleOrder,
};
use crate::{Error, Result};

/// How each new level of a resolution is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Minimal generators of the image and of every syzygy module.
    #[default]
    Minimal,
    /// The image of the presentation is replaced by its reduced Gröbner
    /// basis, which is usually not minimal; later levels use minimal
    /// generators of the syzygies. Needs `minimalize` afterwards.
    GroebnerCover,
    /// The presentation is kept as given, redundant columns included.
    AsGiven,
}

/// Minimal free resolution of the cokernel of `presentation`, with at most
/// `max_length` differentials.
pub fn resolve(presentation: &MatrixMap, max_length: usize) -> Result<FreeComplex> {
    resolve_with(presentation, max_length, Strategy::Minimal)
}

fn next_level(
    target: &FreeModuleSpec,
    cols: Vec<ModuleElement>,
    minimal: bool,
) -> Result<MatrixMap> {
    let cols: Vec<ModuleElement> = cols.into_iter().filter(|c| !c.is_zero()).collect();
    let cols = if minimal {
        let keep = minimal_generators(&cols, target)?;
        keep.into_iter().map(|k| cols[k].clone()).collect()
    } else {
        cols
    };
    MatrixMap::from_columns(target.clone(), cols)
}

/// Free resolution built level by level from syzygies, using `strategy`
/// to choose the first differential.
pub fn resolve_with(
    presentation: &MatrixMap,
    max_length: usize,
    strategy: Strategy,
) -> Result<FreeComplex> {
    if max_length == 0 {
        return Err(Error::InvalidInput("max_length must be at least 1".into()));
    }
    let f0 = presentation.target().clone();
    let cols = presentation.columns().to_vec();
    let d1 = match strategy {
        Strategy::Minimal => next_level(&f0, cols, true)?,
        Strategy::GroebnerCover => {
            let gb = buchberger(&cols, &f0, ModuleOrder::Top, Mode::Global)?;
            next_level(&f0, gb.elements().to_vec(), false)?
        }
        Strategy::AsGiven => presentation.clone(),
    };
    let mut maps = vec![d1];
    while maps.len() < max_length {
        let last = maps.last().expect("nonempty");
        if last.ncols() == 0 {
            break;
        }
        let syz = syzygies_of(last.columns(), last.target())?;
        let d = next_level(last.source(), syz, true)?;
        if d.ncols() == 0 {
            break;
        }
        maps.push(d);
    }
    let mut modules = vec![f0];
    modules.extend(maps.iter().map(|m| m.source().clone()));
    Ok(FreeComplex::from_parts(modules, maps))
}

#[cfg(test)]
mod tests;

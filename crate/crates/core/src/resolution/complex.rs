use super::MatrixMap;
use crate::groebner::{FreeModuleSpec, ModuleElement};
use crate::polyring::{Degree, Polynomial};
use crate::{Error, Result};

/// A complex of shifted free modules `F_0 <- F_1 <- ... <- F_k` with
/// differentials `d_i : F_i -> F_{i-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeComplex {
    modules: Vec<FreeModuleSpec>,
    maps: Vec<MatrixMap>,
}

impl FreeComplex {
    /// Builds a complex from its differentials, checking adjacency and that
    /// consecutive composites vanish.
    pub fn new(maps: Vec<MatrixMap>) -> Result<Self> {
        let Some(first) = maps.first() else {
            return Err(Error::InvalidInput(
                "a complex needs at least one map; use `concentrated`".into(),
            ));
        };
        let mut modules = vec![first.target().clone()];
        for (i, d) in maps.iter().enumerate() {
            if d.target() != &modules[i] {
                return Err(Error::InvalidInput(format!(
                    "d_{} does not land in the source of d_{}",
                    i + 1,
                    i
                )));
            }
            modules.push(d.source().clone());
        }
        let c = FreeComplex { modules, maps };
        c.check_complex()?;
        Ok(c)
    }

    /// The complex with a single module in degree 0.
    pub fn concentrated(module: FreeModuleSpec) -> Self {
        FreeComplex {
            modules: vec![module],
            maps: Vec::new(),
        }
    }

    pub(crate) fn from_parts(modules: Vec<FreeModuleSpec>, maps: Vec<MatrixMap>) -> Self {
        debug_assert_eq!(modules.len(), maps.len() + 1);
        FreeComplex { modules, maps }
    }

    /// Number of differentials.
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn module(&self, i: usize) -> &FreeModuleSpec {
        &self.modules[i]
    }

    pub fn modules(&self) -> &[FreeModuleSpec] {
        &self.modules
    }

    /// The differential `d_i : F_i -> F_{i-1}`, for `1 <= i <= len`.
    pub fn map(&self, i: usize) -> &MatrixMap {
        &self.maps[i - 1]
    }

    pub fn maps(&self) -> &[MatrixMap] {
        &self.maps
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(FreeModuleSpec::rank).collect()
    }

    /// Fails with `NotAComplex(i, i + 1)` if `d_i ∘ d_{i+1}` is nonzero.
    pub fn check_complex(&self) -> Result<()> {
        for i in 1..self.maps.len() {
            if !self.maps[i - 1].compose(&self.maps[i]).is_zero() {
                return Err(Error::NotAComplex(i, i + 1));
            }
        }
        Ok(())
    }

    /// Position `(i, row, col)` of the first unit entry, lowest `i` first.
    pub fn first_unit(&self) -> Option<(usize, usize, usize)> {
        self.maps
            .iter()
            .enumerate()
            .find_map(|(k, d)| d.first_unit().map(|(r, c)| (k + 1, r, c)))
    }

    pub fn is_minimal(&self) -> bool {
        self.first_unit().is_none()
    }

    /// Every module shifted by `d`; the matrices are unchanged.
    pub fn twist(&self, d: Degree) -> FreeComplex {
        let modules: Vec<FreeModuleSpec> = self.modules.iter().map(|m| m.twist(d)).collect();
        let maps = self
            .maps
            .iter()
            .enumerate()
            .map(|(k, m)| {
                MatrixMap::new_unchecked(
                    modules[k + 1].clone(),
                    modules[k].clone(),
                    m.columns().to_vec(),
                )
            })
            .collect();
        FreeComplex { modules, maps }
    }

    /// Drops trailing zero modules.
    pub fn trimmed(mut self) -> Self {
        while !self.maps.is_empty() && self.modules.last().is_some_and(|m| m.rank() == 0) {
            self.modules.pop();
            self.maps.pop();
        }
        self
    }
}

type Dense = Vec<Vec<Polynomial>>;

fn to_dense(d: &MatrixMap) -> Dense {
    (0..d.nrows())
        .map(|i| (0..d.ncols()).map(|j| d.entry(i, j).clone()).collect())
        .collect()
}

fn from_dense(source: FreeModuleSpec, target: FreeModuleSpec, rows: &Dense) -> MatrixMap {
    let ring = source.ring().clone();
    let cols = (0..source.rank())
        .map(|j| ModuleElement::new(&ring, rows.iter().map(|r| r[j].clone()).collect()))
        .collect();
    MatrixMap::new_unchecked(source, target, cols)
}

fn remove_shift(m: &FreeModuleSpec, k: usize) -> FreeModuleSpec {
    let mut s = m.shifts().to_vec();
    s.remove(k);
    FreeModuleSpec::new(m.ring(), s)
}

fn find_unit(mats: &[Dense]) -> Option<(usize, usize, usize)> {
    for (k, d) in mats.iter().enumerate() {
        for (r, row) in d.iter().enumerate() {
            if let Some(c) = row.iter().position(Polynomial::is_constant) {
                return Some((k, r, c));
            }
        }
    }
    None
}

/// Cancels unit entries until every differential has entries in the
/// homogeneous maximal ideal. The lowest homological index is treated
/// first, and within it the first unit in row-major order. The result is
/// homotopy equivalent to the input.
pub fn minimalize(c: &FreeComplex) -> Result<FreeComplex> {
    c.check_complex()?;
    let mut modules = c.modules.clone();
    let mut mats: Vec<Dense> = c.maps.iter().map(to_dense).collect();
    while let Some((k, r, col)) = find_unit(&mats) {
        // mats[k] is d_{k+1} : F_{k+1} -> F_k
        let d = &mats[k];
        let uinv = d[r][col].leading_coeff().expect("unit").recip();
        let pivot_row: Vec<Polynomial> = d[r].iter().map(|p| p.scale(&uinv)).collect();
        let mut next: Dense = Vec::with_capacity(d.len() - 1);
        for (a, row) in d.iter().enumerate() {
            if a == r {
                continue;
            }
            let factor = &row[col];
            let mut new_row = Vec::with_capacity(row.len() - 1);
            for (b, entry) in row.iter().enumerate() {
                if b == col {
                    continue;
                }
                if factor.is_zero() || pivot_row[b].is_zero() {
                    new_row.push(entry.clone());
                } else {
                    new_row.push(entry - &(factor * &pivot_row[b]));
                }
            }
            next.push(new_row);
        }
        mats[k] = next;
        if k + 1 < mats.len() {
            mats[k + 1].remove(col);
        }
        if k > 0 {
            for row in mats[k - 1].iter_mut() {
                row.remove(r);
            }
        }
        modules[k + 1] = remove_shift(&modules[k + 1], col);
        modules[k] = remove_shift(&modules[k], r);
    }
    let maps = mats
        .iter()
        .enumerate()
        .map(|(k, d)| from_dense(modules[k + 1].clone(), modules[k].clone(), d))
        .collect();
    Ok(FreeComplex::from_parts(modules, maps).trimmed())
}

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::groebner::{FreeModuleSpec, ModuleElement};
use crate::polyring::{Degree, Polynomial, Ring};
use crate::{Error, Result};

/// A homogeneous map of shifted free modules, stored by columns: column `j`
/// is the image of the `j`-th basis vector of the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixMap {
    source: FreeModuleSpec,
    target: FreeModuleSpec,
    cols: Vec<ModuleElement>,
}

impl MatrixMap {
    /// Checks ranks and that entry `(i, j)` is zero or homogeneous of degree
    /// `source[j] - target[i]`.
    pub fn new(
        source: FreeModuleSpec,
        target: FreeModuleSpec,
        cols: Vec<ModuleElement>,
    ) -> Result<Self> {
        let m = Self::new_unchecked(source, target, cols);
        m.check()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(
        source: FreeModuleSpec,
        target: FreeModuleSpec,
        cols: Vec<ModuleElement>,
    ) -> Self {
        assert_eq!(
            source.rank(),
            cols.len(),
            "one column per source basis vector"
        );
        debug_assert!(cols.iter().all(|c| c.rank() == target.rank()));
        MatrixMap {
            source,
            target,
            cols,
        }
    }

    fn check(&self) -> Result<()> {
        for (j, col) in self.cols.iter().enumerate() {
            if col.rank() != self.target.rank() {
                return Err(Error::InvalidInput(format!(
                    "column {j} has the wrong length"
                )));
            }
            for (i, p) in col.components().iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                let want = self.source.shifts()[j] - self.target.shifts()[i];
                let got = p.degree()?;
                if got != want {
                    return Err(Error::Inhomogeneous(format!(
                        "entry ({i}, {j}) = {p} has degree {got:?}, expected {want:?}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn zero(source: FreeModuleSpec, target: FreeModuleSpec) -> Self {
        let ring = source.ring().clone();
        let cols = (0..source.rank())
            .map(|_| ModuleElement::zero(&ring, target.rank()))
            .collect();
        Self::new_unchecked(source, target, cols)
    }

    pub fn identity(module: &FreeModuleSpec) -> Self {
        let ring = module.ring();
        let r = module.rank();
        let cols = (0..r).map(|i| ModuleElement::unit(ring, r, i)).collect();
        Self::new_unchecked(module.clone(), module.clone(), cols)
    }

    /// Presentation `R^m -> R` of `R / (gens)`; zero generators are skipped.
    pub fn presentation(gens: &[Polynomial]) -> Result<Self> {
        let ring = gens
            .first()
            .ok_or_else(|| Error::InvalidInput("empty generator list".into()))?
            .ring()
            .clone();
        let gens: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
        let shifts = gens
            .iter()
            .map(|g| g.degree())
            .collect::<Result<Vec<_>>>()?;
        let cols = gens
            .iter()
            .map(|g| ModuleElement::new(&ring, vec![(*g).clone()]))
            .collect();
        Self::new(
            FreeModuleSpec::new(&ring, shifts),
            FreeModuleSpec::free(&ring, 1),
            cols,
        )
    }

    /// Map whose source shifts are read off the columns.
    pub fn from_columns(target: FreeModuleSpec, cols: Vec<ModuleElement>) -> Result<Self> {
        let shifts = cols
            .iter()
            .map(|c| c.degree(&target))
            .collect::<Result<Vec<Degree>>>()?;
        Self::new(FreeModuleSpec::new(target.ring(), shifts), target, cols)
    }

    /// Map given by rows of polynomials; shifts must be supplied.
    pub fn from_rows(
        source: FreeModuleSpec,
        target: FreeModuleSpec,
        rows: Vec<Vec<Polynomial>>,
    ) -> Result<Self> {
        if rows.len() != target.rank() || rows.iter().any(|r| r.len() != source.rank()) {
            return Err(Error::InvalidInput(
                "matrix shape does not match the modules".into(),
            ));
        }
        let ring = source.ring().clone();
        let cols = (0..source.rank())
            .map(|j| ModuleElement::new(&ring, rows.iter().map(|r| r[j].clone()).collect()))
            .collect();
        Self::new(source, target, cols)
    }

    pub fn ring(&self) -> &Ring {
        self.source.ring()
    }

    pub fn source(&self) -> &FreeModuleSpec {
        &self.source
    }

    pub fn target(&self) -> &FreeModuleSpec {
        &self.target
    }

    pub fn columns(&self) -> &[ModuleElement] {
        &self.cols
    }

    pub fn nrows(&self) -> usize {
        self.target.rank()
    }

    pub fn ncols(&self) -> usize {
        self.source.rank()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        self.cols[j].component(i)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(ModuleElement::is_zero)
    }

    /// Image of an element of the source.
    pub fn apply(&self, v: &ModuleElement) -> ModuleElement {
        let mut acc = ModuleElement::zero(self.ring(), self.nrows());
        for (j, a) in v.components().iter().enumerate() {
            if !a.is_zero() {
                acc = acc.add(&self.cols[j].mul_poly(a));
            }
        }
        acc
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MatrixMap) -> MatrixMap {
        assert_eq!(other.nrows(), self.ncols(), "composition shape mismatch");
        let cols = other.cols.iter().map(|c| self.apply(c)).collect();
        Self::new_unchecked(other.source.clone(), self.target.clone(), cols)
    }

    pub fn scale(&self, c: &Polynomial) -> MatrixMap {
        let cols = self.cols.iter().map(|col| col.mul_poly(c)).collect();
        Self::new_unchecked(self.source.clone(), self.target.clone(), cols)
    }

    pub fn neg(&self) -> MatrixMap {
        self.scale(&Polynomial::from_int(self.ring(), -1))
    }

    pub fn add(&self, other: &MatrixMap) -> MatrixMap {
        assert_eq!((self.nrows(), self.ncols()), (other.nrows(), other.ncols()));
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| a.add(b))
            .collect();
        Self::new_unchecked(self.source.clone(), self.target.clone(), cols)
    }

    /// The 2x2 block map `[[a, b], [c, d]]` from `s1 ⊕ s2` to `t1 ⊕ t2`.
    pub fn block(a: &MatrixMap, b: &MatrixMap, c: &MatrixMap, d: &MatrixMap) -> MatrixMap {
        let ring = a.ring().clone();
        let source = a.source.direct_sum(&b.source);
        let target = a.target.direct_sum(&c.target);
        let mut cols = Vec::with_capacity(source.rank());
        for (top, bottom) in [(a, c), (b, d)] {
            for j in 0..top.ncols() {
                let mut comps = top.cols[j].components().to_vec();
                comps.extend_from_slice(bottom.cols[j].components());
                cols.push(ModuleElement::new(&ring, comps));
            }
        }
        Self::new_unchecked(source, target, cols)
    }

    /// Position of the first nonzero constant entry in row-major order.
    pub fn first_unit(&self) -> Option<(usize, usize)> {
        (0..self.nrows())
            .flat_map(|i| (0..self.ncols()).map(move |j| (i, j)))
            .find(|&(i, j)| self.entry(i, j).is_constant())
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            source_shifts: self.source.shifts().iter().map(|d| (d.f, d.v)).collect(),
            target_shifts: self.target.shifts().iter().map(|d| (d.f, d.v)).collect(),
            rows: (0..self.nrows())
                .map(|i| {
                    (0..self.ncols())
                        .map(|j| self.entry(i, j).to_string())
                        .collect()
                })
                .collect(),
        }
    }
}

/// Serialized form of a matrix: entries as polynomial strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub source_shifts: Vec<(i64, i64)>,
    pub target_shifts: Vec<(i64, i64)>,
    pub rows: Vec<Vec<String>>,
}

impl fmt::Display for MatrixMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.nrows() {
            let row: Vec<String> = (0..self.ncols())
                .map(|j| self.entry(i, j).to_string())
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

use crate::groebner::{lift_through, FreeModuleSpec};
use crate::polyring::Degree;
use crate::resolution::{FreeComplex, MatrixMap};
use crate::{Error, Result};

/// A chain map `alpha_i : source_i -> target_i` commuting with the
/// differentials. The source is already twisted so every map has degree 0.
#[derive(Clone, Debug)]
pub struct ChainMap {
    source: FreeComplex,
    target: FreeComplex,
    maps: Vec<MatrixMap>,
}

impl ChainMap {
    /// Checks `d^T_i ∘ alpha_i = alpha_{i-1} ∘ d^S_i` at every level.
    pub fn new(source: FreeComplex, target: FreeComplex, maps: Vec<MatrixMap>) -> Result<Self> {
        if maps.len() != source.len() + 1 {
            return Err(Error::InvalidInput(
                "one component per source module".into(),
            ));
        }
        let c = ChainMap {
            source,
            target,
            maps,
        };
        for i in 0..c.maps.len() {
            let m = &c.maps[i];
            if m.source() != c.source.module(i) || m.target() != &module_or_zero(&c.target, i, m) {
                return Err(Error::InvalidInput(format!(
                    "component {i} has the wrong modules"
                )));
            }
        }
        for i in 1..c.maps.len() {
            let lhs = c.target_map(i).compose(&c.maps[i]);
            let rhs = c.maps[i - 1].compose(c.source.map(i));
            if !lhs.add(&rhs.neg()).is_zero() {
                return Err(Error::Lift {
                    level: i,
                    reason: "square does not commute".into(),
                });
            }
        }
        Ok(c)
    }

    pub fn source(&self) -> &FreeComplex {
        &self.source
    }

    pub fn target(&self) -> &FreeComplex {
        &self.target
    }

    /// `alpha_i`, for `0 <= i <= source.len()`.
    pub fn component(&self, i: usize) -> &MatrixMap {
        &self.maps[i]
    }

    pub fn components(&self) -> &[MatrixMap] {
        &self.maps
    }

    fn target_module(&self, i: usize) -> FreeModuleSpec {
        module_or_zero(&self.target, i, &self.maps[0])
    }

    fn target_map(&self, i: usize) -> MatrixMap {
        if i <= self.target.len() {
            self.target.map(i).clone()
        } else {
            MatrixMap::zero(self.target_module(i), self.target_module(i - 1))
        }
    }
}

fn module_or_zero(c: &FreeComplex, i: usize, any: &MatrixMap) -> FreeModuleSpec {
    if i <= c.len() {
        c.module(i).clone()
    } else {
        FreeModuleSpec::new(any.ring(), Vec::new())
    }
}

/// The common offset `deg(entry) - (source shift - target shift)`, read
/// against the shifts of `src0` rather than those declared by `f0`.
fn offset(f0: &MatrixMap, src0: &FreeModuleSpec) -> Result<Degree> {
    let mut delta = None;
    for j in 0..f0.ncols() {
        for i in 0..f0.nrows() {
            let p = f0.entry(i, j);
            if p.is_zero() {
                continue;
            }
            let d = p.degree()? - (src0.shifts()[j] - f0.target().shifts()[i]);
            match delta {
                None => delta = Some(d),
                Some(e) if e != d => {
                    return Err(Error::Inhomogeneous("the map has no common degree".into()));
                }
                _ => {}
            }
        }
    }
    Ok(delta.unwrap_or(Degree::ZERO))
}

/// Extends `f0 : source_0 -> target_0` to a chain map, solving
/// `d^T_i alpha_i = alpha_{i-1} d^S_i` level by level by division against a
/// Gröbner basis of the columns of `d^T_i`. If `f0` is homogeneous of some
/// nonzero degree, the source complex is twisted to make it degree 0; the
/// source shifts declared by `f0` itself are ignored.
/// Fails with a lift error when a column is outside the image, e.g. when
/// `f0` does not descend to the cokernels or the target is not exact.
pub fn lift_chain_map(
    f0: &MatrixMap,
    source: &FreeComplex,
    target: &FreeComplex,
) -> Result<ChainMap> {
    if f0.source().rank() != source.module(0).rank() || f0.target() != target.module(0) {
        return Err(Error::InvalidInput(
            "f0 must go from source_0 to target_0".into(),
        ));
    }
    let source = source.twist(offset(f0, source.module(0))?);
    let first = MatrixMap::new(
        source.module(0).clone(),
        target.module(0).clone(),
        f0.columns().to_vec(),
    )?;
    let mut maps = vec![first];
    for i in 1..=source.len() {
        let images: Vec<_> = source
            .map(i)
            .columns()
            .iter()
            .map(|c| maps[i - 1].apply(c))
            .collect();
        let tgt = module_or_zero(target, i, &maps[0]);
        let cols = if i <= target.len() {
            let d = target.map(i);
            lift_through(d.columns(), d.target(), &images)?
        } else {
            images
                .iter()
                .map(|v| {
                    v.is_zero()
                        .then(|| crate::groebner::ModuleElement::zero(tgt.ring(), 0))
                })
                .collect()
        };
        let cols = cols
            .into_iter()
            .enumerate()
            .map(|(j, u)| {
                u.ok_or_else(|| Error::Lift {
                    level: i,
                    reason: format!("column {j} is not in the image of the target differential"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        maps.push(MatrixMap::new(source.module(i).clone(), tgt, cols)?);
    }
    ChainMap::new(source, target.clone(), maps)
}

/// Mapping cone: `C_i = T_i ⊕ S_{i-1}` with `D = [[d^T, alpha], [0, -d^S]]`.
pub fn mapping_cone(phi: &ChainMap) -> Result<FreeComplex> {
    let s = phi.source();
    let any = &phi.maps[0];
    let smod = |i: i64| -> FreeModuleSpec {
        if i < 0 {
            FreeModuleSpec::new(any.ring(), Vec::new())
        } else {
            module_or_zero(s, i as usize, any)
        }
    };
    let smap = |i: i64| -> MatrixMap {
        if i >= 1 && i as usize <= s.len() {
            s.map(i as usize).clone()
        } else {
            MatrixMap::zero(smod(i), smod(i - 1))
        }
    };
    let alpha = |i: i64| -> MatrixMap {
        if i >= 0 && (i as usize) < phi.maps.len() {
            phi.maps[i as usize].clone()
        } else {
            MatrixMap::zero(smod(i), phi.target_module(i.max(0) as usize))
        }
    };
    let len = phi.target.len().max(s.len() + 1);
    let mut maps = Vec::with_capacity(len);
    for i in 1..=len {
        let ii = i as i64;
        let a = phi.target_map(i);
        let b = alpha(ii - 1);
        let c = MatrixMap::zero(phi.target_module(i), smod(ii - 2));
        let d = smap(ii - 1).neg();
        maps.push(MatrixMap::block(&a, &b, &c, &d));
    }
    FreeComplex::new(maps)
}

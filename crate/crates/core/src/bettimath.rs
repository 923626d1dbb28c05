//! Closed-form Betti sequences and the algebra of Betti polynomials
//! `β(T) = Σ β_i T^i`.
//!
//! ```
//! use hsbetti::bettimath::{dsfs_closed_form, m_closed_form, thm3_closed_form};
//!
//! assert_eq!(thm3_closed_form(3).coefficients(), [1, 8, 12, 7, 2]);
//! assert_eq!(m_closed_form(3), dsfs_closed_form(3).multiply_one_plus_t(1));
//! ```

use std::fmt;

use num::integer::binomial;
use serde::{Deserialize, Serialize};

use crate::polyring::Bidegree;
use crate::resolution::BettiTable;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BettiPolynomial {
    coefficients: Vec<u64>,
}

impl BettiPolynomial {
    /// Trailing zero coefficients are dropped.
    pub fn new(mut coefficients: Vec<u64>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        BettiPolynomial { coefficients }
    }

    pub fn from_table(t: &BettiTable) -> Self {
        Self::new(t.betti().into_iter().map(|b| b as u64).collect())
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    /// `β_i`, zero past the end.
    pub fn get(&self, i: usize) -> u64 {
        self.coefficients.get(i).copied().unwrap_or(0)
    }

    /// Value at `T = -1`.
    pub fn euler_characteristic(&self) -> i64 {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// Whether every coefficient is at least the corresponding one of `other`.
    pub fn dominates(&self, other: &BettiPolynomial) -> bool {
        (0..other.coefficients.len()).all(|i| self.get(i) >= other.get(i))
    }

    pub fn multiply_one_plus_t(&self, power: u32) -> BettiPolynomial {
        multiply_one_plus_t(self, power)
    }
}

impl fmt::Display for BettiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coefficients.iter().map(u64::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

fn c(n: u64, k: u64) -> u64 {
    if k > n {
        0
    } else {
        binomial(n, k)
    }
}

/// Betti numbers of the module `N_f` for a quasi-homogeneous isolated
/// singularity in `n >= 2` variables, indices `0..=n+1`.
pub fn thm3_closed_form(n: u64) -> BettiPolynomial {
    assert!(n >= 2, "needs n >= 2");
    let mut b = vec![1, 2 + n * (n + 1) / 2, 1 + n + 2 * c(n + 1, n - 2)];
    b.extend((3..=n + 1).map(|i| generic_term(n, i)));
    BettiPolynomial::new(b)
}

/// `(i - 2) C(n+2, i+1) + 2 C(n+1, i+1)`, the general term for `i >= 3`.
fn generic_term(n: u64, i: u64) -> u64 {
    (i - 2) * c(n + 2, i + 1) + 2 * c(n + 1, i + 1)
}

/// Betti numbers of `gr(D[s] f^s)` for a quasi-homogeneous isolated
/// singularity, indices `0..=n`.
pub fn dsfs_closed_form(n: u64) -> BettiPolynomial {
    assert!(n >= 1, "needs n >= 1");
    let mut b = vec![1, c(n, 2) + 1];
    b.extend((2..=n).map(|i| i * c(n, i + 1) + (i - 1) * c(n, i)));
    BettiPolynomial::new(b)
}

/// Betti numbers of `gr(M)`, `M = D[s] f^s / D[s] f^(s+1)`, indices `0..=n+1`.
pub fn m_closed_form(n: u64) -> BettiPolynomial {
    assert!(n >= 2, "needs n >= 2");
    let mut b = vec![1, 2 + c(n, 2), 2 * c(n + 1, 3) + 1];
    b.extend((3..=n + 1).map(|i| generic_term(n, i)));
    BettiPolynomial::new(b)
}

/// `C(n+p, i)`: the Betti numbers of a smooth germ of codimension `p`.
pub fn smooth_closed_form(n: u64, p: u64) -> BettiPolynomial {
    BettiPolynomial::new((0..=n + p).map(|i| c(n + p, i)).collect())
}

/// `1, C(n,2), 2 C(n,3), ..., (n-1) C(n,n)`: the ideal of the `S_ij`.
pub fn en_closed_form(n: u64) -> BettiPolynomial {
    assert!(n >= 2, "needs n >= 2");
    let mut b = vec![1];
    b.extend((1..n).map(|i| i * c(n, i + 1)));
    BettiPolynomial::new(b)
}

pub fn multiply_one_plus_t(b: &BettiPolynomial, power: u32) -> BettiPolynomial {
    let mut out = b.coefficients.clone();
    for _ in 0..power {
        out.resize(out.len() + 1, 0);
        for i in (1..out.len()).rev() {
            out[i] += out[i - 1];
        }
    }
    BettiPolynomial::new(out)
}

/// `β(T) / (1+T)^(n+p-c0)`, failing on a nonzero remainder.
pub fn space_invariant(b: &BettiPolynomial, n: u64, p: u64, c0: u64) -> Result<BettiPolynomial> {
    if c0 > n + p {
        return Err(Error::InvalidInput(format!(
            "c0 = {c0} exceeds n + p = {}",
            n + p
        )));
    }
    let e = (n + p - c0) as u32;
    let mut rem: Vec<i64> = b.coefficients.iter().map(|&x| x as i64).collect();
    for _ in 0..e {
        if rem.is_empty() {
            break;
        }
        let mut q = Vec::with_capacity(rem.len() - 1);
        for i in 0..rem.len() - 1 {
            let prev = if i == 0 { 0 } else { q[i - 1] };
            q.push(rem[i] - prev);
        }
        if rem[rem.len() - 1] != q.last().copied().unwrap_or(0) {
            return Err(Error::NotDivisible(e));
        }
        rem = q;
    }
    if rem.iter().any(|&x| x < 0) {
        return Err(Error::NotDivisible(e));
    }
    Ok(BettiPolynomial::new(
        rem.into_iter().map(|x| x as u64).collect(),
    ))
}

/// How a germ's presentation is extended.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtensionKind {
    /// An extra generator lying in the ideal.
    RedundantGenerator,
    /// A new variable together with the equation `y = 0`.
    SmoothVariable,
}

/// Shift table after the extension: a redundant generator yields
/// `[n(i), n(i-1)]`, a smooth variable `[n(i), n(i-1), n(i-1)+1, n(i-2)+1]`,
/// with `1` added to both the F- and V-shifts.
pub fn shift_extension_rule(table: &BettiTable, kind: ExtensionKind) -> BettiTable {
    if table.is_empty() {
        return table.clone();
    }
    let at = |i: i64| -> Vec<Bidegree> {
        if i < 0 {
            Vec::new()
        } else {
            table.shifts().get(i as usize).cloned().unwrap_or_default()
        }
    };
    let plus_one = |v: Vec<Bidegree>| -> Vec<Bidegree> {
        v.into_iter()
            .map(|b| Bidegree::new(b.d + 1, b.k + 1))
            .collect()
    };
    let len = table.len() as i64;
    let shifts = match kind {
        ExtensionKind::RedundantGenerator => {
            (0..=len).map(|i| [at(i), at(i - 1)].concat()).collect()
        }
        ExtensionKind::SmoothVariable => (0..=len + 1)
            .map(|i| [at(i), at(i - 1), plus_one(at(i - 1)), plus_one(at(i - 2))].concat())
            .collect(),
    };
    BettiTable::from_shifts(shifts)
}

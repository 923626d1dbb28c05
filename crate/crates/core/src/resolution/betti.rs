use std::fmt;

use serde::{Deserialize, Serialize};

use super::FreeComplex;
use crate::polyring::Bidegree;
use crate::{Error, Result};

/// Ranks and (F, V)-shifts of a minimal free resolution, per homological
/// index. Shift lists are sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "BettiWire", try_from = "BettiWire")]
pub struct BettiTable {
    shifts: Vec<Vec<Bidegree>>,
}

#[derive(Serialize, Deserialize)]
struct BettiWire {
    betti: Vec<usize>,
    shifts: Vec<Vec<(i64, i64)>>,
    #[serde(rename = "regularity_F")]
    regularity_f: i64,
}

impl From<BettiTable> for BettiWire {
    fn from(t: BettiTable) -> Self {
        BettiWire {
            betti: t.betti(),
            regularity_f: regularity_f(&t),
            shifts: t
                .shifts
                .iter()
                .map(|s| s.iter().map(|b| (b.d, b.k)).collect())
                .collect(),
        }
    }
}

impl TryFrom<BettiWire> for BettiTable {
    type Error = String;
    fn try_from(w: BettiWire) -> std::result::Result<Self, String> {
        if w.betti.len() != w.shifts.len()
            || w.betti.iter().zip(&w.shifts).any(|(b, s)| *b != s.len())
        {
            return Err("betti ranks must match the shift counts".into());
        }
        let t = BettiTable::from_shifts(
            w.shifts
                .into_iter()
                .map(|s| s.into_iter().map(|(d, k)| Bidegree::new(d, k)).collect())
                .collect(),
        );
        if regularity_f(&t) != w.regularity_f {
            return Err("regularity_F does not match the shifts".into());
        }
        Ok(t)
    }
}

impl BettiTable {
    /// Table from shift lists; trailing empty indices are dropped.
    pub fn from_shifts(mut shifts: Vec<Vec<Bidegree>>) -> Self {
        for s in &mut shifts {
            s.sort();
        }
        while shifts.len() > 1 && shifts.last().is_some_and(Vec::is_empty) {
            shifts.pop();
        }
        BettiTable { shifts }
    }

    pub fn betti(&self) -> Vec<usize> {
        self.shifts.iter().map(Vec::len).collect()
    }

    pub fn shifts(&self) -> &[Vec<Bidegree>] {
        &self.shifts
    }

    /// Rank at index `i` (zero past the length).
    pub fn rank(&self, i: usize) -> usize {
        self.shifts.get(i).map_or(0, Vec::len)
    }

    pub fn len(&self) -> usize {
        self.shifts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shifts.iter().all(Vec::is_empty)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.shifts.iter().enumerate() {
            let list: Vec<String> = s.iter().map(ToString::to_string).collect();
            writeln!(f, "{i}: {} {}", s.len(), list.join(" "))?;
        }
        write!(f, "reg_F = {}", regularity_f(self))
    }
}

/// Ranks and shifts of a minimal complex.
pub fn betti_table(c: &FreeComplex) -> Result<BettiTable> {
    if let Some((position, row, col)) = c.first_unit() {
        return Err(Error::NotMinimal { position, row, col });
    }
    Ok(BettiTable::from_shifts(
        c.modules()
            .iter()
            .map(|m| m.shifts().iter().map(|d| d.bidegree()).collect())
            .collect(),
    ))
}

/// `max (n - i)` over all shifts `(n, m)` at homological index `i`.
pub fn regularity_f(t: &BettiTable) -> i64 {
    t.shifts
        .iter()
        .enumerate()
        .flat_map(|(i, s)| s.iter().map(move |b| b.d - i as i64))
        .max()
        .unwrap_or(0)
}

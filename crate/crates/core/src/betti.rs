//! Graded Betti tables.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// `β_{i,j}` of an ideal, `j` the total internal degree. Zero entries are not stored.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiRow {
    pub i: usize,
    pub j: usize,
    pub beta: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    pub rows: Vec<BettiRow>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, j: usize, beta: u64) {
        if beta == 0 {
            return;
        }
        *self.entries.entry((i, j)).or_insert(0) += beta;
    }

    /// Nonzero entries `(i, j, β)` ordered by `i`, then `j`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `β_i = Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .range((i, 0)..=(i, usize::MAX))
            .map(|(_, &b)| b)
            .sum()
    }

    /// Totals `β_0 .. β_pd`.
    pub fn totals(&self) -> Vec<u64> {
        match self.pd() {
            None => Vec::new(),
            Some(p) => (0..=p).map(|i| self.total(i)).collect(),
        }
    }

    /// Projective dimension of the ideal: the largest `i` with `β_i ≠ 0`.
    pub fn pd(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// All nonzero entries sit in one row `j - i = const`.
    pub fn is_linear(&self) -> bool {
        let mut shifts = self.entries.keys().map(|&(i, j)| j - i);
        match shifts.next() {
            None => true,
            Some(s) => shifts.all(|x| x == s),
        }
    }

    /// `β_{i-1,j}` placed at `(i, j)`.
    pub fn shifted_homologically(&self) -> Self {
        let mut out = Self::new();
        for (i, j, b) in self.iter() {
            out.add(i + 1, j, b);
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, j, b) in other.iter() {
            out.add(i, j, b);
        }
        out
    }

    pub fn to_json(&self) -> BettiJson {
        BettiJson {
            rows: self.iter().map(|(i, j, beta)| BettiRow { i, j, beta }).collect(),
        }
    }

    pub fn from_json(j: &BettiJson) -> Self {
        let mut t = Self::new();
        for r in &j.rows {
            t.add(r.i, r.j, r.beta);
        }
        t
    }
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        BettiJson::deserialize(d).map(|j| Self::from_json(&j))
    }
}

/// Macaulay2-style grid: columns are `i`, rows are `j - i`.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(pd) = self.pd() else {
            return writeln!(f, "total: 0");
        };
        let rows: Vec<usize> = {
            let mut r: Vec<usize> = self.entries.keys().map(|&(i, j)| j - i).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let cell = |x: String| format!("{x:>6}");
        let mut header = format!("{:>7}", "");
        let mut totals = format!("{:>7}", "total:");
        for i in 0..=pd {
            header += &cell(i.to_string());
            totals += &cell(self.total(i).to_string());
        }
        writeln!(f, "{header}")?;
        writeln!(f, "{totals}")?;
        for r in rows {
            let mut line = format!("{:>7}", format!("{r}:"));
            for i in 0..=pd {
                let b = self.get(i, i + r);
                line += &cell(if b == 0 { ".".into() } else { b.to_string() });
            }
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.entries)
    }
}

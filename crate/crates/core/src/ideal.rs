//! Squarefree monomial ideals given by their minimal generating sets.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{slex, SquarefreeMonomial};

/// A squarefree monomial ideal, stored as its minimal generating set `G(I)`.
///
/// Generators are kept in canonical order: by degree, then slex-descending.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialIdeal {
    ambient: usize,
    generators: Vec<SquarefreeMonomial>,
}

fn canonical(a: &SquarefreeMonomial, b: &SquarefreeMonomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| slex(b, a))
}

impl MonomialIdeal {
    /// The ideal generated by `gens`, minimalized.
    pub fn new(ambient: usize, gens: impl IntoIterator<Item = SquarefreeMonomial>) -> Result<Self> {
        let mut gens: Vec<SquarefreeMonomial> = gens.into_iter().collect();
        for g in &gens {
            if g.ambient() != ambient {
                return Err(Error::AmbientMismatch {
                    left: ambient,
                    right: g.ambient(),
                });
            }
        }
        gens.sort_by(canonical);
        gens.dedup();
        // Sorted by degree, so a divisor always precedes its multiples.
        let mut minimal: Vec<SquarefreeMonomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        Ok(Self {
            ambient,
            generators: minimal,
        })
    }

    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            generators: Vec::new(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn generators(&self) -> &[SquarefreeMonomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_principal(&self) -> bool {
        self.generators.len() == 1
    }

    pub fn contains(&self, m: &SquarefreeMonomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Membership for a squarefree monomial given by its support mask.
    pub fn contains_mask(&self, mask: u32) -> bool {
        self.generators.iter().any(|g| g.mask() & !mask == 0)
    }

    /// `G(I)_j`.
    pub fn generators_of_degree(&self, j: usize) -> impl Iterator<Item = &SquarefreeMonomial> {
        self.generators.iter().filter(move |g| g.degree() == j)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Self::new(
            self.ambient,
            self.generators.iter().chain(&other.generators).copied(),
        )
    }

    /// Relabels `x_i ↦ x_{i + k}` into an ambient enlarged by `k`.
    pub fn shift_up(&self, k: usize) -> Result<Self> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.shift_up(k))
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.ambient + k, gens)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `A ∩ B`, generated by the pairwise lcms of the generators.
pub fn intersect_ideals(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
    if a.ambient != b.ambient {
        return Err(Error::AmbientMismatch {
            left: a.ambient,
            right: b.ambient,
        });
    }
    let lcms = a
        .generators
        .iter()
        .flat_map(|x| b.generators.iter().map(move |y| x.lcm(y)));
    MonomialIdeal::new(a.ambient, lcms)
}

/// `gcd(I)`: the largest monomial dividing every minimal generator.
pub fn gcd_of_ideal(ideal: &MonomialIdeal) -> Result<SquarefreeMonomial> {
    let mut it = ideal.generators.iter();
    let first = *it.next().ok_or(Error::ZeroIdeal)?;
    Ok(it.fold(first, |acc, g| acc.gcd(g)))
}

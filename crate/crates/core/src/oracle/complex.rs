use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{mask_indices, IndexSet};

/// Hard ceiling for the facet scan, which walks all `2^n` subsets.
pub const FACET_SCAN_CAP: usize = 20;
/// Ceiling for full Hochster tables (one homology computation per subset).
pub const HOCHSTER_CAP: usize = 14;

/// Facet-scan cap, overridable through `TSPREAD_ORACLE_CAP` (clamped to 20).
pub fn oracle_cap() -> usize {
    std::env::var("TSPREAD_ORACLE_CAP")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .map_or(FACET_SCAN_CAP, |c| c.min(FACET_SCAN_CAP))
}

pub(crate) fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::OracleCap { n, cap })
    } else {
        Ok(())
    }
}

/// A simplicial complex on `[1, ambient]` given by its facets.
///
/// Vertices `i` with `x_i` in the ideal are not faces; they are listed in
/// `excluded`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    ambient: usize,
    facets: Vec<u32>,
    excluded: u32,
}

impl SimplicialComplex {
    /// Facets must form an antichain; they are stored sorted.
    pub fn from_facet_masks(ambient: usize, mut facets: Vec<u32>) -> Self {
        facets.sort_unstable();
        facets.dedup();
        let vertices = facets.iter().fold(0u32, |a, f| a | f);
        let all = if ambient >= 32 { u32::MAX } else { (1u32 << ambient) - 1 };
        Self {
            ambient,
            facets,
            excluded: all & !vertices,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn facet_masks(&self) -> &[u32] {
        &self.facets
    }

    pub fn facets(&self) -> Vec<IndexSet> {
        self.facets
            .iter()
            .map(|&m| IndexSet::from_mask_unchecked(self.ambient, m))
            .collect()
    }

    pub fn excluded(&self) -> IndexSet {
        IndexSet::from_mask_unchecked(self.ambient, self.excluded)
    }

    /// `dim Δ + 1`, the largest facet size (0 for the complex `{∅}`).
    pub fn max_facet_size(&self) -> usize {
        self.facets.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn is_pure(&self) -> bool {
        let mut sizes = self.facets.iter().map(|f| f.count_ones());
        match sizes.next() {
            None => true,
            Some(s) => sizes.all(|x| x == s),
        }
    }

    pub fn is_face(&self, mask: u32) -> bool {
        self.facets.iter().any(|f| mask & !f == 0)
    }

    /// The minimal nonfaces, as an ideal: the inverse of [`stanley_reisner`].
    pub fn nonface_ideal(&self) -> MonomialIdeal {
        let n = self.ambient;
        let gens = (1u32..1u32 << n)
            .filter(|&m| !self.is_face(m) && mask_indices(m).all(|i| self.is_face(m & !(1 << (i - 1)))))
            .map(|m| IndexSet::from_mask_unchecked(n, m).monomial());
        MonomialIdeal::new(n, gens).expect("same ambient")
    }
}

/// The complex `Δ` with `I = I_Δ`, by a scan of all `2^n` subsets.
pub fn stanley_reisner(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    let n = ideal.ambient();
    check_cap(n, oracle_cap())?;
    let size = 1usize << n;
    // nonface[m]: m contains a generator. Filled in increasing order, so
    // every proper subset is settled before m.
    let mut nonface = vec![false; size];
    for g in ideal.generators() {
        nonface[g.mask() as usize] = true;
    }
    for m in 1..size {
        if nonface[m] {
            continue;
        }
        let mut rest = m;
        while rest != 0 {
            let b = rest & rest.wrapping_neg();
            if nonface[m ^ b] {
                nonface[m] = true;
                break;
            }
            rest ^= b;
        }
    }
    let full = size - 1;
    let facets: Vec<u32> = (0..size)
        .filter(|&m| {
            if nonface[m] {
                return false;
            }
            let mut outside = full & !m;
            while outside != 0 {
                let b = outside & outside.wrapping_neg();
                if !nonface[m | b] {
                    return false;
                }
                outside ^= b;
            }
            true
        })
        .map(|m| m as u32)
        .collect();
    Ok(SimplicialComplex::from_facet_masks(n, facets))
}

/// Minimal primes `p_{[n] ∖ F}` over the facets `F`, sorted by height then support.
pub fn minimal_primes_bruteforce(ideal: &MonomialIdeal) -> Result<Vec<IndexSet>> {
    let delta = stanley_reisner(ideal)?;
    let mut primes: Vec<IndexSet> = delta.facets().iter().map(|f| f.complement()).collect();
    sort_primes(&mut primes);
    Ok(primes)
}

/// Canonical prime order: height, then the ascending support read lexicographically.
pub fn sort_primes(primes: &mut [IndexSet]) {
    primes.sort_by_key(|p| (p.len(), p.to_vec()));
}

/// `dim S/I`: the largest facet size.
pub fn krull_dim_oracle(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(stanley_reisner(ideal)?.max_facet_size())
}

use rayon::prelude::*;

use super::complex::{check_cap, stanley_reisner, HOCHSTER_CAP};
use super::homology::{maximal, reduced_homology};
use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

/// `β_{i,j}(I_Δ) = Σ_{|W| = j} b̃_{j-i-2}(Δ_W)` over ℚ.
pub fn hochster_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    let n = ideal.ambient();
    check_cap(n, HOCHSTER_CAP.min(super::oracle_cap()))?;
    let delta = stanley_reisner(ideal)?;
    let facets = delta.facet_masks();
    let table = (0u32..1u32 << n)
        .into_par_iter()
        .fold(BettiTable::new, |mut acc, w| {
            let restricted = maximal(facets.iter().map(|f| f & w).collect());
            let size = w.count_ones() as isize;
            for (k, b) in reduced_homology(&restricted).nonzero() {
                let i = size - k - 2;
                if i >= 0 {
                    acc.add(i as usize, size as usize, b);
                }
            }
            acc
        })
        .reduce(BettiTable::new, |a, b| a.plus(&b));
    for j in 0..=n {
        let expected = ideal.generators_of_degree(j).count() as u64;
        if table.get(0, j) != expected {
            return Err(Error::Internal(format!(
                "Hochster self-check: beta_(0,{j}) = {} but {expected} generators of degree {j}",
                table.get(0, j)
            )));
        }
    }
    Ok(table)
}

/// `depth S/I = n - pd(S/I)`, with `pd(S/I)` read from the Hochster table.
pub fn depth_oracle(ideal: &MonomialIdeal) -> Result<usize> {
    let pd_quotient = hochster_betti(ideal)?.pd().map_or(0, |p| p + 1);
    Ok(ideal.ambient() - pd_quotient)
}

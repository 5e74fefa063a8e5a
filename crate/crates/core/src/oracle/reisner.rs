use std::collections::HashSet;

use serde::Serialize;

use super::complex::{stanley_reisner, SimplicialComplex};
use super::homology::reduced_homology;
use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::monomial::IndexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReisnerReport {
    pub is_cm: bool,
    pub pure: bool,
    /// A face whose link has homology below its top dimension.
    pub failing_face: Option<IndexSet>,
}

/// Cohen-Macaulayness over ℚ: the complex is pure and every link `lk F`
/// has `b̃_i(lk F) = 0` for `i < dim lk F`.
pub fn reisner_cm_check(ideal: &MonomialIdeal) -> Result<ReisnerReport> {
    Ok(reisner_on_complex(&stanley_reisner(ideal)?))
}

pub fn reisner_on_complex(delta: &SimplicialComplex) -> ReisnerReport {
    let n = delta.ambient();
    if !delta.is_pure() {
        return ReisnerReport {
            is_cm: false,
            pure: false,
            failing_face: None,
        };
    }
    let facets = delta.facet_masks();
    let top = delta.max_facet_size() as isize;
    let mut seen: HashSet<u32> = HashSet::new();
    for &f in facets {
        let mut s = f;
        loop {
            if seen.insert(s) {
                let link: Vec<u32> = facets.iter().filter(|&&g| g & s == s).map(|&g| g & !s).collect();
                let dim_link = top - s.count_ones() as isize - 1;
                let bad = reduced_homology(&link).nonzero().any(|(k, _)| k < dim_link);
                if bad {
                    return ReisnerReport {
                        is_cm: false,
                        pure: true,
                        failing_face: Some(IndexSet::from_mask(n, s).expect("in range")),
                    };
                }
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & f;
        }
    }
    ReisnerReport {
        is_cm: true,
        pure: true,
        failing_face: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::SquarefreeMonomial;

    fn ideal(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| SquarefreeMonomial::new(n, g).unwrap())).unwrap()
    }

    #[test]
    fn complete_intersection_is_cm() {
        assert!(reisner_cm_check(&ideal(4, &[&[1, 2], &[3, 4]])).unwrap().is_cm);
    }

    #[test]
    fn two_disjoint_edges_are_not_cm() {
        // Δ = two disjoint edges {1,2}, {3,4}: pure, disconnected, dim 1.
        let i = ideal(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        let r = reisner_cm_check(&i).unwrap();
        assert!(r.pure && !r.is_cm);
        assert_eq!(r.failing_face.unwrap().to_vec(), Vec::<usize>::new());
    }

    #[test]
    fn non_pure_is_not_cm() {
        let r = reisner_cm_check(&ideal(3, &[&[1, 2], &[1, 3]])).unwrap();
        assert!(!r.pure && !r.is_cm);
    }

    #[test]
    fn path_is_cm() {
        // Δ = path 1-2-3-4 as edges: connected 1-dim, CM.
        let i = ideal(4, &[&[1, 3], &[1, 4], &[2, 4]]);
        assert!(reisner_cm_check(&i).unwrap().is_cm);
    }
}

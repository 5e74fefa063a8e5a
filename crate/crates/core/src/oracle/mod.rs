//! Brute-force ground truth through Stanley-Reisner complexes: facets,
//! minimal primes, dimension, rational homology, Hochster's formula and
//! Reisner's criterion.

mod complex;
mod hochster;
mod homology;
mod reisner;

pub use complex::{
    krull_dim_oracle, minimal_primes_bruteforce, oracle_cap, sort_primes, stanley_reisner,
    SimplicialComplex, FACET_SCAN_CAP, HOCHSTER_CAP,
};
pub use hochster::{depth_oracle, hochster_betti};
pub use homology::{rank_exact, reduced_homology, HomologyProfile};
pub use reisner::{reisner_cm_check, reisner_on_complex, ReisnerReport};

//! t-spread lexsegment ideals: construction, primary decomposition, Betti
//! numbers and Cohen-Macaulay classification, with a brute-force
//! Stanley-Reisner oracle for cross-checking.

pub mod betti;
pub mod cm;
pub mod decomp;
pub mod homological;
pub mod error;
pub mod ideal;
pub mod lexseg;
pub mod m2;
pub mod monomial;
pub mod oracle;
pub mod sweep;

pub use betti::BettiTable;
pub use error::{Error, Result};
pub use ideal::{gcd_of_ideal, intersect_ideals, MonomialIdeal};
pub use lexseg::{build_segment, normalize, Kind, LexsegmentSpec, NormalizationTrace};
pub use monomial::{
    binom, cosupp_t, count_m, enumerate_m, is_t_spread, slex_compare, supp_t, IndexSet,
    SquarefreeMonomial,
};

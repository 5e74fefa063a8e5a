//! Squarefree and t-spread monomials over a fixed ambient `[1, n]`.
//!
//! Supports are stored as `u32` bitmasks (bit `i - 1` stands for `x_i`), so
//! the ambient is capped at [`MAX_AMBIENT`] variables. Every value is `Copy`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{precondition, Error, Result};

pub const MAX_AMBIENT: usize = 32;

fn bit(i: usize) -> u32 {
    1u32 << (i - 1)
}

fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

fn check_ambient(n: usize) -> Result<()> {
    if n > MAX_AMBIENT {
        Err(Error::AmbientTooLarge(n))
    } else {
        Ok(())
    }
}

/// Indices of the set bits of `mask`, ascending and 1-based.
pub(crate) fn mask_indices(mask: u32) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i + 1)
        }
    })
}

/// A squarefree monomial `x_A`, `A ⊆ [1, ambient]`.
///
/// The empty support is the constant monomial 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SquarefreeMonomial {
    mask: u32,
    ambient: u8,
}

impl SquarefreeMonomial {
    /// Builds a monomial from a strictly increasing index list.
    pub fn new(ambient: usize, support: &[usize]) -> Result<Self> {
        check_ambient(ambient)?;
        if support.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotStrictlyIncreasing(support.to_vec()));
        }
        let mut mask = 0;
        for &i in support {
            if i == 0 || i > ambient {
                return Err(Error::IndexOutOfRange { index: i, ambient });
            }
            mask |= bit(i);
        }
        Ok(Self {
            mask,
            ambient: ambient as u8,
        })
    }

    pub fn one(ambient: usize) -> Self {
        assert!(ambient <= MAX_AMBIENT);
        Self {
            mask: 0,
            ambient: ambient as u8,
        }
    }

    pub fn from_mask(ambient: usize, mask: u32) -> Result<Self> {
        check_ambient(ambient)?;
        if mask & !full_mask(ambient) != 0 {
            let index = 32 - mask.leading_zeros() as usize;
            return Err(Error::IndexOutOfRange { index, ambient });
        }
        Ok(Self {
            mask,
            ambient: ambient as u8,
        })
    }

    pub(crate) fn from_mask_unchecked(ambient: usize, mask: u32) -> Self {
        debug_assert!(mask & !full_mask(ambient) == 0);
        Self {
            mask,
            ambient: ambient as u8,
        }
    }

    /// `x_{s_1} x_{s_2} ...` for an arbitrary (possibly unsorted) index iterator.
    pub fn from_indices(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        Self::new(ambient, &v)
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn ambient(&self) -> usize {
        self.ambient as usize
    }

    pub fn degree(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_one(&self) -> bool {
        self.mask == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        mask_indices(self.mask)
    }

    pub fn support(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// `min(w)`, with `min(1) = 0`.
    pub fn min(&self) -> usize {
        if self.mask == 0 {
            0
        } else {
            self.mask.trailing_zeros() as usize + 1
        }
    }

    /// `max(w)`, with `max(1) = 0`.
    pub fn max(&self) -> usize {
        32 - self.mask.leading_zeros() as usize
    }

    pub fn contains(&self, i: usize) -> bool {
        (1..=32).contains(&i) && self.mask & bit(i) != 0
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self {
            mask: self.mask | other.mask,
            ambient: self.ambient.max(other.ambient),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Self {
            mask: self.mask & other.mask,
            ambient: self.ambient.max(other.ambient),
        }
    }

    /// `w / x_i`; `None` when `x_i` does not divide `w`.
    pub fn without(&self, i: usize) -> Option<Self> {
        if self.contains(i) {
            Some(Self {
                mask: self.mask & !bit(i),
                ambient: self.ambient,
            })
        } else {
            None
        }
    }

    /// `x_i w`; `None` when `x_i` already divides `w` (the product would not be squarefree).
    pub fn with(&self, i: usize) -> Option<Self> {
        if i == 0 || i > self.ambient() || self.contains(i) {
            None
        } else {
            Some(Self {
                mask: self.mask | bit(i),
                ambient: self.ambient,
            })
        }
    }

    pub fn with_ambient(&self, ambient: usize) -> Result<Self> {
        Self::from_mask(ambient, self.mask)
    }

    /// Relabels `x_i ↦ x_{i - k}`; every index must exceed `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Ok(*self);
        }
        if self.mask & full_mask(k) != 0 {
            return Err(Error::IndexOutOfRange {
                index: self.min(),
                ambient: self.ambient(),
            });
        }
        Ok(Self {
            mask: self.mask >> k,
            ambient: (self.ambient() - k) as u8,
        })
    }

    /// Relabels `x_i ↦ x_{i + k}` into an ambient enlarged by `k`.
    pub fn shift_up(&self, k: usize) -> Result<Self> {
        let ambient = self.ambient() + k;
        check_ambient(ambient)?;
        Ok(Self {
            mask: ((self.mask as u64) << k) as u32,
            ambient: ambient as u8,
        })
    }

    /// The image under `i ↦ n + 1 - i`.
    pub fn reflect(&self) -> Self {
        let n = self.ambient();
        let mask = self.iter().fold(0, |m, i| m | bit(n + 1 - i));
        Self {
            mask,
            ambient: self.ambient,
        }
    }

    pub fn to_index_set(&self) -> IndexSet {
        IndexSet {
            mask: self.mask,
            ambient: self.ambient,
        }
    }
}

impl fmt::Display for SquarefreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mask == 0 {
            return f.write_str("1");
        }
        let mut first = true;
        for i in self.iter() {
            if !first {
                f.write_str("*")?;
            }
            write!(f, "x{i}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for SquarefreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for SquarefreeMonomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// A subset of `[1, ambient]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IndexSet {
    mask: u32,
    ambient: u8,
}

impl IndexSet {
    pub fn empty(ambient: usize) -> Self {
        assert!(ambient <= MAX_AMBIENT);
        Self {
            mask: 0,
            ambient: ambient as u8,
        }
    }

    pub fn full(ambient: usize) -> Self {
        assert!(ambient <= MAX_AMBIENT);
        Self {
            mask: full_mask(ambient),
            ambient: ambient as u8,
        }
    }

    /// `[lo, hi]` (empty when `lo > hi`).
    pub fn interval(ambient: usize, lo: usize, hi: usize) -> Result<Self> {
        let mut s = Self::empty(ambient);
        for i in lo..=hi {
            s.insert(i)?;
        }
        Ok(s)
    }

    pub fn from_indices(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        check_ambient(ambient)?;
        let mut s = Self::empty(ambient);
        for i in indices {
            s.insert(i)?;
        }
        Ok(s)
    }

    pub fn from_mask(ambient: usize, mask: u32) -> Result<Self> {
        SquarefreeMonomial::from_mask(ambient, mask).map(|m| m.to_index_set())
    }

    pub(crate) fn from_mask_unchecked(ambient: usize, mask: u32) -> Self {
        debug_assert!(mask & !full_mask(ambient) == 0);
        Self {
            mask,
            ambient: ambient as u8,
        }
    }

    pub fn insert(&mut self, i: usize) -> Result<()> {
        if i == 0 || i > self.ambient() {
            return Err(Error::IndexOutOfRange {
                index: i,
                ambient: self.ambient(),
            });
        }
        self.mask |= bit(i);
        Ok(())
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn ambient(&self) -> usize {
        self.ambient as usize
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        (1..=32).contains(&i) && self.mask & bit(i) != 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        mask_indices(self.mask)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    /// `[ambient] ∖ self`.
    pub fn complement(&self) -> Self {
        Self {
            mask: !self.mask & full_mask(self.ambient()),
            ambient: self.ambient,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        Self {
            mask: self.mask | other.mask,
            ambient: self.ambient.max(other.ambient),
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        Self {
            mask: self.mask & !other.mask,
            ambient: self.ambient,
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.mask & !other.mask == 0
    }

    /// `x_A` for this set `A`.
    pub fn monomial(&self) -> SquarefreeMonomial {
        SquarefreeMonomial {
            mask: self.mask,
            ambient: self.ambient,
        }
    }

    pub fn reflect(&self) -> Self {
        self.monomial().reflect().to_index_set()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// Consecutive support gaps are all at least `t`.
pub fn is_t_spread(m: &SquarefreeMonomial, t: usize) -> bool {
    let mut prev: Option<usize> = None;
    for i in m.iter() {
        if let Some(p) = prev {
            if i - p < t {
                return false;
            }
        }
        prev = Some(i);
    }
    true
}

/// Squarefree lex order on equal-degree monomials; `Greater` means `u >_slex v`.
///
/// The first differing index of the sorted supports decides, and the
/// monomial holding the smaller index is the larger one. That index is the
/// lowest bit of the symmetric difference.
pub fn slex_compare(u: &SquarefreeMonomial, v: &SquarefreeMonomial) -> Result<Ordering> {
    if u.degree() != v.degree() {
        return Err(Error::DegreeMismatch {
            left: u.degree(),
            right: v.degree(),
        });
    }
    if u.ambient() != v.ambient() {
        return Err(Error::AmbientMismatch {
            left: u.ambient(),
            right: v.ambient(),
        });
    }
    Ok(slex(u, v))
}

pub(crate) fn slex(u: &SquarefreeMonomial, v: &SquarefreeMonomial) -> Ordering {
    debug_assert_eq!(u.degree(), v.degree());
    let diff = u.mask ^ v.mask;
    if diff == 0 {
        Ordering::Equal
    } else if u.mask & (diff & diff.wrapping_neg()) != 0 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// Lexicographic order with `x_1 > x_2 > ... ` on arbitrary monomials given as
/// index multisets (repetitions allowed, any order). `Greater` means `a >_lex b`.
pub fn lex_compare(a: &[usize], b: &[usize]) -> Ordering {
    let top = a.iter().chain(b).copied().max().unwrap_or(0);
    let mut ea = vec![0u32; top + 1];
    let mut eb = vec![0u32; top + 1];
    for &i in a {
        ea[i] += 1;
    }
    for &i in b {
        eb[i] += 1;
    }
    for i in 1..=top {
        match ea[i].cmp(&eb[i]) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// `binom(a, b)` extended by zero outside `0 <= b <= a`.
pub fn binom(a: i64, b: i64) -> u64 {
    if b < 0 || a < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b) as u128;
    let a = a as u128;
    let mut r: u128 = 1;
    for k in 0..b {
        r = r * (a - k) / (k + 1);
    }
    r as u64
}

/// `|M_{n,d,t}| = binom(n - (t-1)(d-1), d)`, zero when infeasible.
pub fn count_m(n: usize, d: usize, t: usize) -> u64 {
    if d == 0 {
        return 1;
    }
    if n < 1 + (d - 1) * t {
        return 0;
    }
    binom(n as i64 - (t as i64 - 1) * (d as i64 - 1), d as i64)
}

/// `max(M_{n,d,t}) = x_1 x_{1+t} ... x_{1+(d-1)t}`.
pub fn max_m(n: usize, d: usize, t: usize) -> Option<SquarefreeMonomial> {
    if n > MAX_AMBIENT || (d > 0 && n < 1 + (d - 1) * t) {
        return None;
    }
    let mask = (0..d).fold(0, |m, k| m | bit(1 + k * t));
    Some(SquarefreeMonomial::from_mask_unchecked(n, mask))
}

/// `min(M_{n,d,t}) = x_{n-(d-1)t} ... x_{n-t} x_n`.
pub fn min_m(n: usize, d: usize, t: usize) -> Option<SquarefreeMonomial> {
    if n > MAX_AMBIENT || (d > 0 && n < 1 + (d - 1) * t) {
        return None;
    }
    let mask = (0..d).fold(0, |m, k| m | bit(n - k * t));
    Some(SquarefreeMonomial::from_mask_unchecked(n, mask))
}

/// Iterator over `M_{n,d,t}` in strictly slex-descending order.
///
/// Subtracting `(k-1)(t-1)` from the k-th index turns t-spread supports into
/// ordinary d-subsets of `[1, n - (t-1)(d-1)]`; slex-descending order is the
/// lexicographic order of those subsets, advanced by the usual successor.
pub struct TSpreadMonomials {
    n: usize,
    t: usize,
    top: usize,
    comb: Vec<usize>,
    done: bool,
}

impl TSpreadMonomials {
    pub fn new(n: usize, d: usize, t: usize) -> Self {
        let feasible = n <= MAX_AMBIENT && t >= 1 && (d == 0 || n > (d - 1) * t);
        let top = if feasible && d > 0 {
            n - (t - 1) * (d - 1)
        } else {
            0
        };
        Self {
            n,
            t,
            top,
            comb: (1..=d).collect(),
            done: !feasible,
        }
    }

    fn current(&self) -> SquarefreeMonomial {
        let mask = self
            .comb
            .iter()
            .enumerate()
            .fold(0, |m, (k, &c)| m | bit(c + k * (self.t - 1)));
        SquarefreeMonomial::from_mask_unchecked(self.n, mask)
    }

    fn advance(&mut self) {
        let d = self.comb.len();
        let mut k = d;
        while k > 0 {
            k -= 1;
            if self.comb[k] < self.top - (d - 1 - k) {
                self.comb[k] += 1;
                for r in k + 1..d {
                    self.comb[r] = self.comb[r - 1] + 1;
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for TSpreadMonomials {
    type Item = SquarefreeMonomial;

    fn next(&mut self) -> Option<SquarefreeMonomial> {
        if self.done {
            return None;
        }
        let m = self.current();
        if self.comb.is_empty() {
            self.done = true;
        } else {
            self.advance();
        }
        Some(m)
    }
}

/// `M_{n,d,t}`, slex-descending; empty when `n < 1 + (d-1)t`.
pub fn enumerate_m(n: usize, d: usize, t: usize) -> Vec<SquarefreeMonomial> {
    TSpreadMonomials::new(n, d, t).collect()
}

/// `supp_t(w) = ∪ [l, l + t - 1]` over `l ∈ supp(w)`; requires `max(w) <= n + 1 - t`.
pub fn supp_t(w: &SquarefreeMonomial, t: usize) -> Result<IndexSet> {
    let n = w.ambient();
    if t == 0 {
        return Err(precondition("supp_t", "t must be positive"));
    }
    if !w.is_one() && w.max() + t > n + 1 {
        return Err(precondition(
            "supp_t",
            format!("max({w}) = {} exceeds n + 1 - t = {}", w.max(), (n + 1) as i64 - t as i64),
        ));
    }
    let mut s = IndexSet::empty(n);
    for l in w.iter() {
        for i in l..l + t {
            s.insert(i)?;
        }
    }
    Ok(s)
}

/// `cosupp_t(w) = ∪ [l - t + 1, l]` over `l ∈ supp(w)`; requires `min(w) >= t`.
pub fn cosupp_t(w: &SquarefreeMonomial, t: usize) -> Result<IndexSet> {
    let n = w.ambient();
    if t == 0 {
        return Err(precondition("cosupp_t", "t must be positive"));
    }
    if !w.is_one() && w.min() < t {
        return Err(precondition(
            "cosupp_t",
            format!("min({w}) = {} is below t = {t}", w.min()),
        ));
    }
    let mut s = IndexSet::empty(n);
    for l in w.iter() {
        for i in l + 1 - t..=l {
            s.insert(i)?;
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: usize, s: &[usize]) -> SquarefreeMonomial {
        SquarefreeMonomial::new(n, s).unwrap()
    }

    #[test]
    fn t_spread_examples() {
        assert!(is_t_spread(&m(13, &[2, 5, 10, 13]), 3));
        assert!(!is_t_spread(&m(5, &[1, 2]), 2));
        assert!(is_t_spread(&SquarefreeMonomial::one(4), 7));
        assert!(is_t_spread(&m(4, &[3]), 9));
    }

    #[test]
    fn slex_examples() {
        assert_eq!(slex_compare(&m(7, &[1, 3, 5]), &m(7, &[1, 3, 6])).unwrap(), Ordering::Greater);
        assert_eq!(slex_compare(&m(7, &[2, 5, 7]), &m(7, &[2, 5, 7])).unwrap(), Ordering::Equal);
        assert_eq!(slex_compare(&m(6, &[2, 4]), &m(6, &[1, 6])).unwrap(), Ordering::Less);
        assert!(matches!(
            slex_compare(&m(6, &[2, 4]), &m(6, &[1])),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn slex_agrees_with_sorted_vector_order() {
        // Brute force: smaller sorted index vector is slex-greater.
        let all = enumerate_m(6, 2, 2);
        for a in &all {
            for b in &all {
                let expected = b.support().cmp(&a.support());
                assert_eq!(slex(a, b), expected, "{a} vs {b}");
            }
        }
    }

    #[test]
    fn enumerate_small_cases() {
        let got: Vec<Vec<usize>> = enumerate_m(6, 2, 2).iter().map(|w| w.support()).collect();
        let want = vec![
            vec![1, 3],
            vec![1, 4],
            vec![1, 5],
            vec![1, 6],
            vec![2, 4],
            vec![2, 5],
            vec![2, 6],
            vec![3, 5],
            vec![3, 6],
            vec![4, 6],
        ];
        assert_eq!(got, want);
        assert_eq!(enumerate_m(7, 3, 3), vec![m(7, &[1, 4, 7])]);
        assert!(enumerate_m(6, 3, 3).is_empty());
        assert_eq!(enumerate_m(5, 0, 2), vec![SquarefreeMonomial::one(5)]);
    }

    #[test]
    fn enumerate_matches_filtered_subsets() {
        // Independent route: all 3-subsets of [9] filtered by spread, sorted.
        let mut brute: Vec<Vec<usize>> = Vec::new();
        for a in 1..=9 {
            for b in a + 2..=9 {
                for c in b + 2..=9 {
                    brute.push(vec![a, b, c]);
                }
            }
        }
        brute.sort();
        let got: Vec<Vec<usize>> = enumerate_m(9, 3, 2).iter().map(|w| w.support()).collect();
        assert_eq!(got.len(), 35);
        assert_eq!(got, brute);
    }

    #[test]
    fn extremes() {
        assert_eq!(max_m(7, 3, 2).unwrap(), m(7, &[1, 3, 5]));
        assert_eq!(min_m(7, 3, 2).unwrap(), m(7, &[3, 5, 7]));
        assert_eq!(max_m(4, 3, 2), None);
    }

    #[test]
    fn supp_and_cosupp_examples() {
        let w = m(13, &[2, 5, 10, 13]);
        let s = supp_t(&w.without(13).unwrap(), 3).unwrap();
        assert_eq!(s.to_vec(), vec![2, 3, 4, 5, 6, 7, 10, 11, 12]);
        let c = cosupp_t(&w.without(2).unwrap(), 3).unwrap();
        assert_eq!(c.to_vec(), vec![3, 4, 5, 8, 9, 10, 11, 12, 13]);
        assert_eq!(supp_t(&m(7, &[1, 3]), 2).unwrap().to_vec(), vec![1, 2, 3, 4]);
        assert_eq!(cosupp_t(&m(7, &[4, 6]), 2).unwrap().to_vec(), vec![3, 4, 5, 6]);
        assert!(supp_t(&SquarefreeMonomial::one(5), 3).unwrap().is_empty());
        assert!(cosupp_t(&SquarefreeMonomial::one(5), 3).unwrap().is_empty());
    }

    #[test]
    fn supp_out_of_range() {
        assert!(matches!(supp_t(&m(13, &[2, 13]), 3), Err(Error::Precondition { .. })));
        assert!(matches!(cosupp_t(&m(13, &[2, 13]), 3), Err(Error::Precondition { .. })));
    }

    #[test]
    fn lex_on_non_squarefree() {
        // x1^2 x5 >_lex x1 x3 x4
        assert_eq!(lex_compare(&[1, 1, 5], &[1, 3, 4]), Ordering::Greater);
        assert_eq!(lex_compare(&[1, 4, 6], &[1, 4, 6]), Ordering::Equal);
        assert_eq!(lex_compare(&[2, 4], &[1, 6]), Ordering::Less);
    }

    #[test]
    fn rendering() {
        assert_eq!(m(7, &[1, 3, 5]).to_string(), "x1*x3*x5");
        assert_eq!(SquarefreeMonomial::one(3).to_string(), "1");
        assert_eq!(serde_json::to_string(&m(7, &[1, 3, 5])).unwrap(), "[1,3,5]");
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            SquarefreeMonomial::new(5, &[3, 2]),
            Err(Error::NotStrictlyIncreasing(_))
        ));
        assert!(matches!(
            SquarefreeMonomial::new(5, &[6]),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(SquarefreeMonomial::new(33, &[]), Err(Error::AmbientTooLarge(33))));
    }

    #[test]
    fn binom_zero_extension() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(2, 5), 0);
        assert_eq!(binom(-1, 0), 0);
        assert_eq!(binom(4, -1), 0);
        assert_eq!(binom(0, 0), 1);
    }
}

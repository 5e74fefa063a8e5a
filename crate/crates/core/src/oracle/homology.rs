//! Reduced simplicial homology over the rationals.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

/// Reduced Betti numbers `b̃_k`, `k >= -1`, trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct HomologyProfile {
    /// `reduced[k + 1] = b̃_k`.
    reduced: Vec<u64>,
}

impl HomologyProfile {
    fn from_vec(mut reduced: Vec<u64>) -> Self {
        while reduced.last() == Some(&0) {
            reduced.pop();
        }
        Self { reduced }
    }

    pub fn get(&self, k: isize) -> u64 {
        if k < -1 {
            return 0;
        }
        self.reduced.get((k + 1) as usize).copied().unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.reduced.is_empty()
    }

    /// `(k, b̃_k)` for every nonzero entry.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, u64)> + '_ {
        self.reduced
            .iter()
            .enumerate()
            .filter(|(_, &b)| b != 0)
            .map(|(k, &b)| (k as isize - 1, b))
    }
}

const CACHE_LIMIT: usize = 1 << 18;

fn cache() -> &'static RwLock<HashMap<Vec<u32>, HomologyProfile>> {
    static CACHE: OnceLock<RwLock<HashMap<Vec<u32>, HomologyProfile>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Packs the bits of `x` selected by `sel` into the low bits.
fn compress(x: u32, sel: u32) -> u32 {
    let mut out = 0u32;
    let mut k = 0;
    let mut rest = sel;
    while rest != 0 {
        let b = rest & rest.wrapping_neg();
        if x & b != 0 {
            out |= 1 << k;
        }
        k += 1;
        rest ^= b;
    }
    out
}

/// Keeps the inclusion-maximal masks.
pub(crate) fn maximal(mut sets: Vec<u32>) -> Vec<u32> {
    sets.sort_unstable_by_key(|s| std::cmp::Reverse(s.count_ones()));
    sets.dedup();
    let mut out: Vec<u32> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|&f| s & !f == 0) {
            out.push(s);
        }
    }
    out
}

/// Reduced homology of the complex generated by `facets` (an antichain of
/// vertex masks). An empty facet list is the void complex; `[0]` is `{∅}`.
pub fn reduced_homology(facets: &[u32]) -> HomologyProfile {
    if facets.is_empty() {
        return HomologyProfile::default();
    }
    let common = facets.iter().fold(u32::MAX, |a, &f| a & f);
    if common != 0 {
        // A cone over any common vertex.
        return HomologyProfile::default();
    }
    let vertices = facets.iter().fold(0u32, |a, &f| a | f);
    let mut key: Vec<u32> = facets.iter().map(|&f| compress(f, vertices)).collect();
    key.sort_unstable();
    if let Some(p) = cache().read().expect("cache lock").get(&key) {
        return p.clone();
    }
    let profile = compute(&key, vertices.count_ones() as usize);
    let mut w = cache().write().expect("cache lock");
    if w.len() >= CACHE_LIMIT {
        w.clear();
    }
    w.insert(key, profile.clone());
    profile
}

fn compute(facets: &[u32], k: usize) -> HomologyProfile {
    let size = 1usize << k;
    let mut is_face = vec![false; size];
    for &f in facets {
        // Every submask of f, including f and 0.
        let mut s = f;
        loop {
            is_face[s as usize] = true;
            if s == 0 {
                break;
            }
            s = (s - 1) & f;
        }
    }
    let top = facets.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    // by_size[s]: faces with s vertices; index[m]: position within its size class.
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
    let mut index = vec![u32::MAX; size];
    for m in 0..size {
        if is_face[m] {
            let s = (m as u32).count_ones() as usize;
            index[m] = by_size[s].len() as u32;
            by_size[s].push(m as u32);
        }
    }
    // rank[s] = rank of the boundary from faces of size s to faces of size s - 1.
    let mut rank = vec![0usize; top + 2];
    for s in 1..=top {
        let cols = by_size[s - 1].len();
        let rows: Vec<Vec<i64>> = by_size[s]
            .iter()
            .map(|&f| {
                let mut row = vec![0i64; cols];
                let mut sign = 1i64;
                let mut rest = f;
                while rest != 0 {
                    let b = rest & rest.wrapping_neg();
                    row[index[(f ^ b) as usize] as usize] = sign;
                    sign = -sign;
                    rest ^= b;
                }
                row
            })
            .collect();
        rank[s] = rank_exact(rows, cols);
    }
    let reduced: Vec<u64> = (0..=top)
        .map(|s| (by_size[s].len() - rank[s] - rank[s + 1]) as u64)
        .collect();
    HomologyProfile::from_vec(reduced)
}

const PRIME: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn rank_mod_p(rows: &[Vec<i64>], cols: usize) -> usize {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(PRIME as i64) as u64).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let inv = powmod(m[rank][c], PRIME - 2);
        for r in rank + 1..m.len() {
            if m[r][c] != 0 {
                let f = mulmod(m[r][c], inv);
                for j in c..cols {
                    let sub = mulmod(f, m[rank][j]);
                    m[r][j] = (m[r][j] + PRIME - sub) % PRIME;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over ℚ of an integer matrix.
///
/// A rank modulo a prime never exceeds the rational rank, so a full-rank
/// result there is final; otherwise fraction-free elimination decides.
pub fn rank_exact(rows: Vec<Vec<i64>>, cols: usize) -> usize {
    if rows.is_empty() || cols == 0 {
        return 0;
    }
    let r = rank_mod_p(&rows, cols);
    if r == rows.len().min(cols) {
        return r;
    }
    let wide: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    match bareiss_i128(wide, cols) {
        Some(r) => r,
        None => bareiss_big(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(), cols),
    }
}

/// Fraction-free elimination; `None` on overflow.
fn bareiss_i128(mut m: Vec<Vec<i128>>, cols: usize) -> Option<usize> {
    let mut prev: i128 = 1;
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let piv = m[rank][c];
        for r in rank + 1..m.len() {
            let a = m[r][c];
            for j in c..cols {
                let x = piv.checked_mul(m[r][j])?;
                let y = a.checked_mul(m[rank][j])?;
                m[r][j] = x.checked_sub(y)? / prev;
            }
        }
        prev = piv;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_big(mut m: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let piv = m[rank][c].clone();
        for r in rank + 1..m.len() {
            let a = m[r][c].clone();
            for j in c..cols {
                let v = (&piv * &m[r][j] - &a * &m[rank][j]) / &prev;
                m[r][j] = v;
            }
        }
        prev = piv;
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle() {
        let h = reduced_homology(&[0b011, 0b110, 0b101]);
        assert_eq!(h.get(1), 1);
        assert_eq!(h.get(0), 0);
    }

    #[test]
    fn simplex_and_empty() {
        assert!(reduced_homology(&[0b1111]).is_acyclic());
        let e = reduced_homology(&[0]);
        assert_eq!(e.get(-1), 1);
        assert!(reduced_homology(&[]).is_acyclic());
    }

    #[test]
    fn points_and_sphere() {
        let h = reduced_homology(&[0b001, 0b010, 0b100]);
        assert_eq!(h.get(0), 2);
        // Boundary of the tetrahedron.
        let h = reduced_homology(&[0b0111, 0b1011, 0b1101, 0b1110]);
        assert_eq!(h.nonzero().collect::<Vec<_>>(), vec![(2, 1)]);
    }

    #[test]
    fn two_circles_wedge() {
        // Two triangles' boundaries sharing vertex 1.
        let h = reduced_homology(&[0b00011, 0b00110, 0b00101, 0b01001, 0b11000, 0b10001]);
        assert_eq!(h.get(1), 2);
    }

    #[test]
    fn rational_rank_is_exact() {
        // Singular over ℚ; the modular pass is not full rank, Bareiss settles it.
        let rows = vec![vec![2, 4, 6], vec![1, 2, 3], vec![0, 1, 1]];
        assert_eq!(rank_exact(rows, 3), 2);
        let rows = vec![vec![1, 1], vec![1, -1]];
        assert_eq!(rank_exact(rows, 2), 2);
        let big = vec![vec![i64::MAX, 1], vec![i64::MAX - 1, 1], vec![3, 3]];
        assert_eq!(rank_exact(big, 2), 2);
    }

    #[test]
    fn bignum_path_matches() {
        let rows = [vec![i64::MAX, i64::MAX], vec![i64::MAX, i64::MAX - 1]];
        let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        assert_eq!(bareiss_big(big, 2), 2);
    }
}

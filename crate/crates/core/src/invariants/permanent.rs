//! Ryser's inclusion–exclusion formula with Gray-code subset order.
//!
//! `perm(B) = (-1)^n Σ_{S ⊆ cols} (-1)^{|S|} Π_i Σ_{j∈S} b_ij`. Walking the
//! subsets in reflected Gray-code order changes one column per step, so the
//! row sums are updated in O(n). The subset range is cut into contiguous
//! chunks; each chunk seeds its row sums from the Gray code of its first
//! index and the chunk totals are added in order.

use std::ops::Range;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::par;

/// The arithmetic a Ryser chunk needs; `None` signals overflow.
trait RyserNum: Clone + Zero {
    fn add_c(&self, o: &Self) -> Option<Self>;
    fn sub_c(&self, o: &Self) -> Option<Self>;
    fn mul_c(&self, o: &Self) -> Option<Self>;
}

impl RyserNum for i128 {
    fn add_c(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub_c(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul_c(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
}

impl RyserNum for BigInt {
    fn add_c(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub_c(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul_c(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
}

fn gray(k: u64) -> u64 {
    k ^ (k >> 1)
}

/// Signed sum of Ryser terms for Gray indices in `range`.
fn chunk<T: RyserNum>(m: &[Vec<T>], range: Range<u64>) -> Option<T> {
    let n = m.len();
    let mut sums = vec![T::zero(); n];
    let g0 = gray(range.start);
    for j in (0..n).filter(|&j| (g0 >> j) & 1 == 1) {
        for (s, row) in sums.iter_mut().zip(m) {
            *s = s.add_c(&row[j])?;
        }
    }
    let term = |sums: &[T], g: u64| -> Option<(T, bool)> {
        let mut prod = sums[0].clone();
        for s in &sums[1..] {
            if prod.is_zero() {
                break;
            }
            prod = prod.mul_c(s)?;
        }
        Some((prod, g.count_ones() % 2 == 1))
    };
    let mut acc = T::zero();
    let accumulate = |acc: &mut T, (p, odd): (T, bool)| -> Option<()> {
        *acc = if odd { acc.sub_c(&p)? } else { acc.add_c(&p)? };
        Some(())
    };
    accumulate(&mut acc, term(&sums, g0)?)?;
    for k in range.start + 1..range.end {
        let j = k.trailing_zeros() as usize;
        let g = gray(k);
        let adding = (g >> j) & 1 == 1;
        for (s, row) in sums.iter_mut().zip(m) {
            *s = if adding { s.add_c(&row[j])? } else { s.sub_c(&row[j])? };
        }
        accumulate(&mut acc, term(&sums, g)?)?;
    }
    Some(acc)
}

fn ryser_generic<T: RyserNum + Send + Sync>(m: &[Vec<T>], threads: usize) -> Option<T> {
    let n = m.len();
    let ranges = par::split(1u64 << n, par::chunk_count(threads));
    let parts = par::run(threads, ranges.len(), |i| chunk(m, ranges[i].clone()));
    let mut total = T::zero();
    for p in parts {
        total = total.add_c(&p?)?;
    }
    Some(if n % 2 == 1 { T::zero().sub_c(&total)? } else { total })
}

/// Permanent of a square integer matrix. Tries checked `i128` arithmetic
/// first and falls back to big integers on overflow.
pub(crate) fn ryser(m: &[Vec<BigInt>], threads: usize) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(n < 63, "Ryser subset index would overflow");
    let small: Option<Vec<Vec<i128>>> = m.iter().map(|r| r.iter().map(ToPrimitive::to_i128).collect()).collect();
    if let Some(v) = small.and_then(|s| ryser_generic(&s, threads)) {
        return BigInt::from(v);
    }
    ryser_generic(m, threads).expect("big-integer arithmetic cannot overflow")
}

//! Quantities preserved by every sign conjugation: trace, determinant,
//! permanent, rank, principal minors and permanents, and the characteristic
//! and permanental polynomials.
//!
//! Determinants and permanents are computed on an integer form of the
//! matrix: row `i` is multiplied by the lcm `s_i` of its denominators, and
//! since both functions are multilinear in the rows the rational value is the
//! integer result divided by `Π s_i` over the rows involved.

mod elimination;
mod permanent;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::par;
use crate::polynomial::Polynomial;
use crate::scalar::{self, Scalar};

/// Strictly increasing 1-based indices. The empty set is allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet {
    indices: Vec<usize>,
}

impl IndexSet {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.first() == Some(&0) {
            return Err(Error::InvalidIndexSet("indices are 1-based".into()));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidIndexSet(format!("{indices:?} is not strictly increasing")));
        }
        Ok(IndexSet { indices })
    }

    pub fn empty() -> Self {
        IndexSet { indices: Vec::new() }
    }

    /// The set `{1..n}`.
    pub fn full(n: usize) -> Self {
        IndexSet { indices: (1..=n).collect() }
    }

    /// Members are the set bits of `mask` (bit `i` ↔ index `i + 1`).
    pub fn from_mask(mask: u64) -> Self {
        IndexSet { indices: (0..64).filter(|i| (mask >> i) & 1 == 1).map(|i| i + 1).collect() }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    fn zero_based(&self, n: usize) -> Result<Vec<usize>> {
        match self.indices.last() {
            Some(&max) if max > n => Err(Error::IndexOutOfRange { index: max, n }),
            _ => Ok(self.indices.iter().map(|i| i - 1).collect()),
        }
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IndexSet{self}")
    }
}

/// Row-scaled integer copy of a square matrix.
struct IntegerForm {
    rows: Vec<Vec<BigInt>>,
    scales: Vec<BigInt>,
}

impl IntegerForm {
    fn new(a: &Matrix) -> Self {
        let mut rows = Vec::with_capacity(a.rows());
        let mut scales = Vec::with_capacity(a.rows());
        for i in 0..a.rows() {
            let row = a.row(i);
            let s = scalar::denominator_lcm(row);
            rows.push(row.iter().map(|v| (v * BigRational::from_integer(s.clone())).to_integer()).collect());
            scales.push(s);
        }
        IntegerForm { rows, scales }
    }

    fn select(&self, idx: &[usize]) -> Vec<Vec<BigInt>> {
        idx.iter().map(|&i| idx.iter().map(|&j| self.rows[i][j].clone()).collect()).collect()
    }

    fn unscale(&self, value: BigInt, idx: &[usize]) -> Scalar {
        let denom = idx.iter().fold(BigInt::one(), |acc, &i| acc * &self.scales[i]);
        BigRational::new(value, denom)
    }

    fn det(&self, idx: &[usize]) -> Scalar {
        self.unscale(elimination::bareiss_det(self.select(idx)), idx)
    }

    fn perm(&self, idx: &[usize], threads: usize) -> Scalar {
        self.unscale(permanent::ryser(&self.select(idx), threads), idx)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Minor,
    Permanent,
}

fn mask_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| (mask >> i) & 1 == 1).collect()
}

/// Sums of principal minors (or permanents) grouped by order `k`; when
/// `only` is set, every other order is skipped and left at zero.
fn principal_sums(a: &Matrix, kind: Kind, only: Option<usize>, threads: usize) -> Vec<Scalar> {
    let n = a.rows();
    let form = IntegerForm::new(a);
    let ranges = par::split(1u64 << n, par::chunk_count(threads));
    let parts = par::run(threads, ranges.len(), |t| {
        let mut sums = vec![Scalar::zero(); n + 1];
        for mask in ranges[t].clone() {
            let k = mask.count_ones() as usize;
            if only.is_some_and(|o| o != k) {
                continue;
            }
            let idx = mask_indices(mask);
            sums[k] += match kind {
                Kind::Minor => form.det(&idx),
                Kind::Permanent => form.perm(&idx, 1),
            };
        }
        sums
    });
    parts.into_iter().fold(vec![Scalar::zero(); n + 1], |mut acc, p| {
        for (a, b) in acc.iter_mut().zip(p) {
            *a += b;
        }
        acc
    })
}

pub fn trace(a: &Matrix) -> Result<Scalar> {
    a.square_dim()?;
    Ok(a.diagonal().into_iter().sum())
}

/// Exact determinant by fraction-free elimination.
pub fn determinant(a: &Matrix) -> Result<Scalar> {
    let n = a.square_dim()?;
    let all: Vec<usize> = (0..n).collect();
    Ok(IntegerForm::new(a).det(&all))
}

pub fn permanent(a: &Matrix) -> Result<Scalar> {
    permanent_with(a, &Config::default())
}

/// Exact permanent by Ryser's formula, refusing `n > cfg.permanent_cap`.
pub fn permanent_with(a: &Matrix, cfg: &Config) -> Result<Scalar> {
    let n = a.square_dim()?;
    if n > cfg.permanent_cap {
        return Err(Error::SizeCapExceeded { what: "permanent", n, cap: cfg.permanent_cap });
    }
    let all: Vec<usize> = (0..n).collect();
    Ok(IntegerForm::new(a).perm(&all, cfg.threads))
}

/// Rank over ℚ. Any shape.
pub fn rank(a: &Matrix) -> usize {
    elimination::rank(a)
}

/// Determinant of the submatrix on rows and columns `s`; `A(∅) = 1`.
pub fn principal_minor(a: &Matrix, s: &IndexSet) -> Result<Scalar> {
    let n = a.square_dim()?;
    let idx = s.zero_based(n)?;
    Ok(IntegerForm::new(a).det(&idx))
}

/// Permanent of the submatrix on rows and columns `s`; `A[∅] = 1`.
pub fn principal_permanent(a: &Matrix, s: &IndexSet) -> Result<Scalar> {
    let n = a.square_dim()?;
    let idx = s.zero_based(n)?;
    Ok(IntegerForm::new(a).perm(&idx, 1))
}

fn check_order(a: &Matrix, k: usize, cfg: &Config) -> Result<usize> {
    let n = a.square_dim()?;
    if k > n {
        return Err(Error::OrderOutOfRange { k, n });
    }
    if n > cfg.subset_cap {
        return Err(Error::SizeCapExceeded { what: "principal subset enumeration", n, cap: cfg.subset_cap });
    }
    Ok(n)
}

pub fn sum_principal_minors(a: &Matrix, k: usize) -> Result<Scalar> {
    sum_principal_minors_with(a, k, &Config::default())
}

/// Sum of all order-`k` principal minors.
pub fn sum_principal_minors_with(a: &Matrix, k: usize, cfg: &Config) -> Result<Scalar> {
    check_order(a, k, cfg)?;
    Ok(principal_sums(a, Kind::Minor, Some(k), cfg.threads).swap_remove(k))
}

pub fn sum_principal_permanents(a: &Matrix, k: usize) -> Result<Scalar> {
    sum_principal_permanents_with(a, k, &Config::default())
}

/// Sum of all order-`k` principal permanents.
pub fn sum_principal_permanents_with(a: &Matrix, k: usize, cfg: &Config) -> Result<Scalar> {
    check_order(a, k, cfg)?;
    Ok(principal_sums(a, Kind::Permanent, Some(k), cfg.threads).swap_remove(k))
}

/// All principal-minor sums at once, indexed by order `0..=n`.
pub fn principal_minor_sums_with(a: &Matrix, cfg: &Config) -> Result<Vec<Scalar>> {
    check_order(a, 0, cfg)?;
    Ok(principal_sums(a, Kind::Minor, None, cfg.threads))
}

/// All principal-permanent sums at once, indexed by order `0..=n`.
pub fn principal_permanent_sums_with(a: &Matrix, cfg: &Config) -> Result<Vec<Scalar>> {
    check_order(a, 0, cfg)?;
    Ok(principal_sums(a, Kind::Permanent, None, cfg.threads))
}

/// `p_A(λ) = |A − λI|` by the Faddeev–LeVerrier recurrence.
///
/// The recurrence yields `det(λI − A) = Σ c_k λ^k` via `M_1 = I`,
/// `c_{n-k} = −tr(A·M_k)/k`, `M_{k+1} = A·M_k + c_{n-k}·I`; the result is
/// multiplied by `(−1)^n`.
pub fn char_poly(a: &Matrix) -> Result<Polynomial> {
    let n = a.square_dim()?;
    let mut c = vec![Scalar::zero(); n + 1];
    c[n] = Scalar::one();
    let mut m = Matrix::identity(n);
    for k in 1..=n {
        let am = a.product(&m)?;
        let ck = -trace(&am)? / scalar::int(k as i64);
        if k < n {
            m = am.shift_diagonal(&-ck.clone())?;
        }
        c[n - k] = ck;
    }
    let sign = scalar::sign_power(n);
    Ok(Polynomial::new(c.into_iter().map(|v| v * &sign).collect()))
}

pub fn perm_poly(a: &Matrix) -> Result<Polynomial> {
    perm_poly_with(a, &Config::default())
}

/// `q_A(λ) = perm(A − λI)`, assembled from principal-permanent sums:
/// `[λ^{n−k}] q_A = (−1)^{n−k} Σ_{|S|=k} A[S]`.
pub fn perm_poly_with(a: &Matrix, cfg: &Config) -> Result<Polynomial> {
    let n = a.square_dim()?;
    if n > cfg.perm_poly_cap {
        return Err(Error::SizeCapExceeded { what: "permanental polynomial", n, cap: cfg.perm_poly_cap });
    }
    let sums = principal_sums(a, Kind::Permanent, None, cfg.threads);
    let mut coeffs = vec![Scalar::zero(); n + 1];
    for (k, s) in sums.into_iter().enumerate() {
        coeffs[n - k] = s * scalar::sign_power(n - k);
    }
    Ok(Polynomial::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::signs::{apply_phi, parse_sign_vector};

    fn poly(c: &[i64]) -> Polynomial {
        Polynomial::new(c.iter().map(|&v| int(v)).collect())
    }

    fn set(ix: &[usize]) -> IndexSet {
        IndexSet::new(ix.to_vec()).unwrap()
    }

    #[test]
    fn trace_examples() {
        assert_eq!(trace(&Matrix::from_ints(&[[1, 2], [3, 4]])).unwrap(), int(5));
        assert_eq!(trace(&Matrix::zeros(3, 3)).unwrap(), int(0));
        let a = Matrix::from_ints(&[[1, 2, 3], [4, 5, 6], [7, 8, 9]]);
        let b = apply_phi(&a, &parse_sign_vector("1,-1,1").unwrap()).unwrap();
        assert_eq!(trace(&b).unwrap(), int(15));
        assert!(matches!(trace(&Matrix::zeros(1, 2)), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(&Matrix::from_ints(&[[1, 2], [3, 4]])).unwrap(), int(-2));
        assert_eq!(determinant(&Matrix::identity(5)).unwrap(), int(1));
        let a = Matrix::from_ints(&[[1, 2], [2, 4]]);
        let b = apply_phi(&a, &parse_sign_vector("1,-1").unwrap()).unwrap();
        assert_eq!(determinant(&a).unwrap(), int(0));
        assert_eq!(determinant(&b).unwrap(), int(0));
        assert_eq!(determinant(&Matrix::zeros(0, 0)).unwrap(), int(1));
    }

    #[test]
    fn rational_determinant() {
        // [[1/2, 1/3], [1/4, 1/5]] → 1/10 − 1/12 = 1/60
        let a = Matrix::from_rows(vec![
            vec![scalar::ratio(1, 2), scalar::ratio(1, 3)],
            vec![scalar::ratio(1, 4), scalar::ratio(1, 5)],
        ])
        .unwrap();
        assert_eq!(determinant(&a).unwrap(), scalar::ratio(1, 60));
        assert_eq!(permanent(&a).unwrap(), scalar::ratio(11, 60));
    }

    #[test]
    fn permanent_examples() {
        assert_eq!(permanent(&Matrix::from_ints(&[[1, 2], [3, 4]])).unwrap(), int(10));
        assert_eq!(permanent(&Matrix::from_ints(&[[1, 1], [1, 1]])).unwrap(), int(2));
        assert_eq!(permanent(&Matrix::identity(6)).unwrap(), int(1));
        let cfg = Config { permanent_cap: 3, ..Config::default() };
        assert_eq!(
            permanent_with(&Matrix::identity(4), &cfg),
            Err(Error::SizeCapExceeded { what: "permanent", n: 4, cap: 3 })
        );
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Matrix::from_ints(&[[1, 2], [2, 4]])), 1);
        assert_eq!(rank(&Matrix::zeros(4, 4)), 0);
        let c = parse_sign_vector("1,-1").unwrap();
        assert_eq!(rank(&apply_phi(&Matrix::identity(2), &c).unwrap()), 2);
    }

    #[test]
    fn principal_minor_examples() {
        let a = Matrix::from_ints(&[[1, 2], [3, 4]]);
        assert_eq!(principal_minor(&a, &set(&[1, 2])).unwrap(), int(-2));
        assert_eq!(principal_minor(&a, &set(&[2])).unwrap(), int(4));
        assert_eq!(principal_minor(&a, &IndexSet::empty()).unwrap(), int(1));
        let b = Matrix::from_ints(&[[1, 2, 3], [4, 5, 6], [7, 8, 10]]);
        assert_eq!(principal_minor(&b, &set(&[1, 3])).unwrap(), int(-11));
        assert_eq!(principal_minor(&a, &set(&[1, 3])), Err(Error::IndexOutOfRange { index: 3, n: 2 }));
    }

    #[test]
    fn principal_permanent_examples() {
        let a = Matrix::from_ints(&[[1, 2], [3, 4]]);
        assert_eq!(principal_permanent(&a, &set(&[1, 2])).unwrap(), int(10));
        assert_eq!(principal_permanent(&a, &set(&[1])).unwrap(), int(1));
        let b = Matrix::from_ints(&[[1, 2, 3], [4, 5, 6], [7, 8, 10]]);
        assert_eq!(principal_permanent(&b, &set(&[2, 3])).unwrap(), int(98));
    }

    #[test]
    fn index_set_validation() {
        assert!(IndexSet::new(vec![2, 1]).is_err());
        assert!(IndexSet::new(vec![1, 1]).is_err());
        assert!(IndexSet::new(vec![0, 1]).is_err());
        assert_eq!(IndexSet::from_mask(0b101).indices(), &[1, 3]);
        assert_eq!(IndexSet::full(3).to_string(), "{1,2,3}");
    }

    #[test]
    fn principal_sum_examples() {
        let a = Matrix::from_ints(&[[1, 2], [3, 4]]);
        assert_eq!(sum_principal_minors(&a, 1).unwrap(), int(5));
        assert_eq!(sum_principal_minors(&a, 2).unwrap(), int(-2));
        assert_eq!(sum_principal_minors(&a, 0).unwrap(), int(1));
        assert_eq!(sum_principal_permanents(&a, 1).unwrap(), int(5));
        assert_eq!(sum_principal_permanents(&a, 2).unwrap(), int(10));
        assert_eq!(sum_principal_minors(&a, 3), Err(Error::OrderOutOfRange { k: 3, n: 2 }));
        let cfg = Config { subset_cap: 1, ..Config::default() };
        assert!(matches!(sum_principal_minors_with(&a, 1, &cfg), Err(Error::SizeCapExceeded { .. })));
    }

    #[test]
    fn principal_sums_threads_agree() {
        let a = Matrix::from_fn(7, 7, |i, j| scalar::ratio((i * 3 + j * 5) as i64 % 11 - 5, (i + j) as i64 % 3 + 1));
        let one = Config::default();
        let many = Config::default().with_threads(4);
        assert_eq!(principal_permanent_sums_with(&a, &one).unwrap(), principal_permanent_sums_with(&a, &many).unwrap());
        assert_eq!(principal_minor_sums_with(&a, &one).unwrap(), principal_minor_sums_with(&a, &many).unwrap());
        assert_eq!(permanent_with(&a, &one).unwrap(), permanent_with(&a, &many).unwrap());
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(char_poly(&Matrix::from_ints(&[[1, 2], [3, 4]])).unwrap(), poly(&[-2, -5, 1]));
        assert_eq!(char_poly(&Matrix::zeros(3, 3)).unwrap(), poly(&[0, 0, 0, -1]));
        let path = Matrix::from_ints(&[[0, 1, 0], [1, 0, 1], [0, 1, 0]]);
        let c = parse_sign_vector("1,-1,1").unwrap();
        assert_eq!(char_poly(&path).unwrap(), poly(&[0, 2, 0, -1]));
        assert_eq!(char_poly(&apply_phi(&path, &c).unwrap()).unwrap(), poly(&[0, 2, 0, -1]));
        assert_eq!(char_poly(&Matrix::zeros(0, 0)).unwrap(), Polynomial::one());
    }

    #[test]
    fn perm_poly_examples() {
        assert_eq!(perm_poly(&Matrix::from_ints(&[[1, 2], [3, 4]])).unwrap(), poly(&[10, -5, 1]));
        assert_eq!(perm_poly(&Matrix::zeros(2, 2)).unwrap(), poly(&[0, 0, 1]));
        // perm([[1−λ, 0], [0, 1−λ]]) = (1−λ)²
        assert_eq!(perm_poly(&Matrix::identity(2)).unwrap(), poly(&[1, -2, 1]));
        let cfg = Config { perm_poly_cap: 2, ..Config::default() };
        assert!(matches!(perm_poly_with(&Matrix::identity(3), &cfg), Err(Error::SizeCapExceeded { .. })));
    }
}

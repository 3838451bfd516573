//! Permutation-similarity block forms for matrices fixed or negated by a
//! sign map.
//!
//! Listing the `+1` positions of `c` before the `−1` positions gives a
//! permutation `σ`; with `P` its matrix, `Pᵀ·A·P` is `diag(D, E)` when `A` is
//! fixed by the map and `[[0, F], [G, 0]]` when it is negated.

use crate::config::Config;
use crate::decomposition::{classify, SymmetryClass};
use crate::error::{Error, Result};
use crate::invariants::{char_poly, determinant, permanent_with, IndexSet};
use crate::matrix::Matrix;
use crate::permutation::Permutation;
use crate::polynomial::Polynomial;
use crate::scalar::{self, Scalar};
use crate::signs::SignVector;

/// Positions of the `+1` and `−1` signs, 1-based and increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexPartition {
    pub plus_indices: IndexSet,
    pub minus_indices: IndexSet,
}

impl IndexPartition {
    pub fn r(&self) -> usize {
        self.plus_indices.len()
    }

    pub fn n(&self) -> usize {
        self.plus_indices.len() + self.minus_indices.len()
    }

    fn zero_based(&self) -> (Vec<usize>, Vec<usize>) {
        let zb = |s: &IndexSet| s.indices().iter().map(|i| i - 1).collect();
        (zb(&self.plus_indices), zb(&self.minus_indices))
    }
}

pub fn index_partition(c: &SignVector) -> IndexPartition {
    let pick = |want: i8| {
        let idx = (0..c.len()).filter(|&i| c.sign(i) == want).map(|i| i + 1).collect();
        IndexSet::new(idx).expect("positions are increasing")
    };
    IndexPartition { plus_indices: pick(1), minus_indices: pick(-1) }
}

/// `σ(k)` is the `k`-th entry of the plus positions followed by the minus
/// positions.
pub fn block_permutation(c: &SignVector) -> Permutation {
    let (plus, minus) = index_partition(c).zero_based();
    Permutation::new(plus.into_iter().chain(minus).collect()).expect("partition covers 0..n")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Blocks {
    /// `D` on the plus positions, `E` on the minus positions.
    Diagonal { d: Matrix, e: Matrix },
    /// `F` (plus rows, minus columns), `G` (minus rows, plus columns) and the
    /// assembled `H = [[0, F], [G, 0]]`.
    AntiDiagonal { f: Matrix, g: Matrix, h: Matrix },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockReport {
    pub partition: IndexPartition,
    pub permutation: Permutation,
    pub permutation_matrix: Matrix,
    pub blocks: Blocks,
    /// `P⁻¹·A·P`, with `P⁻¹ = Pᵀ`.
    pub conjugated: Matrix,
    /// The block form assembled from the extracted blocks.
    pub assembled: Matrix,
}

impl BlockReport {
    pub fn is_consistent(&self) -> bool {
        self.conjugated == self.assembled
    }
}

/// `[[tl, tr], [bl, br]]`. Block shapes must line up.
pub fn block_matrix(tl: &Matrix, tr: &Matrix, bl: &Matrix, br: &Matrix) -> Result<Matrix> {
    let (top, left) = (tl.rows(), tl.cols());
    if tr.rows() != top || bl.cols() != left || br.rows() != bl.rows() || br.cols() != tr.cols() {
        return Err(Error::DimensionMismatch("block shapes do not line up".into()));
    }
    let rows = top + bl.rows();
    let cols = left + tr.cols();
    Ok(Matrix::from_fn(rows, cols, |i, j| match (i < top, j < left) {
        (true, true) => tl.get(i, j).clone(),
        (true, false) => tr.get(i, j - left).clone(),
        (false, true) => bl.get(i - top, j).clone(),
        (false, false) => br.get(i - top, j - left).clone(),
    }))
}

fn conjugate(a: &Matrix, c: &SignVector) -> Result<(IndexPartition, Permutation, Matrix, Matrix)> {
    let partition = index_partition(c);
    let permutation = block_permutation(c);
    let p = permutation.to_matrix();
    let conjugated = p.transpose().product(a)?.product(&p)?;
    Ok((partition, permutation, p, conjugated))
}

/// Block-diagonal form of a matrix fixed by the map of `c`.
pub fn sym_block_form(a: &Matrix, c: &SignVector) -> Result<BlockReport> {
    if classify(a, c)? != SymmetryClass::SymUnderPhi {
        return Err(Error::NotSymUnderPhi);
    }
    let (partition, permutation, permutation_matrix, conjugated) = conjugate(a, c)?;
    let (plus, minus) = partition.zero_based();
    let d = a.select(&plus, &plus);
    let e = a.select(&minus, &minus);
    let assembled =
        block_matrix(&d, &Matrix::zeros(plus.len(), minus.len()), &Matrix::zeros(minus.len(), plus.len()), &e)?;
    Ok(BlockReport {
        partition,
        permutation,
        permutation_matrix,
        blocks: Blocks::Diagonal { d, e },
        conjugated,
        assembled,
    })
}

/// Anti-diagonal block form of a matrix negated by the map of `c`.
pub fn antisym_block_form(a: &Matrix, c: &SignVector) -> Result<BlockReport> {
    // the zero matrix classifies as fixed but is negated too
    if !a.is_zero() && classify(a, c)? != SymmetryClass::AntiSymUnderPhi {
        return Err(Error::NotAntiSymUnderPhi);
    }
    let (partition, permutation, permutation_matrix, conjugated) = conjugate(a, c)?;
    let (plus, minus) = partition.zero_based();
    let f = a.select(&plus, &minus);
    let g = a.select(&minus, &plus);
    let h = block_matrix(&Matrix::zeros(plus.len(), plus.len()), &f, &g, &Matrix::zeros(minus.len(), minus.len()))?;
    Ok(BlockReport {
        partition,
        permutation,
        permutation_matrix,
        assembled: h.clone(),
        blocks: Blocks::AntiDiagonal { f, g, h },
        conjugated,
    })
}

/// Two sides of an asserted equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity<T> {
    pub lhs: T,
    pub rhs: T,
}

impl<T: PartialEq> Identity<T> {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFactorReport {
    /// `p_A` against `p_D · p_E`.
    pub char_poly: Identity<Polynomial>,
    /// `|A|` against `|D|·|E|`.
    pub determinant: Identity<Scalar>,
    /// `perm(A)` against `perm(D)·perm(E)`.
    pub permanent: Identity<Scalar>,
}

impl SymFactorReport {
    pub fn holds(&self) -> bool {
        self.char_poly.holds() && self.determinant.holds() && self.permanent.holds()
    }
}

pub fn factor_invariants_sym(a: &Matrix, c: &SignVector) -> Result<SymFactorReport> {
    factor_invariants_sym_with(a, c, &Config::default())
}

pub fn factor_invariants_sym_with(a: &Matrix, c: &SignVector, cfg: &Config) -> Result<SymFactorReport> {
    let report = sym_block_form(a, c)?;
    let Blocks::Diagonal { d, e } = &report.blocks else {
        unreachable!("sym_block_form returns diagonal blocks");
    };
    Ok(SymFactorReport {
        char_poly: Identity { lhs: char_poly(a)?, rhs: char_poly(d)?.mul(&char_poly(e)?) },
        determinant: Identity { lhs: determinant(a)?, rhs: determinant(d)? * determinant(e)? },
        permanent: Identity { lhs: permanent_with(a, cfg)?, rhs: permanent_with(d, cfg)? * permanent_with(e, cfg)? },
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntiSymFactorReport {
    pub n: usize,
    pub r: usize,
    /// `|A|` (Bareiss on `A`) against `(−1)^{n/2}·|F|·|G|` when `r = n/2`,
    /// zero otherwise.
    pub determinant: Identity<Scalar>,
    /// `perm(A)` against `perm(F)·perm(G)` when `r = n/2`, zero otherwise.
    pub permanent: Identity<Scalar>,
    /// `(−1)^n·|F|·|G|` in the balanced case. For even `n` this is `+|F||G|`
    /// and disagrees with `|A|` whenever `n/2` is odd and `|F||G| ≠ 0`.
    pub plus_sign_determinant: Option<Scalar>,
}

impl AntiSymFactorReport {
    pub fn balanced(&self) -> bool {
        2 * self.r == self.n
    }

    pub fn holds(&self) -> bool {
        self.determinant.holds() && self.permanent.holds()
    }

    /// Whether the `(−1)^n` sign variant also matches `|A|`.
    pub fn plus_sign_matches(&self) -> Option<bool> {
        self.plus_sign_determinant.as_ref().map(|v| *v == self.determinant.lhs)
    }
}

pub fn factor_invariants_antisym(a: &Matrix, c: &SignVector) -> Result<AntiSymFactorReport> {
    factor_invariants_antisym_with(a, c, &Config::default())
}

pub fn factor_invariants_antisym_with(a: &Matrix, c: &SignVector, cfg: &Config) -> Result<AntiSymFactorReport> {
    let report = antisym_block_form(a, c)?;
    let Blocks::AntiDiagonal { f, g, .. } = &report.blocks else {
        unreachable!("antisym_block_form returns anti-diagonal blocks");
    };
    let n = a.rows();
    let r = report.partition.r();
    let det_a = determinant(a)?;
    let perm_a = permanent_with(a, cfg)?;
    if 2 * r != n {
        return Ok(AntiSymFactorReport {
            n,
            r,
            determinant: Identity { lhs: det_a, rhs: scalar::int(0) },
            permanent: Identity { lhs: perm_a, rhs: scalar::int(0) },
            plus_sign_determinant: None,
        });
    }
    let fg = determinant(f)? * determinant(g)?;
    Ok(AntiSymFactorReport {
        n,
        r,
        determinant: Identity { lhs: det_a, rhs: &fg * scalar::sign_power(n / 2) },
        permanent: Identity { lhs: perm_a, rhs: permanent_with(f, cfg)? * permanent_with(g, cfg)? },
        plus_sign_determinant: Some(fg * scalar::sign_power(n)),
    })
}

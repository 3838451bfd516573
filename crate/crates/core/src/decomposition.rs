//! Splitting a matrix into the parts fixed and negated by a sign map.
//!
//! Entry `(i, j)` belongs to the fixed part when `c_i = c_j` and to the
//! negated part otherwise. The masks come from `c` alone, so the split is
//! defined for every matrix, and the two parts always add back to the input.
//! The transpose split `½(A ± Aᵀ)` is provided alongside because the same
//! order-two additivity holds for it.

use num_traits::Zero;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::invariants::{sum_principal_minors_with, sum_principal_permanents_with};
use crate::matrix::Matrix;
use crate::scalar::{self, Scalar};
use crate::signs::{apply_phi, SignVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymmetryClass {
    SymUnderPhi,
    AntiSymUnderPhi,
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionPair {
    pub sym_part: Matrix,
    pub antisym_part: Matrix,
}

fn check(a: &Matrix, c: &SignVector) -> Result<usize> {
    let n = a.square_dim()?;
    if n != c.len() {
        return Err(Error::DimensionMismatch(format!("{n}x{n} matrix with a sign vector of length {}", c.len())));
    }
    Ok(n)
}

fn masked(a: &Matrix, c: &SignVector, keep_equal: bool) -> Result<Matrix> {
    let n = check(a, c)?;
    Ok(Matrix::from_fn(
        n,
        n,
        |i, j| {
            if (c.sign(i) == c.sign(j)) == keep_equal {
                a.get(i, j).clone()
            } else {
                Scalar::zero()
            }
        },
    ))
}

/// Keeps `a_ij` where `c_i·c_j = 1`, zeroes it elsewhere.
pub fn sym_part(a: &Matrix, c: &SignVector) -> Result<Matrix> {
    masked(a, c, true)
}

/// Keeps `a_ij` where `c_i·c_j = −1`; the diagonal is always zero.
pub fn antisym_part(a: &Matrix, c: &SignVector) -> Result<Matrix> {
    masked(a, c, false)
}

pub fn decompose(a: &Matrix, c: &SignVector) -> Result<DecompositionPair> {
    Ok(DecompositionPair { sym_part: sym_part(a, c)?, antisym_part: antisym_part(a, c)? })
}

/// The zero matrix is both fixed and negated; it is reported as
/// `SymUnderPhi`.
pub fn classify(a: &Matrix, c: &SignVector) -> Result<SymmetryClass> {
    let n = check(a, c)?;
    let mut fixed = true;
    let mut negated = true;
    for i in 0..n {
        for j in 0..n {
            if c.sign(i) != c.sign(j) && !a.get(i, j).is_zero() {
                fixed = false;
            }
            if c.sign(i) == c.sign(j) && !a.get(i, j).is_zero() {
                negated = false;
            }
        }
    }
    Ok(if fixed {
        SymmetryClass::SymUnderPhi
    } else if negated {
        SymmetryClass::AntiSymUnderPhi
    } else {
        SymmetryClass::Neither
    })
}

/// `A_S = ½(A + Aᵀ)`, `A_AS = ½(A − Aᵀ)`.
pub fn classic_split(a: &Matrix) -> Result<DecompositionPair> {
    a.square_dim()?;
    let half = scalar::ratio(1, 2);
    let t = a.transpose();
    Ok(DecompositionPair { sym_part: a.add(&t)?.scale(&half), antisym_part: a.sub(&t)?.scale(&half) })
}

/// `½(A + φ_c(A))` and `½(A − φ_c(A))`, the projection form of the split.
pub fn decompose_by_projection(a: &Matrix, c: &SignVector) -> Result<DecompositionPair> {
    let half = scalar::ratio(1, 2);
    let phi = apply_phi(a, c)?;
    Ok(DecompositionPair { sym_part: a.add(&phi)?.scale(&half), antisym_part: a.sub(&phi)?.scale(&half) })
}

/// Dimensions of the fixed and negated subspaces when `c` has `r` plus signs:
/// `(r² + (n−r)², 2r(n−r))`.
pub fn subspace_dims(n: usize, r: usize) -> Result<(usize, usize)> {
    if r < 1 || r > n {
        return Err(Error::RangeError(format!("r = {r} must satisfy 1 <= r <= n = {n}")));
    }
    Ok((r * r + (n - r) * (n - r), 2 * r * (n - r)))
}

/// Both sides of an order-two additivity identity:
/// `lhs = rhs_sym + rhs_antisym` must hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Additivity {
    pub lhs: Scalar,
    pub rhs_sym: Scalar,
    pub rhs_antisym: Scalar,
}

impl Additivity {
    pub fn rhs(&self) -> Scalar {
        &self.rhs_sym + &self.rhs_antisym
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order2 {
    Minors,
    Permanents,
}

fn order2_sum(a: &Matrix, which: Order2, cfg: &Config) -> Result<Scalar> {
    match which {
        Order2::Minors => sum_principal_minors_with(a, 2, cfg),
        Order2::Permanents => sum_principal_permanents_with(a, 2, cfg),
    }
}

fn additivity(a: &Matrix, parts: &DecompositionPair, which: Order2, cfg: &Config) -> Result<Additivity> {
    let n = a.square_dim()?;
    if n < 2 {
        return Err(Error::OrderOutOfRange { k: 2, n });
    }
    Ok(Additivity {
        lhs: order2_sum(a, which, cfg)?,
        rhs_sym: order2_sum(&parts.sym_part, which, cfg)?,
        rhs_antisym: order2_sum(&parts.antisym_part, which, cfg)?,
    })
}

/// Sum of order-two principal minors of `A` against those of its sign-map
/// parts.
pub fn minor2_additivity(a: &Matrix, c: &SignVector) -> Result<Additivity> {
    additivity(a, &decompose(a, c)?, Order2::Minors, &Config::default())
}

/// As [`minor2_additivity`] with principal permanents.
pub fn permanent2_additivity(a: &Matrix, c: &SignVector) -> Result<Additivity> {
    additivity(a, &decompose(a, c)?, Order2::Permanents, &Config::default())
}

/// Order-two additivity for the transpose split.
pub fn classic_additivity(a: &Matrix, which: Order2) -> Result<Additivity> {
    additivity(a, &classic_split(a)?, which, &Config::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn sv(s: &str) -> SignVector {
        s.parse().unwrap()
    }

    fn pos3() -> Matrix {
        Matrix::from_ints(&[[11, 12, 13], [21, 22, 23], [31, 32, 33]])
    }

    #[test]
    fn sym_part_examples() {
        let c = sv("1,1,-1");
        assert_eq!(sym_part(&pos3(), &c).unwrap(), Matrix::from_ints(&[[11, 12, 0], [21, 22, 0], [0, 0, 33]]));
        assert_eq!(sym_part(&pos3(), &SignVector::ones(3)).unwrap(), pos3());
        let a = Matrix::from_ints(&[[1, 2], [3, 4]]);
        assert_eq!(sym_part(&a, &sv("1,-1")).unwrap(), Matrix::from_ints(&[[1, 0], [0, 4]]));
    }

    #[test]
    fn antisym_part_examples() {
        let c = sv("1,1,-1");
        assert_eq!(antisym_part(&pos3(), &c).unwrap(), Matrix::from_ints(&[[0, 0, 13], [0, 0, 23], [31, 32, 0]]));
        assert!(antisym_part(&pos3(), &SignVector::ones(3)).unwrap().is_zero());
        let a = Matrix::from_ints(&[[1, 2], [3, 4]]);
        assert_eq!(antisym_part(&a, &sv("1,-1")).unwrap(), Matrix::from_ints(&[[0, 2], [3, 0]]));
    }

    #[test]
    fn classify_examples() {
        let c = sv("1,-1");
        let cls = |rows: [[i64; 2]; 2]| classify(&Matrix::from_ints(&rows), &c).unwrap();
        assert_eq!(cls([[1, 0], [0, 4]]), SymmetryClass::SymUnderPhi);
        assert_eq!(cls([[0, 2], [3, 0]]), SymmetryClass::AntiSymUnderPhi);
        assert_eq!(cls([[1, 2], [3, 4]]), SymmetryClass::Neither);
        assert_eq!(cls([[0, 0], [0, 0]]), SymmetryClass::SymUnderPhi);
        assert!(classify(&Matrix::identity(3), &c).is_err());
    }

    #[test]
    fn classic_split_examples() {
        let a = Matrix::from_ints(&[[1, 2], [3, 4]]);
        let p = classic_split(&a).unwrap();
        let h = |v| ratio(v, 2);
        assert_eq!(p.sym_part, Matrix::from_rows(vec![vec![int(1), h(5)], vec![h(5), int(4)]]).unwrap());
        assert_eq!(p.antisym_part, Matrix::from_rows(vec![vec![int(0), h(-1)], vec![h(1), int(0)]]).unwrap());
        let s = Matrix::from_ints(&[[1, 7], [7, 2]]);
        assert_eq!(
            classic_split(&s).unwrap(),
            DecompositionPair { sym_part: s.clone(), antisym_part: Matrix::zeros(2, 2) }
        );
        let k = Matrix::from_ints(&[[0, 1], [-1, 0]]);
        assert_eq!(
            classic_split(&k).unwrap(),
            DecompositionPair { sym_part: Matrix::zeros(2, 2), antisym_part: k.clone() }
        );
    }

    #[test]
    fn dims() {
        assert_eq!(subspace_dims(3, 2).unwrap(), (5, 4));
        assert_eq!(subspace_dims(3, 3).unwrap(), (9, 0));
        assert_eq!(subspace_dims(4, 2).unwrap(), (8, 8));
        assert!(matches!(subspace_dims(3, 0), Err(Error::RangeError(_))));
        assert!(matches!(subspace_dims(3, 4), Err(Error::RangeError(_))));
        // mask count for c = (1,1,-1,-1)
        let ones = Matrix::from_fn(4, 4, |_, _| int(1));
        let kept = sym_part(&ones, &sv("1,1,-1,-1")).unwrap().entries().iter().filter(|v| !v.is_zero()).count();
        assert_eq!(kept, 8);
    }

    #[test]
    fn additivity_examples() {
        let a = Matrix::from_ints(&[[1, 2], [3, 4]]);
        let m = minor2_additivity(&a, &sv("1,-1")).unwrap();
        assert_eq!((m.lhs.clone(), m.rhs_sym.clone(), m.rhs_antisym.clone()), (int(-2), int(4), int(-6)));
        assert!(m.holds());
        let cl = classic_additivity(&a, Order2::Minors).unwrap();
        assert_eq!((cl.lhs.clone(), cl.rhs_sym.clone(), cl.rhs_antisym.clone()), (int(-2), ratio(-9, 4), ratio(1, 4)));
        let d = Matrix::from_ints(&[[2, 0, 0], [0, 3, 0], [0, 0, 5]]);
        let m = minor2_additivity(&d, &sv("1,-1,1")).unwrap();
        assert_eq!(m.rhs_sym, m.lhs);
        assert!(m.rhs_antisym.is_zero());
        assert!(permanent2_additivity(&a, &sv("1,-1")).unwrap().holds());
        assert_eq!(minor2_additivity(&Matrix::identity(1), &sv("1")), Err(Error::OrderOutOfRange { k: 2, n: 1 }));
    }
}

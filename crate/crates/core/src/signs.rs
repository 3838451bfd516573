//! Sign vectors and the conjugation map `A ↦ (c_i · a_ij · c_j)`.

use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// A vector in `{-1, +1}^n` whose first coordinate is `+1`.
///
/// Admissible vectors of length `n` are in bijection with `(n-1)`-bit masks:
/// bit `k` of the mask is set iff coordinate `k + 2` (1-based) is `-1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector {
    signs: Vec<i8>,
}

impl SignVector {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        match signs.first() {
            None => return Err(Error::Empty),
            Some(&s) if s != 1 => {
                return if s == -1 {
                    Err(Error::FirstCoordinateNotOne)
                } else {
                    Err(Error::MalformedSign(s.to_string()))
                }
            }
            _ => {}
        }
        if let Some(bad) = signs.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::MalformedSign(bad.to_string()));
        }
        Ok(SignVector { signs })
    }

    pub fn ones(n: usize) -> Self {
        assert!(n >= 1, "sign vectors have length >= 1");
        SignVector { signs: vec![1; n] }
    }

    /// The admissible vector whose `(n-1)`-bit encoding is `mask`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n >= 1, "sign vectors have length >= 1");
        assert!(n - 1 < 64 && mask >> (n - 1) == 0, "mask {mask:#b} too wide for n = {n}");
        let signs = (0..n).map(|i| if i > 0 && (mask >> (i - 1)) & 1 == 1 { -1 } else { 1 }).collect();
        SignVector { signs }
    }

    pub fn to_mask(&self) -> u64 {
        self.signs.iter().skip(1).enumerate().filter(|(_, &s)| s == -1).fold(0, |m, (k, _)| m | (1 << k))
    }

    /// All `2^(n-1)` admissible vectors, in mask order.
    pub fn all(n: usize) -> impl Iterator<Item = SignVector> {
        assert!((1..=64).contains(&n), "n = {n} out of range");
        (0..1u64 << (n - 1)).map(move |m| SignVector::from_mask(n, m))
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Sign at 0-based position `i`.
    pub fn sign(&self, i: usize) -> i8 {
        self.signs[i]
    }

    /// Number of `+1` coordinates.
    pub fn plus_count(&self) -> usize {
        self.signs.iter().filter(|&&s| s == 1).count()
    }

    /// Coordinate-wise product; this is composition of the two maps.
    pub fn product(&self, other: &SignVector) -> Result<SignVector> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch(format!("sign vectors of length {} and {}", self.len(), other.len())));
        }
        let signs = self.signs.iter().zip(&other.signs).map(|(a, b)| a * b).collect();
        Ok(SignVector { signs })
    }

    fn check_dim(&self, a: &Matrix) -> Result<usize> {
        let n = a.square_dim()?;
        if n != self.len() {
            return Err(Error::DimensionMismatch(format!(
                "{n}x{n} matrix with a sign vector of length {}",
                self.len()
            )));
        }
        Ok(n)
    }
}

/// Parses comma- and/or whitespace-separated tokens from `+ - 1 -1 +1`.
pub fn parse_sign_vector(text: &str) -> Result<SignVector> {
    let mut signs = Vec::new();
    for tok in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        let s = match tok {
            "+" | "1" | "+1" => 1,
            "-" | "-1" => -1,
            _ => return Err(Error::MalformedSign(tok.to_string())),
        };
        signs.push(s);
    }
    SignVector::new(signs)
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_sign_vector(s)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.signs.iter().map(i8::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignVector{self}")
    }
}

/// Entrywise `c_i · a_ij · c_j`. The diagonal is unchanged.
pub fn apply_phi(a: &Matrix, c: &SignVector) -> Result<Matrix> {
    let n = c.check_dim(a)?;
    Ok(Matrix::from_fn(n, n, |i, j| {
        let v = a.get(i, j);
        if c.signs[i] == c.signs[j] {
            v.clone()
        } else {
            -v
        }
    }))
}

/// `diag(c_1, …, c_n)`. It is its own inverse.
pub fn signature_matrix(c: &SignVector) -> Matrix {
    let diag: Vec<Scalar> = c.signs.iter().map(|&s| if s == 1 { Scalar::one() } else { -Scalar::one() }).collect();
    Matrix::from_diagonal(&diag)
}

/// `P(c) · A · P(c)` computed with the general matrix product.
pub fn conjugate_by_signature(a: &Matrix, c: &SignVector) -> Result<Matrix> {
    c.check_dim(a)?;
    let p = signature_matrix(c);
    p.product(a)?.product(&p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(s: &str) -> SignVector {
        s.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(sv("1,1,-1").signs(), &[1, 1, -1]);
        assert_eq!(sv("+").signs(), &[1]);
        assert_eq!(sv("+1 - , +").signs(), &[1, -1, 1]);
        assert_eq!(parse_sign_vector("-1,1"), Err(Error::FirstCoordinateNotOne));
        assert_eq!(parse_sign_vector(" , "), Err(Error::Empty));
        assert_eq!(parse_sign_vector("1,2"), Err(Error::MalformedSign("2".into())));
        assert!(SignVector::new(vec![1, 0]).is_err());
    }

    #[test]
    fn phi_on_generic_3x3() {
        let a = Matrix::from_ints(&[[1, 2, 3], [4, 5, 6], [7, 8, 9]]);
        let got = apply_phi(&a, &sv("1,1,-1")).unwrap();
        assert_eq!(got, Matrix::from_ints(&[[1, 2, -3], [4, 5, -6], [-7, -8, 9]]));
    }

    #[test]
    fn phi_identity_and_involution() {
        let a = Matrix::from_ints(&[[0, 7], [-3, 5]]);
        let c = sv("1,-1");
        assert_eq!(apply_phi(&a, &SignVector::ones(2)).unwrap(), a);
        assert_eq!(apply_phi(&apply_phi(&a, &c).unwrap(), &c).unwrap(), a);
    }

    #[test]
    fn phi_dimension_mismatch() {
        let a = Matrix::identity(3);
        assert!(matches!(apply_phi(&a, &sv("1,-1")), Err(Error::DimensionMismatch(_))));
        assert!(matches!(apply_phi(&Matrix::zeros(2, 3), &sv("1,-1")), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn signature_matrices() {
        assert_eq!(signature_matrix(&sv("1,-1")), Matrix::from_ints(&[[1, 0], [0, -1]]));
        assert_eq!(signature_matrix(&sv("1,1,-1")), Matrix::from_ints(&[[1, 0, 0], [0, 1, 0], [0, 0, -1]]));
        let p = signature_matrix(&sv("1,-1,1"));
        assert_eq!(p.product(&p).unwrap(), Matrix::identity(3));
    }

    #[test]
    fn conjugation_examples() {
        // diag(1,-1)·[[1,2],[3,4]]·diag(1,-1), multiplied out by hand
        let a = Matrix::from_ints(&[[1, 2], [3, 4]]);
        assert_eq!(conjugate_by_signature(&a, &sv("1,-1")).unwrap(), Matrix::from_ints(&[[1, -2], [-3, 4]]));
        assert_eq!(conjugate_by_signature(&Matrix::identity(4), &sv("1,-1,-1,1")).unwrap(), Matrix::identity(4));
        let g = Matrix::from_ints(&[[1, 2, 3], [4, 5, 6], [7, 8, 9]]);
        let c = sv("1,-1,-1");
        let expect = Matrix::from_ints(&[[1, -2, -3], [-4, 5, 6], [-7, 8, 9]]);
        assert_eq!(conjugate_by_signature(&g, &c).unwrap(), expect);
        assert_eq!(apply_phi(&g, &c).unwrap(), expect);
    }

    #[test]
    fn mask_roundtrip() {
        for n in 1..=6 {
            let all: Vec<_> = SignVector::all(n).collect();
            assert_eq!(all.len(), 1 << (n - 1));
            for (m, c) in all.iter().enumerate() {
                assert_eq!(c.to_mask(), m as u64);
                assert_eq!(c.sign(0), 1);
            }
        }
        assert_eq!(sv("1,1,-1").to_mask(), 0b10);
    }
}

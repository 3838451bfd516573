//! The group of sign maps under composition.
//!
//! Composing the maps of `c` and `d` gives the map of their coordinate-wise
//! product, so an element is stored as its sign vector and two elements are
//! equal iff their vectors are. The group is elementary abelian of order
//! `2^(n-1)`; [`GroupElement::to_bits`] is the isomorphism onto `Z_2^(n-1)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::signs::{apply_phi, SignVector};

/// Largest `n` for which [`cayley_table`] will build a table.
pub const CAYLEY_CAP: usize = 6;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(SignVector);

impl GroupElement {
    pub fn new(c: SignVector) -> Self {
        GroupElement(c)
    }

    pub fn sign_vector(&self) -> &SignVector {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.to_mask() == 0
    }

    /// Bit `k` (0-based) is set iff coordinate `k + 2` is `-1`.
    pub fn to_bits(&self) -> u64 {
        self.0.to_mask()
    }

    /// The `n-1` bits as a string, coordinate 2 first: `(1,1,-1)` → `"01"`.
    pub fn bit_string(&self) -> String {
        self.0.signs()[1..].iter().map(|&s| if s == -1 { '1' } else { '0' }).collect()
    }

    pub fn apply(&self, a: &Matrix) -> Result<Matrix> {
        apply_phi(a, &self.0)
    }
}

impl From<SignVector> for GroupElement {
    fn from(c: SignVector) -> Self {
        GroupElement(c)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement{}", self.0)
    }
}

pub fn compose(c: &GroupElement, d: &GroupElement) -> Result<GroupElement> {
    Ok(GroupElement(c.0.product(&d.0)?))
}

pub fn identity_element(n: usize) -> GroupElement {
    GroupElement(SignVector::ones(n))
}

/// Every element of the group for size `n`, in bit-mask order.
pub fn elements(n: usize) -> impl Iterator<Item = GroupElement> {
    SignVector::all(n).map(GroupElement)
}

/// A Cayley table: `cells[r][c] = compose(order[r], order[c])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    pub order: Vec<GroupElement>,
    pub cells: Vec<Vec<GroupElement>>,
}

impl CayleyTable {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Position of `g` in the header order.
    pub fn position(&self, g: &GroupElement) -> Option<usize> {
        self.order.iter().position(|h| h == g)
    }
}

/// Cayley table of the group for size `n`.
///
/// Rows and columns list the non-identity elements by ascending bit string,
/// then the identity. For `n = 3` this is `(1,1,-1), (1,-1,1), (1,-1,-1), id`.
pub fn cayley_table(n: usize) -> Result<CayleyTable> {
    if n == 0 {
        return Err(Error::Empty);
    }
    if n > CAYLEY_CAP {
        return Err(Error::SizeCapExceeded { what: "cayley table", n, cap: CAYLEY_CAP });
    }
    let mut order: Vec<GroupElement> = elements(n).filter(|g| !g.is_identity()).collect();
    order.sort_by_key(GroupElement::bit_string);
    order.push(identity_element(n));
    let cells = order
        .iter()
        .map(|g| order.iter().map(|h| compose(g, h)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(CayleyTable { order, cells })
}

//! Brute-force oracles and random generators shared by the integration
//! tests. Nothing here calls the determinant/permanent/polynomial code it is
//! used to check.

#![allow(dead_code)]

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use signconj::decomposition::{antisym_part, sym_part};
use signconj::scalar::{self, Scalar};
use signconj::{Matrix, Polynomial, SignVector};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Entries `p/q` with `p ∈ [−9, 9]`, `q ∈ [1, 9]`.
pub fn random_rational(rng: &mut impl Rng, n: usize) -> Matrix {
    Matrix::from_fn(n, n, |_, _| scalar::ratio(rng.random_range(-9..=9), rng.random_range(1..=9)))
}

pub fn random_integer(rng: &mut impl Rng, n: usize, bound: i64) -> Matrix {
    Matrix::from_fn(n, n, |_, _| scalar::int(rng.random_range(-bound..=bound)))
}

/// Integer matrix where each off-diagonal entry is nonzero with probability
/// `density`; the diagonal is random.
pub fn random_sparse(rng: &mut impl Rng, n: usize, density: f64) -> Matrix {
    Matrix::from_fn(n, n, |i, j| {
        if i == j || rng.random_bool(density) {
            scalar::int(rng.random_range(1..=9) * if rng.random_bool(0.5) { 1 } else { -1 })
        } else {
            Scalar::zero()
        }
    })
}

pub fn random_signs(rng: &mut impl Rng, n: usize) -> SignVector {
    let mask = if n == 1 { 0 } else { rng.random_range(0..1u64 << (n - 1)) };
    SignVector::from_mask(n, mask)
}

pub fn random_sym(rng: &mut impl Rng, n: usize, c: &SignVector) -> Matrix {
    sym_part(&random_rational(rng, n), c).unwrap()
}

pub fn random_antisym(rng: &mut impl Rng, n: usize, c: &SignVector) -> Matrix {
    antisym_part(&random_rational(rng, n), c).unwrap()
}

fn minor_without(a: &Matrix, row: usize, col: usize) -> Matrix {
    let rows: Vec<usize> = (0..a.rows()).filter(|&r| r != row).collect();
    let cols: Vec<usize> = (0..a.cols()).filter(|&c| c != col).collect();
    a.select(&rows, &cols)
}

/// Laplace expansion along the first row.
pub fn cofactor_det(a: &Matrix) -> Scalar {
    let n = a.rows();
    if n == 0 {
        return Scalar::one();
    }
    (0..n)
        .map(|j| {
            let term = a.get(0, j) * cofactor_det(&minor_without(a, 0, j));
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// Sum over all `n!` permutations (Heap's algorithm).
pub fn naive_permanent(a: &Matrix) -> Scalar {
    let n = a.rows();
    let mut perm: Vec<usize> = (0..n).collect();
    let term = |p: &[usize]| -> Scalar { (0..n).map(|i| a.get(i, p[i]).clone()).product() };
    let mut total = term(&perm);
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            total += term(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    total
}

/// Lagrange interpolation through `(x_k, y_k)`.
pub fn interpolate(points: &[(Scalar, Scalar)]) -> Polynomial {
    let mut coeffs = vec![Scalar::zero(); points.len()];
    for (k, (xk, yk)) in points.iter().enumerate() {
        // basis polynomial Π_{m≠k} (λ − x_m)/(x_k − x_m), built up in ascending powers
        let mut basis = vec![Scalar::one()];
        let mut denom = Scalar::one();
        for (m, (xm, _)) in points.iter().enumerate() {
            if m == k {
                continue;
            }
            let mut next = vec![Scalar::zero(); basis.len() + 1];
            for (p, b) in basis.iter().enumerate() {
                next[p + 1] += b;
                next[p] -= b * xm;
            }
            basis = next;
            denom *= xk - xm;
        }
        for (p, b) in basis.iter().enumerate() {
            coeffs[p] += b * yk / &denom;
        }
    }
    Polynomial::new(coeffs)
}

/// `perm(A − λ₀I)` at `λ₀ = 0, 1, …, n` by the naive oracle, interpolated.
pub fn perm_poly_by_interpolation(a: &Matrix) -> Polynomial {
    let n = a.rows();
    let points: Vec<(Scalar, Scalar)> = (0..=n as i64)
        .map(|x| {
            let x = scalar::int(x);
            let shifted = a.shift_diagonal(&x).unwrap();
            (x, naive_permanent(&shifted))
        })
        .collect();
    interpolate(&points)
}

/// `|A − λ₀I|` at `λ₀ = 0..=n` by cofactor expansion, interpolated.
pub fn char_poly_by_interpolation(a: &Matrix) -> Polynomial {
    let n = a.rows();
    let points: Vec<(Scalar, Scalar)> = (0..=n as i64)
        .map(|x| {
            let x = scalar::int(x);
            (x.clone(), cofactor_det(&a.shift_diagonal(&x).unwrap()))
        })
        .collect();
    interpolate(&points)
}

use num_traits::Zero;
use proptest::prelude::*;
use signconj::decomposition::{
    antisym_part, classify, decompose, decompose_by_projection, minor2_additivity, permanent2_additivity,
    subspace_dims, sym_part, SymmetryClass,
};
use signconj::group::{compose, elements, GroupElement};
use signconj::invariants::{char_poly, determinant, perm_poly, permanent, rank, trace};
use signconj::scalar::{self, Scalar};
use signconj::{apply_phi, conjugate_by_signature, matrix_product, signature_matrix, Matrix, SignVector};

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=9).prop_map(|(p, q)| scalar::ratio(p, q))
}

fn arb_matrix(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(arb_scalar(), n * n).prop_map(move |e| Matrix::new(n, n, e).unwrap())
}

fn arb_signs(n: usize) -> impl Strategy<Value = SignVector> {
    let top = if n <= 1 { 1u64 } else { 1u64 << (n - 1) };
    (0..top).prop_map(move |m| SignVector::from_mask(n, m))
}

/// A square matrix, a second one of the same size and a sign vector.
fn arb_case(max: usize) -> impl Strategy<Value = (Matrix, Matrix, SignVector)> {
    (1..=max).prop_flat_map(|n| (arb_matrix(n), arb_matrix(n), arb_signs(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn phi_is_signature_conjugation((a, _b, c) in arb_case(6)) {
        prop_assert_eq!(apply_phi(&a, &c).unwrap(), conjugate_by_signature(&a, &c).unwrap());
        let p = signature_matrix(&c);
        prop_assert_eq!(matrix_product(&p, &p).unwrap(), Matrix::identity(c.len()));
    }

    #[test]
    fn phi_is_an_involutive_ring_map((a, b, c) in arb_case(5), k in arb_scalar()) {
        let phi = |m: &Matrix| apply_phi(m, &c).unwrap();
        prop_assert_eq!(phi(&phi(&a)), a.clone());
        prop_assert_eq!(phi(&a).diagonal(), a.diagonal());
        prop_assert_eq!(phi(&a.add(&b.scale(&k)).unwrap()), phi(&a).add(&phi(&b).scale(&k)).unwrap());
        prop_assert_eq!(phi(&matrix_product(&a, &b).unwrap()), matrix_product(&phi(&a), &phi(&b)).unwrap());
        prop_assert_eq!(phi(&a.transpose()), phi(&a).transpose());
    }

    #[test]
    fn invariants_survive_phi((a, _b, c) in arb_case(6)) {
        let b = apply_phi(&a, &c).unwrap();
        prop_assert_eq!(trace(&a).unwrap(), trace(&b).unwrap());
        prop_assert_eq!(determinant(&a).unwrap(), determinant(&b).unwrap());
        prop_assert_eq!(permanent(&a).unwrap(), permanent(&b).unwrap());
        prop_assert_eq!(rank(&a), rank(&b));
        prop_assert_eq!(char_poly(&a).unwrap(), char_poly(&b).unwrap());
        prop_assert_eq!(perm_poly(&a).unwrap(), perm_poly(&b).unwrap());
    }

    #[test]
    fn polynomial_ends((a, _b, _c) in arb_case(6)) {
        let n = a.rows();
        let p = char_poly(&a).unwrap();
        let q = perm_poly(&a).unwrap();
        prop_assert_eq!(p.coeff(0), determinant(&a).unwrap());
        prop_assert_eq!(q.coeff(0), permanent(&a).unwrap());
        prop_assert_eq!(p.coeff(n), scalar::sign_power(n));
        prop_assert_eq!(q.coeff(n), scalar::sign_power(n));
        let tr = trace(&a).unwrap() * scalar::sign_power(n - 1);
        prop_assert_eq!(p.coeff(n - 1), tr.clone());
        prop_assert_eq!(q.coeff(n - 1), tr);
    }

    #[test]
    fn decomposition_is_a_direct_sum((a, _b, c) in arb_case(6)) {
        let d = decompose(&a, &c).unwrap();
        prop_assert_eq!(d.sym_part.add(&d.antisym_part).unwrap(), a.clone());
        prop_assert_eq!(apply_phi(&d.sym_part, &c).unwrap(), d.sym_part.clone());
        prop_assert_eq!(apply_phi(&d.antisym_part, &c).unwrap(), d.antisym_part.neg());
        prop_assert_eq!(decompose_by_projection(&a, &c).unwrap(), d.clone());
        // projections are idempotent and kill each other
        prop_assert_eq!(sym_part(&d.sym_part, &c).unwrap(), d.sym_part.clone());
        prop_assert_eq!(antisym_part(&d.antisym_part, &c).unwrap(), d.antisym_part.clone());
        prop_assert!(sym_part(&d.antisym_part, &c).unwrap().is_zero());
        prop_assert!(antisym_part(&d.sym_part, &c).unwrap().is_zero());
        prop_assert!(classify(&d.sym_part, &c).unwrap() == SymmetryClass::SymUnderPhi);
        if !d.antisym_part.is_zero() {
            prop_assert!(classify(&d.antisym_part, &c).unwrap() == SymmetryClass::AntiSymUnderPhi);
        }
    }

    #[test]
    fn sym_part_support_matches_dimensions((a, _b, c) in arb_case(7)) {
        let s = sym_part(&a, &c).unwrap();
        let n = a.rows();
        let free = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| c.sign(i) == c.sign(j)).count();
        let (ds, da) = subspace_dims(n, c.plus_count()).unwrap();
        prop_assert_eq!(ds, free);
        prop_assert_eq!(ds + da, n * n);
        for i in 0..n {
            for j in 0..n {
                if c.sign(i) != c.sign(j) {
                    prop_assert!(s.get(i, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn order_two_additivity((a, _b, c) in arb_case(6)) {
        prop_assume!(a.rows() >= 2);
        prop_assert!(minor2_additivity(&a, &c).unwrap().holds());
        prop_assert!(permanent2_additivity(&a, &c).unwrap().holds());
    }

    #[test]
    fn printed_matrices_round_trip((a, _b, _c) in arb_case(5)) {
        let v = serde_json::json!(a.to_strings());
        prop_assert_eq!(signconj::cli::input::parse_value(&v).unwrap(), a);
    }
}

#[test]
fn group_is_an_elementary_abelian_two_group() {
    for n in 1..=5 {
        let all: Vec<GroupElement> = elements(n).collect();
        assert_eq!(all.len(), 1 << (n - 1));
        for g in &all {
            assert!(compose(g, g).unwrap().is_identity());
            for h in &all {
                let gh = compose(g, h).unwrap();
                assert_eq!(gh, compose(h, g).unwrap());
                assert_eq!(gh.to_bits(), g.to_bits() ^ h.to_bits());
            }
        }
    }
}

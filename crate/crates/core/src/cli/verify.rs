//! Every applicable identity checked against one input matrix.

use std::collections::BTreeSet;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::report::{matrix_json, poly_json, scalar_json, Report};
use crate::blockform::{
    antisym_block_form, factor_invariants_antisym_with, factor_invariants_sym_with, sym_block_form,
};
use crate::config::Config;
use crate::decomposition::{
    antisym_part, classic_split, classify, decompose, decompose_by_projection, subspace_dims, sym_part, SymmetryClass,
};
use crate::error::Result;
use crate::group::{compose, GroupElement};
use crate::invariants::{
    char_poly, determinant, perm_poly_with, permanent_with, principal_minor_sums_with, principal_permanent_sums_with,
    rank, trace,
};
use crate::matrix::Matrix;
use crate::orbit::{orbit_size_with, stabilizer_brute_force, stabilizer_elements_with};
use crate::polynomial::Polynomial;
use crate::scalar::{self, Scalar};
use crate::signs::{apply_phi, conjugate_by_signature, signature_matrix, SignVector};

/// Largest `n` for which every admissible sign vector is checked by default.
pub const EXHAUSTIVE_CAP: usize = 8;

fn scalars_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_json).collect())
}

fn usize_json(v: &usize) -> Value {
    json!(v)
}

/// The sign vectors to test: all of them when `samples` is `None` and
/// `n ≤ EXHAUSTIVE_CAP`, otherwise `samples` (default 32) distinct vectors
/// drawn with a seeded generator.
pub fn choose_signs(n: usize, samples: Option<usize>, seed: u64) -> Vec<SignVector> {
    let total = if n > 63 { u64::MAX } else { 1u64 << (n - 1) };
    let exhaustive = samples.is_none() && n <= EXHAUSTIVE_CAP;
    let want = samples.unwrap_or(32) as u64;
    if exhaustive || want >= total {
        return SignVector::all(n).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked = BTreeSet::new();
    while (picked.len() as u64) < want {
        let mut signs = vec![1i8];
        signs.extend((1..n).map(|_| if rng.random::<bool>() { -1i8 } else { 1 }));
        picked.insert(SignVector::new(signs).expect("first sign is +1"));
    }
    picked.into_iter().collect()
}

struct Baseline {
    trace: Scalar,
    det: Scalar,
    perm: Option<Scalar>,
    rank: usize,
    minor_sums: Option<Vec<Scalar>>,
    perm_sums: Option<Vec<Scalar>>,
    char_poly: Polynomial,
    perm_poly: Option<Polynomial>,
}

fn baseline(a: &Matrix, cfg: &Config) -> Result<Baseline> {
    let n = a.rows();
    Ok(Baseline {
        trace: trace(a)?,
        det: determinant(a)?,
        perm: (n <= cfg.permanent_cap).then(|| permanent_with(a, cfg)).transpose()?,
        rank: rank(a),
        minor_sums: (n <= cfg.subset_cap).then(|| principal_minor_sums_with(a, cfg)).transpose()?,
        perm_sums: (n <= cfg.subset_cap.min(cfg.perm_poly_cap))
            .then(|| principal_permanent_sums_with(a, cfg))
            .transpose()?,
        char_poly: char_poly(a)?,
        perm_poly: (n <= cfg.perm_poly_cap).then(|| perm_poly_with(a, cfg)).transpose()?,
    })
}

/// Runs the suite, appending checks and results to `report`.
pub fn run(a: &Matrix, signs: &[SignVector], cfg: &Config, report: &mut Report) -> Result<()> {
    let n = a.square_dim()?;
    let base = baseline(a, cfg)?;
    let mut skipped: Vec<String> = Vec::new();
    if base.perm.is_none() {
        skipped.push(format!("permanent: n = {n} exceeds --perm-cap {}", cfg.permanent_cap));
    }
    if base.perm_poly.is_none() {
        skipped.push(format!("perm_poly: n = {n} exceeds --permpoly-cap {}", cfg.perm_poly_cap));
    }

    report.result("n", json!(n));
    report.result("trace", scalar_json(&base.trace));
    report.result("determinant", scalar_json(&base.det));
    report.result("rank", json!(base.rank));
    report.result("char_poly", poly_json(&base.char_poly));
    if let Some(p) = &base.perm {
        report.result("permanent", scalar_json(p));
    }
    if let Some(q) = &base.perm_poly {
        report.result("perm_poly", poly_json(q));
    }
    report.result("signs_checked", json!(signs.len()));

    global_checks(a, n, &base, cfg, report)?;
    let mut plus_sign_mismatch = Vec::new();
    for c in signs {
        per_sign_checks(a, c, &base, cfg, report, &mut plus_sign_mismatch)?;
    }
    report.result(
        "antisym_det_sign",
        json!({
            "implemented": "(-1)^(n/2)",
            "plus_sign_variant_mismatches": plus_sign_mismatch,
        }),
    );
    if !skipped.is_empty() {
        report.result("skipped", json!(skipped));
    }
    Ok(())
}

fn global_checks(a: &Matrix, n: usize, base: &Baseline, cfg: &Config, report: &mut Report) -> Result<()> {
    if let Some(sums) = &base.minor_sums {
        let expect: Vec<Scalar> = (0..=n).map(|j| &sums[n - j] * scalar::sign_power(j)).collect();
        let got: Vec<Scalar> = (0..=n).map(|j| base.char_poly.coeff(j)).collect();
        report.check("char_poly.principal_minor_law", None, &got, &expect, |v| scalars_json(v));
    }
    report.check("char_poly.at_zero", None, &base.char_poly.eval(&Scalar::zero()), &base.det, scalar_json);
    if let (Some(q), Some(p)) = (&base.perm_poly, &base.perm) {
        report.check("perm_poly.at_zero", None, &q.eval(&Scalar::zero()), p, scalar_json);
    }

    if n >= 2 && n <= cfg.subset_cap {
        let split = classic_split(a)?;
        report.check("transpose_split.reconstruct", None, &split.sym_part.add(&split.antisym_part)?, a, matrix_json);
        report.check("transpose_split.symmetric", None, &split.sym_part.transpose(), &split.sym_part, matrix_json);
        report.check(
            "transpose_split.antisymmetric",
            None,
            &split.antisym_part.transpose(),
            &split.antisym_part.neg(),
            matrix_json,
        );
        for (name, sum) in [
            ("additivity.transpose.minor2", principal_minor_sums_with as fn(&Matrix, &Config) -> Result<Vec<Scalar>>),
            ("additivity.transpose.permanent2", principal_permanent_sums_with),
        ] {
            let lhs = sum(a, cfg)?[2].clone();
            let rhs = &sum(&split.sym_part, cfg)?[2] + &sum(&split.antisym_part, cfg)?[2];
            report.check(name, None, &lhs, &rhs, scalar_json);
        }
    }

    if n <= cfg.orbit_cap {
        let ones = Matrix::from_fn(n, n, |_, _| scalar::int(1));
        let images: BTreeSet<Matrix> = SignVector::all(n).map(|c| apply_phi(&ones, &c)).collect::<Result<_>>()?;
        report.check("group.order", None, &images.len(), &(1usize << (n - 1)), usize_json);
    }

    let orbit = orbit_size_with(a, cfg)?;
    report.result("components", json!(orbit.labeling.labels));
    report.result("t", json!(orbit.t));
    report.result("orbit_size", json!(orbit.orbit_size.to_string()));
    report.result("stabilizer_size", json!(orbit.stabilizer_size.to_string()));
    let product = &orbit.orbit_size * &orbit.stabilizer_size;
    let expect = num_bigint::BigUint::from(1u8) << (n - 1);
    report.check("orbit.orbit_times_stabilizer", None, &product, &expect, |v| json!(v.to_string()));
    if let Some(e) = &orbit.enumerated {
        report.check("orbit.enumerated_count", None, &num_bigint::BigUint::from(e.len()), &orbit.orbit_size, |v| {
            json!(v.to_string())
        });
        let constructive = stabilizer_elements_with(a, cfg)?;
        let brute = stabilizer_brute_force(a, cfg)?;
        let render = |v: &Vec<SignVector>| json!(v.iter().map(ToString::to_string).collect::<Vec<_>>());
        report.check("orbit.stabilizer_constructive", None, &constructive, &brute, render);
        report.check(
            "orbit.stabilizer_count",
            None,
            &num_bigint::BigUint::from(brute.len()),
            &orbit.stabilizer_size,
            |v| json!(v.to_string()),
        );
    }
    Ok(())
}

fn per_sign_checks(
    a: &Matrix,
    c: &SignVector,
    base: &Baseline,
    cfg: &Config,
    report: &mut Report,
    plus_sign_mismatch: &mut Vec<String>,
) -> Result<()> {
    let n = a.rows();
    let tag = || Some(c.to_string());
    let b = apply_phi(a, c)?;

    // invariance
    report.check("invariance.trace", tag(), &trace(&b)?, &base.trace, scalar_json);
    report.check("invariance.determinant", tag(), &determinant(&b)?, &base.det, scalar_json);
    if let Some(p) = &base.perm {
        report.check("invariance.permanent", tag(), &permanent_with(&b, cfg)?, p, scalar_json);
    }
    report.check("invariance.rank", tag(), &rank(&b), &base.rank, usize_json);
    if let Some(s) = &base.minor_sums {
        report.check("invariance.principal_minor_sums", tag(), &principal_minor_sums_with(&b, cfg)?, s, |v| {
            scalars_json(v)
        });
    }
    if let Some(s) = &base.perm_sums {
        report.check("invariance.principal_permanent_sums", tag(), &principal_permanent_sums_with(&b, cfg)?, s, |v| {
            scalars_json(v)
        });
    }
    report.check("invariance.char_poly", tag(), &char_poly(&b)?, &base.char_poly, poly_json);
    if let Some(q) = &base.perm_poly {
        report.check("invariance.perm_poly", tag(), &perm_poly_with(&b, cfg)?, q, poly_json);
    }

    // conjugation by the signature matrix
    report.check("conjugation.matrix_form", tag(), &conjugate_by_signature(a, c)?, &b, matrix_json);
    let p = signature_matrix(c);
    report.check("conjugation.signature_squared", tag(), &p.product(&p)?, &Matrix::identity(n), matrix_json);
    report.check("conjugation.involution", tag(), &apply_phi(&b, c)?, a, matrix_json);
    report.check("conjugation.diagonal_fixed", tag(), &b.diagonal(), &a.diagonal(), |v| scalars_json(v));

    // composition with the next element in mask order
    let d = SignVector::from_mask(n, (c.to_mask() + 1) % (1u64 << (n - 1)));
    let e = compose(&GroupElement::new(c.clone()), &GroupElement::new(d.clone()))?;
    report.check("group.compose", tag(), &apply_phi(&b, &d)?, &e.apply(a)?, matrix_json);
    let at = a.transpose();
    report.check(
        "ring.multiplicative",
        tag(),
        &apply_phi(&a.product(&at)?, c)?,
        &b.product(&apply_phi(&at, c)?)?,
        matrix_json,
    );

    // decomposition
    let parts = decompose(a, c)?;
    let proj = decompose_by_projection(a, c)?;
    report.check("decomposition.reconstruct", tag(), &parts.sym_part.add(&parts.antisym_part)?, a, matrix_json);
    report.check("decomposition.sym_fixed", tag(), &apply_phi(&parts.sym_part, c)?, &parts.sym_part, matrix_json);
    report.check(
        "decomposition.antisym_negated",
        tag(),
        &apply_phi(&parts.antisym_part, c)?,
        &parts.antisym_part.neg(),
        matrix_json,
    );
    report.check("decomposition.projection_sym", tag(), &proj.sym_part, &parts.sym_part, matrix_json);
    report.check("decomposition.projection_antisym", tag(), &proj.antisym_part, &parts.antisym_part, matrix_json);
    let ones = Matrix::from_fn(n, n, |_, _| scalar::int(1));
    let count = |m: &Matrix| m.entries().iter().filter(|v| !v.is_zero()).count();
    let masks = (count(&sym_part(&ones, c)?), count(&antisym_part(&ones, c)?));
    let dims = subspace_dims(n, c.plus_count())?;
    report.check("decomposition.dimensions", tag(), &masks, &dims, |v| json!([v.0, v.1]));
    let ss = parts.sym_part.product(&parts.sym_part)?;
    report.check("decomposition.sym_product_closed", tag(), &classify(&ss, c)?, &SymmetryClass::SymUnderPhi, |v| {
        json!(format!("{v:?}"))
    });

    // order-two additivity
    if n >= 2 && n <= cfg.subset_cap {
        for (name, sum) in [
            ("additivity.minor2", principal_minor_sums_with as fn(&Matrix, &Config) -> Result<Vec<Scalar>>),
            ("additivity.permanent2", principal_permanent_sums_with),
        ] {
            let lhs = sum(a, cfg)?[2].clone();
            let rhs = &sum(&parts.sym_part, cfg)?[2] + &sum(&parts.antisym_part, cfg)?[2];
            report.check(name, tag(), &lhs, &rhs, scalar_json);
        }
    }

    // block forms of the two parts
    let sym_form = sym_block_form(&parts.sym_part, c)?;
    report.check("blockform.sym.conjugation", tag(), &sym_form.conjugated, &sym_form.assembled, matrix_json);
    let anti_form = antisym_block_form(&parts.antisym_part, c)?;
    report.check("blockform.antisym.conjugation", tag(), &anti_form.conjugated, &anti_form.assembled, matrix_json);
    if n <= cfg.permanent_cap {
        let f = factor_invariants_sym_with(&parts.sym_part, c, cfg)?;
        report.check("blockform.sym.char_poly", tag(), &f.char_poly.lhs, &f.char_poly.rhs, poly_json);
        report.check("blockform.sym.determinant", tag(), &f.determinant.lhs, &f.determinant.rhs, scalar_json);
        report.check("blockform.sym.permanent", tag(), &f.permanent.lhs, &f.permanent.rhs, scalar_json);
        let g = factor_invariants_antisym_with(&parts.antisym_part, c, cfg)?;
        report.check("blockform.antisym.determinant", tag(), &g.determinant.lhs, &g.determinant.rhs, scalar_json);
        report.check("blockform.antisym.permanent", tag(), &g.permanent.lhs, &g.permanent.rhs, scalar_json);
        if g.plus_sign_matches() == Some(false) {
            plus_sign_mismatch.push(c.to_string());
        }
    }
    Ok(())
}

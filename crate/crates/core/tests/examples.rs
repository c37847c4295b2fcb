mod common;

use common::*;
use skewlab_core::inequality::{
    check_corollary1, check_corollary2, check_theorem1, check_theorem2,
};
use skewlab_core::quantities::{self, Path};
use skewlab_core::{
    center, fixed_operators, validate_density, werner, CMatrix, DensityOperator, Error, SkewParams,
    Tolerance,
};

fn diag(entries: &[f64]) -> DensityOperator {
    validate_density(&CMatrix::from_real_diagonal(entries)).unwrap()
}

fn p(a: f64, b: f64) -> SkewParams {
    SkewParams::new(a, b).unwrap()
}

fn sx() -> skewlab_core::HsOperator {
    op(sigma_x())
}

fn ident(d: usize) -> skewlab_core::HsOperator {
    op(CMatrix::identity(d))
}

const EPS: f64 = 1e-12;

#[test]
fn covariance_of_identity_vanishes() {
    let rho = KnownState::random(3, 1, 0.1).density();
    let v = quantities::covariance(&rho, &ident(3), &ident(3), p(0.3, 0.2)).unwrap();
    assert!(v.value.norm() < EPS);
}

#[test]
fn variance_of_sigma_x() {
    let rho = diag(&[0.75, 0.25]);
    let v = quantities::variance(&rho, &sx(), p(0.5, 0.5)).unwrap();
    assert!((v.real() - 1.0).abs() < EPS);
}

#[test]
fn variance_at_maximally_mixed_is_normalized_hs_norm() {
    let d = 4;
    let mut h = random_hermitian(d, 5);
    h = h.add_identity(-h.trace().scale(1.0 / d as f64));
    let want = (&h * &h).trace().re / d as f64;
    let rho = diag(&[0.25; 4]);
    let v = quantities::variance(&rho, &op(h), p(0.3, 0.6)).unwrap();
    assert!((v.real() - want).abs() < EPS);
}

#[test]
fn correlation_vanishes_at_maximally_mixed() {
    let rho = diag(&[1.0 / 3.0; 3]);
    let a = op(random_matrix(3, 1));
    let b = op(random_matrix(3, 2));
    let v = quantities::correlation(&rho, &a, &b, p(0.4, 0.1)).unwrap();
    assert!(v.value.norm() < EPS);
}

#[test]
fn correlation_and_i_reduce_to_wigner_yanase() {
    let rho = diag(&[0.75, 0.25]);
    let want = (2.0 - 3f64.sqrt()) / 2.0;
    let corr = quantities::correlation(&rho, &sx(), &sx(), p(0.5, 0.5)).unwrap();
    assert!((corr.value.re - want).abs() < EPS && corr.value.im.abs() < EPS);
    let i = quantities::mgwyd_i(&rho, &sx(), p(0.5, 0.5)).unwrap();
    assert!((i.real() - want).abs() < EPS);
}

#[test]
fn c_self_examples() {
    let rho = KnownState::random(3, 4, 0.1).density();
    let v = quantities::c_self(&rho, &ident(3), p(0.2, 0.5)).unwrap();
    assert!((v.real() - 1.0).abs() < EPS);
    let pure = diag(&[1.0, 0.0]);
    let v = quantities::c_self(&pure, &sx(), p(0.25, 0.25)).unwrap();
    assert!(v.real().abs() < EPS);
}

#[test]
fn pure_state_i_j_u() {
    let pure = diag(&[1.0, 0.0]);
    let q = p(0.25, 0.25);
    for v in [
        quantities::mgwyd_i(&pure, &sx(), q).unwrap(),
        quantities::companion_j(&pure, &sx(), q).unwrap(),
        quantities::u_quantity(&pure, &sx(), q).unwrap(),
    ] {
        assert!((v.real() - 0.5).abs() < EPS, "{v:?}");
    }
}

#[test]
fn maximally_mixed_qubit_with_sigma_x() {
    let rho = diag(&[0.5, 0.5]);
    for q in [p(0.25, 0.25), p(0.1, 0.7), p(0.5, 0.5), p(0.0, 0.0)] {
        let i = quantities::mgwyd_i(&rho, &sx(), q).unwrap().real();
        let j = quantities::companion_j(&rho, &sx(), q).unwrap().real();
        let u = quantities::u_quantity(&rho, &sx(), q).unwrap().real();
        let k = quantities::mwgwyd_k(&rho, &sx(), q).unwrap().real();
        let w = quantities::w_quantity(&rho, &sx(), q).unwrap().real();
        assert!(i.abs() < EPS && u.abs() < EPS && k.abs() < EPS && w.abs() < EPS);
        assert!((j - 2.0).abs() < EPS);
    }
    let l = quantities::companion_l(&rho, &sx(), p(0.5, 0.5)).unwrap();
    assert!((l.real() - 2.0).abs() < EPS);
}

#[test]
fn k_dominates_i_on_qubit_example() {
    let rho = KnownState::new(vec![0.75, 0.25], CMatrix::identity(2));
    let q = p(0.5, 0.25);
    let dens = rho.density();
    let k = quantities::mwgwyd_k(&dens, &sx(), q).unwrap().real();
    let i = quantities::mgwyd_i(&dens, &sx(), q).unwrap().real();
    assert!((k - rho.k_def(&sigma_x(), 0.5, 0.25)).abs() < EPS);
    assert!((i - rho.i_def(&sigma_x(), 0.5, 0.25)).abs() < EPS);
    assert!(k > i);
}

#[test]
fn equal_exponents_collapse_weighted_quantities() {
    let ks = KnownState::random(3, 11, 0.05);
    let rho = ks.density();
    let a = op(random_matrix(3, 12));
    let q = p(0.3, 0.3);
    let get = |f: fn(
        &DensityOperator,
        &skewlab_core::HsOperator,
        SkewParams,
    ) -> skewlab_core::Result<skewlab_core::QuantityResult>| {
        f(&rho, &a, q).unwrap().real()
    };
    assert!(close(
        get(quantities::mwgwyd_k),
        get(quantities::mgwyd_i),
        1e-10,
        1e-12
    ));
    assert!(close(
        get(quantities::companion_l),
        get(quantities::companion_j),
        1e-10,
        1e-12
    ));
    assert!(close(
        get(quantities::w_quantity),
        get(quantities::u_quantity),
        1e-10,
        1e-12
    ));
}

#[test]
fn missing_second_operator_is_an_error() {
    let rho = diag(&[0.5, 0.5]);
    let ctx = skewlab_core::SkewContext::new(&rho, p(0.2, 0.2)).unwrap();
    let err = ctx
        .evaluate(
            skewlab_core::Quantity::Correlation,
            &sx(),
            None,
            Path::TraceFormula,
        )
        .unwrap_err();
    assert!(matches!(err, Error::MissingOperator(_)));
}

#[test]
fn dimension_mismatch_is_reported() {
    let rho = diag(&[0.5, 0.5]);
    let err = quantities::mgwyd_i(&rho, &ident(3), p(0.2, 0.2)).unwrap_err();
    assert_eq!(
        err,
        Error::DimensionMismatch {
            expected: 2,
            found: 3
        }
    );
}

#[test]
fn centering_the_fixed_operator_on_werner_states() {
    let (a, _) = fixed_operators();
    for &pw in &[0.0, 0.3, 0.75, 0.9, 1.0] {
        let rho = werner(pw).unwrap();
        let got = center(&rho, &a).unwrap();
        let shift = c(0.5, (4.0 * pw - 3.0) / 6.0);
        let want = a.matrix().add_identity(-shift);
        assert!(got.matrix().max_abs_diff(&want) < 1e-15, "p = {pw}");
    }
}

#[test]
fn theorem_and_corollary_trios() {
    let (a, b) = fixed_operators();
    let tol = Tolerance::DEFAULT;
    let mixed = diag(&[0.25; 4]);
    let w = werner(0.75).unwrap();
    for rho in [&mixed, &w] {
        let t1 = check_theorem1(rho, &a, &b, p(0.55, 0.4), tol).unwrap();
        let t2 = check_theorem2(rho, &a, &b, p(0.75, 0.2), tol).unwrap();
        let c1 = check_corollary1(rho, &a, &b, p(0.55, 0.4), tol).unwrap();
        let c2 = check_corollary2(rho, &a, &b, p(0.75, 0.2), tol).unwrap();
        for r in [t1, t2, c1.bound, c2.bound] {
            assert!(r.lhs.abs() < 1e-10 && r.rhs.abs() < 1e-10, "{r:?}");
            assert!(r.holds);
        }
    }
    for seed in 0..50 {
        let rho = KnownState::random(4, seed, 0.01).density();
        let a = op(random_matrix(4, 1000 + seed));
        let b = op(random_matrix(4, 2000 + seed));
        let t1 = check_theorem1(&rho, &a, &b, p(0.55, 0.4), tol).unwrap();
        let c1 = check_corollary1(&rho, &a, &b, p(0.55, 0.4), tol).unwrap();
        let t2 = check_theorem2(&rho, &a, &b, p(0.75, 0.2), tol).unwrap();
        let c2 = check_corollary2(&rho, &a, &b, p(0.75, 0.2), tol).unwrap();
        assert!(t1.holds && t2.holds && c1.bound.holds && c2.bound.holds);
        assert!(c1.dominance.holds && c2.dominance.holds);
        assert!(c1.bound.lhs >= t1.lhs - 1e-10);
    }
}

#[test]
fn theorem_domains_are_enforced() {
    let (a, b) = fixed_operators();
    let rho = werner(0.3).unwrap();
    let err = check_theorem1(&rho, &a, &b, p(0.2, 0.6), Tolerance::DEFAULT).unwrap_err();
    assert!(matches!(err, Error::ParamsOutsideTheoremDomain { .. }));
    assert!(check_theorem2(&rho, &a, &b, p(0.1, 0.5), Tolerance::DEFAULT).is_err());
    assert!(check_theorem2(&rho, &a, &b, p(0.2, 0.6), Tolerance::DEFAULT).is_ok());
}

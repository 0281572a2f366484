//! End-to-end certification through the public API: the standard examples
//! certify with the expected structure, and bad inputs fail with the
//! expected errors.

mod common;

use common::{hamilton_extension, symbol_extension, trivial_extension};
use galoisazu_core::action::AlgebraAction;
use galoisazu_core::algebra::SubalgebraBasis;
use galoisazu_core::field::Field;
use galoisazu_core::galois::{Extension, GaloisError};
use num_rational::BigRational;

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn hamilton_certifies_over_the_rationals() {
    let extension = hamilton_extension();
    let cert = extension.certify().expect("certification succeeds");

    assert_eq!(cert.module_rank(), 4);
    assert_eq!(cert.group().order(), 4);
    assert_eq!(cert.gamma().rows(), 16);
    assert!(cert.is_strict());
    assert!(cert.is_centralizing());
    assert!(cert.is_central());
    assert!(cert.invariants_match_base());
    assert!(cert.trace_into_base());

    // The identity component of the Galois element is
    // (1⊗1 - i⊗i - j⊗j - k⊗k) / 4.
    let eta = cert.eta_coords(&cert.group().identity());
    let field = extension.algebra().field();
    let quarter = field.from_rational_coeffs(&[rational(1, 4)]).unwrap();
    let minus_quarter = field.from_rational_coeffs(&[rational(-1, 4)]).unwrap();
    for (index, coefficient) in eta.iter().enumerate() {
        let (i, j) = (index / 4, index % 4);
        let expected = if i != j {
            field.zero()
        } else if i == 0 {
            quarter.clone()
        } else {
            minus_quarter.clone()
        };
        assert_eq!(*coefficient, expected, "coefficient at pair ({i}, {j})");
    }
}

#[test]
fn symbol_algebra_certifies_with_full_flags() {
    let cert = symbol_extension()
        .certify()
        .expect("certification succeeds");
    assert_eq!(cert.module_rank(), 9);
    assert_eq!(cert.gamma().rows(), 81);
    assert!(cert.is_strict(), "7 does not divide 9");
    assert!(cert.is_central());
    assert!(cert.invariants_match_base());
}

#[test]
fn function_algebra_is_centralizing_but_not_central() {
    let cert = trivial_extension()
        .certify()
        .expect("certification succeeds");
    assert_eq!(cert.module_rank(), 6);
    assert!(cert.is_centralizing(), "scalars always centralize");
    assert!(
        !cert.is_central(),
        "the whole commutative algebra is its own centre, so the base is a proper subring of it"
    );
    assert!(cert.invariants_match_base());
    assert!(cert.trace_into_base());
}

#[test]
fn certifying_over_the_scalar_subalgebra_matches_the_ground_run() {
    let extension = hamilton_extension();
    let ground_cert = extension.certify().unwrap();

    let algebra = extension.algebra().clone();
    let field = algebra.field();
    let mut unit_span = vec![field.zero(); 4];
    unit_span[0] = field.one();
    let basis = SubalgebraBasis::new(&algebra, vec![unit_span]).expect("span of 1 is closed");
    let subalgebra_cert = Extension::over_subalgebra(extension.action().clone(), basis)
        .expect("scalar base is compatible")
        .certify()
        .expect("certification succeeds");

    assert_eq!(subalgebra_cert.module_rank(), ground_cert.module_rank());
    assert!(subalgebra_cert.is_central());
    for g in ground_cert.group().elements() {
        assert_eq!(
            subalgebra_cert.eta_coords(&g),
            ground_cert.eta_coords(&g),
            "the Galois element must not depend on how the scalars are presented"
        );
    }
}

#[test]
fn unfixed_base_is_rejected_at_construction() {
    let extension = hamilton_extension();
    let algebra = extension.algebra().clone();
    let field = algebra.field();
    let mut one = vec![field.zero(); 4];
    one[0] = field.one();
    let mut i_axis = vec![field.zero(); 4];
    i_axis[1] = field.one();
    let basis =
        SubalgebraBasis::new(&algebra, vec![one, i_axis]).expect("span of 1 and i is closed");

    let err = Extension::over_subalgebra(extension.action().clone(), basis)
        .expect_err("the sign action moves i, so the base is not fixed");
    assert!(matches!(err, GaloisError::BaseNotFixed { .. }));
}

#[test]
fn rank_mismatch_is_detected() {
    // Restrict the Klein four-group action to a single Z2: the algebra is a
    // free module of rank 4 over the rationals, but the group only has
    // order 2.
    let extension = hamilton_extension();
    let group = galoisazu_core::action::GroupSpec::parse("Z2").unwrap();
    let first_generator = extension.action().generator_matrices()[0].clone();
    let action = AlgebraAction::new(group, extension.algebra(), vec![first_generator])
        .expect("a single involution still acts");
    let err = Extension::over_ground(action)
        .certify()
        .expect_err("rank 4 cannot match order 2");
    assert!(
        matches!(
            err,
            GaloisError::RankMismatch {
                module_rank: 4,
                group_order: 2
            }
        ),
        "unexpected error: {err}"
    );
}

#[test]
fn non_invariant_scalars_fail_honestly() {
    // A cyclic rotation of function coordinates on a two-point space fixes
    // nothing but the diagonal; pairing it with the wrong group size must
    // not certify.
    let field = Field::prime(3).unwrap();
    let scalars = galoisazu_core::algebra::scalar_algebra(&field);
    let group = galoisazu_core::action::GroupSpec::parse("Z2").unwrap();
    let action = galoisazu_core::action::translation_action(&scalars, &group).unwrap();
    let wrong_group = galoisazu_core::action::GroupSpec::parse("Z2xZ2").unwrap();
    let matrices = vec![
        action.generator_matrices()[0].clone(),
        action.generator_matrices()[0].clone(),
    ];
    let doubled = AlgebraAction::new(wrong_group, action.algebra(), matrices)
        .expect("the involution generates both factors");
    let err = Extension::over_ground(doubled)
        .certify()
        .expect_err("four group elements cannot be separated on a rank-2 module");
    assert!(
        matches!(
            err,
            GaloisError::RankMismatch { .. } | GaloisError::GammaSingular { .. }
        ),
        "unexpected error: {err}"
    );
}

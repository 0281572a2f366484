//! The full pairing pipeline over the worked examples: dual bases, the
//! normalized functional, the Nakayama automorphism, and separability.

mod common;

use common::{hamilton_extension, symbol_extension, trivial_extension};
use galoisazu_core::algebra::SubalgebraBasis;
use galoisazu_core::frobenius::{
    frobenius_system, nakayama_report, separability_report, symmetry_report, FrobeniusError,
    InnerVerdict,
};
use galoisazu_core::galois::Extension;

#[test]
fn dual_bases_and_counit_verify_on_every_fixture() {
    for (name, extension) in [
        ("hamilton", hamilton_extension()),
        ("symbol", symbol_extension()),
        ("trivial", trivial_extension()),
    ] {
        let cert = extension.certify().expect("certification succeeds");
        let system = frobenius_system(&cert)
            .unwrap_or_else(|e| panic!("normalizing conditions must hold for {name}: {e}"));
        assert_eq!(system.dual_bases().len(), cert.module_rank(), "{name}");
        for (x, _) in system.dual_bases() {
            assert!(
                system.counit_in_base(x).is_some(),
                "the counit must take base values on {name}"
            );
        }
    }
}

#[test]
fn nakayama_automorphism_is_the_identity_on_the_fixtures() {
    for (name, extension) in [
        ("hamilton", hamilton_extension()),
        ("symbol", symbol_extension()),
        ("trivial", trivial_extension()),
    ] {
        let cert = extension.certify().unwrap();
        let report = nakayama_report(&cert).expect("ground base");
        assert!(report.is_automorphism, "{name}");
        assert!(report.is_identity, "{name}");
        assert!(report.matrix.is_identity(), "{name}");
    }
}

#[test]
fn trace_form_is_symmetric_and_nakayama_is_inner() {
    for (name, extension) in [
        ("hamilton", hamilton_extension()),
        ("symbol", symbol_extension()),
        ("trivial", trivial_extension()),
    ] {
        let cert = extension.certify().unwrap();
        let report = symmetry_report(&cert).expect("ground base");
        assert!(report.trace_symmetric, "{name}");
        assert!(
            matches!(report.nakayama_inner, InnerVerdict::Inner(_)),
            "the identity automorphism is inner for {name}"
        );
    }
}

#[test]
fn separability_distinguishes_azumaya_from_split_commutative() {
    let hamilton = hamilton_extension().certify().unwrap();
    let report = separability_report(&hamilton).unwrap();
    assert!(report.separable_over_base);
    assert_eq!(report.centre_dimension, 1);
    assert_eq!(report.azumaya_over_ground, Some(true));

    let trivial = trivial_extension().certify().unwrap();
    let report = separability_report(&trivial).unwrap();
    assert!(report.separable_over_base, "split algebras are separable");
    assert_eq!(report.centre_dimension, 6);
    assert_eq!(
        report.azumaya_over_ground,
        Some(false),
        "a six-dimensional centre is not the scalars"
    );
}

#[test]
fn nakayama_needs_a_ground_base() {
    let extension = hamilton_extension();
    let algebra = extension.algebra().clone();
    let field = algebra.field();
    let mut one = vec![field.zero(); 4];
    one[0] = field.one();
    let basis = SubalgebraBasis::new(&algebra, vec![one]).unwrap();
    let cert = Extension::over_subalgebra(extension.action().clone(), basis)
        .unwrap()
        .certify()
        .unwrap();
    assert!(
        frobenius_system(&cert).is_ok(),
        "pairing data exists over any base"
    );
    assert!(matches!(
        nakayama_report(&cert),
        Err(FrobeniusError::NeedsGroundBase)
    ));
}

//! Class arithmetic end to end: Hilbert symbols, ramification sets, the
//! product law, the relation audit, and the norm criterion over prime fields.

use galoisazu_core::brauer::{
    class_product, hilbert_symbol, is_split, norm_criterion_split, quaternion_class,
    quaternion_class_rational, steinberg_checks, ClassDescriptor, Place,
};
use galoisazu_core::field::Field;
use num_rational::BigRational;

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn symbols_and_classes_agree_for_integer_and_rational_parameters() {
    assert_eq!(hilbert_symbol(-1, -1, Place::Infinity).unwrap(), -1);
    assert_eq!(hilbert_symbol(-1, -1, Place::Finite(2)).unwrap(), -1);
    assert_eq!(hilbert_symbol(-1, -1, Place::Finite(3)).unwrap(), 1);

    // Parameters are square classes, so denominators do not matter.
    let class_int = quaternion_class(-1, -1).unwrap();
    let class_rat = quaternion_class_rational(&rational(-1, 4), &rational(-9, 1)).unwrap();
    assert_eq!(
        ClassDescriptor::from(&class_int),
        ClassDescriptor::from(&class_rat)
    );
}

#[test]
fn class_products_follow_the_symmetric_difference_law() {
    let minus_one = ClassDescriptor::from(&quaternion_class(-1, -1).unwrap());
    let two = ClassDescriptor::from(&quaternion_class(2, -1).unwrap());
    assert!(two.is_trivial(), "(2, -1) splits everywhere");

    let square = class_product(&minus_one, &minus_one);
    assert!(square.is_trivial(), "every class has order at most two");

    let three = ClassDescriptor::from(&quaternion_class(-1, 3).unwrap());
    let product = class_product(&minus_one, &three);
    let direct = ClassDescriptor::from(&quaternion_class(-3, -1).unwrap());
    // Common-slot multiplication: (-1, -1)(3, -1) shares the second slot.
    let common_slot = ClassDescriptor::from(&quaternion_class(-3, -1).unwrap());
    assert_eq!(product, direct);
    assert_eq!(product, common_slot);
}

#[test]
fn relation_audit_passes_on_mixed_samples() {
    let triples = [
        (2, 3, 5),
        (-1, -1, 2),
        (6, 10, 15),
        (-2, 7, -14),
        (3, 3, -1),
    ];
    let samples = [(2, -1), (3, -2), (5, -4), (-3, 4), (7, -6)];
    let report = steinberg_checks(&triples, &samples).unwrap();
    assert!(report.all_hold(), "failures: {:?}", report);
    assert_eq!(report.bilinearity_triples, triples.len());
    assert_eq!(report.steinberg_samples, samples.len());
}

#[test]
fn splitting_over_the_rationals_matches_the_ramification_set() {
    let field = Field::rationals();
    for (a, b) in [(-1i64, -1i64), (-1, 3), (2, -1), (5, -1), (1, 7), (-2, -5)] {
        let split = is_split(&field, &field.integer(a), &field.integer(b)).unwrap();
        let class = quaternion_class(a, b).unwrap();
        assert_eq!(
            split,
            ClassDescriptor::from(&class).is_trivial(),
            "disagreement at ({a}, {b})"
        );
    }
}

#[test]
fn every_symbol_algebra_over_a_prime_field_passes_the_norm_criterion() {
    // Over a finite field the norm map of any extension is surjective, so
    // the criterion must report a splitting for every admissible input.
    for (p, degrees) in [(5u64, vec![2u64, 4]), (7, vec![2, 3]), (13, vec![2, 3])] {
        let field = Field::prime(p).unwrap();
        for degree in degrees {
            for a in 1..p {
                for b in 1..p {
                    let verdict = norm_criterion_split(
                        &field,
                        degree,
                        &field.integer(a as i64),
                        &field.integer(b as i64),
                    )
                    .unwrap_or_else(|e| panic!("({a}, {b}) of degree {degree} over F_{p}: {e}"));
                    assert!(verdict, "({a}, {b}) of degree {degree} over F_{p}");
                }
            }
        }
    }
}

#[test]
fn quaternions_split_over_finite_fields_but_not_always_over_q() {
    let rationals = Field::rationals();
    assert!(!is_split(&rationals, &rationals.integer(-1), &rationals.integer(-1)).unwrap());

    let finite = Field::prime(11).unwrap();
    for a in 1..11 {
        for b in 1..11 {
            assert!(
                is_split(&finite, &finite.integer(a), &finite.integer(b)).unwrap(),
                "({a}, {b}) over F_11"
            );
        }
    }
}

//! The algebra constructors through the public API: dimensions, units,
//! centres, parameter recovery, and the characteristic-2 variants.

use galoisazu_core::action::GroupSpec;
use galoisazu_core::algebra::{
    centre, char2_quaternion_algebra, char2_skewfield_test, function_algebra,
    is_azumaya_over_field, matrix_algebra, opposite_algebra, quaternion_algebra,
    quaternion_parameters, scalar_algebra, symbol_algebra, tensor_product, AlgebraError,
};
use galoisazu_core::field::Field;

#[test]
fn matrix_algebras_are_azumaya_with_scalar_centre() {
    let field = Field::prime(5).unwrap();
    let algebra = matrix_algebra(&field, 2).unwrap();
    assert_eq!(algebra.dim(), 4);
    assert!(!algebra.is_commutative());
    assert_eq!(centre(&algebra).dim(), 1);
    assert!(is_azumaya_over_field(&algebra).unwrap());

    let rationals = Field::rationals();
    let three_by_three = matrix_algebra(&rationals, 3).unwrap();
    assert_eq!(three_by_three.dim(), 9);
    assert!(is_azumaya_over_field(&three_by_three).unwrap());
}

#[test]
fn function_algebras_multiply_pointwise() {
    let field = Field::rationals();
    let scalars = scalar_algebra(&field);
    let group = GroupSpec::parse("Z4").unwrap();
    let algebra = function_algebra(&scalars, &group).unwrap();
    assert_eq!(algebra.dim(), 4);
    assert!(algebra.is_commutative());

    // Indicator functions are orthogonal idempotents summing to the unit.
    for i in 0..4 {
        for j in 0..4 {
            let product = algebra.basis_product(i, j);
            let expected: Vec<_> = (0..4)
                .map(|k| {
                    if i == j && k == i {
                        field.one()
                    } else {
                        field.zero()
                    }
                })
                .collect();
            assert_eq!(product, expected.as_slice());
        }
    }
    let ones: Vec<_> = (0..4).map(|_| field.one()).collect();
    assert_eq!(algebra.unit_coords(), ones.as_slice());
}

#[test]
fn quaternion_parameters_are_recovered_from_the_table() {
    let field = Field::rationals();
    let a = field.integer(-1);
    let b = field.integer(3);
    let algebra = quaternion_algebra(&field, &a, &b).unwrap();
    let (found_a, found_b) = quaternion_parameters(&algebra).unwrap();
    assert_eq!(found_a, a);
    assert_eq!(found_b, b);
}

#[test]
fn tensor_products_and_opposites_preserve_the_laws() {
    let field = Field::rationals();
    let quaternions = quaternion_algebra(&field, &field.integer(-1), &field.integer(-1)).unwrap();
    let square = tensor_product(&quaternions, &quaternions).unwrap();
    assert_eq!(square.dim(), 16);
    assert_eq!(centre(&square).dim(), 1);

    let opposite = opposite_algebra(&quaternions);
    assert_eq!(opposite.dim(), 4);
    // In the opposite algebra, the product of i and j reverses: i ·op j
    // equals j·i = -k.
    let reversed = opposite.basis_product(1, 2);
    let direct = quaternions.basis_product(2, 1);
    assert_eq!(reversed, direct);
}

#[test]
fn symbol_algebras_validate_the_root_of_unity() {
    let field = Field::prime(7).unwrap();
    let err = symbol_algebra(
        &field,
        3,
        &field.integer(3),
        &field.integer(5),
        &field.integer(3),
    )
    .expect_err("3 is not a primitive cube root of unity modulo 7");
    assert!(matches!(err, AlgebraError::RootOrderMismatch { .. }));

    let no_cube_roots = Field::prime(5).unwrap();
    for candidate in 1..5 {
        assert!(
            symbol_algebra(
                &no_cube_roots,
                3,
                &no_cube_roots.integer(2),
                &no_cube_roots.integer(3),
                &no_cube_roots.integer(candidate),
            )
            .is_err(),
            "F_5 has no primitive cube roots of unity"
        );
    }
}

#[test]
fn characteristic_two_quaternions_construct_over_f2_and_f4() {
    let f2 = Field::prime(2).unwrap();
    let algebra = char2_quaternion_algebra(&f2, &f2.one(), &f2.one()).unwrap();
    assert_eq!(algebra.dim(), 4);
    assert!(!algebra.is_commutative());
    assert_eq!(centre(&algebra).dim(), 1);

    let f4 = Field::extension(2, &[1, 1, 1]).unwrap();
    let omega = f4.generator().expect("extension fields have a generator");
    let over_f4 = char2_quaternion_algebra(&f4, &omega, &f4.one()).unwrap();
    assert_eq!(over_f4.dim(), 4);
    assert!(!over_f4.is_commutative());
}

#[test]
fn characteristic_two_scan_is_definite_and_negative_over_finite_fields() {
    // A finite noncommutative algebra is never a division ring, and the
    // exhaustive scan must reach that verdict rather than give up.
    let f2 = Field::prime(2).unwrap();
    assert!(
        !char2_skewfield_test(&f2, &f2.one(), &f2.one()).unwrap()
    );

    let f4 = Field::extension(2, &[1, 1, 1]).unwrap();
    let omega = f4.generator().expect("extension fields have a generator");
    assert!(!char2_skewfield_test(&f4, &omega, &f4.one()).unwrap());
}

#[test]
fn wrong_characteristic_is_rejected() {
    let field = Field::prime(3).unwrap();
    assert!(matches!(
        char2_quaternion_algebra(&field, &field.one(), &field.one()),
        Err(AlgebraError::WrongCharacteristic { .. })
    ));
    let rationals = Field::rationals();
    assert!(matches!(
        quaternion_algebra(&rationals, &rationals.zero(), &rationals.one()),
        Err(AlgebraError::ZeroParameter { .. })
    ));
}

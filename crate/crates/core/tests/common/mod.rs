//! Shared builders for the integration tests: the standard worked examples
//! constructed through the public API.

#![allow(dead_code)]

use galoisazu_core::action::{
    quaternion_sign_action, symbol_root_action, tensor_action, translation_action, GroupSpec,
};
use galoisazu_core::algebra::{quaternion_algebra, scalar_algebra, symbol_algebra};
use galoisazu_core::field::Field;
use galoisazu_core::galois::Extension;

/// The rational quaternions with i² = j² = -1 under the sign action of the
/// Klein four-group.
pub fn hamilton_extension() -> Extension {
    let field = Field::rationals();
    let algebra = quaternion_algebra(&field, &field.integer(-1), &field.integer(-1))
        .expect("quaternion table is valid");
    let action = quaternion_sign_action(&algebra).expect("sign action verifies");
    Extension::over_ground(action)
}

/// The degree-3 symbol algebra with x³ = 3, u³ = 5, ux = 2·xu over the
/// 7-element field, under the root-scaling action of Z3 × Z3.
pub fn symbol_extension() -> Extension {
    let field = Field::prime(7).expect("7 is prime");
    let algebra = symbol_algebra(
        &field,
        3,
        &field.integer(3),
        &field.integer(5),
        &field.integer(2),
    )
    .expect("symbol table is valid");
    let action = symbol_root_action(&algebra, 3, &field.integer(2)).expect("action verifies");
    Extension::over_ground(action)
}

/// The diagonal embedding of the 5-element field into the algebra of maps
/// from Z2 × Z3 into it, under the translation action.
pub fn trivial_extension() -> Extension {
    let field = Field::prime(5).expect("5 is prime");
    let scalars = scalar_algebra(&field);
    let group = GroupSpec::parse("Z2xZ3").expect("group parses");
    let action = translation_action(&scalars, &group).expect("action verifies");
    Extension::over_ground(action)
}

/// The tensor square of the rational quaternions, under the product action
/// of (Z2)⁴.
pub fn tensor_square_extension() -> Extension {
    let factor = hamilton_extension();
    let action = tensor_action(factor.action(), factor.action()).expect("product action verifies");
    Extension::over_ground(action)
}

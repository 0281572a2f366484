//! Bundled example inputs, built live from the library constructors so
//! the emitted JSON always matches the current serialization exactly.

use crate::CliError;
use galoisazu_core::action::{
    quaternion_sign_action, symbol_root_action, tensor_action, translation_action, AlgebraAction,
    GroupSpec,
};
use galoisazu_core::algebra::{
    char2_quaternion_algebra, quaternion_algebra, scalar_algebra, symbol_algebra, Algebra,
};
use galoisazu_core::codec::{extension_input, ExtensionInputDto};
use galoisazu_core::field::{Field, FieldElement};
use std::sync::Arc;

/// The bundled fixture names, in listing order.
pub const NAMES: [&str; 5] = [
    "hamilton",
    "symbol-7-3",
    "trivial-5-6",
    "char2-f2",
    "tensor-square",
];

/// One-line description of a bundled fixture.
pub fn description(name: &str) -> Option<&'static str> {
    match name {
        "hamilton" => Some(
            "Hamilton quaternions (-1, -1) over Q with the sign action of Z2xZ2",
        ),
        "symbol-7-3" => Some(
            "degree-3 symbol algebra (3, 5; zeta=2) over F_7 with the root-scaling action of Z3xZ3",
        ),
        "trivial-5-6" => Some(
            "diagonal embedding of F_5 into the function algebra F_5(Z2xZ3) with the translation action",
        ),
        "char2-f2" => Some(
            "characteristic-2 quaternion relations over F_2 (no group action; construction and division-ring scan only)",
        ),
        "tensor-square" => Some(
            "tensor square of the Hamilton quaternions over Q with the product action of (Z2)^4",
        ),
        _ => None,
    }
}

/// The parameters behind the characteristic-2 fixture, for the
/// division-ring scan.
pub fn char2_probe() -> (Field, FieldElement, FieldElement) {
    let field = Field::prime(2).expect("2 is prime");
    let a = field.one();
    let b = field.one();
    (field, a, b)
}

fn hamilton_action() -> Result<AlgebraAction, CliError> {
    let field = Field::rationals();
    let algebra = quaternion_algebra(&field, &field.integer(-1), &field.integer(-1))?;
    Ok(quaternion_sign_action(&algebra)?)
}

fn live_parts(name: &str) -> Result<(Arc<Algebra>, Option<AlgebraAction>), CliError> {
    match name {
        "hamilton" => {
            let action = hamilton_action()?;
            Ok((action.algebra().clone(), Some(action)))
        }
        "symbol-7-3" => {
            let field = Field::prime(7)?;
            let algebra = symbol_algebra(
                &field,
                3,
                &field.integer(3),
                &field.integer(5),
                &field.integer(2),
            )?;
            let action = symbol_root_action(&algebra, 3, &field.integer(2))?;
            Ok((algebra, Some(action)))
        }
        "trivial-5-6" => {
            let field = Field::prime(5)?;
            let scalars = scalar_algebra(&field);
            let group = GroupSpec::parse("Z2xZ3")?;
            let action = translation_action(&scalars, &group)?;
            Ok((action.algebra().clone(), Some(action)))
        }
        "char2-f2" => {
            let (field, a, b) = char2_probe();
            let algebra = char2_quaternion_algebra(&field, &a, &b)?;
            Ok((algebra, None))
        }
        "tensor-square" => {
            let factor = hamilton_action()?;
            let action = tensor_action(&factor, &factor)?;
            Ok((action.algebra().clone(), Some(action)))
        }
        other => Err(CliError::Parse(format!(
            "unknown fixture {other:?}; available: {}",
            NAMES.join(", ")
        ))),
    }
}

/// Builds the input bundle for a bundled fixture.
pub fn bundle(name: &str) -> Result<ExtensionInputDto, CliError> {
    let (algebra, action) = live_parts(name)?;
    Ok(extension_input(
        Some(name),
        description(name),
        &algebra,
        action.as_ref(),
        None,
    ))
}

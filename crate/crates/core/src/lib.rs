//! Exact construction and certification of finite-dimensional Galois
//! extensions of rings.
//!
//! The crate builds concrete finite-dimensional algebras over exact fields —
//! quaternion algebras, symbol (power-norm-residue) algebras, full matrix
//! algebras, function algebras `S(G)` — equips them with finite abelian
//! group actions, and then *certifies* structural claims by exact linear
//! algebra rather than by symbolic argument:
//!
//! * a Galois certificate witnesses that the canonical map
//!   `Γ : S ⊗_R S → S(G)`, `s ⊗ t ↦ Σ_g s·g(t)·δ_g`, is bijective, and
//!   carries the Galois element `η_g = Γ⁻¹(δ_g)` together with every identity
//!   the element must satisfy;
//! * a Frobenius system extracts dual bases and the trace form from the
//!   certificate and re-verifies the two normalizing conditions;
//! * the separability idempotent, the Nakayama automorphism, fixed rings of
//!   subgroups, tensor products of extensions, opposite extensions and base
//!   changes are all produced *with* their defining identities re-checked;
//! * the induced solution of the Yang–Baxter equation and the associated
//!   braid-group representations are materialised as exact matrices;
//! * quaternion classes over ℚ are computed by a local Hilbert-symbol oracle
//!   and composed in the 2-torsion of the Brauer group.
//!
//! All arithmetic is exact: ℚ via arbitrary-precision rationals, 𝔽_p, 𝔽_{p^d}
//! and cyclotomic fields ℚ(ζ_n) via canonical polynomial representatives.
//! Nothing in the public API returns an unverified object: constructors check
//! associativity and unit laws, actions check the automorphism property, and
//! every certificate re-derives its claims from scratch.

#![forbid(unsafe_code)]

pub mod action;
pub mod algebra;
pub mod brauer;
pub mod codec;
pub mod field;
pub mod frobenius;
pub mod galois;
pub mod linalg;
pub mod rmatrix;

pub use action::{AlgebraAction, GroupElement, GroupSpec, Subgroup};
pub use algebra::{AlgElement, Algebra, SubalgebraBasis};
pub use field::{Field, FieldElement};
pub use galois::{Extension, FixedRingTower, GaloisCertificate, TensorLeg};
pub use linalg::Mat;

use std::sync::OnceLock;

/// Default cap on the dimension of directly constructed algebras.
pub const DEFAULT_DIM_CAP: usize = 64;
/// Hard ceiling for the dimension cap, regardless of environment override.
pub const MAX_DIM_CAP: usize = 128;
/// Environment variable that raises or lowers the dimension cap.
pub const DIM_CAP_ENV: &str = "GALOISAZU_MAX_DIM";

/// Effective cap on the dimension of directly constructed algebras.
///
/// Reads `GALOISAZU_MAX_DIM` once; values are clamped to `1..=128`. Tensor
/// products are allowed up to the square of this cap so that the tensor
/// square of a maximal algebra still fits.
pub fn dim_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| match std::env::var(DIM_CAP_ENV) {
        Ok(text) => match text.trim().parse::<usize>() {
            Ok(n) => n.clamp(1, MAX_DIM_CAP),
            Err(_) => DEFAULT_DIM_CAP,
        },
        Err(_) => DEFAULT_DIM_CAP,
    })
}

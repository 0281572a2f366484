//! Frobenius structure, Nakayama automorphisms, and separability derived
//! from Galois certificates.
//!
//! Every certified G-Galois extension `R → S` carries a Frobenius system:
//! the counit is the trace `τ(s) = Σ_g g(s)` and the dual bases are the
//! Galois basis pairs `(x_i, y_i)`. [`frobenius_system`] re-verifies both
//! reproducing conditions
//!
//! ```text
//! Σ_i x_i·τ(y_i·s) = s   and   Σ_i τ(s·x_i)·y_i = s
//! ```
//!
//! together with the bimodule property of τ, exhaustively on the basis.
//!
//! For ground-field extensions, [`nakayama_report`] materializes the
//! Nakayama automorphism `ν(d) = Σ_g Σ_i g(x_i·d)·y_i` as a matrix and
//! certifies its defining property `τ(ν(d)·s) = τ(s·d)`;
//! [`symmetry_report`] then decides whether the trace is symmetric and
//! searches for an invertible element witnessing that ν is inner.
//! [`separability_report`] checks that the Galois element η is a
//! separability element — `μ(η) = 1` and `s·η = η·s` — and, over the ground
//! field, that its image in the enveloping algebra `S ⊗ S^op` is idempotent
//! and whether `S` is Azumaya.
//!
//! # Example
//!
//! ```
//! use galoisazu_core::action::quaternion_sign_action;
//! use galoisazu_core::algebra::quaternion_algebra;
//! use galoisazu_core::field::Field;
//! use galoisazu_core::frobenius::{frobenius_system, nakayama_report};
//! use galoisazu_core::galois::Extension;
//!
//! let q = Field::rationals();
//! let h = quaternion_algebra(&q, &q.integer(-1), &q.integer(-1)).unwrap();
//! let cert = Extension::over_ground(quaternion_sign_action(&h).unwrap())
//!     .certify()
//!     .unwrap();
//! let system = frobenius_system(&cert).unwrap();
//! assert_eq!(system.dual_bases().len(), 4);
//! assert!(nakayama_report(&cert).unwrap().is_identity);
//! ```

use crate::algebra::{
    centre, is_azumaya_over_field, AlgElement, Algebra, AlgebraError, SubalgebraBasis,
    AZUMAYA_DIM_CAP,
};
use crate::field::FieldElement;
use crate::galois::{GaloisCertificate, GaloisError};
use crate::linalg::{add_scaled, zero_vec, LinalgError, Mat};
use std::sync::Arc;
use thiserror::Error;

/// Cap on the number of candidate elements enumerated when searching for an
/// invertible Nakayama intertwiner over a finite field.
pub const SYMMETRY_WITNESS_SCAN_CAP: u128 = 4096;

/// Errors from Frobenius-structure computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrobeniusError {
    /// A defining identity that certified input should satisfy failed.
    #[error("Frobenius identity failed: {name}")]
    ConditionFailed { name: &'static str },
    /// The computation is only available over the ground field.
    #[error("this computation requires an extension over the ground field")]
    NeedsGroundBase,
    /// An underlying Galois failure.
    #[error(transparent)]
    Galois(#[from] GaloisError),
    /// An underlying algebra failure.
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    /// An underlying linear-algebra failure.
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A verified Frobenius system: counit, dual bases, and the base they are
/// relative to.
#[derive(Clone)]
pub struct FrobeniusSystem {
    algebra: Arc<Algebra>,
    base: SubalgebraBasis,
    dual_bases: Vec<(AlgElement, AlgElement)>,
    trace_matrix: Mat,
}

impl FrobeniusSystem {
    /// The ambient algebra `S`.
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    /// The base ring the system is relative to.
    pub fn base(&self) -> &SubalgebraBasis {
        &self.base
    }

    /// The dual basis pairs `(x_i, y_i)`.
    pub fn dual_bases(&self) -> &[(AlgElement, AlgElement)] {
        &self.dual_bases
    }

    /// The matrix of the counit `τ` as a map `S → S` (its image lies in
    /// the base).
    pub fn trace_matrix(&self) -> &Mat {
        &self.trace_matrix
    }

    /// Applies the counit.
    pub fn counit(&self, s: &AlgElement) -> AlgElement {
        AlgElement::from_coords(&self.algebra, self.trace_matrix.mul_vec(s.coords()))
    }

    /// The counit value expressed in base coordinates.
    pub fn counit_in_base(&self, s: &AlgElement) -> Option<Vec<FieldElement>> {
        self.base.membership(&self.trace_matrix.mul_vec(s.coords()))
    }
}

/// Extracts and re-verifies the Frobenius system of a certified Galois
/// extension: counit `τ = Σ_g g(·)`, dual bases `(x_i, y_i)`.
pub fn frobenius_system(cert: &GaloisCertificate) -> Result<FrobeniusSystem, FrobeniusError> {
    let algebra = cert.algebra().clone();
    let field = algebra.field().clone();
    let dim = algebra.dim();
    let base = cert.base_basis().clone();
    let trace_matrix = cert.trace_matrix().clone();
    let dual_bases = cert.galois_basis().to_vec();

    // τ lands in the base.
    for j in 0..dim {
        if base.membership(&trace_matrix.column(j)).is_none() {
            return Err(FrobeniusError::ConditionFailed {
                name: "τ maps into the base",
            });
        }
    }
    // τ is a bimodule map over the base: τ(u·s) = u·τ(s), τ(s·u) = τ(s)·u.
    for u in base.vectors() {
        for j in 0..dim {
            let basis_j = algebra.basis_coords(j);
            let left = trace_matrix.mul_vec(&algebra.mul_coords(u, &basis_j));
            let expected = algebra.mul_coords(u, &trace_matrix.column(j));
            if left != expected {
                return Err(FrobeniusError::ConditionFailed {
                    name: "τ(u·s) = u·τ(s)",
                });
            }
            let right = trace_matrix.mul_vec(&algebra.mul_coords(&basis_j, u));
            let expected = algebra.mul_coords(&trace_matrix.column(j), u);
            if right != expected {
                return Err(FrobeniusError::ConditionFailed {
                    name: "τ(s·u) = τ(s)·u",
                });
            }
        }
    }
    // Reproducing conditions on every basis element.
    for s in 0..dim {
        let basis_s = algebra.basis_coords(s);
        let mut left_sum = zero_vec(&field, dim);
        let mut right_sum = zero_vec(&field, dim);
        for (x, y) in &dual_bases {
            let tau = trace_matrix.mul_vec(&algebra.mul_coords(y.coords(), &basis_s));
            let term = algebra.mul_coords(x.coords(), &tau);
            add_scaled(&mut left_sum, &term, &field.one());
            let tau = trace_matrix.mul_vec(&algebra.mul_coords(&basis_s, x.coords()));
            let term = algebra.mul_coords(&tau, y.coords());
            add_scaled(&mut right_sum, &term, &field.one());
        }
        if left_sum != basis_s {
            return Err(FrobeniusError::ConditionFailed {
                name: "Σ_i x_i·τ(y_i·s) = s",
            });
        }
        if right_sum != basis_s {
            return Err(FrobeniusError::ConditionFailed {
                name: "Σ_i τ(s·x_i)·y_i = s",
            });
        }
    }

    Ok(FrobeniusSystem {
        algebra,
        base,
        dual_bases,
        trace_matrix,
    })
}

/// The Nakayama automorphism of a ground-field Galois extension, with its
/// certified properties.
#[derive(Clone)]
pub struct NakayamaReport {
    /// The matrix of `ν(d) = Σ_g Σ_i g(x_i·d)·y_i` on the algebra basis.
    pub matrix: Mat,
    /// True iff ν is the identity map.
    pub is_identity: bool,
    /// True iff ν is a unital, multiplicative, invertible map.
    pub is_automorphism: bool,
}

/// Computes the Nakayama automorphism and certifies its defining pairing
/// `τ(ν(d)·s) = τ(s·d)` on all basis pairs. Ground-field extensions only:
/// over a larger base ν is defined on the centralizer rather than all
/// of `S`.
pub fn nakayama_report(cert: &GaloisCertificate) -> Result<NakayamaReport, FrobeniusError> {
    if !cert.extension().is_ground() {
        return Err(FrobeniusError::NeedsGroundBase);
    }
    let algebra = cert.algebra().clone();
    let field = algebra.field().clone();
    let dim = algebra.dim();
    let action = cert.extension().action();
    let elements = cert.group().elements();
    let trace_matrix = cert.trace_matrix();

    let mut matrix = Mat::zeros(&field, dim, dim);
    for d in 0..dim {
        let basis_d = algebra.basis_coords(d);
        let mut column = zero_vec(&field, dim);
        for g in &elements {
            for (x, y) in cert.galois_basis() {
                let xd = algebra.mul_coords(x.coords(), &basis_d);
                let moved = action.apply_coords(g, &xd);
                let term = algebra.mul_coords(&moved, y.coords());
                add_scaled(&mut column, &term, &field.one());
            }
        }
        matrix.set_column(d, &column);
    }

    // Defining pairing.
    for d in 0..dim {
        let basis_d = algebra.basis_coords(d);
        let nu_d = matrix.column(d);
        for s in 0..dim {
            let basis_s = algebra.basis_coords(s);
            let lhs = trace_matrix.mul_vec(&algebra.mul_coords(&nu_d, &basis_s));
            let rhs = trace_matrix.mul_vec(&algebra.mul_coords(&basis_s, &basis_d));
            if lhs != rhs {
                return Err(FrobeniusError::ConditionFailed {
                    name: "τ(ν(d)·s) = τ(s·d)",
                });
            }
        }
    }

    let is_identity = matrix.is_identity();
    let unital = matrix.mul_vec(algebra.unit_coords()) == algebra.unit_coords();
    let invertible = matrix.inverse().is_ok();
    let mut multiplicative = true;
    'outer: for i in 0..dim {
        for j in 0..dim {
            let lhs = matrix.mul_vec(algebra.basis_product(i, j));
            let rhs = algebra.mul_coords(&matrix.column(i), &matrix.column(j));
            if lhs != rhs {
                multiplicative = false;
                break 'outer;
            }
        }
    }

    Ok(NakayamaReport {
        matrix,
        is_identity,
        is_automorphism: unital && invertible && multiplicative,
    })
}

/// Outcome of the search for an invertible element conjugating by which
/// realizes the Nakayama automorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InnerVerdict {
    /// A verified witness: `ν(d)·c = c·d` for all `d` and `c` is invertible.
    Inner(AlgElement),
    /// Provably not inner: the intertwiner space contains no invertible
    /// element (it is zero, or a finite exhaustive scan found none).
    NotInner,
    /// The search was inconclusive at the configured scale.
    Undecided(String),
}

/// Symmetry analysis of the trace Frobenius structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryReport {
    /// True iff `τ(s·t) = τ(t·s)` on all basis pairs.
    pub trace_symmetric: bool,
    /// Whether the Nakayama automorphism is inner.
    pub nakayama_inner: InnerVerdict,
}

/// Decides trace symmetry and searches for an inner witness of the
/// Nakayama automorphism. Ground-field extensions only.
pub fn symmetry_report(cert: &GaloisCertificate) -> Result<SymmetryReport, FrobeniusError> {
    let nakayama = nakayama_report(cert)?;
    let algebra = cert.algebra().clone();
    let dim = algebra.dim();
    let trace_matrix = cert.trace_matrix();

    let mut trace_symmetric = true;
    'sym: for i in 0..dim {
        for j in i + 1..dim {
            let forward = trace_matrix.mul_vec(algebra.basis_product(i, j));
            let backward = trace_matrix.mul_vec(algebra.basis_product(j, i));
            if forward != backward {
                trace_symmetric = false;
                break 'sym;
            }
        }
    }

    let nakayama_inner = inner_witness(&algebra, &nakayama.matrix);
    Ok(SymmetryReport {
        trace_symmetric,
        nakayama_inner,
    })
}

/// Searches the linear space `{c : ν(d)·c = c·d for all d}` for an
/// invertible element.
fn inner_witness(algebra: &Arc<Algebra>, nakayama: &Mat) -> InnerVerdict {
    let field = algebra.field().clone();
    let dim = algebra.dim();
    let mut stacked: Option<Mat> = None;
    for d in 0..dim {
        let left = algebra.left_mult_matrix(&nakayama.column(d));
        let right = algebra.right_mult_matrix(&algebra.basis_coords(d));
        let block = left.sub(&right).expect("matching shapes");
        stacked = Some(match stacked {
            None => block,
            Some(m) => m.vstack(&block).expect("matching widths"),
        });
    }
    let kernel = stacked.expect("at least one basis element").kernel_basis();
    if kernel.is_empty() {
        return InnerVerdict::NotInner;
    }
    // ν = id is witnessed by the unit without any search.
    if nakayama.is_identity() {
        return InnerVerdict::Inner(AlgElement::one(algebra));
    }
    let try_candidate = |coords: Vec<FieldElement>| -> Option<AlgElement> {
        let candidate = AlgElement::from_coords(algebra, coords);
        candidate.inverse().map(|_| candidate)
    };
    for v in &kernel {
        if let Some(witness) = try_candidate(v.clone()) {
            return InnerVerdict::Inner(witness);
        }
    }
    // Partition-of-unity style spaces: the sum of the kernel basis is often
    // invertible when no single vector is.
    let mut sum = zero_vec(&field, dim);
    for v in &kernel {
        add_scaled(&mut sum, v, &field.one());
    }
    if let Some(witness) = try_candidate(sum) {
        return InnerVerdict::Inner(witness);
    }
    let k = kernel.len();
    if let Some(q) = field.order_u128() {
        let mut total: u128 = 1;
        for _ in 0..k {
            total = total.saturating_mul(q);
        }
        if total <= SYMMETRY_WITNESS_SCAN_CAP {
            for index in 1..total {
                let mut rest = index;
                let mut coords = zero_vec(&field, dim);
                for v in &kernel {
                    let digit = rest % q;
                    rest /= q;
                    if digit != 0 {
                        let c = field.element_at(digit).expect("digit below field order");
                        add_scaled(&mut coords, v, &c);
                    }
                }
                if let Some(witness) = try_candidate(coords) {
                    return InnerVerdict::Inner(witness);
                }
            }
            return InnerVerdict::NotInner;
        }
        return InnerVerdict::Undecided(format!(
            "intertwiner space has {total} elements, beyond the scan cap {SYMMETRY_WITNESS_SCAN_CAP}"
        ));
    }
    // Characteristic 0: try small integer combinations of the kernel basis.
    if k <= 4 {
        let span = 5i64; // coefficients in −2..=2
        let total = span.pow(k as u32);
        for index in 1..total {
            let mut rest = index;
            let mut coords = zero_vec(&field, dim);
            for v in &kernel {
                let digit = rest % span - 2;
                rest /= span;
                if digit != 0 {
                    add_scaled(&mut coords, v, &field.integer(digit));
                }
            }
            if let Some(witness) = try_candidate(coords) {
                return InnerVerdict::Inner(witness);
            }
        }
    }
    InnerVerdict::Undecided("no invertible intertwiner among the searched combinations".into())
}

/// Separability and Azumaya analysis of a certified extension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparabilityReport {
    /// `μ(η_e) = 1`.
    pub multiplication_maps_eta_to_one: bool,
    /// `s·η_e = η_e·s` in `S ⊗_R S` for all basis `s`.
    pub eta_central_in_tensor_square: bool,
    /// Over the ground field: `η_e` is idempotent in `S ⊗ S^op`.
    pub eta_idempotent_in_enveloping: Option<bool>,
    /// Both separability-element conditions hold.
    pub separable_over_base: bool,
    /// Dimension of the centre of `S` over the ground field.
    pub centre_dimension: usize,
    /// Over the ground field and within the dimension cap: centre is the
    /// ground field and the enveloping action is full.
    pub azumaya_over_ground: Option<bool>,
}

/// Certifies that the Galois element is a separability element for `S`
/// over its base and computes the Azumaya data.
pub fn separability_report(cert: &GaloisCertificate) -> Result<SeparabilityReport, FrobeniusError> {
    let algebra = cert.algebra().clone();
    let field = algebra.field().clone();
    let dim = algebra.dim();
    let identity = cert.group().identity();
    let eta = cert.eta_coords(&identity).to_vec();

    let context = &cert.context;
    let mu = context.multiplication(&eta);
    let multiplication_maps_eta_to_one = mu == algebra.unit_coords();

    let mut eta_central = true;
    for s in 0..dim {
        let basis_s = algebra.basis_coords(s);
        if context.left_mul(&basis_s, &eta) != context.right_mul(&eta, &basis_s) {
            eta_central = false;
            break;
        }
    }

    let (eta_idempotent, azumaya) = if cert.extension().is_ground() {
        let square = enveloping_mul(&algebra, &eta, &eta);
        let idempotent = square == eta;
        let azumaya = if dim <= AZUMAYA_DIM_CAP {
            Some(is_azumaya_over_field(&algebra)?)
        } else {
            None
        };
        (Some(idempotent), azumaya)
    } else {
        (None, None)
    };

    let _ = &field;
    Ok(SeparabilityReport {
        multiplication_maps_eta_to_one,
        eta_central_in_tensor_square: eta_central,
        eta_idempotent_in_enveloping: eta_idempotent,
        separable_over_base: multiplication_maps_eta_to_one && eta_central,
        centre_dimension: centre(&algebra).dim(),
        azumaya_over_ground: azumaya,
    })
}

/// Product in the enveloping algebra `S ⊗ S^op` on coordinates indexed
/// `(i, j) ↦ i·dim + j`, without materializing the dim²-dimensional
/// algebra: `(b_i ⊗ b_j^op)(b_k ⊗ b_l^op) = (b_i·b_k) ⊗ (b_l·b_j)^op`.
fn enveloping_mul(
    algebra: &Arc<Algebra>,
    x: &[FieldElement],
    y: &[FieldElement],
) -> Vec<FieldElement> {
    let field = algebra.field().clone();
    let dim = algebra.dim();
    let mut out = zero_vec(&field, dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            let xc = &x[i * dim + j];
            if xc.is_zero() {
                continue;
            }
            for k in 0..dim {
                for l in 0..dim {
                    let yc = &y[k * dim + l];
                    if yc.is_zero() {
                        continue;
                    }
                    let scale = xc * yc;
                    let left = algebra.basis_product(i, k);
                    let right = algebra.basis_product(l, j);
                    for (a, la) in left.iter().enumerate() {
                        if la.is_zero() {
                            continue;
                        }
                        for (b, rb) in right.iter().enumerate() {
                            if rb.is_zero() {
                                continue;
                            }
                            let term = &(&scale * la) * rb;
                            let slot = &mut out[a * dim + b];
                            *slot = &*slot + &term;
                        }
                    }
                }
            }
        }
    }
    out
}

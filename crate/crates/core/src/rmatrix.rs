//! Solutions of the Yang–Baxter equation and braid representations built
//! from Galois elements.
//!
//! For a ground-field Galois certificate with Galois basis `(x_i, y_i)`,
//! the three placements of `η = Σ_i x_i ⊗ y_i` inside the triple tensor
//! power
//!
//! ```text
//! X₁₂ = Σ x_i ⊗ y_i ⊗ 1,   X₂₃ = Σ 1 ⊗ x_i ⊗ y_i,   X₁₃ = Σ x_i ⊗ 1 ⊗ y_i
//! ```
//!
//! satisfy the FS equation `X₁₂X₂₃ = X₂₃X₁₃ = X₁₃X₁₂`, which forces the
//! Yang–Baxter equation `X₁₂X₁₃X₂₃ = X₂₃X₁₃X₁₂`; [`fs_and_yang_baxter`]
//! verifies both by exact multiplication. Left multiplication by η is a
//! linear operator on `S ⊗ S` ([`left_mult_operator`]), whose
//! invertibility detects Azumaya position; its placements on adjacent
//! slots of `S^{⊗n}` generate the braid representations returned by
//! [`braid_representation`]. For quaternion algebras,
//! [`quaternion_eta_blocks`] decomposes the 16×16 operator into four
//! certified invariant 4×4 blocks.
//!
//! # Example
//!
//! ```
//! use galoisazu_core::action::quaternion_sign_action;
//! use galoisazu_core::algebra::quaternion_algebra;
//! use galoisazu_core::field::Field;
//! use galoisazu_core::galois::Extension;
//! use galoisazu_core::rmatrix::fs_and_yang_baxter;
//!
//! let q = Field::rationals();
//! let h = quaternion_algebra(&q, &q.integer(-1), &q.integer(-1)).unwrap();
//! let cert = Extension::over_ground(quaternion_sign_action(&h).unwrap())
//!     .certify()
//!     .unwrap();
//! let report = fs_and_yang_baxter(&cert).unwrap();
//! assert!(report.fs_holds && report.yang_baxter_holds);
//! ```

use crate::algebra::{quaternion_parameters, Algebra, AlgebraError};
use crate::field::FieldElement;
use crate::galois::{GaloisCertificate, GaloisError};
use crate::linalg::{add_scaled, zero_vec, LinalgError, Mat};
use std::sync::Arc;
use thiserror::Error;

/// Cap on the coordinate length of triple tensor powers.
pub const TENSOR_COORD_CAP: usize = 4096;
/// Cap on the dimension of the space a braid representation acts on.
pub const BRAID_DIM_CAP: usize = 256;

/// Errors from R-matrix and braid computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RMatrixError {
    /// The computation is only available over the ground field.
    #[error("this computation requires an extension over the ground field")]
    NeedsGroundBase,
    /// Size guard.
    #[error("tensor space of dimension {size} exceeds the cap {cap}")]
    TooLarge { size: usize, cap: usize },
    /// Fewer than two strands give no generators to work with.
    #[error("a braid representation needs at least 2 strands, got {strands}")]
    TooFewStrands { strands: usize },
    /// The algebra is not presented by the canonical quaternion table.
    #[error("not a quaternion algebra: {0}")]
    NotQuaternion(String),
    /// The η operator leaked outside the expected invariant subspaces.
    #[error("operator entry ({row}, {col}) lies outside the invariant blocks")]
    InvariantSubspaceViolated { row: usize, col: usize },
    /// Mismatched shapes or fields.
    #[error("incompatible inputs: {0}")]
    Incompatible(String),
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

// ---------------------------------------------------------------------------
// Tensor powers over the ground field
// ---------------------------------------------------------------------------

/// The n-th tensor power of an algebra over its ground field, with basis
/// tuples indexed in big-endian radix `dim`.
struct PowerSpace {
    algebra: Arc<Algebra>,
    arity: usize,
    len: usize,
}

impl PowerSpace {
    fn new(algebra: &Arc<Algebra>, arity: usize, cap: usize) -> Result<PowerSpace, RMatrixError> {
        let dim = algebra.dim();
        let mut len = 1usize;
        for _ in 0..arity {
            len = len.saturating_mul(dim);
            if len > cap {
                return Err(RMatrixError::TooLarge { size: len, cap });
            }
        }
        Ok(PowerSpace {
            algebra: Arc::clone(algebra),
            arity,
            len,
        })
    }

    fn tuple_of(&self, mut index: usize) -> Vec<usize> {
        let dim = self.algebra.dim();
        let mut tuple = vec![0usize; self.arity];
        for slot in (0..self.arity).rev() {
            tuple[slot] = index % dim;
            index /= dim;
        }
        tuple
    }

    /// Expands a pure tensor of coordinate vectors.
    fn pure(&self, factors: &[&[FieldElement]]) -> Vec<FieldElement> {
        let field = self.algebra.field().clone();
        let mut out = vec![field.one()];
        for factor in factors {
            let mut next = zero_vec(&field, out.len() * factor.len());
            for (i, a) in out.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in factor.iter().enumerate() {
                    if b.is_zero() {
                        continue;
                    }
                    next[i * factor.len() + j] = a * b;
                }
            }
            out = next;
        }
        out
    }

    /// Sum of pure tensors `Σ_i ⊗_t factors[i][t]`.
    fn sum_of_pures(&self, terms: &[Vec<&[FieldElement]>]) -> Vec<FieldElement> {
        let field = self.algebra.field().clone();
        let mut out = zero_vec(&field, self.len);
        for factors in terms {
            let expansion = self.pure(factors);
            add_scaled(&mut out, &expansion, &field.one());
        }
        out
    }

    /// Slotwise product of two tensor-power elements.
    fn mul(&self, x: &[FieldElement], y: &[FieldElement]) -> Vec<FieldElement> {
        let field = self.algebra.field().clone();
        let mut out = zero_vec(&field, self.len);
        for (ix, cx) in x.iter().enumerate() {
            if cx.is_zero() {
                continue;
            }
            let ti = self.tuple_of(ix);
            for (iy, cy) in y.iter().enumerate() {
                if cy.is_zero() {
                    continue;
                }
                let tj = self.tuple_of(iy);
                let factors: Vec<&[FieldElement]> = ti
                    .iter()
                    .zip(&tj)
                    .map(|(&i, &j)| self.algebra.basis_product(i, j))
                    .collect();
                let expansion = self.pure(&factors);
                add_scaled(&mut out, &expansion, &(cx * cy));
            }
        }
        out
    }
}

/// The Galois basis placed in slots `(u, v)` of a triple tensor power,
/// with the unit in the remaining slot.
fn placement(
    space: &PowerSpace,
    cert: &GaloisCertificate,
    u: usize,
    v: usize,
) -> Vec<FieldElement> {
    let unit = cert.algebra().unit_coords();
    let terms: Vec<Vec<&[FieldElement]>> = cert
        .galois_basis()
        .iter()
        .map(|(x, y)| {
            let mut factors: Vec<&[FieldElement]> = vec![unit; space.arity];
            factors[u] = x.coords();
            factors[v] = y.coords();
            factors
        })
        .collect();
    space.sum_of_pures(&terms)
}

/// Outcome of the FS and Yang–Baxter verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FsReport {
    /// `X₁₂X₂₃ = X₂₃X₁₃ = X₁₃X₁₂`.
    pub fs_holds: bool,
    /// `X₁₂X₁₃X₂₃ = X₂₃X₁₃X₁₂`.
    pub yang_baxter_holds: bool,
}

/// Verifies the FS equation and the Yang–Baxter equation for the Galois
/// basis of a ground-field certificate, by exact multiplication in the
/// triple tensor power.
pub fn fs_and_yang_baxter(cert: &GaloisCertificate) -> Result<FsReport, RMatrixError> {
    if !cert.extension().is_ground() {
        return Err(RMatrixError::NeedsGroundBase);
    }
    let space = PowerSpace::new(cert.algebra(), 3, TENSOR_COORD_CAP)?;
    let x12 = placement(&space, cert, 0, 1);
    let x23 = placement(&space, cert, 1, 2);
    let x13 = placement(&space, cert, 0, 2);

    let p12_23 = space.mul(&x12, &x23);
    let p23_13 = space.mul(&x23, &x13);
    let p13_12 = space.mul(&x13, &x12);
    let fs_holds = p12_23 == p23_13 && p23_13 == p13_12;

    let lhs = space.mul(&space.mul(&x12, &x13), &x23);
    let rhs = space.mul(&space.mul(&x23, &x13), &x12);
    let yang_baxter_holds = lhs == rhs;

    Ok(FsReport {
        fs_holds,
        yang_baxter_holds,
    })
}

// ---------------------------------------------------------------------------
// The η left-multiplication operator
// ---------------------------------------------------------------------------

/// The matrix of left multiplication by `η_e` on `S ⊗ S`, on the basis
/// `b_i ⊗ b_j ↦ i·dim + j`.
pub fn left_mult_operator(cert: &GaloisCertificate) -> Result<Mat, RMatrixError> {
    if !cert.extension().is_ground() {
        return Err(RMatrixError::NeedsGroundBase);
    }
    let algebra = cert.algebra();
    let field = algebra.field().clone();
    let dim = algebra.dim();
    let space = PowerSpace::new(algebra, 2, TENSOR_COORD_CAP)?;
    let eta = cert.eta_coords(&cert.group().identity()).to_vec();
    let mut matrix = Mat::zeros(&field, dim * dim, dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            let mut basis_tensor = zero_vec(&field, dim * dim);
            basis_tensor[i * dim + j] = field.one();
            let column = space.mul(&eta, &basis_tensor);
            matrix.set_column(i * dim + j, &column);
        }
    }
    Ok(matrix)
}

/// Whether left multiplication by `η_e` is invertible on `S ⊗ S`; for
/// Frobenius extensions this detects central separability.
pub fn left_operator_invertible(cert: &GaloisCertificate) -> Result<bool, RMatrixError> {
    let matrix = left_mult_operator(cert)?;
    Ok(matrix.rank() == matrix.rows())
}

// ---------------------------------------------------------------------------
// Quaternion block decomposition
// ---------------------------------------------------------------------------

/// The 16×16 η operator of a quaternion algebra restricted to its four
/// invariant subspaces.
#[derive(Debug, Clone)]
pub struct QuaternionBlocks {
    /// Index pairs `(r, s)` spanning each invariant subspace `b_r ⊗ b_s`,
    /// in the order: diagonal, i-type, j-type, k-type.
    pub subspaces: [[(usize, usize); 4]; 4],
    /// The 4×4 matrix of the operator on each subspace, columns indexed by
    /// the subspace order.
    pub matrices: [Mat; 4],
}

/// The four invariant subspaces of `S ⊗ S` under left multiplication by η
/// for a quaternion algebra with basis `(1, i, j, k)`.
pub const QUATERNION_SUBSPACES: [[(usize, usize); 4]; 4] = [
    [(0, 0), (1, 1), (2, 2), (3, 3)],
    [(0, 1), (1, 0), (2, 3), (3, 2)],
    [(0, 2), (2, 0), (3, 1), (1, 3)],
    [(0, 3), (3, 0), (1, 2), (2, 1)],
];

/// Computes the block decomposition of the η operator of a quaternion
/// algebra and certifies that the four subspaces really are invariant: any
/// nonzero entry outside them is an error.
pub fn quaternion_eta_blocks(cert: &GaloisCertificate) -> Result<QuaternionBlocks, RMatrixError> {
    quaternion_parameters(cert.algebra())
        .map_err(|e| RMatrixError::NotQuaternion(e.to_string()))?;
    let operator = left_mult_operator(cert)?;
    let dim = 4usize;
    let flat = |pair: (usize, usize)| pair.0 * dim + pair.1;

    // Which subspace each flat index belongs to.
    let mut owner = [usize::MAX; 16];
    for (which, pairs) in QUATERNION_SUBSPACES.iter().enumerate() {
        for pair in pairs {
            owner[flat(*pair)] = which;
        }
    }
    for row in 0..16 {
        for col in 0..16 {
            if owner[row] != owner[col] && !operator.at(row, col).is_zero() {
                return Err(RMatrixError::InvariantSubspaceViolated { row, col });
            }
        }
    }

    let field = cert.algebra().field().clone();
    let mut matrices = Vec::with_capacity(4);
    for pairs in &QUATERNION_SUBSPACES {
        let mut block = Mat::zeros(&field, 4, 4);
        for (r, rp) in pairs.iter().enumerate() {
            for (c, cp) in pairs.iter().enumerate() {
                block.set(r, c, operator.at(flat(*rp), flat(*cp)).clone());
            }
        }
        matrices.push(block);
    }
    let matrices: [Mat; 4] = matrices.try_into().expect("exactly four blocks");
    Ok(QuaternionBlocks {
        subspaces: QUATERNION_SUBSPACES,
        matrices,
    })
}

// ---------------------------------------------------------------------------
// Braid representations
// ---------------------------------------------------------------------------

/// A braid-group representation on `S^{⊗n}` with generators
/// `ρ(σ_t) = id^{⊗(t−1)} ⊗ ℓ_η ⊗ id^{⊗(n−t−1)}`.
#[derive(Debug, Clone)]
pub struct BraidRepresentation {
    /// The number of strands `n`.
    pub strands: usize,
    /// The dimension `dimˁ` of the space acted on.
    pub space_dim: usize,
    /// The `n − 1` generator matrices.
    pub generators: Vec<Mat>,
    /// `ρ_t ρ_{t+1} ρ_t = ρ_{t+1} ρ_t ρ_{t+1}` for all adjacent pairs.
    pub braid_relations_hold: bool,
    /// `ρ_s ρ_t = ρ_t ρ_s` whenever `|s − t| ≥ 2`.
    pub distant_generators_commute: bool,
}

/// Builds the braid representation on `n` strands from a ground-field
/// certificate and verifies the braid and commutation relations by exact
/// matrix multiplication.
pub fn braid_representation(
    cert: &GaloisCertificate,
    strands: usize,
) -> Result<BraidRepresentation, RMatrixError> {
    if strands < 2 {
        return Err(RMatrixError::TooFewStrands { strands });
    }
    let algebra = cert.algebra();
    let field = algebra.field().clone();
    let dim = algebra.dim();
    let mut space_dim = 1usize;
    for _ in 0..strands {
        space_dim = space_dim.saturating_mul(dim);
        if space_dim > BRAID_DIM_CAP {
            return Err(RMatrixError::TooLarge {
                size: space_dim,
                cap: BRAID_DIM_CAP,
            });
        }
    }
    let local = left_mult_operator(cert)?;
    let mut generators = Vec::with_capacity(strands - 1);
    for t in 0..strands - 1 {
        let left_dim = dim.pow(t as u32);
        let right_dim = dim.pow((strands - 2 - t) as u32);
        let mut matrix = Mat::identity(&field, left_dim).kronecker(&local);
        if right_dim > 1 {
            matrix = matrix.kronecker(&Mat::identity(&field, right_dim));
        }
        generators.push(matrix);
    }

    let mut braid_relations_hold = true;
    for t in 0..generators.len().saturating_sub(1) {
        let a = &generators[t];
        let b = &generators[t + 1];
        let lhs = a.mul(b).and_then(|m| m.mul(a)).expect("square matrices");
        let rhs = b.mul(a).and_then(|m| m.mul(b)).expect("square matrices");
        if lhs != rhs {
            braid_relations_hold = false;
            break;
        }
    }
    let mut distant_generators_commute = true;
    'outer: for s in 0..generators.len() {
        for t in s + 2..generators.len() {
            let forward = generators[s].mul(&generators[t]).expect("square matrices");
            let backward = generators[t].mul(&generators[s]).expect("square matrices");
            if forward != backward {
                distant_generators_commute = false;
                break 'outer;
            }
        }
    }

    Ok(BraidRepresentation {
        strands,
        space_dim,
        generators,
        braid_relations_hold,
        distant_generators_commute,
    })
}

/// Checks that `φ^{⊗n}` intertwines the braid representations of two
/// certificates: `φ^{⊗n} ∘ ρ_t = ρ'_t ∘ φ^{⊗n}` for every generator.
pub fn braid_morphism_check(
    source: &GaloisCertificate,
    target: &GaloisCertificate,
    phi: &Mat,
    strands: usize,
) -> Result<bool, RMatrixError> {
    if source.algebra().field() != target.algebra().field() {
        return Err(RMatrixError::Incompatible(
            "source and target fields differ".into(),
        ));
    }
    if phi.rows() != target.algebra().dim() || phi.cols() != source.algebra().dim() {
        return Err(RMatrixError::Incompatible(format!(
            "morphism matrix is {}×{}, expected {}×{}",
            phi.rows(),
            phi.cols(),
            target.algebra().dim(),
            source.algebra().dim()
        )));
    }
    let source_rep = braid_representation(source, strands)?;
    let target_rep = braid_representation(target, strands)?;
    let mut phi_power = phi.clone();
    for _ in 1..strands {
        phi_power = phi_power.kronecker(phi);
    }
    for (rho, rho_target) in source_rep.generators.iter().zip(&target_rep.generators) {
        let forward = phi_power.mul(rho).expect("shapes agree");
        let backward = rho_target.mul(&phi_power).expect("shapes agree");
        if forward != backward {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{
        quaternion_sign_action, symbol_root_action, translation_action, GroupSpec,
    };
    use crate::algebra::{quaternion_algebra, scalar_algebra, symbol_algebra};
    use crate::field::Field;
    use crate::galois::Extension;

    fn quaternion_certificate(a: i64, b: i64) -> GaloisCertificate {
        let q = Field::rationals();
        let h = quaternion_algebra(&q, &q.integer(a), &q.integer(b)).unwrap();
        Extension::over_ground(quaternion_sign_action(&h).unwrap())
            .certify()
            .unwrap()
    }

    #[test]
    fn hamilton_fs_and_yang_baxter() {
        let report = fs_and_yang_baxter(&quaternion_certificate(-1, -1)).unwrap();
        assert!(report.fs_holds);
        assert!(report.yang_baxter_holds);
    }

    #[test]
    fn generic_quaternion_fs_and_yang_baxter() {
        let report = fs_and_yang_baxter(&quaternion_certificate(2, 3)).unwrap();
        assert!(report.fs_holds);
        assert!(report.yang_baxter_holds);
    }

    #[test]
    fn symbol_fs_and_yang_baxter() {
        let f7 = Field::prime(7).unwrap();
        let zeta = f7.integer(2);
        let algebra = symbol_algebra(&f7, 3, &f7.integer(3), &f7.integer(5), &zeta).unwrap();
        let action = symbol_root_action(&algebra, 3, &zeta).unwrap();
        let cert = Extension::over_ground(action).certify().unwrap();
        let report = fs_and_yang_baxter(&cert).unwrap();
        assert!(report.fs_holds);
        assert!(report.yang_baxter_holds);
    }

    #[test]
    fn hamilton_operator_is_involutive_after_doubling() {
        let cert = quaternion_certificate(-1, -1);
        let operator = left_mult_operator(&cert).unwrap();
        assert!(left_operator_invertible(&cert).unwrap());
        // η² = ¼(1⊗1), so (2·ℓ_η)² is the identity.
        let q = Field::rationals();
        let doubled = operator.scale(&q.integer(2));
        let squared = doubled.mul(&doubled).unwrap();
        assert!(squared.is_identity());
    }

    #[test]
    fn trivial_extension_operator_is_singular() {
        // In F5(Z6) ⊗ F5(Z6), η = Σ_g δ_g ⊗ δ_g projects onto the
        // diagonal: rank 6 out of 36, and the algebra is not Azumaya.
        let f5 = Field::prime(5).unwrap();
        let group = GroupSpec::parse("Z2xZ3").unwrap();
        let action = translation_action(&scalar_algebra(&f5), &group).unwrap();
        let cert = Extension::over_ground(action).certify().unwrap();
        let operator = left_mult_operator(&cert).unwrap();
        assert_eq!(operator.rank(), 6);
        assert!(!left_operator_invertible(&cert).unwrap());
    }

    #[test]
    fn quaternion_blocks_generic_parameters() {
        let cert = quaternion_certificate(2, 3);
        let blocks = quaternion_eta_blocks(&cert).unwrap();
        let q = Field::rationals();
        let entry = |text: &str| q.scalar_from_str(text).unwrap();
        let matrix = |rows: [[&str; 4]; 4]| {
            Mat::from_rows(
                &q,
                rows.iter()
                    .map(|row| row.iter().map(|t| entry(t)).collect())
                    .collect(),
            )
            .unwrap()
        };
        // At (a, b) = (2, 3): ab = 6.
        let diagonal = matrix([
            ["1/4", "1/2", "3/4", "-3/2"],
            ["1/8", "1/4", "-3/8", "3/4"],
            ["1/12", "-1/6", "1/4", "1/2"],
            ["-1/24", "1/12", "1/8", "1/4"],
        ]);
        let i_type = matrix([
            ["1/4", "1/4", "-3/4", "3/4"],
            ["1/4", "1/4", "3/4", "-3/4"],
            ["-1/12", "1/12", "1/4", "1/4"],
            ["1/12", "-1/12", "1/4", "1/4"],
        ]);
        let j_type = matrix([
            ["1/4", "1/4", "-1/2", "1/2"],
            ["1/4", "1/4", "1/2", "-1/2"],
            ["-1/8", "1/8", "1/4", "1/4"],
            ["1/8", "-1/8", "1/4", "1/4"],
        ]);
        let k_type = matrix([
            ["1/4", "1/4", "1/4", "-1/4"],
            ["1/4", "1/4", "-1/4", "1/4"],
            ["1/4", "-1/4", "1/4", "1/4"],
            ["-1/4", "1/4", "1/4", "1/4"],
        ]);
        assert_eq!(blocks.matrices[0], diagonal);
        assert_eq!(blocks.matrices[1], i_type);
        assert_eq!(blocks.matrices[2], j_type);
        assert_eq!(blocks.matrices[3], k_type);
    }

    #[test]
    fn quaternion_blocks_hamilton() {
        let cert = quaternion_certificate(-1, -1);
        let blocks = quaternion_eta_blocks(&cert).unwrap();
        let q = Field::rationals();
        let quarter = q.scalar_from_str("1/4").unwrap();
        // Diagonal block: ¼ on the diagonal, −¼ off it.
        for r in 0..4 {
            for c in 0..4 {
                let expected = if r == c { quarter.clone() } else { -&quarter };
                assert_eq!(blocks.matrices[0].at(r, c), &expected);
            }
        }
        // The other three blocks coincide: ¼ everywhere except −¼ on the
        // antidiagonal.
        for which in 1..4 {
            for r in 0..4 {
                for c in 0..4 {
                    let expected = if r + c == 3 {
                        -&quarter
                    } else {
                        quarter.clone()
                    };
                    assert_eq!(
                        blocks.matrices[which].at(r, c),
                        &expected,
                        "block {which} entry ({r},{c})"
                    );
                }
            }
        }
    }

    #[test]
    fn hamilton_braid_representation() {
        let cert = quaternion_certificate(-1, -1);
        let rep = braid_representation(&cert, 3).unwrap();
        assert_eq!(rep.space_dim, 64);
        assert_eq!(rep.generators.len(), 2);
        assert!(rep.braid_relations_hold);
        assert!(rep.distant_generators_commute);

        assert!(matches!(
            braid_representation(&cert, 5),
            Err(RMatrixError::TooLarge { .. })
        ));
        assert!(matches!(
            braid_representation(&cert, 1),
            Err(RMatrixError::TooFewStrands { strands: 1 })
        ));
    }

    #[test]
    fn braid_morphisms() {
        let cert = quaternion_certificate(-1, -1);
        let q = Field::rationals();
        let identity = Mat::identity(&q, 4);
        assert!(braid_morphism_check(&cert, &cert, &identity, 3).unwrap());

        // The α action matrix is an equivariant algebra automorphism, so
        // its tensor cube intertwines the representations.
        let alpha = cert
            .extension()
            .action()
            .matrix_of(&cert.group().element(&[1, 0]).unwrap())
            .clone();
        assert!(braid_morphism_check(&cert, &cert, &alpha, 3).unwrap());

        // A non-morphism scaling map fails to intertwine.
        let mut bad = Mat::identity(&q, 4);
        bad.set(3, 3, q.integer(2));
        assert!(!braid_morphism_check(&cert, &cert, &bad, 2).unwrap());
    }
}

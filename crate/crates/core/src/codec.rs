//! JSON interchange for algebras, actions, extensions, and certificates.
//!
//! Exactness survives serialization: every field element travels as a
//! reduced fraction string (`"p/q"`) or as a coefficient list of such
//! strings — never as a float. Output is deterministic: struct fields
//! serialize in declaration order, vectors follow basis order, and sets
//! are sorted, so equal values produce equal bytes and every emitted
//! document re-parses to a bitwise-identical value.
//!
//! Certificates do not deserialize into trusted objects. Parsing a
//! [`CertificateDto`] re-runs the certification from the echoed inputs
//! and requires the stored data to match the recomputation exactly, so a
//! tampered certificate is rejected rather than believed.
//!
//! # Example
//!
//! ```
//! use galoisazu_core::codec::{algebra_from_dto, algebra_to_dto};
//! use galoisazu_core::algebra::quaternion_algebra;
//! use galoisazu_core::field::Field;
//!
//! let field = Field::rationals();
//! let algebra = quaternion_algebra(&field, &field.integer(-1), &field.integer(-1)).unwrap();
//! let dto = algebra_to_dto(&algebra);
//! let json = serde_json::to_string(&dto).unwrap();
//! let parsed: galoisazu_core::codec::AlgebraDto = serde_json::from_str(&json).unwrap();
//! let rebuilt = algebra_from_dto(&parsed).unwrap();
//! assert_eq!(serde_json::to_string(&algebra_to_dto(&rebuilt)).unwrap(), json);
//! ```

use crate::action::{ActionError, AlgebraAction, GroupSpec};
use crate::algebra::{Algebra, AlgebraError, SubalgebraBasis};
use crate::brauer::{ClassDescriptor, QuaternionClass};
use crate::field::{Field, FieldElement, FieldError};
use crate::frobenius::{
    FrobeniusSystem, InnerVerdict, NakayamaReport, SeparabilityReport, SymmetryReport,
};
use crate::galois::{Extension, GaloisCertificate, GaloisError};
use crate::linalg::{LinalgError, Mat};
use crate::rmatrix::{BraidRepresentation, FsReport, QuaternionBlocks};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use std::sync::Arc;
use thiserror::Error;

/// Matrices whose side exceeds this bound are summarized (rank,
/// invertibility) instead of embedded entry-by-entry in JSON documents.
pub const MATRIX_EMBED_SIDE_CAP: usize = 16;

/// Errors from serialization and deserialization.
#[derive(Debug, Error)]
pub enum CodecError {
    /// A document is structurally valid JSON but violates a schema rule.
    #[error("malformed {what}: {detail}")]
    Malformed { what: &'static str, detail: String },
    /// Stored certificate data disagrees with its recomputation.
    #[error("certificate integrity failure: {0}")]
    Integrity(String),
    /// An underlying JSON failure.
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    /// An underlying field failure.
    #[error(transparent)]
    Field(#[from] FieldError),
    /// An underlying algebra failure.
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    /// An underlying action failure.
    #[error(transparent)]
    Action(#[from] ActionError),
    /// An underlying linear-algebra failure.
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    /// An underlying certification failure.
    #[error(transparent)]
    Galois(#[from] GaloisError),
}

/// A serialized field element: a fraction string for one-dimensional
/// fields (ℚ, 𝔽_p), a coefficient list in ascending generator powers
/// otherwise. Parsing accepts either shape; emission is canonical by
/// field kind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementDto {
    /// `"p/q"` or `"n"`.
    Scalar(String),
    /// One fraction string per power of the generator.
    Coefficients(Vec<String>),
}

/// A serialized matrix: rows of element entries.
pub type MatrixDto = Vec<Vec<ElementDto>>;

fn rational_string(value: &BigRational) -> String {
    value.to_string()
}

fn parse_fraction(text: &str) -> Result<BigRational, CodecError> {
    text.trim()
        .parse::<BigRational>()
        .map_err(|err| CodecError::Malformed {
            what: "element",
            detail: format!("cannot parse {text:?} as a fraction: {err}"),
        })
}

/// Serializes an element canonically for its field.
pub fn element_to_dto(element: &FieldElement) -> ElementDto {
    let coeffs = element.coeffs_as_rationals();
    if coeffs.len() == 1 {
        ElementDto::Scalar(rational_string(&coeffs[0]))
    } else {
        ElementDto::Coefficients(coeffs.iter().map(rational_string).collect())
    }
}

/// Parses an element of `field` from either serialized shape.
pub fn element_from_dto(field: &Field, dto: &ElementDto) -> Result<FieldElement, CodecError> {
    match dto {
        ElementDto::Scalar(text) => Ok(field.scalar_from_str(text)?),
        ElementDto::Coefficients(texts) => {
            let coeffs: Vec<BigRational> = texts
                .iter()
                .map(|t| parse_fraction(t))
                .collect::<Result<_, _>>()?;
            Ok(field.from_rational_coeffs(&coeffs)?)
        }
    }
}

/// Serializes a coordinate vector.
pub fn coords_to_dto(coords: &[FieldElement]) -> Vec<ElementDto> {
    coords.iter().map(element_to_dto).collect()
}

/// Parses a coordinate vector over `field`.
pub fn coords_from_dto(field: &Field, dto: &[ElementDto]) -> Result<Vec<FieldElement>, CodecError> {
    dto.iter().map(|e| element_from_dto(field, e)).collect()
}

/// Serializes a matrix row-by-row.
pub fn matrix_to_dto(matrix: &Mat) -> MatrixDto {
    (0..matrix.rows())
        .map(|r| coords_to_dto(&matrix.row(r)))
        .collect()
}

/// Parses a matrix over `field`; rows must be nonempty and rectangular.
pub fn matrix_from_dto(field: &Field, dto: &MatrixDto) -> Result<Mat, CodecError> {
    let rows: Vec<Vec<FieldElement>> = dto
        .iter()
        .map(|row| coords_from_dto(field, row))
        .collect::<Result<_, _>>()?;
    Ok(Mat::from_rows(field, rows)?)
}

/// The serialized form of a finite-dimensional algebra: its field
/// descriptor, dimension, basis labels, structure constants
/// (`sc[i][j]` are the coordinates of `bᵢ·bⱼ`), and unit coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDto {
    pub field: String,
    pub dim: usize,
    pub labels: Vec<String>,
    pub sc: Vec<Vec<Vec<ElementDto>>>,
    pub unit: Vec<ElementDto>,
}

/// Serializes an algebra.
pub fn algebra_to_dto(algebra: &Arc<Algebra>) -> AlgebraDto {
    let dim = algebra.dim();
    AlgebraDto {
        field: algebra.field().to_string(),
        dim,
        labels: algebra.labels().to_vec(),
        sc: (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| coords_to_dto(algebra.basis_product(i, j)))
                    .collect()
            })
            .collect(),
        unit: coords_to_dto(algebra.unit_coords()),
    }
}

/// Rebuilds an algebra from its serialized form; the multiplication table
/// is fully re-validated (shape, unit law, associativity).
pub fn algebra_from_dto(dto: &AlgebraDto) -> Result<Arc<Algebra>, CodecError> {
    let field = Field::parse_descriptor(&dto.field)?;
    if dto.labels.len() != dto.dim || dto.sc.len() != dto.dim {
        return Err(CodecError::Malformed {
            what: "algebra",
            detail: format!(
                "dim {} disagrees with {} labels and {} table rows",
                dto.dim,
                dto.labels.len(),
                dto.sc.len()
            ),
        });
    }
    let table: Vec<Vec<Vec<FieldElement>>> = dto
        .sc
        .iter()
        .map(|row| {
            row.iter()
                .map(|cell| coords_from_dto(&field, cell))
                .collect::<Result<_, _>>()
        })
        .collect::<Result<_, _>>()?;
    let unit = coords_from_dto(&field, &dto.unit)?;
    Ok(Algebra::new(&field, dto.labels.clone(), table, unit)?)
}

/// The serialized form of a group action: the group descriptor
/// (`"Z2xZ2"`) and one matrix per cyclic generator, in the algebra's
/// basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionDto {
    pub group: String,
    pub matrices: Vec<MatrixDto>,
}

/// Serializes an action (generator matrices only; the full orbit is
/// recomputed on parse).
pub fn action_to_dto(action: &AlgebraAction) -> ActionDto {
    ActionDto {
        group: action.group().to_string(),
        matrices: action
            .generator_matrices()
            .iter()
            .map(matrix_to_dto)
            .collect(),
    }
}

/// Rebuilds an action on `algebra`; automorphism and order laws are
/// re-verified by the action constructor.
pub fn action_from_dto(
    algebra: &Arc<Algebra>,
    dto: &ActionDto,
) -> Result<AlgebraAction, CodecError> {
    let group = GroupSpec::parse(&dto.group)?;
    let matrices: Vec<Mat> = dto
        .matrices
        .iter()
        .map(|m| matrix_from_dto(algebra.field(), m))
        .collect::<Result<_, _>>()?;
    Ok(AlgebraAction::new(group, algebra, matrices)?)
}

/// The serialized form of a base subalgebra: spanning coordinate vectors
/// in the ambient algebra's basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubalgebraDto {
    pub vectors: Vec<Vec<ElementDto>>,
}

/// Serializes a subalgebra basis.
pub fn subalgebra_to_dto(basis: &SubalgebraBasis) -> SubalgebraDto {
    SubalgebraDto {
        vectors: basis.vectors().iter().map(|v| coords_to_dto(v)).collect(),
    }
}

/// Rebuilds a subalgebra basis inside `algebra`; closure under
/// multiplication is re-verified.
pub fn subalgebra_from_dto(
    algebra: &Arc<Algebra>,
    dto: &SubalgebraDto,
) -> Result<SubalgebraBasis, CodecError> {
    let span: Vec<Vec<FieldElement>> = dto
        .vectors
        .iter()
        .map(|v| coords_from_dto(algebra.field(), v))
        .collect::<Result<_, _>>()?;
    Ok(SubalgebraBasis::new(algebra, span)?)
}

/// A bundled extension input: the algebra, optionally an action, and
/// optionally a base subalgebra (absent base means the ground field).
///
/// This is the on-disk fixture format and the echo embedded in
/// certificates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionInputDto {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub algebra: AlgebraDto,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<ActionDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<SubalgebraDto>,
}

/// Assembles an input bundle from live objects.
pub fn extension_input(
    name: Option<&str>,
    description: Option<&str>,
    algebra: &Arc<Algebra>,
    action: Option<&AlgebraAction>,
    base: Option<&SubalgebraBasis>,
) -> ExtensionInputDto {
    ExtensionInputDto {
        name: name.map(str::to_owned),
        description: description.map(str::to_owned),
        algebra: algebra_to_dto(algebra),
        action: action.map(action_to_dto),
        base: base.map(subalgebra_to_dto),
    }
}

/// Rebuilds the algebra and, when an action is present, the extension
/// described by an input bundle. Every law (associativity, automorphism
/// property, base field axioms) is re-verified by the constructors.
pub fn extension_from_input(
    input: &ExtensionInputDto,
) -> Result<(Arc<Algebra>, Option<Extension>), CodecError> {
    let algebra = algebra_from_dto(&input.algebra)?;
    let Some(action_dto) = &input.action else {
        if input.base.is_some() {
            return Err(CodecError::Malformed {
                what: "extension input",
                detail: "a base subalgebra without an action has no meaning".into(),
            });
        }
        return Ok((algebra, None));
    };
    let action = action_from_dto(&algebra, action_dto)?;
    let extension = match &input.base {
        None => Extension::over_ground(action),
        Some(base_dto) => {
            let basis = subalgebra_from_dto(&algebra, base_dto)?;
            Extension::over_subalgebra(action, basis)?
        }
    };
    Ok((algebra, Some(extension)))
}

/// One entry of a check list: a named verification, its outcome, and an
/// optional witness for failures.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDto {
    pub name: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckDto {
    /// A passed check.
    pub fn pass(name: &str) -> CheckDto {
        CheckDto {
            name: name.to_owned(),
            pass: true,
            witness: None,
        }
    }

    /// A failed check with a witness.
    pub fn fail(name: &str, witness: String) -> CheckDto {
        CheckDto {
            name: name.to_owned(),
            pass: false,
            witness: Some(witness),
        }
    }
}

/// The verifications a certificate attests to, in report order. A
/// certificate object exists only if all of them passed; a failed
/// certification surfaces the first failing name instead.
pub const CERTIFICATE_CHECK_NAMES: &[&str] = &[
    "group-acts-by-algebra-automorphisms",
    "base-fixed-pointwise",
    "base-module-free",
    "gamma-bijective",
    "eta-components-sum-to-unit-tensor",
    "eta-casimir-commutation",
    "galois-basis-orthogonality",
    "separability-element-normalized",
    "trace-lands-in-base",
    "trace-scales-base-by-group-order",
];

/// The certification flags, mirroring the certificate accessors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagsDto {
    pub strict: bool,
    pub centralizing: bool,
    pub central: bool,
    pub invariants_match_base: bool,
    pub trace_into_base: bool,
}

/// A dual pair from the Galois basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualPairDto {
    pub x: Vec<ElementDto>,
    pub y: Vec<ElementDto>,
}

/// One Galois element `η_g`: the group element's coordinates and the
/// tensor coordinates (row-major over basis pairs).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EtaDto {
    pub element: Vec<u64>,
    pub tensor: Vec<ElementDto>,
}

/// A serialized certificate: the inputs echo, the group data, the
/// per-check outcomes, the Galois basis and η decomposition, the full Γ
/// matrix, and the trace matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDto {
    pub inputs: ExtensionInputDto,
    pub group: String,
    pub group_order: u64,
    pub module_rank: usize,
    pub flags: FlagsDto,
    pub checks: Vec<CheckDto>,
    pub galois_basis: Vec<DualPairDto>,
    pub eta: Vec<EtaDto>,
    pub gamma: MatrixDto,
    pub trace_matrix: MatrixDto,
    pub notes: Vec<String>,
}

/// The flags of a certificate as a DTO.
pub fn certificate_flags(cert: &GaloisCertificate) -> FlagsDto {
    FlagsDto {
        strict: cert.is_strict(),
        centralizing: cert.is_centralizing(),
        central: cert.is_central(),
        invariants_match_base: cert.invariants_match_base(),
        trace_into_base: cert.trace_into_base(),
    }
}

/// Serializes a certificate, embedding the given inputs echo.
pub fn certificate_to_dto(cert: &GaloisCertificate, inputs: ExtensionInputDto) -> CertificateDto {
    let group = cert.group();
    CertificateDto {
        inputs,
        group: group.to_string(),
        group_order: group.order(),
        module_rank: cert.module_rank(),
        flags: certificate_flags(cert),
        checks: CERTIFICATE_CHECK_NAMES
            .iter()
            .map(|name| {
                // Certification aborts on any failed identity, so a produced
                // certificate witnesses every check except the trace-image
                // condition, which is informational when the base is a
                // proper subring of the invariants.
                if *name == "trace-lands-in-base" && !cert.trace_into_base() {
                    CheckDto::fail(
                        name,
                        "trace image spans outside the base subalgebra".to_string(),
                    )
                } else {
                    CheckDto::pass(name)
                }
            })
            .collect(),
        galois_basis: cert
            .galois_basis()
            .iter()
            .map(|(x, y)| DualPairDto {
                x: coords_to_dto(x.coords()),
                y: coords_to_dto(y.coords()),
            })
            .collect(),
        eta: group
            .elements()
            .iter()
            .map(|g| EtaDto {
                element: g.coords().to_vec(),
                tensor: coords_to_dto(cert.eta_coords(g)),
            })
            .collect(),
        gamma: matrix_to_dto(cert.gamma()),
        trace_matrix: matrix_to_dto(cert.trace_matrix()),
        notes: cert.notes().to_vec(),
    }
}

/// Rebuilds a certificate from its serialized form by re-running the
/// certification on the echoed inputs, then requiring the stored document
/// to match the recomputation bit-for-bit. Certificates are therefore
/// never trusted as data — only as claims that are checked again.
pub fn certificate_from_dto(dto: &CertificateDto) -> Result<GaloisCertificate, CodecError> {
    let (_, extension) = extension_from_input(&dto.inputs)?;
    let extension = extension.ok_or_else(|| CodecError::Malformed {
        what: "certificate",
        detail: "the inputs echo carries no action".into(),
    })?;
    let cert = extension.certify()?;
    let recomputed = certificate_to_dto(&cert, dto.inputs.clone());
    if &recomputed != dto {
        return Err(CodecError::Integrity(
            "stored certificate disagrees with its recomputation".into(),
        ));
    }
    Ok(cert)
}

/// The serialized Nakayama data of a Frobenius system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NakayamaDto {
    pub matrix: MatrixDto,
    pub is_identity: bool,
    pub is_automorphism: bool,
}

/// The serialized symmetry verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryDto {
    pub trace_symmetric: bool,
    /// `"inner"`, `"not-inner"`, or `"undecided: <reason>"`.
    pub nakayama_inner: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inner_witness: Option<Vec<ElementDto>>,
}

/// The serialized separability report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparabilityDto {
    pub multiplication_maps_eta_to_one: bool,
    pub eta_central_in_tensor_square: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta_idempotent_in_enveloping: Option<bool>,
    pub separable_over_base: bool,
    pub centre_dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub azumaya_over_ground: Option<bool>,
}

/// The serialized Frobenius data of a certificate: dual bases, trace
/// matrix, and — over the ground field — Nakayama and symmetry data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusDto {
    pub dual_bases: Vec<DualPairDto>,
    pub trace_matrix: MatrixDto,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nakayama: Option<NakayamaDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetry: Option<SymmetryDto>,
    pub separability: SeparabilityDto,
}

/// Serializes Frobenius data; pass `None` for the ground-only reports
/// when the extension has a proper base.
pub fn frobenius_to_dto(
    system: &FrobeniusSystem,
    nakayama: Option<&NakayamaReport>,
    symmetry: Option<&SymmetryReport>,
    separability: &SeparabilityReport,
) -> FrobeniusDto {
    FrobeniusDto {
        dual_bases: system
            .dual_bases()
            .iter()
            .map(|(x, y)| DualPairDto {
                x: coords_to_dto(x.coords()),
                y: coords_to_dto(y.coords()),
            })
            .collect(),
        trace_matrix: matrix_to_dto(system.trace_matrix()),
        nakayama: nakayama.map(|report| NakayamaDto {
            matrix: matrix_to_dto(&report.matrix),
            is_identity: report.is_identity,
            is_automorphism: report.is_automorphism,
        }),
        symmetry: symmetry.map(|report| SymmetryDto {
            trace_symmetric: report.trace_symmetric,
            nakayama_inner: match &report.nakayama_inner {
                InnerVerdict::Inner(_) => "inner".to_owned(),
                InnerVerdict::NotInner => "not-inner".to_owned(),
                InnerVerdict::Undecided(reason) => format!("undecided: {reason}"),
            },
            inner_witness: match &report.nakayama_inner {
                InnerVerdict::Inner(witness) => Some(coords_to_dto(witness.coords())),
                _ => None,
            },
        }),
        separability: SeparabilityDto {
            multiplication_maps_eta_to_one: separability.multiplication_maps_eta_to_one,
            eta_central_in_tensor_square: separability.eta_central_in_tensor_square,
            eta_idempotent_in_enveloping: separability.eta_idempotent_in_enveloping,
            separable_over_base: separability.separable_over_base,
            centre_dimension: separability.centre_dimension,
            azumaya_over_ground: separability.azumaya_over_ground,
        },
    }
}

/// The serialized invariant-subspace blocks of a quaternion operator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlocksDto {
    /// Index pairs spanning each subspace, in block order.
    pub subspaces: Vec<Vec<(usize, usize)>>,
    /// The 4×4 operator matrix on each subspace.
    pub matrices: Vec<MatrixDto>,
}

/// The serialized braid representation data. Generator matrices are
/// embedded only while the space stays within [`MATRIX_EMBED_SIDE_CAP`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidDto {
    pub strands: usize,
    pub space_dim: usize,
    pub braid_relations_hold: bool,
    pub distant_generators_commute: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<MatrixDto>>,
}

/// The serialized operator data: the equation checks, invertibility, and
/// optionally the operator itself, the quaternion blocks, and a braid
/// representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RMatrixDto {
    pub space_dim: usize,
    pub fs_holds: bool,
    pub yang_baxter_holds: bool,
    pub operator_rank: usize,
    pub operator_invertible: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operator: Option<MatrixDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<BlocksDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braid: Option<BraidDto>,
}

/// Serializes operator data. The left-multiplication operator and braid
/// generators are embedded entry-by-entry only while their side stays
/// within [`MATRIX_EMBED_SIDE_CAP`]; beyond that the summary fields
/// remain.
pub fn rmatrix_to_dto(
    equations: &FsReport,
    operator: &Mat,
    operator_rank: usize,
    blocks: Option<&QuaternionBlocks>,
    braid: Option<&BraidRepresentation>,
) -> RMatrixDto {
    RMatrixDto {
        space_dim: operator.rows(),
        fs_holds: equations.fs_holds,
        yang_baxter_holds: equations.yang_baxter_holds,
        operator_rank,
        operator_invertible: operator_rank == operator.rows(),
        operator: (operator.rows() <= MATRIX_EMBED_SIDE_CAP).then(|| matrix_to_dto(operator)),
        blocks: blocks.map(|b| BlocksDto {
            subspaces: b.subspaces.iter().map(|s| s.to_vec()).collect(),
            matrices: b.matrices.iter().map(matrix_to_dto).collect(),
        }),
        braid: braid.map(|b| BraidDto {
            strands: b.strands,
            space_dim: b.space_dim,
            braid_relations_hold: b.braid_relations_hold,
            distant_generators_commute: b.distant_generators_commute,
            generators: (b.space_dim <= MATRIX_EMBED_SIDE_CAP)
                .then(|| b.generators.iter().map(matrix_to_dto).collect()),
        }),
    }
}

/// The serialized ramification data of a Brauer class: sorted place
/// names and the splitting verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamificationDto {
    pub ramified: Vec<String>,
    pub split: bool,
}

/// Serializes a quaternion class.
pub fn class_to_dto(class: &QuaternionClass) -> RamificationDto {
    RamificationDto {
        ramified: class.ramified().iter().map(|p| p.to_string()).collect(),
        split: class.is_split(),
    }
}

/// Serializes a class descriptor.
pub fn descriptor_to_dto(descriptor: &ClassDescriptor) -> RamificationDto {
    RamificationDto {
        ramified: descriptor
            .ramified()
            .iter()
            .map(|p| p.to_string())
            .collect(),
        split: descriptor.is_trivial(),
    }
}

/// A compact certificate summary for composite outputs (towers, tensor
/// products, base changes).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateSummaryDto {
    pub group: String,
    pub algebra_dim: usize,
    pub module_rank: usize,
    pub flags: FlagsDto,
}

/// Summarizes a certificate.
pub fn certificate_summary(cert: &GaloisCertificate) -> CertificateSummaryDto {
    CertificateSummaryDto {
        group: cert.group().to_string(),
        algebra_dim: cert.algebra().dim(),
        module_rank: cert.module_rank(),
        flags: certificate_flags(cert),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{quaternion_sign_action, translation_action};
    use crate::algebra::{function_algebra, quaternion_algebra, scalar_algebra};
    use crate::field::Field;

    fn hamilton_extension() -> Extension {
        let field = Field::rationals();
        let algebra = quaternion_algebra(&field, &field.integer(-1), &field.integer(-1)).unwrap();
        Extension::over_ground(quaternion_sign_action(&algebra).unwrap())
    }

    #[test]
    fn element_round_trips_are_bitwise() {
        let cases: Vec<(Field, ElementDto)> = vec![
            (Field::rationals(), ElementDto::Scalar("-3/4".into())),
            (Field::prime(7).unwrap(), ElementDto::Scalar("5".into())),
            (
                Field::extension(3, &[1, 0, 1]).unwrap(),
                ElementDto::Coefficients(vec!["2".into(), "1".into()]),
            ),
            (
                Field::cyclotomic(4).unwrap(),
                ElementDto::Coefficients(vec!["1/2".into(), "-1".into()]),
            ),
        ];
        for (field, dto) in cases {
            let element = element_from_dto(&field, &dto).unwrap();
            let emitted = element_to_dto(&element);
            assert_eq!(emitted, dto, "canonical form drifted over {field}");
            let json = serde_json::to_string(&emitted).unwrap();
            let reparsed: ElementDto = serde_json::from_str(&json).unwrap();
            assert_eq!(serde_json::to_string(&reparsed).unwrap(), json);
        }

        // A scalar literal is accepted for an extension field and emitted
        // canonically as a coefficient list.
        let f9 = Field::extension(3, &[1, 0, 1]).unwrap();
        let constant = element_from_dto(&f9, &ElementDto::Scalar("2".into())).unwrap();
        assert_eq!(
            element_to_dto(&constant),
            ElementDto::Coefficients(vec!["2".into(), "0".into()])
        );
    }

    #[test]
    fn algebra_round_trip_is_bitwise() {
        let field = Field::rationals();
        let algebra = quaternion_algebra(&field, &field.integer(-1), &field.integer(-1)).unwrap();
        let dto = algebra_to_dto(&algebra);
        assert_eq!(dto.field, "Q");
        assert_eq!(dto.dim, 4);
        let json = serde_json::to_string_pretty(&dto).unwrap();
        let parsed: AlgebraDto = serde_json::from_str(&json).unwrap();
        let rebuilt = algebra_from_dto(&parsed).unwrap();
        assert_eq!(*rebuilt, *algebra);
        assert_eq!(
            serde_json::to_string_pretty(&algebra_to_dto(&rebuilt)).unwrap(),
            json
        );
    }

    #[test]
    fn action_and_input_round_trips() {
        let field = Field::prime(5).unwrap();
        let scalars = scalar_algebra(&field);
        let group = GroupSpec::parse("Z2xZ3").unwrap();
        let action = translation_action(&scalars, &group).unwrap();
        let algebra = action.algebra().clone();

        let input = extension_input(
            Some("trivial-5-6"),
            Some("diagonal embedding of 𝔽_5 into 𝔽_5(ℤ/2×ℤ/3)"),
            &algebra,
            Some(&action),
            None,
        );
        let json = serde_json::to_string_pretty(&input).unwrap();
        let parsed: ExtensionInputDto = serde_json::from_str(&json).unwrap();
        let (rebuilt_algebra, extension) = extension_from_input(&parsed).unwrap();
        assert_eq!(*rebuilt_algebra, *algebra);
        let extension = extension.expect("action present");
        assert!(extension.is_ground());
        assert_eq!(
            serde_json::to_string_pretty(&extension_input(
                Some("trivial-5-6"),
                Some("diagonal embedding of 𝔽_5 into 𝔽_5(ℤ/2×ℤ/3)"),
                &rebuilt_algebra,
                Some(extension.action()),
                None,
            ))
            .unwrap(),
            json
        );
    }

    #[test]
    fn certificate_round_trip_recertifies() {
        let extension = hamilton_extension();
        let cert = extension.certify().unwrap();
        let inputs = extension_input(
            Some("hamilton"),
            None,
            extension.algebra(),
            Some(extension.action()),
            None,
        );
        let dto = certificate_to_dto(&cert, inputs);
        assert_eq!(dto.group, "Z2xZ2");
        assert_eq!(dto.group_order, 4);
        assert_eq!(dto.gamma.len(), 16);
        assert!(dto.checks.iter().all(|c| c.pass));

        let json = serde_json::to_string_pretty(&dto).unwrap();
        let parsed: CertificateDto = serde_json::from_str(&json).unwrap();
        let recertified = certificate_from_dto(&parsed).unwrap();
        assert_eq!(
            serde_json::to_string_pretty(&certificate_to_dto(&recertified, parsed.inputs.clone()))
                .unwrap(),
            json
        );
    }

    #[test]
    fn tampered_certificates_are_rejected() {
        let extension = hamilton_extension();
        let cert = extension.certify().unwrap();
        let inputs = extension_input(
            None,
            None,
            extension.algebra(),
            Some(extension.action()),
            None,
        );
        let mut dto = certificate_to_dto(&cert, inputs);
        dto.eta[0].tensor[0] = ElementDto::Scalar("1/3".into());
        assert!(matches!(
            certificate_from_dto(&dto),
            Err(CodecError::Integrity(_))
        ));
    }

    #[test]
    fn malformed_documents_are_rejected() {
        // Unknown field descriptor.
        let mut dto = algebra_to_dto(&scalar_algebra(&Field::rationals()));
        dto.field = "R".into();
        assert!(algebra_from_dto(&dto).is_err());

        // Dimension mismatch.
        let mut dto = algebra_to_dto(&scalar_algebra(&Field::rationals()));
        dto.dim = 2;
        assert!(matches!(
            algebra_from_dto(&dto),
            Err(CodecError::Malformed { .. })
        ));

        // A base without an action is meaningless.
        let field = Field::rationals();
        let algebra = quaternion_algebra(&field, &field.integer(-1), &field.integer(-1)).unwrap();
        let basis = SubalgebraBasis::new(&algebra, vec![algebra.unit_coords().to_vec()]).unwrap();
        let input = extension_input(None, None, &algebra, None, Some(&basis));
        assert!(matches!(
            extension_from_input(&input),
            Err(CodecError::Malformed { .. })
        ));

        // Garbled fraction.
        assert!(element_from_dto(&field, &ElementDto::Scalar("1/0x".into())).is_err());
    }

    #[test]
    fn function_algebra_inputs_round_trip() {
        let field = Field::prime(2).unwrap();
        let scalars = scalar_algebra(&field);
        let group = GroupSpec::parse("Z2").unwrap();
        let algebra = function_algebra(&scalars, &group).unwrap();
        let dto = algebra_to_dto(&algebra);
        assert_eq!(dto.field, "Fp:2");
        let rebuilt = algebra_from_dto(&dto).unwrap();
        assert_eq!(*rebuilt, *algebra);
    }

    #[test]
    fn ramification_serialization_is_sorted() {
        let class = crate::brauer::quaternion_class(-1, -1).unwrap();
        let dto = class_to_dto(&class);
        assert_eq!(dto.ramified, vec!["2", "inf"]);
        assert!(!dto.split);
        let json = serde_json::to_string(&dto).unwrap();
        assert_eq!(json, r#"{"ramified":["2","inf"],"split":false}"#);
    }
}

//! Presentation types and text rendering for the command-line front end.
//!
//! JSON output serializes these types directly; text output goes through the
//! `render_*` functions. Struct field order is fixed and all collections are
//! emitted in sorted or construction order, so JSON output is byte-stable.

use galoisazu_core::codec::{
    CertificateDto, CertificateSummaryDto, CheckDto, FrobeniusDto, RMatrixDto, RamificationDto,
};
use serde::{Deserialize, Serialize};

/// A Hilbert symbol evaluated at one place.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PlaceSymbolDto {
    pub place: String,
    pub symbol: i8,
}

/// Hilbert symbols of a parameter pair across every place that could ramify.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HilbertTableDto {
    pub a: String,
    pub b: String,
    pub symbols: Vec<PlaceSymbolDto>,
}

/// Result of certifying the tensor product of two bundled extensions.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TensorDto {
    pub left: String,
    pub right: String,
    pub dim: usize,
    pub summary: CertificateSummaryDto,
    pub centre_dimension: usize,
}

/// The two-step tower obtained by passing to the fixed ring of a subgroup.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TowerDto {
    pub fixture: String,
    pub subgroup_generators: Vec<Vec<u64>>,
    pub subgroup_order: u64,
    pub intermediate_dimension: usize,
    pub quotient_group: String,
    pub upper: CertificateSummaryDto,
    pub lower: CertificateSummaryDto,
    pub centralizer_dimension: usize,
    pub centralizer_equals_intermediate: bool,
}

/// Result of transporting an extension along a field embedding.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BaseChangeDto {
    pub fixture: String,
    pub source_field: String,
    pub target_field: String,
    pub source: CertificateSummaryDto,
    pub target: CertificateSummaryDto,
    pub eta_preserved: bool,
}

/// A named quantity observed while producing a report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ObservationDto {
    pub name: String,
    pub value: String,
}

/// Full machine-checked report for one input: every condition that was
/// evaluated, observed quantities, and timing.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportDto {
    pub tool: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixture: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input_path: Option<String>,
    pub field: String,
    pub algebra_dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    pub checks: Vec<CheckDto>,
    pub observations: Vec<ObservationDto>,
    pub elapsed_ms: u128,
}

impl ReportDto {
    /// True when every evaluated check passed.
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// One entry in the bundled fixture listing.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FixtureEntryDto {
    pub name: String,
    pub description: String,
}

fn push_check_lines(out: &mut String, checks: &[CheckDto]) {
    for check in checks {
        let mark = if check.pass { "pass" } else { "FAIL" };
        out.push_str(&format!("  [{mark}] {}\n", check.name));
        if let Some(witness) = &check.witness {
            out.push_str(&format!("         {witness}\n"));
        }
    }
}

/// Renders a report as a plain-text table.
pub fn render_report(report: &ReportDto) -> String {
    let mut out = String::new();
    out.push_str(&format!("{}\n", report.tool));
    if let Some(fixture) = &report.fixture {
        out.push_str(&format!("fixture: {fixture}\n"));
    }
    if let Some(path) = &report.input_path {
        out.push_str(&format!("input: {path}\n"));
    }
    out.push_str(&format!(
        "field: {}   dimension: {}",
        report.field, report.algebra_dim
    ));
    if let Some(group) = &report.group {
        out.push_str(&format!("   group: {group}"));
    }
    out.push_str("\n\nchecks\n");
    push_check_lines(&mut out, &report.checks);
    if !report.observations.is_empty() {
        out.push_str("\nobservations\n");
        for obs in &report.observations {
            out.push_str(&format!("  {}: {}\n", obs.name, obs.value));
        }
    }
    let passed = report.checks.iter().filter(|c| c.pass).count();
    out.push_str(&format!("\nelapsed: {} ms\n", report.elapsed_ms));
    out.push_str(&format!(
        "result: {} ({passed}/{} checks passed)\n",
        if report.all_pass() { "PASS" } else { "FAIL" },
        report.checks.len()
    ));
    out
}

/// Renders a certificate as a plain-text summary.
pub fn render_certificate(cert: &CertificateDto) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "group: {}   order: {}   module rank: {}\n",
        cert.group, cert.group_order, cert.module_rank
    ));
    out.push_str(&format!(
        "flags: strict={} centralizing={} central={} invariants-match-base={} trace-into-base={}\n",
        cert.flags.strict,
        cert.flags.centralizing,
        cert.flags.central,
        cert.flags.invariants_match_base,
        cert.flags.trace_into_base
    ));
    out.push_str("\nchecks\n");
    push_check_lines(&mut out, &cert.checks);
    if !cert.notes.is_empty() {
        out.push_str("\nnotes\n");
        for note in &cert.notes {
            out.push_str(&format!("  {note}\n"));
        }
    }
    out
}

/// Renders a normalized-pairing analysis as plain text.
pub fn render_frobenius(dto: &FrobeniusDto) -> String {
    let mut out = String::new();
    out.push_str(&format!("dual basis pairs: {}\n", dto.dual_bases.len()));
    if let Some(nakayama) = &dto.nakayama {
        out.push_str(&format!(
            "nakayama automorphism: {}\n",
            if nakayama.is_identity {
                "identity"
            } else {
                "non-identity"
            }
        ));
    }
    if let Some(symmetry) = &dto.symmetry {
        out.push_str(&format!(
            "trace form symmetric: {}\nnakayama inner: {}\n",
            symmetry.trace_symmetric, symmetry.nakayama_inner
        ));
    }
    out.push_str(&format!(
        "separable over base: {}\n",
        dto.separability.separable_over_base
    ));
    if let Some(azumaya) = dto.separability.azumaya_over_ground {
        out.push_str(&format!("azumaya over ground field: {azumaya}\n"));
    }
    out
}

/// Renders an exchange-operator analysis as plain text.
pub fn render_rmatrix(dto: &RMatrixDto) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "operator on a space of dimension {}\n",
        dto.space_dim
    ));
    out.push_str(&format!(
        "fundamental system holds: {}\nyang-baxter holds: {}\n",
        dto.fs_holds, dto.yang_baxter_holds
    ));
    out.push_str(&format!(
        "operator rank: {}/{}   invertible: {}\n",
        dto.operator_rank, dto.space_dim, dto.operator_invertible
    ));
    if dto.blocks.is_some() {
        out.push_str("block decomposition: 4 invariant subspaces of dimension 4\n");
    }
    if let Some(braid) = &dto.braid {
        out.push_str(&format!(
            "braid representation on {} strands (space dimension {}): relations hold: {}, distant generators commute: {}\n",
            braid.strands, braid.space_dim, braid.braid_relations_hold, braid.distant_generators_commute
        ));
    }
    out
}

/// Renders the Hilbert-symbol table for a parameter pair.
pub fn render_hilbert_table(table: &HilbertTableDto) -> String {
    let mut out = String::new();
    out.push_str(&format!("(a, b) = ({}, {})\n", table.a, table.b));
    for entry in &table.symbols {
        out.push_str(&format!("  {:>4}  {:+}\n", entry.place, entry.symbol));
    }
    let product: i64 = table.symbols.iter().map(|e| e.symbol as i64).product();
    out.push_str(&format!("  product over all places: {product:+}\n"));
    out
}

/// Renders a ramification descriptor in one line.
pub fn render_ramification(dto: &RamificationDto) -> String {
    if dto.split {
        "trivial class (split at every place)\n".to_string()
    } else {
        format!("ramified at {}\n", dto.ramified.join(", "))
    }
}

/// Renders the bundled fixture listing.
pub fn render_fixture_list(entries: &[FixtureEntryDto]) -> String {
    let width = entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for entry in entries {
        out.push_str(&format!(
            "{:width$}  {}\n",
            entry.name,
            entry.description,
            width = width
        ));
    }
    out
}

/// Renders a tensor-product certification summary.
pub fn render_tensor(dto: &TensorDto) -> String {
    format!(
        "tensor product {} (x) {}\ndimension: {}   group: {}   module rank: {}\ncentre dimension: {}\n",
        dto.left, dto.right, dto.dim, dto.summary.group, dto.summary.module_rank, dto.centre_dimension
    )
}

/// Renders a fixed-ring tower summary.
pub fn render_tower(dto: &TowerDto) -> String {
    format!(
        "fixture: {}\nsubgroup order: {}   intermediate dimension: {}\nupper step: {}-extension of the intermediate ring\nlower step: {}-extension of the ground field\ncentralizer dimension: {}   centralizer equals intermediate: {}\n",
        dto.fixture,
        dto.subgroup_order,
        dto.intermediate_dimension,
        dto.upper.group,
        dto.lower.group,
        dto.centralizer_dimension,
        dto.centralizer_equals_intermediate
    )
}

/// Renders a base-change summary.
pub fn render_base_change(dto: &BaseChangeDto) -> String {
    format!(
        "fixture: {}\nbase change: {} -> {}\nsource group: {}   target group: {}\ngalois basis preserved under the embedding: {}\n",
        dto.fixture,
        dto.source_field,
        dto.target_field,
        dto.source.group,
        dto.target.group,
        dto.eta_preserved
    )
}

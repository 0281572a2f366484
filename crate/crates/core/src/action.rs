//! Finite abelian groups acting on algebras by verified automorphisms.
//!
//! Groups are products of cyclic factors `Z/n₁ × … × Z/n_r`, written
//! multiplicatively in the mathematics but stored additively as coordinate
//! vectors. An [`AlgebraAction`] assigns to each cyclic generator an exact
//! matrix on the algebra basis; construction verifies that every generator
//! matrix is a unital algebra automorphism of the correct order and that the
//! generators commute, then precomputes the matrix of every group element.
//!
//! The module also ships the concrete actions used by the rest of the
//! crate: sign actions on quaternion algebras, root-of-unity scalings on
//! symbol algebras, and translation actions on function algebras.
//!
//! # Example
//!
//! ```
//! use galoisazu_core::action::{quaternion_sign_action, GroupSpec};
//! use galoisazu_core::algebra::{quaternion_algebra, AlgElement};
//! use galoisazu_core::field::Field;
//!
//! let q = Field::rationals();
//! let h = quaternion_algebra(&q, &q.integer(-1), &q.integer(-1)).unwrap();
//! let action = quaternion_sign_action(&h).unwrap();
//! let alpha = action.group().element(&[1, 0]).unwrap();
//! let j = AlgElement::basis(&h, 2);
//! assert_eq!(action.apply(&alpha, &j), -&j);
//! ```

use crate::algebra::{
    function_algebra, opposite_algebra, quaternion_parameters, tensor_product, AlgElement, Algebra,
    AlgebraError, SubalgebraBasis,
};
use crate::field::FieldElement;
use crate::linalg::Mat;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Cap on the group order, keeping precomputed matrix families small.
pub const GROUP_ORDER_CAP: u64 = 4096;

/// Errors from group construction and action verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    /// A cyclic factor smaller than 2.
    #[error("cyclic factor must be at least 2, got {value}")]
    InvalidFactor { value: u64 },
    /// The group order exceeds the cap.
    #[error("group order {order} exceeds the cap {cap}")]
    GroupOrderCap { order: u64, cap: u64 },
    /// Malformed element coordinates.
    #[error("bad group element coordinates: {0}")]
    BadCoordinates(String),
    /// Unparseable group text.
    #[error("cannot parse group {text:?}: {reason}")]
    Parse { text: String, reason: String },
    /// Wrong number of generator matrices.
    #[error("expected {expected} generator matrices, got {got}")]
    GeneratorCount { expected: usize, got: usize },
    /// A generator matrix with the wrong shape.
    #[error("generator matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    /// Generator entries use a different field than the algebra.
    #[error("generator matrices must be over the algebra's field")]
    FieldMismatch,
    /// A generator does not fix the unit.
    #[error("generator {generator} moves the unit")]
    UnitMoved { generator: usize },
    /// A generator is not multiplicative on a basis pair.
    #[error("generator {generator} is not multiplicative at basis pair ({i}, {j})")]
    NotMultiplicative {
        generator: usize,
        i: usize,
        j: usize,
    },
    /// A generator whose matrix order does not divide its cyclic order.
    #[error("generator {generator} does not have order dividing its cyclic factor")]
    WrongOrder { generator: usize },
    /// Two generator matrices that fail to commute.
    #[error("generators {first} and {second} do not commute")]
    NotCommuting { first: usize, second: usize },
    /// The subgroup is not a sub-product of the cyclic factors.
    #[error("subgroup is not a direct factor cut out by a subset of the cyclic coordinates")]
    NotCoordinateFactor,
    /// An underlying algebra failure.
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

// ---------------------------------------------------------------------------
// Groups
// ---------------------------------------------------------------------------

/// A finite abelian group presented as `Z/n₁ × … × Z/n_r`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupSpec {
    factors: Vec<u64>,
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("Z1");
        }
        let parts: Vec<String> = self.factors.iter().map(|n| format!("Z{n}")).collect();
        f.write_str(&parts.join("x"))
    }
}

impl GroupSpec {
    /// A product of cyclic groups with the given factor sizes (each ≥ 2).
    pub fn new(factors: Vec<u64>) -> Result<GroupSpec, ActionError> {
        let mut order: u64 = 1;
        for &n in &factors {
            if n < 2 {
                return Err(ActionError::InvalidFactor { value: n });
            }
            order = order.saturating_mul(n);
            if order > GROUP_ORDER_CAP {
                return Err(ActionError::GroupOrderCap {
                    order,
                    cap: GROUP_ORDER_CAP,
                });
            }
        }
        Ok(GroupSpec { factors })
    }

    /// The trivial group.
    pub fn trivial() -> GroupSpec {
        GroupSpec {
            factors: Vec::new(),
        }
    }

    /// Parses text like `"Z2xZ2"` or `"Z6"`; `"Z1"` denotes the trivial
    /// group.
    pub fn parse(text: &str) -> Result<GroupSpec, ActionError> {
        let trimmed = text.trim();
        if trimmed.eq_ignore_ascii_case("Z1") {
            return Ok(GroupSpec::trivial());
        }
        let mut factors = Vec::new();
        for token in trimmed.split(['x', 'X']) {
            let token = token.trim();
            let digits = token
                .strip_prefix('Z')
                .or_else(|| token.strip_prefix('z'))
                .ok_or_else(|| ActionError::Parse {
                    text: text.into(),
                    reason: format!("token {token:?} must look like Z<n>"),
                })?;
            let n: u64 = digits.parse().map_err(|_| ActionError::Parse {
                text: text.into(),
                reason: format!("cannot read cyclic order from {token:?}"),
            })?;
            factors.push(n);
        }
        GroupSpec::new(factors)
    }

    /// Cyclic factor sizes.
    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    /// Number of cyclic factors (= number of generators).
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Group order.
    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    /// True iff this is the trivial group.
    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// The identity element.
    pub fn identity(&self) -> GroupElement {
        GroupElement {
            coords: vec![0; self.factors.len()],
        }
    }

    /// Builds an element from coordinates, checking ranges.
    pub fn element(&self, coords: &[u64]) -> Result<GroupElement, ActionError> {
        if coords.len() != self.factors.len() {
            return Err(ActionError::BadCoordinates(format!(
                "expected {} coordinates, got {}",
                self.factors.len(),
                coords.len()
            )));
        }
        for (i, (&c, &n)) in coords.iter().zip(self.factors.iter()).enumerate() {
            if c >= n {
                return Err(ActionError::BadCoordinates(format!(
                    "coordinate {i} is {c}, must be below {n}"
                )));
            }
        }
        Ok(GroupElement {
            coords: coords.to_vec(),
        })
    }

    /// All elements in lexicographic order (last coordinate varies
    /// fastest); `index_of` inverts this enumeration.
    pub fn elements(&self) -> Vec<GroupElement> {
        let order = self.order() as usize;
        (0..order).map(|i| self.element_at(i)).collect()
    }

    /// The element at a given enumeration index.
    pub fn element_at(&self, index: usize) -> GroupElement {
        let mut coords = vec![0u64; self.factors.len()];
        let mut rest = index as u64;
        for i in (0..self.factors.len()).rev() {
            coords[i] = rest % self.factors[i];
            rest /= self.factors[i];
        }
        debug_assert_eq!(rest, 0, "index out of range");
        GroupElement { coords }
    }

    /// The enumeration index of an element.
    pub fn index_of(&self, g: &GroupElement) -> usize {
        let mut index = 0u64;
        for (&c, &n) in g.coords.iter().zip(self.factors.iter()) {
            index = index * n + c;
        }
        index as usize
    }

    /// Componentwise sum.
    pub fn compose(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let coords = a
            .coords
            .iter()
            .zip(b.coords.iter())
            .zip(self.factors.iter())
            .map(|((&x, &y), &n)| (x + y) % n)
            .collect();
        GroupElement { coords }
    }

    /// Componentwise negation.
    pub fn inverse(&self, g: &GroupElement) -> GroupElement {
        let coords = g
            .coords
            .iter()
            .zip(self.factors.iter())
            .map(|(&c, &n)| (n - c) % n)
            .collect();
        GroupElement { coords }
    }

    /// The order of an element (least common multiple of coordinate
    /// orders).
    pub fn element_order(&self, g: &GroupElement) -> u64 {
        g.coords
            .iter()
            .zip(self.factors.iter())
            .map(|(&c, &n)| n / gcd(n, c))
            .fold(1, lcm)
    }

    /// The generator of the `i`-th cyclic factor.
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut coords = vec![0u64; self.factors.len()];
        coords[i] = 1;
        GroupElement { coords }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        a.max(b).max(1)
    } else {
        a / gcd(a, b) * b
    }
}

/// An element of a [`GroupSpec`], as coordinates in the cyclic factors.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GroupElement {
    coords: Vec<u64>,
}

impl GroupElement {
    /// Coordinates in the cyclic factors.
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    /// True iff all coordinates vanish.
    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

// ---------------------------------------------------------------------------
// Subgroups
// ---------------------------------------------------------------------------

/// A subgroup given by generators, with closure computed eagerly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subgroup {
    group: GroupSpec,
    elements: Vec<GroupElement>,
}

impl Subgroup {
    /// The subgroup generated by the given elements.
    pub fn generated_by(
        group: &GroupSpec,
        generators: &[GroupElement],
    ) -> Result<Subgroup, ActionError> {
        for g in generators {
            // Range-check by rebuilding through the group.
            group.element(g.coords())?;
        }
        let mut closure: BTreeSet<GroupElement> = BTreeSet::new();
        closure.insert(group.identity());
        let mut frontier: Vec<GroupElement> = vec![group.identity()];
        while let Some(current) = frontier.pop() {
            for g in generators {
                let next = group.compose(&current, g);
                if closure.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        Ok(Subgroup {
            group: group.clone(),
            elements: closure.into_iter().collect(),
        })
    }

    /// The ambient group.
    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    /// The subgroup's elements in sorted order.
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    /// Subgroup order.
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    /// Whether the subgroup is exactly the sub-product over a subset of the
    /// cyclic coordinates; returns those coordinate indices if so.
    ///
    /// Such subgroups are the ones whose quotient is again a product of the
    /// remaining cyclic factors, which is what the fixed-ring tower
    /// constructions need.
    pub fn as_coordinate_factor(&self) -> Option<Vec<usize>> {
        let rank = self.group.rank();
        let mut support = vec![false; rank];
        for g in &self.elements {
            for (i, &c) in g.coords().iter().enumerate() {
                if c != 0 {
                    support[i] = true;
                }
            }
        }
        let indices: Vec<usize> = (0..rank).filter(|&i| support[i]).collect();
        let full_order: u64 = indices.iter().map(|&i| self.group.factors()[i]).product();
        if full_order == self.order() {
            Some(indices)
        } else {
            None
        }
    }

    /// Coordinate indices not in [`Self::as_coordinate_factor`], when that
    /// applies.
    pub fn complement_coordinates(&self) -> Option<Vec<usize>> {
        let inside = self.as_coordinate_factor()?;
        Some(
            (0..self.group.rank())
                .filter(|i| !inside.contains(i))
                .collect(),
        )
    }
}

// ---------------------------------------------------------------------------
// Actions
// ---------------------------------------------------------------------------

/// A verified action of a [`GroupSpec`] on an [`Algebra`] by algebra
/// automorphisms.
///
/// Construction checks, exactly and exhaustively over the basis, that each
/// generator matrix fixes the unit, is multiplicative, has order dividing
/// its cyclic factor, and commutes with the other generators. The matrix of
/// every group element is precomputed.
#[derive(Clone)]
pub struct AlgebraAction {
    group: GroupSpec,
    algebra: Arc<Algebra>,
    generator_matrices: Vec<Mat>,
    element_matrices: Vec<Mat>,
}

impl fmt::Debug for AlgebraAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraAction({} on {:?})", self.group, self.algebra)
    }
}

impl AlgebraAction {
    /// Verifies generator matrices and assembles the action.
    pub fn new(
        group: GroupSpec,
        algebra: &Arc<Algebra>,
        generator_matrices: Vec<Mat>,
    ) -> Result<AlgebraAction, ActionError> {
        let dim = algebra.dim();
        if generator_matrices.len() != group.rank() {
            return Err(ActionError::GeneratorCount {
                expected: group.rank(),
                got: generator_matrices.len(),
            });
        }
        for (g, m) in generator_matrices.iter().enumerate() {
            if m.rows() != dim || m.cols() != dim {
                return Err(ActionError::ShapeMismatch(format!(
                    "generator {g} is {}×{}, algebra dimension is {dim}",
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != algebra.field() {
                return Err(ActionError::FieldMismatch);
            }
        }
        // Unit preservation and multiplicativity.
        for (g, m) in generator_matrices.iter().enumerate() {
            let unit_image = m.mul_vec(algebra.unit_coords());
            if unit_image != algebra.unit_coords() {
                return Err(ActionError::UnitMoved { generator: g });
            }
            let columns: Vec<Vec<FieldElement>> = (0..dim).map(|c| m.column(c)).collect();
            for i in 0..dim {
                for j in 0..dim {
                    let lhs = m.mul_vec(algebra.basis_product(i, j));
                    let rhs = algebra.mul_coords(&columns[i], &columns[j]);
                    if lhs != rhs {
                        return Err(ActionError::NotMultiplicative { generator: g, i, j });
                    }
                }
            }
        }
        // Orders: m^{n_g} must be the identity (this also forces
        // invertibility, hence the maps are automorphisms).
        let identity = Mat::identity(algebra.field(), dim);
        let mut generator_powers: Vec<Vec<Mat>> = Vec::with_capacity(group.rank());
        for (g, m) in generator_matrices.iter().enumerate() {
            let n = group.factors()[g] as usize;
            let mut powers = Vec::with_capacity(n);
            powers.push(identity.clone());
            for k in 1..n {
                let next = powers[k - 1].mul(m).expect("square matrices");
                powers.push(next);
            }
            let full = powers[n - 1].mul(m).expect("square matrices");
            if !full.is_identity() {
                return Err(ActionError::WrongOrder { generator: g });
            }
            generator_powers.push(powers);
        }
        // Commutativity.
        for a in 0..generator_matrices.len() {
            for b in (a + 1)..generator_matrices.len() {
                let ab = generator_matrices[a]
                    .mul(&generator_matrices[b])
                    .expect("square matrices");
                let ba = generator_matrices[b]
                    .mul(&generator_matrices[a])
                    .expect("square matrices");
                if ab != ba {
                    return Err(ActionError::NotCommuting {
                        first: a,
                        second: b,
                    });
                }
            }
        }
        // Element matrices, in enumeration order.
        let mut element_matrices = Vec::with_capacity(group.order() as usize);
        for g in group.elements() {
            let mut m = identity.clone();
            for (i, &c) in g.coords().iter().enumerate() {
                if c != 0 {
                    m = m
                        .mul(&generator_powers[i][c as usize])
                        .expect("square matrices");
                }
            }
            element_matrices.push(m);
        }
        Ok(AlgebraAction {
            group,
            algebra: Arc::clone(algebra),
            generator_matrices,
            element_matrices,
        })
    }

    /// The acting group.
    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    /// The algebra acted upon.
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    /// The verified generator matrices.
    pub fn generator_matrices(&self) -> &[Mat] {
        &self.generator_matrices
    }

    /// The matrix of a group element.
    pub fn matrix_of(&self, g: &GroupElement) -> &Mat {
        &self.element_matrices[self.group.index_of(g)]
    }

    /// The matrix of the element at an enumeration index.
    pub fn matrix_at(&self, index: usize) -> &Mat {
        &self.element_matrices[index]
    }

    /// Applies a group element to a coordinate vector.
    pub fn apply_coords(&self, g: &GroupElement, coords: &[FieldElement]) -> Vec<FieldElement> {
        self.matrix_of(g).mul_vec(coords)
    }

    /// Applies a group element to an algebra element.
    pub fn apply(&self, g: &GroupElement, x: &AlgElement) -> AlgElement {
        AlgElement::from_coords(&self.algebra, self.apply_coords(g, x.coords()))
    }

    /// The fixed subalgebra `{s : g(s) = s for all g}`, as a verified
    /// subalgebra basis.
    pub fn invariants(&self) -> SubalgebraBasis {
        let field = self.algebra.field().clone();
        let dim = self.algebra.dim();
        let identity = Mat::identity(&field, dim);
        let mut stacked = Mat::zeros(&field, 0, dim);
        for m in &self.generator_matrices {
            let diff = m.sub(&identity).expect("square matrices");
            stacked = stacked.vstack(&diff).expect("column counts agree");
        }
        let span = stacked.kernel_basis();
        SubalgebraBasis::new(&self.algebra, span)
            .expect("fixed points of automorphisms form a unital subalgebra")
    }

    /// The same action viewed on the opposite algebra (automorphisms of `A`
    /// are automorphisms of `A^op`); fully re-verified.
    pub fn opposite(&self) -> Result<AlgebraAction, ActionError> {
        let op = opposite_algebra(&self.algebra);
        AlgebraAction::new(self.group.clone(), &op, self.generator_matrices.clone())
    }

    /// Restricts the action to the sub-product of the given cyclic
    /// coordinates, producing an action of that smaller group on the same
    /// algebra; fully re-verified.
    pub fn restrict_to_coordinates(
        &self,
        coordinates: &[usize],
    ) -> Result<AlgebraAction, ActionError> {
        let factors: Vec<u64> = coordinates
            .iter()
            .map(|&i| self.group.factors()[i])
            .collect();
        let sub_spec = GroupSpec::new(factors)?;
        let matrices: Vec<Mat> = coordinates
            .iter()
            .map(|&i| self.generator_matrices[i].clone())
            .collect();
        AlgebraAction::new(sub_spec, &self.algebra, matrices)
    }
}

/// The product action of `G × G'` on `A ⊗ B`: generators of `G` act as
/// `φ ⊗ id`, generators of `G'` as `id ⊗ φ'`.
pub fn tensor_action(
    left: &AlgebraAction,
    right: &AlgebraAction,
) -> Result<AlgebraAction, ActionError> {
    let algebra = tensor_product(left.algebra(), right.algebra())?;
    let field = algebra.field().clone();
    let dim_l = left.algebra().dim();
    let dim_r = right.algebra().dim();
    let id_l = Mat::identity(&field, dim_l);
    let id_r = Mat::identity(&field, dim_r);
    let mut factors = left.group().factors().to_vec();
    factors.extend_from_slice(right.group().factors());
    let spec = GroupSpec::new(factors)?;
    let mut matrices = Vec::with_capacity(spec.rank());
    for m in left.generator_matrices() {
        matrices.push(m.kronecker(&id_r));
    }
    for m in right.generator_matrices() {
        matrices.push(id_l.kronecker(m));
    }
    AlgebraAction::new(spec, &algebra, matrices)
}

/// The sign action of `Z/2 × Z/2` on a quaternion algebra `(a,b)_F`: the
/// first generator fixes `i` and negates `j, k`; the second negates `i, k`
/// and fixes `j`.
pub fn quaternion_sign_action(algebra: &Arc<Algebra>) -> Result<AlgebraAction, ActionError> {
    quaternion_parameters(algebra)?;
    let field = algebra.field().clone();
    let one = field.one();
    let minus = -&one;
    let alpha = Mat::diagonal(
        &field,
        &[one.clone(), one.clone(), minus.clone(), minus.clone()],
    );
    let beta = Mat::diagonal(&field, &[one.clone(), minus.clone(), one, minus]);
    let spec = GroupSpec::new(vec![2, 2])?;
    AlgebraAction::new(spec, algebra, vec![alpha, beta])
}

/// The scaling action of `Z/n × Z/n` on a symbol algebra `(a,b,ζ)_F`:
/// `(i,j)` sends `x^k u^l` to `ζ^{il + jk} x^k u^l`.
pub fn symbol_root_action(
    algebra: &Arc<Algebra>,
    n: u64,
    zeta: &FieldElement,
) -> Result<AlgebraAction, ActionError> {
    let dim = algebra.dim();
    let nn = n as usize;
    if nn * nn != dim {
        return Err(ActionError::ShapeMismatch(format!(
            "algebra dimension {dim} is not n² for n = {n}"
        )));
    }
    let field = algebra.field().clone();
    // Generator (1,0): x^k u^l ↦ ζ^l x^k u^l; generator (0,1): ↦ ζ^k.
    let first: Vec<FieldElement> = (0..dim).map(|idx| zeta.pow((idx % nn) as u128)).collect();
    let second: Vec<FieldElement> = (0..dim).map(|idx| zeta.pow((idx / nn) as u128)).collect();
    let spec = GroupSpec::new(vec![n, n])?;
    AlgebraAction::new(
        spec,
        algebra,
        vec![
            Mat::diagonal(&field, &first),
            Mat::diagonal(&field, &second),
        ],
    )
}

/// The translation action of `G` on the function algebra `S(G)`:
/// `g` sends `s δ_h` to `s δ_{h g⁻¹}`.
pub fn translation_action(
    scalars: &Arc<Algebra>,
    group: &GroupSpec,
) -> Result<AlgebraAction, ActionError> {
    let algebra = function_algebra(scalars, group)?;
    let field = algebra.field().clone();
    let dim_s = scalars.dim();
    let elements = group.elements();
    let mut matrices = Vec::with_capacity(group.rank());
    for gi in 0..group.rank() {
        let generator = group.generator(gi);
        let inv = group.inverse(&generator);
        let mut m = Mat::zeros(&field, algebra.dim(), algebra.dim());
        for (hi, h) in elements.iter().enumerate() {
            let target = group.index_of(&group.compose(h, &inv));
            for s in 0..dim_s {
                m.set(target * dim_s + s, hi * dim_s + s, field.one());
            }
        }
        matrices.push(m);
    }
    AlgebraAction::new(group.clone(), &algebra, matrices)
}

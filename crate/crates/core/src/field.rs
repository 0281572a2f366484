//! Exact coefficient fields: ℚ, 𝔽_p, 𝔽_p[X]/(f) and cyclotomic fields ℚ(ζ_n).
//!
//! Every element carries a unique canonical representative, so equality is
//! syntactic:
//!
//! * rationals are stored fully reduced with a positive denominator;
//! * elements of 𝔽_p are residues in `0..p`;
//! * elements of 𝔽_p[X]/(f) and ℚ(ζ_n) are coefficient vectors of length
//!   exactly `deg f` (resp. `φ(n)`) with reduced entries.
//!
//! Field *handles* ([`Field`]) are cheap to clone and compare; elements hold a
//! handle to their field, and mixing elements of different fields is a
//! programming error that panics with a descriptive message.
//!
//! The canonical element order used by deterministic searches (for instance
//! [`Field::element_of_order`]) compares coefficient vectors from the leading
//! coefficient downwards; on prime fields this is the numeric order of the
//! residues `0 < 1 < … < p−1`.
//!
//! # Example
//!
//! ```
//! use galoisazu_core::field::Field;
//!
//! let f7 = Field::prime(7).unwrap();
//! let zeta = f7.element_of_order(3).unwrap();
//! assert_eq!(zeta, f7.integer(2)); // 2³ = 8 ≡ 1 (mod 7), 2 ≠ 1
//!
//! let q = Field::rationals();
//! let half = q.scalar_from_str("1/2").unwrap();
//! assert_eq!((&half + &half), q.one());
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Largest admissible prime characteristic.
pub const MAX_PRIME: u64 = 1_000_000;
/// Largest admissible degree for 𝔽_p[X]/(f).
pub const MAX_EXTENSION_DEGREE: usize = 12;
/// Largest admissible cyclotomic order n for ℚ(ζ_n).
pub const MAX_CYCLOTOMIC_ORDER: u64 = 24;
/// Cap on exhaustive element enumerations (root searches, order searches).
pub const ENUMERATION_CAP: u128 = 2_000_000;
/// Cap on exhaustive trial-divisor enumerations in irreducibility checks.
const TRIAL_DIVISOR_CAP: u128 = 200_000;

/// Errors produced by field construction and element-level operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    /// The requested characteristic is not a prime number.
    #[error("{0} is not prime")]
    NotPrime(u64),
    /// The requested prime exceeds the supported range.
    #[error("prime {0} exceeds the cap {MAX_PRIME}")]
    PrimeTooLarge(u64),
    /// A defining polynomial was rejected.
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    /// Too many coefficients for the field degree.
    #[error("{got} coefficients supplied for a degree-{expected} field")]
    CoefficientCount { got: usize, expected: usize },
    /// The defining polynomial factors over the prime field.
    #[error("modulus is reducible over F_{0}")]
    ReducibleModulus(u64),
    /// Extension degree outside the supported range.
    #[error("extension degree {0} outside supported range 2..={MAX_EXTENSION_DEGREE}")]
    DegreeOutOfRange(usize),
    /// Cyclotomic order outside the supported range.
    #[error("cyclotomic order {0} outside supported range 1..={MAX_CYCLOTOMIC_ORDER}")]
    CyclotomicOrderOutOfRange(u64),
    /// Attempt to invert zero or divide by zero.
    #[error("division by zero")]
    DivisionByZero,
    /// The field contains no element of the requested multiplicative order.
    #[error("no element of multiplicative order {0} in {1}")]
    NoSuchRoot(u64, String),
    /// An exhaustive search would exceed the enumeration cap.
    #[error("search over {candidates} candidates exceeds the enumeration cap {ENUMERATION_CAP}")]
    EnumerationCap { candidates: u128 },
    /// Malformed textual input.
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    /// No supported embedding between the given fields.
    #[error("no supported embedding of {0} into {1}")]
    UnsupportedEmbedding(String, String),
}

fn parse_err(input: &str, reason: impl Into<String>) -> FieldError {
    FieldError::Parse {
        input: input.to_string(),
        reason: reason.into(),
    }
}

// ---------------------------------------------------------------------------
// Field handles
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum FieldKind {
    /// The rational numbers ℚ.
    Rationals,
    /// The prime field 𝔽_p.
    Prime { p: u64 },
    /// 𝔽_p[X]/(f) for monic irreducible f; `modulus` lists coefficients of f
    /// in ascending degree, with `modulus.len() = deg f + 1`.
    Extension { p: u64, modulus: Vec<u64> },
    /// ℚ(ζ_n) presented as ℚ[X]/(Φ_n); `modulus` lists Φ_n ascending.
    Cyclotomic {
        order: u64,
        modulus: Vec<BigRational>,
    },
}

/// A shared, immutable handle to an exact field.
///
/// Handles are reference counted: cloning is O(1) and equality first tries
/// pointer identity, then structural comparison.
#[derive(Clone)]
pub struct Field {
    inner: Arc<FieldKind>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.descriptor())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

impl Field {
    /// The field ℚ of rational numbers.
    pub fn rationals() -> Field {
        Field {
            inner: Arc::new(FieldKind::Rationals),
        }
    }

    /// The prime field 𝔽_p.
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        if p > MAX_PRIME {
            return Err(FieldError::PrimeTooLarge(p));
        }
        if !is_prime_u64(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Field {
            inner: Arc::new(FieldKind::Prime { p }),
        })
    }

    /// The field 𝔽_p[X]/(f), where `modulus` lists the coefficients of f in
    /// ascending degree (constant term first).
    ///
    /// The modulus must be monic of degree 2..=12 and irreducible over 𝔽_p;
    /// irreducibility is decided exactly at construction (trial division when
    /// the divisor count is small, a Frobenius/gcd factor-degree criterion
    /// otherwise — both complete).
    pub fn extension(p: u64, modulus: &[i64]) -> Result<Field, FieldError> {
        let _ = Field::prime(p)?; // validates primality and range
        let mut coeffs: Vec<u64> = modulus
            .iter()
            .map(|&c| (((c % p as i64) + p as i64) % p as i64) as u64)
            .collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.len() < 2 {
            return Err(FieldError::InvalidModulus(
                "modulus must have positive degree".into(),
            ));
        }
        let degree = coeffs.len() - 1;
        if !(2..=MAX_EXTENSION_DEGREE).contains(&degree) {
            return Err(FieldError::DegreeOutOfRange(degree));
        }
        if coeffs[degree] != 1 {
            return Err(FieldError::InvalidModulus("modulus must be monic".into()));
        }
        if !fp_poly_is_irreducible(p, &coeffs) {
            return Err(FieldError::ReducibleModulus(p));
        }
        Ok(Field {
            inner: Arc::new(FieldKind::Extension { p, modulus: coeffs }),
        })
    }

    /// The cyclotomic field ℚ(ζ_n) = ℚ[X]/(Φ_n), for 1 ≤ n ≤ 24.
    ///
    /// For n ≤ 2 the cyclotomic field is ℚ itself and the plain rational
    /// field handle is returned.
    pub fn cyclotomic(order: u64) -> Result<Field, FieldError> {
        if order == 0 || order > MAX_CYCLOTOMIC_ORDER {
            return Err(FieldError::CyclotomicOrderOutOfRange(order));
        }
        if order <= 2 {
            return Ok(Field::rationals());
        }
        let modulus: Vec<BigRational> = cyclotomic_polynomial(order)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        Ok(Field {
            inner: Arc::new(FieldKind::Cyclotomic { order, modulus }),
        })
    }

    /// Parses a field descriptor: `Q`, `Fp:<p>`, `Fq:<p>:<poly in x>`, or
    /// `Qzeta:<n>`.
    ///
    /// # Example
    ///
    /// ```
    /// use galoisazu_core::field::Field;
    /// let f9 = Field::parse_descriptor("Fq:3:x^2+1").unwrap();
    /// assert_eq!(f9.order_u128(), Some(9));
    /// ```
    pub fn parse_descriptor(text: &str) -> Result<Field, FieldError> {
        let text = text.trim();
        if text == "Q" {
            return Ok(Field::rationals());
        }
        if let Some(rest) = text.strip_prefix("Fp:") {
            let p: u64 = rest
                .trim()
                .parse()
                .map_err(|_| parse_err(text, "expected Fp:<prime>"))?;
            return Field::prime(p);
        }
        if let Some(rest) = text.strip_prefix("Fq:") {
            let (p_text, poly_text) = rest
                .split_once(':')
                .ok_or_else(|| parse_err(text, "expected Fq:<prime>:<poly>"))?;
            let p: u64 = p_text
                .trim()
                .parse()
                .map_err(|_| parse_err(text, "expected Fq:<prime>:<poly>"))?;
            let coeffs = parse_integer_poly(poly_text)?;
            return Field::extension(p, &coeffs);
        }
        if let Some(rest) = text.strip_prefix("Qzeta:") {
            let n: u64 = rest
                .trim()
                .parse()
                .map_err(|_| parse_err(text, "expected Qzeta:<n>"))?;
            return Field::cyclotomic(n);
        }
        Err(parse_err(
            text,
            "expected Q, Fp:<p>, Fq:<p>:<poly>, or Qzeta:<n>",
        ))
    }

    /// Canonical descriptor string; inverse of [`Field::parse_descriptor`].
    pub fn descriptor(&self) -> String {
        match &*self.inner {
            FieldKind::Rationals => "Q".into(),
            FieldKind::Prime { p } => format!("Fp:{p}"),
            FieldKind::Extension { p, modulus } => {
                format!("Fq:{p}:{}", format_fp_poly(modulus))
            }
            FieldKind::Cyclotomic { order, .. } => format!("Qzeta:{order}"),
        }
    }

    /// Characteristic: 0 for ℚ and ℚ(ζ_n), p otherwise.
    pub fn characteristic(&self) -> u64 {
        match &*self.inner {
            FieldKind::Rationals | FieldKind::Cyclotomic { .. } => 0,
            FieldKind::Prime { p } | FieldKind::Extension { p, .. } => *p,
        }
    }

    /// Degree over the prime field (ℚ or 𝔽_p).
    pub fn degree(&self) -> usize {
        match &*self.inner {
            FieldKind::Rationals | FieldKind::Prime { .. } => 1,
            FieldKind::Extension { modulus, .. } => modulus.len() - 1,
            FieldKind::Cyclotomic { modulus, .. } => modulus.len() - 1,
        }
    }

    /// True for 𝔽_p and 𝔽_{p^d}.
    pub fn is_finite(&self) -> bool {
        self.characteristic() != 0
    }

    /// Number of elements if finite and representable in u128.
    pub fn order_u128(&self) -> Option<u128> {
        if !self.is_finite() {
            return None;
        }
        let p = self.characteristic() as u128;
        let mut n: u128 = 1;
        for _ in 0..self.degree() {
            n = n.checked_mul(p)?;
        }
        Some(n)
    }

    /// For ℚ(ζ_n), the cyclotomic order n.
    pub fn cyclotomic_order(&self) -> Option<u64> {
        match &*self.inner {
            FieldKind::Cyclotomic { order, .. } => Some(*order),
            _ => None,
        }
    }

    /// Coefficients (ascending) of the defining polynomial over the prime
    /// field, for 𝔽_{p^d} and ℚ(ζ_n).
    pub fn modulus_coeffs(&self) -> Option<Vec<BigRational>> {
        match &*self.inner {
            FieldKind::Extension { modulus, .. } => Some(
                modulus
                    .iter()
                    .map(|&c| BigRational::from_integer(BigInt::from(c)))
                    .collect(),
            ),
            FieldKind::Cyclotomic { modulus, .. } => Some(modulus.clone()),
            _ => None,
        }
    }

    // -- element constructors ------------------------------------------------

    /// The additive identity.
    pub fn zero(&self) -> FieldElement {
        self.from_rational_coeffs(&[])
            .expect("empty coefficient vector is always valid")
    }

    /// The multiplicative identity.
    pub fn one(&self) -> FieldElement {
        self.integer(1)
    }

    /// The image of the integer `n` in this field.
    pub fn integer(&self, n: i64) -> FieldElement {
        self.from_rational_coeffs(&[BigRational::from_integer(BigInt::from(n))])
            .expect("integers embed in every field")
    }

    /// The image of a rational number in this field.
    ///
    /// Over a finite field the denominator must be invertible modulo p.
    pub fn scalar_from_rational(&self, value: &BigRational) -> Result<FieldElement, FieldError> {
        self.from_rational_coeffs(std::slice::from_ref(value))
    }

    /// Parses a scalar literal: an integer `-3` or fraction `3/4`.
    pub fn scalar_from_str(&self, text: &str) -> Result<FieldElement, FieldError> {
        let value = parse_rational(text)?;
        self.scalar_from_rational(&value)
    }

    /// Builds an element from rational coefficients in ascending powers of
    /// the field generator (for ℚ and 𝔽_p only a constant term is allowed).
    ///
    /// Shorter vectors are zero-padded; longer vectors are rejected rather
    /// than reduced, so the input is already in canonical position.
    pub fn from_rational_coeffs(&self, coeffs: &[BigRational]) -> Result<FieldElement, FieldError> {
        let degree = self.degree();
        if coeffs.len() > degree {
            return Err(FieldError::CoefficientCount {
                got: coeffs.len(),
                expected: degree,
            });
        }
        let repr = match &*self.inner {
            FieldKind::Rationals => {
                Repr::Rational(coeffs.first().cloned().unwrap_or_else(BigRational::zero))
            }
            FieldKind::Prime { p } => {
                let c = coeffs.first().cloned().unwrap_or_else(BigRational::zero);
                Repr::Prime(rational_mod_p(&c, *p)?)
            }
            FieldKind::Extension { p, modulus } => {
                let mut v = vec![0u64; modulus.len() - 1];
                for (i, c) in coeffs.iter().enumerate() {
                    v[i] = rational_mod_p(c, *p)?;
                }
                Repr::Poly(v)
            }
            FieldKind::Cyclotomic { modulus, .. } => {
                let mut v = vec![BigRational::zero(); modulus.len() - 1];
                for (i, c) in coeffs.iter().enumerate() {
                    v[i] = c.clone();
                }
                Repr::Cyclo(v)
            }
        };
        Ok(FieldElement {
            field: self.clone(),
            repr,
        })
    }

    /// Builds an 𝔽_{p^d} element from integer coefficients (ascending).
    pub fn extension_element(&self, coeffs: &[i64]) -> Result<FieldElement, FieldError> {
        let rats: Vec<BigRational> = coeffs
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        self.from_rational_coeffs(&rats)
    }

    /// The canonical generator: the class of X for 𝔽_p[X]/(f), the root of
    /// unity ζ_n for ℚ(ζ_n); `None` for prime fields and ℚ.
    pub fn generator(&self) -> Option<FieldElement> {
        match &*self.inner {
            FieldKind::Extension { .. } | FieldKind::Cyclotomic { .. } => Some(
                self.from_rational_coeffs(&[BigRational::zero(), BigRational::one()])
                    .expect("degree is at least 2"),
            ),
            _ => None,
        }
    }

    /// Number of elements as u128, if finite and enumerable.
    fn enumerable_order(&self) -> Option<u128> {
        self.order_u128().filter(|&n| n <= ENUMERATION_CAP)
    }

    /// The `index`-th element of a finite field in the canonical order
    /// (coefficient vectors read as base-p digit strings, ascending value).
    pub fn element_at(&self, index: u128) -> Option<FieldElement> {
        let order = self.order_u128()?;
        if index >= order {
            return None;
        }
        let p = self.characteristic() as u128;
        match &*self.inner {
            FieldKind::Prime { .. } => Some(FieldElement {
                field: self.clone(),
                repr: Repr::Prime(index as u64),
            }),
            FieldKind::Extension { modulus, .. } => {
                let d = modulus.len() - 1;
                let mut rem = index;
                let mut coeffs = vec![0u64; d];
                for slot in coeffs.iter_mut() {
                    *slot = (rem % p) as u64;
                    rem /= p;
                }
                Some(FieldElement {
                    field: self.clone(),
                    repr: Repr::Poly(coeffs),
                })
            }
            _ => None,
        }
    }

    /// Iterates over all elements of a finite field in canonical order.
    ///
    /// Returns `None` for infinite fields and for finite fields larger than
    /// the enumeration cap.
    pub fn elements(&self) -> Option<impl Iterator<Item = FieldElement> + '_> {
        let order = self.enumerable_order()?;
        Some((0..order).map(move |i| {
            self.element_at(i)
                .expect("index below the announced field order")
        }))
    }

    /// The first element of exact multiplicative order `n` in the canonical
    /// element order.
    ///
    /// * 𝔽_p, 𝔽_{p^d}: residues / coefficient vectors are scanned in
    ///   ascending value order.
    /// * ℚ: only orders 1 and 2 exist (1 and −1).
    /// * ℚ(ζ_m): the torsion subgroup {±ζ_m^k} is scanned and the smallest
    ///   match in the canonical coefficient order is returned (so the chosen
    ///   primitive root may be a conjugate of ζ_m itself).
    ///
    /// # Example
    ///
    /// ```
    /// use galoisazu_core::field::Field;
    /// let f7 = Field::prime(7).unwrap();
    /// assert_eq!(f7.element_of_order(3).unwrap(), f7.integer(2));
    /// ```
    pub fn element_of_order(&self, n: u64) -> Result<FieldElement, FieldError> {
        if n == 0 {
            return Err(FieldError::NoSuchRoot(0, self.descriptor()));
        }
        if n == 1 {
            return Ok(self.one());
        }
        match &*self.inner {
            FieldKind::Rationals => {
                if n == 2 {
                    Ok(self.integer(-1))
                } else {
                    Err(FieldError::NoSuchRoot(n, self.descriptor()))
                }
            }
            FieldKind::Prime { .. } | FieldKind::Extension { .. } => {
                let order = self.order_u128().ok_or(FieldError::EnumerationCap {
                    candidates: u128::MAX,
                })?;
                if order > ENUMERATION_CAP {
                    return Err(FieldError::EnumerationCap { candidates: order });
                }
                if (order - 1) % n as u128 != 0 {
                    return Err(FieldError::NoSuchRoot(n, self.descriptor()));
                }
                let prime_parts = prime_divisors(n);
                for idx in 1..order {
                    let candidate = self
                        .element_at(idx)
                        .expect("index below the announced field order");
                    if has_exact_order(&candidate, n, &prime_parts) {
                        return Ok(candidate);
                    }
                }
                Err(FieldError::NoSuchRoot(n, self.descriptor()))
            }
            FieldKind::Cyclotomic { order, .. } => {
                let zeta = self
                    .generator()
                    .expect("cyclotomic fields have a generator");
                let mut torsion: Vec<FieldElement> = Vec::new();
                let mut power = self.one();
                for _ in 0..*order {
                    if !torsion.contains(&power) {
                        torsion.push(power.clone());
                    }
                    let negated = -&power;
                    if !torsion.contains(&negated) {
                        torsion.push(negated);
                    }
                    power = &power * &zeta;
                }
                let prime_parts = prime_divisors(n);
                let mut best: Option<FieldElement> = None;
                for candidate in torsion {
                    if has_exact_order(&candidate, n, &prime_parts) {
                        let better = match &best {
                            None => true,
                            Some(current) => candidate.canonical_cmp(current) == Ordering::Less,
                        };
                        if better {
                            best = Some(candidate);
                        }
                    }
                }
                best.ok_or_else(|| FieldError::NoSuchRoot(n, self.descriptor()))
            }
        }
    }

    fn kind(&self) -> &FieldKind {
        &self.inner
    }
}

fn has_exact_order(x: &FieldElement, n: u64, prime_parts: &[u64]) -> bool {
    if x.is_zero() {
        return false;
    }
    if !x.pow(n as u128).is_one() {
        return false;
    }
    prime_parts
        .iter()
        .all(|&q| !x.pow((n / q) as u128).is_one())
}

// ---------------------------------------------------------------------------
// Field elements
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum Repr {
    Rational(BigRational),
    Prime(u64),
    Poly(Vec<u64>),
    Cyclo(Vec<BigRational>),
}

/// An element of an exact [`Field`], stored in canonical form.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    repr: Repr,
}

impl FieldElement {
    /// The field this element belongs to.
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// True iff this is the additive identity.
    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rational(r) => r.is_zero(),
            Repr::Prime(v) => *v == 0,
            Repr::Poly(c) => c.iter().all(|&x| x == 0),
            Repr::Cyclo(c) => c.iter().all(|x| x.is_zero()),
        }
    }

    /// True iff this is the multiplicative identity.
    pub fn is_one(&self) -> bool {
        *self == self.field.one()
    }

    /// Exact rational value, when the field is ℚ.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// Canonical residue in `0..p`, when the field is 𝔽_p.
    pub fn as_prime_residue(&self) -> Option<u64> {
        match &self.repr {
            Repr::Prime(v) => Some(*v),
            _ => None,
        }
    }

    /// Coefficients over the prime field in ascending powers of the
    /// generator, as exact rationals. Length equals `field.degree()`.
    pub fn coeffs_as_rationals(&self) -> Vec<BigRational> {
        match &self.repr {
            Repr::Rational(r) => vec![r.clone()],
            Repr::Prime(v) => vec![BigRational::from_integer(BigInt::from(*v))],
            Repr::Poly(c) => c
                .iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect(),
            Repr::Cyclo(c) => c.clone(),
        }
    }

    fn assert_same_field(&self, other: &FieldElement, op: &str) {
        assert!(
            self.field == other.field,
            "cannot {op} elements of different fields {} and {}",
            self.field,
            other.field
        );
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let repr = match (&self.repr, self.field.kind()) {
            (Repr::Rational(r), _) => Repr::Rational(r.recip()),
            (Repr::Prime(v), FieldKind::Prime { p }) => Repr::Prime(inv_mod(*v, *p)),
            (Repr::Poly(c), FieldKind::Extension { p, modulus }) => {
                Repr::Poly(fp_poly_inverse_mod(c, modulus, *p))
            }
            (Repr::Cyclo(c), FieldKind::Cyclotomic { modulus, .. }) => {
                Repr::Cyclo(rat_poly_inverse_mod(c, modulus))
            }
            _ => unreachable!("element repr always matches its field kind"),
        };
        Ok(FieldElement {
            field: self.field.clone(),
            repr,
        })
    }

    /// Exact division.
    pub fn div(&self, rhs: &FieldElement) -> Result<FieldElement, FieldError> {
        self.assert_same_field(rhs, "divide");
        Ok(self * &rhs.inv()?)
    }

    /// Nonnegative power by repeated squaring.
    pub fn pow(&self, mut exp: u128) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Signed power; negative exponents require invertibility.
    pub fn pow_signed(&self, exp: i64) -> Result<FieldElement, FieldError> {
        if exp >= 0 {
            Ok(self.pow(exp as u128))
        } else {
            Ok(self.inv()?.pow(exp.unsigned_abs() as u128))
        }
    }

    /// Total order on canonical forms: coefficient vectors are compared from
    /// the leading coefficient downwards (numeric order on prime fields).
    pub fn canonical_cmp(&self, other: &FieldElement) -> Ordering {
        self.assert_same_field(other, "compare");
        match (&self.repr, &other.repr) {
            (Repr::Rational(a), Repr::Rational(b)) => a.cmp(b),
            (Repr::Prime(a), Repr::Prime(b)) => a.cmp(b),
            (Repr::Poly(a), Repr::Poly(b)) => a.iter().rev().cmp(b.iter().rev()),
            (Repr::Cyclo(a), Repr::Cyclo(b)) => a.iter().rev().cmp(b.iter().rev()),
            _ => unreachable!("elements of equal fields share a repr kind"),
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rational(r) => write!(f, "{r}"),
            Repr::Prime(v) => write!(f, "{v}"),
            Repr::Poly(c) => f.write_str(&format_fp_poly(c)),
            Repr::Cyclo(c) => f.write_str(&format_rational_poly(c, "z")),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                FieldElement::$method(self, rhs)
            }
        }
        impl std::ops::$trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                FieldElement::$method(&self, &rhs)
            }
        }
        impl std::ops::$trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                FieldElement::$method(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}

impl std::ops::Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(&self)
    }
}

impl FieldElement {
    fn add(&self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_field(rhs, "add");
        let repr = match (&self.repr, &rhs.repr, self.field.kind()) {
            (Repr::Rational(a), Repr::Rational(b), _) => Repr::Rational(a + b),
            (Repr::Prime(a), Repr::Prime(b), FieldKind::Prime { p }) => {
                Repr::Prime(add_mod(*a, *b, *p))
            }
            (Repr::Poly(a), Repr::Poly(b), FieldKind::Extension { p, .. }) => Repr::Poly(
                a.iter()
                    .zip(b.iter())
                    .map(|(&x, &y)| add_mod(x, y, *p))
                    .collect(),
            ),
            (Repr::Cyclo(a), Repr::Cyclo(b), _) => {
                Repr::Cyclo(a.iter().zip(b.iter()).map(|(x, y)| x + y).collect())
            }
            _ => unreachable!("elements of equal fields share a repr kind"),
        };
        FieldElement {
            field: self.field.clone(),
            repr,
        }
    }

    fn sub(&self, rhs: &FieldElement) -> FieldElement {
        self.add(&rhs.neg())
    }

    fn neg(&self) -> FieldElement {
        let repr = match (&self.repr, self.field.kind()) {
            (Repr::Rational(a), _) => Repr::Rational(-a),
            (Repr::Prime(a), FieldKind::Prime { p }) => Repr::Prime(neg_mod(*a, *p)),
            (Repr::Poly(a), FieldKind::Extension { p, .. }) => {
                Repr::Poly(a.iter().map(|&x| neg_mod(x, *p)).collect())
            }
            (Repr::Cyclo(a), _) => Repr::Cyclo(a.iter().map(|x| -x).collect()),
            _ => unreachable!("element repr always matches its field kind"),
        };
        FieldElement {
            field: self.field.clone(),
            repr,
        }
    }

    fn mul(&self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_field(rhs, "multiply");
        let repr = match (&self.repr, &rhs.repr, self.field.kind()) {
            (Repr::Rational(a), Repr::Rational(b), _) => Repr::Rational(a * b),
            (Repr::Prime(a), Repr::Prime(b), FieldKind::Prime { p }) => {
                Repr::Prime(mul_mod(*a, *b, *p))
            }
            (Repr::Poly(a), Repr::Poly(b), FieldKind::Extension { p, modulus }) => {
                let product = fp_poly_mul(a, b, *p);
                let reduced = fp_poly_rem(&product, modulus, *p);
                let mut fixed = vec![0u64; modulus.len() - 1];
                fixed[..reduced.len()].copy_from_slice(&reduced);
                Repr::Poly(fixed)
            }
            (Repr::Cyclo(a), Repr::Cyclo(b), FieldKind::Cyclotomic { modulus, .. }) => {
                let product = rat_poly_mul(a, b);
                let reduced = rat_poly_rem(&product, modulus);
                let mut fixed = vec![BigRational::zero(); modulus.len() - 1];
                fixed[..reduced.len()].clone_from_slice(&reduced);
                Repr::Cyclo(fixed)
            }
            _ => unreachable!("elements of equal fields share a repr kind"),
        };
        FieldElement {
            field: self.field.clone(),
            repr,
        }
    }
}

// ---------------------------------------------------------------------------
// Field embeddings
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
enum EmbeddingKind {
    Identity,
    RationalsToCyclotomic,
    PrimeToExtension,
    /// Source generator ↦ a root of the source modulus inside the target.
    GeneratorImage(FieldElement),
}

/// A verified ring embedding between two supported fields.
///
/// Supported shapes: identity; ℚ ↪ ℚ(ζ_n); 𝔽_p ↪ 𝔽_{p^d}; 𝔽_{p^d} ↪ 𝔽_{p^e}
/// with d | e; ℚ(ζ_n) ↪ ℚ(ζ_m) with n | m. For the last two the image of the
/// source generator is found by explicit root search and re-checked against
/// the source modulus, so a successfully constructed embedding is a genuine
/// field homomorphism.
#[derive(Debug, Clone)]
pub struct FieldEmbedding {
    source: Field,
    target: Field,
    kind: EmbeddingKind,
}

impl FieldEmbedding {
    /// Finds an embedding of `source` into `target`.
    pub fn new(source: &Field, target: &Field) -> Result<FieldEmbedding, FieldError> {
        let unsupported =
            || FieldError::UnsupportedEmbedding(source.descriptor(), target.descriptor());
        let kind = if source == target {
            EmbeddingKind::Identity
        } else {
            match (source.kind(), target.kind()) {
                (FieldKind::Rationals, FieldKind::Cyclotomic { .. }) => {
                    EmbeddingKind::RationalsToCyclotomic
                }
                (FieldKind::Prime { p }, FieldKind::Extension { p: q, .. }) if p == q => {
                    EmbeddingKind::PrimeToExtension
                }
                (FieldKind::Extension { p, modulus }, FieldKind::Extension { p: q, .. })
                    if p == q && target.degree() % source.degree() == 0 =>
                {
                    let image = find_root_in_finite_field(modulus, target)?;
                    EmbeddingKind::GeneratorImage(image)
                }
                (
                    FieldKind::Cyclotomic { order: n, .. },
                    FieldKind::Cyclotomic { order: m, .. },
                ) if m % n == 0 => {
                    let zeta = target
                        .generator()
                        .expect("cyclotomic fields have a generator");
                    let image = zeta.pow((m / n) as u128);
                    let modulus = source
                        .modulus_coeffs()
                        .expect("cyclotomic fields have a modulus");
                    if !eval_rational_poly_at(&modulus, &image).is_zero() {
                        return Err(unsupported());
                    }
                    EmbeddingKind::GeneratorImage(image)
                }
                _ => return Err(unsupported()),
            }
        };
        Ok(FieldEmbedding {
            source: source.clone(),
            target: target.clone(),
            kind,
        })
    }

    /// The source field.
    pub fn source(&self) -> &Field {
        &self.source
    }

    /// The target field.
    pub fn target(&self) -> &Field {
        &self.target
    }

    /// Applies the embedding to an element of the source field.
    pub fn apply(&self, x: &FieldElement) -> FieldElement {
        assert!(
            x.field() == &self.source,
            "embedding applied to an element of {}, expected {}",
            x.field(),
            self.source
        );
        match &self.kind {
            EmbeddingKind::Identity => x.clone(),
            EmbeddingKind::RationalsToCyclotomic => {
                let r = x.as_rational().expect("source is the rational field");
                self.target
                    .scalar_from_rational(r)
                    .expect("rationals embed in characteristic 0")
            }
            EmbeddingKind::PrimeToExtension => {
                let v = x.as_prime_residue().expect("source is a prime field");
                self.target
                    .extension_element(&[v as i64])
                    .expect("constants embed in every extension")
            }
            EmbeddingKind::GeneratorImage(image) => {
                let coeffs = x.coeffs_as_rationals();
                let mut acc = self.target.zero();
                for c in coeffs.iter().rev() {
                    let scalar = self
                        .target
                        .scalar_from_rational(c)
                        .expect("prime-field coefficients embed");
                    acc = &(&acc * image) + &scalar;
                }
                acc
            }
        }
    }
}

/// Evaluates a rational-coefficient polynomial at an element of any
/// characteristic-0 field.
fn eval_rational_poly_at(coeffs: &[BigRational], x: &FieldElement) -> FieldElement {
    let field = x.field();
    let mut acc = field.zero();
    for c in coeffs.iter().rev() {
        let scalar = field
            .scalar_from_rational(c)
            .expect("rational scalars embed in characteristic 0");
        acc = &(&acc * x) + &scalar;
    }
    acc
}

/// Finds the first root (canonical element order) of an 𝔽_p-polynomial in a
/// finite extension field.
fn find_root_in_finite_field(modulus: &[u64], target: &Field) -> Result<FieldElement, FieldError> {
    let order = target.order_u128().ok_or_else(|| {
        FieldError::UnsupportedEmbedding("finite field".into(), target.descriptor())
    })?;
    if order > ENUMERATION_CAP {
        return Err(FieldError::EnumerationCap { candidates: order });
    }
    for idx in 0..order {
        let candidate = target
            .element_at(idx)
            .expect("index below the announced field order");
        let mut acc = target.zero();
        for &c in modulus.iter().rev() {
            let scalar = target.extension_element(&[c as i64])?;
            acc = &(&acc * &candidate) + &scalar;
        }
        if acc.is_zero() {
            return Ok(candidate);
        }
    }
    Err(FieldError::UnsupportedEmbedding(
        format_fp_poly(modulus),
        target.descriptor(),
    ))
}

// ---------------------------------------------------------------------------
// Modular arithmetic on u64 residues
// ---------------------------------------------------------------------------

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

fn neg_mod(a: u64, p: u64) -> u64 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Extended Euclid on (a, p); p is prime and a ≢ 0.
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "inverse of a nonunit requested");
    (((s0 % p as i128) + p as i128) % p as i128) as u64
}

fn bigint_mod_u64(x: &BigInt, p: u64) -> u64 {
    use num_integer::Integer;
    x.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue modulo a u64 prime fits in u64")
}

fn rational_mod_p(value: &BigRational, p: u64) -> Result<u64, FieldError> {
    let num = bigint_mod_u64(value.numer(), p);
    let den = bigint_mod_u64(value.denom(), p);
    if den == 0 {
        return Err(FieldError::DivisionByZero);
    }
    Ok(mul_mod(num, inv_mod(den, p), p))
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// ---------------------------------------------------------------------------
// Polynomials over 𝔽_p (coefficients ascending, no fixed length)
// ---------------------------------------------------------------------------

pub(crate) fn fp_poly_trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub(crate) fn fp_poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y == 0 {
                continue;
            }
            out[i + j] = add_mod(out[i + j], mul_mod(x, y, p), p);
        }
    }
    fp_poly_trim(out)
}

pub(crate) fn fp_poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = add_mod(x, neg_mod(y, p), p);
    }
    fp_poly_trim(out)
}

pub(crate) fn fp_poly_divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let b = fp_poly_trim(b.to_vec());
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut rem = fp_poly_trim(a.to_vec());
    let deg_b = b.len() - 1;
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = inv_mod(b[deg_b], p);
    let mut quot = vec![0u64; rem.len() - deg_b];
    for shift in (0..rem.len() - deg_b).rev() {
        let factor = mul_mod(rem[shift + deg_b], lead_inv, p);
        if factor != 0 {
            quot[shift] = factor;
            for (i, &c) in b.iter().enumerate() {
                if c != 0 {
                    rem[shift + i] = add_mod(rem[shift + i], neg_mod(mul_mod(factor, c, p), p), p);
                }
            }
        }
    }
    rem.truncate(deg_b);
    (fp_poly_trim(quot), fp_poly_trim(rem))
}

pub(crate) fn fp_poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    fp_poly_divrem(a, b, p).1
}

/// Monic gcd.
pub(crate) fn fp_poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = fp_poly_trim(a.to_vec());
    let mut y = fp_poly_trim(b.to_vec());
    while !y.is_empty() {
        let r = fp_poly_rem(&x, &y, p);
        x = y;
        y = r;
    }
    if let Some(&lead) = x.last() {
        let inv = inv_mod(lead, p);
        for c in &mut x {
            *c = mul_mod(*c, inv, p);
        }
    }
    x
}

/// Inverse of `a` modulo the irreducible polynomial `m`.
fn fp_poly_inverse_mod(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    // Extended Euclid: s·a + t·m = gcd = nonzero constant.
    let (mut r0, mut r1) = (fp_poly_trim(m.to_vec()), fp_poly_trim(a.to_vec()));
    let (mut s0, mut s1): (Vec<u64>, Vec<u64>) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = fp_poly_divrem(&r0, &r1, p);
        let s_next = fp_poly_sub(&s0, &fp_poly_mul(&q, &s1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s_next);
    }
    assert_eq!(r0.len(), 1, "inverse modulo a reducible polynomial");
    let scale = inv_mod(r0[0], p);
    let mut out: Vec<u64> = s0.iter().map(|&c| mul_mod(c, scale, p)).collect();
    out = fp_poly_rem(&out, m, p);
    let mut fixed = vec![0u64; m.len() - 1];
    fixed[..out.len()].copy_from_slice(&out);
    fixed
}

pub(crate) fn fp_poly_pow_mod(base: &[u64], mut exp: u128, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = fp_poly_rem(base, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = fp_poly_rem(&fp_poly_mul(&acc, &b, p), m, p);
        }
        exp >>= 1;
        if exp > 0 {
            b = fp_poly_rem(&fp_poly_mul(&b, &b, p), m, p);
        }
    }
    acc
}

/// Complete irreducibility test over 𝔽_p.
///
/// Uses exhaustive trial division by every monic polynomial of degree at most
/// `deg f / 2` when that enumeration is small, and the Frobenius/gcd
/// factor-degree criterion otherwise (f of degree d is reducible iff
/// gcd(X^{p^i} − X, f) is nontrivial for some i ≤ d/2).
fn fp_poly_is_irreducible(p: u64, f: &[u64]) -> bool {
    let f = fp_poly_trim(f.to_vec());
    let d = f.len() - 1;
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let half = d / 2;
    let mut candidates: u128 = 0;
    let mut power: u128 = 1;
    for _ in 0..half {
        power = power.saturating_mul(p as u128);
        candidates = candidates.saturating_add(power);
    }
    if candidates <= TRIAL_DIVISOR_CAP {
        fp_poly_irreducible_exhaustive(p, &f, half)
    } else {
        fp_poly_irreducible_frobenius(p, &f, half)
    }
}

fn fp_poly_irreducible_exhaustive(p: u64, f: &[u64], half: usize) -> bool {
    for deg in 1..=half {
        let count = (p as u128).pow(deg as u32);
        for idx in 0..count {
            let mut divisor = vec![0u64; deg + 1];
            divisor[deg] = 1;
            let mut rem = idx;
            for slot in divisor.iter_mut().take(deg) {
                *slot = (rem % p as u128) as u64;
                rem /= p as u128;
            }
            if fp_poly_rem(f, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn fp_poly_irreducible_frobenius(p: u64, f: &[u64], half: usize) -> bool {
    let x = vec![0u64, 1];
    let mut h = x.clone();
    for _ in 1..=half {
        h = fp_poly_pow_mod(&h, p as u128, f, p);
        let diff = fp_poly_sub(&h, &x, p);
        let g = fp_poly_gcd(&diff, f, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

fn format_fp_poly(coeffs: &[u64]) -> String {
    let trimmed = fp_poly_trim(coeffs.to_vec());
    if trimmed.is_empty() {
        return "0".into();
    }
    let mut parts: Vec<String> = Vec::new();
    for (deg, &c) in trimmed.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let part = match deg {
            0 => format!("{c}"),
            1 if c == 1 => "x".into(),
            1 => format!("{c}x"),
            _ if c == 1 => format!("x^{deg}"),
            _ => format!("{c}x^{deg}"),
        };
        parts.push(part);
    }
    parts.join("+")
}

fn format_rational_poly(coeffs: &[BigRational], var: &str) -> String {
    let mut parts: Vec<(bool, String)> = Vec::new(); // (negative, magnitude text)
    for (deg, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let magnitude = c.abs();
        let mag_text = if deg == 0 {
            format!("{magnitude}")
        } else {
            let power = if deg == 1 {
                var.to_string()
            } else {
                format!("{var}^{deg}")
            };
            if magnitude.is_one() {
                power
            } else if magnitude.denom().is_one() {
                format!("{magnitude}{power}")
            } else {
                format!("{magnitude}*{power}")
            }
        };
        parts.push((c.is_negative(), mag_text));
    }
    if parts.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (negative, text)) in parts.iter().enumerate() {
        if i == 0 {
            if *negative {
                out.push('-');
            }
        } else if *negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(text);
    }
    out
}

// ---------------------------------------------------------------------------
// Polynomials over ℚ (BigRational coefficients, ascending)
// ---------------------------------------------------------------------------

fn rat_poly_trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().map(Zero::is_zero) == Some(true) {
        v.pop();
    }
    v
}

fn rat_poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] += x * y;
        }
    }
    rat_poly_trim(out)
}

fn rat_poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let zero = BigRational::zero();
    let mut out = vec![BigRational::zero(); n];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).unwrap_or(&zero);
        let y = b.get(i).unwrap_or(&zero);
        *slot = x - y;
    }
    rat_poly_trim(out)
}

fn rat_poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let b = rat_poly_trim(b.to_vec());
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut rem = rat_poly_trim(a.to_vec());
    let deg_b = b.len() - 1;
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = b[deg_b].recip();
    let mut quot = vec![BigRational::zero(); rem.len() - deg_b];
    for shift in (0..rem.len() - deg_b).rev() {
        let factor = &rem[shift + deg_b] * &lead_inv;
        if !factor.is_zero() {
            for (i, c) in b.iter().enumerate() {
                if !c.is_zero() {
                    let delta = &factor * c;
                    rem[shift + i] -= delta;
                }
            }
            quot[shift] = factor;
        }
    }
    rem.truncate(deg_b);
    (rat_poly_trim(quot), rat_poly_trim(rem))
}

fn rat_poly_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    rat_poly_divrem(a, b).1
}

/// Inverse of `a` modulo the irreducible polynomial `m` over ℚ.
fn rat_poly_inverse_mod(a: &[BigRational], m: &[BigRational]) -> Vec<BigRational> {
    let (mut r0, mut r1) = (rat_poly_trim(m.to_vec()), rat_poly_trim(a.to_vec()));
    let (mut s0, mut s1): (Vec<BigRational>, Vec<BigRational>) =
        (Vec::new(), vec![BigRational::one()]);
    while !r1.is_empty() {
        let (q, r) = rat_poly_divrem(&r0, &r1);
        let s_next = rat_poly_sub(&s0, &rat_poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s_next);
    }
    assert_eq!(r0.len(), 1, "inverse modulo a reducible polynomial");
    let scale = r0[0].recip();
    let scaled: Vec<BigRational> = s0.iter().map(|c| c * &scale).collect();
    let out = rat_poly_rem(&scaled, m);
    let mut fixed = vec![BigRational::zero(); m.len() - 1];
    fixed[..out.len()].clone_from_slice(&out);
    fixed
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials (Möbius product route)
// ---------------------------------------------------------------------------

/// Φ_n with integer coefficients, ascending, computed from the Möbius
/// formula Φ_n = Π_{d|n} (X^{n/d} − 1)^{μ(d)} by exact polynomial division.
pub(crate) fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic order must be positive");
    let mut numerator: Vec<BigInt> = vec![BigInt::one()];
    let mut denominator: Vec<BigInt> = vec![BigInt::one()];
    for d in divisors(n) {
        match moebius(d) {
            1 => numerator = int_poly_mul(&numerator, &x_power_minus_one(n / d)),
            -1 => denominator = int_poly_mul(&denominator, &x_power_minus_one(n / d)),
            _ => {}
        }
    }
    let phi = int_poly_exact_div(&numerator, &denominator);
    debug_assert_eq!(phi.len() as u64 - 1, euler_phi(n), "degree of Φ_n is φ(n)");
    phi
}

fn x_power_minus_one(k: u64) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); k as usize + 1];
    v[0] = -BigInt::one();
    v[k as usize] = BigInt::one();
    v
}

fn int_poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division of integer polynomials with monic divisor.
fn int_poly_exact_div(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = a.to_vec();
    while rem.last().map(Zero::is_zero) == Some(true) {
        rem.pop();
    }
    let mut div: Vec<BigInt> = b.to_vec();
    while div.last().map(Zero::is_zero) == Some(true) {
        div.pop();
    }
    assert!(
        div.last().map(One::is_one) == Some(true),
        "divisor must be monic"
    );
    let deg_b = div.len() - 1;
    assert!(rem.len() > deg_b, "division was not exact");
    let mut quot = vec![BigInt::zero(); rem.len() - deg_b];
    for shift in (0..rem.len() - deg_b).rev() {
        let factor = rem[shift + deg_b].clone();
        if !factor.is_zero() {
            for (i, c) in div.iter().enumerate() {
                let delta = &factor * c;
                rem[shift + i] -= delta;
            }
            quot[shift] = factor;
        }
    }
    assert!(rem.iter().all(Zero::is_zero), "division was not exact");
    quot
}

pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for d in 1..=n {
        if n % d == 0 {
            out.push(d);
        }
    }
    out
}

pub(crate) fn moebius(n: u64) -> i64 {
    let mut m = n;
    let mut count = 0u32;
    let mut d = 2u64;
    while d.saturating_mul(d) <= m {
        if m % d == 0 {
            m /= d;
            if m % d == 0 {
                return 0;
            }
            count += 1;
        }
        d += 1;
    }
    if m > 1 {
        count += 1;
    }
    if count % 2 == 0 {
        1
    } else {
        -1
    }
}

pub(crate) fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut d = 2u64;
    while d.saturating_mul(d) <= m {
        if m % d == 0 {
            while m % d == 0 {
                m /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

// ---------------------------------------------------------------------------
// Text parsing helpers
// ---------------------------------------------------------------------------

/// Parses a rational literal: `-3`, `3/4`, `-3/4`.
pub fn parse_rational(text: &str) -> Result<BigRational, FieldError> {
    let trimmed = text.trim();
    let (num_text, den_text) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let num: BigInt = num_text
        .parse()
        .map_err(|_| parse_err(text, "expected an integer or p/q fraction"))?;
    let den: BigInt = den_text
        .parse()
        .map_err(|_| parse_err(text, "expected an integer or p/q fraction"))?;
    if den.is_zero() {
        return Err(parse_err(text, "zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

/// Parses an integer polynomial in the variable x, e.g. `x^2+3x+1`.
pub(crate) fn parse_integer_poly(text: &str) -> Result<Vec<i64>, FieldError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(parse_err(text, "empty polynomial"));
    }
    let mut coeffs: Vec<i64> = Vec::new();
    let chars: Vec<char> = compact.chars().collect();
    let mut pos = 0usize;
    let mut sign = 1i64;
    if chars[0] == '-' {
        sign = -1;
        pos = 1;
    } else if chars[0] == '+' {
        pos = 1;
    }
    loop {
        // One term: [digits] ['*'] ['x' ['^' digits]]
        let mut coeff: Option<i64> = None;
        let start = pos;
        while pos < chars.len() && chars[pos].is_ascii_digit() {
            pos += 1;
        }
        if pos > start {
            let digits: String = chars[start..pos].iter().collect();
            let value: i64 = digits
                .parse()
                .map_err(|_| parse_err(text, "coefficient out of range"))?;
            coeff = Some(value);
        }
        if pos < chars.len() && chars[pos] == '*' {
            pos += 1;
        }
        let mut power = 0usize;
        if pos < chars.len() && chars[pos] == 'x' {
            pos += 1;
            power = 1;
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                let start = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                if pos == start {
                    return Err(parse_err(text, "missing exponent after ^"));
                }
                let digits: String = chars[start..pos].iter().collect();
                power = digits
                    .parse()
                    .map_err(|_| parse_err(text, "exponent out of range"))?;
            }
        } else if coeff.is_none() {
            return Err(parse_err(text, "expected a coefficient or x"));
        }
        let value = sign * coeff.unwrap_or(1);
        if coeffs.len() <= power {
            coeffs.resize(power + 1, 0);
        }
        coeffs[power] += value;
        if pos == chars.len() {
            break;
        }
        sign = match chars[pos] {
            '+' => 1,
            '-' => -1,
            other => {
                return Err(parse_err(text, format!("unexpected character {other:?}")));
            }
        };
        pos += 1;
        if pos == chars.len() {
            return Err(parse_err(text, "dangling sign"));
        }
    }
    Ok(coeffs)
}

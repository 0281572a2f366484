//! Exact dense linear algebra over any [`Field`].
//!
//! Everything reduces to one deterministic routine: in-place reduced row
//! echelon form with first-nonzero pivoting (no pivot heuristics, so the
//! echelon form — and hence every kernel basis and every solution returned —
//! is canonical for a given input). Inner loops skip zero entries, which on
//! the sparse structured matrices produced by Galois-map assembly keeps the
//! exact arithmetic close to the theoretical operation count.
//!
//! # Example
//!
//! ```
//! use galoisazu_core::field::Field;
//! use galoisazu_core::linalg::Mat;
//!
//! let f7 = Field::prime(7).unwrap();
//! let a = Mat::from_rows(
//!     &f7,
//!     vec![
//!         vec![f7.integer(1), f7.integer(2)],
//!         vec![f7.integer(3), f7.integer(4)],
//!     ],
//! )
//! .unwrap();
//! let inv = a.inverse().unwrap();
//! assert!(a.mul(&inv).unwrap().is_identity());
//! ```

use crate::field::{Field, FieldElement};
use std::fmt;
use thiserror::Error;

/// Errors from matrix construction and solving.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    /// Operand shapes are incompatible.
    #[error("shape mismatch: {left_rows}x{left_cols} vs {right_rows}x{right_cols} in {op}")]
    ShapeMismatch {
        op: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    /// Ragged or empty row data.
    #[error("rows must all have length {expected}, row {row} has {got}")]
    RaggedRows {
        row: usize,
        expected: usize,
        got: usize,
    },
    /// The matrix does not have full column rank.
    #[error("matrix is rank-deficient: rank {rank} < {cols} columns")]
    RankDeficient { rank: usize, cols: usize },
    /// The linear system has no solution.
    #[error("linear system is inconsistent")]
    Inconsistent,
    /// Mixed coefficient fields.
    #[error("matrix entries belong to different fields")]
    FieldMismatch,
}

/// A dense matrix with exact entries.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over {} [", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Mat {
    /// The zero matrix of the given shape.
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Mat {
        Mat {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    /// The n×n identity matrix.
    pub fn identity(field: &Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from row vectors.
    pub fn from_rows(field: &Field, rows: Vec<Vec<FieldElement>>) -> Result<Mat, LinalgError> {
        let height = rows.len();
        let width = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(height * width);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != width {
                return Err(LinalgError::RaggedRows {
                    row: i,
                    expected: width,
                    got: row.len(),
                });
            }
            for entry in row {
                if entry.field() != field {
                    return Err(LinalgError::FieldMismatch);
                }
                data.push(entry);
            }
        }
        Ok(Mat {
            field: field.clone(),
            rows: height,
            cols: width,
            data,
        })
    }

    /// Builds a diagonal matrix from the given entries.
    pub fn diagonal(field: &Field, entries: &[FieldElement]) -> Mat {
        let n = entries.len();
        let mut m = Mat::zeros(field, n, n);
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    /// The coefficient field.
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at (row, col).
    pub fn at(&self, row: usize, col: usize) -> &FieldElement {
        &self.data[row * self.cols + col]
    }

    /// Overwrites the entry at (row, col).
    pub fn set(&mut self, row: usize, col: usize, value: FieldElement) {
        self.data[row * self.cols + col] = value;
    }

    /// The given row as a vector.
    pub fn row(&self, row: usize) -> Vec<FieldElement> {
        self.data[row * self.cols..(row + 1) * self.cols].to_vec()
    }

    /// The given column as a vector.
    pub fn column(&self, col: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|r| self.at(r, col).clone()).collect()
    }

    /// Writes a full column.
    pub fn set_column(&mut self, col: usize, values: &[FieldElement]) {
        assert_eq!(
            values.len(),
            self.rows,
            "column length must match row count"
        );
        for (r, v) in values.iter().enumerate() {
            self.set(r, col, v.clone());
        }
    }

    /// True iff every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElement::is_zero)
    }

    /// True iff this is a square identity matrix.
    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                let e = self.at(r, c);
                if r == c {
                    if !e.is_one() {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Matrix sum.
    pub fn add(&self, other: &Mat) -> Result<Mat, LinalgError> {
        self.check_same_shape(other, "add")?;
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a + b)
            .collect();
        Ok(Mat {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Matrix difference.
    pub fn sub(&self, other: &Mat) -> Result<Mat, LinalgError> {
        self.check_same_shape(other, "sub")?;
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a - b)
            .collect();
        Ok(Mat {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    fn check_same_shape(&self, other: &Mat, op: &'static str) -> Result<(), LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::ShapeMismatch {
                op,
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        Ok(())
    }

    /// Matrix product, skipping zero entries of both factors.
    pub fn mul(&self, other: &Mat) -> Result<Mat, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch {
                op: "mul",
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let mut out = Mat::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let current = out.at(i, j).clone();
                    out.set(i, j, &current + &(a * b));
                }
            }
        }
        Ok(out)
    }

    /// Matrix–vector product.
    pub fn mul_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (k, value) in v.iter().enumerate() {
                    let a = self.at(i, k);
                    if a.is_zero() || value.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * value);
                }
                acc
            })
            .collect()
    }

    /// Transpose.
    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.at(r, c).clone());
            }
        }
        out
    }

    /// Multiplies every entry by a scalar.
    pub fn scale(&self, scalar: &FieldElement) -> Mat {
        let data = self.data.iter().map(|e| e * scalar).collect();
        Mat {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Kronecker product: `(A ⊗ B)[(i·rowsB + k), (j·colsB + l)] = A[i,j]·B[k,l]`.
    pub fn kronecker(&self, other: &Mat) -> Mat {
        let mut out = Mat::zeros(&self.field, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.at(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i * other.rows + k, j * other.cols + l, a * b);
                    }
                }
            }
        }
        out
    }

    /// Stacks `self` above `other`.
    pub fn vstack(&self, other: &Mat) -> Result<Mat, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::ShapeMismatch {
                op: "vstack",
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Mat {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// In-place reduced row echelon form with first-nonzero pivoting.
    ///
    /// Returns the pivot column indices. Deterministic: the result depends
    /// only on the input entries.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next_row = 0usize;
        for col in 0..self.cols {
            if next_row == self.rows {
                break;
            }
            // First row at or below next_row with a nonzero entry in col.
            let pivot_row = (next_row..self.rows).find(|&r| !self.at(r, col).is_zero());
            let Some(pivot_row) = pivot_row else {
                continue;
            };
            if pivot_row != next_row {
                self.swap_rows(pivot_row, next_row);
            }
            // Normalize the pivot row.
            let inv = self
                .at(next_row, col)
                .inv()
                .expect("pivot entry is nonzero");
            if !inv.is_one() {
                for j in col..self.cols {
                    let e = self.at(next_row, j);
                    if !e.is_zero() {
                        let scaled = e * &inv;
                        self.set(next_row, j, scaled);
                    }
                }
            }
            // Eliminate the column everywhere else.
            let pivot_entries: Vec<(usize, FieldElement)> = (col..self.cols)
                .filter(|&j| !self.at(next_row, j).is_zero())
                .map(|j| (j, self.at(next_row, j).clone()))
                .collect();
            for r in 0..self.rows {
                if r == next_row {
                    continue;
                }
                let factor = self.at(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for (j, p) in &pivot_entries {
                    let updated = &(self.at(r, *j) - &(&factor * p));
                    self.set(r, *j, updated.clone());
                }
            }
            pivots.push(col);
            next_row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Rank by row reduction.
    pub fn rank(&self) -> usize {
        let mut copy = self.clone();
        copy.rref_in_place().len()
    }

    /// Canonical basis for the null space.
    ///
    /// Each basis vector has a 1 in one free column, the negated echelon
    /// entries in the pivot columns, and zeros elsewhere.
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElement>> {
        let mut echelon = self.clone();
        let pivots = echelon.rref_in_place();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free_col in 0..self.cols {
            if pivot_set[free_col].is_some() {
                continue;
            }
            let mut vector = vec![self.field.zero(); self.cols];
            vector[free_col] = self.field.one();
            for (row, &col) in pivots.iter().enumerate() {
                let entry = echelon.at(row, free_col);
                if !entry.is_zero() {
                    vector[col] = -entry;
                }
            }
            basis.push(vector);
        }
        basis
    }

    /// Solves `self · X = rhs` when the solution is unique.
    ///
    /// Errors with [`LinalgError::RankDeficient`] when the coefficient matrix
    /// does not have full column rank (the reported rank is exact) and with
    /// [`LinalgError::Inconsistent`] when the system has no solution.
    pub fn solve_unique(&self, rhs: &Mat) -> Result<Mat, LinalgError> {
        if self.rows != rhs.rows {
            return Err(LinalgError::ShapeMismatch {
                op: "solve",
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: rhs.rows,
                right_cols: rhs.cols,
            });
        }
        // Augment [A | B] and reduce once.
        let mut augmented = Mat::zeros(&self.field, self.rows, self.cols + rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                augmented.set(r, c, self.at(r, c).clone());
            }
            for c in 0..rhs.cols {
                augmented.set(r, self.cols + c, rhs.at(r, c).clone());
            }
        }
        let pivots = augmented.rref_in_place();
        let rank_a = pivots.iter().filter(|&&c| c < self.cols).count();
        if rank_a < self.cols {
            // Rank deficiency makes the solution non-unique (or the system
            // unsolvable); report the exact rank either way.
            return Err(LinalgError::RankDeficient {
                rank: rank_a,
                cols: self.cols,
            });
        }
        if pivots.len() > rank_a {
            return Err(LinalgError::Inconsistent);
        }
        let mut solution = Mat::zeros(&self.field, self.cols, rhs.cols);
        for (row, &col) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                solution.set(col, c, augmented.at(row, self.cols + c).clone());
            }
        }
        Ok(solution)
    }

    /// Exact inverse of a square matrix.
    pub fn inverse(&self) -> Result<Mat, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::ShapeMismatch {
                op: "inverse",
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: self.rows,
                right_cols: self.rows,
            });
        }
        self.solve_unique(&Mat::identity(&self.field, self.rows))
    }
}

/// The zero vector of the given length.
pub fn zero_vec(field: &Field, len: usize) -> Vec<FieldElement> {
    vec![field.zero(); len]
}

/// `dst += c · src`, skipping zero work.
pub fn add_scaled(dst: &mut [FieldElement], src: &[FieldElement], c: &FieldElement) {
    if c.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src.iter()) {
        if !s.is_zero() {
            *d = &*d + &(s * c);
        }
    }
}

/// True iff every entry is zero.
pub fn is_zero_vec(v: &[FieldElement]) -> bool {
    v.iter().all(FieldElement::is_zero)
}

//! Max-times (tropical) matrix algebra over the nonnegative reals.
//!
//! Addition is the entrywise maximum (written `⊕` below) and multiplication
//! is the ordinary product, so the matrix product becomes
//! `c_ij = max_k a_ik * b_kj`. The neutral elements coincide with the
//! arithmetic 0 and 1. On top of the two semiring operations the module
//! provides the multiplicative conjugate transpose, the trace, the spectral
//! radius, the Kleene star and the Hilbert seminorm, together with the
//! linear-dependence test used to refine generating sets of solution cones.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::float;

/// Tolerance on the spectral radius when forming a Kleene star. The star is
/// defined for spectral radius at most one; inputs of the form `λ⁻¹A` sit
/// exactly on that boundary up to rounding.
pub const KLEENE_STAR_TOLERANCE: f64 = 1e-9;

/// Tolerance on the dependence criterion `(A(b⁻A)⁻)⁻b = 1`. The left side is
/// a product/ratio chain of input entries, so only rounding noise separates
/// it from an exact 1.
pub const LINEAR_DEPENDENCE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub enum MaxPlusError {
    /// Operand shapes do not line up for the requested operation.
    DimensionMismatch {
        expected: (usize, usize),
        got: (usize, usize),
    },
    /// The operation is only defined for square matrices.
    NotSquare { rows: usize, cols: usize },
    /// An entry is negative or not finite.
    InvalidEntry { row: usize, col: usize, value: f64 },
    /// Matrices and vectors must have at least one entry.
    Empty,
    /// The Hilbert seminorm requires a positive vector.
    ZeroEntry { index: usize },
    /// A scalar factor must be nonnegative and finite.
    InvalidScalar { value: f64 },
    /// The Kleene star is undefined when the spectral radius exceeds one.
    SpectralRadiusExceedsOne { spectral_radius: f64 },
    /// The dependence test needs at least one column to test against.
    NoColumns,
}

impl fmt::Display for MaxPlusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MaxPlusError::DimensionMismatch { expected, got } => write!(
                f,
                "dimension mismatch: expected {}x{}, got {}x{}",
                expected.0, expected.1, got.0, got.1
            ),
            MaxPlusError::NotSquare { rows, cols } => {
                write!(f, "matrix is not square: {}x{}", rows, cols)
            }
            MaxPlusError::InvalidEntry { row, col, value } => write!(
                f,
                "entry ({}, {}) must be nonnegative and finite, got {}",
                row, col, value
            ),
            MaxPlusError::Empty => write!(f, "matrices and vectors must be non-empty"),
            MaxPlusError::ZeroEntry { index } => {
                write!(f, "vector entry {} is zero, expected a positive vector", index)
            }
            MaxPlusError::InvalidScalar { value } => {
                write!(f, "scalar must be nonnegative and finite, got {}", value)
            }
            MaxPlusError::SpectralRadiusExceedsOne { spectral_radius } => write!(
                f,
                "Kleene star undefined: spectral radius {} exceeds one",
                spectral_radius
            ),
            MaxPlusError::NoColumns => write!(f, "dependence test needs at least one column"),
        }
    }
}

impl core::error::Error for MaxPlusError {}

fn check_entry(row: usize, col: usize, value: f64) -> Result<(), MaxPlusError> {
    if value.is_finite() && value >= 0.0 {
        Ok(())
    } else {
        Err(MaxPlusError::InvalidEntry { row, col, value })
    }
}

/// Dense row-major matrix over the max-times semiring.
#[derive(Debug, Clone, PartialEq)]
pub struct TropicalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl TropicalMatrix {
    /// Builds a matrix from row-major entries. Every entry must be
    /// nonnegative and finite, and both dimensions at least one.
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self, MaxPlusError> {
        if rows == 0 || cols == 0 || data.is_empty() {
            return Err(MaxPlusError::Empty);
        }
        if data.len() != rows * cols {
            return Err(MaxPlusError::DimensionMismatch {
                expected: (rows, cols),
                got: (data.len() / cols.max(1), cols),
            });
        }
        for (idx, &v) in data.iter().enumerate() {
            check_entry(idx / cols, idx % cols, v)?;
        }
        Ok(TropicalMatrix { rows, cols, data })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self, MaxPlusError> {
        if rows.is_empty() {
            return Err(MaxPlusError::Empty);
        }
        let cols = rows[0].as_ref().len();
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(MaxPlusError::DimensionMismatch {
                    expected: (rows.len(), cols),
                    got: (i + 1, row.len()),
                });
            }
            data.extend_from_slice(row);
        }
        TropicalMatrix::new(rows.len(), cols, data)
    }

    /// Identity matrix: ones on the diagonal, zeros elsewhere.
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + i] = 1.0;
        }
        TropicalMatrix { rows: n, cols: n, data }
    }

    /// The all-zeros matrix, the neutral element of `⊕`.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        TropicalMatrix { rows, cols, data: vec![0.0; rows * cols] }
    }

    /// The all-ones matrix (`11ᵀ` when square).
    pub fn ones(rows: usize, cols: usize) -> Self {
        TropicalMatrix { rows, cols, data: vec![1.0; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.cols + col]
    }

    pub fn column(&self, col: usize) -> TropicalVector {
        let data = (0..self.rows).map(|i| self.get(i, col)).collect();
        TropicalVector { data }
    }

    pub fn from_columns(columns: &[TropicalVector]) -> Result<Self, MaxPlusError> {
        if columns.is_empty() {
            return Err(MaxPlusError::Empty);
        }
        let rows = columns[0].len();
        let cols = columns.len();
        let mut data = vec![0.0; rows * cols];
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(MaxPlusError::DimensionMismatch {
                    expected: (rows, cols),
                    got: (col.len(), j + 1),
                });
            }
            for i in 0..rows {
                data[i * cols + j] = col.get(i);
            }
        }
        Ok(TropicalMatrix { rows, cols, data })
    }

    /// Entrywise maximum `a ⊕ b`.
    pub fn max_add(&self, other: &Self) -> Result<Self, MaxPlusError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MaxPlusError::DimensionMismatch {
                expected: (self.rows, self.cols),
                got: (other.rows, other.cols),
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Ok(TropicalMatrix { rows: self.rows, cols: self.cols, data })
    }

    /// Matrix product `a ⊗ b` with `c_ij = max_k a_ik * b_kj`.
    pub fn max_mul(&self, other: &Self) -> Result<Self, MaxPlusError> {
        if self.cols != other.rows {
            return Err(MaxPlusError::DimensionMismatch {
                expected: (self.cols, self.cols),
                got: (other.rows, other.cols),
            });
        }
        let mut data = vec![0.0; self.rows * other.cols];
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut best = 0.0_f64;
                for k in 0..self.cols {
                    best = best.max(self.get(i, k) * other.get(k, j));
                }
                data[i * other.cols + j] = best;
            }
        }
        Ok(TropicalMatrix { rows: self.rows, cols: other.cols, data })
    }

    /// Multiplicative conjugate transpose: entry `(i, j)` of the result is
    /// `1/a_ji` when `a_ji` is nonzero and 0 otherwise.
    pub fn conjugate_transpose(&self) -> Self {
        let mut data = vec![0.0; self.rows * self.cols];
        for i in 0..self.cols {
            for j in 0..self.rows {
                let v = self.get(j, i);
                data[i * self.rows + j] = if v != 0.0 { 1.0 / v } else { 0.0 };
            }
        }
        TropicalMatrix { rows: self.cols, cols: self.rows, data }
    }

    /// Scalar multiple `c * a`.
    pub fn scale(&self, factor: f64) -> Result<Self, MaxPlusError> {
        if !factor.is_finite() || factor < 0.0 {
            return Err(MaxPlusError::InvalidScalar { value: factor });
        }
        let data = self.data.iter().map(|&v| factor * v).collect();
        Ok(TropicalMatrix { rows: self.rows, cols: self.cols, data })
    }

    /// Trace: the maximum of the diagonal entries.
    pub fn trace(&self) -> Result<f64, MaxPlusError> {
        if !self.is_square() {
            return Err(MaxPlusError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut best = 0.0_f64;
        for i in 0..self.rows {
            best = best.max(self.get(i, i));
        }
        Ok(best)
    }

    /// Spectral radius `λ = max_{k=1..n} tr(Aᵏ)^(1/k)` with tropical powers;
    /// equals the maximum geometric-mean weight over the cycles of the
    /// matrix.
    pub fn spectral_radius(&self) -> Result<f64, MaxPlusError> {
        if !self.is_square() {
            return Err(MaxPlusError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut radius = 0.0_f64;
        let mut power = TropicalMatrix::identity(self.rows);
        for k in 1..=self.rows {
            power = power.max_mul(self)?;
            radius = radius.max(float::powf(power.trace()?, 1.0 / k as f64));
        }
        Ok(radius)
    }

    /// Kleene star `A* = I ⊕ A ⊕ … ⊕ A^(n−1)`, defined when the spectral
    /// radius is at most one (within [`KLEENE_STAR_TOLERANCE`]).
    pub fn kleene_star(&self) -> Result<Self, MaxPlusError> {
        let radius = self.spectral_radius()?;
        if radius > 1.0 + KLEENE_STAR_TOLERANCE {
            return Err(MaxPlusError::SpectralRadiusExceedsOne { spectral_radius: radius });
        }
        let mut star = TropicalMatrix::identity(self.rows);
        let mut power = TropicalMatrix::identity(self.rows);
        for _ in 1..self.rows {
            power = power.max_mul(self)?;
            star = star.max_add(&power)?;
        }
        Ok(star)
    }
}

/// Column vector over the max-times semiring.
#[derive(Debug, Clone, PartialEq)]
pub struct TropicalVector {
    data: Vec<f64>,
}

impl TropicalVector {
    pub fn new(data: Vec<f64>) -> Result<Self, MaxPlusError> {
        if data.is_empty() {
            return Err(MaxPlusError::Empty);
        }
        for (idx, &v) in data.iter().enumerate() {
            check_entry(idx, 0, v)?;
        }
        Ok(TropicalVector { data })
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn get(&self, index: usize) -> f64 {
        self.data[index]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn is_positive(&self) -> bool {
        self.data.iter().all(|&v| v > 0.0)
    }

    pub fn scale(&self, factor: f64) -> Result<Self, MaxPlusError> {
        if !factor.is_finite() || factor < 0.0 {
            return Err(MaxPlusError::InvalidScalar { value: factor });
        }
        Ok(TropicalVector { data: self.data.iter().map(|&v| factor * v).collect() })
    }

    pub fn max_add(&self, other: &Self) -> Result<Self, MaxPlusError> {
        if self.len() != other.len() {
            return Err(MaxPlusError::DimensionMismatch {
                expected: (self.len(), 1),
                got: (other.len(), 1),
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Ok(TropicalVector { data })
    }

    /// Interprets the vector as an `n × 1` matrix.
    pub fn to_column_matrix(&self) -> TropicalMatrix {
        TropicalMatrix { rows: self.data.len(), cols: 1, data: self.data.clone() }
    }

    /// Hilbert (range) seminorm: the ratio of the largest to the smallest
    /// entry. Requires a positive vector.
    pub fn hilbert_seminorm(&self) -> Result<f64, MaxPlusError> {
        hilbert_seminorm(&self.data)
    }
}

/// Hilbert seminorm of a positive slice: `max(x) / min(x)`.
pub fn hilbert_seminorm(values: &[f64]) -> Result<f64, MaxPlusError> {
    if values.is_empty() {
        return Err(MaxPlusError::Empty);
    }
    let mut max = f64::MIN;
    let mut min = f64::MAX;
    for (index, &v) in values.iter().enumerate() {
        if v <= 0.0 {
            return Err(MaxPlusError::ZeroEntry { index });
        }
        max = max.max(v);
        min = min.min(v);
    }
    Ok(max / min)
}

/// Tests whether `b` is a max-linear combination of the columns of
/// `columns`, via the criterion `(A(b⁻A)⁻)⁻ b = 1` evaluated within
/// [`LINEAR_DEPENDENCE_TOLERANCE`].
pub fn is_linearly_dependent(
    b: &TropicalVector,
    columns: &TropicalMatrix,
) -> Result<bool, MaxPlusError> {
    if columns.cols() == 0 {
        return Err(MaxPlusError::NoColumns);
    }
    if columns.rows() != b.len() {
        return Err(MaxPlusError::DimensionMismatch {
            expected: (b.len(), columns.cols()),
            got: (columns.rows(), columns.cols()),
        });
    }
    Ok(dependence_value(b, columns))
}

/// Dependence criterion with the operands already shape-checked.
pub(crate) fn dependence_value(b: &TropicalVector, columns: &TropicalMatrix) -> bool {
    let b_col = b.to_column_matrix();
    let b_conj = b_col.conjugate_transpose(); // 1 × n
    let inner = b_conj
        .max_mul(columns)
        .expect("shape checked")
        .conjugate_transpose(); // m × 1
    let projected = columns.max_mul(&inner).expect("shape checked"); // n × 1
    let value = projected
        .conjugate_transpose()
        .max_mul(&b_col)
        .expect("shape checked")
        .get(0, 0);
    float::abs(value - 1.0) <= LINEAR_DEPENDENCE_TOLERANCE
}

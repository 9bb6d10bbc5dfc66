//! Rating derivation from pairwise comparison matrices.
//!
//! Three methods run side by side:
//!
//! * [`principal_eigenvector_rate`] — the Perron vector of the positive
//!   comparison matrix, obtained by power iteration in ordinary arithmetic;
//! * [`geometric_mean_rate`] — the geometric mean of each row;
//! * the Chebyshev approximation of the matrix by a consistent one on the
//!   logarithmic scale, which minimizes `max_ij a_ij x_j / x_i`. The full
//!   solution set is a cone generated by the columns of the Kleene star
//!   `(λ⁻¹A)*` (see [`solve_cone`]); when it is not reduced to a single ray,
//!   [`best_differentiating`] and [`worst_differentiating`] pick the members
//!   with the largest and smallest Hilbert seminorm.
//!
//! All rating vectors are normalized so that their largest entry is one.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::float;
use crate::maxplus::{self, MaxPlusError, TropicalMatrix, TropicalVector};

/// Convergence threshold for the power iteration, in max-norm between
/// successive normalized iterates.
pub const POWER_ITERATION_TOLERANCE: f64 = 1e-12;

/// Iteration cap for the power iteration. Positive matrices converge long
/// before this; the cap catches pathological numeric input.
pub const POWER_ITERATION_LIMIT: usize = 10_000;

#[derive(Debug, Clone, PartialEq)]
pub enum RatingError {
    /// An entry that must be positive is zero, negative or not finite.
    NotPositive { row: usize, col: usize, value: f64 },
    /// The number of upper-triangle entries does not match the dimension.
    TriangleSize { dimension: usize, expected: usize, got: usize },
    /// Matrices must have dimension at least one.
    Empty,
    /// Power iteration failed to converge within the iteration cap.
    ConvergenceFailure { iterations: usize },
    /// Propagated max-times algebra failure.
    MaxPlus(MaxPlusError),
}

impl fmt::Display for RatingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RatingError::NotPositive { row, col, value } => write!(
                f,
                "entry ({}, {}) must be positive and finite, got {}",
                row, col, value
            ),
            RatingError::TriangleSize { dimension, expected, got } => write!(
                f,
                "upper triangle of a {0}x{0} matrix needs {1} entries, got {2}",
                dimension, expected, got
            ),
            RatingError::Empty => write!(f, "comparison matrices must have dimension at least one"),
            RatingError::ConvergenceFailure { iterations } => write!(
                f,
                "power iteration did not converge within {} iterations",
                iterations
            ),
            RatingError::MaxPlus(err) => write!(f, "{}", err),
        }
    }
}

impl From<MaxPlusError> for RatingError {
    fn from(err: MaxPlusError) -> Self {
        RatingError::MaxPlus(err)
    }
}

impl core::error::Error for RatingError {}

/// Positive square matrix of pairwise preference ratios. Only the strict
/// upper triangle is stored, so `a_ji = 1/a_ij` and `a_ii = 1` hold exactly
/// by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonMatrix {
    dimension: usize,
    upper: Vec<f64>,
}

impl ComparisonMatrix {
    /// Builds a matrix of dimension `n` from its strict upper triangle in
    /// row-major order: `(0,1), (0,2), …, (n−2,n−1)`.
    pub fn from_upper(dimension: usize, upper: Vec<f64>) -> Result<Self, RatingError> {
        if dimension == 0 {
            return Err(RatingError::Empty);
        }
        let expected = dimension * (dimension - 1) / 2;
        if upper.len() != expected {
            return Err(RatingError::TriangleSize {
                dimension,
                expected,
                got: upper.len(),
            });
        }
        let mut idx = 0;
        for i in 0..dimension {
            for j in (i + 1)..dimension {
                let v = upper[idx];
                if !(v.is_finite() && v > 0.0) {
                    return Err(RatingError::NotPositive { row: i, col: j, value: v });
                }
                idx += 1;
            }
        }
        Ok(ComparisonMatrix { dimension, upper })
    }

    /// The consistent matrix `a_ij = x_i / x_j` generated by a positive
    /// weight vector.
    pub fn from_weights(weights: &[f64]) -> Result<Self, RatingError> {
        if weights.is_empty() {
            return Err(RatingError::Empty);
        }
        for (i, &w) in weights.iter().enumerate() {
            if !(w.is_finite() && w > 0.0) {
                return Err(RatingError::NotPositive { row: i, col: i, value: w });
            }
        }
        let n = weights.len();
        let mut upper = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in (i + 1)..n {
                upper.push(weights[i] / weights[j]);
            }
        }
        ComparisonMatrix::from_upper(n, upper)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        use core::cmp::Ordering;
        match row.cmp(&col) {
            Ordering::Equal => 1.0,
            Ordering::Less => self.upper[self.upper_index(row, col)],
            Ordering::Greater => 1.0 / self.upper[self.upper_index(col, row)],
        }
    }

    fn upper_index(&self, row: usize, col: usize) -> usize {
        // Entries of rows 0..row take n-1 + n-2 + … slots.
        row * self.dimension - row * (row + 1) / 2 + (col - row - 1)
    }

    /// The full matrix as a max-times operand.
    pub fn to_tropical(&self) -> TropicalMatrix {
        let n = self.dimension;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(self.get(i, j));
            }
        }
        TropicalMatrix::new(n, n, data).expect("comparison entries are positive")
    }
}

/// The producing method of a rating vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RatingMethod {
    /// Scores stated directly by the respondent (SR).
    Direct,
    /// Principal eigenvector of the comparison matrix (SPE).
    PrincipalEigenvector,
    /// Row geometric means (SGM).
    GeometricMean,
    /// Best differentiating Chebyshev-approximation solution (SCB).
    ChebyshevBest,
    /// Worst differentiating Chebyshev-approximation solution (SCW).
    ChebyshevWorst,
}

impl RatingMethod {
    pub const ALL: [RatingMethod; 5] = [
        RatingMethod::Direct,
        RatingMethod::PrincipalEigenvector,
        RatingMethod::GeometricMean,
        RatingMethod::ChebyshevBest,
        RatingMethod::ChebyshevWorst,
    ];

    /// Short table code for rendering and serialization.
    pub fn code(&self) -> &'static str {
        match self {
            RatingMethod::Direct => "SR",
            RatingMethod::PrincipalEigenvector => "SPE",
            RatingMethod::GeometricMean => "SGM",
            RatingMethod::ChebyshevBest => "SCB",
            RatingMethod::ChebyshevWorst => "SCW",
        }
    }

    pub fn from_code(code: &str) -> Option<Self> {
        RatingMethod::ALL.into_iter().find(|m| m.code() == code)
    }
}

/// Positive per-criterion scores normalized so the largest entry is one,
/// tagged with the producing method.
#[derive(Debug, Clone, PartialEq)]
pub struct RatingVector {
    scores: Vec<f64>,
    method: RatingMethod,
}

impl RatingVector {
    /// Normalizes the scores by their maximum. Every score must be positive
    /// and finite.
    pub fn new(scores: Vec<f64>, method: RatingMethod) -> Result<Self, RatingError> {
        if scores.is_empty() {
            return Err(RatingError::Empty);
        }
        let mut max = 0.0_f64;
        for (i, &v) in scores.iter().enumerate() {
            if !(v.is_finite() && v > 0.0) {
                return Err(RatingError::NotPositive { row: i, col: 0, value: v });
            }
            max = max.max(v);
        }
        let scores = scores.into_iter().map(|v| v / max).collect();
        Ok(RatingVector { scores, method })
    }

    pub fn scores(&self) -> &[f64] {
        &self.scores
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    pub fn method(&self) -> RatingMethod {
        self.method
    }

    /// Hilbert seminorm of the scores; infallible because the entries are
    /// positive by construction.
    pub fn hilbert_seminorm(&self) -> f64 {
        maxplus::hilbert_seminorm(&self.scores).expect("scores are positive")
    }
}

/// All optimal vectors of the log-Chebyshev approximation problem for one
/// comparison matrix: the cone of max-linear combinations of the columns of
/// `(λ⁻¹A)*`.
#[derive(Debug, Clone)]
pub struct SolutionCone {
    generators: TropicalMatrix,
    pruned: TropicalMatrix,
    spectral_radius: f64,
}

impl SolutionCone {
    /// The full Kleene star `(λ⁻¹A)*` whose columns generate the cone.
    pub fn generators(&self) -> &TropicalMatrix {
        &self.generators
    }

    /// Maximal linearly independent subset of the generator columns.
    pub fn pruned_generators(&self) -> &TropicalMatrix {
        &self.pruned
    }

    /// Spectral radius `λ` of the comparison matrix; also the optimal
    /// objective value.
    pub fn spectral_radius(&self) -> f64 {
        self.spectral_radius
    }

    /// The solution is unique (up to scaling) exactly when pruning leaves a
    /// single generator column.
    pub fn is_unique(&self) -> bool {
        self.pruned.cols() == 1
    }
}

/// Perron vector of the comparison matrix, max-normalized.
pub fn principal_eigenvector_rate(a: &ComparisonMatrix) -> Result<RatingVector, RatingError> {
    let n = a.dimension();
    let mut current = vec![1.0_f64; n];
    for _ in 0..POWER_ITERATION_LIMIT {
        let mut next = vec![0.0_f64; n];
        for i in 0..n {
            let mut sum = 0.0;
            for j in 0..n {
                sum += a.get(i, j) * current[j];
            }
            next[i] = sum;
        }
        let max = next.iter().cloned().fold(f64::MIN, f64::max);
        for v in &mut next {
            *v /= max;
        }
        let diff = current
            .iter()
            .zip(&next)
            .map(|(&c, &n)| float::abs(c - n))
            .fold(0.0_f64, f64::max);
        current = next;
        if diff < POWER_ITERATION_TOLERANCE {
            return RatingVector::new(current, RatingMethod::PrincipalEigenvector);
        }
    }
    Err(RatingError::ConvergenceFailure { iterations: POWER_ITERATION_LIMIT })
}

/// Row geometric means `x_i = (∏_j a_ij)^(1/n)`, max-normalized.
pub fn geometric_mean_rate(a: &ComparisonMatrix) -> RatingVector {
    let n = a.dimension();
    let scores: Vec<f64> = (0..n)
        .map(|i| {
            let product: f64 = (0..n).map(|j| a.get(i, j)).product();
            float::powf(product, 1.0 / n as f64)
        })
        .collect();
    RatingVector::new(scores, RatingMethod::GeometricMean)
        .expect("row products of positive entries are positive")
}

/// Maximum relative deviation `max_ij a_ij x_j / x_i` of the consistent
/// matrix generated by `x` from `a`; the quantity minimized by the
/// log-Chebyshev approximation. `x` must be positive with one entry per
/// criterion.
pub fn log_chebyshev_objective(a: &ComparisonMatrix, x: &[f64]) -> f64 {
    assert_eq!(x.len(), a.dimension(), "vector length must match matrix dimension");
    let n = a.dimension();
    let mut worst = 0.0_f64;
    for i in 0..n {
        for j in 0..n {
            worst = worst.max(a.get(i, j) * x[j] / x[i]);
        }
    }
    worst
}

/// Solves the log-Chebyshev approximation problem: computes `λ`, the
/// generating Kleene star `B = (λ⁻¹A)*` and its pruned column set.
pub fn solve_cone(a: &ComparisonMatrix) -> Result<SolutionCone, RatingError> {
    let tropical = a.to_tropical();
    let radius = tropical.spectral_radius()?;
    let generators = tropical.scale(1.0 / radius)?.kleene_star()?;
    let pruned = prune_columns(&generators);
    Ok(SolutionCone { generators, pruned, spectral_radius: radius })
}

/// Deletes, in ascending column order, every column that is a max-linear
/// combination of the columns not yet deleted. The retained set generates
/// the same cone.
pub fn prune_columns(b: &TropicalMatrix) -> TropicalMatrix {
    let mut columns: Vec<TropicalVector> = (0..b.cols()).map(|j| b.column(j)).collect();
    let mut index = 0;
    while index < columns.len() && columns.len() > 1 {
        let candidate = columns[index].clone();
        let others: Vec<TropicalVector> = columns
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != index)
            .map(|(_, c)| c.clone())
            .collect();
        let others = TropicalMatrix::from_columns(&others).expect("at least one column remains");
        if maxplus::dependence_value(&candidate, &others) {
            columns.remove(index);
        } else {
            index += 1;
        }
    }
    TropicalMatrix::from_columns(&columns).expect("pruning keeps at least one column")
}

/// Index of the pruned generator column with the largest Hilbert seminorm
/// (smallest index on ties) and the seminorm value `Δ = 1ᵀBB⁻1`.
fn best_column(pruned: &TropicalMatrix) -> (usize, f64) {
    let mut best = (0, 0.0_f64);
    for j in 0..pruned.cols() {
        let seminorm = pruned
            .column(j)
            .hilbert_seminorm()
            .expect("generator columns are positive");
        if seminorm > best.1 {
            best = (j, seminorm);
        }
    }
    best
}

/// The cone member with the largest Hilbert seminorm.
///
/// Writing `B` for the pruned generators, the maximizers form the family
/// `x = B(I ⊕ B⁻_{lk}B)u` over positive `u`, where `k` maximizes the column
/// seminorm `1ᵀb_j b_j⁻ 1`, `l` maximizes `b_ik⁻¹`, and `B_{lk}` keeps only
/// entry `(l, k)` of `B`. The representative reported here is the member at
/// `u = e_k`, which is the generator column `b_k` itself.
pub fn best_differentiating(cone: &SolutionCone) -> RatingVector {
    let pruned = cone.pruned_generators();
    let (k, _) = best_column(pruned);
    let column_k = pruned.column(k);
    let mut l = 0;
    for i in 1..column_k.len() {
        if column_k.get(i) < column_k.get(l) {
            l = i;
        }
    }
    let mut lk_data = vec![0.0; pruned.rows() * pruned.cols()];
    lk_data[l * pruned.cols() + k] = pruned.get(l, k);
    let lk_only = TropicalMatrix::new(pruned.rows(), pruned.cols(), lk_data)
        .expect("one positive entry");
    let inner = lk_only
        .conjugate_transpose()
        .max_mul(pruned)
        .expect("shapes agree");
    let identity = TropicalMatrix::identity(pruned.cols());
    let family = pruned
        .max_mul(&identity.max_add(&inner).expect("square"))
        .expect("shapes agree");
    let representative = family.column(k);
    RatingVector::new(representative.as_slice().to_vec(), RatingMethod::ChebyshevBest)
        .expect("generator columns are positive")
}

/// The cone member with the smallest Hilbert seminorm.
///
/// The minimizers form the family `x = (δ⁻¹11ᵀ ⊕ λ⁻¹A)*u` over positive
/// `u`, with `δ = 1ᵀ(λ⁻¹A)*1`. The representative reported here takes
/// `u_j = 1/max(g_j)` over the family's generator columns `g_j`, i.e. the
/// row maxima of the column-normalized generators — the componentwise
/// largest max-normalized member of the family.
pub fn worst_differentiating(
    a: &ComparisonMatrix,
    cone: &SolutionCone,
) -> Result<RatingVector, RatingError> {
    let n = a.dimension();
    let star = cone.generators();
    // δ = 1ᵀB1 is just the largest entry of B.
    let mut delta = 0.0_f64;
    for i in 0..n {
        for j in 0..n {
            delta = delta.max(star.get(i, j));
        }
    }
    let scaled = a.to_tropical().scale(1.0 / cone.spectral_radius())?;
    let family = TropicalMatrix::ones(n, n)
        .scale(1.0 / delta)?
        .max_add(&scaled)?
        .kleene_star()?;
    let mut scores = vec![0.0_f64; n];
    for j in 0..n {
        let column_max = (0..n).map(|i| family.get(i, j)).fold(f64::MIN, f64::max);
        for (i, score) in scores.iter_mut().enumerate() {
            *score = score.max(family.get(i, j) / column_max);
        }
    }
    RatingVector::new(scores, RatingMethod::ChebyshevWorst).map_err(Into::into)
}

/// Rating vectors of every indirect method for one comparison matrix,
/// together with the cone diagnostics the callers report.
#[derive(Debug, Clone)]
pub struct MethodRatings {
    pub principal_eigenvector: RatingVector,
    pub geometric_mean: RatingVector,
    pub chebyshev_best: RatingVector,
    pub chebyshev_worst: RatingVector,
    pub spectral_radius: f64,
    pub unique: bool,
}

impl MethodRatings {
    pub fn get(&self, method: RatingMethod) -> Option<&RatingVector> {
        match method {
            RatingMethod::Direct => None,
            RatingMethod::PrincipalEigenvector => Some(&self.principal_eigenvector),
            RatingMethod::GeometricMean => Some(&self.geometric_mean),
            RatingMethod::ChebyshevBest => Some(&self.chebyshev_best),
            RatingMethod::ChebyshevWorst => Some(&self.chebyshev_worst),
        }
    }

    /// Method-keyed view over the four computed vectors.
    pub fn as_map(&self) -> BTreeMap<RatingMethod, &RatingVector> {
        RatingMethod::ALL
            .into_iter()
            .filter_map(|m| self.get(m).map(|v| (m, v)))
            .collect()
    }
}

/// Runs all four indirect rating methods on one matrix.
pub fn rate_all(a: &ComparisonMatrix) -> Result<MethodRatings, RatingError> {
    let cone = solve_cone(a)?;
    Ok(MethodRatings {
        principal_eigenvector: principal_eigenvector_rate(a)?,
        geometric_mean: geometric_mean_rate(a),
        chebyshev_best: best_differentiating(&cone),
        chebyshev_worst: worst_differentiating(a, &cone)?,
        spectral_radius: cone.spectral_radius(),
        unique: cone.is_unique(),
    })
}

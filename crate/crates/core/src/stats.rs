//! Batch statistics over respondents: match counts, rank distances,
//! consistency groups, correlations of concatenated vectors, mean/deviation
//! summaries, frequency tables and within-distance counts.
//!
//! Every aggregation is a pure fold over an immutable slice of
//! [`RespondentProfile`] values, so batches can be mapped in parallel and
//! reduced deterministically.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::float;
use crate::ranking::{RankMethod, RankVector};
use crate::rating::{RatingMethod, RatingVector};

#[derive(Debug, Clone, PartialEq)]
pub enum StatsError {
    LengthMismatch { left: usize, right: usize },
    /// Correlations need at least two observations.
    TooShort { len: usize },
    /// Pearson correlation is undefined when an argument has no variance.
    ZeroVariance,
    EmptyBatch,
}

impl fmt::Display for StatsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatsError::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {} vs {}", left, right)
            }
            StatsError::TooShort { len } => {
                write!(f, "need at least two observations, got {}", len)
            }
            StatsError::ZeroVariance => write!(f, "argument has zero variance"),
            StatsError::EmptyBatch => write!(f, "batch must be non-empty"),
        }
    }
}

impl core::error::Error for StatsError {}

/// Chebyshev distance between rank vectors: the maximum absolute
/// componentwise difference.
pub fn chebyshev_rank_distance(a: &RankVector, b: &RankVector) -> Result<u32, StatsError> {
    if a.len() != b.len() {
        return Err(StatsError::LengthMismatch { left: a.len(), right: b.len() });
    }
    Ok(a.ranks()
        .iter()
        .zip(b.ranks())
        .map(|(&x, &y)| x.abs_diff(y))
        .max()
        .unwrap_or(0))
}

/// Hamming distance between rank vectors: the number of positions where the
/// ranks differ.
pub fn hamming_rank_distance(a: &RankVector, b: &RankVector) -> Result<u32, StatsError> {
    if a.len() != b.len() {
        return Err(StatsError::LengthMismatch { left: a.len(), right: b.len() });
    }
    Ok(a.ranks()
        .iter()
        .zip(b.ranks())
        .filter(|(&x, &y)| x != y)
        .count() as u32)
}

/// Kendall rank correlation, tau-a flavor:
/// `(2 / n(n−1)) Σ_{i<j} sgn(a_i − a_j) sgn(b_i − b_j)`, with no tie
/// correction.
pub fn kendall_tau(a: &[f64], b: &[f64]) -> Result<f64, StatsError> {
    if a.len() != b.len() {
        return Err(StatsError::LengthMismatch { left: a.len(), right: b.len() });
    }
    let n = a.len();
    if n < 2 {
        return Err(StatsError::TooShort { len: n });
    }
    let mut sum = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            sum += sign(a[i] - a[j]) * sign(b[i] - b[j]);
        }
    }
    Ok(2.0 * sum / (n as f64 * (n as f64 - 1.0)))
}

fn sign(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// Sample Pearson correlation coefficient.
pub fn pearson(a: &[f64], b: &[f64]) -> Result<f64, StatsError> {
    if a.len() != b.len() {
        return Err(StatsError::LengthMismatch { left: a.len(), right: b.len() });
    }
    let n = a.len();
    if n < 2 {
        return Err(StatsError::TooShort { len: n });
    }
    let mean_a = a.iter().sum::<f64>() / n as f64;
    let mean_b = b.iter().sum::<f64>() / n as f64;
    let mut cov = 0.0;
    let mut var_a = 0.0;
    let mut var_b = 0.0;
    for (&x, &y) in a.iter().zip(b) {
        cov += (x - mean_a) * (y - mean_b);
        var_a += (x - mean_a) * (x - mean_a);
        var_b += (y - mean_b) * (y - mean_b);
    }
    if var_a == 0.0 || var_b == 0.0 {
        return Err(StatsError::ZeroVariance);
    }
    Ok(cov / float::sqrt(var_a * var_b))
}

/// Respondent sex as recorded in the survey.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sex {
    Male,
    Female,
    Unspecified,
}

/// Survey attributes carried along for group summaries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RespondentInfo {
    pub age: u32,
    pub sex: Sex,
    pub visited: bool,
}

/// The five rating vectors of one respondent.
#[derive(Debug, Clone)]
pub struct RatingProfile {
    pub direct: RatingVector,
    pub principal_eigenvector: RatingVector,
    pub geometric_mean: RatingVector,
    pub chebyshev_best: RatingVector,
    pub chebyshev_worst: RatingVector,
}

impl RatingProfile {
    pub fn get(&self, method: RatingMethod) -> &RatingVector {
        match method {
            RatingMethod::Direct => &self.direct,
            RatingMethod::PrincipalEigenvector => &self.principal_eigenvector,
            RatingMethod::GeometricMean => &self.geometric_mean,
            RatingMethod::ChebyshevBest => &self.chebyshev_best,
            RatingMethod::ChebyshevWorst => &self.chebyshev_worst,
        }
    }
}

/// The six rank vectors of one respondent.
#[derive(Debug, Clone)]
pub struct RankProfile {
    pub direct: RankVector,
    pub from_direct_scores: RankVector,
    pub from_principal_eigenvector: RankVector,
    pub from_geometric_mean: RankVector,
    pub from_chebyshev_best: RankVector,
    pub from_chebyshev_worst: RankVector,
}

impl RankProfile {
    pub fn get(&self, method: RankMethod) -> &RankVector {
        match method {
            RankMethod::Direct => &self.direct,
            RankMethod::FromDirectScores => &self.from_direct_scores,
            RankMethod::FromPrincipalEigenvector => &self.from_principal_eigenvector,
            RankMethod::FromGeometricMean => &self.from_geometric_mean,
            RankMethod::FromChebyshevBest => &self.from_chebyshev_best,
            RankMethod::FromChebyshevWorst => &self.from_chebyshev_worst,
        }
    }
}

/// Everything the statistics pipeline needs about one respondent.
#[derive(Debug, Clone)]
pub struct RespondentProfile {
    pub info: RespondentInfo,
    pub ratings: RatingProfile,
    pub ranks: RankProfile,
}

/// Square table over method tags; symmetric, with the batch size (for match
/// counts) or 1 (for correlations) on the diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct PairTable<T> {
    labels: Vec<&'static str>,
    cells: Vec<T>,
}

impl<T: Clone> PairTable<T> {
    pub fn new(labels: Vec<&'static str>, cells: Vec<T>) -> Self {
        assert_eq!(labels.len() * labels.len(), cells.len());
        PairTable { labels, cells }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[&'static str] {
        &self.labels
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.cells[row * self.labels.len() + col]
    }

    pub fn by_labels(&self, row: &str, col: &str) -> Option<&T> {
        let r = self.labels.iter().position(|&l| l == row)?;
        let c = self.labels.iter().position(|&l| l == col)?;
        Some(self.get(r, c))
    }
}

/// Counts, for every pair of ranking methods, the respondents whose two rank
/// vectors are identical. Symmetric with the batch size on the diagonal.
pub fn match_table(batch: &[RespondentProfile]) -> PairTable<usize> {
    let methods = RankMethod::ALL;
    let mut cells = vec![0usize; methods.len() * methods.len()];
    for profile in batch {
        for (r, &u) in methods.iter().enumerate() {
            for (c, &v) in methods.iter().enumerate() {
                if profile.ranks.get(u).ranks() == profile.ranks.get(v).ranks() {
                    cells[r * methods.len() + c] += 1;
                }
            }
        }
    }
    PairTable::new(methods.iter().map(|m| m.code()).collect(), cells)
}

/// One nested consistency group: the respondents whose direct ranks and
/// ranks from direct scores differ by at most `max_difference` in the
/// Chebyshev metric.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupSummary {
    pub max_difference: u32,
    /// Indices into the batch, ascending.
    pub members: Vec<usize>,
    pub percent_visited: Option<f64>,
    pub percent_male: Option<f64>,
    pub percent_female: Option<f64>,
}

impl GroupSummary {
    pub fn count(&self) -> usize {
        self.members.len()
    }
}

/// Builds the nested groups for thresholds `0..=max_difference`.
pub fn consistency_groups(batch: &[RespondentProfile], max_difference: u32) -> Vec<GroupSummary> {
    let distances: Vec<u32> = batch
        .iter()
        .map(|p| {
            chebyshev_rank_distance(&p.ranks.direct, &p.ranks.from_direct_scores)
                .expect("profile vectors share one dimension")
        })
        .collect();
    (0..=max_difference)
        .map(|threshold| {
            let members: Vec<usize> = distances
                .iter()
                .enumerate()
                .filter(|&(_, &d)| d <= threshold)
                .map(|(i, _)| i)
                .collect();
            let count = members.len();
            let percent = |pred: &dyn Fn(&RespondentInfo) -> bool| {
                if count == 0 {
                    None
                } else {
                    let hits = members.iter().filter(|&&i| pred(&batch[i].info)).count();
                    Some(100.0 * hits as f64 / count as f64)
                }
            };
            GroupSummary {
                max_difference: threshold,
                percent_visited: percent(&|info| info.visited),
                percent_male: percent(&|info| info.sex == Sex::Male),
                percent_female: percent(&|info| info.sex == Sex::Female),
                members,
            }
        })
        .collect()
}

/// Which flavor of standard deviation a summary uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StdVariant {
    /// Divide by N (descriptive summaries; the default).
    Population,
    /// Divide by N − 1.
    Sample,
}

impl StdVariant {
    pub fn label(&self) -> &'static str {
        match self {
            StdVariant::Population => "population",
            StdVariant::Sample => "sample",
        }
    }
}

/// Componentwise mean and standard deviation of one method's rating vectors
/// over the batch, plus the two scalar variability measures.
#[derive(Debug, Clone, PartialEq)]
pub struct MeanStd {
    pub mean: Vec<f64>,
    pub std: Vec<f64>,
    /// Mean of the componentwise standard deviations.
    pub average_std: f64,
    /// Square root of the sum of squared componentwise standard deviations.
    pub total_std: f64,
}

pub fn mean_and_std(
    batch: &[RespondentProfile],
    method: RatingMethod,
    variant: StdVariant,
) -> Result<MeanStd, StatsError> {
    if batch.is_empty() {
        return Err(StatsError::EmptyBatch);
    }
    let n = batch[0].ratings.get(method).len();
    let count = batch.len() as f64;
    let mut mean = vec![0.0; n];
    for profile in batch {
        for (m, &s) in mean.iter_mut().zip(profile.ratings.get(method).scores()) {
            *m += s;
        }
    }
    for m in &mut mean {
        *m /= count;
    }
    let mut std = vec![0.0; n];
    for profile in batch {
        for (v, (&s, &m)) in std
            .iter_mut()
            .zip(profile.ratings.get(method).scores().iter().zip(&mean))
        {
            *v += (s - m) * (s - m);
        }
    }
    let divisor = match variant {
        StdVariant::Population => count,
        StdVariant::Sample => (count - 1.0).max(1.0),
    };
    for v in &mut std {
        *v = float::sqrt(*v / divisor);
    }
    let average_std = std.iter().sum::<f64>() / n as f64;
    let total_std = float::sqrt(std.iter().map(|v| v * v).sum::<f64>());
    Ok(MeanStd { mean, std, average_std, total_std })
}

/// A rating- or rank-vector family selected for correlation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VectorTag {
    Rating(RatingMethod),
    Rank(RankMethod),
}

impl VectorTag {
    pub fn code(&self) -> &'static str {
        match self {
            VectorTag::Rating(m) => m.code(),
            VectorTag::Rank(m) => m.code(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorrelationKind {
    Pearson,
    Kendall,
}

fn concatenate(batch: &[RespondentProfile], tag: VectorTag) -> Vec<f64> {
    let mut out = Vec::new();
    for profile in batch {
        match tag {
            VectorTag::Rating(m) => out.extend_from_slice(profile.ratings.get(m).scores()),
            VectorTag::Rank(m) => {
                out.extend(profile.ranks.get(m).ranks().iter().map(|&r| r as f64))
            }
        }
    }
    out
}

/// Correlation between the two vectors obtained by concatenating a method's
/// per-respondent vectors over the whole batch. A tag correlated with itself
/// is 1 by definition; the tau-a formula would report less whenever the
/// concatenation carries cross-respondent ties.
pub fn concatenated_correlation(
    batch: &[RespondentProfile],
    tag_u: VectorTag,
    tag_v: VectorTag,
    kind: CorrelationKind,
) -> Result<f64, StatsError> {
    if batch.is_empty() {
        return Err(StatsError::EmptyBatch);
    }
    if tag_u == tag_v {
        return Ok(1.0);
    }
    let u = concatenate(batch, tag_u);
    let v = concatenate(batch, tag_v);
    match kind {
        CorrelationKind::Pearson => pearson(&u, &v),
        CorrelationKind::Kendall => kendall_tau(&u, &v),
    }
}

/// One row of a frequency table.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyEntry {
    pub ranks: RankVector,
    pub count: usize,
}

/// The `top_k` most frequent rank vectors for one method, by descending
/// count; ties on the count break lexicographically on the rank vector.
pub fn frequency_table(
    batch: &[RespondentProfile],
    method: RankMethod,
    top_k: usize,
) -> Vec<FrequencyEntry> {
    let mut distinct: Vec<(Vec<u32>, usize)> = Vec::new();
    for profile in batch {
        let ranks = profile.ranks.get(method).ranks();
        match distinct.iter_mut().find(|(r, _)| r == ranks) {
            Some((_, count)) => *count += 1,
            None => distinct.push((ranks.to_vec(), 1)),
        }
    }
    distinct.sort_by(|(ra, ca), (rb, cb)| cb.cmp(ca).then(ra.cmp(rb)));
    distinct
        .into_iter()
        .take(top_k)
        .map(|(ranks, count)| FrequencyEntry {
            ranks: RankVector::new(ranks, method).expect("profiles hold permutations"),
            count,
        })
        .collect()
}

/// Cumulative counts of respondents whose rank vector for `method` lies
/// within Hamming distance `d` of `reference`, for `d = 0..=n`.
pub fn within_distance_counts(
    batch: &[RespondentProfile],
    method: RankMethod,
    reference: &RankVector,
) -> Result<Vec<usize>, StatsError> {
    let n = reference.len();
    let mut counts = vec![0usize; n + 1];
    for profile in batch {
        let d = hamming_rank_distance(profile.ranks.get(method), reference)? as usize;
        counts[d] += 1;
    }
    for d in 1..=n {
        counts[d] += counts[d - 1];
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ranking::RankMethod;

    fn rank(ranks: &[u32], method: RankMethod) -> RankVector {
        RankVector::new(ranks.to_vec(), method).unwrap()
    }

    #[test]
    fn chebyshev_distance_examples() {
        let a = rank(&[1, 2, 3, 4, 5, 6], RankMethod::Direct);
        assert_eq!(chebyshev_rank_distance(&a, &a).unwrap(), 0);
        let b = rank(&[6, 2, 3, 4, 5, 1], RankMethod::Direct);
        assert_eq!(chebyshev_rank_distance(&a, &b).unwrap(), 5);
        let rr = rank(&[3, 2, 5, 4, 1, 6], RankMethod::Direct);
        let rsr = rank(&[3, 1, 5, 4, 2, 6], RankMethod::FromDirectScores);
        assert_eq!(chebyshev_rank_distance(&rr, &rsr).unwrap(), 1);
    }

    #[test]
    fn hamming_distance_examples() {
        let a = rank(&[2, 1, 5, 6, 3, 4], RankMethod::Direct);
        assert_eq!(hamming_rank_distance(&a, &a).unwrap(), 0);
        let b = rank(&[2, 1, 5, 3, 4, 6], RankMethod::Direct);
        assert_eq!(hamming_rank_distance(&a, &b).unwrap(), 3);
    }

    #[test]
    fn distance_rejects_length_mismatch() {
        let a = rank(&[1, 2], RankMethod::Direct);
        let b = rank(&[1, 2, 3], RankMethod::Direct);
        assert!(chebyshev_rank_distance(&a, &b).is_err());
        assert!(hamming_rank_distance(&a, &b).is_err());
    }

    #[test]
    fn kendall_tau_examples() {
        assert_eq!(kendall_tau(&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0]).unwrap(), 1.0);
        assert_eq!(kendall_tau(&[1.0, 2.0, 3.0], &[3.0, 2.0, 1.0]).unwrap(), -1.0);
        // Pairs (1,2): +1, (1,3): +1, (2,3): −1 — sum 1 over 3 pairs.
        let tau = kendall_tau(&[1.0, 2.0, 3.0], &[1.0, 3.0, 2.0]).unwrap();
        assert!((tau - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn kendall_tau_needs_two_observations() {
        assert!(matches!(
            kendall_tau(&[1.0], &[1.0]),
            Err(StatsError::TooShort { len: 1 })
        ));
    }

    #[test]
    fn pearson_examples() {
        assert!((pearson(&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0]).unwrap() - 1.0).abs() < 1e-15);
        let a = [0.3, 1.9, 0.7, 1.1];
        let negated: Vec<f64> = a.iter().map(|x| -x + 2.5).collect();
        assert!((pearson(&a, &negated).unwrap() + 1.0).abs() < 1e-12);
        assert!((pearson(&[1.0, 2.0, 3.0, 4.0], &[2.0, 4.0, 6.0, 8.0]).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn pearson_rejects_zero_variance() {
        assert!(matches!(
            pearson(&[1.0, 1.0, 1.0], &[1.0, 2.0, 3.0]),
            Err(StatsError::ZeroVariance)
        ));
    }

    fn uniform_profile(ranks: &[u32], visited: bool, sex: Sex) -> RespondentProfile {
        let rating = RatingVector::new(
            ranks.iter().map(|&r| 1.0 / r as f64).collect(),
            RatingMethod::Direct,
        )
        .unwrap();
        let rating_for = |m: RatingMethod| {
            RatingVector::new(rating.scores().to_vec(), m).unwrap()
        };
        let rank_for = |m: RankMethod| RankVector::new(ranks.to_vec(), m).unwrap();
        RespondentProfile {
            info: RespondentInfo { age: 20, sex, visited },
            ratings: RatingProfile {
                direct: rating_for(RatingMethod::Direct),
                principal_eigenvector: rating_for(RatingMethod::PrincipalEigenvector),
                geometric_mean: rating_for(RatingMethod::GeometricMean),
                chebyshev_best: rating_for(RatingMethod::ChebyshevBest),
                chebyshev_worst: rating_for(RatingMethod::ChebyshevWorst),
            },
            ranks: RankProfile {
                direct: rank_for(RankMethod::Direct),
                from_direct_scores: rank_for(RankMethod::FromDirectScores),
                from_principal_eigenvector: rank_for(RankMethod::FromPrincipalEigenvector),
                from_geometric_mean: rank_for(RankMethod::FromGeometricMean),
                from_chebyshev_best: rank_for(RankMethod::FromChebyshevBest),
                from_chebyshev_worst: rank_for(RankMethod::FromChebyshevWorst),
            },
        }
    }

    #[test]
    fn match_table_on_uniform_respondent_is_all_ones() {
        let batch = [uniform_profile(&[1, 2, 3], true, Sex::Male)];
        let table = match_table(&batch);
        for r in 0..table.size() {
            for c in 0..table.size() {
                assert_eq!(*table.get(r, c), 1);
            }
        }
    }

    #[test]
    fn match_table_diagonal_is_batch_size() {
        let batch = [
            uniform_profile(&[1, 2, 3], true, Sex::Male),
            uniform_profile(&[2, 1, 3], false, Sex::Female),
            uniform_profile(&[3, 2, 1], false, Sex::Female),
        ];
        let table = match_table(&batch);
        for i in 0..table.size() {
            assert_eq!(*table.get(i, i), 3);
        }
    }

    #[test]
    fn groups_nest_and_exhaust() {
        let mut perfect = uniform_profile(&[1, 2, 3, 4, 5, 6], true, Sex::Female);
        let mut off_by_five = uniform_profile(&[1, 2, 3, 4, 5, 6], false, Sex::Male);
        off_by_five.ranks.from_direct_scores =
            rank(&[6, 2, 3, 4, 5, 1], RankMethod::FromDirectScores);
        perfect.info.visited = true;
        let batch = [perfect, off_by_five];
        let groups = consistency_groups(&batch, 5);
        assert_eq!(groups.len(), 6);
        assert_eq!(groups[0].count(), 1);
        assert_eq!(groups[0].percent_visited, Some(100.0));
        assert_eq!(groups[0].percent_female, Some(100.0));
        for pair in groups.windows(2) {
            assert!(pair[0].count() <= pair[1].count());
        }
        assert_eq!(groups[5].count(), batch.len());
        assert_eq!(groups[4].count(), 1);
    }

    #[test]
    fn mean_and_std_on_identical_vectors_has_zero_spread() {
        let batch = [
            uniform_profile(&[1, 2, 3], true, Sex::Male),
            uniform_profile(&[1, 2, 3], false, Sex::Female),
        ];
        let summary = mean_and_std(&batch, RatingMethod::Direct, StdVariant::Population).unwrap();
        assert!(summary.std.iter().all(|&s| s == 0.0));
        assert_eq!(summary.average_std, 0.0);
        assert_eq!(summary.total_std, 0.0);
    }

    #[test]
    fn mean_and_std_hand_computed() {
        let mut low = uniform_profile(&[1, 2], true, Sex::Male);
        let mut high = uniform_profile(&[1, 2], true, Sex::Male);
        low.ratings.direct = RatingVector::new(vec![1.0, 0.2], RatingMethod::Direct).unwrap();
        high.ratings.direct = RatingVector::new(vec![1.0, 0.6], RatingMethod::Direct).unwrap();
        let batch = [low, high];
        let pop = mean_and_std(&batch, RatingMethod::Direct, StdVariant::Population).unwrap();
        assert!((pop.mean[1] - 0.4).abs() < 1e-15);
        assert!((pop.std[1] - 0.2).abs() < 1e-15);
        let sample = mean_and_std(&batch, RatingMethod::Direct, StdVariant::Sample).unwrap();
        assert!((sample.std[1] - 0.2 * 2.0_f64.sqrt()).abs() < 1e-15);
        assert!(mean_and_std(&[], RatingMethod::Direct, StdVariant::Population).is_err());
    }

    #[test]
    fn concatenated_correlation_of_tag_with_itself_is_one() {
        let batch = [
            uniform_profile(&[1, 2, 3], true, Sex::Male),
            uniform_profile(&[3, 1, 2], false, Sex::Female),
        ];
        let tau = concatenated_correlation(
            &batch,
            VectorTag::Rank(RankMethod::Direct),
            VectorTag::Rank(RankMethod::Direct),
            CorrelationKind::Kendall,
        )
        .unwrap();
        assert_eq!(tau, 1.0);
        let r = concatenated_correlation(
            &batch,
            VectorTag::Rating(RatingMethod::Direct),
            VectorTag::Rating(RatingMethod::Direct),
            CorrelationKind::Pearson,
        )
        .unwrap();
        assert_eq!(r, 1.0);
    }

    #[test]
    fn distinct_tags_use_the_plain_tau_a_formula() {
        // Identical vectors under different tags keep the tie behavior of
        // tau-a: tied pairs contribute zero, so the value drops below one.
        let batch = [
            uniform_profile(&[1, 2, 3], true, Sex::Male),
            uniform_profile(&[1, 2, 3], false, Sex::Female),
        ];
        let tau = concatenated_correlation(
            &batch,
            VectorTag::Rank(RankMethod::Direct),
            VectorTag::Rank(RankMethod::FromDirectScores),
            CorrelationKind::Kendall,
        )
        .unwrap();
        let direct = kendall_tau(
            &[1.0, 2.0, 3.0, 1.0, 2.0, 3.0],
            &[1.0, 2.0, 3.0, 1.0, 2.0, 3.0],
        )
        .unwrap();
        assert_eq!(tau, direct);
        assert!(tau < 1.0);
    }

    #[test]
    fn concatenated_kendall_against_hand_evaluation() {
        // Two respondents with n = 3 concatenate to length-6 vectors.
        let mut first = uniform_profile(&[1, 2, 3], true, Sex::Male);
        first.ranks.from_principal_eigenvector =
            rank(&[2, 1, 3], RankMethod::FromPrincipalEigenvector);
        let mut second = uniform_profile(&[3, 2, 1], false, Sex::Female);
        second.ranks.from_principal_eigenvector =
            rank(&[3, 1, 2], RankMethod::FromPrincipalEigenvector);
        let batch = [first, second];
        let tau = concatenated_correlation(
            &batch,
            VectorTag::Rank(RankMethod::Direct),
            VectorTag::Rank(RankMethod::FromPrincipalEigenvector),
            CorrelationKind::Kendall,
        )
        .unwrap();
        let expected = kendall_tau(
            &[1.0, 2.0, 3.0, 3.0, 2.0, 1.0],
            &[2.0, 1.0, 3.0, 3.0, 1.0, 2.0],
        )
        .unwrap();
        assert_eq!(tau, expected);
    }

    #[test]
    fn frequency_table_counts_and_orders() {
        let batch = [
            uniform_profile(&[1, 2, 3], true, Sex::Male),
            uniform_profile(&[1, 2, 3], true, Sex::Male),
            uniform_profile(&[2, 1, 3], false, Sex::Female),
        ];
        let table = frequency_table(&batch, RankMethod::Direct, 5);
        assert_eq!(table.len(), 2);
        assert_eq!(table[0].ranks.ranks(), &[1, 2, 3]);
        assert_eq!(table[0].count, 2);
        assert_eq!(table[1].count, 1);
    }

    #[test]
    fn frequency_table_breaks_count_ties_lexicographically() {
        let batch = [
            uniform_profile(&[2, 1, 3], true, Sex::Male),
            uniform_profile(&[1, 2, 3], false, Sex::Female),
        ];
        let table = frequency_table(&batch, RankMethod::Direct, 5);
        assert_eq!(table[0].ranks.ranks(), &[1, 2, 3]);
        assert_eq!(table[1].ranks.ranks(), &[2, 1, 3]);
    }

    #[test]
    fn frequency_table_top_k_truncates() {
        let batch = [
            uniform_profile(&[1, 2, 3], true, Sex::Male),
            uniform_profile(&[2, 1, 3], false, Sex::Female),
            uniform_profile(&[3, 2, 1], false, Sex::Female),
        ];
        assert_eq!(frequency_table(&batch, RankMethod::Direct, 2).len(), 2);
        assert_eq!(frequency_table(&batch, RankMethod::Direct, 10).len(), 3);
    }

    #[test]
    fn within_distance_counts_are_cumulative() {
        let batch = [
            uniform_profile(&[1, 2, 3, 4, 5, 6], true, Sex::Male),
            uniform_profile(&[2, 1, 3, 4, 5, 6], false, Sex::Female),
            uniform_profile(&[6, 5, 4, 3, 2, 1], false, Sex::Female),
        ];
        let reference = rank(&[1, 2, 3, 4, 5, 6], RankMethod::Direct);
        let counts = within_distance_counts(&batch, RankMethod::Direct, &reference).unwrap();
        assert_eq!(counts, vec![1, 1, 2, 2, 2, 2, 3]);
        // A permutation cannot differ from another in exactly one place.
        assert_eq!(counts[0], counts[1]);
    }
}

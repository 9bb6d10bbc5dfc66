//! Rank vectors, preference-order strings and interval coupling of best and
//! worst ratings.
//!
//! A rank vector assigns positions `1..n` to the criteria, rank 1 going to
//! the highest rating. Criteria whose ratings agree within
//! [`RATING_TIE_TOLERANCE`] receive consecutive ranks in ascending
//! criterion-index order; the tie is kept so order strings can render a weak
//! preference.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::float;
use crate::rating::{RatingMethod, RatingVector};

/// Ratings closer than this are treated as tied. Ties come out of exact
/// max-times arithmetic, not rounding, so the tolerance is tight.
pub const RATING_TIE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub enum RankError {
    /// Ranks must be a permutation of `1..n`.
    NotAPermutation { ranks: Vec<u32> },
    LengthMismatch { left: usize, right: usize },
    Empty,
}

impl fmt::Display for RankError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankError::NotAPermutation { ranks } => {
                write!(f, "ranks {:?} are not a permutation of 1..{}", ranks, ranks.len())
            }
            RankError::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {} vs {}", left, right)
            }
            RankError::Empty => write!(f, "rank vectors must be non-empty"),
        }
    }
}

impl core::error::Error for RankError {}

/// The producing method of a rank vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RankMethod {
    /// Ranks stated directly by the respondent (RR).
    Direct,
    /// Ranks derived from the respondent's direct scores (RSR).
    FromDirectScores,
    /// Ranks from the principal-eigenvector ratings (RSPE).
    FromPrincipalEigenvector,
    /// Ranks from the geometric-mean ratings (RSGM).
    FromGeometricMean,
    /// Ranks from the best differentiating Chebyshev ratings (RSCB).
    FromChebyshevBest,
    /// Ranks from the worst differentiating Chebyshev ratings (RSCW).
    FromChebyshevWorst,
}

impl RankMethod {
    pub const ALL: [RankMethod; 6] = [
        RankMethod::Direct,
        RankMethod::FromDirectScores,
        RankMethod::FromPrincipalEigenvector,
        RankMethod::FromGeometricMean,
        RankMethod::FromChebyshevBest,
        RankMethod::FromChebyshevWorst,
    ];

    pub fn code(&self) -> &'static str {
        match self {
            RankMethod::Direct => "RR",
            RankMethod::FromDirectScores => "RSR",
            RankMethod::FromPrincipalEigenvector => "RSPE",
            RankMethod::FromGeometricMean => "RSGM",
            RankMethod::FromChebyshevBest => "RSCB",
            RankMethod::FromChebyshevWorst => "RSCW",
        }
    }

    pub fn from_code(code: &str) -> Option<Self> {
        RankMethod::ALL.into_iter().find(|m| m.code() == code)
    }

    /// The rank tag fed by a rating method.
    pub fn for_rating(method: RatingMethod) -> Self {
        match method {
            RatingMethod::Direct => RankMethod::FromDirectScores,
            RatingMethod::PrincipalEigenvector => RankMethod::FromPrincipalEigenvector,
            RatingMethod::GeometricMean => RankMethod::FromGeometricMean,
            RatingMethod::ChebyshevBest => RankMethod::FromChebyshevBest,
            RatingMethod::ChebyshevWorst => RankMethod::FromChebyshevWorst,
        }
    }
}

/// Permutation of `1..n` assigning a position to every criterion; rank 1 is
/// the most preferred.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RankVector {
    ranks: Vec<u32>,
    method: RankMethod,
}

impl RankVector {
    pub fn new(ranks: Vec<u32>, method: RankMethod) -> Result<Self, RankError> {
        if ranks.is_empty() {
            return Err(RankError::Empty);
        }
        let n = ranks.len();
        let mut seen = Vec::new();
        seen.resize(n, false);
        for &r in &ranks {
            if r == 0 || r as usize > n || seen[r as usize - 1] {
                return Err(RankError::NotAPermutation { ranks });
            }
            seen[r as usize - 1] = true;
        }
        Ok(RankVector { ranks, method })
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn method(&self) -> RankMethod {
        self.method
    }

    /// Criterion indices in preference order (the inverse permutation).
    pub fn preference_order(&self) -> Vec<usize> {
        let mut order = alloc::vec![0usize; self.ranks.len()];
        for (criterion, &rank) in self.ranks.iter().enumerate() {
            order[rank as usize - 1] = criterion;
        }
        order
    }
}

/// A rank vector together with the tie structure of the ratings it came
/// from.
#[derive(Debug, Clone, PartialEq)]
pub struct Ranking {
    ranks: RankVector,
    /// `tied_with_next[p]` is true when the criteria at preference positions
    /// `p` and `p + 1` had ratings equal within tolerance.
    tied_with_next: Vec<bool>,
}

impl Ranking {
    pub fn rank_vector(&self) -> &RankVector {
        &self.ranks
    }

    pub fn into_rank_vector(self) -> RankVector {
        self.ranks
    }

    pub fn tied_with_next(&self) -> &[bool] {
        &self.tied_with_next
    }
}

/// Ranks criteria by descending rating. Ratings within
/// [`RATING_TIE_TOLERANCE`] of each other form a tie group ordered by
/// ascending criterion index.
pub fn ranks_from_ratings(ratings: &RatingVector) -> Ranking {
    let scores = ratings.scores();
    let n = scores.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        scores[b]
            .partial_cmp(&scores[a])
            .expect("scores are finite")
            .then(a.cmp(&b))
    });
    // Chain-adjacent near-equal scores into groups, each sorted by index.
    let mut grouped: Vec<usize> = Vec::with_capacity(n);
    let mut tied_with_next = alloc::vec![false; n.saturating_sub(1)];
    let mut group_start = 0;
    for pos in 1..=n {
        let new_group = pos == n
            || float::abs(scores[order[pos - 1]] - scores[order[pos]]) > RATING_TIE_TOLERANCE;
        if new_group {
            let mut group: Vec<usize> = order[group_start..pos].to_vec();
            group.sort_unstable();
            for (offset, &criterion) in group.iter().enumerate() {
                if offset + 1 < group.len() {
                    tied_with_next[group_start + offset] = true;
                }
                grouped.push(criterion);
            }
            group_start = pos;
        }
    }
    let mut ranks = alloc::vec![0u32; n];
    for (position, &criterion) in grouped.iter().enumerate() {
        ranks[criterion] = position as u32 + 1;
    }
    let ranks = RankVector::new(ranks, RankMethod::for_rating(ratings.method()))
        .expect("positions form a permutation");
    Ranking { ranks, tied_with_next }
}

/// Preference symbols used by order strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderSymbols {
    Unicode,
    Ascii,
}

impl OrderSymbols {
    fn strict(&self) -> &'static str {
        match self {
            OrderSymbols::Unicode => " \u{227b} ",
            OrderSymbols::Ascii => " > ",
        }
    }

    fn weak(&self) -> &'static str {
        match self {
            OrderSymbols::Unicode => " \u{2ab0} ",
            OrderSymbols::Ascii => " >= ",
        }
    }

    fn undetermined(&self) -> &'static str {
        match self {
            OrderSymbols::Unicode => " \u{2225} ",
            OrderSymbols::Ascii => " || ",
        }
    }
}

fn label_for(labels: Option<&[String]>, criterion: usize) -> String {
    match labels.and_then(|ls| ls.get(criterion)) {
        Some(label) => label.clone(),
        None => format!("C{}", criterion + 1),
    }
}

/// Renders criteria labels joined by the preference relation in ascending
/// rank order. Positions flagged in `tied_with_next` render the weak
/// relation. Without labels the criteria print as `C1..Cn`.
pub fn order_string(
    ranks: &RankVector,
    tied_with_next: Option<&[bool]>,
    labels: Option<&[String]>,
    symbols: OrderSymbols,
) -> String {
    let order = ranks.preference_order();
    let mut out = String::new();
    for (position, &criterion) in order.iter().enumerate() {
        if position > 0 {
            let tied = tied_with_next
                .map(|t| t.get(position - 1).copied().unwrap_or(false))
                .unwrap_or(false);
            out.push_str(if tied { symbols.weak() } else { symbols.strict() });
        }
        out.push_str(&label_for(labels, criterion));
    }
    out
}

/// Per-criterion `[low, high]` ranges coupling two rating vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalVector {
    lows: Vec<f64>,
    highs: Vec<f64>,
}

impl IntervalVector {
    pub fn len(&self) -> usize {
        self.lows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lows.is_empty()
    }

    pub fn low(&self, criterion: usize) -> f64 {
        self.lows[criterion]
    }

    pub fn high(&self, criterion: usize) -> f64 {
        self.highs[criterion]
    }

    pub fn is_degenerate(&self, criterion: usize) -> bool {
        float::abs(self.highs[criterion] - self.lows[criterion]) <= RATING_TIE_TOLERANCE
    }
}

/// Couples best and worst differentiating ratings into one interval-valued
/// vector with `low = min` and `high = max` per criterion.
pub fn interval_combine(
    best: &RatingVector,
    worst: &RatingVector,
) -> Result<IntervalVector, RankError> {
    if best.len() != worst.len() {
        return Err(RankError::LengthMismatch { left: best.len(), right: worst.len() });
    }
    let mut lows = Vec::with_capacity(best.len());
    let mut highs = Vec::with_capacity(best.len());
    for (&b, &w) in best.scores().iter().zip(worst.scores()) {
        lows.push(b.min(w));
        highs.push(b.max(w));
    }
    Ok(IntervalVector { lows, highs })
}

/// Order string over interval-valued ratings. Criteria are sorted by
/// descending upper bound (then descending lower bound, then index). An
/// adjacent pair renders strict preference when the leader's lower bound
/// clears the follower's upper bound, weak preference when the leader is
/// never below the follower but equality is possible, and the undetermined
/// relation when the intervals properly overlap.
pub fn combined_order_string(
    intervals: &IntervalVector,
    labels: Option<&[String]>,
    symbols: OrderSymbols,
) -> String {
    let n = intervals.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        intervals.highs[b]
            .partial_cmp(&intervals.highs[a])
            .expect("finite")
            .then(
                intervals.lows[b]
                    .partial_cmp(&intervals.lows[a])
                    .expect("finite"),
            )
            .then(a.cmp(&b))
    });
    let mut out = String::new();
    for (position, &criterion) in order.iter().enumerate() {
        if position > 0 {
            let leader = order[position - 1];
            let low_leader = intervals.lows[leader];
            let high_follower = intervals.highs[criterion];
            let relation = if low_leader > high_follower + RATING_TIE_TOLERANCE {
                symbols.strict()
            } else if low_leader >= high_follower - RATING_TIE_TOLERANCE {
                symbols.weak()
            } else {
                symbols.undetermined()
            };
            out.push_str(relation);
        }
        out.push_str(&label_for(labels, criterion));
    }
    out
}

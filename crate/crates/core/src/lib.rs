//! Rating and ranking of decision criteria from pairwise comparison matrices.
//!
//! Given a square matrix of pairwise preference ratios, this crate derives
//! per-criterion rating vectors by three concurrent methods:
//!
//! * the principal (Perron) eigenvector of the matrix,
//! * the geometric mean of each row,
//! * Chebyshev approximation on the logarithmic scale, solved in max-times
//!   algebra, which yields a whole cone of optimal vectors and, when the cone
//!   is non-unique, distinguished *best* and *worst differentiating* members.
//!
//! Rating vectors are turned into rank vectors by the [`ranking`] module, and
//! the [`stats`] module aggregates batches of respondents: match counts,
//! rank-distance metrics, consistency groups, Kendall/Pearson correlations of
//! concatenated vectors, mean/deviation summaries and frequency tables.
//!
//! The crate is `no_std`-compatible (requires `alloc`); enable the `libm`
//! feature instead of the default `std` feature on targets without a standard
//! library.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

mod float;

pub mod maxplus;
pub mod ranking;
pub mod rating;
pub mod stats;

pub use maxplus::{TropicalMatrix, TropicalVector};
pub use ranking::{IntervalVector, RankMethod, RankVector, Ranking};
pub use rating::{ComparisonMatrix, MethodRatings, RatingMethod, RatingVector, SolutionCone};

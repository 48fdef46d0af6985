//! Exact character expansions of vincular 3-pattern means over the
//! conjugacy classes of `S_n`, and expected pattern counts after `t` random
//! steps drawn uniformly from a conjugacy class.
//!
//! The pipeline is:
//!
//! 1. [`mset`] turns a [`VincularPattern`] into a [`CharacterCombination`]
//!    `Σ a_λ χ^λ` giving its mean over every conjugacy class.
//! 2. [`expectation`] pairs those coefficients with the walk coefficients
//!    `b_λ^(t)` to produce exact expected values.
//! 3. [`oracle`] checks every step against brute-force enumeration and Monte
//!    Carlo sampling.

pub mod character;
pub mod cli;
pub mod error;
pub mod expectation;
pub mod mset;
pub mod oracle;
pub mod output;
pub mod partition;
pub mod pattern;
pub mod perm;
pub mod rational;
pub mod statistic;

pub use character::{char7, dimension, inner_product, mn_character, reduce_basis, CharacterCombination, ClassFunction, MnEvaluator};
pub use error::{Error, Result};
pub use expectation::{b_coefficient, expected_series, expected_value, transposition_closed_form, SignReading, WalkSpec};
pub use mset::{mean_coefficients, mean_vector7, u_coefficients, v_count, HClass, MSetTemplate, RelativeOrder};
pub use oracle::{brute_expected, brute_mean, mc_expected, verify_suite, McEstimate, OracleConfig, VerifyConfig, VerifyReport};
pub use output::{Format, OutputRecord};
pub use partition::{partitions, IntegerPartition};
pub use pattern::{all_patterns, Classical, VincularPattern};
pub use perm::{enumerate_class, Permutation};
pub use rational::{format_rational, parse_rational, ExactRational};
pub use statistic::{composite_mean, CompositeStatistic, Statistic};

//! Desk-scale statistical quality checks for generators and samplers.
//!
//! Samples are mapped to U(0, 1) through their distribution function and then
//! tested for uniformity (Kolmogorov-Smirnov, binning, order statistics of
//! the extremes). Moments are compared with theory, integer draws with their
//! exact cell probabilities and raw words bit by bit. [`run_battery`] bundles
//! everything for one engine with a Bonferroni-split significance level.

pub mod battery;
pub mod cdf;
pub mod checks;
pub mod digest;

pub use battery::{run_battery, run_battery_on, BatteryConfig, Report};
pub use cdf::{cdf, pit};
pub use checks::{binning_check, bit_balance, chi_square, extreme_check, ks_check, ks_uniform, moment_check, Check, Moments};

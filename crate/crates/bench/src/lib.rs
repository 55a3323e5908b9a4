//! Seeded benchmark harness: many random starts per problem and solver,
//! summarized as averages of iterations, function evaluations and stepsizes.

pub mod config;
pub mod error;
pub mod report;
pub mod runner;
pub mod seed;

pub use config::{BenchConfig, Format, Overrides};
pub use error::BenchError;
pub use runner::{initial_point, run_benchmark, BenchmarkSummary, RunRecord, SummaryRow};
pub use seed::derive_run_seed;

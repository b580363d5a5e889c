//! Command-line plumbing around `qzn-core`: data ingestion, diagnosis
//! reports, example replay and cost series.

pub mod commands;
pub mod error;
pub mod input;
pub mod report;

pub use error::CliError;
pub use input::{Dataset, InputDocument, InputFormat, Source};
pub use report::{diagnose, render_json, render_text, Algorithm, OutputFormat, Report, RunConfig};

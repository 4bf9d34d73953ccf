//! Library half of the `chancoh` command-line tool.
//!
//! Every command returns the text it would print so the binary stays a thin
//! shell over these functions.

pub mod commands;
pub mod document;
pub mod error;

pub use commands::{ad_sweep, classify, phase_cov, report, PhaseCovArgs};
pub use document::ChannelDocument;
pub use error::CliError;

//! Command-line front end: exact solving, instance building and
//! verification suites over `gallai-core`.

pub mod commands;
pub mod error;
pub mod report;
pub mod suites;

pub use error::CliError;

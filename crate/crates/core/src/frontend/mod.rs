//! Input format, command-line interface and reports.

pub mod cli;
pub mod parse;
pub mod report;

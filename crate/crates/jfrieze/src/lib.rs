//! Command-line front end for `jfrieze-core`: JSON interchange, ASCII
//! rendering and the subcommand bodies used by the `jfrieze` binary.

#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod commands;
mod error;
pub mod json;
pub mod render;

pub use error::CliError;

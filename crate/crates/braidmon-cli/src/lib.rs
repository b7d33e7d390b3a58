//! File formats, fixtures and the command pipeline for `braidmon`.
//!
//! The core algorithms live in the `no_std` crate `braidmon`; this crate
//! adds everything that touches the file system or the terminal.

pub mod error;
pub mod fixtures;
pub mod formats;
pub mod grammar;
pub mod pipeline;

pub use error::{CliError, ParseError};
pub use grammar::{parse_bmf, print_bmf};

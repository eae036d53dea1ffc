//! Command-line front end for `rs-cells-core`: parsing and JSON/CSV encodings,
//! parallel sweeps of `S_n`, and the `verify` harness.

pub mod error;
pub mod io;
pub mod sweep;
pub mod verify;

pub use error::{CliError, Result};

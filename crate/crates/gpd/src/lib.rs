//! File formats, parallel drivers, and the command line for `gpd-core`.

pub mod census;
pub mod cli;
pub mod error;
pub mod format;
pub mod stream;

pub use error::{Error, Result};

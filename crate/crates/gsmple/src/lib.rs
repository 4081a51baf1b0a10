//! Std companion to `gsmple-core`: dataset and edge-file formats, TOML run
//! configuration, a parallel sweep driver and the command implementations
//! behind the `gsmple` binary.

pub mod commands;
pub mod config;
pub mod error;
pub mod io;
pub mod sweep;

pub use config::RunConfig;
pub use error::{Error, Result};
pub use gsmple_core;

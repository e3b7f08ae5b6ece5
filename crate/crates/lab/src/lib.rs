//! File formats, batch sweeps and the `rek-lab` command line.

pub mod cli;
pub mod io;
pub mod sweep;

pub use cli::{run, Cli, Exit};

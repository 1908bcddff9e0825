//! Command-line tooling and file formats on top of `borel-core`.

pub mod cli;
pub mod dot;
pub mod json;
pub mod parallel;
pub mod parse;

pub use cli::{run, Cli, CliError, Command};
pub use dot::{export_dot, RenderOptions};
pub use parse::{parse_root_set, ParseError};

//! Command-line front end: expression parsing, rendering and commands.

pub mod commands;
pub mod parse;
pub mod render;

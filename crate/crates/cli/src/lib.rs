//! File formats, claim verification registry, and conjecture exploration
//! behind the `genpos` command line tool.

pub mod catalog;
pub mod checks;
pub mod explore;
pub mod io;
pub mod report;

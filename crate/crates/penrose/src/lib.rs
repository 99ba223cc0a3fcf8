//! Command-line companion to `penrose-core`: parallel drivers, rendering,
//! JSON/CSV/SVG output and the `penrose` binary's argument handling.

pub mod cli;
pub mod io;
pub mod par;
pub mod render;
pub mod svg;

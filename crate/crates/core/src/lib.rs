//! Monohedral disk tilings built from n-wedges: exact geometry of lines and
//! circular arcs, the wedge construction, the tiling families, their
//! enumeration, and JSON/SVG input and output.

pub mod cli;
pub mod combinatorics;
pub mod families;
pub mod geometry;
pub mod io;
pub mod wedge;

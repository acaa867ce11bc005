//! Exact graph-polynomial workbench: interlace polynomials, circuit partition
//! polynomials of 2-in 2-out digraphs, Tutte polynomials of plane multigraphs,
//! chord-diagram polynomials, and distance-hereditary recognition.

pub mod bits;
pub mod chord;
pub mod dh;
pub mod error;
pub mod euler;
pub mod graph;
pub mod interlace;
pub mod planarsp;
pub mod poly;
pub mod random;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
pub use poly::SparsePoly;

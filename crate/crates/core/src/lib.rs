//! Exact computation on reflection arrangements and their Catalan-type
//! deformations: characteristic polynomials by point counting, region
//! enumeration by exact linear programming, and the combinatorial layer of
//! sketches, moves, canonical forms and compartment statistics.

pub mod arrangement;
pub mod charpoly;
pub mod error;
pub mod exactnum;
pub mod formulas;
pub mod movelab;
pub mod regionlab;
pub mod sketch;
pub mod statlab;
pub mod verify;

pub use error::{Error, Result};

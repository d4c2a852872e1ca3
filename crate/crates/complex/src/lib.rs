//! Finite simplicial complexes with exact integer homology, matching
//! complexes, and checkers for complete joins, weak Cohen–Macaulayness and
//! Morse filtrations.

mod complex;
mod error;
pub mod homology;
pub mod join;
pub mod json;
pub mod matching;
pub mod morse;
pub mod wcm;

pub use complex::{Face, SimplicialComplex};
pub use error::{Error, Result};

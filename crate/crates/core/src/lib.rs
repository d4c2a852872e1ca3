pub mod braid;
pub mod diagram;
pub mod dsl;
pub mod error;
pub mod forest;
pub mod labeled;
pub mod random;

pub use error::{Error, Result};

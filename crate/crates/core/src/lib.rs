pub mod chain;
pub mod coefficients;
pub mod error;
pub mod group;
pub mod scenario;
pub mod slant;

pub use error::{Error, Result};

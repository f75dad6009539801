pub mod classical;
pub mod combinatorics;
pub mod error;
pub mod fusion;
pub mod hecke;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};

pub mod classify;
pub mod cli;
pub mod corep;
pub mod error;
pub mod kpoint;
pub mod lattice;
pub mod output;
pub mod pwe;
pub mod symmetry;

pub use error::{Error, Result};

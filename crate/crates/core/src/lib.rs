pub mod algebra;
pub mod cli;
pub mod configurations;
pub mod eigenscheme;
pub mod error;
pub mod geometry;
pub mod numsolve;
pub mod sample;
pub mod verify;

pub use error::{Error, Result};

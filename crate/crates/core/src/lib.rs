pub mod braid;
pub mod burau;
pub mod cli;
pub mod error;
pub mod exterior;
pub mod links_gould;
pub mod matrix;
pub mod scalar;
pub mod tensor;
pub mod verify;

pub use error::Error;

pub mod embedding;
pub mod error;
pub mod levimodule;
pub mod liealgebra;
pub mod matrix;
pub mod opcount;
pub mod parabolic;
pub mod polynomial;
pub mod rational;
pub mod rootsystem;
pub mod uea;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use embedding::EmbeddingResult;
pub use rational::Rational;

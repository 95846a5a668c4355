pub mod cli;
pub mod closedform;
pub mod error;
pub mod fcenum;
pub mod numbers;
pub mod poly;
pub mod recur;
pub mod trimatrix;

pub use error::{Error, Result};
pub use poly::Polynomial;

pub mod algebra;
pub mod cellular;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod ring;
pub mod tangle;
pub mod verify;

pub use error::{Error, Result};

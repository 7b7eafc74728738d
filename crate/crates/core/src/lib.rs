//! Graded multiplicities of the Steinberg module and of composition factors in
//! the symmetric algebra of the natural module of `GL_n(F_q)`.

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod formulas;
pub mod oracles;
pub mod series;
pub mod specialize;

pub use error::{Error, Result};

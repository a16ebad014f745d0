pub mod demchar;
pub mod error;
pub mod fixtures;
pub mod ideal;
pub mod pathgen;
pub mod polytope;
pub mod rootsys;
pub mod sweep;

pub use error::{Error, Result};

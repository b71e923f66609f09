pub mod caps;
pub mod combinatorics;
pub mod decomposition;
pub mod error;
pub mod harness;
pub mod homology;
pub mod monomial;
pub mod polyhedron;
pub mod regularity;
pub mod symbolic;
pub mod vnumber;

pub use caps::Caps;
pub use error::{Error, Result};

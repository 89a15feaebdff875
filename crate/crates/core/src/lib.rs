//! Beissinger insertion, Gelfand W-graphs of the symmetric group, and the
//! classification of their molecules.

pub mod beissinger;
pub mod error;
pub mod gelfand;
pub mod hecke;
pub mod laurent;
pub mod perm;
pub mod tableau;
pub mod wgraph;

pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use perm::{Involution, Permutation};
pub use tableau::{Shape, Tableau};

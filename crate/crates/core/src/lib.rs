//! Zero-divisor graphs of commutative semigroups with zero, Armendariz maps,
//! and exact checks of their graph invariants over rings, ideal semigroups,
//! subset lattices, finite spaces and spectral posets.

pub mod bits;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod lattice;
pub mod limits;
pub mod poly;
pub mod ring;
pub mod semigroup;
pub mod spectral;
pub mod topology;
pub mod verify;

pub use error::{Error, Result};
pub use limits::Limits;

//! Finite abstract simplicial complexes with stellar and odd iterated stellar
//! subdivisions, face-number invariants in exact arithmetic, and
//! certificate-producing deciders for shellable, constructible and
//! sesquiconstructible decompositions.
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the
//! command-line front end live in the `sesqui` crate.
//!
//! Complexes are stored by their facets. Every other face is enumerated on
//! demand, and all values are immutable once constructed.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod complex;
pub mod dyadic;
mod error;
pub mod face;
pub mod generators;
pub mod invariants;
pub mod iso;
pub mod label;
pub mod pipeline;
pub mod search;
pub mod subdivision;

pub use complex::{Dim, SimplicialComplex};
pub use dyadic::Dyadic;
pub use error::Error;
pub use face::Face;
pub use label::VertexLabel;

pub type Result<T, E = Error> = core::result::Result<T, E>;

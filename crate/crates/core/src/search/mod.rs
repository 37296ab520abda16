//! Shellable, constructible and sesquiconstructible decompositions.
//!
//! A pure complex Δ of dimension `d - 1` is *constructible* if it is a
//! simplex, or `Δ = U ∪ V` where `U` and `V` are constructible of dimension
//! `d - 1` and `U ∩ V` is constructible of dimension `d - 2`. *Shellable*
//! additionally requires `V` to be a single facet. *Sesquiconstructible*
//! uses sesquiconstructible pieces and adds one clause: `∂(U ∩ V)` is void
//! or sesquiconstructible of dimension `d - 3`.
//!
//! The deciders in [`decide`] search facet bipartitions and return a
//! [`DecompositionCertificate`]. [`verify_certificate`] replays one clause by
//! clause on labelled complexes without sharing any code with the search.
//!
//! Negative answers are exhaustion claims that hold only within the
//! configured caps. Hitting a cap is reported as
//! [`Error::SearchCapExceeded`](crate::Error::SearchCapExceeded), never as a
//! negative answer.
//!
//! The complex `{∅}` counts as the simplex of dimension -1, so a
//! one-dimensional split whose `∂(U ∩ V)` is `{∅}` is accepted.

mod certificate;
mod decide;
mod topology;
mod verify;

pub use certificate::{certificate_from_shelling_order, DecompositionCertificate, Split};
pub use decide::Searcher;
pub use topology::{classify_topology, ucapv_check, ucapv_check_all, TopologyVerdict, UcapvOutcome};
pub use verify::{promote_to_sesquiconstructible, verify_certificate, Step, Violation, ViolationKind};

use core::fmt;

use crate::{Result, SimplicialComplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Shellable,
    Constructible,
    Sesquiconstructible,
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::Shellable, Kind::Constructible, Kind::Sesquiconstructible];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Shellable => "shellable",
            Kind::Constructible => "constructible",
            Kind::Sesquiconstructible => "sesquiconstructible",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for Kind {
    type Err = alloc::string::String;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| alloc::format!("unknown certificate kind {s:?}"))
    }
}

/// Facet-count limits for the deciders.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchCaps {
    pub shellable_facets: usize,
    /// Used for both constructible and sesquiconstructible search.
    pub constructible_facets: usize,
}

impl SearchCaps {
    pub const DEFAULT_SHELLABLE: usize = 20;
    pub const DEFAULT_CONSTRUCTIBLE: usize = 14;

    /// The same cap for every kind.
    pub fn uniform(facets: usize) -> Self {
        SearchCaps { shellable_facets: facets, constructible_facets: facets }
    }

    pub fn for_kind(&self, kind: Kind) -> usize {
        match kind {
            Kind::Shellable => self.shellable_facets,
            Kind::Constructible | Kind::Sesquiconstructible => self.constructible_facets,
        }
    }
}

impl Default for SearchCaps {
    fn default() -> Self {
        SearchCaps {
            shellable_facets: Self::DEFAULT_SHELLABLE,
            constructible_facets: Self::DEFAULT_CONSTRUCTIBLE,
        }
    }
}

/// Which limit a search ran into.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CapExceeded {
    Facets { facets: usize, cap: usize },
    Vertices { vertices: usize, limit: usize },
}

impl fmt::Display for CapExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CapExceeded::Facets { facets, cap } => {
                write!(f, "{facets} facets exceed the cap of {cap}")
            }
            CapExceeded::Vertices { vertices, limit } => {
                write!(f, "{vertices} vertices exceed the limit of {limit}")
            }
        }
    }
}

pub fn check_shellable(
    complex: &SimplicialComplex,
    caps: SearchCaps,
) -> Result<Option<DecompositionCertificate>> {
    Searcher::new(caps).check(Kind::Shellable, complex)
}

pub fn check_constructible(
    complex: &SimplicialComplex,
    caps: SearchCaps,
) -> Result<Option<DecompositionCertificate>> {
    Searcher::new(caps).check(Kind::Constructible, complex)
}

pub fn check_sesquiconstructible(
    complex: &SimplicialComplex,
    caps: SearchCaps,
) -> Result<Option<DecompositionCertificate>> {
    Searcher::new(caps).check(Kind::Sesquiconstructible, complex)
}

//! Clause-by-clause certificate replay on labelled complexes.
//!
//! This deliberately works through the [`SimplicialComplex`] operations
//! (restriction, intersection, boundary) and shares no code with the
//! bitmask search.

use alloc::vec::Vec;
use core::fmt;

use super::{DecompositionCertificate, Kind, SearchCaps, Searcher, Split};
use crate::{Dim, Error, Result, SimplicialComplex};

/// Edge from a split node to one of its children.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    U,
    V,
    Intersection,
    Boundary,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    VoidComplex,
    NotPure,
    /// A `Simplex` node whose complex has this many facets.
    NotASimplex { facets: usize },
    IndexOutOfRange { index: usize, facets: usize },
    /// `U` and `V` overlap or miss a facet.
    PartitionBroken,
    EmptyPart,
    /// Shellable splits need `V` to be a single facet.
    VNotSimplex { facets: usize },
    IntersectionShape { expected: isize, found: Dim, pure: bool },
    MissingBoundaryCertificate,
    UnexpectedBoundaryCertificate,
    BoundaryDimension { expected: isize, found: Dim },
}

/// A failed clause together with the path from the root to the node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub path: Vec<Step>,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("root")?;
        for s in &self.path {
            f.write_str(match s {
                Step::U => "/U",
                Step::V => "/V",
                Step::Intersection => "/UcapV",
                Step::Boundary => "/bd(UcapV)",
            })?;
        }
        f.write_str(": ")?;
        match &self.kind {
            ViolationKind::VoidComplex => f.write_str("void complex"),
            ViolationKind::NotPure => f.write_str("complex is not pure"),
            ViolationKind::NotASimplex { facets } => {
                write!(f, "simplex node has {facets} facets")
            }
            ViolationKind::IndexOutOfRange { index, facets } => {
                write!(f, "facet index {index} out of range ({facets} facets)")
            }
            ViolationKind::PartitionBroken => f.write_str("U and V do not partition the facets"),
            ViolationKind::EmptyPart => f.write_str("U or V is empty"),
            ViolationKind::VNotSimplex { facets } => {
                write!(f, "shelling step adds {facets} facets instead of one")
            }
            ViolationKind::IntersectionShape { expected, found, pure } => write!(
                f,
                "U cap V has dimension {found}{}, expected pure of dimension {expected}",
                if *pure { "" } else { " and is not pure" }
            ),
            ViolationKind::MissingBoundaryCertificate => {
                f.write_str("bd(U cap V) is not void but has no certificate")
            }
            ViolationKind::UnexpectedBoundaryCertificate => {
                f.write_str("bd(U cap V) is void but a certificate was given")
            }
            ViolationKind::BoundaryDimension { expected, found } => {
                write!(f, "bd(U cap V) has dimension {found}, expected {expected}")
            }
        }
    }
}

pub fn verify_certificate(
    complex: &SimplicialComplex,
    kind: Kind,
    cert: &DecompositionCertificate,
) -> core::result::Result<(), Violation> {
    let mut path = Vec::new();
    replay(complex, kind, cert, &mut path)
}

fn fail<T>(path: &[Step], kind: ViolationKind) -> core::result::Result<T, Violation> {
    Err(Violation { path: path.to_vec(), kind })
}

fn replay(
    complex: &SimplicialComplex,
    kind: Kind,
    cert: &DecompositionCertificate,
    path: &mut Vec<Step>,
) -> core::result::Result<(), Violation> {
    let Dim::Finite(dim) = complex.dim() else {
        return fail(path, ViolationKind::VoidComplex);
    };
    if complex.facets().iter().any(|f| f.dim() != dim) {
        return fail(path, ViolationKind::NotPure);
    }
    let split = match cert {
        DecompositionCertificate::Simplex => {
            return if complex.num_facets() == 1 {
                Ok(())
            } else {
                fail(path, ViolationKind::NotASimplex { facets: complex.num_facets() })
            };
        }
        DecompositionCertificate::Split(split) => split,
    };

    let (u, v) = parts(complex, split).map_err(|k| Violation { path: path.clone(), kind: k })?;
    if kind == Kind::Shellable && split.v_facets.len() != 1 {
        return fail(path, ViolationKind::VNotSimplex { facets: split.v_facets.len() });
    }

    let inter = u.intersection(&v);
    let inter_pure = inter.is_pure().unwrap_or(false);
    if inter.dim() != Dim::Finite(dim - 1) || !inter_pure {
        return fail(
            path,
            ViolationKind::IntersectionShape { expected: dim - 1, found: inter.dim(), pure: inter_pure },
        );
    }

    if kind == Kind::Sesquiconstructible {
        let b = inter.boundary().expect("intersection checked pure");
        match (&split.boundary, b.is_void()) {
            (None, true) => {}
            (Some(_), true) => return fail(path, ViolationKind::UnexpectedBoundaryCertificate),
            (None, false) => return fail(path, ViolationKind::MissingBoundaryCertificate),
            (Some(bc), false) => {
                if b.dim() != Dim::Finite(dim - 2) {
                    return fail(
                        path,
                        ViolationKind::BoundaryDimension { expected: dim - 2, found: b.dim() },
                    );
                }
                descend(&b, kind, bc, Step::Boundary, path)?;
            }
        }
    }

    descend(&inter, kind, &split.intersection, Step::Intersection, path)?;
    descend(&v, kind, &split.v, Step::V, path)?;
    descend(&u, kind, &split.u, Step::U, path)
}

fn descend(
    complex: &SimplicialComplex,
    kind: Kind,
    cert: &DecompositionCertificate,
    step: Step,
    path: &mut Vec<Step>,
) -> core::result::Result<(), Violation> {
    path.push(step);
    let r = replay(complex, kind, cert, path);
    path.pop();
    r
}

/// Checks that the split partitions the facets and builds `U` and `V`.
fn parts(
    complex: &SimplicialComplex,
    split: &Split,
) -> core::result::Result<(SimplicialComplex, SimplicialComplex), ViolationKind> {
    let n = complex.num_facets();
    if split.u_facets.is_empty() || split.v_facets.is_empty() {
        return Err(ViolationKind::EmptyPart);
    }
    let mut hits = alloc::vec![0u32; n];
    for &i in split.u_facets.iter().chain(&split.v_facets) {
        if i >= n {
            return Err(ViolationKind::IndexOutOfRange { index: i, facets: n });
        }
        hits[i] += 1;
    }
    if hits.iter().any(|&h| h != 1) {
        return Err(ViolationKind::PartitionBroken);
    }
    let u = complex.restrict_to(&split.u_facets).expect("indices checked");
    let v = complex.restrict_to(&split.v_facets).expect("indices checked");
    Ok((u, v))
}

/// Rewrites a shellable (or any constructible) certificate into a
/// sesquiconstructible one by attaching a certificate for every non-void
/// `∂(U ∩ V)`. For shelling certificates each such boundary is shellable and
/// is found by a small shelling search; the result still has to pass
/// [`verify_certificate`] with [`Kind::Sesquiconstructible`].
pub fn promote_to_sesquiconstructible(
    complex: &SimplicialComplex,
    cert: &DecompositionCertificate,
) -> Result<DecompositionCertificate> {
    let mut searcher = Searcher::new(SearchCaps::default());
    promote(complex, cert, &mut searcher)
}

fn promote(
    complex: &SimplicialComplex,
    cert: &DecompositionCertificate,
    searcher: &mut Searcher,
) -> Result<DecompositionCertificate> {
    let DecompositionCertificate::Split(split) = cert else {
        return Ok(DecompositionCertificate::Simplex);
    };
    let (u, v) = parts(complex, split).map_err(|kind| {
        Error::InvalidCertificate(Violation { path: Vec::new(), kind })
    })?;
    let inter = u.intersection(&v);
    let b = inter.boundary()?;
    let boundary = if b.is_void() {
        None
    } else {
        let shelling = searcher.check(Kind::Shellable, &b)?.ok_or_else(|| {
            Error::InvariantBroken(alloc::format!("boundary {b:?} of U cap V is not shellable"))
        })?;
        Some(promote(&b, &shelling, searcher)?)
    };
    Ok(DecompositionCertificate::split(Split {
        u_facets: split.u_facets.clone(),
        v_facets: split.v_facets.clone(),
        intersection: promote(&inter, &split.intersection, searcher)?,
        boundary,
        u: promote(&u, &split.u, searcher)?,
        v: promote(&v, &split.v, searcher)?,
    }))
}

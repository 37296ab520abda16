use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;

use crate::{Error, Face, Result, SimplicialComplex};

/// Recursive decomposition witness.
///
/// Facet indices at a node refer to the canonical facet order of the complex
/// at that node: the root complex, or the `U`, `V`, `U ∩ V` or `∂(U ∩ V)`
/// computed from the parent split.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DecompositionCertificate {
    Simplex,
    Split(Box<Split>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Split {
    pub u_facets: Vec<usize>,
    pub v_facets: Vec<usize>,
    pub intersection: DecompositionCertificate,
    /// Present for sesquiconstructible certificates whenever `∂(U ∩ V)` is
    /// not void.
    pub boundary: Option<DecompositionCertificate>,
    pub u: DecompositionCertificate,
    pub v: DecompositionCertificate,
}

impl DecompositionCertificate {
    pub fn split(split: Split) -> Self {
        DecompositionCertificate::Split(Box::new(split))
    }

    pub fn node_count(&self) -> usize {
        match self {
            DecompositionCertificate::Simplex => 1,
            DecompositionCertificate::Split(s) => {
                1 + s.u.node_count()
                    + s.v.node_count()
                    + s.intersection.node_count()
                    + s.boundary.as_ref().map_or(0, Self::node_count)
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            DecompositionCertificate::Simplex => 1,
            DecompositionCertificate::Split(s) => {
                1 + [Some(&s.u), Some(&s.v), Some(&s.intersection), s.boundary.as_ref()]
                    .into_iter()
                    .flatten()
                    .map(Self::depth)
                    .max()
                    .unwrap_or(0)
            }
        }
    }
}

/// Turns a facet ordering into a chain of single-facet splits: the last facet
/// is `V` and the others form `U`. Each `U ∩ V` gets the same treatment
/// using its canonical facet order. The result is a shellable certificate
/// exactly when the ordering is a shelling order, which
/// [`verify_certificate`](super::verify_certificate) decides.
pub fn certificate_from_shelling_order(
    complex: &SimplicialComplex,
    order: &[Face],
) -> Result<DecompositionCertificate> {
    let mut sorted: Vec<&Face> = order.iter().collect();
    sorted.sort();
    if sorted.len() != complex.num_facets() || sorted.iter().zip(complex.facets()).any(|(a, b)| *a != b) {
        return Err(Error::InvalidShellingOrder(format!(
            "{} entries do not list the {} facets exactly once",
            order.len(),
            complex.num_facets()
        )));
    }
    Ok(chain(complex, order))
}

fn chain(complex: &SimplicialComplex, order: &[Face]) -> DecompositionCertificate {
    if order.len() <= 1 {
        return DecompositionCertificate::Simplex;
    }
    let (last, rest) = order.split_last().expect("at least two facets");
    let u = SimplicialComplex::from_faces(rest.iter().cloned());
    let v = SimplicialComplex::simplex(last.clone());
    let intersection = u.intersection(&v);
    let v_index = complex.facet_index(last).expect("order lists facets");
    DecompositionCertificate::split(Split {
        u_facets: (0..complex.num_facets()).filter(|&i| i != v_index).collect(),
        v_facets: alloc::vec![v_index],
        intersection: chain(&intersection, intersection.facets()),
        boundary: None,
        u: chain(&u, rest),
        v: DecompositionCertificate::Simplex,
    })
}

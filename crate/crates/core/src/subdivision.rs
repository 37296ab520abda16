//! Stellar subdivision, odd iterated stellar subdivision and the barycentric
//! schedule.
//!
//! Apex vertices are named structurally: subdividing at face `{a, b}` adds
//! the vertex `p.a.b`. Input complexes may not use labels in the `p.`
//! namespace, so apex names never collide and the same face always yields the
//! same apex.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::label::APEX_PREFIX;
use crate::{Error, Face, Result, SimplicialComplex, VertexLabel};

/// Apex label `p.` + the sorted vertex tokens of `face`, joined by `.`.
pub fn apex_label(face: &Face) -> VertexLabel {
    let mut s = String::from(APEX_PREFIX);
    for (i, v) in face.vertices().iter().enumerate() {
        if i > 0 {
            s.push('.');
        }
        s.push_str(v.as_str());
    }
    VertexLabel::new(&s).expect("apex tokens are built from valid tokens")
}

/// Stellar subdivision of `complex` at the non-empty face `face`.
///
/// Every facet `G ⊇ F` is replaced by `(G \ {v}) ∪ {apex}` for `v ∈ F`.
/// Subdividing at a vertex returns the complex unchanged.
pub fn stellar_subdivide(
    complex: &SimplicialComplex,
    face: &Face,
    apex: &VertexLabel,
) -> Result<SimplicialComplex> {
    if face.is_empty() {
        return Err(Error::EmptyFace);
    }
    if !complex.contains_face(face) {
        return Err(Error::FaceAbsent(face.clone()));
    }
    if face.len() == 1 {
        return Ok(complex.clone());
    }
    if complex.has_vertex(apex) {
        return Err(Error::ApexCollision(apex.clone()));
    }
    let mut facets = Vec::with_capacity(complex.num_facets() + face.len());
    for g in complex.facets() {
        if face.is_subset(g) {
            for v in face.vertices() {
                facets.push(g.without(v).with(apex.clone()));
            }
        } else {
            facets.push(g.clone());
        }
    }
    Ok(SimplicialComplex::from_faces(facets))
}

/// An ordered list of non-empty faces of an original complex.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SubdivisionSchedule {
    faces: Vec<Face>,
}

impl SubdivisionSchedule {
    pub fn new(faces: Vec<Face>) -> Self {
        SubdivisionSchedule { faces }
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// The entries that are faces of `sub`, in the same order. This is the
    /// schedule a subdivision induces on a subcomplex.
    pub fn restrict_to(&self, sub: &SimplicialComplex) -> SubdivisionSchedule {
        SubdivisionSchedule {
            faces: self.faces.iter().filter(|f| sub.contains_face(f)).cloned().collect(),
        }
    }
}

impl FromIterator<Face> for SubdivisionSchedule {
    fn from_iter<I: IntoIterator<Item = Face>>(iter: I) -> Self {
        SubdivisionSchedule { faces: iter.into_iter().collect() }
    }
}

/// First problem found while validating a schedule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScheduleViolation {
    EmptyFace { index: usize },
    NotAFace { index: usize, face: Face },
    Duplicate { index: usize, face: Face },
    /// Entry `index` has larger dimension than an earlier entry.
    OrderViolation { index: usize, face: Face, earlier: Face },
    MissingOddFace { face: Face },
}

impl fmt::Display for ScheduleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScheduleViolation::EmptyFace { index } => write!(f, "entry {index} is the empty face"),
            ScheduleViolation::NotAFace { index, face } => {
                write!(f, "entry {index} {face} is not a face of the complex")
            }
            ScheduleViolation::Duplicate { index, face } => {
                write!(f, "entry {index} {face} appears twice")
            }
            ScheduleViolation::OrderViolation { index, face, earlier } => write!(
                f,
                "entry {index} {face} (dim {}) comes after {earlier} (dim {})",
                face.dim(),
                earlier.dim()
            ),
            ScheduleViolation::MissingOddFace { face } => {
                write!(f, "odd-dimensional face {face} is missing")
            }
        }
    }
}

/// Checks that every entry is a distinct non-empty face of `complex`, that
/// dimensions never increase along the list, and that every odd-dimensional
/// face of `complex` is listed.
pub fn validate_schedule(
    complex: &SimplicialComplex,
    schedule: &SubdivisionSchedule,
) -> core::result::Result<(), ScheduleViolation> {
    let mut seen = BTreeSet::new();
    let mut previous: Option<&Face> = None;
    for (index, face) in schedule.faces.iter().enumerate() {
        if face.is_empty() {
            return Err(ScheduleViolation::EmptyFace { index });
        }
        if !complex.contains_face(face) {
            return Err(ScheduleViolation::NotAFace { index, face: face.clone() });
        }
        if !seen.insert(face) {
            return Err(ScheduleViolation::Duplicate { index, face: face.clone() });
        }
        if let Some(prev) = previous {
            if face.dim() > prev.dim() {
                return Err(ScheduleViolation::OrderViolation {
                    index,
                    face: face.clone(),
                    earlier: prev.clone(),
                });
            }
        }
        previous = Some(face);
    }
    let top = complex.dim().finite().unwrap_or(-1);
    for i in (1..=top).step_by(2) {
        for face in complex.faces_of_dim(i) {
            if !seen.contains(&face) {
                return Err(ScheduleViolation::MissingOddFace { face });
            }
        }
    }
    Ok(())
}

/// Left fold of [`stellar_subdivide`] over a validated schedule.
pub fn odd_iterated_subdivide(
    complex: &SimplicialComplex,
    schedule: &SubdivisionSchedule,
) -> Result<SimplicialComplex> {
    if let Some(v) = complex.vertices().into_iter().find(VertexLabel::is_reserved) {
        return Err(Error::ReservedLabel(v));
    }
    validate_schedule(complex, schedule).map_err(Error::InvalidSchedule)?;
    let mut current = complex.clone();
    for face in &schedule.faces {
        current = stellar_subdivide(&current, face, &apex_label(face)).map_err(|e| {
            Error::InvariantBroken(alloc::format!("subdividing at {face}: {e}"))
        })?;
    }
    Ok(current)
}

/// Every face of dimension at least one, largest dimension first, ties in
/// canonical order. Subdividing along it gives the barycentric subdivision.
pub fn barycentric_schedule(complex: &SimplicialComplex) -> Result<SubdivisionSchedule> {
    if !complex.is_pure()? {
        return Err(Error::NotPure);
    }
    let top = complex.dim().finite().unwrap_or(-1);
    let mut faces = Vec::new();
    for i in (1..=top).rev() {
        faces.extend(complex.faces_of_dim(i));
    }
    Ok(SubdivisionSchedule { faces })
}

pub fn barycentric_subdivision(complex: &SimplicialComplex) -> Result<SimplicialComplex> {
    odd_iterated_subdivide(complex, &barycentric_schedule(complex)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::tests::{cx, face};
    use crate::iso::are_isomorphic;

    fn label(s: &str) -> VertexLabel {
        VertexLabel::new(s).unwrap()
    }

    #[test]
    fn apex_names() {
        assert_eq!(apex_label(&face("b a")).as_str(), "p.a.b");
        assert_eq!(apex_label(&face("a b c")).as_str(), "p.a.b.c");
    }

    #[test]
    fn triangle_at_edge_and_facet() {
        let p = label("p");
        let t = cx("abc");
        assert_eq!(stellar_subdivide(&t, &face("a b"), &p).unwrap(), cx("apc,pbc"));
        assert_eq!(stellar_subdivide(&t, &face("a b c"), &p).unwrap(), cx("abp,apc,pbc"));
        assert_eq!(stellar_subdivide(&t, &face("a"), &p).unwrap(), t);
    }

    #[test]
    fn stellar_errors() {
        let p = label("p");
        let t = cx("abc");
        assert_eq!(stellar_subdivide(&t, &face("a d"), &p), Err(Error::FaceAbsent(face("a d"))));
        assert_eq!(stellar_subdivide(&t, &Face::empty(), &p), Err(Error::EmptyFace));
        assert_eq!(stellar_subdivide(&t, &face("a b"), &label("c")), Err(Error::ApexCollision(label("c"))));
    }

    #[test]
    fn schedule_validation() {
        let two = cx("abc,bcd");
        let edges = two.faces_of_dim(1);
        assert_eq!(validate_schedule(&two, &SubdivisionSchedule::new(edges.clone())), Ok(()));
        let mut reversed = edges.clone();
        reversed.reverse();
        assert_eq!(validate_schedule(&two, &SubdivisionSchedule::new(reversed)), Ok(()));

        let missing: Vec<Face> = edges[1..].to_vec();
        assert_eq!(
            validate_schedule(&two, &SubdivisionSchedule::new(missing)),
            Err(ScheduleViolation::MissingOddFace { face: edges[0].clone() })
        );

        let tet = cx("abcd");
        let mut s = tet.faces_of_dim(1);
        s.push(face("a b c d"));
        assert!(matches!(
            validate_schedule(&tet, &SubdivisionSchedule::new(s)),
            Err(ScheduleViolation::OrderViolation { index: 6, .. })
        ));

        let dup = alloc::vec![face("a b"), face("a b")];
        assert!(matches!(
            validate_schedule(&two, &SubdivisionSchedule::new(dup)),
            Err(ScheduleViolation::Duplicate { index: 1, .. })
        ));
        assert!(matches!(
            validate_schedule(&two, &SubdivisionSchedule::new(alloc::vec![face("a d")])),
            Err(ScheduleViolation::NotAFace { index: 0, .. })
        ));
        assert!(matches!(
            validate_schedule(&two, &SubdivisionSchedule::new(alloc::vec![Face::empty()])),
            Err(ScheduleViolation::EmptyFace { index: 0 })
        ));
    }

    #[test]
    fn even_faces_may_be_omitted() {
        // 3-simplex: all edges and the facet are required, triangles optional.
        let tet = cx("abcd");
        let mut s = alloc::vec![face("a b c d"), face("a b c")];
        s.extend(tet.faces_of_dim(1));
        s.push(face("a"));
        assert_eq!(validate_schedule(&tet, &SubdivisionSchedule::new(s)), Ok(()));
    }

    #[test]
    fn two_triangles_all_edges() {
        let two = cx("abc,bcd");
        let s = SubdivisionSchedule::new(two.faces_of_dim(1));
        let out = odd_iterated_subdivide(&two, &s).unwrap();
        assert_eq!(out.vertices().len(), 9);
        assert_eq!(out.faces_of_dim(1).len(), 16);
        assert_eq!(out.num_facets(), 8);
    }

    #[test]
    fn single_edge_becomes_path() {
        let e = cx("ab");
        let out = odd_iterated_subdivide(&e, &SubdivisionSchedule::new(alloc::vec![face("a b")])).unwrap();
        assert_eq!(
            out,
            SimplicialComplex::from_faces([face("a p.a.b"), face("b p.a.b")])
        );
    }

    #[test]
    fn edge_orders_change_the_result() {
        let two = cx("abc,bcd");
        let edges = two.faces_of_dim(1);
        let first = odd_iterated_subdivide(&two, &SubdivisionSchedule::new(edges.clone())).unwrap();
        let mut found = false;
        let mut order = edges.clone();
        // A handful of rotations is enough to see two shapes.
        for _ in 0..edges.len() {
            order.rotate_left(1);
            let other = odd_iterated_subdivide(&two, &SubdivisionSchedule::new(order.clone())).unwrap();
            if !are_isomorphic(&first, &other) {
                found = true;
            }
        }
        assert!(found);
    }

    #[test]
    fn barycentric_counts() {
        let tri = cx("abc");
        let s = barycentric_schedule(&tri).unwrap();
        assert_eq!(s.faces(), &[face("a b c"), face("a b"), face("a c"), face("b c")]);
        assert_eq!(barycentric_subdivision(&tri).unwrap().num_facets(), 6);
        assert_eq!(barycentric_subdivision(&cx("abc,abd,acd,bcd")).unwrap().num_facets(), 24);
        assert_eq!(barycentric_subdivision(&cx("ab")).unwrap().num_facets(), 2);
        assert_eq!(barycentric_schedule(&cx("ab,c")), Err(Error::NotPure));
    }

    #[test]
    fn reserved_labels_rejected() {
        let c = SimplicialComplex::from_faces([face("p.x y")]);
        assert_eq!(
            odd_iterated_subdivide(&c, &SubdivisionSchedule::new(alloc::vec![face("p.x y")])),
            Err(Error::ReservedLabel(label("p.x")))
        );
    }
}

//! Facet-set representation of abstract simplicial complexes.
//!
//! A [`SimplicialComplex`] stores only its maximal faces, sorted in canonical
//! order. Two values are special: the *void* complex, which has no faces at
//! all, and the *empty* complex `{∅}`, whose single facet is the empty face.
//! The void complex has dimension [`Dim::NegInfinity`], while `{∅}` has
//! dimension -1.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Face, Result, VertexLabel};

/// Dimension of a complex. The void complex sits below every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dim {
    NegInfinity,
    Finite(isize),
}

impl Dim {
    pub fn finite(self) -> Option<isize> {
        match self {
            Dim::NegInfinity => None,
            Dim::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::NegInfinity => f.write_str("-inf"),
            Dim::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SimplicialComplex {
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// The complex with no faces.
    pub fn void() -> Self {
        SimplicialComplex { facets: Vec::new() }
    }

    /// `{∅}`: the complex whose only face is the empty face.
    pub fn empty() -> Self {
        SimplicialComplex { facets: alloc::vec![Face::empty()] }
    }

    /// The full simplex on `face`.
    pub fn simplex(face: Face) -> Self {
        SimplicialComplex { facets: alloc::vec![face] }
    }

    /// Generates the complex from any collection of faces, keeping only the
    /// maximal ones.
    pub fn from_faces<I: IntoIterator<Item = Face>>(faces: I) -> Self {
        let mut faces: Vec<Face> = faces.into_iter().collect();
        faces.sort();
        faces.dedup();
        // Larger faces first so each candidate only needs checking against
        // already accepted maximal faces.
        let mut by_size: Vec<&Face> = faces.iter().collect();
        by_size.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        let mut maximal: Vec<Face> = Vec::new();
        for f in by_size {
            if !maximal.iter().any(|m| m.len() > f.len() && f.is_subset(m)) {
                maximal.push(f.clone());
            }
        }
        maximal.sort();
        SimplicialComplex { facets: maximal }
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True when the complex has exactly one facet.
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    pub fn dim(&self) -> Dim {
        self.facets
            .iter()
            .map(Face::dim)
            .max()
            .map_or(Dim::NegInfinity, Dim::Finite)
    }

    /// Sorted vertex set.
    pub fn vertices(&self) -> Vec<VertexLabel> {
        let set: BTreeSet<&VertexLabel> = self.facets.iter().flat_map(|f| f.vertices()).collect();
        set.into_iter().cloned().collect()
    }

    pub fn has_vertex(&self, v: &VertexLabel) -> bool {
        self.facets.iter().any(|f| f.contains(v))
    }

    pub fn contains_face(&self, face: &Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(f))
    }

    /// All faces with `i + 1` vertices, in canonical order.
    pub fn faces_of_dim(&self, i: isize) -> Vec<Face> {
        if i < -1 {
            return Vec::new();
        }
        let k = (i + 1) as usize;
        let set: BTreeSet<Face> = self
            .facets
            .iter()
            .filter(|f| f.len() >= k)
            .flat_map(|f| f.subsets_of_size(k))
            .collect();
        set.into_iter().collect()
    }

    /// Every face, in canonical order.
    pub fn all_faces(&self) -> Vec<Face> {
        let set: BTreeSet<Face> = self.facets.iter().flat_map(|f| f.subsets()).collect();
        set.into_iter().collect()
    }

    pub fn is_pure(&self) -> Result<bool> {
        let first = self.facets.first().ok_or(Error::VoidComplex)?;
        Ok(self.facets.iter().all(|f| f.len() == first.len()))
    }

    fn require_pure(&self) -> Result<()> {
        if self.is_pure()? {
            Ok(())
        } else {
            Err(Error::NotPure)
        }
    }

    /// Codimension-one faces of a pure complex.
    pub fn ridges(&self) -> Result<Vec<Face>> {
        self.require_pure()?;
        Ok(self.ridge_incidence()?.into_keys().collect())
    }

    /// Number of facets containing each ridge of a pure complex.
    pub fn ridge_incidence(&self) -> Result<BTreeMap<Face, usize>> {
        self.require_pure()?;
        let mut counts = BTreeMap::new();
        for f in &self.facets {
            for v in f.vertices() {
                *counts.entry(f.without(v)).or_insert(0) += 1;
            }
        }
        Ok(counts)
    }

    /// The complex generated by ridges lying in exactly one facet.
    ///
    /// The boundary of the void complex is void.
    pub fn boundary(&self) -> Result<SimplicialComplex> {
        if self.is_void() {
            return Ok(SimplicialComplex::void());
        }
        let incidence = self.ridge_incidence()?;
        // Boundary ridges all have the same size, so they are already maximal.
        let facets: Vec<Face> = incidence
            .into_iter()
            .filter_map(|(r, c)| (c == 1).then_some(r))
            .collect();
        Ok(SimplicialComplex { facets })
    }

    /// Cone with a fresh apex. The cone over the void complex is the single
    /// vertex `{apex}`.
    pub fn cone(&self, apex: &VertexLabel) -> Result<SimplicialComplex> {
        if self.has_vertex(apex) {
            return Err(Error::ApexCollision(apex.clone()));
        }
        if self.is_void() {
            return Ok(SimplicialComplex::simplex(Face::new([apex.clone()])));
        }
        let facets = self.facets.iter().map(|f| f.with(apex.clone())).collect();
        Ok(SimplicialComplex { facets })
    }

    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        SimplicialComplex::from_faces(self.facets.iter().chain(&other.facets).cloned())
    }

    /// Faces common to both complexes. Two non-void complexes always share
    /// the empty face, so their intersection is at least `{∅}`.
    pub fn intersection(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let mut faces = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                faces.push(f.intersection(g));
            }
        }
        SimplicialComplex::from_faces(faces)
    }

    /// The subcomplex generated by the facets at `indices` (canonical order).
    pub fn restrict_to(&self, indices: &[usize]) -> Option<SimplicialComplex> {
        let faces = indices
            .iter()
            .map(|&i| self.facets.get(i).cloned())
            .collect::<Option<Vec<_>>>()?;
        Some(SimplicialComplex::from_faces(faces))
    }

    /// Position of `face` among the facets.
    pub fn facet_index(&self, face: &Face) -> Option<usize> {
        self.facets.binary_search(face).ok()
    }

    /// Euler characteristic `Σ (-1)^i f_i` over non-empty faces.
    pub fn euler_characteristic(&self) -> i64 {
        self.all_faces()
            .iter()
            .filter(|f| !f.is_empty())
            .map(|f| if f.dim() % 2 == 0 { 1 } else { -1 })
            .sum()
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return f.write_str("Void");
        }
        f.debug_list().entries(&self.facets).finish()
    }
}

impl FromIterator<Face> for SimplicialComplex {
    fn from_iter<I: IntoIterator<Item = Face>>(iter: I) -> Self {
        SimplicialComplex::from_faces(iter)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use alloc::string::String;

    pub(crate) fn face(s: &str) -> Face {
        Face::parse(s.split_whitespace()).unwrap()
    }

    /// Facets written as whitespace-free strings of one-letter vertices,
    /// separated by commas, e.g. `"abc,bcd"`.
    pub(crate) fn cx(s: &str) -> SimplicialComplex {
        SimplicialComplex::from_faces(s.split(',').filter(|t| !t.is_empty()).map(|t| {
            Face::parse(
                t.chars()
                    .map(String::from)
                    .collect::<Vec<_>>()
                    .iter()
                    .map(|x| x.as_str()),
            )
            .unwrap()
        }))
    }

    fn label(s: &str) -> VertexLabel {
        VertexLabel::new(s).unwrap()
    }

    #[test]
    fn void_and_empty_are_distinct() {
        let void = SimplicialComplex::void();
        let empty = SimplicialComplex::empty();
        assert_ne!(void, empty);
        assert_eq!(void.dim(), Dim::NegInfinity);
        assert_eq!(empty.dim(), Dim::Finite(-1));
        assert!(Dim::NegInfinity < Dim::Finite(-1));
        assert!(empty.contains_face(&Face::empty()));
        assert!(!void.contains_face(&Face::empty()));
    }

    #[test]
    fn from_faces_keeps_maximal() {
        let c = SimplicialComplex::from_faces([face("a b"), face("a b c"), face("c d"), face("d")]);
        assert_eq!(c.facets(), &[face("a b c"), face("c d")]);
    }

    #[test]
    fn faces_of_dim_examples() {
        let tet_boundary = cx("abc,abd,acd,bcd");
        assert_eq!(tet_boundary.faces_of_dim(1).len(), 6);
        assert_eq!(SimplicialComplex::empty().faces_of_dim(-1), alloc::vec![Face::empty()]);
        assert!(SimplicialComplex::void().faces_of_dim(-1).is_empty());

        // Brute force: every 2-subset of the vertex set that lies in a facet.
        let two = cx("abc,bcd");
        let verts = two.vertices();
        let mut brute = 0;
        for i in 0..verts.len() {
            for j in i + 1..verts.len() {
                let e = Face::new([verts[i].clone(), verts[j].clone()]);
                if two.facets().iter().any(|f| e.is_subset(f)) {
                    brute += 1;
                }
            }
        }
        assert_eq!(brute, 5);
        assert_eq!(two.faces_of_dim(1).len(), 5);
    }

    #[test]
    fn purity() {
        assert!(cx("abc").is_pure().unwrap());
        assert!(!cx("ab,c").is_pure().unwrap());
        assert!(SimplicialComplex::empty().is_pure().unwrap());
        assert_eq!(SimplicialComplex::void().is_pure(), Err(Error::VoidComplex));
    }

    #[test]
    fn ridges_examples() {
        assert_eq!(cx("abc").ridges().unwrap(), [face("a b"), face("a c"), face("b c")]);
        assert_eq!(cx("abc,abd,acd,bcd").ridges().unwrap().len(), 6);
        assert_eq!(cx("ab,bc").ridges().unwrap(), [face("a"), face("b"), face("c")]);
        assert_eq!(cx("ab,c").ridges(), Err(Error::NotPure));
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(cx("abc").boundary().unwrap(), cx("ab,ac,bc"));
        assert!(cx("abc,abd,acd,bcd").boundary().unwrap().is_void());
        assert_eq!(cx("abc,bcd").boundary().unwrap(), cx("ab,ac,bd,cd"));
        assert_eq!(cx("ab,c").boundary(), Err(Error::NotPure));
        assert!(SimplicialComplex::empty().boundary().unwrap().is_void());
        assert_eq!(cx("a").boundary().unwrap(), SimplicialComplex::empty());
        assert!(cx("a,b").boundary().unwrap().is_void());
    }

    #[test]
    fn boundary_facets_lie_in_exactly_one_facet() {
        for c in [cx("abc,bcd"), cx("abc,acd,ade"), cx("ab,bc,cd"), cx("abcd,bcde")] {
            for r in c.boundary().unwrap().facets() {
                assert_eq!(c.facets().iter().filter(|f| r.is_subset(f)).count(), 1);
            }
        }
    }

    #[test]
    fn cone_examples() {
        let p = label("p");
        assert_eq!(cx("ab,ac,bc").cone(&p).unwrap(), cx("abp,acp,bcp"));
        assert_eq!(SimplicialComplex::empty().cone(&p).unwrap(), cx("p"));
        assert_eq!(SimplicialComplex::void().cone(&p).unwrap(), cx("p"));
        assert_eq!(cx("ab,bc,cd,ad").cone(&p).unwrap().num_facets(), 4);
        assert_eq!(cx("ab").cone(&label("a")), Err(Error::ApexCollision(label("a"))));
    }

    #[test]
    fn union_and_intersection() {
        assert_eq!(cx("abc").union(&cx("bcd")), cx("abc,bcd"));
        assert_eq!(cx("abc").intersection(&cx("bcd")), cx("bc"));
        // Disjoint complexes still share the empty face.
        assert_eq!(cx("abc").intersection(&cx("d")), SimplicialComplex::empty());
        assert!(cx("abc").intersection(&SimplicialComplex::void()).is_void());
        let c = cx("abc,cde");
        assert_eq!(c.intersection(&c), c);
        assert_eq!(c.union(&c), c);
        assert_eq!(cx("ab").union(&cx("bc")), cx("bc").union(&cx("ab")));
    }

    #[test]
    fn euler_characteristic_of_spheres() {
        assert_eq!(cx("abc,abd,acd,bcd").euler_characteristic(), 2);
        assert_eq!(cx("ab,bc,ca").euler_characteristic(), 0);
        assert_eq!(cx("abc").euler_characteristic(), 1);
    }
}

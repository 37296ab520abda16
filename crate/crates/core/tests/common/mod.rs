#![allow(dead_code)]

use proptest::prelude::*;
use sesqui_core::{Face, SimplicialComplex, VertexLabel};

pub fn face(s: &str) -> Face {
    Face::parse(s.split_whitespace()).unwrap()
}

/// Comma-separated facets with one-character vertex names: `"abc,bcd"`.
pub fn cx(s: &str) -> SimplicialComplex {
    SimplicialComplex::from_faces(s.split(',').map(|f| {
        Face::new(f.trim().chars().map(|c| VertexLabel::new(&c.to_string()).unwrap()))
    }))
}

/// Pure complexes of dimension `dim` on vertices `a..` with up to
/// `max_facets` facets.
pub fn pure_complex(vertices: usize, dim: usize, max_facets: usize) -> impl Strategy<Value = SimplicialComplex> {
    let names: Vec<VertexLabel> =
        (0..vertices).map(|i| VertexLabel::new(&((b'a' + i as u8) as char).to_string()).unwrap()).collect();
    let all: Vec<Face> = Face::new(names).subsets_of_size(dim + 1);
    proptest::sample::subsequence(all.clone(), 1..=max_facets.min(all.len()))
        .prop_map(SimplicialComplex::from_faces)
}

/// Every face of `complex` that is contained in a facet of `rest`.
fn covered_faces(new: &Face, rest: &[Face]) -> SimplicialComplex {
    SimplicialComplex::from_faces(rest.iter().map(|g| g.intersection(new)))
}

/// Brute-force shelling oracle: tries every facet permutation and accepts
/// when each new facet meets the earlier ones in a union of its ridges.
/// Pure codimension-one subcomplexes of a simplex are always shellable, so
/// this is the recursive definition unrolled.
pub fn shellable_by_permutations(complex: &SimplicialComplex) -> bool {
    let facets = complex.facets().to_vec();
    let d = facets[0].dim();
    if facets.iter().any(|f| f.dim() != d) {
        return false;
    }
    let mut order = Vec::new();
    let mut used = vec![false; facets.len()];
    fn go(facets: &[Face], d: isize, order: &mut Vec<Face>, used: &mut [bool]) -> bool {
        if order.len() == facets.len() {
            return true;
        }
        for i in 0..facets.len() {
            if used[i] {
                continue;
            }
            let f = &facets[i];
            if !order.is_empty() {
                let meet = covered_faces(f, order);
                if meet.facets().iter().any(|g| g.dim() != d - 1) {
                    continue;
                }
            }
            used[i] = true;
            order.push(f.clone());
            let ok = go(facets, d, order, used);
            order.pop();
            used[i] = false;
            if ok {
                return true;
            }
        }
        false
    }
    go(&facets, d, &mut order, &mut used)
}

/// The face of the original complex an apex or original vertex stands for.
pub fn carrier(v: &VertexLabel) -> Face {
    match v.as_str().strip_prefix("p.") {
        Some(rest) => Face::parse(rest.split('.')).unwrap(),
        None => Face::new([v.clone()]),
    }
}

//! Vertex-bijection isomorphism test for desk-scale complexes.
//!
//! Plain backtracking. Candidate images are restricted to vertices with the
//! same per-dimension face-count signature, adjacency in the 1-skeleton must
//! be preserved, and every facet whose vertices are all mapped must land on
//! a facet.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::{SimplicialComplex, VertexLabel};

struct Indexed {
    labels: Vec<VertexLabel>,
    /// Facets as sorted index lists.
    facets: Vec<Vec<usize>>,
    facet_set: BTreeSet<Vec<usize>>,
    /// Facet ids containing each vertex.
    incident: Vec<Vec<usize>>,
    adjacent: Vec<Vec<bool>>,
    signature: Vec<Vec<usize>>,
}

impl Indexed {
    fn new(c: &SimplicialComplex) -> Self {
        let labels = c.vertices();
        let index: BTreeMap<&VertexLabel, usize> =
            labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let n = labels.len();
        let facets: Vec<Vec<usize>> = c
            .facets()
            .iter()
            .map(|f| f.vertices().iter().map(|v| index[v]).collect())
            .collect();
        let mut incident = alloc::vec![Vec::new(); n];
        let mut adjacent = alloc::vec![alloc::vec![false; n]; n];
        for (fi, f) in facets.iter().enumerate() {
            for &v in f {
                incident[v].push(fi);
                for &w in f {
                    if v != w {
                        adjacent[v][w] = true;
                    }
                }
            }
        }
        let max_len = facets.iter().map(Vec::len).max().unwrap_or(0);
        let mut signature = alloc::vec![alloc::vec![0usize; 2 * max_len + 1]; n];
        // Facets containing v by facet size, then faces containing v by size.
        for f in &facets {
            for &v in f {
                signature[v][f.len()] += 1;
            }
        }
        for face in c.all_faces() {
            for v in face.vertices() {
                signature[index[v]][max_len + face.len()] += 1;
            }
        }
        let facet_set = facets.iter().cloned().collect();
        Indexed { labels, facets, facet_set, incident, adjacent, signature }
    }
}

/// Returns a vertex bijection carrying the facets of `a` onto those of `b`,
/// if one exists.
pub fn find_isomorphism(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
) -> Option<BTreeMap<VertexLabel, VertexLabel>> {
    if a.num_facets() != b.num_facets() {
        return None;
    }
    let mut sizes_a: Vec<usize> = a.facets().iter().map(|f| f.len()).collect();
    let mut sizes_b: Vec<usize> = b.facets().iter().map(|f| f.len()).collect();
    sizes_a.sort_unstable();
    sizes_b.sort_unstable();
    if sizes_a != sizes_b {
        return None;
    }
    let ia = Indexed::new(a);
    let ib = Indexed::new(b);
    if ia.labels.len() != ib.labels.len() {
        return None;
    }
    let mut sig_a: Vec<&Vec<usize>> = ia.signature.iter().collect();
    let mut sig_b: Vec<&Vec<usize>> = ib.signature.iter().collect();
    sig_a.sort();
    sig_b.sort();
    if sig_a != sig_b {
        return None;
    }

    // Assign the most constrained (rarest signature) vertices first.
    let mut order: Vec<usize> = (0..ia.labels.len()).collect();
    order.sort_by_key(|&v| {
        let rarity = ia.signature.iter().filter(|s| **s == ia.signature[v]).count();
        (rarity, core::cmp::Reverse(ia.incident[v].len()), v)
    });

    let n = ia.labels.len();
    let mut map = alloc::vec![usize::MAX; n];
    let mut used = alloc::vec![false; n];
    if extend(&ia, &ib, &order, 0, &mut map, &mut used) {
        Some(
            (0..n)
                .map(|v| (ia.labels[v].clone(), ib.labels[map[v]].clone()))
                .collect(),
        )
    } else {
        None
    }
}

pub fn are_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
    find_isomorphism(a, b).is_some()
}

fn extend(
    a: &Indexed,
    b: &Indexed,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..b.labels.len() {
        if used[w] || a.signature[v] != b.signature[w] {
            continue;
        }
        let adjacency_ok = order[..depth]
            .iter()
            .all(|&u| a.adjacent[u][v] == b.adjacent[map[u]][w]);
        if !adjacency_ok {
            continue;
        }
        map[v] = w;
        used[w] = true;
        let facets_ok = a.incident[v].iter().all(|&fi| {
            let f = &a.facets[fi];
            if f.iter().any(|&x| map[x] == usize::MAX) {
                return true;
            }
            let mut image: Vec<usize> = f.iter().map(|&x| map[x]).collect();
            image.sort_unstable();
            b.facet_set.contains(&image)
        });
        if facets_ok && extend(a, b, order, depth + 1, map, used) {
            return true;
        }
        map[v] = usize::MAX;
        used[w] = false;
    }
    false
}

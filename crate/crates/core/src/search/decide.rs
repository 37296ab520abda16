//! Bipartition search over facet sets.
//!
//! Complexes are handled as sorted lists of vertex bitmasks. Before a node is
//! looked up in the memo its vertices are renumbered `0..k` in label order.
//! That renumbering preserves the canonical facet order, so a memoized
//! certificate is valid for every complex with the same order type.
//!
//! Pruning uses one necessary condition: a constructible complex of
//! dimension at least one is strongly connected, because each gluing
//! `U ∩ V` contains a ridge of both pieces. The search is otherwise
//! exhaustive within the caps.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{CapExceeded, DecompositionCertificate, Kind, SearchCaps, Split};
use crate::{Error, Result, SimplicialComplex, VertexLabel};

type Mask = u128;

const MAX_VERTICES: usize = Mask::BITS as usize;

#[derive(Clone, Debug)]
enum Outcome {
    Found(DecompositionCertificate),
    Absent,
    Capped(CapExceeded),
}

/// Decider with a memo table shared across all three kinds.
///
/// Results are deterministic: splits are tried in a fixed order (smaller
/// `V` first, then lexicographic facet indices) and the first success wins.
#[derive(Debug)]
pub struct Searcher {
    caps: SearchCaps,
    memo: BTreeMap<(Kind, Vec<Mask>), Outcome>,
}

impl Searcher {
    pub fn new(caps: SearchCaps) -> Self {
        Searcher { caps, memo: BTreeMap::new() }
    }

    pub fn caps(&self) -> SearchCaps {
        self.caps
    }

    /// Number of memoized subproblems.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// `Ok(Some(cert))` on success, `Ok(None)` when no decomposition exists
    /// (within caps), and [`Error::SearchCapExceeded`] when a cap blocked
    /// the answer.
    pub fn check(
        &mut self,
        kind: Kind,
        complex: &SimplicialComplex,
    ) -> Result<Option<DecompositionCertificate>> {
        if !complex.is_pure()? {
            return Err(Error::NotPure);
        }
        let cap = self.caps.for_kind(kind);
        if complex.num_facets() > cap {
            return Err(Error::SearchCapExceeded(CapExceeded::Facets {
                facets: complex.num_facets(),
                cap,
            }));
        }
        let masks = to_masks(complex)?;
        match self.decide(kind, &masks) {
            Outcome::Found(cert) => Ok(Some(cert)),
            Outcome::Absent => Ok(None),
            Outcome::Capped(e) => Err(Error::SearchCapExceeded(e)),
        }
    }

    fn decide(&mut self, kind: Kind, c: &[Mask]) -> Outcome {
        if c.len() == 1 {
            return Outcome::Found(DecompositionCertificate::Simplex);
        }
        let cap = self.caps.for_kind(kind);
        if c.len() > cap {
            return Outcome::Capped(CapExceeded::Facets { facets: c.len(), cap });
        }
        let key = (kind, c.to_vec());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let out = self.search(kind, c);
        self.memo.insert(key, out.clone());
        out
    }

    fn search(&mut self, kind: Kind, c: &[Mask]) -> Outcome {
        let n = c.len();
        let dim = c[0].count_ones() as isize - 1;
        if dim >= 1 && !strongly_connected(c) {
            return Outcome::Absent;
        }
        let mut capped = None;
        let mut attempt = |this: &mut Self, v_idx: &[usize]| -> Option<Outcome> {
            match this.try_split(kind, c, dim, v_idx) {
                Outcome::Found(cert) => Some(Outcome::Found(cert)),
                Outcome::Absent => None,
                Outcome::Capped(e) => {
                    capped.get_or_insert(e);
                    None
                }
            }
        };
        if kind == Kind::Shellable {
            for i in 0..n {
                if let Some(found) = attempt(self, &[i]) {
                    return found;
                }
            }
        } else {
            let mut v_idx = Vec::new();
            for size in 1..=n / 2 {
                let mut found = None;
                for_each_combination(n, size, &mut v_idx, &mut |v| {
                    // For an even split, keep only the half without facet 0.
                    if 2 * size == n && v[0] == 0 {
                        return true;
                    }
                    found = attempt(self, v);
                    found.is_none()
                });
                if let Some(found) = found {
                    return found;
                }
            }
        }
        capped.map_or(Outcome::Absent, Outcome::Capped)
    }

    fn try_split(&mut self, kind: Kind, c: &[Mask], dim: isize, v_idx: &[usize]) -> Outcome {
        let mut u = Vec::with_capacity(c.len() - v_idx.len());
        let mut v = Vec::with_capacity(v_idx.len());
        let mut u_idx = Vec::with_capacity(c.len() - v_idx.len());
        let mut next = v_idx.iter().peekable();
        for (i, &f) in c.iter().enumerate() {
            if next.peek() == Some(&&i) {
                next.next();
                v.push(f);
            } else {
                u.push(f);
                u_idx.push(i);
            }
        }

        let inter = intersect(&u, &v);
        if !is_pure_of_dim(&inter, dim - 1) {
            return Outcome::Absent;
        }
        if dim >= 1 && (!strongly_connected(&u) || !strongly_connected(&v)) {
            return Outcome::Absent;
        }

        // Cheapest children first; any definitive failure ends the split.
        let mut pending = None;
        let Ok(inter_cert) = settle(self.decide(kind, &compress(&inter)), &mut pending) else {
            return Outcome::Absent;
        };
        let boundary_cert = if kind == Kind::Sesquiconstructible {
            let b = boundary(&inter);
            if b.is_empty() {
                Some(None)
            } else {
                let Ok(r) = settle(self.decide(kind, &compress(&b)), &mut pending) else {
                    return Outcome::Absent;
                };
                r.map(Some)
            }
        } else {
            Some(None)
        };
        let Ok(v_cert) = settle(self.decide(kind, &compress(&v)), &mut pending) else {
            return Outcome::Absent;
        };
        let Ok(u_cert) = settle(self.decide(kind, &compress(&u)), &mut pending) else {
            return Outcome::Absent;
        };
        match (inter_cert, boundary_cert, u_cert, v_cert) {
            (Some(intersection), Some(boundary), Some(u), Some(v)) => {
                Outcome::Found(DecompositionCertificate::split(Split {
                    u_facets: u_idx,
                    v_facets: v_idx.to_vec(),
                    intersection,
                    boundary,
                    u,
                    v,
                }))
            }
            _ => Outcome::Capped(pending.expect("a child was capped")),
        }
    }
}

/// `Err` for a definitive failure, `Ok(None)` when a cap got in the way.
fn settle(
    outcome: Outcome,
    pending: &mut Option<CapExceeded>,
) -> core::result::Result<Option<DecompositionCertificate>, ()> {
    match outcome {
        Outcome::Found(cert) => Ok(Some(cert)),
        Outcome::Absent => Err(()),
        Outcome::Capped(e) => {
            pending.get_or_insert(e);
            Ok(None)
        }
    }
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until it
/// returns `false`.
fn for_each_combination(
    n: usize,
    k: usize,
    buf: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    fn go(
        start: usize,
        n: usize,
        k: usize,
        buf: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if buf.len() == k {
            return f(buf);
        }
        for i in start..=n - (k - buf.len()) {
            buf.push(i);
            let keep_going = go(i + 1, n, k, buf, f);
            buf.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }
    buf.clear();
    go(0, n, k, buf, f)
}

fn to_masks(complex: &SimplicialComplex) -> Result<Vec<Mask>> {
    let labels = complex.vertices();
    if labels.len() > MAX_VERTICES {
        return Err(Error::SearchCapExceeded(CapExceeded::Vertices {
            vertices: labels.len(),
            limit: MAX_VERTICES,
        }));
    }
    let index: BTreeMap<&VertexLabel, u32> =
        labels.iter().enumerate().map(|(i, l)| (l, i as u32)).collect();
    // Facets are already in canonical order, and so are their masks.
    Ok(complex
        .facets()
        .iter()
        .map(|f| f.vertices().iter().fold(0, |m, v| m | 1 << index[v]))
        .collect())
}

/// Lexicographic comparison of the sorted vertex lists behind two masks.
fn mask_cmp(mut a: Mask, mut b: Mask) -> Ordering {
    loop {
        match (a == 0, b == 0) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
        let (x, y) = (a.trailing_zeros(), b.trailing_zeros());
        if x != y {
            return x.cmp(&y);
        }
        a &= a - 1;
        b &= b - 1;
    }
}

/// Maximal elements, in canonical order.
fn canonical(mut faces: Vec<Mask>) -> Vec<Mask> {
    faces.sort_unstable_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
    faces.dedup();
    let mut out: Vec<Mask> = Vec::with_capacity(faces.len());
    for f in faces {
        if !out.iter().any(|&m| f & !m == 0) {
            out.push(f);
        }
    }
    out.sort_unstable_by(|&a, &b| mask_cmp(a, b));
    out
}

/// Renumbers the vertices in use to `0..k`, preserving their order.
fn compress(c: &[Mask]) -> Vec<Mask> {
    let support = c.iter().fold(0, |acc, &m| acc | m);
    c.iter()
        .map(|&f| {
            let mut out = 0;
            let mut rest = f;
            while rest != 0 {
                let bit = rest.trailing_zeros();
                let below = support & ((1 << bit) - 1);
                out |= 1 << below.count_ones();
                rest &= rest - 1;
            }
            out
        })
        .collect()
}

fn intersect(u: &[Mask], v: &[Mask]) -> Vec<Mask> {
    let mut faces = Vec::with_capacity(u.len() * v.len());
    for &a in u {
        for &b in v {
            faces.push(a & b);
        }
    }
    canonical(faces)
}

fn is_pure_of_dim(c: &[Mask], dim: isize) -> bool {
    !c.is_empty() && c.iter().all(|m| m.count_ones() as isize - 1 == dim)
}

/// Ridges of a pure complex lying in exactly one facet.
fn boundary(c: &[Mask]) -> Vec<Mask> {
    let mut counts: BTreeMap<Mask, u32> = BTreeMap::new();
    for &f in c {
        let mut rest = f;
        while rest != 0 {
            let low = rest & rest.wrapping_neg();
            *counts.entry(f & !low).or_insert(0) += 1;
            rest &= rest - 1;
        }
    }
    let mut out: Vec<Mask> = counts.into_iter().filter_map(|(r, n)| (n == 1).then_some(r)).collect();
    out.sort_unstable_by(|&a, &b| mask_cmp(a, b));
    out
}

/// Facets connected through shared ridges.
fn strongly_connected(c: &[Mask]) -> bool {
    let n = c.len();
    if n <= 1 {
        return true;
    }
    let mut seen = alloc::vec![false; n];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let mut reached = 1;
    while let Some(i) = queue.pop_front() {
        let ridge = c[i].count_ones() - 1;
        for j in 0..n {
            if !seen[j] && (c[i] & c[j]).count_ones() == ridge {
                seen[j] = true;
                reached += 1;
                queue.push_back(j);
            }
        }
    }
    reached == n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mask_order_matches_face_order() {
        // {0,1} < {0,2} < {1} and {0} < {0,1}
        assert_eq!(mask_cmp(0b011, 0b101), Ordering::Less);
        assert_eq!(mask_cmp(0b101, 0b010), Ordering::Less);
        assert_eq!(mask_cmp(0b001, 0b011), Ordering::Less);
        assert_eq!(mask_cmp(0, 0b1), Ordering::Less);
    }

    #[test]
    fn compress_keeps_order() {
        assert_eq!(compress(&[0b1010, 0b1100]), alloc::vec![0b101, 0b110]);
    }

    #[test]
    fn intersection_of_disjoint_is_empty_face() {
        assert_eq!(intersect(&[0b0111], &[0b1000]), alloc::vec![0]);
    }

    #[test]
    fn boundary_of_triangle() {
        assert_eq!(boundary(&[0b111]), alloc::vec![0b011, 0b101, 0b110]);
        assert!(boundary(&[0]).is_empty());
        assert_eq!(boundary(&[0b1]), alloc::vec![0]);
    }

    #[test]
    fn combinations_in_order() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, &mut Vec::new(), &mut |v| {
            seen.push(v.to_vec());
            true
        });
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], [0, 1]);
        assert_eq!(seen[5], [2, 3]);
    }
}

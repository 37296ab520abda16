use alloc::vec::Vec;
use core::fmt;

use crate::{Error, VertexLabel};

/// A finite set of vertices, kept sorted.
///
/// Faces compare lexicographically on their sorted vertex lists, which is the
/// canonical order used for facets everywhere in the crate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Face(Vec<VertexLabel>);

impl Face {
    pub fn new<I: IntoIterator<Item = VertexLabel>>(vertices: I) -> Self {
        let mut v: Vec<VertexLabel> = vertices.into_iter().collect();
        v.sort();
        v.dedup();
        Face(v)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    /// Builds a face from string tokens, validating each one.
    pub fn parse<'a, I: IntoIterator<Item = &'a str>>(tokens: I) -> Result<Self, Error> {
        let labels = tokens
            .into_iter()
            .map(VertexLabel::new)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Face::new(labels))
    }

    pub(crate) fn from_sorted(vertices: Vec<VertexLabel>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Face(vertices)
    }

    pub fn vertices(&self) -> &[VertexLabel] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|vertices| - 1`; the empty face has dimension -1.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: &VertexLabel) -> bool {
        self.0.binary_search(v).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                match w.cmp(v) {
                    core::cmp::Ordering::Less => continue,
                    core::cmp::Ordering::Equal => continue 'outer,
                    core::cmp::Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn union(&self, other: &Face) -> Face {
        Face::new(self.0.iter().chain(other.0.iter()).cloned())
    }

    pub fn intersection(&self, other: &Face) -> Face {
        Face(self.0.iter().filter(|v| other.contains(v)).cloned().collect())
    }

    pub fn with(&self, v: VertexLabel) -> Face {
        let mut out = self.0.clone();
        if let Err(pos) = out.binary_search(&v) {
            out.insert(pos, v);
        }
        Face(out)
    }

    pub fn without(&self, v: &VertexLabel) -> Face {
        Face(self.0.iter().filter(|w| *w != v).cloned().collect())
    }

    /// All subsets of this face (including the empty face and the face itself).
    pub fn subsets(&self) -> impl Iterator<Item = Face> + '_ {
        let n = self.0.len();
        assert!(n < 64, "face too large to enumerate subsets");
        (0u64..(1u64 << n)).map(move |mask| {
            Face(
                (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| self.0[i].clone())
                    .collect(),
            )
        })
    }

    /// Subsets with exactly `k` vertices, in lexicographic order.
    pub fn subsets_of_size(&self, k: usize) -> Vec<Face> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(k);
        combinations(&self.0, k, 0, &mut current, &mut out);
        out
    }
}

fn combinations(
    pool: &[VertexLabel],
    k: usize,
    start: usize,
    current: &mut Vec<VertexLabel>,
    out: &mut Vec<Face>,
) {
    if current.len() == k {
        out.push(Face(current.clone()));
        return;
    }
    let need = k - current.len();
    for i in start..pool.len() {
        if pool.len() - i < need {
            break;
        }
        current.push(pool[i].clone());
        combinations(pool, k, i + 1, current, out);
        current.pop();
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromIterator<VertexLabel> for Face {
    fn from_iter<I: IntoIterator<Item = VertexLabel>>(iter: I) -> Self {
        Face::new(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Face {
        Face::parse(s.split_whitespace()).unwrap()
    }

    #[test]
    fn dims_and_sorting() {
        assert_eq!(Face::empty().dim(), -1);
        assert_eq!(f("c a b"), f("a b c"));
        assert_eq!(f("a a b").len(), 2);
        assert_eq!(f("a b c").dim(), 2);
    }

    #[test]
    fn subset_tests() {
        assert!(f("a c").is_subset(&f("a b c")));
        assert!(Face::empty().is_subset(&f("a")));
        assert!(!f("a d").is_subset(&f("a b c")));
        assert!(!f("a b c").is_subset(&f("a b")));
        assert_eq!(f("a b c").subsets().count(), 8);
        assert_eq!(f("a b c d").subsets_of_size(2).len(), 6);
    }

    #[test]
    fn canonical_order_is_lexicographic() {
        assert!(f("a b") < f("a c"));
        assert!(f("a") < f("a b"));
        assert!(Face::empty() < f("a"));
    }
}

//! Face numbers, h-numbers, the Charney-Davis quantity and flagness.
//!
//! The Charney-Davis quantity of a complex is
//!
//! ```text
//! κ(Δ) = Σ_i (-1/2)^i f_{i-1}(Δ)
//! ```
//!
//! summed over every face dimension present. It is computed exactly as a
//! [`Dyadic`]. For a complex of dimension `n - 1` the alternating sum of
//! h-numbers satisfies `Σ (-1)^i h_i = 2^n κ`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Dyadic, Error, Face, Result, SimplicialComplex, VertexLabel};

/// Default vertex cap for [`minimal_non_faces`].
pub const DEFAULT_NON_FACE_CAP: usize = 25;

/// `(f_{-1}, f_0, …, f_{d-1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVector(Vec<u64>);

impl FVector {
    pub fn new(entries: Vec<u64>) -> Self {
        FVector(entries)
    }

    /// Entries starting at `f_{-1}`.
    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    /// `f_i`, for `i ≥ -1`.
    pub fn get(&self, i: isize) -> u64 {
        usize::try_from(i + 1).ok().and_then(|k| self.0.get(k)).copied().unwrap_or(0)
    }

    /// `d`, where the complex has dimension `d - 1`.
    pub fn d(&self) -> usize {
        self.0.len() - 1
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_csv(f, self.0.iter())
    }
}

/// `(h_0, …, h_d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HVector(Vec<BigInt>);

impl HVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        HVector(entries)
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn d(&self) -> usize {
        self.0.len() - 1
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_csv(f, self.0.iter())
    }
}

fn write_csv<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: impl Iterator<Item = T>) -> fmt::Result {
    for (i, x) in items.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn f_vector(complex: &SimplicialComplex) -> Result<FVector> {
    let d = complex.dim().finite().ok_or(Error::VoidComplex)? + 1;
    let mut per_dim: Vec<BTreeSet<Face>> = alloc::vec![BTreeSet::new(); d as usize + 1];
    for facet in complex.facets() {
        for face in facet.subsets() {
            per_dim[face.len()].insert(face);
        }
    }
    Ok(FVector(per_dim.iter().map(|s| s.len() as u64).collect()))
}

/// `h_i = Σ_{k=0}^{i} (-1)^{i-k} C(d-k, d-i) f_{k-1}`.
pub fn f_to_h(f: &FVector) -> HVector {
    let d = f.d();
    let h = (0..=d)
        .map(|i| {
            (0..=i)
                .map(|k| {
                    let term = binomial(d - k, d - i) * BigInt::from(f.0[k]);
                    if (i - k) % 2 == 0 { term } else { -term }
                })
                .sum()
        })
        .collect();
    HVector(h)
}

/// Inverse transform: `f_{k-1} = Σ_{i=0}^{k} C(d-i, k-i) h_i`.
pub fn h_to_f(h: &HVector) -> Option<FVector> {
    let d = h.d();
    (0..=d)
        .map(|k| {
            let v: BigInt = (0..=k).map(|i| binomial(d - i, k - i) * &h.0[i]).sum();
            u64::try_from(v).ok()
        })
        .collect::<Option<Vec<_>>>()
        .map(FVector)
}

pub fn h_vector(complex: &SimplicialComplex) -> Result<HVector> {
    if !complex.is_pure()? {
        return Err(Error::NotPure);
    }
    Ok(f_to_h(&f_vector(complex)?))
}

/// `h_i = h_{d-i}` for `0 ≤ i < d/2`.
pub fn dehn_sommerville_holds(complex: &SimplicialComplex) -> Result<bool> {
    let h = h_vector(complex)?;
    let d = h.d();
    Ok((0..d.div_ceil(2)).all(|i| h.0[i] == h.0[d - i]))
}

pub fn kappa(complex: &SimplicialComplex) -> Result<Dyadic> {
    Ok(kappa_of(&f_vector(complex)?))
}

/// κ with the convention κ(void) = 0.
pub fn kappa_or_zero(complex: &SimplicialComplex) -> Dyadic {
    if complex.is_void() {
        Dyadic::zero()
    } else {
        kappa_of(&f_vector(complex).expect("non-void"))
    }
}

/// `Σ_i (-1/2)^i f_{i-1}`, accumulated over the common denominator `2^d`.
pub fn kappa_of(f: &FVector) -> Dyadic {
    let d = f.d() as u32;
    let num: BigInt = f
        .0
        .iter()
        .enumerate()
        .map(|(i, &fi)| {
            let term = BigInt::from(fi) << (d - i as u32);
            if i % 2 == 0 { term } else { -term }
        })
        .sum();
    Dyadic::new(num, d)
}

/// Checks `Σ_{i=0}^{d} (-1)^i h_i = 2^d κ` exactly.
pub fn h_alternating_identity_check(complex: &SimplicialComplex) -> Result<bool> {
    let h = h_vector(complex)?;
    let lhs: BigInt = h
        .0
        .iter()
        .enumerate()
        .map(|(i, x)| if i % 2 == 0 { x.clone() } else { -x.clone() })
        .sum();
    let rhs = kappa(complex)?.times_pow2(h.d() as u32);
    Ok(rhs.to_integer() == Some(lhs))
}

/// For an even-dimensional ball or sphere, `2κ(Δ) = κ(∂Δ)` with κ(void) = 0.
pub fn ballhalf_holds(complex: &SimplicialComplex) -> Result<bool> {
    let k = kappa(complex)?;
    Ok(k.times_pow2(1) == kappa_or_zero(&complex.boundary()?))
}

/// For a complex of odd dimension `2d - 1`: κ ≥ 0 when `d` is even and
/// κ ≤ 0 when `d` is odd.
pub fn charney_davis_sign_ok(complex: &SimplicialComplex) -> Result<bool> {
    let dim = complex.dim().finite().ok_or(Error::VoidComplex)?;
    if dim.rem_euclid(2) == 0 {
        return Err(Error::EvenDimension(dim));
    }
    Ok(sign_rule_holds(dim, &kappa(complex)?))
}

/// Sign rule for a complex of odd dimension `dim = 2d - 1`.
pub fn sign_rule_holds(dim: isize, kappa: &Dyadic) -> bool {
    let d = (dim + 1) / 2;
    if d % 2 == 0 {
        kappa.signum() >= 0
    } else {
        kappa.signum() <= 0
    }
}

/// Vertex-indexed view used by the flag computations.
struct Graph {
    labels: Vec<VertexLabel>,
    faces: BTreeSet<Vec<u32>>,
    neighbours: Vec<Vec<u64>>,
}

impl Graph {
    fn new(complex: &SimplicialComplex) -> Self {
        let labels = complex.vertices();
        let index: BTreeMap<&VertexLabel, u32> =
            labels.iter().enumerate().map(|(i, l)| (l, i as u32)).collect();
        let words = labels.len().div_ceil(64);
        let mut neighbours = alloc::vec![alloc::vec![0u64; words]; labels.len()];
        let mut faces = BTreeSet::new();
        for facet in complex.facets() {
            let ids: Vec<u32> = facet.vertices().iter().map(|v| index[v]).collect();
            for &a in &ids {
                for &b in &ids {
                    if a != b {
                        neighbours[a as usize][b as usize / 64] |= 1 << (b % 64);
                    }
                }
            }
            let n = ids.len();
            for mask in 0u64..(1u64 << n) {
                faces.insert((0..n).filter(|i| mask >> i & 1 == 1).map(|i| ids[i]).collect());
            }
        }
        Graph { labels, faces, neighbours }
    }

    /// Vertices after `max(face)` adjacent to every vertex of `face`.
    fn common_later_neighbours(&self, face: &[u32]) -> Vec<u32> {
        let n = self.labels.len();
        let start = face.last().map_or(0, |&m| m as usize + 1);
        (start..n)
            .filter(|&w| face.iter().all(|&u| self.neighbours[u as usize][w / 64] >> (w % 64) & 1 == 1))
            .map(|w| w as u32)
            .collect()
    }

    fn to_face(&self, ids: &[u32]) -> Face {
        Face::from_sorted(ids.iter().map(|&i| self.labels[i as usize].clone()).collect())
    }
}

/// Vertex sets that are not faces but all of whose proper subsets are.
///
/// Errors with [`Error::Overflow`] when the complex has more than `cap`
/// vertices.
pub fn minimal_non_faces(complex: &SimplicialComplex, cap: usize) -> Result<Vec<Face>> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let g = Graph::new(complex);
    let n = g.labels.len();
    if n > cap {
        return Err(Error::Overflow { vertices: n, cap });
    }
    let mut out = Vec::new();
    // Non-edges.
    for a in 0..n as u32 {
        for b in a + 1..n as u32 {
            if !g.faces.contains(&alloc::vec![a, b]) {
                out.push(g.to_face(&[a, b]));
            }
        }
    }
    // Each larger minimal non-face N is (N \ max N) ∪ {max N} with the first
    // part a face of size ≥ 2.
    for face in g.faces.iter().filter(|f| f.len() >= 2) {
        for w in g.common_later_neighbours(face) {
            let mut candidate = face.clone();
            candidate.push(w);
            if g.faces.contains(&candidate) {
                continue;
            }
            let minimal = (0..candidate.len()).all(|skip| {
                let sub: Vec<u32> = candidate
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &x)| x)
                    .collect();
                g.faces.contains(&sub)
            });
            if minimal {
                out.push(g.to_face(&candidate));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// True when every minimal non-face has two vertices.
///
/// Uses the equivalent clique condition (every face extends by any vertex
/// adjacent to all of it), which needs no vertex cap.
pub fn is_flag(complex: &SimplicialComplex) -> Result<bool> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let g = Graph::new(complex);
    for face in g.faces.iter().filter(|f| f.len() >= 2) {
        for w in g.common_later_neighbours(face) {
            let mut candidate = face.clone();
            candidate.push(w);
            if !g.faces.contains(&candidate) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

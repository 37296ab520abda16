//! Test-corpus complexes with known shelling orders.
//!
//! Randomized kinds draw from [`Lcg`], a 64-bit linear congruential
//! generator with fixed constants, so a `(kind, parameters, seed)` triple
//! names the same complex in every implementation:
//!
//! ```text
//! state_0     = seed
//! state_{k+1} = 6364136223846793005 * state_k + 1442695040888963407  (mod 2^64)
//! output_k    = state_{k+1} >> 32                                    (32 bits)
//! below(n)    = (output_k * n) >> 32                                 (0 <= below(n) < n)
//! ```
//!
//! Stacked balls of dimension `d` start from the simplex on `v0..vd`. Step
//! `k` lists the boundary ridges in canonical order, picks index
//! `below(count)` and cones that ridge from the fresh vertex `v{d+1+k}`.
//! A stacked sphere of dimension `d` is the boundary of the stacked ball of
//! dimension `d + 1` with the same steps and seed.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::subdivision::SubdivisionSchedule;
use crate::{Error, Face, Result, SimplicialComplex, VertexLabel};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorSpec {
    /// Simplex on `n >= 1` vertices.
    Simplex(usize),
    /// Boundary of the simplex on `n >= 2` vertices.
    SimplexBoundary(usize),
    /// Boundary of the `d`-dimensional cross-polytope, `d >= 1`.
    CrossPolytopeBoundary(usize),
    /// `StackedBall(d, steps, seed)`, `d >= 1`.
    StackedBall(usize, usize, u64),
    /// `StackedSphere(d, steps, seed)`, `d >= 0`.
    StackedSphere(usize, usize, u64),
    Suspension(alloc::boxed::Box<GeneratorSpec>),
    /// The triangles `abc` and `bcd`.
    PaperTwoTriangles,
}

/// Upper bound on parameters that size a complex, to keep corpora desk-sized.
pub const MAX_PARAMETER: usize = 64;

pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub const MULTIPLIER: u64 = 6364136223846793005;
    pub const INCREMENT: u64 = 1442695040888963407;

    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self.state.wrapping_mul(Self::MULTIPLIER).wrapping_add(Self::INCREMENT);
        (self.state >> 32) as u32
    }

    /// Uniform-ish value in `0..n`. Panics if `n` is zero.
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0 && n <= u32::MAX as usize, "below({n})");
        ((u64::from(self.next_u32()) * n as u64) >> 32) as usize
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }
}

fn label(s: &str) -> VertexLabel {
    VertexLabel::new(s).expect("generator labels are valid")
}

fn v(i: usize) -> VertexLabel {
    label(&format!("v{i}"))
}

fn simplex_on(n: usize) -> Face {
    Face::new((0..n).map(v))
}

impl GeneratorSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameters(msg));
        match *self {
            GeneratorSpec::Simplex(n) if !(1..=MAX_PARAMETER).contains(&n) => {
                bad(format!("simplex needs 1..={MAX_PARAMETER} vertices, got {n}"))
            }
            GeneratorSpec::SimplexBoundary(n) if !(2..=MAX_PARAMETER).contains(&n) => {
                bad(format!("simplex boundary needs 2..={MAX_PARAMETER} vertices, got {n}"))
            }
            GeneratorSpec::CrossPolytopeBoundary(d) if !(1..=12).contains(&d) => {
                bad(format!("cross-polytope dimension must be in 1..=12, got {d}"))
            }
            GeneratorSpec::StackedBall(d, steps, _)
                if !(1..=MAX_PARAMETER).contains(&d) || steps > 4096 =>
            {
                bad(format!("stacked ball needs 1 <= d <= {MAX_PARAMETER} and steps <= 4096"))
            }
            GeneratorSpec::StackedSphere(d, steps, _) if d >= MAX_PARAMETER || steps > 4096 => {
                bad(format!("stacked sphere needs d < {MAX_PARAMETER} and steps <= 4096"))
            }
            GeneratorSpec::Suspension(ref inner) => inner.validate(),
            _ => Ok(()),
        }
    }

    fn suspension_depth(&self) -> usize {
        match self {
            GeneratorSpec::Suspension(inner) => 1 + inner.suspension_depth(),
            _ => 0,
        }
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<SimplicialComplex> {
    Ok(SimplicialComplex::from_faces(shelling_order_of(spec)?))
}

/// Facets of the generated complex in an order that is a shelling.
pub fn shelling_order_of(spec: &GeneratorSpec) -> Result<Vec<Face>> {
    spec.validate()?;
    Ok(match spec {
        GeneratorSpec::Simplex(n) => alloc::vec![simplex_on(*n)],
        GeneratorSpec::SimplexBoundary(n) => {
            let top = simplex_on(*n);
            let mut order: Vec<Face> = top.vertices().iter().map(|x| top.without(x)).collect();
            order.sort();
            order
        }
        GeneratorSpec::CrossPolytopeBoundary(d) => cross_polytope(*d),
        GeneratorSpec::StackedBall(d, steps, seed) => stack(*d, *steps, *seed).0,
        GeneratorSpec::StackedSphere(d, steps, seed) => stack(d + 1, *steps, *seed).1,
        GeneratorSpec::Suspension(inner) => {
            let k = inner.suspension_depth();
            let inner_order = shelling_order_of(inner)?;
            let north = label(&format!("N{k}"));
            let south = label(&format!("S{k}"));
            let mut order: Vec<Face> = inner_order.iter().map(|f| f.with(north.clone())).collect();
            order.extend(inner_order.iter().map(|f| f.with(south.clone())));
            order
        }
        GeneratorSpec::PaperTwoTriangles => {
            alloc::vec![Face::parse(["a", "b", "c"])?, Face::parse(["b", "c", "d"])?]
        }
    })
}

/// Facets indexed by bit vectors `b`, vertex `v_i` for `b_i = 0` and `w_i`
/// for `b_i = 1`, listed in lexicographic order of `b`.
fn cross_polytope(d: usize) -> Vec<Face> {
    (0..1usize << d)
        .map(|bits| {
            Face::new((0..d).map(|i| {
                let side = if bits >> (d - 1 - i) & 1 == 0 { "v" } else { "w" };
                label(&format!("{side}{i}"))
            }))
        })
        .collect()
}

/// Builds the stacked ball of dimension `d` together with a shelling order of
/// its boundary sphere.
///
/// Coning boundary ridge `R` from `x` replaces the boundary facet `R` by the
/// faces `G_u = R \ {u} ∪ {x}`. In the sphere's shelling order the `G_u`
/// take the place of `R`, first those whose ridge `R \ {u}` already lies in
/// an earlier facet and then the rest.
fn stack(d: usize, steps: usize, seed: u64) -> (Vec<Face>, Vec<Face>) {
    let first = simplex_on(d + 1);
    let mut ball = alloc::vec![first.clone()];
    let mut sphere: Vec<Face> = first.vertices().iter().map(|x| first.without(x)).collect();
    sphere.sort();
    let mut boundary: BTreeSet<Face> = sphere.iter().cloned().collect();
    let mut rng = Lcg::new(seed);
    for k in 0..steps {
        let pick = rng.below(boundary.len());
        let ridge = boundary.iter().nth(pick).expect("index below length").clone();
        let apex = v(d + 1 + k);
        ball.push(ridge.with(apex.clone()));

        let at = sphere.iter().position(|f| *f == ridge).expect("boundary facet in order");
        let earlier = &sphere[..at];
        let (mut covered, mut fresh) = (Vec::new(), Vec::new());
        for u in ridge.vertices() {
            let sub = ridge.without(u);
            let g = sub.with(apex.clone());
            if earlier.iter().any(|f| sub.is_subset(f)) {
                covered.push(g);
            } else {
                fresh.push(g);
            }
        }
        boundary.remove(&ridge);
        boundary.extend(covered.iter().chain(&fresh).cloned());
        sphere.splice(at..=at, covered.into_iter().chain(fresh));
    }
    (ball, sphere)
}

/// A random valid odd iterated schedule for `complex`: every odd-dimensional
/// face, each even-dimensional face of dimension at least 2 with probability
/// 1/2, each vertex with probability 1/4, shuffled within each dimension.
pub fn random_schedule(complex: &SimplicialComplex, rng: &mut Lcg) -> SubdivisionSchedule {
    let top = complex.dim().finite().unwrap_or(-1);
    let mut faces = Vec::new();
    for i in (0..=top).rev() {
        let mut layer: Vec<Face> = complex
            .faces_of_dim(i)
            .into_iter()
            .filter(|_| match i {
                _ if i % 2 == 1 => true,
                0 => rng.below(4) == 0,
                _ => rng.below(2) == 0,
            })
            .collect();
        rng.shuffle(&mut layer);
        faces.extend(layer);
    }
    SubdivisionSchedule::new(faces)
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Simplex(n) => write!(f, "simplex:{n}"),
            GeneratorSpec::SimplexBoundary(n) => write!(f, "simplex-boundary:{n}"),
            GeneratorSpec::CrossPolytopeBoundary(d) => write!(f, "cross-polytope:{d}"),
            GeneratorSpec::StackedBall(d, s, seed) => write!(f, "stacked-ball:{d}:{s}:{seed}"),
            GeneratorSpec::StackedSphere(d, s, seed) => write!(f, "stacked-sphere:{d}:{s}:{seed}"),
            GeneratorSpec::Suspension(inner) => write!(f, "suspension:{inner}"),
            GeneratorSpec::PaperTwoTriangles => f.write_str("two-triangles"),
        }
    }
}

/// Parses the [`Display`](fmt::Display) form. The seed of stacked kinds may
/// be omitted and defaults to 0.
impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameters(format!("cannot parse generator spec {s:?}"));
        if let Some(inner) = s.strip_prefix("suspension:") {
            return Ok(GeneratorSpec::Suspension(alloc::boxed::Box::new(inner.parse()?)));
        }
        let mut parts = s.split(':');
        let name = parts.next().ok_or_else(bad)?;
        let nums: Vec<u64> =
            parts.map(|p| p.parse::<u64>()).collect::<core::result::Result<_, _>>().map_err(|_| bad())?;
        let small = |x: u64| usize::try_from(x).map_err(|_| bad());
        let spec = match (name, nums.as_slice()) {
            ("simplex", [n]) => GeneratorSpec::Simplex(small(*n)?),
            ("simplex-boundary", [n]) => GeneratorSpec::SimplexBoundary(small(*n)?),
            ("cross-polytope", [d]) => GeneratorSpec::CrossPolytopeBoundary(small(*d)?),
            ("stacked-ball", [d, s]) => GeneratorSpec::StackedBall(small(*d)?, small(*s)?, 0),
            ("stacked-ball", [d, s, seed]) => GeneratorSpec::StackedBall(small(*d)?, small(*s)?, *seed),
            ("stacked-sphere", [d, s]) => GeneratorSpec::StackedSphere(small(*d)?, small(*s)?, 0),
            ("stacked-sphere", [d, s, seed]) => {
                GeneratorSpec::StackedSphere(small(*d)?, small(*s)?, *seed)
            }
            ("two-triangles", []) => GeneratorSpec::PaperTwoTriangles,
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl GeneratorSpec {
    /// Replaces the seed of stacked kinds, including inside suspensions.
    pub fn with_seed(self, seed: u64) -> Self {
        match self {
            GeneratorSpec::StackedBall(d, s, _) => GeneratorSpec::StackedBall(d, s, seed),
            GeneratorSpec::StackedSphere(d, s, _) => GeneratorSpec::StackedSphere(d, s, seed),
            GeneratorSpec::Suspension(inner) => {
                GeneratorSpec::Suspension(alloc::boxed::Box::new(inner.with_seed(seed)))
            }
            other => other,
        }
    }

    pub fn name(&self) -> String {
        self.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::tests::cx;
    use crate::invariants::f_vector;
    use crate::search::{certificate_from_shelling_order, classify_topology, verify_certificate, Kind, TopologyVerdict};

    fn corpus() -> Vec<GeneratorSpec> {
        use GeneratorSpec::*;
        alloc::vec![
            Simplex(1),
            Simplex(4),
            SimplexBoundary(2),
            SimplexBoundary(5),
            CrossPolytopeBoundary(1),
            CrossPolytopeBoundary(3),
            CrossPolytopeBoundary(4),
            StackedBall(1, 5, 3),
            StackedBall(3, 6, 9),
            StackedSphere(0, 4, 1),
            StackedSphere(1, 5, 2),
            StackedSphere(2, 7, 8),
            StackedSphere(3, 5, 11),
            Suspension(alloc::boxed::Box::new(SimplexBoundary(3))),
            Suspension(alloc::boxed::Box::new(Suspension(alloc::boxed::Box::new(StackedBall(1, 2, 5))))),
            PaperTwoTriangles,
        ]
    }

    #[test]
    fn lcg_reference_values() {
        let mut rng = Lcg::new(0);
        // state_1 = c, so the first output is its high half.
        assert_eq!(rng.next_u32(), (Lcg::INCREMENT >> 32) as u32);
        let mut a = Lcg::new(42);
        let mut b = Lcg::new(42);
        for _ in 0..100 {
            assert_eq!(a.below(7), b.below(7));
        }
        let mut r = Lcg::new(5);
        assert!((0..1000).all(|_| r.below(3) < 3));
    }

    #[test]
    fn spec_examples() {
        let t = generate(&GeneratorSpec::Simplex(3)).unwrap();
        assert_eq!(f_vector(&t).unwrap().entries(), &[1, 3, 3, 1]);
        let oct = generate(&GeneratorSpec::CrossPolytopeBoundary(3)).unwrap();
        assert_eq!(oct.num_facets(), 8);
        assert_eq!(f_vector(&oct).unwrap().entries(), &[1, 6, 12, 8]);
        assert_eq!(generate(&GeneratorSpec::PaperTwoTriangles).unwrap(), cx("abc,bcd"));
    }

    #[test]
    fn shelling_orders_verify_and_topology_matches() {
        for spec in corpus() {
            let c = generate(&spec).unwrap();
            assert!(c.is_pure().unwrap(), "{spec}");
            let order = shelling_order_of(&spec).unwrap();
            let cert = certificate_from_shelling_order(&c, &order).unwrap();
            verify_certificate(&c, Kind::Shellable, &cert).unwrap_or_else(|e| panic!("{spec}: {e}"));
            let verdict = classify_topology(&c, &cert).unwrap();
            let expected_sphere = match &spec {
                GeneratorSpec::SimplexBoundary(_)
                | GeneratorSpec::CrossPolytopeBoundary(_)
                | GeneratorSpec::StackedSphere(..) => Some(true),
                GeneratorSpec::Simplex(_) | GeneratorSpec::StackedBall(..) => Some(false),
                _ => None,
            };
            match expected_sphere {
                Some(true) => assert_eq!(verdict, TopologyVerdict::Sphere, "{spec}"),
                Some(false) => assert_eq!(verdict, TopologyVerdict::Ball, "{spec}"),
                None => assert!(verdict.is_ball_or_sphere(), "{spec}"),
            }
        }
    }

    #[test]
    fn stacked_sphere_is_boundary_of_stacked_ball() {
        for seed in 0..10 {
            for d in 0..4 {
                let ball = generate(&GeneratorSpec::StackedBall(d + 1, 6, seed)).unwrap();
                let sphere = generate(&GeneratorSpec::StackedSphere(d, 6, seed)).unwrap();
                assert_eq!(ball.boundary().unwrap(), sphere);
                assert_eq!(ball.num_facets(), 7);
                assert_eq!(sphere.num_facets(), d + 2 + 6 * d);
            }
        }
    }

    #[test]
    fn suspension_of_sphere_is_sphere() {
        let s = GeneratorSpec::Suspension(alloc::boxed::Box::new(GeneratorSpec::StackedSphere(1, 3, 4)));
        let c = generate(&s).unwrap();
        let cert = certificate_from_shelling_order(&c, &shelling_order_of(&s).unwrap()).unwrap();
        assert_eq!(classify_topology(&c, &cert).unwrap(), TopologyVerdict::Sphere);
    }

    #[test]
    fn spec_strings_round_trip() {
        for spec in corpus() {
            assert_eq!(spec.to_string().parse::<GeneratorSpec>().unwrap(), spec);
        }
        assert_eq!(
            "stacked-sphere:3:10".parse::<GeneratorSpec>().unwrap(),
            GeneratorSpec::StackedSphere(3, 10, 0)
        );
        assert!("simplex:0".parse::<GeneratorSpec>().is_err());
        assert!("torus:2".parse::<GeneratorSpec>().is_err());
    }

    #[test]
    fn random_schedules_validate() {
        let mut rng = Lcg::new(7);
        for seed in 0..20 {
            let c = generate(&GeneratorSpec::StackedSphere(3, 3, seed)).unwrap();
            let s = random_schedule(&c, &mut rng);
            crate::subdivision::validate_schedule(&c, &s).unwrap();
        }
    }
}

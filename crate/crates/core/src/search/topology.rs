use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{verify_certificate, DecompositionCertificate, Kind, Step};
use crate::{Dim, Error, Face, Result, SimplicialComplex};

/// Ball/sphere status of a constructible complex, certified through the
/// ridge condition: a constructible complex whose ridges each lie in at most
/// two facets is a ball (non-void boundary) or a sphere (void boundary).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TopologyVerdict {
    Ball,
    Sphere,
    /// Some ridge lies in three or more facets.
    NotCandidate { ridge: Face, facets: usize },
    Unknown { reason: String },
}

impl TopologyVerdict {
    pub fn is_ball_or_sphere(&self) -> bool {
        matches!(self, TopologyVerdict::Ball | TopologyVerdict::Sphere)
    }

    pub fn name(&self) -> &'static str {
        match self {
            TopologyVerdict::Ball => "ball",
            TopologyVerdict::Sphere => "sphere",
            TopologyVerdict::NotCandidate { .. } => "not-candidate",
            TopologyVerdict::Unknown { .. } => "unknown",
        }
    }

    pub fn reason(&self) -> String {
        match self {
            TopologyVerdict::Ball => {
                "constructible, every ridge in at most two facets, non-void boundary".into()
            }
            TopologyVerdict::Sphere => {
                "constructible, every ridge in at most two facets, void boundary".into()
            }
            TopologyVerdict::NotCandidate { ridge, facets } => {
                format!("ridge {ridge} lies in {facets} facets")
            }
            TopologyVerdict::Unknown { reason } => reason.clone(),
        }
    }
}

/// Classifies `complex` given a certificate that verifies as constructible.
pub fn classify_topology(
    complex: &SimplicialComplex,
    cert: &DecompositionCertificate,
) -> Result<TopologyVerdict> {
    verify_certificate(complex, Kind::Constructible, cert).map_err(Error::InvalidCertificate)?;
    let incidence = complex.ridge_incidence()?;
    if let Some((ridge, &facets)) = incidence.iter().find(|(_, &n)| n >= 3) {
        return Ok(TopologyVerdict::NotCandidate { ridge: ridge.clone(), facets });
    }
    Ok(if incidence.values().any(|&n| n == 1) {
        TopologyVerdict::Ball
    } else {
        TopologyVerdict::Sphere
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UcapvOutcome {
    /// A simplex, or dimension at most zero.
    Trivial,
    /// `U ∩ V` is a ball or sphere, as expected.
    Holds(TopologyVerdict),
    Counterexample(TopologyVerdict),
}

impl UcapvOutcome {
    pub fn is_ok(&self) -> bool {
        !matches!(self, UcapvOutcome::Counterexample(_))
    }
}

/// For a certified constructible ball or sphere, classifies `U ∩ V` at the
/// root split through its own sub-certificate.
pub fn ucapv_check(
    complex: &SimplicialComplex,
    cert: &DecompositionCertificate,
) -> Result<UcapvOutcome> {
    if !classify_topology(complex, cert)?.is_ball_or_sphere() {
        return Err(Error::NotBallOrSphere);
    }
    let DecompositionCertificate::Split(split) = cert else {
        return Ok(UcapvOutcome::Trivial);
    };
    if complex.dim() <= Dim::Finite(0) {
        return Ok(UcapvOutcome::Trivial);
    }
    let u = complex.restrict_to(&split.u_facets).expect("certificate verified");
    let v = complex.restrict_to(&split.v_facets).expect("certificate verified");
    let verdict = classify_topology(&u.intersection(&v), &split.intersection)?;
    Ok(if verdict.is_ball_or_sphere() {
        UcapvOutcome::Holds(verdict)
    } else {
        UcapvOutcome::Counterexample(verdict)
    })
}

/// Runs [`ucapv_check`] at every split node reachable through `U`, `V` and
/// `U ∩ V` children whose complex is itself a ball or sphere.
pub fn ucapv_check_all(
    complex: &SimplicialComplex,
    cert: &DecompositionCertificate,
) -> Result<Vec<(Vec<Step>, UcapvOutcome)>> {
    let mut out = Vec::new();
    walk(complex, cert, &mut Vec::new(), &mut out)?;
    Ok(out)
}

fn walk(
    complex: &SimplicialComplex,
    cert: &DecompositionCertificate,
    path: &mut Vec<Step>,
    out: &mut Vec<(Vec<Step>, UcapvOutcome)>,
) -> Result<()> {
    if !classify_topology(complex, cert)?.is_ball_or_sphere() {
        return Ok(());
    }
    out.push((path.clone(), ucapv_check(complex, cert)?));
    let DecompositionCertificate::Split(split) = cert else {
        return Ok(());
    };
    let u = complex.restrict_to(&split.u_facets).expect("certificate verified");
    let v = complex.restrict_to(&split.v_facets).expect("certificate verified");
    let inter = u.intersection(&v);
    for (step, sub, c) in [
        (Step::U, &u, &split.u),
        (Step::V, &v, &split.v),
        (Step::Intersection, &inter, &split.intersection),
    ] {
        path.push(step);
        walk(sub, c, path, out)?;
        path.pop();
    }
    Ok(())
}

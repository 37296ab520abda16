//! End-to-end check of the sign theorem on one input: a sesquiconstructible
//! ball or sphere of odd dimension `2d - 1` has an odd iterated stellar
//! subdivision `S` with `κ(S) ≥ 0` for even `d` and `κ(S) ≤ 0` for odd `d`.
//!
//! Stages run in order and the first failing one ends the run. A search
//! that stops at a cap leaves the hypothesis *not established*; only an
//! exhaustive negative answer counts as a failed hypothesis.

use alloc::format;
use alloc::string::String;

use crate::invariants::{f_vector, is_flag, kappa, sign_rule_holds, FVector};
use crate::search::{
    check_sesquiconstructible, classify_topology, verify_certificate, DecompositionCertificate, Kind,
    SearchCaps, TopologyVerdict,
};
use crate::subdivision::{barycentric_schedule, odd_iterated_subdivide, validate_schedule, SubdivisionSchedule};
use crate::{Dim, Dyadic, Error, Result, SimplicialComplex};

#[derive(Clone, Debug)]
pub enum ScheduleChoice {
    Explicit(SubdivisionSchedule),
    Barycentric,
}

#[derive(Clone, Debug)]
pub enum CertificateSource {
    Search(SearchCaps),
    /// A sesquiconstructible certificate supplied by the caller; it is
    /// verified before use.
    Given(DecompositionCertificate),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    NonVoid,
    Pure,
    OddDimension,
    Sesquiconstructible,
    BallOrSphere,
    ValidSchedule,
}

impl Hypothesis {
    pub fn name(self) -> &'static str {
        match self {
            Hypothesis::NonVoid => "non-void",
            Hypothesis::Pure => "pure",
            Hypothesis::OddDimension => "odd-dimension",
            Hypothesis::Sesquiconstructible => "sesquiconstructible",
            Hypothesis::BallOrSphere => "ball-or-sphere",
            Hypothesis::ValidSchedule => "valid-schedule",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// The sign rule holds for the subdivision.
    Confirmed,
    HypothesisFailed { hypothesis: Hypothesis, detail: String },
    /// A search cap stopped the run before the hypothesis was decided.
    NotEstablished { hypothesis: Hypothesis, detail: String },
    /// Every hypothesis holds and the sign rule fails.
    Violated,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateStatus {
    pub kind: Kind,
    pub searched: bool,
    pub verified: bool,
    pub nodes: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremVerdict {
    /// `d` in `dim = 2d - 1`.
    pub d: isize,
    /// `true` when `κ ≥ 0` is required, `false` when `κ ≤ 0` is.
    pub expects_nonnegative: bool,
    pub sign_rule_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineReport {
    pub input_dim: Dim,
    pub input_f_vector: Option<FVector>,
    pub barycentric: bool,
    pub schedule_len: Option<usize>,
    pub certificate: Option<CertificateStatus>,
    pub topology: Option<TopologyVerdict>,
    pub subdivision_f_vector: Option<FVector>,
    pub kappa: Option<Dyadic>,
    pub flag: Option<bool>,
    /// Present only once every hypothesis has been established.
    pub verdict: Option<TheoremVerdict>,
    pub outcome: Outcome,
}

fn failed(hypothesis: Hypothesis, detail: impl Into<String>) -> Outcome {
    Outcome::HypothesisFailed { hypothesis, detail: detail.into() }
}

/// Runs the pipeline. Errors are reserved for inputs the pipeline cannot
/// process at all, such as vertex labels that clash with apex labels.
pub fn check_theorem(
    complex: &SimplicialComplex,
    schedule: &ScheduleChoice,
    source: &CertificateSource,
) -> Result<PipelineReport> {
    let mut report = PipelineReport {
        input_dim: complex.dim(),
        input_f_vector: None,
        barycentric: matches!(schedule, ScheduleChoice::Barycentric),
        schedule_len: None,
        certificate: None,
        topology: None,
        subdivision_f_vector: None,
        kappa: None,
        flag: None,
        verdict: None,
        outcome: Outcome::Confirmed,
    };
    report.outcome = run(complex, schedule, source, &mut report)?;
    Ok(report)
}

fn run(
    complex: &SimplicialComplex,
    schedule: &ScheduleChoice,
    source: &CertificateSource,
    report: &mut PipelineReport,
) -> Result<Outcome> {
    let Dim::Finite(dim) = complex.dim() else {
        return Ok(failed(Hypothesis::NonVoid, "the void complex has no dimension"));
    };
    report.input_f_vector = Some(f_vector(complex)?);
    if !complex.is_pure()? {
        return Ok(failed(Hypothesis::Pure, "facets of different dimensions"));
    }
    if dim.rem_euclid(2) == 0 {
        return Ok(failed(Hypothesis::OddDimension, format!("dimension {dim} is even")));
    }

    let (cert, searched) = match source {
        CertificateSource::Given(cert) => (cert.clone(), false),
        CertificateSource::Search(caps) => match check_sesquiconstructible(complex, *caps) {
            Ok(Some(cert)) => (cert, true),
            Ok(None) => {
                return Ok(failed(
                    Hypothesis::Sesquiconstructible,
                    "exhaustive search found no decomposition",
                ))
            }
            Err(Error::SearchCapExceeded(cap)) => {
                return Ok(Outcome::NotEstablished {
                    hypothesis: Hypothesis::Sesquiconstructible,
                    detail: format!("{cap}"),
                })
            }
            Err(e) => return Err(e),
        },
    };
    let verified = verify_certificate(complex, Kind::Sesquiconstructible, &cert);
    report.certificate = Some(CertificateStatus {
        kind: Kind::Sesquiconstructible,
        searched,
        verified: verified.is_ok(),
        nodes: cert.node_count(),
    });
    if let Err(v) = verified {
        return Ok(failed(Hypothesis::Sesquiconstructible, format!("certificate rejected: {v}")));
    }

    let topology = classify_topology(complex, &cert)?;
    report.topology = Some(topology.clone());
    if !topology.is_ball_or_sphere() {
        return Ok(failed(Hypothesis::BallOrSphere, topology.reason()));
    }

    let schedule = match schedule {
        ScheduleChoice::Explicit(s) => s.clone(),
        ScheduleChoice::Barycentric => barycentric_schedule(complex)?,
    };
    report.schedule_len = Some(schedule.len());
    if let Err(v) = validate_schedule(complex, &schedule) {
        return Ok(failed(Hypothesis::ValidSchedule, format!("{v}")));
    }

    let sub = odd_iterated_subdivide(complex, &schedule)?;
    let k = kappa(&sub)?;
    report.subdivision_f_vector = Some(f_vector(&sub)?);
    report.flag = Some(is_flag(&sub)?);
    let d = (dim + 1) / 2;
    let holds = sign_rule_holds(dim, &k);
    report.kappa = Some(k);
    report.verdict = Some(TheoremVerdict { d, expects_nonnegative: d % 2 == 0, sign_rule_holds: holds });
    Ok(if holds { Outcome::Confirmed } else { Outcome::Violated })
}

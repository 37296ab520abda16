use alloc::string::String;

use crate::search::{CapExceeded, Violation};
use crate::subdivision::ScheduleViolation;
use crate::{Face, VertexLabel};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid vertex label {0:?}")]
    InvalidLabel(String),
    #[error("operation is undefined on the void complex")]
    VoidComplex,
    #[error("complex is not pure")]
    NotPure,
    #[error("apex {0} is already a vertex of the complex")]
    ApexCollision(VertexLabel),
    #[error("{0} is not a face of the complex")]
    FaceAbsent(Face),
    #[error("face must be non-empty")]
    EmptyFace,
    #[error("vertex label {0} is reserved for apex vertices")]
    ReservedLabel(VertexLabel),
    #[error("invalid schedule: {0}")]
    InvalidSchedule(ScheduleViolation),
    #[error("internal invariant broken: {0}")]
    InvariantBroken(String),
    #[error("dimension {0} is even")]
    EvenDimension(isize),
    #[error("{vertices} vertices exceed the enumeration cap of {cap}")]
    Overflow { vertices: usize, cap: usize },
    #[error("search cap exceeded: {0}")]
    SearchCapExceeded(CapExceeded),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(Violation),
    #[error("complex is not a certified ball or sphere")]
    NotBallOrSphere,
    #[error("invalid shelling order: {0}")]
    InvalidShellingOrder(String),
    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),
}

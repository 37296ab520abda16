use alloc::string::{String, ToString};
use alloc::sync::Arc;
use core::cmp::Ordering;
use core::fmt;

use crate::Error;

/// Prefix reserved for apex vertices created by stellar subdivision.
pub const APEX_PREFIX: &str = "p.";

/// A vertex name: a non-empty token over `[A-Za-z0-9_.-]`.
///
/// Labels are ordered by length first and then bytewise, so `v9 < v10`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexLabel(Arc<str>);

impl VertexLabel {
    pub fn new(token: &str) -> Result<Self, Error> {
        if is_valid_token(token) {
            Ok(VertexLabel(Arc::from(token)))
        } else {
            Err(Error::InvalidLabel(token.to_string()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// True for labels in the apex namespace (`p.` prefix).
    pub fn is_reserved(&self) -> bool {
        self.0.starts_with(APEX_PREFIX)
    }
}

pub(crate) fn is_valid_token(token: &str) -> bool {
    !token.is_empty()
        && token
            .bytes()
            .all(|b| b.is_ascii_alphanumeric() || matches!(b, b'_' | b'.' | b'-'))
}

impl Ord for VertexLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.as_bytes().cmp(other.0.as_bytes()))
    }
}

impl PartialOrd for VertexLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl core::str::FromStr for VertexLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        VertexLabel::new(s)
    }
}

impl From<VertexLabel> for String {
    fn from(label: VertexLabel) -> String {
        label.0.to_string()
    }
}

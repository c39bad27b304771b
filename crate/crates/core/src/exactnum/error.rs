use thiserror::Error;

/// Where an evaluation became undefined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoleKind {
    /// Gamma evaluated at a non-positive integer.
    GammaPole,
    /// Reciprocal of a binomial coefficient that is exactly zero.
    ZeroBinomialReciprocal,
    /// Harmonic number extension evaluated at a negative integer.
    NegativeIntegerHarmonic,
    /// Division that leaves the representable constant field.
    DivisionUndefined,
}

impl PoleKind {
    pub fn as_str(self) -> &'static str {
        match self {
            PoleKind::GammaPole => "gamma pole",
            PoleKind::ZeroBinomialReciprocal => "zero binomial reciprocal",
            PoleKind::NegativeIntegerHarmonic => "negative integer harmonic",
            PoleKind::DivisionUndefined => "division undefined",
        }
    }
}

/// Raised by exact evaluators when a subterm is undefined; the verification
/// engine converts these into skip verdicts (or predicate-gap reports when
/// the domain predicate should have caught them).
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("{} at {location}", kind.as_str())]
pub struct PoleError {
    pub kind: PoleKind,
    /// Text describing the offending subterm, e.g. `Gamma(-2)`.
    pub location: String,
}

impl PoleError {
    pub fn new(kind: PoleKind, location: impl Into<String>) -> Self {
        PoleError {
            kind,
            location: location.into(),
        }
    }

    pub fn gamma(location: impl Into<String>) -> Self {
        Self::new(PoleKind::GammaPole, location)
    }

    pub fn division(location: impl Into<String>) -> Self {
        Self::new(PoleKind::DivisionUndefined, location)
    }

    pub fn harmonic(location: impl Into<String>) -> Self {
        Self::new(PoleKind::NegativeIntegerHarmonic, location)
    }
}

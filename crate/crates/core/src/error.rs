use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// The hinge conditions a chain of relations can violate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HingeAxiom {
    /// Every term must be an `n`-dimensional relation `V ⇉ V`.
    TermDimension,
    /// `Ker P_j = Dom P_{j+1}`.
    KernelMeetsDomain,
    /// `Im P_j = Indef P_{j+1}`.
    ImageMeetsIndef,
    /// `Dom P_1 = V`.
    FirstDomainFull,
    /// `Im P_k = V`.
    LastImageFull,
    /// `rk P_j > 0`.
    PositiveRank,
    /// At most `n` terms and at least one.
    Length,
}

impl HingeAxiom {
    pub fn name(self) -> &'static str {
        match self {
            HingeAxiom::TermDimension => "term-dimension",
            HingeAxiom::KernelMeetsDomain => "kernel-meets-domain",
            HingeAxiom::ImageMeetsIndef => "image-meets-indef",
            HingeAxiom::FirstDomainFull => "first-domain-full",
            HingeAxiom::LastImageFull => "last-image-full",
            HingeAxiom::PositiveRank => "positive-rank",
            HingeAxiom::Length => "length",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            HingeAxiom::TermDimension => "dim P_j = n for a relation V => V",
            HingeAxiom::KernelMeetsDomain => "Ker P_j = Dom P_(j+1)",
            HingeAxiom::ImageMeetsIndef => "Im P_j = Indef P_(j+1)",
            HingeAxiom::FirstDomainFull => "Dom P_1 = V",
            HingeAxiom::LastImageFull => "Im P_k = V",
            HingeAxiom::PositiveRank => "rk P_j > 0",
            HingeAxiom::Length => "1 <= k <= n",
        }
    }
}

impl fmt::Display for HingeAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.name(), self.statement())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("scalar must be nonzero")]
    ZeroScalar,
    #[error("matrix is singular")]
    Singular,
    #[error("exterior degree {k} exceeds dimension {n}")]
    DegreeTooLarge { k: usize, n: usize },
    #[error("relation is not an n-dimensional relation V => V")]
    NotInGamma,
    #[error("hinge axiom {axiom} fails at term {index}")]
    HingeAxiom { axiom: HingeAxiom, index: usize },
    #[error("weak hinge containment fails after term {0}")]
    WeakHinge(usize),
    #[error("the zero Laurent polynomial has no order")]
    ZeroPolynomial,
    #[error("matrix family has identically vanishing determinant")]
    SingularFamily,
    #[error("jet precision {given} exhausted; at least {required} is needed")]
    PrecisionExhausted { given: usize, required: usize },
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("tensor ambient dimension {dim} exceeds the cap {cap}")]
    ScaleCap { dim: usize, cap: usize },
    #[error("invalid reparametrization: {0}")]
    InvalidReparametrization(String),
    #[error("spike points carry different exponent vectors")]
    MismatchedSpikes,
    #[error("empty input: {0}")]
    Empty(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// A stable machine-readable name.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch(_) => "dimension-mismatch",
            Error::ZeroScalar => "zero-scalar",
            Error::Singular => "singular",
            Error::DegreeTooLarge { .. } => "degree-too-large",
            Error::NotInGamma => "not-in-gamma",
            Error::HingeAxiom { .. } => "hinge-axiom",
            Error::WeakHinge(_) => "weak-hinge",
            Error::ZeroPolynomial => "zero-polynomial",
            Error::SingularFamily => "singular-family",
            Error::PrecisionExhausted { .. } => "precision-exhausted",
            Error::InvalidSignature(_) => "invalid-signature",
            Error::ScaleCap { .. } => "scale-cap",
            Error::InvalidReparametrization(_) => "invalid-reparametrization",
            Error::MismatchedSpikes => "mismatched-spikes",
            Error::Empty(_) => "empty",
            Error::Parse(_) => "parse",
            Error::Internal(_) => "internal",
        }
    }

    pub(crate) fn dims(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

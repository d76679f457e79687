use thiserror::Error;

/// Errors raised while constructing or validating algebraic objects.
///
/// Indices in witnesses refer to the frozen construction order of the
/// object they come from (group element order, basis order).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a group: {axiom} fails at {witness:?}")]
    NotAGroup {
        axiom: &'static str,
        witness: Vec<usize>,
    },
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("structure constants are not associative on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("declared unit fails on basis element {0}")]
    BadUnit(usize),
    #[error("index out of range: {0}")]
    BadIndex(String),
    #[error("scalar rings differ: {0} vs {1}")]
    ScalarMismatch(String, String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("operation needs a field, got {0}")]
    UnsupportedScalar(String),
    #[error("scalar {0} is not invertible in {1}")]
    NotInvertible(String, String),
    #[error("group order {0} is not invertible in {1}")]
    OrderNotInvertible(usize, String),
    #[error("representation law fails for the pair ({0}, {1})")]
    NotARepresentation(String, String),
    #[error("action of {0} is not multiplicative on basis pair ({1}, {2})")]
    NotAutomorphism(String, usize, usize),
    #[error("grading is not multiplicative on basis pair ({0}, {1}): product leaves degree {2}")]
    NotMultiplicative(usize, usize, String),
    #[error("missing structure: {0}")]
    MissingStructure(String),
    #[error("missing group action on {0}")]
    MissingAction(String),
    #[error("missing group grading on {0}")]
    MissingGrading(String),
    #[error("degree cap {cap} exceeded (needed {needed})")]
    DegreeCapExceeded { cap: usize, needed: usize },
    #[error("section is not a linear splitting: {0}")]
    SectionNotLinear(String),
    #[error("classifying map leaves the kernel on J-basis vector {0}")]
    ImageEscapesKernel(usize),
    #[error("homotopy endpoint mismatch at {0}")]
    EndpointMismatch(String),
    #[error("basis is not pointwise: {0}")]
    NotPointwiseBasis(String),
    #[error("elements belong to different algebras: {0} and {1}")]
    ParentMismatch(String, String),
    #[error("malformed input: {0}")]
    Parse(String),
}

impl Error {
    /// Short variant name, used as the stable error tag in reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotAGroup { .. } => "NotAGroup",
            Error::NotASubgroup(_) => "NotASubgroup",
            Error::NotAssociative(..) => "NotAssociative",
            Error::BadUnit(_) => "BadUnit",
            Error::BadIndex(_) => "BadIndex",
            Error::ScalarMismatch(..) => "ScalarMismatch",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::UnsupportedScalar(_) => "UnsupportedScalar",
            Error::NotInvertible(..) => "NotInvertible",
            Error::OrderNotInvertible(..) => "OrderNotInvertible",
            Error::NotARepresentation(..) => "NotARepresentation",
            Error::NotAutomorphism(..) => "NotAutomorphism",
            Error::NotMultiplicative(..) => "NotMultiplicative",
            Error::MissingStructure(_) => "MissingStructure",
            Error::MissingAction(_) => "MissingAction",
            Error::MissingGrading(_) => "MissingGrading",
            Error::DegreeCapExceeded { .. } => "DegreeCapExceeded",
            Error::SectionNotLinear(_) => "SectionNotLinear",
            Error::ImageEscapesKernel(_) => "ImageEscapesKernel",
            Error::EndpointMismatch(_) => "EndpointMismatch",
            Error::NotPointwiseBasis(_) => "NotPointwiseBasis",
            Error::ParentMismatch(..) => "ParentMismatch",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

/// Broad class of a failure; the CLI maps each class to an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Parse,
    Validation,
    Hypothesis,
    Internal,
}

impl ErrorClass {
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorClass::Parse => 2,
            ErrorClass::Validation => 3,
            ErrorClass::Hypothesis => 4,
            ErrorClass::Internal => 5,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),

    #[error("exponent overflow in monomial arithmetic")]
    ExponentOverflow,
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("a term of degree {found} exceeds the homogenization degree {target}")]
    HomogenizationDegree { found: u64, target: u64 },
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("mismatched rings or dimensions: {0}")]
    Mismatch(String),
    #[error("negative exponent or power: {0}")]
    NegativePower(i64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("nonzerodivisors must be supplied when the base ring is a quotient ring")]
    MissingNonzerodivisors,
    #[error("supplied element `{0}` does not lie in its ideal")]
    NonzerodivisorNotInIdeal(String),
    #[error("index has length {found}, but {expected} ideals were given")]
    IndexLength { expected: usize, found: usize },
    #[error("polytope error: {0}")]
    Polytope(String),

    #[error("ideal number {0} has grade zero; pass its image in R/(0 : I^inf) instead")]
    GradeZero(usize),
    #[error("supplied element `{0}` is a zerodivisor in the base ring")]
    NotNonzerodivisor(String),
    #[error("I_0 is not primary to the maximal ideal")]
    NotPrimary,
    #[error("index sum is {found}, but it must equal dim R - 1 = {expected}")]
    IndexSum { expected: i64, found: u64 },
    #[error("the base ring has dimension {0}; at least 1 is required")]
    DimensionTooSmall(i64),
    #[error("the quotient is not a finite-dimensional vector space")]
    NotZeroDimensional,
    #[error("the Jacobian ideal is not primary to the maximal ideal")]
    JacobianNotPrimary,
    #[error("the singularity is not isolated at the origin")]
    NotIsolated,

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        use Error::*;
        match self {
            Syntax { .. } | UnknownVariable(_) | UnknownName(_) | DuplicateName(_) => ErrorClass::Parse,
            ExponentOverflow
            | ZeroPolynomial
            | NotHomogeneous
            | ConstantPolynomial
            | HomogenizationDegree { .. }
            | InvalidRing(_)
            | Mismatch(_)
            | NegativePower(_)
            | InvalidArgument(_)
            | Unsupported(_)
            | MissingNonzerodivisors
            | NonzerodivisorNotInIdeal(_)
            | IndexLength { .. }
            | Polytope(_) => ErrorClass::Validation,
            GradeZero(_)
            | NotNonzerodivisor(_)
            | NotPrimary
            | IndexSum { .. }
            | DimensionTooSmall(_)
            | NotZeroDimensional
            | JacobianNotPrimary
            | NotIsolated => ErrorClass::Hypothesis,
            Internal(_) => ErrorClass::Internal,
        }
    }

    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        use Error::*;
        match self {
            Syntax { .. } => "syntax",
            UnknownVariable(_) => "unknown-variable",
            UnknownName(_) => "unknown-name",
            DuplicateName(_) => "duplicate-name",
            ExponentOverflow => "exponent-overflow",
            ZeroPolynomial => "zero-polynomial",
            NotHomogeneous => "not-homogeneous",
            ConstantPolynomial => "constant-polynomial",
            HomogenizationDegree { .. } => "homogenization-degree",
            InvalidRing(_) => "invalid-ring",
            Mismatch(_) => "mismatch",
            NegativePower(_) => "negative-power",
            InvalidArgument(_) => "invalid-argument",
            Unsupported(_) => "unsupported",
            MissingNonzerodivisors => "missing-nonzerodivisors",
            NonzerodivisorNotInIdeal(_) => "nzd-not-in-ideal",
            IndexLength { .. } => "index-length",
            Polytope(_) => "polytope",
            GradeZero(_) => "grade-zero",
            NotNonzerodivisor(_) => "zerodivisor",
            NotPrimary => "not-primary",
            IndexSum { .. } => "index-sum",
            DimensionTooSmall(_) => "dimension-too-small",
            NotZeroDimensional => "not-zero-dimensional",
            JacobianNotPrimary => "jacobian-not-primary",
            NotIsolated => "not-isolated",
            Internal(_) => "internal",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

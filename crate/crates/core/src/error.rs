use thiserror::Error;

/// Every failure the library can report. The CLI maps each variant onto a
/// stable, upper-case kind string (see [`Error::kind`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields ({0} vs {1})")]
    FieldMismatch(String, String),
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("invalid modulus {0}: {1}")]
    InvalidModulus(u64, &'static str),
    #[error("homothety by zero")]
    ZeroScale,
    #[error("constant term is zero")]
    ZeroConstantTerm,
    #[error("input polynomial is constant")]
    ConstantInput,
    #[error("zero polynomial passed where a nonzero one is required")]
    ZeroInput,
    #[error("degree {0} is too small (need at least {1})")]
    DegreeTooSmall(usize, usize),
    #[error("the zero polynomial has no tolerant")]
    ZeroPolynomial,
    #[error("roots are not pairwise distinct")]
    DuplicateRoots,
    #[error("multiplicities sum to {found}, expected degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),
    #[error("factor {0} is inseparable but the separable formula was requested")]
    InseparableInSeparableMode(String),
    #[error("a factor discriminant vanished: {0}")]
    ZeroDiscriminantFactor(String),
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("literal error at offset {offset}: {message}")]
    FieldLiteral { offset: usize, message: String },
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DIVISION_BY_ZERO",
            Error::FieldMismatch(..) => "FIELD_MISMATCH",
            Error::UnsupportedField(_) => "UNSUPPORTED_FIELD",
            Error::InvalidModulus(..) => "INVALID_MODULUS",
            Error::ZeroScale => "ZERO_SCALE",
            Error::ZeroConstantTerm => "ZERO_CONSTANT_TERM",
            Error::ConstantInput => "CONSTANT_INPUT",
            Error::ZeroInput => "ZERO_INPUT",
            Error::DegreeTooSmall(..) => "DEGREE_TOO_SMALL",
            Error::ZeroPolynomial => "ZERO_POLYNOMIAL",
            Error::DuplicateRoots => "DUPLICATE_ROOTS",
            Error::DegreeMismatch { .. } => "DEGREE_MISMATCH",
            Error::InvalidFactorization(_) => "INVALID_FACTORIZATION",
            Error::InseparableInSeparableMode(_) => "INSEPARABLE_IN_SEPARABLE_MODE",
            Error::ZeroDiscriminantFactor(_) => "ZERO_DISCRIMINANT_FACTOR",
            Error::Syntax { .. } => "SYNTAX_ERROR",
            Error::FieldLiteral { .. } => "FIELD_LITERAL_ERROR",
        }
    }

    /// Character offset into the parsed source, for parser errors.
    pub fn offset(&self) -> Option<usize> {
        match self {
            Error::Syntax { offset, .. } | Error::FieldLiteral { offset, .. } => Some(*offset),
            _ => None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

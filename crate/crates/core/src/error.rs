use thiserror::Error;

/// Errors raised anywhere in the crate.
///
/// Every variant has a stable [`Error::name`] that the command-line front end
/// reports in the `error` field of its JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("field of order {0} exceeds the 2^20 element cap")]
    FieldTooLarge(u128),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("value {0} is not an element of the field")]
    InvalidElement(u64),
    #[error("GF({sub}) is not a subfield of GF({big})")]
    NotASubfield { sub: u32, big: u32 },
    #[error("characteristic {p} divides m = {m}")]
    CharacteristicDividesM { p: u32, m: usize },
    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: u64, b: u64 },
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("field order {0} is not a square")]
    NotSquareOrderField(u32),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("enumeration of {0} codewords exceeds the 2^24 cap")]
    TooLargeToEnumerate(u128),
    #[error("generator polynomial does not divide x^{0} - 1")]
    NotADivisor(usize),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("entry outside its constituent field in slot {0}")]
    SubfieldViolation(String),
    #[error("slot {0} is not a reciprocal pair")]
    SlotNotAPair(usize),
    #[error("slot {0} is not self-reciprocal of even degree")]
    SlotNotSelfReciprocal(usize),
    #[error("input code is not LCD")]
    NotLcd,
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("field has characteristic 2")]
    EvenCharacteristic,
    #[error("generator matrix is not of the form [I_k : P]")]
    NotSystematic,
    #[error("degree {degree} is not below m = {m}")]
    DegreeTooLarge { degree: usize, m: usize },
    #[error("no self-dual basis of GF({q}^{ell}) over GF({q})")]
    NoSelfDualBasisExists { q: u32, ell: usize },
    #[error("self-dual basis search exhausted without a result")]
    SearchExhausted,
    #[error("basis does not match the code's field")]
    BasisFieldMismatch,
    #[error("criterion and oracle disagree: {0}")]
    OracleDisagreement(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Stable identifier for machine-readable output.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NonPrimeCharacteristic(_) => "NonPrimeCharacteristic",
            Error::FieldTooLarge(_) => "FieldTooLarge",
            Error::DivisionByZero => "DivisionByZero",
            Error::FieldMismatch => "FieldMismatch",
            Error::InvalidElement(_) => "InvalidElement",
            Error::NotASubfield { .. } => "NotASubfield",
            Error::CharacteristicDividesM { .. } => "CharacteristicDividesM",
            Error::NotCoprime { .. } => "NotCoprime",
            Error::ZeroConstantTerm => "ZeroConstantTerm",
            Error::NotSquareOrderField(_) => "NotSquareOrderField",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::TooLargeToEnumerate(_) => "TooLargeToEnumerate",
            Error::NotADivisor(_) => "NotADivisor",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::SubfieldViolation(_) => "SubfieldViolation",
            Error::SlotNotAPair(_) => "SlotNotAPair",
            Error::SlotNotSelfReciprocal(_) => "SlotNotSelfReciprocal",
            Error::NotLcd => "NotLcd",
            Error::PreconditionViolation(_) => "PreconditionViolation",
            Error::EvenCharacteristic => "EvenCharacteristic",
            Error::NotSystematic => "NotSystematic",
            Error::DegreeTooLarge { .. } => "DegreeTooLarge",
            Error::NoSelfDualBasisExists { .. } => "NoSelfDualBasisExists",
            Error::SearchExhausted => "SearchExhausted",
            Error::BasisFieldMismatch => "BasisFieldMismatch",
            Error::OracleDisagreement(_) => "OracleDisagreement",
            Error::Parse(_) => "Parse",
            Error::Io(_) => "Io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

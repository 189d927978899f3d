use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("denominator factor {0} vanishes under the substitution")]
    DenominatorVanishes(String),

    #[error("expression involves parameters other than q")]
    NonUnivariate,

    #[error("division of Laurent polynomials with negative valuation")]
    NegativeValuation,

    #[error("{0} is not a monomial or binomial")]
    NotBinomial(String),

    #[error("denominator {den} is not coprime to modulus {modulus}")]
    NotCoprime { den: String, modulus: u64 },

    #[error("constraint violated: {0}")]
    Constraint(String),

    #[error("invalid modulus: {0}")]
    InvalidModulus(String),

    #[error("unknown case `{0}`")]
    UnknownCase(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;

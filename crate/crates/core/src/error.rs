use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("representation must have at least one summand")]
    EmptyRep,

    #[error("malformed representation `{0}`")]
    MalformedRep(String),

    #[error("{what}: index (i={i}, j={j}) out of range")]
    IndexOutOfRange { what: &'static str, i: i64, j: usize },

    #[error("summand {j} has n_j = {n_j}, expected {expected}")]
    Congruence { j: usize, n_j: u32, expected: &'static str },

    #[error("nilpotency index of the zero polynomial is undefined")]
    ZeroPolynomial,

    #[error("derivation did not terminate within {0} applications")]
    NotNilpotent(usize),

    #[error("polynomial is not a local slice: D(D(s)) != 0")]
    NotLocalSlice,

    #[error("polynomial is not supported on summand {0} alone")]
    NotSingleSummand(usize),

    #[error("polynomial is not isobaric")]
    NotIsobaric,

    #[error("polynomial is not an invariant")]
    NotInvariant,

    #[error("transvectant order {r} exceeds the y-degree bound {bound}")]
    OrderTooLarge { r: u32, bound: u32 },

    #[error("cannot evaluate a polynomial involving auxiliary variable y{0}")]
    AuxiliaryVariable(u8),

    #[error("point has no coordinate for x[{i},{j}]")]
    MissingCoordinate { i: u32, j: u32 },

    #[error("point shape does not match the representation: {0}")]
    PointShape(String),

    #[error("slice derivative vanishes at the point")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),
}

use alloc::string::String;

/// Everything that can go wrong while building or checking a certificate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{rows}x{cols} matrix exceeds the cap of {cap} entries")]
    DimensionCap { rows: usize, cols: usize, cap: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("graph is not connected")]
    NotConnected,
    #[error("matrix has non-integer entries")]
    NotIntegral,
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
    #[error("scheme axiom `{axiom}` fails: {detail}")]
    Axiom { axiom: &'static str, detail: String },
    #[error("operation requires a symmetric scheme")]
    RequiresSymmetric,
    #[error("character {character} takes non-real values; only ambivalent groups are supported")]
    AmbivalentOnly { character: usize },
    #[error("character table invalid: {0}")]
    CharacterTable(String),
    #[error("group table invalid: {0}")]
    GroupTable(String),
    #[error("no OMZD of order {0} exists")]
    Nonexistent(usize),
    #[error("no OMZD of order {0} is available (not constructible, no data supplied)")]
    Unavailable(usize),
    #[error("OMZD axiom fails: {0}")]
    NotOmzd(String),
    #[error("zeta({d},{j},{t}): direct sum {direct} disagrees with closed form {closed}")]
    LemmaViolation { d: u32, j: u32, t: u32, direct: i64, closed: i64 },
    #[error("code is the zero code")]
    EmptyCode,
    #[error("{0} exceeds the dimension cap for exhaustive enumeration")]
    Uncomputed(usize),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("invalid complex: {0}")]
    Complex(String),
}

pub type Result<T> = core::result::Result<T, Error>;

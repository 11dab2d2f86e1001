//! File formats, the bundled data, threaded search, Table 1 and the
//! command-line front end for `spectra-core`.

pub mod bundle;
pub mod families;
pub mod formats;
pub mod graph6;
pub mod report;
pub mod search;
pub mod table1;

pub use spectra_core as core;

/// Version of the JSON output schema, emitted as `spec_version`.
pub const SPEC_VERSION: &str = "1.0";

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] spectra_core::Error),
    #[error(transparent)]
    Graph6(#[from] graph6::Graph6Error),
    #[error("format error: {0}")]
    Format(String),
    #[error("bundle: {0}")]
    Bundle(String),
    #[error("{0}")]
    Io(String),
    #[error("usage: {0}")]
    Usage(String),
}

impl Error {
    /// Failures of a mathematical check, as opposed to bad input.
    pub fn is_verification(&self) -> bool {
        matches!(
            self,
            Error::Core(
                spectra_core::Error::Verification(_)
                    | spectra_core::Error::LemmaViolation { .. }
                    | spectra_core::Error::Axiom { .. }
                    | spectra_core::Error::NotOmzd(_)
            )
        )
    }
}

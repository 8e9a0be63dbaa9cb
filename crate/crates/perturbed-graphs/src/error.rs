use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied parameter is out of range or inconsistent.
    #[error("invalid parameter: {0}")]
    Parameter(String),
    /// An exact solver refused an instance larger than its guard size.
    /// Guards are hard errors: oracles never silently degrade to heuristics.
    #[error("resource guard exceeded: {0}")]
    ResourceGuard(String),
    /// The input cannot carry the requested structure (divisibility etc.).
    #[error("structural constraint violated: {0}")]
    Structural(String),
    /// A constructive solver could not complete a proof step; names the
    /// assumption that must have been violated.
    #[error("construction failed: {0}")]
    Construction(#[from] ConstructionFailure),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Why a constructive step of an expansion-based solver failed.
///
/// These always indicate that a hypothesis of the construction (degree bound
/// or set-to-set arc condition) does not hold on the instance it was run on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionFailure {
    #[error("in/out degree {found} at vertex {vertex} is below the required {required}")]
    DegreeTooSmall {
        vertex: usize,
        found: usize,
        required: usize,
    },
    #[error("could not build the set {set}")]
    SetUnavailable { set: &'static str },
    #[error("no arc from {from} to {to}")]
    ArcAbsent {
        from: &'static str,
        to: &'static str,
    },
    #[error("no arc leaves the cycle towards the remaining vertices")]
    NoExitArc,
    #[error("cycle construction for length {length} failed: {reason}")]
    Length { length: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub fn guard(msg: impl Into<String>) -> Self {
        Error::ResourceGuard(msg.into())
    }

    pub fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

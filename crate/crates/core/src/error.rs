use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("element {0} is not a member of the little group")]
    NotInLittleGroup(String),

    #[error("group is not closed under composition: {0}")]
    NotClosed(String),

    #[error("no isomorphism found onto {0}")]
    NoIsomorphism(String),

    #[error("no character table available at {0}")]
    NoCharacterTable(String),

    #[error("corepresentation construction failed: {0}")]
    Corep(String),

    #[error("reciprocal basis is not closed under {0}")]
    BasisNotClosed(String),

    #[error("eigensolver failed: {0}")]
    Solver(String),

    #[error("residual {residual:.3e} exceeds tolerance at k = ({kx}, {ky})")]
    Residual { residual: f64, kx: f64, ky: f64 },

    #[error("PT closure violated: {0}")]
    PtClosure(String),

    #[error("non-integer multiplicity {value} for {irrep}")]
    NonIntegerMultiplicity { irrep: String, value: f64 },

    #[error("no sign change of Im(omega) on the segment: {0}")]
    NoSignChange(String),

    #[error("quartet check failed: {0}")]
    Quartet(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Json(_) | Error::NoCharacterTable(_) => 2,
            Error::Io(_) => 2,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

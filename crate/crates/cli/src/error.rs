use coterie::arrangement::ArrangementError;
use coterie::coterie::CoterieError;
use coterie::exactla::ExactError;
use coterie::faces::FaceError;
use coterie::rootsys::RootSystemError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invariant violation: {0}")]
    Invariant(String),
    #[error("resource cap: {0}")]
    Resource(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Invariant(_) => 3,
            CliError::Resource(_) => 4,
        }
    }
}

impl From<ExactError> for CliError {
    fn from(e: ExactError) -> Self {
        match e {
            ExactError::ResourceCap { .. } => CliError::Resource(e.to_string()),
            ExactError::Inconsistent => CliError::Invariant(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<RootSystemError> for CliError {
    fn from(e: RootSystemError) -> Self {
        match e {
            RootSystemError::GroupTooLarge(_) => CliError::Resource(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<ArrangementError> for CliError {
    fn from(e: ArrangementError) -> Self {
        match e {
            ArrangementError::RootSystem(inner) => inner.into(),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<CoterieError> for CliError {
    fn from(e: CoterieError) -> Self {
        match e {
            CoterieError::Exact(inner) => inner.into(),
            CoterieError::RootSystem(inner) => inner.into(),
            CoterieError::Arrangement(inner) => inner.into(),
            CoterieError::RankBound { .. } => CliError::Resource(e.to_string()),
            CoterieError::Precondition(_) | CoterieError::Degenerate(_) => CliError::Usage(e.to_string()),
        }
    }
}

impl From<FaceError> for CliError {
    fn from(e: FaceError) -> Self {
        match e {
            FaceError::Exact(inner) => inner.into(),
            FaceError::RankBound { .. } => CliError::Resource(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

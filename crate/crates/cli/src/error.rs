use crcore::CrError;
use fibration::FibrationError;
use matrixlie::MatrixLieError;
use realforms::RealFormError;
use regularize::RegularizeError;
use rootsys::RootError;

/// Exit status 1 for bad input, 2 for a failed mathematical check.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("schema error: {}", .0.join("; "))]
    Schema(Vec<String>),
    #[error("check failed: {0}")]
    Check(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Schema(_) => 1,
            CliError::Check(_) => 2,
        }
    }
}

impl From<RootError> for CliError {
    fn from(e: RootError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<MatrixLieError> for CliError {
    fn from(e: MatrixLieError) -> Self {
        match e {
            MatrixLieError::Lin(_)
            | MatrixLieError::NotInAmbient(_)
            | MatrixLieError::NotClosed(_)
            | MatrixLieError::SigmaNotPreserved => CliError::Usage(e.to_string()),
            _ => CliError::Check(e.to_string()),
        }
    }
}

impl From<CrError> for CliError {
    fn from(e: CrError) -> Self {
        match e {
            CrError::Root(r) => r.into(),
            CrError::Matrix(m) => m.into(),
            CrError::NotSubalgebra(_) => CliError::Usage(e.to_string()),
            CrError::Verification(_) => CliError::Check(e.to_string()),
        }
    }
}

impl From<RegularizeError> for CliError {
    fn from(e: RegularizeError) -> Self {
        match e {
            RegularizeError::Root(r) => r.into(),
            RegularizeError::Step { source, .. } => source.into(),
            RegularizeError::NotSubalgebra => CliError::Usage(e.to_string()),
            _ => CliError::Check(e.to_string()),
        }
    }
}

impl From<FibrationError> for CliError {
    fn from(e: FibrationError) -> Self {
        match e {
            FibrationError::Cr(c) => c.into(),
            FibrationError::Root(r) => r.into(),
            FibrationError::Matrix(m) => m.into(),
            FibrationError::AmbientMismatch => CliError::Usage(e.to_string()),
            _ => CliError::Check(e.to_string()),
        }
    }
}

impl From<RealFormError> for CliError {
    fn from(e: RealFormError) -> Self {
        match e {
            RealFormError::Root(r) => r.into(),
            RealFormError::Matrix(m) => m.into(),
            RealFormError::Cr(c) => c.into(),
            RealFormError::Internal(_) => CliError::Check(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

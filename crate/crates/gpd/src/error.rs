use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Format(String),
    #[error(transparent)]
    Core(#[from] gpd_core::Error),
}

impl Error {
    /// `1` for mathematical failures, `2` for everything operational.
    pub fn exit_code(&self) -> u8 {
        use gpd_core::Error as E;
        match self {
            Error::Core(
                E::AxiomViolation { .. }
                | E::ActionViolation { .. }
                | E::LawViolation { .. }
                | E::NotASubgroupoid { .. }
                | E::NotAnIsomorphism
                | E::Membership { .. }
                | E::PreconditionFailed { .. },
            ) => 1,
            _ => 2,
        }
    }
}

pub(crate) fn read(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub(crate) fn write(path: &std::path::Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{context}{source}")]
    Core { context: String, source: ratell_core::Error },
    #[error("writing output: {0}")]
    Output(#[from] std::io::Error),
    #[error("serializing output: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        crate::EXIT_USAGE
    }

    pub fn core(context: impl Into<String>) -> impl FnOnce(ratell_core::Error) -> CliError {
        let context = context.into();
        move |source| CliError::Core { context, source }
    }
}

impl From<ratell_core::Error> for CliError {
    fn from(source: ratell_core::Error) -> Self {
        CliError::Core { context: String::new(), source }
    }
}

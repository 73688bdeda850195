use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid polygon size {0}: need n >= 4")]
    InvalidSize(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("forgetting {forgotten} of {n} marked points leaves fewer than 4")]
    TargetTooSmall { n: usize, forgotten: usize },

    #[error("degenerate point configuration: {0}")]
    DegenerateConfig(String),

    #[error("argument {0} is outside [0, 1]")]
    Domain(f64),

    #[error("n = {n} does not belong to the {expected} certificate case")]
    WrongCase { n: usize, expected: &'static str },
}

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("format error at line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("query range {start}..={end} out of bounds for length {len}")]
    Range { start: usize, end: usize, len: usize },
    #[error("fragment {start}..={end} is not periodic")]
    NotPeriodic { start: usize, end: usize },
    #[error("grid of size {rows}x{cols} exceeds the oracle cap of {cap}")]
    OracleCap { rows: usize, cols: usize, cap: usize },
    #[error("cannot start worker threads: {0}")]
    Threads(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

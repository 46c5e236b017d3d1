use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("enumeration too large: group order {order} exceeds cap {cap}")]
    EnumerationTooLarge { order: u128, cap: u128 },
    #[error("materialization cap exceeded: {count} simples exceeds cap {cap}")]
    CapExceeded { count: u128, cap: u128 },
    #[error("invalid table: {0}")]
    Table(String),
    #[error("atoms {a} and {b} lie in different components of the Coxeter graph")]
    DifferentComponent { a: String, b: String },
    #[error("not an A-chain: {0}")]
    NotAChain(String),
    #[error("power iteration did not converge after {iterations} iterations (last estimate {last})")]
    Numeric { iterations: usize, last: f64 },
    #[error("empty language at length {k}")]
    EmptyLanguage { k: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("defect: {0}")]
    Defect(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

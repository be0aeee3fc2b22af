use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("relation `{name}` expects {expected} argument(s), got {got}")]
    Arity {
        name: String,
        expected: usize,
        got: usize,
    },

    #[error("free variable v{0} in base sentence")]
    FreeVariable(u64),

    #[error("element numeral {element} is outside the domain of size {domain_size}")]
    ElementOutOfRange { element: u64, domain_size: u64 },

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("closure exceeds the cap of {0} sentences")]
    ClosureCap(usize),

    #[error("iteration did not stabilize within {0} steps")]
    IterationBudget(usize),

    #[error("sentence refers to sentences outside the universe: {}", .0.join(", "))]
    MissingReferents(Vec<String>),

    #[error("input sets do not form a chain under inclusion")]
    NotAChain,

    #[error("code {0} does not decode to a sentence of the language")]
    NotASentence(String),

    #[error("{0}")]
    Regress(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

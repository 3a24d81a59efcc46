use thiserror::Error;

#[derive(Debug, Error)]
pub enum AugError {
    #[error("vertex {0} out of range 1..={1}")]
    InvalidVertex(usize, usize),

    #[error("input graph is not a tree")]
    NotATree,

    #[error("input tree is not a path")]
    NotAPath,

    #[error("input tree is a path; use the path augmenter")]
    PathInput,

    #[error("invalid target connectivity r={r} for n={n}: need 2 <= r < n")]
    InvalidTarget { r: usize, n: usize },

    #[error("r=2 augmentation of non-path trees is unsupported (leaf chaining over-spends the lower bound)")]
    UnsupportedTarget,

    #[error("complete graph has no vertex separator")]
    NoSeparator,

    #[error("candidate augmentation edge {{{0},{1}}} is invalid: {2}")]
    InvalidCandidate(usize, usize, &'static str),

    #[error("instance exceeds oracle cap: {0}")]
    CapExceeded(String),

    #[error("oracle budget exceeded after {subsets_tried} subsets (best known size so far: {best:?})")]
    BudgetExceeded {
        subsets_tried: u64,
        best: Option<usize>,
    },

    #[error("no legal augmentation under boundary case pattern; round state:\n{state}")]
    PatternExhausted { state: String },

    #[error("invalid vertex count {0}: need n >= 2")]
    InvalidSize(usize),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("block tree inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, AugError>;

use thiserror::Error;

/// Errors produced by ring construction, relation handling and graph searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring spec: {0}")]
    InvalidSpec(String),

    #[error("ring axiom `{law}` fails at {witness:?}")]
    AxiomViolation { law: String, witness: Vec<usize> },

    #[error("{what} budget exceeded (cap {cap})")]
    BudgetExceeded { what: &'static str, cap: usize },

    #[error("operands live in different rings")]
    MismatchedRings,

    #[error("operands live in different graphs")]
    MismatchedGraphs,

    #[error("not an ideal: {0}")]
    NotIdeal(String),

    #[error("set is not multiplicatively closed: {0}")]
    NotMultiplicativelyClosed(String),

    #[error("CRT precondition fails: {0}")]
    CrtPrecondition(&'static str),

    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    #[error("invalid relation kind: {0}")]
    InvalidRelation(String),

    /// `a R a'`, `b R b'`, `ab = 0` but `a'b' != 0`, recorded as `[a, a', b, b']`.
    #[error("not a zero-divisor relation, witness (a, a', b, b') = {0:?}")]
    NotZeroDivisorRelation([usize; 4]),

    /// `a R a'` in the source, images not related, recorded as `[a, a', f(a), f(a')]`.
    #[error("relation pair is not functorial, witness (a, a', f(a), f(a')) = {0:?}")]
    NotFunctorial([usize; 4]),

    #[error("not a ring homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("unknown vertex {0}")]
    UnknownVertex(usize),

    #[error("invalid graph map: {0}")]
    InvalidMap(String),

    #[error("ring is not local")]
    NotLocal,

    #[error("terminal factor supplied")]
    TerminalFactor,

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("io error on {path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    /// True for budget exhaustion, which callers map to a distinct exit status.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

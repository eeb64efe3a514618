use thiserror::Error;

/// A group-axiom violation found while validating a Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `(a·b)·c != a·(b·c)`.
    Associativity { a: usize, b: usize, c: usize },
    /// Index 0 does not act as a two-sided identity on `a`.
    Identity { a: usize },
    /// No `b` with `a·b = 0`.
    Inverse { a: usize },
}

impl std::fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AxiomViolation::Associativity { a, b, c } => {
                write!(f, "associativity fails for ({a}, {b}, {c})")
            }
            AxiomViolation::Identity { a } => write!(f, "0 is not an identity for {a}"),
            AxiomViolation::Inverse { a } => write!(f, "{a} has no inverse"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("not a group: {0}")]
    NotAGroup(AxiomViolation),

    #[error("Cayley table of order {order} exceeds the cap of {cap}")]
    TableTooLarge { order: usize, cap: usize },

    #[error("group '{0}' is abelian; its commuting conjugacy class graph is empty")]
    AbelianGroup(String),

    #[error("vertices must be distinct (got {0} twice)")]
    SameVertex(usize),

    #[error("graph is not a disjoint union of complete graphs: {u} and {v} share a component but are not adjacent")]
    NotCompleteUnion { u: usize, v: usize },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("derived parameter {name} = {value} is not a positive integer")]
    NonIntegralParameter { name: &'static str, value: String },

    #[error("theorem {0} needs a case label")]
    MissingCase(String),

    #[error("k = {k} must lie in [1, {p}]")]
    KOutOfRange { k: u64, p: u64 },

    #[error("unknown theorem '{0}'")]
    UnknownTheorem(String),

    #[error("unknown family '{0}'")]
    UnknownFamily(String),

    #[error("hypothesis mismatch: {0}")]
    HypothesisMismatch(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

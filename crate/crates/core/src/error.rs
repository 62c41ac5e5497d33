use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("simplicial identity violated: {0}")]
    SimplicialIdentity(String),

    #[error("not a simplicial map: {0}")]
    NotSimplicial(String),

    #[error("bound mismatch: {0} vs {1}")]
    BoundMismatch(usize, usize),

    #[error("level {level} is beyond the truncation bound {bound}")]
    OutOfBound { level: usize, bound: usize },

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("map is not a monomorphism")]
    NotMonomorphism,

    #[error("Hurewicz gate failed at level {level}: nondegenerate {dim}-cells below degree {degree}")]
    HurewiczGate {
        level: usize,
        dim: usize,
        degree: usize,
    },

    #[error("search budget of {0} candidates exceeded")]
    BudgetExceeded(u64),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

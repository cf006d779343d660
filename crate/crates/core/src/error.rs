use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    InvalidEdge(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    InvalidVertex { vertex: usize, order: usize },
    #[error("operation requires a non-empty graph")]
    EmptyGraph,
    #[error("eigensolver did not converge after {iterations} iterations (estimate {estimate}, residual {residual:e})")]
    ConvergenceFailure {
        estimate: f64,
        residual: f64,
        iterations: usize,
    },
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("bipartite graph is not balanced (|X| = {x_size}, |Y| = {y_size})")]
    NotBalanced { x_size: usize, y_size: usize },
    #[error("order {order} exceeds the configured cap {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamilyParams(String),
    #[error("family data unavailable: {0}")]
    UnavailableFamily(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("oracle disagrees with verdict: {0}")]
    OracleMismatch(String),
}

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("Bessel order {0} outside [0, 2)")]
    InvalidOrder(f64),

    #[error("overflow while evaluating {0}")]
    Overflow(String),

    #[error("argument outside the domain: {0}")]
    Domain(String),

    #[error(
        "order {nu} is within 1e-6 of an integer; the reflection formula loses all digits there"
    )]
    PrecisionLoss { nu: f64 },

    #[error("gamma function pole at {0}")]
    GammaPole(f64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("quasi-periodicity parameter {0} outside [0, 1)")]
    InvalidTheta(f64),

    #[error("functions from different sectors (theta = {left} vs {right})")]
    SectorMismatch { left: f64, right: f64 },

    #[error("invalid physical configuration: {0}")]
    InvalidConfig(String),

    #[error("channel (theta = {theta}, m = {m}) has deficiency index (0,0)")]
    NotDeficient { theta: f64, m: i64 },

    #[error("extension parameters do not match the sector: {0}")]
    VariantMismatch(String),

    #[error("regular part violates chi(0) = chi'(0) = 0: {0}")]
    BoundaryCondition(String),

    #[error("time reversal at theta = 1/2 requires rho = eta (got rho = {rho}, eta = {eta})")]
    TimeReversalConstraint { rho: f64, eta: f64 },

    #[error("time reversal is not defined in the sector theta = {0}")]
    InadmissibleSector(f64),

    #[error("no finite-energy bound state for eta = -pi")]
    NoFiniteBoundState,

    #[error("bound-state energy is not representable: {0}")]
    EnergyOverflow(String),

    #[error("no convergence: {0}")]
    NonConvergence(String),

    #[error("root lies outside the search bracket [{lo:e}, {hi:e}]")]
    BracketExhausted { lo: f64, hi: f64 },

    #[error("parse error: {0}")]
    Parse(String),
}

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vectors are linearly dependent")]
    SingularInput,
    #[error("rays of top cone {cone} are linearly dependent")]
    DependentRays { cone: usize },
    #[error("multi-fan has no top cones")]
    EmptyFan,
    #[error("rank mismatch: {0}")]
    RankMismatch(String),
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("vector is not generic for the multi-fan")]
    NonGenericVector,
    #[error("plane is not generic: {0}")]
    NonGenericPlane(String),
    #[error("{0:?} is not a face of the multi-fan")]
    FaceNotInFan(Vec<usize>),
    #[error("denominator of {phase} does not divide conductor {conductor}")]
    ConductorMismatch { phase: String, conductor: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("value is not rational: {0}")]
    NotRational(String),
    #[error("push-forward keeps a nonzero coefficient at t^{power}")]
    PoleResidueNonzero { power: i64 },
    #[error("todd push-forward has a nonzero coefficient at t^{power}")]
    RigidityViolation { power: i64 },
    #[error("point lies on the wall of ray {ray}")]
    PointOnWall { ray: usize },
    #[error("ray is not in the interior of the cone")]
    RayNotInterior,
    #[error("support class is not T-Cartier")]
    NotTCartier,
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
}

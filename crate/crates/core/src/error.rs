use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("not a quadric curve: (f,f) has nonzero coefficient {coefficient} at z^{exponent}")]
    NotQuadric { exponent: u32, coefficient: String },
    #[error("not a quadric point: (x,x) = {0}")]
    NotQuadricPoint(String),
    #[error("zero lift")]
    ZeroLift,
    #[error("vector is not tangent to the quadric at this point: {0}")]
    NotTangent(String),
    #[error("not linearly full: derivative of order {order} is dependent on lower ones")]
    NotLinearlyFull { order: usize },
    #[error("unexpected interior singularity in osculating curve {p}")]
    InteriorSingularity { p: usize },
    #[error("G2 basis precondition failed: {0}")]
    G2Precondition(String),
    #[error("quadrature did not converge: estimate {estimate}, error {error:e}")]
    Quadrature { estimate: f64, error: f64 },
    #[error("area convention audit failed: π(δ₂+δ₃) = {direct}π but 4π(6+2T₁+T₂) = {formula}π")]
    AreaMismatch { direct: i64, formula: i64 },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

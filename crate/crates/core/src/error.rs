use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("Im(tau) = {0} is not above the domain guard {guard:e}", guard = crate::torus::IM_TAU_GUARD)]
    OutsideUpperHalfPlane(f64),
    #[error("foliation weights (a, b) must not both be zero")]
    ZeroFoliation,
    #[error("non-finite input: {0}")]
    NonFinite(&'static str),
    #[error("enumeration bound must be at least 1, got {0}")]
    InvalidBound(i64),
    #[error("finite-difference step {step} is outside the admissible range (0, {max})")]
    StepOutOfRange { step: f64, max: f64 },
    #[error("tangent vector is based at a different point")]
    BaseMismatch,

    #[error("polygon {0} has fewer than three vertices")]
    DegeneratePolygon(usize),
    #[error("polygon {0} is not simple")]
    NonSimplePolygon(usize),
    #[error("polygon {0} is not counter-clockwise")]
    ClockwisePolygon(usize),
    #[error("pairing {index}: {reason}")]
    BadPairing { index: usize, reason: String },
    #[error("edge {edge} of polygon {polygon} is not paired")]
    UnpairedEdge { polygon: usize, edge: usize },
    #[error("glued complex is disconnected")]
    Disconnected,
    #[error("cone angle {angle} at vertex orbit {orbit} is not a positive multiple of pi")]
    BadConeAngle { orbit: usize, angle: f64 },
    #[error("intersection form on odd homology is degenerate")]
    DegenerateIntersection,
    #[error("chain is not closed")]
    OpenChain,
    #[error("basis is not symplectic")]
    NotSymplectic,
    #[error("period vector does not match the basis ({periods} periods for {cycles} cycles)")]
    PeriodMismatch { periods: usize, cycles: usize },
    #[error("|lambda| = {0} must be < 1")]
    OutsideUnitDisk(f64),
    #[error("stretch must be positive, got {0}")]
    NonPositiveStretch(f64),

    #[error("disk: {0}")]
    InvalidDisk(String),
    #[error("point lambda = {0} lies outside the disk domain")]
    OutsideDisk(String),
    #[error("field {field} cannot be evaluated on a {disk} disk")]
    IncompatibleField { field: &'static str, disk: &'static str },
    #[error("weights must be positive with a positive sum")]
    BadWeights,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

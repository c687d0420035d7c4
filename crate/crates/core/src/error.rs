use thiserror::Error;

use crate::flat::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("singularity order {0} is below -1")]
    EntryBelowMinusOne(i64),
    #[error("sum of orders {0} is not divisible by 4")]
    SumNotDivisibleBy4(i64),
    #[error("sum of orders {0} is below -4")]
    SumBelowMinusFour(i64),
    #[error("cannot parse pattern: {0}")]
    Syntax(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrataError {
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error("parity violation: {0}")]
    ParityViolation(String),
    #[error("part {0} is not an allowed singularity order")]
    ZeroPartNotAllowed(i64),
    #[error("index {index} out of range for pattern of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("genus {0} is too small (need at least 3)")]
    GenusTooSmall(u32),
    #[error("number of odd singularities is odd")]
    OddCountNotEven,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoveringError {
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error("covering degree {0} is below 2")]
    DegreeTooSmall(u32),
    #[error("partition {indices:?} over a point of order {order} does not sum to degree {degree}")]
    PartitionSum {
        order: i64,
        indices: Vec<u32>,
        degree: u32,
    },
    #[error("ramification index 0 over a point of order {0}")]
    ZeroIndex(i64),
    #[error("no ramification over a marked point")]
    UnramifiedMarkedPoint,
    #[error("base genus {stated} disagrees with the fiber orders (genus {derived})")]
    BaseGenusMismatch { stated: u32, derived: u32 },
    #[error("fibers {fibers:?} do not align with base pattern {pattern:?}")]
    FiberMismatch { fibers: Vec<i64>, pattern: Vec<i64> },
    #[error("pulled-back orders sum to {sum} but the covered genus is {genus}")]
    GaussBonnetMismatch { sum: i64, genus: u32 },
    #[error("Riemann-Hurwitz gives odd Euler characteristic term {0}")]
    NonIntegralGenus(i64),
    #[error("Riemann-Hurwitz gives 2g-2 = {0}, a negative genus")]
    NegativeGenus(i64),
    #[error("dimension gap: direct {direct}, closed form {closed}")]
    InternalFormulaMismatch { direct: i64, closed: i64 },
    #[error("parameters g={g}, k={k} are outside the range of {family}")]
    ParameterOutOfRange { family: String, g: i64, k: i64 },
    #[error("search bounds too small: {0}")]
    BoundsTooSmall(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SurfaceError {
    #[error("invalid surface: {0:?}")]
    Invalid(Vec<Violation>),
    #[error("surface is disconnected ({0} components)")]
    Disconnected(usize),
    #[error("corner {corner} of face {face} has a degenerate angle")]
    DegenerateCorner { face: usize, corner: usize },
    #[error("vertex angle {angle} is not within tolerance of a multiple of pi")]
    AngleNotMultipleOfPi { angle: f64 },
    #[error("Euler characteristic {0} is odd or exceeds 2")]
    BadEulerCharacteristic(i64),
    #[error("unknown edge id {0:?}")]
    UnknownEdge(String),
    #[error("crossing sequence is not a closed walk: {0}")]
    NotAClosedWalk(String),
    #[error("the holonomy is trivial, the canonical double cover is disconnected")]
    AlreadySquare,
    #[error("cover spec has {got} entries, surface has {expected} pairings")]
    SpecMismatch { expected: usize, got: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix has negative determinant")]
    OrientationReversing,
    #[error("unknown example surface {0:?}")]
    UnknownExample(String),
    #[error("cannot read surface: {0}")]
    Format(String),
    #[error(transparent)]
    Covering(#[from] CoveringError),
}

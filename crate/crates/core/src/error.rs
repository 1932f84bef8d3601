use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// Variants carry vertex or list indices (0-based) so that diagnostics point
/// at the offending entry.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // -- matrix validation
    #[error("matrix is not square")]
    NonSquare,
    #[error("matrix is empty")]
    Empty,
    #[error("diagonal entry {0} is not 2")]
    DiagonalNotTwo(usize),
    #[error("off-diagonal entry ({0},{1}) is positive")]
    PositiveOffDiagonal(usize, usize),
    #[error("entry ({0},{1}) is zero but its transpose is not")]
    AsymmetricZero(usize, usize),
    #[error("matrix is not symmetrizable")]
    NotSymmetrizable,
    #[error("vertex index {0} out of range for rank {1}")]
    IndexOutOfRange(usize, usize),
    #[error("rank {rank} exceeds the configured cap {cap}")]
    RankCapExceeded { rank: usize, cap: usize },
    #[error("expected a {expected} diagram")]
    WrongClass { expected: &'static str },

    // -- names
    #[error("unknown diagram name `{0}`")]
    UnknownName(String),
    #[error("rank out of range for `{0}`")]
    RankOutOfRange(String),

    // -- roots
    #[error("coroot of an isotropic element is undefined")]
    IsotropicCoroot,
    #[error("pairing 2(b,g)/(b,b) is not an integer")]
    NonIntegralPairing,
    #[error("vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("{0:?} is not a root")]
    NotARoot(Vec<i64>),
    #[error("{0:?} is not a real root")]
    NotRealRootVector(Vec<i64>),
    #[error("search budget of {0} exceeded")]
    BudgetExceeded(usize),
    #[error("integer overflow in root arithmetic")]
    Overflow,

    // -- pi-systems
    #[error("element {0} is not a real root")]
    NotRealRoot(usize),
    #[error("elements {0} and {1} coincide")]
    DuplicateRoot(usize, usize),
    #[error("difference of elements {0} and {1} is a root")]
    DifferenceIsRoot(usize, usize),
    #[error("pi-system is not linearly independent")]
    NotLinearlyIndependent,
    #[error("type matrix is decomposable")]
    DecomposableType,
    #[error("type matrix is not of affine type")]
    NotAffineType,
    #[error("element {0} is not supported in the given vertex set")]
    NotSupportedInY(usize),
    #[error("ambient is not simply-laced")]
    NotSimplyLaced,
    #[error("(delta_Y, beta) = {0}, expected -1")]
    WrongPairing(i64),
    #[error("no real root satisfies the orbit conditions")]
    EmptyOrbitClass,
    #[error("precondition failed: {0}")]
    PreconditionMismatch(String),
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("empty pi-system")]
    EmptyPiSystem,

    // -- overextensions
    #[error("diagram is not of Ext type")]
    NotExt,
    #[error("diagram is decomposable")]
    Decomposable,
    #[error("vertices {0} and {1} both qualify as overextended vertex")]
    AmbiguousExt(usize, usize),
    #[error("element {0} is not supported in the finite part")]
    NotInFinitePart(usize),

    // -- counting
    #[error("K is not of Ext type")]
    NotExtType,
    #[error("finite-mult table conflict for ({k}, {z}): table says {table}, oracle says {live}")]
    TableConflict { k: String, z: String, table: u64, live: u64 },
    #[error("table error: {0}")]
    Table(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

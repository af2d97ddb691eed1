use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero form")]
    ZeroForm,
    #[error("expected a form of degree {expected}, got degree {found}")]
    WrongDegree { expected: usize, found: usize },
    #[error("unstable pair")]
    UnstablePair,
    #[error("strictly semistable, no stratum")]
    StrictlySemistableNoStratum,
    #[error("non-minimal Weierstrass model (order {0} >= 6)")]
    NonMinimal(usize),
    #[error("unknown lattice `{0}`")]
    UnknownLattice(String),
    #[error("odd lattice: discriminant quadratic form is not defined mod 2Z")]
    OddLattice,
    #[error("degenerate lattice (radical rank {radical_rank})")]
    DegenerateLattice { radical_rank: usize },
    #[error("isometry undecided: {0}")]
    Undecided(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("roots are not pairwise orthogonal: {0}")]
    NotOrthogonal(String),
    #[error("group closure exceeded {0} elements")]
    ClosureBound(usize),
    #[error("lines are not skew")]
    NotSkew,
    #[error("line is not contained in the surface: {0}")]
    LineNotOnSurface(String),
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("points not in general position: {0}")]
    DegeneratePosition(String),
    #[error("nullspace has dimension {found}, expected {expected}")]
    NullspaceDimension { expected: usize, found: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

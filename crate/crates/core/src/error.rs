use thiserror::Error;

use crate::gigsaw::Direction;
use crate::gset::GSetViolation;
use crate::lattice::ExponentTriple;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid action 1/{r}(1, {a}, {r}-{a}): {reason}")]
    InvalidAction { r: i64, a: i64, reason: &'static str },

    /// a = 1 or a = r - 1; the quotient is not covered by the structured pipeline.
    #[error("action 1/{r}(1, {a}, {r}-{a}) has a weight equal to 1; only exploratory enumeration is supported")]
    DegenerateAction { r: i64, a: i64 },

    #[error("{a} is not invertible modulo {r}")]
    NotCoprime { a: i64, r: i64 },

    #[error("zero vector has no primitive generator")]
    ZeroVector,

    #[error("vector 1/{r}{w:?} is not a point of the lattice N")]
    NotInLattice { w: [i64; 3], r: i64 },

    #[error("degenerate cone: {0}")]
    DegenerateCone(&'static str),

    #[error(transparent)]
    NotAGSet(#[from] GSetViolation),

    #[error("spanner {0} is divisible by yz")]
    MixedYz(ExponentTriple),

    #[error("brute-force enumeration bound exceeded: r = {r} > {bound}")]
    BoundExceeded { r: i64, bound: i64 },

    #[error("s-value {0} is not generated by the dual generators")]
    DominationFailure(ExponentTriple),

    #[error("expected a G-set with two valleys, found {0}")]
    NotQuadric(usize),

    #[error("direction {direction:?} is illegal for a G-set with {valleys} valley(s)")]
    IllegalDirection { direction: Direction, valleys: usize },

    #[error("direction {0:?} crosses a wall on the boundary of the octant")]
    DegenerateWall(Direction),

    #[error("rho chain broken: {0}")]
    ChainBroken(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

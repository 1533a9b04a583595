use thiserror::Error;

use crate::pointset::PointSet;

/// Why a family of sets failed to be a topology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    MissingEmpty,
    MissingFull,
    OutOfRange(PointSet),
    UnionNotOpen(PointSet, PointSet),
    IntersectionNotOpen(PointSet, PointSet),
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::MissingEmpty => f.write_str("the empty set is not open"),
            Violation::MissingFull => f.write_str("the whole space is not open"),
            Violation::OutOfRange(s) => write!(f, "{s} mentions a point outside the space"),
            Violation::UnionNotOpen(a, b) => write!(f, "union of {a} and {b} is not open"),
            Violation::IntersectionNotOpen(a, b) => {
                write!(f, "intersection of {a} and {b} is not open")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("not a topology: {0}")]
    NotATopology(Violation),
    #[error("{n} points requested, at most {max} are supported")]
    TooManyPoints { n: usize, max: usize },
    #[error("point set {set} is not a subset of the {n} points")]
    OutOfRange { set: PointSet, n: usize },
    #[error("point {point} is not one of the {n} points")]
    PointOutOfRange { point: usize, n: usize },
    #[error("not a preorder: {0}")]
    NotAPreorder(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("map is not continuous: preimage of {open} is {preimage}, which is not open")]
    NotContinuous { open: PointSet, preimage: PointSet },
    #[error("map has length {len}, expected {expected}")]
    MapShape { len: usize, expected: usize },
    #[error("census over {n} points refused: bound is {bound}")]
    CensusTooLarge { n: usize, bound: usize },
    #[error("space has {n} points, this check is limited to {bound}")]
    SpaceTooLarge { n: usize, bound: usize },
    #[error("a cofinal profile must be nonempty")]
    EmptyProfile,
    #[error("maps do not compose: the first codomain is not the second domain")]
    NotComposable,
    #[error("invalid test class: {0}")]
    InvalidClass(String),
}

pub type Result<T, E = TopologyError> = std::result::Result<T, E>;

//! Finite topological spaces and the machinery around them: continuous maps,
//! exhaustive census enumeration, convergence through cofinal value
//! profiles, separation axioms, coreflections generated by test classes, and
//! a knowledge base of implications between topological properties.
//!
//! ```
//! use topoctl::{FinSpace, PointSet};
//!
//! let s = FinSpace::sierpinski();
//! assert_eq!(s.closure(PointSet::singleton(0)), s.points());
//! assert!(topoctl::axioms::is_t0(&s));
//! assert!(!topoctl::axioms::is_t1(&s));
//! ```

pub mod axioms;
pub mod census;
pub mod cli;
pub mod convergence;
pub mod deduction;
pub mod dsl;
pub mod error;
pub mod generated;
pub mod maps;
pub mod pointset;
pub mod properties;
pub mod space;
pub mod verify;

pub use convergence::CofinalProfile;
pub use error::{Result, TopologyError, Violation};
pub use generated::TestClass;
pub use maps::ContinuousMap;
pub use pointset::PointSet;
pub use space::FinSpace;

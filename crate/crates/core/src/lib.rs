//! Chromatic symmetric functions of simple graphs in exact rational
//! arithmetic, together with cotree machinery for cographs and the
//! threshold / trivially perfect subclasses.

pub mod chromatic;
pub mod cotree;
pub mod experiments;
pub mod graph;
pub mod partition;
pub mod poly;
pub mod symfunc;

/// Exact rational coefficients over arbitrary-precision integers.
pub type Rational = num_rational::BigRational;

pub use chromatic::{ChromaticError, Guards, StablePartition};
pub use cotree::{ConstructExpr, CotreeError, GraphClass};
pub use graph::{ClassFlags, GraphError, SimpleGraph};
pub use partition::Partition;
pub use poly::{FallingPoly, Poly};
pub use symfunc::{Basis, SymFunc, SymFuncError};

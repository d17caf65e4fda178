//! Exact commutator computations on finite algebras: congruence lattices,
//! the term-condition centralizer and commutator, commutator properties,
//! and the standard constructions that witness their failure.

pub mod algebra;
pub mod centrality;
pub mod cli;
pub mod congruence;
pub mod constructions;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod maltsev;
pub mod partition;
pub mod properties;
pub mod subpower;
pub mod term;

pub use algebra::{FiniteAlgebra, OperationTable};
pub use congruence::{cg, cg_set, con_lattice, CongruenceLattice, Pentagon};
pub use error::{Error, Result};
pub use partition::Partition;
pub use subpower::{subpower_closure, TupleSet};
pub use term::Term;

//! Linear systems (partial Steiner systems): construction, exact transversal
//! and 2-packing numbers, isomorphism up to reduction, and exact checks of the
//! known bounds relating them to `(|P| + |L|) / (r + 1)`.

pub mod canon;
pub mod constructions;
pub mod error;
pub mod io;
pub mod solvers;
pub mod system;
pub mod verify;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use error::{Error, Result};
pub use solvers::{SearchBudget, SolveResult};
pub use system::{DegreeProfile, LinearSystem, PointDeletion, PointId, ReducedSystem};

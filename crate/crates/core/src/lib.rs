//! Exact-arithmetic Dirac-cohomology multiplicities for the special
//! unipotent representations of Sp(2n,R) and U(p,q).
//!
//! Two independent routes compute the multiplicity of each candidate
//! K-type in the Dirac cohomology of a model: a brute-force solver that
//! counts solutions of the defining weight equation over the spin
//! decomposition, and closed-form binomial evaluations. [`solver::cross_check`]
//! compares them; a tensor-product oracle recomputes the same numbers a
//! third way at tiny rank. All arithmetic is exact (half-integers are
//! stored doubled), so equalities are genuine integer identities.

pub mod error;
pub mod sp_models;
pub mod spin;
pub mod solver;
pub mod u_models;
pub mod weights;

pub use error::{Error, Result};
pub use solver::{Candidate, ModelSpec, MultiplicityReport, ReportEntry, Witness};
pub use weights::{FamilyKind, Weight, WeylElem};

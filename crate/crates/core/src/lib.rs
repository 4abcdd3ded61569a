//! Exact computations in connected graded Hopf algebras given by structure
//! constants: antipodes, reduced coproducts, and mechanical verification of
//! the nilpotency of `id - S^2` and its generalizations.

pub mod coeff;
mod error;
pub mod format;
pub mod gmod;
pub mod hopf;
pub mod reduced;
pub mod report;
pub mod runner;
pub mod verify;
pub mod zoo;

pub use coeff::{binomial, Coeff, RingElement, RingSpec};
pub use error::{Error, Result};
pub use gmod::{CoproductMap, Element, GradedBasis, GradedMap, GradedModule, Tensor2Element, Tensor2Map};
pub use hopf::HopfPresentation;
pub use report::{CheckEntry, Status, VerificationReport, Witness};

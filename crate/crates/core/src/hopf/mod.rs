//! Graded bialgebras and Hopf algebras presented by structure constants.

mod axioms;
mod presentation;

pub use axioms::{suite_antipode, verify_antipode_axioms, verify_bialgebra, verify_connected};
pub use presentation::{Connectedness, FiltrationView, GeneratorSpec, HopfPresentation, UNIT_LABEL};


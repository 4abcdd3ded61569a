//! The nilpotency theorem for pre-coalgebra instances and its corollaries
//! for connected filtered and graded Hopf algebras.

use rayon::prelude::*;

mod corollaries;
mod instance;
mod theorem;

pub use corollaries::{
    suite_antipode_props, suite_corollary_filtered, suite_graded_hopf, suite_lowered_exponent, suite_sharpness,
    suite_taft_remark,
};
pub use instance::{instance_from_hopf, noncoassociative_instance, PreCoalgebraInstance, SquarePower};
pub use theorem::{binomial_identity_check, check_hypotheses, verify_conclusions};

/// The witness of the first item (in iteration order) for which `check` reports one.
pub(crate) fn first_witness<T: Send>(
    items: impl IntoParallelIterator<Item = usize>,
    check: impl Fn(usize) -> Option<T> + Sync,
) -> Option<T> {
    items.into_par_iter().find_map_first(&check)
}

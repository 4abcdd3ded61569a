//! Built-in example algebras.

mod fqsym;
mod free;
mod shuffle;
mod taft;

pub use fqsym::fqsym;
pub use free::{free_bialgebra, free_example_abc, tensor_algebra};
pub use shuffle::shuffle_algebra;
pub use taft::taft;

use crate::error::{Error, Result};

/// Largest truncation degree accepted for FQSym (degree-`n` rank is `n!`).
pub const FQSYM_MAX_DEGREE: usize = 6;
/// Largest truncation degree accepted for word-basis algebras.
pub const FREE_MAX_DEGREE: usize = 8;

pub(crate) fn guard(what: &str, n: usize, bound: usize) -> Result<()> {
    if n > bound {
        return Err(Error::ResourceGuard(format!("{what} is limited to max degree {bound}, got {n}")));
    }
    Ok(())
}

/// The first `rank` lowercase letters.
pub(crate) fn alphabet(rank: usize) -> Result<Vec<String>> {
    if rank == 0 || rank > 26 {
        return Err(Error::Invalid(format!("alphabet rank must be in 1..=26, got {rank}")));
    }
    Ok((b'a'..).take(rank).map(|c| (c as char).to_string()).collect())
}

//! Graded free modules of finite rank per degree, their tensor squares, and
//! linear maps stored by basis images.

mod basis;
mod element;
pub mod linalg;
mod map;

pub use basis::{GradedBasis, GradedModule};
pub use element::{Element, Tensor2Element, Terms, Terms2};
pub use map::{CoproductMap, GradedMap, Tensor2Map};

pub(crate) use element::{accumulate, add_scaled, difference, format_terms, scaled, sum};
pub(crate) use map::tensor_terms;

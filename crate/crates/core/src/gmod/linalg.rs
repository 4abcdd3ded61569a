//! Exact sparse Gaussian elimination over a field.

use std::collections::BTreeMap;

use crate::coeff::{Coeff, RingSpec};
use crate::error::{Error, Result};

use super::element::{add_scaled, Terms};

#[derive(Clone, Debug)]
pub struct KernelResult {
    /// Kernel vectors as combinations of the input columns (by position).
    pub vectors: Vec<Terms>,
    pub rank: usize,
}

struct Pivot<K> {
    row: BTreeMap<K, Coeff>,
    combo: Terms,
}

/// Kernel of the matrix whose `j`-th column is `columns[j]` (sparse, keyed by row).
///
/// Columns are eliminated left to right, each pivoting on its leftmost
/// nonzero row key. A column that reduces to zero contributes the recorded
/// combination as a kernel vector, so `vectors.len() == columns.len() - rank`.
pub fn kernel<K: Ord + Clone>(ring: &RingSpec, columns: &[BTreeMap<K, Coeff>]) -> Result<KernelResult> {
    if !ring.is_field() {
        return Err(Error::NotAField(ring.to_string()));
    }
    let mut pivots: BTreeMap<K, Pivot<K>> = BTreeMap::new();
    let mut vectors = Vec::new();
    for (j, column) in columns.iter().enumerate() {
        let mut row = column.clone();
        let mut combo = Terms::new();
        combo.insert(j, ring.one());
        loop {
            let Some((lead, c)) = row.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
                vectors.push(combo);
                break;
            };
            match pivots.get(&lead) {
                Some(p) => {
                    let factor = ring.neg(&c);
                    add_scaled(ring, &mut row, &factor, &p.row);
                    add_scaled(ring, &mut combo, &factor, &p.combo);
                }
                None => {
                    let inv = ring.inverse(&c)?;
                    let row = super::element::scaled(ring, &inv, &row);
                    let combo = super::element::scaled(ring, &inv, &combo);
                    pivots.insert(lead, Pivot { row, combo });
                    break;
                }
            }
        }
    }
    Ok(KernelResult { vectors, rank: pivots.len() })
}

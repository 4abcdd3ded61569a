use std::collections::HashMap;

use crate::coeff::RingSpec;
use crate::error::Result;
use crate::gmod::{accumulate, GradedBasis, GradedModule, Terms, Terms2};
use crate::hopf::{HopfPresentation, UNIT_LABEL};

use super::shuffle::shuffles;
use super::{guard, FQSYM_MAX_DEGREE};

/// Permutations of `1..=n` (one-line notation) in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for rest in permutations(n - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
            out.push(p);
        }
    }
    out
}

/// The permutation with the same relative order as `w`.
fn standardize(w: &[usize]) -> Vec<usize> {
    let mut sorted: Vec<usize> = w.to_vec();
    sorted.sort_unstable();
    w.iter().map(|x| sorted.binary_search(x).unwrap() + 1).collect()
}

fn label(p: &[usize]) -> String {
    if p.is_empty() {
        UNIT_LABEL.to_string()
    } else {
        format!("F{}", p.iter().map(|d| d.to_string()).collect::<String>())
    }
}

/// The Malvenuto–Reutenauer Hopf algebra in the `F` basis: shifted-shuffle
/// product and standardized deconcatenation coproduct.
pub fn fqsym(ring: &RingSpec, max_degree: usize) -> Result<HopfPresentation> {
    guard("FQSym", max_degree, FQSYM_MAX_DEGREE)?;
    let by_size: Vec<Vec<Vec<usize>>> = (0..=max_degree).map(permutations).collect();
    let basis = GradedBasis::new(by_size.iter().map(|lvl| lvl.iter().map(|p| label(p)).collect()).collect())?;
    let module = GradedModule::new(basis, ring.clone());
    let all: Vec<Vec<usize>> = by_size.into_iter().flatten().collect();
    let index: HashMap<&[usize], usize> = all.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();

    let mut products = HashMap::new();
    for (i, s) in all.iter().enumerate() {
        for (j, t) in all.iter().enumerate() {
            if s.len() + t.len() > max_degree {
                continue;
            }
            let shifted: Vec<usize> = t.iter().map(|x| x + s.len()).collect();
            let mut terms = Terms::new();
            for w in shuffles(s, &shifted) {
                accumulate(ring, &mut terms, index[w.as_slice()], ring.one());
            }
            products.insert((i, j), terms);
        }
    }
    let coproducts = all
        .iter()
        .map(|p| {
            let mut t = Terms2::new();
            for k in 0..=p.len() {
                let l = index[standardize(&p[..k]).as_slice()];
                let r = index[standardize(&p[k..]).as_slice()];
                accumulate(ring, &mut t, (l, r), ring.one());
            }
            t
        })
        .collect();
    let counit = Terms::from([(0, ring.one())]);
    HopfPresentation::from_tables("fqsym", module, 0, counit, products, coproducts, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::gmod::Element;

    #[test]
    fn ranks_are_factorials() {
        let h = fqsym(&RingSpec::integers(), 5).unwrap();
        let ranks: Vec<usize> = (0..=5).map(|d| h.basis().rank(d)).collect();
        assert_eq!(ranks, [1, 1, 2, 6, 24, 120]);
        assert!(matches!(fqsym(&RingSpec::integers(), 7), Err(Error::ResourceGuard(_))));
    }

    #[test]
    fn small_structure_constants() {
        let h = fqsym(&RingSpec::integers(), 3).unwrap();
        let f1 = h.element("F1").unwrap();
        let sq = Element::from_label_terms(h.module(), &[("F12", 1), ("F21", 1)]).unwrap();
        assert_eq!(h.product(&f1, &f1).unwrap(), sq);
        assert_eq!(h.coproduct(&h.element("F21").unwrap()).unwrap().to_string(), "1⊗F21 + F1⊗F1 + F21⊗1");
        let s = h.antipode().unwrap();
        assert_eq!(s.apply(&h.element("F12").unwrap()).unwrap(), h.element("F21").unwrap());
    }

    #[test]
    fn standardization() {
        assert_eq!(standardize(&[5, 2, 9]), [2, 1, 3]);
        assert_eq!(permutations(3).len(), 6);
    }
}

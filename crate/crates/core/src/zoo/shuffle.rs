use std::collections::HashMap;

use crate::coeff::RingSpec;
use crate::error::Result;
use crate::gmod::{accumulate, GradedBasis, GradedModule, Terms, Terms2};
use crate::hopf::{HopfPresentation, UNIT_LABEL};

use super::{alphabet, guard, FREE_MAX_DEGREE};

/// All words of length `<= n` over `letters`, grouped by length, each group
/// in lexicographic order.
pub(crate) fn words(letters: usize, n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
    for d in 1..=n {
        let level = out[d - 1]
            .iter()
            .flat_map(|w| {
                (0..letters).map(move |l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
        out.push(level);
    }
    out
}

/// Shuffles of `u` and `v` as sequences, with multiplicity.
pub(crate) fn shuffles<T: Clone>(u: &[T], v: &[T]) -> Vec<Vec<T>> {
    if u.is_empty() {
        return vec![v.to_vec()];
    }
    if v.is_empty() {
        return vec![u.to_vec()];
    }
    let mut out = Vec::new();
    for mut w in shuffles(&u[1..], v) {
        w.insert(0, u[0].clone());
        out.push(w);
    }
    for mut w in shuffles(u, &v[1..]) {
        w.insert(0, v[0].clone());
        out.push(w);
    }
    out
}

/// Shuffle algebra on `rank` letters of degree 1: shuffle product and
/// deconcatenation coproduct.
pub fn shuffle_algebra(rank: usize, ring: &RingSpec, max_degree: usize) -> Result<HopfPresentation> {
    guard("the shuffle algebra", max_degree, FREE_MAX_DEGREE)?;
    let letters = alphabet(rank)?;
    let by_len = words(rank, max_degree);
    let label = |w: &[usize]| -> String {
        if w.is_empty() {
            UNIT_LABEL.to_string()
        } else {
            w.iter().map(|&l| letters[l].as_str()).collect()
        }
    };
    let basis = GradedBasis::new(by_len.iter().map(|lvl| lvl.iter().map(|w| label(w)).collect()).collect())?;
    let module = GradedModule::new(basis, ring.clone());
    let all: Vec<Vec<usize>> = by_len.into_iter().flatten().collect();
    let index: HashMap<&[usize], usize> = all.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();

    let mut products = HashMap::new();
    for (i, u) in all.iter().enumerate() {
        for (j, v) in all.iter().enumerate() {
            if u.len() + v.len() > max_degree {
                continue;
            }
            let mut t = Terms::new();
            for w in shuffles(u, v) {
                accumulate(ring, &mut t, index[w.as_slice()], ring.one());
            }
            products.insert((i, j), t);
        }
    }
    let coproducts = all
        .iter()
        .map(|w| {
            let mut t = Terms2::new();
            for k in 0..=w.len() {
                accumulate(ring, &mut t, (index[&w[..k]], index[&w[k..]]), ring.one());
            }
            t
        })
        .collect();
    let counit = Terms::from([(0, ring.one())]);
    HopfPresentation::from_tables(&format!("shuffle{rank}"), module, 0, counit, products, coproducts, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gmod::Element;

    #[test]
    fn shuffle_product() {
        let h = shuffle_algebra(2, &RingSpec::integers(), 3).unwrap();
        let a = h.element("a").unwrap();
        let ab = h.element("ab").unwrap();
        let expected = Element::from_label_terms(h.module(), &[("aab", 2), ("aba", 1)]).unwrap();
        assert_eq!(h.product(&a, &ab).unwrap(), expected);
        assert_eq!(h.coproduct(&ab).unwrap().to_string(), "1⊗ab + a⊗b + ab⊗1");
    }

    #[test]
    fn shuffle_counts() {
        assert_eq!(shuffles(&[1, 2], &[3, 4]).len(), 6);
        assert_eq!(words(2, 3)[3].len(), 8);
    }
}

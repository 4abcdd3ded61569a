use crate::coeff::RingSpec;
use crate::error::{Error, Result};
use crate::hopf::{GeneratorSpec, HopfPresentation, UNIT_LABEL};

use super::{alphabet, guard, FREE_MAX_DEGREE};

/// Free algebra on graded generators with the multiplicative coproduct,
/// subject to the word-algebra degree guard.
pub fn free_bialgebra(name: &str, generators: Vec<GeneratorSpec>, ring: &RingSpec, max_degree: usize) -> Result<HopfPresentation> {
    guard("a free algebra", max_degree, FREE_MAX_DEGREE)?;
    HopfPresentation::free(name, generators, ring, max_degree)
}

/// Free algebra on `a`, `b` (degree 1, primitive) and `c` (degree 2) with
/// `Δ(c) = c⊗1 + a⊗b + 1⊗c`.
pub fn free_example_abc(ring: &RingSpec, max_degree: usize) -> Result<HopfPresentation> {
    if max_degree < 2 {
        return Err(Error::Invalid("the a,b,c example needs max degree at least 2".into()));
    }
    let one = ring.one();
    let c = GeneratorSpec {
        label: "c".into(),
        degree: 2,
        coproduct: vec![
            ("c".into(), UNIT_LABEL.into(), one.clone()),
            ("a".into(), "b".into(), one.clone()),
            (UNIT_LABEL.into(), "c".into(), one),
        ],
    };
    let gens = vec![GeneratorSpec::primitive("a", 1, ring), GeneratorSpec::primitive("b", 1, ring), c];
    free_bialgebra("abc", gens, ring, max_degree)
}

/// Tensor algebra on `rank` primitive letters of degree 1 (deshuffle coproduct).
pub fn tensor_algebra(rank: usize, ring: &RingSpec, max_degree: usize) -> Result<HopfPresentation> {
    let gens = alphabet(rank)?.iter().map(|l| GeneratorSpec::primitive(l, 1, ring)).collect();
    free_bialgebra(&format!("tensor{rank}"), gens, ring, max_degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gmod::Element;

    #[test]
    fn abc_degree_two_basis() {
        let h = free_example_abc(&RingSpec::integers(), 3).unwrap();
        assert_eq!(h.filtration().labels(2)[1..], ["a", "b", "aa", "ab", "ba", "bb", "c"]);
        assert_eq!(h.basis().rank(2), 5);
        assert_eq!(h.basis().rank(3), 12);
    }

    #[test]
    fn abc_products_and_coproducts() {
        let h = free_example_abc(&RingSpec::integers(), 4).unwrap();
        let a = h.element("a").unwrap();
        let b = h.element("b").unwrap();
        assert_eq!(h.product(&a, &b).unwrap(), h.element("ab").unwrap());
        let dc = h.coproduct(&h.element("c").unwrap()).unwrap();
        assert_eq!(dc.to_string(), "1⊗c + a⊗b + c⊗1");
        assert!(h.counit(&a).unwrap().is_zero());
        let one = h.unit_element();
        assert_eq!(h.product(&one, &a).unwrap(), a);
        assert!(h.is_connected());
    }

    #[test]
    fn abc_antipode() {
        let h = free_example_abc(&RingSpec::integers(), 4).unwrap();
        let s = h.antipode().unwrap();
        let c = h.element("c").unwrap();
        let expected = Element::from_label_terms(h.module(), &[("ab", 1), ("c", -1)]).unwrap();
        assert_eq!(s.apply(&c).unwrap(), expected);
        assert_eq!(s.apply(&h.element("a").unwrap()).unwrap(), -&h.element("a").unwrap());
        let s2 = s.compose(s).unwrap();
        let expected = Element::from_label_terms(h.module(), &[("ba", 1), ("ab", -1), ("c", 1)]).unwrap();
        assert_eq!(s2.apply(&c).unwrap(), expected);
        assert_eq!(&h.antipode_oracle().unwrap(), s);
    }

    #[test]
    fn broken_generator_is_rejected() {
        let r = RingSpec::integers();
        let c = GeneratorSpec {
            label: "c".into(),
            degree: 2,
            coproduct: vec![("c".into(), "1".into(), r.one()), ("a".into(), "b".into(), r.one())],
        };
        let gens = vec![GeneratorSpec::primitive("a", 1, &r), GeneratorSpec::primitive("b", 1, &r), c];
        assert!(matches!(free_bialgebra("broken", gens, &r, 3), Err(Error::GeneratorCounit(l)) if l == "c"));
    }

    #[test]
    fn guard_applies() {
        assert!(matches!(tensor_algebra(2, &RingSpec::integers(), 9), Err(Error::ResourceGuard(_))));
    }

    #[test]
    fn tensor_antipode_reverses_words() {
        let h = tensor_algebra(3, &RingSpec::integers(), 3).unwrap();
        let s = h.antipode().unwrap();
        assert_eq!(s.apply(&h.element("ab").unwrap()).unwrap(), h.element("ba").unwrap());
        assert_eq!(s.apply(&h.element("abc").unwrap()).unwrap(), -&h.element("cba").unwrap());
    }
}

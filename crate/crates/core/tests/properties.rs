use hopfcheck::coeff::{Coeff, RingSpec};
use hopfcheck::gmod::{Element, GradedMap, GradedModule, Tensor2Map};
use hopfcheck::hopf::{verify_antipode_axioms, verify_bialgebra, verify_connected};
use hopfcheck::reduced::{reduced_coproduct, reduced_coproduct_map};
use hopfcheck::{zoo, HopfPresentation};
use proptest::prelude::*;

fn rings() -> Vec<RingSpec> {
    vec![
        RingSpec::integers(),
        RingSpec::rationals(),
        RingSpec::integers_mod(7).unwrap(),
        RingSpec::integers_mod(6).unwrap(),
        RingSpec::cyclotomic(3).unwrap(),
        "Q[t]/(1,0,1)".parse().unwrap(),
    ]
}

/// `c0 + c1·g + c2·g²` with `g` the adjoined root in quotient rings.
fn element(ring: &RingSpec, cs: &[i64]) -> Coeff {
    let g = ring.generator().unwrap_or_else(|| ring.from_int(2));
    let mut acc = ring.zero();
    let mut pow = ring.one();
    for &c in cs {
        acc = ring.add(&acc, &ring.mul(&ring.from_int(c), &pow));
        pow = ring.mul(&pow, &g);
    }
    acc
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-20i64..20, 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(r in 0usize..6, a in coeffs(), b in coeffs(), c in coeffs()) {
        let ring = &rings()[r];
        let (a, b, c) = (element(ring, &a), element(ring, &b), element(ring, &c));
        prop_assert_eq!(ring.add(&a, &b), ring.add(&b, &a));
        prop_assert_eq!(ring.mul(&a, &b), ring.mul(&b, &a));
        prop_assert_eq!(ring.mul(&ring.mul(&a, &b), &c), ring.mul(&a, &ring.mul(&b, &c)));
        prop_assert_eq!(ring.mul(&a, &ring.add(&b, &c)), ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c)));
        prop_assert!(ring.is_zero(&ring.add(&a, &ring.neg(&a))));
        prop_assert_eq!(ring.mul(&a, &ring.one()), a.clone());
    }

    #[test]
    fn canonical_forms_round_trip(r in 0usize..6, a in coeffs()) {
        let ring = &rings()[r];
        let a = element(ring, &a);
        prop_assert_eq!(ring.normalize(a.clone()).unwrap(), a.clone());
        prop_assert_eq!(ring.parse_coeff(&ring.token(&a)).unwrap(), a);
    }

    #[test]
    fn field_inverses(r in 0usize..3, a in coeffs()) {
        let ring = [RingSpec::rationals(), RingSpec::integers_mod(7).unwrap(), RingSpec::integers_mod(5).unwrap()][r].clone();
        let a = element(&ring, &a);
        prop_assume!(!ring.is_zero(&a));
        prop_assert!(ring.is_one(&ring.mul(&a, &ring.inverse(&a).unwrap())));
    }
}

/// A random degree-preserving map on `module`.
fn graded_map(module: &GradedModule, seed: &[i64]) -> GradedMap {
    let b = module.basis();
    let ring = module.ring();
    let mut k = 0;
    let mut next = || {
        k += 1;
        seed[k % seed.len()] + (k as i64 % 3) - 1
    };
    let images = (0..module.dim())
        .map(|i| {
            let terms: Vec<_> = b.degree_range(b.degree(i)).map(|j| (j, ring.from_int(next()))).collect();
            Element::from_terms(module, terms)
        })
        .collect();
    GradedMap::from_images(module, images).unwrap()
}

fn small_module() -> GradedModule {
    zoo::free_example_abc(&RingSpec::integers(), 3).unwrap().module().clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn composition_is_associative(a in coeffs(), b in coeffs(), c in coeffs()) {
        let m = small_module();
        let (f, g, h) = (graded_map(&m, &a), graded_map(&m, &b), graded_map(&m, &c));
        let left = f.compose(&g).unwrap().compose(&h).unwrap();
        let right = f.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn powers_add(a in coeffs(), i in 0i64..4, j in 0i64..4) {
        let m = small_module();
        let f = graded_map(&m, &a);
        prop_assert_eq!(f.pow(i + j).unwrap(), f.pow(i).unwrap().compose(&f.pow(j).unwrap()).unwrap());
        prop_assert!(f.is_graded());
    }

    #[test]
    fn tensor_composes_factorwise(a in coeffs(), b in coeffs(), c in coeffs(), d in coeffs()) {
        let m = small_module();
        let (f1, f2, g1, g2) = (graded_map(&m, &a), graded_map(&m, &b), graded_map(&m, &c), graded_map(&m, &d));
        let lhs = Tensor2Map::tensor(&f1.compose(&f2).unwrap(), &g1.compose(&g2).unwrap()).unwrap();
        let rhs = Tensor2Map::tensor(&f1, &g1).unwrap().compose(&Tensor2Map::tensor(&f2, &g2).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reduced_coproduct_is_linear(a in coeffs(), b in coeffs(), s in -5i64..5) {
        let h = zoo::fqsym(&RingSpec::integers(), 3).unwrap();
        let m = h.module();
        let x = Element::from_terms(m, a.iter().enumerate().map(|(i, &c)| (i * 3 % m.dim(), m.ring().from_int(c))));
        let y = Element::from_terms(m, b.iter().enumerate().map(|(i, &c)| ((i * 5 + 2) % m.dim(), m.ring().from_int(c))));
        let s = m.ring().from_int(s);
        let lhs = reduced_coproduct(&h, &x.scale_coeff(&s).try_add(&y).unwrap()).unwrap();
        let rhs = reduced_coproduct(&h, &x).unwrap().scale_coeff(&s).try_add(&reduced_coproduct(&h, &y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

/// Words over `{a, b, c}` of weight `n` with `|a| = |b| = 1`, `|c| = 2`, by
/// brute force over all words of length `<= n`.
fn weighted_words(n: usize) -> usize {
    let mut count = 0;
    let mut frontier = vec![0];
    while let Some(weight) = frontier.pop() {
        if weight == n {
            count += 1;
            continue;
        }
        for w in [1, 1, 2] {
            if weight + w <= n {
                frontier.push(weight + w);
            }
        }
    }
    count
}

#[test]
fn abc_ranks_match_enumeration() {
    let h = zoo::free_example_abc(&RingSpec::integers(), 6).unwrap();
    for n in 0..=6 {
        assert_eq!(h.basis().rank(n), weighted_words(n), "degree {n}");
    }
}

#[test]
fn fqsym_ranks_are_factorials() {
    let h = zoo::fqsym(&RingSpec::integers(), 5).unwrap();
    let mut fact = 1;
    for n in 0..=5 {
        fact *= n.max(1);
        assert_eq!(h.basis().rank(n), fact);
    }
}

/// `S(w) = (−1)^{|w|}·reverse(w)` on every word label.
fn check_reversal_antipode(h: &HopfPresentation) {
    let s = h.antipode().unwrap();
    let b = h.basis();
    for i in 0..h.module().dim() {
        let word = b.label(i);
        let expected = if word == "1" {
            h.unit_element()
        } else {
            let rev: String = word.chars().rev().collect();
            let sign = if word.len().is_multiple_of(2) { 1 } else { -1 };
            Element::from_label_terms(h.module(), &[(&rev, sign)]).unwrap()
        };
        assert_eq!(s.image_element(i), expected, "{} S({word})", h.name());
    }
}

#[test]
fn tensor_and_shuffle_antipodes_reverse_words() {
    for ring in [RingSpec::integers(), RingSpec::integers_mod(5).unwrap()] {
        check_reversal_antipode(&zoo::tensor_algebra(2, &ring, 5).unwrap());
        check_reversal_antipode(&zoo::shuffle_algebra(2, &ring, 5).unwrap());
        check_reversal_antipode(&zoo::tensor_algebra(3, &ring, 4).unwrap());
    }
}

fn connected_zoo(ring: &RingSpec) -> Vec<HopfPresentation> {
    vec![
        zoo::free_example_abc(ring, 5).unwrap(),
        zoo::tensor_algebra(2, ring, 5).unwrap(),
        zoo::shuffle_algebra(2, ring, 5).unwrap(),
        zoo::fqsym(ring, 4).unwrap(),
    ]
}

#[test]
fn connected_zoo_passes_axioms() {
    for ring in [RingSpec::integers(), RingSpec::rationals(), RingSpec::integers_mod(5).unwrap()] {
        for h in connected_zoo(&ring) {
            let n = h.max_degree();
            assert!(verify_bialgebra(&h, n).passed(), "{}", verify_bialgebra(&h, n));
            assert!(verify_connected(&h).passed());
            assert!(verify_antipode_axioms(&h, h.antipode().unwrap(), n).passed());
        }
    }
}

#[test]
fn filtration_is_increasing() {
    for h in connected_zoo(&RingSpec::integers()) {
        let f = h.filtration();
        for n in 0..h.max_degree() {
            let (lo, hi) = (f.level(n), f.level(n + 1));
            assert!(lo.start == hi.start && lo.end <= hi.end);
            assert_eq!(f.labels(n), f.labels(n + 1)[..lo.len()].to_vec());
        }
    }
}

#[test]
fn reduced_coproduct_kills_unit_and_primitives() {
    let h = zoo::tensor_algebra(2, &RingSpec::integers(), 3).unwrap();
    let delta = reduced_coproduct_map(&h);
    for label in ["1", "a", "b"] {
        let i = h.basis().lookup(label).unwrap();
        assert!(delta.image(i).is_empty(), "δ({label})");
    }
    let ab = h.basis().lookup("ab").unwrap();
    assert_eq!(delta.image_element(ab).to_string(), "a⊗b + b⊗a");
}

#[test]
fn taft_is_a_hopf_algebra_but_not_connected() {
    let h = zoo::taft(3).unwrap();
    assert!(verify_bialgebra(&h, 2).passed());
    assert!(verify_antipode_axioms(&h, h.antipode().unwrap(), 2).passed());
    let c = verify_connected(&h);
    assert_eq!(c.failures().count(), 1, "{c}");
}

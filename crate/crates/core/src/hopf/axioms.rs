use rayon::prelude::*;

use crate::gmod::{accumulate, format_terms, Element, GradedMap, Tensor2Element, Terms, Terms2};
use crate::report::{anchors, VerificationReport, Witness};

use super::presentation::{HopfPresentation, Terms3};

fn first<T: Send>(items: Vec<usize>, check: impl Fn(usize) -> Option<T> + Sync) -> Option<T> {
    items.into_par_iter().find_map_first(&check)
}

fn terms3_witness(h: &HopfPresentation, input: String, diff: &Terms3) -> Witness {
    let b = h.basis();
    let display = format_terms(h.ring(), diff, |&(x, y, z)| format!("{}⊗{}⊗{}", b.label(x), b.label(y), b.label(z)));
    let value = diff
        .iter()
        .map(|(&(x, y, z), c)| (format!("{}|{}|{}", b.label(x), b.label(y), b.label(z)), h.ring().format(c)))
        .collect();
    Witness { input, value, display }
}

fn element_witness(h: &HopfPresentation, input: String, terms: Terms) -> Witness {
    Witness::element(input, &Element::from_canonical(h.module(), terms))
}

fn tensor_witness(h: &HopfPresentation, input: String, terms: Terms2) -> Witness {
    Witness::tensor(input, &Tensor2Element::from_canonical(h.module(), terms))
}

fn minus<K: Ord + Clone>(h: &HopfPresentation, a: &std::collections::BTreeMap<K, crate::Coeff>, b: &std::collections::BTreeMap<K, crate::Coeff>) -> std::collections::BTreeMap<K, crate::Coeff> {
    let ring = h.ring();
    let mut out = a.clone();
    for (k, c) in b {
        accumulate(ring, &mut out, k.clone(), ring.neg(c));
    }
    out
}

/// Checks the graded bialgebra axioms on every basis label of degree
/// `<= up_to` (and on every pair/triple of such labels whose products are
/// available within the truncation).
pub fn verify_bialgebra(h: &HopfPresentation, up_to: usize) -> VerificationReport {
    let mut report = VerificationReport::new("bialgebra", h.name());
    let anchor = anchors::BIALGEBRA;
    let ring = h.ring();
    let b = h.basis();
    let up_to = up_to.min(h.max_degree());
    let labels: Vec<usize> = b.up_to(up_to).collect();
    let unit = h.unit();
    let one = ring.one();

    let pairs: Vec<(usize, usize)> = labels
        .iter()
        .flat_map(|&i| labels.iter().map(move |&j| (i, j)))
        .filter(|&(i, j)| h.product_defined(i, j))
        .collect();

    let w = first(labels.clone(), |i| {
        let n = b.degree(i);
        let t = h.coproduct_of(i);
        t.keys()
            .any(|&(x, y)| b.degree(x) + b.degree(y) != n)
            .then(|| tensor_witness(h, format!("Δ({})", b.label(i)), t.clone()))
    });
    report.check("coproduct is graded", anchor, w);

    let w = pairs.iter().find_map(|&(i, j)| {
        let d = b.degree(i) + b.degree(j);
        let p = h.product_basis(i, j).ok()?;
        p.keys()
            .any(|&k| b.degree(k) != d)
            .then(|| element_witness(h, format!("{}·{}", b.label(i), b.label(j)), p))
    });
    report.check("product is graded", anchor, w);

    let w = first(labels.clone(), |i| {
        let x = Terms::from([(i, one.clone())]);
        let u = Terms::from([(unit, one.clone())]);
        let left = h.product_terms(&u, &x).ok()?;
        let right = h.product_terms(&x, &u).ok()?;
        if left != x {
            return Some(element_witness(h, format!("1·{}", b.label(i)), left));
        }
        (right != x).then(|| element_witness(h, format!("{}·1", b.label(i)), right))
    });
    report.check("unit: 1·x = x = x·1", anchor, w);

    let w = first((0..pairs.len()).collect(), |p| {
        let (i, j) = pairs[p];
        let xy = h.product_basis(i, j).ok()?;
        for &k in &labels {
            let z = Terms::from([(k, one.clone())]);
            let x = Terms::from([(i, one.clone())]);
            let Ok(left) = h.product_terms(&xy, &z) else { continue };
            let Ok(yz) = h.product_basis(j, k) else { continue };
            let Ok(right) = h.product_terms(&x, &yz) else { continue };
            if left != right {
                return Some(element_witness(
                    h,
                    format!("({}·{})·{} − {}·({}·{})", b.label(i), b.label(j), b.label(k), b.label(i), b.label(j), b.label(k)),
                    minus(h, &left, &right),
                ));
            }
        }
        None
    });
    report.check("associativity", anchor, w);

    let w = first(labels.clone(), |i| {
        let t = h.coproduct_of(i);
        let x = Terms::from([(i, one.clone())]);
        let left = h.counit_left(t);
        if left != x {
            return Some(element_witness(h, format!("(ε⊗id)Δ({})", b.label(i)), left));
        }
        let right = h.counit_right(t);
        (right != x).then(|| element_witness(h, format!("(id⊗ε)Δ({})", b.label(i)), right))
    });
    report.check("counit: (ε⊗id)∘Δ = id = (id⊗ε)∘Δ", anchor, w);

    let w = first(labels.clone(), |i| {
        let t = h.coproduct_of(i);
        let left = h.coassoc_left(t);
        let right = h.coassoc_right(t);
        (left != right).then(|| terms3_witness(h, format!("((Δ⊗id)Δ − (id⊗Δ)Δ)({})", b.label(i)), &minus(h, &left, &right)))
    });
    report.check("coassociativity: (Δ⊗id)∘Δ = (id⊗Δ)∘Δ", anchor, w);

    let w = first((0..pairs.len()).collect(), |p| {
        let (i, j) = pairs[p];
        let xy = h.product_basis(i, j).ok()?;
        let left = h.coproduct_terms(&xy);
        let right = h.tensor_product_terms(h.coproduct_of(i), h.coproduct_of(j)).ok()?;
        (left != right).then(|| {
            tensor_witness(h, format!("Δ({0}·{1}) − Δ({0})Δ({1})", b.label(i), b.label(j)), minus(h, &left, &right))
        })
    });
    report.check("Δ is multiplicative", anchor, w);

    let w = pairs.iter().find_map(|&(i, j)| {
        let xy = h.product_basis(i, j).ok()?;
        let left = h.counit_value(&xy);
        let right = ring.mul(&h.counit_of(i), &h.counit_of(j));
        (left != right).then(|| {
            Witness::text(
                format!("ε({0}·{1}) vs ε({0})ε({1})", b.label(i), b.label(j)),
                format!("{} ≠ {}", ring.format(&left), ring.format(&right)),
            )
        })
    });
    report.check("ε is multiplicative", anchor, w);

    let du = h.coproduct_of(unit);
    let w = if *du != Terms2::from([((unit, unit), one.clone())]) {
        Some(tensor_witness(h, "Δ(1)".into(), du.clone()))
    } else if !ring.is_one(&h.counit_of(unit)) {
        Some(Witness::text("ε(1)", ring.format(&h.counit_of(unit))))
    } else {
        None
    };
    report.check("Δ(1) = 1⊗1 and ε(1) = 1", anchor, w);
    report
}

/// `m∘(S⊗id)∘Δ` (left) or `m∘(id⊗S)∘Δ` (right) on a basis label.
pub(crate) fn antipode_composite(h: &HopfPresentation, s: &GradedMap, i: usize, left: bool) -> crate::Result<Terms> {
    let ring = h.ring();
    let one = ring.one();
    let mut out = Terms::new();
    for (&(a, b), c) in h.coproduct_of(i) {
        let prod = if left {
            h.product_terms(s.image(a), &Terms::from([(b, one.clone())]))?
        } else {
            h.product_terms(&Terms::from([(a, one.clone())]), s.image(b))?
        };
        crate::gmod::add_scaled(ring, &mut out, c, &prod);
    }
    Ok(out)
}

/// Checks `m∘(S⊗id)∘Δ = u∘ε = m∘(id⊗S)∘Δ` on every basis label of degree `<= up_to`.
pub fn verify_antipode_axioms(h: &HopfPresentation, s: &GradedMap, up_to: usize) -> VerificationReport {
    let mut report = VerificationReport::new("antipode", h.name());
    let b = h.basis();
    let labels: Vec<usize> = b.up_to(up_to.min(h.max_degree())).collect();
    for (left, claim) in [(true, "m∘(S⊗id)∘Δ = u∘ε"), (false, "m∘(id⊗S)∘Δ = u∘ε")] {
        let w = first(labels.clone(), |i| {
            let expected = {
                let mut t = Terms::new();
                accumulate(h.ring(), &mut t, h.unit(), h.counit_of(i));
                t
            };
            match antipode_composite(h, s, i, left) {
                Ok(got) if got == expected => None,
                Ok(got) => Some(element_witness(h, b.label(i).to_string(), minus(h, &got, &expected))),
                Err(e) => Some(Witness::text(b.label(i), e.to_string())),
            }
        });
        report.check(claim, anchors::ANTIPODE, w);
    }
    report
}

/// Connectedness: degree 0 is spanned by the unit and `ε` identifies it with `k`.
pub fn verify_connected(h: &HopfPresentation) -> VerificationReport {
    let mut report = VerificationReport::new("connected", h.name());
    let a = anchors::CONNECTED;
    let c = h.connectedness();
    let w = (c.degree0_rank != 1).then(|| {
        Witness::text("H₀", format!("rank {} with basis {}", c.degree0_rank, h.basis().labels()[h.basis().degree_range(0)].join(", ")))
    });
    report.check("H₀ has rank 1", a, w);
    let w = (!c.counit_of_unit_is_one).then(|| Witness::text("ε(1)", h.ring().format(&h.counit_of(h.unit()))));
    report.check("ε(1_H) = 1", a, w);
    let claim = "(ε|H₀)⁻¹(1) = 1_H";
    match c.unit_agreement {
        Some(true) => report.pass(claim, a),
        Some(false) => report.fail(claim, a, Witness::text("H₀", "the unit does not span degree 0")),
        None => report.not_checked(claim, a, "ε|H₀ is not an isomorphism"),
    }
    report
}

/// The antipode axioms up to `N`, plus agreement of the cached antipode with
/// the independent right-sided recursion.
pub fn suite_antipode(h: &HopfPresentation) -> VerificationReport {
    let mut report = VerificationReport::new("antipode", h.name());
    let s = match h.antipode() {
        Ok(s) => s,
        Err(e) => {
            for claim in ["m∘(S⊗id)∘Δ = u∘ε", "m∘(id⊗S)∘Δ = u∘ε", "left and right recursions agree"] {
                report.not_checked(claim, anchors::ANTIPODE, e.to_string());
            }
            return report;
        }
    };
    report.extend(verify_antipode_axioms(h, s, h.max_degree()));
    let claim = "left and right recursions agree";
    if h.explicit_antipode().is_some() {
        report.not_checked(claim, anchors::ANTIPODE, "antipode supplied explicitly");
        return report;
    }
    match h.antipode_oracle() {
        Ok(oracle) => {
            let w = s.first_difference(&oracle, 0..h.module().dim()).map(|i| {
                element_witness(h, format!("S({})", h.basis().label(i)), minus(h, s.image(i), oracle.image(i)))
            });
            report.check(claim, anchors::ANTIPODE, w);
        }
        Err(e) => report.not_checked(claim, anchors::ANTIPODE, e.to_string()),
    }
    report
}

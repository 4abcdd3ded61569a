//! The reduced coproduct `δ`, the projection `idbar`, and primitivity.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::gmod::{accumulate, add_scaled, scaled, sum, CoproductMap, Element, GradedMap, Tensor2Element, Terms, Terms2};
use crate::hopf::HopfPresentation;
use crate::report::{anchors, VerificationReport, Witness};

/// `x − ε(x)·1` on coefficient maps.
pub(crate) fn idbar_terms(h: &HopfPresentation, x: &Terms) -> Terms {
    let ring = h.ring();
    let mut out = x.clone();
    accumulate(ring, &mut out, h.unit(), ring.neg(&h.counit_value(x)));
    out
}

pub fn idbar(h: &HopfPresentation, x: &Element) -> Result<Element> {
    h.module().check(x.module())?;
    Ok(Element::from_canonical(h.module(), idbar_terms(h, x.terms())))
}

/// `idbar` as a graded map.
pub fn idbar_map(h: &HopfPresentation) -> GradedMap {
    let one = h.ring().one();
    GradedMap::from_fn(h.module(), |i| idbar_terms(h, &Terms::from([(i, one.clone())])))
}

/// `δ(x) = Δ(x) − x⊗1 − 1⊗x + ε(x)·1⊗1`, computed literally.
pub(crate) fn reduced_coproduct_terms(h: &HopfPresentation, x: &Terms) -> Terms2 {
    let ring = h.ring();
    let u = h.unit();
    let mut out = h.coproduct_terms(x);
    for (&i, c) in x {
        accumulate(ring, &mut out, (i, u), ring.neg(c));
        accumulate(ring, &mut out, (u, i), ring.neg(c));
    }
    accumulate(ring, &mut out, (u, u), h.counit_value(x));
    out
}

pub fn reduced_coproduct(h: &HopfPresentation, x: &Element) -> Result<Tensor2Element> {
    h.module().check(x.module())?;
    Ok(Tensor2Element::from_canonical(h.module(), reduced_coproduct_terms(h, x.terms())))
}

/// `δ` as a map into the tensor square.
pub fn reduced_coproduct_map(h: &HopfPresentation) -> CoproductMap {
    CoproductMap::from_fn(h.module(), |i| h.reduced_coproduct_of(i))
}

pub(crate) fn is_primitive_terms(h: &HopfPresentation, x: &Terms) -> bool {
    let ring = h.ring();
    let u = h.unit();
    let mut expected = Terms2::new();
    for (&i, c) in x {
        accumulate(ring, &mut expected, (i, u), c.clone());
        accumulate(ring, &mut expected, (u, i), c.clone());
    }
    h.coproduct_terms(x) == expected
}

/// `Δ(x) = x⊗1 + 1⊗x`, tested literally (works over any ring).
pub fn is_primitive(h: &HopfPresentation, x: &Element) -> Result<bool> {
    h.module().check(x.module())?;
    Ok(is_primitive_terms(h, x.terms()))
}

fn require_connected(h: &HopfPresentation, report: &mut VerificationReport, claim: &str, anchor: &str) -> bool {
    if h.is_connected() {
        return true;
    }
    report.not_checked(claim, anchor, "requires a connected algebra");
    false
}

/// `δ = (idbar⊗idbar)∘Δ` on every label of degree `<= up_to`.
pub fn verify_delta_factorization(h: &HopfPresentation, up_to: usize) -> VerificationReport {
    let mut report = VerificationReport::new("reduced", h.name());
    let claim = "δ = (idbar⊗idbar)∘Δ";
    if !require_connected(h, &mut report, claim, anchors::IDBAR) {
        return report;
    }
    let idbar = idbar_map(h);
    let lhs = reduced_coproduct_map(h);
    let rhs = h.coproduct_map().pushed_through(&idbar, &idbar).expect("same module");
    let w = lhs.first_difference(&rhs, h.basis().up_to(up_to.min(h.max_degree()))).map(|i| {
        let diff = crate::gmod::difference(h.ring(), lhs.image(i), rhs.image(i));
        Witness::terms2(h.module(), h.basis().label(i), diff)
    });
    report.check(claim, anchors::IDBAR, w);
    let w = (!idbar.image(h.unit()).is_empty()).then(|| Witness::terms(h.module(), "idbar(1)", idbar.image(h.unit()).clone()));
    report.check("idbar(H≤0) = 0", anchors::IDBAR, w);
    report
}

/// For each label of degree `n` in `1..=up_to`, `δ(label)` has bidegrees
/// `(i, n−i)` with `1 <= i <= n−1`; in particular `δ(H₁) = 0`.
pub fn verify_delta_degree_bound(h: &HopfPresentation, up_to: usize) -> VerificationReport {
    let mut report = VerificationReport::new("reduced", h.name());
    let claim = "δ(H_n) ⊆ Σ_{0<i<n} H_i⊗H_{n−i}";
    if !require_connected(h, &mut report, claim, anchors::DELTA2) {
        return report;
    }
    let b = h.basis();
    let up_to = up_to.min(h.max_degree());
    let w = (1..=up_to).flat_map(|n| b.degree_range(n)).find_map(|i| {
        let n = b.degree(i);
        let d = h.reduced_coproduct_of(i);
        d.keys()
            .any(|&(x, y)| {
                let (p, q) = (b.degree(x), b.degree(y));
                p == 0 || q == 0 || p + q != n
            })
            .then(|| Witness::terms2(h.module(), format!("δ({})", b.label(i)), d))
    });
    report.check(claim, anchors::DELTA2, w);
    let w = b.degree_range(1).find_map(|i| {
        let d = h.reduced_coproduct_of(i);
        (!d.is_empty()).then(|| Witness::terms2(h.module(), format!("δ({})", b.label(i)), d))
    });
    report.check("δ(H₁) = 0", anchors::DELTA2, w);
    report
}

/// Seeded small combinations of basis labels of degree `<= up_to`, with
/// coefficients in `{−2, ..., 2}`: a few per degree and a few mixed.
fn random_combinations(h: &HopfPresentation, up_to: usize, seed: u64, per_degree: usize) -> Vec<Terms> {
    let ring = h.ring();
    let b = h.basis();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let draw = |range: std::ops::Range<usize>, rng: &mut ChaCha8Rng| -> Terms {
        let mut t = Terms::new();
        let picks = range.len().min(4);
        for _ in 0..picks {
            let i = rng.gen_range(range.clone());
            accumulate(ring, &mut t, i, ring.from_int(rng.gen_range(-2..=2)));
        }
        t
    };
    for d in 0..=up_to {
        if b.rank(d) == 0 {
            continue;
        }
        for _ in 0..per_degree {
            out.push(draw(b.degree_range(d), &mut rng));
        }
    }
    for _ in 0..per_degree {
        out.push(draw(b.up_to(up_to), &mut rng));
    }
    out
}

/// The characterization of primitives by the reduced coproduct:
/// membership-wise on labels and seeded combinations over any ring, and
/// kernel-wise over fields.
pub fn verify_prim_characterization(h: &HopfPresentation, up_to: usize, seed: u64) -> VerificationReport {
    let mut report = VerificationReport::new("reduced", h.name());
    let claim = "x ∈ Prim H ⟺ δ(x) = 0 and ε(x) = 0";
    if !require_connected(h, &mut report, claim, anchors::DELTA2) {
        return report;
    }
    let ring = h.ring();
    let b = h.basis();
    let up_to = up_to.min(h.max_degree());
    let one = ring.one();
    let mut tests: Vec<Terms> = b.up_to(up_to).map(|i| Terms::from([(i, one.clone())])).collect();
    tests.extend(random_combinations(h, up_to, seed, 8));
    let show = |x: &Terms| Element::from_canonical(h.module(), x.clone()).to_string();

    let w = tests.iter().find_map(|x| {
        let prim = is_primitive_terms(h, x);
        let by_delta = reduced_coproduct_terms(h, x).is_empty() && ring.is_zero(&h.counit_value(x));
        (prim != by_delta).then(|| Witness::text(show(x), format!("primitive: {prim}; δ(x) = 0 and ε(x) = 0: {by_delta}")))
    });
    report.check(claim, anchors::DELTA2, w);

    let mut primitives: Vec<Terms> = tests.iter().filter(|x| is_primitive_terms(h, x)).cloned().collect();
    let w = primitives.iter().find_map(|x| {
        let e = h.counit_value(x);
        (!ring.is_zero(&e)).then(|| Witness::text(show(x), format!("ε = {}", ring.format(&e))))
    });
    report.check("ε(x) = 0 for primitive x", anchors::PRIMITIVE_E0, w);

    let d1 = reduced_coproduct_terms(h, &Terms::from([(h.unit(), one.clone())]));
    let w = (!d1.is_empty()).then(|| Witness::terms2(h.module(), "δ(1)", d1));
    report.check("1_H ∈ Ker δ", anchors::DELTA2, w);

    let kernel_claim = "Ker δ|H_n ⊆ Prim H for n ≥ 1";
    if ring.is_field() {
        let delta = reduced_coproduct_map(h);
        let mut witness = None;
        for n in 1..=up_to {
            let ker = delta.kernel_basis(Some(n)).expect("field");
            if let Some(v) = ker.iter().find(|v| !is_primitive_terms(h, v.terms())) {
                witness = Some(Witness::element(format!("kernel vector in degree {n}"), v));
                break;
            }
            primitives.extend(ker.into_iter().map(Element::into_terms));
        }
        report.check(kernel_claim, anchors::DELTA2, witness);
        let w = delta.kernel_basis(Some(0)).expect("field").is_empty().then(|| Witness::text("Ker δ|H₀", "empty"));
        report.check("Ker δ|H₀ = k·1_H", anchors::DELTA2, w);
    } else {
        report.not_checked(kernel_claim, anchors::DELTA2, format!("kernels need a field; {ring} is not one"));
    }

    let two = ring.from_int(2);
    let minus_one = ring.from_int(-1);
    let w = primitives.iter().enumerate().find_map(|(k, x)| {
        for c in [&two, &minus_one] {
            let y = scaled(ring, c, x);
            if !is_primitive_terms(h, &y) {
                return Some(Witness::terms(h.module(), format!("{}·({})", ring.format(c), show(x)), y));
            }
        }
        let next = &primitives[(k + 1) % primitives.len()];
        let sum = sum(ring, x, next);
        (!is_primitive_terms(h, &sum)).then(|| Witness::terms(h.module(), format!("({}) + ({})", show(x), show(next)), sum))
    });
    report.check("Prim H is closed under sums and scaling", anchors::DELTA2, w);
    report
}

/// `(φ⊗φ)∘δ = δ∘φ` on every label of degree `<= up_to`.
pub fn verify_delta_naturality(h: &HopfPresentation, phi: &GradedMap, name: &str, up_to: usize) -> VerificationReport {
    let mut report = VerificationReport::new("reduced", h.name());
    let claim = format!("({name}⊗{name})∘δ = δ∘{name}");
    if !require_connected(h, &mut report, &claim, anchors::DELTA2) {
        return report;
    }
    let delta = reduced_coproduct_map(h);
    let lhs = delta.pushed_through(phi, phi).expect("same module");
    let rhs = delta.after(phi).expect("same module");
    let w = lhs.first_difference(&rhs, h.basis().up_to(up_to.min(h.max_degree()))).map(|i| {
        let diff = crate::gmod::difference(h.ring(), lhs.image(i), rhs.image(i));
        Witness::terms2(h.module(), h.basis().label(i), diff)
    });
    report.check(claim, anchors::DELTA2, w);
    report
}

/// `δ(c·x + y) = c·δ(x) + δ(y)` on seeded combinations.
pub fn verify_delta_linearity(h: &HopfPresentation, up_to: usize, seed: u64) -> VerificationReport {
    let mut report = VerificationReport::new("reduced", h.name());
    let ring = h.ring();
    let tests = random_combinations(h, up_to.min(h.max_degree()), seed ^ 0x9e37_79b9, 4);
    let w = tests.windows(2).enumerate().find_map(|(k, pair)| {
        let c = ring.from_int(k as i64 % 5 - 2);
        let mut combo = scaled(ring, &c, &pair[0]);
        add_scaled(ring, &mut combo, &ring.one(), &pair[1]);
        let lhs = reduced_coproduct_terms(h, &combo);
        let mut rhs = scaled(ring, &c, &reduced_coproduct_terms(h, &pair[0]));
        add_scaled(ring, &mut rhs, &ring.one(), &reduced_coproduct_terms(h, &pair[1]));
        (lhs != rhs).then(|| Witness::terms(h.module(), "c·x + y", combo))
    });
    report.check("δ is linear", anchors::DELTA2, w);
    report
}

/// Every check of this module, plus naturality of `δ` under `id` and `S²`.
pub fn suite_reduced(h: &HopfPresentation, up_to: usize, seed: u64) -> VerificationReport {
    let mut report = VerificationReport::new("reduced", h.name());
    report.extend(verify_delta_factorization(h, up_to));
    report.extend(verify_delta_degree_bound(h, up_to));
    report.extend(verify_prim_characterization(h, up_to, seed));
    report.extend(verify_delta_linearity(h, up_to, seed));
    if h.is_connected() {
        report.extend(verify_delta_naturality(h, &GradedMap::identity(h.module()), "id", up_to));
        match h.antipode() {
            Ok(s) => {
                let s2 = s.compose(s).expect("same module");
                report.extend(verify_delta_naturality(h, &s2, "S²", up_to));
            }
            Err(e) => report.not_checked("(S²⊗S²)∘δ = δ∘S²", anchors::DELTA2, e.to_string()),
        }
    }
    report
}

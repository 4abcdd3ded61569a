use rayon::prelude::*;

use crate::coeff::binomial;
use crate::gmod::{accumulate, add_scaled, difference, sum, tensor_terms, GradedMap, Terms, Terms2};
use crate::report::{anchors, Status, VerificationReport, Witness};

use super::first_witness;
use super::instance::PreCoalgebraInstance;

fn map_witness(inst: &PreCoalgebraInstance, lhs: &GradedMap, rhs: &GradedMap, labels: impl IntoIterator<Item = usize>) -> Option<Witness> {
    lhs.first_difference(rhs, labels).map(|i| {
        Witness::terms(inst.module(), inst.basis().label(i), difference(inst.ring(), lhs.image(i), rhs.image(i)))
    })
}

/// Audits the hypotheses of the general theorem on every basis label.
pub fn check_hypotheses(inst: &PreCoalgebraInstance) -> VerificationReport {
    let mut report = VerificationReport::new("theorem1", &inst.name);
    let a = anchors::THEOREM;
    let b = inst.basis();
    let ring = inst.ring();
    let all = 0..inst.module().dim();
    let g = inst.g();

    let claim = "ass-Ker: Ker δ ⊆ Ker(e−f)";
    if ring.is_field() {
        match inst.delta.kernel_basis(None) {
            Ok(ker) => {
                let w = ker.iter().find_map(|v| {
                    let img = g.apply_terms(v.terms());
                    (!img.is_empty()).then(|| Witness::terms(inst.module(), format!("(e−f)({v})"), img))
                });
                report.check(claim, a, w);
            }
            Err(e) => report.not_checked(claim, a, e.to_string()),
        }
    } else {
        report.not_checked(claim, a, format!("kernels need a field; {ring} is not one"));
    }

    for (name, phi) in [("f", &inst.f), ("e", &inst.e)] {
        let claim = format!("ass-mor{}: ({name}⊗{name})∘δ = δ∘{name}", if name == "e" { "′" } else { "" });
        let lhs = inst.delta.pushed_through(phi, phi).expect("same module");
        let rhs = inst.delta.after(phi).expect("same module");
        let w = lhs.first_difference(&rhs, all.clone()).map(|i| {
            Witness::terms2(inst.module(), b.label(i), difference(ring, lhs.image(i), rhs.image(i)))
        });
        report.check(claim, a, w);
    }

    let fe = inst.f.compose(&inst.e).expect("same module");
    let ef = inst.e.compose(&inst.f).expect("same module");
    report.check("ass-comm: f∘e = e∘f", a, map_witness(inst, &fe, &ef, all.clone()));

    let p = inst.p;
    let low = b.degree_range(1).start..b.up_to(p.min(b.max_degree())).end;
    let w = low.clone().find_map(|i| {
        let img = g.image(i);
        (!img.is_empty()).then(|| Witness::terms(inst.module(), b.label(i), img.clone()))
    });
    report.check(format!("ass-ann: (e−f)(D₁ + ⋯ + D_{p}) = 0"), a, w);

    let w = (p + 1..=b.max_degree()).flat_map(|n| b.degree_range(n)).find_map(|i| {
        let n = b.degree(i);
        let img = inst.delta.image(i);
        img.keys()
            .any(|&(x, y)| {
                let (dx, dy) = (b.degree(x), b.degree(y));
                dx == 0 || dy == 0 || dx + dy != n
            })
            .then(|| Witness::terms2(inst.module(), format!("δ({})", b.label(i)), img.clone()))
    });
    report.check(format!("ass-gr: δ(D_n) ⊆ Σ_{{0<i<n}} D_i⊗D_{{n−i}} for n > {p}"), a, w);
    report
}

/// For every `u` in `(p, U]`: `(e−f)^{u−p}(D_u) ⊆ Ker δ` and `(e−f)^{u−p+1}(D_u) = 0`.
pub fn verify_conclusions(inst: &PreCoalgebraInstance, max_u: usize) -> VerificationReport {
    let mut report = VerificationReport::new("theorem1", &inst.name);
    let b = inst.basis();
    let p = inst.p;
    let top = max_u.min(b.max_degree());
    let g = inst.g();
    let labels: Vec<usize> = (p + 1..=top).flat_map(|u| b.degree_range(u)).collect();

    // Per label: (first failure of the Ker δ claim, first failure of the annihilation claim).
    let results: Vec<(Option<Witness>, Option<Witness>)> = labels
        .par_iter()
        .map(|&i| {
            let u = b.degree(i);
            let one = inst.ring().one();
            let mut v = Terms::from([(i, one)]);
            for _ in 0..u - p {
                v = g.apply_terms(&v);
            }
            let d = inst.delta.apply_terms(&v);
            let ker = (!d.is_empty()).then(|| {
                Witness::terms2(inst.module(), format!("δ((e−f)^{}({})), u = {u}", u - p, b.label(i)), d)
            });
            let next = g.apply_terms(&v);
            let ann = (!next.is_empty())
                .then(|| Witness::terms(inst.module(), format!("(e−f)^{}({}), u = {u}", u - p + 1, b.label(i)), next));
            (ker, ann)
        })
        .collect();
    let (mut ker, mut ann) = (None, None);
    for (k, a) in results {
        ker = ker.or(k);
        ann = ann.or(a);
    }
    report.check(format!("(e−f)^(u−p)(D_u) ⊆ Ker δ for {p} < u ≤ {top}"), anchors::THEOREM, ker);
    report.check(format!("(e−f)^(u−p+1)(D_u) = 0 for {p} < u ≤ {top}"), anchors::THEOREM, ann);
    report
}

/// `(a⊗b)(v)`, factor by factor.
fn apply_pure(inst: &PreCoalgebraInstance, a: &GradedMap, b: &GradedMap, v: &Terms2) -> Terms2 {
    let ring = inst.ring();
    let mut out = Terms2::new();
    for (&(x, y), c) in v {
        for (&x2, c1) in a.image(x) {
            let c1 = ring.mul(c, c1);
            for (&y2, c2) in b.image(y) {
                accumulate(ring, &mut out, (x2, y2), ring.mul(&c1, c2));
            }
        }
    }
    out
}

/// `h(v) = (e⊗e)(v) − (f⊗f)(v)`.
fn apply_h(inst: &PreCoalgebraInstance, v: &Terms2) -> Terms2 {
    difference(inst.ring(), &apply_pure(inst, &inst.e, &inst.e, v), &apply_pure(inst, &inst.f, &inst.f, v))
}

/// The binomial expansion of `h^k = (g⊗f + e⊗g)^k` from the proof of the
/// theorem. Operators act on the tensor square truncated at total degree
/// `N`, and are compared on every label pair `x⊗y` with `|x| + |y| <= N`.
pub fn binomial_identity_check(inst: &PreCoalgebraInstance, max_k: usize) -> VerificationReport {
    let mut report = VerificationReport::new("binomial-identity", &inst.name);
    let a = anchors::BINOMIAL;
    let all = 0..inst.module().dim();
    let ring = inst.ring();
    let module = inst.module();
    let b = inst.basis();
    let top = b.max_degree();

    let fe = inst.f.compose(&inst.e).expect("same module");
    let ef = inst.e.compose(&inst.f).expect("same module");
    if !report.check("precondition: f∘e = e∘f", a, map_witness(inst, &fe, &ef, all.clone())) {
        for claim in ["h = g⊗f + e⊗g", "binomial expansion of h^k", "g^i∘e^j = e^j∘g^i"] {
            report.not_checked(claim, a, "f and e do not commute");
        }
        return report;
    }

    let g = inst.g();
    let dim = module.dim();
    let pairs: Vec<usize> = all
        .clone()
        .flat_map(|i| b.up_to(top - b.degree(i)).map(move |j| i * dim + j))
        .collect();
    let unit_pair = |k: usize| Terms2::from([((k / dim, k % dim), ring.one())]);
    let pair_witness = |prefix: String, k: usize, lhs: &Terms2, rhs: &Terms2| {
        let input = format!("{prefix}{}⊗{}", b.label(k / dim), b.label(k % dim));
        Witness::terms2(module, input, difference(ring, lhs, rhs))
    };

    let w = first_witness(pairs.clone(), |k| {
        let v = unit_pair(k);
        let lhs = apply_h(inst, &v);
        let rhs = sum(ring, &apply_pure(inst, &g, &inst.f, &v), &apply_pure(inst, &inst.e, &g, &v));
        (lhs != rhs).then(|| pair_witness(String::new(), k, &lhs, &rhs))
    });
    report.check("h = g⊗f + e⊗g", a, w);
    let w = first_witness(pairs.clone(), |k| {
        let v = unit_pair(k);
        let lhs = apply_pure(inst, &g, &inst.f, &apply_pure(inst, &inst.e, &g, &v));
        let rhs = apply_pure(inst, &inst.e, &g, &apply_pure(inst, &g, &inst.f, &v));
        (lhs != rhs).then(|| pair_witness(String::new(), k, &lhs, &rhs))
    });
    report.check("(g⊗f)∘(e⊗g) = (e⊗g)∘(g⊗f)", a, w);

    let e_pow = inst.e.powers(max_k);
    let f_pow = inst.f.powers(max_k);
    let g_pow = g.powers(max_k);
    let w = first_witness(pairs, |p| {
        let (x, y) = (p / dim, p % dim);
        let mut lhs = unit_pair(p);
        for k in 0..=max_k {
            if k > 0 {
                lhs = apply_h(inst, &lhs);
            }
            let mut rhs = Terms2::new();
            for r in 0..=k {
                let left = e_pow[k - r].apply_terms(g_pow[r].image(x));
                let right = f_pow[r].apply_terms(g_pow[k - r].image(y));
                let c = ring.from_bigint(binomial(k as u64, r as u64));
                add_scaled(ring, &mut rhs, &c, &tensor_terms(ring, &left, &right));
            }
            if lhs != rhs {
                return Some(pair_witness(format!("k = {k}, "), p, &lhs, &rhs));
            }
        }
        None
    });
    report.check(format!("h^k = Σ_r C(k,r)(e^(k−r)⊗f^r)∘(g^r⊗g^(k−r)) for k ≤ {max_k}"), a, w);
    report.note_last(format!("on label pairs of total degree ≤ {top}"));

    let mut witness = None;
    'outer: for (i, gi) in g_pow.iter().enumerate() {
        for (j, ej) in e_pow.iter().enumerate() {
            let l = gi.compose(ej).expect("same module");
            let r = ej.compose(gi).expect("same module");
            if let Some(mut w) = map_witness(inst, &l, &r, all.clone()) {
                w.input = format!("i = {i}, j = {j}, {}", w.input);
                witness = Some(w);
                break 'outer;
            }
        }
    }
    report.check(format!("g^i∘e^j = e^j∘g^i for i, j ≤ {max_k}"), a, witness);

    // δ∘g^k = h^k∘δ follows from the two morphism hypotheses.
    let claim = format!("δ∘g^k = h^k∘δ for k ≤ {max_k}");
    let hyp = check_hypotheses(inst);
    let mor_ok = hyp.entries.iter().filter(|e| e.claim.starts_with("ass-mor")).all(|e| e.status == Status::Pass);
    if mor_ok {
        let w = first_witness(all, |i| {
            let mut rhs = inst.delta.image(i).clone();
            for (k, gk) in g_pow.iter().enumerate() {
                if k > 0 {
                    rhs = apply_h(inst, &rhs);
                }
                let lhs = inst.delta.apply_terms(gk.image(i));
                if lhs != rhs {
                    return Some(Witness::terms2(module, format!("k = {k}, {}", b.label(i)), difference(ring, &lhs, &rhs)));
                }
            }
            None
        });
        report.check(claim, a, w);
    } else {
        report.not_checked(claim, a, "the morphism hypotheses fail");
    }
    report
}

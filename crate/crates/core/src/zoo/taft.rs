use std::collections::HashMap;

use num_bigint::BigInt;

use crate::coeff::{is_prime, RingSpec};
use crate::error::{Error, Result};
use crate::gmod::{accumulate, add_scaled, GradedBasis, GradedModule, Terms, Terms2};
use crate::hopf::HopfPresentation;

fn power_label(base: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{e}"),
    }
}

fn label(i: usize, j: usize) -> String {
    let s = power_label("a", i) + &power_label("x", j);
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

/// The Taft algebra `H_{n,q}` over `Z[q]/(1 + q + ... + q^{n-1})`.
///
/// Basis `a^i x^j` (`0 <= i, j < n`) graded by `j`, with `a^n = 1`,
/// `x^n = 0`, `xa = q·ax`, `Δ(a) = a⊗a`, `Δ(x) = x⊗1 + a⊗x`. Degree 0 has
/// rank `n`, so the antipode is supplied explicitly:
/// `S(a) = a^{n-1}`, `S(x) = −a^{n-1}x`, extended anti-multiplicatively.
pub fn taft(n: usize) -> Result<HopfPresentation> {
    if !is_prime(&BigInt::from(n)) {
        return Err(Error::Unsupported(format!("Taft algebra needs a prime n, got {n}")));
    }
    let ring = RingSpec::cyclotomic(n)?;
    let q = ring.generator().expect("cyclotomic ring has a generator");
    let idx = |i: usize, j: usize| j * n + i;
    let basis = GradedBasis::new((0..n).map(|j| (0..n).map(|i| label(i, j)).collect()).collect())?;
    let module = GradedModule::new(basis, ring.clone());
    let dim = n * n;

    // (a^i x^j)(a^k x^l) = q^{jk} a^{i+k} x^{j+l}
    let mul = |u: usize, v: usize| -> Terms {
        let (i, j, k, l) = (u % n, u / n, v % n, v / n);
        if j + l >= n {
            return Terms::new();
        }
        let c = ring.pow(&q, ((j * k) % n) as u32);
        Terms::from([(idx((i + k) % n, j + l), c)])
    };
    let mul_terms = |x: &Terms, y: &Terms| -> Terms {
        let mut out = Terms::new();
        for (&u, c) in x {
            for (&v, d) in y {
                add_scaled(&ring, &mut out, &ring.mul(c, d), &mul(u, v));
            }
        }
        out
    };
    let mul_tensor = |x: &Terms2, y: &Terms2| -> Terms2 {
        let mut out = Terms2::new();
        for (&(a, b), c) in x {
            for (&(p, r), d) in y {
                let cd = ring.mul(c, d);
                for (l, c1) in mul(a, p) {
                    for (rr, c2) in mul(b, r) {
                        accumulate(&ring, &mut out, (l, rr), ring.mul(&cd, &ring.mul(&c1, &c2)));
                    }
                }
            }
        }
        out
    };

    let one = ring.one();
    let unit = idx(0, 0);
    let (a, x) = (idx(1, 0), idx(0, 1));
    let mut products = HashMap::new();
    for u in 0..dim {
        for v in 0..dim {
            products.insert((u, v), mul(u, v));
        }
    }

    let delta_a = Terms2::from([((a, a), one.clone())]);
    let delta_x = Terms2::from([((x, unit), one.clone()), ((a, x), one.clone())]);
    let s_a = Terms::from([(idx(n - 1, 0), one.clone())]);
    let s_x = Terms::from([(idx(n - 1, 1), ring.neg(&one))]);
    let mut coproducts = vec![Terms2::new(); dim];
    let mut antipode = vec![Terms::new(); dim];
    for j in 0..n {
        for i in 0..n {
            let mut d = Terms2::from([((unit, unit), one.clone())]);
            let mut s = Terms::from([(unit, one.clone())]);
            for _ in 0..i {
                d = mul_tensor(&d, &delta_a);
                s = mul_terms(&s_a, &s);
            }
            for _ in 0..j {
                d = mul_tensor(&d, &delta_x);
                s = mul_terms(&s_x, &s);
            }
            coproducts[idx(i, j)] = d;
            antipode[idx(i, j)] = s;
        }
    }
    let counit: Terms = (0..n).map(|i| (idx(i, 0), one.clone())).collect();
    HopfPresentation::from_tables(&format!("taft{n}"), module, unit, counit, products, coproducts, Some(antipode))
}

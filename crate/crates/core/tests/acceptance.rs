//! Acceptance criteria, one line each. Arithmetic is exact, so every
//! comparison is exact equality; runtime limits are wall-clock.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hopfcheck::coeff::RingSpec;
use hopfcheck::format::{export, parse};
use hopfcheck::gmod::{Element, GradedMap};
use hopfcheck::hopf::verify_antipode_axioms;
use hopfcheck::reduced::suite_reduced;
use hopfcheck::runner::{self, RunConfig, RunReport};
use hopfcheck::verify::{
    binomial_identity_check, check_hypotheses, instance_from_hopf, suite_antipode_props, suite_graded_hopf,
    suite_lowered_exponent, suite_sharpness, suite_taft_remark, verify_conclusions, SquarePower,
};
use hopfcheck::{zoo, HopfPresentation, Status, VerificationReport};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, u64);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn passed(r: &VerificationReport) -> Result<(), String> {
    ensure(r.passed(), || format!("report has failures:\n{r}"))
}

fn rings() -> [RingSpec; 3] {
    [RingSpec::integers(), RingSpec::rationals(), RingSpec::integers_mod(5).unwrap()]
}

fn connected_zoo(ring: &RingSpec) -> Vec<HopfPresentation> {
    vec![
        zoo::free_example_abc(ring, 5).unwrap(),
        zoo::tensor_algebra(2, ring, 5).unwrap(),
        zoo::shuffle_algebra(2, ring, 5).unwrap(),
        zoo::fqsym(ring, 5).unwrap(),
    ]
}

fn c1() -> Outcome {
    let h = zoo::free_example_abc(&RingSpec::integers(), 5).map_err(|e| e.to_string())?;
    let s = h.antipode().map_err(|e| e.to_string())?;
    let c = h.element("c").unwrap();
    let sc = s.apply(&c).unwrap();
    let s2c = s.apply(&sc).unwrap();
    let want_s = Element::from_label_terms(h.module(), &[("ab", 1), ("c", -1)]).unwrap();
    let want_s2 = Element::from_label_terms(h.module(), &[("ba", 1), ("ab", -1), ("c", 1)]).unwrap();
    ensure(sc == want_s, || format!("S(c) = {sc}"))?;
    ensure(s2c == want_s2, || format!("S²(c) = {s2c}"))?;
    let r = suite_sharpness(&h);
    let e = r.entry("(id−S²)^1(H_2) = 0").ok_or("no degree-2 sharpness entry")?;
    let w = e.witness.as_ref().ok_or("no witness")?;
    ensure(e.status == Status::NonidentityVerified && w.input == "(id−S²)^1(c)", || format!("{r}"))?;
    Ok(format!("S(c) = {sc}, S²(c) = {s2c}, (id−S²)(c) = {} ≠ 0", w.display))
}

fn c2() -> Outcome {
    let abc = zoo::free_example_abc(&RingSpec::integers(), 6).unwrap();
    let r = suite_graded_hopf(&abc);
    passed(&r)?;
    let fq = zoo::fqsym(&RingSpec::integers(), 5).unwrap();
    let r2 = suite_graded_hopf(&fq);
    passed(&r2)?;
    let n = r.entries.len() + r2.entries.len();
    ensure(r.entries.iter().chain(&r2.entries).all(|e| e.status == Status::Pass), || "not all claims checked".into())?;
    Ok(format!("{n}/6 claims pass on abc (N=6, {} labels) and FQSym (N=5, {} labels)", abc.module().dim(), fq.module().dim()))
}

fn c3() -> Outcome {
    let fq = zoo::fqsym(&RingSpec::integers(), 5).unwrap();
    let r = suite_lowered_exponent(&fq, 2);
    passed(&r)?;
    let claim = "(id−S²)^(u−2+1)(H≤u) = 0 for 2 ≤ u ≤ 5";
    ensure(r.status_of(claim) == Some(Status::Pass), || format!("{r}"))?;
    let abc = zoo::free_example_abc(&RingSpec::integers(), 5).unwrap();
    let r = suite_lowered_exponent(&abc, 2);
    let fail = r.failures().next().ok_or("abc premise did not fail")?;
    let w = fail.witness.as_ref().unwrap();
    let want = vec![("ab".to_string(), "1".to_string()), ("ba".to_string(), "-1".to_string())];
    ensure(w.input == "(id−S²)(c)" && w.value == want, || format!("{r}"))?;
    Ok(format!("FQSym: {claim}; abc premise fails at {} = {}", w.input, w.display))
}

fn c4() -> Outcome {
    let mut seen = Vec::new();
    for h in [
        zoo::tensor_algebra(2, &RingSpec::integers(), 5).unwrap(),
        zoo::shuffle_algebra(2, &RingSpec::integers(), 5).unwrap(),
    ] {
        let s = h.antipode().unwrap();
        let s2 = s.compose(s).unwrap();
        let id = GradedMap::identity(h.module());
        if let Some(i) = s2.first_difference(&id, 0..h.module().dim()) {
            return Err(format!("{}: S²({}) = {}", h.name(), h.basis().label(i), s2.image_element(i)));
        }
        let r = suite_antipode_props(&h);
        passed(&r)?;
        ensure(r.entries.iter().any(|e| e.claim.starts_with("S² = id (") && e.status == Status::Pass), || format!("{r}"))?;
        seen.push(format!("{} ({} labels)", h.name(), h.module().dim()));
    }
    Ok(format!("S² = id on every label of {}", seen.join(" and ")))
}

fn c5() -> Outcome {
    let h = zoo::taft(3).map_err(|e| e.to_string())?;
    let r = verify_antipode_axioms(&h, h.antipode().unwrap(), h.max_degree());
    passed(&r)?;
    ensure(h.module().dim() == 9 && r.entries.len() == 2, || format!("{r}"))?;
    let r = suite_taft_remark(3, 10);
    passed(&r)?;
    let e = r.entry("S²(x) ∈ {q·x, q⁻¹·x}").ok_or("no eigenvalue entry")?;
    let nonzero = r.entries.iter().find(|e| e.claim == "(id−S²)^k(x) ≠ 0 for 1 ≤ k ≤ 10").ok_or("no nonzero entry")?;
    ensure(nonzero.status == Status::NonidentityVerified, || format!("{r}"))?;
    Ok(format!("both antipode axioms on 9 labels; {}; (id−S²)^k(x) ≠ 0 for k ≤ 10", e.note.clone().unwrap_or_default()))
}

fn c6() -> Outcome {
    let pairs = [(SquarePower::ID, SquarePower::S2), (SquarePower::S2, SquarePower::S4), (SquarePower::ID, SquarePower::S4)];
    let mut runs = 0;
    for ring in rings() {
        for h in connected_zoo(&ring) {
            for (e, f) in pairs {
                let inst = instance_from_hopf(&h, e, f, 1).map_err(|err| err.to_string())?;
                let hyp = check_hypotheses(&inst);
                passed(&hyp)?;
                let ker = hyp.status_of("ass-Ker: Ker δ ⊆ Ker(e−f)");
                let want = if ring.is_field() { Status::Pass } else { Status::NotChecked };
                ensure(ker == Some(want), || format!("ass-Ker is {ker:?} over {ring}"))?;
                ensure(hyp.entries.iter().filter(|e| e.status == Status::NotChecked).count() <= 1, || format!("{hyp}"))?;
                passed(&verify_conclusions(&inst, h.max_degree()))?;
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} instances (4 algebras × 3 (e,f) × Z, Q, Z/5; p = 1): hypotheses and conclusions hold"))
}

fn c7() -> Outcome {
    let h = zoo::free_example_abc(&RingSpec::integers_mod(5).unwrap(), 4).unwrap();
    let inst = instance_from_hopf(&h, SquarePower::ID, SquarePower::S2, 1).map_err(|e| e.to_string())?;
    let r = binomial_identity_check(&inst, 4);
    passed(&r)?;
    ensure(r.entries.iter().all(|e| e.status == Status::Pass), || format!("{r}"))?;
    Ok(format!("{} claims hold for k ≤ 4 and i, j ≤ 4", r.entries.len()))
}

fn c8() -> Outcome {
    let mut runs = 0;
    for ring in rings() {
        for h in connected_zoo(&ring) {
            let r = suite_reduced(&h, h.max_degree(), 11);
            passed(&r)?;
            let kernel = r.status_of("Ker δ|H_n ⊆ Prim H for n ≥ 1");
            let want = if ring.is_field() { Status::Pass } else { Status::NotChecked };
            ensure(kernel == Some(want), || format!("kernel-wise check is {kernel:?} over {ring}:\n{r}"))?;
            ensure(r.status_of("1_H ∈ Ker δ") == Some(Status::Pass), || format!("{r}"))?;
            runs += 1;
        }
    }
    Ok(format!("{runs} algebra/ring combinations pass; kernel-wise over Q and Z/5"))
}

fn c9() -> Outcome {
    let mut labels = 0;
    for ring in rings() {
        for h in connected_zoo(&ring) {
            let s = h.antipode().map_err(|e| e.to_string())?;
            let oracle = h.antipode_oracle().map_err(|e| e.to_string())?;
            if let Some(i) = s.first_difference(&oracle, 0..h.module().dim()) {
                return Err(format!("{} over {ring}: left and right antipodes differ at {}", h.name(), h.basis().label(i)));
            }
            labels += h.module().dim();
        }
    }
    Ok(format!("left and right recursions agree on {labels} labels"))
}

fn all_suites(h: &HopfPresentation) -> Vec<VerificationReport> {
    let mut out = vec![
        hopfcheck::hopf::verify_bialgebra(h, h.max_degree()),
        hopfcheck::hopf::verify_connected(h),
        hopfcheck::hopf::suite_antipode(h),
        suite_antipode_props(h),
    ];
    if h.is_connected() {
        let inst = instance_from_hopf(h, SquarePower::ID, SquarePower::S2, 1).unwrap();
        out.push(suite_reduced(h, h.max_degree(), 3));
        out.push(check_hypotheses(&inst));
        out.push(verify_conclusions(&inst, h.max_degree()));
        out.push(suite_graded_hopf(h));
        out.push(suite_lowered_exponent(h, 2));
        out.push(suite_sharpness(h));
    }
    out
}

fn c10() -> Outcome {
    let z = RingSpec::integers();
    let algebras = vec![
        zoo::free_example_abc(&z, 4).unwrap(),
        zoo::tensor_algebra(2, &z, 4).unwrap(),
        zoo::shuffle_algebra(2, &z, 4).unwrap(),
        zoo::fqsym(&z, 4).unwrap(),
        zoo::taft(3).unwrap(),
    ];
    for h in &algebras {
        let text = export(h);
        let back = parse(&text).map_err(|e| format!("{}: {e}", h.name()))?;
        ensure(export(&back) == text, || format!("{}: export is not stable", h.name()))?;
        ensure(all_suites(h) == all_suites(&back), || format!("{}: suite reports differ after round trip", h.name()))?;
    }
    let mut cfg = RunConfig::zoo("abc");
    cfg.seed = 42;
    cfg.suites = vec!["reduced".into(), "graded-hopf".into(), "lowered-exponent".into()];
    let render = || -> Result<String, String> {
        let (h, reports) = runner::run(&cfg).map_err(|e| e.to_string())?;
        Ok(RunReport::new(&h, &cfg, reports).to_json())
    };
    let (a, b) = (render()?, render()?);
    ensure(a == b, || "structured reports differ between runs".into())?;
    Ok(format!("{} zoo algebras suite-identical after parse(export(A)); seeded report byte-identical ({} bytes)", algebras.len(), a.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("golden counterexample on abc", c1, 1),
        ("graded corollary on abc (N=6) and FQSym (N=5)", c2, 120),
        ("exponent lowering: FQSym passes, abc premise fails", c3, 120),
        ("S² = id on tensor and shuffle algebras", c4, 10),
        ("Taft remark for n = 3", c5, 1),
        ("theorem harness sweep", c6, 300),
        ("binomial operator identity on abc over Z/5", c7, 30),
        ("reduced-coproduct layer", c8, 60),
        ("antipode oracle agreement", c9, 60),
        ("round trip and determinism", c10, 60),
    ];
    let mut failures = 0;
    for (k, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let limit = Duration::from_secs(limit);
        let (ok, detail) = match outcome {
            Ok(d) if took < limit => (true, d),
            Ok(d) => (false, format!("{d}; too slow")),
            Err(e) => (false, e),
        };
        failures += usize::from(!ok);
        println!(
            "criterion {:>2} {}: {name} [exact equality; {:.2?} < {:?}] {detail}",
            k + 1,
            if ok { "PASS" } else { "FAIL" },
            took,
            limit
        );
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}

use hopfcheck::coeff::RingSpec;
use hopfcheck::hopf::{suite_antipode, verify_bialgebra, verify_connected};
use hopfcheck::reduced::suite_reduced;
use hopfcheck::verify::{
    binomial_identity_check, check_hypotheses, instance_from_hopf, noncoassociative_instance, suite_antipode_props,
    suite_corollary_filtered, suite_graded_hopf, suite_lowered_exponent, suite_sharpness, suite_taft_remark,
    verify_conclusions, SquarePower,
};
use hopfcheck::zoo;
use hopfcheck::gmod::{CoproductMap, Tensor2Element};
use hopfcheck::verify::PreCoalgebraInstance;
use hopfcheck::Status;

fn z() -> RingSpec {
    RingSpec::integers()
}

#[test]
fn abc_bialgebra_connected_antipode() {
    let h = zoo::free_example_abc(&z(), 5).unwrap();
    for r in [verify_bialgebra(&h, 5), verify_connected(&h), suite_antipode(&h), suite_reduced(&h, 5, 7)] {
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn abc_graded_and_sharpness() {
    let h = zoo::free_example_abc(&z(), 5).unwrap();
    let r = suite_graded_hopf(&h);
    assert!(r.passed(), "{r}");
    let r = suite_sharpness(&h);
    assert!(r.passed(), "{r}");
    let e = r.entry("(id−S²)^1(H_2) = 0").unwrap();
    assert_eq!(e.status, Status::NonidentityVerified);
    assert_eq!(e.witness.as_ref().unwrap().input, "(id−S²)^1(c)");
}

#[test]
fn abc_lowered_premise_fails_with_commutator() {
    let h = zoo::free_example_abc(&z(), 4).unwrap();
    let r = suite_lowered_exponent(&h, 2);
    let fail: Vec<_> = r.failures().collect();
    assert_eq!(fail.len(), 1, "{r}");
    let w = fail[0].witness.as_ref().unwrap();
    assert_eq!(w.input, "(id−S²)(c)");
    assert_eq!(w.display, "ab - ba");
}

#[test]
fn fqsym_lowered_passes() {
    let h = zoo::fqsym(&z(), 4).unwrap();
    let r = suite_lowered_exponent(&h, 2);
    assert!(r.passed(), "{r}");
    assert!(suite_graded_hopf(&h).passed());
}

#[test]
fn antipode_props_on_zoo() {
    for h in [
        zoo::free_example_abc(&z(), 4).unwrap(),
        zoo::tensor_algebra(2, &z(), 4).unwrap(),
        zoo::shuffle_algebra(2, &z(), 4).unwrap(),
        zoo::fqsym(&z(), 4).unwrap(),
        zoo::taft(3).unwrap(),
    ] {
        let r = suite_antipode_props(&h);
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn taft_remark() {
    let r = suite_taft_remark(3, 10);
    assert!(r.passed(), "{r}");
    let c = verify_connected(&zoo::taft(3).unwrap());
    assert!(!c.passed());
}

#[test]
fn theorem_on_zoo() {
    let h = zoo::fqsym(&RingSpec::rationals(), 4).unwrap();
    let inst = instance_from_hopf(&h, SquarePower::ID, SquarePower::S2, 1).unwrap();
    let r = check_hypotheses(&inst);
    assert!(r.passed(), "{r}");
    assert!(verify_conclusions(&inst, 4).passed());
    let r = binomial_identity_check(&inst, 3);
    assert!(r.passed(), "{r}");
    let r = suite_corollary_filtered(&h, SquarePower::S2, SquarePower::S4, 1);
    assert!(r.passed(), "{r}");
}

#[test]
fn handbuilt_instance() {
    let inst = noncoassociative_instance(&RingSpec::rationals()).unwrap();
    let r = check_hypotheses(&inst);
    assert!(r.passed(), "{r}");
    let r = verify_conclusions(&inst, 3);
    assert!(r.passed(), "{r}");
}

#[test]
fn mutated_delta_breaks_grading_hypothesis() {
    let h = zoo::free_example_abc(&z(), 3).unwrap();
    let inst = instance_from_hopf(&h, SquarePower::ID, SquarePower::S2, 1).unwrap();
    let m = inst.module();
    let c = m.basis().lookup("c").unwrap();
    let images = (0..m.dim())
        .map(|i| {
            let mut t = inst.delta.image_element(i);
            if i == c {
                t = t.try_add(&Tensor2Element::from_label_terms(m, &[("1", "c", 1)]).unwrap()).unwrap();
            }
            t
        })
        .collect();
    let mutated = PreCoalgebraInstance { delta: CoproductMap::from_images(m, images).unwrap(), ..inst };
    let r = check_hypotheses(&mutated);
    // The extra 1⊗c term also breaks compatibility with f = S².
    let gr = r.failures().find(|e| e.claim.starts_with("ass-gr")).expect("ass-gr fails");
    assert_eq!(gr.witness.as_ref().unwrap().input, "δ(c)");
}

#[test]
fn equal_maps_make_everything_vanish() {
    let h = zoo::free_example_abc(&z(), 4).unwrap();
    let inst = instance_from_hopf(&h, SquarePower::S2, SquarePower::S2, 1).unwrap();
    assert!(check_hypotheses(&inst).passed());
    assert!(verify_conclusions(&inst, 4).passed());
    assert!(binomial_identity_check(&inst, 2).passed());
    assert!(suite_corollary_filtered(&h, SquarePower::S2, SquarePower::S2, 1).passed());
}

#[test]
fn fqsym_instance_with_p2() {
    let h = zoo::fqsym(&z(), 5).unwrap();
    let inst = instance_from_hopf(&h, SquarePower::ID, SquarePower::S2, 2).unwrap();
    let r = check_hypotheses(&inst);
    assert!(r.passed(), "{r}");
    assert_eq!(r.status_of("ass-Ker: Ker δ ⊆ Ker(e−f)"), Some(Status::NotChecked));
    assert!(verify_conclusions(&inst, 5).passed());
}

#[test]
fn abc_fails_p2_hypothesis() {
    let h = zoo::free_example_abc(&z(), 4).unwrap();
    let inst = instance_from_hopf(&h, SquarePower::ID, SquarePower::S2, 2).unwrap();
    let r = check_hypotheses(&inst);
    let fails: Vec<_> = r.failures().map(|e| e.claim.as_str()).collect();
    assert_eq!(fails, ["ass-ann: (e−f)(D₁ + ⋯ + D_2) = 0"]);
}

#[test]
fn handbuilt_instance_needs_full_exponent() {
    let inst = noncoassociative_instance(&z()).unwrap();
    let g = inst.g();
    let t = inst.basis().lookup("t").unwrap();
    let g2 = g.pow(2).unwrap();
    assert_eq!(g2.image_element(t).to_string(), "y");
    assert!(g.pow(3).unwrap().image_element(t).is_zero());
}

#[test]
fn corollary_filtered_on_abc() {
    let h = zoo::free_example_abc(&RingSpec::integers_mod(5).unwrap(), 5).unwrap();
    for (e, f) in [(SquarePower::ID, SquarePower::S2), (SquarePower::S2, SquarePower::S4), (SquarePower::ID, SquarePower::S4)] {
        let r = suite_corollary_filtered(&h, e, f, 1);
        assert!(r.passed(), "{r}");
        assert!(r.entries.iter().all(|e| e.status == Status::Pass));
    }
}

#[test]
fn non_connected_inputs_are_reported() {
    let t = zoo::taft(3).unwrap();
    assert!(matches!(
        instance_from_hopf(&t, SquarePower::ID, SquarePower::S2, 1),
        Err(hopfcheck::Error::NotConnected(_))
    ));
    let r = suite_graded_hopf(&t);
    assert!(r.entries.iter().all(|e| e.status == Status::NotChecked));
    let r = suite_antipode_props(&t);
    assert_eq!(r.status_of("S² ≠ id on H₁"), Some(Status::NonidentityVerified));
}

#[test]
fn tensor_lowered_premise_holds_without_commutativity() {
    let h = zoo::tensor_algebra(2, &z(), 5).unwrap();
    let r = suite_lowered_exponent(&h, 2);
    assert!(r.passed(), "{r}");
    assert_eq!(r.status_of("ab = ba for all a, b ∈ H₁"), Some(Status::NonidentityVerified));
}

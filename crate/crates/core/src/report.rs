//! Verification reports: one entry per checked claim.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::gmod::{Element, GradedModule, Tensor2Element, Terms, Terms2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// The identity was verified.
    Pass,
    /// The identity failed; the entry carries a witness.
    Fail,
    /// The check was skipped (unsupported ring, failed premise).
    NotChecked,
    /// A documented nonidentity was confirmed (a counterexample value is nonzero).
    NonidentityVerified,
}

impl Status {
    pub fn tag(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::NotChecked => "SKIP",
            Status::NonidentityVerified => "NONID",
        }
    }
}

/// The first failing input and the offending value, serialized as
/// label/coefficient lists (tensor keys are written `left|right`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub input: String,
    pub value: Vec<(String, String)>,
    pub display: String,
}

impl Witness {
    pub fn element(input: impl Into<String>, value: &Element) -> Self {
        Witness { input: input.into(), value: value.to_pairs(), display: value.to_string() }
    }

    pub fn tensor(input: impl Into<String>, value: &Tensor2Element) -> Self {
        Witness { input: input.into(), value: value.to_pairs(), display: value.to_string() }
    }

    pub fn text(input: impl Into<String>, display: impl Into<String>) -> Self {
        Witness { input: input.into(), value: Vec::new(), display: display.into() }
    }

    pub(crate) fn terms(module: &GradedModule, input: impl Into<String>, terms: Terms) -> Self {
        Self::element(input, &Element::from_canonical(module, terms))
    }

    pub(crate) fn terms2(module: &GradedModule, input: impl Into<String>, terms: Terms2) -> Self {
        Self::tensor(input, &Tensor2Element::from_canonical(module, terms))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub claim: String,
    pub anchor: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub algebra: String,
    pub entries: Vec<CheckEntry>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, algebra: impl Into<String>) -> Self {
        VerificationReport { suite: suite.into(), algebra: algebra.into(), entries: Vec::new() }
    }

    fn push(&mut self, claim: String, anchor: &str, status: Status, witness: Option<Witness>, note: Option<String>) {
        self.entries.push(CheckEntry { claim, anchor: anchor.to_string(), status, witness, note });
    }

    pub fn pass(&mut self, claim: impl Into<String>, anchor: &str) {
        self.push(claim.into(), anchor, Status::Pass, None, None);
    }

    pub fn fail(&mut self, claim: impl Into<String>, anchor: &str, witness: Witness) {
        self.push(claim.into(), anchor, Status::Fail, Some(witness), None);
    }

    pub fn not_checked(&mut self, claim: impl Into<String>, anchor: &str, reason: impl Into<String>) {
        self.push(claim.into(), anchor, Status::NotChecked, None, Some(reason.into()));
    }

    pub fn nonidentity(&mut self, claim: impl Into<String>, anchor: &str, witness: Witness) {
        self.push(claim.into(), anchor, Status::NonidentityVerified, Some(witness), None);
    }

    /// Records pass when `witness` is `None`, fail otherwise.
    pub fn check(&mut self, claim: impl Into<String>, anchor: &str, witness: Option<Witness>) -> bool {
        match witness {
            None => {
                self.pass(claim, anchor);
                true
            }
            Some(w) => {
                self.fail(claim, anchor, w);
                false
            }
        }
    }

    pub fn note_last(&mut self, note: impl Into<String>) {
        if let Some(e) = self.entries.last_mut() {
            e.note = Some(note.into());
        }
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.entries.extend(other.entries);
    }

    /// No entry failed.
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn entry(&self, claim: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.claim == claim)
    }

    pub fn status_of(&self, claim: &str) -> Option<Status> {
        self.entry(claim).map(|e| e.status)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} on {} ==", self.suite, self.algebra)?;
        for e in &self.entries {
            write!(f, "[{:<5}] {}  ({})", e.status.tag(), e.claim, e.anchor)?;
            if let Some(w) = &e.witness {
                write!(f, "\n          witness {}: {}", w.input, w.display)?;
            }
            if let Some(n) = &e.note {
                write!(f, "\n          note: {n}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Anchor strings attached to report entries and the suite catalogue.
pub mod anchors {
    pub const BIALGEBRA: &str = "Notations: graded bialgebra";
    pub const CONNECTED: &str = "Def. con-fil-coal (a); Prop. fil-bial.1=1";
    pub const ANTIPODE: &str = "Rmk. hopf.antipode-pro";
    pub const DELTA2: &str = "Prop. cfc.delta2";
    pub const IDBAR: &str = "Lem. cfc.idbar";
    pub const PRIMITIVE_E0: &str = "Lem. coalg.primitive-e0";
    pub const THEOREM: &str = "Theorem thm.id-f.gen";
    pub const BINOMIAL: &str = "§3.1 proof";
    pub const FILTERED: &str = "Cor. id-f.cfc";
    pub const GRADED: &str = "Cor. id-S2.gr1";
    pub const LOWERED: &str = "Cor. id-S2.grp";
    pub const LOWERED_H1: &str = "Cor. id-S2.gr2";
    pub const ANTIPODE_PROPS: &str = "Lem. bialg.antip-props";
    pub const GRADED_BASICS: &str = "Lem. cghopf.basics";
    pub const TAFT: &str = "Rmk. Taft algebra";
    pub const EXAMPLE: &str = "Example: free algebra on a, b, c";
}

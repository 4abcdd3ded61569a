//! Batch runs: load an algebra, run suites in catalogue order, render reports.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::coeff::RingSpec;
use crate::error::{Error, Result};
use crate::hopf::{self, HopfPresentation};
use crate::reduced;
use crate::report::{anchors, Status, VerificationReport};
use crate::verify::{self, SquarePower};
use crate::{format, zoo};

/// Suite ids with the anchor strings their entries carry, in run order.
pub const SUITES: [(&str, &str); 12] = [
    ("bialgebra", anchors::BIALGEBRA),
    ("connected", anchors::CONNECTED),
    ("antipode", anchors::ANTIPODE),
    ("reduced", anchors::DELTA2),
    ("theorem1", anchors::THEOREM),
    ("binomial-identity", anchors::BINOMIAL),
    ("filtered", anchors::FILTERED),
    ("graded-hopf", anchors::GRADED),
    ("lowered-exponent", anchors::LOWERED),
    ("antipode-props", anchors::ANTIPODE_PROPS),
    ("taft", anchors::TAFT),
    ("sharpness", anchors::EXAMPLE),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSource {
    /// A zoo algebra by name: `abc`, `tensor`, `shuffle`, `fqsym`, `taft`.
    Zoo(String),
    Spec(PathBuf),
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub source: AlgebraSource,
    /// Ring string; defaults to `Z`. Fixed by the algebra for `taft` and spec files.
    pub ring: Option<String>,
    pub max_degree: Option<usize>,
    /// Alphabet size for `tensor` and `shuffle`.
    pub rank: usize,
    /// Order of the Taft algebra.
    pub n: usize,
    /// Suite ids; empty selects the defaults for the algebra.
    pub suites: Vec<String>,
    /// Filtration index; `theorem1` and `filtered` default to 1, `lowered-exponent` to 2.
    pub p: Option<usize>,
    pub e: SquarePower,
    pub f: SquarePower,
    pub seed: u64,
    /// Largest power in `binomial-identity` and `taft`.
    pub max_k: Option<usize>,
}

impl RunConfig {
    pub fn zoo(name: &str) -> Self {
        RunConfig {
            source: AlgebraSource::Zoo(name.to_string()),
            ring: None,
            max_degree: None,
            rank: 2,
            n: 3,
            suites: Vec::new(),
            p: None,
            e: SquarePower::ID,
            f: SquarePower::S2,
            seed: 0,
            max_k: None,
        }
    }
}

/// Default truncation degree of each zoo algebra.
pub fn default_max_degree(name: &str) -> usize {
    match name {
        "fqsym" => 4,
        _ => 5,
    }
}

/// Builds the algebra selected by `cfg`.
pub fn load_algebra(cfg: &RunConfig) -> Result<HopfPresentation> {
    match &cfg.source {
        AlgebraSource::Spec(path) => {
            if cfg.ring.is_some() || cfg.max_degree.is_some() {
                return Err(Error::Invalid("a spec file fixes its own ring and max degree".into()));
            }
            format::parse_file(path)
        }
        AlgebraSource::Zoo(name) => {
            let ring: RingSpec = cfg.ring.as_deref().unwrap_or("Z").parse()?;
            let n = cfg.max_degree.unwrap_or_else(|| default_max_degree(name));
            match name.as_str() {
                "abc" => zoo::free_example_abc(&ring, n),
                "tensor" => zoo::tensor_algebra(cfg.rank, &ring, n),
                "shuffle" => zoo::shuffle_algebra(cfg.rank, &ring, n),
                "fqsym" => zoo::fqsym(&ring, n),
                "taft" => {
                    if cfg.ring.is_some() || cfg.max_degree.is_some() {
                        return Err(Error::Invalid("the Taft algebra fixes its own ring and max degree".into()));
                    }
                    zoo::taft(cfg.n)
                }
                other => Err(Error::Invalid(format!("unknown algebra `{other}` (abc, tensor, shuffle, fqsym, taft)"))),
            }
        }
    }
}

fn default_suites(h: &HopfPresentation, source: &AlgebraSource) -> Vec<&'static str> {
    if source == &AlgebraSource::Zoo("taft".into()) {
        return vec!["bialgebra", "antipode", "antipode-props", "taft"];
    }
    if !h.is_connected() {
        return vec!["bialgebra", "connected", "antipode-props"];
    }
    vec!["bialgebra", "connected", "antipode", "reduced", "theorem1", "graded-hopf", "antipode-props", "sharpness"]
}

/// The requested suites in catalogue order, without repeats.
fn ordered_suites(requested: &[String]) -> Result<Vec<&'static str>> {
    if let Some(bad) = requested.iter().find(|r| !SUITES.iter().any(|(id, _)| id == r)) {
        let ids: Vec<&str> = SUITES.iter().map(|(id, _)| *id).collect();
        return Err(Error::Invalid(format!("unknown suite `{bad}` (one of: {})", ids.join(", "))));
    }
    Ok(SUITES.iter().map(|(id, _)| *id).filter(|id| requested.iter().any(|r| r == id)).collect())
}

fn run_suite(id: &str, h: &HopfPresentation, cfg: &RunConfig) -> VerificationReport {
    let n = h.max_degree();
    let p = cfg.p.unwrap_or(1);
    let theorem_instance = |suite: &str| match verify::instance_from_hopf(h, cfg.e, cfg.f, p) {
        Ok(inst) => Ok(inst),
        Err(e) => {
            let mut r = VerificationReport::new(suite, h.name());
            r.not_checked("theorem instance", anchors::THEOREM, e.to_string());
            Err(r)
        }
    };
    match id {
        "bialgebra" => hopf::verify_bialgebra(h, n),
        "connected" => hopf::verify_connected(h),
        "antipode" => hopf::suite_antipode(h),
        "reduced" => reduced::suite_reduced(h, n, cfg.seed),
        "theorem1" => match theorem_instance("theorem1") {
            Ok(inst) => {
                let mut r = verify::check_hypotheses(&inst);
                let failed = r.failures().next().map(|e| e.claim.clone());
                match failed {
                    None => r.extend(verify::verify_conclusions(&inst, n)),
                    Some(claim) => r.not_checked("conclusions", anchors::THEOREM, format!("hypothesis failed: {claim}")),
                }
                r
            }
            Err(r) => r,
        },
        "binomial-identity" => match theorem_instance("binomial-identity") {
            Ok(inst) => verify::binomial_identity_check(&inst, cfg.max_k.unwrap_or(4)),
            Err(r) => r,
        },
        "filtered" => verify::suite_corollary_filtered(h, cfg.e, cfg.f, p),
        "graded-hopf" => verify::suite_graded_hopf(h),
        "lowered-exponent" => verify::suite_lowered_exponent(h, cfg.p.unwrap_or(2)),
        "antipode-props" => verify::suite_antipode_props(h),
        "taft" => {
            if cfg.source == AlgebraSource::Zoo("taft".into()) {
                verify::suite_taft_remark(cfg.n, cfg.max_k.unwrap_or(10))
            } else {
                let mut r = VerificationReport::new("taft", h.name());
                r.not_checked("Taft remark", anchors::TAFT, "only applies to --algebra taft");
                r
            }
        }
        "sharpness" => verify::suite_sharpness(h),
        _ => unreachable!("suite ids are validated"),
    }
}

/// Runs the configured suites. Configuration and spec errors are `Err`;
/// check failures are recorded in the reports.
pub fn run(cfg: &RunConfig) -> Result<(HopfPresentation, Vec<VerificationReport>)> {
    let suites = ordered_suites(&cfg.suites)?;
    if cfg.p == Some(0) {
        return Err(Error::Invalid("p must be a positive integer".into()));
    }
    let h = load_algebra(cfg)?;
    let suites = if suites.is_empty() { default_suites(&h, &cfg.source) } else { suites };
    let reports = suites.iter().map(|id| run_suite(id, &h, cfg)).collect();
    Ok((h, reports))
}

/// 0 when no entry failed, 2 otherwise. Confirmed nonidentities do not count as failures.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().all(VerificationReport::passed) {
        0
    } else {
        2
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub not_checked: usize,
    pub nonidentity_verified: usize,
}

impl Summary {
    pub fn of(reports: &[VerificationReport]) -> Self {
        let mut s = Summary::default();
        for e in reports.iter().flat_map(|r| &r.entries) {
            match e.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::NotChecked => s.not_checked += 1,
                Status::NonidentityVerified => s.nonidentity_verified += 1,
            }
        }
        s
    }
}

/// The structured report: run parameters, one report per suite, totals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub algebra: String,
    pub ring: String,
    pub max_degree: usize,
    pub dimension: usize,
    pub seed: u64,
    pub reports: Vec<VerificationReport>,
    pub summary: Summary,
}

impl RunReport {
    pub fn new(h: &HopfPresentation, cfg: &RunConfig, reports: Vec<VerificationReport>) -> Self {
        RunReport {
            algebra: h.name().to_string(),
            ring: h.ring().to_string(),
            max_degree: h.max_degree(),
            dimension: h.module().dim(),
            seed: cfg.seed,
            summary: Summary::of(&reports),
            reports,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "algebra {} over {} (max degree {}, dimension {})\n\n",
            self.algebra, self.ring, self.max_degree, self.dimension
        );
        for r in &self.reports {
            out += &r.to_string();
            out.push('\n');
        }
        let s = &self.summary;
        out += &format!(
            "{} passed, {} failed, {} not checked, {} nonidentities verified\n",
            s.pass, s.fail, s.not_checked, s.nonidentity_verified
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_run_in_catalogue_order() {
        let got = ordered_suites(&["sharpness".into(), "bialgebra".into(), "sharpness".into()]).unwrap();
        assert_eq!(got, ["bialgebra", "sharpness"]);
        assert!(ordered_suites(&["nope".into()]).is_err());
    }

    #[test]
    fn abc_lowered_exponent_exits_2() {
        let mut cfg = RunConfig::zoo("abc");
        cfg.suites = vec!["lowered-exponent".into()];
        cfg.p = Some(2);
        let (_, reports) = run(&cfg).unwrap();
        assert_eq!(exit_code(&reports), 2);
    }

    #[test]
    fn taft_rejects_ring() {
        let mut cfg = RunConfig::zoo("taft");
        cfg.ring = Some("Q".into());
        assert!(run(&cfg).is_err());
    }
}

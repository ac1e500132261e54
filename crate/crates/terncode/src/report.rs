//! The versioned `cfa/1` analysis report and the run manifest.
//!
//! Reports carry exact integers only — weights, counts, `2 Re` values and
//! ranks — so consumers can re-verify every claim. Two runs with the same
//! manifest (command, parameters, seed, tool version) produce byte-identical
//! JSON; wall time is therefore never embedded in a report.

use crate::codes::{AbStatus, WeightDistribution};
use crate::minimality::{Method, MinimalityVerdict, Verdict, Witness};
use serde::Serialize;
use std::collections::BTreeMap;

/// What produced a report. Serialized field order is fixed by the struct.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct RunManifest {
    pub tool_version: String,
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rng_seed: Option<u64>,
}

impl RunManifest {
    pub fn new(command: &str) -> RunManifest {
        RunManifest {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            parameters: BTreeMap::new(),
            rng_seed: None,
        }
    }

    pub fn with_param(mut self, key: &str, value: impl ToString) -> RunManifest {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn with_seed(mut self, seed: u64) -> RunManifest {
        self.rng_seed = Some(seed);
        self
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessJson {
    Covering { covered: [usize; 2], covering: [usize; 2] },
    SumTriple { mu: usize, nus: [usize; 3], theta: i64 },
    CrossQuad { mu1: usize, nu1: usize, mu2: usize, nu2: usize },
    CompositeTriple { mu_t: usize, nus: [usize; 3], theta: i64 },
    CompositeQuad {
        condition: u8,
        mu_t: usize,
        mu_t2: usize,
        nu1: usize,
        nu2: usize,
        lambdas: [i64; 4],
    },
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> WitnessJson {
        match *w {
            Witness::Covering { covered, covering } => WitnessJson::Covering {
                covered: [covered.0, covered.1],
                covering: [covering.0, covering.1],
            },
            Witness::SumTriple { mu, nus, theta } => WitnessJson::SumTriple { mu, nus, theta },
            Witness::CrossQuad { mu1, nu1, mu2, nu2 } => {
                WitnessJson::CrossQuad { mu1, nu1, mu2, nu2 }
            }
            Witness::CompositeTriple { mu_t, nus, theta } => {
                WitnessJson::CompositeTriple { mu_t, nus, theta }
            }
            Witness::CompositeQuad { condition, mu_t, mu_t2, nu1, nu2, lambdas } => {
                WitnessJson::CompositeQuad { condition, mu_t, mu_t2, nu1, nu2, lambdas }
            }
        }
    }
}

/// One minimality method's outcome.
#[derive(Debug, Clone, Serialize)]
pub struct MethodReport {
    pub method: &'static str,
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    /// The composite route enumerates exactly the four lambda patterns
    /// with a single `-2`; recorded so the reading is explicit.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_patterns: Option<&'static str>,
    /// Pair count for sampled covering runs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample_pairs: Option<usize>,
}

impl MethodReport {
    pub fn from_verdict(v: &MinimalityVerdict) -> MethodReport {
        MethodReport {
            method: v.method.as_str(),
            verdict: v.verdict.as_str(),
            witness: v.witness.as_ref().map(WitnessJson::from),
            lambda_patterns: (v.method == Method::WalshComposite)
                .then_some("single-negative-two"),
            sample_pairs: None,
        }
    }

    pub fn with_sample_pairs(mut self, pairs: usize) -> MethodReport {
        self.sample_pairs = Some(pairs);
        self
    }
}

/// The full `cfa/1` analysis report.
#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub schema: &'static str,
    pub manifest: RunManifest,
    pub n: usize,
    pub m: usize,
    pub length: usize,
    pub dimension: usize,
    pub weight_distribution: Vec<(usize, u64)>,
    pub w_min: usize,
    pub w_max: usize,
    pub ab_satisfied: bool,
    pub ab_spectral_violation: bool,
    pub minimality: MinimalitySection,
}

#[derive(Debug, Clone, Serialize)]
pub struct MinimalitySection {
    pub methods: Vec<MethodReport>,
}

impl AnalysisReport {
    #[allow(clippy::too_many_arguments)]
    pub fn assemble(
        manifest: RunManifest,
        n: usize,
        m: usize,
        dimension: usize,
        dist: &WeightDistribution,
        ab: AbStatus,
        ab_spectral_violation: bool,
        methods: Vec<MethodReport>,
    ) -> AnalysisReport {
        AnalysisReport {
            schema: "cfa/1",
            manifest,
            n,
            m,
            length: crate::pow3(n) - 1,
            dimension,
            weight_distribution: dist.as_pairs(),
            w_min: ab.w_min,
            w_max: ab.w_max,
            ab_satisfied: ab.satisfies_ab,
            ab_spectral_violation,
            minimality: MinimalitySection { methods },
        }
    }

    /// Combined exit code for the CLI: 0 minimal, 3 not minimal,
    /// 4 inconclusive.
    pub fn exit_code(&self) -> i32 {
        let mut saw_minimal = false;
        for m in &self.minimality.methods {
            if m.verdict == Verdict::NotMinimal.as_str() {
                return 3;
            }
            if m.verdict == Verdict::Minimal.as_str() {
                saw_minimal = true;
            }
        }
        if saw_minimal {
            0
        } else {
            4
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_json_is_deterministic() {
        let m1 = RunManifest::new("analyze").with_param("table", "f.tft").with_seed(7);
        let m2 = RunManifest::new("analyze").with_param("table", "f.tft").with_seed(7);
        assert_eq!(serde_json::to_string(&m1).unwrap(), serde_json::to_string(&m2).unwrap());
    }

    #[test]
    fn exit_codes_follow_verdicts() {
        let base = |verdict: &'static str| MethodReport {
            method: "walsh_direct",
            verdict,
            witness: None,
            lambda_patterns: None,
            sample_pairs: None,
        };
        let mk = |methods: Vec<MethodReport>| AnalysisReport {
            schema: "cfa/1",
            manifest: RunManifest::new("analyze"),
            n: 3,
            m: 1,
            length: 26,
            dimension: 4,
            weight_distribution: vec![(0, 1)],
            w_min: 1,
            w_max: 2,
            ab_satisfied: false,
            ab_spectral_violation: false,
            minimality: MinimalitySection { methods },
        };
        assert_eq!(mk(vec![base("minimal")]).exit_code(), 0);
        assert_eq!(mk(vec![base("minimal"), base("not_minimal")]).exit_code(), 3);
        assert_eq!(mk(vec![base("inconclusive")]).exit_code(), 4);
    }
}

//! Running campaigns and replaying recorded cases.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::case::{run_case, CaseResult, Verdict};
use crate::config::Config;

pub const SCHEMA: &str = "specht-verify/1";

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped_scale: usize,
    pub invalid: usize,
    /// Verdict counts per check, keyed by check name.
    pub by_check: BTreeMap<String, BTreeMap<String, usize>>,
}

impl Summary {
    pub fn of(cases: &[CaseResult]) -> Summary {
        let mut s = Summary {
            total: cases.len(),
            ..Summary::default()
        };
        for c in cases {
            match c.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::SkippedScale => s.skipped_scale += 1,
                Verdict::Invalid => s.invalid += 1,
            }
            *s.by_check
                .entry(c.spec.check.to_string())
                .or_default()
                .entry(c.verdict.to_string())
                .or_default() += 1;
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub config: Config,
    pub cases: Vec<CaseResult>,
    pub summary: Summary,
}

impl Report {
    /// Process exit code: 1 on any failure, otherwise 2 on any invalid case.
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail > 0 {
            1
        } else if self.summary.invalid > 0 {
            2
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

/// Runs every case of the configuration. Results keep the configuration's
/// case order regardless of scheduling.
pub fn run(config: &Config, timings: bool) -> Report {
    let cases: Vec<CaseResult> = config
        .cases()
        .par_iter()
        .map(|spec| run_case(spec, timings))
        .collect();
    Report {
        schema: SCHEMA.to_string(),
        config: config.clone(),
        summary: Summary::of(&cases),
        cases,
    }
}

/// A recorded case whose rerun disagrees with the record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub index: usize,
    pub description: String,
    pub recorded: Verdict,
    pub rerun: Verdict,
}

/// Reruns every case of a report and lists those whose outcome changed.
/// Timings are ignored.
pub fn replay(report: &Report) -> Vec<Mismatch> {
    let reruns: Vec<CaseResult> = report
        .cases
        .par_iter()
        .map(|c| run_case(&c.spec, false))
        .collect();
    report
        .cases
        .iter()
        .zip(reruns)
        .enumerate()
        .filter(|(_, (old, new))| {
            let mut old = (*old).clone();
            old.millis = None;
            old != *new
        })
        .map(|(index, (old, new))| Mismatch {
            index,
            description: old.spec.describe(),
            recorded: old.verdict,
            rerun: new.verdict,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::case::Check;
    use crate::config::Campaign;

    fn small() -> Config {
        let mut c = Campaign::new(Check::HookMultiple);
        c.primes = vec![2];
        c.n_max = 4;
        Config {
            campaign: vec![c],
            ..Config::default()
        }
    }

    #[test]
    fn runs_and_replays() {
        let report = run(&small(), true);
        assert_eq!(report.summary.total, 6);
        assert_eq!(report.summary.pass, 6);
        assert_eq!(report.exit_code(), 0);
        assert!(replay(&report).is_empty());
        let back: Report = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn tampered_record_is_detected() {
        let mut report = run(&small(), false);
        report.cases[1].verdict = Verdict::Fail;
        let m = replay(&report);
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].index, 1);
        assert_eq!(m[0].rerun, Verdict::Pass);
    }

    #[test]
    fn exit_codes() {
        let mut config = small();
        config.campaign[0].perturb = 1;
        assert_eq!(run(&config, false).exit_code(), 1);
        let mut c = Campaign::new(Check::HookCoprime);
        c.primes = vec![2];
        c.partitions = vec!["2,1,1".parse().unwrap()];
        c.s = vec![1];
        let config = Config {
            campaign: vec![c],
            ..Config::default()
        };
        assert_eq!(run(&config, false).exit_code(), 2);
        assert_eq!(run(&Config::default(), false).exit_code(), 0);
    }
}

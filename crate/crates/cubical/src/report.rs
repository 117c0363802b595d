//! Machine-readable verification reports: one record per executed check,
//! each carrying a theorem tag, an instance descriptor, a status and a
//! witness (or counterexample) payload. Failing records additionally
//! carry a replayable instance payload.

use serde::{Deserialize, Serialize};

/// Outcome of a single check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

/// Bounds and knobs for a verification run. Deterministic given the seed.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub trunc: usize,
    pub max_level: usize,
    pub seed: u64,
    /// Baseline instance count for the randomized suites; individual
    /// suites scale it by their contract (e.g. 2x for the negation laws).
    pub instances: usize,
    pub fuel: usize,
    /// Theorem tags to run; empty means all.
    pub only: Vec<String>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            trunc: 2,
            max_level: 6,
            seed: 0xC0FFEE,
            instances: 100,
            fuel: 100_000,
            only: Vec::new(),
        }
    }
}

impl SuiteConfig {
    pub fn wants(&self, tag: &str) -> bool {
        self.only.is_empty() || self.only.iter().any(|t| t == tag)
    }
}

/// One executed check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckRecord {
    pub theorem: String,
    pub instance: String,
    pub status: Status,
    pub witness: serde_json::Value,
    /// Present on FAIL: enough data to reconstruct and re-run the check.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub replay: Option<serde_json::Value>,
}

impl CheckRecord {
    pub fn pass(theorem: &str, instance: String, witness: serde_json::Value) -> CheckRecord {
        CheckRecord {
            theorem: theorem.to_string(),
            instance,
            status: Status::Pass,
            witness,
            replay: None,
        }
    }

    pub fn fail(
        theorem: &str,
        instance: String,
        witness: serde_json::Value,
        replay: serde_json::Value,
    ) -> CheckRecord {
        CheckRecord {
            theorem: theorem.to_string(),
            instance,
            status: Status::Fail,
            witness,
            replay: Some(replay),
        }
    }
}

/// A full verification report. Records are kept sorted by tag and
/// instance descriptor so report assembly is order-independent.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub config: SuiteConfig,
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn new(config: SuiteConfig) -> Report {
        Report {
            config,
            records: Vec::new(),
        }
    }

    pub fn extend(&mut self, records: Vec<CheckRecord>) {
        self.records.extend(records);
        self.records
            .sort_by(|a, b| (a.theorem.as_str(), a.instance.as_str())
                .cmp(&(b.theorem.as_str(), b.instance.as_str())));
    }

    pub fn has_fail(&self) -> bool {
        self.records.iter().any(|r| r.status == Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    /// Pass/fail/inconclusive counts per theorem tag, in tag order.
    pub fn tally(&self) -> Vec<(String, usize, usize, usize)> {
        let mut out: Vec<(String, usize, usize, usize)> = Vec::new();
        for r in &self.records {
            if out.last().map(|t| t.0.as_str()) != Some(r.theorem.as_str()) {
                out.push((r.theorem.clone(), 0, 0, 0));
            }
            let slot = out.last_mut().expect("just pushed");
            match r.status {
                Status::Pass => slot.1 += 1,
                Status::Fail => slot.2 += 1,
                Status::Inconclusive => slot.3 += 1,
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn records_sort_and_tally() {
        let mut r = Report::new(SuiteConfig::default());
        r.extend(vec![
            CheckRecord::pass("b", "2".into(), json!({})),
            CheckRecord::fail("a", "1".into(), json!({}), json!({"seed": 3})),
            CheckRecord::pass("a", "0".into(), json!({})),
        ]);
        let tags: Vec<&str> = r.records.iter().map(|c| c.theorem.as_str()).collect();
        assert_eq!(tags, vec!["a", "a", "b"]);
        assert!(r.has_fail());
        assert_eq!(r.tally(), vec![("a".into(), 1, 1, 0), ("b".into(), 1, 0, 0)]);
        // failing records carry their replay payload through JSON
        let text = serde_json::to_string(&r).unwrap();
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back.failures().count(), 1);
        assert!(back.failures().all(|c| c.replay.is_some()));
    }

    #[test]
    fn tag_filtering() {
        let cfg = SuiteConfig {
            only: vec!["negpoints".into()],
            ..SuiteConfig::default()
        };
        assert!(cfg.wants("negpoints"));
        assert!(!cfg.wants("cube"));
        assert!(SuiteConfig::default().wants("anything"));
    }
}

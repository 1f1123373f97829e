//! Structured verification reports.
//!
//! Every checker in this crate reports violations as data rather than
//! booleans: each violation names the law that failed, the degrees involved,
//! and a printable witness. Reports state whether the check was exhaustive
//! at its bound or sampled.

use serde::{Deserialize, Serialize};
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// Exhaustive at the stated bound, no violations.
    Pass,
    /// At least one violation, with witnesses listed.
    Fail,
    /// Sampled (or otherwise non-exhaustive) and no violations found.
    Truncated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Sampled,
}

/// A single law violation with a concrete witness.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub law: String,
    pub degrees: Vec<usize>,
    pub witness: String,
}

impl Violation {
    pub fn new(law: impl Into<String>, degrees: &[usize], witness: impl Into<String>) -> Self {
        Violation {
            law: law.into(),
            degrees: degrees.to_vec(),
            witness: witness.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    pub bound: usize,
    pub status: Status,
    pub mode: Mode,
    pub violations: Vec<Violation>,
    pub elapsed_ms: u64,
}

impl Report {
    /// Assembles a report, sorting violations canonically so output is
    /// independent of execution order.
    pub fn new(
        subject: impl Into<String>,
        bound: usize,
        mode: Mode,
        mut violations: Vec<Violation>,
        started: Instant,
    ) -> Self {
        violations.sort();
        violations.dedup();
        let status = if !violations.is_empty() {
            Status::Fail
        } else if mode == Mode::Exhaustive {
            Status::Pass
        } else {
            Status::Truncated
        };
        Report {
            subject: subject.into(),
            bound,
            status,
            mode,
            violations,
            elapsed_ms: started.elapsed().as_millis() as u64,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Merges several reports into one (e.g. the sub-checks of a suite).
    pub fn merge(subject: impl Into<String>, bound: usize, parts: Vec<Report>) -> Report {
        let mode = if parts.iter().all(|r| r.mode == Mode::Exhaustive) {
            Mode::Exhaustive
        } else {
            Mode::Sampled
        };
        let elapsed: u64 = parts.iter().map(|r| r.elapsed_ms).sum();
        let mut violations: Vec<Violation> =
            parts.into_iter().flat_map(|r| r.violations).collect();
        violations.sort();
        violations.dedup();
        let status = if !violations.is_empty() {
            Status::Fail
        } else if mode == Mode::Exhaustive {
            Status::Pass
        } else {
            Status::Truncated
        };
        Report {
            subject: subject.into(),
            bound,
            status,
            mode,
            violations,
            elapsed_ms: elapsed,
        }
    }

    /// Human-readable one-screen rendering.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{}: {} (bound {}, {}, {} ms)\n",
            self.subject,
            match self.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Truncated => "pass (sampled)",
            },
            self.bound,
            match self.mode {
                Mode::Exhaustive => "exhaustive",
                Mode::Sampled => "sampled",
            },
            self.elapsed_ms,
        ));
        for v in &self.violations {
            out.push_str(&format!(
                "  violation [{}] degrees {:?}: {}\n",
                v.law, v.degrees, v.witness
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fail_iff_violations_nonempty() {
        let t = Instant::now();
        let r = Report::new("x", 3, Mode::Exhaustive, vec![], t);
        assert_eq!(r.status, Status::Pass);
        let r = Report::new(
            "x",
            3,
            Mode::Exhaustive,
            vec![Violation::new("law", &[1], "w")],
            t,
        );
        assert_eq!(r.status, Status::Fail);
        let r = Report::new("x", 3, Mode::Sampled, vec![], t);
        assert_eq!(r.status, Status::Truncated);
    }

    #[test]
    fn violations_sorted_and_deduped() {
        let t = Instant::now();
        let v1 = Violation::new("b", &[2], "w2");
        let v2 = Violation::new("a", &[1], "w1");
        let r = Report::new("x", 3, Mode::Exhaustive, vec![v1.clone(), v2.clone(), v1.clone()], t);
        assert_eq!(r.violations, vec![v2, v1]);
    }
}

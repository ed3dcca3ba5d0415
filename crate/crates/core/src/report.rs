//! Structured verification reports.

use std::fmt;

use serde::{Deserialize, Serialize};

/// One component of an entry's parameter tuple.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Param {
    Int(i64),
    Text(String),
}

impl From<i64> for Param {
    fn from(v: i64) -> Self {
        Param::Int(v)
    }
}

impl From<usize> for Param {
    fn from(v: usize) -> Self {
        Param::Int(v as i64)
    }
}

impl From<u32> for Param {
    fn from(v: u32) -> Self {
        Param::Int(v as i64)
    }
}

impl From<i32> for Param {
    fn from(v: i32) -> Self {
        Param::Int(v as i64)
    }
}

impl From<&str> for Param {
    fn from(v: &str) -> Self {
        Param::Text(v.to_string())
    }
}

impl From<String> for Param {
    fn from(v: String) -> Self {
        Param::Text(v)
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Int(v) => write!(f, "{v}"),
            Param::Text(s) => f.write_str(s),
        }
    }
}

/// Build a parameter vector from heterogeneous values.
#[macro_export]
macro_rules! params {
    ($($x:expr),* $(,)?) => { vec![$($crate::report::Param::from($x)),*] };
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// A known disagreement with a published closed form; never a failure.
    MismatchDocumented,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::MismatchDocumented => "mismatch-documented",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub lemma: String,
    pub params: Vec<Param>,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Entry {
    pub fn new(lemma: &str, params: Vec<Param>, ok: bool, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        Entry {
            lemma: lemma.to_string(),
            params,
            status: if ok { Status::Pass } else { Status::Fail },
            lhs: lhs.into(),
            rhs: rhs.into(),
            note: None,
        }
    }

    /// Pass iff the rendered sides are equal.
    pub fn compare(lemma: &str, params: Vec<Param>, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        let (l, r) = (lhs.into(), rhs.into());
        let ok = l == r;
        Self::new(lemma, params, ok, l, r)
    }

    /// An entry for a computation that raised an error.
    pub fn error(lemma: &str, params: Vec<Param>, err: impl fmt::Display) -> Self {
        let mut e = Self::new(lemma, params, false, "", "");
        e.note = Some(format!("error: {err}"));
        e
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }

    fn key(&self) -> (&str, &[Param]) {
        (&self.lemma, &self.params)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub tool_version: String,
    /// Seconds since the Unix epoch; omitted for reproducible output.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    pub entries: Vec<Entry>,
}

impl VerificationReport {
    pub fn new(suite: &str) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            tool_version: crate::VERSION.to_string(),
            timestamp: None,
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, e: Entry) {
        self.entries.push(e);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.entries.extend(other.entries);
    }

    /// Sort entries by lemma id, then parameters.
    pub fn finalize(mut self) -> Self {
        self.entries.sort_by(|a, b| a.key().cmp(&b.key()));
        self
    }

    pub fn stamp_now(&mut self) {
        self.timestamp = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .ok()
            .map(|d| d.as_secs());
    }

    pub fn count(&self, status: Status) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    /// No entry failed (documented mismatches are allowed).
    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// One line per entry plus a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let ps: Vec<String> = e.params.iter().map(|p| p.to_string()).collect();
            out.push_str(&format!("{:<20} {:<28} {}", e.status, e.lemma, ps.join(",")));
            if e.status != Status::Pass {
                out.push_str(&format!("  lhs={} rhs={}", e.lhs, e.rhs));
                if let Some(n) = &e.note {
                    out.push_str(&format!("  ({n})"));
                }
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "suite {}: {} entries, {} pass, {} fail, {} mismatch-documented\n",
            self.suite,
            self.entries.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::MismatchDocumented)
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_and_json() {
        let mut r = VerificationReport::new("demo");
        r.push(Entry::compare("b", params![2, 1], "x", "x"));
        r.push(Entry::compare("a", params![10], "x", "y"));
        r.push(Entry::compare("a", params![2], "x", "x"));
        let r = r.finalize();
        let keys: Vec<_> = r.entries.iter().map(|e| (e.lemma.clone(), e.params.clone())).collect();
        assert_eq!(keys[0], ("a".to_string(), params![2]));
        assert_eq!(keys[1], ("a".to_string(), params![10]));
        assert!(!r.passed());
        let s = r.to_json_pretty();
        assert!(s.contains("\"fail\""));
        let back: VerificationReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn mismatch_documented_is_not_failure() {
        let mut r = VerificationReport::new("demo");
        r.push(Entry::compare("x", params![], "1", "2").with_status(Status::MismatchDocumented));
        assert!(r.passed());
        assert!(r.to_json_pretty().contains("mismatch-documented"));
    }
}

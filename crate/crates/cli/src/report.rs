//! Machine-readable run reports. Exit status is nonzero iff a check fails.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Partial,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Partial => "partial",
            Status::Skipped => "skipped",
        }
    }
}

/// Where an expected value comes from: a value printed in the literature
/// the harness reproduces, a value computed independently and frozen, or a
/// value that holds by construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Printed,
    Computed,
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub computed: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<Source>,
}

impl Check {
    /// Passes iff `computed == expected` after formatting.
    pub fn compare(name: impl Into<String>, computed: impl ToString, expected: impl ToString, source: Source) -> Self {
        let (c, e) = (computed.to_string(), expected.to_string());
        Check {
            name: name.into(),
            status: if c == e { Status::Pass } else { Status::Fail },
            computed: c,
            expected: Some(e),
            source: Some(source),
        }
    }

    /// A boolean property; `detail` is reported as the computed value.
    pub fn holds(name: impl Into<String>, ok: bool, detail: impl ToString) -> Self {
        Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            computed: detail.to_string(),
            expected: None,
            source: None,
        }
    }

    /// Records a value without asserting it.
    pub fn note(name: impl Into<String>, computed: impl ToString, expected: Option<(String, Source)>) -> Self {
        let (expected, source) = match expected {
            Some((e, s)) => (Some(e), Some(s)),
            None => (None, None),
        };
        Check {
            name: name.into(),
            status: Status::Partial,
            computed: computed.to_string(),
            expected,
            source,
        }
    }

    pub fn skipped(name: impl Into<String>, why: impl ToString) -> Self {
        Check {
            name: name.into(),
            status: Status::Skipped,
            computed: why.to_string(),
            expected: None,
            source: None,
        }
    }

    pub fn failed(name: impl Into<String>, why: impl ToString) -> Self {
        Check {
            name: name.into(),
            status: Status::Fail,
            computed: why.to_string(),
            expected: None,
            source: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Section {
    pub name: String,
    pub checks: Vec<Check>,
}

impl Section {
    /// Fail if any check fails; skipped if everything was skipped; otherwise
    /// pass. Recorded-only values do not affect the outcome.
    pub fn status(&self) -> Status {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else if !self.checks.is_empty() && self.checks.iter().all(|c| c.status == Status::Skipped) {
            Status::Skipped
        } else if self.checks.iter().any(|c| c.status == Status::Skipped) {
            Status::Partial
        } else {
            Status::Pass
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub sections: Vec<Section>,
}

impl RunReport {
    pub fn failed(&self) -> bool {
        self.sections.iter().any(|s| s.status() == Status::Fail)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.sections {
            out.push_str(&format!("[{}] {}\n", s.status().as_str(), s.name));
            for c in &s.checks {
                out.push_str(&format!("  {:<8} {}: {}", c.status.as_str(), c.name, c.computed));
                if let Some(e) = &c.expected {
                    let src = c.source.map_or(String::new(), |s| format!(" ({})", serde_json::to_value(s).unwrap().as_str().unwrap_or("")));
                    out.push_str(&format!(" (expected {e}{src})"));
                }
                out.push('\n');
            }
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("section,check,status,computed,expected,source\n");
        for s in &self.sections {
            for c in &s.checks {
                let src = c.source.map(|s| serde_json::to_value(s).unwrap().as_str().unwrap_or("").to_string());
                let row = [
                    s.name.as_str(),
                    c.name.as_str(),
                    c.status.as_str(),
                    c.computed.as_str(),
                    c.expected.as_deref().unwrap_or(""),
                    src.as_deref().unwrap_or(""),
                ];
                out.push_str(&row.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(","));
                out.push('\n');
            }
        }
        out
    }
}

pub fn csv_field(f: &str) -> String {
    if f.contains([',', '"', '\n']) {
        format!("\"{}\"", f.replace('"', "\"\""))
    } else {
        f.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statuses() {
        let s = Section {
            name: "x".into(),
            checks: vec![Check::compare("a", 3, 3, Source::Printed), Check::note("b", 64, None)],
        };
        assert_eq!(s.status(), Status::Pass);
        let t = Section {
            name: "y".into(),
            checks: vec![Check::skipped("c", "time limit")],
        };
        assert_eq!(t.status(), Status::Skipped);
        let r = RunReport {
            command: vec![],
            sections: vec![s, t],
        };
        assert!(!r.failed());
        assert!(r.to_csv().lines().count() == 4);
        assert!(csv_field("a,b") == "\"a,b\"");
    }
}

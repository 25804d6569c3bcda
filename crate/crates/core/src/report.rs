//! Verification reports shared by the suites and the command-line tool.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Where an expected value comes from: a published table or statement, an
/// independent computation, or a definition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Paper,
    Derived,
    Trivial,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Paper => "paper",
            Provenance::Derived => "derived",
            Provenance::Trivial => "trivial",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Item {
    pub id: String,
    /// Locator of the claim; `"derived"` for computed expectations.
    pub anchor: String,
    pub status: Status,
    pub computed: String,
    pub expected: String,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub items: Vec<Item>,
    pub version: String,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            items: Vec::new(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    /// Adds an item that passes iff `computed == expected` as strings.
    pub fn check(
        &mut self,
        id: impl Into<String>,
        anchor: impl Into<String>,
        provenance: Provenance,
        computed: impl fmt::Display,
        expected: impl fmt::Display,
    ) -> &mut Self {
        let computed = computed.to_string();
        let expected = expected.to_string();
        let status = if computed == expected { Status::Pass } else { Status::Fail };
        self.push(id, anchor, provenance, status, computed, expected)
    }

    /// Adds an item that passes iff `holds`; `expected` describes the claim.
    pub fn assert(
        &mut self,
        id: impl Into<String>,
        anchor: impl Into<String>,
        provenance: Provenance,
        holds: bool,
        computed: impl fmt::Display,
        expected: impl fmt::Display,
    ) -> &mut Self {
        let status = if holds { Status::Pass } else { Status::Fail };
        self.push(id, anchor, provenance, status, computed.to_string(), expected.to_string())
    }

    /// Records an error raised while computing a value as a failed item.
    pub fn error(&mut self, id: impl Into<String>, anchor: impl Into<String>, provenance: Provenance, err: &crate::Error) -> &mut Self {
        self.push(id, anchor, provenance, Status::Fail, format!("error: {err}"), "no error".into())
    }

    fn push(
        &mut self,
        id: impl Into<String>,
        anchor: impl Into<String>,
        provenance: Provenance,
        status: Status,
        computed: String,
        expected: String,
    ) -> &mut Self {
        let mut anchor = anchor.into();
        if provenance == Provenance::Derived && anchor.is_empty() {
            anchor = "derived".into();
        }
        self.items.push(Item {
            id: id.into(),
            anchor,
            status,
            computed,
            expected,
            provenance,
        });
        self
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Item> {
        self.items.iter().filter(|i| i.status == Status::Fail)
    }

    pub fn extend(&mut self, other: Report) {
        self.items.extend(other.items);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report fields serialize")
    }

    /// Aligned plain-text table.
    pub fn to_text(&self) -> String {
        let w_id = self.items.iter().map(|i| i.id.chars().count()).max().unwrap_or(2).max(2);
        let w_c = self
            .items
            .iter()
            .map(|i| i.computed.chars().count())
            .max()
            .unwrap_or(8)
            .clamp(8, 40);
        let mut out = format!("suite {} (version {})\n", self.suite, self.version);
        for i in &self.items {
            let status = match i.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            let source = if i.anchor == "derived" {
                i.provenance.to_string()
            } else {
                format!("{}: {}", i.provenance, i.anchor)
            };
            out.push_str(&format!(
                "{status}  {:<w_id$}  {:<w_c$}  expected {}  [{source}]\n",
                i.id, i.computed, i.expected
            ));
        }
        let failed = self.failures().count();
        out.push_str(&format!(
            "{} items, {} passed, {} failed\n",
            self.items.len(),
            self.items.len() - failed,
            failed
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_key_order_is_stable() {
        let mut r = Report::new("demo");
        r.check("a", "", Provenance::Derived, 1, 1);
        let j = r.to_json();
        assert!(j.starts_with(r#"{"suite":"demo","items":[{"id":"a","anchor":"derived","status":"pass","computed":"1","expected":"1","provenance":"derived"}],"version":"#));
    }

    #[test]
    fn mismatch_fails() {
        let mut r = Report::new("demo");
        r.check("a", "x", Provenance::Paper, "E8", "E6");
        assert!(!r.passed());
        assert!(r.to_text().contains("FAIL"));
    }
}

//! Structured pass/fail reports shared by every checker.
//!
//! A report is a named list of items; failures carry a counterexample and
//! informational items may carry extra detail (witness sizes, modes).  The
//! JSON rendering is deterministic: items keep insertion order and object
//! keys are sorted by serde_json.

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Info,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckItem {
    pub item: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub check: String,
    pub items: Vec<CheckItem>,
}

impl Report {
    pub fn new(check: impl Into<String>) -> Self {
        Report {
            check: check.into(),
            items: Vec::new(),
        }
    }

    pub fn pass(&mut self, item: impl Into<String>) {
        self.items.push(CheckItem {
            item: item.into(),
            status: CheckStatus::Pass,
            counterexample: None,
            detail: None,
        });
    }

    pub fn fail(&mut self, item: impl Into<String>, counterexample: Value) {
        self.items.push(CheckItem {
            item: item.into(),
            status: CheckStatus::Fail,
            counterexample: Some(counterexample),
            detail: None,
        });
    }

    pub fn info(&mut self, item: impl Into<String>, detail: Value) {
        self.items.push(CheckItem {
            item: item.into(),
            status: CheckStatus::Info,
            counterexample: None,
            detail: Some(detail),
        });
    }

    /// Records `pass` or `fail` depending on whether a counterexample was
    /// found.
    pub fn verdict(&mut self, item: impl Into<String>, counterexample: Option<Value>) {
        match counterexample {
            None => self.pass(item),
            Some(cx) => self.fail(item, cx),
        }
    }

    /// True when no item failed.
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.status != CheckStatus::Fail)
    }

    pub fn item(&self, name: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.item == name)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_passes_iff_no_failures() {
        let mut r = Report::new("demo");
        r.pass("a");
        r.info("b", Value::from(3));
        assert!(r.passed());
        r.fail("c", Value::from("witness"));
        assert!(!r.passed());
        assert_eq!(r.item("c").unwrap().status, CheckStatus::Fail);
    }

    #[test]
    fn json_has_required_fields() {
        let mut r = Report::new("demo");
        r.fail("law", serde_json::json!({"pi": ["p"]}));
        let v = r.to_json();
        assert_eq!(v["items"][0]["item"], "law");
        assert_eq!(v["items"][0]["status"], "fail");
        assert!(v["items"][0]["counterexample"].is_object());
    }
}

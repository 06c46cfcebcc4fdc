use serde::Serialize;
use serde_json::Value;

/// One expected-versus-observed comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub description: String,
    pub expected: Value,
    pub observed: Value,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nodes: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<CheckRecord>,
    /// All checks passed.
    pub pass: bool,
}

impl SuiteReport {
    pub fn new(suite: &str, seed: u64) -> Self {
        Self { suite: suite.to_string(), seed, checks: Vec::new(), pass: true }
    }

    pub fn check<T: Serialize + PartialEq>(&mut self, description: impl Into<String>, expected: T, observed: T) {
        self.record(description, expected, observed, None);
    }

    pub fn check_with_nodes<T: Serialize + PartialEq>(
        &mut self,
        description: impl Into<String>,
        expected: T,
        observed: T,
        nodes: u64,
    ) {
        self.record(description, expected, observed, Some(nodes));
    }

    fn record<T: Serialize + PartialEq>(&mut self, description: impl Into<String>, expected: T, observed: T, nodes: Option<u64>) {
        let pass = expected == observed;
        self.pass &= pass;
        self.checks.push(CheckRecord {
            description: description.into(),
            expected: serde_json::to_value(expected).expect("check values serialize"),
            observed: serde_json::to_value(observed).expect("check values serialize"),
            pass,
            nodes,
        });
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_tracks_every_check() {
        let mut r = SuiteReport::new("x", 0);
        r.check("a", 1, 1);
        assert!(r.pass);
        r.check_with_nodes("b", true, false, 7);
        assert!(!r.pass);
        r.check("c", "s", "s");
        assert!(!r.pass);
        assert_eq!(r.passed(), 2);
        assert_eq!(r.checks[1].nodes, Some(7));
    }
}

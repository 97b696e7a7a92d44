/// Outcome of one named check inside a verification run.
#[derive(Clone, Debug)]
pub struct Check {
    pub label: String,
    pub pass: bool,
    pub detail: Option<String>,
}

/// Accumulates pass/fail results of a verification run for reporting.
#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    pub topic: String,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(topic: impl Into<String>) -> Self {
        Self {
            topic: topic.into(),
            checks: Vec::new(),
        }
    }

    pub fn check(&mut self, label: impl Into<String>, pass: bool) {
        self.checks.push(Check {
            label: label.into(),
            pass,
            detail: None,
        });
    }

    pub fn check_with(&mut self, label: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            label: label.into(),
            pass,
            detail: Some(detail.into()),
        });
    }

    pub fn merge(&mut self, other: VerificationReport) {
        for mut c in other.checks {
            c.label = format!("{}/{}", other.topic, c.label);
            self.checks.push(c);
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {}::{}", self.topic, c.label));
            if let Some(d) = &c.detail {
                out.push_str(&format!(" ({d})"));
            }
            out.push('\n');
        }
        let verdict = if self.all_pass() { "ok" } else { "FAILED" };
        out.push_str(&format!(
            "{}: {} checks, {}\n",
            self.topic,
            self.checks.len(),
            verdict
        ));
        out
    }

    pub fn render_kv(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{}.{}={}\n",
                self.topic,
                c.label,
                if c.pass { "pass" } else { "fail" }
            ));
        }
        out.push_str(&format!(
            "{}.ok={}\n",
            self.topic,
            if self.all_pass() { "true" } else { "false" }
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_flip_the_verdict() {
        let mut r = VerificationReport::new("t");
        r.check("a", true);
        assert!(r.all_pass());
        r.check_with("b", false, "witness");
        assert!(!r.all_pass());
        assert!(r.render_text().contains("FAIL t::b (witness)"));
        assert!(r.render_kv().contains("t.ok=false"));
    }
}

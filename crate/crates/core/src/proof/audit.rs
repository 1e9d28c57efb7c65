use super::{CheckReport, Level, ProofScript};
use crate::model::Structure;
use crate::semantics::{consequence, ConsequenceKind, Counterexample, SemanticsError};

impl From<Level> for ConsequenceKind {
    fn from(level: Level) -> ConsequenceKind {
        match level {
            Level::Strong => ConsequenceKind::Strong,
            Level::Local => ConsequenceKind::Local,
            Level::Global => ConsequenceKind::Global,
        }
    }
}

/// An accepted line that is not a consequence of the hypotheses on some
/// structure of the suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub line: usize,
    pub counterexample: Counterexample,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub kind: ConsequenceKind,
    pub lines_checked: usize,
    pub structures: usize,
    pub violations: Vec<Violation>,
}

impl AuditReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every line the report accepted against the consequence relation
/// matching the report's level, over every structure of `suite`.
pub fn audit_soundness(
    script: &ProofScript,
    report: &CheckReport,
    suite: &[Structure],
) -> Result<AuditReport, SemanticsError> {
    let kind = ConsequenceKind::from(report.level);
    let gamma = script.hypothesis_patterns();
    let mut violations = Vec::new();
    let mut lines_checked = 0;
    for (i, line) in script.lines.iter().enumerate() {
        if !report.is_accepted(i + 1) {
            continue;
        }
        lines_checked += 1;
        let verdict = consequence(kind, &gamma, std::slice::from_ref(&line.pattern), suite)?;
        if let Some(counterexample) = verdict.counterexample {
            violations.push(Violation { line: i + 1, counterexample });
        }
    }
    Ok(AuditReport { kind, lines_checked, structures: suite.len(), violations })
}

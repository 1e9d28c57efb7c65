//! Checks a proof script, reports its level and audits it semantically.

use aml::model::{enumerate_structures, Structure, SuiteConfig};
use aml::proof::{audit_soundness, check_proof, parse_proof};
use aml::Signature;

const SCRIPT: &str = "\
hyp h := x0 -> c
1: x0 -> c ; hyp h
2: x0 d -> c d ; frame.l 1
3: (c \\/ d -> d) ; hyp k
4: (mu X0 . c \\/ X0) -> d ; kt 3
hyp k := c \\/ d -> d
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sig = Signature::new(["c", "d"])?;
    let script = parse_proof(SCRIPT, &sig)?;
    let report = check_proof(&script);
    print!("{report}");
    let suite: Vec<Structure> = enumerate_structures(&sig, &SuiteConfig::new(2)).collect();
    let audit = audit_soundness(&script, &report, &suite)?;
    println!(
        "audit: {} violations over {} lines and {} structures ({} consequence)",
        audit.violations.len(),
        audit.lines_checked,
        audit.structures,
        audit.kind
    );
    Ok(())
}

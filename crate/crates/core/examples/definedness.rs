//! Definedness operators agree with their closed forms on every
//! definedness structure.

use aml::model::{enumerate_structures, SuiteConfig, Valuation};
use aml::semantics::{eval_definedness, DefinednessOp};
use aml::{parse, Mode, Signature};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sig = Signature::new(["c", "def"])?;
    let c = parse("c", &sig, Mode::Sugar)?;
    let ops = [
        ("ceil c", DefinednessOp::Ceil(c.clone())),
        ("floor c", DefinednessOp::Floor(c.clone())),
        ("c = x1", DefinednessOp::Equals(c.clone(), parse("x1", &sig, Mode::Sugar)?)),
        ("x0 in c", DefinednessOp::Member(0, c)),
    ];
    let mut structures = 0;
    for s in enumerate_structures(&sig, &SuiteConfig::new(2).definedness(true)) {
        structures += 1;
        for a in 0..s.size() {
            let e = Valuation::new().with_element(0, a).with_element(1, (a + 1) % s.size());
            for (_, op) in &ops {
                let v = eval_definedness(&s, &e, op)?;
                assert_eq!(v.desugared, v.closed_form);
            }
        }
    }
    let names: Vec<&str> = ops.iter().map(|(n, _)| *n).collect();
    println!("{} agree on all {structures} definedness structures", names.join(", "));
    Ok(())
}

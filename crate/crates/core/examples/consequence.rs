//! Compares the three consequence relations on a generated suite.

use aml::model::{enumerate_structures, Structure, SuiteConfig};
use aml::semantics::{consequence, ConsequenceKind};
use aml::{parse, render, Mode, Signature};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sig = Signature::new(["c", "d"])?;
    let suite: Vec<Structure> = enumerate_structures(&sig, &SuiteConfig::new(2)).collect();
    let gamma = vec![parse("x0 -> c", &sig, Mode::Sugar)?];
    for conclusion in ["x0 -> c", "d x0 -> d c", "forall x0 . x0 -> c"] {
        let delta = vec![parse(conclusion, &sig, Mode::Sugar)?];
        print!("x0 -> c  |=  {:<20}", render(&delta[0], Mode::Sugar));
        for kind in [ConsequenceKind::Strong, ConsequenceKind::Local, ConsequenceKind::Global] {
            let v = consequence(kind, &gamma, &delta, &suite)?;
            print!(" {kind}:{}", if v.holds { "yes" } else { "no " });
        }
        println!();
    }
    println!("({} structures)", suite.len());
    Ok(())
}

//! Propositional tautology checking through skeletons.

use aml::semantics::{is_tautology, Skeleton};
use aml::{parse, Mode, Signature};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sig = Signature::new(["c", "d"])?;
    for text in [
        "c \\/ !c",
        "(c -> d) -> !d -> !c",
        "(exists x0 . c x0) -> (exists x0 . c x0) \\/ d",
        "(c -> d) -> d -> c",
        "exists x0 . x0",
    ] {
        let p = parse(text, &sig, Mode::Sugar)?;
        println!("{text:<48} atoms {:<2} tautology {}", Skeleton::of(&p).atoms.len(), is_tautology(&p)?);
    }
    Ok(())
}

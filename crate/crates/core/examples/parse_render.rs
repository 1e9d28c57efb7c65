//! Reads a pattern in sugar syntax, prints its core token string and reads
//! that back.

use aml::{parse, render, Mode, Signature};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sig = Signature::new(["c", "d"])?;
    let text = "forall x0 . (x0 -> c) /\\ exists x1 . x1 d <-> mu X0 . c \\/ X0";
    let p = parse(text, &sig, Mode::Sugar)?;
    let core = render(&p, Mode::Core);
    println!("sugar: {}", render(&p, Mode::Sugar));
    println!("core:  {core}");
    println!("size:  {} symbols", p.len());
    assert_eq!(parse(&core, &sig, Mode::Core)?, p);
    Ok(())
}

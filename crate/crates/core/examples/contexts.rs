//! Application contexts: plugging, decomposition and singleton matching.

use aml::context::{decompose, find_singleton, Context};
use aml::{parse, render, Mode, Signature};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sig = Signature::new(["c", "d"])?;
    let ctx = Context::parse("c ([] d)", &sig)?;
    let hole = parse("x0 \\/ x1", &sig, Mode::Sugar)?;
    let plugged = ctx.plug(&hole);
    println!("C = {ctx}, C[x0 \\/ x1] = {}", render(&plugged, Mode::Sugar));
    for found in decompose(&plugged, &hole) {
        println!("decomposes with context {found}");
    }
    let phi = parse("!(c (x0 /\\ d) /\\ (x0 /\\ !d))", &sig, Mode::Sugar)?;
    if let Some((x, body, c1, c2)) = find_singleton(&phi) {
        println!("singleton instance: x{x}, body {}, contexts {c1} and {c2}", render(&body, Mode::Sugar));
    }
    Ok(())
}

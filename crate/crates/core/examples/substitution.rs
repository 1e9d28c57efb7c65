//! Plain substitution, the free-for test and capture-avoiding substitution.

use aml::substitution::{is_free_for, subst_capture_avoiding, subst_free};
use aml::{parse, render, Mode, Signature, VarRef};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sig = Signature::new(["c"])?;
    let phi = parse("exists x1 . x0 x1", &sig, Mode::Sugar)?;
    let delta = parse("x1 c", &sig, Mode::Sugar)?;
    let x0 = VarRef::Element(0);
    println!("phi   = {}", render(&phi, Mode::Sugar));
    println!("delta = {}", render(&delta, Mode::Sugar));
    println!("delta free for x0 in phi: {}", is_free_for(x0, &delta, &phi));
    println!("plain:            {}", render(&subst_free(&phi, x0, &delta), Mode::Sugar));
    println!("capture-avoiding: {}", render(&subst_capture_avoiding(&phi, x0, &delta), Mode::Sugar));
    Ok(())
}

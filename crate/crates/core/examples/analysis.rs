//! Free variables, occurrence kinds and polarity of a pattern.

use aml::syntax::{is_negative_in, is_positive_in, occurrence_kind, tokens};
use aml::{parse, Mode, Signature};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sig = Signature::new(["c"])?;
    let p = parse("(X0 -> c) -> exists x0 . x0 X1 /\\ mu X1 . X1", &sig, Mode::Sugar)?;
    let fv = p.free_vars();
    println!("pattern: {}", tokens(&p));
    println!("free element variables: {:?}", fv.element);
    println!("free set variables:     {:?}", fv.set);
    for (k, tok) in tokens(&p).0.iter().enumerate() {
        println!("  {k:>2} {tok:<6} {:?}", occurrence_kind(&p, k)?);
    }
    for x in [0, 1] {
        println!("X{x}: positive {}, negative {}", is_positive_in(&p, x), is_negative_in(&p, x));
    }
    Ok(())
}

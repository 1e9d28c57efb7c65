//! Evaluates patterns in a two-element structure, including fixpoints.

use std::collections::BTreeMap;

use aml::model::{kt_lfp, ElemSet, SetFunction, Structure, Valuation};
use aml::semantics::{evaluate, evaluate_nu_direct};
use aml::{parse, render, Mode, Signature};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sig = Signature::new(["c", "d"])?;
    // a.a = {a}, a.b = {b}, b.b = {a, b}
    let app = vec![ElemSet::singleton(0), ElemSet::singleton(1), ElemSet::EMPTY, ElemSet::full(2)];
    let consts = BTreeMap::from([("c".to_string(), ElemSet::singleton(0)), ("d".to_string(), ElemSet::singleton(1))]);
    let s = Structure::new(vec!["a".into(), "b".into()], app, consts)?;
    let e = Valuation::new().with_element(0, 1);
    for text in ["c d", "d d", "exists x0 . x0 x0", "mu X0 . d \\/ c X0", "nu X0 . X0 /\\ c", "x0 -> c"] {
        let p = parse(text, &sig, Mode::Sugar)?;
        println!("{:<24} = {}", render(&p, Mode::Sugar), s.format_set(evaluate(&s, &e, &p)?));
    }
    let body = parse("X0 /\\ d", &sig, Mode::Sugar)?;
    println!("nu X0 . X0 /\\ d computed directly = {}", s.format_set(evaluate_nu_direct(&s, &e, 0, &body)?));
    let f = SetFunction::new(2, |b| s.apply_sets(s.constant("c").unwrap(), b).union(ElemSet::singleton(1)));
    println!("least fixpoint of B -> c B u {{b}} = {}", s.format_set(kt_lfp(&f)?));
    Ok(())
}

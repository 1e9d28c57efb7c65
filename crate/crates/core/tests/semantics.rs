mod common;

use std::collections::BTreeMap;

use aml::model::{enumerate_structures, ElemSet, Structure, SuiteConfig, Valuation};
use aml::semantics::{
    consequence, eval_definedness, evaluate, evaluate_nu_direct, evaluate_with, falsifying_valuation, is_predicate,
    is_tautology, models, satisfies, ConsequenceKind, DefinednessOp, EvalOptions, MuStrategy, SemanticsError,
};
use aml::{parse, Mode, Pattern, Signature};
use common::*;
use proptest::prelude::*;

fn sig() -> Signature {
    Signature::new(["c", "d", "def"]).unwrap()
}

fn p(text: &str) -> Pattern {
    parse(text, &sig(), Mode::Sugar).unwrap()
}

/// Two elements, `0·0 = {0}`, everything else empty, `c = {0}`.
fn small() -> Structure {
    let app = vec![ElemSet::singleton(0), ElemSet::EMPTY, ElemSet::EMPTY, ElemSet::EMPTY];
    Structure::numbered(
        2,
        app,
        BTreeMap::from([("c".into(), ElemSet::singleton(0)), ("d".into(), ElemSet::singleton(1))]),
    )
}

fn suite(max: usize) -> Vec<Structure> {
    enumerate_structures(&Signature::new(["c", "d"]).unwrap(), &SuiteConfig::new(max).samples(20).seed(5)).collect()
}

fn arb_structure() -> impl Strategy<Value = Structure> {
    (1usize..=3).prop_flat_map(|n| {
        let mask = (1u64 << n) - 1;
        (prop::collection::vec(any::<u64>(), n * n), any::<u64>(), any::<u64>()).prop_map(move |(cells, c, d)| {
            let app = cells.into_iter().map(|b| ElemSet(b & mask)).collect();
            let consts = BTreeMap::from([
                ("c".into(), ElemSet(c & mask)),
                ("d".into(), ElemSet(d & mask)),
                ("def".into(), ElemSet(c & d & mask)),
            ]);
            Structure::numbered(n, app, consts)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn mu_strategies_agree(s in arb_structure(), body in arb_pattern(), seed in any::<u64>()) {
        let body = aml::substitution::subst_free(&body, aml::VarRef::Element(0), &Pattern::constant("c"));
        let body = aml::substitution::subst_free(&body, aml::VarRef::Element(1), &Pattern::constant("d"));
        let body = aml::substitution::subst_free(&body, aml::VarRef::Element(2), &Pattern::constant("c"));
        let p = Pattern::mu(0, body.clone());
        let n = s.size();
        let e = Valuation::new().with_set(1, ElemSet(seed & ((1 << n) - 1))).with_set(2, ElemSet((seed >> 8) & ((1 << n) - 1)));
        let auto = evaluate(&s, &e, &p);
        let def = evaluate_with(&s, &e, &p, &EvalOptions { strategy: MuStrategy::Definition, ..EvalOptions::default() });
        prop_assert_eq!(auto, def);
        let nu = evaluate(&s, &e, &Pattern::nu(0, body.clone()));
        prop_assert_eq!(nu, evaluate_nu_direct(&s, &e, 0, &body));
    }

    #[test]
    fn satisfaction_is_fullness(s in arb_structure(), q in arb_pattern()) {
        let vars = q.free_vars();
        let mut all = true;
        for e in all_valuations(&s, &vars) {
            let v = evaluate(&s, &e, &q).unwrap();
            prop_assert_eq!(satisfies(&s, &e, &q).unwrap(), v == s.full());
            all &= v == s.full();
        }
        prop_assert_eq!(models(&s, &q).unwrap(), all);
        prop_assert_eq!(falsifying_valuation(&s, &q).unwrap().is_none(), all);
    }
}

#[test]
fn evaluation_examples() {
    let s = small();
    let e = Valuation::new().with_element(0, 1).with_set(0, ElemSet::singleton(1));
    assert_eq!(evaluate(&s, &e, &p("c")).unwrap(), ElemSet::singleton(0));
    assert_eq!(evaluate(&s, &e, &p("x0")).unwrap(), ElemSet::singleton(1));
    assert_eq!(evaluate(&s, &e, &p("c c")).unwrap(), ElemSet::singleton(0));
    assert_eq!(evaluate(&s, &e, &p("c x0")).unwrap(), ElemSet::EMPTY);
    assert_eq!(evaluate(&s, &e, &p("!c")).unwrap(), ElemSet::singleton(1));
    assert_eq!(evaluate(&s, &e, &Pattern::bot()).unwrap(), ElemSet::EMPTY);
    assert_eq!(evaluate(&s, &e, &p("exists x0 . x0 x0")).unwrap(), ElemSet::singleton(0));
    assert_eq!(evaluate(&s, &e, &p("mu X0 . X0 \\/ c")).unwrap(), ElemSet::singleton(0));
    assert_eq!(evaluate(&s, &e, &p("mu X0 . X0")).unwrap(), ElemSet::EMPTY);
    assert_eq!(evaluate(&s, &e, &p("nu X0 . X0")).unwrap(), s.full());
    assert_eq!(evaluate(&s, &e, &p("mu X0 . c X0 \\/ d")).unwrap(), ElemSet::singleton(1));
    assert_eq!(evaluate_nu_direct(&s, &e, 0, &p("X0 /\\ c")).unwrap(), ElemSet::singleton(0));
    assert!(matches!(evaluate(&s, &e, &p("def")), Err(SemanticsError::UnassignedConstant(_))));
    let far = Valuation::new().with_element(0, 5);
    assert!(matches!(evaluate(&s, &far, &p("x0")), Err(SemanticsError::ElementOutOfRange(5))));
}

#[test]
fn validity_examples() {
    let s = small();
    assert!(models(&s, &p("x0 -> x0")).unwrap());
    assert!(models(&s, &p("exists x0 . x0")).unwrap());
    assert!(!models(&s, &p("c")).unwrap());
    assert!(is_predicate(&s, &p("x0 -> x0")).unwrap());
    assert!(is_predicate(&s, &p("c -> x0 -> x0")).unwrap());
    assert!(!is_predicate(&s, &p("c")).unwrap());
    let w = falsifying_valuation(&s, &p("x0 -> c")).unwrap().unwrap();
    assert_eq!(w.element(0), 1);
}

#[test]
fn tautology_examples() {
    assert_eq!(is_tautology(&p("c \\/ !c")), Ok(true));
    assert_eq!(is_tautology(&p("c x0 -> c x0")), Ok(true));
    assert_eq!(is_tautology(&p("(c -> d) -> (d -> c)")), Ok(false));
    assert_eq!(is_tautology(&p("(exists x0 . x0) \\/ !(exists x0 . x0)")), Ok(true));
    assert_eq!(is_tautology(&p("exists x0 . x0")), Ok(false));
    assert_eq!(is_tautology(&p("(mu X0 . X0) -> (mu X0 . X0)")), Ok(true));
}

#[test]
fn consequence_examples() {
    let suite = suite(2);
    let (x0, c) = (p("x0"), p("c"));
    let all = |kind, gamma: &[Pattern], delta: &[Pattern]| consequence(kind, gamma, delta, &suite).unwrap().holds;
    for kind in [ConsequenceKind::Strong, ConsequenceKind::Local, ConsequenceKind::Global] {
        assert!(all(kind, std::slice::from_ref(&c), std::slice::from_ref(&c)));
        assert!(all(kind, &[], &[p("c -> c")]));
        assert!(!all(kind, &[], std::slice::from_ref(&c)));
    }
    assert!(all(ConsequenceKind::Global, std::slice::from_ref(&x0), &[p("forall x0 . x0")]));
    assert!(all(ConsequenceKind::Global, std::slice::from_ref(&c), &[p("c d -> c d")]));
    assert!(all(ConsequenceKind::Global, &[p("x0 -> c")], &[p("forall x0 . x0 -> c")]));
    assert!(!all(ConsequenceKind::Local, &[p("x0 -> c")], &[p("forall x0 . x0 -> c")]));
    assert!(all(ConsequenceKind::Local, &[p("x0 -> c")], &[p("d x0 -> d c")]));
    assert!(!all(ConsequenceKind::Strong, &[p("x0 -> c")], &[p("d x0 -> d c")]));
    let v = consequence(ConsequenceKind::Strong, &[p("x0 -> c")], &[p("d x0 -> d c")], &suite).unwrap();
    let cex = v.counterexample.unwrap();
    let s = &suite[cex.index];
    assert_eq!(&cex.structure, s);
    assert!(
        satisfies(s, &cex.valuation, &p("x0 -> c")).unwrap() || !satisfies(s, &cex.valuation, &cex.conclusion).unwrap()
    );
    assert_eq!(v.checked, cex.index + 1);
}

#[test]
fn definedness() {
    let sig = Signature::new(["c", "def"]).unwrap();
    let cfg = SuiteConfig::new(3).samples(50).seed(9).definedness(true);
    let ops = [
        DefinednessOp::Ceil(Pattern::constant("c")),
        DefinednessOp::Floor(Pattern::constant("c")),
        DefinednessOp::Equals(Pattern::constant("c"), Pattern::evar(1)),
        DefinednessOp::Member(0, Pattern::constant("c")),
    ];
    let mut checked = 0;
    for s in enumerate_structures(&sig, &cfg) {
        for e in all_valuations(&s, &aml::syntax::FreeVars { element: [0, 1].into(), set: Default::default() }) {
            for op in &ops {
                let v = eval_definedness(&s, &e, op).unwrap();
                assert_eq!(v.desugared, v.closed_form);
                assert!(v.closed_form.is_empty() || v.closed_form == s.full());
                checked += 1;
            }
        }
    }
    assert!(checked > 1000);
    assert!(matches!(
        eval_definedness(&small(), &Valuation::new(), &ops[0]),
        Err(SemanticsError::NotADefinednessStructure)
    ));
}

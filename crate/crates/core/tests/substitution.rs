mod common;

use aml::substitution::{
    fresh_variables, is_free_for, occurs_free, subst_bound, subst_capture_avoiding, subst_free, VarKind,
};
use aml::{Pattern, VarRef};
use common::*;
use proptest::prelude::*;

fn var() -> impl Strategy<Value = VarRef> {
    prop_oneof![(0u32..3).prop_map(VarRef::Element), (0u32..3).prop_map(VarRef::Set)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn free_substitution_matches_splicing(phi in arb_pattern(), v in var(), delta in arb_pattern()) {
        prop_assert_eq!(subst_free(&phi, v, &delta), oracle_subst_free(&phi, v, &delta));
    }

    #[test]
    fn free_for_matches_positions(phi in arb_pattern(), v in var(), delta in arb_pattern()) {
        prop_assert_eq!(is_free_for(v, &delta, &phi), oracle_free_for(v, &delta, &phi));
    }

    #[test]
    fn bound_renaming_matches_positions(phi in arb_pattern(), v in 0u32..3, w in 3u32..5, set in any::<bool>()) {
        let (v, w) = if set { (VarRef::Set(v), VarRef::Set(w)) } else { (VarRef::Element(v), VarRef::Element(w)) };
        let renamed = subst_bound(&phi, v, w).unwrap();
        prop_assert_eq!(&renamed, &oracle_subst_bound(&phi, v, w));
        prop_assert_eq!(renamed.free_vars(), phi.free_vars());
    }

    #[test]
    fn capture_avoiding_never_captures(phi in arb_pattern(), x in 0u32..3, delta in arb_pattern()) {
        let v = VarRef::Element(x);
        let out = subst_capture_avoiding(&phi, v, &delta);
        if is_free_for(v, &delta, &phi) {
            prop_assert_eq!(&out, &subst_free(&phi, v, &delta));
        }
        let mut want = phi.free_vars();
        if want.element.remove(&x) {
            want.extend(&delta.free_vars());
        }
        prop_assert_eq!(out.free_vars(), want);
    }

    #[test]
    fn substituting_a_variable_for_itself_is_identity(phi in arb_pattern(), v in var()) {
        prop_assert_eq!(subst_free(&phi, v, &v.pattern()), phi);
    }
}

#[test]
fn free_for_examples() {
    let x0 = VarRef::Element(0);
    assert!(!is_free_for(x0, &Pattern::evar(1), &Pattern::exists(1, Pattern::evar(0))));
    assert!(is_free_for(x0, &Pattern::constant("c"), &Pattern::exists(1, Pattern::evar(0))));
    assert!(is_free_for(VarRef::Set(0), &Pattern::not(Pattern::svar(0)), &Pattern::svar(0)));
}

#[test]
fn substitution_examples() {
    let psi = Pattern::app(Pattern::constant("c"), Pattern::evar(2));
    assert_eq!(subst_free(&Pattern::evar(0), VarRef::Element(0), &psi), psi);
    assert_eq!(subst_free(&Pattern::bot(), VarRef::Set(0), &psi), Pattern::bot());
    assert_eq!(
        subst_bound(&Pattern::exists(0, Pattern::evar(0)), VarRef::Element(0), VarRef::Element(1)).unwrap(),
        Pattern::exists(1, Pattern::evar(1))
    );
    assert_eq!(subst_bound(&Pattern::evar(0), VarRef::Element(0), VarRef::Element(1)).unwrap(), Pattern::evar(0));
    let phi = Pattern::mu(0, Pattern::imp(Pattern::svar(0), Pattern::svar(1)));
    assert_eq!(
        subst_bound(&phi, VarRef::Set(0), VarRef::Set(2)).unwrap(),
        Pattern::mu(2, Pattern::imp(Pattern::svar(2), Pattern::svar(1)))
    );
    assert!(subst_bound(&phi, VarRef::Set(0), VarRef::Element(2)).is_err());
}

#[test]
fn fresh_examples() {
    assert_eq!(fresh_variables(3, 2, VarKind::Element), vec![VarRef::Element(4), VarRef::Element(5)]);
    assert_eq!(fresh_variables(0, 1, VarKind::Set), vec![VarRef::Set(1)]);
    assert!(fresh_variables(7, 0, VarKind::Element).is_empty());
}

#[test]
fn capture_avoiding_examples() {
    let phi = Pattern::exists(1, Pattern::app(Pattern::evar(0), Pattern::evar(1)));
    assert_eq!(
        subst_capture_avoiding(&phi, VarRef::Element(0), &Pattern::evar(1)),
        Pattern::exists(2, Pattern::app(Pattern::evar(1), Pattern::evar(2)))
    );
    let untouched = Pattern::exists(1, Pattern::evar(0));
    assert!(!occurs_free(VarRef::Element(2), &untouched));
    assert_eq!(subst_capture_avoiding(&untouched, VarRef::Element(2), &Pattern::evar(1)), untouched);
}

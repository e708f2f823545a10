mod common;

use artin_core::garside::DEFAULT_LCM_BOUND;
use artin_core::{CoxeterSystem, GenSet, PositiveBraid, Simple, Word};
use common::{arb_positive, arb_subset};
use proptest::prelude::*;

fn pos(sys: &CoxeterSystem, w: &Word) -> PositiveBraid {
    sys.positive_from_word(w).unwrap()
}

fn simple(sys: &CoxeterSystem, u: &Simple) -> PositiveBraid {
    sys.normalize(std::slice::from_ref(u))
}

fn retract_simple(sys: &CoxeterSystem, i: GenSet, u: &Simple) -> PositiveBraid {
    pos(sys, &sys.retract_word(i, &Word::lift(u)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normal_form_is_idempotent_and_additive(k in 0usize..3, a in arb_positive(3, 10), b in arb_positive(3, 10)) {
        let sys = [CoxeterSystem::type_a(3), CoxeterSystem::type_b(3), CoxeterSystem::affine_a(2)][k].clone();
        let (x, y) = (pos(&sys, &a), pos(&sys, &b));
        prop_assert_eq!(sys.normalize(x.factors()), x.clone());
        prop_assert_eq!(x.lambda(), a.len());
        let xy = sys.positive_product(&x, &y);
        prop_assert_eq!(xy.lambda(), x.lambda() + y.lambda());
        prop_assert_eq!(xy.clone(), pos(&sys, &a.concat(&b)));
        prop_assert!(xy.factors().iter().all(|f| !f.is_identity()));
        prop_assert!(sys.left_divides(&x, &xy));
        prop_assert_eq!(sys.left_quotient(&x, &xy).unwrap(), y);
    }

    #[test]
    fn retraction_of_positive_braids(a in arb_positive(3, 10), i in arb_subset(3)) {
        let sys = CoxeterSystem::type_a(3);
        let b = pos(&sys, &a);
        let r = sys.retract_positive_checked(i, &b);
        prop_assert!(r.image.alphabet().is_subset(i));
        prop_assert!(r.m <= r.n);
        prop_assert!(r.prefixes_divide);
        let h = sys.h_i(i, &b);
        prop_assert!(h.alphabet().is_subset(i));
        prop_assert!(sys.left_divides(&h, &b));
        prop_assert!(sys.left_divides(&h, &r.image));
        let rest = sys.left_quotient(&h, &b).unwrap();
        prop_assert!(sys.h_i(i, &rest).is_identity());
    }

    #[test]
    fn retraction_is_monotone_for_divisibility(a in arb_positive(3, 8), c in arb_positive(3, 5), i in arb_subset(3)) {
        let sys = CoxeterSystem::type_a(3);
        let (x, xc) = (pos(&sys, &a), pos(&sys, &a.concat(&c)));
        prop_assert!(sys.left_divides(&sys.retract_positive(i, &x), &sys.retract_positive(i, &xc)));
    }

    #[test]
    fn gcd_divides_both(a in arb_positive(3, 8), b in arb_positive(3, 8)) {
        let sys = CoxeterSystem::type_a(3);
        let (x, y) = (pos(&sys, &a), pos(&sys, &b));
        let g = sys.left_gcd(&x, &y);
        prop_assert!(sys.left_divides(&g, &x) && sys.left_divides(&g, &y));
        let l = sys.right_lcm(&x, &y, DEFAULT_LCM_BOUND).unwrap();
        prop_assert!(sys.left_divides(&x, &l) && sys.left_divides(&y, &l));
    }
}

/// Left divisibility of simples is inclusion of inversion sets.
#[test]
fn divisibility_is_inclusion_of_inversion_sets() {
    for sys in [CoxeterSystem::type_a(2), CoxeterSystem::type_a(3)] {
        let group = sys.enumerate_w(sys.all()).unwrap();
        let elems: Vec<Simple> = group.elements.iter().map(|e| sys.element(&e.word)).collect();
        for u in &elems {
            for v in &elems {
                let divides = sys.left_divides(&simple(&sys, u), &simple(&sys, v));
                let included = sys.inversion_set(u).is_subset(&sys.inversion_set(v));
                assert_eq!(divides, included, "{u:?} {v:?}");
                assert_eq!(divides, sys.weak_le(u, v));
            }
        }
    }
}

/// For simples, retraction commutes with gcd and lcm.
#[test]
fn retraction_commutes_with_gcd_and_lcm_of_simples() {
    for sys in [CoxeterSystem::type_a(3), CoxeterSystem::type_b(3)] {
        let group = sys.enumerate_w(sys.all()).unwrap();
        let elems: Vec<Simple> = group.elements.iter().map(|e| sys.element(&e.word)).collect();
        let mut rng = common::rng(3);
        use rand::Rng;
        for _ in 0..3000 {
            let u = &elems[rng.gen_range(0..elems.len())];
            let v = &elems[rng.gen_range(0..elems.len())];
            let i = common::subset(&mut rng, 3);
            let (su, sv) = (simple(&sys, u), simple(&sys, v));
            let (ru, rv) = (retract_simple(&sys, i, u), retract_simple(&sys, i, v));
            let g = sys.left_gcd(&su, &sv);
            assert_eq!(sys.retract_positive(i, &g), sys.left_gcd(&ru, &rv));
            let l = sys.right_lcm(&su, &sv, DEFAULT_LCM_BOUND).unwrap();
            let rl = sys.right_lcm(&ru, &rv, DEFAULT_LCM_BOUND).unwrap();
            assert_eq!(sys.retract_positive(i, &l), rl);
        }
    }
}

/// The two non-simple instances where retraction does not commute.
#[test]
fn counterexamples_for_non_simples() {
    let a2 = CoxeterSystem::type_a(2);
    let w = |x: &str| pos(&a2, &a2.parse_word(x).unwrap());
    let s = GenSet::singleton(0);
    let (b, b2) = (w("t t s"), w("s"));
    assert!(a2.left_gcd(&b, &b2).is_identity());
    assert_eq!(a2.left_gcd(&a2.retract_positive(s, &b), &a2.retract_positive(s, &b2)), w("s"));
    let (b, b2) = (w("s t t"), w("t"));
    let l = a2.right_lcm(&b, &b2, DEFAULT_LCM_BOUND).unwrap();
    assert_eq!(l, w("s t s t s"));
    assert_eq!(a2.retract_positive(s, &l), w("s s"));
    let rl = a2.right_lcm(&a2.retract_positive(s, &b), &a2.retract_positive(s, &b2), DEFAULT_LCM_BOUND).unwrap();
    assert_eq!(rl, w("s"));
    assert_ne!(a2.retract_positive(s, &l), rl);
}

#[test]
fn worked_examples() {
    let a2 = CoxeterSystem::type_a(2);
    let w = |x: &str| pos(&a2, &a2.parse_word(x).unwrap());
    let s = GenSet::singleton(0);
    let tts = w("t t s");
    let f: Vec<String> = tts.factors().iter().map(|x| a2.format_element(x)).collect();
    assert_eq!(f, ["t", "t s"]);
    assert_eq!(w("s s").factors().len(), 2);
    assert_eq!(a2.right_lcm(&w("s"), &w("t"), DEFAULT_LCM_BOUND).unwrap(), w("s t s"));
    assert_eq!(a2.retract_positive(s, &tts), w("s"));
    assert_eq!(a2.h_i(s, &w("s s t s")), w("s s"));
    assert!(a2.h_i(s, &w("t s")).is_identity());
    // `ts` is the {s}-reduced ribbon taking s to t
    let r = a2.positive_ribbon_check(&w("s"), &w("t s")).unwrap();
    assert_eq!(r.target, GenSet::singleton(1));
    assert_eq!(r.conjugate, w("t"));
    let r = a2.positive_ribbon_check(&w("s"), &PositiveBraid::identity()).unwrap();
    assert_eq!(r.target, s);
}

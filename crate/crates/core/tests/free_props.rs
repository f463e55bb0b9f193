use std::collections::BTreeMap;

use pi_forge::free::{alternate, commutator, left_normed, substitute, Kind, Mode, Monomial, Polynomial, Variable};
use pi_forge::Rational;
use proptest::prelude::*;

const KINDS: [Kind; 2] = [Kind::EvenSym, Kind::EvenSkew];

fn var() -> impl Strategy<Value = Variable> {
    (0..2usize, 1..4u32).prop_map(|(k, i)| Variable::new(KINDS[k], i))
}

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(var(), 0..4), -3..4i64), 0..5)
        .prop_map(|terms| Polynomial::from_terms(terms.into_iter().map(|(w, c)| (Monomial(w), Rational::int(c)))))
}

fn xvar(i: u32) -> Variable {
    Variable::new(Kind::EvenSym, i)
}

fn ungraded_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec((1..4u32).prop_map(xvar), 0..4), -3..4i64), 0..5)
        .prop_map(|terms| Polynomial::from_terms(terms.into_iter().map(|(w, c)| (Monomial(w), Rational::int(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn jacobi(a in poly(), b in poly(), c in poly()) {
        let sum = &(&commutator(&commutator(&a, &b), &c) + &commutator(&commutator(&b, &c), &a)) + &commutator(&commutator(&c, &a), &b);
        prop_assert!(sum.is_zero());
        prop_assert_eq!(left_normed(&[a.clone(), b.clone(), c.clone()]).unwrap(), commutator(&commutator(&a, &b), &c));
    }

    #[test]
    fn star_is_an_involution(p in poly()) {
        prop_assert_eq!(p.star().star(), p);
    }

    #[test]
    fn star_reverses_products(p in poly(), q in poly()) {
        prop_assert_eq!((&p * &q).star(), &q.star() * &p.star());
        prop_assert_eq!((&p + &q).star(), &p.star() + &q.star());
    }

    #[test]
    fn alternation_is_alternating(p in poly()) {
        let vars: Vec<Variable> = p.variables().into_iter().filter(|v| v.kind == Kind::EvenSym).collect();
        prop_assume!(vars.len() >= 2);
        let alt = alternate(&p, &vars).unwrap();
        let (v0, v1) = (vars[0], vars[1]);
        let swapped = alt.rename(|v| if v == v0 { v1 } else if v == v1 { v0 } else { v });
        prop_assert_eq!(swapped, -&alt);
    }

    #[test]
    fn substitution_is_an_endomorphism(p in ungraded_poly(), q in ungraded_poly(), v1 in ungraded_poly(), v2 in ungraded_poly()) {
        let assignment = BTreeMap::from([(xvar(1), v1), (xvar(2), v2)]);
        let s = |f: &Polynomial| substitute(f, &assignment, Mode::Ungraded).unwrap();
        prop_assert_eq!(s(&(&p * &q)), &s(&p) * &s(&q));
        prop_assert_eq!(s(&(&p + &q)), &s(&p) + &s(&q));
    }
}

#[test]
fn involution_slots_reject_wrong_symmetry() {
    let y1 = Polynomial::var(Variable::new(Kind::EvenSym, 1));
    let z2 = Polynomial::var(Variable::new(Kind::EvenSkew, 2));
    let w = &y1 * &z2;
    let skew = &w - &w.star();
    let z1 = Variable::new(Kind::EvenSkew, 1);
    let p = Polynomial::var(z1);
    let got = substitute(&p, &BTreeMap::from([(z1, skew.clone())]), Mode::Involution).unwrap();
    assert_eq!(got, &w + &(&z2 * &y1));
    assert!(substitute(&p, &BTreeMap::from([(z1, w.clone())]), Mode::Involution).is_err());
    assert!(substitute(&p, &BTreeMap::from([(z1, &w + &w.star())]), Mode::Involution).is_err());
}

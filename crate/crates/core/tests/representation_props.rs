use pi_forge::algebra::builtin;
use pi_forge::free::{Kind, Mode, Monomial, Polynomial, Variable};
use pi_forge::identity::Quotient;
use pi_forge::multilinear::{enumerate, Signature};
use pi_forge::representation::*;
use pi_forge::Rational;
use proptest::prelude::*;

fn row_tableaux(shapes: &[Partition]) -> Vec<StandardTableau> {
    shapes.iter().map(|s| StandardTableau::row_reading(s, &(1..=s.size()).collect::<Vec<_>>()).unwrap()).collect()
}

fn all_tableau_tuples(shapes: &[Partition]) -> Vec<Vec<StandardTableau>> {
    let mut out = vec![Vec::new()];
    for s in shapes {
        let tabs = standard_tableaux(s, &(1..=s.size()).collect::<Vec<_>>()).unwrap();
        out = out.into_iter().flat_map(|t: Vec<StandardTableau>| tabs.iter().map(move |x| [t.clone(), vec![x.clone()]].concat())).collect();
    }
    out
}

fn shapes_strategy() -> impl Strategy<Value = Vec<Partition>> {
    (0..=3usize, 0..=2usize)
        .prop_filter("nonempty", |(a, b)| a + b > 0)
        .prop_flat_map(|(a, b)| (prop::sample::select(Partition::all(a)), prop::sample::select(Partition::all(b))))
        .prop_map(|(l, m)| vec![l, m])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn symmetrizer_is_quasi_idempotent(shapes in shapes_strategy(), picks in prop::collection::vec((0..120usize, -4..5i64), 1..4)) {
        let counts: Vec<usize> = shapes.iter().map(Partition::size).collect();
        let basis = enumerate(&Signature::new(Mode::Graded, &counts).unwrap()).unwrap();
        let p = Polynomial::from_terms(picks.into_iter().map(|(i, c)| (basis.monomial(i % basis.len()), Rational::int(c))));
        let tabs = row_tableaux(&shapes);
        let once = symmetrizer_apply(&tabs, &p, Mode::Graded).unwrap();
        let twice = symmetrizer_apply(&tabs, &once, Mode::Graded).unwrap();
        let lead = once.terms().next().map(|(m, c)| twice.coefficient(m) / c.clone());
        match lead {
            None => prop_assert!(twice.is_zero()),
            Some(ratio) => {
                prop_assert!(!ratio.is_zero());
                prop_assert_eq!(twice, once.scale(&ratio));
            }
        }
    }
}

#[test]
fn multiplicity_does_not_depend_on_the_tableau() {
    for (name, max) in [("A1", 4), ("A1-star", 4), ("A-star", 4)] {
        let spec = builtin(name).unwrap();
        for sig in Signature::all_up_to(spec.mode(), max) {
            let q = Quotient::new(&spec, &sig).unwrap();
            for shapes in shape_tuples(&sig) {
                let reference = multiplicity_in(&q, &shapes).unwrap().multiplicity;
                for tabs in all_tableau_tuples(&shapes) {
                    assert_eq!(multiplicity_with(&q, &tabs).unwrap().multiplicity, reference, "{name} {}", format_shapes(&shapes));
                }
            }
        }
    }
}

#[test]
fn cocharacters_decompose_the_quotient() {
    for (name, max) in [("A1", 6), ("A2", 6), ("A3", 6), ("A1-star", 6), ("A-star", 6), ("A-trivial", 6)] {
        let spec = builtin(name).unwrap();
        for sig in Signature::all_up_to(spec.mode(), max) {
            let q = Quotient::new(&spec, &sig).unwrap();
            let results: Vec<_> = shape_tuples(&sig).iter().map(|s| multiplicity_in(&q, s).unwrap()).collect();
            assert_eq!(decomposition_dimension(&results), q.dim(), "{name} {sig}");
            if let Some(formula) = expected::for_algebra(name) {
                for r in &results {
                    assert_eq!(r.multiplicity, formula(&r.shapes), "{name} {}", format_shapes(&r.shapes));
                }
            }
        }
    }
}

#[test]
fn vanishing_patterns() {
    let a1 = builtin("A1").unwrap();
    for m in 0..=3 {
        let q = Quotient::new(&a1, &Signature::new(Mode::Graded, &[m, 3]).unwrap()).unwrap();
        assert_eq!(q.dim(), 0);
    }
    let star = builtin("A1-star").unwrap();
    for shapes in [["(1)", "()", "(1,1)", "()"], ["()", "()", "()", "(1,1)"], ["(2)", "(1)", "()", "()"]] {
        let shapes: Vec<Partition> = shapes.iter().map(|s| s.parse().unwrap()).collect();
        assert_eq!(multiplicity(&star, &shapes).unwrap().multiplicity, 0, "{}", format_shapes(&shapes));
    }
}

#[test]
fn highest_weight_families_are_symmetrized_monomials() {
    let y = |k: usize| Variable::new(Kind::EvenSym, k as u32);
    let z = |k: u32| Variable::new(Kind::OddSym, k);
    for (kind, odd) in [(HwvKind::N1Case, "(1)"), (HwvKind::N2Sym, "(2)"), (HwvKind::N2Mixed, "(1,1)")] {
        let mu: Partition = odd.parse().unwrap();
        for p in 0..=2 {
            for q in 0..=2 {
                for i in 0..=q {
                    let mut w: Vec<Variable> = (p + 1..=p + i).map(y).collect();
                    w.extend((1..=p).map(y));
                    w.push(z(1));
                    w.extend((p + q + 1..=2 * p + q).map(y));
                    w.extend((p + i + 1..=p + q).map(y));
                    if mu.size() == 2 {
                        w.push(z(2));
                    }
                    let lead = Polynomial::term(Monomial(w), Rational::int(1));
                    let lambda = Partition::new(&[p + q, p]).unwrap();
                    let expected = symmetrizer_apply(&row_tableaux(&[lambda, mu.clone()]), &lead, Mode::Graded).unwrap();
                    assert_eq!(hwv_family(kind, p, q, i).unwrap(), expected, "{kind:?} p={p} q={q} i={i}");
                }
            }
        }
    }
}

#[test]
fn highest_weight_families_are_independent() {
    let a1 = builtin("A1").unwrap();
    for (kind, n) in [(HwvKind::N1Case, 1), (HwvKind::N2Sym, 2), (HwvKind::N2Mixed, 2)] {
        for p in 0..=2 {
            for q in 0..=2 {
                let sig = Signature::new(Mode::Graded, &[2 * p + q, n]).unwrap();
                let quotient = Quotient::new(&a1, &sig).unwrap();
                let images: Vec<_> = (0..=q).map(|i| quotient.image_of(&hwv_family(kind, p, q, i).unwrap()).unwrap()).collect();
                assert_eq!(pi_forge::linalg::rank_of(&images), q + 1, "{kind:?} p={p} q={q}");
            }
        }
    }
}

#[test]
fn binomial_rewrite_holds_and_controls_fail() {
    for p in 1..=3 {
        for i1 in p..=4 {
            for i2 in p..=4 {
                assert!(verify_binomial_rewrite(p, i1, i2).unwrap(), "p={p} i1={i1} i2={i2}");
            }
        }
    }
    let spec = builtin("A1-star").unwrap();
    let (lhs, rhs) = binomial_rewrite(2, 2, 3).unwrap();
    let (m, c) = rhs.terms().nth(1).unwrap();
    let mut perturbed = rhs.clone();
    perturbed.add_term(m.clone(), c.clone());
    assert!(!pi_forge::identity::is_identity(&spec, &(&lhs - &perturbed)).unwrap().holds());
    assert!(binomial_rewrite(2, 1, 3).is_err());
}

use pi_forge::algebra::{base_algebra, basis, Element};
use pi_forge::gradings::{classify, classify_z2, diagonalize_idempotent, elementary_grading, to_z2, unipotent_inverse, AbelianGroup, GroupTriple};
use pi_forge::Rational;
use proptest::prelude::*;

type Matrix = [[Rational; 3]; 3];

fn matrix(x: &Element) -> Matrix {
    let c = &x.coeffs;
    let z = Rational::int(0);
    [[c[0].clone(), c[2].clone(), c[4].clone()], [z.clone(), c[1].clone(), c[3].clone()], [z.clone(), z, c[0].clone()]]
}

fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..3).map(|k| &a[i][k] * &b[k][j]).sum()))
}

/// Nonzero idempotents of the algebra: `(0,1,a,b,ab)`, `(1,0,a,b,−ab)` and `E`.
fn idempotent(case: u8, a: Rational, b: Rational) -> Element {
    let ab = &a * &b;
    let (x, y, c) = match case {
        0 => (0, 1, ab),
        1 => (1, 0, -ab),
        _ => return Element::from_ints(&[1, 1, 0, 0, 0]),
    };
    Element { coeffs: vec![Rational::int(x), Rational::int(y), a, b, c] }
}

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| Rational::new(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn idempotents_diagonalize(case in 0u8..3, a in rational(), b in rational()) {
        let e = idempotent(case, a, b);
        prop_assert_eq!(matmul(&matrix(&e), &matrix(&e)), matrix(&e));
        let (q, d) = diagonalize_idempotent(&e).unwrap();
        let qi = unipotent_inverse(&q).unwrap();
        let id = matrix(&Element::from_ints(&[1, 1, 0, 0, 0]));
        prop_assert_eq!(matmul(&matrix(&q), &matrix(&qi)), id.clone());
        prop_assert_eq!(matmul(&matmul(&matrix(&q), &matrix(&e)), &matrix(&qi)), matrix(&d));
        prop_assert_eq!(matmul(&matrix(&d), &matrix(&d)), matrix(&d));
        let targets = [Element::basis(5, basis::D), Element::basis(5, basis::U), Element::from_ints(&[1, 1, 0, 0, 0])];
        prop_assert!(targets.contains(&d));
    }

    #[test]
    fn complementary_idempotents_split(case in 0u8..2, a in rational(), b in rational()) {
        let e = idempotent(case, a, b);
        let f = Element::from_ints(&[1, 1, 0, 0, 0]).sub(&e);
        let alg = base_algebra();
        prop_assert!(alg.multiply(&e, &f).unwrap().is_zero());
        prop_assert!(alg.multiply(&f, &e).unwrap().is_zero());
        let (_, de) = diagonalize_idempotent(&e).unwrap();
        let (_, df) = diagonalize_idempotent(&f).unwrap();
        let mut pair = [de, df];
        pair.sort_by_key(|x| x.coeffs[basis::U].is_zero());
        prop_assert_eq!(pair, [Element::basis(5, basis::U), Element::basis(5, basis::D)]);
    }
}

#[test]
fn elementary_gradings_are_valid() {
    for class in classify_z2() {
        for t in &class.triples {
            let g = GroupTriple::new(AbelianGroup::z2(), t.clone()).unwrap();
            let spec = base_algebra().with_grading(Some(to_z2(&elementary_grading(&g))));
            assert!(spec.validate().all_pass(), "{t:?}");
        }
    }
    let z2z2 = AbelianGroup { moduli: vec![2, 2] };
    let classes = classify(&z2z2);
    assert_eq!(classes.iter().map(|c| c.triples.len()).sum::<usize>(), 64);
    assert!(classes.iter().all(|c| c.triples.len() == 4));
}

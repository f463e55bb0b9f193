//! Idempotents of 𝒜 and its elementary gradings.
//!
//! Elements of 𝒜 are viewed as 3×3 upper triangular matrices
//! `[[x, a, c], [0, y, b], [0, 0, x]]` in the coordinates `(u, d, a, b, c)`.

use serde::Serialize;

use crate::algebra::{base_algebra, basis, Element};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Conjugates an idempotent of 𝒜 to a diagonal one: returns `(q, d)` with
/// `q e q⁻¹ = d` and `d ∈ {e₂₂, e₁₁+e₃₃, E}`.
pub fn diagonalize_idempotent(e: &Element) -> Result<(Element, Element)> {
    let alg = base_algebra();
    if e.is_zero() {
        return Err(Error::Precondition("the zero element is not a nonzero idempotent".into()));
    }
    if alg.multiply(e, e)? != *e {
        return Err(Error::Precondition("element is not idempotent".into()));
    }
    let c = &e.coeffs;
    let (x, y, a, b) = (&c[basis::U], &c[basis::D], &c[basis::A], &c[basis::B]);
    let zero = Rational::int(0);
    let one = Rational::int(1);
    let q = |p: Rational, s: Rational| Element { coeffs: vec![one.clone(), one.clone(), p, s, zero.clone()] };
    match (x.is_one(), y.is_one()) {
        // x = 0, y = 1: q = E − a e₁₂ + b e₂₃
        (false, true) => Ok((q(-a, b.clone()), Element::basis(5, basis::D))),
        // x = 1, y = 0: q = E + a e₁₂ − b e₂₃
        (true, false) => Ok((q(a.clone(), -b), Element::basis(5, basis::U))),
        _ => {
            let unit = Element::from_ints(&[1, 1, 0, 0, 0]);
            Ok((unit.clone(), unit))
        }
    }
}

/// Inverse of a unipotent element `E + p e₁₂ + s e₂₃ + r e₁₃`.
pub fn unipotent_inverse(q: &Element) -> Result<Element> {
    let c = &q.coeffs;
    if q.dim() != 5 || !c[basis::U].is_one() || !c[basis::D].is_one() {
        return Err(Error::Precondition("element is not unipotent".into()));
    }
    let (p, s, r) = (&c[basis::A], &c[basis::B], &c[basis::C]);
    Ok(Element { coeffs: vec![Rational::int(1), Rational::int(1), -p, -s, &(p * s) - r] })
}

/// A finite abelian group `ℤ_{m₁} × ⋯ × ℤ_{m_k}`; elements are residue tuples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianGroup {
    pub moduli: Vec<u32>,
}

impl AbelianGroup {
    pub fn z2() -> Self {
        AbelianGroup { moduli: vec![2] }
    }

    pub fn identity(&self) -> Vec<u32> {
        vec![0; self.moduli.len()]
    }

    pub fn contains(&self, g: &[u32]) -> bool {
        g.len() == self.moduli.len() && g.iter().zip(&self.moduli).all(|(x, m)| x < m)
    }

    /// `g⁻¹ h` in additive notation, `h − g`.
    pub fn quotient(&self, g: &[u32], h: &[u32]) -> Vec<u32> {
        g.iter().zip(h).zip(&self.moduli).map(|((a, b), m)| (b + m - a) % m).collect()
    }

    pub fn elements(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new()];
        for &m in &self.moduli {
            out = out.into_iter().flat_map(|e| (0..m).map(move |x| [e.clone(), vec![x]].concat())).collect();
        }
        out
    }
}

/// Three group elements `(g₁, g₂, g₃)` defining an elementary grading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupTriple {
    pub group: AbelianGroup,
    pub g: [Vec<u32>; 3],
}

impl GroupTriple {
    pub fn new(group: AbelianGroup, g: [Vec<u32>; 3]) -> Result<Self> {
        if let Some(bad) = g.iter().find(|x| !group.contains(x)) {
            return Err(Error::Precondition(format!("{bad:?} is not an element of ℤ{:?}", group.moduli)));
        }
        Ok(GroupTriple { group, g })
    }

    pub fn z2(g1: u32, g2: u32, g3: u32) -> Result<Self> {
        GroupTriple::new(AbelianGroup::z2(), [vec![g1], vec![g2], vec![g3]])
    }
}

/// Degrees of `(u, d, a, b, c)` under `deg e_ij = g_i⁻¹ g_j`.
pub fn elementary_grading(t: &GroupTriple) -> Vec<Vec<u32>> {
    let deg = |i: usize, j: usize| t.group.quotient(&t.g[i], &t.g[j]);
    let one = t.group.identity();
    let degrees = vec![one.clone(), one, deg(0, 1), deg(1, 2), deg(0, 2)];
    debug_assert!(closure_holds(&t.group, &degrees));
    degrees
}

fn closure_holds(group: &AbelianGroup, degrees: &[Vec<u32>]) -> bool {
    let alg = base_algebra();
    let add = |g: &[u32], h: &[u32]| -> Vec<u32> { g.iter().zip(h).zip(&group.moduli).map(|((a, b), m)| (a + b) % m).collect() };
    (0..5).all(|i| (0..5).all(|j| alg.product_of_basis(i, j).iter().all(|(k, _)| degrees[*k] == add(&degrees[i], &degrees[j]))))
}

/// A ℤ₂ grading vector from an elementary grading over ℤ₂.
pub fn to_z2(degrees: &[Vec<u32>]) -> Vec<u8> {
    degrees.iter().map(|d| d[0] as u8).collect()
}

/// Elementary gradings of 𝒜 that share one degree map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradingClass {
    /// Built-in name for ℤ₂ gradings (`trivial`, `A1`, `A2`, `A3`).
    pub name: Option<String>,
    /// Degrees of `(u, d, a, b, c)`.
    pub degrees: Vec<Vec<u32>>,
    pub representative: [Vec<u32>; 3],
    pub triples: Vec<[Vec<u32>; 3]>,
}

const Z2_NAMES: [(&str, [u8; 5]); 4] = [("trivial", [0, 0, 0, 0, 0]), ("A1", [0, 0, 1, 1, 0]), ("A2", [0, 0, 0, 1, 1]), ("A3", [0, 0, 1, 0, 1])];

/// Groups all triples over `group` by their degree maps, in order of first
/// appearance (triples enumerated lexicographically).
pub fn classify(group: &AbelianGroup) -> Vec<GradingClass> {
    let elems = group.elements();
    let mut classes: Vec<GradingClass> = Vec::new();
    for g1 in &elems {
        for g2 in &elems {
            for g3 in &elems {
                let t = [g1.clone(), g2.clone(), g3.clone()];
                let degrees = elementary_grading(&GroupTriple { group: group.clone(), g: t.clone() });
                match classes.iter_mut().find(|c| c.degrees == degrees) {
                    Some(c) => c.triples.push(t),
                    None => {
                        let name = (group.moduli == [2])
                            .then(|| Z2_NAMES.iter().find(|(_, g)| g.iter().zip(&degrees).all(|(a, d)| u32::from(*a) == d[0])).map(|(n, _)| n.to_string()))
                            .flatten();
                        classes.push(GradingClass { name, degrees, representative: t.clone(), triples: vec![t] });
                    }
                }
            }
        }
    }
    classes
}

/// The elementary ℤ₂-gradings of 𝒜 up to equality of degree maps, ordered
/// trivial, A1, A2, A3.
pub fn classify_z2() -> Vec<GradingClass> {
    let mut classes = classify(&AbelianGroup::z2());
    classes.sort_by_key(|c| Z2_NAMES.iter().position(|(n, _)| Some(*n) == c.name.as_deref()).unwrap_or(usize::MAX));
    classes
}

/// Parses `Z2`, `Z3`, `Z2xZ2`, ... into a group.
pub fn parse_group(s: &str) -> Result<AbelianGroup> {
    let moduli = s
        .split(['x', 'X', '*'])
        .map(|f| {
            let f = f.trim();
            f.strip_prefix('Z')
                .or_else(|| f.strip_prefix('z'))
                .and_then(|m| m.parse::<u32>().ok())
                .filter(|&m| m >= 1)
                .ok_or_else(|| Error::Parse { pos: 0, msg: format!("bad group factor {f:?}; expected Zm") })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AbelianGroup { moduli })
}

#[cfg(test)]
mod tests {
    use super::*;

    type Matrix = [[Rational; 3]; 3];

    fn matrix(x: &Element) -> Matrix {
        let c = &x.coeffs;
        let z = Rational::int(0);
        [[c[0].clone(), c[2].clone(), c[4].clone()], [z.clone(), c[1].clone(), c[3].clone()], [z.clone(), z, c[0].clone()]]
    }

    fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
        std::array::from_fn(|i| std::array::from_fn(|j| (0..3).map(|k| &a[i][k] * &b[k][j]).sum()))
    }

    fn e_from(x: i64, y: i64, a: i64, b: i64, c: i64) -> Element {
        Element::from_ints(&[x, y, a, b, c])
    }

    #[test]
    fn first_case_formula() {
        let (a, b) = (3, -2);
        let e = e_from(0, 1, a, b, a * b);
        let (q, d) = diagonalize_idempotent(&e).unwrap();
        assert_eq!(q, e_from(1, 1, -a, b, 0));
        assert_eq!(d, Element::basis(5, basis::D));
        let qi = unipotent_inverse(&q).unwrap();
        assert_eq!(matmul(&matmul(&matrix(&q), &matrix(&e)), &matrix(&qi)), matrix(&d));
    }

    #[test]
    fn second_case_and_unit() {
        let e = e_from(1, 0, 5, 7, -35);
        let (q, d) = diagonalize_idempotent(&e).unwrap();
        assert_eq!(d, Element::basis(5, basis::U));
        assert_eq!(matmul(&matrix(&q), &matrix(&e)), matmul(&matrix(&d), &matrix(&q)));
        let unit = e_from(1, 1, 0, 0, 0);
        assert_eq!(diagonalize_idempotent(&unit).unwrap(), (unit.clone(), unit));
    }

    #[test]
    fn rejects_non_idempotents() {
        assert!(diagonalize_idempotent(&Element::zero(5)).is_err());
        assert!(diagonalize_idempotent(&e_from(0, 1, 1, 1, 0)).is_err());
        assert!(diagonalize_idempotent(&e_from(2, 0, 0, 0, 0)).is_err());
    }

    #[test]
    fn elementary_gradings() {
        let g = |a, b, c| to_z2(&elementary_grading(&GroupTriple::z2(a, b, c).unwrap()));
        assert_eq!(g(0, 1, 0), vec![0, 0, 1, 1, 0]);
        assert_eq!(g(0, 0, 1), vec![0, 0, 0, 1, 1]);
        assert_eq!(g(0, 1, 1), vec![0, 0, 1, 0, 1]);
        assert_eq!(g(0, 1, 1), g(1, 0, 0));
        assert_eq!(g(0, 0, 0), vec![0; 5]);
        assert!(GroupTriple::z2(0, 2, 0).is_err());
        let z3 = GroupTriple::new(AbelianGroup { moduli: vec![3] }, [vec![0], vec![1], vec![2]]).unwrap();
        assert_eq!(elementary_grading(&z3), vec![vec![0], vec![0], vec![1], vec![1], vec![2]]);
    }

    #[test]
    fn four_classes() {
        let classes = classify_z2();
        assert_eq!(classes.len(), 4);
        assert_eq!(classes.iter().map(|c| c.name.as_deref().unwrap()).collect::<Vec<_>>(), vec!["trivial", "A1", "A2", "A3"]);
        assert!(classes.iter().all(|c| c.triples.len() == 2));
        let a3 = &classes[3];
        assert_eq!(a3.degrees[basis::B], vec![0]);
        assert_eq!(classify(&parse_group("Z3").unwrap()).len(), 9);
        assert_eq!(parse_group("Z2xZ2").unwrap().moduli, vec![2, 2]);
        assert!(parse_group("Q8").is_err());
    }
}

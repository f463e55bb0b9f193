//! Finite-dimensional algebras given by structure constants, optionally
//! decorated with a ℤ₂-grading and an involution.
//!
//! The built-in algebra 𝒜 is the subalgebra of UT₃ spanned by
//! `u = e11+e33, d = e22, a = e12, b = e23, c = e13`, in that basis order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::free::{Kind, Mode};
use crate::linalg::{Echelon, PivotSide, SparseVec};
use crate::rational::Rational;

/// A vector of coordinates in the basis of an algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Element {
    pub coeffs: Vec<Rational>,
}

impl Element {
    pub fn zero(dim: usize) -> Self {
        Element { coeffs: vec![Rational::int(0); dim] }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Self::zero(dim);
        e.coeffs[i] = Rational::int(1);
        e
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Element { coeffs: v.iter().map(|&x| Rational::int(x)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn add(&self, other: &Element) -> Element {
        Element { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Element) -> Element {
        Element { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Element {
        Element { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }
}

/// Axioms checked by [`AlgebraSpec::validate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Axiom {
    Associativity,
    Unit,
    GradingClosure,
    InvolutionOrderTwo,
    InvolutionAntihomomorphism,
    InvolutionPreservesGrading,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AxiomStatus {
    Pass,
    Fail,
    NotApplicable,
}

/// Outcome for one axiom; `witness` holds basis indices of a failing case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub status: AxiomStatus,
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<AxiomCheck>,
}

impl std::fmt::Display for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}]", self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "))
    }
}

impl ValidationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != AxiomStatus::Fail)
    }

    pub fn status(&self, axiom: Axiom) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }
}

/// On-disk form of an algebra spec.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    #[serde(default)]
    pub name: Option<String>,
    pub dim: usize,
    pub labels: Vec<String>,
    pub mult: Vec<Vec<Vec<Rational>>>,
    #[serde(default)]
    pub unit: Option<Vec<Rational>>,
    #[serde(default)]
    pub grading: Option<Vec<u8>>,
    /// Row `i` is the image of basis element `i`.
    #[serde(default)]
    pub involution: Option<Vec<Vec<Rational>>>,
}

/// A finite-dimensional algebra with optional grading and involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    name: String,
    labels: Vec<String>,
    /// `mult[i][j]` lists the nonzero `(k, c)` with `b_i b_j = Σ c b_k`.
    mult: Vec<Vec<Vec<(usize, Rational)>>>,
    unit: Option<Element>,
    grading: Option<Vec<u8>>,
    involution: Option<Vec<Element>>,
}

impl AlgebraSpec {
    /// Builds a spec after checking array shapes (axioms are checked by
    /// [`AlgebraSpec::validate`]).
    pub fn from_file(file: AlgebraFile) -> Result<Self> {
        let n = file.dim;
        if n == 0 {
            return Err(Error::InvalidSpec("dimension must be positive".into()));
        }
        let shape = |what: &str, got: usize| {
            if got == n {
                Ok(())
            } else {
                Err(Error::InvalidSpec(format!("{what} has length {got}, expected {n}")))
            }
        };
        shape("labels", file.labels.len())?;
        shape("mult", file.mult.len())?;
        let mut mult = Vec::with_capacity(n);
        for row in &file.mult {
            shape("mult row", row.len())?;
            let mut r = Vec::with_capacity(n);
            for cell in row {
                shape("mult entry", cell.len())?;
                r.push(cell.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect());
            }
            mult.push(r);
        }
        let unit = match file.unit {
            Some(u) => {
                shape("unit", u.len())?;
                Some(Element { coeffs: u })
            }
            None => None,
        };
        if let Some(g) = &file.grading {
            shape("grading", g.len())?;
            if g.iter().any(|&d| d > 1) {
                return Err(Error::InvalidSpec("grading degrees must be 0 or 1".into()));
            }
        }
        let involution = match file.involution {
            Some(rows) => {
                shape("involution", rows.len())?;
                let mut out = Vec::with_capacity(n);
                for r in rows {
                    shape("involution row", r.len())?;
                    out.push(Element { coeffs: r });
                }
                Some(out)
            }
            None => None,
        };
        Ok(AlgebraSpec { name: file.name.unwrap_or_else(|| "custom".into()), labels: file.labels, mult, unit, grading: file.grading, involution })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: AlgebraFile = serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))?;
        Self::from_file(file)
    }

    pub fn to_file(&self) -> AlgebraFile {
        let n = self.dim();
        AlgebraFile {
            name: Some(self.name.clone()),
            dim: n,
            labels: self.labels.clone(),
            mult: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let mut cell = vec![Rational::int(0); n];
                            for (k, c) in &self.mult[i][j] {
                                cell[*k] = c.clone();
                            }
                            cell
                        })
                        .collect()
                })
                .collect(),
            unit: self.unit.as_ref().map(|u| u.coeffs.clone()),
            grading: self.grading.clone(),
            involution: self.involution.as_ref().map(|rows| rows.iter().map(|r| r.coeffs.clone()).collect()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("spec serializes")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> Option<&Element> {
        self.unit.as_ref()
    }

    pub fn grading(&self) -> Option<&[u8]> {
        self.grading.as_deref()
    }

    pub fn involution(&self) -> Option<&[Element]> {
        self.involution.as_deref()
    }

    /// Nonzero structure constants of `b_i b_j`.
    pub fn product_of_basis(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.mult[i][j]
    }

    fn check_dim(&self, x: &Element) -> Result<()> {
        if x.dim() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim(), got: x.dim() })
        }
    }

    /// Bilinear product.
    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        Ok(self.mul_unchecked(x, y))
    }

    pub(crate) fn mul_unchecked(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::zero(self.dim());
        for (i, xi) in x.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let s = xi * yj;
                for (k, c) in &self.mult[i][j] {
                    out.coeffs[*k] += &s * c;
                }
            }
        }
        out
    }

    /// Image under the involution.
    pub fn star(&self, x: &Element) -> Result<Element> {
        self.check_dim(x)?;
        let inv = self.involution.as_ref().ok_or_else(|| Error::Mode("algebra has no involution".into()))?;
        let mut out = Element::zero(self.dim());
        for (i, xi) in x.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for k in 0..self.dim() {
                out.coeffs[k] += xi * &inv[i].coeffs[k];
            }
        }
        Ok(out)
    }

    /// Mode implied by the decorations.
    pub fn mode(&self) -> Mode {
        let graded = self.grading.as_ref().is_some_and(|g| g.contains(&1));
        match (graded, self.involution.is_some()) {
            (true, true) => Mode::GradedInvolution,
            (false, true) => Mode::Involution,
            (true, false) => Mode::Graded,
            (false, false) => Mode::Ungraded,
        }
    }

    /// Checks whether the spec carries what `mode` needs.
    pub fn supports(&self, mode: Mode) -> Result<()> {
        if mode.uses_involution() && self.involution.is_none() {
            return Err(Error::Mode(format!("{} mode needs an involution", mode.name())));
        }
        Ok(())
    }

    /// Checks every axiom and reports pass/fail with witnesses.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let basis: Vec<Element> = (0..n).map(|i| Element::basis(n, i)).collect();
        let mut checks = Vec::new();

        let mut assoc = None;
        'outer: for i in 0..n {
            for j in 0..n {
                let ij = self.mul_unchecked(&basis[i], &basis[j]);
                for k in 0..n {
                    let jk = self.mul_unchecked(&basis[j], &basis[k]);
                    if self.mul_unchecked(&ij, &basis[k]) != self.mul_unchecked(&basis[i], &jk) {
                        assoc = Some(vec![i, j, k]);
                        break 'outer;
                    }
                }
            }
        }
        checks.push(check(Axiom::Associativity, Some(assoc)));

        let unit = self
            .unit
            .as_ref()
            .map(|u| (0..n).find(|&i| self.mul_unchecked(u, &basis[i]) != basis[i] || self.mul_unchecked(&basis[i], u) != basis[i]).map(|i| vec![i]));
        checks.push(check(Axiom::Unit, unit));

        let grading = self.grading.as_ref().map(|g| {
            let mut w = None;
            'g: for i in 0..n {
                for j in 0..n {
                    if let Some((k, _)) = self.mult[i][j].iter().find(|(k, _)| g[*k] != (g[i] + g[j]) % 2) {
                        w = Some(vec![i, j, *k]);
                        break 'g;
                    }
                }
            }
            w
        });
        checks.push(check(Axiom::GradingClosure, grading));

        let inv = self.involution.as_ref();
        let order_two = inv.map(|_| (0..n).find(|&i| self.star(&self.star(&basis[i]).unwrap()).unwrap() != basis[i]).map(|i| vec![i]));
        checks.push(check(Axiom::InvolutionOrderTwo, order_two));

        let anti = inv.map(|_| {
            let mut w = None;
            'a: for i in 0..n {
                for j in 0..n {
                    let lhs = self.star(&self.mul_unchecked(&basis[i], &basis[j])).unwrap();
                    let rhs = self.mul_unchecked(&self.star(&basis[j]).unwrap(), &self.star(&basis[i]).unwrap());
                    if lhs != rhs {
                        w = Some(vec![i, j]);
                        break 'a;
                    }
                }
            }
            w
        });
        checks.push(check(Axiom::InvolutionAntihomomorphism, anti));

        let preserves = match (inv, self.grading.as_ref()) {
            (Some(inv), Some(g)) => Some((0..n).find(|&i| inv[i].coeffs.iter().enumerate().any(|(k, c)| !c.is_zero() && g[k] != g[i])).map(|i| vec![i])),
            _ => None,
        };
        checks.push(check(Axiom::InvolutionPreservesGrading, preserves));

        ValidationReport { checks }
    }

    /// Basis (reduced echelon, leading pivots) of `A_degree`, or of its
    /// symmetric / skew part when `symmetric` is given.
    pub fn homogeneous_basis(&self, degree: Option<u8>, symmetric: Option<bool>) -> Result<Vec<Element>> {
        let n = self.dim();
        let in_degree: Vec<usize> = match degree {
            None => (0..n).collect(),
            Some(g) => {
                let grading = self.grading.as_ref().ok_or_else(|| Error::Mode("degree requested without a grading".into()))?;
                (0..n).filter(|&i| grading[i] == g).collect()
            }
        };
        let mut ech = Echelon::new(PivotSide::Leading);
        for &i in &in_degree {
            let b = Element::basis(n, i);
            let v = match symmetric {
                None => b,
                Some(sym) => {
                    let s = self.star(&b).map_err(|_| Error::Mode("sign requested without an involution".into()))?;
                    if sym {
                        b.add(&s)
                    } else {
                        b.sub(&s)
                    }
                }
            };
            ech.insert(&SparseVec::from_dense(&v.coeffs));
        }
        Ok(ech.sorted_rows().into_iter().map(|r| Element { coeffs: r.to_dense(n) }).collect())
    }

    /// Basis of the component a variable of `kind` ranges over in `mode`.
    pub fn component_basis(&self, kind: Kind, mode: Mode) -> Result<Vec<Element>> {
        if !mode.admits(kind) {
            return Err(Error::Mode(format!("{kind:?} variables are not admissible in {} mode", mode.name())));
        }
        self.supports(mode)?;
        let degree = if mode.uses_grading() {
            match &self.grading {
                Some(_) => Some(kind.degree()),
                None if kind.degree() == 0 => None,
                None => return Ok(Vec::new()),
            }
        } else {
            None
        };
        let symmetric = mode.uses_involution().then_some(kind.is_symmetric());
        self.homogeneous_basis(degree, symmetric)
    }

    /// Copy with a different name.
    pub fn renamed(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    /// Copy with the grading replaced.
    pub fn with_grading(mut self, grading: Option<Vec<u8>>) -> Self {
        self.grading = grading;
        self
    }

    /// Copy with one structure constant replaced; used to build broken specs.
    pub fn with_structure_constant(&self, i: usize, j: usize, k: usize, c: Rational) -> Self {
        let mut s = self.clone();
        let cell = &mut s.mult[i][j];
        cell.retain(|e| e.0 != k);
        if !c.is_zero() {
            cell.push((k, c));
            cell.sort_by_key(|e| e.0);
        }
        s
    }
}

fn check(axiom: Axiom, outcome: Option<Option<Vec<usize>>>) -> AxiomCheck {
    match outcome {
        None => AxiomCheck { axiom, status: AxiomStatus::NotApplicable, witness: None },
        Some(None) => AxiomCheck { axiom, status: AxiomStatus::Pass, witness: None },
        Some(Some(w)) => AxiomCheck { axiom, status: AxiomStatus::Fail, witness: Some(w) },
    }
}

/// Basis indices of 𝒜.
pub mod basis {
    pub const U: usize = 0;
    pub const D: usize = 1;
    pub const A: usize = 2;
    pub const B: usize = 3;
    pub const C: usize = 4;
}

/// Names accepted by [`builtin`].
pub const BUILTIN_NAMES: [&str; 6] = ["A1", "A2", "A3", "A-star", "A1-star", "A-trivial"];

/// The undecorated algebra 𝒜.
pub fn base_algebra() -> AlgebraSpec {
    use basis::*;
    let one = Rational::int(1);
    let mut mult = vec![vec![Vec::new(); 5]; 5];
    for (i, j, k) in [(U, U, U), (U, A, A), (U, C, C), (C, U, C), (B, U, B), (D, D, D), (A, D, A), (D, B, B), (A, B, C)] {
        mult[i][j] = vec![(k, one.clone())];
    }
    AlgebraSpec {
        name: "A".into(),
        labels: ["e11+e33", "e22", "e12", "e23", "e13"].iter().map(|s| s.to_string()).collect(),
        mult,
        unit: Some(Element::from_ints(&[1, 1, 0, 0, 0])),
        grading: None,
        involution: None,
    }
}

/// Reflection along the secondary diagonal: swaps `e12` and `e23`.
pub fn flip_involution() -> Vec<Element> {
    let mut rows: Vec<Element> = (0..5).map(|i| Element::basis(5, i)).collect();
    rows.swap(basis::A, basis::B);
    rows
}

/// Canonical spelling of a built-in name (case-insensitive; `-` and `_` optional).
pub fn canonical_name(name: &str) -> Option<String> {
    let key: String = name.chars().filter(|c| *c != '-' && *c != '_').collect::<String>().to_ascii_lowercase();
    let canon = match key.as_str() {
        "a1" => "A1",
        "a2" => "A2",
        "a3" => "A3",
        "astar" => "A-star",
        "a1star" => "A1-star",
        "atrivial" | "a" => "A-trivial",
        _ => return None,
    };
    Some(canon.to_string())
}

/// Built-in algebras by name (case-insensitive; `-` and `_` optional).
pub fn builtin(name: &str) -> Result<AlgebraSpec> {
    let key = canonical_name(name).ok_or_else(|| Error::UnknownAlgebra(name.to_string()))?;
    let base = base_algebra();
    let spec = match key.as_str() {
        "A1" => base.with_grading(Some(vec![0, 0, 1, 1, 0])).renamed("A1"),
        "A2" => base.with_grading(Some(vec![0, 0, 0, 1, 1])).renamed("A2"),
        "A3" => base.with_grading(Some(vec![0, 0, 1, 0, 1])).renamed("A3"),
        "A-star" => AlgebraSpec { involution: Some(flip_involution()), ..base }.renamed("A-star"),
        "A1-star" => AlgebraSpec { involution: Some(flip_involution()), grading: Some(vec![0, 0, 1, 1, 0]), ..base }.renamed("A1-star"),
        _ => base.with_grading(Some(vec![0; 5])).renamed("A-trivial"),
    };
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 3×3 matrix of an element of 𝒜, computed from matrix units.
    fn matrix(x: &Element) -> [[Rational; 3]; 3] {
        let c = &x.coeffs;
        let z = Rational::int(0);
        [[c[0].clone(), c[2].clone(), c[4].clone()], [z.clone(), c[1].clone(), c[3].clone()], [z.clone(), z, c[0].clone()]]
    }

    fn matmul(a: &[[Rational; 3]; 3], b: &[[Rational; 3]; 3]) -> [[Rational; 3]; 3] {
        std::array::from_fn(|i| std::array::from_fn(|j| (0..3).map(|k| &a[i][k] * &b[k][j]).sum()))
    }

    #[test]
    fn structure_constants_match_matrix_units() {
        let spec = base_algebra();
        for i in 0..5 {
            for j in 0..5 {
                let (x, y) = (Element::basis(5, i), Element::basis(5, j));
                let p = spec.multiply(&x, &y).unwrap();
                assert_eq!(matrix(&p), matmul(&matrix(&x), &matrix(&y)), "b{i} b{j}");
            }
        }
    }

    #[test]
    fn product_examples() {
        use basis::*;
        let s = base_algebra();
        let e = |i| Element::basis(5, i);
        assert_eq!(s.multiply(&e(A), &e(B)).unwrap(), e(C));
        assert!(s.multiply(&e(B), &e(A)).unwrap().is_zero());
        assert_eq!(s.multiply(&e(U), &e(A)).unwrap(), e(A));
        assert!(s.multiply(&e(A), &e(U)).unwrap().is_zero());
        assert!(matches!(s.multiply(&Element::zero(3), &e(A)), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn builtins_validate() {
        for name in BUILTIN_NAMES {
            let spec = builtin(name).unwrap();
            assert!(spec.validate().all_pass(), "{name}");
        }
        let star = builtin("A-star").unwrap().validate();
        assert_eq!(star.status(Axiom::InvolutionAntihomomorphism).unwrap().status, AxiomStatus::Pass);
        assert_eq!(builtin("A1star").unwrap().mode(), Mode::GradedInvolution);
        assert_eq!(builtin("A-trivial").unwrap().mode(), Mode::Ungraded);
        assert!(builtin("B7").is_err());
    }

    #[test]
    fn perturbed_constant_breaks_associativity() {
        let s = base_algebra().with_structure_constant(basis::B, basis::A, basis::C, Rational::int(1));
        let r = s.validate();
        let a = r.status(Axiom::Associativity).unwrap();
        assert_eq!(a.status, AxiomStatus::Fail);
        assert!(a.witness.is_some());
    }

    #[test]
    fn radical_cubes_to_zero() {
        let s = base_algebra();
        for i in [2, 3, 4] {
            for j in [2, 3, 4] {
                for k in [2, 3, 4] {
                    let (x, y, z) = (Element::basis(5, i), Element::basis(5, j), Element::basis(5, k));
                    assert!(s.mul_unchecked(&s.mul_unchecked(&x, &y), &z).is_zero());
                }
            }
        }
    }

    #[test]
    fn component_bases() {
        let a1 = builtin("A1").unwrap();
        assert_eq!(a1.homogeneous_basis(Some(1), None).unwrap(), vec![Element::from_ints(&[0, 0, 1, 0, 0]), Element::from_ints(&[0, 0, 0, 1, 0])]);
        let star = builtin("A-star").unwrap();
        assert_eq!(star.homogeneous_basis(None, Some(false)).unwrap(), vec![Element::from_ints(&[0, 0, 1, -1, 0])]);
        assert_eq!(star.homogeneous_basis(None, Some(true)).unwrap().len(), 4);
        let a1s = builtin("A1-star").unwrap();
        assert!(a1s.homogeneous_basis(Some(0), Some(false)).unwrap().is_empty());
        assert!(matches!(a1.homogeneous_basis(None, Some(true)), Err(Error::Mode(_))));
        assert!(matches!(star.homogeneous_basis(Some(0), None), Err(Error::Mode(_))));
    }

    #[test]
    fn gradings_place_c_as_stated() {
        // c = e13 is even in A1, odd in A2 and A3; each has a two-dimensional odd part.
        for (name, c_deg) in [("A1", 0), ("A2", 1), ("A3", 1)] {
            let s = builtin(name).unwrap();
            assert_eq!(s.grading().unwrap()[basis::C], c_deg);
            assert_eq!(s.homogeneous_basis(Some(1), None).unwrap().len(), 2);
        }
        assert_eq!(builtin("A3").unwrap().grading().unwrap()[basis::B], 0);
    }

    #[test]
    fn json_round_trip() {
        let s = builtin("A1-star").unwrap();
        let back = AlgebraSpec::from_json(&s.to_json()).unwrap();
        assert_eq!(back, s);
        assert!(AlgebraSpec::from_json(r#"{"dim":2,"labels":["a"],"mult":[]}"#).is_err());
    }
}

//! Partitions, Young tableaux and symmetrizers, and the multiplicities of
//! irreducible modules in P/Id.
//!
//! Permutations act on variables of one kind by renaming:
//! `σ·f(x₁,…,xₙ) = f(x_{σ(1)},…,x_{σ(n)})`. For a tableau tuple T,
//! `e_T = (Σ_{ρ∈R_T} ρ)(Σ_{γ∈C_T} sgn γ · γ)`, and the multiplicity of the
//! shape in the quotient module M is `dim e_T M`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::AlgebraSpec;
use crate::error::{Error, Result};
use crate::free::{permutation_sign, permutations, Kind, Mode, Monomial, Polynomial, Variable};
use crate::identity::{is_identity, Quotient};
use crate::linalg::{Echelon, PivotSide, SparseVec};
use crate::multilinear::{factorial, rank_word, unrank_word, Signature};
use crate::parse::parse_polynomial;
use crate::rational::Rational;

/// A partition with positive, weakly decreasing parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: &[usize]) -> Result<Self> {
        let parts: Vec<usize> = parts.iter().copied().filter(|&x| x > 0).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!("parts {parts:?} are not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts, `h(λ)`.
    pub fn height(&self) -> usize {
        self.0.len()
    }

    /// Partitions of `n`, from `(n)` down to `(1ⁿ)` in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for x in (1..=n.min(max)).rev() {
                cur.push(x);
                rec(n - x, x, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Conjugate partition.
    pub fn conjugate(&self) -> Partition {
        let w = self.0.first().copied().unwrap_or(0);
        Partition((0..w).map(|j| self.0.iter().filter(|&&r| r > j).count()).collect())
    }

    /// Dimension of the irreducible module, by the hook-length formula.
    pub fn dimension(&self) -> usize {
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                hooks *= ((row - j - 1) + (conj.0[j] - i - 1) + 1) as u128;
            }
        }
        (factorial(self.size()) as u128 / hooks) as usize
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Partition> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if inner.is_empty() || inner == "∅" {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse { pos: 0, msg: format!("bad partition {s:?}") }))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(&parts)
    }
}

/// Formats a shape tuple as `(3,1)|(1)`.
pub fn format_shapes(shapes: &[Partition]) -> String {
    shapes.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("|")
}

/// A standard filling of a shape by a set of labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let w = self.rows.first().map_or(0, Vec::len);
        (0..w).map(|j| self.rows.iter().filter_map(|r| r.get(j).copied()).collect()).collect()
    }

    /// The tableau filled row by row with the sorted labels.
    pub fn row_reading(shape: &Partition, labels: &[usize]) -> Result<Self> {
        check_labels(shape, labels)?;
        let mut sorted = labels.to_vec();
        sorted.sort_unstable();
        let mut it = sorted.into_iter();
        let rows = shape.parts().iter().map(|&r| it.by_ref().take(r).collect()).collect();
        Ok(StandardTableau { shape: shape.clone(), rows })
    }
}

fn check_labels(shape: &Partition, labels: &[usize]) -> Result<()> {
    if labels.len() != shape.size() {
        return Err(Error::DimensionMismatch { expected: shape.size(), got: labels.len() });
    }
    let mut s = labels.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.len() != labels.len() {
        return Err(Error::Precondition("tableau labels must be distinct".into()));
    }
    Ok(())
}

/// All standard tableaux of `shape` filled with `labels`, in the order found by
/// placing labels in increasing order into the topmost available row.
pub fn standard_tableaux(shape: &Partition, labels: &[usize]) -> Result<Vec<StandardTableau>> {
    check_labels(shape, labels)?;
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.height()];
    fn rec(k: usize, sorted: &[usize], shape: &[usize], rows: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if k == sorted.len() {
            out.push(rows.clone());
            return;
        }
        for i in 0..shape.len() {
            if rows[i].len() < shape[i] && (i == 0 || rows[i - 1].len() > rows[i].len()) {
                rows[i].push(sorted[k]);
                rec(k + 1, sorted, shape, rows, out);
                rows[i].pop();
            }
        }
    }
    let mut fillings = Vec::new();
    rec(0, &sorted, shape.parts(), &mut rows, &mut fillings);
    for r in fillings {
        out.push(StandardTableau { shape: shape.clone(), rows: r });
    }
    Ok(out)
}

/// All permutations of `0..n` (as position maps) preserving each block, with signs.
fn block_group(n: usize, blocks: &[Vec<usize>]) -> Vec<(i64, Vec<u8>)> {
    let mut group: Vec<(i64, Vec<u8>)> = vec![(1, (0..n as u8).collect())];
    for b in blocks.iter().filter(|b| b.len() > 1) {
        let perms = permutations(b.len());
        let mut next = Vec::with_capacity(group.len() * perms.len());
        for (s, g) in &group {
            for p in &perms {
                let mut h = g.clone();
                for (i, &j) in p.iter().enumerate() {
                    h[b[i]] = b[j] as u8;
                }
                next.push((s * permutation_sign(p), h));
            }
        }
        group = next;
    }
    group
}

/// `(sign, ρ∘γ)` for ρ in the row group and γ in the column group of a
/// tableau tuple, as maps on signature positions.
fn symmetrizer_terms(sig: &Signature, tabs: &[StandardTableau]) -> Result<Vec<(i64, Vec<u8>)>> {
    let mode = sig.mode();
    if tabs.len() != mode.kinds().len() {
        return Err(Error::DimensionMismatch { expected: mode.kinds().len(), got: tabs.len() });
    }
    let vars = sig.variables();
    let n = vars.len();
    let mut row_blocks = Vec::new();
    let mut col_blocks = Vec::new();
    for (&kind, t) in mode.kinds().iter().zip(tabs) {
        let pos = |label: usize| -> Result<usize> {
            vars.binary_search(&Variable::new(kind, label as u32))
                .map_err(|_| Error::Precondition(format!("tableau label {label} is not a variable of kind {kind:?} in {sig}")))
        };
        if t.shape.size() != sig.count(kind) {
            return Err(Error::DimensionMismatch { expected: sig.count(kind), got: t.shape.size() });
        }
        for r in &t.rows {
            row_blocks.push(r.iter().map(|&l| pos(l)).collect::<Result<Vec<_>>>()?);
        }
        for c in t.columns() {
            col_blocks.push(c.iter().map(|&l| pos(l)).collect::<Result<Vec<_>>>()?);
        }
    }
    let rows = block_group(n, &row_blocks);
    let cols = block_group(n, &col_blocks);
    let mut out = Vec::with_capacity(rows.len() * cols.len());
    for (_, r) in &rows {
        for (s, c) in &cols {
            out.push((*s, c.iter().map(|&x| r[x as usize]).collect()));
        }
    }
    Ok(out)
}

/// Applies `e_T` to a polynomial of the signature spanned by the tableaux.
pub fn symmetrizer_apply(tabs: &[StandardTableau], p: &Polynomial, mode: Mode) -> Result<Polynomial> {
    let counts: Vec<usize> = tabs.iter().map(|t| t.shape.size()).collect();
    let sig = Signature::new(mode, &counts)?;
    let vars = sig.variables();
    let terms = symmetrizer_terms(&sig, tabs)?;
    let mut out = Polynomial::zero();
    for (s, g) in &terms {
        let renamed = p.rename(|v| match vars.binary_search(&v) {
            Ok(i) => vars[g[i] as usize],
            Err(_) => v,
        });
        out = &out + &renamed.scale(&Rational::int(*s));
    }
    Ok(out)
}

/// Multiplicity of a shape tuple, with witnesses.
#[derive(Clone, Debug, Serialize)]
pub struct MultiplicityResult {
    pub shapes: Vec<Partition>,
    pub multiplicity: usize,
    /// Quotient coordinates of independent vectors `e_T w`.
    pub witnesses: Vec<SparseVec>,
    /// The monomials `w` generating the witnesses.
    pub generators: Vec<Monomial>,
}

/// Multiplicity of `shapes` computed on an existing quotient.
pub fn multiplicity_in(q: &Quotient, shapes: &[Partition]) -> Result<MultiplicityResult> {
    let sig = q.signature();
    let tabs = shapes
        .iter()
        .zip(sig.mode().kinds())
        .map(|(s, &k)| StandardTableau::row_reading(s, &(1..=sig.count(k)).collect::<Vec<_>>()))
        .collect::<Result<Vec<_>>>()?;
    multiplicity_with(q, &tabs)
}

/// Multiplicity computed with a prescribed tableau tuple.
pub fn multiplicity_with(q: &Quotient, tabs: &[StandardTableau]) -> Result<MultiplicityResult> {
    let sig = q.signature();
    let shapes: Vec<Partition> = tabs.iter().map(|t| t.shape.clone()).collect();
    let terms = symmetrizer_terms(sig, tabs)?;
    let n = sig.total();
    let r = q.dim();
    let irreducible: usize = shapes.iter().map(Partition::dimension).product();
    let bound = r / irreducible;
    let mut ech = Echelon::unreduced(PivotSide::Leading);
    let mut witnesses = Vec::new();
    let mut generators = Vec::new();
    for &w in q.quotient_monomials() {
        if ech.rank() >= bound {
            break;
        }
        let word = unrank_word(w, n);
        let mut acc = vec![Rational::int(0); r];
        for (s, g) in &terms {
            let image: Vec<u8> = word.iter().map(|&x| g[x as usize]).collect();
            for (j, c) in q.coordinates(rank_word(&image)).iter() {
                if *s > 0 {
                    acc[j] += c;
                } else {
                    acc[j] -= c;
                }
            }
        }
        let v = SparseVec::from_dense(&acc);
        if ech.insert(&v) {
            witnesses.push(v);
            generators.push(q.basis().monomial(w));
        }
    }
    Ok(MultiplicityResult { shapes, multiplicity: witnesses.len(), witnesses, generators })
}

/// Multiplicity of a shape tuple in the algebra's own mode.
pub fn multiplicity(spec: &AlgebraSpec, shapes: &[Partition]) -> Result<MultiplicityResult> {
    let counts: Vec<usize> = shapes.iter().map(Partition::size).collect();
    let sig = Signature::new(spec.mode(), &counts)?;
    multiplicity_in(&Quotient::new(spec, &sig)?, shapes)
}

/// Every shape tuple of a signature, kinds in mode order.
pub fn shape_tuples(sig: &Signature) -> Vec<Vec<Partition>> {
    let mut out: Vec<Vec<Partition>> = vec![Vec::new()];
    for &c in sig.counts() {
        out = out.into_iter().flat_map(|t| Partition::all(c).into_iter().map(move |p| [t.clone(), vec![p]].concat())).collect();
    }
    out
}

/// All multiplicities of a signature.
pub fn cocharacter(spec: &AlgebraSpec, sig: &Signature) -> Result<Vec<MultiplicityResult>> {
    let q = Quotient::new(spec, sig)?;
    shape_tuples(sig).iter().map(|s| multiplicity_in(&q, s)).collect()
}

/// `Σ m_λ · dim λ` over a cocharacter.
pub fn decomposition_dimension(results: &[MultiplicityResult]) -> usize {
    results.iter().map(|r| r.multiplicity * r.shapes.iter().map(Partition::dimension).product::<usize>()).sum()
}

/// Closed-form multiplicities for the graded algebras with known cocharacters.
pub mod expected {
    use super::Partition;

    /// `(p+q, p)` for a partition with at most two rows.
    fn two_row(l: &Partition) -> Option<(usize, usize)> {
        match l.parts() {
            [] => Some((0, 0)),
            [a] => Some((0, *a)),
            [a, b] => Some((*b, a - b)),
            _ => None,
        }
    }

    /// 𝒜¹ with shapes `(λ, μ)` for even and odd variables.
    pub fn a1(shapes: &[Partition]) -> usize {
        let (l, m) = (&shapes[0], &shapes[1]);
        match m.size() {
            0 => usize::from(l.height() == 1),
            1 | 2 => two_row(l).map_or(0, |(_, q)| q + 1),
            _ => 0,
        }
    }

    /// 𝒜¹ with the graded involution, shapes `(λ₁, λ₂, λ₃, λ₄)`.
    pub fn a1_star(shapes: &[Partition]) -> usize {
        let (l1, l2, l3, l4) = (&shapes[0], &shapes[1], &shapes[2], &shapes[3]);
        if l2.size() > 0 {
            return 0;
        }
        match l3.size() + l4.size() {
            0 => usize::from(l1.height() == 1),
            1 | 2 if l3.height() <= 1 && l4.height() <= 1 => two_row(l1).map_or(0, |(_, q)| q + 1),
            _ => 0,
        }
    }

    /// Formula for a built-in algebra name, if one is known.
    pub fn for_algebra(name: &str) -> Option<fn(&[Partition]) -> usize> {
        match crate::algebra::canonical_name(name).as_deref() {
            Some("A1") => Some(a1),
            Some("A1-star") => Some(a1_star),
            _ => None,
        }
    }
}

/// Families of highest weight vectors for 𝒜¹.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum HwvKind {
    /// one odd variable
    N1Case,
    /// two odd variables, symmetric
    N2Sym,
    /// two odd variables, alternated
    N2Mixed,
}

impl FromStr for HwvKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "n1case" => Ok(HwvKind::N1Case),
            "n2sym" => Ok(HwvKind::N2Sym),
            "n2mixed" => Ok(HwvKind::N2Mixed),
            _ => Err(Error::Precondition(format!("unknown family {s:?}"))),
        }
    }
}

fn pow(v: Variable, k: usize) -> Monomial {
    Monomial(vec![v; k])
}

/// `y₁^i (ȳ₁⋯ỹ₁)_p z (ȳ₂⋯ỹ₂)_p y₁^{q−i}` (with a trailing odd letter for the
/// two-variable families), where each barred position of the left block is
/// alternated with the matching position of the right block; returned
/// multilinearised.
pub fn hwv_family(kind: HwvKind, p: usize, q: usize, i: usize) -> Result<Polynomial> {
    if i > q {
        return Err(Error::Precondition(format!("index {i} exceeds q = {q}")));
    }
    let y1 = Variable::new(Kind::EvenSym, 1);
    let y2 = Variable::new(Kind::EvenSym, 2);
    let z1 = Variable::new(Kind::OddSym, 1);
    let z2 = Variable::new(Kind::OddSym, 2);
    let body = |mid: Variable, tail: Option<Variable>| -> Polynomial {
        let mut out = Polynomial::zero();
        for s in 0u32..(1 << p) {
            let left: Vec<Variable> = (0..p).map(|k| if s & (1 << k) != 0 { y2 } else { y1 }).collect();
            let right: Vec<Variable> = (0..p).map(|k| if s & (1 << k) != 0 { y1 } else { y2 }).collect();
            let mut w = pow(y1, i).0;
            w.extend(left);
            w.push(mid);
            w.extend(right);
            w.extend(pow(y1, q - i).0);
            w.extend(tail);
            let sign = if s.count_ones() % 2 == 0 { 1 } else { -1 };
            out.add_term(Monomial(w), Rational::int(sign));
        }
        out
    };
    let f = match kind {
        HwvKind::N1Case => body(z1, None),
        HwvKind::N2Sym => body(z1, Some(z1)),
        HwvKind::N2Mixed => &body(z1, Some(z2)) - &body(z2, Some(z1)),
    };
    crate::free::linearize(&f)
}

/// Both sides of the alternation-to-binomial rewrite in the even symmetric
/// and odd symmetric variables of the graded-involution mode:
/// `(ȳ₁⋯ỹ₁)_p y₁^{i₁−p} z y₁^{i₂−p} (ȳ₂⋯ỹ₂)_p` and
/// `Σ_j (−1)^j C(p,j) y₁^{i₁−j} y₂^j z y₁^{i₂−p+j} y₂^{p−j}`.
pub fn binomial_rewrite(p: usize, i1: usize, i2: usize) -> Result<(Polynomial, Polynomial)> {
    if p < 1 || i1 < p || i2 < p {
        return Err(Error::Precondition(format!("need i1, i2 >= p >= 1, got p={p}, i1={i1}, i2={i2}")));
    }
    let y1 = Variable::new(Kind::EvenSym, 1);
    let y2 = Variable::new(Kind::EvenSym, 2);
    let z = Variable::new(Kind::OddSym, 1);
    let mut lhs = Polynomial::zero();
    for s in 0u32..(1 << p) {
        let mut w: Vec<Variable> = (0..p).map(|k| if s & (1 << k) != 0 { y2 } else { y1 }).collect();
        w.extend(pow(y1, i1 - p).0);
        w.push(z);
        w.extend(pow(y1, i2 - p).0);
        w.extend((0..p).map(|k| if s & (1 << k) != 0 { y1 } else { y2 }));
        lhs.add_term(Monomial(w), Rational::int(if s.count_ones() % 2 == 0 { 1 } else { -1 }));
    }
    let mut rhs = Polynomial::zero();
    let mut binom: i64 = 1;
    for j in 0..=p {
        let mut w = pow(y1, i1 - j).0;
        w.extend(pow(y2, j).0);
        w.push(z);
        w.extend(pow(y1, i2 - p + j).0);
        w.extend(pow(y2, p - j).0);
        rhs.add_term(Monomial(w), Rational::int(if j % 2 == 0 { binom } else { -binom }));
        binom = binom * (p - j) as i64 / (j + 1) as i64;
    }
    Ok((lhs, rhs))
}

/// Checks the binomial rewrite modulo the graded-involution identities of 𝒜¹.
pub fn verify_binomial_rewrite(p: usize, i1: usize, i2: usize) -> Result<bool> {
    let (lhs, rhs) = binomial_rewrite(p, i1, i2)?;
    let spec = crate::algebra::builtin("A1-star")?;
    Ok(is_identity(&spec, &(&lhs - &rhs))?.holds())
}

/// Parses a polynomial and applies the symmetrizer of row-reading tableaux.
pub fn symmetrize_str(src: &str, shapes: &[Partition], mode: Mode) -> Result<Polynomial> {
    let p = parse_polynomial(src, mode)?;
    let tabs = shapes.iter().map(|s| StandardTableau::row_reading(s, &(1..=s.size()).collect::<Vec<_>>())).collect::<Result<Vec<_>>>()?;
    symmetrizer_apply(&tabs, &p, mode)
}

/// Multiplicities keyed by the displayed shape tuple.
pub fn cocharacter_table(results: &[MultiplicityResult]) -> BTreeMap<String, usize> {
    results.iter().map(|r| (format_shapes(&r.shapes), r.multiplicity)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builtin;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p).unwrap()
    }

    #[test]
    fn partitions_and_hooks() {
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!(Partition::all(0), vec![Partition::empty()]);
        assert_eq!(part(&[2, 1]).dimension(), 2);
        assert_eq!(part(&[3, 2]).dimension(), 5);
        assert_eq!(part(&[3, 3]).dimension(), 5);
        assert_eq!(Partition::empty().dimension(), 1);
        assert!(Partition::new(&[1, 2]).is_err());
        assert_eq!("(3,1)".parse::<Partition>().unwrap(), part(&[3, 1]));
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
    }

    #[test]
    fn tableau_counts() {
        assert_eq!(standard_tableaux(&part(&[2]), &[1, 2]).unwrap().len(), 1);
        assert_eq!(standard_tableaux(&part(&[2, 1]), &[1, 2, 3]).unwrap().len(), 2);
        assert_eq!(standard_tableaux(&part(&[2, 2]), &[1, 2, 3, 4]).unwrap().len(), 2);
        assert!(standard_tableaux(&part(&[2]), &[1]).is_err());
        for n in 1..=6 {
            for l in Partition::all(n) {
                let labels: Vec<usize> = (1..=n).collect();
                assert_eq!(standard_tableaux(&l, &labels).unwrap().len(), l.dimension());
            }
        }
    }

    #[test]
    fn symmetrizer_examples() {
        let m = Mode::Ungraded;
        assert_eq!(symmetrize_str("x1 x2", &[part(&[1, 1])], m).unwrap(), parse_polynomial("x1 x2 - x2 x1", m).unwrap());
        assert_eq!(symmetrize_str("x1 x2", &[part(&[2])], m).unwrap(), parse_polynomial("x1 x2 + x2 x1", m).unwrap());
    }

    #[test]
    fn a1_multiplicity_examples() {
        let a1 = builtin("A1").unwrap();
        assert_eq!(multiplicity(&a1, &[part(&[4]), Partition::empty()]).unwrap().multiplicity, 1);
        assert_eq!(multiplicity(&a1, &[part(&[3, 1]), part(&[1])]).unwrap().multiplicity, 3);
        assert_eq!(multiplicity(&a1, &[part(&[2, 1, 1]), part(&[1])]).unwrap().multiplicity, 0);
        let r = multiplicity(&a1, &[part(&[2, 1]), part(&[1, 1])]).unwrap();
        assert_eq!(r.multiplicity, 2);
        assert_eq!(r.witnesses.len(), 2);
    }

    #[test]
    fn binomial_base_cases() {
        assert!(verify_binomial_rewrite(1, 1, 1).unwrap());
        assert!(verify_binomial_rewrite(2, 2, 2).unwrap());
        assert!(verify_binomial_rewrite(0, 1, 1).is_err());
        assert!(verify_binomial_rewrite(2, 1, 3).is_err());
    }

    #[test]
    fn hwv_examples() {
        let g = Mode::Graded;
        assert_eq!(hwv_family(HwvKind::N1Case, 0, 1, 0).unwrap(), parse_polynomial("z1 y1", g).unwrap());
        assert_eq!(hwv_family(HwvKind::N1Case, 1, 0, 0).unwrap(), parse_polynomial("y1 z1 y2 - y2 z1 y1", g).unwrap());
        assert!(hwv_family(HwvKind::N1Case, 1, 0, 1).is_err());
    }
}

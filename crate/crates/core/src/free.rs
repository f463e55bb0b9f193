//! The free graded / involution / graded-involution algebra: typed variables,
//! words, and polynomials with exact rational coefficients.
//!
//! Monomials are ordered lexicographically on `(kind, index)` sequences with
//! the kind ranks `EvenSym < EvenSkew < OddSym < OddSkew`; a [`Polynomial`] is
//! kept canonical (sorted, no zero coefficients).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Variable kind: degree parity and symmetry under the involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Kind {
    EvenSym,
    EvenSkew,
    OddSym,
    OddSkew,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::EvenSym, Kind::EvenSkew, Kind::OddSym, Kind::OddSkew];

    /// ℤ₂-degree of the variable.
    pub fn degree(self) -> u8 {
        match self {
            Kind::EvenSym | Kind::EvenSkew => 0,
            Kind::OddSym | Kind::OddSkew => 1,
        }
    }

    pub fn is_symmetric(self) -> bool {
        matches!(self, Kind::EvenSym | Kind::OddSym)
    }

    /// `+1` for symmetric kinds, `-1` for skew kinds.
    pub fn sign(self) -> i64 {
        if self.is_symmetric() {
            1
        } else {
            -1
        }
    }

    pub fn from_parts(degree: u8, symmetric: bool) -> Kind {
        match (degree, symmetric) {
            (0, true) => Kind::EvenSym,
            (0, false) => Kind::EvenSkew,
            (_, true) => Kind::OddSym,
            (_, false) => Kind::OddSkew,
        }
    }
}

/// Which decorations of the algebra the variables see.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Ungraded,
    Graded,
    Involution,
    GradedInvolution,
}

impl Mode {
    /// Admissible kinds, in count order.
    pub fn kinds(self) -> &'static [Kind] {
        match self {
            Mode::Ungraded => &[Kind::EvenSym],
            Mode::Graded => &[Kind::EvenSym, Kind::OddSym],
            Mode::Involution => &[Kind::EvenSym, Kind::EvenSkew],
            Mode::GradedInvolution => &Kind::ALL,
        }
    }

    pub fn uses_grading(self) -> bool {
        matches!(self, Mode::Graded | Mode::GradedInvolution)
    }

    pub fn uses_involution(self) -> bool {
        matches!(self, Mode::Involution | Mode::GradedInvolution)
    }

    pub fn admits(self, kind: Kind) -> bool {
        self.kinds().contains(&kind)
    }

    /// Position of `kind` in [`Mode::kinds`].
    pub fn slot(self, kind: Kind) -> Option<usize> {
        self.kinds().iter().position(|&k| k == kind)
    }

    /// Printed letter for a variable of `kind`.
    pub fn letter(self, kind: Kind) -> &'static str {
        match (self, kind) {
            (Mode::Ungraded, Kind::EvenSym) => "x",
            (Mode::Graded, Kind::EvenSym) | (Mode::Involution, Kind::EvenSym) => "y",
            (Mode::Graded, Kind::OddSym) | (Mode::Involution, Kind::EvenSkew) => "z",
            (_, Kind::EvenSym) => "yp",
            (_, Kind::EvenSkew) => "ym",
            (_, Kind::OddSym) => "zp",
            (_, Kind::OddSkew) => "zm",
        }
    }

    /// Smallest mode whose kind set contains every kind in `kinds`.
    pub fn natural_for(kinds: impl IntoIterator<Item = Kind>) -> Mode {
        let (mut skew, mut odd) = (false, false);
        for k in kinds {
            skew |= !k.is_symmetric();
            odd |= k.degree() == 1;
        }
        match (skew, odd) {
            (false, false) => Mode::Graded,
            (false, true) => Mode::Graded,
            (true, false) => Mode::Involution,
            (true, true) => Mode::GradedInvolution,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::Ungraded => "ungraded",
            Mode::Graded => "graded",
            Mode::Involution => "involution",
            Mode::GradedInvolution => "graded-involution",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Mode> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "ungraded" => Ok(Mode::Ungraded),
            "graded" => Ok(Mode::Graded),
            "involution" => Ok(Mode::Involution),
            "graded-involution" => Ok(Mode::GradedInvolution),
            _ => Err(Error::Mode(format!("unknown mode {s:?}"))),
        }
    }
}

/// A free variable `(kind, index)`; indices start at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Variable {
    pub kind: Kind,
    pub index: u32,
}

impl Variable {
    pub const fn new(kind: Kind, index: u32) -> Self {
        Variable { kind, index }
    }

    pub fn display(self, mode: Mode) -> String {
        format!("{}{}", mode.letter(self.kind), self.index)
    }
}

/// A word in the free variables.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial(pub Vec<Variable>);

impl Monomial {
    pub fn empty() -> Self {
        Monomial(Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn letters(&self) -> &[Variable] {
        &self.0
    }

    /// ℤ₂-degree of the word.
    pub fn parity(&self) -> u8 {
        (self.0.iter().filter(|v| v.kind.degree() == 1).count() % 2) as u8
    }

    /// Occurrence count of each variable.
    pub fn multidegree(&self) -> BTreeMap<Variable, usize> {
        let mut m = BTreeMap::new();
        for v in &self.0 {
            *m.entry(*v).or_insert(0) += 1;
        }
        m
    }

    pub fn concat(&self, other: &Monomial) -> Monomial {
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0);
        Monomial(w)
    }
}

/// `(x₁⋯x_k)* = ±x_k⋯x₁`, the sign being `(-1)^(number of skew letters)`.
pub fn star_monomial(m: &Monomial) -> (i64, Monomial) {
    let skew = m.0.iter().filter(|v| !v.kind.is_symmetric()).count();
    let sign = if skew % 2 == 0 { 1 } else { -1 };
    (sign, Monomial(m.0.iter().rev().copied().collect()))
}

/// A noncommutative polynomial with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::int(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::empty(), c)
    }

    pub fn var(v: Variable) -> Self {
        Self::term(Monomial(vec![v]), Rational::int(1))
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c·m` in place.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    /// All variables occurring in the polynomial.
    pub fn variables(&self) -> BTreeSet<Variable> {
        self.terms.keys().flat_map(|m| m.0.iter().copied()).collect()
    }

    /// Whether every monomial contains each variable of the polynomial exactly once.
    pub fn is_multilinear(&self) -> bool {
        let vars = self.variables();
        self.terms.keys().all(|m| m.0.len() == vars.len() && m.multidegree().values().all(|&d| d == 1))
    }

    /// Involution on the free algebra.
    pub fn star(&self) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| {
            let (s, w) = star_monomial(m);
            (w, c * &Rational::int(s))
        }))
    }

    /// Applies a variable renaming to every letter.
    pub fn rename(&self, f: impl Fn(Variable) -> Variable) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (Monomial(m.0.iter().map(|&v| f(v)).collect()), c.clone())))
    }

    /// Printable form using the letters of `mode`.
    pub fn display(&self, mode: Mode) -> PolyDisplay<'_> {
        PolyDisplay { poly: self, mode }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut p = self.clone();
        for (m, c) in &rhs.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut p = self.clone();
        for (m, c) in &rhs.terms {
            p.add_term(m.clone(), -c);
        }
        p
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&Rational::int(-1))
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut p = Polynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                p.add_term(a.concat(b), x * y);
            }
        }
        p
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial { (&self).$m(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

/// `[a, b] = ab - ba`.
pub fn commutator(a: &Polynomial, b: &Polynomial) -> Polynomial {
    &(a * b) - &(b * a)
}

/// `a ∘ b = ab + ba`.
pub fn circ(a: &Polynomial, b: &Polynomial) -> Polynomial {
    &(a * b) + &(b * a)
}

/// Left-normed commutator `[a₁, a₂, …, a_k] = [[a₁, a₂], …, a_k]`.
pub fn left_normed(entries: &[Polynomial]) -> Result<Polynomial> {
    if entries.len() < 2 {
        return Err(Error::Malformed(format!("commutator needs at least two entries, got {}", entries.len())));
    }
    let mut acc = entries[0].clone();
    for e in &entries[1..] {
        acc = commutator(&acc, e);
    }
    Ok(acc)
}

/// Sign of a permutation given as an image list.
pub fn permutation_sign(perm: &[usize]) -> i64 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// `Σ_{σ ∈ Sym(varset)} sign(σ)·σ(p)`, where σ renames the variables of `varset`.
pub fn alternate(p: &Polynomial, varset: &[Variable]) -> Result<Polynomial> {
    if let Some(first) = varset.first() {
        if varset.iter().any(|v| v.kind != first.kind) {
            return Err(Error::KindViolation("alternated variables must share a kind".into()));
        }
    }
    let distinct: BTreeSet<_> = varset.iter().collect();
    if distinct.len() != varset.len() {
        return Err(Error::Precondition("alternated variables must be distinct".into()));
    }
    let vars = p.variables();
    if let Some(v) = varset.iter().find(|v| !vars.contains(v)) {
        return Err(Error::Precondition(format!("variable {v:?} does not occur in the polynomial")));
    }
    let mut out = Polynomial::zero();
    for perm in permutations(varset.len()) {
        let sign = Rational::int(permutation_sign(&perm));
        let image = p.rename(|v| match varset.iter().position(|&w| w == v) {
            Some(k) => varset[perm[k]],
            None => v,
        });
        out = &out + &image.scale(&sign);
    }
    Ok(out)
}

/// Standard polynomial `Σ sign(σ) x_{σ(1)}⋯x_{σ(k)}`.
pub fn standard_polynomial(vars: &[Variable]) -> Polynomial {
    Polynomial::from_terms(permutations(vars.len()).into_iter().map(|perm| {
        let sign = Rational::int(permutation_sign(&perm));
        (Monomial(perm.iter().map(|&k| vars[k]).collect()), sign)
    }))
}

/// Checks that `value` may be substituted for a variable of `kind` in `mode`.
pub fn check_slot_value(kind: Kind, value: &Polynomial, mode: Mode) -> Result<()> {
    if mode.uses_grading() {
        if let Some((m, _)) = value.terms().find(|(m, _)| m.parity() != kind.degree()) {
            return Err(Error::KindViolation(format!(
                "degree-{} slot receives a monomial of degree {}: {}",
                kind.degree(),
                m.parity(),
                Polynomial::term(m.clone(), Rational::int(1)).display(mode)
            )));
        }
    }
    if mode.uses_involution() {
        let expected = value.scale(&Rational::int(kind.sign()));
        if value.star() != expected {
            let what = if kind.is_symmetric() { "symmetric" } else { "skew" };
            return Err(Error::KindViolation(format!("{what} slot receives {}", value.display(mode))));
        }
    }
    Ok(())
}

/// Free-algebra endomorphism sending each assigned variable to its value.
pub fn substitute(p: &Polynomial, assignment: &BTreeMap<Variable, Polynomial>, mode: Mode) -> Result<Polynomial> {
    for (v, value) in assignment {
        check_slot_value(v.kind, value, mode)?;
    }
    let mut out = Polynomial::zero();
    for (m, c) in p.terms() {
        let mut acc = Polynomial::constant(c.clone());
        for v in &m.0 {
            acc = match assignment.get(v) {
                Some(val) => &acc * val,
                None => &acc * &Polynomial::var(*v),
            };
        }
        out = &out + &acc;
    }
    Ok(out)
}

/// Splits `p` into its multihomogeneous components, ordered by multidegree.
pub fn multihomogeneous_components(p: &Polynomial) -> Vec<Polynomial> {
    let mut parts: BTreeMap<Vec<(Variable, usize)>, Polynomial> = BTreeMap::new();
    for (m, c) in p.terms() {
        let key: Vec<_> = m.multidegree().into_iter().collect();
        parts.entry(key).or_default().add_term(m.clone(), c.clone());
    }
    parts.into_values().collect()
}

/// Full linearization of a multihomogeneous polynomial.
///
/// A variable of kind κ and degree d is replaced by d fresh variables of kind
/// κ; fresh indices are allocated per kind in increasing order of the
/// original variables, starting at 1. Each monomial becomes the sum over all
/// ways of assigning the fresh variables to the occurrences.
pub fn linearize(p: &Polynomial) -> Result<Polynomial> {
    let Some((first, _)) = p.terms().next() else { return Ok(Polynomial::zero()) };
    let degrees = first.multidegree();
    if p.terms().any(|(m, _)| m.multidegree() != degrees) {
        return Err(Error::Precondition("linearization needs a multihomogeneous polynomial".into()));
    }
    let mut next: BTreeMap<Kind, u32> = BTreeMap::new();
    let mut fresh: BTreeMap<Variable, Vec<Variable>> = BTreeMap::new();
    for (&v, &d) in &degrees {
        let start = next.entry(v.kind).or_insert(1);
        fresh.insert(v, (0..d as u32).map(|k| Variable::new(v.kind, *start + k)).collect());
        *start += d as u32;
    }
    let vars: Vec<Variable> = degrees.keys().copied().collect();
    let perms: Vec<Vec<Vec<usize>>> = vars.iter().map(|v| permutations(degrees[v])).collect();
    let mut out = Polynomial::zero();
    for (m, c) in p.terms() {
        let mut choice = vec![0usize; vars.len()];
        loop {
            let mut seen: Vec<usize> = vec![0; vars.len()];
            let word =
                m.0.iter()
                    .map(|v| {
                        let k = vars.binary_search(v).unwrap();
                        let occ = seen[k];
                        seen[k] += 1;
                        fresh[v][perms[k][choice[k]][occ]]
                    })
                    .collect();
            out.add_term(Monomial(word), c.clone());
            // odometer over the per-variable permutations
            let mut k = 0;
            while k < vars.len() {
                choice[k] += 1;
                if choice[k] < perms[k].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k == vars.len() {
                break;
            }
        }
    }
    Ok(out)
}

/// Multihomogeneous components of `p`, each fully linearized.
pub fn multilinearize(p: &Polynomial) -> Result<Vec<Polynomial>> {
    multihomogeneous_components(p).iter().map(linearize).collect()
}

/// Display adapter produced by [`Polynomial::display`].
pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    mode: Mode,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.poly.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let word: Vec<String> = m.0.iter().map(|v| v.display(self.mode)).collect();
            if word.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&word.join(" "))?;
            } else {
                write!(f, "{abs} {}", word.join(" "))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = Mode::natural_for(self.variables().into_iter().map(|v| v.kind));
        fmt::Display::fmt(&self.display(mode), f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(i: u32) -> Polynomial {
        Polynomial::var(Variable::new(Kind::EvenSym, i))
    }
    fn z(i: u32) -> Polynomial {
        Polynomial::var(Variable::new(Kind::EvenSkew, i))
    }
    fn word(vs: &[Polynomial]) -> Polynomial {
        vs.iter().fold(Polynomial::one(), |a, b| &a * b)
    }

    #[test]
    fn commutator_expansion() {
        let p = left_normed(&[z(1), y(1), y(2)]).unwrap();
        let expect = &(&word(&[z(1), y(1), y(2)]) - &word(&[y(1), z(1), y(2)])) - &(&word(&[y(2), z(1), y(1)]) - &word(&[y(2), y(1), z(1)]));
        assert_eq!(p, expect);
        assert!(commutator(&y(1), &y(1)).is_zero());
        assert!(left_normed(&[y(1)]).is_err());
    }

    #[test]
    fn star_examples() {
        let m = Monomial(vec![Variable::new(Kind::EvenSym, 1), Variable::new(Kind::EvenSkew, 1), Variable::new(Kind::EvenSym, 2)]);
        let (s, w) = star_monomial(&m);
        assert_eq!(s, -1);
        assert_eq!(w.0, vec![Variable::new(Kind::EvenSym, 2), Variable::new(Kind::EvenSkew, 1), Variable::new(Kind::EvenSym, 1)]);
        assert_eq!(word(&[z(1), z(2)]).star(), word(&[z(2), z(1)]));
    }

    #[test]
    fn alternation_gives_standard_polynomial() {
        let s3 = alternate(&word(&[y(1), y(2), y(3)]), &[Variable::new(Kind::EvenSym, 1), Variable::new(Kind::EvenSym, 2), Variable::new(Kind::EvenSym, 3)])
            .unwrap();
        assert_eq!(s3.len(), 6);
        let vs: Vec<_> = (1..=3).map(|i| Variable::new(Kind::EvenSym, i)).collect();
        assert_eq!(s3, standard_polynomial(&vs));
        let mixed = alternate(&word(&[y(1), z(1)]), &[Variable::new(Kind::EvenSym, 1), Variable::new(Kind::EvenSkew, 1)]);
        assert!(matches!(mixed, Err(Error::KindViolation(_))));
    }

    #[test]
    fn substitution_examples() {
        let mut a = BTreeMap::new();
        a.insert(Variable::new(Kind::EvenSym, 1), &y(3) * &y(4));
        a.insert(Variable::new(Kind::EvenSym, 2), y(5));
        let p = substitute(&commutator(&y(1), &y(2)), &a, Mode::Graded).unwrap();
        assert_eq!(p, commutator(&(&y(3) * &y(4)), &y(5)));

        // skew slot z1 ↦ w - w* with w = y1 z2
        let w = &y(1) * &z(2);
        let val = &w - &w.star();
        assert_eq!(val, &(&y(1) * &z(2)) + &(&z(2) * &y(1)));
        let mut b = BTreeMap::new();
        b.insert(Variable::new(Kind::EvenSkew, 1), val.clone());
        assert!(substitute(&z(1), &b, Mode::Involution).is_ok());
        let mut c = BTreeMap::new();
        c.insert(Variable::new(Kind::EvenSym, 1), val);
        assert!(matches!(substitute(&y(1), &c, Mode::Involution), Err(Error::KindViolation(_))));
    }

    #[test]
    fn linearization_of_square() {
        let p = &y(1) * &y(1);
        let lin = linearize(&p).unwrap();
        assert_eq!(lin, &(&y(1) * &y(2)) + &(&y(2) * &y(1)));
        let comps = multihomogeneous_components(&(&p + &y(2)));
        assert_eq!(comps.len(), 2);
    }

    #[test]
    fn permutation_helpers() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutation_sign(&[1, 0, 2]), -1);
        assert_eq!(permutation_sign(&[1, 2, 0]), 1);
    }
}

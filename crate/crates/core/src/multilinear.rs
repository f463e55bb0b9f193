//! Multilinear spaces P for a signature, indexed by permutation rank, and the
//! proper subspaces Γ of the involution mode.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::free::{left_normed, Kind, Mode, Monomial, Polynomial, Variable};
use crate::linalg::{Echelon, PivotSide, SparseVec};
use crate::rational::Rational;

/// Default bound on the total degree of an enumerated multilinear space.
pub const DEFAULT_DEGREE_CAP: usize = 8;

/// Environment variable that overrides [`DEFAULT_DEGREE_CAP`].
pub const DEGREE_CAP_ENV: &str = "PI_FORGE_MAX_DEGREE";

/// Active degree cap: `PI_FORGE_MAX_DEGREE` if set to a number, else the default.
pub fn degree_cap() -> usize {
    std::env::var(DEGREE_CAP_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_DEGREE_CAP)
}

/// Variable counts per admissible kind of a mode.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Signature {
    mode: Mode,
    counts: Vec<usize>,
}

impl Signature {
    pub fn new(mode: Mode, counts: &[usize]) -> Result<Self> {
        if counts.len() != mode.kinds().len() {
            return Err(Error::Mode(format!("{} mode takes {} counts, got {}", mode.name(), mode.kinds().len(), counts.len())));
        }
        Ok(Signature { mode, counts: counts.to_vec() })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn count(&self, kind: Kind) -> usize {
        self.mode.slot(kind).map_or(0, |s| self.counts[s])
    }

    /// Variables in canonical order: kinds by rank, indices from 1.
    pub fn variables(&self) -> Vec<Variable> {
        self.mode.kinds().iter().zip(&self.counts).flat_map(|(&k, &n)| (1..=n as u32).map(move |i| Variable::new(k, i))).collect()
    }

    /// Signature with one fewer variable of `kind`.
    pub fn without(&self, kind: Kind) -> Option<Signature> {
        let s = self.mode.slot(kind)?;
        if self.counts[s] == 0 {
            return None;
        }
        let mut c = self.counts.clone();
        c[s] -= 1;
        Some(Signature { mode: self.mode, counts: c })
    }

    /// Signatures of total degree 1..=max ordered by total degree, then counts.
    pub fn all_up_to(mode: Mode, max_total: usize) -> Vec<Signature> {
        let k = mode.kinds().len();
        let mut out = Vec::new();
        for total in 1..=max_total {
            let mut cur = vec![0usize; k];
            compositions(total, 0, &mut cur, &mut |c| out.push(Signature { mode, counts: c.to_vec() }));
        }
        out
    }

    /// Signature whose variables are exactly those of a multilinear polynomial
    /// with indices `1..=n` per kind.
    pub fn of_polynomial(p: &Polynomial, mode: Mode) -> Result<Signature> {
        let mut counts = vec![0usize; mode.kinds().len()];
        for v in p.variables() {
            let s = mode.slot(v.kind).ok_or_else(|| Error::Mode(format!("{:?} not admissible in {} mode", v.kind, mode.name())))?;
            counts[s] += 1;
        }
        let sig = Signature { mode, counts };
        if sig.variables() != p.variables().into_iter().collect::<Vec<_>>() {
            return Err(Error::Precondition("variable indices must run 1..n within each kind".into()));
        }
        Ok(sig)
    }
}

fn compositions(rest: usize, at: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if at + 1 == cur.len() {
        cur[at] = rest;
        f(cur);
        return;
    }
    for x in (0..=rest).rev() {
        cur[at] = x;
        compositions(rest - x, at + 1, cur, f);
    }
    cur[at] = 0;
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `n!` for small `n`.
pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Lexicographic rank of a permutation of `0..n` (entries below 32).
pub fn rank_word(word: &[u8]) -> usize {
    let n = word.len();
    let mut unused: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut rank = 0;
    for (i, &v) in word.iter().enumerate() {
        let below = (unused & ((1u32 << v) - 1)).count_ones() as usize;
        rank = rank * (n - i) + below;
        unused &= !(1u32 << v);
    }
    rank
}

/// Inverse of [`rank_word`].
pub fn unrank_word(mut rank: usize, n: usize) -> Vec<u8> {
    let mut digits = vec![0usize; n];
    for i in (0..n).rev() {
        let base = n - i;
        digits[i] = rank % base;
        rank /= base;
    }
    let mut avail: Vec<u8> = (0..n as u8).collect();
    digits.into_iter().map(|d| avail.remove(d)).collect()
}

/// Basis of the multilinear space of a signature.
#[derive(Clone, Debug)]
pub struct MultilinearBasis {
    signature: Signature,
    variables: Vec<Variable>,
}

impl MultilinearBasis {
    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    /// Variables in position order.
    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn degree(&self) -> usize {
        self.variables.len()
    }

    /// Number of monomials, `(Σ counts)!`.
    pub fn len(&self) -> usize {
        factorial(self.variables.len())
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Monomial with index `i`.
    pub fn monomial(&self, i: usize) -> Monomial {
        self.word_monomial(&unrank_word(i, self.degree()))
    }

    /// All monomials in index order.
    pub fn monomials(&self) -> Vec<Monomial> {
        (0..self.len()).map(|i| self.monomial(i)).collect()
    }

    pub fn word_monomial(&self, word: &[u8]) -> Monomial {
        Monomial(word.iter().map(|&p| self.variables[p as usize]).collect())
    }

    /// Position of a variable.
    pub fn position(&self, v: Variable) -> Option<u8> {
        self.variables.binary_search(&v).ok().map(|p| p as u8)
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        if m.degree() != self.degree() {
            return None;
        }
        let mut seen = 0u32;
        let mut word = Vec::with_capacity(m.degree());
        for v in &m.0 {
            let p = self.position(*v)?;
            if seen & (1 << p) != 0 {
                return None;
            }
            seen |= 1 << p;
            word.push(p);
        }
        Some(rank_word(&word))
    }

    /// Coordinates of a polynomial lying in this space.
    pub fn vector_of(&self, p: &Polynomial) -> Result<SparseVec> {
        let mut entries = Vec::with_capacity(p.len());
        for (m, c) in p.terms() {
            let i = self
                .index_of(m)
                .ok_or_else(|| Error::NotMultilinear(format!("monomial {} is outside P{}", Polynomial::term(m.clone(), Rational::int(1)), self.signature)))?;
            entries.push((i, c.clone()));
        }
        Ok(SparseVec::from_entries(entries))
    }

    pub fn polynomial_of(&self, v: &SparseVec) -> Polynomial {
        Polynomial::from_terms(v.iter().map(|(i, c)| (self.monomial(i), c.clone())))
    }
}

/// Enumerates P for a signature under the active degree cap.
pub fn enumerate(signature: &Signature) -> Result<MultilinearBasis> {
    enumerate_with_cap(signature, degree_cap())
}

pub fn enumerate_with_cap(signature: &Signature, cap: usize) -> Result<MultilinearBasis> {
    let degree = signature.total();
    if degree > cap {
        return Err(Error::DegreeCap { degree, cap });
    }
    if degree > 31 {
        return Err(Error::DegreeCap { degree, cap: 31 });
    }
    Ok(MultilinearBasis { signature: signature.clone(), variables: signature.variables() })
}

/// Basis of Γ, the proper multilinear polynomials of an involution signature.
#[derive(Clone, Debug)]
pub struct ProperBasis {
    pub signature: Signature,
    pub elements: Vec<Polynomial>,
}

impl ProperBasis {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `dim Γ_{n₁,n₂} = Σ_k (-1)^k C(n₁,k) (n₁-k+n₂)!`.
pub fn proper_dimension(n_sym: usize, n_skew: usize) -> usize {
    let mut s: i128 = 0;
    for k in 0..=n_sym {
        let term = (binomial(n_sym, k) * factorial(n_sym - k + n_skew)) as i128;
        s += if k % 2 == 0 { term } else { -term };
    }
    s as usize
}

/// Orderings of a commutator block, preferred ones (`i₁ > i₂ < i₃ < ⋯`) first.
fn block_orders(block: &[u8], preferred: bool) -> Vec<Vec<u8>> {
    let k = block.len();
    if preferred {
        let min = block[0];
        let rest: Vec<u8> = block[1..].to_vec();
        (0..rest.len())
            .map(|f| {
                let mut w = vec![rest[f], min];
                w.extend(rest.iter().enumerate().filter(|(i, _)| *i != f).map(|(_, &v)| v));
                w
            })
            .collect()
    } else {
        crate::free::permutations(k).into_iter().map(|p| p.iter().map(|&i| block[i]).collect()).collect()
    }
}

/// Enumerates products of left-normed commutators (length ≥ 2) and bare skew
/// variables covering every position exactly once; `visit` returns `false` to stop.
fn proper_products(remaining: u32, skew: u32, preferred: bool, prefix: &mut Vec<Vec<u8>>, visit: &mut dyn FnMut(&[Vec<u8>]) -> bool) -> bool {
    if remaining == 0 {
        return visit(prefix);
    }
    let members: Vec<u8> = (0..32u8).filter(|&p| remaining & (1 << p) != 0).collect();
    // nonempty subsets of the remaining positions, in increasing bitmask order
    let n = members.len();
    for mask in 1u32..(1 << n) {
        let block: Vec<u8> = (0..n).filter(|&i| mask & (1 << i) != 0).map(|i| members[i]).collect();
        let bits: u32 = block.iter().map(|&p| 1u32 << p).sum();
        if block.len() == 1 {
            if skew & bits == 0 {
                continue;
            }
            prefix.push(block.clone());
            let go = proper_products(remaining & !bits, skew, preferred, prefix, visit);
            prefix.pop();
            if !go {
                return false;
            }
        } else {
            for order in block_orders(&block, preferred) {
                prefix.push(order);
                let go = proper_products(remaining & !bits, skew, preferred, prefix, visit);
                prefix.pop();
                if !go {
                    return false;
                }
            }
        }
    }
    true
}

/// Basis of Γ for an involution signature `(n_sym, n_skew)`.
///
/// Candidates are products of commutator blocks and skew singletons, tried
/// first with the preferred block orderings and then with all orderings;
/// independence is certified by rank in P, and the search stops at the
/// dimension given by [`proper_dimension`].
pub fn proper_basis(signature: &Signature) -> Result<ProperBasis> {
    if signature.mode() != Mode::Involution {
        return Err(Error::Mode("proper bases are defined for the involution mode".into()));
    }
    let basis = enumerate(signature)?;
    let n = basis.degree();
    let target = proper_dimension(signature.counts()[0], signature.counts()[1]);
    let skew: u32 = basis.variables().iter().enumerate().filter(|(_, v)| v.kind == Kind::EvenSkew).map(|(i, _)| 1u32 << i).sum();
    let mut ech = Echelon::unreduced(PivotSide::Leading);
    let mut elements = Vec::new();
    if n == 0 {
        return Ok(ProperBasis { signature: signature.clone(), elements: vec![Polynomial::one()] });
    }
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    for preferred in [true, false] {
        if elements.len() == target {
            break;
        }
        proper_products(full, skew, preferred, &mut Vec::new(), &mut |blocks| {
            let mut p = Polynomial::one();
            for b in blocks {
                let factor = if b.len() == 1 {
                    Polynomial::var(basis.variables()[b[0] as usize])
                } else {
                    let entries: Vec<Polynomial> = b.iter().map(|&i| Polynomial::var(basis.variables()[i as usize])).collect();
                    left_normed(&entries).expect("block has two or more entries")
                };
                p = &p * &factor;
            }
            let v = basis.vector_of(&p).expect("proper product is multilinear");
            if ech.insert(&v) {
                elements.push(p);
            }
            elements.len() < target
        });
    }
    Ok(ProperBasis { signature: signature.clone(), elements })
}

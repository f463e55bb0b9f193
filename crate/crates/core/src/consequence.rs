//! Multilinear consequences of a set of identities.
//!
//! For a signature S the consequences in P(S) are spanned by
//! - substitution instances `g(w₁,…,w_k)` whose words use every variable of S,
//! - `v·h` and `h·v` for `h` a consequence in P(S − v).
//!
//! Slot values follow the mode: graded slots take words of matching parity,
//! involution slots take `w ± w*`, and even symmetric slots may take the unit
//! when the algebra is unital.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::free::{multilinearize, Kind, Mode, Polynomial, Variable};
use crate::identity::SubspaceBasis;
use crate::linalg::{Echelon, PivotSide, SparseVec};
use crate::multilinear::{rank_word, unrank_word, Signature};
use crate::rational::Rational;

/// A multilinear generator with variables replaced by slot numbers.
#[derive(Clone, Debug)]
struct Compiled {
    slots: Vec<Kind>,
    terms: Vec<(Rational, Vec<u8>)>,
}

impl Compiled {
    fn new(p: &Polynomial) -> Self {
        let vars: Vec<Variable> = p.variables().into_iter().collect();
        let terms = p.terms().map(|(m, c)| (c.clone(), m.0.iter().map(|v| vars.binary_search(v).unwrap() as u8).collect())).collect();
        Compiled { slots: vars.iter().map(|v| v.kind).collect(), terms }
    }
}

/// One value of a slot: signed words over signature positions.
type SlotValue = Vec<(i64, Vec<u8>)>;

/// Generates consequence spaces signature by signature.
#[derive(Clone, Debug)]
pub struct ConsequenceEngine {
    mode: Mode,
    unital: bool,
    gens: Vec<Compiled>,
}

impl ConsequenceEngine {
    /// Prepares generators (multilinearised, closed under `*` in involution
    /// modes). `unital` enables unit substitution into even symmetric slots.
    pub fn new(generators: &[Polynomial], mode: Mode, unital: bool) -> Result<Self> {
        let mut polys = Vec::new();
        for g in generators {
            for v in g.variables() {
                if !mode.admits(v.kind) {
                    return Err(Error::Mode(format!("generator variable {} not admissible in {} mode", v.display(mode), mode.name())));
                }
            }
            polys.extend(multilinearize(g)?);
            if mode.uses_involution() {
                polys.extend(multilinearize(&g.star())?);
            }
        }
        let mut gens: Vec<Compiled> = polys.iter().filter(|p| !p.is_zero()).map(Compiled::new).collect();
        gens.sort_by_key(|g| g.slots.len());
        Ok(ConsequenceEngine { mode, unital, gens })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Echelon basis of the consequences in P(sig).
    ///
    /// `lower` maps each signature `S − v` (by counts) to spanning rows of its
    /// consequence space; missing entries contribute nothing. Generation stops
    /// once the rank reaches `target`.
    pub fn layer(&self, sig: &Signature, lower: &HashMap<Vec<usize>, Vec<SparseVec>>, target: Option<usize>) -> Echelon {
        let mut ech = Echelon::unreduced(PivotSide::Leading);
        let done = |e: &Echelon| target.is_some_and(|t| e.rank() >= t);
        let vars = sig.variables();
        let n = vars.len();
        if n == 0 {
            return ech;
        }
        // lifts from S − v
        for (pos, v) in vars.iter().enumerate() {
            let Some(sub) = sig.without(v.kind) else { continue };
            let Some(rows) = lower.get(sub.counts()) else { continue };
            let map: Vec<u8> = sub
                .variables()
                .iter()
                .map(|w| {
                    let shifted = if w.kind == v.kind && w.index >= v.index { Variable::new(w.kind, w.index + 1) } else { *w };
                    vars.binary_search(&shifted).expect("lifted variable") as u8
                })
                .collect();
            for h in rows {
                for left in [true, false] {
                    let entries = h
                        .iter()
                        .map(|(i, c)| {
                            let mut word: Vec<u8> = unrank_word(i, n - 1).into_iter().map(|p| map[p as usize]).collect();
                            if left {
                                word.insert(0, pos as u8);
                            } else {
                                word.push(pos as u8);
                            }
                            (rank_word(&word), c.clone())
                        })
                        .collect();
                    ech.insert(&SparseVec::from_entries(entries));
                    if done(&ech) {
                        return ech;
                    }
                }
            }
        }
        // substitution instances covering every variable
        let kinds: Vec<Kind> = vars.iter().map(|v| v.kind).collect();
        for g in &self.gens {
            let mut values: Vec<SlotValue> = Vec::with_capacity(g.slots.len());
            let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
            let mut stop = false;
            self.fill(g, &kinds, 0, full, &mut values, &mut |vals| {
                let v = expand(g, vals);
                if !v.is_zero() {
                    ech.insert(&v);
                }
                stop = done(&ech);
                !stop
            });
            if stop {
                return ech;
            }
        }
        ech
    }

    /// Assigns words to slots `j..`, using exactly the positions in `unused`.
    fn fill(&self, g: &Compiled, kinds: &[Kind], j: usize, unused: u32, values: &mut Vec<SlotValue>, visit: &mut dyn FnMut(&[SlotValue]) -> bool) -> bool {
        if j == g.slots.len() {
            return if unused == 0 { visit(values) } else { true };
        }
        let slot = g.slots[j];
        let remaining_slots = g.slots.len() - j - 1;
        let avail = unused.count_ones() as usize;
        let min_len = if self.unital && slot == Kind::EvenSym { 0 } else { 1 };
        let mut word = Vec::new();
        for len in min_len..=avail {
            // the last slot takes every remaining position
            if remaining_slots == 0 && len != avail {
                continue;
            }
            if !self.words(g, kinds, j, unused, len, &mut word, values, visit) {
                return false;
            }
        }
        true
    }

    #[allow(clippy::too_many_arguments)]
    fn words(
        &self,
        g: &Compiled,
        kinds: &[Kind],
        j: usize,
        unused: u32,
        len: usize,
        word: &mut Vec<u8>,
        values: &mut Vec<SlotValue>,
        visit: &mut dyn FnMut(&[SlotValue]) -> bool,
    ) -> bool {
        if word.len() == len {
            let Some(value) = self.slot_value(g.slots[j], kinds, word) else { return true };
            values.push(value);
            let used: u32 = word.iter().map(|&p| 1u32 << p).sum();
            let go = self.fill(g, kinds, j + 1, unused & !used, values, visit);
            values.pop();
            return go;
        }
        let mut rest = unused & !word.iter().map(|&p| 1u32 << p).sum::<u32>();
        while rest != 0 {
            let p = rest.trailing_zeros() as u8;
            rest &= rest - 1;
            word.push(p);
            let go = self.words(g, kinds, j, unused, len, word, values, visit);
            word.pop();
            if !go {
                return false;
            }
        }
        true
    }

    fn slot_value(&self, slot: Kind, kinds: &[Kind], word: &[u8]) -> Option<SlotValue> {
        if word.is_empty() {
            return Some(vec![(1, Vec::new())]);
        }
        if self.mode.uses_grading() {
            let parity = word.iter().map(|&p| kinds[p as usize].degree()).sum::<u8>() % 2;
            if parity != slot.degree() {
                return None;
            }
        }
        if !self.mode.uses_involution() {
            return Some(vec![(1, word.to_vec())]);
        }
        let star_sign: i64 = word.iter().map(|&p| kinds[p as usize].sign()).product();
        let s = slot.sign() * star_sign;
        let rev: Vec<u8> = word.iter().rev().copied().collect();
        if rev == word {
            let c = 1 + s;
            (c != 0).then(|| vec![(c, word.to_vec())])
        } else {
            Some(vec![(1, word.to_vec()), (s, rev)])
        }
    }
}

/// Coordinates in P of `g(values)`.
fn expand(g: &Compiled, values: &[SlotValue]) -> SparseVec {
    let mut acc: HashMap<usize, Rational> = HashMap::new();
    for (c, term) in &g.terms {
        let mut partial: Vec<(i64, Vec<u8>)> = vec![(1, Vec::new())];
        for &slot in term {
            let mut next = Vec::with_capacity(partial.len() * values[slot as usize].len());
            for (s, w) in &partial {
                for (t, x) in &values[slot as usize] {
                    let mut word = w.clone();
                    word.extend_from_slice(x);
                    next.push((s * t, word));
                }
            }
            partial = next;
        }
        for (s, w) in partial {
            let e = acc.entry(rank_word(&w)).or_insert_with(|| Rational::int(0));
            *e += c * &Rational::int(s);
        }
    }
    SparseVec::from_entries(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
}

/// Basis of the consequences of `generators` in P(signature), computed
/// exhaustively through every smaller signature.
pub fn consequence_space(generators: &[Polynomial], signature: &Signature, unital: bool) -> Result<SubspaceBasis> {
    let engine = ConsequenceEngine::new(generators, signature.mode(), unital)?;
    let mode = signature.mode();
    let mut subs: Vec<Signature> =
        Signature::all_up_to(mode, signature.total()).into_iter().filter(|s| s.counts().iter().zip(signature.counts()).all(|(a, b)| a <= b)).collect();
    subs.sort_by_key(|s| s.total());
    let mut cache: HashMap<Vec<usize>, Vec<SparseVec>> = HashMap::new();
    let mut last = Echelon::new(PivotSide::Leading);
    for s in &subs {
        let ech = engine.layer(s, &cache, None);
        cache.insert(s.counts().to_vec(), ech.rows().to_vec());
        if s == signature {
            last = ech;
        }
    }
    let mut reduced = Echelon::new(PivotSide::Leading);
    for r in last.rows() {
        reduced.insert(r);
    }
    let ambient = crate::multilinear::factorial(signature.total());
    Ok(SubspaceBasis { signature: signature.clone(), ambient_dim: ambient, rows: reduced.sorted_rows() })
}

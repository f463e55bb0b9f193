//! Sparse exact linear algebra: sparse rational vectors and an incremental
//! echelon form with configurable pivot side.

use std::collections::HashMap;

use serde::Serialize;

use crate::rational::Rational;

/// A sparse vector: entries sorted by index, no explicit zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a vector from unsorted entries, summing repeated indices.
    pub fn from_entries(mut entries: Vec<(usize, Rational)>) -> Self {
        entries.sort_by_key(|e| e.0);
        let mut out: Vec<(usize, Rational)> = Vec::with_capacity(entries.len());
        for (i, c) in entries {
            match out.last_mut() {
                Some((j, acc)) if *j == i => *acc += c,
                _ => out.push((i, c)),
            }
        }
        out.retain(|e| !e.1.is_zero());
        SparseVec { entries: out }
    }

    /// Wraps entries that are already sorted, distinct and nonzero.
    pub fn from_sorted(entries: Vec<(usize, Rational)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|e| !e.1.is_zero()));
        SparseVec { entries }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec { entries: vec![(i, Rational::int(1))] }
    }

    pub fn from_dense(v: &[Rational]) -> Self {
        SparseVec { entries: v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect() }
    }

    pub fn to_dense(&self, n: usize) -> Vec<Rational> {
        let mut v = vec![Rational::int(0); n];
        for (i, c) in &self.entries {
            v[*i] = c.clone();
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Rational)> {
        self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn get(&self, i: usize) -> Option<&Rational> {
        self.entries.binary_search_by_key(&i, |e| e.0).ok().map(|k| &self.entries[k].1)
    }

    pub fn first(&self) -> Option<&(usize, Rational)> {
        self.entries.first()
    }

    pub fn last(&self) -> Option<&(usize, Rational)> {
        self.entries.last()
    }

    pub fn scale(&mut self, c: &Rational) {
        if c.is_zero() {
            self.entries.clear();
            return;
        }
        for e in &mut self.entries {
            e.1 = &e.1 * c;
        }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        let mut v = self.clone();
        v.scale(c);
        v
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &Rational, other: &SparseVec) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let a = std::mem::take(&mut self.entries);
        let b = &other.entries;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut j = 0;
        for (k, v) in a {
            while j < b.len() && b[j].0 < k {
                out.push((b[j].0, c * &b[j].1));
                j += 1;
            }
            if j < b.len() && b[j].0 == k {
                let s = v + c * &b[j].1;
                j += 1;
                if !s.is_zero() {
                    out.push((k, s));
                }
            } else {
                out.push((k, v));
            }
        }
        out.extend(b[j..].iter().map(|(i, x)| (*i, c * x)));
        self.entries = out;
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        let mut v = self.clone();
        v.axpy(&Rational::int(1), other);
        v
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        let mut v = self.clone();
        v.axpy(&Rational::int(-1), other);
        v
    }

    /// Applies an index map, summing collisions.
    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_entries(self.entries.iter().map(|(i, c)| (f(*i), c.clone())).collect())
    }
}

/// Which end of a row carries its pivot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotSide {
    /// Pivot is the smallest index.
    Leading,
    /// Pivot is the largest index.
    Trailing,
}

/// Incremental echelon form over the rationals.
///
/// In reduced mode every pivot column is zero outside its own row, so the
/// rows form the unique reduced basis of their span for the chosen pivot side.
#[derive(Clone, Debug)]
pub struct Echelon {
    side: PivotSide,
    reduced: bool,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
    row_of: HashMap<usize, usize>,
}

impl Echelon {
    /// Reduced echelon form.
    pub fn new(side: PivotSide) -> Self {
        Echelon { side, reduced: true, rows: Vec::new(), pivots: Vec::new(), row_of: HashMap::new() }
    }

    /// Echelon form without back-substitution; cheaper when only rank or
    /// membership is needed.
    pub fn unreduced(side: PivotSide) -> Self {
        Echelon { reduced: false, ..Self::new(side) }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn side(&self) -> PivotSide {
        self.side
    }

    pub fn pivot(&self, v: &SparseVec) -> Option<usize> {
        match self.side {
            PivotSide::Leading => v.first().map(|e| e.0),
            PivotSide::Trailing => v.last().map(|e| e.0),
        }
    }

    /// Pivot columns in insertion order.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Rows in insertion order.
    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn row_for_pivot(&self, p: usize) -> Option<&SparseVec> {
        self.row_of.get(&p).map(|&k| &self.rows[k])
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        if self.rows.is_empty() {
            return v;
        }
        match self.side {
            PivotSide::Leading => {
                // Subtracting a row with pivot p only touches indices >= p.
                let mut cursor = 0usize;
                loop {
                    let hit = v.entries[..].iter().skip_while(|e| e.0 < cursor).find(|e| self.row_of.contains_key(&e.0));
                    let Some((p, c)) = hit.cloned() else { break };
                    let row = &self.rows[self.row_of[&p]];
                    v.axpy(&-c, row);
                    cursor = p + 1;
                }
            }
            PivotSide::Trailing => {
                let mut cursor = usize::MAX;
                loop {
                    let hit = v.entries.iter().rev().skip_while(|e| e.0 > cursor).find(|e| self.row_of.contains_key(&e.0));
                    let Some((p, c)) = hit.cloned() else { break };
                    let row = &self.rows[self.row_of[&p]];
                    v.axpy(&-c, row);
                    if p == 0 {
                        break;
                    }
                    cursor = p - 1;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = self.pivot(&r) else { return false };
        let lead = r.get(p).unwrap().recip();
        r.scale(&lead);
        if self.reduced {
            for row in &mut self.rows {
                if let Some(c) = row.get(p).cloned() {
                    row.axpy(&-c, &r);
                }
            }
        }
        self.row_of.insert(p, self.rows.len());
        self.rows.push(r);
        self.pivots.push(p);
        true
    }

    /// Rows sorted by pivot column.
    pub fn sorted_rows(&self) -> Vec<SparseVec> {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_by_key(|&k| self.pivots[k]);
        idx.into_iter().map(|k| self.rows[k].clone()).collect()
    }
}

/// Rank of a list of vectors.
pub fn rank_of(vectors: &[SparseVec]) -> usize {
    let mut e = Echelon::unreduced(PivotSide::Leading);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

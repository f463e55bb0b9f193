//! Certifies that a generator set spans `Id(A) ∩ P` signature by signature.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::AlgebraSpec;
use crate::consequence::ConsequenceEngine;
use crate::error::{Error, Result};
use crate::free::Mode;
use crate::identity::{is_identity_in, IdentityCheck, Quotient};
use crate::linalg::SparseVec;
use crate::multilinear::{degree_cap, Signature};
use crate::theorems::Generator;

/// Result for one signature.
#[derive(Clone, Debug, Serialize)]
pub struct SignatureRecord {
    pub signature: Vec<usize>,
    #[serde(rename = "dimP")]
    pub dim_p: usize,
    #[serde(rename = "dimId")]
    pub dim_id: usize,
    #[serde(rename = "dimCons")]
    pub dim_cons: usize,
    /// Every generated consequence vanished on the algebra.
    pub sound: bool,
    #[serde(serialize_with = "verdict_str")]
    pub verdict: bool,
}

fn verdict_str<S: serde::Serializer>(v: &bool, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(if *v { "pass" } else { "fail" })
}

#[derive(Clone, Debug, Serialize)]
pub struct BasisReport {
    pub algebra: String,
    pub mode: Mode,
    pub max_total_degree: usize,
    pub records: Vec<SignatureRecord>,
}

impl BasisReport {
    pub fn verdict(&self) -> bool {
        self.records.iter().all(|r| r.verdict)
    }

    pub fn record(&self, counts: &[usize]) -> Option<&SignatureRecord> {
        self.records.iter().find(|r| r.signature == counts)
    }

    /// Highest degree `d` such that every signature of total degree ≤ `d` passed.
    pub fn verified_through(&self) -> usize {
        (1..=self.max_total_degree)
            .take_while(|&d| self.records.iter().filter(|r| r.signature.iter().sum::<usize>() == d).all(|r| r.verdict))
            .last()
            .unwrap_or(0)
    }
}

/// Checks that every generator instance is an identity in `mode`.
pub fn check_generators(spec: &AlgebraSpec, generators: &[Generator], mode: Mode) -> Result<()> {
    for g in generators {
        for p in &g.instances {
            if let IdentityCheck::Fails(w) = is_identity_in(spec, p, mode)? {
                let at: Vec<String> = w.assignment.iter().map(|(v, e)| format!("{v} = {e}")).collect();
                let detail = format!("{} evaluates to {} at {}", w.component, w.value, at.join(", "));
                return Err(Error::NotAnIdentity { name: g.label.clone(), detail });
            }
        }
    }
    Ok(())
}

/// Compares the consequences of `generators` with `Id(A) ∩ P` for every
/// signature of total degree `1..=max_total_degree` in `mode`.
///
/// Fails with [`Error::NotAnIdentity`] if some generator does not hold.
pub fn verify_basis(spec: &AlgebraSpec, generators: &[Generator], mode: Mode, max_total_degree: usize) -> Result<BasisReport> {
    let cap = degree_cap();
    if max_total_degree > cap {
        return Err(Error::DegreeCap { degree: max_total_degree, cap });
    }
    spec.supports(mode)?;
    check_generators(spec, generators, mode)?;
    let polys: Vec<_> = generators.iter().flat_map(|g| g.instances.iter().cloned()).collect();
    let engine = ConsequenceEngine::new(&polys, mode, spec.unit().is_some())?;
    let mut records = Vec::new();
    let mut lower: HashMap<Vec<usize>, Vec<SparseVec>> = HashMap::new();
    for total in 1..=max_total_degree {
        let sigs: Vec<Signature> = Signature::all_up_to(mode, total).into_iter().filter(|s| s.total() == total).collect();
        let layer: Vec<(SignatureRecord, Vec<SparseVec>)> = sigs
            .par_iter()
            .map(|sig| {
                let q = Quotient::new(spec, sig)?;
                let ech = engine.layer(sig, &lower, Some(q.identity_dim()));
                let sound = ech.rows().iter().all(|r| q.is_identity_vec(r));
                let dim_cons = ech.rank();
                let record = SignatureRecord {
                    signature: sig.counts().to_vec(),
                    dim_p: q.basis().len(),
                    dim_id: q.identity_dim(),
                    dim_cons,
                    sound,
                    verdict: sound && dim_cons == q.identity_dim(),
                };
                Ok((record, ech.rows().to_vec()))
            })
            .collect::<Result<Vec<_>>>()?;
        lower.clear();
        for (rec, rows) in layer {
            lower.insert(rec.signature.clone(), rows);
            records.push(rec);
        }
    }
    Ok(BasisReport { algebra: spec.name().to_string(), mode, max_total_degree, records })
}

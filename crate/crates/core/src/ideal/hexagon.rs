//! Hexagonality through the dimension of the `e_1 + … + e_6` graded piece:
//! a coherent `3 × 6` field is hexagonal exactly when the ten degree-2
//! monomials `P_I · P_{[6]∖I}` fall into 4 fibers instead of 5.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use super::monomial::CellTable;
use crate::coherence::CoherenceCertificate;
use crate::combinat::{subsets_of, Subset};
use crate::error::{Error, Result};
use crate::field::{is_pointed_on, submatching_field, MatchingField};

/// Class count of hexagonal `3 × 6` fields.
pub const HEXAGONAL_CLASS_COUNT: usize = 4;

/// How the caller vouches for coherence of the input.
#[derive(Clone, Copy, Debug)]
pub enum Coherence<'a> {
    Certified(&'a CoherenceCertificate),
    /// The caller asserts coherence without proof.
    Assumed,
}

impl Coherence<'_> {
    fn check(&self, field: &MatchingField) -> Result<()> {
        match self {
            Coherence::Certified(cert) if !cert.certifies(field) => {
                Err(Error::Precondition("the coherence certificate does not certify this matching field".into()))
            }
            _ => Ok(()),
        }
    }
}

/// Number of fibers among the monomials `P_I · P_{J∖I}`, `I ⊂ J`.
pub fn degree2_class_count(field: &MatchingField, j: &Subset) -> Result<usize> {
    if field.k() != 3 || j.len() != 6 {
        return Err(Error::invalid("the class count needs k = 3 and |J| = 6"));
    }
    if j.largest().is_some_and(|m| m > field.n()) {
        return Err(Error::invalid(format!("{j} is not a subset of [{}]", field.n())));
    }
    let table = CellTable::new(field);
    let first = j.elements()[0];
    let keys: BTreeSet<Vec<u8>> = subsets_of(j, 3)
        .into_iter()
        .filter(|i| i.contains(first))
        .map(|i| {
            let ranks = [field.rank(&i).unwrap() as u32, field.rank(&j.difference(&i)).unwrap() as u32];
            table.key_of(&ranks)
        })
        .collect();
    Ok(keys.len())
}

pub fn is_hexagonal_3x6(field: &MatchingField, coherence: Coherence<'_>) -> Result<bool> {
    if field.k() != 3 || field.n() != 6 {
        return Err(Error::invalid("hexagonality of a single field needs a 3x6 matching field"));
    }
    coherence.check(field)?;
    Ok(degree2_class_count(field, &Subset::full(6))? == HEXAGONAL_CLASS_COUNT)
}

/// Result of scanning all 6-element restrictions of a `3 × n` field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HexagonScan {
    /// Lex-least `J` whose restriction is hexagonal.
    pub witness: Option<Subset>,
}

impl HexagonScan {
    pub fn is_non_hexagonal(&self) -> bool {
        self.witness.is_none()
    }
}

pub fn is_non_hexagonal(field: &MatchingField, coherence: Coherence<'_>) -> Result<HexagonScan> {
    if field.k() != 3 || field.n() < 6 {
        return Err(Error::invalid("hexagonality needs k = 3 and n >= 6"));
    }
    coherence.check(field)?;
    let js = subsets_of(&Subset::full(field.n()), 6);
    let witness = js
        .par_iter()
        .map(|j| -> Result<bool> {
            let restricted = submatching_field(field, &Subset::empty(), j)?;
            Ok(degree2_class_count(&restricted, &Subset::full(6))? == HEXAGONAL_CLASS_COUNT)
        })
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .position(|hex| hex)
        .map(|i| js[i].clone());
    Ok(HexagonScan { witness })
}

/// `S ⊂ T` with `Λ` pointed on `S` and the `3 × 6` submatching field hexagonal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HexagonalWitness {
    pub s: Subset,
    pub t: Subset,
}

/// Lex-least `(S, T)` giving a hexagonal submatching field, if any.
pub fn has_hexagonal_submatching(field: &MatchingField) -> Result<Option<HexagonalWitness>> {
    let (k, n) = (field.k(), field.n());
    if k < 3 {
        return Err(Error::invalid("hexagonal submatching fields need k >= 3"));
    }
    if n < k + 3 {
        return Ok(None);
    }
    let ground = Subset::full(n);
    for s in subsets_of(&ground, k - 3) {
        if is_pointed_on(field, &s).is_none() {
            continue;
        }
        let rest = ground.difference(&s);
        let ts: Vec<Subset> = subsets_of(&rest, 6).into_iter().map(|r| r.union(&s)).collect();
        let hits = ts
            .par_iter()
            .map(|t| -> Result<bool> {
                let sub = submatching_field(field, &s, t)?;
                Ok(degree2_class_count(&sub, &Subset::full(6))? == HEXAGONAL_CLASS_COUNT)
            })
            .collect::<Result<Vec<bool>>>()?;
        if let Some(i) = hits.iter().position(|&h| h) {
            return Ok(Some(HexagonalWitness { s, t: ts[i].clone() }));
        }
    }
    Ok(None)
}

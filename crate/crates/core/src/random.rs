//! Seeded random weight matrices and matching fields.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::combinat::Permutation;
use crate::error::{Error, Result};
use crate::field::MatchingField;
use crate::weights::{induced_matching_field, WeightMatrix};

/// Entries of rows `2..k` uniform in `0..=range`; row 1 is zero.
pub fn random_weight_matrix<R: Rng>(k: usize, n: usize, range: i64, rng: &mut R) -> Result<WeightMatrix> {
    let rows: Vec<Vec<i64>> =
        (0..k).map(|r| (0..n).map(|_| if r == 0 { 0 } else { rng.gen_range(0..=range) }).collect()).collect();
    WeightMatrix::from_integers(&rows)
}

/// A uniformly random permutation for every subset; usually incoherent.
pub fn random_matching_field<R: Rng>(k: usize, n: usize, rng: &mut R) -> Result<MatchingField> {
    let perms = Permutation::all(k);
    MatchingField::from_fn(k, n, |_| perms.choose(rng).expect("k >= 1").clone())
}

/// Draws weight matrices until one has no ties; returns it with its field.
pub fn random_coherent_field<R: Rng>(k: usize, n: usize, rng: &mut R) -> Result<(MatchingField, WeightMatrix)> {
    let range = (10 * k * n) as i64;
    for _ in 0..1000 {
        let m = random_weight_matrix(k, n, range, rng)?;
        match induced_matching_field(&m) {
            Ok(field) => return Ok((field, m)),
            Err(Error::Incoherent { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::LimitExceeded(format!("no tie-free {k}x{n} weight matrix in 1000 draws")))
}

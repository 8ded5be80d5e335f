//! Coherence certificates: an exact LP either finds a weight matrix inducing a
//! given matching field with a positive margin, or proves that none exists.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::combinat::Permutation;
use crate::error::{Error, Result};
use crate::field::MatchingField;
use crate::lp::{LinearProgram, LpOutcome};
use crate::weights::{format_rational, induced_matching_field, margin, WeightMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoherenceVerdict {
    Coherent,
    Incoherent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherenceCertificate {
    pub verdict: CoherenceVerdict,
    /// Normalized matrix inducing the field, when coherent.
    pub witness: Option<WeightMatrix>,
    /// Minimum gap between the chosen term and every other term, when coherent.
    pub margin: Option<BigRational>,
    /// Optimal margin of the bounded LP; `≤ 0` certifies incoherence.
    pub lp_optimum: BigRational,
}

impl CoherenceCertificate {
    pub fn is_coherent(&self) -> bool {
        self.verdict == CoherenceVerdict::Coherent
    }

    /// Wraps a known inducing matrix after checking it.
    pub fn from_weight_matrix(field: &MatchingField, m: &WeightMatrix) -> Result<Self> {
        let induced = induced_matching_field(m)?;
        if induced != *field {
            return Err(Error::Precondition("weight matrix induces a different matching field".into()));
        }
        let gap = margin(m, field)?;
        Ok(CoherenceCertificate {
            verdict: CoherenceVerdict::Coherent,
            witness: Some(m.normalize()),
            margin: Some(gap.clone()),
            lp_optimum: gap,
        })
    }

    /// Whether this certificate proves `field` coherent.
    pub fn certifies(&self, field: &MatchingField) -> bool {
        match (&self.verdict, &self.witness) {
            (CoherenceVerdict::Coherent, Some(m)) => induced_matching_field(m).is_ok_and(|f| f == *field),
            _ => false,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "coherent": self.is_coherent(),
            "witness": self.witness,
            "margin": self.margin.as_ref().map(format_rational),
            "lp_optimum": format_rational(&self.lp_optimum),
        })
    }
}

/// Box bound on the LP variables.
pub fn box_bound(k: usize, n: usize) -> BigRational {
    BigRational::from_integer((4 * k * n).into())
}

/// Decides coherence of `field` by maximizing the margin `δ` over weight
/// matrices with first row zero and entries in `[0, 4kn]`.
///
/// Coherence is invariant under adding constants to columns and under positive
/// scaling, so the box loses no generality: the field is coherent iff `δ* > 0`.
pub fn coherence_witness(field: &MatchingField) -> Result<CoherenceCertificate> {
    let (k, n) = (field.k(), field.n());
    if k == 1 {
        let witness = WeightMatrix::zero(1, n)?;
        return Ok(CoherenceCertificate {
            verdict: CoherenceVerdict::Coherent,
            witness: Some(witness),
            margin: Some(BigRational::one()),
            lp_optimum: BigRational::one(),
        });
    }

    let free = (k - 1) * n;
    let delta = free;
    let var = |row: usize, col: usize| (row - 2) * n + (col - 1);
    let mut objective = vec![BigRational::zero(); free + 1];
    objective[delta] = BigRational::one();
    let mut lp = LinearProgram::new(objective);

    let perms = Permutation::all(k);
    for (subset, chosen) in field.iter() {
        for other in perms.iter().filter(|p| *p != chosen) {
            // δ − (w_other − w_chosen) ≤ 0
            let mut row = vec![BigRational::zero(); free + 1];
            row[delta] = BigRational::one();
            for (s, &i) in subset.elements().iter().enumerate() {
                let r_other = other.apply(s + 1);
                let r_chosen = chosen.apply(s + 1);
                if r_other == r_chosen {
                    continue;
                }
                if r_other != 1 {
                    row[var(r_other, i)] -= BigRational::one();
                }
                if r_chosen != 1 {
                    row[var(r_chosen, i)] += BigRational::one();
                }
            }
            lp.push(row, BigRational::zero())?;
        }
    }
    let bound = box_bound(k, n);
    for v in 0..free {
        let mut row = vec![BigRational::zero(); free + 1];
        row[v] = BigRational::one();
        lp.push(row, bound.clone())?;
    }

    let (value, point) = match lp.maximize() {
        LpOutcome::Optimal { value, point } => (value, point),
        LpOutcome::Unbounded => unreachable!("margin is bounded by the box"),
    };
    if !value.is_positive() {
        return Ok(CoherenceCertificate {
            verdict: CoherenceVerdict::Incoherent,
            witness: None,
            margin: None,
            lp_optimum: value,
        });
    }

    let mut rows = vec![vec![BigRational::zero(); n]];
    for r in 2..=k {
        rows.push((1..=n).map(|c| point[var(r, c)].clone()).collect());
    }
    let witness = WeightMatrix::new(rows)?;
    if induced_matching_field(&witness)? != *field {
        return Err(Error::Precondition("LP witness does not reproduce the matching field".into()));
    }
    Ok(CoherenceCertificate {
        verdict: CoherenceVerdict::Coherent,
        witness: Some(witness),
        margin: Some(value.clone()),
        lp_optimum: value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::Subset;
    use crate::field::{block_diagonal_matching_field, diagonal_matching_field};

    #[test]
    fn diagonal_is_coherent() {
        let diag = diagonal_matching_field(3, 6).unwrap();
        let cert = coherence_witness(&diag).unwrap();
        assert!(cert.is_coherent());
        assert!(cert.certifies(&diag));
        assert!(cert.margin.unwrap().is_positive());
        assert!(cert.witness.unwrap().is_normalized());
    }

    #[test]
    fn transposed_two_by_six_is_incoherent() {
        let swapped = [[1, 4], [2, 3], [3, 6], [4, 5]].map(|s| Subset::new(s.to_vec()).unwrap());
        let field = MatchingField::from_fn(2, 6, |s| {
            if swapped.contains(s) {
                Permutation::transposition(2, 1, 2)
            } else {
                Permutation::identity(2)
            }
        })
        .unwrap();
        let cert = coherence_witness(&field).unwrap();
        assert_eq!(cert.verdict, CoherenceVerdict::Incoherent);
        assert!(!cert.lp_optimum.is_positive());
        assert!(!cert.certifies(&field));
    }

    #[test]
    fn block_fields_and_k1() {
        let a = crate::combinat::Composition::new(vec![2, 4]).unwrap();
        let f = block_diagonal_matching_field(&a).unwrap();
        assert!(coherence_witness(&f).unwrap().certifies(&f));
        let f = diagonal_matching_field(1, 4).unwrap();
        assert!(coherence_witness(&f).unwrap().certifies(&f));
    }

    #[test]
    fn certificate_from_known_matrix() {
        let a = crate::combinat::Composition::new(vec![3, 3]).unwrap();
        let f = block_diagonal_matching_field(&a).unwrap();
        let m = crate::weights::block_diagonal_weight_matrix(&a).unwrap();
        let cert = CoherenceCertificate::from_weight_matrix(&f, &m).unwrap();
        assert!(cert.certifies(&f));
        let diag = diagonal_matching_field(3, 6).unwrap();
        assert!(CoherenceCertificate::from_weight_matrix(&diag, &m).is_err());
    }
}

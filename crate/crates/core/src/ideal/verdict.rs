//! Toric-degeneration verdicts for coherent matching fields.

use serde::Serialize;

use super::hexagon::{has_hexagonal_submatching, is_non_hexagonal, Coherence, HexagonalWitness};
use super::markov::{quadratic_generation, FiberCertificate, MarkovOptions, QuadraticGeneration};
use crate::coherence::CoherenceCertificate;
use crate::combinat::Subset;
use crate::error::{Error, Result};
use crate::field::MatchingField;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum Verdict {
    ToricDegeneration {
        provenance: String,
        /// Quadratic generation was checked up to this degree only.
        quadratic_up_to: usize,
    },
    NotToric {
        provenance: String,
        witness: HexagonalWitness,
    },
    Inconclusive {
        provenance: Option<String>,
        reason: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        certificate: Option<FiberCertificate>,
    },
}

impl Verdict {
    pub fn is_toric(&self) -> bool {
        matches!(self, Verdict::ToricDegeneration { .. })
    }

    pub fn is_not_toric(&self) -> bool {
        matches!(self, Verdict::NotToric { .. })
    }

    /// One-line form such as `ToricDegeneration (Theorem 1.3)`.
    pub fn summary(&self) -> String {
        let (name, provenance) = match self {
            Verdict::ToricDegeneration { provenance, .. } => ("ToricDegeneration", Some(provenance)),
            Verdict::NotToric { provenance, .. } => ("NotToric", Some(provenance)),
            Verdict::Inconclusive { provenance, .. } => ("Inconclusive", provenance.as_ref()),
        };
        match provenance {
            Some(p) => format!("{name} ({p})"),
            None => name.to_string(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("verdict serializes")
    }
}

pub fn toric_degeneration_verdict(
    field: &MatchingField,
    coherence: &CoherenceCertificate,
    max_degree: usize,
) -> Result<Verdict> {
    toric_degeneration_verdict_with(field, coherence, &MarkovOptions::up_to(max_degree))
}

pub fn toric_degeneration_verdict_with(
    field: &MatchingField,
    coherence: &CoherenceCertificate,
    opts: &MarkovOptions,
) -> Result<Verdict> {
    if !coherence.certifies(field) {
        return Err(Error::Precondition("verdicts need a coherence certificate for this matching field".into()));
    }
    let hexagon = hexagon_witness(field, Coherence::Certified(coherence))?;
    let opts = MarkovOptions { max_degree: opts.max_degree.max(3), ..opts.clone() };
    decide(field.k(), hexagon, || quadratic_generation(field, &opts))
}

/// The hexagonal (sub)matching field witness relevant for `field`, if any.
/// `None` for fields with fewer than three rows.
pub(crate) fn hexagon_witness(field: &MatchingField, coherence: Coherence<'_>) -> Result<Option<HexagonalWitness>> {
    match field.k() {
        0..=2 => Ok(None),
        3 if field.n() < 6 => Ok(None),
        3 => Ok(is_non_hexagonal(field, coherence)?.witness.map(|j| HexagonalWitness { s: Subset::empty(), t: j })),
        _ => has_hexagonal_submatching(field),
    }
}

/// Combines the hexagonality scan with the bounded quadratic check, which is
/// only consulted when it can change the outcome.
pub(crate) fn decide(
    k: usize,
    hexagon: Option<HexagonalWitness>,
    quadratic: impl FnOnce() -> Result<QuadraticGeneration>,
) -> Result<Verdict> {
    if k < 3 {
        return Ok(Verdict::Inconclusive {
            provenance: None,
            reason: format!("no hexagonality criterion applies to {k}-row matching fields"),
            certificate: None,
        });
    }
    if let Some(witness) = hexagon {
        let provenance = if k == 3 { "Theorem 1.1" } else { "Theorem 1.2" };
        return Ok(Verdict::NotToric { provenance: provenance.into(), witness });
    }
    if k > 3 {
        return Ok(Verdict::Inconclusive {
            provenance: Some("Remark 4.3".into()),
            reason:
                "no hexagonal submatching field; for k > 3 quadratic generation does not imply a toric degeneration"
                    .into(),
            certificate: None,
        });
    }
    Ok(match quadratic()? {
        QuadraticGeneration::YesUpTo { max_degree } => {
            Verdict::ToricDegeneration { provenance: "Theorem 1.3".into(), quadratic_up_to: max_degree }
        }
        QuadraticGeneration::No { certificate } => Verdict::Inconclusive {
            provenance: Some("Theorem 1.3".into()),
            reason: format!("non-hexagonal, but the ideal has a minimal generator of degree {}", certificate.degree),
            certificate: Some(certificate),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coherence::coherence_witness;
    use crate::combinat::Composition;
    use crate::field::{block_diagonal_matching_field, diagonal_matching_field};
    use crate::weights::{induced_matching_field, WeightMatrix};

    #[test]
    fn verdicts() {
        let block = block_diagonal_matching_field(&Composition::new(vec![2, 4]).unwrap()).unwrap();
        let cert = coherence_witness(&block).unwrap();
        assert!(toric_degeneration_verdict(&block, &cert, 3).unwrap().is_toric());

        let m = WeightMatrix::from_integers(&[vec![0, 0, 0, 0, 0, 0], vec![6, 1, 5, 9, 2, 7], vec![5, 8, 2, 7, 3, 1]])
            .unwrap();
        let hex = induced_matching_field(&m).unwrap();
        let cert = CoherenceCertificate::from_weight_matrix(&hex, &m).unwrap();
        let v = toric_degeneration_verdict(&hex, &cert, 3).unwrap();
        assert!(v.is_not_toric());
        assert_eq!(v.to_json()["provenance"], "Theorem 1.1");
        assert_eq!(v.summary(), "NotToric (Theorem 1.1)");

        let diag = diagonal_matching_field(3, 6).unwrap();
        assert!(matches!(toric_degeneration_verdict(&diag, &cert, 3), Err(Error::Precondition(_))));

        let diag = diagonal_matching_field(2, 5).unwrap();
        let cert = coherence_witness(&diag).unwrap();
        assert!(matches!(toric_degeneration_verdict(&diag, &cert, 3).unwrap(), Verdict::Inconclusive { .. }));
    }
}

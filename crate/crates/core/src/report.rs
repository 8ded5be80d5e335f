//! The full check pipeline: coherence, hexagonality, bounded quadratic
//! generation and the resulting verdict, computed once each.

use serde::Serialize;

use crate::coherence::{coherence_witness, CoherenceCertificate};
use crate::error::Result;
use crate::field::MatchingField;
use crate::ideal::{
    decide, hexagon_witness, quadratic_generation, Coherence, FiberCertificate, HexagonalWitness, MarkovOptions,
    QuadraticGeneration, Verdict,
};

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub coherent: bool,
    /// `None` when no hexagonality notion applies (`k < 3`).
    pub hexagonal: Option<bool>,
    /// Quadratic generation holds in all degrees up to this bound.
    pub quadratic_up_to: Option<usize>,
    pub verdict: String,
    pub coherence: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hexagonal_witness: Option<HexagonalWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quadratic_certificate: Option<FiberCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Verdict>,
    #[serde(skip)]
    pub certificate: Option<CoherenceCertificate>,
}

impl CheckReport {
    /// Negative outcomes: incoherent input or a non-toric verdict.
    pub fn is_negative(&self) -> bool {
        !self.coherent || self.details.as_ref().is_some_and(Verdict::is_not_toric)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

pub fn check(field: &MatchingField, opts: &MarkovOptions) -> Result<CheckReport> {
    let cert = coherence_witness(field)?;
    let coherent = cert.is_coherent();
    let opts = MarkovOptions { max_degree: opts.max_degree.max(3), ..opts.clone() };
    let quadratic = quadratic_generation(field, &opts)?;
    let (quadratic_up_to, quadratic_certificate) = match &quadratic {
        QuadraticGeneration::YesUpTo { max_degree } => (Some(*max_degree), None),
        QuadraticGeneration::No { certificate } => (None, Some(certificate.clone())),
    };

    let (hexagonal, hexagonal_witness, details) = if coherent {
        let witness = hexagon_witness(field, Coherence::Certified(&cert))?;
        let hexagonal = (field.k() >= 3).then_some(witness.is_some());
        let verdict = decide(field.k(), witness.clone(), || Ok(quadratic))?;
        (hexagonal, witness, Some(verdict))
    } else {
        (None, None, None)
    };
    let verdict = match &details {
        Some(v) => v.summary(),
        None => "NotApplicable (incoherent matching field)".to_string(),
    };
    Ok(CheckReport {
        coherent,
        hexagonal,
        quadratic_up_to,
        verdict,
        coherence: cert.to_json(),
        hexagonal_witness,
        quadratic_certificate,
        details,
        certificate: Some(cert),
    })
}

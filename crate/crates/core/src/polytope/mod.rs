//! Matching-field polytopes: the convex hull of the exponent vectors of the
//! initial monomials `x_{Λ(I)}`.

mod hull;
mod intmat;
mod lattice;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

pub use hull::{facets as hull_facets, ApexRule, FaceLattice, Facet, PointSet};
pub use lattice::{affine_lattice_basis, AffineLattice};

use crate::coherence::CoherenceCertificate;
use crate::error::{Error, Result};
use crate::field::MatchingField;
use crate::weights::format_rational;

/// Default cap on the number of candidate hyperplanes examined.
pub const DEFAULT_CANDIDATE_LIMIT: u64 = 20_000_000;

/// Vertex of `I` at index `(r − 1)·n + (j − 1)` when `j` sits in row `r`.
pub fn polytope_vertices(field: &MatchingField) -> Vec<Vec<i64>> {
    let (k, n) = (field.k(), field.n());
    field
        .subsets()
        .iter()
        .map(|subset| {
            let column = field.column(subset).expect("subset of the field");
            let mut v = vec![0; k * n];
            for (r, &j) in column.rows().iter().enumerate() {
                v[r * n + j - 1] = 1;
            }
            v
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceLatticeSummary {
    pub f_vector: Vec<usize>,
    pub facets: Vec<Facet>,
}

impl FaceLatticeSummary {
    /// `Σ (−1)^i f_i = 1 − (−1)^dim`.
    pub fn satisfies_euler(&self) -> bool {
        let dim = self.f_vector.len();
        let lhs: i64 =
            self.f_vector.iter().enumerate().map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) }).sum();
        lhs == 1 - if dim.is_multiple_of(2) { 1 } else { -1 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VolumeReport {
    pub dim: usize,
    pub normalized: BigUint,
    pub euclidean: BigRational,
    pub simplices: usize,
}

impl VolumeReport {
    pub fn is_consistent(&self) -> bool {
        let normalized = BigRational::from_integer(BigInt::from(self.normalized.clone()));
        normalized == &self.euclidean * BigRational::from_integer(factorial(self.dim).into())
    }
}

/// Points in lattice coordinates together with their hull.
#[derive(Clone, Debug)]
pub struct LatticePolytope {
    pub ambient_dim: usize,
    pub vertices: Vec<Vec<i64>>,
    pub lattice: AffineLattice,
    pub facets: Vec<Facet>,
    pub faces: FaceLattice,
}

impl LatticePolytope {
    pub fn new(points: Vec<Vec<i64>>) -> Result<Self> {
        Self::with_limit(points, DEFAULT_CANDIDATE_LIMIT)
    }

    pub fn with_limit(points: Vec<Vec<i64>>, candidate_limit: u64) -> Result<Self> {
        let mut sorted = points.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("polytope points must be distinct"));
        }
        let lattice = affine_lattice_basis(&points)?;
        let dim = lattice.dim();
        let facets = hull::facets(&lattice.coordinates, dim, candidate_limit)?;
        let faces = FaceLattice::new(&lattice.coordinates, dim, &facets)?;
        Ok(LatticePolytope { ambient_dim: points[0].len(), vertices: points, lattice, facets, faces })
    }

    pub fn dim(&self) -> usize {
        self.lattice.dim()
    }

    pub fn summary(&self) -> FaceLatticeSummary {
        FaceLatticeSummary { f_vector: self.faces.f_vector(), facets: self.facets.clone() }
    }

    pub fn volume(&self, rule: ApexRule) -> Result<VolumeReport> {
        let dim = self.dim();
        if dim == 0 {
            return Ok(VolumeReport {
                dim,
                normalized: BigUint::default(),
                euclidean: BigRational::default(),
                simplices: 0,
            });
        }
        let coords = &self.lattice.coordinates;
        let simplices = hull::pulling_triangulation(coords, &self.faces, rule);
        let mut total = BigUint::default();
        for s in &simplices {
            total += hull::simplex_volume(coords, s)?;
        }
        let euclidean = BigRational::new(BigInt::from(total.clone()), BigInt::from(factorial(dim)));
        Ok(VolumeReport { dim, normalized: total, euclidean, simplices: simplices.len() })
    }
}

pub fn convex_hull_facets(points: &[Vec<i64>]) -> Result<Vec<Facet>> {
    Ok(LatticePolytope::new(points.to_vec())?.facets)
}

pub fn f_vector(points: &[Vec<i64>]) -> Result<FaceLatticeSummary> {
    Ok(LatticePolytope::new(points.to_vec())?.summary())
}

pub fn normalized_volume(points: &[Vec<i64>]) -> Result<VolumeReport> {
    LatticePolytope::new(points.to_vec())?.volume(ApexRule::LexMin)
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `deg Gr(k, n) = (k(n−k))! · Π_{l<k} l! / Π_{l≤k} (n−l)!`.
pub fn grassmannian_degree(k: usize, n: usize) -> Result<BigUint> {
    if k == 0 || k > n {
        return Err(Error::invalid(format!("need 1 <= k <= n, got k = {k}, n = {n}")));
    }
    let num = factorial(k * (n - k)) * (1..k).map(factorial).product::<BigUint>();
    let den: BigUint = (1..=k).map(|l| factorial(n - l)).product();
    Ok(num / den)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeBound {
    pub volume: String,
    pub degree: String,
    pub holds: bool,
    pub equality: bool,
}

/// Compares the normalized volume of `Π_Λ` with `deg Gr(k, n)`.
pub fn degree_bound_check(field: &MatchingField, coherence: &CoherenceCertificate) -> Result<DegreeBound> {
    if !coherence.certifies(field) {
        return Err(Error::Precondition("the volume bound needs a coherent matching field".into()));
    }
    let polytope = LatticePolytope::new(polytope_vertices(field))?;
    bound_from(&polytope.volume(ApexRule::LexMin)?, field.k(), field.n())
}

fn bound_from(volume: &VolumeReport, k: usize, n: usize) -> Result<DegreeBound> {
    let degree = grassmannian_degree(k, n)?;
    Ok(DegreeBound {
        volume: volume.normalized.to_string(),
        degree: degree.to_string(),
        holds: volume.normalized <= degree,
        equality: volume.normalized == degree,
    })
}

/// Everything the polytope pipeline reports for one field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolytopeReport {
    pub dim: usize,
    pub vertices: Vec<Vec<i64>>,
    pub f_vector: Vec<usize>,
    pub normalized_volume: String,
    pub euclidean_volume: String,
    pub grassmannian_degree: String,
    pub volume_at_most_degree: bool,
}

pub fn polytope_report(field: &MatchingField, candidate_limit: u64) -> Result<PolytopeReport> {
    let polytope = LatticePolytope::with_limit(polytope_vertices(field), candidate_limit)?;
    let volume = polytope.volume(ApexRule::LexMin)?;
    let bound = bound_from(&volume, field.k(), field.n())?;
    Ok(PolytopeReport {
        dim: polytope.dim(),
        vertices: polytope.vertices.clone(),
        f_vector: polytope.faces.f_vector(),
        normalized_volume: volume.normalized.to_string(),
        euclidean_volume: format_rational(&volume.euclidean),
        grassmannian_degree: bound.degree,
        volume_at_most_degree: bound.holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::diagonal_matching_field;

    #[test]
    fn degrees() {
        assert_eq!(grassmannian_degree(3, 6).unwrap(), 42u32.into());
        assert_eq!(grassmannian_degree(2, 4).unwrap(), 2u32.into());
        assert_eq!(grassmannian_degree(1, 7).unwrap(), 1u32.into());
        assert_eq!(grassmannian_degree(2, 5).unwrap(), 5u32.into());
        assert!(grassmannian_degree(4, 3).is_err());
    }

    #[test]
    fn simplex_polytope() {
        let field = diagonal_matching_field(1, 5).unwrap();
        let p = LatticePolytope::new(polytope_vertices(&field)).unwrap();
        assert_eq!(p.dim(), 4);
        assert_eq!(p.summary().f_vector, vec![5, 10, 10, 5]);
        assert!(p.summary().satisfies_euler());
        let v = p.volume(ApexRule::LexMin).unwrap();
        assert_eq!(v.normalized, 1u32.into());
        assert!(v.is_consistent());
    }

    #[test]
    fn gr24_diagonal() {
        let field = diagonal_matching_field(2, 4).unwrap();
        let p = LatticePolytope::new(polytope_vertices(&field)).unwrap();
        assert_eq!(p.dim(), 4);
        assert_eq!(p.volume(ApexRule::LexMin).unwrap().normalized, 2u32.into());
        assert_eq!(p.volume(ApexRule::LexMax).unwrap().normalized, 2u32.into());
    }
}

//! Exact facets, face lattice and pulling triangulations of a full-dimensional
//! point configuration in `Z^d`.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use super::intmat;
use crate::combinat::{binomial, combinations};
use crate::error::{Error, Result};

/// Point sets are bitsets over at most 128 input points.
pub type PointSet = u128;

pub const MAX_POINTS: usize = 128;

pub fn members(set: PointSet) -> impl Iterator<Item = usize> {
    (0..MAX_POINTS).filter(move |&i| set >> i & 1 == 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Facet {
    /// Indices of the points on the facet.
    pub points: Vec<usize>,
    /// `normal · x ≤ offset` for every point, with equality on the facet.
    pub normal: Vec<i64>,
    pub offset: i64,
}

/// Brute force over `d`-subsets: every facet contains `d` affinely independent
/// points, whose hyperplane then supports all points on one side.
pub fn facets(coords: &[Vec<i64>], dim: usize, candidate_limit: u64) -> Result<Vec<Facet>> {
    let m = coords.len();
    if dim == 0 {
        return Ok(Vec::new());
    }
    if m > MAX_POINTS {
        return Err(Error::LimitExceeded(format!("{m} points exceed the hull limit of {MAX_POINTS}")));
    }
    let candidates = binomial(m, dim);
    if candidates > candidate_limit {
        return Err(Error::LimitExceeded(format!(
            "{candidates} candidate hyperplanes exceed the limit of {candidate_limit}"
        )));
    }
    let wide: Vec<Vec<i128>> = coords.iter().map(|p| p.iter().map(|&x| x as i128).collect()).collect();
    let subsets: Vec<Vec<usize>> = combinations(m, dim).collect();

    let found: Vec<Option<(PointSet, Vec<i128>, i128)>> = subsets
        .par_iter()
        .map(|idx| -> Result<Option<(PointSet, Vec<i128>, i128)>> {
            let base = &wide[idx[0]];
            let diffs: Vec<Vec<i128>> =
                idx[1..].iter().map(|&i| wide[i].iter().zip(base).map(|(x, b)| x - b).collect()).collect();
            let Some(mut normal) = intmat::normal(&diffs, dim)? else { return Ok(None) };
            let offset: i128 = normal.iter().zip(base).map(|(a, b)| a * b).sum();
            let (mut above, mut below, mut on) = (false, false, 0 as PointSet);
            for (i, p) in wide.iter().enumerate() {
                let s: i128 = normal.iter().zip(p).map(|(a, b)| a * b).sum::<i128>() - offset;
                match s.signum() {
                    1 => above = true,
                    -1 => below = true,
                    _ => on |= 1 << i,
                }
                if above && below {
                    return Ok(None);
                }
            }
            // each facet is reported only by subsets starting at its least point
            if idx[0] != on.trailing_zeros() as usize {
                return Ok(None);
            }
            if above {
                normal.iter_mut().for_each(|x| *x = -*x);
                return Ok(Some((on, normal, -offset)));
            }
            Ok(Some((on, normal, offset)))
        })
        .collect::<Result<_>>()?;

    let mut seen: BTreeMap<PointSet, (Vec<i128>, i128)> = BTreeMap::new();
    for (on, normal, offset) in found.into_iter().flatten() {
        seen.entry(on).or_insert((normal, offset));
    }
    let to_i64 = |x: i128| i64::try_from(x).map_err(|_| Error::LimitExceeded("facet normal overflows i64".into()));
    seen.into_iter()
        .map(|(on, (normal, offset))| {
            Ok(Facet {
                points: members(on).collect(),
                normal: normal.into_iter().map(to_i64).collect::<Result<_>>()?,
                offset: to_i64(offset)?,
            })
        })
        .collect()
}

/// Affine dimension of a set of points.
pub fn affine_dim(coords: &[Vec<i64>], set: PointSet) -> Result<usize> {
    let idx: Vec<usize> = members(set).collect();
    let Some(&first) = idx.first() else { return Ok(0) };
    let diffs: Vec<Vec<i128>> = idx[1..]
        .iter()
        .map(|&i| coords[i].iter().zip(&coords[first]).map(|(x, b)| (x - b) as i128).collect())
        .collect();
    intmat::rank(&diffs)
}

/// Every proper nonempty face, as the set of points it contains, by dimension.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    pub dim: usize,
    pub faces: Vec<Vec<PointSet>>,
    pub all: PointSet,
}

impl FaceLattice {
    pub fn new(coords: &[Vec<i64>], dim: usize, facets: &[Facet]) -> Result<Self> {
        let all: PointSet = if coords.len() == MAX_POINTS { PointSet::MAX } else { (1 << coords.len()) - 1 };
        let facet_sets: Vec<PointSet> = facets.iter().map(|f| f.points.iter().fold(0, |s, &i| s | 1 << i)).collect();
        let mut seen: HashSet<PointSet> = facet_sets.iter().copied().collect();
        let mut queue: VecDeque<PointSet> = facet_sets.iter().copied().collect();
        while let Some(face) = queue.pop_front() {
            for &g in &facet_sets {
                let h = face & g;
                if h != 0 && seen.insert(h) {
                    queue.push_back(h);
                }
            }
        }
        let mut faces = vec![Vec::new(); dim];
        let mut ordered: Vec<PointSet> = seen.into_iter().collect();
        ordered.sort_unstable();
        let dims: Vec<usize> = ordered.par_iter().map(|&f| affine_dim(coords, f)).collect::<Result<_>>()?;
        for (f, d) in ordered.into_iter().zip(dims) {
            if d < dim {
                faces[d].push(f);
            }
        }
        Ok(FaceLattice { dim, faces, all })
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Points that are vertices of the polytope.
    pub fn vertices(&self) -> Vec<usize> {
        match self.dim {
            0 => members(self.all).collect(),
            _ => self.faces[0].iter().map(|&v| v.trailing_zeros() as usize).collect(),
        }
    }

    /// Faces of dimension `dim(face) − 1` contained in `face`.
    fn subfacets(&self, face: PointSet, face_dim: usize) -> impl Iterator<Item = PointSet> + '_ {
        self.faces[face_dim - 1].iter().copied().filter(move |&g| g & face == g)
    }
}

/// Which vertex each recursive step cones from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ApexRule {
    /// Lexicographically least coordinate vector.
    LexMin,
    LexMax,
}

/// Pulling triangulation: cone from the apex over the triangulations of all
/// facets not containing it. Simplices are lists of `dim + 1` point indices.
pub fn pulling_triangulation(coords: &[Vec<i64>], lattice: &FaceLattice, rule: ApexRule) -> Vec<Vec<usize>> {
    let vertices: BTreeSet<usize> = lattice.vertices().into_iter().collect();
    let mut memo = HashMap::new();
    triangulate(coords, lattice, &vertices, lattice.all, lattice.dim, rule, &mut memo)
}

fn triangulate(
    coords: &[Vec<i64>],
    lattice: &FaceLattice,
    vertices: &BTreeSet<usize>,
    face: PointSet,
    face_dim: usize,
    rule: ApexRule,
    memo: &mut HashMap<PointSet, Vec<Vec<usize>>>,
) -> Vec<Vec<usize>> {
    if let Some(done) = memo.get(&face) {
        return done.clone();
    }
    let candidates = members(face).filter(|i| vertices.contains(i));
    let apex = match rule {
        ApexRule::LexMin => candidates.min_by(|&a, &b| coords[a].cmp(&coords[b]).then(a.cmp(&b))),
        ApexRule::LexMax => candidates.max_by(|&a, &b| coords[a].cmp(&coords[b]).then(b.cmp(&a))),
    }
    .expect("faces contain vertices");
    let out = if face_dim == 0 {
        vec![vec![apex]]
    } else {
        let subs: Vec<PointSet> = lattice.subfacets(face, face_dim).filter(|g| g >> apex & 1 == 0).collect();
        let mut out = Vec::new();
        for g in subs {
            for mut simplex in triangulate(coords, lattice, vertices, g, face_dim - 1, rule, memo) {
                simplex.insert(0, apex);
                out.push(simplex);
            }
        }
        out
    };
    memo.insert(face, out.clone());
    out
}

/// `|det(q_1 − q_0, …, q_d − q_0)|`.
pub fn simplex_volume(coords: &[Vec<i64>], simplex: &[usize]) -> Result<u128> {
    let base = &coords[simplex[0]];
    let m: Vec<Vec<i128>> =
        simplex[1..].iter().map(|&i| coords[i].iter().zip(base).map(|(x, b)| (x - b) as i128).collect()).collect();
    Ok(intmat::det(&m)?.unsigned_abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube() -> Vec<Vec<i64>> {
        (0..8).map(|i| vec![i & 1, i >> 1 & 1, i >> 2 & 1]).collect()
    }

    #[test]
    fn cube_faces_and_volume() {
        let pts = cube();
        let f = facets(&pts, 3, u64::MAX).unwrap();
        assert_eq!(f.len(), 6);
        assert!(f.iter().all(|f| f.points.len() == 4));
        let lattice = FaceLattice::new(&pts, 3, &f).unwrap();
        assert_eq!(lattice.f_vector(), vec![8, 12, 6]);
        for rule in [ApexRule::LexMin, ApexRule::LexMax] {
            let t = pulling_triangulation(&pts, &lattice, rule);
            let vol: u128 = t.iter().map(|s| simplex_volume(&pts, s).unwrap()).sum();
            assert_eq!(vol, 6);
        }
    }

    #[test]
    fn non_vertex_points_are_skipped() {
        let pts = vec![vec![0, 0], vec![2, 0], vec![0, 2], vec![1, 0], vec![1, 1]];
        let f = facets(&pts, 2, u64::MAX).unwrap();
        assert_eq!(f.len(), 3);
        let lattice = FaceLattice::new(&pts, 2, &f).unwrap();
        assert_eq!(lattice.vertices(), vec![0, 1, 2]);
        assert_eq!(lattice.f_vector(), vec![3, 3]);
        let t = pulling_triangulation(&pts, &lattice, ApexRule::LexMin);
        assert_eq!(t.iter().map(|s| simplex_volume(&pts, s).unwrap()).sum::<u128>(), 4);
    }

    #[test]
    fn candidate_guard() {
        assert!(matches!(facets(&cube(), 3, 10), Err(Error::LimitExceeded(_))));
    }
}

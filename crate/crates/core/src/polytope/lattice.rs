//! The lattice `span(differences) ∩ Z^N` of a point set, with integer
//! coordinates for every point.
//!
//! Unimodular column operations bring the difference matrix `D` to
//! `D·V = [B | 0]` with `B` of full column rank `r`. Then `x ∈ Z^N` lies in the
//! rational span iff the last `N − r` entries of `x·V` vanish, so the first
//! `r` rows of `V⁻¹` form a basis of the saturated lattice and `(x·V)[..r]`
//! are the coordinates of `x` in it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineLattice {
    pub origin: Vec<i64>,
    /// Basis rows in the ambient lattice.
    pub basis: Vec<Vec<i64>>,
    /// Coordinates of every input point relative to `origin`.
    pub coordinates: Vec<Vec<i64>>,
}

impl AffineLattice {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn affine_lattice_basis(points: &[Vec<i64>]) -> Result<AffineLattice> {
    let Some(origin) = points.first().cloned() else {
        return Err(Error::invalid("no points given"));
    };
    let n = origin.len();
    if points.iter().any(|p| p.len() != n) {
        return Err(Error::invalid("points have different ambient dimensions"));
    }
    let big = |x: i64| BigInt::from(x);
    let mut a: Vec<Vec<BigInt>> =
        points[1..].iter().map(|p| p.iter().zip(&origin).map(|(x, o)| big(x - o)).collect()).collect();
    let mut v: Vec<Vec<BigInt>> = identity(n);
    let mut v_inv: Vec<Vec<BigInt>> = identity(n);

    let mut c = 0;
    for i in 0..a.len() {
        if c == n {
            break;
        }
        for j in c + 1..n {
            if a[i][j].is_zero() {
                continue;
            }
            let (x, y) = (a[i][c].clone(), a[i][j].clone());
            let e = x.extended_gcd(&y);
            let (g, s, t) = (e.gcd, e.x, e.y);
            let (xg, yg) = (&x / &g, &y / &g);
            // columns c, j of A and V: (c, j) <- (s·c + t·j, −y/g·c + x/g·j)
            for m in [&mut a, &mut v] {
                for row in m.iter_mut() {
                    let (pc, pj) = (row[c].clone(), row[j].clone());
                    row[c] = &s * &pc + &t * &pj;
                    row[j] = &xg * &pj - &yg * &pc;
                }
            }
            // rows c, j of V⁻¹ transform by the inverse
            let (rc, rj) = (v_inv[c].clone(), v_inv[j].clone());
            v_inv[c] = rc.iter().zip(&rj).map(|(p, q)| &xg * p + &yg * q).collect();
            v_inv[j] = rc.iter().zip(&rj).map(|(p, q)| &s * q - &t * p).collect();
        }
        if !a[i][c].is_zero() {
            c += 1;
        }
    }
    let r = c;

    let small = |x: &BigInt| x.to_i64().ok_or_else(|| Error::LimitExceeded("lattice basis entry overflows i64".into()));
    let basis = v_inv[..r].iter().map(|row| row.iter().map(small).collect()).collect::<Result<Vec<Vec<i64>>>>()?;
    let coordinates = points
        .iter()
        .map(|p| {
            (0..r)
                .map(|col| {
                    let x: BigInt = p.iter().zip(&origin).zip(&v).map(|((x, o), row)| big(x - o) * &row[col]).sum();
                    small(&x)
                })
                .collect()
        })
        .collect::<Result<Vec<Vec<i64>>>>()?;
    Ok(AffineLattice { origin, basis, coordinates })
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn primitive(v: &[i64]) -> Vec<i64> {
        let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
        if g == 0 {
            return v.to_vec();
        }
        let sign = if v.iter().find(|x| **x != 0).is_some_and(|x| x.is_negative()) { -1 } else { 1 };
        v.iter().map(|x| sign * x / g).collect()
    }

    fn reconstruct(l: &AffineLattice, i: usize) -> Vec<i64> {
        let mut x = l.origin.clone();
        for (c, b) in l.coordinates[i].iter().zip(&l.basis) {
            for (xj, bj) in x.iter_mut().zip(b) {
                *xj += c * bj;
            }
        }
        x
    }

    #[test]
    fn simplex_and_saturation() {
        let simplex: Vec<Vec<i64>> = (0..4).map(|i| (0..4).map(|j| (i == j) as i64).collect()).collect();
        let l = affine_lattice_basis(&simplex).unwrap();
        assert_eq!(l.dim(), 3);
        for i in 0..4 {
            assert_eq!(reconstruct(&l, i), simplex[i]);
        }

        let l = affine_lattice_basis(&[vec![0, 0, 0], vec![2, 0, 0]]).unwrap();
        assert_eq!(l.basis.len(), 1);
        assert_eq!(primitive(&l.basis[0]), vec![1, 0, 0]);
        assert_eq!(l.coordinates[1][0].abs(), 2);

        let l = affine_lattice_basis(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(l.dim(), 0);
    }

    #[test]
    fn skew_lattice_round_trips() {
        let pts = vec![vec![1, 2, 3, 0], vec![3, 6, 1, 2], vec![0, 5, 5, 5], vec![4, 2, 2, 7], vec![2, 9, 0, 7]];
        let l = affine_lattice_basis(&pts).unwrap();
        assert_eq!(l.dim(), 4);
        for i in 0..pts.len() {
            assert_eq!(reconstruct(&l, i), pts[i]);
        }
    }
}

//! Fraction-free integer linear algebra on small dense matrices.

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

fn overflow() -> Error {
    Error::LimitExceeded("integer overflow in exact elimination".into())
}

/// Bareiss elimination; returns `(rank, last nonzero pivot)`. For square
/// full-rank input the pivot is the determinant up to row-swap sign.
fn bareiss(mut a: Vec<Vec<i128>>) -> Result<(usize, i128, i8)> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut sign = 1i8;
    let mut prev = 1i128;
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| a[r][c] != 0) else { continue };
        if p != rank {
            a.swap(p, rank);
            sign = -sign;
        }
        for r in rank + 1..rows {
            for j in c + 1..cols {
                let x = a[rank][c].checked_mul(a[r][j]).ok_or_else(overflow)?;
                let y = a[r][c].checked_mul(a[rank][j]).ok_or_else(overflow)?;
                a[r][j] = x.checked_sub(y).ok_or_else(overflow)? / prev;
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        rank += 1;
    }
    Ok((rank, prev, sign))
}

pub fn det(a: &[Vec<i128>]) -> Result<i128> {
    let n = a.len();
    if n == 0 {
        return Ok(1);
    }
    debug_assert!(a.iter().all(|r| r.len() == n));
    let (rank, pivot, sign) = bareiss(a.to_vec())?;
    Ok(if rank < n { 0 } else { pivot * sign as i128 })
}

pub fn rank(a: &[Vec<i128>]) -> Result<usize> {
    if a.is_empty() {
        return Ok(0);
    }
    Ok(bareiss(a.to_vec())?.0)
}

/// Primitive normal of the hyperplane spanned by `d − 1` vectors in `Z^d`,
/// or `None` when they are dependent.
pub fn normal(vectors: &[Vec<i128>], d: usize) -> Result<Option<Vec<i128>>> {
    debug_assert_eq!(vectors.len() + 1, d);
    let mut a = vectors.to_vec();
    let rows = a.len();
    let mut pivots = Vec::with_capacity(rows);
    let mut r = 0;
    for c in 0..d {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(p, r);
        for i in r + 1..rows {
            if a[i][c] == 0 {
                continue;
            }
            let (x, y) = (a[r][c], a[i][c]);
            let g = gcd(x, y);
            let (xg, yg) = (x / g, y / g);
            for j in c..d {
                let v = xg.checked_mul(a[i][j]).zip(yg.checked_mul(a[r][j])).ok_or_else(overflow)?;
                a[i][j] = v.0.checked_sub(v.1).ok_or_else(overflow)?;
            }
            let h = a[i].iter().fold(0, |h, &x| gcd(h, x));
            if h > 1 {
                a[i].iter_mut().for_each(|x| *x /= h);
            }
        }
        pivots.push(c);
        r += 1;
    }
    if r < rows {
        return Ok(None);
    }
    let free = (0..d).find(|c| !pivots.contains(c)).expect("one free column");
    // back substitution over the rationals, kept as a common denominator
    let mut x = vec![Ratio::<i128>::zero(); d];
    x[free] = Ratio::one();
    for i in (0..rows).rev() {
        let c = pivots[i];
        let mut s = Ratio::zero();
        for j in c + 1..d {
            if a[i][j] != 0 {
                s += x[j] * a[i][j];
            }
        }
        x[c] = -s / a[i][c];
    }
    let lcm = x.iter().fold(1i128, |l, q| l / gcd(l, *q.denom()) * q.denom());
    let mut v: Vec<i128> = x.iter().map(|q| q.numer() * (lcm / q.denom())).collect();
    let g = v.iter().fold(0, |g, &x| gcd(g, x));
    v.iter_mut().for_each(|x| *x /= g);
    Ok(Some(v))
}

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants_and_ranks() {
        assert_eq!(det(&[vec![2, 1], vec![1, 3]]).unwrap(), 5);
        assert_eq!(det(&[vec![0, 1], vec![1, 0]]).unwrap(), -1);
        assert_eq!(det(&[vec![1, 2], vec![2, 4]]).unwrap(), 0);
        assert_eq!(det(&[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 2]]).unwrap(), 6);
        assert_eq!(rank(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 0, 1]]).unwrap(), 2);
        assert_eq!(rank(&[vec![0, 0]]).unwrap(), 0);
    }

    #[test]
    fn normals() {
        assert_eq!(normal(&[vec![1, 0, 0], vec![0, 1, 0]], 3).unwrap(), Some(vec![0, 0, 1]));
        assert_eq!(normal(&[], 1).unwrap(), Some(vec![1]));
        assert_eq!(normal(&[vec![1, 1]], 2).unwrap(), Some(vec![-1, 1]));
        assert_eq!(normal(&[vec![1, 2, 3], vec![2, 4, 6]], 3).unwrap(), None);
        let n = normal(&[vec![2, 1, 0], vec![0, 3, 4]], 3).unwrap().unwrap();
        assert_eq!(n[0] * 2 + n[1], 0);
        assert_eq!(n[1] * 3 + n[2] * 4, 0);
        assert_eq!(n.iter().fold(0, |g, &x| gcd(g, x)), 1);
    }
}

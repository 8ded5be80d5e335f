//! Plücker monomials, their images `φ_Λ` in `K[x_ij]`, and fibers of `φ_Λ`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::Subset;
use crate::error::{Error, Result};
use crate::field::MatchingField;

/// `Π_{I∈A} P_I` as a sorted multiset of subsets.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PlueckerMonomial(Vec<Subset>);

impl PlueckerMonomial {
    pub fn new(mut factors: Vec<Subset>) -> Self {
        factors.sort();
        PlueckerMonomial(factors)
    }

    pub fn one() -> Self {
        PlueckerMonomial(Vec::new())
    }

    pub fn factors(&self) -> &[Subset] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &PlueckerMonomial) -> PlueckerMonomial {
        PlueckerMonomial::new(self.0.iter().chain(&other.0).cloned().collect())
    }

    /// Multiset containment.
    pub fn divides(&self, other: &PlueckerMonomial) -> bool {
        let mut rest = other.0.clone();
        for f in &self.0 {
            match rest.iter().position(|g| g == f) {
                Some(i) => {
                    rest.remove(i);
                }
                None => return false,
            }
        }
        true
    }
}

impl PartialOrd for PlueckerMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the sorted factor lists.
impl Ord for PlueckerMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Debug for PlueckerMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PlueckerMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "P")?;
            for x in s.elements() {
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// A signed monomial in the `x_{ij}`, stored as a `k × n` exponent matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct XMonomial {
    pub exponents: Vec<Vec<u32>>,
    pub sign: i8,
}

impl XMonomial {
    pub fn one(k: usize, n: usize) -> Self {
        XMonomial { exponents: vec![vec![0; n]; k], sign: 1 }
    }

    pub fn mul(&self, other: &XMonomial) -> XMonomial {
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        XMonomial { exponents, sign: self.sign * other.sign }
    }

    pub fn row_sums(&self) -> Vec<u32> {
        self.exponents.iter().map(|r| r.iter().sum()).collect()
    }
}

/// `φ_Λ(Π P_I) = Π sgn(Λ(I)) x_{Λ(I)}`.
pub fn phi(field: &MatchingField, m: &PlueckerMonomial) -> Result<XMonomial> {
    let mut out = XMonomial::one(field.k(), field.n());
    for subset in m.factors() {
        let column = field.column(subset)?;
        for (r, &x) in column.rows().iter().enumerate() {
            out.exponents[r][x - 1] += 1;
        }
        out.sign *= column.sign();
    }
    Ok(out)
}

/// Precomputed exponent cells `r·n + (x−1)` of every Λ-column, by subset rank.
#[derive(Clone, Debug)]
pub(crate) struct CellTable {
    pub k: usize,
    pub n: usize,
    pub cells: Vec<Vec<usize>>,
    pub signs: Vec<i8>,
}

impl CellTable {
    pub fn new(field: &MatchingField) -> Self {
        let (k, n) = (field.k(), field.n());
        let mut cells = Vec::with_capacity(field.subsets().len());
        let mut signs = Vec::with_capacity(field.subsets().len());
        for rank in 0..field.subsets().len() {
            let column = field.column_at(rank);
            cells.push(column.rows().iter().enumerate().map(|(r, &x)| r * n + x - 1).collect());
            signs.push(column.sign());
        }
        CellTable { k, n, cells, signs }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn key_of(&self, ranks: &[u32]) -> Vec<u8> {
        let mut key = vec![0u8; self.k * self.n];
        for &r in ranks {
            for &c in &self.cells[r as usize] {
                key[c] += 1;
            }
        }
        key
    }

    pub fn sign_of(&self, ranks: &[u32]) -> i8 {
        ranks.iter().map(|&r| self.signs[r as usize]).product()
    }
}

/// All Plücker monomials whose image has the given exponent matrix, in
/// lexicographic order.
pub fn fiber(field: &MatchingField, target: &[Vec<u32>]) -> Result<Vec<PlueckerMonomial>> {
    let (k, n) = (field.k(), field.n());
    if target.len() != k || target.iter().any(|r| r.len() != n) {
        return Err(Error::invalid(format!("target exponent matrix must be {k}x{n}")));
    }
    let sums: Vec<u32> = target.iter().map(|r| r.iter().sum()).collect();
    if sums.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::invalid(format!("row sums {sums:?} differ; the fiber is empty by degree")));
    }
    let degree = sums[0] as usize;
    let table = CellTable::new(field);
    let mut remaining: Vec<u32> = target.iter().flatten().copied().collect();
    let mut current = Vec::with_capacity(degree);
    let mut found = Vec::new();
    fiber_dfs(&table, &mut remaining, 0, degree, &mut current, &mut found);
    Ok(found
        .into_iter()
        .map(|ranks: Vec<u32>| PlueckerMonomial(ranks.iter().map(|&r| field.subsets()[r as usize].clone()).collect()))
        .collect())
}

fn fiber_dfs(
    table: &CellTable,
    remaining: &mut [u32],
    start: usize,
    left: usize,
    current: &mut Vec<u32>,
    found: &mut Vec<Vec<u32>>,
) {
    if left == 0 {
        found.push(current.clone());
        return;
    }
    for rank in start..table.len() {
        let cells = &table.cells[rank];
        if cells.iter().any(|&c| remaining[c] == 0) {
            continue;
        }
        for &c in cells {
            remaining[c] -= 1;
        }
        current.push(rank as u32);
        fiber_dfs(table, remaining, rank, left - 1, current, found);
        current.pop();
        for &c in cells {
            remaining[c] += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::diagonal_matching_field;
    use crate::weights::{induced_matching_field, WeightMatrix};

    fn s(v: &[usize]) -> Subset {
        Subset::new(v.to_vec()).unwrap()
    }

    fn mono(v: &[&[usize]]) -> PlueckerMonomial {
        PlueckerMonomial::new(v.iter().map(|x| s(x)).collect())
    }

    fn hexagonal() -> MatchingField {
        let m = WeightMatrix::from_integers(&[vec![0, 0, 0, 0, 0, 0], vec![6, 1, 5, 9, 2, 7], vec![5, 8, 2, 7, 3, 1]])
            .unwrap();
        induced_matching_field(&m).unwrap()
    }

    fn rows(v: &[&[usize]], n: usize) -> Vec<Vec<u32>> {
        v.iter()
            .map(|r| {
                let mut e = vec![0; n];
                for &x in *r {
                    e[x - 1] += 1;
                }
                e
            })
            .collect()
    }

    #[test]
    fn phi_examples() {
        let diag = diagonal_matching_field(3, 6).unwrap();
        let img = phi(&diag, &mono(&[&[1, 3, 5], &[2, 4, 6]])).unwrap();
        assert_eq!(img.exponents, rows(&[&[1, 2], &[3, 4], &[5, 6]], 6));
        assert_eq!(img.sign, 1);

        let img = phi(&hexagonal(), &mono(&[&[1, 2, 4]])).unwrap();
        assert_eq!(img.exponents, rows(&[&[4], &[2], &[1]], 6));
        assert_eq!(img.sign, -1);

        let img = phi(&diag, &PlueckerMonomial::one()).unwrap();
        assert_eq!(img, XMonomial::one(3, 6));
    }

    #[test]
    fn fibers() {
        let diag = diagonal_matching_field(3, 6).unwrap();
        let f = fiber(&diag, &rows(&[&[1, 2], &[3, 4], &[5, 6]], 6)).unwrap();
        let expected = vec![
            mono(&[&[1, 3, 5], &[2, 4, 6]]),
            mono(&[&[1, 3, 6], &[2, 4, 5]]),
            mono(&[&[1, 4, 5], &[2, 3, 6]]),
            mono(&[&[1, 4, 6], &[2, 3, 5]]),
        ];
        assert_eq!(f, expected);
        assert_eq!(fiber(&diag, &rows(&[&[1], &[2], &[3]], 6)).unwrap(), vec![mono(&[&[1, 2, 3]])]);

        let hex = hexagonal();
        let target = phi(&hex, &mono(&[&[2, 3, 5], &[1, 4, 6]])).unwrap();
        let f = fiber(&hex, &target.exponents).unwrap();
        assert_eq!(f, vec![mono(&[&[1, 3, 4], &[2, 5, 6]]), mono(&[&[1, 4, 6], &[2, 3, 5]])]);

        assert!(fiber(&diag, &rows(&[&[1, 2], &[3], &[5]], 6)).is_err());
    }

    #[test]
    fn divisibility() {
        let a = mono(&[&[1, 2, 3]]);
        let b = mono(&[&[1, 2, 3], &[4, 5, 6]]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert!(!mono(&[&[1, 2, 3], &[1, 2, 3]]).divides(&b));
        assert_eq!(b.to_string(), "P123*P456");
    }
}

//! Matching-field tableaux: columns filled according to a permutation, their
//! concatenation, signs and row contents.

use crate::combinat::{Permutation, Subset};
use crate::error::{Error, Result};

/// One column: element `i_r` of the subset sits in row `σ(r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Column {
    subset: Subset,
    perm: Permutation,
    /// `rows[r]` is the entry in row `r + 1`.
    rows: Vec<usize>,
}

impl Column {
    pub fn new(subset: Subset, perm: Permutation) -> Result<Self> {
        if subset.len() != perm.k() {
            return Err(Error::invalid(format!(
                "subset {subset} has {} elements but permutation {perm} acts on {}",
                subset.len(),
                perm.k()
            )));
        }
        let mut rows = vec![0; subset.len()];
        for (r, &x) in subset.elements().iter().enumerate() {
            rows[perm.apply(r + 1) - 1] = x;
        }
        Ok(Column { subset, perm, rows })
    }

    /// Reads a column from its top-to-bottom entries.
    pub fn from_rows(rows: Vec<usize>) -> Result<Self> {
        let subset = Subset::new(rows.clone())?;
        let images = subset.elements().iter().map(|x| rows.iter().position(|y| y == x).unwrap() + 1).collect();
        let perm = Permutation::new(images)?;
        Ok(Column { subset, perm, rows })
    }

    pub fn subset(&self) -> &Subset {
        &self.subset
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// 1-based row holding `x`, if `x` is in the column.
    pub fn row_of(&self, x: usize) -> Option<usize> {
        self.rows.iter().position(|&y| y == x).map(|r| r + 1)
    }

    pub fn sign(&self) -> i8 {
        self.perm.sign()
    }
}

/// A `k × d` tableau made of columns of equal height.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    k: usize,
    columns: Vec<Column>,
}

impl Tableau {
    pub fn new(k: usize, columns: Vec<Column>) -> Result<Self> {
        if let Some(c) = columns.iter().find(|c| c.rows.len() != k) {
            return Err(Error::invalid(format!(
                "column {} has height {} but the tableau has {k} rows",
                c.subset,
                c.rows.len()
            )));
        }
        Ok(Tableau { k, columns })
    }

    pub fn single(column: Column) -> Self {
        Tableau { k: column.rows.len(), columns: vec![column] }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn width(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    /// Entry in 1-based row `r`, 0-based column `c`.
    pub fn entry(&self, r: usize, c: usize) -> usize {
        self.columns[c].rows[r - 1]
    }

    /// Product of the column signs.
    pub fn sign(&self) -> i8 {
        self.columns.iter().map(Column::sign).product()
    }

    /// Sorted multiset of entries for each row.
    pub fn row_content(&self) -> Vec<Vec<usize>> {
        (0..self.k)
            .map(|r| {
                let mut row: Vec<usize> = self.columns.iter().map(|c| c.rows[r]).collect();
                row.sort_unstable();
                row
            })
            .collect()
    }

    pub fn row_wise_equal(&self, other: &Tableau) -> Result<bool> {
        if self.k != other.k || self.width() != other.width() {
            return Err(Error::invalid(format!(
                "cannot compare a {}x{} tableau with a {}x{} one",
                self.k,
                self.width(),
                other.k,
                other.width()
            )));
        }
        Ok(self.row_content() == other.row_content())
    }
}

/// Concatenates tableaux left to right.
pub fn tableau_concat(parts: Vec<Tableau>) -> Result<Tableau> {
    let Some(k) = parts.first().map(|t| t.k) else {
        return Err(Error::invalid("nothing to concatenate"));
    };
    let mut columns = Vec::new();
    for t in parts {
        if t.k != k {
            return Err(Error::invalid(format!("mixed tableau heights {k} and {}", t.k)));
        }
        columns.extend(t.columns);
    }
    Ok(Tableau { k, columns })
}

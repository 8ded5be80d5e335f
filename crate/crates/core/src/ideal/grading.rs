//! Semistandard tableau counts and the `Z⁴` grading of block diagonal fields.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::combinat::Composition;
use crate::error::{Error, Result};
use crate::tableau::Tableau;

/// Number of `k × d` semistandard tableaux (rows weakly increasing, columns
/// strictly increasing) with the given content.
pub fn ssyt_count(k: usize, d: usize, content: &[usize]) -> Result<u64> {
    if content.len() != k * d {
        return Err(Error::invalid(format!(
            "content has {} entries, a {k}x{d} tableau needs {}",
            content.len(),
            k * d
        )));
    }
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &x in content {
        *counts.entry(x).or_default() += 1;
    }
    let values: Vec<usize> = counts.keys().copied().collect();
    let mut left: Vec<usize> = counts.values().copied().collect();
    // grid holds indices into `values`
    let mut grid = vec![0usize; k * d];
    Ok(fill(k, d, 0, &values, &mut left, &mut grid))
}

fn fill(k: usize, d: usize, cell: usize, values: &[usize], left: &mut [usize], grid: &mut [usize]) -> u64 {
    if cell == k * d {
        return 1;
    }
    let (r, c) = (cell / d, cell % d);
    let mut lo = 0;
    if c > 0 {
        lo = grid[cell - 1];
    }
    if r > 0 {
        lo = lo.max(grid[cell - d] + 1);
    }
    let mut total = 0;
    for v in lo..values.len() {
        if left[v] == 0 {
            continue;
        }
        left[v] -= 1;
        grid[cell] = v;
        total += fill(k, d, cell + 1, values, left, grid);
        left[v] += 1;
    }
    total
}

/// `(α, β, γ, d − α − β − γ)`: columns meeting the first block in 3, 2, 1
/// and 0 elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BlockGrading {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub rest: usize,
}

impl BlockGrading {
    pub fn as_array(&self) -> [usize; 4] {
        [self.alpha, self.beta, self.gamma, self.rest]
    }
}

/// The grading read off the row contents of a block diagonal `3 × d` tableau:
/// `α` from row 3, then `β` from row 1 and `γ` from row 2.
pub fn block_grading(t: &Tableau, a: &Composition) -> Result<BlockGrading> {
    if t.k() != 3 {
        return Err(Error::invalid("the block grading is defined for 3-row tableaux"));
    }
    let first = &a.blocks()[0];
    let rows = t.row_content();
    let in_first = |r: usize| rows[r].iter().filter(|&&x| first.contains(x)).count();
    let alpha = in_first(2);
    let beta = in_first(0).checked_sub(alpha);
    let gamma = beta.and_then(|b| in_first(1).checked_sub(alpha + b));
    let (Some(beta), Some(gamma)) = (beta, gamma) else {
        return Err(Error::Precondition("row contents do not come from a block diagonal tableau".into()));
    };
    let rest = t
        .width()
        .checked_sub(alpha + beta + gamma)
        .ok_or_else(|| Error::Precondition("row contents do not come from a block diagonal tableau".into()))?;
    Ok(BlockGrading { alpha, beta, gamma, rest })
}

/// The same grading counted column by column.
pub fn block_grading_by_columns(t: &Tableau, a: &Composition) -> BlockGrading {
    let first = &a.blocks()[0];
    let mut g = [0usize; 4];
    for column in t.columns() {
        let meet = column.subset().elements().iter().filter(|&&x| first.contains(x)).count();
        g[3 - meet.min(3)] += 1;
    }
    BlockGrading { alpha: g[0], beta: g[1], gamma: g[2], rest: g[3] }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::Subset;
    use crate::field::block_diagonal_matching_field;

    #[test]
    fn ssyt_counts() {
        assert_eq!(ssyt_count(3, 2, &[1, 2, 3, 4, 5, 6]).unwrap(), 5);
        assert_eq!(ssyt_count(2, 2, &[1, 2, 3, 4]).unwrap(), 2);
        assert_eq!(ssyt_count(1, 4, &[1, 1, 2, 5]).unwrap(), 1);
        assert_eq!(ssyt_count(2, 2, &[1, 1, 1, 2]).unwrap(), 0);
        assert!(ssyt_count(2, 2, &[1, 2, 3]).is_err());
    }

    #[test]
    fn gradings() {
        let a = Composition::new(vec![3, 3]).unwrap();
        let field = block_diagonal_matching_field(&a).unwrap();
        let s = |v: &[usize]| Subset::new(v.to_vec()).unwrap();
        let t = field.tableau(&[s(&[1, 2, 3]), s(&[4, 5, 6])]).unwrap();
        assert_eq!(block_grading(&t, &a).unwrap().as_array(), [1, 0, 0, 1]);
        let t = field.tableau(&[s(&[1, 4, 5])]).unwrap();
        assert_eq!(block_grading(&t, &a).unwrap().as_array(), [0, 0, 1, 0]);
        let t = field.tableau(&[s(&[4, 5, 6]), s(&[4, 5, 6])]).unwrap();
        assert_eq!(block_grading(&t, &a).unwrap().as_array(), [0, 0, 0, 2]);

        for i in crate::combinat::subsets(3, 6).unwrap() {
            for j in crate::combinat::subsets(3, 6).unwrap() {
                let t = field.tableau(&[i.clone(), j]).unwrap();
                assert_eq!(block_grading(&t, &a).unwrap(), block_grading_by_columns(&t, &a));
            }
        }
    }
}

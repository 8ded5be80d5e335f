//! Matching fields `Λ: I_{k,n} → S_k` and the constructions built on them.

use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinat::{self, subset_rank, Composition, Permutation, Subset};
use crate::error::{Error, Result};
use crate::tableau::{Column, Tableau};

/// A total map from the size-`k` subsets of `[n]` to `S_k`, stored densely by
/// lexicographic subset rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatchingField {
    k: usize,
    n: usize,
    subsets: Vec<Subset>,
    perms: Vec<Permutation>,
}

impl MatchingField {
    /// Builds a field from a rule evaluated on every subset.
    pub fn from_fn(k: usize, n: usize, mut rule: impl FnMut(&Subset) -> Permutation) -> Result<Self> {
        if k == 0 {
            return Err(Error::invalid("matching fields need k >= 1"));
        }
        let subsets = combinat::subsets(k, n)?;
        let perms: Vec<Permutation> = subsets.iter().map(&mut rule).collect();
        if let Some(p) = perms.iter().find(|p| p.k() != k) {
            return Err(Error::invalid(format!("permutation {p} is not in S_{k}")));
        }
        Ok(MatchingField { k, n, subsets, perms })
    }

    /// Builds a field from explicit `(subset, permutation)` pairs covering every subset once.
    pub fn from_entries(k: usize, n: usize, entries: Vec<(Subset, Permutation)>) -> Result<Self> {
        if k == 0 {
            return Err(Error::invalid("matching fields need k >= 1"));
        }
        let subsets = combinat::subsets(k, n)?;
        let mut perms: Vec<Option<Permutation>> = vec![None; subsets.len()];
        for (subset, perm) in entries {
            if subset.len() != k || subset.largest().is_some_and(|m| m > n) {
                return Err(Error::invalid(format!("{subset} is not a {k}-subset of [{n}]")));
            }
            if perm.k() != k {
                return Err(Error::invalid(format!("permutation {perm} for {subset} is not in S_{k}")));
            }
            let slot = &mut perms[subset_rank(&subset, n)];
            if slot.is_some() {
                return Err(Error::invalid(format!("subset {subset} listed twice")));
            }
            *slot = Some(perm);
        }
        let perms = perms
            .into_iter()
            .zip(&subsets)
            .map(|(p, s)| p.ok_or_else(|| Error::invalid(format!("no permutation given for {s}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(MatchingField { k, n, subsets, perms })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Domain in lexicographic order.
    pub fn subsets(&self) -> &[Subset] {
        &self.subsets
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Subset, &Permutation)> {
        self.subsets.iter().zip(&self.perms)
    }

    pub fn rank(&self, subset: &Subset) -> Result<usize> {
        if subset.len() != self.k || subset.largest().is_some_and(|m| m > self.n) {
            return Err(Error::invalid(format!("{subset} is not in the domain I_{{{},{}}}", self.k, self.n)));
        }
        Ok(subset_rank(subset, self.n))
    }

    pub fn perm(&self, subset: &Subset) -> Result<&Permutation> {
        Ok(&self.perms[self.rank(subset)?])
    }

    pub fn column(&self, subset: &Subset) -> Result<Column> {
        Column::new(subset.clone(), self.perm(subset)?.clone())
    }

    pub(crate) fn column_at(&self, rank: usize) -> Column {
        Column::new(self.subsets[rank].clone(), self.perms[rank].clone()).expect("consistent field")
    }

    /// The Λ-tableau of a monomial given by its factors.
    pub fn tableau(&self, factors: &[Subset]) -> Result<Tableau> {
        let columns = factors.iter().map(|s| self.column(s)).collect::<Result<Vec<_>>>()?;
        Tableau::new(self.k, columns)
    }
}

/// The `k×1` tableau of `P_I`.
pub fn column_of(field: &MatchingField, subset: &Subset) -> Result<Tableau> {
    field.column(subset).map(Tableau::single)
}

/// Every subset gets the identity permutation.
pub fn diagonal_matching_field(k: usize, n: usize) -> Result<MatchingField> {
    MatchingField::from_fn(k, n, |_| Permutation::identity(k))
}

/// The `3×n` block-diagonal field: identity when the first block meeting `I`
/// contains at least two elements of `I`, the transposition `(12)` otherwise.
pub fn block_diagonal_matching_field(a: &Composition) -> Result<MatchingField> {
    block_diagonal_matching_field_k(a, 3)
}

/// As [`block_diagonal_matching_field`], rejecting `k ≠ 3`.
pub fn block_diagonal_matching_field_k(a: &Composition, k: usize) -> Result<MatchingField> {
    if k != 3 {
        return Err(Error::Unsupported(format!(
            "block diagonal matching fields are only defined for k = 3 (got k = {k})"
        )));
    }
    let n = a.n();
    MatchingField::from_fn(3, n, |subset| {
        let first_block = a.block_of(subset.elements()[0]);
        let hits = subset.elements().iter().filter(|&&x| a.block_of(x) == first_block).count();
        if hits >= 2 {
            Permutation::identity(3)
        } else {
            Permutation::transposition(3, 1, 2)
        }
    })
}

/// A field pointed on `points`: `points[s]` always sits in row `s + 1`; all
/// other elements fill the remaining rows in increasing order.
pub fn pointed_matching_field(k: usize, n: usize, points: &[usize]) -> Result<MatchingField> {
    if points.len() > k {
        return Err(Error::invalid(format!("at most {k} pointed elements allowed")));
    }
    let distinct = Subset::new(points.to_vec())?;
    if distinct.largest().is_some_and(|m| m > n) {
        return Err(Error::invalid(format!("pointed elements {points:?} exceed n = {n}")));
    }
    MatchingField::from_fn(k, n, |subset| {
        let mut rows = vec![0usize; k];
        for (s, &p) in points.iter().enumerate() {
            if subset.contains(p) {
                rows[s] = p;
            }
        }
        let rest: Vec<usize> = subset.elements().iter().copied().filter(|x| !rows.contains(x)).collect();
        for (slot, x) in rows.iter_mut().filter(|r| **r == 0).zip(rest) {
            *slot = x;
        }
        Column::from_rows(rows).unwrap().perm().clone()
    })
}

/// Fixed row of each pointed element, keyed by element.
pub type RowMap = BTreeMap<usize, usize>;

/// Returns the row of each element of `s` when every Λ-column containing it
/// places it in the same row, or a witness pair of columns otherwise.
pub fn pointed_rows(field: &MatchingField, s: &Subset) -> Result<RowMap> {
    let mut seen: BTreeMap<usize, (usize, &Subset)> = BTreeMap::new();
    for rank in 0..field.subsets.len() {
        let subset = &field.subsets[rank];
        if !s.elements().iter().any(|&x| subset.contains(x)) {
            continue;
        }
        let column = field.column_at(rank);
        for &x in s.elements() {
            let Some(row) = column.row_of(x) else { continue };
            match seen.get(&x) {
                None => {
                    seen.insert(x, (row, subset));
                }
                Some(&(first_row, first)) if first_row != row => {
                    return Err(Error::NotPointed {
                        element: x,
                        first: first.clone(),
                        first_row,
                        second: subset.clone(),
                        second_row: row,
                    });
                }
                Some(_) => {}
            }
        }
    }
    Ok(seen.into_iter().map(|(x, (row, _))| (x, row)).collect())
}

/// `Some(row map)` iff `field` is pointed on `s`.
pub fn is_pointed_on(field: &MatchingField, s: &Subset) -> Option<RowMap> {
    pointed_rows(field, s).ok()
}

/// Restriction of `field` to subsets `S ⊂ I ⊂ T`, with the rows of `S`
/// deleted and `T ∖ S` relabeled to `[|T ∖ S|]`, both order-preservingly.
pub fn submatching_field(field: &MatchingField, s: &Subset, t: &Subset) -> Result<MatchingField> {
    if !s.is_subset_of(t) {
        return Err(Error::invalid(format!("{s} is not contained in {t}")));
    }
    if t.largest().is_some_and(|m| m > field.n) {
        return Err(Error::invalid(format!("{t} is not a subset of [{}]", field.n)));
    }
    if s.len() >= field.k {
        return Err(Error::invalid(format!("|S| = {} leaves no rows of the {}-row field", s.len(), field.k)));
    }
    let rest = t.difference(s);
    let k2 = field.k - s.len();
    if rest.len() < k2 {
        return Err(Error::invalid(format!("|T∖S| = {} is smaller than k - |S| = {k2}", rest.len())));
    }
    let row_map = pointed_rows(field, s)?;
    let deleted: Vec<usize> = row_map.values().copied().collect();
    // old row (1-based) -> new row, for surviving rows
    let renumber: Vec<Option<usize>> = {
        let mut next = 0;
        (1..=field.k)
            .map(|r| {
                if deleted.contains(&r) {
                    None
                } else {
                    next += 1;
                    Some(next)
                }
            })
            .collect()
    };
    let relabel = |x: usize| rest.position(x).unwrap() + 1;
    let unlabel = |x: usize| rest.elements()[x - 1];

    MatchingField::from_fn(k2, rest.len(), |small| {
        let big = s.union(&Subset::from_sorted(small.elements().iter().map(|&x| unlabel(x)).collect()));
        let column = field.column(&big).expect("subset in domain");
        let mut rows = vec![0; k2];
        for (old_row, &x) in column.rows().iter().enumerate() {
            if let Some(new_row) = renumber[old_row] {
                rows[new_row - 1] = relabel(x);
            }
        }
        Column::from_rows(rows).expect("distinct entries").perm().clone()
    })
}

/// A pair `(π_rows, π_cols) ∈ S_k × S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Isomorphism {
    pub rows: Permutation,
    pub cols: Permutation,
}

impl MatchingField {
    /// Relabels entries by `cols` and moves row `r` to row `rows(r)` in every column.
    pub fn act(&self, rows: &Permutation, cols: &Permutation) -> Result<MatchingField> {
        if rows.k() != self.k || cols.k() != self.n {
            return Err(Error::invalid("group element does not match the field's shape"));
        }
        let entries = self
            .iter()
            .map(|(subset, perm)| {
                let (image, new_perm) = act_on_entry(subset, perm, rows, cols);
                (image, new_perm)
            })
            .collect();
        MatchingField::from_entries(self.k, self.n, entries)
    }
}

fn act_on_entry(subset: &Subset, perm: &Permutation, rows: &Permutation, cols: &Permutation) -> (Subset, Permutation) {
    let k = subset.len();
    let mut placed: Vec<(usize, usize)> =
        subset.elements().iter().enumerate().map(|(s, &x)| (cols.apply(x), rows.apply(perm.apply(s + 1)))).collect();
    placed.sort_unstable();
    let image = Subset::from_sorted(placed.iter().map(|p| p.0).collect());
    let new_perm = Permutation::new(placed.iter().map(|p| p.1).collect()).expect("bijection");
    debug_assert_eq!(new_perm.k(), k);
    (image, new_perm)
}

/// Exhaustive search over `S_k × S_n` for an element carrying `a` to `b`.
pub fn is_isomorphic(a: &MatchingField, b: &MatchingField) -> Option<Isomorphism> {
    if a.k != b.k || a.n != b.n {
        return None;
    }
    let row_perms = Permutation::all(a.k);
    let col_perms = Permutation::all(a.n);
    for cols in &col_perms {
        for rows in &row_perms {
            let carries = a.iter().all(|(subset, perm)| {
                let (image, new_perm) = act_on_entry(subset, perm, rows, cols);
                b.perms[subset_rank(&image, b.n)] == new_perm
            });
            if carries {
                return Some(Isomorphism { rows: rows.clone(), cols: cols.clone() });
            }
        }
    }
    None
}

#[derive(Serialize, Deserialize)]
struct FieldJson {
    k: usize,
    n: usize,
    entries: Vec<EntryJson>,
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    subset: Subset,
    perm: Permutation,
}

impl Serialize for MatchingField {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        FieldJson {
            k: self.k,
            n: self.n,
            entries: self.iter().map(|(s, p)| EntryJson { subset: s.clone(), perm: p.clone() }).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MatchingField {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = FieldJson::deserialize(deserializer)?;
        let entries = raw.entries.into_iter().map(|e| (e.subset, e.perm)).collect();
        MatchingField::from_entries(raw.k, raw.n, entries).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> Subset {
        Subset::new(v.to_vec()).unwrap()
    }

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn diagonal_columns_increase() {
        let diag = diagonal_matching_field(3, 6).unwrap();
        assert!(diag.perm(&s(&[2, 4, 6])).unwrap().is_identity());
        assert_eq!(column_of(&diag, &s(&[1, 3, 5])).unwrap().columns()[0].rows(), &[1, 3, 5]);
        assert!(diagonal_matching_field(2, 4).unwrap().perms().iter().all(Permutation::is_identity));
    }

    #[test]
    fn pointed_field_columns() {
        let f = pointed_matching_field(3, 5, &[1, 2, 3]).unwrap();
        let expected = [
            ([1, 2, 3], [1, 2, 3]),
            ([1, 2, 4], [1, 2, 4]),
            ([1, 2, 5], [1, 2, 5]),
            ([1, 3, 4], [1, 4, 3]),
            ([1, 3, 5], [1, 5, 3]),
            ([2, 3, 4], [4, 2, 3]),
            ([2, 3, 5], [5, 2, 3]),
            ([2, 4, 5], [4, 2, 5]),
        ];
        for (subset, rows) in expected {
            assert_eq!(f.column(&s(&subset)).unwrap().rows(), &rows);
        }
        let map = is_pointed_on(&f, &s(&[1, 2, 3])).unwrap();
        assert_eq!(map, RowMap::from([(1, 1), (2, 2), (3, 3)]));
    }

    #[test]
    fn block_diagonal_rules() {
        let f = block_diagonal_matching_field(&comp(&[3, 3])).unwrap();
        assert_eq!(f.perm(&s(&[1, 4, 5])).unwrap(), &Permutation::transposition(3, 1, 2));
        assert_eq!(f.column(&s(&[1, 4, 5])).unwrap().rows(), &[4, 1, 5]);
        assert!(f.perm(&s(&[1, 2, 4])).unwrap().is_identity());

        let f = block_diagonal_matching_field(&comp(&[1, 5])).unwrap();
        for (subset, perm) in f.iter() {
            assert_eq!(perm.is_identity(), !subset.contains(1));
        }
        assert_eq!(is_pointed_on(&f, &s(&[1])).unwrap(), RowMap::from([(1, 2)]));

        for n in 3..=8 {
            assert_eq!(block_diagonal_matching_field(&comp(&[n])).unwrap(), diagonal_matching_field(3, n).unwrap());
        }
        assert!(matches!(block_diagonal_matching_field_k(&comp(&[2, 4]), 4), Err(Error::Unsupported(_))));
    }

    #[test]
    fn diagonal_not_pointed_on_three() {
        let diag = diagonal_matching_field(3, 6).unwrap();
        match pointed_rows(&diag, &s(&[3])) {
            Err(Error::NotPointed { element: 3, first_row, second_row, .. }) => assert_ne!(first_row, second_row),
            other => panic!("unexpected {other:?}"),
        }
        assert!(is_pointed_on(&diag, &Subset::empty()).is_some());
    }

    #[test]
    fn submatching_restrictions() {
        let diag6 = diagonal_matching_field(3, 6).unwrap();
        assert_eq!(submatching_field(&diag6, &Subset::empty(), &Subset::full(6)).unwrap(), diag6);

        let diag7 = diagonal_matching_field(3, 7).unwrap();
        let sub = submatching_field(&diag7, &Subset::empty(), &s(&[1, 2, 4, 5, 6, 7])).unwrap();
        assert_eq!(sub, diag6);

        let pointed = pointed_matching_field(3, 5, &[1, 2, 3]).unwrap();
        let sub = submatching_field(&pointed, &s(&[2]), &Subset::full(5)).unwrap();
        assert_eq!((sub.k(), sub.n()), (2, 4));
        // {2,4,5} -> column (4,2,5); drop row 2 -> (4,5) -> relabeled {1,3,4,5}: (3,4)
        assert!(sub.perm(&s(&[3, 4])).unwrap().is_identity());
        // {1,2,3} -> (1,2,3) -> (1,3) -> relabeled (1,2)
        assert!(sub.perm(&s(&[1, 2])).unwrap().is_identity());
        // {2,3,4} -> (4,2,3) -> (4,3) -> relabeled (3,2): transposed
        assert_eq!(sub.perm(&s(&[2, 3])).unwrap(), &Permutation::transposition(2, 1, 2));

        assert!(matches!(
            submatching_field(&diag6, &s(&[3]), &Subset::full(6)),
            Err(Error::NotPointed { element: 3, .. })
        ));
    }

    #[test]
    fn isomorphisms() {
        let diag = diagonal_matching_field(3, 6).unwrap();
        let b51 = block_diagonal_matching_field(&comp(&[5, 1])).unwrap();
        assert!(is_isomorphic(&diag, &b51).is_some());
        let b33 = block_diagonal_matching_field(&comp(&[3, 3])).unwrap();
        assert!(is_isomorphic(&diag, &b33).is_none());
        let w = is_isomorphic(&diag, &diag).unwrap();
        assert!(w.rows.is_identity() && w.cols.is_identity());

        // BΛ_{1,5} is a relabeling of a pointed field
        let b15 = block_diagonal_matching_field(&comp(&[1, 5])).unwrap();
        let w = is_isomorphic(&b15, &pointed_matching_field(3, 6, &[1, 2]).unwrap());
        assert!(w.is_some());
    }

    #[test]
    fn action_is_found_back() {
        let b24 = block_diagonal_matching_field(&comp(&[2, 4])).unwrap();
        let rows = Permutation::new(vec![2, 3, 1]).unwrap();
        let cols = Permutation::new(vec![6, 1, 5, 2, 4, 3]).unwrap();
        let moved = b24.act(&rows, &cols).unwrap();
        let w = is_isomorphic(&b24, &moved).unwrap();
        assert_eq!(b24.act(&w.rows, &w.cols).unwrap(), moved);
        assert!(is_isomorphic(&moved, &b24).is_some());
    }

    #[test]
    fn json_round_trip_and_validation() {
        let f = block_diagonal_matching_field(&comp(&[2, 4])).unwrap();
        let text = serde_json::to_string(&f).unwrap();
        assert!(text.starts_with(r#"{"k":3,"n":6,"entries":[{"subset":[1,2,3],"perm":[1,2,3]}"#));
        let back: MatchingField = serde_json::from_str(&text).unwrap();
        assert_eq!(back, f);

        let missing = r#"{"k":2,"n":3,"entries":[{"subset":[1,2],"perm":[1,2]},{"subset":[1,3],"perm":[2,1]}]}"#;
        assert!(serde_json::from_str::<MatchingField>(missing).is_err());
        let dup = r#"{"k":1,"n":1,"entries":[{"subset":[1],"perm":[1]},{"subset":[1],"perm":[1]}]}"#;
        assert!(serde_json::from_str::<MatchingField>(dup).is_err());
    }
}

//! Named fields and weight matrices used throughout the tests and the CLI.

use crate::combinat::{Permutation, Subset};
use crate::error::Result;
use crate::field::MatchingField;
use crate::weights::{induced_matching_field, WeightMatrix};

/// `[[0,0,0],[4,2,8],[2,3,4]]`: a unique initial term for `P_123`.
pub fn generic_3x3_weights() -> WeightMatrix {
    WeightMatrix::from_integers(&[vec![0, 0, 0], vec![4, 2, 8], vec![2, 3, 4]]).expect("valid shape")
}

/// `[[0,0,0],[6,4,2],[4,6,2]]`: two terms of `P_123` tie.
pub fn tied_3x3_weights() -> WeightMatrix {
    WeightMatrix::from_integers(&[vec![0, 0, 0], vec![6, 4, 2], vec![4, 6, 2]]).expect("valid shape")
}

/// A staircase matrix inducing the diagonal `3 × 6` field.
pub fn staircase_weights() -> WeightMatrix {
    WeightMatrix::from_integers(&[vec![0; 6], vec![6, 5, 4, 3, 2, 1], vec![11, 9, 7, 5, 3, 1]]).expect("valid shape")
}

pub fn hexagonal_weights() -> WeightMatrix {
    WeightMatrix::from_integers(&[vec![0; 6], vec![6, 1, 5, 9, 2, 7], vec![5, 8, 2, 7, 3, 1]]).expect("valid shape")
}

/// The coherent `3 × 6` field whose degree-2 multilinear piece has 4 classes.
pub fn hexagonal_field() -> MatchingField {
    induced_matching_field(&hexagonal_weights()).expect("generic weights")
}

/// The `2 × 6` field applying `(12)` exactly on `{1,4}, {2,3}, {3,6}, {4,5}`.
/// It is incoherent and its ideal needs a cubic generator.
pub fn transposed_2x6_field() -> MatchingField {
    let swapped = [[1, 4], [2, 3], [3, 6], [4, 5]].map(|s| Subset::new(s.to_vec()).expect("valid subset"));
    MatchingField::from_fn(2, 6, |s| {
        if swapped.contains(s) {
            Permutation::transposition(2, 1, 2)
        } else {
            Permutation::identity(2)
        }
    })
    .expect("valid field")
}

/// Weights for a `4 × 7` field pointed on `{7}` in row 4 whose submatching
/// field on `S = {7}`, `T = [7]` is the hexagonal field. Rows 1 to 3 repeat the
/// hexagonal weights scaled by 10; row 4 is expensive except in column 7, and
/// its offsets `1..6` are too small to reorder the scaled weights.
pub fn hexagonal_extension_weights() -> WeightMatrix {
    let hex = hexagonal_weights();
    let mut rows: Vec<Vec<i64>> = (1..=3)
        .map(|r| (1..=6).map(|j| 10 * i64::try_from(hex.get(r, j).to_integer()).expect("small")).chain([0]).collect())
        .collect();
    rows.push(vec![1001, 1002, 1003, 1004, 1005, 1006, -1000]);
    WeightMatrix::from_integers(&rows).expect("valid shape")
}

pub fn hexagonal_extension_field() -> Result<MatchingField> {
    induced_matching_field(&hexagonal_extension_weights())
}

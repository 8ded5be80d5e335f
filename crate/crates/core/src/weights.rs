//! Weight matrices, lowest-weight initial terms of Plücker forms and the
//! matching fields they induce.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinat::{Composition, Permutation, Subset};
use crate::error::{Error, Result};
use crate::field::MatchingField;

/// A `k × n` matrix of exact rationals. Row `i`, column `j` weighs `x_{ij}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightMatrix {
    k: usize,
    n: usize,
    entries: Vec<Vec<BigRational>>,
}

impl WeightMatrix {
    pub fn new(entries: Vec<Vec<BigRational>>) -> Result<Self> {
        let k = entries.len();
        if k == 0 {
            return Err(Error::invalid("weight matrix has no rows"));
        }
        let n = entries[0].len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("weight matrix rows have different lengths"));
        }
        if n < k {
            return Err(Error::invalid(format!("weight matrix is {k}x{n}; need k <= n")));
        }
        Ok(WeightMatrix { k, n, entries })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect())
    }

    pub fn zero(k: usize, n: usize) -> Result<Self> {
        Self::new(vec![vec![BigRational::zero(); n]; k])
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.entries
    }

    /// Entry in 1-based row `i` and column `j`.
    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i - 1][j - 1]
    }

    /// Subtracts the first row from every row, column by column.
    pub fn normalize(&self) -> WeightMatrix {
        let first = self.entries[0].clone();
        let entries = self.entries.iter().map(|row| row.iter().zip(&first).map(|(a, b)| a - b).collect()).collect();
        WeightMatrix { k: self.k, n: self.n, entries }
    }

    pub fn is_normalized(&self) -> bool {
        self.entries[0].iter().all(Zero::is_zero)
    }

    pub fn scale(&self, factor: &BigRational) -> WeightMatrix {
        let entries = self.entries.iter().map(|row| row.iter().map(|a| a * factor).collect()).collect();
        WeightMatrix { k: self.k, n: self.n, entries }
    }

    /// Parses `k` comma-separated lines of `n` integers or `p/q` fractions.
    pub fn from_csv(text: &str) -> Result<Self> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|line| line.split(',').map(|cell| parse_rational(cell.trim())).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }
}

/// Parses a decimal integer or a `p/q` fraction.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
        let q = BigInt::from_str(q.trim()).map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(BigRational::new(p, q))
    } else {
        BigInt::from_str(s)
            .map(BigRational::from_integer)
            .map_err(|_| Error::Parse(format!("{s:?} is neither an integer nor a fraction p/q")))
    }
}

/// Canonical text form: `"7"` or `"-3/4"`.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// The lowest-weight term of a Plücker form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InitialTerm {
    pub subset: Subset,
    pub perm: Permutation,
    pub weight: BigRational,
    pub sign: i8,
}

/// `Σ_s M[σ(s)][i_s]`.
pub fn term_weight(m: &WeightMatrix, subset: &Subset, perm: &Permutation) -> Result<BigRational> {
    if subset.len() != m.k || perm.k() != m.k || subset.largest().is_some_and(|x| x > m.n) {
        return Err(Error::invalid(format!("{subset} / {perm} do not fit a {}x{} weight matrix", m.k, m.n)));
    }
    Ok(subset.elements().iter().enumerate().map(|(s, &i)| m.get(perm.apply(s + 1), i)).sum())
}

/// The unique minimum-weight permutation for `P_I`, or [`Error::Tie`].
pub fn initial_term(m: &WeightMatrix, subset: &Subset) -> Result<InitialTerm> {
    initial_term_among(m, subset, &Permutation::all(m.k))
}

fn initial_term_among(m: &WeightMatrix, subset: &Subset, perms: &[Permutation]) -> Result<InitialTerm> {
    let mut best: Option<BigRational> = None;
    let mut argmin: Vec<&Permutation> = Vec::new();
    for perm in perms {
        let w = term_weight(m, subset, perm)?;
        match &best {
            Some(b) if w > *b => {}
            Some(b) if w == *b => argmin.push(perm),
            _ => {
                best = Some(w);
                argmin = vec![perm];
            }
        }
    }
    let weight = best.expect("S_k is non-empty");
    if argmin.len() > 1 {
        return Err(Error::Tie {
            subset: subset.clone(),
            tied: argmin.into_iter().cloned().collect(),
            weight: format_rational(&weight),
        });
    }
    let perm = argmin[0].clone();
    Ok(InitialTerm { subset: subset.clone(), sign: perm.sign(), perm, weight })
}

/// All initial terms in lexicographic subset order.
pub fn initial_terms(m: &WeightMatrix) -> Result<Vec<InitialTerm>> {
    let perms = Permutation::all(m.k);
    crate::combinat::subsets(m.k, m.n)?.iter().map(|s| initial_term_among(m, s, &perms)).collect()
}

/// The matching field whose permutation on each `I` is the argmin term.
pub fn induced_matching_field(m: &WeightMatrix) -> Result<MatchingField> {
    let terms = initial_terms(m).map_err(|e| match e {
        Error::Tie { subset, tied, .. } => Error::Incoherent { subset, tied },
        other => other,
    })?;
    MatchingField::from_entries(m.k, m.n, terms.into_iter().map(|t| (t.subset, t.perm)).collect())
}

/// The weight `w_M(P_I)` of every Plücker variable, in lexicographic order.
pub fn weight_on_pluecker(m: &WeightMatrix) -> Result<Vec<BigRational>> {
    let terms = initial_terms(m).map_err(|e| match e {
        Error::Tie { subset, tied, .. } => Error::Incoherent { subset, tied },
        other => other,
    })?;
    Ok(terms.into_iter().map(|t| t.weight).collect())
}

/// Entry `(i−1)(n−j)`; induces the diagonal field.
pub fn diagonal_weight_matrix(k: usize, n: usize) -> Result<WeightMatrix> {
    WeightMatrix::from_integers(
        &(1..=k).map(|i| (1..=n).map(|j| ((i - 1) * (n - j)) as i64).collect()).collect::<Vec<_>>(),
    )
}

/// A `3 × n` matrix inducing the block-diagonal field of `a`.
///
/// Row 2 decreases inside each block and every block sits strictly above the
/// previous ones; row 3 is `2n(n−j)`, steep enough that the largest element of
/// `I` always lands in row 3.
pub fn block_diagonal_weight_matrix(a: &Composition) -> Result<WeightMatrix> {
    let n = a.n();
    let sums = a.partial_sums();
    let mut row2 = vec![0i64; n];
    for w in sums.windows(2) {
        for j in w[0] + 1..=w[1] {
            row2[j - 1] = (w[0] + (w[1] - j)) as i64;
        }
    }
    let row3: Vec<i64> = (1..=n).map(|j| (2 * n * (n - j)) as i64).collect();
    WeightMatrix::from_integers(&[vec![0; n], row2, row3])
}

/// Apexes `(−a_{2j}, −a_{3j})` of the tropical lines of a normalized `3 × n` matrix.
pub fn line_apexes(m: &WeightMatrix) -> Result<Vec<(BigRational, BigRational)>> {
    if m.k != 3 {
        return Err(Error::Unsupported(format!("tropical lines need k = 3 (got k = {})", m.k)));
    }
    let m = m.normalize();
    Ok((1..=m.n).map(|j| (-m.get(2, j).clone(), -m.get(3, j).clone())).collect())
}

/// Smallest gap between the initial term and any other term, over all subsets.
pub(crate) fn margin(m: &WeightMatrix, field: &MatchingField) -> Result<BigRational> {
    let perms = Permutation::all(m.k);
    let mut best: Option<BigRational> = None;
    for (subset, chosen) in field.iter() {
        let w0 = term_weight(m, subset, chosen)?;
        for p in perms.iter().filter(|p| *p != chosen) {
            let gap = term_weight(m, subset, p)? - &w0;
            if best.as_ref().is_none_or(|b| gap < *b) {
                best = Some(gap);
            }
        }
    }
    Ok(best.unwrap_or_else(|| BigRational::from_integer(1.into())))
}

#[derive(Serialize)]
struct WeightJson {
    k: usize,
    n: usize,
    rows: Vec<Vec<RationalCell>>,
}

/// Accepted input: `{"k", "n", "rows"}` with optional shape, or bare rows.
#[derive(Deserialize)]
#[serde(untagged)]
enum WeightInput {
    Object { k: Option<usize>, n: Option<usize>, rows: Vec<Vec<RationalCell>> },
    Rows(Vec<Vec<RationalCell>>),
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RationalCell {
    Text(String),
    Int(i64),
}

impl Serialize for WeightMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        WeightJson {
            k: self.k,
            n: self.n,
            rows: self
                .entries
                .iter()
                .map(|r| r.iter().map(|q| RationalCell::Text(format_rational(q))).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WeightMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let (k, n, rows) = match WeightInput::deserialize(deserializer)? {
            WeightInput::Object { k, n, rows } => (k, n, rows),
            WeightInput::Rows(rows) => (None, None, rows),
        };
        let rows = rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|c| match c {
                        RationalCell::Text(s) => parse_rational(s.trim()),
                        RationalCell::Int(x) => Ok(BigRational::from_integer(x.into())),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        let m = WeightMatrix::new(rows).map_err(serde::de::Error::custom)?;
        if k.is_some_and(|k| k != m.k) || n.is_some_and(|n| n != m.n) {
            return Err(serde::de::Error::custom(format!(
                "declared shape {}x{} but rows are {}x{}",
                k.unwrap_or(m.k),
                n.unwrap_or(m.n),
                m.k,
                m.n
            )));
        }
        Ok(m)
    }
}

impl WeightMatrix {
    /// Whether every entry is non-negative.
    pub fn is_non_negative(&self) -> bool {
        self.entries.iter().flatten().all(|q| !q.is_negative())
    }
}

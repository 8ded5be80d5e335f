//! Subsets of `[n]`, permutations in one-line notation and small counting helpers.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A subset of `[n]` stored as its strictly increasing element sequence (1-based).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Subset(Vec<usize>);

impl Subset {
    /// Builds a subset from any ordering of distinct positive elements.
    pub fn new(mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        if elements.first() == Some(&0) {
            return Err(Error::invalid("subset elements are 1-based"));
        }
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("repeated element in subset {elements:?}")));
        }
        Ok(Subset(elements))
    }

    pub fn empty() -> Self {
        Subset(Vec::new())
    }

    pub(crate) fn from_sorted(elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Subset(elements)
    }

    /// The interval `{1, …, n}`.
    pub fn full(n: usize) -> Self {
        Subset((1..=n).collect())
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.0.iter().all(|&x| other.contains(x))
    }

    pub fn largest(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// Elements of `self` not in `other`.
    pub fn difference(&self, other: &Subset) -> Subset {
        Subset(self.0.iter().copied().filter(|&x| !other.contains(x)).collect())
    }

    pub fn union(&self, other: &Subset) -> Subset {
        let mut v: Vec<usize> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort_unstable();
        v.dedup();
        Subset(v)
    }

    /// Position (0-based) of `x` in the increasing order, if present.
    pub fn position(&self, x: usize) -> Option<usize> {
        self.0.binary_search(&x).ok()
    }
}

impl TryFrom<Vec<usize>> for Subset {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Subset::new(v)
    }
}

impl From<Subset> for Vec<usize> {
    fn from(s: Subset) -> Self {
        s.0
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// A permutation of `[k]` in one-line notation `(σ(1), …, σ(k))`, 1-based.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &x in &images {
            if x == 0 || x > k || seen[x - 1] {
                return Err(Error::invalid(format!("{images:?} is not a permutation of 1..={k}")));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(k: usize) -> Self {
        Permutation((1..=k).collect())
    }

    /// The transposition swapping `a` and `b` (1-based) in `S_k`.
    pub fn transposition(k: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(k);
        p.0.swap(a - 1, b - 1);
        p
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `σ(s)` for 1-based `s`.
    pub fn apply(&self, s: usize) -> usize {
        self.0[s - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.k()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `(self ∘ other)(s) = self(other(s))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation(other.0.iter().map(|&x| self.0[x - 1]).collect())
    }

    /// +1 for even permutations, -1 for odd ones.
    pub fn sign(&self) -> i8 {
        let k = self.k();
        let mut visited = vec![false; k];
        let mut transpositions = 0;
        for start in 0..k {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                i = self.0[i] - 1;
                len += 1;
            }
            transpositions += len - 1;
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All of `S_k` in lexicographic order of the one-line notation.
    pub fn all(k: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (1..=k).collect();
        loop {
            out.push(Permutation(current.clone()));
            if !next_permutation(&mut current) {
                break;
            }
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Binomial coefficient; saturates at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// All size-`k` subsets of `[n]` in lexicographic order.
pub fn subsets(k: usize, n: usize) -> Result<Vec<Subset>> {
    if k > n {
        return Err(Error::invalid(format!("subset size {k} exceeds ground set size {n}")));
    }
    Ok(combinations(n, k).map(|c| Subset(c.into_iter().map(|x| x + 1).collect())).collect())
}

/// Size-`k` subsets of an arbitrary sorted ground set, lexicographic.
pub fn subsets_of(ground: &Subset, k: usize) -> Vec<Subset> {
    let g = ground.elements();
    combinations(g.len(), k).map(|c| Subset(c.into_iter().map(|i| g[i]).collect())).collect()
}

/// Lexicographic rank of a `k`-subset of `[n]` among all `k`-subsets.
pub fn subset_rank(subset: &Subset, n: usize) -> usize {
    let k = subset.len();
    let mut rank = 0u64;
    let mut prev = 0;
    for (i, &c) in subset.elements().iter().enumerate() {
        for j in prev + 1..c {
            rank += binomial(n - j, k - i - 1);
        }
        prev = c;
    }
    rank as usize
}

/// Iterator over 0-based `k`-combinations of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Combinations {
    Combinations { n, current: if k <= n { Some((0..k).collect()) } else { None } }
}

pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let k = cur.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] < self.n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// A composition `a_1 + … + a_r = n` into positive parts, with its consecutive blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::invalid("a composition needs at least one part"));
        }
        if parts.contains(&0) {
            return Err(Error::invalid(format!("composition {parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    /// Parses `"2,4"`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::invalid(format!("bad composition part {p:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    /// Partial sums `α_0 = 0, α_1, …, α_r`.
    pub fn partial_sums(&self) -> Vec<usize> {
        let mut out = vec![0];
        for &a in &self.0 {
            out.push(out.last().unwrap() + a);
        }
        out
    }

    /// Blocks `I_s = {α_{s-1}+1, …, α_s}`.
    pub fn blocks(&self) -> Vec<Subset> {
        self.partial_sums().windows(2).map(|w| Subset((w[0] + 1..=w[1]).collect())).collect()
    }

    /// 0-based index of the block containing `j`.
    pub fn block_of(&self, j: usize) -> usize {
        let sums = self.partial_sums();
        sums[1..].iter().position(|&s| j <= s).expect("element outside composition")
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Composition::new(v)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> Subset {
        Subset::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(subsets(2, 3).unwrap(), vec![s(&[1, 2]), s(&[1, 3]), s(&[2, 3])]);
        assert_eq!(subsets(3, 6).unwrap().len(), 20);
        assert_eq!(subsets(1, 4).unwrap(), vec![s(&[1]), s(&[2]), s(&[3]), s(&[4])]);
        assert!(matches!(subsets(4, 3), Err(Error::InvalidArguments(_))));
    }

    #[test]
    fn rank_matches_enumeration() {
        for (k, n) in [(1, 5), (2, 6), (3, 7), (4, 8), (5, 5)] {
            for (i, sub) in subsets(k, n).unwrap().iter().enumerate() {
                assert_eq!(subset_rank(sub, n), i);
            }
        }
    }

    #[test]
    fn signs() {
        assert_eq!(Permutation::identity(3).sign(), 1);
        assert_eq!(Permutation::transposition(3, 1, 2).sign(), -1);
        assert_eq!(Permutation::new(vec![3, 2, 1]).unwrap().sign(), -1);
        assert_eq!(Permutation::new(vec![2, 3, 1]).unwrap().sign(), 1);
        assert_eq!(Permutation::all(4).len(), 24);
        let even = Permutation::all(4).iter().filter(|p| p.sign() == 1).count();
        assert_eq!(even, 12);
    }

    #[test]
    fn inverse_and_compose() {
        for p in Permutation::all(4) {
            assert!(p.compose(&p.inverse()).is_identity());
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
        assert!(Subset::new(vec![0, 2]).is_err());
        assert!(Subset::new(vec![2, 2]).is_err());
        assert!(Composition::parse("2,0").is_err());
    }

    #[test]
    fn composition_blocks() {
        let a = Composition::parse("2,3,1").unwrap();
        assert_eq!(a.n(), 6);
        assert_eq!(a.blocks(), vec![s(&[1, 2]), s(&[3, 4, 5]), s(&[6])]);
        assert_eq!(a.block_of(3), 1);
        assert_eq!(a.block_of(6), 2);
    }
}

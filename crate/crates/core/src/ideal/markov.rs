//! Degree-bounded Markov bases of the toric ideal `ker φ_Λ`.
//!
//! Within a fiber of degree `d`, two monomials are joined when one is obtained
//! from the other by a move of degree `< d` applied to a common factor. The
//! number of minimal generators of degree `d` contributed by a fiber is the
//! number of its connected components minus one.

use std::collections::{BTreeMap, HashMap};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::monomial::{CellTable, PlueckerMonomial};
use crate::combinat::binomial;
use crate::error::{Error, Result};
use crate::field::MatchingField;

/// `ε_lhs · lhs − ε_rhs · rhs`, where `ε` is the sign of the Λ-tableau.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Binomial {
    pub lhs: PlueckerMonomial,
    pub rhs: PlueckerMonomial,
    pub sign_lhs: i8,
    pub sign_rhs: i8,
}

impl Binomial {
    pub fn degree(&self) -> usize {
        self.lhs.degree()
    }
}

impl std::fmt::Display for Binomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sign = |s: i8| if s < 0 { "-" } else { "" };
        let minus = if self.sign_rhs < 0 { "+" } else { "-" };
        write!(f, "{}{} {} {}", sign(self.sign_lhs), self.lhs, minus, self.rhs)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DegreeGenerators {
    pub count: usize,
    pub binomials: Vec<Binomial>,
}

/// A fiber of degree `≥ 3` that lower-degree moves fail to connect.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberCertificate {
    pub degree: usize,
    /// Common image exponent matrix, `k × n`.
    pub exponents: Vec<Vec<u32>>,
    /// Least monomial of each connected component, in increasing order.
    pub representatives: Vec<PlueckerMonomial>,
    pub fiber_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorReport {
    pub degrees: BTreeMap<usize, DegreeGenerators>,
    pub max_degree: usize,
    pub certificates: Vec<FiberCertificate>,
}

impl GeneratorReport {
    pub fn count(&self, degree: usize) -> usize {
        self.degrees.get(&degree).map_or(0, |g| g.count)
    }

    /// Whether all generators found lie in degree 2.
    pub fn is_quadratic(&self) -> bool {
        self.degrees.iter().all(|(&d, g)| d <= 2 || g.count == 0)
    }

    pub fn binomials(&self) -> impl Iterator<Item = &Binomial> {
        self.degrees.values().flat_map(|g| g.binomials.iter())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

#[derive(Clone, Debug)]
pub struct MarkovOptions {
    pub max_degree: usize,
    /// Largest fiber accepted before giving up with `LimitExceeded`.
    pub fiber_limit: usize,
    /// Largest number of degree-`d` monomials enumerated.
    pub monomial_limit: u128,
    /// Shuffles fiber and monomial processing order; the report must not change.
    pub shuffle_seed: Option<u64>,
}

impl Default for MarkovOptions {
    fn default() -> Self {
        MarkovOptions { max_degree: 4, fiber_limit: 100_000, monomial_limit: 20_000_000, shuffle_seed: None }
    }
}

impl MarkovOptions {
    pub fn up_to(max_degree: usize) -> Self {
        MarkovOptions { max_degree, ..Default::default() }
    }
}

type Mono = Vec<u32>;

/// Minimal binomial generators of `ker φ_Λ` of degree `2..=max_degree`.
pub fn markov_generators(field: &MatchingField, opts: &MarkovOptions) -> Result<GeneratorReport> {
    if opts.max_degree < 2 {
        return Err(Error::invalid("max degree must be at least 2"));
    }
    let table = CellTable::new(field);
    let mut degrees = BTreeMap::new();
    let mut certificates = Vec::new();
    // Degree-(d−1) fibers with at least two elements.
    let mut previous: HashMap<Vec<u8>, Vec<Mono>> = HashMap::new();

    for d in 2..=opts.max_degree {
        let total = multichoose(table.len(), d);
        if total > opts.monomial_limit {
            return Err(Error::LimitExceeded(format!(
                "degree {d} has {total} Plücker monomials, above the limit of {}",
                opts.monomial_limit
            )));
        }
        let mut fibers = enumerate_fibers(&table, d);
        if let Some(f) = fibers.iter().find(|f| f.len() > opts.fiber_limit) {
            return Err(Error::LimitExceeded(format!(
                "a degree-{d} fiber has {} monomials, above the limit of {}",
                f.len(),
                opts.fiber_limit
            )));
        }
        if let Some(seed) = opts.shuffle_seed {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(d as u64));
            fibers.shuffle(&mut rng);
            for f in &mut fibers {
                f.shuffle(&mut rng);
            }
        }

        let mut results: Vec<(Mono, Vec<Mono>, usize)> =
            fibers.par_iter().filter_map(|f| connect_fiber(&table, f, &previous)).collect();
        results.sort();

        let mut generators = DegreeGenerators::default();
        for (base, others, size) in &results {
            if d >= 3 {
                let mut representatives = vec![to_pluecker(field, base)];
                representatives.extend(others.iter().map(|m| to_pluecker(field, m)));
                certificates.push(FiberCertificate {
                    degree: d,
                    exponents: exponent_matrix(&table, base),
                    representatives,
                    fiber_size: *size,
                });
            }
            for other in others {
                generators.binomials.push(Binomial {
                    lhs: to_pluecker(field, base),
                    rhs: to_pluecker(field, other),
                    sign_lhs: table.sign_of(base),
                    sign_rhs: table.sign_of(other),
                });
            }
        }
        generators.count = generators.binomials.len();
        degrees.insert(d, generators);

        previous = fibers.into_iter().map(|f| (table.key_of(&f[0]), f)).collect();
    }

    Ok(GeneratorReport { degrees, max_degree: opts.max_degree, certificates })
}

/// Bounded answer to "is `ker φ_Λ` generated in degree 2?".
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum QuadraticGeneration {
    /// No minimal generators in degrees `3..=max_degree`.
    YesUpTo {
        max_degree: usize,
    },
    No {
        certificate: FiberCertificate,
    },
}

impl QuadraticGeneration {
    pub fn is_yes(&self) -> bool {
        matches!(self, QuadraticGeneration::YesUpTo { .. })
    }
}

pub fn is_quadratically_generated_up_to(field: &MatchingField, max_degree: usize) -> Result<QuadraticGeneration> {
    quadratic_generation(field, &MarkovOptions::up_to(max_degree))
}

pub fn quadratic_generation(field: &MatchingField, opts: &MarkovOptions) -> Result<QuadraticGeneration> {
    if opts.max_degree < 3 {
        return Err(Error::invalid("the degree bound must be at least 3"));
    }
    let report = markov_generators(field, opts)?;
    Ok(match report.certificates.into_iter().next() {
        Some(certificate) => QuadraticGeneration::No { certificate },
        None => QuadraticGeneration::YesUpTo { max_degree: opts.max_degree },
    })
}

fn multichoose(n: usize, d: usize) -> u128 {
    binomial(n + d - 1, d) as u128
}

/// Fibers of degree `d` with at least two elements, each listed in lex order.
fn enumerate_fibers(table: &CellTable, d: usize) -> Vec<Vec<Mono>> {
    let mut groups: HashMap<Vec<u8>, Vec<Mono>> = HashMap::new();
    let mut key = vec![0u8; table.k * table.n];
    let mut current = Vec::with_capacity(d);
    enumerate(table, 0, d, &mut key, &mut current, &mut groups);
    let mut fibers: Vec<Vec<Mono>> = groups.into_values().filter(|f| f.len() > 1).collect();
    fibers.sort();
    fibers
}

fn enumerate(
    table: &CellTable,
    start: usize,
    left: usize,
    key: &mut Vec<u8>,
    current: &mut Mono,
    groups: &mut HashMap<Vec<u8>, Vec<Mono>>,
) {
    if left == 0 {
        groups.entry(key.clone()).or_default().push(current.clone());
        return;
    }
    for rank in start..table.len() {
        for &c in &table.cells[rank] {
            key[c] += 1;
        }
        current.push(rank as u32);
        enumerate(table, rank, left - 1, key, current, groups);
        current.pop();
        for &c in &table.cells[rank] {
            key[c] -= 1;
        }
    }
}

/// Connected components of one fiber under lower-degree moves. Returns the
/// base monomial, the least monomial of every other component and the fiber
/// size, or `None` when the fiber is connected.
fn connect_fiber(
    table: &CellTable,
    fiber: &[Mono],
    previous: &HashMap<Vec<u8>, Vec<Mono>>,
) -> Option<(Mono, Vec<Mono>, usize)> {
    let index: HashMap<&[u32], usize> = fiber.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    let mut dsu = Dsu::new(fiber.len());
    let key = table.key_of(&fiber[0]);

    for (a, u) in fiber.iter().enumerate() {
        for t in 0..u.len() {
            if t > 0 && u[t] == u[t - 1] {
                continue;
            }
            let f = u[t];
            let mut sub_key = key.clone();
            for &c in &table.cells[f as usize] {
                sub_key[c] -= 1;
            }
            let Some(lower) = previous.get(&sub_key) else { continue };
            for q in lower {
                let mut v = q.clone();
                let pos = v.partition_point(|&x| x < f);
                v.insert(pos, f);
                if let Some(&b) = index.get(v.as_slice()) {
                    dsu.union(a, b);
                }
            }
        }
    }

    let mut least: BTreeMap<usize, &Mono> = BTreeMap::new();
    for (i, m) in fiber.iter().enumerate() {
        let root = dsu.find(i);
        least
            .entry(root)
            .and_modify(|cur| {
                if m < *cur {
                    *cur = m;
                }
            })
            .or_insert(m);
    }
    if least.len() == 1 {
        return None;
    }
    let mut reps: Vec<Mono> = least.into_values().cloned().collect();
    reps.sort();
    let base = reps.remove(0);
    Some((base, reps, fiber.len()))
}

fn to_pluecker(field: &MatchingField, m: &[u32]) -> PlueckerMonomial {
    PlueckerMonomial::new(m.iter().map(|&r| field.subsets()[r as usize].clone()).collect())
}

fn exponent_matrix(table: &CellTable, m: &[u32]) -> Vec<Vec<u32>> {
    table.key_of(m).chunks(table.n).map(|row| row.iter().map(|&x| x as u32).collect()).collect()
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

//! Exact rational simplex for `max c·x  s.t.  A x ≤ b, x ≥ 0` with `b ≥ 0`.
//!
//! The origin is feasible, so no phase one is needed. Pivoting follows
//! Bland's smallest-index rule, which cannot cycle on degenerate problems.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct LinearProgram {
    pub objective: Vec<BigRational>,
    pub rows: Vec<Vec<BigRational>>,
    pub bounds: Vec<BigRational>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal { value: BigRational, point: Vec<BigRational> },
    Unbounded,
}

impl LinearProgram {
    pub fn new(objective: Vec<BigRational>) -> Self {
        LinearProgram { objective, rows: Vec::new(), bounds: Vec::new() }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    /// Adds `row · x ≤ bound`; `bound` must be non-negative.
    pub fn push(&mut self, row: Vec<BigRational>, bound: BigRational) -> Result<()> {
        if row.len() != self.num_vars() {
            return Err(Error::invalid(format!(
                "constraint has {} coefficients, program has {} variables",
                row.len(),
                self.num_vars()
            )));
        }
        if bound.is_negative() {
            return Err(Error::invalid("right-hand sides must be non-negative"));
        }
        self.rows.push(row);
        self.bounds.push(bound);
        Ok(())
    }

    pub fn maximize(&self) -> LpOutcome {
        Dictionary::new(self).solve()
    }
}

/// `x_B = rhs − D · x_N`, `z = z0 + obj · x_N`.
struct Dictionary {
    basic: Vec<usize>,
    nonbasic: Vec<usize>,
    d: Vec<Vec<BigRational>>,
    rhs: Vec<BigRational>,
    obj: Vec<BigRational>,
    z0: BigRational,
    num_vars: usize,
}

impl Dictionary {
    fn new(lp: &LinearProgram) -> Self {
        let nv = lp.num_vars();
        let m = lp.rows.len();
        Dictionary {
            basic: (nv..nv + m).collect(),
            nonbasic: (0..nv).collect(),
            d: lp.rows.clone(),
            rhs: lp.bounds.clone(),
            obj: lp.objective.clone(),
            z0: BigRational::zero(),
            num_vars: nv,
        }
    }

    fn solve(mut self) -> LpOutcome {
        loop {
            let entering =
                (0..self.nonbasic.len()).filter(|&j| self.obj[j].is_positive()).min_by_key(|&j| self.nonbasic[j]);
            let Some(e) = entering else { break };

            let mut leaving: Option<(usize, BigRational)> = None;
            for i in 0..self.basic.len() {
                if !self.d[i][e].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / &self.d[i][e];
                let better = match &leaving {
                    None => true,
                    Some((r, best)) => ratio < *best || (ratio == *best && self.basic[i] < self.basic[*r]),
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
            let Some((r, _)) = leaving else {
                return LpOutcome::Unbounded;
            };
            self.pivot(r, e);
        }

        let mut point = vec![BigRational::zero(); self.num_vars];
        for (i, &var) in self.basic.iter().enumerate() {
            if var < self.num_vars {
                point[var] = self.rhs[i].clone();
            }
        }
        LpOutcome::Optimal { value: self.z0, point }
    }

    fn pivot(&mut self, r: usize, e: usize) {
        let inv = BigRational::one() / &self.d[r][e];
        let width = self.nonbasic.len();
        for j in 0..width {
            if j != e {
                self.d[r][j] = &self.d[r][j] * &inv;
            }
        }
        self.d[r][e] = inv;
        self.rhs[r] = &self.rhs[r] * &self.d[r][e];

        let pivot_row = std::mem::take(&mut self.d[r]);
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.basic.len() {
            if i == r || self.d[i][e].is_zero() {
                continue;
            }
            let factor = self.d[i][e].clone();
            for (j, p) in pivot_row.iter().enumerate() {
                if j == e || p.is_zero() {
                    continue;
                }
                self.d[i][j] -= &factor * p;
            }
            self.d[i][e] = -(&factor * &pivot_row[e]);
            self.rhs[i] -= &factor * &pivot_rhs;
        }
        if !self.obj[e].is_zero() {
            let factor = self.obj[e].clone();
            for (j, p) in pivot_row.iter().enumerate() {
                if j == e || p.is_zero() {
                    continue;
                }
                self.obj[j] -= &factor * p;
            }
            self.obj[e] = -(&factor * &pivot_row[e]);
            self.z0 += &factor * &pivot_rhs;
        }
        self.d[r] = pivot_row;
        std::mem::swap(&mut self.basic[r], &mut self.nonbasic[e]);
    }
}

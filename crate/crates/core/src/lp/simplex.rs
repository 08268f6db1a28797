//! Dense bounded-variable primal simplex.
//!
//! Solves `max c.x  s.t.  G x <= h,  0 <= x <= u` where `u` may be infinite.
//! Rows with `h_i >= 0` start with their slack basic; rows with `h_i < 0` are
//! negated and get an artificial variable, driven out in a first phase.
//! Entering and leaving choices follow Bland's smallest-index rule, so the
//! method terminates on degenerate problems and is fully deterministic.

use crate::error::{Error, Result};

const PIVOT_TOL: f64 = 1e-9;
const COST_TOL: f64 = 1e-9;
const TIE_TOL: f64 = 1e-12;

/// Problem data in inequality form with box bounds `[0, upper]` on the structurals.
#[derive(Debug, Clone)]
pub(crate) struct BoxedLp<'a> {
    pub objective: &'a [f64],
    pub rows: &'a [Vec<f64>],
    pub rhs: &'a [f64],
    pub upper: &'a [f64],
}

#[derive(Debug, Clone)]
pub(crate) struct SimplexOutcome {
    /// Structural values, clipped into their boxes.
    pub x: Vec<f64>,
    /// Multipliers of `G x <= h`, nonnegative at optimality.
    pub row_duals: Vec<f64>,
    /// `c_j - row_duals . G_j` for each structural.
    pub reduced_costs: Vec<f64>,
    pub pivots: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Basic,
    AtLower,
    AtUpper,
}

struct Tableau {
    rows: usize,
    cols: usize,
    /// Row-major `rows x cols`, holds `B^-1 [G' I A]`.
    body: Vec<f64>,
    /// The unmodified (sign-adjusted) rows, kept for the final refinement pass.
    original: Vec<f64>,
    original_rhs: Vec<f64>,
    basis: Vec<usize>,
    /// Variable that was basic in each row initially; its column is `B^-1 e_i`.
    initial_basis: Vec<usize>,
    status: Vec<Status>,
    value: Vec<f64>,
    upper: Vec<f64>,
    pivots: usize,
    max_pivots: usize,
}

impl Tableau {
    #[inline]
    fn at(&self, r: usize, c: usize) -> f64 {
        self.body[r * self.cols + c]
    }

    fn reduced_cost(&self, cost: &[f64], j: usize) -> f64 {
        let mut d = cost[j];
        for r in 0..self.rows {
            let cb = cost[self.basis[r]];
            if cb != 0.0 {
                d -= cb * self.at(r, j);
            }
        }
        d
    }

    fn choose_entering(&self, cost: &[f64]) -> Option<(usize, f64)> {
        (0..self.cols).find_map(|j| {
            let dir = match self.status[j] {
                Status::Basic => return None,
                Status::AtLower if self.upper[j] > 0.0 => 1.0,
                Status::AtLower => return None,
                Status::AtUpper => -1.0,
            };
            let d = self.reduced_cost(cost, j);
            (d * dir > COST_TOL).then_some((j, dir))
        })
    }

    /// Runs primal simplex iterations until no improving column remains.
    fn optimize(&mut self, cost: &[f64]) -> Result<()> {
        while let Some((enter, dir)) = self.choose_entering(cost) {
            if self.pivots >= self.max_pivots {
                return Err(Error::IterationLimit(self.max_pivots));
            }
            self.pivots += 1;

            // Ratio test. `None` means the entering variable hits its own opposite bound.
            let mut step = self.upper[enter];
            let mut leave: Option<(usize, Status)> = None;
            for r in 0..self.rows {
                let alpha = dir * self.at(r, enter);
                let bv = self.basis[r];
                let (limit, bound) = if alpha > PIVOT_TOL {
                    ((self.value[bv]).max(0.0) / alpha, Status::AtLower)
                } else if alpha < -PIVOT_TOL && self.upper[bv].is_finite() {
                    (((self.upper[bv] - self.value[bv]).max(0.0)) / -alpha, Status::AtUpper)
                } else {
                    continue;
                };
                let better = match leave {
                    _ if limit < step - TIE_TOL => true,
                    Some((lr, _)) if limit <= step + TIE_TOL => bv < self.basis[lr],
                    _ => false,
                };
                if better {
                    step = limit;
                    leave = Some((r, bound));
                }
            }
            if !step.is_finite() {
                return Err(Error::Unbounded);
            }

            for r in 0..self.rows {
                let a = self.at(r, enter);
                if a != 0.0 {
                    let bv = self.basis[r];
                    self.value[bv] -= dir * step * a;
                }
            }
            match leave {
                None => {
                    let (status, value) = if dir > 0.0 {
                        (Status::AtUpper, self.upper[enter])
                    } else {
                        (Status::AtLower, 0.0)
                    };
                    self.status[enter] = status;
                    self.value[enter] = value;
                }
                Some((row, bound)) => {
                    self.value[enter] += dir * step;
                    let out = self.basis[row];
                    self.status[out] = bound;
                    self.value[out] = match bound {
                        Status::AtUpper => self.upper[out],
                        _ => 0.0,
                    };
                    self.pivot(row, enter);
                }
            }
        }
        Ok(())
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let cols = self.cols;
        let p = self.at(row, col);
        let (before, rest) = self.body.split_at_mut(row * cols);
        let (prow, after) = rest.split_at_mut(cols);
        for v in prow.iter_mut() {
            *v /= p;
        }
        prow[col] = 1.0;
        for other in before.chunks_exact_mut(cols).chain(after.chunks_exact_mut(cols)) {
            let f = other[col];
            if f != 0.0 {
                for (o, &pv) in other.iter_mut().zip(prow.iter()) {
                    *o -= f * pv;
                }
                other[col] = 0.0;
            }
        }
        self.basis[row] = col;
        self.status[col] = Status::Basic;
    }

    /// One step of iterative refinement on the basic values: `x_B += B^-1 (h - A x)`.
    fn refine(&mut self) {
        let residual: Vec<f64> = (0..self.rows)
            .map(|i| {
                let row = &self.original[i * self.cols..(i + 1) * self.cols];
                let lhs: f64 = row.iter().zip(&self.value).map(|(a, v)| a * v).sum();
                self.original_rhs[i] - lhs
            })
            .collect();
        for r in 0..self.rows {
            let delta: f64 = (0..self.rows)
                .map(|i| self.at(r, self.initial_basis[i]) * residual[i])
                .sum();
            let bv = self.basis[r];
            self.value[bv] += delta;
        }
    }
}

/// Solves the boxed LP to optimality.
pub(crate) fn solve(lp: &BoxedLp<'_>) -> Result<SimplexOutcome> {
    let n = lp.objective.len();
    let m = lp.rows.len();
    let negative_rows: Vec<usize> = (0..m).filter(|&i| lp.rhs[i] < 0.0).collect();
    let k = negative_rows.len();
    let cols = n + m + k;

    let mut body = vec![0.0; m * cols];
    let mut original_rhs = vec![0.0; m];
    let mut basis = vec![0; m];
    let mut value = vec![0.0; cols];
    let mut art = n + m;
    for i in 0..m {
        let sign = if lp.rhs[i] < 0.0 { -1.0 } else { 1.0 };
        let row = &mut body[i * cols..(i + 1) * cols];
        for (dst, &g) in row[..n].iter_mut().zip(&lp.rows[i]) {
            *dst = sign * g;
        }
        row[n + i] = sign;
        original_rhs[i] = sign * lp.rhs[i];
        if sign < 0.0 {
            row[art] = 1.0;
            basis[i] = art;
            art += 1;
        } else {
            basis[i] = n + i;
        }
        value[basis[i]] = original_rhs[i];
    }

    let mut upper = Vec::with_capacity(cols);
    upper.extend_from_slice(lp.upper);
    upper.extend(std::iter::repeat_n(f64::INFINITY, m + k));

    let mut status = vec![Status::AtLower; cols];
    for &b in &basis {
        status[b] = Status::Basic;
    }

    let mut tab = Tableau {
        rows: m,
        cols,
        original: body.clone(),
        body,
        original_rhs,
        initial_basis: basis.clone(),
        basis,
        status,
        value,
        upper,
        pivots: 0,
        max_pivots: 1000 + 50 * (cols + m),
    };

    if k > 0 {
        let mut phase_one = vec![0.0; cols];
        for c in phase_one[n + m..].iter_mut() {
            *c = -1.0;
        }
        tab.optimize(&phase_one)?;
        let infeasibility: f64 = tab.value[n + m..].iter().sum();
        let scale = 1.0 + lp.rhs.iter().fold(0.0f64, |a, h| a.max(h.abs()));
        if infeasibility > 1e-9 * scale {
            return Err(Error::Infeasible);
        }
        // Fix artificials at zero for the second phase.
        for a in n + m..cols {
            tab.upper[a] = 0.0;
            if tab.status[a] != Status::Basic {
                tab.status[a] = Status::AtLower;
            }
            tab.value[a] = 0.0;
        }
    }

    let mut cost = vec![0.0; cols];
    cost[..n].copy_from_slice(lp.objective);
    tab.optimize(&cost)?;
    tab.refine();

    let row_duals: Vec<f64> = (0..m).map(|i| -tab.reduced_cost(&cost, n + i)).collect();
    let reduced_costs = (0..n)
        .map(|j| {
            lp.objective[j]
                - row_duals
                    .iter()
                    .zip(lp.rows)
                    .map(|(l, row)| l * row[j])
                    .sum::<f64>()
        })
        .collect();
    let x = (0..n)
        .map(|j| tab.value[j].clamp(0.0, lp.upper[j]))
        .collect();

    Ok(SimplexOutcome {
        x,
        row_duals,
        reduced_costs,
        pivots: tab.pivots,
    })
}

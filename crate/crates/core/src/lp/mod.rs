//! The fluid LP `phi(b, d) = max { r.y : A y <= b, 0 <= y <= d }` and probes of its optimal face.

mod simplex;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::instance::Instance;
use simplex::{BoxedLp, SimplexOutcome};

/// Residual tolerance for feasibility checks.
pub const FEASIBILITY_TOL: f64 = 1e-9;
/// Relative tolerance on objective values.
pub const OBJECTIVE_RTOL: f64 = 1e-7;

/// An optimal basic solution of the fluid LP.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LpSolution {
    pub primal: Vec<f64>,
    /// `r . primal`, summed in index order.
    pub objective: f64,
    /// Multipliers for `A y <= b` (first `m`) then for `y <= d` (last `n`).
    pub duals: Vec<f64>,
    pub pivots: usize,
}

/// Worst violations of the optimality conditions for a returned solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Certificate {
    pub primal_infeasibility: f64,
    pub dual_infeasibility: f64,
    pub complementarity: f64,
    pub duality_gap: f64,
}

impl Certificate {
    pub fn worst(&self) -> f64 {
        self.primal_infeasibility
            .max(self.dual_infeasibility)
            .max(self.complementarity)
            .max(self.duality_gap)
    }
}

impl LpSolution {
    /// Resource multipliers.
    pub fn resource_duals(&self) -> &[f64] {
        &self.duals[..self.duals.len() - self.primal.len()]
    }

    /// Demand-bound multipliers.
    pub fn demand_duals(&self) -> &[f64] {
        &self.duals[self.duals.len() - self.primal.len()..]
    }

    /// Checks primal feasibility, dual feasibility, complementary slackness and
    /// the duality gap against the LP that produced this solution.
    pub fn certificate(&self, instance: &Instance, b: &[f64], d: &[f64]) -> Certificate {
        let d: Vec<f64> = d.iter().map(|v| v.max(0.0)).collect();
        let y = &self.primal;
        let lambda = self.resource_duals();
        let mu = self.demand_duals();
        let ay = instance.apply(y);

        let mut primal = 0.0f64;
        let mut comp = 0.0f64;
        for i in 0..instance.m() {
            let slack = b[i] - ay[i];
            primal = primal.max(-slack);
            comp = comp.max((lambda[i] * slack).abs());
        }
        for j in 0..instance.n() {
            primal = primal.max(-y[j]).max(y[j] - d[j]);
            comp = comp.max((mu[j] * (d[j] - y[j])).abs());
        }

        let mut dual = lambda
            .iter()
            .chain(mu)
            .fold(0.0f64, |acc, &v| acc.max(-v));
        for j in 0..instance.n() {
            // r_j - lambda.A_j - mu_j <= 0, with equality wherever y_j > 0.
            let priced: f64 = (0..instance.m()).map(|i| lambda[i] * instance.a(i, j)).sum();
            let slack = priced + mu[j] - instance.rewards[j];
            dual = dual.max(-slack);
            comp = comp.max((y[j] * slack).abs());
        }

        let dual_value: f64 = lambda.iter().zip(b).map(|(l, v)| l * v).sum::<f64>()
            + mu.iter().zip(&d).map(|(u, v)| u * v).sum::<f64>();
        let gap = (dual_value - self.objective).abs() / (1.0 + self.objective.abs());

        Certificate {
            primal_infeasibility: primal,
            dual_infeasibility: dual,
            complementarity: comp,
            duality_gap: gap,
        }
    }
}

fn check_inputs(instance: &Instance, b: &[f64], d: &[f64]) -> Result<()> {
    if b.len() != instance.m() {
        return Err(Error::input(format!(
            "inventory has length {}, expected {}",
            b.len(),
            instance.m()
        )));
    }
    if d.len() != instance.n() {
        return Err(Error::input(format!(
            "demand has length {}, expected {}",
            d.len(),
            instance.n()
        )));
    }
    if b.iter().chain(d).any(|v| !v.is_finite()) {
        return Err(Error::input("inventory and demand must be finite"));
    }
    if b.iter().any(|&v| v < 0.0) {
        return Err(Error::input("inventory must be nonnegative"));
    }
    Ok(())
}

/// Solves `phi(b, d)`. Negative demand components are treated as zero.
pub fn solve_fluid(instance: &Instance, b: &[f64], d: &[f64]) -> Result<LpSolution> {
    check_inputs(instance, b, d)?;
    let upper: Vec<f64> = d.iter().map(|v| v.max(0.0)).collect();
    let SimplexOutcome {
        x,
        row_duals,
        reduced_costs,
        pivots,
    } = simplex::solve(&BoxedLp {
        objective: &instance.rewards,
        rows: &instance.consumption,
        rhs: b,
        upper: &upper,
    })?;

    // Demand multipliers are nonzero only for types sitting at their bound.
    let mut duals: Vec<f64> = row_duals.iter().map(|l| l.max(0.0)).collect();
    duals.extend(
        x.iter()
            .zip(&upper)
            .zip(&reduced_costs)
            .map(|((y, u), rc)| if y >= u { rc.max(0.0) } else { 0.0 }),
    );
    let objective = instance.revenue_of(&x);
    Ok(LpSolution {
        primal: x,
        objective,
        duals,
        pivots,
    })
}

/// Optimal value of `phi(b, d)`.
pub fn fluid_value(instance: &Instance, b: &[f64], d: &[f64]) -> Result<f64> {
    solve_fluid(instance, b, d).map(|s| s.objective)
}

/// The point of the optimal face of `phi(b, d)` that maximizes `y_j`, together
/// with that maximal coordinate.
///
/// Solved as a second LP: `max y_j` subject to `r.y >= phi - 1e-9 (1 + |phi|)`,
/// `A y <= b` and `0 <= y <= d`.
pub fn max_coord_point(
    instance: &Instance,
    b: &[f64],
    d: &[f64],
    j: usize,
) -> Result<(f64, Vec<f64>)> {
    if j >= instance.n() {
        return Err(Error::input(format!(
            "type index {j} out of range for n = {}",
            instance.n()
        )));
    }
    let phi = solve_fluid(instance, b, d)?.objective;
    let threshold = phi - 1e-9 * (1.0 + phi.abs());

    let mut rows = instance.consumption.clone();
    rows.push(instance.rewards.iter().map(|r| -r).collect());
    let mut rhs = b.to_vec();
    rhs.push(-threshold);
    let mut objective = vec![0.0; instance.n()];
    objective[j] = 1.0;
    let upper: Vec<f64> = d.iter().map(|v| v.max(0.0)).collect();

    let out = simplex::solve(&BoxedLp {
        objective: &objective,
        rows: &rows,
        rhs: &rhs,
        upper: &upper,
    })?;
    Ok((out.x[j], out.x))
}

/// Largest value of `y_j` over the optimal solutions of `phi(b, d)`.
pub fn max_coord_over_optima(instance: &Instance, b: &[f64], d: &[f64], j: usize) -> Result<f64> {
    max_coord_point(instance, b, d, j).map(|(v, _)| v)
}

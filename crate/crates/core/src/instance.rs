//! Problem data for an online LP with finitely many customer types.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An online LP instance: `m` resources, `n` customer types, reward `rewards[j]`
/// and resource use `consumption[i][j]` per accepted type-`j` request, a per-period
/// budget `budget_rate`, horizon `horizon` and arrival probabilities `probabilities`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub rewards: Vec<f64>,
    /// Row-major `m x n` matrix; column `j` is the resource use of type `j`.
    pub consumption: Vec<Vec<f64>>,
    pub budget_rate: Vec<f64>,
    pub horizon: usize,
    pub probabilities: Vec<f64>,
}

impl Instance {
    /// Builds and validates an instance.
    pub fn new(
        rewards: Vec<f64>,
        consumption: Vec<Vec<f64>>,
        budget_rate: Vec<f64>,
        horizon: usize,
        probabilities: Vec<f64>,
    ) -> Result<Self> {
        let inst = Instance {
            rewards,
            consumption,
            budget_rate,
            horizon,
            probabilities,
        };
        inst.validate()?;
        Ok(inst)
    }

    /// Number of resources.
    pub fn m(&self) -> usize {
        self.consumption.len()
    }

    /// Number of customer types.
    pub fn n(&self) -> usize {
        self.rewards.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        let m = self.m();
        if n == 0 || m == 0 {
            return Err(Error::input("instance needs at least one resource and one type"));
        }
        if self.horizon == 0 {
            return Err(Error::input("horizon must be positive"));
        }
        if self.budget_rate.len() != m {
            return Err(Error::input(format!(
                "budget_rate has length {}, expected {m}",
                self.budget_rate.len()
            )));
        }
        if self.probabilities.len() != n {
            return Err(Error::input(format!(
                "probabilities has length {}, expected {n}",
                self.probabilities.len()
            )));
        }
        for (i, row) in self.consumption.iter().enumerate() {
            if row.len() != n {
                return Err(Error::input(format!(
                    "consumption row {i} has length {}, expected {n}",
                    row.len()
                )));
            }
        }
        let nonneg = |v: f64| v.is_finite() && v >= 0.0;
        if !self.rewards.iter().copied().all(nonneg)
            || !self.budget_rate.iter().copied().all(nonneg)
            || !self.consumption.iter().flatten().copied().all(nonneg)
            || !self.probabilities.iter().copied().all(nonneg)
        {
            return Err(Error::input("instance data must be finite and nonnegative"));
        }
        let total: f64 = self.probabilities.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::input(format!("probabilities sum to {total}, expected 1")));
        }
        Ok(())
    }

    /// Same instance with a different horizon.
    pub fn with_horizon(&self, horizon: usize) -> Self {
        Instance {
            horizon,
            ..self.clone()
        }
    }

    /// Initial inventory `T * rho`.
    pub fn initial_inventory(&self) -> Vec<f64> {
        let t = self.horizon as f64;
        self.budget_rate.iter().map(|r| t * r).collect()
    }

    /// Consumption of type `j` on resource `i`.
    #[inline]
    pub fn a(&self, i: usize, j: usize) -> f64 {
        self.consumption[i][j]
    }

    /// True iff column `j` fits componentwise in `inventory`.
    #[inline]
    pub fn fits(&self, j: usize, inventory: &[f64]) -> bool {
        self.consumption
            .iter()
            .zip(inventory)
            .all(|(row, &b)| row[j] <= b)
    }

    /// Subtracts column `j` from `inventory`.
    #[inline]
    pub fn consume(&self, j: usize, inventory: &mut [f64]) {
        for (row, b) in self.consumption.iter().zip(inventory.iter_mut()) {
            *b -= row[j];
        }
    }

    /// Priced consumption `A_j . q`.
    #[inline]
    pub fn priced(&self, j: usize, prices: &[f64]) -> f64 {
        self.consumption
            .iter()
            .zip(prices)
            .map(|(row, q)| row[j] * q)
            .sum()
    }

    /// `A x` for a vector `x` over types.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        self.consumption
            .iter()
            .map(|row| row.iter().zip(x).map(|(a, v)| a * v).sum())
            .collect()
    }

    /// `r . x` summed in index order.
    pub fn revenue_of(&self, x: &[f64]) -> f64 {
        self.rewards.iter().zip(x).map(|(r, v)| r * v).sum()
    }
}

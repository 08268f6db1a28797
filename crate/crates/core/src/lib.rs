//! Online linear programming with sparse LP resolving.
//!
//! Requests arrive one per period, drawn i.i.d. from a finite set of types. Each
//! type has a reward and a resource consumption column; a policy must accept or
//! reject on arrival without exceeding the initial inventory `T rho`. The crate
//! provides the fluid LP solver, resolving schedules, a family of policies, and a
//! Monte-Carlo harness that measures regret against the hindsight fluid value.
//!
//! ```
//! use olp::{Instance, PolicyKind, PolicySetup, ScheduleSpec};
//!
//! let inst = Instance::new(
//!     vec![2.0, 1.0],
//!     vec![vec![1.0, 1.0]],
//!     vec![0.5],
//!     1000,
//!     vec![0.5, 0.5],
//! )
//! .unwrap();
//! let air = PolicySetup::new(
//!     PolicyKind::Air,
//!     Some(ScheduleSpec::LearningApprox { alpha: 0.7, beta: 0.7 }),
//! );
//! let est = olp::estimate_regret(&air, &inst, 20, 7).unwrap();
//! assert!(est.mean_regret.is_finite());
//! ```

pub mod bench;
pub mod error;
pub mod instance;
pub mod lp;
pub mod policy;
pub mod rng;
pub mod schedule;
pub mod sim;

pub use error::{Error, Result};
pub use instance::Instance;
pub use lp::{fluid_value, max_coord_over_optima, solve_fluid, LpSolution};
pub use policy::{AcceptRule, Decision, PolicyKind, PolicySpec, PolicyState};
pub use schedule::{Schedule, ScheduleKind, ScheduleSpec};
pub use sim::{
    compare_policies, estimate_regret, hindsight_value, run_policy, sample_path, PolicySetup,
    RegretEstimate, RunResult, SamplePath, Simulator,
};

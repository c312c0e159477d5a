//! Normalized characters S_λ(θ), the transition kernels Π_θ built from them,
//! their infinite-rank limit, and sampling of the resulting Markov chains.

mod evaluator;
mod sample;
mod specialization;
mod sweep;
mod theta;
mod transition;

pub use sample::{chain_rng, sample_trajectory, trajectory_line, uniform, Chain};
pub use specialization::{
    defect_and_bound, limit_s_a, limit_s_a_capped, principal_specialization_a, specialize_s,
    specialize_weight, theta_exponent, DefectBound, LimitValue, DEFAULT_LIMIT_TOL, LIMIT_RANK_CAP,
};
pub use sweep::{convergence_sweep, sweep_csv, SweepRow};
pub use theta::ThetaSpec;
pub use transition::{
    limit_kernel, transition_kernel, RowSum, TransitionKernel, FINITE_ROW_TOL, LIMIT_ROW_TOL,
};

//! Plane-wave expansion of the TE master equation.

mod basis;
mod operator;
mod path;
mod solve;

pub use basis::ReciprocalSet;
pub use operator::TeOperator;
pub use path::{connect, solve_path, BandStructure};
pub use solve::{
    band_order, frequencies, solve, solve_operator, BlochMode, KSolution, SolveOptions, SolverRoute, RESIDUAL_TOL,
};

//! End-to-end checks on benchmark maps and the command-line interface.

mod cli;
mod exponent;
mod ring;

pub use crate::sampling::{oracle_integral, OracleEstimate, Region};
pub use cli::{run_cli, run_cli_with, EXIT_ERROR, EXIT_FAILS, EXIT_OK, EXIT_USAGE};
pub use exponent::{empirical_holder_exponent, geometric_radii, sample_directions, ExponentFit};
pub use ring::{extremal_eta, verify_ring_inequality, RingCheck};

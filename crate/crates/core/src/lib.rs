//! Fourth-order compact finite differences and their symmetry-preserving
//! (invariantized) variants for the inviscid and viscous Burgers equations
//! and for 1D/2D advection-diffusion.
//!
//! The crate is organised bottom-up:
//!
//! - [`tridiag`]: Thomas solver for the compact stencils.
//! - [`compact`]: first and second derivative operators in 1D and axis-wise in 2D.
//! - [`analytic`]: exact solutions used for initial, boundary and reference data.
//! - [`schemes`]: FTCS, compact (COMP) and invariant (SYM) one-step schemes.
//! - [`metrics`]: error norms, single runs, refinement studies, Galilean runs.
//! - [`config`]: key=value run configuration and the command implementations
//!   behind the `invcomp` binary.
//!
//! ```
//! use invariant_compact::metrics::{run_experiment, Experiment};
//! use invariant_compact::schemes::SchemeId;
//!
//! let exp = Experiment { t_final: 0.05, ..Experiment::ibe_table(SchemeId::Sym) };
//! let report = run_experiment(&exp).unwrap();
//! assert!(report.linf < 1e-3);
//! ```

pub mod analytic;
pub mod compact;
pub mod config;
pub mod error;
pub mod grid;
pub mod metrics;
pub mod schemes;
pub mod tridiag;

pub use error::{Error, Result};
pub use grid::{Field2D, Grid1D, Grid2D};

//! Tridiagonal linear systems.
//!
//! The compact derivative stencils produce strictly diagonally dominant
//! tridiagonal matrices, so the solver is plain Thomas elimination without
//! pivoting. A pivot smaller than [`PIVOT_TOLERANCE`] aborts the solve.

use crate::error::{Error, Result};

/// Smallest admissible pivot magnitude during forward elimination.
pub const PIVOT_TOLERANCE: f64 = 1e-14;

/// A tridiagonal system `A x = rhs`.
///
/// Row `i` reads `lower[i-1] x[i-1] + diag[i] x[i] + upper[i] x[i+1] = rhs[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct TriDiagSystem {
    pub lower: Vec<f64>,
    pub diag: Vec<f64>,
    pub upper: Vec<f64>,
    pub rhs: Vec<f64>,
}

impl TriDiagSystem {
    pub fn new(lower: Vec<f64>, diag: Vec<f64>, upper: Vec<f64>, rhs: Vec<f64>) -> Result<Self> {
        let sys = Self {
            lower,
            diag,
            upper,
            rhs,
        };
        sys.validate()?;
        Ok(sys)
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    fn validate(&self) -> Result<()> {
        let n = self.diag.len();
        if n < 2 {
            return Err(Error::InvalidSystem(format!("need n >= 2, got {n}")));
        }
        if self.lower.len() != n - 1 || self.upper.len() != n - 1 || self.rhs.len() != n {
            return Err(Error::InvalidSystem(format!(
                "inconsistent lengths: lower={}, diag={}, upper={}, rhs={}",
                self.lower.len(),
                n,
                self.upper.len(),
                self.rhs.len()
            )));
        }
        Ok(())
    }

    /// `A x` for the matrix part of the system.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let mut acc = self.diag[i] * x[i];
                if i > 0 {
                    acc += self.lower[i - 1] * x[i - 1];
                }
                if i + 1 < n {
                    acc += self.upper[i] * x[i + 1];
                }
                acc
            })
            .collect()
    }

    /// Max-norm of `A x - rhs`.
    pub fn residual_max(&self, x: &[f64]) -> f64 {
        self.apply(x)
            .iter()
            .zip(&self.rhs)
            .map(|(ax, b)| (ax - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Solve a tridiagonal system by forward elimination and back substitution.
pub fn solve_tridiagonal(sys: &TriDiagSystem) -> Result<Vec<f64>> {
    sys.validate()?;
    thomas(&sys.lower, &sys.diag, &sys.upper, &sys.rhs)
}

/// Thomas algorithm on borrowed bands. Lengths must already be consistent.
pub(crate) fn thomas(lower: &[f64], diag: &[f64], upper: &[f64], rhs: &[f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    // modified super-diagonal and right-hand side
    let mut c = vec![0.0; n];
    let mut d = vec![0.0; n];

    let mut pivot = diag[0];
    if pivot.abs() < PIVOT_TOLERANCE {
        return Err(Error::ZeroPivot { index: 0 });
    }
    if n > 1 {
        c[0] = upper[0] / pivot;
    }
    d[0] = rhs[0] / pivot;
    for i in 1..n {
        pivot = diag[i] - lower[i - 1] * c[i - 1];
        if pivot.abs() < PIVOT_TOLERANCE {
            return Err(Error::ZeroPivot { index: i });
        }
        if i + 1 < n {
            c[i] = upper[i] / pivot;
        }
        d[i] = (rhs[i] - lower[i - 1] * d[i - 1]) / pivot;
    }

    for i in (0..n - 1).rev() {
        d[i] -= c[i] * d[i + 1];
    }
    Ok(d)
}

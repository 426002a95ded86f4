//! Fourth-order compact (Padé) derivative operators on uniform grids.
//!
//! Interior rows:
//!
//! ```text
//! (1/6)  U'_{i-1} + (2/3) U'_i + (1/6)  U'_{i+1} = (U_{i+1} - U_{i-1}) / (2h)
//! (1/12) U"_{i-1} + (5/6) U"_i + (1/12) U"_{i+1} = (U_{i+1} - 2U_i + U_{i-1}) / h^2
//! ```
//!
//! End rows are chosen by [`BoundaryPolicy`]. The one-sided closures are third
//! order and keep the system tridiagonal:
//!
//! ```text
//! U'_0 + 2 U'_1  = (-5U_0 + 4U_1 + U_2) / (2h)
//! U"_0 + 11 U"_1 = (13U_0 - 27U_1 + 15U_2 - U_3) / h^2
//! ```
//!
//! and their mirror images at the right end.

use crate::error::Result;
use crate::grid::{Field2D, Grid1D, Grid2D};
use crate::tridiag::thomas;

/// How the first and last rows of a compact system are closed.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum BoundaryPolicy {
    /// Third-order one-sided compact closures.
    #[default]
    OneSidedThirdOrder,
    /// Prescribe the derivative at the two end nodes.
    ExactDerivative { left: f64, right: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Derivative {
    First,
    Second,
}

/// Compact approximation of `du/dx` at every node.
pub fn compact_dx(u: &[f64], grid: &Grid1D, bp: BoundaryPolicy) -> Result<Vec<f64>> {
    compact_derivative(u, grid, Derivative::First, bp)
}

/// Compact approximation of `d2u/dx2` at every node.
pub fn compact_dxx(u: &[f64], grid: &Grid1D, bp: BoundaryPolicy) -> Result<Vec<f64>> {
    compact_derivative(u, grid, Derivative::Second, bp)
}

pub fn compact_derivative(
    u: &[f64],
    grid: &Grid1D,
    which: Derivative,
    bp: BoundaryPolicy,
) -> Result<Vec<f64>> {
    grid.check_field(u)?;
    let n = grid.n;
    let h = grid.h;
    let mut lower = vec![0.0; n - 1];
    let mut diag = vec![0.0; n];
    let mut upper = vec![0.0; n - 1];
    let mut rhs = vec![0.0; n];

    let (off, mid) = match which {
        Derivative::First => (1.0 / 6.0, 2.0 / 3.0),
        Derivative::Second => (1.0 / 12.0, 5.0 / 6.0),
    };
    for i in 1..n - 1 {
        lower[i - 1] = off;
        diag[i] = mid;
        upper[i] = off;
        rhs[i] = match which {
            Derivative::First => (u[i + 1] - u[i - 1]) / (2.0 * h),
            Derivative::Second => (u[i + 1] - 2.0 * u[i] + u[i - 1]) / (h * h),
        };
    }

    diag[0] = 1.0;
    diag[n - 1] = 1.0;
    match bp {
        BoundaryPolicy::ExactDerivative { left, right } => {
            rhs[0] = left;
            rhs[n - 1] = right;
        }
        BoundaryPolicy::OneSidedThirdOrder => match which {
            Derivative::First => {
                upper[0] = 2.0;
                lower[n - 2] = 2.0;
                rhs[0] = (-5.0 * u[0] + 4.0 * u[1] + u[2]) / (2.0 * h);
                rhs[n - 1] = (5.0 * u[n - 1] - 4.0 * u[n - 2] - u[n - 3]) / (2.0 * h);
            }
            Derivative::Second => {
                upper[0] = 11.0;
                lower[n - 2] = 11.0;
                rhs[0] = (13.0 * u[0] - 27.0 * u[1] + 15.0 * u[2] - u[3]) / (h * h);
                rhs[n - 1] =
                    (13.0 * u[n - 1] - 27.0 * u[n - 2] + 15.0 * u[n - 3] - u[n - 4]) / (h * h);
            }
        },
    }

    thomas(&lower, &diag, &upper, &rhs)
}

fn along_x(u: &Field2D, grid: &Grid2D, which: Derivative, bp: BoundaryPolicy) -> Result<Field2D> {
    grid.check_field(u)?;
    let axis = grid.x_axis();
    let mut out = Field2D::zeros(grid.nx, grid.ny);
    for j in 0..grid.ny {
        let d = compact_derivative(&u.x_line(j), &axis, which, bp)?;
        out.set_x_line(j, &d);
    }
    Ok(out)
}

fn along_y(u: &Field2D, grid: &Grid2D, which: Derivative, bp: BoundaryPolicy) -> Result<Field2D> {
    grid.check_field(u)?;
    let axis = grid.y_axis();
    let mut out = Field2D::zeros(grid.nx, grid.ny);
    for i in 0..grid.nx {
        let d = compact_derivative(u.y_line(i), &axis, which, bp)?;
        out.set_y_line(i, &d);
    }
    Ok(out)
}

/// `du/dx` on every x-line. `bp` applies to each line.
pub fn compact_dx_along_x(u: &Field2D, grid: &Grid2D, bp: BoundaryPolicy) -> Result<Field2D> {
    along_x(u, grid, Derivative::First, bp)
}

pub fn compact_dx_along_y(u: &Field2D, grid: &Grid2D, bp: BoundaryPolicy) -> Result<Field2D> {
    along_y(u, grid, Derivative::First, bp)
}

pub fn compact_dxx_along_x(u: &Field2D, grid: &Grid2D, bp: BoundaryPolicy) -> Result<Field2D> {
    along_x(u, grid, Derivative::Second, bp)
}

pub fn compact_dxx_along_y(u: &Field2D, grid: &Grid2D, bp: BoundaryPolicy) -> Result<Field2D> {
    along_y(u, grid, Derivative::Second, bp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::fit_slope;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn max_interior_error(approx: &[f64], exact: &[f64]) -> f64 {
        let n = approx.len();
        (1..n - 1)
            .map(|i| (approx[i] - exact[i]).abs())
            .fold(0.0, f64::max)
    }

    #[test]
    fn constant_has_zero_derivatives() {
        let g = Grid1D::new(-1.3, 0.07, 23).unwrap();
        let u = vec![3.7; 23];
        for v in compact_dx(&u, &g, BoundaryPolicy::default()).unwrap() {
            assert!(v.abs() < 1e-12);
        }
        for v in compact_dxx(&u, &g, BoundaryPolicy::default()).unwrap() {
            assert!(v.abs() < 1e-10);
        }
    }

    #[test]
    fn linear_function_has_unit_slope() {
        let g = Grid1D::from_domain(0.0, 1.0, 11).unwrap();
        let u = g.nodes();
        for v in compact_dx(&u, &g, BoundaryPolicy::OneSidedThirdOrder).unwrap() {
            assert!((v - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn quadratic_second_derivative_is_exact() {
        let g = Grid1D::new(-0.4, 0.13, 17).unwrap();
        let u = g.sample(|x| x * x);
        let bp = BoundaryPolicy::ExactDerivative {
            left: 2.0,
            right: 2.0,
        };
        for v in compact_dxx(&u, &g, bp).unwrap() {
            assert!((v - 2.0).abs() < 1e-10);
        }
    }

    #[test]
    fn cubic_exactness_with_one_sided_closures() {
        let g = Grid1D::new(0.3, 0.1, 12).unwrap();
        let u = g.sample(|x| 2.0 * x * x * x - x * x + 0.5 * x - 1.0);
        let du = compact_dx(&u, &g, BoundaryPolicy::OneSidedThirdOrder).unwrap();
        let d2u = compact_dxx(&u, &g, BoundaryPolicy::OneSidedThirdOrder).unwrap();
        for i in 0..g.n {
            let x = g.x(i);
            assert!((du[i] - (6.0 * x * x - 2.0 * x + 0.5)).abs() < 1e-10);
            assert!((d2u[i] - (12.0 * x - 2.0)).abs() < 1e-9);
        }
    }

    fn sine_errors(which: Derivative) -> Vec<(f64, f64)> {
        [41usize, 81, 161]
            .iter()
            .map(|&n| {
                let g = Grid1D::from_domain(0.0, 2.0 * PI, n).unwrap();
                let u = g.sample(f64::sin);
                let (approx, exact) = match which {
                    Derivative::First => (
                        compact_dx(&u, &g, BoundaryPolicy::ExactDerivative { left: 1.0, right: 1.0 })
                            .unwrap(),
                        g.sample(f64::cos),
                    ),
                    Derivative::Second => (
                        compact_dxx(&u, &g, BoundaryPolicy::ExactDerivative { left: 0.0, right: 0.0 })
                            .unwrap(),
                        g.sample(|x| -x.sin()),
                    ),
                };
                (g.h, max_interior_error(&approx, &exact))
            })
            .collect()
    }

    #[test]
    fn first_derivative_is_fourth_order() {
        let rows = sine_errors(Derivative::First);
        let slope = fit_slope(&rows);
        assert!((3.8..=4.5).contains(&slope), "slope {slope}");
    }

    #[test]
    fn second_derivative_is_fourth_order() {
        let rows = sine_errors(Derivative::Second);
        let slope = fit_slope(&rows);
        assert!((3.8..=4.5).contains(&slope), "slope {slope}");
    }

    #[test]
    fn axis_wise_operators_on_plane() {
        let g = Grid2D::new(-1.0, 0.5, 0.1, 0.2, 9, 7).unwrap();
        let u = g.sample(|x, y| x + 2.0 * y);
        let bp = BoundaryPolicy::OneSidedThirdOrder;
        let dx = compact_dx_along_x(&u, &g, bp).unwrap();
        let dy = compact_dx_along_y(&u, &g, bp).unwrap();
        assert!(dx.values.iter().all(|v| (v - 1.0).abs() < 1e-12));
        assert!(dy.values.iter().all(|v| (v - 2.0).abs() < 1e-12));
    }

    #[test]
    fn axis_wise_second_derivative() {
        let g = Grid2D::new(-1.0, 0.5, 0.1, 0.2, 9, 7).unwrap();
        let u = g.sample(|x, y| x * x * y);
        let bp = BoundaryPolicy::OneSidedThirdOrder;
        let dxx = compact_dxx_along_x(&u, &g, bp).unwrap();
        let dyy = compact_dxx_along_y(&u, &g, bp).unwrap();
        for i in 0..g.nx {
            for j in 0..g.ny {
                assert!((dxx[(i, j)] - 2.0 * g.y(j)).abs() < 1e-10);
                assert!(dyy[(i, j)].abs() < 1e-10);
            }
        }
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let g = Grid1D::new(0.0, 0.1, 10).unwrap();
        assert!(compact_dx(&[1.0; 9], &g, BoundaryPolicy::default()).is_err());
        let g2 = Grid2D::new(0.0, 0.0, 0.1, 0.1, 6, 6).unwrap();
        assert!(compact_dx_along_y(&Field2D::zeros(6, 7), &g2, BoundaryPolicy::default()).is_err());
    }

    proptest! {
        #[test]
        fn polynomial_exactness(c in prop::array::uniform4(-3.0..3.0f64), x0 in -1.0..1.0f64, h in 0.05..0.2f64, n in 5usize..20) {
            let g = Grid1D::new(x0, h, n).unwrap();
            let p = |x: f64| c[0] + c[1] * x + c[2] * x * x + c[3] * x * x * x;
            let dp = |x: f64| c[1] + 2.0 * c[2] * x + 3.0 * c[3] * x * x;
            let d2p = |x: f64| 2.0 * c[2] + 6.0 * c[3] * x;
            let u = g.sample(p);
            let xe = g.x(n - 1);
            let du = compact_dx(&u, &g, BoundaryPolicy::ExactDerivative { left: dp(x0), right: dp(xe) }).unwrap();
            let d2u = compact_dxx(&u, &g, BoundaryPolicy::ExactDerivative { left: d2p(x0), right: d2p(xe) }).unwrap();
            for i in 0..n {
                let x = g.x(i);
                prop_assert!((du[i] - dp(x)).abs() <= 1e-10, "dx at {}: {} vs {}", x, du[i], dp(x));
                prop_assert!((d2u[i] - d2p(x)).abs() <= 1e-10, "dxx at {}: {} vs {}", x, d2u[i], d2p(x));
            }
        }

        #[test]
        fn operators_are_linear(
            u in prop::collection::vec(-1.0..1.0f64, 12),
            v in prop::collection::vec(-1.0..1.0f64, 12),
            a in -2.0..2.0f64,
            b in -2.0..2.0f64,
        ) {
            let g = Grid1D::new(0.0, 0.1, 12).unwrap();
            let w: Vec<f64> = u.iter().zip(&v).map(|(p, q)| a * p + b * q).collect();
            for which in [Derivative::First, Derivative::Second] {
                let bp = BoundaryPolicy::OneSidedThirdOrder;
                let du = compact_derivative(&u, &g, which, bp).unwrap();
                let dv = compact_derivative(&v, &g, which, bp).unwrap();
                let dw = compact_derivative(&w, &g, which, bp).unwrap();
                // derivative magnitudes reach O(1/h^2) for random data
                let scale = 1.0 / (g.h * g.h);
                for i in 0..12 {
                    prop_assert!((dw[i] - (a * du[i] + b * dv[i])).abs() <= 1e-12 * scale);
                }
            }
        }
    }
}

//! Non-invariant reference schemes: FTCS and the plain compact scheme (COMP).

use super::{StepContext, StepContext2D};
use crate::compact::{
    compact_dx, compact_dx_along_x, compact_dx_along_y, compact_dxx, compact_dxx_along_x,
    compact_dxx_along_y, BoundaryPolicy,
};
use crate::error::Result;
use crate::grid::{Field2D, Grid1D};

const CLOSURE: BoundaryPolicy = BoundaryPolicy::OneSidedThirdOrder;

/// Second-order central first and second differences. End entries are zero;
/// they are never read because the boundary rows are overwritten.
pub(crate) fn central_derivatives(u: &[f64], h: f64) -> (Vec<f64>, Vec<f64>) {
    let n = u.len();
    let mut ux = vec![0.0; n];
    let mut uxx = vec![0.0; n];
    for i in 1..n - 1 {
        ux[i] = (u[i + 1] - u[i - 1]) / (2.0 * h);
        uxx[i] = (u[i + 1] - 2.0 * u[i] + u[i - 1]) / (h * h);
    }
    (ux, uxx)
}

pub(crate) fn compact_derivatives(u: &[f64], grid: &Grid1D) -> Result<(Vec<f64>, Vec<f64>)> {
    grid.check_field(u)?;
    Ok((compact_dx(u, grid, CLOSURE)?, compact_dxx(u, grid, CLOSURE)?))
}

fn update_interior(
    u: &[f64],
    ctx: &StepContext,
    ux: &[f64],
    uxx: &[f64],
    rule: impl Fn(f64, f64, f64) -> f64,
) -> Result<Vec<f64>> {
    let n = u.len();
    let mut out = u.to_vec();
    for i in 1..n - 1 {
        out[i] = rule(u[i], ux[i], uxx[i]);
    }
    ctx.finish(out)
}

pub fn ftcs_step_ibe(u: &[f64], ctx: &StepContext) -> Result<Vec<f64>> {
    ctx.grid.check_field(u)?;
    let (ux, uxx) = central_derivatives(u, ctx.grid.h);
    let tau = ctx.tau;
    update_interior(u, ctx, &ux, &uxx, |u, ux, _| u - tau * u * ux)
}

pub fn ftcs_step_ade1d(u: &[f64], ctx: &StepContext) -> Result<Vec<f64>> {
    ctx.grid.check_field(u)?;
    let (ux, uxx) = central_derivatives(u, ctx.grid.h);
    let (tau, a, nu) = (ctx.tau, ctx.params.alpha, ctx.params.nu);
    update_interior(u, ctx, &ux, &uxx, |u, ux, uxx| u - tau * (a * ux - nu * uxx))
}

pub fn ftcs_step_vbe(u: &[f64], ctx: &StepContext) -> Result<Vec<f64>> {
    ctx.grid.check_field(u)?;
    let (ux, uxx) = central_derivatives(u, ctx.grid.h);
    let (tau, nu) = (ctx.tau, ctx.params.nu);
    update_interior(u, ctx, &ux, &uxx, |u, ux, uxx| u - tau * (u * ux - nu * uxx))
}

/// Compact inviscid Burgers step with the defect correction
/// `d_c = -(tau/2)(u^2 u_xx + 2 u u_x^2)` that lifts it to second order in time.
pub fn comp_step_ibe(u: &[f64], ctx: &StepContext) -> Result<Vec<f64>> {
    let (ux, uxx) = compact_derivatives(u, &ctx.grid)?;
    let tau = ctx.tau;
    update_interior(u, ctx, &ux, &uxx, |u, ux, uxx| {
        let dc = -0.5 * tau * (u * u * uxx + 2.0 * u * ux * ux);
        u - tau * u * ux - tau * dc
    })
}

pub fn comp_step_ade1d(u: &[f64], ctx: &StepContext) -> Result<Vec<f64>> {
    let (ux, uxx) = compact_derivatives(u, &ctx.grid)?;
    let (tau, a, nu) = (ctx.tau, ctx.params.alpha, ctx.params.nu);
    update_interior(u, ctx, &ux, &uxx, |u, ux, uxx| u - tau * (a * ux - nu * uxx))
}

pub fn comp_step_vbe(u: &[f64], ctx: &StepContext) -> Result<Vec<f64>> {
    let (ux, uxx) = compact_derivatives(u, &ctx.grid)?;
    let (tau, nu) = (ctx.tau, ctx.params.nu);
    update_interior(u, ctx, &ux, &uxx, |u, ux, uxx| u - tau * (u * ux - nu * uxx))
}

/// Spatial derivatives of a 2D field: `(u_x, u_y, u_xx, u_yy)`.
pub(crate) type Jet2D = (Field2D, Field2D, Field2D, Field2D);

pub(crate) fn compact_derivatives_2d(u: &Field2D, ctx: &StepContext2D) -> Result<Jet2D> {
    let g = &ctx.grid;
    Ok((
        compact_dx_along_x(u, g, CLOSURE)?,
        compact_dx_along_y(u, g, CLOSURE)?,
        compact_dxx_along_x(u, g, CLOSURE)?,
        compact_dxx_along_y(u, g, CLOSURE)?,
    ))
}

fn central_derivatives_2d(u: &Field2D, ctx: &StepContext2D) -> Result<Jet2D> {
    let g = &ctx.grid;
    g.check_field(u)?;
    let mut ux = Field2D::zeros(g.nx, g.ny);
    let mut uy = Field2D::zeros(g.nx, g.ny);
    let mut uxx = Field2D::zeros(g.nx, g.ny);
    let mut uyy = Field2D::zeros(g.nx, g.ny);
    for i in 1..g.nx - 1 {
        for j in 1..g.ny - 1 {
            let c = u[(i, j)];
            ux[(i, j)] = (u[(i + 1, j)] - u[(i - 1, j)]) / (2.0 * g.hx);
            uy[(i, j)] = (u[(i, j + 1)] - u[(i, j - 1)]) / (2.0 * g.hy);
            uxx[(i, j)] = (u[(i + 1, j)] - 2.0 * c + u[(i - 1, j)]) / (g.hx * g.hx);
            uyy[(i, j)] = (u[(i, j + 1)] - 2.0 * c + u[(i, j - 1)]) / (g.hy * g.hy);
        }
    }
    Ok((ux, uy, uxx, uyy))
}

fn ade2d_forward_euler(u: &Field2D, ctx: &StepContext2D, d: &Jet2D) -> Result<Field2D> {
    let g = &ctx.grid;
    let p = &ctx.params;
    let (ux, uy, uxx, uyy) = d;
    let mut out = u.clone();
    for i in 1..g.nx - 1 {
        for j in 1..g.ny - 1 {
            let k = u.index(i, j);
            out.values[k] = u.values[k]
                - ctx.tau
                    * (p.alpha * ux.values[k] + p.beta * uy.values[k]
                        - p.nu * (uxx.values[k] + uyy.values[k]));
        }
    }
    ctx.finish(out)
}

pub fn ftcs_step_ade2d(u: &Field2D, ctx: &StepContext2D) -> Result<Field2D> {
    let d = central_derivatives_2d(u, ctx)?;
    ade2d_forward_euler(u, ctx, &d)
}

/// Unsplit forward-Euler step with axis-wise compact derivatives.
pub fn comp_step_ade2d(u: &Field2D, ctx: &StepContext2D) -> Result<Field2D> {
    let d = compact_derivatives_2d(u, ctx)?;
    ade2d_forward_euler(u, ctx, &d)
}

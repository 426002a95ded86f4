//! Exact solutions of the four model equations. They supply initial data,
//! Dirichlet boundary values and the reference for error measurement.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::grid::Field2D;

/// Physical constants shared by the model equations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PdeParams {
    /// Advection speed along x.
    pub alpha: f64,
    /// Advection speed along y (2D only).
    pub beta: f64,
    /// Diffusion coefficient.
    pub nu: f64,
    /// Width of the inviscid Burgers Gaussian pulse.
    pub sigma: f64,
    /// Width of the advection-diffusion kernel.
    pub l: f64,
}

impl Default for PdeParams {
    fn default() -> Self {
        Self {
            alpha: 1.0,
            beta: 1.0,
            nu: 1.0 / 60.0,
            sigma: 0.5,
            l: 0.4,
        }
    }
}

impl PdeParams {
    pub fn validate(&self) -> Result<()> {
        let all = [self.alpha, self.beta, self.nu, self.sigma, self.l];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(Error::config("params", "all physical constants must be finite"));
        }
        if self.nu < 0.0 {
            return Err(Error::config("nu", "must be non-negative"));
        }
        if self.sigma <= 0.0 {
            return Err(Error::config("sigma", "must be positive"));
        }
        if self.l <= 0.0 {
            return Err(Error::config("L", "must be positive"));
        }
        Ok(())
    }
}

const IBE_MAX_ITER: usize = 200;
const IBE_TOL: f64 = 1e-13;

/// Gaussian pulse used as the inviscid Burgers initial profile.
pub fn ibe_initial(x: f64, sigma: f64) -> f64 {
    (-(x * x) / (2.0 * sigma * sigma)).exp() / (2.0 * PI * sigma * sigma).sqrt()
}

/// First time at which characteristics of the Gaussian pulse cross.
///
/// The steepest descent of the profile sits at `x = sigma`, so
/// `t_b = -1 / f'(sigma) = sigma^2 sqrt(2 pi) e^{1/2}`.
pub fn ibe_breaking_time(sigma: f64) -> f64 {
    sigma * sigma * (2.0 * PI).sqrt() * 0.5f64.exp()
}

/// Inviscid Burgers solution `u = f(x - u t)` for the Gaussian pulse `f`.
///
/// Solved by fixed-point iteration, which is a contraction before breaking;
/// bisection on `[0, max f]` takes over if the iteration stalls.
pub fn ibe_exact(t: f64, x: f64, sigma: f64) -> Result<f64> {
    if t == 0.0 {
        return Ok(ibe_initial(x, sigma));
    }
    let breaking = ibe_breaking_time(sigma);
    if t >= breaking {
        return Err(Error::PostBreakingTime { t, breaking });
    }
    let residual = |u: f64| u - ibe_initial(x - u * t, sigma);

    let mut u = ibe_initial(x, sigma);
    for _ in 0..IBE_MAX_ITER {
        let next = ibe_initial(x - u * t, sigma);
        if (next - u).abs() <= IBE_TOL * 0.1 {
            u = next;
            break;
        }
        u = next;
    }
    if residual(u).abs() <= IBE_TOL {
        return Ok(u);
    }

    // F is increasing for t >= 0 before breaking; F(0) <= 0 <= F(max f).
    let (mut lo, mut hi) = (0.0, ibe_initial(0.0, sigma));
    for _ in 0..IBE_MAX_ITER {
        let mid = 0.5 * (lo + hi);
        let r = residual(mid);
        if r.abs() <= IBE_TOL {
            return Ok(mid);
        }
        if r < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < f64::EPSILON * hi {
            return Ok(mid);
        }
    }
    Err(Error::NoConvergence {
        t,
        x,
        iterations: IBE_MAX_ITER,
    })
}

/// Translating, spreading Gaussian solving `u_t + alpha u_x = nu u_xx`.
pub fn ade1d_exact(t: f64, x: f64, params: &PdeParams) -> f64 {
    let w = params.l * params.l + params.nu * t;
    let d = x - params.alpha * t;
    (-(d * d) / (4.0 * w)).exp() / (4.0 * PI * w).sqrt()
}

/// Viscous Burgers solution built from two heat kernels via Cole-Hopf,
/// `u = -2 nu phi_x / phi + 4`.
pub fn vbe_exact(t: f64, x: f64, nu: f64) -> f64 {
    let a = 1.0 / (4.0 * nu * (t + 1.0));
    let z1 = x - 4.0 * t;
    let z2 = z1 - 2.0 * PI;
    let e1 = -a * z1 * z1;
    let e2 = -a * z2 * z2;
    let m = e1.max(e2);
    let w1 = (e1 - m).exp();
    let w2 = (e2 - m).exp();
    // -2 nu phi_x/phi = 4 nu a (z1 w1 + z2 w2)/(w1 + w2) and 4 nu a = 1/(t+1)
    4.0 + (z1 * w1 + z2 * w2) / ((w1 + w2) * (t + 1.0))
}

/// 2D heat kernel translated with `(alpha, beta)`, solving
/// `u_t + alpha u_x + beta u_y = nu (u_xx + u_yy)`.
///
/// The amplitude decays like `1 / (L^2 + nu t)`; a square-root prefactor (as
/// in 1D) would leave a residual of `nu u / (2 (L^2 + nu t))`.
pub fn ade2d_exact(t: f64, x: f64, y: f64, params: &PdeParams) -> f64 {
    let w = params.l * params.l + params.nu * t;
    let dx = x - params.alpha * t;
    let dy = y - params.beta * t;
    (-(dx * dx + dy * dy) / (4.0 * w)).exp() / (4.0 * PI * w)
}

/// Galilean image of a 1D field at `t = 0`: a uniform shift of the state.
pub fn galilean_transform_field(u: &[f64], c: f64) -> Vec<f64> {
    u.iter().map(|v| v + c).collect()
}

pub fn galilean_transform_field_2d(u: &Field2D, c: f64) -> Field2D {
    u.map(|v| v + c)
}

/// Galilean image `x -> x + c t, u -> u + c` of a 1D solution.
pub fn galilean_exact<F>(base: F, c: f64) -> impl Fn(f64, f64) -> f64
where
    F: Fn(f64, f64) -> f64,
{
    move |t, x| base(t, x - c * t) + c
}

//! Explicit one-step schemes for the four model equations.
//!
//! Every step is a pure map from the field at `t` to the field at `t + tau`.
//! Spatial derivatives come either from second-order central differences
//! (FTCS) or from the compact operators; the boundary nodes of the result are
//! overwritten with Dirichlet data from the context's boundary provider.

use std::fmt;
use std::str::FromStr;

use crate::analytic::PdeParams;
use crate::error::{Error, Result};
use crate::grid::{Field2D, Grid1D, Grid2D};

pub mod baseline;
pub mod invariant;

pub use baseline::*;
pub use invariant::*;

/// Dirichlet data `g(t, x)` for 1D problems.
pub type Boundary1D<'a> = &'a (dyn Fn(f64, f64) -> Result<f64> + Sync);
/// Dirichlet data `g(t, x, y)` for 2D problems.
pub type Boundary2D<'a> = &'a (dyn Fn(f64, f64, f64) -> Result<f64> + Sync);

/// Model equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pde {
    /// Inviscid Burgers, `u_t + u u_x = 0`.
    Ibe,
    /// 1D advection-diffusion, `u_t + alpha u_x = nu u_xx`.
    Ade1d,
    /// Viscous Burgers, `u_t + u u_x = nu u_xx`.
    Vbe,
    /// 2D advection-diffusion.
    Ade2d,
}

impl Pde {
    pub const ALL: [Pde; 4] = [Pde::Ibe, Pde::Ade1d, Pde::Vbe, Pde::Ade2d];

    pub fn is_2d(self) -> bool {
        matches!(self, Pde::Ade2d)
    }

    /// Schemes implemented for this equation.
    pub fn schemes(self) -> &'static [SchemeId] {
        match self {
            Pde::Ade2d => &[SchemeId::Ftcs, SchemeId::Comp, SchemeId::Sym1, SchemeId::Sym2],
            _ => &[SchemeId::Ftcs, SchemeId::Comp, SchemeId::Sym],
        }
    }

    pub fn supports(self, scheme: SchemeId) -> bool {
        self.schemes().contains(&scheme)
    }

    pub fn name(self) -> &'static str {
        match self {
            Pde::Ibe => "ibe",
            Pde::Ade1d => "ade1d",
            Pde::Vbe => "vbe",
            Pde::Ade2d => "ade2d",
        }
    }
}

impl fmt::Display for Pde {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Pde {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ibe" => Ok(Pde::Ibe),
            "ade1d" => Ok(Pde::Ade1d),
            "vbe" => Ok(Pde::Vbe),
            "ade2d" => Ok(Pde::Ade2d),
            other => Err(Error::config("pde", format!("unknown equation `{other}`"))),
        }
    }
}

/// Scheme variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SchemeId {
    /// Forward Euler with second-order central differences.
    Ftcs,
    /// Forward Euler with compact fourth-order derivatives.
    Comp,
    /// Invariantized compact scheme (1D equations).
    Sym,
    /// 2D invariant scheme normalised by `u~_xx = 0`.
    Sym1,
    /// 2D invariant scheme normalised by `u~_xx + u~_yy = 0`.
    Sym2,
}

impl SchemeId {
    pub fn name(self) -> &'static str {
        match self {
            SchemeId::Ftcs => "ftcs",
            SchemeId::Comp => "comp",
            SchemeId::Sym => "sym",
            SchemeId::Sym1 => "sym1",
            SchemeId::Sym2 => "sym2",
        }
    }
}

impl fmt::Display for SchemeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for SchemeId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ftcs" => Ok(SchemeId::Ftcs),
            "comp" => Ok(SchemeId::Comp),
            "sym" => Ok(SchemeId::Sym),
            "sym1" | "sym-1" => Ok(SchemeId::Sym1),
            "sym2" | "sym-2" => Ok(SchemeId::Sym2),
            other => Err(Error::config("scheme", format!("unknown scheme `{other}`"))),
        }
    }
}

/// Everything a 1D step needs besides the field itself.
#[derive(Clone, Copy)]
pub struct StepContext<'a> {
    /// Mesh at the current level.
    pub grid: Grid1D,
    pub params: PdeParams,
    pub tau: f64,
    /// Current time level.
    pub t: f64,
    /// Node velocity `(x^{n+1} - x^n) / tau`; zero on the usual orthogonal mesh.
    pub mesh_velocity: f64,
    pub boundary: Boundary1D<'a>,
}

impl<'a> StepContext<'a> {
    pub fn new(grid: Grid1D, params: PdeParams, tau: f64, t: f64, boundary: Boundary1D<'a>) -> Self {
        Self {
            grid,
            params,
            tau,
            t,
            mesh_velocity: 0.0,
            boundary,
        }
    }

    pub fn with_mesh_velocity(mut self, v: f64) -> Self {
        self.mesh_velocity = v;
        self
    }

    /// Mesh the step writes into.
    pub fn next_grid(&self) -> Grid1D {
        self.grid.shifted(self.mesh_velocity * self.tau)
    }

    /// Mesh displacement per step.
    pub fn mesh_displacement(&self) -> f64 {
        self.mesh_velocity * self.tau
    }

    /// Diffusion and advection numbers, when they exceed the explicit limits.
    pub fn stability_warning(&self, pde: Pde) -> Option<String> {
        stability_warning(pde, &self.params, self.tau, self.grid.h)
    }

    pub(crate) fn finish(&self, mut u: Vec<f64>) -> Result<Vec<f64>> {
        let next = self.next_grid();
        let n = u.len();
        let t1 = self.t + self.tau;
        u[0] = (self.boundary)(t1, next.x(0))?;
        u[n - 1] = (self.boundary)(t1, next.x(n - 1))?;
        check_finite(&u)?;
        Ok(u)
    }
}

/// Everything a 2D step needs besides the field itself.
#[derive(Clone, Copy)]
pub struct StepContext2D<'a> {
    pub grid: Grid2D,
    pub params: PdeParams,
    pub tau: f64,
    pub t: f64,
    pub boundary: Boundary2D<'a>,
}

impl<'a> StepContext2D<'a> {
    pub fn new(grid: Grid2D, params: PdeParams, tau: f64, t: f64, boundary: Boundary2D<'a>) -> Self {
        Self {
            grid,
            params,
            tau,
            t,
            boundary,
        }
    }

    pub fn stability_warning(&self) -> Option<String> {
        let h = self.grid.hx.min(self.grid.hy);
        let mut p = self.params;
        p.alpha = p.alpha.abs().max(p.beta.abs());
        stability_warning(Pde::Ade2d, &p, self.tau, h)
    }

    pub(crate) fn finish(&self, mut u: Field2D) -> Result<Field2D> {
        let g = &self.grid;
        let t1 = self.t + self.tau;
        for i in 0..g.nx {
            for j in 0..g.ny {
                if g.is_boundary(i, j) {
                    u[(i, j)] = (self.boundary)(t1, g.x(i), g.y(j))?;
                }
            }
        }
        check_finite(&u.values)?;
        Ok(u)
    }
}

fn stability_warning(pde: Pde, params: &PdeParams, tau: f64, h: f64) -> Option<String> {
    let mut notes = Vec::new();
    if matches!(pde, Pde::Ade1d | Pde::Vbe | Pde::Ade2d) {
        let d = params.nu * tau / (h * h);
        if d > 0.5 {
            notes.push(format!("diffusion number nu*tau/h^2 = {d:.3} > 0.5"));
        }
    }
    if matches!(pde, Pde::Ade1d | Pde::Ade2d) {
        let c = params.alpha.abs() * tau / h;
        if c > 1.0 {
            notes.push(format!("advection number |alpha|*tau/h = {c:.3} > 1"));
        }
    }
    if notes.is_empty() {
        None
    } else {
        Some(notes.join("; "))
    }
}

pub(crate) fn check_finite(u: &[f64]) -> Result<()> {
    match u.iter().position(|v| !v.is_finite()) {
        Some(index) => Err(Error::NonFinite { index }),
        None => Ok(()),
    }
}

/// Advance a 1D field by one step with the chosen scheme.
pub fn step_1d(pde: Pde, scheme: SchemeId, u: &[f64], ctx: &StepContext) -> Result<Vec<f64>> {
    use SchemeId::*;
    match (pde, scheme) {
        (Pde::Ibe, Ftcs) => ftcs_step_ibe(u, ctx),
        (Pde::Ibe, Comp) => comp_step_ibe(u, ctx),
        (Pde::Ibe, Sym) => sym_step_ibe(u, ctx),
        (Pde::Ade1d, Ftcs) => ftcs_step_ade1d(u, ctx),
        (Pde::Ade1d, Comp) => comp_step_ade1d(u, ctx),
        (Pde::Ade1d, Sym) => sym_step_ade1d(u, ctx),
        (Pde::Vbe, Ftcs) => ftcs_step_vbe(u, ctx),
        (Pde::Vbe, Comp) => comp_step_vbe(u, ctx),
        (Pde::Vbe, Sym) => sym_step_vbe(u, ctx),
        _ => Err(Error::UnsupportedScheme {
            scheme: scheme.to_string(),
            pde: pde.to_string(),
        }),
    }
}

/// Advance a 2D advection-diffusion field by one step.
pub fn step_2d(scheme: SchemeId, u: &Field2D, ctx: &StepContext2D) -> Result<Field2D> {
    match scheme {
        SchemeId::Ftcs => ftcs_step_ade2d(u, ctx),
        SchemeId::Comp => comp_step_ade2d(u, ctx),
        SchemeId::Sym1 => sym_step_ade2d(u, ctx, Ade2dVariant::Sym1),
        SchemeId::Sym2 => sym_step_ade2d(u, ctx, Ade2dVariant::Sym2),
        SchemeId::Sym => Err(Error::UnsupportedScheme {
            scheme: scheme.to_string(),
            pde: Pde::Ade2d.to_string(),
        }),
    }
}

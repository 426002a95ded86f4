//! Symmetry-preserving (invariantized) compact schemes.
//!
//! Each scheme is the plain compact scheme written in transformed variables,
//! where the group element is fixed per node by a moving frame: translations
//! put the stencil base point at the origin (`t~ = x~ = y~ = 0`) and the
//! projection parameter `s1` annihilates one derivative term. The update is
//! then mapped back to the original variables at level `n + 1`.

use super::baseline::{compact_derivatives, compact_derivatives_2d};
use super::{step_1d, Pde, SchemeId, StepContext, StepContext2D};
use crate::error::{Error, Result};
use crate::grid::Field2D;

/// Smallest admissible `lambda_{n+1}`.
pub const LAMBDA_TOLERANCE: f64 = 1e-10;
/// Smallest admissible `|u|` where the frame divides by the state.
pub const STATE_TOLERANCE: f64 = 1e-12;

/// Normalised group parameters at one stencil point.
///
/// Translations are implied by the normalisation and never stored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MovingFrame {
    /// Projection-group parameter.
    pub s1: f64,
    /// Projective factor at the new time level.
    pub lambda_next: f64,
    /// Shifted x-coordinate `x + s7 - alpha (t + s6)` at the new level.
    pub gamma_next: f64,
    /// Shifted y-coordinate at the new level (2D only).
    pub theta_next: f64,
}

impl MovingFrame {
    fn checked(self, index: usize, positive: bool) -> Result<Self> {
        let bad = if positive {
            self.lambda_next <= LAMBDA_TOLERANCE || self.lambda_next.is_nan()
        } else {
            self.lambda_next.abs() < LAMBDA_TOLERANCE || self.lambda_next.is_nan()
        };
        if bad {
            return Err(Error::FrameSingularity {
                index,
                lambda: self.lambda_next,
            });
        }
        Ok(self)
    }

    /// Inviscid Burgers: `u~_x = 0` gives `s1 = -u_x`, `lambda = 1 - s1 tau`.
    pub fn burgers(ux: f64, tau: f64, index: usize) -> Result<Self> {
        let s1 = -ux;
        Self {
            s1,
            lambda_next: 1.0 - s1 * tau,
            gamma_next: 0.0,
            theta_next: 0.0,
        }
        .checked(index, false)
    }

    /// 1D advection-diffusion: `u~_xx = 0` gives `s1 = nu u_xx / u`,
    /// `lambda = 1 - 2 s1 tau`.
    pub fn ade1d(u: f64, uxx: f64, nu: f64, alpha: f64, tau: f64, index: usize) -> Result<Self> {
        if u.abs() < STATE_TOLERANCE {
            return Err(Error::ZeroState { index, value: u });
        }
        let s1 = nu * uxx / u;
        Self {
            s1,
            lambda_next: 1.0 - 2.0 * s1 * tau,
            gamma_next: -alpha * tau,
            theta_next: 0.0,
        }
        .checked(index, true)
    }

    /// 2D advection-diffusion, `lambda = 1 - 4 nu s1 tau`, with `s1` chosen by
    /// the variant's normalisation.
    pub fn ade2d(
        variant: Ade2dVariant,
        jet: &Jet2D,
        ctx: &StepContext2D,
        index: usize,
    ) -> Result<Self> {
        if jet.u.abs() < STATE_TOLERANCE {
            return Err(Error::ZeroState {
                index,
                value: jet.u,
            });
        }
        let s1 = match variant {
            Ade2dVariant::Sym1 => jet.uxx / (2.0 * jet.u),
            Ade2dVariant::Sym2 => (jet.uxx + jet.uyy) / (4.0 * jet.u),
        };
        let p = &ctx.params;
        Self {
            s1,
            lambda_next: 1.0 - 4.0 * p.nu * s1 * ctx.tau,
            gamma_next: -p.alpha * ctx.tau,
            theta_next: -p.beta * ctx.tau,
        }
        .checked(index, true)
    }
}

/// Symmetry-preserving inviscid Burgers step:
/// `u_new = (u - s1 dx + tau^2 u^2 u_xx / (2 lambda^2)) / lambda` with
/// `s1 = -u_x`, `lambda = 1 - s1 tau` and `dx` the mesh displacement.
pub fn sym_step_ibe(u: &[f64], ctx: &StepContext) -> Result<Vec<f64>> {
    let (ux, uxx) = compact_derivatives(u, &ctx.grid)?;
    let tau = ctx.tau;
    let dx = ctx.mesh_displacement();
    let mut out = u.to_vec();
    for i in 1..u.len() - 1 {
        let f = MovingFrame::burgers(ux[i], tau, i)?;
        let lam = f.lambda_next;
        out[i] = (u[i] - f.s1 * dx + tau * tau / (2.0 * lam * lam) * u[i] * u[i] * uxx[i]) / lam;
    }
    ctx.finish(out)
}

/// Symmetry-preserving 1D advection-diffusion step (pure advection in the
/// frame where `u~_xx = 0`):
/// `u_new = lambda^{-3/2} (lambda u - tau alpha u_x) exp(s1 alpha^2 tau^2 / (2 nu lambda))`.
pub fn sym_step_ade1d(u: &[f64], ctx: &StepContext) -> Result<Vec<f64>> {
    let (ux, uxx) = compact_derivatives(u, &ctx.grid)?;
    let (tau, alpha, nu) = (ctx.tau, ctx.params.alpha, ctx.params.nu);
    let mut out = u.to_vec();
    for i in 1..u.len() - 1 {
        let f = MovingFrame::ade1d(u[i], uxx[i], nu, alpha, tau, i)?;
        let lam = f.lambda_next;
        // s1 / nu = u_xx / u stays finite as nu -> 0
        let growth = (uxx[i] / u[i]) * f.gamma_next * f.gamma_next / (2.0 * lam);
        out[i] = lam.powf(-1.5) * (lam * u[i] - tau * alpha * ux[i]) * growth.exp();
    }
    ctx.finish(out)
}

/// Symmetry-preserving viscous Burgers step (heat equation in the frame where
/// `u~_x = 0`): `u_new = (u - s1 dx + tau nu u_xx / lambda) / lambda`.
pub fn sym_step_vbe(u: &[f64], ctx: &StepContext) -> Result<Vec<f64>> {
    let (ux, uxx) = compact_derivatives(u, &ctx.grid)?;
    let (tau, nu) = (ctx.tau, ctx.params.nu);
    let dx = ctx.mesh_displacement();
    let mut out = u.to_vec();
    for i in 1..u.len() - 1 {
        let f = MovingFrame::burgers(ux[i], tau, i)?;
        let lam = f.lambda_next;
        out[i] = (u[i] - f.s1 * dx + tau * nu / lam * uxx[i]) / lam;
    }
    ctx.finish(out)
}

/// Moving-frame choice for the 2D advection-diffusion scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ade2dVariant {
    /// `u~_xx = 0`; keeps `nu u~_yy` in the transformed scheme.
    Sym1,
    /// `u~_xx + u~_yy = 0`; the transformed scheme is pure advection.
    Sym2,
}

/// State and spatial derivatives at one point.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Jet2D {
    pub u: f64,
    pub ux: f64,
    pub uy: f64,
    pub uxx: f64,
    pub uyy: f64,
}

/// Projection-group element of the 2D advection-diffusion equation, with
/// translations already absorbed into the shifted coordinates:
///
/// ```text
/// t~ = (t + s6) / lambda,  x~ = (x + s7) / lambda,  y~ = (y + s8) / lambda
/// u~ = lambda u exp(-s1 (gamma^2 + theta^2) / lambda)
/// lambda = 1 - 4 nu s1 (t + s6),  gamma = x + s7 - alpha (t + s6),  theta = y + s8 - beta (t + s6)
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectiveAction2D {
    pub s1: f64,
    pub lambda: f64,
    pub gamma: f64,
    pub theta: f64,
}

impl ProjectiveAction2D {
    /// Group element acting at shifted coordinates `(t + s6, x + s7, y + s8)`.
    pub fn at(s1: f64, nu: f64, alpha: f64, beta: f64, t: f64, x: f64, y: f64) -> Self {
        Self {
            s1,
            lambda: 1.0 - 4.0 * nu * s1 * t,
            gamma: x - alpha * t,
            theta: y - beta * t,
        }
    }

    fn weight(&self) -> f64 {
        (-self.s1 * (self.gamma * self.gamma + self.theta * self.theta) / self.lambda).exp()
    }

    /// Prolonged action on `(u, u_x, u_y, u_xx, u_yy)`; `d/dx~ = lambda d/dx`.
    pub fn forward(&self, j: &Jet2D) -> Jet2D {
        let (s, l, g, th) = (self.s1, self.lambda, self.gamma, self.theta);
        let e = self.weight();
        Jet2D {
            u: l * j.u * e,
            ux: (l * l * j.ux - 2.0 * l * g * s * j.u) * e,
            uy: (l * l * j.uy - 2.0 * l * th * s * j.u) * e,
            uxx: (4.0 * l * g * g * s * s * j.u - 2.0 * l * l * s * j.u - 4.0 * l * l * g * s * j.ux
                + l * l * l * j.uxx)
                * e,
            uyy: (4.0 * l * th * th * s * s * j.u - 2.0 * l * l * s * j.u
                - 4.0 * l * l * th * s * j.uy
                + l * l * l * j.uyy)
                * e,
        }
    }

    /// Inverse of [`forward`](Self::forward).
    pub fn inverse(&self, tj: &Jet2D) -> Jet2D {
        let (s, l, g, th) = (self.s1, self.lambda, self.gamma, self.theta);
        let e = self.weight();
        let u = tj.u / (l * e);
        let ux = (tj.ux / e + 2.0 * l * g * s * u) / (l * l);
        let uy = (tj.uy / e + 2.0 * l * th * s * u) / (l * l);
        let uxx = (tj.uxx / e - 4.0 * l * g * g * s * s * u + 2.0 * l * l * s * u
            + 4.0 * l * l * g * s * ux)
            / (l * l * l);
        let uyy = (tj.uyy / e - 4.0 * l * th * th * s * s * u + 2.0 * l * l * s * u
            + 4.0 * l * l * th * s * uy)
            / (l * l * l);
        Jet2D {
            u,
            ux,
            uy,
            uxx,
            uyy,
        }
    }

    /// Original state from a transformed state (no derivatives needed).
    pub fn inverse_value(&self, u_tilde: f64) -> f64 {
        u_tilde / (self.lambda * self.weight())
    }
}

/// Symmetry-preserving 2D advection-diffusion step.
///
/// Per node the compact scheme is applied in the frame-normalised variables
/// and the result is mapped back through the group element at level `n + 1`
/// (`t + s6 = tau`, `gamma = -alpha tau`, `theta = -beta tau`).
pub fn sym_step_ade2d(u: &Field2D, ctx: &StepContext2D, variant: Ade2dVariant) -> Result<Field2D> {
    let (ux, uy, uxx, uyy) = compact_derivatives_2d(u, ctx)?;
    let g = &ctx.grid;
    let p = &ctx.params;
    let tau = ctx.tau;
    let mut out = u.clone();
    for i in 1..g.nx - 1 {
        for j in 1..g.ny - 1 {
            let k = u.index(i, j);
            let jet = Jet2D {
                u: u.values[k],
                ux: ux.values[k],
                uy: uy.values[k],
                uxx: uxx.values[k],
                uyy: uyy.values[k],
            };
            let frame = MovingFrame::ade2d(variant, &jet, ctx, k)?;
            // base point: t + s6 = 0, gamma = theta = 0, lambda = 1
            let here = ProjectiveAction2D::at(frame.s1, p.nu, p.alpha, p.beta, 0.0, 0.0, 0.0);
            let tj = here.forward(&jet);
            let tau_t = tau / frame.lambda_next;
            let mut next = tj.u - tau_t * (p.alpha * tj.ux + p.beta * tj.uy);
            if variant == Ade2dVariant::Sym1 {
                next += tau_t * p.nu * tj.uyy;
            }
            let there = ProjectiveAction2D {
                s1: frame.s1,
                lambda: frame.lambda_next,
                gamma: frame.gamma_next,
                theta: frame.theta_next,
            };
            out.values[k] = there.inverse_value(next);
        }
    }
    ctx.finish(out)
}

/// Finite symmetry used to probe equivariance of a 1D Burgers scheme.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GroupAction {
    Identity,
    /// `x -> x + c t`, `u -> u + c`.
    Galilean(f64),
    /// `t -> e^{2s} t`, `x -> e^s x`, `u -> e^{-s} u`.
    Scaling(f64),
}

/// Max-norm of `step(g . data) - g . step(data)` over all nodes.
///
/// `u` lives on `ctx.grid` at time `ctx.t`. Transformed data uses the image
/// mesh of `g` (a moving mesh for Galilean boosts), transformed step sizes
/// and transformed boundary data, so an equivariant scheme returns rounding
/// noise. Only the Burgers equations carry these actions.
pub fn invariantize_check(
    pde: Pde,
    scheme: SchemeId,
    u: &[f64],
    ctx: &StepContext,
    action: GroupAction,
) -> Result<f64> {
    if !matches!(pde, Pde::Ibe | Pde::Vbe) {
        return Err(Error::UnsupportedScheme {
            scheme: format!("{scheme} equivariance check"),
            pde: pde.to_string(),
        });
    }
    let plain = step_1d(pde, scheme, u, ctx)?;
    let boundary = ctx.boundary;
    let deviation = |a: &[f64], b: &[f64]| {
        a.iter()
            .zip(b)
            .map(|(p, q)| (p - q).abs())
            .fold(0.0, f64::max)
    };
    match action {
        GroupAction::Identity => {
            let again = step_1d(pde, scheme, u, ctx)?;
            Ok(deviation(&again, &plain))
        }
        GroupAction::Galilean(c) => {
            let bc = move |t: f64, x: f64| Ok(boundary(t, x - c * t)? + c);
            let tctx = StepContext {
                grid: ctx.grid.shifted(c * ctx.t),
                mesh_velocity: ctx.mesh_velocity + c,
                boundary: &bc,
                ..*ctx
            };
            let tu: Vec<f64> = u.iter().map(|v| v + c).collect();
            let stepped = step_1d(pde, scheme, &tu, &tctx)?;
            let expect: Vec<f64> = plain.iter().map(|v| v + c).collect();
            Ok(deviation(&stepped, &expect))
        }
        GroupAction::Scaling(s) => {
            let k = s.exp();
            let bc = move |t: f64, x: f64| Ok(boundary(t / (k * k), x / k)? / k);
            let mut grid = ctx.grid;
            grid.x0 *= k;
            grid.h *= k;
            let tctx = StepContext {
                grid,
                t: ctx.t * k * k,
                tau: ctx.tau * k * k,
                mesh_velocity: ctx.mesh_velocity / k,
                boundary: &bc,
                ..*ctx
            };
            let tu: Vec<f64> = u.iter().map(|v| v / k).collect();
            let stepped = step_1d(pde, scheme, &tu, &tctx)?;
            let expect: Vec<f64> = plain.iter().map(|v| v / k).collect();
            Ok(deviation(&stepped, &expect))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::{ade2d_exact, ibe_exact, vbe_exact, PdeParams};
    use crate::grid::{Grid1D, Grid2D};
    use crate::schemes::{comp_step_ibe, comp_step_vbe};
    use proptest::prelude::*;

    fn zero_bc(_: f64, _: f64) -> Result<f64> {
        Ok(0.0)
    }

    #[test]
    fn constant_fields_are_fixed_points() {
        let g = Grid1D::new(-1.0, 0.1, 21).unwrap();
        let bc = |_: f64, _: f64| Ok(1.75);
        let ctx = StepContext::new(g, PdeParams::default(), 1e-3, 0.0, &bc);
        let u = vec![1.75; 21];
        for step in [sym_step_ibe, sym_step_ade1d, sym_step_vbe] {
            let out = step(&u, &ctx).unwrap();
            for v in out {
                assert!((v - 1.75).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn rarefaction_is_exact_in_one_step() {
        let g = Grid1D::new(-1.0, 0.1, 21).unwrap();
        let tau = 1e-3;
        for nu in [0.0, 1.0 / 12.0, 0.5] {
            let p = PdeParams {
                nu,
                ..Default::default()
            };
            let ctx = StepContext::new(g, p, tau, 0.0, &zero_bc);
            let u = g.nodes();
            for out in [sym_step_ibe(&u, &ctx).unwrap(), sym_step_vbe(&u, &ctx).unwrap()] {
                for i in 1..20 {
                    assert!((out[i] - u[i] / (1.0 + tau)).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn ade1d_without_curvature_is_forward_euler_advection() {
        let g = Grid1D::new(0.5, 0.1, 11).unwrap();
        let tau = 1e-3;
        let p = PdeParams {
            alpha: 0.8,
            nu: 1e-12,
            ..Default::default()
        };
        let ctx = StepContext::new(g, p, tau, 0.0, &zero_bc);
        let u = g.sample(|x| 2.0 + x);
        let out = sym_step_ade1d(&u, &ctx).unwrap();
        for i in 1..10 {
            assert!((out[i] - (u[i] - tau * 0.8)).abs() < 1e-12);
        }
    }

    #[test]
    fn ade1d_zero_state_is_rejected() {
        let g = Grid1D::new(0.0, 0.1, 8).unwrap();
        let ctx = StepContext::new(g, PdeParams::default(), 1e-3, 0.0, &zero_bc);
        let mut u = vec![1.0; 8];
        u[3] = 0.0;
        assert!(matches!(
            sym_step_ade1d(&u, &ctx),
            Err(Error::ZeroState { index: 3, .. })
        ));
    }

    #[test]
    fn singular_frame_is_rejected() {
        // lambda = 1 + u_x tau vanishes for u_x = -1/tau
        let g = Grid1D::new(0.0, 0.1, 8).unwrap();
        let tau = 0.5;
        let ctx = StepContext::new(g, PdeParams::default(), tau, 0.0, &zero_bc);
        let u = g.sample(|x| -2.0 * x);
        assert!(matches!(
            sym_step_vbe(&u, &ctx),
            Err(Error::FrameSingularity { .. })
        ));
        assert!(MovingFrame::ade1d(1.0, 1.0, 1.0, 0.0, 0.5, 0).is_err());
    }

    #[test]
    fn reduces_to_base_scheme_when_frame_is_trivial() {
        // vanishing derivatives give s1 = 0 and lambda = 1
        let g = Grid1D::new(0.0, 0.1, 11).unwrap();
        let bc = |_: f64, _: f64| Ok(3.0);
        let ctx = StepContext::new(g, PdeParams::default(), 1e-3, 0.0, &bc);
        let u = vec![3.0; 11];
        let sym = sym_step_ibe(&u, &ctx).unwrap();
        let comp = comp_step_ibe(&u, &ctx).unwrap();
        assert_eq!(sym, comp);
        let sym = sym_step_vbe(&u, &ctx).unwrap();
        let comp = comp_step_vbe(&u, &ctx).unwrap();
        assert_eq!(sym, comp);
    }

    fn ade2d_ctx<'a>(
        g: Grid2D,
        p: PdeParams,
        tau: f64,
        bc: &'a (dyn Fn(f64, f64, f64) -> Result<f64> + Sync),
    ) -> StepContext2D<'a> {
        StepContext2D::new(g, p, tau, 0.0, bc)
    }

    #[test]
    fn ade2d_constant_field_is_steady() {
        let g = Grid2D::new(0.0, 0.0, 0.1, 0.1, 7, 7).unwrap();
        let bc = |_: f64, _: f64, _: f64| Ok(0.4);
        let ctx = ade2d_ctx(g, PdeParams::default(), 1e-3, &bc);
        let u = g.sample(|_, _| 0.4);
        for v in [Ade2dVariant::Sym1, Ade2dVariant::Sym2] {
            let out = sym_step_ade2d(&u, &ctx, v).unwrap();
            assert!(out.values.iter().all(|x| (x - 0.4).abs() < 1e-12));
        }
    }

    #[test]
    fn sym2_on_harmonic_data_is_forward_euler_advection() {
        // u = 3 + x^2 - y^2 has zero Laplacian; compact ops are exact on it
        let g = Grid2D::new(-0.3, -0.2, 0.1, 0.1, 9, 9).unwrap();
        let p = PdeParams {
            alpha: 0.7,
            beta: -0.4,
            nu: 0.05,
            ..Default::default()
        };
        let tau = 1e-3;
        let bc = |_: f64, _: f64, _: f64| Ok(0.0);
        let ctx = ade2d_ctx(g, p, tau, &bc);
        let u = g.sample(|x, y| 3.0 + x * x - y * y);
        let out = sym_step_ade2d(&u, &ctx, Ade2dVariant::Sym2).unwrap();
        for i in 1..8 {
            for j in 1..8 {
                let (x, y) = (g.x(i), g.y(j));
                let expect = u[(i, j)] - tau * (0.7 * 2.0 * x - 0.4 * (-2.0 * y));
                assert!((out[(i, j)] - expect).abs() < 1e-11);
            }
        }
    }

    #[test]
    fn sym_schemes_are_consistent_with_the_pde() {
        // one step from exact data tracks the exact solution to O(tau^2 + tau h^4)
        let p = PdeParams::default();
        let g = Grid2D::from_domain((-1.5, 1.5), (-1.5, 1.5), 61, 61).unwrap();
        let exact = move |t: f64, x: f64, y: f64| Ok(ade2d_exact(t, x, y, &p));
        let tau = 1e-4;
        let ctx = ade2d_ctx(g, p, tau, &exact);
        let u = g.sample(|x, y| ade2d_exact(0.0, x, y, &p));
        let target = g.sample(|x, y| ade2d_exact(tau, x, y, &p));
        for v in [Ade2dVariant::Sym1, Ade2dVariant::Sym2] {
            let out = sym_step_ade2d(&u, &ctx, v).unwrap();
            let err = out
                .values
                .iter()
                .zip(&target.values)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            assert!(err / tau < 2e-3, "{v:?}: residual {}", err / tau);
        }
    }

    /// Transformed exact solution as a function of the new coordinates.
    fn transformed_solution(
        p: PdeParams,
        s1: f64,
        s6: f64,
        s7: f64,
        s8: f64,
    ) -> impl Fn(f64, f64, f64) -> f64 {
        move |tt, xt, yt| {
            // invert t~ = (t + s6) / (1 - 4 nu s1 (t + s6))
            let ts = tt / (1.0 + 4.0 * p.nu * s1 * tt);
            let lam = 1.0 - 4.0 * p.nu * s1 * ts;
            let (xs, ys) = (lam * xt, lam * yt);
            let act = ProjectiveAction2D::at(s1, p.nu, p.alpha, p.beta, ts, xs, ys);
            act.forward(&Jet2D {
                u: ade2d_exact(ts - s6, xs - s7, ys - s8, &p),
                ..Default::default()
            })
            .u
        }
    }

    #[test]
    fn projective_action_maps_solutions_to_solutions() {
        let p = PdeParams::default();
        let f = transformed_solution(p, 0.3, 0.1, -0.2, 0.15);
        let h = 1e-3;
        for &(t, x, y) in &[(0.2, 0.3, -0.1), (0.05, -0.4, 0.2), (0.3, 0.0, 0.5)] {
            let ut = (f(t + h, x, y) - f(t - h, x, y)) / (2.0 * h);
            let ux = (f(t, x + h, y) - f(t, x - h, y)) / (2.0 * h);
            let uy = (f(t, x, y + h) - f(t, x, y - h)) / (2.0 * h);
            let uxx = (f(t, x + h, y) - 2.0 * f(t, x, y) + f(t, x - h, y)) / (h * h);
            let uyy = (f(t, x, y + h) - 2.0 * f(t, x, y) + f(t, x, y - h)) / (h * h);
            let r = ut + p.alpha * ux + p.beta * uy - p.nu * (uxx + uyy);
            assert!(r.abs() < 1e-5, "residual {r} at ({t},{x},{y})");
        }
    }

    #[test]
    fn prolonged_action_matches_differentiated_transform() {
        let p = PdeParams::default();
        let (s1, s6, s7, s8) = (0.4, 0.05, 0.1, -0.3);
        let f = transformed_solution(p, s1, s6, s7, s8);
        // a point in original coordinates and its image
        let (t, x, y) = (0.07, 0.2, -0.15);
        let (ts, xs, ys) = (t + s6, x + s7, y + s8);
        let act = ProjectiveAction2D::at(s1, p.nu, p.alpha, p.beta, ts, xs, ys);
        let h = 1e-5;
        let ex = |x: f64, y: f64| ade2d_exact(t, x, y, &p);
        let jet = Jet2D {
            u: ex(x, y),
            ux: (ex(x + h, y) - ex(x - h, y)) / (2.0 * h),
            uy: (ex(x, y + h) - ex(x, y - h)) / (2.0 * h),
            uxx: (ex(x + 1e-3, y) - 2.0 * ex(x, y) + ex(x - 1e-3, y)) / 1e-6,
            uyy: (ex(x, y + 1e-3) - 2.0 * ex(x, y) + ex(x, y - 1e-3)) / 1e-6,
        };
        let tj = act.forward(&jet);
        let (tt, xt, yt) = (ts / act.lambda, xs / act.lambda, ys / act.lambda);
        let hh = 1e-3;
        let fd = Jet2D {
            u: f(tt, xt, yt),
            ux: (f(tt, xt + h, yt) - f(tt, xt - h, yt)) / (2.0 * h),
            uy: (f(tt, xt, yt + h) - f(tt, xt, yt - h)) / (2.0 * h),
            uxx: (f(tt, xt + hh, yt) - 2.0 * f(tt, xt, yt) + f(tt, xt - hh, yt)) / (hh * hh),
            uyy: (f(tt, xt, yt + hh) - 2.0 * f(tt, xt, yt) + f(tt, xt, yt - hh)) / (hh * hh),
        };
        assert!((tj.u - fd.u).abs() < 1e-12);
        assert!((tj.ux - fd.ux).abs() < 1e-7);
        assert!((tj.uy - fd.uy).abs() < 1e-7);
        assert!((tj.uxx - fd.uxx).abs() < 1e-5);
        assert!((tj.uyy - fd.uyy).abs() < 1e-5);
    }

    proptest! {
        #[test]
        fn forward_then_inverse_is_identity(
            u in 0.05..2.0f64, ux in -3.0..3.0f64, uy in -3.0..3.0f64,
            uxx in -10.0..10.0f64, uyy in -10.0..10.0f64,
            s1 in -2.0..2.0f64, t in 0.0..0.2f64, x in -1.0..1.0f64, y in -1.0..1.0f64,
        ) {
            let act = ProjectiveAction2D::at(s1, 1.0 / 60.0, 1.0, 1.0, t, x, y);
            let jet = Jet2D { u, ux, uy, uxx, uyy };
            let back = act.inverse(&act.forward(&jet));
            for (a, b) in [(back.u, u), (back.ux, ux), (back.uy, uy), (back.uxx, uxx), (back.uyy, uyy)] {
                prop_assert!((a - b).abs() <= 1e-12 * (1.0 + b.abs()));
            }
        }
    }

    fn vbe_setup(nu: f64) -> (Grid1D, Vec<f64>, PdeParams) {
        let g = Grid1D::from_domain(0.0, 2.0 * std::f64::consts::PI, 101).unwrap();
        let t = 0.1;
        let u = g.sample(|x| vbe_exact(t, x, nu));
        let p = PdeParams {
            nu,
            ..Default::default()
        };
        (g, u, p)
    }

    #[test]
    fn identity_action_has_zero_deviation() {
        let nu = 1.0 / 12.0;
        let (g, u, p) = vbe_setup(nu);
        let bc = move |t: f64, x: f64| Ok(vbe_exact(t, x, nu));
        let ctx = StepContext::new(g, p, 1e-4, 0.1, &bc);
        for s in [SchemeId::Ftcs, SchemeId::Comp, SchemeId::Sym] {
            assert_eq!(invariantize_check(Pde::Vbe, s, &u, &ctx, GroupAction::Identity).unwrap(), 0.0);
        }
    }

    #[test]
    fn vbe_sym_is_galilean_equivariant_and_baselines_are_not() {
        let nu = 1.0 / 12.0;
        let (g, u, p) = vbe_setup(nu);
        let bc = move |t: f64, x: f64| Ok(vbe_exact(t, x, nu));
        let ctx = StepContext::new(g, p, 1e-4, 0.1, &bc);
        let dev = invariantize_check(Pde::Vbe, SchemeId::Sym, &u, &ctx, GroupAction::Galilean(0.5)).unwrap();
        assert!(dev <= 1e-10, "{dev}");
        let comp = invariantize_check(Pde::Vbe, SchemeId::Comp, &u, &ctx, GroupAction::Galilean(0.5)).unwrap();
        let comp2 = invariantize_check(Pde::Vbe, SchemeId::Comp, &u, &ctx, GroupAction::Galilean(1.0)).unwrap();
        assert!(comp > 1e-6 && comp2 > comp);
        let ftcs = invariantize_check(Pde::Vbe, SchemeId::Ftcs, &u, &ctx, GroupAction::Galilean(0.5)).unwrap();
        assert!(ftcs > 1e-6);
    }

    #[test]
    fn ibe_sym_is_scale_equivariant() {
        let g = Grid1D::from_domain(-3.0, 3.0, 31).unwrap();
        let t = 0.3;
        let u: Vec<f64> = g.nodes().iter().map(|&x| ibe_exact(t, x, 0.5).unwrap()).collect();
        let bc = |t: f64, x: f64| ibe_exact(t, x, 0.5);
        let ctx = StepContext::new(g, PdeParams::default(), 1e-3, t, &bc);
        for s in [0.3, -0.7, 1.2] {
            let dev = invariantize_check(Pde::Ibe, SchemeId::Sym, &u, &ctx, GroupAction::Scaling(s)).unwrap();
            assert!(dev <= 1e-12, "s={s}: {dev}");
        }
    }

    #[test]
    fn equivariance_check_rejects_linear_equations() {
        let g = Grid1D::new(0.0, 0.1, 8).unwrap();
        let ctx = StepContext::new(g, PdeParams::default(), 1e-3, 0.0, &zero_bc);
        assert!(invariantize_check(Pde::Ade1d, SchemeId::Sym, &[1.0; 8], &ctx, GroupAction::Identity).is_err());
    }
}

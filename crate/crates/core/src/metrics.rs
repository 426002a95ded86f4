//! Error norms and the experiment harness: single runs against the exact
//! solution, grid-refinement studies and the Galilean-boost comparison.

use std::time::Instant;

use log::warn;
use rayon::prelude::*;

use crate::analytic::{ade1d_exact, ade2d_exact, ibe_exact, vbe_exact, PdeParams};
use crate::error::{Error, Result};
use crate::grid::{Field2D, Grid1D, Grid2D};
use crate::schemes::{step_1d, step_2d, Pde, SchemeId, StepContext, StepContext2D};

/// Root-mean-square of `numeric - exact` over all nodes.
pub fn rmse(numeric: &[f64], exact: &[f64]) -> Result<f64> {
    check_len(numeric, exact)?;
    if numeric.is_empty() {
        return Ok(0.0);
    }
    let sum: f64 = numeric.iter().zip(exact).map(|(a, b)| (a - b) * (a - b)).sum();
    Ok((sum / numeric.len() as f64).sqrt())
}

/// Max-norm of `numeric - exact`.
pub fn linf(numeric: &[f64], exact: &[f64]) -> Result<f64> {
    check_len(numeric, exact)?;
    Ok(numeric
        .iter()
        .zip(exact)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max))
}

fn check_len(a: &[f64], b: &[f64]) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::shape(a.len(), b.len()));
    }
    Ok(())
}

/// Ordinary least-squares slope of `log e` against `log h`.
///
/// Returns NaN for fewer than two points or a degenerate set of spacings.
pub fn fit_slope(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(h, e)| (h.ln(), e.ln())).collect();
    let n = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    sxy / sxx
}

/// Number of steps `t_final / tau`, which must be whole to within 1e-9.
pub fn step_count(t_final: f64, tau: f64) -> Result<usize> {
    if tau <= 0.0 || !tau.is_finite() {
        return Err(Error::config("tau", "must be positive and finite"));
    }
    if t_final < 0.0 || !t_final.is_finite() {
        return Err(Error::config("t_final", "must be non-negative and finite"));
    }
    let ratio = t_final / tau;
    let steps = ratio.round();
    if (ratio - steps).abs() > 1e-9 * steps.max(1.0) {
        return Err(Error::StepCountMismatch { ratio });
    }
    Ok(steps as usize)
}

/// Spatial mesh of an experiment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GridSpec {
    Line { lo: f64, hi: f64, n: usize },
    Plane { x: (f64, f64), y: (f64, f64), nx: usize, ny: usize },
}

impl GridSpec {
    /// Same domain with `n` nodes per axis.
    pub fn with_nodes(self, n: usize) -> Self {
        match self {
            GridSpec::Line { lo, hi, .. } => GridSpec::Line { lo, hi, n },
            GridSpec::Plane { x, y, .. } => GridSpec::Plane { x, y, nx: n, ny: n },
        }
    }

    pub fn spacing(&self) -> f64 {
        match *self {
            GridSpec::Line { lo, hi, n } => (hi - lo) / (n as f64 - 1.0),
            GridSpec::Plane { x, nx, .. } => (x.1 - x.0) / (nx as f64 - 1.0),
        }
    }
}

/// One (equation, scheme, mesh, time step) configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Experiment {
    pub pde: Pde,
    pub scheme: SchemeId,
    pub grid: GridSpec,
    pub tau: f64,
    pub t_final: f64,
    pub params: PdeParams,
    /// Galilean boost applied to the Burgers data; the mesh moves with it.
    pub galilean_c: f64,
}

impl Experiment {
    /// Inviscid Burgers pulse on [-3, 3], 31 nodes, to t = 0.5.
    pub fn ibe_table(scheme: SchemeId) -> Self {
        Self {
            pde: Pde::Ibe,
            scheme,
            grid: GridSpec::Line { lo: -3.0, hi: 3.0, n: 31 },
            tau: 1e-3,
            t_final: 0.5,
            params: PdeParams::default(),
            galilean_c: 0.0,
        }
    }

    /// Advected Gaussian on [-2, 4], 31 nodes, to t = 1.
    pub fn ade1d_table(scheme: SchemeId) -> Self {
        Self {
            pde: Pde::Ade1d,
            grid: GridSpec::Line { lo: -2.0, hi: 4.0, n: 31 },
            t_final: 1.0,
            ..Self::ibe_table(scheme)
        }
    }

    /// Viscous Burgers sawtooth on [0, 2 pi], 101 nodes, to t = 0.25.
    pub fn vbe_table(scheme: SchemeId) -> Self {
        Self {
            pde: Pde::Vbe,
            grid: GridSpec::Line {
                lo: 0.0,
                hi: 2.0 * std::f64::consts::PI,
                n: 101,
            },
            tau: 1e-4,
            t_final: 0.25,
            params: PdeParams {
                nu: 1.0 / 12.0,
                ..Default::default()
            },
            ..Self::ibe_table(scheme)
        }
    }

    /// 2D Gaussian on [-2.4, 2.4]^2 with h = 0.16, to t = 0.1.
    pub fn ade2d_table(scheme: SchemeId) -> Self {
        Self {
            pde: Pde::Ade2d,
            grid: GridSpec::Plane {
                x: (-2.4, 2.4),
                y: (-2.4, 2.4),
                nx: 31,
                ny: 31,
            },
            tau: 1e-4,
            t_final: 0.1,
            ..Self::ibe_table(scheme)
        }
    }

    /// Default configuration of each equation.
    pub fn table(pde: Pde, scheme: SchemeId) -> Self {
        match pde {
            Pde::Ibe => Self::ibe_table(scheme),
            Pde::Ade1d => Self::ade1d_table(scheme),
            Pde::Vbe => Self::vbe_table(scheme),
            Pde::Ade2d => Self::ade2d_table(scheme),
        }
    }

    /// Node counts for refinement studies at `tau = 1e-5`: fine enough to be
    /// asymptotic, coarse enough that the spatial error stays above the
    /// forward-Euler time error.
    pub fn convergence_sizes(pde: Pde) -> &'static [usize] {
        match pde {
            Pde::Ibe => &[161, 241, 321, 481],
            Pde::Ade1d => &[31, 41, 51],
            Pde::Vbe => &[101, 141, 201],
            Pde::Ade2d => &[21, 31, 41],
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.pde.supports(self.scheme) {
            return Err(Error::config(
                "scheme",
                format!("{} is not available for {}", self.scheme, self.pde),
            ));
        }
        self.params.validate()?;
        if !self.galilean_c.is_finite() {
            return Err(Error::config("galilean_c", "must be finite"));
        }
        if self.galilean_c != 0.0 && !matches!(self.pde, Pde::Ibe | Pde::Vbe) {
            return Err(Error::config(
                "galilean_c",
                "Galilean boosts apply to the Burgers equations only",
            ));
        }
        match (self.pde.is_2d(), self.grid) {
            (false, GridSpec::Line { .. }) | (true, GridSpec::Plane { .. }) => {}
            _ => return Err(Error::config("domain", "dimension does not match the equation")),
        }
        if self.pde == Pde::Ibe {
            let tb = crate::analytic::ibe_breaking_time(self.params.sigma);
            if self.t_final >= tb {
                return Err(Error::PostBreakingTime {
                    t: self.t_final,
                    breaking: tb,
                });
            }
        }
        step_count(self.t_final, self.tau)?;
        Ok(())
    }
}

/// Outcome of one run.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorReport {
    pub scheme: SchemeId,
    pub pde: Pde,
    pub nx: usize,
    /// Second axis for 2D runs.
    pub ny: Option<usize>,
    pub h: f64,
    pub tau: f64,
    pub t_final: f64,
    pub rmse: f64,
    pub linf: f64,
    /// Seconds.
    pub wall_time: f64,
}

impl ErrorReport {
    /// Node count label, `nx` or `nxxny`.
    pub fn size_label(&self) -> String {
        match self.ny {
            Some(ny) => format!("{}x{}", self.nx, ny),
            None => self.nx.to_string(),
        }
    }
}

/// Final numerical and exact fields of a run.
#[derive(Debug, Clone, PartialEq)]
pub enum Solution {
    Line {
        /// Mesh at the final time (moved by the Galilean boost, if any).
        grid: Grid1D,
        numeric: Vec<f64>,
        exact: Vec<f64>,
    },
    Plane {
        grid: Grid2D,
        numeric: Field2D,
        exact: Field2D,
    },
}

impl Solution {
    pub fn numeric(&self) -> &[f64] {
        match self {
            Solution::Line { numeric, .. } => numeric,
            Solution::Plane { numeric, .. } => &numeric.values,
        }
    }

    pub fn exact(&self) -> &[f64] {
        match self {
            Solution::Line { exact, .. } => exact,
            Solution::Plane { exact, .. } => &exact.values,
        }
    }
}

type Exact1D = Box<dyn Fn(f64, f64) -> Result<f64> + Sync>;

fn exact_1d(pde: Pde, p: PdeParams, c: f64) -> Exact1D {
    let base: Exact1D = match pde {
        Pde::Ibe => Box::new(move |t, x| ibe_exact(t, x, p.sigma)),
        Pde::Ade1d => Box::new(move |t, x| Ok(ade1d_exact(t, x, &p))),
        Pde::Vbe => Box::new(move |t, x| Ok(vbe_exact(t, x, p.nu))),
        Pde::Ade2d => unreachable!("2D equation in 1D harness"),
    };
    if c == 0.0 {
        base
    } else {
        Box::new(move |t, x| Ok(base(t, x - c * t)? + c))
    }
}

/// Evolve an experiment and return the final fields with its report.
pub fn simulate(exp: &Experiment) -> Result<(Solution, ErrorReport)> {
    exp.validate()?;
    let steps = step_count(exp.t_final, exp.tau)?;
    let start = Instant::now();
    let (solution, nx, ny, h) = match exp.grid {
        GridSpec::Line { lo, hi, n } => {
            let base = Grid1D::from_domain(lo, hi, n)?;
            let c = exp.galilean_c;
            let exact = exact_1d(exp.pde, exp.params, c);
            let mut u = base
                .nodes()
                .iter()
                .map(|&x| exact(0.0, x))
                .collect::<Result<Vec<f64>>>()?;
            let ctx0 = StepContext::new(base, exp.params, exp.tau, 0.0, &*exact);
            if let Some(w) = ctx0.stability_warning(exp.pde) {
                warn!("{} {} n={}: {w}", exp.pde, exp.scheme, n);
            }
            for k in 0..steps {
                let t = k as f64 * exp.tau;
                let ctx = StepContext::new(base.shifted(c * t), exp.params, exp.tau, t, &*exact)
                    .with_mesh_velocity(c);
                u = step_1d(exp.pde, exp.scheme, &u, &ctx)?;
            }
            let t_end = steps as f64 * exp.tau;
            let grid = base.shifted(c * t_end);
            let reference = grid
                .nodes()
                .iter()
                .map(|&x| exact(t_end, x))
                .collect::<Result<Vec<f64>>>()?;
            (
                Solution::Line {
                    grid,
                    numeric: u,
                    exact: reference,
                },
                n,
                None,
                base.h,
            )
        }
        GridSpec::Plane { x, y, nx, ny } => {
            let grid = Grid2D::from_domain(x, y, nx, ny)?;
            let p = exp.params;
            let exact = move |t: f64, x: f64, y: f64| Ok(ade2d_exact(t, x, y, &p));
            let mut u = grid.sample(|x, y| ade2d_exact(0.0, x, y, &p));
            let ctx0 = StepContext2D::new(grid, p, exp.tau, 0.0, &exact);
            if let Some(w) = ctx0.stability_warning() {
                warn!("{} {} n={nx}x{ny}: {w}", exp.pde, exp.scheme);
            }
            for k in 0..steps {
                let t = k as f64 * exp.tau;
                let ctx = StepContext2D::new(grid, p, exp.tau, t, &exact);
                u = step_2d(exp.scheme, &u, &ctx)?;
            }
            let t_end = steps as f64 * exp.tau;
            let reference = grid.sample(|x, y| ade2d_exact(t_end, x, y, &p));
            (
                Solution::Plane {
                    grid,
                    numeric: u,
                    exact: reference,
                },
                nx,
                Some(ny),
                grid.hx,
            )
        }
    };
    let wall_time = start.elapsed().as_secs_f64();
    let report = ErrorReport {
        scheme: exp.scheme,
        pde: exp.pde,
        nx,
        ny,
        h,
        tau: exp.tau,
        t_final: exp.t_final,
        rmse: rmse(solution.numeric(), solution.exact())?,
        linf: linf(solution.numeric(), solution.exact())?,
        wall_time,
    };
    Ok((solution, report))
}

/// Evolve an experiment and measure its error at the final time.
pub fn run_experiment(exp: &Experiment) -> Result<ErrorReport> {
    simulate(exp).map(|(_, r)| r)
}

/// One grid of a refinement study.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub n: usize,
    pub h: f64,
    pub linf: f64,
}

/// Max-norm errors over a sequence of grids and their fitted order.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceTable {
    pub scheme: SchemeId,
    pub pde: Pde,
    /// Sorted by increasing node count.
    pub rows: Vec<ConvergenceRow>,
    pub slope: f64,
}

impl ConvergenceTable {
    /// Build from rows in any order; requires at least three distinct sizes.
    pub fn from_rows(pde: Pde, scheme: SchemeId, mut rows: Vec<ConvergenceRow>) -> Result<Self> {
        rows.sort_by_key(|r| r.n);
        if rows.len() < 3 {
            return Err(Error::config("sizes", "at least three grid sizes are required"));
        }
        if rows.windows(2).any(|w| w[0].n == w[1].n) {
            return Err(Error::config("sizes", "grid sizes must be distinct"));
        }
        let pts: Vec<(f64, f64)> = rows.iter().map(|r| (r.h, r.linf)).collect();
        Ok(Self {
            scheme,
            pde,
            slope: fit_slope(&pts),
            rows,
        })
    }
}

/// Run `base` on each node count (in parallel) and fit the convergence order.
///
/// The slope is the order `p` in `L_inf ~ h^p`.
pub fn convergence_study(base: &Experiment, sizes: &[usize]) -> Result<ConvergenceTable> {
    if sizes.len() < 3 {
        return Err(Error::config("sizes", "at least three grid sizes are required"));
    }
    let rows = sizes
        .par_iter()
        .map(|&n| {
            let exp = Experiment {
                grid: base.grid.with_nodes(n),
                ..*base
            };
            let r = run_experiment(&exp)?;
            Ok(ConvergenceRow {
                n,
                h: r.h,
                linf: r.linf,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    ConvergenceTable::from_rows(base.pde, base.scheme, rows)
}

/// One cell of the Galilean comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct GalileanRow {
    pub c: f64,
    pub report: ErrorReport,
}

/// Evolve the boosted problem for every `(c, scheme)` pair.
///
/// The boosted data `u + c` live on the image mesh `x + c t`, which moves
/// with speed `c`; errors are measured against the boosted exact solution.
pub fn galilean_experiment(
    base: &Experiment,
    c_values: &[f64],
    schemes: &[SchemeId],
) -> Result<Vec<GalileanRow>> {
    let cells: Vec<(f64, SchemeId)> = c_values
        .iter()
        .flat_map(|&c| schemes.iter().map(move |&s| (c, s)))
        .collect();
    cells
        .par_iter()
        .map(|&(c, scheme)| {
            let exp = Experiment {
                scheme,
                galilean_c: c,
                ..*base
            };
            Ok(GalileanRow {
                c,
                report: run_experiment(&exp)?,
            })
        })
        .collect()
}

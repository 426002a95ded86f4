//! Run configuration (flat `key=value` text plus overrides) and the commands
//! driven by the `invcomp` binary: `run`, `converge`, `galilean`, `selftest`.
//!
//! Recognised keys:
//!
//! | key | meaning |
//! |---|---|
//! | `pde` | `ibe`, `ade1d`, `vbe` or `ade2d` (selects the defaults below) |
//! | `scheme` | `ftcs`, `comp`, `sym`, `sym1`, `sym2` |
//! | `schemes` | comma list for `converge` and `galilean` |
//! | `domain`, `domain_y` | `lo,hi` |
//! | `n`, `ny` | node counts |
//! | `tau`, `t_final` | time step and final time |
//! | `alpha`, `beta`, `nu`, `sigma`, `L` | physical constants |
//! | `galilean_c` | boost applied by `run` |
//! | `c_values`, `sizes` | comma lists for `galilean` and `converge` |
//! | `output_path` | CSV destination |

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::analytic::PdeParams;
use crate::error::{Error, Result};
use crate::metrics::{
    convergence_study, galilean_experiment, simulate, ConvergenceTable, ErrorReport, Experiment,
    GalileanRow, GridSpec, Solution,
};
use crate::schemes::{Pde, SchemeId};

/// Time step used by `converge` unless `tau` is given explicitly.
pub const CONVERGENCE_TAU: f64 = 1e-5;

/// Parsed configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub experiment: Experiment,
    /// Schemes for multi-scheme commands.
    pub schemes: Vec<SchemeId>,
    pub sizes: Vec<usize>,
    pub c_values: Vec<f64>,
    pub output_path: PathBuf,
    /// Whether `tau` was set explicitly.
    pub tau_given: bool,
}

impl RunConfig {
    /// Defaults for one equation.
    pub fn defaults(pde: Pde) -> Self {
        let scheme = if pde.is_2d() { SchemeId::Sym2 } else { SchemeId::Sym };
        Self {
            experiment: Experiment::table(pde, scheme),
            schemes: pde.schemes().to_vec(),
            sizes: Experiment::convergence_sizes(pde).to_vec(),
            c_values: vec![0.0, 0.5, 1.0],
            output_path: PathBuf::from(format!("{pde}.csv")),
            tau_given: false,
        }
    }

    /// Build from ordered pairs; a later pair overrides an earlier one.
    pub fn from_pairs<I, K, V>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (K, V)>,
        K: AsRef<str>,
        V: AsRef<str>,
    {
        let pairs: Vec<(String, String)> = pairs
            .into_iter()
            .map(|(k, v)| (k.as_ref().trim().to_string(), v.as_ref().trim().to_string()))
            .collect();
        let pde = match pairs.iter().rev().find(|(k, _)| k == "pde") {
            Some((_, v)) => v.parse()?,
            None => Pde::Ibe,
        };
        let mut cfg = Self::defaults(pde);
        let mut ny_given = false;
        let mut domain_y_given = false;
        for (key, value) in &pairs {
            cfg.apply(key, value)?;
            ny_given |= key == "ny";
            domain_y_given |= key == "domain_y";
        }
        // a square mesh unless the y axis is given separately
        if let GridSpec::Plane { x, y, nx, ny } = &mut cfg.experiment.grid {
            if !ny_given {
                *ny = *nx;
            }
            if !domain_y_given {
                *y = *x;
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    /// Read a config file and apply `key=value` overrides after it.
    pub fn load(path: Option<&Path>, overrides: &[String]) -> Result<Self> {
        let mut pairs = match path {
            Some(p) => parse_config_text(&fs::read_to_string(p)?)?,
            None => Vec::new(),
        };
        for o in overrides {
            pairs.push(parse_pair(o)?);
        }
        Self::from_pairs(pairs)
    }

    fn apply(&mut self, key: &str, value: &str) -> Result<()> {
        let e = &mut self.experiment;
        match key {
            "pde" => {}
            "scheme" => e.scheme = value.parse()?,
            "schemes" => {
                self.schemes = split(value)
                    .map(str::parse)
                    .collect::<Result<Vec<SchemeId>>>()?
            }
            "domain" => {
                let d = parse_range(key, value)?;
                match &mut e.grid {
                    GridSpec::Line { lo, hi, .. } => (*lo, *hi) = d,
                    GridSpec::Plane { x, .. } => *x = d,
                }
            }
            "domain_y" => match &mut e.grid {
                GridSpec::Plane { y, .. } => *y = parse_range(key, value)?,
                GridSpec::Line { .. } => return Err(Error::config(key, "only valid for ade2d")),
            },
            "n" => {
                let v = parse_usize(key, value)?;
                match &mut e.grid {
                    GridSpec::Line { n, .. } => *n = v,
                    GridSpec::Plane { nx, .. } => *nx = v,
                }
            }
            "ny" => match &mut e.grid {
                GridSpec::Plane { ny, .. } => *ny = parse_usize(key, value)?,
                GridSpec::Line { .. } => return Err(Error::config(key, "only valid for ade2d")),
            },
            "tau" => {
                e.tau = parse_f64(key, value)?;
                self.tau_given = true;
            }
            "t_final" => e.t_final = parse_f64(key, value)?,
            "alpha" => e.params.alpha = parse_f64(key, value)?,
            "beta" => e.params.beta = parse_f64(key, value)?,
            "nu" => e.params.nu = parse_f64(key, value)?,
            "sigma" => e.params.sigma = parse_f64(key, value)?,
            "L" | "l" => e.params.l = parse_f64(key, value)?,
            "galilean_c" => e.galilean_c = parse_f64(key, value)?,
            "c_values" => {
                self.c_values = split(value)
                    .map(|v| parse_f64(key, v))
                    .collect::<Result<_>>()?
            }
            "sizes" => {
                self.sizes = split(value)
                    .map(|v| parse_usize(key, v))
                    .collect::<Result<_>>()?
            }
            "output_path" => self.output_path = PathBuf::from(value),
            other => return Err(Error::config(other, "unknown key")),
        }
        Ok(())
    }

    fn validate(&self) -> Result<()> {
        let e = &self.experiment;
        for (name, v) in [("tau", e.tau), ("t_final", e.t_final)] {
            if !v.is_finite() {
                return Err(Error::config(name, "must be finite"));
            }
        }
        let nodes = match e.grid {
            GridSpec::Line { lo, hi, n } => {
                check_range("domain", lo, hi)?;
                vec![("n", n)]
            }
            GridSpec::Plane { x, y, nx, ny } => {
                check_range("domain", x.0, x.1)?;
                check_range("domain_y", y.0, y.1)?;
                vec![("n", nx), ("ny", ny)]
            }
        };
        for (name, n) in nodes {
            if n < crate::grid::MIN_NODES {
                return Err(Error::config(name, format!("needs at least {} nodes", crate::grid::MIN_NODES)));
            }
        }
        if let Some(s) = self.schemes.iter().find(|s| !e.pde.supports(**s)) {
            return Err(Error::config("schemes", format!("{s} is not available for {}", e.pde)));
        }
        if self.c_values.iter().any(|c| !c.is_finite()) {
            return Err(Error::config("c_values", "must be finite"));
        }
        e.validate()
    }
}

fn split(v: &str) -> impl Iterator<Item = &str> {
    v.split(',').map(str::trim).filter(|s| !s.is_empty())
}

fn parse_f64(key: &str, v: &str) -> Result<f64> {
    let x: f64 = v
        .trim()
        .parse()
        .map_err(|_| Error::config(key, format!("`{v}` is not a number")))?;
    if !x.is_finite() {
        return Err(Error::config(key, "must be finite"));
    }
    Ok(x)
}

fn parse_usize(key: &str, v: &str) -> Result<usize> {
    v.trim()
        .parse()
        .map_err(|_| Error::config(key, format!("`{v}` is not a node count")))
}

fn parse_range(key: &str, v: &str) -> Result<(f64, f64)> {
    let parts: Vec<&str> = split(v).collect();
    if parts.len() != 2 {
        return Err(Error::config(key, "expected `lo,hi`"));
    }
    Ok((parse_f64(key, parts[0])?, parse_f64(key, parts[1])?))
}

fn check_range(key: &str, lo: f64, hi: f64) -> Result<()> {
    if hi <= lo {
        return Err(Error::config(key, "needs lo < hi"));
    }
    Ok(())
}

/// Split one `key=value` item.
pub fn parse_pair(item: &str) -> Result<(String, String)> {
    match item.split_once('=') {
        Some((k, v)) if !k.trim().is_empty() => Ok((k.trim().to_string(), v.trim().to_string())),
        _ => Err(Error::config(item, "expected key=value")),
    }
}

/// Parse config text: one `key=value` per line, `#` starts a comment.
pub fn parse_config_text(text: &str) -> Result<Vec<(String, String)>> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(parse_pair)
        .collect()
}

/// Format a real with 17 significant digits.
pub fn fmt_real(v: f64) -> String {
    format!("{v:.16e}")
}

/// Header of the one-line run summary.
pub const SUMMARY_HEADER: &str = "scheme,pde,n,h,tau,t_final,rmse,linf,wall_time";

/// One-line CSV summary of a run.
pub fn summary_line(r: &ErrorReport) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{}",
        r.scheme,
        r.pde,
        r.size_label(),
        fmt_real(r.h),
        fmt_real(r.tau),
        fmt_real(r.t_final),
        fmt_real(r.rmse),
        fmt_real(r.linf),
        fmt_real(r.wall_time)
    )
}

fn writer(path: &Path) -> Result<csv::Writer<fs::File>> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    Ok(csv::Writer::from_path(path)?)
}

/// Write the final profile: `x[,y],u_numeric,u_exact,error`.
pub fn write_profile(path: &Path, solution: &Solution) -> Result<()> {
    let mut w = writer(path)?;
    match solution {
        Solution::Line {
            grid,
            numeric,
            exact,
        } => {
            w.write_record(["x", "u_numeric", "u_exact", "error"])?;
            for i in 0..grid.n {
                w.write_record([
                    fmt_real(grid.x(i)),
                    fmt_real(numeric[i]),
                    fmt_real(exact[i]),
                    fmt_real(numeric[i] - exact[i]),
                ])?;
            }
        }
        Solution::Plane {
            grid,
            numeric,
            exact,
        } => {
            w.write_record(["x", "y", "u_numeric", "u_exact", "error"])?;
            for i in 0..grid.nx {
                for j in 0..grid.ny {
                    let (a, b) = (numeric[(i, j)], exact[(i, j)]);
                    w.write_record([
                        fmt_real(grid.x(i)),
                        fmt_real(grid.y(j)),
                        fmt_real(a),
                        fmt_real(b),
                        fmt_real(a - b),
                    ])?;
                }
            }
        }
    }
    w.flush()?;
    Ok(())
}

/// `run`: evolve one configuration, write its profile and print the summary.
pub fn cmd_run(cfg: &RunConfig, out: &mut dyn Write) -> Result<ErrorReport> {
    let (solution, report) = simulate(&cfg.experiment)?;
    write_profile(&cfg.output_path, &solution)?;
    writeln!(out, "{SUMMARY_HEADER}")?;
    writeln!(out, "{}", summary_line(&report))?;
    Ok(report)
}

/// `converge`: refinement study per scheme. Writes `scheme,n,h,linf` rows and
/// prints `scheme,pde,slope`.
pub fn cmd_converge(cfg: &RunConfig, out: &mut dyn Write) -> Result<Vec<ConvergenceTable>> {
    if cfg.sizes.len() < 3 {
        return Err(Error::config("sizes", "at least three grid sizes are required"));
    }
    let mut base = cfg.experiment;
    if !cfg.tau_given {
        base.tau = CONVERGENCE_TAU;
    }
    let tables = cfg
        .schemes
        .iter()
        .map(|&scheme| convergence_study(&Experiment { scheme, ..base }, &cfg.sizes))
        .collect::<Result<Vec<_>>>()?;
    let mut w = writer(&cfg.output_path)?;
    w.write_record(["scheme", "n", "h", "linf"])?;
    for t in &tables {
        for r in &t.rows {
            w.write_record([t.scheme.to_string(), r.n.to_string(), fmt_real(r.h), fmt_real(r.linf)])?;
        }
    }
    w.flush()?;
    writeln!(out, "scheme,pde,slope")?;
    for t in &tables {
        writeln!(out, "{},{},{}", t.scheme, t.pde, fmt_real(t.slope))?;
    }
    Ok(tables)
}

/// `galilean`: boosted viscous Burgers runs. Writes and prints
/// `c,scheme,rmse,linf`.
pub fn cmd_galilean(cfg: &RunConfig, out: &mut dyn Write) -> Result<Vec<GalileanRow>> {
    if cfg.experiment.pde != Pde::Vbe {
        return Err(Error::config("pde", "the Galilean experiment uses vbe"));
    }
    if cfg.c_values.is_empty() {
        return Err(Error::config("c_values", "needs at least one value"));
    }
    let rows = galilean_experiment(&cfg.experiment, &cfg.c_values, &cfg.schemes)?;
    let mut w = writer(&cfg.output_path)?;
    let header = ["c", "scheme", "rmse", "linf"];
    w.write_record(header)?;
    writeln!(out, "{}", header.join(","))?;
    for r in &rows {
        let rec = [
            fmt_real(r.c),
            r.report.scheme.to_string(),
            fmt_real(r.report.rmse),
            fmt_real(r.report.linf),
        ];
        writeln!(out, "{}", rec.join(","))?;
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(rows)
}

/// `selftest`: quick built-in checks; prints one PASS/FAIL line each and
/// returns whether all passed.
pub fn cmd_selftest(out: &mut dyn Write) -> Result<bool> {
    let mut all = true;
    for (name, ok) in selftest_checks() {
        let ok = ok.unwrap_or(false);
        all &= ok;
        writeln!(out, "{} {name}", if ok { "PASS" } else { "FAIL" })?;
    }
    Ok(all)
}

type Check = (&'static str, Result<bool>);

fn selftest_checks() -> Vec<Check> {
    use crate::analytic::ibe_exact;
    use crate::compact::{compact_dx, compact_dxx, BoundaryPolicy};
    use crate::grid::Grid1D;
    use crate::metrics::{linf, rmse, run_experiment};
    use crate::schemes::{step_1d, StepContext};
    use crate::tridiag::{solve_tridiagonal, TriDiagSystem};

    let close = |a: &[f64], b: &[f64], tol: f64| a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol);
    vec![
        ("tridiag identity system", (|| {
            let r = vec![1.0, -2.0, 3.5];
            let x = solve_tridiagonal(&TriDiagSystem::new(vec![0.0; 2], vec![1.0; 3], vec![0.0; 2], r.clone())?)?;
            Ok(x == r)
        })()),
        ("tridiag 3x3 dense oracle", (|| {
            let sys = TriDiagSystem::new(vec![1.0, 1.0], vec![2.0; 3], vec![1.0, 1.0], vec![1.0, 2.0, 3.0])?;
            Ok(close(&solve_tridiagonal(&sys)?, &[0.5, 0.0, 1.5], 1e-14))
        })()),
        ("compact dx of linear data", (|| {
            let g = Grid1D::new(-1.0, 0.25, 9)?;
            let d = compact_dx(&g.sample(|x| 3.0 * x - 1.0), &g, BoundaryPolicy::default())?;
            Ok(d.iter().all(|v| (v - 3.0).abs() < 1e-12))
        })()),
        ("compact dxx of quadratic data", (|| {
            let g = Grid1D::new(-1.0, 0.25, 9)?;
            let d = compact_dxx(&g.sample(|x| x * x), &g, BoundaryPolicy::default())?;
            Ok(d.iter().all(|v| (v - 2.0).abs() < 1e-10))
        })()),
        ("norms by hand", (|| {
            Ok((rmse(&[3.0, 4.0], &[0.0, 0.0])? - (12.5f64).sqrt()).abs() < 1e-15
                && linf(&[-5.0, 1.0], &[0.0, 0.0])? == 5.0)
        })()),
        ("inviscid Burgers peak at t=0", (|| {
            Ok((ibe_exact(0.0, 0.0, 0.5)? - 0.7978845608028654).abs() < 1e-12)
        })()),
        ("one-step exactness on u = x", (|| {
            let g = Grid1D::new(-1.0, 0.1, 21)?;
            let tau = 1e-3;
            let bc = move |t: f64, x: f64| Ok(x / (1.0 + t));
            let ctx = StepContext::new(g, PdeParams::default(), tau, 0.0, &bc);
            let u = g.nodes();
            let want: Vec<f64> = u.iter().map(|x| x / (1.0 + tau)).collect();
            let a = step_1d(Pde::Ibe, SchemeId::Sym, &u, &ctx)?;
            let b = step_1d(Pde::Vbe, SchemeId::Sym, &u, &ctx)?;
            Ok(close(&a, &want, 1e-12) && close(&b, &want, 1e-12))
        })()),
        ("zero-step runs are exact", (|| {
            for pde in Pde::ALL {
                for &s in pde.schemes() {
                    let r = run_experiment(&Experiment { t_final: 0.0, ..Experiment::table(pde, s) })?;
                    if r.linf != 0.0 {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        })()),
        ("scheme/equation mismatch rejected", Ok(RunConfig::from_pairs([("pde", "ibe"), ("scheme", "sym1")]).is_err())),
    ]
}

/// Cap the global thread pool from the `THREADS` environment variable.
pub fn configure_threads() -> Result<()> {
    let Ok(v) = std::env::var("THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::config("THREADS", format!("`{v}` is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Error::config("THREADS", e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_parsing_skips_comments_and_blank_lines() {
        let pairs = parse_config_text("# header\npde = vbe\n\nn=51 # fewer nodes\n").unwrap();
        assert_eq!(pairs, vec![("pde".into(), "vbe".into()), ("n".into(), "51".into())]);
        assert!(parse_config_text("just words").is_err());
    }

    #[test]
    fn later_values_override_earlier_ones() {
        let cfg = RunConfig::from_pairs([("pde", "ade1d"), ("n", "41"), ("n", "61"), ("alpha", "0.5")]).unwrap();
        assert_eq!(cfg.experiment.grid, GridSpec::Line { lo: -2.0, hi: 4.0, n: 61 });
        assert_eq!(cfg.experiment.params.alpha, 0.5);
        assert!(!cfg.tau_given);
    }

    #[test]
    fn plane_defaults_to_square_mesh() {
        let cfg = RunConfig::from_pairs([("pde", "ade2d"), ("n", "21"), ("domain", "-1,1")]).unwrap();
        assert_eq!(
            cfg.experiment.grid,
            GridSpec::Plane { x: (-1.0, 1.0), y: (-1.0, 1.0), nx: 21, ny: 21 }
        );
        assert_eq!(cfg.experiment.scheme, SchemeId::Sym2);
    }

    #[test]
    fn invalid_values_name_their_field() {
        let field = |pairs: &[(&str, &str)]| match RunConfig::from_pairs(pairs.iter().copied()) {
            Err(Error::ConfigInvalid { field, .. }) => field,
            other => panic!("{other:?}"),
        };
        assert_eq!(field(&[("pde", "ibe"), ("scheme", "sym1")]), "scheme");
        assert_eq!(field(&[("n", "3")]), "n");
        assert_eq!(field(&[("tau", "abc")]), "tau");
        assert_eq!(field(&[("domain", "1,0")]), "domain");
        assert_eq!(field(&[("colour", "red")]), "colour");
        assert_eq!(field(&[("pde", "vbe"), ("schemes", "ftcs,sym2")]), "schemes");
    }

    #[test]
    fn summary_has_all_columns() {
        let cfg = RunConfig::from_pairs([("t_final", "0")]).unwrap();
        let (_, r) = simulate(&cfg.experiment).unwrap();
        let line = summary_line(&r);
        assert_eq!(line.split(',').count(), SUMMARY_HEADER.split(',').count());
        assert!(line.starts_with("sym,ibe,31,"));
    }

    #[test]
    fn real_format_round_trips() {
        for v in [0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, std::f64::consts::PI] {
            assert_eq!(fmt_real(v).parse::<f64>().unwrap().to_bits(), v.to_bits());
        }
    }

    #[test]
    fn selftest_passes() {
        let mut buf = Vec::new();
        assert!(cmd_selftest(&mut buf).unwrap());
        let text = String::from_utf8(buf).unwrap();
        assert!(text.lines().all(|l| l.starts_with("PASS ")));
    }
}

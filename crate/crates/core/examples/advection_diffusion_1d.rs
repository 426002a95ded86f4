// Advected, spreading Gaussian (nu = 1/60, L = 0.4, alpha = 1) to t = 1.
// The invariant scheme advects exactly in a frame where the curvature term
// vanishes.
//
// ```text
// cargo run --example advection_diffusion_1d
// ```

use invariant_compact::metrics::{run_experiment, Experiment};
use invariant_compact::schemes::{MovingFrame, Pde};
use invariant_compact::Result;

pub fn run() -> Result<()> {
    for &scheme in Pde::Ade1d.schemes() {
        let r = run_experiment(&Experiment::ade1d_table(scheme))?;
        println!("{:<5} rmse {:.3e}  linf {:.3e}", r.scheme, r.rmse, r.linf);
    }
    // frame parameters at the pulse centre and on its flank
    let p = invariant_compact::analytic::PdeParams::default();
    for x in [0.0, 0.8] {
        let u = invariant_compact::analytic::ade1d_exact(0.0, x, &p);
        let w = p.l * p.l;
        let uxx = u * (x * x / (4.0 * w * w) - 1.0 / (2.0 * w));
        let f = MovingFrame::ade1d(u, uxx, p.nu, p.alpha, 1e-3, 0)?;
        println!("x = {x}: s1 = {:+.4}, lambda = {:.6}", f.s1, f.lambda_next);
    }
    Ok(())
}

fn main() -> Result<()> {
    run()
}

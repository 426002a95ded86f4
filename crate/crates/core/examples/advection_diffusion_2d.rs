// 2D Gaussian advected along the diagonal (h = 0.16, tau = 1e-4, t = 0.1)
// with the two invariant variants next to FTCS and the compact scheme.
//
// ```text
// cargo run --release --example advection_diffusion_2d
// ```

use invariant_compact::metrics::{run_experiment, Experiment};
use invariant_compact::schemes::Pde;
use invariant_compact::Result;

pub fn run() -> Result<()> {
    for &scheme in Pde::Ade2d.schemes() {
        let r = run_experiment(&Experiment::ade2d_table(scheme))?;
        println!(
            "{:<5} {}  rmse {:.3e}  linf {:.3e}  {:.2}s",
            r.scheme,
            r.size_label(),
            r.rmse,
            r.linf,
            r.wall_time
        );
    }
    Ok(())
}

fn main() -> Result<()> {
    run()
}

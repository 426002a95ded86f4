// Viscous Burgers shock (nu = 1/12, 101 nodes on [0, 2 pi]) to t = 0.25 at
// two time steps. The invariant scheme carries an extra first-order time
// error proportional to `u u_x^2`, visible at the coarser step.
//
// ```text
// cargo run --release --example viscous_burgers
// ```

use invariant_compact::metrics::{run_experiment, Experiment};
use invariant_compact::schemes::Pde;
use invariant_compact::Result;

pub fn run() -> Result<()> {
    for tau in [1e-4, 1e-5] {
        println!("tau = {tau:e}");
        for &scheme in Pde::Vbe.schemes() {
            let r = run_experiment(&Experiment {
                tau,
                ..Experiment::vbe_table(scheme)
            })?;
            println!("  {:<5} rmse {:.4}  linf {:.4}", r.scheme, r.rmse, r.linf);
        }
    }
    Ok(())
}

fn main() -> Result<()> {
    run()
}

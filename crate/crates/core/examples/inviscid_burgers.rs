// Gaussian pulse under inviscid Burgers up to t = 0.5 (h = 0.2, tau = 1e-3),
// comparing FTCS, compact and invariant schemes against the implicit exact
// solution.
//
// ```text
// cargo run --example inviscid_burgers
// ```

use invariant_compact::analytic::ibe_breaking_time;
use invariant_compact::metrics::{simulate, Experiment, Solution};
use invariant_compact::schemes::{Pde, SchemeId};
use invariant_compact::Result;

pub fn run() -> Result<()> {
    println!("wave breaks at t = {:.4}", ibe_breaking_time(0.5));
    for &scheme in Pde::Ibe.schemes() {
        let (sol, r) = simulate(&Experiment::ibe_table(scheme))?;
        println!("{:<5} rmse {:.3e}  linf {:.3e}", r.scheme, r.rmse, r.linf);
        if scheme == SchemeId::Sym {
            if let Solution::Line { grid, numeric, exact } = sol {
                for i in (10..=20).step_by(2) {
                    println!("  x={:+.1}  u={:.6}  exact={:.6}", grid.x(i), numeric[i], exact[i]);
                }
            }
        }
    }
    Ok(())
}

fn main() -> Result<()> {
    run()
}

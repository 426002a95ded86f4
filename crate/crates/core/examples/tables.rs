// All four error tables: every scheme on each equation's default
// configuration.
//
// ```text
// cargo run --release --example tables
// ```

use invariant_compact::metrics::{run_experiment, Experiment};
use invariant_compact::schemes::Pde;
use invariant_compact::Result;

pub fn run() -> Result<()> {
    println!("{:<6} {:<5} {:>6} {:>11} {:>11}", "pde", "", "n", "rmse", "linf");
    for pde in Pde::ALL {
        for &scheme in pde.schemes() {
            let r = run_experiment(&Experiment::table(pde, scheme))?;
            println!("{:<6} {:<5} {:>6} {:>11.3e} {:>11.3e}", r.pde, r.scheme, r.size_label(), r.rmse, r.linf);
        }
    }
    Ok(())
}

fn main() -> Result<()> {
    run()
}

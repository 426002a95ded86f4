// Boosted viscous Burgers runs: data `u + c` on the mesh `x + c t`.
// The invariant scheme returns the same error for every `c`; FTCS and the
// compact scheme degrade as the boost grows.
//
// ```text
// cargo run --release --example galilean
// ```

use invariant_compact::metrics::{galilean_experiment, Experiment};
use invariant_compact::schemes::{Pde, SchemeId};
use invariant_compact::Result;

pub fn run() -> Result<()> {
    let base = Experiment::vbe_table(SchemeId::Sym);
    let rows = galilean_experiment(&base, &[0.0, 0.5, 1.0], Pde::Vbe.schemes())?;
    println!("{:>4} {:<5} {:>12} {:>12}", "c", "", "rmse", "linf");
    for r in rows {
        println!("{:>4} {:<5} {:>12.6e} {:>12.6e}", r.c, r.report.scheme, r.report.rmse, r.report.linf);
    }
    Ok(())
}

fn main() -> Result<()> {
    run()
}

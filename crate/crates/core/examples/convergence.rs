// Grid-refinement study for every equation and scheme at tau = 1e-5.
//
// ```text
// cargo run --release --example convergence
// cargo run --release --example convergence -- ibe
// ```

use invariant_compact::metrics::{convergence_study, Experiment};
use invariant_compact::schemes::Pde;
use invariant_compact::Result;

pub fn study(pde: Pde) -> Result<()> {
    for &scheme in pde.schemes() {
        let base = Experiment {
            tau: 1e-5,
            ..Experiment::table(pde, scheme)
        };
        let t = convergence_study(&base, Experiment::convergence_sizes(pde))?;
        let errs: Vec<String> = t.rows.iter().map(|r| format!("{}:{:.2e}", r.n, r.linf)).collect();
        println!("{pde:<6}{scheme:<5} order {:.2}   {}", t.slope, errs.join(" "));
    }
    Ok(())
}

pub fn run() -> Result<()> {
    study(Pde::Ibe)
}

fn main() -> Result<()> {
    match std::env::args().nth(1) {
        Some(name) => study(name.parse()?),
        None => Pde::ALL.into_iter().try_for_each(study),
    }
}

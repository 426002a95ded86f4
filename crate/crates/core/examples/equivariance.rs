// Numerical equivariance: step the transformed data and compare with the
// transformed step. Invariant schemes agree to rounding; the baselines do
// not.
//
// ```text
// cargo run --example equivariance
// ```

use invariant_compact::analytic::{ibe_exact, vbe_exact, PdeParams};
use invariant_compact::schemes::{invariantize_check, GroupAction, Pde, StepContext};
use invariant_compact::{Grid1D, Result};

pub fn run() -> Result<()> {
    let nu = 1.0 / 12.0;
    let g = Grid1D::from_domain(0.0, 2.0 * std::f64::consts::PI, 101)?;
    let u = g.sample(|x| vbe_exact(0.1, x, nu));
    let bc = move |t: f64, x: f64| Ok(vbe_exact(t, x, nu));
    let params = PdeParams { nu, ..Default::default() };
    let ctx = StepContext::new(g, params, 1e-4, 0.1, &bc);
    for &s in Pde::Vbe.schemes() {
        let d = invariantize_check(Pde::Vbe, s, &u, &ctx, GroupAction::Galilean(1.0))?;
        println!("vbe {s:<5} galilean c=1     deviation {d:.2e}");
    }

    let g = Grid1D::from_domain(-3.0, 3.0, 31)?;
    let u = g.nodes().iter().map(|&x| ibe_exact(0.3, x, 0.5)).collect::<Result<Vec<_>>>()?;
    let bc = |t: f64, x: f64| ibe_exact(t, x, 0.5);
    let ctx = StepContext::new(g, PdeParams::default(), 1e-3, 0.3, &bc);
    for &s in Pde::Ibe.schemes() {
        let d = invariantize_check(Pde::Ibe, s, &u, &ctx, GroupAction::Scaling(0.5))?;
        println!("ibe {s:<5} scaling s=0.5    deviation {d:.2e}");
    }
    Ok(())
}

fn main() -> Result<()> {
    run()
}

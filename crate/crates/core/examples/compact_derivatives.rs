// Fourth-order compact derivatives of `sin x` and their refinement order.
//
// ```text
// cargo run --example compact_derivatives
// ```

use std::f64::consts::PI;

use invariant_compact::compact::{compact_dx, compact_dxx, BoundaryPolicy};
use invariant_compact::metrics::fit_slope;
use invariant_compact::{Grid1D, Result};

pub fn run() -> Result<()> {
    let mut d1 = Vec::new();
    let mut d2 = Vec::new();
    println!("{:>5} {:>10} {:>12} {:>12}", "n", "h", "err u_x", "err u_xx");
    for n in [21, 41, 81, 161] {
        let g = Grid1D::from_domain(0.0, 2.0 * PI, n)?;
        let u = g.sample(f64::sin);
        let ux = compact_dx(&u, &g, BoundaryPolicy::OneSidedThirdOrder)?;
        let uxx = compact_dxx(&u, &g, BoundaryPolicy::ExactDerivative { left: 0.0, right: 0.0 })?;
        let e1 = (0..n).map(|i| (ux[i] - g.x(i).cos()).abs()).fold(0.0, f64::max);
        let e2 = (0..n).map(|i| (uxx[i] + g.x(i).sin()).abs()).fold(0.0, f64::max);
        println!("{n:>5} {:>10.5} {e1:>12.3e} {e2:>12.3e}", g.h);
        d1.push((g.h, e1));
        d2.push((g.h, e2));
    }
    println!("order: u_x {:.2}, u_xx {:.2}", fit_slope(&d1), fit_slope(&d2));
    Ok(())
}

fn main() -> Result<()> {
    run()
}

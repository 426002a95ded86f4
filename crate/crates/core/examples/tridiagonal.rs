// Solve the compact first-derivative system by hand and check its residual.
//
// ```text
// cargo run --example tridiagonal
// ```

use invariant_compact::tridiag::{solve_tridiagonal, TriDiagSystem};
use invariant_compact::Result;

pub fn run() -> Result<()> {
    // (1/6, 2/3, 1/6) rows for u = x^2 on x = 0, 0.25, ..., 1 with exact ends
    let h = 0.25;
    let u: Vec<f64> = (0..5).map(|i| (i as f64 * h).powi(2)).collect();
    let mut rhs = vec![0.0; 5];
    rhs[0] = 0.0;
    rhs[4] = 2.0;
    for i in 1..4 {
        rhs[i] = (u[i + 1] - u[i - 1]) / (2.0 * h);
    }
    let lower = vec![1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0, 0.0];
    let upper = vec![0.0, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0];
    let diag = vec![1.0, 2.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0, 1.0];
    let sys = TriDiagSystem::new(lower, diag, upper, rhs)?;
    let du = solve_tridiagonal(&sys)?;
    for (i, d) in du.iter().enumerate() {
        println!("x = {:.2}  u' = {d:.15}  exact {:.2}", i as f64 * h, 2.0 * i as f64 * h);
    }
    println!("residual {:.1e}", sys.residual_max(&du));
    Ok(())
}

fn main() -> Result<()> {
    run()
}

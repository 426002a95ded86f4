//! Uniform meshes and node-indexed fields.

use crate::error::{Error, Result};

/// Minimum node count per axis: the boundary closures touch four nodes and
/// at least one interior row is needed between them.
pub const MIN_NODES: usize = 5;

/// Uniform 1D mesh `x_i = x0 + i h`, `i = 0..n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    pub x0: f64,
    pub h: f64,
    pub n: usize,
}

impl Grid1D {
    pub fn new(x0: f64, h: f64, n: usize) -> Result<Self> {
        if h <= 0.0 || !h.is_finite() || !x0.is_finite() {
            return Err(Error::InvalidGrid(format!("spacing must be positive, got h={h}")));
        }
        if n < MIN_NODES {
            return Err(Error::InvalidGrid(format!("need at least {MIN_NODES} nodes, got {n}")));
        }
        Ok(Self { x0, h, n })
    }

    /// `n` nodes spanning `[lo, hi]` inclusive.
    pub fn from_domain(lo: f64, hi: f64, n: usize) -> Result<Self> {
        if n < MIN_NODES {
            return Err(Error::InvalidGrid(format!("need at least {MIN_NODES} nodes, got {n}")));
        }
        if hi <= lo || hi.is_nan() || lo.is_nan() {
            return Err(Error::InvalidGrid(format!("empty domain [{lo}, {hi}]")));
        }
        Self::new(lo, (hi - lo) / (n - 1) as f64, n)
    }

    #[inline]
    pub fn x(&self, i: usize) -> f64 {
        self.x0 + i as f64 * self.h
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.x(i)).collect()
    }

    /// Same spacing and size, origin moved by `dx`.
    pub fn shifted(&self, dx: f64) -> Self {
        Self {
            x0: self.x0 + dx,
            ..*self
        }
    }

    pub fn sample(&self, f: impl Fn(f64) -> f64) -> Vec<f64> {
        (0..self.n).map(|i| f(self.x(i))).collect()
    }

    pub(crate) fn check_field(&self, u: &[f64]) -> Result<()> {
        if u.len() != self.n {
            return Err(Error::shape(format!("{} nodes", self.n), format!("{} values", u.len())));
        }
        Ok(())
    }
}

/// Uniform tensor-product 2D mesh.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid2D {
    pub x0: f64,
    pub y0: f64,
    pub hx: f64,
    pub hy: f64,
    pub nx: usize,
    pub ny: usize,
}

impl Grid2D {
    pub fn new(x0: f64, y0: f64, hx: f64, hy: f64, nx: usize, ny: usize) -> Result<Self> {
        let gx = Grid1D::new(x0, hx, nx)?;
        let gy = Grid1D::new(y0, hy, ny)?;
        Ok(Self::from_axes(gx, gy))
    }

    pub fn from_domain(x: (f64, f64), y: (f64, f64), nx: usize, ny: usize) -> Result<Self> {
        let gx = Grid1D::from_domain(x.0, x.1, nx)?;
        let gy = Grid1D::from_domain(y.0, y.1, ny)?;
        Ok(Self::from_axes(gx, gy))
    }

    pub fn from_axes(gx: Grid1D, gy: Grid1D) -> Self {
        Self {
            x0: gx.x0,
            y0: gy.x0,
            hx: gx.h,
            hy: gy.h,
            nx: gx.n,
            ny: gy.n,
        }
    }

    pub fn x_axis(&self) -> Grid1D {
        Grid1D {
            x0: self.x0,
            h: self.hx,
            n: self.nx,
        }
    }

    pub fn y_axis(&self) -> Grid1D {
        Grid1D {
            x0: self.y0,
            h: self.hy,
            n: self.ny,
        }
    }

    #[inline]
    pub fn x(&self, i: usize) -> f64 {
        self.x0 + i as f64 * self.hx
    }

    #[inline]
    pub fn y(&self, j: usize) -> f64 {
        self.y0 + j as f64 * self.hy
    }

    pub fn is_boundary(&self, i: usize, j: usize) -> bool {
        i == 0 || j == 0 || i + 1 == self.nx || j + 1 == self.ny
    }

    pub fn sample(&self, f: impl Fn(f64, f64) -> f64) -> Field2D {
        let mut out = Field2D::zeros(self.nx, self.ny);
        for i in 0..self.nx {
            for j in 0..self.ny {
                out[(i, j)] = f(self.x(i), self.y(j));
            }
        }
        out
    }

    pub(crate) fn check_field(&self, u: &Field2D) -> Result<()> {
        if u.nx != self.nx || u.ny != self.ny {
            return Err(Error::shape(
                format!("{}x{} field", self.nx, self.ny),
                format!("{}x{} field", u.nx, u.ny),
            ));
        }
        Ok(())
    }
}

/// Node values on a [`Grid2D`], stored row-major with one row per x-node:
/// entry `(i, j)` lives at `i * ny + j`.
#[derive(Debug, Clone, PartialEq)]
pub struct Field2D {
    pub nx: usize,
    pub ny: usize,
    pub values: Vec<f64>,
}

impl Field2D {
    pub fn zeros(nx: usize, ny: usize) -> Self {
        Self {
            nx,
            ny,
            values: vec![0.0; nx * ny],
        }
    }

    pub fn from_values(nx: usize, ny: usize, values: Vec<f64>) -> Result<Self> {
        if values.len() != nx * ny {
            return Err(Error::shape(format!("{} values", nx * ny), values.len()));
        }
        Ok(Self { nx, ny, values })
    }

    #[inline]
    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.ny + j
    }

    /// Values along x at fixed y-index `j` (strided).
    pub fn x_line(&self, j: usize) -> Vec<f64> {
        (0..self.nx).map(|i| self.values[i * self.ny + j]).collect()
    }

    /// Values along y at fixed x-index `i` (contiguous).
    pub fn y_line(&self, i: usize) -> &[f64] {
        &self.values[i * self.ny..(i + 1) * self.ny]
    }

    pub fn set_x_line(&mut self, j: usize, line: &[f64]) {
        for (i, v) in line.iter().enumerate() {
            self.values[i * self.ny + j] = *v;
        }
    }

    pub fn set_y_line(&mut self, i: usize, line: &[f64]) {
        self.values[i * self.ny..(i + 1) * self.ny].copy_from_slice(line);
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        Self {
            nx: self.nx,
            ny: self.ny,
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }
}

impl std::ops::Index<(usize, usize)> for Field2D {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.values[i * self.ny + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Field2D {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.values[i * self.ny + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn domain_grid_hits_both_ends() {
        let g = Grid1D::from_domain(-3.0, 3.0, 31).unwrap();
        assert!((g.h - 0.2).abs() < 1e-15);
        assert!((g.x(30) - 3.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_degenerate_grids() {
        assert!(Grid1D::new(0.0, 0.0, 10).is_err());
        assert!(Grid1D::new(0.0, -1.0, 10).is_err());
        assert!(Grid1D::new(0.0, 0.1, 4).is_err());
        assert!(Grid1D::from_domain(1.0, 1.0, 10).is_err());
        assert!(Grid2D::new(0.0, 0.0, 0.1, 0.1, 5, 3).is_err());
    }

    #[test]
    fn lines_round_trip() {
        let g = Grid2D::new(0.0, 0.0, 1.0, 1.0, 5, 6).unwrap();
        let mut f = g.sample(|x, y| 10.0 * x + y);
        assert_eq!(f.x_line(2), vec![2.0, 12.0, 22.0, 32.0, 42.0]);
        assert_eq!(f.y_line(1), &[10.0, 11.0, 12.0, 13.0, 14.0, 15.0]);
        f.set_x_line(0, &[0.0; 5]);
        assert_eq!(f[(3, 0)], 0.0);
        assert_eq!(f[(3, 1)], 31.0);
    }
}

//! Sampled boundary functions: the unit circle, the four-branch hyperbolic
//! circle, the real line, and a polar disk grid. Representations act on these
//! by pullback, so each grid comes with cubic resampling.

use crate::clifford::EvenNumber;
use crate::error::{Error, Result};
use num_complex::Complex64;

/// Cubic (Catmull-Rom) interpolation through four equally spaced samples,
/// with `s` in [0,1] between the middle two.
fn catmull_rom(f0: f64, f1: f64, f2: f64, f3: f64, s: f64) -> f64 {
    let a = -0.5 * f0 + 1.5 * f1 - 1.5 * f2 + 0.5 * f3;
    let b = f0 - 2.5 * f1 + 2.0 * f2 - 0.5 * f3;
    let c = -0.5 * f0 + 0.5 * f2;
    ((a * s + b) * s + c) * s + f1
}

fn catmull_rom_c(f: [Complex64; 4], s: f64) -> Complex64 {
    Complex64::new(
        catmull_rom(f[0].re, f[1].re, f[2].re, f[3].re, s),
        catmull_rom(f[0].im, f[1].im, f[2].im, f[3].im, s),
    )
}

fn catmull_rom_e(f: [EvenNumber; 4], s: f64) -> EvenNumber {
    EvenNumber::new(
        catmull_rom(f[0].a1, f[1].a1, f[2].a1, f[3].a1, s),
        catmull_rom(f[0].a2, f[1].a2, f[2].a2, f[3].a2, s),
    )
}

// ---------------------------------------------------------------------------
// Unit circle
// ---------------------------------------------------------------------------

/// Complex-valued function sampled at `phi_j = 2 pi j / n`.
#[derive(Debug, Clone)]
pub struct CircleFunction {
    pub values: Vec<Complex64>,
}

impl CircleFunction {
    pub fn from_fn(n: usize, f: impl Fn(f64) -> Complex64) -> Self {
        assert!(n >= 16, "circle grid needs at least 16 points");
        let values = (0..n).map(|j| f(2.0 * std::f64::consts::PI * j as f64 / n as f64)).collect();
        CircleFunction { values }
    }

    pub fn constant(n: usize, v: Complex64) -> Self {
        CircleFunction { values: vec![v; n] }
    }

    /// `e^{i k phi}` sampled on the grid.
    pub fn harmonic(n: usize, k: i32) -> Self {
        Self::from_fn(n, |phi| Complex64::from_polar(1.0, k as f64 * phi))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn angle(&self, j: usize) -> f64 {
        2.0 * std::f64::consts::PI * j as f64 / self.len() as f64
    }

    /// Periodic cubic interpolation at angle `phi`.
    pub fn eval(&self, phi: f64) -> Complex64 {
        let n = self.len();
        let tau = 2.0 * std::f64::consts::PI;
        let x = (phi.rem_euclid(tau)) / tau * n as f64;
        let j = x.floor() as usize % n;
        let s = x - x.floor();
        let get = |k: isize| self.values[((j as isize + k).rem_euclid(n as isize)) as usize];
        catmull_rom_c([get(-1), get(0), get(1), get(2)], s)
    }

    /// Trapezoid quadrature of `w(phi_j, values_j)` over the full circle.
    pub fn integrate(&self, w: impl Fn(usize, Complex64) -> Complex64) -> Complex64 {
        let h = 2.0 * std::f64::consts::PI / self.len() as f64;
        self.values.iter().enumerate().map(|(j, &v)| w(j, v)).sum::<Complex64>() * h
    }

    /// L2 norm squared with plain Lebesgue measure of total mass 2 pi.
    pub fn norm_sq(&self) -> f64 {
        let h = 2.0 * std::f64::consts::PI / self.len() as f64;
        self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() * h
    }
}

// ---------------------------------------------------------------------------
// Four-branch hyperbolic circle
// ---------------------------------------------------------------------------

/// Even-number-valued function on the conformal unit circle, sampled on a
/// uniform grid `t in [-t_max, t_max]` on each of the four branches.
#[derive(Debug, Clone)]
pub struct TildeBoundary {
    pub branches: [Vec<EvenNumber>; 4],
    pub t_max: f64,
}

impl TildeBoundary {
    pub fn from_fn(n: usize, t_max: f64, f: impl Fn(u8, f64) -> EvenNumber) -> Self {
        assert!(n >= 16, "branch grid needs at least 16 points");
        assert!(t_max > 0.0);
        let grid = |b: u8| -> Vec<EvenNumber> {
            (0..n)
                .map(|j| f(b, -t_max + 2.0 * t_max * j as f64 / (n - 1) as f64))
                .collect()
        };
        TildeBoundary { branches: [grid(0), grid(1), grid(2), grid(3)], t_max }
    }

    pub fn zero(n: usize, t_max: f64) -> Self {
        Self::from_fn(n, t_max, |_, _| EvenNumber::ZERO)
    }

    pub fn n_per_branch(&self) -> usize {
        self.branches[0].len()
    }

    pub fn grid_t(&self, j: usize) -> f64 {
        let n = self.n_per_branch();
        -self.t_max + 2.0 * self.t_max * j as f64 / (n - 1) as f64
    }

    /// Cubic interpolation on one branch; zero beyond the truncation window.
    pub fn eval(&self, branch: u8, t: f64) -> EvenNumber {
        let vals = &self.branches[branch as usize];
        let n = vals.len();
        let edge = 1e-9 * self.t_max.max(1.0);
        if t < -self.t_max - edge || t > self.t_max + edge {
            return EvenNumber::ZERO;
        }
        let t = t.clamp(-self.t_max, self.t_max);
        let x = (t + self.t_max) / (2.0 * self.t_max) * (n - 1) as f64;
        let j = (x.floor() as isize).clamp(0, n as isize - 2);
        let s = x - j as f64;
        let get = |k: isize| {
            let idx = j + k;
            if idx < 0 || idx >= n as isize {
                EvenNumber::ZERO
            } else {
                vals[idx as usize]
            }
        };
        catmull_rom_e([get(-1), get(0), get(1), get(2)], s)
    }

    /// Branchwise trapezoid quadrature of `w(branch, t, f(t))`, summed over
    /// branches.
    pub fn integrate(&self, w: impl Fn(u8, f64, EvenNumber) -> EvenNumber) -> EvenNumber {
        let n = self.n_per_branch();
        let h = 2.0 * self.t_max / (n - 1) as f64;
        let mut acc = EvenNumber::ZERO;
        for b in 0..4u8 {
            for j in 0..n {
                let t = self.grid_t(j);
                let term = w(b, t, self.branches[b as usize][j]);
                let weight = if j == 0 || j == n - 1 { 0.5 } else { 1.0 };
                acc = acc + term * (weight * h);
            }
        }
        acc
    }

    /// Scalar part of the inner product `<f, f>` with the branchwise `dt`
    /// measure, plus the bivector remainder for diagnostics.
    pub fn norm_parts(&self) -> (f64, f64) {
        let total = self.integrate(|_, _, v| v.conj() * v);
        (total.c0(), total.c12())
    }
}

// ---------------------------------------------------------------------------
// Real line
// ---------------------------------------------------------------------------

/// Compactly supported complex function sampled uniformly on `[-x_max, x_max]`.
#[derive(Debug, Clone)]
pub struct LineFunction {
    pub values: Vec<Complex64>,
    pub x_max: f64,
}

impl LineFunction {
    pub fn from_fn(n: usize, x_max: f64, f: impl Fn(f64) -> Complex64) -> Self {
        assert!(n >= 16);
        assert!(x_max > 0.0);
        let values = (0..n)
            .map(|j| f(-x_max + 2.0 * x_max * j as f64 / (n - 1) as f64))
            .collect();
        LineFunction { values, x_max }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn grid_x(&self, j: usize) -> f64 {
        -self.x_max + 2.0 * self.x_max * j as f64 / (self.len() - 1) as f64
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        let n = self.len();
        let edge = 1e-9 * self.x_max.max(1.0);
        if x < -self.x_max - edge || x > self.x_max + edge {
            return Complex64::new(0.0, 0.0);
        }
        let x = x.clamp(-self.x_max, self.x_max);
        let xx = (x + self.x_max) / (2.0 * self.x_max) * (n - 1) as f64;
        let j = (xx.floor() as isize).clamp(0, n as isize - 2);
        let s = xx - j as f64;
        let get = |k: isize| {
            let idx = j + k;
            if idx < 0 || idx >= n as isize {
                Complex64::new(0.0, 0.0)
            } else {
                self.values[idx as usize]
            }
        };
        catmull_rom_c([get(-1), get(0), get(1), get(2)], s)
    }

    pub fn norm_sq(&self) -> f64 {
        let n = self.len();
        let h = 2.0 * self.x_max / (n - 1) as f64;
        self.values
            .iter()
            .enumerate()
            .map(|(j, v)| {
                let w = if j == 0 || j == n - 1 { 0.5 } else { 1.0 };
                w * v.norm_sqr()
            })
            .sum::<f64>()
            * h
    }
}

// ---------------------------------------------------------------------------
// Polar disk grid
// ---------------------------------------------------------------------------

/// Complex function on the unit disk, sampled at radial midpoints
/// `r_i = (i + 1/2)/nr` and angles `theta_j = 2 pi j / ntheta`.
#[derive(Debug, Clone)]
pub struct DiskFunction {
    pub nr: usize,
    pub ntheta: usize,
    pub values: Vec<Complex64>,
}

impl DiskFunction {
    pub fn from_fn(nr: usize, ntheta: usize, f: impl Fn(Complex64) -> Complex64) -> Self {
        assert!(nr >= 8 && ntheta >= 16);
        let mut values = Vec::with_capacity(nr * ntheta);
        for i in 0..nr {
            let r = (i as f64 + 0.5) / nr as f64;
            for j in 0..ntheta {
                let th = 2.0 * std::f64::consts::PI * j as f64 / ntheta as f64;
                values.push(f(Complex64::from_polar(r, th)));
            }
        }
        DiskFunction { nr, ntheta, values }
    }

    pub fn constant(nr: usize, ntheta: usize, v: Complex64) -> Self {
        DiskFunction { nr, ntheta, values: vec![v; nr * ntheta] }
    }

    pub fn point(&self, i: usize, j: usize) -> Complex64 {
        let r = (i as f64 + 0.5) / self.nr as f64;
        let th = 2.0 * std::f64::consts::PI * j as f64 / self.ntheta as f64;
        Complex64::from_polar(r, th)
    }

    pub fn value(&self, i: usize, j: usize) -> Complex64 {
        self.values[i * self.ntheta + j]
    }

    /// Separable cubic interpolation (periodic in theta, clamped in r).
    pub fn eval(&self, w: Complex64) -> Complex64 {
        let r = w.norm();
        let th = w.arg();
        let tau = 2.0 * std::f64::consts::PI;
        let xt = (th.rem_euclid(tau)) / tau * self.ntheta as f64;
        let jt = xt.floor() as usize % self.ntheta;
        let st = xt - xt.floor();

        // radial index relative to midpoints
        let xr = r * self.nr as f64 - 0.5;
        let ir = (xr.floor() as isize).clamp(0, self.nr as isize - 2);
        let sr = xr - ir as f64;

        let theta_slice = |i: isize| -> Complex64 {
            let i = i.clamp(0, self.nr as isize - 1) as usize;
            let get = |k: isize| {
                self.values[i * self.ntheta
                    + ((jt as isize + k).rem_euclid(self.ntheta as isize)) as usize]
            };
            catmull_rom_c([get(-1), get(0), get(1), get(2)], st)
        };
        catmull_rom_c(
            [theta_slice(ir - 1), theta_slice(ir), theta_slice(ir + 1), theta_slice(ir + 2)],
            sr,
        )
    }

    /// Midpoint-radial, trapezoid-angular quadrature of
    /// `w(point, value) r dr dtheta` over the disk.
    pub fn integrate(&self, w: impl Fn(Complex64, Complex64) -> Complex64) -> Complex64 {
        let dr = 1.0 / self.nr as f64;
        let dth = 2.0 * std::f64::consts::PI / self.ntheta as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..self.nr {
            let r = (i as f64 + 0.5) / self.nr as f64;
            for j in 0..self.ntheta {
                acc += w(self.point(i, j), self.value(i, j)) * r;
            }
        }
        acc * dr * dth
    }

    /// Weighted norm squared for the measure `4^{1-m} (1-|w|^2)^{m-2} dw`.
    pub fn norm_sq_weighted(&self, m: u32) -> f64 {
        let dr = 1.0 / self.nr as f64;
        let dth = 2.0 * std::f64::consts::PI / self.ntheta as f64;
        let mut acc = 0.0;
        for i in 0..self.nr {
            let r = (i as f64 + 0.5) / self.nr as f64;
            let weight = 4.0f64.powi(1 - (m as i32)) * (1.0 - r * r).powi(m as i32 - 2);
            for j in 0..self.ntheta {
                acc += self.value(i, j).norm_sqr() * weight * r;
            }
        }
        acc * dr * dth
    }
}

/// Validate a grid size request coming from external input.
pub fn check_grid(n: usize) -> Result<()> {
    if n < 16 {
        return Err(Error::InvalidSpec(format!("grid size {n} below the minimum of 16")));
    }
    Ok(())
}

//! Both Taylor machines: the discrete coefficient expansion of the classical
//! Cauchy kernel over circle harmonics, and the continuous decomposition of
//! the hyperbolic kernel with the integer-part Laplace kernel, together with
//! the geometric-series decomposition and the Mellin-type coefficient
//! functional.
//!
//! The integer-part integrand is discontinuous at integers, so it is
//! integrated interval-by-interval in closed form (exponential
//! antiderivatives) instead of by generic quadrature.

use crate::boundary::{CircleFunction, TildeBoundary};
use crate::clifford::EvenNumber;
use crate::error::{Error, Result};
use crate::moebius::TildePoint;
use num_complex::Complex64;

/// Classical Taylor coefficient `V_n(a) = sqrt(1-|a|^2) conj(a)^{n-1}`,
/// `n = 1, 2, ...`.
pub fn classical_coefficient(a: Complex64, n: usize) -> Result<Complex64> {
    if a.norm_sqr() >= 1.0 {
        return Err(Error::OutOfDomain);
    }
    if n == 0 {
        return Err(Error::InvalidSpec("coefficients are indexed from 1".into()));
    }
    Ok(a.conj().powu(n as u32 - 1) * (1.0 - a.norm_sqr()).sqrt())
}

/// Partial sums `sum_{n<=N} V_n(a) e^{i(n-1)phi}` of the coherent-state
/// expansion; converges geometrically at rate `|a|`.
pub fn classical_partial_sums(a: Complex64, phi: f64, n_max: usize) -> Result<Vec<Complex64>> {
    if a.norm_sqr() >= 1.0 {
        return Err(Error::OutOfDomain);
    }
    let pref = (1.0 - a.norm_sqr()).sqrt();
    let step = a.conj() * Complex64::from_polar(1.0, phi);
    let mut sums = Vec::with_capacity(n_max);
    let mut term = Complex64::new(pref, 0.0);
    let mut acc = Complex64::new(0.0, 0.0);
    for _ in 0..n_max {
        acc += term;
        sums.push(acc);
        term *= step;
    }
    Ok(sums)
}

/// Coefficient functional `f_n = int f conj(psi_n) dphi` with
/// `psi_n = e^{i(n-1)phi}`, by trapezoid quadrature on the sample grid.
pub fn classical_coefficient_functional(f: &CircleFunction, n: usize) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::InvalidSpec("coefficients are indexed from 1".into()));
    }
    let k = (n - 1) as f64;
    Ok(f.integrate(|j, v| v * Complex64::from_polar(1.0, -k * f.angle(j))))
}

// ---------------------------------------------------------------------------
// Laplace-table identity
// ---------------------------------------------------------------------------

/// `(a^j - 1)/(a - 1)`, continued to `j` at `a = 1`.
fn phi_factor(a: f64, j: u32) -> f64 {
    if (a - 1.0).abs() < 1e-12 {
        j as f64
    } else {
        (a.powi(j as i32) - 1.0) / (a - 1.0)
    }
}

/// Both sides of the table identity
/// `1/(t (e^{kt} - a)) = int_0^inf (a^{[p/k]} - 1)/(a - 1) e^{-tp} dp`,
/// the right side by piecewise-exact integration over `[jk, (j+1)k)`.
/// Valid for `k, t > 0` and `0 <= a < e^{kt}` (`a = 1` by its limit).
pub fn laplace_table_check(a: f64, k: f64, t: f64) -> Result<(f64, f64)> {
    if k <= 0.0 || t <= 0.0 {
        return Err(Error::InvalidSpec("k and t must be positive".into()));
    }
    if a < 0.0 || a >= (k * t).exp() {
        return Err(Error::Convergence);
    }
    let lhs = 1.0 / (t * ((k * t).exp() - a));
    let q = (-t * k).exp();
    let mut rhs = 0.0;
    let mut j = 0u32;
    loop {
        // exact integral of e^{-tp} over [jk, (j+1)k)
        let interval = (q.powi(j as i32) - q.powi(j as i32 + 1)) / t;
        let term = phi_factor(a, j) * interval;
        rhs += term;
        let scale = rhs.abs().max(lhs.abs());
        if j > 8 && term.abs() < 1e-16 * scale.max(1e-30) {
            break;
        }
        j += 1;
        if j > 200_000 {
            return Err(Error::Convergence);
        }
    }
    Ok((lhs, rhs))
}

// ---------------------------------------------------------------------------
// Hyperbolic decomposition of the Cauchy kernel
// ---------------------------------------------------------------------------

/// Value of the decomposition with a truncation estimate.
#[derive(Debug, Clone, Copy)]
pub struct HyperbolicExpansion {
    pub value: EvenNumber,
    pub truncation_estimate: f64,
}

/// One idempotent component of the decomposition: the assigned value of
/// `s int_0^inf (a^{[p]} - 1)/(a - 1) e^{-sp} dp`, summed interval by
/// interval in closed form,
/// `[(1 - e^{-s}) sum_j (a e^{-s})^j - 1] / (a - 1) -> 1/(e^s - a)`.
/// The geometric part requires `|a e^{-s}| < 1`.
fn laplace_component(a: f64, s: f64) -> Result<(f64, f64)> {
    if (a - 1.0).abs() < 1e-9 {
        return Err(Error::NonInvertible);
    }
    let rho = a * (-s).exp();
    if rho.abs() >= 1.0 {
        return Err(Error::Convergence);
    }
    let front = 1.0 - (-s).exp();
    let mut geo = 0.0;
    let mut term = 1.0f64;
    let mut j = 0u32;
    loop {
        geo += term;
        term *= rho;
        j += 1;
        if term.abs() < 1e-16 * geo.abs().max(1.0) || j > 100_000 {
            break;
        }
    }
    let tail = term.abs() / (1.0 - rho.abs()) * front.abs() / (a - 1.0).abs();
    let value = (front * geo - 1.0) / (a - 1.0);
    Ok((value, tail))
}

/// Continuous decomposition of the kernel `(-e1 u + z)^{-1}` over the
/// eigenfunctions `z^{-p}`: evaluated componentwise with the piecewise-exact
/// Laplace scheme (`s = t` on the p1 component, `s = -t` on p2, the
/// components of the even factor `t e1e2`). Convergence requires
/// `|-u1 + u2| < e^t` and `|-u1 - u2| < e^{-t}`; the result matches
/// `kernel_tilde(u, t, 0)` on the principal branch.
pub fn hyperbolic_expand(u: &TildePoint, t: f64) -> Result<HyperbolicExpansion> {
    let e1u = u.u.e1_times();
    let (c1, e1) = laplace_component(e1u.a1, t)?;
    let (c2, e2) = laplace_component(e1u.a2, -t)?;
    Ok(HyperbolicExpansion {
        value: EvenNumber::new(c1, c2),
        truncation_estimate: e1.max(e2),
    })
}

// ---------------------------------------------------------------------------
// Geometric-series decomposition
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct GeometricExpansion {
    /// Partial sums `sum_{j<=J} (e1 u)^j z^{-j-1}`.
    pub partial_sums: Vec<EvenNumber>,
    /// The larger of the two componentwise convergence ratios.
    pub ratio: f64,
}

/// `(-e1 u + z)^{-1} = sum_j (e1 u)^j z^{-j-1}`, valid when both component
/// ratios `|a1| e^{-t}` and `|a2| e^{t}` are below one.
pub fn geometric_expand(u: &TildePoint, t: f64, terms: usize) -> Result<GeometricExpansion> {
    let e1u = u.u.e1_times();
    let r1 = e1u.a1.abs() * (-t).exp();
    let r2 = e1u.a2.abs() * t.exp();
    if r1 >= 1.0 || r2 >= 1.0 {
        return Err(Error::Convergence);
    }
    let step = EvenNumber::new(e1u.a1 * (-t).exp(), e1u.a2 * t.exp());
    let mut term = EvenNumber::new((-t).exp(), t.exp()); // z^{-1}
    let mut acc = EvenNumber::ZERO;
    let mut sums = Vec::with_capacity(terms + 1);
    for _ in 0..=terms {
        acc = acc + term;
        sums.push(acc);
        term = term * step;
    }
    Ok(GeometricExpansion { partial_sums: sums, ratio: r1.max(r2) })
}

// ---------------------------------------------------------------------------
// Mellin-type coefficient functional
// ---------------------------------------------------------------------------

/// `f_p = int t z^{-p} dz f(z)` with `dz = e1e2 e^{e1e2 t} dt`, by branchwise
/// trapezoid quadrature summed over the four branches.
pub fn mellin_coefficient(f: &TildeBoundary, p: f64) -> EvenNumber {
    f.integrate(|_, t, v| {
        // t e1e2 z^{1-p}: components (t e^{(1-p)t}, -t e^{-(1-p)t})
        let w = EvenNumber::new(t * ((1.0 - p) * t).exp(), -t * (-(1.0 - p) * t).exp());
        w * v
    })
}

//! The reduced wavelet transform in both theories: the Cauchy integral on the
//! circle, the Bergman-type transform on the disk, and the principal-value
//! hyperbolic Cauchy transform on the four-branch circle, together with the
//! closed-form hyperbolic kernel, Hardy-space norms and intertwining
//! residuals.
//!
//! Evaluations at distinct points are independent pure computations; within
//! one evaluation the summation order is fixed for determinism.

use crate::boundary::{CircleFunction, DiskFunction, TildeBoundary};
use crate::clifford::{exp_bivector, EvenNumber, Vector11};
use crate::error::{Error, Result};
use crate::moebius::{
    in_disk, point_tilde, project_tilde, section_disk, section_tilde, singular_points,
    BranchCoord, Cl11Mat, Su11Mat, TildePoint,
};
use crate::representations::{
    apply_pi1, apply_pisigma, vacuum_eigenvalue_pi1, vacuum_eigenvalue_pisigma,
};
use num_complex::Complex64;

// ---------------------------------------------------------------------------
// Quadrature specification
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadRule {
    /// Plain trapezoid on the sample grid (excised zones dropped).
    Trapezoid,
    /// Composite Gauss-Legendre panels graded toward excision edges.
    Adaptive,
}

/// Quadrature controls shared by the transforms.
#[derive(Debug, Clone)]
pub struct QuadratureSpec {
    /// Points per circle (or baseline panel budget per branch).
    pub n: usize,
    /// Branch truncation for the hyperbolic circle.
    pub t_max: f64,
    /// Strictly decreasing excision radii for principal values.
    pub pv_epsilons: Vec<f64>,
    pub rule: QuadRule,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            n: 1024,
            t_max: 12.0,
            pv_epsilons: (0..=6).map(|k| 0.1 * 0.5f64.powi(k)).collect(),
            rule: QuadRule::Adaptive,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n < 16 {
            return Err(Error::InvalidSpec(format!("N = {} below minimum 16", self.n)));
        }
        if self.t_max <= 0.0 {
            return Err(Error::InvalidSpec("t_max must be positive".into()));
        }
        if self.pv_epsilons.is_empty() {
            return Err(Error::InvalidSpec("empty excision sequence".into()));
        }
        let mut prev = f64::INFINITY;
        for &e in &self.pv_epsilons {
            if e <= 0.0 || e >= prev {
                return Err(Error::InvalidSpec(
                    "excision radii must be strictly decreasing and positive".into(),
                ));
            }
            prev = e;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum TransformFlag {
    /// A boundary singularity contributes a principal value at this site.
    NearSingularity { branch: u8, t: f64 },
    /// Grid sites skipped while transforming the boundary data.
    SkippedSites(usize),
    /// A singularity lies near the branch truncation edge.
    EdgeSingularity { branch: u8, t: f64 },
}

impl std::fmt::Display for TransformFlag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TransformFlag::NearSingularity { branch, t } => {
                write!(f, "near-singularity:b{branch}:t{t:.6}")
            }
            TransformFlag::SkippedSites(n) => write!(f, "skipped-sites:{n}"),
            TransformFlag::EdgeSingularity { branch, t } => {
                write!(f, "edge-singularity:b{branch}:t{t:.6}")
            }
        }
    }
}

/// Outcome of a transform evaluation at one point.
#[derive(Debug, Clone)]
pub struct TransformResult<T> {
    /// The reduced wavelet transform value itself.
    pub value: T,
    /// The value with the section prefactor divided out (the analytic
    /// extension for the disk theory).
    pub normalized: T,
    pub quadrature_error_estimate: f64,
    /// Smallest excision radius used; 0 when no principal value was needed.
    pub pv_epsilon: f64,
    pub flags: Vec<TransformFlag>,
}

// ---------------------------------------------------------------------------
// Classical Cauchy integral on the circle
// ---------------------------------------------------------------------------

/// Reduced wavelet transform on the circle: `Wf(a) = <f, pi_1(s(a)) f_0>`,
/// normalized to the analytic extension `f(a) = Wf(a) / (2 pi sqrt(1-|a|^2))`.
pub fn cauchy_disk(
    f: &CircleFunction,
    a: Complex64,
    q: &QuadratureSpec,
) -> Result<TransformResult<Complex64>> {
    q.validate()?;
    if a.norm_sqr() >= 1.0 {
        return Err(Error::OutOfDomain);
    }
    let pref = (1.0 - a.norm_sqr()).sqrt();
    let weight = |phi: f64| {
        // conj of the coherent state: sqrt(1-|a|^2) / (1 - a e^{-i phi})
        pref / (Complex64::new(1.0, 0.0) - a * Complex64::from_polar(1.0, -phi))
    };
    let n = f.len();
    let h = 2.0 * std::f64::consts::PI / n as f64;
    let mut total = Complex64::new(0.0, 0.0);
    let mut coarse = Complex64::new(0.0, 0.0);
    for j in 0..n {
        let term = f.values[j] * weight(f.angle(j));
        total += term;
        if j % 2 == 0 {
            coarse += term;
        }
    }
    let value = total * h;
    let coarse = coarse * (2.0 * h);
    let norm_const = 2.0 * std::f64::consts::PI * pref;
    Ok(TransformResult {
        value,
        normalized: value / norm_const,
        quadrature_error_estimate: (value - coarse).norm(),
        pv_epsilon: 0.0,
        flags: Vec::new(),
    })
}

// ---------------------------------------------------------------------------
// Bergman transform on the disk
// ---------------------------------------------------------------------------

/// Bergman-type transform: `(sqrt(1-|a|^2))^m 4^{1-m} int f(w) (a conj(w) - 1)^{-m}
/// (1-|w|^2)^{m-2} dw`, with the normalization constant fixed so that `f == 1`
/// maps to 1.
pub fn bergman(
    weight: u32,
    f: &DiskFunction,
    a: Complex64,
    q: &QuadratureSpec,
) -> Result<TransformResult<Complex64>> {
    q.validate()?;
    if weight < 2 {
        return Err(Error::InvalidSpec("discrete series weight must be >= 2".into()));
    }
    if a.norm_sqr() >= 1.0 {
        return Err(Error::OutOfDomain);
    }
    let m = weight as i32;
    let base = (1.0 - a.norm_sqr()).sqrt().powi(m) * 4.0f64.powi(1 - m);
    let kernel = |w: Complex64, fw: Complex64| {
        fw * (a * w.conj() - Complex64::new(1.0, 0.0)).powi(-m) * (1.0 - w.norm_sqr()).powi(m - 2)
    };
    let value = f.integrate(kernel) * base;
    // coarse estimate from the even-indexed angular subsample
    let dr = 1.0 / f.nr as f64;
    let dth = 2.0 * std::f64::consts::PI / f.ntheta as f64;
    let mut coarse = Complex64::new(0.0, 0.0);
    for i in 0..f.nr {
        let r = (i as f64 + 0.5) / f.nr as f64;
        for j in (0..f.ntheta).step_by(2) {
            coarse += kernel(f.point(i, j), f.value(i, j)) * r;
        }
    }
    let coarse = coarse * dr * (2.0 * dth) * base;
    // normalization: f == 1 at a = 0 integrates to (-1)^m pi 4^{1-m}/(m-1)
    let c = (if m % 2 == 0 { 1.0 } else { -1.0 }) * 4.0f64.powi(m - 1) * (m as f64 - 1.0)
        / std::f64::consts::PI;
    let normalized = value * c / (1.0 - a.norm_sqr()).sqrt().powi(m);
    Ok(TransformResult {
        value,
        normalized,
        quadrature_error_estimate: (value - coarse).norm(),
        pv_epsilon: 0.0,
        flags: Vec::new(),
    })
}

// ---------------------------------------------------------------------------
// Hyperbolic kernel
// ---------------------------------------------------------------------------

/// The boundary integrand of the hyperbolic transform at the branch point
/// `v = +-e1 e^{e1e2 t}`: `(1 - u v)^sigma (1 - v u)^{-1-sigma}`.
pub fn sio_integrand(sigma: f64, u: Vector11, coord: &BranchCoord) -> Result<EvenNumber> {
    let v = coord.vector();
    let den = EvenNumber::ONE - v * u;
    if !den.is_invertible(1e-12 * den.norm_inf().max(1.0)) {
        return Err(Error::LightConeSingularity);
    }
    if sigma == 0.0 {
        return den.powf(-1.0);
    }
    let num = EvenNumber::ONE - u * v;
    Ok(num.powf(sigma)? * den.powf(-1.0 - sigma)?)
}

/// Analytic Cauchy kernel of the hyperbolic theory. For `sigma = 0` it is
/// `(-eps e1 u + z)^{-1} = p1/(e^t + eps(u1 - u2)) + p2/(e^{-t} + eps(u1 + u2))`
/// on the branch with e1-sign `eps`; in general the `sio_integrand` times
/// `z^{-1}`.
pub fn kernel_tilde(u: &TildePoint, coord: &BranchCoord, sigma: f64) -> Result<EvenNumber> {
    let i = sio_integrand(sigma, u.u, coord)?;
    Ok(i * exp_bivector(-coord.t))
}

// ---------------------------------------------------------------------------
// Principal-value machinery
// ---------------------------------------------------------------------------

const GL8_NODES: [f64; 8] = [
    -0.9602898564975363,
    -0.7966664774136267,
    -0.525532409916329,
    -0.18343464249564978,
    0.18343464249564978,
    0.525532409916329,
    0.7966664774136267,
    0.9602898564975363,
];
const GL8_WEIGHTS: [f64; 8] = [
    0.10122853629037626,
    0.22238103445337448,
    0.31370664587788727,
    0.362683783378362,
    0.362683783378362,
    0.31370664587788727,
    0.22238103445337448,
    0.10122853629037626,
];

fn gl8(f: &mut impl FnMut(f64) -> EvenNumber, l: f64, r: f64) -> EvenNumber {
    let mid = 0.5 * (l + r);
    let half = 0.5 * (r - l);
    let mut acc = EvenNumber::ZERO;
    for (x, w) in GL8_NODES.iter().zip(GL8_WEIGHTS.iter()) {
        acc = acc + f(mid + half * x) * *w;
    }
    acc * half
}

/// Panel boundaries over [l, r], geometrically graded toward singular ends so
/// a 1/(t - t0) integrand sees panels of bounded relative variation.
fn panel_bounds(l: f64, r: f64, sing_l: bool, sing_r: bool, target: f64) -> Vec<f64> {
    let mut cuts = vec![l];
    let len = r - l;
    if len <= 0.0 {
        return cuts;
    }
    let graded = |from: f64, to: f64, reverse: bool, cuts: &mut Vec<f64>| {
        // Doubling widths away from the singular end, 14 levels deep.
        let k = 14i32;
        let span = to - from;
        let denom = (2f64.powi(k) - 1.0).recip();
        for i in 1..=k {
            let frac = (2f64.powi(i) - 1.0) * denom;
            let x = if reverse { to - span * frac } else { from + span * frac };
            cuts.push(x);
        }
    };
    match (sing_l, sing_r) {
        (true, true) => {
            let m = 0.5 * (l + r);
            graded(l, m, false, &mut cuts);
            let mut right = vec![r];
            graded(m, r, true, &mut right);
            right.pop(); // drop the duplicate of m
            right.reverse();
            cuts.extend(right);
        }
        (true, false) => graded(l, r, false, &mut cuts),
        (false, true) => {
            let mut right = vec![r];
            graded(l, r, true, &mut right);
            right.reverse();
            cuts.extend(right);
        }
        (false, false) => {
            let panels = ((len / target).ceil() as usize).max(1);
            for i in 1..=panels {
                cuts.push(l + len * i as f64 / panels as f64);
            }
        }
    }
    if *cuts.last().unwrap() != r {
        cuts.push(r);
    }
    // subdivide any remaining wide panels
    let mut refined = vec![cuts[0]];
    for w in cuts.windows(2) {
        let (a, b) = (w[0], w[1]);
        let sub = (((b - a) / target).ceil() as usize).max(1);
        for i in 1..=sub {
            refined.push(a + (b - a) * i as f64 / sub as f64);
        }
    }
    refined
}

fn integrate_interval(
    f: &mut impl FnMut(f64) -> EvenNumber,
    l: f64,
    r: f64,
    sing_l: bool,
    sing_r: bool,
    target: f64,
) -> EvenNumber {
    let cuts = panel_bounds(l, r, sing_l, sing_r, target);
    let mut acc = EvenNumber::ZERO;
    for w in cuts.windows(2) {
        acc = acc + gl8(f, w[0], w[1]);
    }
    acc
}

/// One excision level: integrate over `[-t_max, t_max]` minus the union of
/// `(t0 - eps, t0 + eps)` around the given singular coordinates.
fn excised_integral(
    f: &mut impl FnMut(f64) -> EvenNumber,
    t_max: f64,
    sing: &[f64],
    eps: f64,
    target: f64,
) -> EvenNumber {
    let mut marks: Vec<(f64, f64)> =
        sing.iter().map(|&t| ((t - eps).max(-t_max), (t + eps).min(t_max))).collect();
    marks.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let mut merged: Vec<(f64, f64)> = Vec::new();
    for m in marks {
        if let Some(last) = merged.last_mut() {
            if m.0 <= last.1 {
                last.1 = last.1.max(m.1);
                continue;
            }
        }
        merged.push(m);
    }
    let mut acc = EvenNumber::ZERO;
    let mut cursor = -t_max;
    let mut cursor_sing = false;
    for (a, b) in merged {
        if a > cursor {
            acc = acc + integrate_interval(f, cursor, a, cursor_sing, true, target);
        }
        cursor = b;
        cursor_sing = true;
    }
    if cursor < t_max {
        acc = acc + integrate_interval(f, cursor, t_max, cursor_sing, false, target);
    }
    acc
}

/// Principal value of `int f dt` over one branch window with the stated
/// excision radii; returns the Richardson-extrapolated value, the per-level
/// excised integrals, and an error estimate.
fn pv_branch(
    f: &mut impl FnMut(f64) -> EvenNumber,
    t_max: f64,
    sing: &[f64],
    epsilons: &[f64],
    target: f64,
) -> (EvenNumber, Vec<EvenNumber>, f64) {
    if sing.is_empty() {
        let coarse = integrate_interval(f, -t_max, t_max, false, false, target);
        let fine = integrate_interval(f, -t_max, t_max, false, false, 0.5 * target);
        return (fine, vec![fine], (fine - coarse).norm_inf());
    }
    let levels: Vec<EvenNumber> =
        epsilons.iter().map(|&e| excised_integral(f, t_max, sing, e, target)).collect();
    // quadrature estimate: the deepest level recomputed with halved panels
    let deep_fine = excised_integral(f, t_max, sing, *epsilons.last().unwrap(), 0.5 * target);
    let quad_est = (deep_fine - levels[levels.len() - 1]).norm_inf();
    // E_k = V + c eps_k + O(eps^3): one halving step cancels the linear term,
    // a second cancels the cubic one.
    let mut r1: Vec<EvenNumber> = levels.windows(2).map(|w| w[1] * 2.0 - w[0]).collect();
    if r1.is_empty() {
        return (levels[0], levels, f64::INFINITY);
    }
    let value;
    let extrap_est;
    if r1.len() >= 2 {
        let r2: Vec<EvenNumber> =
            r1.windows(2).map(|w| (w[1] * 8.0 - w[0]) * (1.0 / 7.0)).collect();
        let last = r2[r2.len() - 1];
        let prev = if r2.len() >= 2 { r2[r2.len() - 2] } else { r1[r1.len() - 1] };
        extrap_est = (last - prev).norm_inf();
        value = last;
    } else {
        value = r1.pop().unwrap();
        extrap_est = (value - levels[0]).norm_inf();
    }
    (value, levels, extrap_est + quad_est)
}

/// Convergence diagnostics of an excision sequence: successive differences
/// `|E_{k+1} - E_k|`, which decay linearly in the radius for a genuine
/// principal value.
pub fn excision_diffs(levels: &[EvenNumber]) -> Vec<f64> {
    levels.windows(2).map(|w| (w[1] - w[0]).norm_inf()).collect()
}

// ---------------------------------------------------------------------------
// Hyperbolic Cauchy transform (principal value)
// ---------------------------------------------------------------------------

/// `W_sigma f(u) = |1+u^2|^{1/2} sum_branches PV int (1-uv)^sigma (1-vu)^{-1-sigma} f dt`,
/// each principal value by symmetric excision with the radii of `q` and
/// Richardson extrapolation. `normalized` carries the sum without the
/// `|1+u^2|^{1/2}` prefactor.
pub fn cauchy_tilde_pv(
    sigma: f64,
    f: &TildeBoundary,
    u: &TildePoint,
    q: &QuadratureSpec,
) -> Result<TransformResult<EvenNumber>> {
    q.validate()?;
    if !in_disk(u) {
        return Err(Error::OutOfDomain);
    }
    let t_max = f.t_max;
    let target = (2.0 * t_max / (q.n as f64 / 16.0).max(8.0)).min(0.5);
    let sing = singular_points(u);
    let mut flags = Vec::new();
    let eps0 = q.pv_epsilons[0];
    let eps_last = *q.pv_epsilons.last().unwrap();

    let mut total = EvenNumber::ZERO;
    let mut worst_est = 0.0f64;
    let mut any_pv = false;
    let mut diverged = false;

    for b in 0..4u8 {
        let branch_sing: Vec<f64> = sing
            .iter()
            .filter(|c| c.branch == b && c.t.abs() < t_max + 0.5)
            .map(|c| c.t)
            .collect();
        for &t0 in &branch_sing {
            if t0.abs() > t_max - eps0 {
                flags.push(TransformFlag::EdgeSingularity { branch: b, t: t0 });
            } else {
                flags.push(TransformFlag::NearSingularity { branch: b, t: t0 });
            }
        }
        let mut integrand = |t: f64| -> EvenNumber {
            let coord = BranchCoord::new(b, t);
            match sio_integrand(sigma, u.u, &coord) {
                Ok(i) => i * f.eval(b, t),
                Err(_) => EvenNumber::ZERO,
            }
        };
        let in_window: Vec<f64> = branch_sing.iter().copied().filter(|t| t.abs() < t_max).collect();
        let (value, levels, est) = match q.rule {
            QuadRule::Adaptive => {
                pv_branch(&mut integrand, t_max, &in_window, &q.pv_epsilons, target)
            }
            QuadRule::Trapezoid => pv_branch_trapezoid(f, b, sigma, u.u, &in_window, &q.pv_epsilons),
        };
        if !in_window.is_empty() {
            any_pv = true;
            let diffs = excision_diffs(&levels);
            let floor = 1e-12 * (1.0 + levels.iter().map(|e| e.norm_inf()).fold(0.0, f64::max));
            if diffs.len() >= 3 {
                let first = diffs[0];
                let last = diffs[diffs.len() - 1];
                if last > floor && last > 0.9 * first {
                    diverged = true;
                }
            }
        }
        worst_est += est;
        total = total + value;
    }
    if diverged {
        return Err(Error::PvDivergence);
    }
    let pref = (1.0 + u.u.square()).abs().sqrt();
    Ok(TransformResult {
        value: total * pref,
        normalized: total,
        quadrature_error_estimate: worst_est * pref,
        pv_epsilon: if any_pv { eps_last } else { 0.0 },
        flags,
    })
}

fn pv_branch_trapezoid(
    f: &TildeBoundary,
    branch: u8,
    sigma: f64,
    u: Vector11,
    sing: &[f64],
    epsilons: &[f64],
) -> (EvenNumber, Vec<EvenNumber>, f64) {
    let n = f.n_per_branch();
    let h = 2.0 * f.t_max / (n - 1) as f64;
    let levels: Vec<EvenNumber> = epsilons
        .iter()
        .map(|&eps| {
            let mut acc = EvenNumber::ZERO;
            for j in 0..n {
                let t = f.grid_t(j);
                if sing.iter().any(|&t0| (t - t0).abs() < eps) {
                    continue;
                }
                let coord = BranchCoord::new(branch, t);
                if let Ok(i) = sio_integrand(sigma, u, &coord) {
                    let w = if j == 0 || j == n - 1 { 0.5 } else { 1.0 };
                    acc = acc + i * f.branches[branch as usize][j] * (w * h);
                }
            }
            acc
        })
        .collect();
    if sing.is_empty() {
        return (levels[0], levels, 0.0);
    }
    let r1: Vec<EvenNumber> = levels.windows(2).map(|w| w[1] * 2.0 - w[0]).collect();
    let value = *r1.last().unwrap_or(&levels[0]);
    let est = if r1.len() >= 2 {
        (r1[r1.len() - 1] - r1[r1.len() - 2]).norm_inf()
    } else {
        f64::INFINITY
    };
    (value, levels, est)
}

/// Per-level excised integrals (summed over branches) for one point, exposed
/// for convergence-order diagnostics.
pub fn pv_levels(
    sigma: f64,
    f: &TildeBoundary,
    u: &TildePoint,
    q: &QuadratureSpec,
) -> Result<Vec<(f64, EvenNumber)>> {
    q.validate()?;
    if !in_disk(u) {
        return Err(Error::OutOfDomain);
    }
    let t_max = f.t_max;
    let target = (2.0 * t_max / (q.n as f64 / 16.0).max(8.0)).min(0.5);
    let sing = singular_points(u);
    let mut out: Vec<(f64, EvenNumber)> =
        q.pv_epsilons.iter().map(|&e| (e, EvenNumber::ZERO)).collect();
    for b in 0..4u8 {
        let branch_sing: Vec<f64> =
            sing.iter().filter(|c| c.branch == b && c.t.abs() < t_max).map(|c| c.t).collect();
        let mut integrand = |t: f64| -> EvenNumber {
            match sio_integrand(sigma, u.u, &BranchCoord::new(b, t)) {
                Ok(i) => i * f.eval(b, t),
                Err(_) => EvenNumber::ZERO,
            }
        };
        for (k, &eps) in q.pv_epsilons.iter().enumerate() {
            let v = excised_integral(&mut integrand, t_max, &branch_sing, eps, target);
            out[k].1 = out[k].1 + v;
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Hardy norm on concentric circles
// ---------------------------------------------------------------------------

/// Squared hyperbolic modulus of an even value: `|a conj(a)| = |a1 a2|`.
pub fn hyperbolic_mod_sq(v: EvenNumber) -> f64 {
    v.pseudo_norm().abs()
}

/// Hardy-type norm over the circle `T_lambda`:
/// `|lambda|^{-2} sum_branches int |F(u(t))|^2 |lambda| dt`, with the
/// parametrization `u(t) = +-lambda e1 e^{e1e2 t}` and line element
/// `|lambda| dt` per branch.
pub fn hardy_norm(f: &TildeBoundary, lambda: f64) -> Result<f64> {
    if !(-1.0..0.0).contains(&lambda) {
        return Err(Error::BadRadius { lambda });
    }
    let n = f.n_per_branch();
    let h = 2.0 * f.t_max / (n - 1) as f64;
    let mut acc = 0.0;
    for b in 0..4usize {
        for j in 0..n {
            let w = if j == 0 || j == n - 1 { 0.5 } else { 1.0 };
            acc += w * hyperbolic_mod_sq(f.branches[b][j]);
        }
    }
    Ok(acc * h * lambda.abs() / (lambda * lambda))
}

/// Sample a function of cover points on `T_lambda` into branch samples.
pub fn sample_on_circle(
    lambda: f64,
    n: usize,
    t_max: f64,
    f: impl Fn(u8, f64, &TildePoint) -> EvenNumber,
) -> Result<TildeBoundary> {
    if !(-1.0..0.0).contains(&lambda) {
        return Err(Error::BadRadius { lambda });
    }
    Ok(TildeBoundary::from_fn(n, t_max, |b, t| {
        let p = crate::moebius::circle_point(lambda, &BranchCoord::new(b, t))
            .expect("radius validated");
        f(b, t, &p)
    }))
}

// ---------------------------------------------------------------------------
// Intertwining residuals
// ---------------------------------------------------------------------------

/// Disk theory: maximal deviation of `W(pi_1(g) f)` from
/// `conj(chi_0(r(g^{-1} s(a)))) (W f)(g . a)` over the sample points.
pub fn intertwining_residual_disk(
    g: &Su11Mat,
    f: &CircleFunction,
    points: &[Complex64],
    q: &QuadratureSpec,
) -> Result<f64> {
    let gf = apply_pi1(g, f);
    let gi = g.inverse();
    let mut worst = 0.0f64;
    for &a in points {
        let lhs = cauchy_disk(&gf, a, q)?.value;
        let m = gi.mul(&section_disk(a)?);
        let b = crate::moebius::point_disk(&m)?;
        let h = crate::moebius::project_disk(&m)?;
        let cocycle = vacuum_eigenvalue_pi1(&h).conj();
        let rhs = cocycle * cauchy_disk(f, b, q)?.value;
        worst = worst.max((lhs - rhs).norm());
    }
    Ok(worst)
}

/// The transform paired with the group-convention coherent state
/// `pi_sigma(s(u)) f_0`; equals `sign(1+u^2) W_sigma f(-u)` of the
/// slot-convention transform.
pub fn cauchy_tilde_group(
    sigma: f64,
    f: &TildeBoundary,
    u: &TildePoint,
    q: &QuadratureSpec,
) -> Result<TransformResult<EvenNumber>> {
    let flipped = TildePoint::new(u.sheet, -u.u);
    let mut r = cauchy_tilde_pv(sigma, f, &flipped, q)?;
    let s = if 1.0 + u.u.square() < 0.0 { -1.0 } else { 1.0 };
    r.value = r.value * s;
    r.normalized = r.normalized * s;
    Ok(r)
}

/// Hyperbolic theory: deviation of `W(pi_sigma(g) f)` from
/// `conj(chi_0(r(g^{-1} s(u)))) (W f)(g . u)`, with `W` in the group
/// convention. Returns `(residual, combined PV error estimate)`.
pub fn intertwining_residual_tilde(
    sigma: f64,
    g: &Cl11Mat,
    f: &TildeBoundary,
    points: &[TildePoint],
    q: &QuadratureSpec,
) -> Result<(f64, f64)> {
    let gf = apply_pisigma(sigma, g, f)?;
    let gi = g.inverse()?;
    let mut worst = 0.0f64;
    let mut est = 0.0f64;
    for u in points {
        let lhs = cauchy_tilde_group(sigma, &gf.f, u, q)?;
        let m = gi.mul(&section_tilde(u.u)?);
        let b_vec = point_tilde(&m)?;
        let h = project_tilde(&m)?;
        let chi = vacuum_eigenvalue_pisigma(&h, sigma)?;
        let sq = b_vec.square();
        let sheet =
            if sq < -1.0 { crate::moebius::Sheet::Plus } else { crate::moebius::Sheet::Minus };
        let b = TildePoint::new(sheet, b_vec);
        let rhs_t = cauchy_tilde_group(sigma, f, &b, q)?;
        let rhs = chi.conj() * rhs_t.value;
        let d = lhs.value - rhs;
        worst = worst.max(d.norm_inf());
        est = est.max(lhs.quadrature_error_estimate + rhs_t.quadrature_error_estimate);
    }
    Ok((worst, est))
}

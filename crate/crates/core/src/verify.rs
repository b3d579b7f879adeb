//! Named invariant suites with seeded randomness, mirrored by the CLI
//! `verify` command, plus the logged experiments for claims that are probed
//! rather than asserted (unitary equivalence of the two series, boundedness
//! and isometry of the singular transform).

use crate::boundary::{CircleFunction, DiskFunction, TildeBoundary};
use crate::clifford::{even_calculus, exp_bivector, involution, Cliff11, EvenNumber, Involution};
use crate::error::{Error, Result};
use crate::moebius::{
    act_disk, act_tilde, cayley, density_disk, density_tilde, point_disk, point_tilde,
    project_disk, project_tilde, section_disk, section_tilde, to_su11, BranchCoord, Cl11Mat,
    Su11Mat, TildePoint,
};
use crate::operators::{
    annihilation_residual_disk, dirac_tilde, laplacian_tilde, richardson_slope, rho_halfplane,
    rho_halfplane_flow, rho_tilde, rho_tilde_flow, HalfplaneGen, Side, TildeGen,
};
use crate::representations::{
    apply_pi1, apply_pim, apply_pisigma_slots, eigenfunction_fp,
    vacuum_eigenvalue_pi1, LieElement,
};
use crate::sampling;
use crate::taylor::{geometric_expand, hyperbolic_expand, laplace_table_check};
use crate::transforms::{
    bergman, cauchy_disk, cauchy_tilde_pv, excision_diffs, hardy_norm, intertwining_residual_disk,
    intertwining_residual_tilde, kernel_tilde, pv_levels, QuadratureSpec,
};
use num_complex::Complex64;
use rand::Rng;

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub max_error: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckResult {
    fn new(name: &str, max_error: f64, tolerance: f64) -> Self {
        CheckResult {
            name: name.to_string(),
            max_error,
            tolerance,
            pass: max_error.is_finite() && max_error <= tolerance,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub const SUITES: [&str; 6] =
    ["clifford", "moebius", "representations", "transforms", "operators", "taylor"];

/// Run one named suite (or every suite for "all").
pub fn run_suite(name: &str, seed: u64) -> Result<Vec<SuiteReport>> {
    match name {
        "clifford" => Ok(vec![clifford_suite(seed)]),
        "moebius" => Ok(vec![moebius_suite(seed)]),
        "representations" => Ok(vec![representations_suite(seed)]),
        "transforms" => Ok(vec![transforms_suite(seed)]),
        "operators" => Ok(vec![operators_suite(seed)]),
        "taylor" => Ok(vec![taylor_suite(seed)]),
        "all" => Ok(SUITES.iter().map(|s| run_suite(s, seed).unwrap().remove(0)).collect()),
        other => Err(Error::InvalidSpec(format!("unknown suite '{other}'"))),
    }
}

fn clifford_suite(seed: u64) -> SuiteReport {
    let mut rng = sampling::rng_from_seed(seed);
    let mut checks = Vec::new();

    let mut assoc = 0.0f64;
    let mut anti = 0.0f64;
    for _ in 0..1000 {
        let x = sampling::small_int_cliff(&mut rng);
        let y = sampling::small_int_cliff(&mut rng);
        let z = sampling::small_int_cliff(&mut rng);
        assoc = assoc.max(((x * y) * z - x * (y * z)).norm_inf());
        for kind in [Involution::Reversion, Involution::Conjugation] {
            anti = anti
                .max((involution(kind, x * y) - involution(kind, y) * involution(kind, x)).norm_inf());
        }
        anti = anti.max(
            (involution(Involution::Grade, x * y)
                - involution(Involution::Grade, x) * involution(Involution::Grade, y))
            .norm_inf(),
        );
    }
    checks.push(CheckResult::new("associativity (exact)", assoc, 0.0));
    checks.push(CheckResult::new("involution (anti)homomorphisms (exact)", anti, 0.0));

    let p1 = (Cliff11::ONE + Cliff11::E12) * 0.5;
    let p2 = (Cliff11::ONE - Cliff11::E12) * 0.5;
    let idem = (p1 * p2).norm_inf().max((p1 * p1 - p1).norm_inf()).max(
        (p2 * p2 - p2).norm_inf().max((p1 + p2 - Cliff11::ONE).norm_inf()),
    );
    checks.push(CheckResult::new("idempotent identities (exact)", idem, 0.0));

    let mut kelvin = 0.0f64;
    for _ in 0..500 {
        let u = sampling::offcone_vector(&mut rng, 3.0, 1e-6);
        let inv = u.kelvin_inverse().expect("off-cone");
        let p = u.as_cliff() * inv.as_cliff();
        let scale = ((u.u1 * u.u1 + u.u2 * u.u2) / u.square().abs()).max(1.0);
        kelvin = kelvin.max((p - Cliff11::ONE).norm_inf() / scale);
    }
    checks.push(CheckResult::new("kelvin inverse round trip (scaled)", kelvin, 1e-14));

    let mut calc = 0.0f64;
    for _ in 0..200 {
        let a = EvenNumber::new(
            rng.gen_range(-3i32..=3) as f64,
            rng.gen_range(-3i32..=3) as f64,
        );
        let coeffs: Vec<f64> = (0..=8).map(|_| rng.gen_range(-8i32..=8) as f64 / 4.0).collect();
        let direct = {
            let mut acc = EvenNumber::ZERO;
            for &c in coeffs.iter().rev() {
                acc = acc * a + EvenNumber::scalar(c);
            }
            acc
        };
        let poly = |x: f64| coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c);
        let via = even_calculus(poly, a).expect("polynomial everywhere defined");
        calc = calc.max((direct - via).norm_inf());
    }
    checks.push(CheckResult::new("functional calculus matches polynomials (exact)", calc, 0.0));

    let mut law = 0.0f64;
    for _ in 0..100 {
        let t1: f64 = rng.gen_range(-1.0..1.0);
        let t2: f64 = rng.gen_range(-1.0..1.0);
        law = law.max((exp_bivector(t1) * exp_bivector(t2) - exp_bivector(t1 + t2)).norm_inf());
    }
    checks.push(CheckResult::new("bivector exponential group law", law, 1e-13));

    SuiteReport { suite: "clifford".into(), seed, checks }
}

fn jacobian_det_2x2(f: impl Fn(f64, f64) -> (f64, f64), x: f64, y: f64, h: f64) -> f64 {
    let (xp, yp) = (f(x + h, y), f(x - h, y));
    let (xq, yq) = (f(x, y + h), f(x, y - h));
    let j11 = (xp.0 - yp.0) / (2.0 * h);
    let j21 = (xp.1 - yp.1) / (2.0 * h);
    let j12 = (xq.0 - yq.0) / (2.0 * h);
    let j22 = (xq.1 - yq.1) / (2.0 * h);
    j11 * j22 - j12 * j21
}

fn moebius_suite(seed: u64) -> SuiteReport {
    let mut rng = sampling::rng_from_seed(seed);
    let mut checks = Vec::new();

    let mut homo = 0.0f64;
    let mut pseudo = 0.0f64;
    for _ in 0..1000 {
        let g = sampling::unimodular(&mut rng, 0.8);
        let h = sampling::unimodular(&mut rng, 0.8);
        let su_l = to_su11(&g.mul(&h)).unwrap();
        let su_r = to_su11(&g).unwrap().mul(&to_su11(&h).unwrap());
        homo = homo.max(
            (su_l.alpha - su_r.alpha).norm().max((su_l.beta - su_r.beta).norm()),
        );
        let cl_l = cayley(&g.mul(&h)).unwrap();
        let cl_r = cayley(&g).unwrap().mul(&cayley(&h).unwrap());
        homo = homo.max(
            (cl_l.na - cl_r.na).norm_inf().max((cl_l.nb - cl_r.nb).norm_inf()),
        );
        pseudo = pseudo.max((cl_l.pseudodet() - 1.0).abs());
    }
    checks.push(CheckResult::new("to_su11 / cayley preserve products", homo, 1e-10));
    checks.push(CheckResult::new("cayley pseudodeterminant = 1", pseudo, 1e-12));

    // worked Cayley entries for [[2,1],[1,1]]
    let m = cayley(&crate::moebius::RealMat2::new(2.0, 1.0, 1.0, 1.0)).unwrap();
    let worked = (m.na.c0() - 1.5)
        .abs()
        .max((m.na.c12() + 0.5).abs())
        .max((m.nb.u1 - 1.0).abs())
        .max(m.nb.u2.abs());
    checks.push(CheckResult::new("cayley worked case [[2,1],[1,1]] (exact)", worked, 0.0));

    let mut fact = 0.0f64;
    for _ in 0..200 {
        let g = sampling::su11_element(&mut rng, 0.8);
        let a = point_disk(&g).unwrap();
        let h = project_disk(&g).unwrap();
        let back = section_disk(a).unwrap().mul(&h);
        fact = fact.max((back.alpha - g.alpha).norm().max((back.beta - g.beta).norm()));

        let gc = sampling::cl11_element(&mut rng, 0.8);
        if let (Ok(u), Ok(hc)) = (point_tilde(&gc), project_tilde(&gc)) {
            if let Ok(s) = section_tilde(u) {
                let back = s.mul(&hc);
                fact = fact
                    .max((back.na - gc.na).norm_inf().max((back.nb - gc.nb).norm_inf()));
            }
        }
    }
    checks.push(CheckResult::new("section . projection factorization", fact, 1e-10));

    let mut comp = 0.0f64;
    for _ in 0..200 {
        let g = sampling::su11_element(&mut rng, 0.7);
        let h = sampling::su11_element(&mut rng, 0.7);
        let z = sampling::disk_point(&mut rng, 0.7);
        let lhs = act_disk(&g, act_disk(&h, z).unwrap()).unwrap();
        let rhs = act_disk(&h.mul(&g), z).unwrap();
        comp = comp.max((lhs - rhs).norm());
    }
    checks.push(CheckResult::new("disk action composition law", comp, 1e-10));

    let mut inv_disk = 0.0f64;
    for _ in 0..200 {
        let g = sampling::su11_element(&mut rng, 0.6);
        let a = sampling::disk_point(&mut rng, 0.7);
        let w = act_disk(&g, a).unwrap();
        let det = jacobian_det_2x2(
            |x, y| {
                let im = act_disk(&g, Complex64::new(x, y)).unwrap();
                (im.re, im.im)
            },
            a.re,
            a.im,
            1e-5,
        );
        let lhs = density_disk(w).unwrap() * det.abs();
        let rhs = density_disk(a).unwrap();
        inv_disk = inv_disk.max(((lhs - rhs) / rhs).abs());
    }
    checks.push(CheckResult::new("invariant measure (disk, FD Jacobian)", inv_disk, 1e-8));

    let mut inv_tilde = 0.0f64;
    let mut done = 0;
    while done < 200 {
        let g = sampling::cl11_element(&mut rng, 0.5);
        let p = if done % 2 == 0 {
            sampling::plus_sheet_disk_point(&mut rng, 0.2)
        } else {
            sampling::minus_sheet_disk_point(&mut rng, 0.2)
        };
        let u = p.u;
        let den = crate::moebius::tilde_denominator(&g.inverse().unwrap(), u);
        if !den.is_invertible(0.15) {
            continue;
        }
        let w = match act_tilde(&g, u) {
            Ok(w) => w,
            Err(_) => continue,
        };
        if (1.0 + w.square()).abs() < 0.05 || (1.0 + u.square()).abs() < 0.05 {
            continue;
        }
        done += 1;
        let det = jacobian_det_2x2(
            |u1, u2| {
                let im = act_tilde(&g, crate::clifford::Vector11::new(u1, u2)).unwrap();
                (im.u1, im.u2)
            },
            u.u1,
            u.u2,
            1e-5,
        );
        let lhs = density_tilde(w).unwrap() * det.abs();
        let rhs = density_tilde(u).unwrap();
        inv_tilde = inv_tilde.max(((lhs - rhs) / rhs).abs());
    }
    checks.push(CheckResult::new("invariant measure (tilde, FD Jacobian)", inv_tilde, 1e-8));

    // special matrices act per the vector representation
    let mut special = 0.0f64;
    for _ in 0..100 {
        let x = sampling::offcone_vector(&mut rng, 2.0, 1e-2);
        let kel = crate::moebius::special_action(
            Cliff11::ZERO,
            -Cliff11::ONE,
            Cliff11::ONE,
            Cliff11::ZERO,
            x,
        )
        .unwrap();
        let inv = x.kelvin_inverse().unwrap();
        special = special.max((kel + inv).norm_inf());
    }
    checks.push(CheckResult::new("Kelvin matrix sends u to -u^{-1}", special, 1e-10));

    SuiteReport { suite: "moebius".into(), seed, checks }
}

fn representations_suite(seed: u64) -> SuiteReport {
    let mut rng = sampling::rng_from_seed(seed);
    let mut checks = Vec::new();

    // bracket table at the matrix level
    let za = LieElement::Z.bracket(&LieElement::A);
    let zb = LieElement::Z.bracket(&LieElement::B);
    let ab = LieElement::A.bracket(&LieElement::B);
    let table = (za.xb - 2.0)
        .abs()
        .max(za.xa.abs() + za.xz.abs())
        .max((zb.xa + 2.0).abs() + zb.xb.abs() + zb.xz.abs())
        .max((ab.xz + 0.5).abs() + ab.xa.abs() + ab.xb.abs());
    checks.push(CheckResult::new("sl(2,R) bracket table (exact)", table, 0.0));

    // pi1: representation property and unitarity
    let f = CircleFunction::from_fn(1024, |phi| {
        Complex64::from_polar(1.0, phi) + Complex64::from_polar(0.4, -2.0 * phi)
    });
    let mut comp = 0.0f64;
    let mut unit = 0.0f64;
    for _ in 0..10 {
        let g = sampling::su11_element(&mut rng, 0.7);
        let h = sampling::su11_element(&mut rng, 0.7);
        let lhs = apply_pi1(&g, &apply_pi1(&h, &f));
        let rhs = apply_pi1(&g.mul(&h), &f);
        let e = lhs
            .values
            .iter()
            .zip(rhs.values.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0f64, f64::max);
        comp = comp.max(e);
        unit = unit.max(((apply_pi1(&g, &f).norm_sq() - f.norm_sq()) / f.norm_sq()).abs());
    }
    checks.push(CheckResult::new("pi1 representation property", comp, 1e-6));
    checks.push(CheckResult::new("pi1 unitarity", unit, 1e-6));

    // vacuum relations on every grid point
    let mut vac = 0.0f64;
    let ones = CircleFunction::constant(128, Complex64::new(1.0, 0.0));
    for _ in 0..20 {
        let psi = rng.gen_range(-2.0..2.0);
        let h = Su11Mat::rotation(psi);
        let out = apply_pi1(&h, &ones);
        let chi = vacuum_eigenvalue_pi1(&h);
        for v in &out.values {
            vac = vac.max((v - chi).norm());
        }
    }
    checks.push(CheckResult::new("pi1 vacuum eigenrelation (all grid points)", vac, 1e-10));

    // pi_m unitarity for m = 2
    let fd = DiskFunction::from_fn(256, 256, |w| Complex64::new(1.0, 0.0) + w * 0.6);
    let n0 = fd.norm_sq_weighted(2);
    let mut pim_unit = 0.0f64;
    for _ in 0..3 {
        let g = sampling::su11_element(&mut rng, 0.6);
        let n1 = apply_pim(2, &g, &fd).unwrap().norm_sq_weighted(2);
        pim_unit = pim_unit.max(((n1 - n0) / n0).abs());
    }
    checks.push(CheckResult::new("pi_m unitarity (m = 2)", pim_unit, 1e-5));

    // pi_sigma vacuum and eigenfunction slope
    let ones_t = TildeBoundary::from_fn(64, 3.0, |_, _| EvenNumber::ONE);
    let mut vac_t = 0.0f64;
    for sigma in [0.0, 0.7] {
        let na = exp_bivector(0.25);
        let out = apply_pisigma_slots(sigma, &Cl11Mat::new(na, crate::clifford::Vector11::ZERO), &ones_t)
            .unwrap();
        let expect = na.powf(-1.0 - 2.0 * sigma).unwrap();
        for b in 0..4 {
            for j in 0..64 {
                if out.f.grid_t(j).abs() > 2.4 {
                    continue;
                }
                vac_t = vac_t.max((out.f.branches[b][j] - expect).norm_inf());
            }
        }
    }
    checks.push(CheckResult::new("pi_sigma vacuum eigenrelation", vac_t, 1e-10));

    let mut mus = Vec::new();
    for p in [0.5f64, 1.0, 1.5, 2.0] {
        let fp = eigenfunction_fp(p, 1025, 3.0);
        let tau = 1e-3;
        let plus = apply_pisigma_slots(0.0, &Cl11Mat::hyperbolic_rotation(tau), &fp).unwrap();
        let minus = apply_pisigma_slots(0.0, &Cl11Mat::hyperbolic_rotation(-tau), &fp).unwrap();
        let j = 1025 / 2 + 30;
        let d = (plus.f.branches[0][j] - minus.f.branches[0][j]) * (1.0 / (2.0 * tau));
        let fv = fp.branches[0][j];
        mus.push(0.5 * (d.a1 / fv.a1 - d.a2 / fv.a2));
    }
    let slope = (mus[3] - mus[0]) / 1.5;
    checks.push(CheckResult::new(
        "pi_sigma eigenfunction slope magnitude 2",
        (slope.abs() - 2.0).abs(),
        0.02,
    ));

    SuiteReport { suite: "representations".into(), seed, checks }
}

fn transforms_suite(seed: u64) -> SuiteReport {
    let mut rng = sampling::rng_from_seed(seed);
    let mut checks = Vec::new();
    let q = QuadratureSpec { n: 2048, ..Default::default() };

    let mut repro = 0.0f64;
    let mut anti = 0.0f64;
    for _ in 0..6 {
        let a = sampling::disk_point(&mut rng, 0.9);
        for k in 0..=8 {
            let f = CircleFunction::harmonic(2048, k);
            let r = cauchy_disk(&f, a, &q).unwrap();
            let expect = a.powi(k);
            repro = repro.max((r.normalized - expect).norm() / expect.norm().max(1e-3));
        }
        for k in 1..=8 {
            let f = CircleFunction::harmonic(2048, -k);
            anti = anti.max(cauchy_disk(&f, a, &q).unwrap().normalized.norm());
        }
    }
    checks.push(CheckResult::new("cauchy reproduction a^k (relative)", repro, 1e-8));
    checks.push(CheckResult::new("anti-holomorphic annihilation", anti, 1e-8));

    let ones = DiskFunction::constant(200, 200, Complex64::new(1.0, 0.0));
    let mut berg = 0.0f64;
    for _ in 0..5 {
        let a = sampling::disk_point(&mut rng, 0.7);
        berg = berg.max((bergman(2, &ones, a, &q).unwrap().normalized
            - Complex64::new(1.0, 0.0))
        .norm());
    }
    checks.push(CheckResult::new("bergman m=2 of f=1 equals 1", berg, 1e-4));

    let mut mult = 0.0f64;
    for _ in 0..100 {
        let u = sampling::offcone_vector(&mut rng, 3.0, 1e-2);
        let t = rng.gen_range(-2.0..2.0);
        let b = BranchCoord::new(rng.gen_range(0..4u8), t);
        let den = EvenNumber::ONE - b.vector() * u;
        if !den.is_invertible(1e-3) {
            continue;
        }
        let k = kernel_tilde(&TildePoint::plus(u.u1, u.u2), &b, 0.0).unwrap();
        let z = exp_bivector(t).as_cliff();
        let lhs = (z - (Cliff11::E1 * u.as_cliff()) * b.sign()) * k.as_cliff();
        mult = mult.max((lhs - Cliff11::ONE).norm_inf());
    }
    checks.push(CheckResult::new("hyperbolic kernel multiply-back", mult, 1e-12));

    // PV estimates decrease monotonically; empirical order >= 1
    let f = TildeBoundary::from_fn(257, 12.0, |b, t| {
        EvenNumber::scalar(1.0 / (1.0 + 0.05 * b as f64 + 0.1 * t * t))
    });
    let mut mono_viol = 0.0f64;
    let mut min_order = f64::INFINITY;
    for _ in 0..10 {
        let u = sampling::plus_sheet_disk_point(&mut rng, 0.1);
        let levels = pv_levels(0.0, &f, &u, &q).unwrap();
        let vals: Vec<EvenNumber> = levels.iter().map(|l| l.1).collect();
        let diffs = excision_diffs(&vals);
        for w in diffs.windows(2) {
            mono_viol = mono_viol.max(w[1] - w[0]);
        }
        let mut orders: Vec<f64> = diffs
            .windows(2)
            .filter(|w| w[1] > 1e-14)
            .map(|w| (w[0] / w[1]).log2())
            .collect();
        orders.sort_by(|a, b| a.partial_cmp(b).unwrap());
        if !orders.is_empty() {
            min_order = min_order.min(orders[orders.len() / 2]);
        }
    }
    checks.push(CheckResult::new("pv estimates decrease monotonically", mono_viol, 0.0));
    checks.push(CheckResult::new("pv empirical order >= 1", (1.0 - min_order).max(0.0), 0.05));

    // intertwining, disk side
    let fb = CircleFunction::from_fn(1024, |phi| {
        Complex64::from_polar(0.9, phi) + Complex64::from_polar(0.2, 2.0 * phi)
    });
    let pts: Vec<Complex64> = (0..5).map(|_| sampling::disk_point(&mut rng, 0.6)).collect();
    let mut inter = 0.0f64;
    for _ in 0..5 {
        let g = sampling::su11_element(&mut rng, 0.6);
        inter = inter.max(intertwining_residual_disk(&g, &fb, &pts, &q).unwrap());
    }
    checks.push(CheckResult::new("intertwining residual (disk)", inter, 1e-5));

    SuiteReport { suite: "transforms".into(), seed, checks }
}

fn operators_suite(seed: u64) -> SuiteReport {
    let mut rng = sampling::rng_from_seed(seed);
    let mut checks = Vec::new();

    let f = |z: Complex64| z * z * z + z.conj() * Complex64::new(0.3, -0.2);
    let mut slope_err = 0.0f64;
    for _ in 0..5 {
        let z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(0.5..1.5));
        for gen in [HalfplaneGen::A, HalfplaneGen::B] {
            let closed = rho_halfplane(gen, &f, z, 1e-6).unwrap();
            let errs: Vec<f64> = [1e-2, 5e-3, 2.5e-3]
                .iter()
                .map(|&h| (rho_halfplane_flow(gen, &f, z, h).unwrap() - closed).norm())
                .collect();
            slope_err = slope_err.max((richardson_slope(&errs) - 2.0).abs());
        }
    }
    let ft = |(x, y): (f64, f64)| Cliff11::new(x * x - y * y, 0.2 * x * y, y * x, x + y);
    for _ in 0..5 {
        let p = (rng.gen_range(-1.0..1.0), rng.gen_range(0.5..1.5));
        for gen in [TildeGen::A, TildeGen::Z] {
            let closed = rho_tilde(gen, &ft, p, 1e-6).unwrap();
            let errs: Vec<f64> = [1e-2, 5e-3, 2.5e-3]
                .iter()
                .map(|&h| (rho_tilde_flow(gen, &ft, p, h).unwrap() - closed).norm_inf())
                .collect();
            slope_err = slope_err.max((richardson_slope(&errs) - 2.0).abs());
        }
    }
    checks.push(CheckResult::new("generator FD vs closed form, slope 2 +- 0.2", slope_err, 0.2));

    // right-Dirac annihilation of the kernel at sampled points
    let mut dirac_res = 0.0f64;
    let mut wave_res = 0.0f64;
    let mut tried = 0;
    while tried < 40 {
        let u1: f64 = rng.gen_range(1.4..2.6);
        let u2: f64 = rng.gen_range(-0.8..0.8);
        let t0: f64 = rng.gen_range(-1.0..1.0);
        let den = EvenNumber::ONE - BranchCoord::new(0, t0).vector() * crate::clifford::Vector11::new(u1, u2);
        if den.a1.abs() < 0.5 || den.a2.abs() < 0.5 {
            continue;
        }
        tried += 1;
        let field = |(x, y): (f64, f64)| -> Cliff11 {
            kernel_tilde(&TildePoint::plus(y, x), &BranchCoord::new(0, t0), 0.0)
                .map(|e| e.as_cliff())
                .unwrap_or(Cliff11::ZERO)
        };
        let d = dirac_tilde(&field, (u2, u1), 1e-4, Side::Right).unwrap();
        dirac_res = dirac_res.max(d.norm_inf());
        let l = laplacian_tilde(&field, (u2, u1), 1e-4).unwrap();
        wave_res = wave_res.max(l.norm_inf());
    }
    checks.push(CheckResult::new("right-Dirac annihilates kernel", dirac_res, 1e-6));
    checks.push(CheckResult::new("wave operator annihilates kernel components", wave_res, 1e-5));

    // analytic extension of polynomial boundary data is holomorphic
    let q = QuadratureSpec { n: 1024, ..Default::default() };
    let fb = CircleFunction::from_fn(1024, |phi| {
        Complex64::from_polar(1.0, 2.0 * phi) + Complex64::from_polar(0.5, phi)
    });
    let pts: Vec<Complex64> = (0..8).map(|_| sampling::disk_point(&mut rng, 0.8)).collect();
    let rep = annihilation_residual_disk(&fb, &pts, &q, 1e-4).unwrap();
    checks.push(CheckResult::new("disk transform annihilated by d/dconj(a)", rep.max_residual, 1e-5));

    SuiteReport { suite: "operators".into(), seed, checks }
}

fn taylor_suite(seed: u64) -> SuiteReport {
    let mut rng = sampling::rng_from_seed(seed);
    let mut checks = Vec::new();

    let mut table = 0.0f64;
    for &a in &[0.1, 0.5, 0.9, 1.0, 1.3] {
        for &k in &[1.0, 1.5, 2.0] {
            for &t in &[0.5, 0.8, 1.2, 1.7, 2.3] {
                let (lhs, rhs) = laplace_table_check(a, k, t).unwrap();
                table = table.max((lhs - rhs).abs());
            }
        }
    }
    checks.push(CheckResult::new("laplace table identity (5x3x5 grid)", table, 1e-10));

    let mut decomp = 0.0f64;
    let mut agree = 0.0f64;
    for _ in 0..400 {
        let (u, t) = sampling::admissible_expansion_pair(&mut rng, 0.9);
        let h = hyperbolic_expand(&u, t).unwrap();
        let k = kernel_tilde(&u, &BranchCoord::new(0, t), 0.0).unwrap();
        decomp = decomp.max((h.value - k).norm_inf());
        let g = geometric_expand(&u, t, 2000).unwrap();
        agree = agree.max((*g.partial_sums.last().unwrap() - h.value).norm_inf());
    }
    checks.push(CheckResult::new("hyperbolic decomposition equals kernel", decomp, 1e-8));
    checks.push(CheckResult::new("geometric and laplace decompositions agree", agree, 1e-8));

    // classical partial sums decay like |a|^N
    let mut decay = 0.0f64;
    for _ in 0..10 {
        let a = sampling::disk_point(&mut rng, 0.9);
        let phi = rng.gen_range(0.0..2.0 * std::f64::consts::PI);
        let sums = crate::taylor::classical_partial_sums(a, phi, 200).unwrap();
        let limit = *sums.last().unwrap();
        for n in [20usize, 40, 60] {
            let err = (sums[n - 1] - limit).norm();
            let bound = 10.0 * a.norm().powi(n as i32) / (1.0 - a.norm());
            decay = decay.max((err / bound.max(1e-300)).max(0.0) - 1.0);
        }
    }
    checks.push(CheckResult::new("classical partial sums decay like |a|^N", decay.max(0.0), 0.0));

    SuiteReport { suite: "taylor".into(), seed, checks }
}

// ---------------------------------------------------------------------------
// Logged experiments (no asserted tolerances)
// ---------------------------------------------------------------------------

/// Numerical probes of the claims that ship without asserted tolerances:
/// the unitary equivalence of the mock discrete series and the sigma = 0
/// hyperbolic series, and the boundedness/isometry of the singular
/// transform. Returns human-readable log lines.
pub fn experiments(seed: u64) -> Vec<String> {
    let mut rng = sampling::rng_from_seed(seed);
    let mut log = Vec::new();

    // Spectral data of the compact and hyperbolic one-parameter subgroups.
    let ones = CircleFunction::constant(256, Complex64::new(1.0, 0.0));
    let psi = 0.3;
    let out = apply_pi1(&Su11Mat::rotation(psi), &ones);
    let measured = out.values[0] / ones.values[0];
    log.push(format!(
        "pi1 vacuum eigenvalue under rotation(psi=0.3): {:.6}{:+.6}i (|.| = {:.6})",
        measured.re,
        measured.im,
        measured.norm()
    ));
    let mut mus = Vec::new();
    for p in [0.5f64, 1.0, 1.5] {
        let fp = eigenfunction_fp(p, 513, 3.0);
        let tau = 1e-3;
        let plus = apply_pisigma_slots(0.0, &Cl11Mat::hyperbolic_rotation(tau), &fp).unwrap();
        let minus = apply_pisigma_slots(0.0, &Cl11Mat::hyperbolic_rotation(-tau), &fp).unwrap();
        let j = 513 / 2 + 20;
        let d = (plus.f.branches[0][j] - minus.f.branches[0][j]) * (1.0 / (2.0 * tau));
        let fv = fp.branches[0][j];
        mus.push(0.5 * (d.a1 / fv.a1 - d.a2 / fv.a2));
    }
    log.push(format!(
        "pi_sigma(0) A-flow eigenvalues at p = 0.5/1.0/1.5: {:.4}, {:.4}, {:.4} \
         (linear in p, |slope| 2; constant is convention-dependent and logged only)",
        mus[0], mus[1], mus[2]
    ));
    log.push(
        "pi1 ~ pi_sigma(0) unitary equivalence: spectra recorded above; no intertwiner asserted"
            .to_string(),
    );

    // Norm-ratio probe of the isometry question for W_0.
    let q = QuadratureSpec { n: 256, ..Default::default() };
    let window = |t: f64| if t.abs() < 1.0 { (1.0 - t * t).powi(2) } else { 0.0 };
    for (name, f) in [
        (
            "principal-branch bump",
            TildeBoundary::from_fn(513, 12.0, |b, t| {
                if b == 0 {
                    EvenNumber::scalar(window(t))
                } else {
                    EvenNumber::ZERO
                }
            }),
        ),
        (
            "two-branch bump",
            TildeBoundary::from_fn(513, 12.0, |b, t| {
                if b < 2 {
                    exp_bivector(0.3 * t) * window(t)
                } else {
                    EvenNumber::ZERO
                }
            }),
        ),
    ] {
        let (scalar_norm, _) = f.norm_parts();
        let mut profile = Vec::new();
        for lam in [-0.9, -0.7, -0.5, -0.3] {
            // T_lambda as printed carries the sheet tags of the complementary
            // component; the transform is evaluated on the disk-side copy of
            // each vector (same coordinates, disk-compatible sheet).
            let w = crate::transforms::sample_on_circle(lam, 65, 6.0, |_, _, p| {
                let sheet = if p.u.square() < -1.0 {
                    crate::moebius::Sheet::Plus
                } else {
                    crate::moebius::Sheet::Minus
                };
                let q_pt = TildePoint::new(sheet, p.u);
                cauchy_tilde_pv(0.0, &f, &q_pt, &q).map(|r| r.value).unwrap_or(EvenNumber::ZERO)
            })
            .unwrap();
            profile.push((lam, hardy_norm(&w, lam).unwrap()));
        }
        let ratios: Vec<String> = profile
            .iter()
            .map(|(l, n)| format!("lambda={l:.1}: |W_0 f|^2/|f|^2 = {:.4}", n / scalar_norm))
            .collect();
        log.push(format!("isometry probe ({name}): {}", ratios.join(", ")));
    }

    // Hyperbolic intertwining residual scan over subgroup-A elements.
    let f = TildeBoundary::from_fn(513, 12.0, |b, t| {
        if b == 0 {
            EvenNumber::scalar(window(t))
        } else {
            EvenNumber::ZERO
        }
    });
    let pts = [sampling::plus_sheet_disk_point(&mut rng, 0.3)];
    let mut worst = 0.0f64;
    for _ in 0..5 {
        let tau = rng.gen_range(-0.4..0.4);
        let g = Cl11Mat::hyperbolic_rotation(tau);
        if let Ok((r, _)) = intertwining_residual_tilde(0.0, &g, &f, &pts, &q) {
            worst = worst.max(r);
        }
    }
    log.push(format!("hyperbolic intertwining residual scan (A-elements): max {worst:.3e}"));

    log
}

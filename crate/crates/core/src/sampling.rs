//! Seeded generators for random group elements and domain points, shared by
//! the verification suites and the test harness. All randomness flows through
//! a caller-provided ChaCha stream so runs are reproducible from a seed.

use crate::clifford::{Cliff11, Vector11};
use crate::moebius::{cayley, to_su11, Cl11Mat, RealMat2, Su11Mat, TildePoint};
use crate::representations::{one_param, LieElement};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Clifford element with integer coefficients in [-5, 5]; products of a few
/// of these stay exact in f64.
pub fn small_int_cliff(rng: &mut impl Rng) -> Cliff11 {
    let mut c = || rng.gen_range(-5i32..=5) as f64;
    Cliff11::new(c(), c(), c(), c())
}

/// Random unimodular matrix as a bounded product of one-parameter subgroup
/// elements (determinant 1 to machine precision).
pub fn unimodular(rng: &mut impl Rng, scale: f64) -> RealMat2 {
    let t1 = rng.gen_range(-scale..scale);
    let t2 = rng.gen_range(-scale..scale);
    let t3 = rng.gen_range(-scale..scale);
    one_param(&LieElement::A, t1)
        .mul(&one_param(&LieElement::B, t2))
        .mul(&one_param(&LieElement::Z, t3))
}

pub fn su11_element(rng: &mut impl Rng, scale: f64) -> Su11Mat {
    to_su11(&unimodular(rng, scale)).expect("bounded products are unimodular")
}

pub fn cl11_element(rng: &mut impl Rng, scale: f64) -> Cl11Mat {
    cayley(&unimodular(rng, scale)).expect("bounded products are unimodular")
}

/// Point of the open unit disk with `|a| <= rmax`.
pub fn disk_point(rng: &mut impl Rng, rmax: f64) -> Complex64 {
    let r = rmax * rng.gen_range(0.0f64..1.0).sqrt();
    let th = rng.gen_range(0.0..2.0 * std::f64::consts::PI);
    Complex64::from_polar(r, th)
}

/// Vector off the light cone: `|u1^2 - u2^2|` bounded below.
pub fn offcone_vector(rng: &mut impl Rng, span: f64, margin: f64) -> Vector11 {
    loop {
        let u = Vector11::new(rng.gen_range(-span..span), rng.gen_range(-span..span));
        if (u.u1 * u.u1 - u.u2 * u.u2).abs() > margin {
            return u;
        }
    }
}

/// Interior point of the conformal disk on the plus sheet (`u^2 < -1`),
/// clear of the critical locus `|u^2| = 1` by the stated margin.
pub fn plus_sheet_disk_point(rng: &mut impl Rng, margin: f64) -> TildePoint {
    loop {
        let u1 = rng.gen_range(1.2f64..3.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let u2 = rng.gen_range(-1.0f64..1.0);
        let u = Vector11::new(u1, u2);
        if u.square() < -1.0 - margin {
            return TildePoint::new(crate::moebius::Sheet::Plus, u);
        }
    }
}

/// Interior point of the conformal disk on the minus sheet (`u^2 > -1`).
pub fn minus_sheet_disk_point(rng: &mut impl Rng, margin: f64) -> TildePoint {
    loop {
        let u = Vector11::new(rng.gen_range(-0.9f64..0.9), rng.gen_range(-0.9f64..0.9));
        if u.square() > -1.0 + margin {
            return TildePoint::new(crate::moebius::Sheet::Minus, u);
        }
    }
}

/// Admissible `(u, t)` for the hyperbolic decompositions: componentwise
/// `|a1| < eta e^t`, `|a2| < eta e^{-t}` with components of `e1 u`, and both
/// components away from 1.
pub fn admissible_expansion_pair(rng: &mut impl Rng, eta: f64) -> (TildePoint, f64) {
    loop {
        let t = rng.gen_range(-1.5f64..1.5);
        let a1 = rng.gen_range(-eta..eta) * t.exp();
        let a2 = rng.gen_range(-eta..eta) * (-t).exp();
        if (a1 - 1.0).abs() < 0.05 || (a2 - 1.0).abs() < 0.05 {
            continue;
        }
        // a1 = -u1 + u2, a2 = -u1 - u2
        let u1 = -0.5 * (a1 + a2);
        let u2 = 0.5 * (a1 - a2);
        let u = Vector11::new(u1, u2);
        let sq = u.square();
        let sheet = if sq < -1.0 { crate::moebius::Sheet::Plus } else { crate::moebius::Sheet::Minus };
        return (TildePoint::new(sheet, u), t);
    }
}

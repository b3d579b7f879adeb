//! Arithmetic in the real Clifford algebra Cl(1,1) and its even subalgebra.
//!
//! Generators satisfy `e1^2 = -1`, `e2^2 = +1`, `e1 e2 = -e2 e1`. The even
//! part (spanned by `1` and `e1 e2`) is the split-complex plane; it is
//! diagonalized by the idempotents `p1 = (1 + e1e2)/2`, `p2 = (1 - e1e2)/2`,
//! so even numbers are stored in idempotent components where every operation
//! is componentwise.

use crate::error::{Error, Result};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Relative tolerance deciding when a vector counts as lying on the light cone.
pub const LIGHT_CONE_TOL: f64 = 1e-12;

/// General element `c0 + c1 e1 + c2 e2 + c12 e1e2` of Cl(1,1).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Cliff11 {
    pub c0: f64,
    pub c1: f64,
    pub c2: f64,
    pub c12: f64,
}

/// Which of the three grade involutions to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Involution {
    /// `*`: sign `(-1)^{r(r-1)/2}` on grade r; anti-automorphism.
    Reversion,
    /// `bar`: sign `(-1)^{r(r+1)/2}` on grade r; anti-automorphism.
    Conjugation,
    /// `'`: sign `(-1)^r` on grade r; automorphism.
    Grade,
}

impl Cliff11 {
    pub const ZERO: Cliff11 = Cliff11 { c0: 0.0, c1: 0.0, c2: 0.0, c12: 0.0 };
    pub const ONE: Cliff11 = Cliff11 { c0: 1.0, c1: 0.0, c2: 0.0, c12: 0.0 };
    pub const E1: Cliff11 = Cliff11 { c0: 0.0, c1: 1.0, c2: 0.0, c12: 0.0 };
    pub const E2: Cliff11 = Cliff11 { c0: 0.0, c1: 0.0, c2: 1.0, c12: 0.0 };
    pub const E12: Cliff11 = Cliff11 { c0: 0.0, c1: 0.0, c2: 0.0, c12: 1.0 };

    pub fn new(c0: f64, c1: f64, c2: f64, c12: f64) -> Self {
        Cliff11 { c0, c1, c2, c12 }
    }

    pub fn scalar(s: f64) -> Self {
        Cliff11 { c0: s, ..Self::ZERO }
    }

    /// Scalar (grade-0) part.
    pub fn scalar_part(&self) -> f64 {
        self.c0
    }

    /// True when the element has no vector part.
    pub fn is_even(&self, tol: f64) -> bool {
        self.c1.abs() <= tol && self.c2.abs() <= tol
    }

    /// True when the element is a pure vector.
    pub fn is_vector(&self, tol: f64) -> bool {
        self.c0.abs() <= tol && self.c12.abs() <= tol
    }

    /// Even part as an `EvenNumber`, dropping any vector part.
    pub fn even_part(&self) -> EvenNumber {
        EvenNumber::from_parts(self.c0, self.c12)
    }

    /// Vector part, dropping scalar and bivector components.
    pub fn vector_part(&self) -> Vector11 {
        Vector11 { u1: self.c1, u2: self.c2 }
    }

    pub fn conj(&self) -> Cliff11 {
        involution(Involution::Conjugation, *self)
    }

    pub fn reversion(&self) -> Cliff11 {
        involution(Involution::Reversion, *self)
    }

    pub fn grade_involution(&self) -> Cliff11 {
        involution(Involution::Grade, *self)
    }

    /// Largest coefficient magnitude; used in tolerance checks.
    pub fn norm_inf(&self) -> f64 {
        self.c0.abs().max(self.c1.abs()).max(self.c2.abs()).max(self.c12.abs())
    }

    /// Inverse via `x^{-1} = conj(x) / (x conj(x))` when `x conj(x)` is a
    /// nonzero scalar (true for vectors and even numbers and their products).
    pub fn inverse(&self) -> Result<Cliff11> {
        let xc = *self * self.conj();
        if !xc.is_even(1e-12 * self.norm_inf().max(1.0)) || xc.c12.abs() > 1e-12 * xc.c0.abs().max(1.0) {
            return Err(Error::SingularDenominator);
        }
        if xc.c0 == 0.0 {
            return Err(Error::SingularDenominator);
        }
        Ok(self.conj() * (1.0 / xc.c0))
    }
}

impl Add for Cliff11 {
    type Output = Cliff11;
    fn add(self, o: Cliff11) -> Cliff11 {
        Cliff11::new(self.c0 + o.c0, self.c1 + o.c1, self.c2 + o.c2, self.c12 + o.c12)
    }
}

impl Sub for Cliff11 {
    type Output = Cliff11;
    fn sub(self, o: Cliff11) -> Cliff11 {
        Cliff11::new(self.c0 - o.c0, self.c1 - o.c1, self.c2 - o.c2, self.c12 - o.c12)
    }
}

impl Neg for Cliff11 {
    type Output = Cliff11;
    fn neg(self) -> Cliff11 {
        Cliff11::new(-self.c0, -self.c1, -self.c2, -self.c12)
    }
}

impl Mul<f64> for Cliff11 {
    type Output = Cliff11;
    fn mul(self, s: f64) -> Cliff11 {
        Cliff11::new(self.c0 * s, self.c1 * s, self.c2 * s, self.c12 * s)
    }
}

impl Mul for Cliff11 {
    type Output = Cliff11;
    // Geometric product under e1^2 = -1, e2^2 = +1, e1e2 = -e2e1.
    fn mul(self, o: Cliff11) -> Cliff11 {
        let (a0, a1, a2, a3) = (self.c0, self.c1, self.c2, self.c12);
        let (b0, b1, b2, b3) = (o.c0, o.c1, o.c2, o.c12);
        Cliff11 {
            c0: a0 * b0 - a1 * b1 + a2 * b2 + a3 * b3,
            c1: a0 * b1 + a1 * b0 - a2 * b3 + a3 * b2,
            c2: a0 * b2 + a2 * b0 - a1 * b3 + a3 * b1,
            c12: a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
        }
    }
}

/// Apply one of the three involutions gradewise.
pub fn involution(kind: Involution, x: Cliff11) -> Cliff11 {
    // Signs per grade r: reversion (-1)^{r(r-1)/2}, conjugation (-1)^{r(r+1)/2},
    // grade involution (-1)^r.
    let (s1, s2) = match kind {
        Involution::Reversion => (1.0, -1.0),
        Involution::Conjugation => (-1.0, -1.0),
        Involution::Grade => (-1.0, 1.0),
    };
    Cliff11::new(x.c0, s1 * x.c1, s1 * x.c2, s2 * x.c12)
}

/// Vector `u1 e1 + u2 e2` of R^{1,1} inside Cl(1,1).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vector11 {
    pub u1: f64,
    pub u2: f64,
}

impl Vector11 {
    pub const ZERO: Vector11 = Vector11 { u1: 0.0, u2: 0.0 };

    pub fn new(u1: f64, u2: f64) -> Self {
        Vector11 { u1, u2 }
    }

    /// The scalar square `u^2 = -u1^2 + u2^2`.
    pub fn square(&self) -> f64 {
        -self.u1 * self.u1 + self.u2 * self.u2
    }

    pub fn as_cliff(&self) -> Cliff11 {
        Cliff11::new(0.0, self.u1, self.u2, 0.0)
    }

    /// True when `u1^2 = u2^2` up to the relative light-cone tolerance.
    pub fn on_light_cone(&self) -> bool {
        let a = self.u1 * self.u1;
        let b = self.u2 * self.u2;
        (a - b).abs() <= LIGHT_CONE_TOL * (a + b)
    }

    /// Kelvin inverse `u / u^2`, the unique vector with `u * inverse = 1`.
    pub fn kelvin_inverse(&self) -> Result<Vector11> {
        if self.on_light_cone() {
            return Err(Error::LightCone);
        }
        let s = self.square();
        Ok(Vector11::new(self.u1 / s, self.u2 / s))
    }

    /// Product `e1 * u` as an even number: `-u1 + u2 e1e2`.
    pub fn e1_times(&self) -> EvenNumber {
        EvenNumber::from_parts(-self.u1, self.u2)
    }

    /// Product `u * e1` as an even number: `-u1 - u2 e1e2`.
    pub fn times_e1(&self) -> EvenNumber {
        EvenNumber::from_parts(-self.u1, -self.u2)
    }

    pub fn norm_inf(&self) -> f64 {
        self.u1.abs().max(self.u2.abs())
    }
}

impl Add for Vector11 {
    type Output = Vector11;
    fn add(self, o: Vector11) -> Vector11 {
        Vector11::new(self.u1 + o.u1, self.u2 + o.u2)
    }
}

impl Sub for Vector11 {
    type Output = Vector11;
    fn sub(self, o: Vector11) -> Vector11 {
        Vector11::new(self.u1 - o.u1, self.u2 - o.u2)
    }
}

impl Neg for Vector11 {
    type Output = Vector11;
    fn neg(self) -> Vector11 {
        Vector11::new(-self.u1, -self.u2)
    }
}

impl Mul<f64> for Vector11 {
    type Output = Vector11;
    fn mul(self, s: f64) -> Vector11 {
        Vector11::new(self.u1 * s, self.u2 * s)
    }
}

/// Product of two vectors is even: `u v = (-u1 v1 + u2 v2) + (u1 v2 - u2 v1) e1e2`.
impl Mul for Vector11 {
    type Output = EvenNumber;
    fn mul(self, o: Vector11) -> EvenNumber {
        EvenNumber::from_parts(-self.u1 * o.u1 + self.u2 * o.u2, self.u1 * o.u2 - self.u2 * o.u1)
    }
}

/// Even number of Cl(1,1) in idempotent components: `a = a1 p1 + a2 p2`
/// with `p1 = (1 + e1e2)/2`, `p2 = (1 - e1e2)/2`.
///
/// Componentwise storage is canonical here: multiplication, inversion and the
/// functional calculus are all componentwise in `(a1, a2)`. Conversion to the
/// `(c0, c12)` coefficients is derived.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EvenNumber {
    pub a1: f64,
    pub a2: f64,
}

impl EvenNumber {
    pub const ZERO: EvenNumber = EvenNumber { a1: 0.0, a2: 0.0 };
    pub const ONE: EvenNumber = EvenNumber { a1: 1.0, a2: 1.0 };
    /// `e1e2` itself: components (+1, -1).
    pub const E12: EvenNumber = EvenNumber { a1: 1.0, a2: -1.0 };

    pub fn new(a1: f64, a2: f64) -> Self {
        EvenNumber { a1, a2 }
    }

    /// From coefficients `c0 + c12 e1e2`.
    pub fn from_parts(c0: f64, c12: f64) -> Self {
        EvenNumber { a1: c0 + c12, a2: c0 - c12 }
    }

    pub fn scalar(s: f64) -> Self {
        EvenNumber { a1: s, a2: s }
    }

    pub fn c0(&self) -> f64 {
        0.5 * (self.a1 + self.a2)
    }

    pub fn c12(&self) -> f64 {
        0.5 * (self.a1 - self.a2)
    }

    pub fn as_cliff(&self) -> Cliff11 {
        Cliff11::new(self.c0(), 0.0, 0.0, self.c12())
    }

    /// Clifford conjugation restricted to the even part swaps components.
    pub fn conj(&self) -> EvenNumber {
        EvenNumber { a1: self.a2, a2: self.a1 }
    }

    /// `a conj(a) = a1 a2`, a scalar; the split-complex modulus squared
    /// (indefinite: may be negative).
    pub fn pseudo_norm(&self) -> f64 {
        self.a1 * self.a2
    }

    /// `sqrt(|a conj(a)|)`.
    pub fn modulus(&self) -> f64 {
        self.pseudo_norm().abs().sqrt()
    }

    pub fn is_invertible(&self, tol: f64) -> bool {
        self.a1.abs() > tol && self.a2.abs() > tol
    }

    pub fn inverse(&self) -> Result<EvenNumber> {
        if self.a1 == 0.0 || self.a2 == 0.0 {
            return Err(Error::SingularDenominator);
        }
        Ok(EvenNumber::new(1.0 / self.a1, 1.0 / self.a2))
    }

    /// Integer power, componentwise; negative exponents require invertibility.
    pub fn powi(&self, n: i32) -> Result<EvenNumber> {
        if n < 0 && (self.a1 == 0.0 || self.a2 == 0.0) {
            return Err(Error::SingularDenominator);
        }
        Ok(EvenNumber::new(self.a1.powi(n), self.a2.powi(n)))
    }

    /// Real power via the functional calculus. Defined only when both
    /// components are positive, except that integer exponents fall back to
    /// `powi` (the sole case the theory evaluates at negative components).
    pub fn powf(&self, s: f64) -> Result<EvenNumber> {
        if s == s.round() && s.abs() < 1e9 {
            return self.powi(s as i32);
        }
        if self.a1 <= 0.0 {
            return Err(Error::Domain { component: self.a1 });
        }
        if self.a2 <= 0.0 {
            return Err(Error::Domain { component: self.a2 });
        }
        Ok(EvenNumber::new(self.a1.powf(s), self.a2.powf(s)))
    }

    pub fn exp(&self) -> EvenNumber {
        EvenNumber::new(self.a1.exp(), self.a2.exp())
    }

    pub fn norm_inf(&self) -> f64 {
        self.a1.abs().max(self.a2.abs())
    }

    /// Left or right product with a vector (both are vectors again).
    /// `m * u = (c0 u1 + c12 u2) e1 + (c0 u2 + c12 u1) e2`.
    pub fn mul_vector(&self, u: Vector11) -> Vector11 {
        let (c0, c12) = (self.c0(), self.c12());
        Vector11::new(c0 * u.u1 + c12 * u.u2, c0 * u.u2 + c12 * u.u1)
    }
}

/// `u * m = conj(m) * u` for even `m`.
pub fn vector_mul_even(u: Vector11, m: EvenNumber) -> Vector11 {
    m.conj().mul_vector(u)
}

impl Add for EvenNumber {
    type Output = EvenNumber;
    fn add(self, o: EvenNumber) -> EvenNumber {
        EvenNumber::new(self.a1 + o.a1, self.a2 + o.a2)
    }
}

impl Sub for EvenNumber {
    type Output = EvenNumber;
    fn sub(self, o: EvenNumber) -> EvenNumber {
        EvenNumber::new(self.a1 - o.a1, self.a2 - o.a2)
    }
}

impl Neg for EvenNumber {
    type Output = EvenNumber;
    fn neg(self) -> EvenNumber {
        EvenNumber::new(-self.a1, -self.a2)
    }
}

impl Mul for EvenNumber {
    type Output = EvenNumber;
    fn mul(self, o: EvenNumber) -> EvenNumber {
        EvenNumber::new(self.a1 * o.a1, self.a2 * o.a2)
    }
}

impl Mul<f64> for EvenNumber {
    type Output = EvenNumber;
    fn mul(self, s: f64) -> EvenNumber {
        EvenNumber::new(self.a1 * s, self.a2 * s)
    }
}

impl Div for EvenNumber {
    type Output = EvenNumber;
    fn div(self, o: EvenNumber) -> EvenNumber {
        EvenNumber::new(self.a1 / o.a1, self.a2 / o.a2)
    }
}

/// Functional calculus on even numbers: `f(a) = f(a1) p1 + f(a2) p2`.
///
/// Returns `Domain` when `f` produces a non-finite value at a component.
pub fn even_calculus(f: impl Fn(f64) -> f64, a: EvenNumber) -> Result<EvenNumber> {
    let b1 = f(a.a1);
    let b2 = f(a.a2);
    if !b1.is_finite() {
        return Err(Error::Domain { component: a.a1 });
    }
    if !b2.is_finite() {
        return Err(Error::Domain { component: a.a2 });
    }
    Ok(EvenNumber::new(b1, b2))
}

/// `exp(tau e1e2) = cosh(tau) + e1e2 sinh(tau) = e^{tau} p1 + e^{-tau} p2`.
pub fn exp_bivector(tau: f64) -> EvenNumber {
    EvenNumber::new(tau.exp(), (-tau).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn small_int() -> impl Strategy<Value = f64> {
        (-5i32..=5).prop_map(|k| k as f64)
    }

    fn small_cliff() -> impl Strategy<Value = Cliff11> {
        (small_int(), small_int(), small_int(), small_int())
            .prop_map(|(a, b, c, d)| Cliff11::new(a, b, c, d))
    }

    #[test]
    fn generator_relations() {
        assert_eq!(Cliff11::E1 * Cliff11::E1, Cliff11::scalar(-1.0));
        assert_eq!(Cliff11::E2 * Cliff11::E2, Cliff11::scalar(1.0));
        assert_eq!(Cliff11::E1 * Cliff11::E2 + Cliff11::E2 * Cliff11::E1, Cliff11::ZERO);
        assert_eq!(Cliff11::E12 * Cliff11::E12, Cliff11::ONE);
    }

    #[test]
    fn unit_is_identity() {
        let x = Cliff11::new(1.0, -2.0, 3.0, 0.5);
        assert_eq!(Cliff11::ONE * x, x);
        assert_eq!(x * Cliff11::ONE, x);
    }

    #[test]
    fn worked_square_example() {
        // (e1 + 2e2)^2 = 3: cross terms cancel by anticommutation.
        let x = Cliff11::new(0.0, 1.0, 2.0, 0.0);
        assert_eq!(x * x, Cliff11::scalar(3.0));
    }

    #[test]
    fn involution_examples() {
        assert_eq!(involution(Involution::Conjugation, Cliff11::E12), -Cliff11::E12);
        assert_eq!(involution(Involution::Reversion, Cliff11::scalar(4.0)), Cliff11::scalar(4.0));
        let x = Cliff11::new(3.0, 1.0, 0.0, 0.0);
        assert_eq!(involution(Involution::Grade, x), Cliff11::new(3.0, -1.0, 0.0, 0.0));
        // On vectors: bar(x) = x' = -x, x* = x.
        let v = Cliff11::new(0.0, 2.0, -1.0, 0.0);
        assert_eq!(involution(Involution::Conjugation, v), -v);
        assert_eq!(involution(Involution::Grade, v), -v);
        assert_eq!(involution(Involution::Reversion, v), v);
    }

    #[test]
    fn kelvin_examples() {
        let e1 = Vector11::new(1.0, 0.0);
        assert_eq!(e1.kelvin_inverse().unwrap(), Vector11::new(-1.0, 0.0));

        let x = Vector11::new(1.0, 2.0);
        let y = x.kelvin_inverse().unwrap();
        assert_eq!(y, Vector11::new(1.0 / 3.0, 2.0 / 3.0));
        let back = x.as_cliff() * y.as_cliff();
        assert_relative_eq!(back.c0, 1.0, max_relative = 1e-14);
        assert!(back.norm_inf() - back.c0.abs() < 1e-14);

        assert_eq!(Vector11::new(1.0, 1.0).kelvin_inverse(), Err(Error::LightCone));
    }

    #[test]
    fn idempotent_identities_exact() {
        let p1 = EvenNumber::new(1.0, 0.0);
        let p2 = EvenNumber::new(0.0, 1.0);
        assert_eq!(p1 * p2, EvenNumber::ZERO);
        assert_eq!(p2 * p1, EvenNumber::ZERO);
        assert_eq!(p1 * p1, p1);
        assert_eq!(p2 * p2, p2);
        assert_eq!(p1 + p2, EvenNumber::ONE);
        // And in the full algebra.
        let q1 = (Cliff11::ONE + Cliff11::E12) * 0.5;
        let q2 = (Cliff11::ONE - Cliff11::E12) * 0.5;
        assert_eq!(q1 * q2, Cliff11::ZERO);
        assert_eq!(q1 * q1, q1);
        assert_eq!(q2 * q2, q2);
        assert_eq!(q1 + q2, Cliff11::ONE);
    }

    #[test]
    fn even_calculus_examples() {
        let a = EvenNumber::new(2.0, 3.0);
        assert_eq!(even_calculus(|x| x * x, a).unwrap(), EvenNumber::new(4.0, 9.0));
        assert_eq!(even_calculus(|x| x * x, a).unwrap(), a * a);
        assert_eq!(even_calculus(|x| x, a).unwrap(), a);
        let l = even_calculus(f64::ln, a).unwrap();
        assert_relative_eq!(l.a1, 2.0f64.ln());
        assert_relative_eq!(l.a2, 3.0f64.ln());
        assert!(even_calculus(f64::ln, EvenNumber::new(-1.0, 2.0)).is_err());
    }

    #[test]
    fn even_calculus_matches_polynomial_evaluation() {
        // Dyadic-rational coefficients and small integer components stay exact.
        let coeffs = [0.5, -1.25, 2.0, 0.75, -0.5, 1.0, 0.25, -2.0, 0.125];
        let horner = |a: EvenNumber| {
            let mut acc = EvenNumber::ZERO;
            for &c in coeffs.iter().rev() {
                acc = acc * a + EvenNumber::scalar(c);
            }
            acc
        };
        for a1 in [-3.0f64, -1.0, 0.0, 2.0, 3.0] {
            for a2 in [-2.0f64, 0.0, 1.0, 3.0] {
                let a = EvenNumber::new(a1, a2);
                let poly = |x: f64| coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c);
                assert_eq!(even_calculus(poly, a).unwrap(), horner(a));
            }
        }
    }

    #[test]
    fn exp_bivector_examples() {
        assert_eq!(exp_bivector(0.0), EvenNumber::ONE);
        let e = exp_bivector(2.0f64.ln());
        assert_relative_eq!(e.c0(), 1.25, max_relative = 1e-15);
        assert_relative_eq!(e.c12(), 0.75, max_relative = 1e-15);
        let lhs = exp_bivector(0.3) * exp_bivector(0.4);
        let rhs = exp_bivector(0.7);
        assert_relative_eq!(lhs.a1, rhs.a1, max_relative = 1e-15);
        assert_relative_eq!(lhs.a2, rhs.a2, max_relative = 1e-15);
    }

    #[test]
    fn even_vector_commutation() {
        // m u = u conj(m) for even m and vector u.
        let m = EvenNumber::new(2.0, -3.0);
        let u = Vector11::new(1.5, -0.5);
        let lhs = m.as_cliff() * u.as_cliff();
        let rhs = u.as_cliff() * m.conj().as_cliff();
        assert_eq!(lhs, rhs);
        assert_eq!(m.mul_vector(u).as_cliff(), lhs);
        assert_eq!(vector_mul_even(u, m), m.conj().mul_vector(u));
    }

    proptest! {
        #[test]
        fn associativity_exact(x in small_cliff(), y in small_cliff(), z in small_cliff()) {
            prop_assert_eq!((x * y) * z, x * (y * z));
        }

        #[test]
        fn involutions_are_anti_homomorphisms(x in small_cliff(), y in small_cliff()) {
            let p = x * y;
            prop_assert_eq!(
                involution(Involution::Reversion, p),
                involution(Involution::Reversion, y) * involution(Involution::Reversion, x)
            );
            prop_assert_eq!(
                involution(Involution::Conjugation, p),
                involution(Involution::Conjugation, y) * involution(Involution::Conjugation, x)
            );
            prop_assert_eq!(
                involution(Involution::Grade, p),
                involution(Involution::Grade, x) * involution(Involution::Grade, y)
            );
        }

        #[test]
        fn kelvin_round_trip(u1 in -3.0f64..3.0, u2 in -3.0f64..3.0) {
            let u = Vector11::new(u1, u2);
            prop_assume!(u.square().abs() > 1e-6);
            let inv = u.kelvin_inverse().unwrap();
            let p = u.as_cliff() * inv.as_cliff();
            // Relative to the cancellation scale (u1^2 + u2^2)/|u^2|.
            let scale = (u1 * u1 + u2 * u2) / u.square().abs();
            prop_assert!((p.c0 - 1.0).abs() < 1e-14 * scale.max(1.0));
            prop_assert!(p.norm_inf() - p.c0.abs() < 1e-14 * scale.max(1.0));
        }

        #[test]
        fn even_subalgebra_closed(a in small_cliff(), b in small_cliff()) {
            let ae = Cliff11::new(a.c0, 0.0, 0.0, a.c12);
            let be = Cliff11::new(b.c0, 0.0, 0.0, b.c12);
            prop_assert!((ae * be).is_vector(0.0) || (ae * be).is_even(0.0));
            prop_assert!((ae * be).is_even(0.0));
            // and matches the componentwise product
            let prod = ae.even_part() * be.even_part();
            prop_assert_eq!(prod.as_cliff(), ae * be);
        }
    }
}

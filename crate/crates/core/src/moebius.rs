//! The three SL(2,R) realizations, the Cayley conjugation between them,
//! section/projection maps, Moebius actions with invariant measures, and the
//! double-cover geometry of the conformal disk and circle in R^{1,1}.
//!
//! Convention note. The fraction-linear formulas take their coefficients from
//! the matrix labelled `g^{-1}` in the source formulas. Every action is
//! therefore exposed twice: `act_*_slots(m, x)` reads the coefficients from
//! the matrix passed ("slots" convention; composes covariantly in the matrix,
//! `slots(m) . slots(n) = slots(m n)`), and `act_*(g, x)` inverts first, so it
//! realizes `g: x -> s^{-1}(g^{-1} s(x))` and composes contravariantly:
//! `act(g, act(h, x)) = act(h g, x)`.

use crate::clifford::{vector_mul_even, Cliff11, EvenNumber, Vector11};
use crate::error::{Error, Result};
use num_complex::Complex64;

pub const UNIMODULAR_TOL: f64 = 1e-12;

// ---------------------------------------------------------------------------
// Group element realizations
// ---------------------------------------------------------------------------

/// Element of SL(2,R) as a real 2x2 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealMat2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl RealMat2 {
    pub const IDENTITY: RealMat2 = RealMat2 { a: 1.0, b: 0.0, c: 0.0, d: 1.0 };

    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        RealMat2 { a, b, c, d }
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn check_unimodular(&self) -> Result<()> {
        let det = self.det();
        if (det - 1.0).abs() > UNIMODULAR_TOL {
            return Err(Error::NotUnimodular { det });
        }
        Ok(())
    }

    /// Inverse of a unimodular matrix.
    pub fn inverse(&self) -> RealMat2 {
        RealMat2::new(self.d, -self.b, -self.c, self.a)
    }

    pub fn mul(&self, o: &RealMat2) -> RealMat2 {
        RealMat2::new(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }
}

/// Element of SU(1,1): the matrix `[[alpha, beta], [conj(beta), conj(alpha)]]`
/// with `|alpha|^2 - |beta|^2 = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Su11Mat {
    pub alpha: Complex64,
    pub beta: Complex64,
}

impl Su11Mat {
    pub const IDENTITY: Su11Mat = Su11Mat {
        alpha: Complex64 { re: 1.0, im: 0.0 },
        beta: Complex64 { re: 0.0, im: 0.0 },
    };

    pub fn new(alpha: Complex64, beta: Complex64) -> Self {
        Su11Mat { alpha, beta }
    }

    /// `|alpha|^2 - |beta|^2`; equals 1 for group elements.
    pub fn det(&self) -> f64 {
        self.alpha.norm_sqr() - self.beta.norm_sqr()
    }

    pub fn inverse(&self) -> Su11Mat {
        Su11Mat::new(self.alpha.conj(), -self.beta)
    }

    pub fn mul(&self, o: &Su11Mat) -> Su11Mat {
        Su11Mat::new(
            self.alpha * o.alpha + self.beta * o.beta.conj(),
            self.alpha * o.beta + self.beta * o.alpha.conj(),
        )
    }

    /// Diagonal rotation `diag(e^{i psi}, e^{-i psi})`.
    pub fn rotation(psi: f64) -> Su11Mat {
        Su11Mat::new(Complex64::from_polar(1.0, psi), Complex64::new(0.0, 0.0))
    }
}

/// Element of the Cl(1,1) realization: the matrix
/// `[[na, nb], [-nb, na]]` with even `na`, vector `nb` and pseudodeterminant
/// `na conj(na) - nb conj(nb) = +-1` (the sign is carried by the element, see
/// `pseudodet`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cl11Mat {
    pub na: EvenNumber,
    pub nb: Vector11,
}

impl Cl11Mat {
    pub const IDENTITY: Cl11Mat = Cl11Mat { na: EvenNumber::ONE, nb: Vector11::ZERO };

    pub fn new(na: EvenNumber, nb: Vector11) -> Self {
        Cl11Mat { na, nb }
    }

    /// `na conj(na) - nb conj(nb)`, a scalar. Sections over points with
    /// `1 + u^2 < 0` carry the value -1; everything tracks that sign.
    pub fn pseudodet(&self) -> f64 {
        // nb conj(nb) = -nb^2 for a vector nb.
        self.na.pseudo_norm() + self.nb.square()
    }

    pub fn mul(&self, o: &Cl11Mat) -> Cl11Mat {
        // [[na, nb], [-nb, na]] [[ma, mb], [-mb, ma]]
        //   = [[na ma - nb mb, na mb + nb ma], [.., ..]]
        let na = self.na * o.na - self.nb * o.nb;
        let nb = self.na.mul_vector(o.nb) + vector_mul_even(self.nb, o.na);
        Cl11Mat::new(na, nb)
    }

    /// Inverse: `pseudodet^{-1} [[conj(na), -nb], [nb, conj(na)]]`.
    pub fn inverse(&self) -> Result<Cl11Mat> {
        let delta = self.pseudodet();
        if delta.abs() < 1e-14 {
            return Err(Error::DegenerateElement);
        }
        let s = 1.0 / delta;
        Ok(Cl11Mat::new(self.na.conj() * s, -self.nb * s))
    }

    /// Diagonal subgroup element `diag(e^{e1e2 tau}, e^{e1e2 tau})`.
    pub fn hyperbolic_rotation(tau: f64) -> Cl11Mat {
        Cl11Mat::new(crate::clifford::exp_bivector(tau), Vector11::ZERO)
    }
}

// ---------------------------------------------------------------------------
// Realization changes
// ---------------------------------------------------------------------------

/// SL(2,R) -> SU(1,1) via `alpha = ((a+d) + i(c-b))/2`, `beta = ((b+c) + i(d-a))/2`.
///
/// This is the entrywise conjugate of the Cayley conjugation
/// `g -> C g C^{-1}`, `C = (1/sqrt 2) [[1, -i], [-i, 1]]`, hence a genuine
/// group homomorphism into matrices `[[alpha, beta], [conj beta, conj alpha]]`.
pub fn to_su11(g: &RealMat2) -> Result<Su11Mat> {
    g.check_unimodular()?;
    Ok(Su11Mat::new(
        Complex64::new(0.5 * (g.a + g.d), 0.5 * (g.c - g.b)),
        Complex64::new(0.5 * (g.b + g.c), 0.5 * (g.d - g.a)),
    ))
}

/// SL(2,R) -> Cl(1,1) realization by conjugation with the Cayley matrix:
/// `na = (a(1 - e1e2) + d(1 + e1e2))/2`, `nb = (b(e1 - e2) + c(e1 + e2))/2`.
pub fn cayley(g: &RealMat2) -> Result<Cl11Mat> {
    g.check_unimodular()?;
    // In idempotent components na = d p1 + a p2.
    let na = EvenNumber::new(g.d, g.a);
    let nb = Vector11::new(0.5 * (g.b + g.c), 0.5 * (g.c - g.b));
    Ok(Cl11Mat::new(na, nb))
}

// ---------------------------------------------------------------------------
// Sections and projections
// ---------------------------------------------------------------------------

/// Section of the unit disk: `s(a) = (1 - |a|^2)^{-1/2} [[1, a], [conj(a), 1]]`.
pub fn section_disk(a: Complex64) -> Result<Su11Mat> {
    let n = a.norm_sqr();
    if n >= 1.0 {
        return Err(Error::OutOfDomain);
    }
    let k = 1.0 / (1.0 - n).sqrt();
    Ok(Su11Mat::new(Complex64::new(k, 0.0), a * k))
}

/// Section of the double-cover disk:
/// `s(u) = |1 + u^2|^{-1/2} [[1, u], [-u, 1]]`.
///
/// When `1 + u^2 < 0` the pseudodeterminant of the result is -1; the sign is
/// recoverable from `pseudodet`, keeping all entries real.
pub fn section_tilde(u: Vector11) -> Result<Cl11Mat> {
    let w = 1.0 + u.square();
    if w.abs() < 1e-14 {
        return Err(Error::OutOfDomain);
    }
    let k = 1.0 / w.abs().sqrt();
    Ok(Cl11Mat::new(EvenNumber::scalar(k), u * k))
}

/// Subgroup part of the disk factorization `g = s(point) h`:
/// `h = diag(alpha/|alpha|, conj(alpha)/|alpha|)`.
pub fn project_disk(g: &Su11Mat) -> Result<Su11Mat> {
    let m = g.alpha.norm();
    if m < 1e-14 {
        return Err(Error::DegenerateElement);
    }
    Ok(Su11Mat::new(g.alpha / m, Complex64::new(0.0, 0.0)))
}

/// Point part of the disk factorization: `a = beta conj(alpha)^{-1}`.
pub fn point_disk(g: &Su11Mat) -> Result<Complex64> {
    if g.alpha.norm() < 1e-14 {
        return Err(Error::DegenerateElement);
    }
    Ok(g.beta / g.alpha.conj())
}

/// Subgroup part of the tilde factorization: `diag(na/|na|, na/|na|)`.
pub fn project_tilde(g: &Cl11Mat) -> Result<Cl11Mat> {
    let m = g.na.modulus();
    if m < 1e-14 || !g.na.is_invertible(1e-14) {
        return Err(Error::DegenerateElement);
    }
    Ok(Cl11Mat::new(g.na * (1.0 / m), Vector11::ZERO))
}

/// Point part of the tilde factorization: `u = nb na^{-1}`.
pub fn point_tilde(g: &Cl11Mat) -> Result<Vector11> {
    let inv = g.na.inverse().map_err(|_| Error::DegenerateElement)?;
    Ok(inv.conj().mul_vector(g.nb))
}

// ---------------------------------------------------------------------------
// Moebius actions
// ---------------------------------------------------------------------------

/// Disk action with coefficients read from the passed matrix:
/// `z -> (alpha z + beta) / (conj(beta) z + conj(alpha))`.
pub fn act_disk_slots(m: &Su11Mat, z: Complex64) -> Result<Complex64> {
    let den = m.beta.conj() * z + m.alpha.conj();
    if den.norm() < 1e-14 {
        return Err(Error::SingularDenominator);
    }
    Ok((m.alpha * z + m.beta) / den)
}

/// Disk action of the group element `g` (coefficients from `g^{-1}`).
pub fn act_disk(g: &Su11Mat, z: Complex64) -> Result<Complex64> {
    act_disk_slots(&g.inverse(), z)
}

/// Tilde action on vectors with coefficients from the passed matrix:
/// `u -> (na u + nb)(-nb u + na)^{-1}`.
pub fn act_tilde_slots(m: &Cl11Mat, u: Vector11) -> Result<Vector11> {
    let den = tilde_denominator(m, u);
    let num = m.na.mul_vector(u) + m.nb;
    let inv = den.inverse().map_err(|_| Error::SingularDenominator)?;
    Ok(vector_mul_even(num, inv))
}

/// The even denominator `-nb u + na` of the tilde action.
pub fn tilde_denominator(m: &Cl11Mat, u: Vector11) -> EvenNumber {
    m.na - m.nb * u
}

/// Tilde action of a group element (coefficients from `g^{-1}`).
pub fn act_tilde(g: &Cl11Mat, u: Vector11) -> Result<Vector11> {
    act_tilde_slots(&g.inverse()?, u)
}

/// Tilde action on sheet-tagged disk points. The output sheet is fixed by the
/// invariant disk membership (`u^2 < -1` on the plus sheet, `u^2 > -1` on the
/// minus sheet): the action glues through the light cone at infinity, and the
/// disk holds exactly one copy of each algebraic point.
pub fn act_tilde_point_slots(m: &Cl11Mat, p: &TildePoint) -> Result<TildePoint> {
    if !in_disk(p) {
        return Err(Error::OutOfDomain);
    }
    let w = act_tilde_slots(m, p.u)?;
    let sq = w.square();
    if (sq + 1.0).abs() < 1e-14 {
        return Err(Error::SingularDenominator);
    }
    let sheet = if sq < -1.0 { Sheet::Plus } else { Sheet::Minus };
    Ok(TildePoint { sheet, u: w })
}

pub fn act_tilde_point(g: &Cl11Mat, p: &TildePoint) -> Result<TildePoint> {
    act_tilde_point_slots(&g.inverse()?, p)
}

/// Upper half plane action `z -> (az + b)/(cz + d)` with real coefficients
/// from the passed matrix.
pub fn act_halfplane_slots(m: &RealMat2, z: Complex64) -> Result<Complex64> {
    let den = Complex64::new(m.c * z.re + m.d, m.c * z.im);
    if den.norm() < 1e-14 {
        return Err(Error::SingularDenominator);
    }
    Ok((Complex64::new(m.a, 0.0) * z + m.b) / den)
}

pub fn act_halfplane(g: &RealMat2, z: Complex64) -> Result<Complex64> {
    act_halfplane_slots(&g.inverse(), z)
}

/// "Left" half plane in R^{1,1}: points `z = y e1 + x e2`, acted on by the
/// realization `[[a, b e2], [c e2, d]]`: `z -> (a z + b e2)(c e2 z + d)^{-1}`.
pub fn act_tilde_halfplane_slots(m: &RealMat2, x: f64, y: f64) -> Result<(f64, f64)> {
    let z = Vector11::new(y, x);
    // c e2 z + d: e2 z = e2 (y e1 + x e2) = x - y e1e2, an even number.
    let den = EvenNumber::from_parts(m.c * x + m.d, -m.c * y);
    let inv = den.inverse().map_err(|_| Error::SingularDenominator)?;
    let num = z * m.a + Vector11::new(0.0, m.b);
    let w = vector_mul_even(num, inv);
    Ok((w.u2, w.u1))
}

pub fn act_tilde_halfplane(g: &RealMat2, x: f64, y: f64) -> Result<(f64, f64)> {
    act_tilde_halfplane_slots(&g.inverse(), x, y)
}

/// Moebius action on R^{1,1} vectors by a matrix of Clifford entries,
/// `x -> (a x + b)(c x + d)^{-1}`. Covers the special matrices: shifts,
/// rotations, dilations and the Kelvin-inverse matrix `[[0, -1], [1, 0]]`.
pub fn special_action(a: Cliff11, b: Cliff11, c: Cliff11, d: Cliff11, x: Vector11) -> Result<Vector11> {
    let xc = x.as_cliff();
    let num = a * xc + b;
    let den = c * xc + d;
    let inv = den.inverse()?;
    let w = num * inv;
    if !w.is_vector(1e-9 * w.norm_inf().max(1.0)) {
        return Err(Error::SingularDenominator);
    }
    Ok(w.vector_part())
}

// ---------------------------------------------------------------------------
// Invariant measures
// ---------------------------------------------------------------------------

/// Density of the invariant measure on the disk: `(1 - |a|^2)^{-2}`.
pub fn density_disk(a: Complex64) -> Result<f64> {
    let w = 1.0 - a.norm_sqr();
    if w.abs() < 1e-14 {
        return Err(Error::OutOfDomain);
    }
    Ok(1.0 / (w * w))
}

/// Density of the invariant measure on the tilde disk:
/// `(1 - u1^2 + u2^2)^{-2} = (1 + u^2)^{-2}`.
pub fn density_tilde(u: Vector11) -> Result<f64> {
    let w = 1.0 + u.square();
    if w.abs() < 1e-14 {
        return Err(Error::OutOfDomain);
    }
    Ok(1.0 / (w * w))
}

// ---------------------------------------------------------------------------
// Double-cover geometry
// ---------------------------------------------------------------------------

/// Which copy of R^{1,1} a point of the two-fold cover lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sheet {
    Plus,
    Minus,
}

/// Point of the double cover of R^{1,1}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TildePoint {
    pub sheet: Sheet,
    pub u: Vector11,
}

impl TildePoint {
    pub fn new(sheet: Sheet, u: Vector11) -> Self {
        TildePoint { sheet, u }
    }

    pub fn plus(u1: f64, u2: f64) -> Self {
        TildePoint { sheet: Sheet::Plus, u: Vector11::new(u1, u2) }
    }

    pub fn minus(u1: f64, u2: f64) -> Self {
        TildePoint { sheet: Sheet::Minus, u: Vector11::new(u1, u2) }
    }
}

/// Membership in the open conformal unit disk:
/// plus sheet with `u^2 < -1`, or minus sheet with `u^2 > -1`.
pub fn in_disk(p: &TildePoint) -> bool {
    let s = p.u.square();
    match p.sheet {
        Sheet::Plus => s < -1.0,
        Sheet::Minus => s > -1.0,
    }
}

/// Exponential coordinate on one of the four branches of the conformal unit
/// circle. Branch numbering: `branch = 2 * sheet_bit + sign_bit`, with
/// sign_bit 0 for the `+e1` factor and sheet_bit 0 for the plus sheet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchCoord {
    pub branch: u8,
    pub t: f64,
}

impl BranchCoord {
    pub fn new(branch: u8, t: f64) -> Self {
        assert!(branch < 4, "branch index must be 0..=3");
        BranchCoord { branch, t }
    }

    /// Sign of the `e1` factor: +1 on branches 0, 2; -1 on branches 1, 3.
    pub fn sign(&self) -> f64 {
        if self.branch.is_multiple_of(2) {
            1.0
        } else {
            -1.0
        }
    }

    pub fn sheet(&self) -> Sheet {
        if self.branch < 2 {
            Sheet::Plus
        } else {
            Sheet::Minus
        }
    }

    /// The circle point `+-e1 e^{e1e2 t} = +-(cosh t e1 - sinh t e2)` as a vector.
    pub fn vector(&self) -> Vector11 {
        let s = self.sign();
        Vector11::new(s * self.t.cosh(), -s * self.t.sinh())
    }
}

/// Branch index from sheet and e1-sign.
pub fn branch_index(sheet: Sheet, sign_positive: bool) -> u8 {
    let sheet_bit = match sheet {
        Sheet::Plus => 0,
        Sheet::Minus => 1,
    };
    2 * sheet_bit + if sign_positive { 0 } else { 1 }
}

/// Point of the concentric circle `T_lambda`, `-1 <= lambda < 0`:
/// radius `|lambda|` on the plus sheet (`u^2 = -lambda^2`) and `|lambda|^{-1}`
/// on the minus sheet (`u^2 = -lambda^{-2}`).
pub fn circle_point(lambda: f64, coord: &BranchCoord) -> Result<TildePoint> {
    if !(-1.0..0.0).contains(&lambda) {
        return Err(Error::BadRadius { lambda });
    }
    let r = match coord.sheet() {
        Sheet::Plus => -lambda,
        Sheet::Minus => -1.0 / lambda,
    };
    Ok(TildePoint::new(coord.sheet(), coord.vector() * r))
}

/// All boundary coordinates where the hyperbolic Cauchy denominator vanishes:
/// on a branch with e1-sign `eps` the idempotent components of the denominator
/// are `1 + eps e^{-t}(u1 - u2)` and `1 + eps e^{t}(u1 + u2)`. The light cone
/// through `u` meets the unit circle in at most four points; roots appear on
/// both sheets of the sign that solves the equations.
pub fn singular_points(u: &TildePoint) -> Vec<BranchCoord> {
    let mut out = Vec::new();
    let d = u.u.u1 - u.u.u2;
    let s = u.u.u1 + u.u.u2;
    for branch in 0..4u8 {
        let eps = if branch % 2 == 0 { 1.0 } else { -1.0 };
        // 1 + eps e^{-t} d = 0  <=>  e^{-t} = -1/(eps d)
        if eps * d < 0.0 {
            out.push(BranchCoord::new(branch, (-eps * d).ln()));
        }
        // 1 + eps e^{t} s = 0  <=>  e^{t} = -1/(eps s)
        if eps * s < 0.0 {
            out.push(BranchCoord::new(branch, -(-eps * s).ln()));
        }
    }
    out
}

//! Closed-form Teichmüller geometry of the flat torus.
//!
//! A point of the Teichmüller space is a modulus `tau` in the upper half-plane,
//! the surface being `C / (Z + tau Z)` with area `Im tau`. A measured foliation
//! is a real pair `(a, b)` whose leaves run in direction `a + b tau`. All
//! formulas are kept degree-2 homogeneous in `(a, b)`, so the core curve
//! `(1, 0)` needs no special treatment.
//!
//! Levi forms use the convention `L[v, v̄] = ∂²(U ∘ f)/∂λ∂λ̄` along the disk
//! `λ ↦ tau0 + λ V`, i.e. one quarter of the Euclidean Laplacian.

use std::cmp::Ordering;
use std::fmt;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{SlackTracker, VerificationReport};
use crate::scalar::Real;

/// Points with `Im tau` at or below this value are rejected.
pub const IM_TAU_GUARD: f64 = 1e-12;

/// Default enumeration bound for the brute-force Kerckhoff supremum.
pub const DEFAULT_KERCKHOFF_BOUND: u32 = 100;

/// A marked flat torus `C / (Z + tau Z)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Complex<T>", into = "Complex<T>", bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct TorusPoint<T> {
    tau: Complex<T>,
}

impl<T: Real> TorusPoint<T> {
    pub fn new(tau: Complex<T>) -> Result<Self> {
        if !tau.re.is_finite() || !tau.im.is_finite() {
            return Err(Error::NonFinite("tau"));
        }
        if tau.im <= T::lit(IM_TAU_GUARD) {
            return Err(Error::OutsideUpperHalfPlane(tau.im.as_f64()));
        }
        Ok(Self { tau })
    }

    pub fn from_parts(re: T, im: T) -> Result<Self> {
        Self::new(Complex::new(re, im))
    }

    pub fn tau(&self) -> Complex<T> {
        self.tau
    }

    pub fn im(&self) -> T {
        self.tau.im
    }

    /// Flat area of the unit-lattice torus.
    pub fn area(&self) -> T {
        self.tau.im
    }

    /// The point `tau + delta`.
    pub fn offset(&self, delta: Complex<T>) -> Result<Self> {
        Self::new(self.tau + delta)
    }
}

impl<T: Real> TryFrom<Complex<T>> for TorusPoint<T> {
    type Error = Error;
    fn try_from(tau: Complex<T>) -> Result<Self> {
        Self::new(tau)
    }
}

impl<T> From<TorusPoint<T>> for Complex<T> {
    fn from(p: TorusPoint<T>) -> Self {
        p.tau
    }
}

impl<T: Real> fmt::Display for TorusPoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i", self.tau.re, self.tau.im)
    }
}

/// Measured foliation with leaves parallel to `a + b tau`.
///
/// `(a, b)` and `(-a, -b)` describe the same foliation; the stored
/// representative has `b > 0`, or `b = 0` and `a > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TorusFoliation<T> {
    a: T,
    b: T,
}

impl<T: Real> TorusFoliation<T> {
    pub fn new(a: T, b: T) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::NonFinite("foliation weight"));
        }
        if a == T::zero() && b == T::zero() {
            return Err(Error::ZeroFoliation);
        }
        let flip = b < T::zero() || (b == T::zero() && a < T::zero());
        // the `+ 0` clears negative zeros so equal foliations compare equal
        let (a, b) = if flip { (-a, -b) } else { (a, b) };
        Ok(Self { a: a + T::zero(), b: b + T::zero() })
    }

    pub fn a(&self) -> T {
        self.a
    }

    pub fn b(&self) -> T {
        self.b
    }

    /// The complex period `a + b tau` of the foliation at `x`.
    pub fn period(&self, x: &TorusPoint<T>) -> Complex<T> {
        Complex::new(self.a + self.b * x.tau.re, self.b * x.tau.im)
    }

    /// `a + b conj(tau)`.
    fn conj_period(&self, x: &TorusPoint<T>) -> Complex<T> {
        self.period(x).conj()
    }

    pub fn scaled(&self, t: T) -> Result<Self> {
        Self::new(self.a * t, self.b * t)
    }
}

impl<T: Real> fmt::Display for TorusFoliation<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// The quadratic differential `coeff · dz²` on the torus at `base`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct TorusQuadDiff<T> {
    pub coeff: Complex<T>,
    pub base: TorusPoint<T>,
}

impl<T: Real> TorusQuadDiff<T> {
    /// L¹ norm `∫|q| = |coeff| · Im tau`.
    pub fn norm(&self) -> T {
        self.coeff.norm() * self.base.area()
    }

    /// Unit direction of the leaves of the vertical foliation (`q(v) < 0`).
    ///
    /// Returns `None` for the zero differential. The sign is arbitrary.
    pub fn vertical_direction(&self) -> Option<Complex<T>> {
        self.horizontal_direction().map(|h| h * Complex::<T>::i())
    }

    /// Unit direction of the leaves of the horizontal foliation (`q(v) > 0`).
    pub fn horizontal_direction(&self) -> Option<Complex<T>> {
        if self.coeff == Complex::new(T::zero(), T::zero()) {
            return None;
        }
        let r = self.coeff.sqrt();
        let h = r.conj();
        Some(h / h.norm())
    }
}

/// A holomorphic tangent vector at `base`: the direction `V` in the tau-plane.
///
/// It is represented by the Beltrami differential `i V / (2 Im tau) dz̄/dz`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct TorusTangent<T> {
    pub base: TorusPoint<T>,
    pub v: Complex<T>,
}

impl<T: Real> TorusTangent<T> {
    pub fn new(base: TorusPoint<T>, v: Complex<T>) -> Result<Self> {
        if !v.re.is_finite() || !v.im.is_finite() {
            return Err(Error::NonFinite("tangent"));
        }
        Ok(Self { base, v })
    }

    /// Coefficient of the infinitesimal Beltrami differential.
    pub fn beltrami(&self) -> Complex<T> {
        Complex::<T>::i() * self.v / (T::lit(2.0) * self.base.im())
    }
}

fn check_base<T: Real>(x: &TorusPoint<T>, t: &TorusTangent<T>) -> Result<()> {
    if x != &t.base {
        return Err(Error::BaseMismatch);
    }
    Ok(())
}

/// Geometric intersection number `|a d - b c|`.
pub fn intersection<T: Real>(f: &TorusFoliation<T>, g: &TorusFoliation<T>) -> T {
    (f.a * g.b - f.b * g.a).abs()
}

/// Extremal length `|a + b tau|² / Im tau`.
pub fn extremal_length<T: Real>(x: &TorusPoint<T>, f: &TorusFoliation<T>) -> T {
    f.period(x).norm_sqr() / x.im()
}

/// Hubbard–Masur differential `-(a + b conj tau)² / Im(tau)² dz²`.
pub fn hubbard_masur<T: Real>(x: &TorusPoint<T>, f: &TorusFoliation<T>) -> TorusQuadDiff<T> {
    let w = f.conj_period(x);
    let y = x.im();
    TorusQuadDiff { coeff: -(w * w) / (y * y), base: *x }
}

/// `∂²/∂λ∂λ̄ Ext(tau + λV)` at `λ = 0`.
pub fn levi_form<T: Real>(x: &TorusPoint<T>, f: &TorusFoliation<T>, t: &TorusTangent<T>) -> Result<T> {
    check_base(x, t)?;
    let y = x.im();
    Ok(f.period(x).norm_sqr() * t.v.norm_sqr() / (T::lit(2.0) * y * y * y))
}

/// The holomorphic quadratic differential representing the tangent `t`
/// against `|q_{F,x}|`: `∫ μ̇ ψ = ∫ (conj(η)/|q|) ψ` for every `ψ`.
pub fn eta_v<T: Real>(x: &TorusPoint<T>, f: &TorusFoliation<T>, t: &TorusTangent<T>) -> Result<TorusQuadDiff<T>> {
    check_base(x, t)?;
    let y = x.im();
    let scale = f.period(x).norm_sqr() / (T::lit(2.0) * y * y * y);
    let coeff = -Complex::<T>::i() * t.v.conj() * scale;
    Ok(TorusQuadDiff { coeff, base: *x })
}

/// `∫ μ̇ ψ` over the torus.
pub fn beltrami_pairing<T: Real>(t: &TorusTangent<T>, psi: &TorusQuadDiff<T>) -> Complex<T> {
    t.beltrami() * psi.coeff * t.base.area()
}

/// `∫ (conj(η)/|q|) ψ` over the torus.
pub fn weighted_pairing<T: Real>(eta: &TorusQuadDiff<T>, q: &TorusQuadDiff<T>, psi: &TorusQuadDiff<T>) -> Complex<T> {
    eta.coeff.conj() / q.coeff.norm() * psi.coeff * q.base.area()
}

/// `∫ |η|² / |q|` over the torus.
pub fn weighted_norm_sqr<T: Real>(eta: &TorusQuadDiff<T>, q: &TorusQuadDiff<T>) -> T {
    eta.coeff.norm_sqr() / q.coeff.norm() * q.base.area()
}

/// Derivative `∂/∂λ Ext(tau + λV)` at `λ = 0`, evaluated as `-∫ μ̇ q_{F,x}`.
pub fn gardiner_derivative<T: Real>(
    x: &TorusPoint<T>,
    f: &TorusFoliation<T>,
    t: &TorusTangent<T>,
) -> Result<Complex<T>> {
    check_base(x, t)?;
    Ok(-beltrami_pairing(t, &hubbard_masur(x, f)))
}

/// `Ext · Levi - 2 |∂Ext|²`; identically zero on the torus.
pub fn strong_positivity_slack<T: Real>(x: &TorusPoint<T>, f: &TorusFoliation<T>, t: &TorusTangent<T>) -> Result<T> {
    let e = extremal_length(x, f);
    let levi = levi_form(x, f, t)?;
    let d = gardiner_derivative(x, f, t)?;
    Ok(e * levi - T::lit(2.0) * d.norm_sqr())
}

/// `Ext(F) Ext(G) - i(F, G)²`.
pub fn minsky_slack<T: Real>(x: &TorusPoint<T>, f: &TorusFoliation<T>, g: &TorusFoliation<T>) -> T {
    let i = intersection(f, g);
    extremal_length(x, f) * extremal_length(x, g) - i * i
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DistanceMethod {
    /// Supremum over primitive curves `(p, q)` with `|p|, |q| <= bound`.
    Brute { bound: u32 },
    /// Largest generalized eigenvalue of the pair of extremal-length forms.
    Eigen,
}

/// Outcome of the brute-force Kerckhoff supremum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KerckhoffMax<T> {
    pub distance: T,
    /// Lexicographically smallest maximizing primitive pair.
    pub curve: (i64, i64),
    pub curves_examined: usize,
}

/// Teichmüller distance by Kerckhoff's extremal-length formula.
pub fn teich_distance<T: Real>(x1: &TorusPoint<T>, x2: &TorusPoint<T>, method: DistanceMethod) -> Result<T> {
    match method {
        DistanceMethod::Brute { bound } => Ok(kerckhoff_brute(x1, x2, bound)?.distance),
        DistanceMethod::Eigen => Ok(kerckhoff_eigen(x1, x2)),
    }
}

/// Primitive integer vectors with `|p|, |q| <= bound`, one per projective
/// class, in Stern–Brocot order: `(1, 0)`, the first quadrant, `(0, 1)`,
/// then the second quadrant.
pub fn primitive_curves(bound: u32) -> Vec<(i64, i64)> {
    let b = bound as i64;
    let mut out = Vec::new();
    let quadrant = |left: (i64, i64), right: (i64, i64), out: &mut Vec<(i64, i64)>| {
        // in-order traversal of the Stern–Brocot tree between two neighbours
        let mut stack = vec![(left, right, false)];
        while let Some((l, r, expanded)) = stack.pop() {
            let m = (l.0 + r.0, l.1 + r.1);
            if m.0.abs() > b || m.1.abs() > b {
                continue;
            }
            if expanded {
                out.push(m);
                stack.push((m, r, false));
            } else {
                stack.push((l, r, true));
                stack.push((l, m, false));
            }
        }
    };
    out.push((1, 0));
    quadrant((1, 0), (0, 1), &mut out);
    out.push((0, 1));
    quadrant((0, 1), (-1, 0), &mut out);
    out
}

/// Brute-force supremum of `Ext_{x2}/Ext_{x1}` over primitive curves.
pub fn kerckhoff_brute<T: Real>(x1: &TorusPoint<T>, x2: &TorusPoint<T>, bound: u32) -> Result<KerckhoffMax<T>> {
    if bound < 1 {
        return Err(Error::InvalidBound(bound as i64));
    }
    Ok(kerckhoff_max_over(x1, x2, &primitive_curves(bound)))
}

/// Supremum of `Ext_{x2}/Ext_{x1}` over a caller-supplied curve list, so
/// repeated queries can share one enumeration.
pub fn kerckhoff_max_over<T: Real>(x1: &TorusPoint<T>, x2: &TorusPoint<T>, curves: &[(i64, i64)]) -> KerckhoffMax<T> {
    let ratio = |&(p, q): &(i64, i64)| {
        let (p, q) = (T::from_i64(p).unwrap(), T::from_i64(q).unwrap());
        let w1 = Complex::new(p + q * x1.tau.re, q * x1.tau.im);
        let w2 = Complex::new(p + q * x2.tau.re, q * x2.tau.im);
        (w2.norm_sqr() / x2.im()) / (w1.norm_sqr() / x1.im())
    };
    let mut best = (T::neg_infinity(), (0, 0));
    for c in curves {
        let r = ratio(c);
        match r.partial_cmp(&best.0) {
            Some(Ordering::Greater) => best = (r, *c),
            Some(Ordering::Equal) if *c < best.1 => best = (r, *c),
            _ => {}
        }
    }
    KerckhoffMax { distance: best.0.ln() / T::lit(2.0), curve: best.1, curves_examined: curves.len() }
}

/// Closed-form supremum via the generalized eigenvalue problem.
///
/// With `Q_tau(a, b) = |a + b tau|² / Im tau` both forms have determinant 1,
/// so the eigenvalues solve `λ² - Tλ + 1 = 0` where
/// `T = tr(Q1⁻¹ Q2) = 2 + |tau1 - tau2|² / (Im tau1 Im tau2)`.
pub fn kerckhoff_eigen<T: Real>(x1: &TorusPoint<T>, x2: &TorusPoint<T>) -> T {
    let half_excess = (x1.tau - x2.tau).norm_sqr() / (T::lit(2.0) * x1.im() * x2.im());
    // λ_max - 1 = δ + sqrt(δ(δ + 2)), written without cancellation
    let lambda_minus_one = half_excess + (half_excess * (half_excess + T::lit(2.0))).sqrt();
    lambda_minus_one.ln_1p() / T::lit(2.0)
}

/// Hyperbolic distance in the upper half-plane (curvature -1).
pub fn poincare_distance<T: Real>(x1: &TorusPoint<T>, x2: &TorusPoint<T>) -> T {
    let s = (x1.tau - x2.tau).norm() / (T::lit(2.0) * (x1.im() * x2.im()).sqrt());
    T::lit(2.0) * s.asinh()
}

/// The map `x ↦ J_{x0}(x)`: the differential on `x0` whose horizontal
/// foliation is that of `q_{F,x}` and which agrees with `q_{F,x0}` at `x0`.
pub fn j_map<T: Real>(x0: &TorusPoint<T>, f: &TorusFoliation<T>, x: &TorusPoint<T>) -> TorusQuadDiff<T> {
    let (a, b) = (f.a, f.b);
    let (re, y) = (x.tau.re, x.im());
    let num = Complex::new(-(a * re + b * x.tau.norm_sqr()), T::zero()) + x0.tau.conj() * (a + b * re);
    let w = num / (y * x0.im());
    TorusQuadDiff { coeff: w * w, base: *x0 }
}

/// Real directional derivative `d/ds J_{x0}(x0 + sV)` at `s = 0`, by central
/// differences along the real and imaginary axes with one Richardson step.
pub fn j_derivative_fd<T: Real>(
    x0: &TorusPoint<T>,
    f: &TorusFoliation<T>,
    t: &TorusTangent<T>,
    h: T,
) -> Result<Complex<T>> {
    check_base(x0, t)?;
    let max = x0.im() / T::lit(10.0);
    if !(h > T::zero() && h < max) {
        return Err(Error::StepOutOfRange { step: h.as_f64(), max: max.as_f64() });
    }
    let partial = |dir: Complex<T>| -> Result<Complex<T>> {
        let central = |h: T| -> Result<Complex<T>> {
            let plus = j_map(x0, f, &x0.offset(dir * h)?).coeff;
            let minus = j_map(x0, f, &x0.offset(-dir * h)?).coeff;
            Ok((plus - minus) / (T::lit(2.0) * h))
        };
        let coarse = central(h)?;
        let fine = central(h / T::lit(2.0))?;
        Ok((fine * T::lit(4.0) - coarse) / T::lit(3.0))
    };
    let dx = partial(Complex::new(T::one(), T::zero()))?;
    let dy = partial(Complex::<T>::i())?;
    Ok(dx * t.v.re + dy * t.v.im)
}

/// Compares the finite-difference differential of the J-map with `-4 η_v`.
///
/// The reported slack is minus the largest componentwise error, measured
/// relative to `|η_v|` (absolute when `η_v = 0`).
pub fn j_derivative_check<T: Real>(
    x0: &TorusPoint<T>,
    f: &TorusFoliation<T>,
    t: &TorusTangent<T>,
    h: T,
    tol: f64,
) -> Result<VerificationReport> {
    let err = j_derivative_error(x0, f, t, h)?;
    let mut tracker = SlackTracker::new("duality", tol);
    tracker.record_error(err, || format!("tau0={x0} F={f} V={}", t.v));
    Ok(tracker.finish())
}

pub(crate) fn j_derivative_error<T: Real>(
    x0: &TorusPoint<T>,
    f: &TorusFoliation<T>,
    t: &TorusTangent<T>,
    h: T,
) -> Result<f64> {
    let fd = j_derivative_fd(x0, f, t, h)?;
    let exact = eta_v(x0, f, t)?.coeff * T::lit(-4.0);
    let diff = fd - exact;
    let worst = diff.re.abs().max(diff.im.abs());
    let scale = exact.norm();
    Ok(if scale > T::zero() { (worst / scale).as_f64() } else { worst.as_f64() })
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Complex<f64>;

    fn pt(re: f64, im: f64) -> TorusPoint<f64> {
        TorusPoint::from_parts(re, im).unwrap()
    }

    fn fol(a: f64, b: f64) -> TorusFoliation<f64> {
        TorusFoliation::new(a, b).unwrap()
    }

    fn tan(x: TorusPoint<f64>, re: f64, im: f64) -> TorusTangent<f64> {
        TorusTangent::new(x, C::new(re, im)).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn rejects_lower_half_plane_and_boundary() {
        assert!(matches!(TorusPoint::from_parts(0.0, 0.0), Err(Error::OutsideUpperHalfPlane(_))));
        assert!(TorusPoint::from_parts(0.0, 1e-13).is_err());
        assert!(TorusPoint::from_parts(0.0, -1.0).is_err());
        assert!(TorusPoint::from_parts(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn foliation_canonical_sign() {
        assert_eq!(fol(-2.0, -3.0), fol(2.0, 3.0));
        assert_eq!(fol(-1.0, 0.0), fol(1.0, 0.0));
        assert_eq!(fol(0.0, -1.0), fol(0.0, 1.0));
        assert!(fol(3.0, -1.0).b() > 0.0);
        assert!(matches!(TorusFoliation::new(0.0, 0.0), Err(Error::ZeroFoliation)));
    }

    #[test]
    fn intersection_examples() {
        assert_eq!(intersection(&fol(1.0, 0.0), &fol(0.0, 1.0)), 1.0);
        assert_eq!(intersection(&fol(2.0, 3.0), &fol(2.0, 3.0)), 0.0);
        assert_eq!(intersection(&fol(1.0, 2.0), &fol(3.0, 4.0)), 2.0);
    }

    #[test]
    fn extremal_length_examples() {
        assert_eq!(extremal_length(&pt(0.0, 1.0), &fol(1.0, 0.0)), 1.0);
        assert_eq!(extremal_length(&pt(0.0, 2.0), &fol(1.0, 0.0)), 0.5);
        assert_eq!(extremal_length(&pt(0.0, 1.0), &fol(1.0, 1.0)), 2.0);
    }

    #[test]
    fn hubbard_masur_examples() {
        assert_eq!(hubbard_masur(&pt(0.0, 1.0), &fol(1.0, 0.0)).coeff, C::new(-1.0, 0.0));
        assert_eq!(hubbard_masur(&pt(0.0, 2.0), &fol(1.0, 0.0)).coeff, C::new(-0.25, 0.0));
        let q = hubbard_masur(&pt(0.0, 1.0), &fol(0.0, 1.0));
        assert!((q.coeff - C::new(1.0, 0.0)).norm() < 1e-15);
        assert!(close(q.norm(), 1.0, 1e-15));
        // leaves of F = (0, 1) run along a + b tau = i
        let v = q.vertical_direction().unwrap();
        assert!(v.re.abs() < 1e-15 && (v.im.abs() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn vertical_direction_is_leaf_direction() {
        let x = pt(0.3, 1.7);
        let f = fol(2.0, -1.5);
        let q = hubbard_masur(&x, &f);
        let v = q.vertical_direction().unwrap();
        let leaf = f.period(&x);
        // parallel up to sign
        assert!((v.re * leaf.im - v.im * leaf.re).abs() < 1e-12 * leaf.norm());
        assert!((q.coeff * v * v).re < 0.0);
        assert!(hubbard_masur(&x, &f).horizontal_direction().is_some());
        let zero = TorusQuadDiff { coeff: C::new(0.0, 0.0), base: x };
        assert!(zero.vertical_direction().is_none());
    }

    #[test]
    fn levi_examples() {
        let x = pt(0.0, 1.0);
        assert_eq!(levi_form(&x, &fol(1.0, 0.0), &tan(x, 1.0, 0.0)).unwrap(), 0.5);
        assert_eq!(levi_form(&x, &fol(3.0, 1.0), &tan(x, 0.0, 0.0)).unwrap(), 0.0);
        let y = pt(0.0, 2.0);
        assert_eq!(levi_form(&y, &fol(1.0, 0.0), &tan(y, 2.0, 0.0)).unwrap(), 0.25);
    }

    #[test]
    fn mismatched_base_is_rejected() {
        let x = pt(0.0, 1.0);
        let t = tan(pt(0.0, 2.0), 1.0, 0.0);
        assert!(matches!(levi_form(&x, &fol(1.0, 0.0), &t), Err(Error::BaseMismatch)));
        assert!(eta_v(&x, &fol(1.0, 0.0), &t).is_err());
        assert!(gardiner_derivative(&x, &fol(1.0, 0.0), &t).is_err());
    }

    #[test]
    fn eta_examples() {
        let x = pt(0.0, 1.0);
        assert_eq!(eta_v(&x, &fol(1.0, 0.0), &tan(x, 1.0, 0.0)).unwrap().coeff, C::new(0.0, -0.5));
        assert_eq!(eta_v(&x, &fol(1.0, 0.0), &tan(x, 0.0, 0.0)).unwrap().coeff.norm(), 0.0);
        assert_eq!(eta_v(&x, &fol(0.0, 1.0), &tan(x, 1.0, 0.0)).unwrap().coeff, C::new(0.0, -0.5));
    }

    #[test]
    fn eta_satisfies_defining_pairing() {
        // ∫ μ̇ ψ = ∫ conj(η)/|q| ψ for ψ = dz² and ψ = i dz²
        for (tau, f, v) in [
            (C::new(0.0, 1.0), (0.0, 1.0), C::new(1.0, 0.0)),
            (C::new(1.0, 2.0), (3.0, 1.0), C::new(1.0, -1.0)),
            (C::new(-0.4, 0.6), (-2.0, 5.0), C::new(0.2, 0.7)),
        ] {
            let x = TorusPoint::new(tau).unwrap();
            let f = fol(f.0, f.1);
            let t = TorusTangent::new(x, v).unwrap();
            let eta = eta_v(&x, &f, &t).unwrap();
            let q = hubbard_masur(&x, &f);
            for psi in [C::new(1.0, 0.0), C::new(0.0, 1.0)] {
                let psi = TorusQuadDiff { coeff: psi, base: x };
                let lhs = beltrami_pairing(&t, &psi);
                let rhs = weighted_pairing(&eta, &q, &psi);
                assert!((lhs - rhs).norm() < 1e-12 * lhs.norm().max(1.0));
            }
        }
    }

    #[test]
    fn gardiner_examples() {
        let x = pt(0.0, 1.0);
        let f = fol(1.0, 0.0);
        let d = gardiner_derivative(&x, &f, &tan(x, 0.0, 1.0)).unwrap();
        assert!((d - C::new(-0.5, 0.0)).norm() < 1e-15);
        assert_eq!(gardiner_derivative(&x, &f, &tan(x, 0.0, 0.0)).unwrap().norm(), 0.0);
        let d = gardiner_derivative(&x, &f, &tan(x, 1.0, 0.0)).unwrap();
        assert!((d - C::new(0.0, 0.5)).norm() < 1e-15);
    }

    #[test]
    fn gardiner_matches_finite_difference_of_ext() {
        // independent route: Wirtinger derivative of the closed-form Ext
        let x = pt(0.7, 1.3);
        let f = fol(2.0, -1.0);
        let v = C::new(0.4, -0.9);
        let ext = |l: C| extremal_length(&x.offset(l * v).unwrap(), &f);
        let h = 1e-5;
        let dx = (ext(C::new(h, 0.0)) - ext(C::new(-h, 0.0))) / (2.0 * h);
        let dy = (ext(C::new(0.0, h)) - ext(C::new(0.0, -h))) / (2.0 * h);
        let fd = C::new(dx, -dy) * 0.5;
        let d = gardiner_derivative(&x, &f, &TorusTangent::new(x, v).unwrap()).unwrap();
        assert!((fd - d).norm() < 1e-8, "{fd} vs {d}");
    }

    #[test]
    fn strong_positivity_is_identically_zero() {
        let x = pt(0.0, 1.0);
        assert_eq!(strong_positivity_slack(&x, &fol(1.0, 0.0), &tan(x, 1.0, 0.0)).unwrap(), 0.0);
        let y = pt(1.0, 2.0);
        let s = strong_positivity_slack(&y, &fol(3.0, 1.0), &tan(y, 1.0, -1.0)).unwrap();
        let e = extremal_length(&y, &fol(3.0, 1.0)) * levi_form(&y, &fol(3.0, 1.0), &tan(y, 1.0, -1.0)).unwrap();
        assert!(s.abs() <= 1e-12 * e);
        assert_eq!(strong_positivity_slack(&x, &fol(2.0, 1.0), &tan(x, 0.0, 0.0)).unwrap(), 0.0);
    }

    #[test]
    fn minsky_examples() {
        assert_eq!(minsky_slack(&pt(0.0, 1.0), &fol(1.0, 0.0), &fol(0.0, 1.0)), 0.0);
        assert!((minsky_slack(&pt(1.0, 1.0), &fol(1.0, 0.0), &fol(0.0, 1.0)) - 1.0).abs() < 1e-15);
        let x = pt(0.3, 0.8);
        let f = fol(2.0, 5.0);
        let e = extremal_length(&x, &f);
        assert_eq!(minsky_slack(&x, &f, &f), e * e);
    }

    #[test]
    fn distance_examples() {
        let i = pt(0.0, 1.0);
        assert_eq!(teich_distance(&i, &i, DistanceMethod::Eigen).unwrap(), 0.0);
        assert_eq!(teich_distance(&i, &i, DistanceMethod::Brute { bound: 5 }).unwrap(), 0.0);
        let half_log2 = 0.5 * 2f64.ln();
        let d = teich_distance(&i, &pt(0.0, 2.0), DistanceMethod::Eigen).unwrap();
        assert!((d - half_log2).abs() < 1e-15);
        let k = kerckhoff_brute(&i, &pt(0.0, 2.0), 100).unwrap();
        assert!((k.distance - half_log2).abs() < 1e-15);
        assert_eq!(k.curve, (0, 1));
        let d = teich_distance(&i, &pt(1.0, 1.0), DistanceMethod::Eigen).unwrap();
        assert!((d - 0.5 * 1.5f64.acosh()).abs() < 1e-15);
        assert!((d - 0.481211825059603).abs() < 1e-14);
    }

    #[test]
    fn brute_rejects_zero_bound() {
        let i = pt(0.0, 1.0);
        assert!(matches!(teich_distance(&i, &i, DistanceMethod::Brute { bound: 0 }), Err(Error::InvalidBound(0))));
    }

    #[test]
    fn primitive_curves_are_primitive_and_unique() {
        let curves = primitive_curves(12);
        let mut seen = std::collections::HashSet::new();
        for &(p, q) in &curves {
            assert_eq!(num_integer::gcd(p, q), 1);
            assert!(q > 0 || (q == 0 && p > 0));
            assert!(p.abs() <= 12 && q.abs() <= 12);
            assert!(seen.insert((p, q)));
        }
        let expected = (-12i64..=12)
            .flat_map(|p| (0i64..=12).map(move |q| (p, q)))
            .filter(|&(p, q)| (q > 0 || p > 0) && num_integer::gcd(p, q) == 1)
            .count();
        assert_eq!(curves.len(), expected);
    }

    #[test]
    fn brute_is_monotone_in_bound() {
        let x1 = pt(0.2, 0.9);
        let x2 = pt(-0.7, 1.8);
        let mut prev = f64::NEG_INFINITY;
        for b in [1, 2, 4, 8, 16, 32, 64] {
            let d = kerckhoff_brute(&x1, &x2, b).unwrap().distance;
            assert!(d >= prev);
            prev = d;
        }
        assert!(prev <= kerckhoff_eigen(&x1, &x2) + 1e-15);
    }

    #[test]
    fn eigen_is_half_poincare() {
        let x1 = pt(0.2, 0.9);
        let x2 = pt(-3.7, 0.05);
        let e = kerckhoff_eigen(&x1, &x2);
        assert!((e - 0.5 * poincare_distance(&x1, &x2)).abs() < 1e-12);
        assert!((e - kerckhoff_eigen(&x2, &x1)).abs() < 1e-15);
    }

    #[test]
    fn j_map_examples() {
        let i = pt(0.0, 1.0);
        assert_eq!(j_map(&i, &fol(1.0, 0.0), &i).coeff, C::new(-1.0, 0.0));
        assert_eq!(j_map(&i, &fol(1.0, 0.0), &pt(0.0, 2.0)).coeff, C::new(-0.25, 0.0));
        let c = j_map(&i, &fol(0.0, 1.0), &i).coeff;
        assert!((c - C::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn j_map_on_diagonal_is_hubbard_masur() {
        for (tau, f) in
            [(C::new(0.3, 0.7), (2.0, 3.0)), (C::new(-1.0, 2.5), (1.0, -4.0)), (C::new(0.0, 1.0), (1.0, 0.0))]
        {
            let x = TorusPoint::new(tau).unwrap();
            let f = fol(f.0, f.1);
            let j = j_map(&x, &f, &x).coeff;
            let q = hubbard_masur(&x, &f).coeff;
            assert!((j - q).norm() < 1e-12 * q.norm());
        }
    }

    #[test]
    fn j_map_preserves_horizontal_foliation_class() {
        // horizontal leaves of J_{x0}(x) on x0 and of q_{F,x} on x meet the
        // curve (1, 0) with the same transverse measure
        let x0 = pt(0.3, 1.1);
        let x = pt(-0.8, 0.6);
        let f = fol(2.0, 1.0);
        let j = j_map(&x0, &f, &x);
        let q = hubbard_masur(&x, &f);
        assert!((j.coeff.sqrt().im.abs() - q.coeff.sqrt().im.abs()).abs() < 1e-12);
    }

    #[test]
    fn j_derivative_examples() {
        let i = pt(0.0, 1.0);
        let t = tan(i, 1.0, 0.0);
        let fd = j_derivative_fd(&i, &fol(1.0, 0.0), &t, 1e-4).unwrap();
        assert!((fd - C::new(0.0, 2.0)).norm() < 1e-6);
        let r = j_derivative_check(&i, &fol(1.0, 0.0), &t, 1e-4, 1e-6).unwrap();
        assert!(r.pass && r.min_slack > -1e-6);

        let zero = j_derivative_fd(&i, &fol(1.0, 0.0), &tan(i, 0.0, 0.0), 1e-4).unwrap();
        assert_eq!(zero, C::new(0.0, 0.0));
        assert_eq!(j_derivative_error(&i, &fol(1.0, 0.0), &tan(i, 0.0, 0.0), 1e-4).unwrap(), 0.0);

        let x = pt(1.0, 2.0);
        let r = j_derivative_check(&x, &fol(2.0, 3.0), &tan(x, 1.0, 1.0), 1e-4, 1e-6).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn j_derivative_rejects_large_step() {
        let i = pt(0.0, 1.0);
        let t = tan(i, 1.0, 0.0);
        assert!(matches!(j_derivative_fd(&i, &fol(1.0, 0.0), &t, 0.2), Err(Error::StepOutOfRange { .. })));
        assert!(j_derivative_fd(&i, &fol(1.0, 0.0), &t, 0.0).is_err());
    }

    #[test]
    fn single_precision_instantiation() {
        let x = TorusPoint::<f32>::from_parts(0.0, 2.0).unwrap();
        let f = TorusFoliation::<f32>::new(1.0, 0.0).unwrap();
        assert_eq!(extremal_length(&x, &f), 0.5f32);
        assert!(
            (kerckhoff_eigen(&TorusPoint::<f32>::from_parts(0.0, 1.0).unwrap(), &x) - 0.5 * 2f32.ln()).abs() < 1e-6
        );
    }

    #[test]
    fn point_serde_rejects_invalid() {
        let p: TorusPoint<f64> = serde_json::from_str("[0.5, 2.0]").unwrap();
        assert_eq!(p, pt(0.5, 2.0));
        assert!(serde_json::from_str::<TorusPoint<f64>>("[0.5, -2.0]").is_err());
    }
}

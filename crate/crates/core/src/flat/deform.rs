//! Deformations of a flat surface that keep track of its vertical foliation.

use num_complex::Complex;

use super::cover::{build_double_cover, DoubleCover};
use super::gluing::{build, FlatSurface};
use super::homology::{odd_symplectic_basis, HomologyBasis};
use super::periods::{chain_period_with, ext_bilinear, periods, Periods};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Applies `z ↦ z + λ z̄` to every vertex and rebuilds.
pub fn teich_disk_deform<T: Real>(s: &FlatSurface<T>, lambda: Complex<T>) -> Result<FlatSurface<T>> {
    check_disk(lambda)?;
    build(&s.gluing().map_vertices(|z| z + lambda * z.conj()))
}

/// Applies `(x, y) ↦ (x, shear·x + stretch·y)` to every vertex and rebuilds.
pub fn vertical_preserving_shear<T: Real>(s: &FlatSurface<T>, shear: T, stretch: T) -> Result<FlatSurface<T>> {
    if !(stretch > T::zero()) || !shear.is_finite() || !stretch.is_finite() {
        return Err(Error::NonPositiveStretch(stretch.as_f64()));
    }
    build(&s.gluing().map_vertices(|z| Complex::new(z.re, shear * z.re + stretch * z.im)))
}

/// Extremal length of the original vertical foliation after deforming by `λ`:
/// `A |1 - λ|² / (1 - |λ|²)`.
pub fn teich_disk_ext_closed_form<T: Real>(area: T, lambda: Complex<T>) -> T {
    area * (Complex::new(T::one(), T::zero()) - lambda).norm_sqr() / (T::one() - lambda.norm_sqr())
}

/// Value and Wirtinger derivatives `(E, E_λ, E_λλ̄)` of the closed form
/// `E(λ) = A N / D` with `N = |1 - λ|²`, `D = 1 - |λ|²`.
pub fn teich_disk_ext_jet<T: Real>(area: T, lambda: Complex<T>) -> (T, Complex<T>, T) {
    let one = Complex::new(T::one(), T::zero());
    let n = (one - lambda).norm_sqr();
    let d = T::one() - lambda.norm_sqr();
    // N_λ = λ̄ - 1, D_λ = -λ̄, N_λλ̄ = 1, D_λλ̄ = -1
    let n_l = lambda.conj() - one;
    let d_l = -lambda.conj();
    let e = area * n / d;
    let e_l = (n_l * d - d_l * n) * (area / (d * d));
    let cross = (n_l * d_l.conj()).re * T::lit(2.0);
    let e_ll = area * (T::one() / d - cross / (d * d) + n / (d * d) + T::lit(2.0) * n * d_l.norm_sqr() / (d * d * d));
    (e, e_l, e_ll)
}

/// The factor `c` with `Re(c (χ + λ χ̄)) = Re χ` for every period `χ`.
pub fn hm_scale<T: Real>(lambda: Complex<T>) -> Complex<T> {
    (Complex::new(T::one(), T::zero()) - lambda.conj()) / (T::one() - lambda.norm_sqr())
}

fn check_disk<T: Real>(lambda: Complex<T>) -> Result<()> {
    let r = lambda.norm();
    if r.is_finite() && r < T::one() {
        Ok(())
    } else {
        Err(Error::OutsideUnitDisk(r.as_f64()))
    }
}

/// A flat surface with its odd symplectic basis, ready to evaluate the
/// extremal length of its vertical foliation along the Teichmüller disk.
#[derive(Debug, Clone)]
pub struct TeichDisk<T> {
    surface: FlatSurface<T>,
    cover: DoubleCover<T>,
    basis: HomologyBasis,
    periods: Periods<T>,
}

impl<T: Real> TeichDisk<T> {
    pub fn new(surface: FlatSurface<T>) -> Result<Self> {
        let cover = build_double_cover(&surface);
        let basis = odd_symplectic_basis(&cover)?;
        let periods = periods(&cover, &basis)?;
        Ok(Self { surface, cover, basis, periods })
    }

    pub fn surface(&self) -> &FlatSurface<T> {
        &self.surface
    }

    pub fn cover(&self) -> &DoubleCover<T> {
        &self.cover
    }

    pub fn basis(&self) -> &HomologyBasis {
        &self.basis
    }

    pub fn periods(&self) -> &Periods<T> {
        &self.periods
    }

    pub fn area(&self) -> T {
        self.surface.area()
    }

    /// Periods of the flat structure at `λ`, i.e. `χ + λ χ̄`.
    pub fn deformed_periods(&self, lambda: Complex<T>) -> Result<Periods<T>> {
        check_disk(lambda)?;
        Ok(self.periods.map(|z| z + lambda * z.conj()))
    }

    /// Periods of the Hubbard–Masur differential of the original vertical
    /// foliation at `λ`.
    pub fn hm_periods(&self, lambda: Complex<T>) -> Result<Periods<T>> {
        Ok(self.deformed_periods(lambda)?.scale(hm_scale(lambda)))
    }

    /// Extremal length of the original vertical foliation at `λ`.
    pub fn ext(&self, lambda: Complex<T>) -> Result<T> {
        ext_bilinear(&self.hm_periods(lambda)?, &self.basis)
    }

    /// Same quantity, recomputed from the deformed cover's own edge periods.
    pub fn ext_rebuilt(&self, lambda: Complex<T>) -> Result<T> {
        let deformed = teich_disk_deform(&self.surface, lambda)?;
        let cover = build_double_cover(&deformed);
        let c = hm_scale(lambda);
        let values = self.basis.cycles.iter().map(|z| chain_period_with(cover.edge_periods(), z) * c).collect();
        ext_bilinear(&Periods { values }, &self.basis)
    }
}

//! Numerical checks of the positivity statements along holomorphic disks.
//!
//! A [`HoloDisk`] is a holomorphic map from `{|λ| ≤ r}` into Teichmüller
//! space: either an affine disk `τ₀ + λV` in the torus model, or a sub-disk of
//! the Teichmüller disk through a flat surface. A [`ScalarField`] is a
//! function on Teichmüller space pulled back along it. Levi forms use the
//! convention `∂²/∂λ∂λ̄`, a quarter of the Euclidean Laplacian.

mod checks;
pub mod sample;
mod suite;

use std::fmt;
use std::sync::Arc;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::fd;
use crate::flat::TeichDisk;
use crate::torus::{self, TorusFoliation, TorusPoint, IM_TAU_GUARD};

pub use checks::*;
pub use suite::{run_suite, Suite, SuiteConfig, TOL_CLOSED_FORM, TOL_EXACT, TOL_FD};

type C = Complex<f64>;

#[derive(Debug, Clone)]
pub enum HoloDisk {
    /// `λ ↦ τ₀ + λV`.
    Torus { tau0: C, v: C, radius: f64 },
    /// `λ ↦` the flat structure at `center + λ` on the Teichmüller disk.
    Flat { disk: Arc<TeichDisk<f64>>, center: C, radius: f64 },
}

impl HoloDisk {
    pub fn torus(tau0: C, v: C, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) || !tau0.is_finite() || !v.is_finite() {
            return Err(Error::InvalidDisk(format!("radius {radius} must be positive and finite")));
        }
        let lowest = tau0.im - radius * v.norm();
        if lowest <= IM_TAU_GUARD {
            return Err(Error::InvalidDisk(format!("image reaches Im(tau) = {lowest}")));
        }
        Ok(Self::Torus { tau0, v, radius })
    }

    pub fn flat(disk: Arc<TeichDisk<f64>>, center: C, radius: f64) -> Result<Self> {
        if !(radius > 0.0) || !center.is_finite() || center.norm() + radius >= 1.0 {
            return Err(Error::InvalidDisk(format!("|{center}| + {radius} must be < 1")));
        }
        Ok(Self::Flat { disk, center, radius })
    }

    pub fn radius(&self) -> f64 {
        match self {
            Self::Torus { radius, .. } | Self::Flat { radius, .. } => *radius,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Self::Torus { .. } => "torus",
            Self::Flat { .. } => "flat",
        }
    }

    pub fn contains(&self, lambda: C) -> bool {
        lambda.norm() <= self.radius() * (1.0 + 1e-12)
    }

    fn check(&self, lambda: C) -> Result<()> {
        if self.contains(lambda) {
            Ok(())
        } else {
            Err(Error::OutsideDisk(format!("{lambda}")))
        }
    }

    pub fn torus_point(&self, lambda: C) -> Result<TorusPoint<f64>> {
        self.check(lambda)?;
        match self {
            Self::Torus { tau0, v, .. } => TorusPoint::new(tau0 + lambda * v),
            Self::Flat { .. } => Err(Error::IncompatibleField { field: "torus point", disk: "flat" }),
        }
    }

    /// Finite-difference step for this disk: `h · Im τ₀ / |V|` on the torus
    /// (a τ-plane step of `h · Im τ₀`), `h` on flat disks, capped at `r/20`.
    pub fn step(&self, h: f64) -> f64 {
        let cap = self.radius() / 20.0;
        match self {
            Self::Torus { tau0, v, .. } if v.norm() > 0.0 => (h * tau0.im / v.norm()).min(cap),
            Self::Torus { .. } => cap,
            Self::Flat { .. } => h.min(cap),
        }
    }
}

impl fmt::Display for HoloDisk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Torus { tau0, v, radius } => write!(f, "torus(tau0={tau0}, V={v}, r={radius})"),
            Self::Flat { disk, center, radius } => {
                write!(f, "flat(area={}, center={center}, r={radius})", disk.area())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Foliation {
    Torus(TorusFoliation<f64>),
    /// The vertical foliation of the base flat surface.
    Vertical,
}

#[derive(Debug, Clone)]
pub enum ScalarField {
    Ext(Foliation),
    LogExt(Foliation),
    /// `ρ = -1 / (c + Σ aₖ Ext(Fₖ))`.
    Reciprocal {
        terms: Vec<(f64, Foliation)>,
        c: f64,
    },
    /// Teichmüller distance from a fixed torus point.
    Distance {
        from: TorusPoint<f64>,
    },
    /// An explicit function of `λ`.
    Probe(fn(C) -> f64),
}

impl ScalarField {
    pub fn reciprocal(terms: Vec<(f64, Foliation)>, c: f64) -> Result<Self> {
        let valid = terms.iter().all(|(a, _)| *a > 0.0 && a.is_finite()) && c >= 0.0 && c.is_finite();
        if !valid || terms.is_empty() {
            return Err(Error::BadWeights);
        }
        Ok(Self::Reciprocal { terms, c })
    }

    pub fn eval(&self, disk: &HoloDisk, lambda: C) -> Result<f64> {
        disk.check(lambda)?;
        match self {
            Self::Ext(f) => ext(f, disk, lambda),
            Self::LogExt(f) => Ok(ext(f, disk, lambda)?.ln()),
            Self::Reciprocal { terms, c } => {
                let mut sum = *c;
                for (a, f) in terms {
                    sum += a * ext(f, disk, lambda)?;
                }
                Ok(-1.0 / sum)
            }
            Self::Distance { from } => Ok(torus::kerckhoff_eigen(from, &disk.torus_point(lambda)?)),
            Self::Probe(f) => Ok(f(lambda)),
        }
    }
}

fn ext(f: &Foliation, disk: &HoloDisk, lambda: C) -> Result<f64> {
    match (f, disk) {
        (Foliation::Torus(f), HoloDisk::Torus { .. }) => Ok(torus::extremal_length(&disk.torus_point(lambda)?, f)),
        (Foliation::Vertical, HoloDisk::Flat { disk, center, .. }) => disk.ext(center + lambda),
        (Foliation::Torus(_), HoloDisk::Flat { .. }) => {
            Err(Error::IncompatibleField { field: "torus foliation", disk: "flat" })
        }
        (Foliation::Vertical, HoloDisk::Torus { .. }) => {
            Err(Error::IncompatibleField { field: "vertical foliation", disk: "torus" })
        }
    }
}

fn check_stencil(disk: &HoloDisk, lambda0: C, h: f64) -> Result<()> {
    let max = disk.radius() / 10.0;
    if !(h > 0.0 && h < max) {
        return Err(Error::StepOutOfRange { step: h, max });
    }
    if lambda0.norm() + h > disk.radius() {
        return Err(Error::OutsideDisk(format!("stencil of radius {h} around {lambda0}")));
    }
    Ok(())
}

/// `∂²(U∘f)/∂λ∂λ̄` at `λ₀` by the five-point stencil with one Richardson step.
pub fn fd_dbar_d(field: &ScalarField, disk: &HoloDisk, lambda0: C, h: f64) -> Result<f64> {
    check_stencil(disk, lambda0, h)?;
    fd::dbar_d(|z| field.eval(disk, z), lambda0, h)
}

/// `∂(U∘f)/∂λ` at `λ₀` by central differences with one Richardson step.
pub fn fd_wirtinger(field: &ScalarField, disk: &HoloDisk, lambda0: C, h: f64) -> Result<C> {
    check_stencil(disk, lambda0, h)?;
    fd::wirtinger(|z| field.eval(disk, z), lambda0, h)
}

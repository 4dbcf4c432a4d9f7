//! Periods of the lifted 1-form and extremal length by the bilinear relation.

use num_complex::Complex;
use num_traits::Zero;

use super::cover::DoubleCover;
use super::homology::{is_cycle, rational_to_f64, Chain, HomologyBasis};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// `χ(c) = ∫_c ω` for each basis cycle, in basis order.
#[derive(Debug, Clone, PartialEq)]
pub struct Periods<T> {
    pub values: Vec<Complex<T>>,
}

impl<T: Real> Periods<T> {
    /// Applies a real-linear map `z ↦ f(z)` to every period.
    pub fn map(&self, f: impl Fn(Complex<T>) -> Complex<T>) -> Self {
        Self { values: self.values.iter().map(|&z| f(z)).collect() }
    }

    pub fn scale(&self, c: Complex<T>) -> Self {
        self.map(|z| z * c)
    }
}

/// Period of one cycle using the given per-edge periods.
///
/// Terms are grouped per pairing as `(c[2k] - c[2k+1]) · ∫_{2k} ω`, so the
/// deck image of a cycle gets the exactly negated period.
pub fn chain_period_with<T: Real>(edge_periods: &[Complex<T>], c: &Chain) -> Complex<T> {
    let mut total = Complex::new(T::zero(), T::zero());
    for k in 0..edge_periods.len() / 2 {
        let coeff = &c.0[2 * k] - &c.0[2 * k + 1];
        if coeff.is_zero() {
            continue;
        }
        total = total + edge_periods[2 * k] * T::lit(rational_to_f64(&coeff));
    }
    total
}

pub fn chain_period<T: Real>(cover: &DoubleCover<T>, c: &Chain) -> Result<Complex<T>> {
    if !is_cycle(cover, c) {
        return Err(Error::OpenChain);
    }
    Ok(chain_period_with(cover.edge_periods(), c))
}

pub fn periods<T: Real>(cover: &DoubleCover<T>, basis: &HomologyBasis) -> Result<Periods<T>> {
    let values = basis.cycles.iter().map(|c| chain_period(cover, c)).collect::<Result<_>>()?;
    Ok(Periods { values })
}

/// `Ext = (i/4) Σₖ (χ(αₖ) conj χ(βₖ) - χ(βₖ) conj χ(αₖ))` over a symplectic
/// basis of the odd homology. Equals the L¹ norm of `q`, i.e. the flat area.
pub fn ext_bilinear<T: Real>(p: &Periods<T>, basis: &HomologyBasis) -> Result<T> {
    if !basis.is_symplectic() {
        return Err(Error::NotSymplectic);
    }
    if p.values.len() != basis.rank() {
        return Err(Error::PeriodMismatch { periods: p.values.len(), cycles: basis.rank() });
    }
    let quarter_i = Complex::new(T::zero(), T::lit(0.25));
    let sum = p.values.chunks(2).fold(Complex::new(T::zero(), T::zero()), |acc, pair| {
        let (a, b) = (pair[0], pair[1]);
        acc + (a * b.conj() - b * a.conj())
    });
    Ok((quarter_i * sum).re)
}

//! Seeded random inputs for the checks.

use std::sync::Arc;

use num_complex::Complex;
use rand::Rng;

use super::HoloDisk;
use crate::flat::TeichDisk;
use crate::torus::{TorusFoliation, TorusPoint};

type C = Complex<f64>;

/// Smallest `Im τ` any sampled torus disk reaches.
pub const MIN_IMAGE_HEIGHT: f64 = 0.1;
/// Largest `|λ|` any sampled flat disk reaches.
pub const MAX_FLAT_MODULUS: f64 = 0.9;

/// `Re τ ∈ [-2, 2]`, `Im τ` log-uniform in `[0.3, 3]`.
pub fn point(rng: &mut impl Rng) -> TorusPoint<f64> {
    let x = rng.random_range(-2.0..=2.0);
    let y = rng.random_range(0.3f64.ln()..=3f64.ln()).exp();
    TorusPoint::from_parts(x, y).expect("sampled point lies in the upper half-plane")
}

/// Half integer pairs in `[-6, 6]²`, half real pairs in `[-3, 3]²`.
pub fn foliation(rng: &mut impl Rng) -> TorusFoliation<f64> {
    loop {
        let (a, b) = if rng.random_bool(0.5) {
            (rng.random_range(-6i32..=6) as f64, rng.random_range(-6i32..=6) as f64)
        } else {
            (rng.random_range(-3.0..=3.0), rng.random_range(-3.0..=3.0))
        };
        if a.hypot(b) > 1e-3 {
            return TorusFoliation::new(a, b).expect("nonzero weights");
        }
    }
}

/// Nonzero direction in the square `[-1, 1]²`.
pub fn direction(rng: &mut impl Rng) -> C {
    loop {
        let v = C::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0));
        if v.norm() > 1e-3 {
            return v;
        }
    }
}

/// Uniform point of the closed disk of radius `r`.
pub fn in_disk(rng: &mut impl Rng, r: f64) -> C {
    let rho = r * rng.random::<f64>().sqrt();
    C::from_polar(rho, rng.random_range(0.0..std::f64::consts::TAU))
}

/// Affine torus disk whose image stays in `Im τ ≥ 0.1`, radius at most 1.
pub fn torus_disk(rng: &mut impl Rng) -> HoloDisk {
    let tau0 = point(rng).tau();
    let v = direction(rng);
    let radius = ((tau0.im - MIN_IMAGE_HEIGHT) / v.norm()).min(1.0);
    HoloDisk::torus(tau0, v, radius).expect("radius keeps the image above the guard")
}

/// Sub-disk of a randomly chosen Teichmüller disk inside `|λ| ≤ 0.9`.
pub fn flat_disk(rng: &mut impl Rng, disks: &[Arc<TeichDisk<f64>>]) -> HoloDisk {
    let disk = disks[rng.random_range(0..disks.len())].clone();
    let center = in_disk(rng, 0.6);
    let radius = MAX_FLAT_MODULUS - center.norm();
    HoloDisk::flat(disk, center, radius).expect("sub-disk stays inside the unit disk")
}

/// `n × n` Cartesian grid on `[-0.6, 0.6]²`, to be scaled by a disk radius.
pub fn unit_grid(n: usize) -> Vec<C> {
    let coord = |i: usize| if n == 1 { 0.0 } else { -0.6 + 1.2 * i as f64 / (n - 1) as f64 };
    (0..n).flat_map(|i| (0..n).map(move |j| C::new(coord(j), coord(i)))).collect()
}

/// `n` equally spaced points on the unit circle.
pub fn circle(n: usize) -> Vec<C> {
    (0..n).map(|k| C::from_polar(1.0, std::f64::consts::TAU * k as f64 / n as f64)).collect()
}

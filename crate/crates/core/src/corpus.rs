//! Shipped example surfaces.
//!
//! * `square_torus`: unit square, opposite sides translated. Orientable.
//! * `pillowcase(w, h)`: a `w × h` rectangle whose vertical sides are
//!   translated onto each other while the top and bottom sides are each
//!   split at their midpoint and folded (`z ↦ -z + c`). Four cone points of
//!   angle π.
//! * `folded_pentagon`: a convex pentagon with every side split at its
//!   midpoint and folded. The midpoints are five poles and the five corners
//!   merge into one point of angle 3π: a generic genus-0 surface with one
//!   simple zero.
//! * `two_zero_two_pole_torus`: a unit square whose vertical sides are
//!   translated, whose bottom is folded at its midpoint, and whose top is cut
//!   into six equal slits glued opposite-to-opposite by folds. The slit
//!   endpoints fall into two points of angle 3π.
//! * `l_shape`: three unit squares in an L, glued by translations. Genus 2
//!   with a single cone point of angle 6π.

use num_complex::Complex;

use crate::flat::{EdgeRef, GluingData, Pairing};

fn c(re: f64, im: f64) -> Complex<f64> {
    Complex::new(re, im)
}

fn pair(p: usize, a: usize, b: usize, flip: bool) -> Pairing {
    Pairing::new(EdgeRef::new(p, a), EdgeRef::new(p, b), flip)
}

pub fn square_torus() -> GluingData<f64> {
    GluingData {
        polygons: vec![vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 1.0), c(0.0, 1.0)]],
        pairings: vec![pair(0, 0, 2, false), pair(0, 1, 3, false)],
    }
}

pub fn pillowcase(width: f64, height: f64) -> GluingData<f64> {
    let (w, h) = (width, height);
    GluingData {
        polygons: vec![vec![c(0.0, 0.0), c(w / 2.0, 0.0), c(w, 0.0), c(w, h), c(w / 2.0, h), c(0.0, h)]],
        pairings: vec![pair(0, 0, 1, true), pair(0, 2, 5, false), pair(0, 3, 4, true)],
    }
}

/// Corners of the convex pentagon used by [`folded_pentagon`]; area 8.
pub const PENTAGON: [(f64, f64); 5] = [(0.0, 0.0), (2.0, 0.0), (3.0, 2.0), (1.0, 3.0), (-1.0, 2.0)];

pub fn folded_pentagon() -> GluingData<f64> {
    let mut poly = Vec::with_capacity(10);
    for i in 0..5 {
        let (a, b) = (PENTAGON[i], PENTAGON[(i + 1) % 5]);
        poly.push(c(a.0, a.1));
        poly.push(c((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0));
    }
    GluingData { polygons: vec![poly], pairings: (0..5).map(|i| pair(0, 2 * i, 2 * i + 1, true)).collect() }
}

pub fn two_zero_two_pole_torus() -> GluingData<f64> {
    let mut poly = vec![c(0.0, 0.0), c(0.5, 0.0), c(1.0, 0.0)];
    for k in 0..=5 {
        poly.push(c(1.0 - k as f64 / 6.0, 1.0));
    }
    poly.push(c(0.0, 1.0));
    // edges: 0,1 bottom halves; 2 right; 3..=8 top slits (right to left); 9 left
    GluingData {
        polygons: vec![poly],
        pairings: vec![
            pair(0, 0, 1, true),
            pair(0, 2, 9, false),
            pair(0, 3, 6, true),
            pair(0, 4, 7, true),
            pair(0, 5, 8, true),
        ],
    }
}

pub fn l_shape() -> GluingData<f64> {
    GluingData {
        polygons: vec![vec![
            c(0.0, 0.0),
            c(1.0, 0.0),
            c(2.0, 0.0),
            c(2.0, 1.0),
            c(1.0, 1.0),
            c(1.0, 2.0),
            c(0.0, 2.0),
            c(0.0, 1.0),
        ]],
        pairings: vec![pair(0, 0, 5, false), pair(0, 1, 3, false), pair(0, 2, 7, false), pair(0, 4, 6, false)],
    }
}

/// Named corpus entries, as shipped in the repository's `corpus/` directory.
pub fn all() -> Vec<(&'static str, GluingData<f64>)> {
    vec![
        ("square_torus", square_torus()),
        ("pillowcase_1x1", pillowcase(1.0, 1.0)),
        ("pillowcase_1x2", pillowcase(1.0, 2.0)),
        ("folded_pentagon", folded_pentagon()),
        ("two_zero_two_pole_torus", two_zero_two_pole_torus()),
        ("l_shape", l_shape()),
    ]
}

//! Exact cellular homology of the double cover and its odd part.
//!
//! Chains are rational combinations of cover edges. The algebraic
//! intersection number of two cycles is computed by pushing the first cycle
//! off the 1-skeleton to the right of each edge and counting, at every
//! vertex, how the reconnecting arcs cross the darts of the second cycle.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::cover::DoubleCover;
use crate::error::{Error, Result};
use crate::linalg::{nullspace, Echelon};
use crate::scalar::Real;

pub type Rational = BigRational;

/// A rational 1-chain on the cover, indexed by cover edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain(pub Vec<Rational>);

impl Chain {
    pub fn zero(edges: usize) -> Self {
        Chain(vec![Rational::zero(); edges])
    }

    pub fn edge(edges: usize, e: usize) -> Self {
        let mut c = Self::zero(edges);
        c.0[e] = Rational::one();
        c
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Chain) -> Chain {
        Chain(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Chain) -> Chain {
        Chain(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &Rational) -> Chain {
        Chain(self.0.iter().map(|a| a * k).collect())
    }

    /// Image under the deck involution.
    pub fn deck(&self) -> Chain {
        Chain((0..self.0.len()).map(|e| self.0[e ^ 1].clone()).collect())
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> =
            self.0.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(e, c)| format!("{c}·e{e}")).collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// A basis of homology classes with their intersection matrix.
///
/// For [`odd_symplectic_basis`] the cycles are ordered `α₁, β₁, α₂, β₂, …`
/// with `αⱼ·βₖ = δⱼₖ` and all other pairings zero.
#[derive(Debug, Clone)]
pub struct HomologyBasis {
    pub cycles: Vec<Chain>,
    pub intersection_matrix: Vec<Vec<Rational>>,
    pub parity: Vec<Parity>,
}

impl HomologyBasis {
    pub fn rank(&self) -> usize {
        self.cycles.len()
    }

    /// `(α, β)` pairs of a symplectic basis.
    pub fn pairs(&self) -> impl Iterator<Item = (&Chain, &Chain)> {
        self.cycles.chunks(2).map(|c| (&c[0], &c[1]))
    }

    /// Whether the intersection matrix is the standard symplectic one.
    pub fn is_symplectic(&self) -> bool {
        let n = self.cycles.len();
        if !n.is_multiple_of(2) || self.intersection_matrix.len() != n {
            return false;
        }
        (0..n).all(|i| {
            (0..n).all(|j| {
                let expected = if i % 2 == 0 && j == i + 1 {
                    Rational::one()
                } else if i % 2 == 1 && j + 1 == i {
                    -Rational::one()
                } else {
                    Rational::zero()
                };
                self.intersection_matrix[i][j] == expected
            })
        })
    }

    /// The intersection matrix as integers, if every entry is integral.
    pub fn integer_intersection_matrix(&self) -> Option<Vec<Vec<i64>>> {
        self.intersection_matrix
            .iter()
            .map(|row| row.iter().map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None }).collect())
            .collect()
    }
}

/// `∂c`, indexed by cover vertex.
pub fn boundary<T: Real>(cover: &DoubleCover<T>, c: &Chain) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); cover.vertices().len()];
    for (e, coeff) in c.0.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let (t, h) = cover.edge_ends(e);
        out[h] += coeff;
        out[t] -= coeff;
    }
    out
}

pub fn is_cycle<T: Real>(cover: &DoubleCover<T>, c: &Chain) -> bool {
    c.len() == cover.edge_count() && boundary(cover, c).iter().all(Zero::is_zero)
}

/// Algebraic intersection number `a · b` of two cycles.
pub fn intersection<T: Real>(cover: &DoubleCover<T>, a: &Chain, b: &Chain) -> Rational {
    let mut total = Rational::zero();
    for v in cover.vertices() {
        let n = v.darts.len();
        // g[j]: flow of the pushed-off copy of `a` crossing dart j counter-clockwise
        let mut g = Rational::zero();
        for j in 0..n {
            let d = v.darts[j];
            if !g.is_zero() && !b.0[d.edge].is_zero() {
                let o = if d.outgoing { &b.0[d.edge] } else { &-&b.0[d.edge] };
                total -= &g * o;
            }
            let next = v.darts[(j + 1) % n];
            if !d.outgoing {
                g += &a.0[d.edge];
            }
            if next.outgoing {
                g -= &a.0[next.edge];
            }
        }
        debug_assert!(g.is_zero(), "pushed-off chain does not close at a vertex");
    }
    total
}

/// Intersection matrix of a list of cycles.
pub fn intersection_matrix<T: Real>(cover: &DoubleCover<T>, cycles: &[Chain]) -> Vec<Vec<Rational>> {
    cycles.iter().map(|a| cycles.iter().map(|b| intersection(cover, a, b)).collect()).collect()
}

fn boundary_matrix<T: Real>(cover: &DoubleCover<T>) -> Vec<Vec<Rational>> {
    let mut m = vec![vec![Rational::zero(); cover.edge_count()]; cover.vertices().len()];
    for e in 0..cover.edge_count() {
        let (t, h) = cover.edge_ends(e);
        m[h][e] += Rational::one();
        m[t][e] -= Rational::one();
    }
    m
}

fn face_chains<T: Real>(cover: &DoubleCover<T>) -> Vec<Chain> {
    (0..cover.face_count())
        .map(|f| {
            let mut c = Chain::zero(cover.edge_count());
            for &(e, s) in cover.face_boundary(f) {
                c.0[e] += Rational::from_integer(BigInt::from(s));
            }
            c
        })
        .collect()
}

/// Cycles representing a basis of `H₁` of the cover, split into the `±1`
/// eigenspaces of the deck involution (even classes first).
pub fn homology_basis<T: Real>(cover: &DoubleCover<T>) -> HomologyBasis {
    let edges = cover.edge_count();
    let mut span = Echelon::new(edges);
    for f in face_chains(cover) {
        span.insert(&f.0);
    }
    let cycles = nullspace(&boundary_matrix(cover), edges);
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    let mut even = Vec::new();
    let mut odd = Vec::new();
    // even and odd projections of a spanning set span H₊ and H₋
    for z in cycles.into_iter().map(Chain) {
        let plus = z.add(&z.deck()).scale(&half);
        let minus = z.sub(&z.deck()).scale(&half);
        if span.insert(&plus.0) {
            even.push(plus);
        }
        if span.insert(&minus.0) {
            odd.push(minus);
        }
    }
    let parity: Vec<Parity> = even.iter().map(|_| Parity::Even).chain(odd.iter().map(|_| Parity::Odd)).collect();
    let cycles: Vec<Chain> = even.into_iter().chain(odd).collect();
    let intersection_matrix = intersection_matrix(cover, &cycles);
    HomologyBasis { cycles, intersection_matrix, parity }
}

/// Basis of the odd part of `H₁(cover)` over the rationals.
pub fn odd_homology<T: Real>(cover: &DoubleCover<T>) -> Vec<Chain> {
    let full = homology_basis(cover);
    full.cycles.into_iter().zip(full.parity).filter(|(_, p)| *p == Parity::Odd).map(|(c, _)| c).collect()
}

/// Skew Gram–Schmidt: a rational symplectic basis of the span of `vectors`.
///
/// The partner of each `α` is the first remaining vector pairing nonzero
/// with it, so the output is deterministic.
pub fn symplectic_reduce<T: Real>(cover: &DoubleCover<T>, vectors: Vec<Chain>) -> Result<Vec<Chain>> {
    let mut pool = vectors;
    let mut out = Vec::with_capacity(pool.len());
    while !pool.is_empty() {
        let alpha = pool.remove(0);
        let Some(j) = pool.iter().position(|w| !intersection(cover, &alpha, w).is_zero()) else {
            return Err(Error::DegenerateIntersection);
        };
        let w = pool.remove(j);
        let k = intersection(cover, &alpha, &w);
        let beta = w.scale(&(Rational::one() / k));
        pool = pool
            .into_iter()
            .map(|w| {
                let wb = intersection(cover, &w, &beta);
                let wa = intersection(cover, &w, &alpha);
                w.sub(&alpha.scale(&wb)).add(&beta.scale(&wa))
            })
            .collect();
        out.push(alpha);
        out.push(beta);
    }
    Ok(out)
}

/// A symplectic basis of the odd homology `H₁(cover)⁻`.
///
/// For an orientable surface the cover is disconnected and the odd part is
/// the anti-diagonal copy of `H₁` of the surface.
pub fn odd_symplectic_basis<T: Real>(cover: &DoubleCover<T>) -> Result<HomologyBasis> {
    let odd = odd_homology(cover);
    let cycles = symplectic_reduce(cover, odd)?;
    let intersection_matrix = intersection_matrix(cover, &cycles);
    let basis = HomologyBasis { parity: vec![Parity::Odd; cycles.len()], cycles, intersection_matrix };
    if !basis.is_symplectic() {
        return Err(Error::DegenerateIntersection);
    }
    Ok(basis)
}

/// Expected real rank of the odd homology from the stratum data: `2g̃ - 2g`.
pub fn expected_odd_rank<T: Real>(cover: &DoubleCover<T>) -> usize {
    if cover.is_connected() {
        2 * cover.genus() - 2 * cover.surface().genus()
    } else {
        2 * cover.surface().genus()
    }
}

pub(crate) fn rational_to_f64(q: &Rational) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    let f = q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN);
    if f.is_finite() {
        f
    } else {
        // fall back for huge numerators and denominators
        let s = if q.is_negative() { -1.0 } else { 1.0 };
        let shift = q.numer().bits().max(q.denom().bits()).saturating_sub(60);
        let n = (q.numer().abs() >> shift).to_f64().unwrap();
        let d = (q.denom() >> shift).to_f64().unwrap();
        s * n / d
    }
}

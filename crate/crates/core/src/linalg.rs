//! Exact linear algebra over a field.
//!
//! Pivots are chosen as the first nonzero entry in column order, so results
//! are reproducible.

use crate::scalar::ExactField;

/// An incrementally built row-echelon basis.
#[derive(Debug, Clone)]
pub struct Echelon<F> {
    dim: usize,
    /// `(pivot column, row)` with `row[pivot] = 1`.
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: ExactField> Echelon<F> {
    pub fn new(dim: usize) -> Self {
        Self { dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Reduces `v` against the current rows; the remainder is zero iff `v`
    /// lies in the span.
    pub fn reduce(&self, v: &mut [F]) {
        assert_eq!(v.len(), self.dim);
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let factor = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = x.clone() - factor.clone() * r.clone();
                }
            }
        }
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(F::is_zero)
    }

    /// Adds `v` if it is independent of the current rows; returns whether it was.
    pub fn insert(&mut self, v: &[F]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(pivot) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = F::one() / w[pivot].clone();
        for x in w.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        self.rows.push((pivot, w));
        true
    }
}

/// Basis of `{x : m x = 0}` for a matrix given by rows of length `cols`.
pub fn nullspace<F: ExactField>(m: &[Vec<F>], cols: usize) -> Vec<Vec<F>> {
    let mut a: Vec<Vec<F>> = m.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = F::one() / a[r][c].clone();
        for x in a[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let factor = a[i][c].clone();
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(pivot_row) {
                    *x = x.clone() - factor.clone() * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); cols];
            v[f] = F::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][f].clone();
            }
            v
        })
        .collect()
}

pub fn rank<F: ExactField>(vectors: &[Vec<F>], dim: usize) -> usize {
    let mut e = Echelon::new(dim);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

pub fn mat_vec<F: ExactField>(m: &[Vec<F>], v: &[F]) -> Vec<F> {
    m.iter().map(|row| row.iter().zip(v).fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::{BigRational, Rational64};
    use proptest::prelude::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn nullspace_of_small_matrix() {
        // x + y + z = 0, y - z = 0
        let m = vec![vec![q(1), q(1), q(1)], vec![q(0), q(1), q(-1)]];
        let n = nullspace(&m, 3);
        assert_eq!(n.len(), 1);
        assert!(mat_vec(&m, &n[0]).iter().all(|x| x == &q(0)));
        assert_eq!(n[0], vec![q(-2), q(1), q(1)]);
    }

    #[test]
    fn nullspace_of_empty_matrix_is_everything() {
        let n = nullspace::<BigRational>(&[], 2);
        assert_eq!(n, vec![vec![q(1), q(0)], vec![q(0), q(1)]]);
    }

    #[test]
    fn echelon_membership() {
        let mut e = Echelon::new(3);
        assert!(e.insert(&[q(1), q(2), q(0)]));
        assert!(e.insert(&[q(0), q(1), q(1)]));
        assert!(!e.insert(&[q(1), q(3), q(1)]));
        assert!(e.contains(&[q(2), q(5), q(1)]));
        assert!(!e.contains(&[q(0), q(0), q(1)]));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn works_over_machine_rationals() {
        let m = vec![vec![Rational64::from_integer(2), Rational64::from_integer(4)]];
        let n = nullspace(&m, 2);
        assert_eq!(n, vec![vec![Rational64::from_integer(-2), Rational64::from_integer(1)]]);
    }

    proptest! {
        #[test]
        fn rank_nullity(entries in proptest::collection::vec(-3i64..=3, 12)) {
            let m: Vec<Vec<BigRational>> = entries.chunks(4).map(|r| r.iter().map(|&x| q(x)).collect()).collect();
            let n = nullspace(&m, 4);
            prop_assert_eq!(rank(&m, 4) + n.len(), 4);
            for v in &n {
                prop_assert!(mat_vec(&m, v).iter().all(|x| x == &q(0)));
            }
            prop_assert_eq!(rank(&n, 4), n.len());
        }
    }
}

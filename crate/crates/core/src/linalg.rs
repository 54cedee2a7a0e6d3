//! Exact linear algebra: reduced row echelon form, nullspaces, and
//! coordinates of a vector in a computed span.

use std::collections::HashSet;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::tensor::DenseTensor;

/// A solved linear subspace `{v : constraint_matrix · v = 0}` with an
/// echelon-normalised basis.
///
/// Basis vector `s` carries a `1` in the `s`-th free (non-pivot) column and
/// zeros in every other free column, so bases of equal subspaces computed
/// from different constraint systems compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSpace {
    ambient_dim: usize,
    basis: Vec<DenseTensor>,
    constraint_matrix: DenseTensor,
}

impl SolutionSpace {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[DenseTensor] {
        &self.basis
    }

    pub fn constraint_matrix(&self) -> &DenseTensor {
        &self.constraint_matrix
    }

    /// `constraint_matrix · v`, for checking membership by residual.
    pub fn residual(&self, v: &DenseTensor) -> Result<DenseTensor> {
        let flat = v.reshape(&[v.len()])?;
        if flat.len() != self.ambient_dim {
            return Err(Error::dim(format!(
                "vector of length {} in ambient dimension {}",
                flat.len(),
                self.ambient_dim
            )));
        }
        crate::tensor::contract(&self.constraint_matrix, &flat, &[(1, 0)])
    }

    /// Linear combination `Σ coeffs[s] · basis[s]`.
    pub fn combine(&self, coeffs: &[Rational]) -> DenseTensor {
        assert_eq!(coeffs.len(), self.dim(), "coefficient count");
        let mut out = DenseTensor::zeros(&[self.ambient_dim]);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                out = out.add(&b.scale(c)).expect("same ambient shape");
            }
        }
        out
    }
}

/// Row-reduces `rows` (each of length `cols`) to reduced echelon form.
///
/// Returns the nonzero reduced rows sorted by pivot column together with the
/// pivot columns. Zero and duplicate rows are dropped up front.
pub fn rref(rows: &[Vec<Rational>], cols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut seen = HashSet::new();
    let mut pivots: Vec<(usize, Vec<Rational>)> = Vec::new();

    for row in rows {
        assert_eq!(row.len(), cols, "row length");
        if row.iter().all(Zero::is_zero) || !seen.insert(row) {
            continue;
        }
        let mut r = row.clone();
        for (p, pr) in &pivots {
            if !r[*p].is_zero() {
                let f = r[*p].clone();
                axpy(&mut r, &f, pr);
            }
        }
        let Some(c) = r.iter().position(|v| !v.is_zero()) else {
            continue;
        };
        let inv = r[c].recip();
        for v in r.iter_mut().filter(|v| !v.is_zero()) {
            *v *= &inv;
        }
        for (_, pr) in pivots.iter_mut() {
            if !pr[c].is_zero() {
                let f = pr[c].clone();
                axpy(pr, &f, &r);
            }
        }
        pivots.push((c, r));
    }

    pivots.sort_by_key(|(c, _)| *c);
    let cols_out = pivots.iter().map(|(c, _)| *c).collect();
    (pivots.into_iter().map(|(_, r)| r).collect(), cols_out)
}

// r -= f * p
fn axpy(r: &mut [Rational], f: &Rational, p: &[Rational]) {
    for (x, y) in r.iter_mut().zip(p) {
        if !y.is_zero() {
            *x -= f * y;
        }
    }
}

fn matrix_rows(m: &DenseTensor) -> Result<(Vec<Vec<Rational>>, usize)> {
    if m.rank() != 2 {
        return Err(Error::dim(format!(
            "expected a rank-2 matrix, got shape {:?}",
            m.shape()
        )));
    }
    let cols = m.shape()[1];
    let rows = if cols == 0 {
        Vec::new()
    } else {
        m.data().chunks(cols).map(<[Rational]>::to_vec).collect()
    };
    Ok((rows, cols))
}

pub fn rank(m: &DenseTensor) -> Result<usize> {
    let (rows, cols) = matrix_rows(m)?;
    Ok(rref(&rows, cols).1.len())
}

/// Basis of the right nullspace of a rank-2 matrix.
pub fn nullspace_basis(m: &DenseTensor) -> Result<SolutionSpace> {
    let (rows, cols) = matrix_rows(m)?;
    let (reduced, pivot_cols) = rref(&rows, cols);
    let basis = (0..cols)
        .filter(|c| !pivot_cols.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (row, &p) in reduced.iter().zip(&pivot_cols) {
                v[p] = -row[free].clone();
            }
            DenseTensor::vector(v)
        })
        .collect();
    Ok(SolutionSpace {
        ambient_dim: cols,
        basis,
        constraint_matrix: m.clone(),
    })
}

/// Coefficients expressing `v` in the basis of `space`, or `None` when `v`
/// lies outside the span.
pub fn coords_in_span(space: &SolutionSpace, v: &DenseTensor) -> Result<Option<Vec<Rational>>> {
    if v.len() != space.ambient_dim {
        return Err(Error::dim(format!(
            "vector of length {} in ambient dimension {}",
            v.len(),
            space.ambient_dim
        )));
    }
    let k = space.dim();
    // Augmented system [B | v], one row per ambient coordinate.
    let rows: Vec<Vec<Rational>> = (0..space.ambient_dim)
        .map(|j| {
            let mut row: Vec<Rational> = space.basis.iter().map(|b| b.data()[j].clone()).collect();
            row.push(v.data()[j].clone());
            row
        })
        .collect();
    let (reduced, pivot_cols) = rref(&rows, k + 1);
    if pivot_cols.last() == Some(&k) {
        return Ok(None);
    }
    let mut coeffs = vec![Rational::zero(); k];
    for (row, &p) in reduced.iter().zip(&pivot_cols) {
        coeffs[p] = row[k].clone();
    }
    Ok(Some(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn mat(rows: usize, cols: usize, e: &[i64]) -> DenseTensor {
        DenseTensor::from_ints(&[rows, cols], e).unwrap()
    }

    fn vecz(e: &[i64]) -> DenseTensor {
        DenseTensor::from_ints(&[e.len()], e).unwrap()
    }

    #[test]
    fn invertible_has_trivial_nullspace() {
        assert_eq!(nullspace_basis(&mat(1, 1, &[1])).unwrap().dim(), 0);
    }

    #[test]
    fn symmetric_row() {
        let s = nullspace_basis(&mat(1, 2, &[1, -1])).unwrap();
        assert_eq!(s.basis(), &[vecz(&[1, 1])]);
    }

    #[test]
    fn hand_eliminated_two_by_three() {
        let s = nullspace_basis(&mat(2, 3, &[1, 0, 1, 0, 1, 1])).unwrap();
        assert_eq!(s.basis(), &[vecz(&[-1, -1, 1])]);
    }

    #[test]
    fn zero_rows_give_full_space() {
        let s = nullspace_basis(&DenseTensor::zeros(&[0, 3])).unwrap();
        assert_eq!(s.dim(), 3);
        let s = nullspace_basis(&DenseTensor::zeros(&[0, 0])).unwrap();
        assert_eq!(s.dim(), 0);
    }

    #[test]
    fn non_matrix_rejected() {
        assert!(nullspace_basis(&DenseTensor::zeros(&[2])).is_err());
    }

    fn space(basis: &[&[i64]]) -> SolutionSpace {
        let ambient = basis[0].len();
        SolutionSpace {
            ambient_dim: ambient,
            basis: basis.iter().map(|b| vecz(b)).collect(),
            constraint_matrix: DenseTensor::zeros(&[0, ambient]),
        }
    }

    #[test]
    fn coords_examples() {
        let s = space(&[&[1, 1]]);
        assert_eq!(coords_in_span(&s, &vecz(&[2, 2])).unwrap(), Some(vec![int(2)]));
        assert_eq!(coords_in_span(&s, &vecz(&[1, 0])).unwrap(), None);
        let s = space(&[&[1, 0, 0], &[0, 1, 1]]);
        assert_eq!(
            coords_in_span(&s, &vecz(&[3, 2, 2])).unwrap(),
            Some(vec![int(3), int(2)])
        );
    }

    #[test]
    fn coords_length_mismatch() {
        let s = space(&[&[1, 1]]);
        assert!(coords_in_span(&s, &vecz(&[1, 1, 1])).is_err());
    }

    #[test]
    fn rank_counts_independent_rows() {
        assert_eq!(rank(&mat(3, 3, &[1, 2, 3, 2, 4, 6, 0, 1, 1])).unwrap(), 2);
    }
}

//! Small dense tensors over [`Rational`] and the contraction kernel.
//!
//! Entries are stored flat in row-major order; all indices are 0-based. The
//! meaning of each axis is fixed by the structure that owns the tensor (see
//! the type docs in [`crate::coalgebra`] and [`crate::comodule`]).

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DenseTensor {
    shape: Vec<usize>,
    data: Vec<Rational>,
}

impl DenseTensor {
    pub fn zeros(shape: &[usize]) -> Self {
        let len = shape.iter().product();
        Self {
            shape: shape.to_vec(),
            data: vec![Rational::zero(); len],
        }
    }

    pub fn from_vec(shape: &[usize], data: Vec<Rational>) -> Result<Self> {
        let len: usize = shape.iter().product();
        if data.len() != len {
            return Err(Error::dim(format!(
                "shape {shape:?} needs {len} entries, got {}",
                data.len()
            )));
        }
        Ok(Self {
            shape: shape.to_vec(),
            data,
        })
    }

    /// Builds a tensor by evaluating `f` at every multi-index.
    pub fn from_fn(shape: &[usize], mut f: impl FnMut(&[usize]) -> Rational) -> Self {
        let mut t = Self::zeros(shape);
        let mut idx = vec![0; shape.len()];
        for flat in 0..t.data.len() {
            t.unflatten_into(flat, &mut idx);
            t.data[flat] = f(&idx);
        }
        t
    }

    pub fn vector(entries: Vec<Rational>) -> Self {
        Self {
            shape: vec![entries.len()],
            data: entries,
        }
    }

    pub fn from_rows(rows: &[Vec<Rational>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::dim("ragged rows"));
        }
        Self::from_vec(&[rows.len(), cols], rows.concat())
    }

    pub fn from_ints(shape: &[usize], entries: &[i64]) -> Result<Self> {
        Self::from_vec(shape, entries.iter().map(|&v| rational::int(v)).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(&[n, n], |i| rational::delta(i[0], i[1]))
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[Rational] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Rational> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn offset(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.shape.len(), "index rank mismatch");
        idx.iter().zip(&self.shape).fold(0, |acc, (&i, &d)| {
            assert!(i < d, "index {idx:?} out of range for shape {:?}", self.shape);
            acc * d + i
        })
    }

    pub fn unflatten(&self, flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.shape.len()];
        self.unflatten_into(flat, &mut idx);
        idx
    }

    fn unflatten_into(&self, mut flat: usize, idx: &mut [usize]) {
        for (slot, &d) in idx.iter_mut().zip(&self.shape).rev() {
            *slot = flat % d;
            flat /= d;
        }
    }

    /// Nonzero entries with their multi-indices, in row-major order.
    pub fn nonzeros(&self) -> impl Iterator<Item = (Vec<usize>, &Rational)> + '_ {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(flat, v)| (self.unflatten(flat), v))
    }

    pub fn reshape(&self, shape: &[usize]) -> Result<Self> {
        Self::from_vec(shape, self.data.clone())
    }

    /// Reorders axes: output axis `j` is input axis `axes[j]`.
    pub fn permute(&self, axes: &[usize]) -> Self {
        assert_eq!(axes.len(), self.rank(), "permutation rank mismatch");
        let shape: Vec<usize> = axes.iter().map(|&a| self.shape[a]).collect();
        let mut src = vec![0; self.rank()];
        Self::from_fn(&shape, |dst| {
            for (j, &a) in axes.iter().enumerate() {
                src[a] = dst[j];
            }
            self[src.as_slice()].clone()
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Self {
            shape: self.shape.clone(),
            data,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Self {
            shape: self.shape.clone(),
            data,
        })
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            shape: self.shape.clone(),
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::dim(format!(
                "shape {:?} vs {:?}",
                self.shape, other.shape
            )));
        }
        Ok(())
    }
}

impl Index<&[usize]> for DenseTensor {
    type Output = Rational;

    fn index(&self, idx: &[usize]) -> &Rational {
        &self.data[self.offset(idx)]
    }
}

impl IndexMut<&[usize]> for DenseTensor {
    fn index_mut(&mut self, idx: &[usize]) -> &mut Rational {
        let off = self.offset(idx);
        &mut self.data[off]
    }
}

impl<const N: usize> Index<[usize; N]> for DenseTensor {
    type Output = Rational;

    fn index(&self, idx: [usize; N]) -> &Rational {
        &self[&idx[..]]
    }
}

impl<const N: usize> IndexMut<[usize; N]> for DenseTensor {
    fn index_mut(&mut self, idx: [usize; N]) -> &mut Rational {
        &mut self[&idx[..]]
    }
}

impl fmt::Debug for DenseTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DenseTensor{:?}[", self.shape)?;
        let mut first = true;
        for (idx, v) in self.nonzeros() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{idx:?}={v}")?;
        }
        write!(f, "]")
    }
}

/// Contracts `a` with `b` over the listed `(axis of a, axis of b)` pairs.
///
/// The free axes of `a` (in order) precede the free axes of `b` in the
/// result. Zero entries of either operand are skipped, so the cost scales
/// with the number of nonzeros rather than the dense size.
pub fn contract(a: &DenseTensor, b: &DenseTensor, pairs: &[(usize, usize)]) -> Result<DenseTensor> {
    for (n, &(ax, bx)) in pairs.iter().enumerate() {
        if ax >= a.rank() || bx >= b.rank() {
            return Err(Error::dim(format!(
                "contraction pair ({ax}, {bx}) out of range for ranks {} and {}",
                a.rank(),
                b.rank()
            )));
        }
        if pairs[..n].iter().any(|&(pa, pb)| pa == ax || pb == bx) {
            return Err(Error::dim(format!("axis repeated in contraction pair ({ax}, {bx})")));
        }
        if a.shape[ax] != b.shape[bx] {
            return Err(Error::dim(format!(
                "axis {ax} of a has length {} but axis {bx} of b has length {}",
                a.shape[ax], b.shape[bx]
            )));
        }
    }

    let free_a: Vec<usize> = (0..a.rank()).filter(|x| pairs.iter().all(|p| p.0 != *x)).collect();
    let free_b: Vec<usize> = (0..b.rank()).filter(|x| pairs.iter().all(|p| p.1 != *x)).collect();
    let key_len: usize = pairs.iter().map(|&(ax, _)| a.shape[ax]).product();
    let free_b_len: usize = free_b.iter().map(|&x| b.shape[x]).product();

    let linear = |idx: &[usize], axes: &mut dyn Iterator<Item = usize>, shape: &[usize]| {
        axes.fold(0usize, |acc, x| acc * shape[x] + idx[x])
    };

    // b's nonzeros grouped by contracted key.
    let mut by_key: Vec<Vec<(usize, &Rational)>> = vec![Vec::new(); key_len];
    for (idx, v) in b.nonzeros() {
        let key = linear(&idx, &mut pairs.iter().map(|p| p.1), &b.shape);
        let fb = linear(&idx, &mut free_b.iter().copied(), &b.shape);
        by_key[key].push((fb, v));
    }

    let mut shape: Vec<usize> = free_a.iter().map(|&x| a.shape[x]).collect();
    shape.extend(free_b.iter().map(|&x| b.shape[x]));
    let mut out = DenseTensor::zeros(&shape);
    for (idx, va) in a.nonzeros() {
        let key = linear(&idx, &mut pairs.iter().map(|p| p.0), &a.shape);
        let fa = linear(&idx, &mut free_a.iter().copied(), &a.shape);
        for &(fb, vb) in &by_key[key] {
            out.data[fa * free_b_len + fb] += va * vb;
        }
    }
    Ok(out)
}

/// Matrix product of two rank-2 tensors.
pub fn matmul(a: &DenseTensor, b: &DenseTensor) -> Result<DenseTensor> {
    if a.rank() != 2 || b.rank() != 2 {
        return Err(Error::dim("matmul needs rank-2 operands"));
    }
    contract(a, b, &[(1, 0)])
}

/// Kronecker product of two matrices: `(a ⊗ b)[(i,k)][(j,l)] = a[i][j]·b[k][l]`.
pub fn kron(a: &DenseTensor, b: &DenseTensor) -> Result<DenseTensor> {
    if a.rank() != 2 || b.rank() != 2 {
        return Err(Error::dim("kron needs rank-2 operands"));
    }
    let (r1, c1) = (a.shape[0], a.shape[1]);
    let (r2, c2) = (b.shape[0], b.shape[1]);
    Ok(DenseTensor::from_fn(&[r1 * r2, c1 * c2], |ix| {
        let (i, k) = (ix[0] / r2, ix[0] % r2);
        let (j, l) = (ix[1] / c2, ix[1] % c2);
        &a[[i, j]] * &b[[k, l]]
    }))
}

use crate::error::{Error, Result};
use crate::tensor::DenseTensor;

/// Matrix of a linear map between carriers: shape `(d_target, d_source)`,
/// column `a` holds the image of source basis vector `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMapMatrix {
    m: DenseTensor,
}

impl LinearMapMatrix {
    pub fn new(m: DenseTensor) -> Result<Self> {
        if m.rank() != 2 {
            return Err(Error::dim(format!("map matrix must be rank 2, got {:?}", m.shape())));
        }
        Ok(Self { m })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            m: DenseTensor::zeros(&[rows, cols]),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            m: DenseTensor::identity(n),
        }
    }

    /// Rebuilds a map from a flattened (row-major) solution vector.
    pub fn from_flat(rows: usize, cols: usize, v: &DenseTensor) -> Result<Self> {
        Self::new(v.reshape(&[rows, cols])?)
    }

    pub fn rows(&self) -> usize {
        self.m.shape()[0]
    }

    pub fn cols(&self) -> usize {
        self.m.shape()[1]
    }

    pub fn matrix(&self) -> &DenseTensor {
        &self.m
    }

    pub fn flatten(&self) -> DenseTensor {
        self.m.reshape(&[self.m.len()]).expect("same length")
    }

    pub fn transpose(&self) -> Self {
        Self {
            m: self.m.permute(&[1, 0]),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMapMatrix) -> Result<Self> {
        Self::new(crate::tensor::matmul(&self.m, &other.m)?)
    }
}

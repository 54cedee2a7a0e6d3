use std::fmt;

use crate::rational::Rational;
use crate::tensor::DenseTensor;

/// One failed coefficient identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Name of the identity, e.g. `"coassociativity"`.
    pub axiom: String,
    pub index: Vec<usize>,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {:?}: {} != {}", self.axiom, self.index, self.lhs, self.rhs)
    }
}

/// Outcome of checking a structure's axioms. Empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    /// Records every index where `lhs` and `rhs` differ.
    pub fn compare(&mut self, axiom: &str, lhs: &DenseTensor, rhs: &DenseTensor) {
        assert_eq!(lhs.shape(), rhs.shape(), "{axiom}: sides have different shapes");
        for (flat, (l, r)) in lhs.data().iter().zip(rhs.data()).enumerate() {
            if l != r {
                self.violations.push(Violation {
                    axiom: axiom.to_string(),
                    index: lhs.unflatten(flat),
                    lhs: l.clone(),
                    rhs: r.clone(),
                });
            }
        }
    }

    pub fn with(mut self, axiom: &str, lhs: &DenseTensor, rhs: &DenseTensor) -> Self {
        self.compare(axiom, lhs, rhs);
        self
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        write!(f, "{} violation(s)", self.violations.len())?;
        if let Some(v) = self.first() {
            write!(f, "; first: {v}")?;
        }
        Ok(())
    }
}

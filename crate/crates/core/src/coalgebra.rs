//! Coalgebras in structure-constant form and their dual algebras.

use std::sync::Arc;

use crate::comodule::Bicomodule;
use crate::error::{Error, Result};
use crate::rational;
use crate::report::ValidationReport;
use crate::tensor::{contract, DenseTensor};

/// A finite-dimensional coalgebra `(C, Δ, ε)` with basis `c_0 … c_{n-1}`.
///
/// `omega[α][β][γ]` is the coefficient of `c_β ⊗ c_γ` in `Δ(c_α)`, and
/// `counit[α] = ε(c_α)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    name: String,
    omega: DenseTensor,
    counit: DenseTensor,
}

impl Coalgebra {
    pub fn new(name: impl Into<String>, omega: DenseTensor, counit: DenseTensor) -> Result<Self> {
        let n = counit.len();
        if counit.rank() != 1 {
            return Err(Error::dim(format!("counit must be a vector, got shape {:?}", counit.shape())));
        }
        if n == 0 {
            return Err(Error::dim("coalgebra dimension must be positive"));
        }
        if omega.shape() != [n, n, n] {
            return Err(Error::dim(format!(
                "omega has shape {:?}, expected [{n}, {n}, {n}]",
                omega.shape()
            )));
        }
        Ok(Self {
            name: name.into(),
            omega,
            counit,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.counit.len()
    }

    pub fn omega(&self) -> &DenseTensor {
        &self.omega
    }

    pub fn counit(&self) -> &DenseTensor {
        &self.counit
    }

    pub fn into_arc(self) -> Arc<Self> {
        Arc::new(self)
    }

    /// Checks coassociativity and both counit laws.
    ///
    /// Coassociativity violations are indexed `(α, μ, ν, γ)` and compare the
    /// coefficients of `c_μ ⊗ c_ν ⊗ c_γ` in `(Δ⊗id)Δ(c_α)` and `(id⊗Δ)Δ(c_α)`.
    pub fn validate(&self) -> ValidationReport {
        let om = &self.omega;
        let left = contract(om, om, &[(1, 0)]).unwrap().permute(&[0, 2, 3, 1]);
        let right = contract(om, om, &[(2, 0)]).unwrap();
        let id = DenseTensor::identity(self.dim());
        let counit_left = contract(om, &self.counit, &[(1, 0)]).unwrap();
        let counit_right = contract(om, &self.counit, &[(2, 0)]).unwrap();
        ValidationReport::default()
            .with("coassociativity", &left, &right)
            .with("left counit", &counit_left, &id)
            .with("right counit", &counit_right, &id)
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::Invalid {
                what: format!("coalgebra {}", self.name),
                report,
            })
        }
    }

    /// First index `(α, β, γ)` where `Δ` differs from its flip, if any.
    pub fn cocommutativity_defect(&self) -> Option<[usize; 3]> {
        let n = self.dim();
        for a in 0..n {
            for b in 0..n {
                for g in (b + 1)..n {
                    if self.omega[[a, b, g]] != self.omega[[a, g, b]] {
                        return Some([a, b, g]);
                    }
                }
            }
        }
        None
    }

    pub fn is_cocommutative(&self) -> bool {
        self.cocommutativity_defect().is_none()
    }

    /// The algebra structure on the linear dual, with the counit as unit.
    pub fn dual_algebra(&self) -> Result<DualAlgebra> {
        self.ensure_valid()?;
        Ok(DualAlgebra {
            mult: self.omega.permute(&[1, 2, 0]),
            unit: self.counit.clone(),
        })
    }
}

/// The algebra `C•` in the dual basis `c^0 … c^{n-1}`;
/// `mult[α][β][γ]` is the coefficient of `c^γ` in `c^α · c^β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualAlgebra {
    pub mult: DenseTensor,
    pub unit: DenseTensor,
}

impl DualAlgebra {
    pub fn dim(&self) -> usize {
        self.unit.len()
    }

    pub fn validate(&self) -> ValidationReport {
        let m = &self.mult;
        // (ab)c indexed (a, b, c, out)
        let ab_c = contract(m, m, &[(2, 0)]).unwrap();
        // a(bc): contract mult[b][c][k] with mult[a][k][out] → (b, c, a, out)
        let a_bc = contract(m, m, &[(2, 1)]).unwrap().permute(&[2, 0, 1, 3]);
        let id = DenseTensor::identity(self.dim());
        let unit_left = contract(&self.unit, m, &[(0, 0)]).unwrap();
        let unit_right = contract(m, &self.unit, &[(1, 0)]).unwrap();
        ValidationReport::default()
            .with("associativity", &ab_c, &a_bc)
            .with("left unit", &unit_left, &id)
            .with("right unit", &unit_right, &id)
    }
}

/// Checks that the dual of the regular bicomodule is compatible with the
/// dual algebra.
///
/// Three families of identities are compared, all as coefficient tensors:
/// both dual coactions send the unit `ε` to the identity tensor `Σ c^α ⊗ c_α`;
/// the right coaction satisfies `ρ(f·g) = Σ f₍₀₎·g ⊗ f₍₁₎`; the left coaction
/// satisfies `λ(f·g) = Σ g₍₋₁₎ ⊗ f·g₍₀₎`.
pub fn dimodule_report(c: &Coalgebra) -> Result<ValidationReport> {
    c.ensure_valid()?;
    let n = c.dim();
    let algebra = c.dual_algebra()?;
    let dual = Bicomodule::regular(Arc::new(c.clone())).dual();
    let lc = dual.left().coaction();
    let rc = dual.right().coaction();
    let m = &algebra.mult;

    // Coaction of ε: indexed (m, α) as the coefficient of c_α ⊗ e^m (left)
    // or e^m ⊗ c_α (right).
    let id = DenseTensor::identity(n);
    let eps_left = contract(&algebra.unit, lc, &[(0, 0)])?;
    let eps_right = contract(&algebra.unit, rc, &[(0, 0)])?;

    // ρ(e^a·e^b) vs ρ(e^a)·e^b, indexed (a, b, m, α).
    let rho_lhs = contract(m, rc, &[(2, 0)])?;
    let rho_rhs = contract(rc, m, &[(1, 0)])?.permute(&[0, 2, 3, 1]);

    // λ(e^a·e^b) vs e^a·λ(e^b), indexed (a, b, m, α).
    let lam_lhs = contract(m, lc, &[(2, 0)])?;
    let lam_rhs = contract(lc, m, &[(1, 1)])?.permute(&[2, 0, 3, 1]);

    Ok(ValidationReport::default()
        .with("left coaction of unit", &eps_left, &id)
        .with("right coaction of unit", &eps_right, &id)
        .with("right coaction vs product", &rho_lhs, &rho_rhs)
        .with("left coaction vs product", &lam_lhs, &lam_rhs))
}

pub fn verify_dimodule(c: &Coalgebra) -> Result<bool> {
    Ok(dimodule_report(c)?.is_valid())
}

pub(crate) fn counit_vector(n: usize) -> DenseTensor {
    DenseTensor::from_fn(&[n], |_| rational::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::zoo;

    #[test]
    fn trivial_is_valid() {
        assert!(zoo::trivial().validate().is_valid());
    }

    #[test]
    fn doubled_comultiplication_breaks_counit() {
        let c = Coalgebra::new(
            "bad",
            DenseTensor::from_ints(&[1, 1, 1], &[2]).unwrap(),
            DenseTensor::from_ints(&[1], &[1]).unwrap(),
        )
        .unwrap();
        let report = c.validate();
        let v = report.first().unwrap();
        assert_eq!(v.axiom, "left counit");
        assert_eq!(v.index, vec![0, 0]);
        assert_eq!(v.lhs, int(2));
        assert!(c.dual_algebra().is_err());
    }

    #[test]
    fn shape_errors_precede_axioms() {
        let err = Coalgebra::new(
            "x",
            DenseTensor::zeros(&[2, 2, 1]),
            DenseTensor::from_ints(&[2], &[1, 0]).unwrap(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Dimension(_)));
    }

    #[test]
    fn cocommutativity_of_zoo() {
        assert!(zoo::trivial().is_cocommutative());
        assert!(zoo::primitive2().is_cocommutative());
        assert!(zoo::grouplike(3).is_cocommutative());
        // Δ(e_11) = e_11⊗e_11 + e_12⊗e_21 is not symmetric.
        let m2 = zoo::matrix(2);
        assert!(!m2.is_cocommutative());
        assert_eq!(m2.cocommutativity_defect(), Some([0, 1, 2]));
    }

    #[test]
    fn grouplike_dual_is_idempotents() {
        let a = zoo::grouplike(3).dual_algebra().unwrap();
        for x in 0..3 {
            for y in 0..3 {
                for z in 0..3 {
                    let expect = if x == y && y == z { 1 } else { 0 };
                    assert_eq!(a.mult[[x, y, z]], int(expect));
                }
            }
        }
        assert_eq!(a.unit, DenseTensor::from_ints(&[3], &[1, 1, 1]).unwrap());
    }

    #[test]
    fn trivial_dual_algebra() {
        let a = zoo::trivial().dual_algebra().unwrap();
        assert_eq!(a.mult.data(), &[int(1)]);
        assert_eq!(a.unit.data(), &[int(1)]);
    }

    #[test]
    fn dimodule_holds_on_small_zoo() {
        for c in [zoo::trivial(), zoo::primitive2(), zoo::matrix(2)] {
            assert!(verify_dimodule(&c).unwrap(), "{}", c.name());
        }
    }
}

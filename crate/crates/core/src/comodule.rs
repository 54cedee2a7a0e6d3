//! Left, right and bi-comodules in coefficient form.
//!
//! A left coaction on a carrier with basis `e_0 … e_{d-1}` is stored as a
//! tensor `lc` of shape `(d, d, n)`: `lc[k][i][α]` is the coefficient of
//! `c_α ⊗ e_i` in `Δ_L(e_k)`. A right coaction `rc[k][i][α]` is the
//! coefficient of `e_i ⊗ c_α` in `Δ_R(e_k)`. The source basis index always
//! comes first.

use std::sync::Arc;

use crate::coalgebra::Coalgebra;
use crate::error::{Error, Result};
use crate::rational;
use crate::report::ValidationReport;
use crate::tensor::{contract, DenseTensor};

fn check_coaction_shape(over: &Coalgebra, coaction: &DenseTensor, side: &str) -> Result<()> {
    let s = coaction.shape();
    if s.len() != 3 || s[0] != s[1] || s[2] != over.dim() {
        return Err(Error::dim(format!(
            "{side} coaction has shape {s:?}, expected [d, d, {}]",
            over.dim()
        )));
    }
    Ok(())
}

fn counit_report(over: &Coalgebra, coaction: &DenseTensor) -> ValidationReport {
    let lhs = contract(coaction, over.counit(), &[(2, 0)]).unwrap();
    ValidationReport::default().with("counit", &lhs, &DenseTensor::identity(coaction.shape()[0]))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftComodule {
    over: Arc<Coalgebra>,
    coaction: DenseTensor,
}

impl LeftComodule {
    pub fn new(over: Arc<Coalgebra>, coaction: DenseTensor) -> Result<Self> {
        check_coaction_shape(&over, &coaction, "left")?;
        Ok(Self { over, coaction })
    }

    /// `C` coacting on itself from the left by `Δ`.
    pub fn regular(over: Arc<Coalgebra>) -> Self {
        let coaction = over.omega().permute(&[0, 2, 1]);
        Self { over, coaction }
    }

    pub fn over(&self) -> &Arc<Coalgebra> {
        &self.over
    }

    pub fn dim(&self) -> usize {
        self.coaction.shape()[0]
    }

    pub fn coaction(&self) -> &DenseTensor {
        &self.coaction
    }

    /// Coassociativity (indexed `(k, i, β, γ)`) and counit.
    pub fn validate(&self) -> Result<ValidationReport> {
        self.over.ensure_valid()?;
        let lc = &self.coaction;
        let lhs = contract(lc, self.over.omega(), &[(2, 0)])?;
        let rhs = contract(lc, lc, &[(1, 0)])?.permute(&[0, 2, 1, 3]);
        let mut report = ValidationReport::default().with("left coassociativity", &lhs, &rhs);
        report.merge(counit_report(&self.over, lc));
        Ok(report)
    }

    /// The right comodule structure on the dual carrier: `rc'[k][m] = lc[m][k]`.
    pub fn dual(&self) -> RightComodule {
        RightComodule {
            over: self.over.clone(),
            coaction: self.coaction.permute(&[1, 0, 2]),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightComodule {
    over: Arc<Coalgebra>,
    coaction: DenseTensor,
}

impl RightComodule {
    pub fn new(over: Arc<Coalgebra>, coaction: DenseTensor) -> Result<Self> {
        check_coaction_shape(&over, &coaction, "right")?;
        Ok(Self { over, coaction })
    }

    /// `C` coacting on itself from the right by `Δ`.
    pub fn regular(over: Arc<Coalgebra>) -> Self {
        let coaction = over.omega().clone();
        Self { over, coaction }
    }

    pub fn over(&self) -> &Arc<Coalgebra> {
        &self.over
    }

    pub fn dim(&self) -> usize {
        self.coaction.shape()[0]
    }

    pub fn coaction(&self) -> &DenseTensor {
        &self.coaction
    }

    pub fn validate(&self) -> Result<ValidationReport> {
        self.over.ensure_valid()?;
        let rc = &self.coaction;
        let lhs = contract(rc, self.over.omega(), &[(2, 0)])?;
        let rhs = contract(rc, rc, &[(0, 1)])?.permute(&[2, 0, 1, 3]);
        let mut report = ValidationReport::default().with("right coassociativity", &lhs, &rhs);
        report.merge(counit_report(&self.over, rc));
        Ok(report)
    }

    /// The left comodule structure on the dual carrier: `lc'[k][m] = rc[m][k]`.
    pub fn dual(&self) -> LeftComodule {
        LeftComodule {
            over: self.over.clone(),
            coaction: self.coaction.permute(&[1, 0, 2]),
        }
    }
}

/// Compares the two composites of a pair of coactions on one carrier.
///
/// For `t1` and `t2` of shape `(d, d, n)` this checks
/// `Σ_i t1[k][i][α]·t2[i][m][β] = Σ_i t2[k][i][β]·t1[i][m][α]`, reported at
/// `(k, m, α, β)`. With `t1` a left and `t2` a right coaction this is the
/// bicomodule condition; for two coactions on the same side it says they
/// commute up to the flip of the two `C` factors.
pub fn commutation_report(axiom: &str, t1: &DenseTensor, t2: &DenseTensor) -> ValidationReport {
    let lhs = contract(t1, t2, &[(1, 0)]).unwrap().permute(&[0, 2, 1, 3]);
    let rhs = contract(t2, t1, &[(1, 0)]).unwrap().permute(&[0, 2, 3, 1]);
    ValidationReport::default().with(axiom, &lhs, &rhs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicomodule {
    left: LeftComodule,
    right: RightComodule,
}

impl Bicomodule {
    pub fn new(left: LeftComodule, right: RightComodule) -> Result<Self> {
        if left.over != right.over {
            return Err(Error::BaseMismatch(format!(
                "left coaction over {}, right over {}",
                left.over.name(),
                right.over.name()
            )));
        }
        if left.dim() != right.dim() {
            return Err(Error::dim(format!(
                "left carrier has dimension {}, right {}",
                left.dim(),
                right.dim()
            )));
        }
        Ok(Self { left, right })
    }

    /// `(C, Δ, Δ)`.
    pub fn regular(over: Arc<Coalgebra>) -> Self {
        Self {
            left: LeftComodule::regular(over.clone()),
            right: RightComodule::regular(over),
        }
    }

    /// Left comodule with `Δ_R = SW ∘ Δ_L`, i.e. `rc := lc`. A bicomodule
    /// whenever the base coalgebra is cocommutative.
    pub fn switch(left: LeftComodule) -> Self {
        let right = RightComodule {
            over: left.over.clone(),
            coaction: left.coaction.clone(),
        };
        Self { left, right }
    }

    pub fn left(&self) -> &LeftComodule {
        &self.left
    }

    pub fn right(&self) -> &RightComodule {
        &self.right
    }

    pub fn over(&self) -> &Arc<Coalgebra> {
        &self.left.over
    }

    pub fn dim(&self) -> usize {
        self.left.dim()
    }

    pub fn validate(&self) -> Result<ValidationReport> {
        let mut report = self.left.validate()?;
        report.merge(self.right.validate()?);
        report.merge(commutation_report(
            "bicomodule compatibility",
            &self.left.coaction,
            &self.right.coaction,
        ));
        Ok(report)
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate()?;
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::Invalid {
                what: "bicomodule".into(),
                report,
            })
        }
    }

    /// Dual carrier with left coaction induced by `Δ_R` and right coaction
    /// induced by `Δ_L`.
    pub fn dual(&self) -> Bicomodule {
        Bicomodule {
            left: self.right.dual(),
            right: self.left.dual(),
        }
    }
}

/// `U ⊗ W` with `Δ_L ⊗ id_W` on the left and `id_U ⊗ Δ̄_R` on the right.
/// The basis vector `e_k ⊗ f_a` has index `k·d_W + a`.
pub fn tensor_bicomodule(u: &LeftComodule, w: &RightComodule) -> Result<Bicomodule> {
    if u.over != w.over {
        return Err(Error::BaseMismatch(format!(
            "{} vs {}",
            u.over.name(),
            w.over.name()
        )));
    }
    Ok(Bicomodule {
        left: LeftComodule {
            over: u.over.clone(),
            coaction: coaction_then_identity(&u.coaction, w.dim()),
        },
        right: RightComodule {
            over: w.over.clone(),
            coaction: identity_then_coaction(u.dim(), &w.coaction),
        },
    })
}

/// `t ⊗ id` on a product carrier: `out[(k,a)][(i,b)][α] = t[k][i][α]·δ_ab`.
pub(crate) fn coaction_then_identity(t: &DenseTensor, other: usize) -> DenseTensor {
    let (d, n) = (t.shape()[0], t.shape()[2]);
    DenseTensor::from_fn(&[d * other, d * other, n], |ix| {
        let (k, a) = (ix[0] / other.max(1), ix[0] % other.max(1));
        let (i, b) = (ix[1] / other.max(1), ix[1] % other.max(1));
        if a == b {
            t[[k, i, ix[2]]].clone()
        } else {
            rational::zero()
        }
    })
}

/// `id ⊗ t` on a product carrier: `out[(k,a)][(i,b)][α] = δ_ki·t[a][b][α]`.
pub(crate) fn identity_then_coaction(other: usize, t: &DenseTensor) -> DenseTensor {
    let (d, n) = (t.shape()[0], t.shape()[2]);
    DenseTensor::from_fn(&[other * d, other * d, n], |ix| {
        let (k, a) = (ix[0] / d.max(1), ix[0] % d.max(1));
        let (i, b) = (ix[1] / d.max(1), ix[1] % d.max(1));
        if k == i {
            t[[a, b, ix[2]]].clone()
        } else {
            rational::zero()
        }
    })
}

//! The four coactions on `Hom(W, U)` for bicomodules `W` and `U`.
//!
//! A map `Φ: W → U` is a `d_U × d_W` matrix ([`LinearMapMatrix`]) and every
//! coaction returns a tensor `T` of shape `(d_U, d_W, n)`: for each `α`,
//! `T[·][·][α]` is the `Hom(W, U)` component paired with `c_α`. Which side of
//! `Hom(W, U)` the `C` factor sits on is fixed by the coaction itself:
//! `L1` and `L2` are left coactions, `R1` and `R2` right ones.

use std::fmt;
use std::str::FromStr;

use crate::comodule::{coaction_then_identity, commutation_report, identity_then_coaction};
use crate::comodule::{Bicomodule, LeftComodule, RightComodule};
use crate::error::{Error, Result};
use crate::map::LinearMapMatrix;
use crate::rational;
use crate::report::ValidationReport;
use crate::tensor::{contract, DenseTensor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HomCoaction {
    /// `(Φ ⊗ id) ∘ Δ̄_R`, from the right coaction of the source.
    L1,
    /// `(id ⊗ Φ) ∘ Δ̄_L`, from the left coaction of the source.
    R1,
    /// `Δ_L ∘ Φ`, from the left coaction of the target.
    L2,
    /// `Δ_R ∘ Φ`, from the right coaction of the target.
    R2,
}

impl HomCoaction {
    pub const ALL: [HomCoaction; 4] = [Self::L1, Self::R1, Self::L2, Self::R2];

    pub fn is_left(self) -> bool {
        matches!(self, Self::L1 | Self::L2)
    }
}

impl fmt::Display for HomCoaction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::L1 => "L1",
            Self::R1 => "R1",
            Self::L2 => "L2",
            Self::R2 => "R2",
        };
        f.write_str(s)
    }
}

impl FromStr for HomCoaction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "L1" => Ok(Self::L1),
            "R1" => Ok(Self::R1),
            "L2" => Ok(Self::L2),
            "R2" => Ok(Self::R2),
            _ => Err(Error::Unknown(format!("hom coaction {s:?}"))),
        }
    }
}

/// `T[i][a][α] = Σ_k Φ[k][a]·t[k][i][α]`: apply `Φ`, then coact in the target.
pub(crate) fn map_then_coact(phi: &DenseTensor, t: &DenseTensor) -> DenseTensor {
    contract(phi, t, &[(0, 0)]).unwrap().permute(&[1, 0, 2])
}

/// `T[i][a][α] = Σ_b t[a][b][α]·Φ[i][b]`: coact in the source, then apply `Φ`.
pub(crate) fn coact_then_map(phi: &DenseTensor, t: &DenseTensor) -> DenseTensor {
    contract(phi, t, &[(1, 1)]).unwrap()
}

fn check_map(phi: &LinearMapMatrix, w: &Bicomodule, u: &Bicomodule) -> Result<()> {
    if phi.rows() != u.dim() || phi.cols() != w.dim() {
        return Err(Error::dim(format!(
            "map is {}×{}, expected {}×{} (target × source)",
            phi.rows(),
            phi.cols(),
            u.dim(),
            w.dim()
        )));
    }
    if w.over() != u.over() {
        return Err(Error::BaseMismatch("source and target bicomodules".into()));
    }
    Ok(())
}

/// Applies one of the four coactions to `phi: W → U` by composing maps.
pub fn hom_coaction(which: HomCoaction, phi: &LinearMapMatrix, w: &Bicomodule, u: &Bicomodule) -> Result<DenseTensor> {
    check_map(phi, w, u)?;
    let m = phi.matrix();
    Ok(match which {
        HomCoaction::L1 => coact_then_map(m, w.right().coaction()),
        HomCoaction::R1 => coact_then_map(m, w.left().coaction()),
        HomCoaction::L2 => map_then_coact(m, u.left().coaction()),
        HomCoaction::R2 => map_then_coact(m, u.right().coaction()),
    })
}

/// The same four coactions computed on `Hom(W, U) ≅ W•⊗U ≅ U⊗W•` as tensor
/// products of a (dual) coaction with an identity:
/// `L1 = Δ̄_R•⊗id_U`, `R1 = id_U⊗Δ̄_L•`, `L2 = Δ_L⊗id_{W•}`, `R2 = id_{W•}⊗Δ_R`.
pub fn hom_coaction_factored(
    which: HomCoaction,
    phi: &LinearMapMatrix,
    w: &Bicomodule,
    u: &Bicomodule,
) -> Result<DenseTensor> {
    check_map(phi, w, u)?;
    let (du, dw) = (u.dim(), w.dim());
    let n = u.over().dim();
    // Each arm fixes the carrier ordering, its coaction tensor and how a
    // product index splits back into (target i, source a).
    let (coaction, u_first) = match which {
        HomCoaction::L1 => (coaction_then_identity(w.right().dual().coaction(), du), false),
        HomCoaction::R1 => (identity_then_coaction(du, w.left().dual().coaction()), true),
        HomCoaction::L2 => (coaction_then_identity(u.left().coaction(), dw), true),
        HomCoaction::R2 => (identity_then_coaction(dw, u.right().coaction()), false),
    };
    let pos = |i: usize, a: usize| if u_first { i * dw + a } else { a * du + i };
    let mut v = DenseTensor::zeros(&[du * dw]);
    for i in 0..du {
        for a in 0..dw {
            v[[pos(i, a)]] = phi.matrix()[[i, a]].clone();
        }
    }
    let image = contract(&v, &coaction, &[(0, 0)])?;
    Ok(DenseTensor::from_fn(&[du, dw, n], |ix| {
        image[[pos(ix[0], ix[1]), ix[2]]].clone()
    }))
}

/// Coefficient tensor `(d_U·d_W, d_U·d_W, n)` of one hom coaction, obtained
/// by evaluating it on every matrix unit `E^i_a` (flat index `i·d_W + a`).
pub fn hom_structure_tensor(which: HomCoaction, w: &Bicomodule, u: &Bicomodule) -> Result<DenseTensor> {
    let (du, dw) = (u.dim(), w.dim());
    let n = u.over().dim();
    let d = du * dw;
    let mut out = DenseTensor::zeros(&[d, d, n]);
    for i in 0..du {
        for a in 0..dw {
            let mut unit = DenseTensor::zeros(&[du, dw]);
            unit[[i, a]] = rational::one();
            let t = hom_coaction(which, &LinearMapMatrix::new(unit)?, w, u)?;
            for (idx, v) in t.nonzeros() {
                out[[i * dw + a, idx[0] * dw + idx[1], idx[2]]] = v.clone();
            }
        }
    }
    Ok(out)
}

/// Per-coaction and per-pair verdicts for the quadruple-comodule check.
#[derive(Clone, Debug, Default)]
pub struct QuadrupleReport {
    pub axioms: Vec<(HomCoaction, ValidationReport)>,
    pub pairs: Vec<((HomCoaction, HomCoaction), ValidationReport)>,
}

impl QuadrupleReport {
    pub fn holds(&self) -> bool {
        self.axioms.iter().all(|(_, r)| r.is_valid()) && self.pairs.iter().all(|(_, r)| r.is_valid())
    }
}

/// Checks that each hom coaction is a comodule structure on `Hom(W, U)` and
/// that all six pairs commute.
pub fn verify_quadruple(w: &Bicomodule, u: &Bicomodule) -> Result<QuadrupleReport> {
    if w.over() != u.over() {
        return Err(Error::BaseMismatch("source and target bicomodules".into()));
    }
    let over = u.over().clone();
    let tensors: Vec<(HomCoaction, DenseTensor)> = HomCoaction::ALL
        .iter()
        .map(|&h| Ok((h, hom_structure_tensor(h, w, u)?)))
        .collect::<Result<_>>()?;

    let mut report = QuadrupleReport::default();
    for (h, t) in &tensors {
        let r = if h.is_left() {
            LeftComodule::new(over.clone(), t.clone())?.validate()?
        } else {
            RightComodule::new(over.clone(), t.clone())?.validate()?
        };
        report.axioms.push((*h, r));
    }
    for x in 0..tensors.len() {
        for y in (x + 1)..tensors.len() {
            let (h1, t1) = &tensors[x];
            let (h2, t2) = &tensors[y];
            let name = format!("{h1}/{h2} commutation");
            report.pairs.push(((*h1, *h2), commutation_report(&name, t1, t2)));
        }
    }
    Ok(report)
}

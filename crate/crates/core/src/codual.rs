//! Spaces of comodule maps and the left/right coduals of a bicomodule.
//!
//! Maps are flattened row-major from their `(d_target, d_source)` matrix,
//! so unknown `Φ[i][a]` sits at position `i·d_source + a`.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::coalgebra::Coalgebra;
use crate::comodule::{Bicomodule, LeftComodule, RightComodule};
use crate::error::{Error, Result};
use crate::hom::{coact_then_map, hom_coaction, map_then_coact, HomCoaction};
use crate::linalg::{self, nullspace_basis, SolutionSpace};
use crate::map::LinearMapMatrix;
use crate::rational::Rational;
use crate::report::ValidationReport;
use crate::tensor::{contract, DenseTensor};

/// Rows `Σ_k Φ[k][a]·tu[k][i][α] − Σ_b tw[a][b][α]·Φ[i][b]`, one per `(a, i, α)`.
fn intertwiner_constraints(tw: &DenseTensor, tu: &DenseTensor) -> Result<DenseTensor> {
    let (dw, du, n) = (tw.shape()[0], tu.shape()[0], tu.shape()[2]);
    let cols = du * dw;
    let mut rows = Vec::with_capacity(dw * du * n);
    for a in 0..dw {
        for i in 0..du {
            for alpha in 0..n {
                let mut row = vec![Rational::zero(); cols];
                for k in 0..du {
                    let v = &tu[[k, i, alpha]];
                    if !v.is_zero() {
                        row[k * dw + a] += v;
                    }
                }
                for b in 0..dw {
                    let v = &tw[[a, b, alpha]];
                    if !v.is_zero() {
                        row[i * dw + b] -= v;
                    }
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Ok(DenseTensor::zeros(&[0, cols]));
    }
    DenseTensor::from_rows(&rows)
}

/// Left comodule maps `W → U`: solutions of `Δ_L ∘ Φ = (id ⊗ Φ) ∘ Δ̄_L`.
pub fn comodule_map_space(w: &LeftComodule, u: &LeftComodule) -> Result<SolutionSpace> {
    if w.over() != u.over() {
        return Err(Error::BaseMismatch("source and target comodules".into()));
    }
    nullspace_basis(&intertwiner_constraints(w.coaction(), u.coaction())?)
}

/// Right comodule maps `W → U`: solutions of `Δ_R ∘ Φ = (Φ ⊗ id) ∘ Δ̄_R`.
pub fn comodule_map_space_right(w: &RightComodule, u: &RightComodule) -> Result<SolutionSpace> {
    if w.over() != u.over() {
        return Err(Error::BaseMismatch("source and target comodules".into()));
    }
    nullspace_basis(&intertwiner_constraints(w.coaction(), u.coaction())?)
}

/// Defects of `Δ_L ∘ X = (id ⊗ X) ∘ Δ` for `X: C → U`, indexed `(i, a, α)`.
pub fn left_map_report(x: &LinearMapMatrix, u: &LeftComodule) -> Result<ValidationReport> {
    let reg = LeftComodule::regular(u.over().clone());
    check_codual_shape(x, u.dim(), u.over().dim())?;
    let lhs = map_then_coact(x.matrix(), u.coaction());
    let rhs = coact_then_map(x.matrix(), reg.coaction());
    Ok(ValidationReport::default().with("left comodule map", &lhs, &rhs))
}

fn check_codual_shape(x: &LinearMapMatrix, du: usize, n: usize) -> Result<()> {
    if x.rows() != du || x.cols() != n {
        return Err(Error::dim(format!(
            "vector cofield is {}×{}, expected {du}×{n}",
            x.rows(),
            x.cols()
        )));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// A codual bicomodule: comodule maps `C → U` with their induced coactions.
///
/// The carrier is the solution space itself; basis element `s` is
/// `basis_map(s)` and `induced` holds the coaction tensors in that basis.
#[derive(Clone, Debug)]
pub struct CodualSpace {
    pub side: Side,
    pub source: Bicomodule,
    pub space: SolutionSpace,
    pub induced: Bicomodule,
}

impl CodualSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis_map(&self, s: usize) -> LinearMapMatrix {
        let n = self.source.over().dim();
        LinearMapMatrix::from_flat(self.source.dim(), n, &self.space.basis()[s]).unwrap()
    }

    pub fn basis_maps(&self) -> Vec<LinearMapMatrix> {
        (0..self.dim()).map(|s| self.basis_map(s)).collect()
    }

    /// Coordinates of a map `C → U` in the codual basis, if it belongs.
    pub fn coords(&self, x: &LinearMapMatrix) -> Result<Option<Vec<Rational>>> {
        linalg::coords_in_span(&self.space, &x.flatten())
    }
}

/// `†U = Com^{(C,−)}(C, U)` with coactions `L1` (left) and `R2` (right).
pub fn left_codual(u: &Bicomodule) -> Result<CodualSpace> {
    u.ensure_valid()?;
    let reg = Bicomodule::regular(u.over().clone());
    let space = comodule_map_space(reg.left(), u.left())?;
    build_codual(Side::Left, u, &reg, space, HomCoaction::L1, HomCoaction::R2)
}

/// `U† = Com^{(−,C)}(C, U)` with coactions `L2` (left) and `R1` (right).
pub fn right_codual(u: &Bicomodule) -> Result<CodualSpace> {
    u.ensure_valid()?;
    let reg = Bicomodule::regular(u.over().clone());
    let space = comodule_map_space_right(reg.right(), u.right())?;
    build_codual(Side::Right, u, &reg, space, HomCoaction::L2, HomCoaction::R1)
}

fn build_codual(
    side: Side,
    u: &Bicomodule,
    reg: &Bicomodule,
    space: SolutionSpace,
    left: HomCoaction,
    right: HomCoaction,
) -> Result<CodualSpace> {
    let over = u.over().clone();
    let n = over.dim();
    let maps: Vec<LinearMapMatrix> = space
        .basis()
        .iter()
        .map(|b| LinearMapMatrix::from_flat(u.dim(), n, b))
        .collect::<Result<_>>()?;
    let lc = induced_coaction(&space, &maps, |x| hom_coaction(left, x, reg, u), n)?;
    let rc = induced_coaction(&space, &maps, |x| hom_coaction(right, x, reg, u), n)?;
    let induced = Bicomodule::new(
        LeftComodule::new(over.clone(), lc)?,
        RightComodule::new(over, rc)?,
    )?;
    Ok(CodualSpace {
        side,
        source: u.clone(),
        space,
        induced,
    })
}

/// Re-expresses each `coact(X_s)[·][·][α]` in the basis `X_t`.
fn induced_coaction(
    space: &SolutionSpace,
    maps: &[LinearMapMatrix],
    coact: impl Fn(&LinearMapMatrix) -> Result<DenseTensor>,
    n: usize,
) -> Result<DenseTensor> {
    let d = maps.len();
    let mut out = DenseTensor::zeros(&[d, d, n]);
    for (s, x) in maps.iter().enumerate() {
        let t = coact(x)?;
        for alpha in 0..n {
            let slice = DenseTensor::from_fn(&[t.shape()[0] * t.shape()[1]], |ix| {
                let (i, a) = (ix[0] / t.shape()[1], ix[0] % t.shape()[1]);
                t[[i, a, alpha]].clone()
            });
            let coeffs = linalg::coords_in_span(space, &slice)?
                .expect("induced coaction leaves the space of comodule maps");
            for (tt, c) in coeffs.into_iter().enumerate() {
                out[[s, tt, alpha]] = c;
            }
        }
    }
    Ok(out)
}

/// Outcome of comparing `†C` with `C•` through `X ↦ ε ∘ X`.
#[derive(Clone, Debug)]
pub struct IsoReport {
    pub dim: usize,
    /// Matrix of `X ↦ ε ∘ X`: column `s` holds `ε ∘ X_s` in the dual basis.
    pub matrix: DenseTensor,
    pub invertible: bool,
    pub intertwining: ValidationReport,
}

impl IsoReport {
    pub fn holds(&self) -> bool {
        self.invertible && self.intertwining.is_valid()
    }
}

pub fn prop28_isomorphism(c: &Arc<Coalgebra>) -> Result<IsoReport> {
    c.ensure_valid()?;
    let n = c.dim();
    let regular = Bicomodule::regular(c.clone());
    let codual = left_codual(&regular)?;
    let dual = regular.dual();
    let d = codual.dim();

    let mut e = DenseTensor::zeros(&[n, d]);
    for (s, x) in codual.basis_maps().iter().enumerate() {
        let col = contract(c.counit(), x.matrix(), &[(0, 0)])?;
        for a in 0..n {
            e[[a, s]] = col[[a]].clone();
        }
    }
    let invertible = d == n && linalg::rank(&e)? == n;

    let mut intertwining = ValidationReport::default();
    for (name, coded, target) in [
        ("left coaction", codual.induced.left().coaction(), dual.left().coaction()),
        ("right coaction", codual.induced.right().coaction(), dual.right().coaction()),
    ] {
        // Indexed (s, m, α).
        let lhs = contract(coded, &e, &[(1, 1)])?.permute(&[0, 2, 1]);
        let rhs = contract(&e, target, &[(0, 0)])?;
        intertwining.compare(name, &lhs, &rhs);
    }
    Ok(IsoReport {
        dim: d,
        matrix: e,
        invertible,
        intertwining,
    })
}

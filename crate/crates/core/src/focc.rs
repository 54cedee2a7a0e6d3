//! First order codifferential calculi, coderivations of `C`, the map
//! `X ↦ δ ∘ X` on vector cofields, and checks of its co-Leibniz behaviour.

use std::sync::Arc;

use num_traits::Zero;

use crate::codual::{left_codual, left_map_report};
use crate::coalgebra::Coalgebra;
use crate::comodule::{Bicomodule, LeftComodule};
use crate::error::{Error, Result};
use crate::hom::{hom_coaction, map_then_coact, HomCoaction};
use crate::linalg::{self, nullspace_basis, SolutionSpace};
use crate::map::LinearMapMatrix;
use crate::rational::Rational;
use crate::report::ValidationReport;
use crate::tensor::{contract, kron, matmul, DenseTensor};

/// A coderivation `δ: U → C` on a bicomodule `U`.
///
/// `d[k][α]` is the coefficient of `c_α` in `δ(e_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Focc {
    carrier: Bicomodule,
    d: DenseTensor,
}

impl Focc {
    pub fn new(carrier: Bicomodule, d: DenseTensor) -> Result<Self> {
        let expect = [carrier.dim(), carrier.over().dim()];
        if d.shape() != expect {
            return Err(Error::dim(format!(
                "coderivation coefficients have shape {:?}, expected {expect:?}",
                d.shape()
            )));
        }
        Ok(Self { carrier, d })
    }

    pub fn zero(carrier: Bicomodule) -> Self {
        let d = DenseTensor::zeros(&[carrier.dim(), carrier.over().dim()]);
        Self { carrier, d }
    }

    /// Builds the calculus from a vector of [`focc_space`].
    pub fn from_flat(carrier: Bicomodule, v: &DenseTensor) -> Result<Self> {
        let d = v.reshape(&[carrier.dim(), carrier.over().dim()])?;
        Self::new(carrier, d)
    }

    pub fn carrier(&self) -> &Bicomodule {
        &self.carrier
    }

    pub fn coefficients(&self) -> &DenseTensor {
        &self.d
    }

    /// `δ` as an `n × d_U` map matrix.
    pub fn as_map(&self) -> LinearMapMatrix {
        LinearMapMatrix::new(self.d.permute(&[1, 0])).unwrap()
    }

    /// Coefficient form `Δ(δ_k) = L^i_k ⊗ δ_i + δ_i ⊗ R^i_k`, indexed `(k, β, γ)`.
    pub fn validate(&self) -> ValidationReport {
        let omega = self.carrier.over().omega();
        let lc = self.carrier.left().coaction();
        let rc = self.carrier.right().coaction();
        let lhs = contract(&self.d, omega, &[(1, 0)]).unwrap();
        let left = contract(lc, &self.d, &[(1, 0)]).unwrap();
        let right = contract(&self.d, rc, &[(0, 1)]).unwrap().permute(&[1, 0, 2]);
        ValidationReport::default().with("co-Leibniz coefficients", &lhs, &left.add(&right).unwrap())
    }

    /// `Δ ∘ δ = (id ⊗ δ) ∘ Δ_L + (δ ⊗ id) ∘ Δ_R`, evaluated as products of
    /// Kronecker-expanded map matrices. Rows index `c_β ⊗ c_γ` as `β·n + γ`,
    /// columns the carrier basis.
    pub fn coleibniz_report(&self) -> ValidationReport {
        let c = self.carrier.over();
        let (n, du) = (c.dim(), self.carrier.dim());
        let delta = self.as_map();
        let comult = DenseTensor::from_fn(&[n * n, n], |ix| {
            c.omega()[[ix[1], ix[0] / n, ix[0] % n]].clone()
        });
        let lc = self.carrier.left().coaction();
        let rc = self.carrier.right().coaction();
        let left_map = DenseTensor::from_fn(&[n * du, du], |ix| {
            lc[[ix[1], ix[0] % du.max(1), ix[0] / du.max(1)]].clone()
        });
        let right_map = DenseTensor::from_fn(&[du * n, du], |ix| {
            rc[[ix[1], ix[0] / n, ix[0] % n]].clone()
        });
        let id = DenseTensor::identity(n);
        let lhs = matmul(&comult, delta.matrix()).unwrap();
        let t1 = matmul(&kron(&id, delta.matrix()).unwrap(), &left_map).unwrap();
        let t2 = matmul(&kron(delta.matrix(), &id).unwrap(), &right_map).unwrap();
        ValidationReport::default().with("co-Leibniz rule", &lhs, &t1.add(&t2).unwrap())
    }
}

/// All coderivations `U → C`, flattened as `d[k][α]` at `k·n + α`.
pub fn focc_space(u: &Bicomodule) -> Result<SolutionSpace> {
    u.ensure_valid()?;
    let c = u.over();
    let (du, n) = (u.dim(), c.dim());
    let (omega, lc, rc) = (c.omega(), u.left().coaction(), u.right().coaction());
    let cols = du * n;
    let mut rows = Vec::with_capacity(du * n * n);
    for k in 0..du {
        for beta in 0..n {
            for gamma in 0..n {
                let mut row = vec![Rational::zero(); cols];
                for alpha in 0..n {
                    row[k * n + alpha] += &omega[[alpha, beta, gamma]];
                }
                for i in 0..du {
                    row[i * n + gamma] -= &lc[[k, i, beta]];
                    row[i * n + beta] -= &rc[[k, i, gamma]];
                }
                rows.push(row);
            }
        }
    }
    let m = if rows.is_empty() {
        DenseTensor::zeros(&[0, cols])
    } else {
        DenseTensor::from_rows(&rows)?
    };
    nullspace_basis(&m)
}

/// A coderivation `ξ` of `C` into itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coderivation {
    pub xi: LinearMapMatrix,
}

impl Coderivation {
    /// From a [`coder_space`] vector, where `Ξ[α][β]` (coefficient of `c_β`
    /// in `ξ(c_α)`) sits at `α·n + β`.
    pub fn from_flat(n: usize, v: &DenseTensor) -> Result<Self> {
        Ok(Self {
            xi: LinearMapMatrix::from_flat(n, n, v)?.transpose(),
        })
    }

    /// The [`coder_space`] coordinates of an endomorphism matrix.
    pub fn flatten_endomorphism(xi: &LinearMapMatrix) -> DenseTensor {
        xi.transpose().flatten()
    }
}

/// `Coder(C)`: endomorphisms with `Δ ∘ ξ = (id ⊗ ξ + ξ ⊗ id) ∘ Δ`.
pub fn coder_space(c: &Coalgebra) -> Result<SolutionSpace> {
    let n = c.dim();
    let omega = c.omega();
    let mut rows = Vec::with_capacity(n * n * n);
    for alpha in 0..n {
        for mu in 0..n {
            for nu in 0..n {
                let mut row = vec![Rational::zero(); n * n];
                for x in 0..n {
                    row[alpha * n + x] += &omega[[x, mu, nu]];
                    row[x * n + nu] -= &omega[[alpha, mu, x]];
                    row[x * n + mu] -= &omega[[alpha, x, nu]];
                }
                rows.push(row);
            }
        }
    }
    nullspace_basis(&DenseTensor::from_rows(&rows)?)
}

/// `Δ ∘ ξ` against `(id ⊗ ξ + ξ ⊗ id) ∘ Δ`, indexed `(a, μ, ν)`.
pub fn coderivation_report(c: &Coalgebra, xi: &LinearMapMatrix) -> ValidationReport {
    let omega = c.omega();
    let m = xi.matrix();
    let lhs = contract(m, omega, &[(0, 0)]).unwrap();
    let t1 = contract(omega, m, &[(2, 1)]).unwrap();
    let t2 = contract(omega, m, &[(1, 1)]).unwrap().permute(&[0, 2, 1]);
    ValidationReport::default().with("co-Leibniz rule on C", &lhs, &t1.add(&t2).unwrap())
}

/// `X^δ = δ ∘ X` for a vector cofield `X ∈ †U`.
pub fn cartan_map(x: &LinearMapMatrix, f: &Focc) -> Result<LinearMapMatrix> {
    let report = left_map_report(x, f.carrier.left())?;
    if let Some(v) = report.first() {
        return Err(Error::Precondition(format!(
            "map is not a vector cofield: {v} (indexed target i, source a, α)"
        )));
    }
    LinearMapMatrix::new(contract(&f.d, x.matrix(), &[(0, 0)])?)
}

#[derive(Clone, Debug, Default)]
pub struct Thm32Report {
    /// `δ̃` against the left coactions of `†U` and `End C`, indexed `(s, i, a, α)`.
    pub comodule_map: ValidationReport,
    /// The deformed co-Leibniz identity, one report per given cofield,
    /// indexed `(a, μ, ν)`.
    pub deformed_leibniz: Vec<ValidationReport>,
}

impl Thm32Report {
    pub fn holds(&self) -> bool {
        self.comodule_map.is_valid() && self.deformed_leibniz.iter().all(ValidationReport::is_valid)
    }
}

/// Checks that `X ↦ X^δ` is a left comodule map `†U → End C` and that
/// `Δ ∘ X^δ = (id ⊗ X^δ) ∘ Δ + (δ ⊗ id) ∘ Δ_R ∘ X` for each cofield in `xs`.
pub fn verify_thm32(u: &Bicomodule, f: &Focc, xs: &[LinearMapMatrix]) -> Result<Thm32Report> {
    if f.carrier != *u {
        return Err(Error::Precondition("calculus is defined on a different bicomodule".into()));
    }
    let c = u.over();
    let n = c.dim();
    let regular = Bicomodule::regular(c.clone());
    let codual = left_codual(u)?;
    let d = codual.dim();

    let images: Vec<LinearMapMatrix> = codual
        .basis_maps()
        .iter()
        .map(|b| cartan_map(b, f))
        .collect::<Result<_>>()?;
    let stacked = DenseTensor::from_fn(&[d, n, n], |ix| images[ix[0]].matrix()[[ix[1], ix[2]]].clone());
    let mut lhs = DenseTensor::zeros(&[d, n, n, n]);
    for (s, img) in images.iter().enumerate() {
        let t = hom_coaction(HomCoaction::L1, img, &regular, &regular)?;
        for (idx, v) in t.nonzeros() {
            lhs[[s, idx[0], idx[1], idx[2]]] = v.clone();
        }
    }
    let rhs = contract(codual.induced.left().coaction(), &stacked, &[(1, 0)])?.permute(&[0, 2, 3, 1]);
    let comodule_map = ValidationReport::default().with("left comodule map", &lhs, &rhs);

    let omega = c.omega();
    let deformed_leibniz = xs
        .iter()
        .map(|x| {
            let xd = cartan_map(x, f)?;
            let m = xd.matrix();
            let lhs = contract(m, omega, &[(0, 0)])?;
            let undeformed = contract(omega, m, &[(2, 1)])?;
            let coact = map_then_coact(x.matrix(), u.right().coaction());
            let deformation = contract(&f.d, &coact, &[(0, 0)])?.permute(&[1, 0, 2]);
            Ok(ValidationReport::default().with("deformed co-Leibniz", &lhs, &undeformed.add(&deformation)?))
        })
        .collect::<Result<_>>()?;

    Ok(Thm32Report {
        comodule_map,
        deformed_leibniz,
    })
}

/// For each basis cofield `X_s`, the coordinates of `X_s^δ` in `Coder(C)`
/// (`None` when it is not a coderivation).
#[derive(Clone, Debug)]
pub struct Thm33Report {
    pub coder_dim: usize,
    pub memberships: Vec<Option<Vec<Rational>>>,
}

impl Thm33Report {
    pub fn holds(&self) -> bool {
        self.memberships.iter().all(Option::is_some)
    }
}

/// Over a cocommutative coalgebra with the switch bicomodule of `u_left`,
/// every `X^δ` is a coderivation of `C`.
pub fn verify_thm33(c: &Arc<Coalgebra>, u_left: &LeftComodule, f: &Focc) -> Result<Thm33Report> {
    if let Some(idx) = c.cocommutativity_defect() {
        return Err(Error::Precondition(format!(
            "hypothesis violated: coalgebra not cocommutative (Ω differs from its flip at {idx:?})"
        )));
    }
    if u_left.over() != c {
        return Err(Error::BaseMismatch("comodule is over a different coalgebra".into()));
    }
    if *f.carrier() != Bicomodule::switch(u_left.clone()) {
        return Err(Error::Precondition(
            "hypothesis violated: calculus must live on the switch bicomodule of the comodule".into(),
        ));
    }
    let coder = coder_space(c)?;
    let codual = left_codual(f.carrier())?;
    let memberships = codual
        .basis_maps()
        .iter()
        .map(|x| {
            let xd = cartan_map(x, f)?;
            linalg::coords_in_span(&coder, &Coderivation::flatten_endomorphism(&xd))
        })
        .collect::<Result<_>>()?;
    Ok(Thm33Report {
        coder_dim: coder.dim(),
        memberships,
    })
}

/// How `X ↦ X^δ` relates `†U` to `Coder(C)` for one calculus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeReport {
    pub codual_dim: usize,
    pub coder_dim: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    /// Every image lies in `Coder(C)`.
    pub image_in_coder: bool,
    pub injective: bool,
    /// Image is all of `Coder(C)`.
    pub surjective: bool,
    pub cocommutative: bool,
}

impl ProbeReport {
    pub fn bijective(&self) -> bool {
        self.injective && self.surjective
    }

    pub fn verdict(&self) -> &'static str {
        match (self.injective, self.surjective) {
            (true, true) => "bijective",
            (true, false) => "injective, not surjective",
            (false, true) => "surjective, not injective",
            (false, false) => "neither injective nor surjective",
        }
    }
}

pub fn kahler_probe(c: &Arc<Coalgebra>, u: &Bicomodule, f: &Focc) -> Result<ProbeReport> {
    if u.over() != c || f.carrier() != u {
        return Err(Error::BaseMismatch("probe inputs disagree on coalgebra or carrier".into()));
    }
    let coder = coder_space(c)?;
    let codual = left_codual(u)?;
    let images: Vec<DenseTensor> = codual
        .basis_maps()
        .iter()
        .map(|x| Ok(Coderivation::flatten_endomorphism(&cartan_map(x, f)?)))
        .collect::<Result<_>>()?;
    let n2 = c.dim() * c.dim();
    let rows: Vec<Vec<Rational>> = images.iter().map(|v| v.data().to_vec()).collect();
    let rank = linalg::rref(&rows, n2).1.len();
    let mut image_in_coder = true;
    for v in &images {
        if linalg::coords_in_span(&coder, v)?.is_none() {
            image_in_coder = false;
        }
    }
    Ok(ProbeReport {
        codual_dim: codual.dim(),
        coder_dim: coder.dim(),
        rank,
        kernel_dim: codual.dim() - rank,
        image_in_coder,
        injective: rank == codual.dim(),
        surjective: image_in_coder && rank == coder.dim(),
        cocommutative: c.is_cocommutative(),
    })
}

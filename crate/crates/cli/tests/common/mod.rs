//! Test oracles written as plain matrix algebra.
//!
//! Every structure map is expanded into an explicit matrix on the relevant
//! tensor-product space (row index of `x ⊗ y` is `x·dim(Y) + y`) and
//! identities are checked by matrix products with Kronecker-expanded
//! identities. Ranks come from a naive Gauss–Jordan sweep. Nothing here
//! calls the library's contraction, permutation or solver code.
#![allow(dead_code, clippy::needless_range_loop)]

use coalc::{Bicomodule, Coalgebra, DenseTensor, Rational};
use num_traits::{One, Zero};

pub type Mat = Vec<Vec<Rational>>;

pub fn zeros(r: usize, c: usize) -> Mat {
    vec![vec![Rational::zero(); c]; r]
}

pub fn eye(n: usize) -> Mat {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Rational::one();
    }
    m
}

pub fn mul(a: &Mat, b: &Mat, inner: usize, bcols: usize) -> Mat {
    let mut out = zeros(a.len(), bcols);
    for (i, row) in a.iter().enumerate() {
        for k in 0..inner {
            if row[k].is_zero() {
                continue;
            }
            for j in 0..bcols {
                if !b[k][j].is_zero() {
                    out[i][j] += &row[k] * &b[k][j];
                }
            }
        }
    }
    out
}

pub fn kron(a: &Mat, b: &Mat, acols: usize, bcols: usize) -> Mat {
    let mut out = zeros(a.len() * b.len(), acols * bcols);
    for (i, ar) in a.iter().enumerate() {
        for (k, br) in b.iter().enumerate() {
            for j in 0..acols {
                if ar[j].is_zero() {
                    continue;
                }
                for l in 0..bcols {
                    out[i * b.len() + k][j * bcols + l] = &ar[j] * &br[l];
                }
            }
        }
    }
    out
}

pub fn add(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(p, q)| p + q).collect())
        .collect()
}

pub fn sub(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(p, q)| p - q).collect())
        .collect()
}

pub fn is_zero(a: &Mat) -> bool {
    a.iter().all(|r| r.iter().all(Zero::is_zero))
}

/// Swap `X ⊗ Y → Y ⊗ X`.
pub fn swap(dx: usize, dy: usize) -> Mat {
    let mut m = zeros(dx * dy, dx * dy);
    for x in 0..dx {
        for y in 0..dy {
            m[y * dx + x][x * dy + y] = Rational::one();
        }
    }
    m
}

pub fn rank(m: &Mat) -> usize {
    let mut a = m.clone();
    let ncols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = Rational::one() / &a[r][c];
        let pivot: Vec<Rational> = a[r].iter().map(|x| x * &inv).collect();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
        a[r] = pivot;
        r += 1;
    }
    r
}

pub fn from_tensor(t: &DenseTensor) -> Mat {
    let (r, c) = (t.shape()[0], t.shape()[1]);
    (0..r).map(|i| (0..c).map(|j| t[[i, j]].clone()).collect()).collect()
}

pub fn flatten(m: &Mat) -> Vec<Rational> {
    m.iter().flatten().cloned().collect()
}

// ---------------------------------------------------------------- structure maps

/// `Δ: C → C ⊗ C`.
pub fn comult(c: &Coalgebra) -> Mat {
    let n = c.dim();
    let mut m = zeros(n * n, n);
    for a in 0..n {
        for b in 0..n {
            for g in 0..n {
                m[b * n + g][a] = c.omega()[[a, b, g]].clone();
            }
        }
    }
    m
}

/// `ε` as a `1 × n` matrix.
pub fn counit(c: &Coalgebra) -> Mat {
    vec![(0..c.dim()).map(|a| c.counit()[[a]].clone()).collect()]
}

/// `Δ_L: U → C ⊗ U` from `lc[k][i][α]`.
pub fn left_map(lc: &DenseTensor) -> Mat {
    let (d, n) = (lc.shape()[0], lc.shape()[2]);
    let mut m = zeros(n * d, d);
    for k in 0..d {
        for i in 0..d {
            for a in 0..n {
                m[a * d + i][k] = lc[[k, i, a]].clone();
            }
        }
    }
    m
}

/// `Δ_R: U → U ⊗ C` from `rc[k][i][α]`.
pub fn right_map(rc: &DenseTensor) -> Mat {
    let (d, n) = (rc.shape()[0], rc.shape()[2]);
    let mut m = zeros(d * n, d);
    for k in 0..d {
        for i in 0..d {
            for a in 0..n {
                m[i * n + a][k] = rc[[k, i, a]].clone();
            }
        }
    }
    m
}

pub fn coalgebra_ok(c: &Coalgebra) -> bool {
    let n = c.dim();
    let d = comult(c);
    let e = counit(c);
    let i = eye(n);
    let lhs = mul(&kron(&d, &i, n, n), &d, n * n, n);
    let rhs = mul(&kron(&i, &d, n, n), &d, n * n, n);
    let l = mul(&kron(&e, &i, n, n), &d, n * n, n);
    let r = mul(&kron(&i, &e, n, n), &d, n * n, n);
    lhs == rhs && l == i && r == i
}

pub fn left_ok(c: &Coalgebra, lc: &DenseTensor) -> bool {
    let (n, du) = (c.dim(), lc.shape()[0]);
    let l = left_map(lc);
    let lhs = mul(&kron(&eye(n), &l, n, du), &l, n * du, du);
    let rhs = mul(&kron(&comult(c), &eye(du), n, du), &l, n * du, du);
    let unit = mul(&kron(&counit(c), &eye(du), n, du), &l, n * du, du);
    lhs == rhs && unit == eye(du)
}

pub fn right_ok(c: &Coalgebra, rc: &DenseTensor) -> bool {
    let (n, du) = (c.dim(), rc.shape()[0]);
    let r = right_map(rc);
    let lhs = mul(&kron(&r, &eye(n), du, n), &r, du * n, du);
    let rhs = mul(&kron(&eye(du), &comult(c), du, n), &r, du * n, du);
    let unit = mul(&kron(&eye(du), &counit(c), du, n), &r, du * n, du);
    lhs == rhs && unit == eye(du)
}

/// `(Δ_L ⊗ id) ∘ Δ_R = (id ⊗ Δ_R) ∘ Δ_L`.
pub fn compatible(n: usize, lc: &DenseTensor, rc: &DenseTensor) -> bool {
    let du = lc.shape()[0];
    let (l, r) = (left_map(lc), right_map(rc));
    let lhs = mul(&kron(&l, &eye(n), du, n), &r, du * n, du);
    let rhs = mul(&kron(&eye(n), &r, n, du), &l, n * du, du);
    lhs == rhs
}

pub fn bicomodule_ok(b: &Bicomodule) -> bool {
    let c = b.over();
    left_ok(c, b.left().coaction())
        && right_ok(c, b.right().coaction())
        && compatible(c.dim(), b.left().coaction(), b.right().coaction())
}

/// Raw commutation of two coaction tensors read as maps `V → V ⊗ C`:
/// `(id ⊗ τ) ∘ (A₂ ⊗ id) ∘ A₁ = (A₁ ⊗ id) ∘ A₂`.
pub fn commute(n: usize, t1: &DenseTensor, t2: &DenseTensor) -> bool {
    let d = t1.shape()[0];
    let (a1, a2) = (right_map(t1), right_map(t2));
    let lhs = mul(&kron(&a2, &eye(n), d, n), &a1, d * n, d);
    let lhs = mul(&kron(&eye(d), &swap(n, n), d, n * n), &lhs, d * n * n, d);
    let rhs = mul(&kron(&a1, &eye(n), d, n), &a2, d * n, d);
    lhs == rhs
}

// ---------------------------------------------------------------- solution spaces

/// Dimension of the kernel of a linear operator on `rows × cols` matrices,
/// given by its action on matrix units.
pub fn kernel_dim(rows: usize, cols: usize, op: impl Fn(&Mat) -> Mat) -> usize {
    let mut columns = Vec::new();
    for i in 0..rows {
        for a in 0..cols {
            let mut e = zeros(rows, cols);
            e[i][a] = Rational::one();
            columns.push(flatten(&op(&e)));
        }
    }
    if columns.is_empty() {
        return 0;
    }
    rows * cols - rank(&columns)
}

/// `Δ_L^U ∘ Φ − (id ⊗ Φ) ∘ Δ_L^W` for `Φ: W → U`.
pub fn left_defect(n: usize, lw: &DenseTensor, lu: &DenseTensor, phi: &Mat) -> Mat {
    let (dw, du) = (lw.shape()[0], lu.shape()[0]);
    let a = mul(&left_map(lu), phi, du, dw);
    let b = mul(&kron(&eye(n), phi, n, dw), &left_map(lw), n * dw, dw);
    sub(&a, &b)
}

pub fn right_defect(n: usize, rw: &DenseTensor, ru: &DenseTensor, phi: &Mat) -> Mat {
    let (dw, du) = (rw.shape()[0], ru.shape()[0]);
    let a = mul(&right_map(ru), phi, du, dw);
    let b = mul(&kron(phi, &eye(n), dw, n), &right_map(rw), dw * n, dw);
    sub(&a, &b)
}

pub fn com_dim(n: usize, lw: &DenseTensor, lu: &DenseTensor) -> usize {
    kernel_dim(lu.shape()[0], lw.shape()[0], |phi| left_defect(n, lw, lu, phi))
}

pub fn com_dim_right(n: usize, rw: &DenseTensor, ru: &DenseTensor) -> usize {
    kernel_dim(ru.shape()[0], rw.shape()[0], |phi| right_defect(n, rw, ru, phi))
}

/// `Δ ∘ ξ − (id ⊗ ξ + ξ ⊗ id) ∘ Δ` for an endomorphism matrix `ξ`.
pub fn coder_defect(c: &Coalgebra, xi: &Mat) -> Mat {
    let n = c.dim();
    let d = comult(c);
    let lhs = mul(&d, xi, n, n);
    let rhs = mul(&add(&kron(&eye(n), xi, n, n), &kron(xi, &eye(n), n, n)), &d, n * n, n);
    sub(&lhs, &rhs)
}

pub fn coder_dim(c: &Coalgebra) -> usize {
    kernel_dim(c.dim(), c.dim(), |xi| coder_defect(c, xi))
}

/// `Δ ∘ δ − (id ⊗ δ) ∘ Δ_L − (δ ⊗ id) ∘ Δ_R` for `δ: U → C` (`n × d_U`).
pub fn focc_defect(b: &Bicomodule, delta: &Mat) -> Mat {
    let c = b.over();
    let (n, du) = (c.dim(), b.dim());
    let lhs = mul(&comult(c), delta, n, du);
    let t1 = mul(&kron(&eye(n), delta, n, du), &left_map(b.left().coaction()), n * du, du);
    let t2 = mul(&kron(delta, &eye(n), du, n), &right_map(b.right().coaction()), du * n, du);
    sub(&lhs, &add(&t1, &t2))
}

pub fn focc_dim(b: &Bicomodule) -> usize {
    kernel_dim(b.over().dim(), b.dim(), |d| focc_defect(b, d))
}

/// `δ` as an `n × d_U` matrix from `d[k][α]`.
pub fn delta_matrix(d: &DenseTensor) -> Mat {
    let (du, n) = (d.shape()[0], d.shape()[1]);
    (0..n).map(|a| (0..du).map(|k| d[[k, a]].clone()).collect()).collect()
}

/// `Δ ∘ δX − (id ⊗ δX) ∘ Δ − (δ ⊗ id) ∘ Δ_R ∘ X`.
pub fn deformed_defect(b: &Bicomodule, delta: &Mat, x: &Mat) -> Mat {
    let c = b.over();
    let (n, du) = (c.dim(), b.dim());
    let dx = mul(delta, x, du, n);
    let lhs = mul(&comult(c), &dx, n, n);
    let t1 = mul(&kron(&eye(n), &dx, n, n), &comult(c), n * n, n);
    let rx = mul(&right_map(b.right().coaction()), x, du, n);
    let t2 = mul(&kron(delta, &eye(n), du, n), &rx, du * n, n);
    sub(&lhs, &add(&t1, &t2))
}

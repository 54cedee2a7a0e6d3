//! Built-in example coalgebras.
//!
//! Basis orderings are fixed: the matrix coalgebra of size `n` uses the
//! row-major basis `e_{00}, e_{01}, …, e_{n-1,n-1}`, and the primitive
//! coalgebra uses `g = 0`, `x = 1`.

use crate::coalgebra::{counit_vector, Coalgebra};
use crate::error::{Error, Result};
use crate::rational;
use crate::tensor::DenseTensor;

/// One-dimensional coalgebra spanned by a group-like element.
pub fn trivial() -> Coalgebra {
    grouplike(1).renamed("trivial")
}

/// `n` group-like elements: `Δ(g_α) = g_α ⊗ g_α`, `ε(g_α) = 1`.
pub fn grouplike(n: usize) -> Coalgebra {
    assert!(n > 0, "grouplike coalgebra needs n > 0");
    let omega = DenseTensor::from_fn(&[n, n, n], |i| {
        rational::delta(i[0], i[1]) * rational::delta(i[0], i[2])
    });
    Coalgebra::new(format!("grouplike{n}"), omega, counit_vector(n)).unwrap()
}

/// Matrix coalgebra: `Δ(e_{ij}) = Σ_k e_{ik} ⊗ e_{kj}`, `ε(e_{ij}) = δ_{ij}`.
pub fn matrix(n: usize) -> Coalgebra {
    assert!(n > 0, "matrix coalgebra needs n > 0");
    let d = n * n;
    let mut omega = DenseTensor::zeros(&[d, d, d]);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                omega[[i * n + j, i * n + k, k * n + j]] = rational::one();
            }
        }
    }
    let counit = DenseTensor::from_fn(&[d], |a| rational::delta(a[0] / n, a[0] % n));
    Coalgebra::new(format!("matrix{n}"), omega, counit).unwrap()
}

/// Span of a group-like `g` and a primitive `x`: `Δ(g) = g⊗g`,
/// `Δ(x) = x⊗g + g⊗x`, `ε = (1, 0)`.
pub fn primitive2() -> Coalgebra {
    let mut omega = DenseTensor::zeros(&[2, 2, 2]);
    omega[[0, 0, 0]] = rational::one();
    omega[[1, 1, 0]] = rational::one();
    omega[[1, 0, 1]] = rational::one();
    let counit = DenseTensor::from_ints(&[2], &[1, 0]).unwrap();
    Coalgebra::new("primitive2", omega, counit).unwrap()
}

/// Looks up a zoo member by family name and optional size parameter.
pub fn zoo(name: &str, parameter: Option<usize>) -> Result<Coalgebra> {
    let need = |p: Option<usize>| match p {
        Some(n) if n > 0 => Ok(n),
        _ => Err(Error::Unknown(format!("zoo family {name:?} needs a positive size"))),
    };
    match (name, parameter) {
        ("trivial", None) => Ok(trivial()),
        ("primitive2", None) => Ok(primitive2()),
        ("grouplike", p) => Ok(grouplike(need(p)?)),
        ("matrix", p) => Ok(matrix(need(p)?)),
        _ => Err(Error::Unknown(format!(
            "no zoo coalgebra {name:?}; known: {}",
            FAMILIES.join(", ")
        ))),
    }
}

const FAMILIES: [&str; 4] = ["trivial", "grouplike<n>", "matrix<n>", "primitive2"];

/// Resolves a compact name such as `matrix2`, `grouplike3`, `grouplike:3`
/// or `trivial`.
pub fn by_name(spec: &str) -> Result<Coalgebra> {
    if let Some((family, n)) = spec.split_once(':') {
        let n = n
            .parse()
            .map_err(|_| Error::Unknown(format!("bad zoo size in {spec:?}")))?;
        return zoo(family, Some(n));
    }
    match spec {
        "trivial" | "primitive2" => zoo(spec, None),
        _ => {
            let split = spec.find(|c: char| c.is_ascii_digit()).unwrap_or(spec.len());
            let (family, digits) = spec.split_at(split);
            let n = if digits.is_empty() {
                None
            } else {
                Some(
                    digits
                        .parse()
                        .map_err(|_| Error::Unknown(format!("bad zoo size in {spec:?}")))?,
                )
            };
            zoo(family, n)
        }
    }
}

/// The standard corpus: trivial, grouplike 2..=4, matrix 2..=3, primitive2.
pub fn standard() -> Vec<Coalgebra> {
    let mut all = vec![trivial()];
    all.extend((2..=4).map(grouplike));
    all.extend((2..=3).map(matrix));
    all.push(primitive2());
    all
}

impl Coalgebra {
    fn renamed(self, name: &str) -> Coalgebra {
        Coalgebra::new(name, self.omega().clone(), self.counit().clone()).unwrap()
    }
}

//! Exact computations with finite-dimensional coalgebras.
//!
//! Coalgebras, comodules and bicomodules are stored by their structure
//! constants over the rationals. On top of that the crate builds dual and
//! tensor-product bicomodules, the four coactions on hom-spaces, spaces of
//! comodule maps and the left/right coduals, first order codifferential
//! calculi, coderivations of `C`, and the map sending a vector cofield `X` to
//! the endomorphism `δ ∘ X`. Every structural identity is checked as an exact
//! equality of coefficient tensors.
//!
//! ```
//! use std::sync::Arc;
//! use coalc::{zoo, focc::coder_space};
//!
//! let p2 = zoo::primitive2();
//! assert!(p2.validate().is_valid());
//! assert_eq!(coder_space(&p2).unwrap().dim(), 1);
//! ```

pub mod codual;
pub mod coalgebra;
pub mod comodule;
pub mod error;
pub mod focc;
pub mod format;
pub mod hom;
pub mod linalg;
pub mod map;
pub mod rational;
pub mod report;
pub mod tensor;
pub mod zoo;

pub use coalgebra::{Coalgebra, DualAlgebra};
pub use codual::{CodualSpace, Side};
pub use comodule::{Bicomodule, LeftComodule, RightComodule};
pub use error::{Error, Result};
pub use focc::{Coderivation, Focc};
pub use hom::HomCoaction;
pub use linalg::SolutionSpace;
pub use map::LinearMapMatrix;
pub use rational::Rational;
pub use report::{ValidationReport, Violation};
pub use tensor::DenseTensor;

//! Commuting conjugacy class graphs of finite groups and their
//! common-neighbourhood (CN) spectra.
//!
//! The crate has two sides that never call each other:
//!
//! * brute force: [`group`] builds a group and its conjugacy classes,
//!   [`graph`] joins classes that have commuting members, and [`spectral`]
//!   diagonalizes the CN matrix numerically;
//! * closed forms: [`formulas`] predicts the graph's structure, spectrum,
//!   energy and energy gap from a theorem and its parameters, in exact
//!   integer arithmetic.
//!
//! [`verify`] runs both over parameter grids and witness groups and reports
//! where they agree.
//!
//! ```
//! use cccspec::formulas::predict_d2n;
//! use cccspec::group::{build_family_group, FamilyInstance};
//! use cccspec::verify::{observe_group, Tolerances};
//!
//! let d14 = build_family_group(&FamilyInstance::Dihedral2n { n: 7 }).unwrap();
//! let observed = observe_group(&d14, &Tolerances::default());
//! let predicted = predict_d2n(7).unwrap();
//! assert_eq!(observed.energy, 4.0);
//! assert_eq!(predicted.energy, 4.into());
//! assert_eq!(observed.shape.as_ref(), Some(&predicted.shape));
//! ```

pub mod arith;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod group;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use formulas::{predict, TheoremId, TheoremParams, TheoremPrediction};
pub use graph::{ccc_graph, CompleteUnionShape, SimpleGraph};
pub use group::{build_family_group, FamilyInstance, FamilyKind, FiniteGroup};
pub use spectral::{spectrum, Spectrum};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/spectra.md")]
    mod spectra {}
    #[doc = include_str!("../../../book/src/formulas.md")]
    mod formulas {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

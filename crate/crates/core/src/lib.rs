//! Clifford subsystem codes over finite fields.
//!
//! Build a gauge code with [`constructions`] or [`SubsystemCode::from_gauge_code`],
//! call [`SubsystemCode::analyze`] for the distance and purity, then check
//! [`bounds`], shorten with [`transforms`] or simulate syndromes with
//! [`quditsim`]. The guide in `book/` walks through each step.

pub mod bounds;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod io;
pub mod linalg;
pub mod quditsim;
pub mod subsystem;
pub mod symplectic;
pub mod transforms;

pub use enumerate::EnumConfig;
pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use linalg::CodeMatrix;
pub use subsystem::SubsystemCode;
pub use symplectic::{HyperbolicBasis, SymplecticVector};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/fields.md")]
    mod fields {}
    #[doc = include_str!("../../../book/src/parameters.md")]
    mod parameters {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/puncturing.md")]
    mod puncturing {}
    #[doc = include_str!("../../../book/src/simulation.md")]
    mod simulation {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

//! Lakshmibai–Seshadri path crystals for rank-2 hyperbolic Kac–Moody algebras.

pub mod analysis;
pub mod cartan;
pub mod cli;
pub mod dot;
pub mod error;
pub mod json;
pub mod lspath;
pub mod numeric;
pub mod oracle;
pub mod orbit;

pub use cartan::{CartanData, RationalWeight, RootIndex, Weight, WeylIndex};
pub use error::{Error, Result};
pub use lspath::{ConcatPath, LSPath};
pub use orbit::{classify, OrbitClassification, OrbitKind, PSequence, StarOrbit};

//! Cyclic locally recoverable codes whose duals are complementary (LRC-LCD
//! codes): finite-field and polynomial machinery, the code families, and
//! mechanical verification of dimension, LCD property, locality, distance
//! bounds and optimality.

pub mod analysis;
pub mod cli;
pub mod constructions;
pub mod cosets;
pub mod cyclic;
pub mod error;
pub mod fixtures;
pub mod galois;
pub mod linalg;
pub mod poly;
pub mod repair;

pub use analysis::{
    build_report, report_constructed, CodeReport, Distance, LrcProfile, Optimality,
};
pub use constructions::{Constructed, Family, LrcParams};
pub use cosets::DefiningSet;
pub use cyclic::CyclicCode;
pub use error::{Error, Result};
pub use galois::{FieldCtx, FieldElement, Symbol};
pub use poly::{Poly, PolyRing};

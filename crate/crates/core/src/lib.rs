//! Automorphism groups of smooth complete toroidal horospherical varieties.
//!
//! The crate is layered bottom-up:
//!
//! * [`lie`]: root systems, coroot pairings, the Weyl dimension formula and
//!   the automorphism group of G/P;
//! * [`fan`]: smooth complete fans and their Demazure roots;
//! * [`horospherical`]: the automorphism report of a toric bundle over G/P;
//! * [`bundle`]: decomposable projective bundles over G/P, with Fano and
//!   K-unstability certificates.
//!
//! Every computation is exact integer arithmetic. Enumeration loops run on
//! rayon when the `parallel` feature is on; see [`par::Execution`].

pub mod bundle;
pub mod fan;
pub mod horospherical;
pub mod lie;
mod linalg;
pub mod par;

pub use bundle::{BundleError, BundleReport, BundleSpec, FanoStatus, KUnstable};
pub use fan::{DemazureRoot, Fan, FanError, ToricAutReport, ValidatedFan};
pub use horospherical::{AutReport, BRoot, DatumError, HorosphericalDatum, RootKind};
pub use lie::{RootSystem, RootSystemError, RootSystemSpec, Weight};

/// Any error raised by the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error(transparent)]
    Fan(#[from] FanError),
    #[error(transparent)]
    Datum(#[from] DatumError),
    #[error(transparent)]
    Bundle(#[from] BundleError),
}

impl Error {
    /// The name of the violated invariant, e.g. `"NotSmooth"`.
    pub fn invariant(&self) -> &'static str {
        match self {
            Error::RootSystem(e) => horospherical::root_system_invariant(e),
            Error::Fan(e) => e.invariant(),
            Error::Datum(e) => e.invariant(),
            Error::Bundle(e) => e.invariant(),
        }
    }
}

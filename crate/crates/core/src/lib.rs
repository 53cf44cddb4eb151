//! Steiner triple systems, their block graphs, and nowhere-zero integer
//! eigenvectors of small `L∞` norm.
//!
//! The crate is organised around five areas:
//!
//! * [`designs`]: construction, validation, transformation and persistence of
//!   Steiner triple systems (Bose, Hamming, Assmus–Mattson doubling,
//!   resolutions, 2-rank, subsystems).
//! * [`spectra`]: block graphs, incidence matrices, Johnson-graph eigenvalues
//!   and exact eigenvector checks, lifts and restrictions.
//! * [`johnson_min`]: bounds and witnesses for the minimum norm of nowhere-zero
//!   integer first eigenvectors of Johnson graphs.
//! * [`flows`]: nowhere-zero flows of Steiner triple systems (certificates,
//!   explicit constructions and an exact minimum-flow search).
//! * [`crc`]: completely regular codes in block graphs.
//!
//! All arithmetic is exact: integers, or arbitrary precision rationals where
//! fractions can occur.

pub mod crc;
pub mod designs;
pub mod error;
pub mod exact_cover;
pub mod flows;
pub mod johnson_min;
pub mod json;
pub mod maxflow;
pub mod rational;
pub mod spectra;

pub use designs::{Resolution, SteinerTripleSystem, TauAssignment, Triple};
pub use error::{Error, Result};
pub use flows::FlowCertificate;

//! Extremal length on Teichmüller spaces, computed exactly where closed forms
//! exist and checked numerically everywhere else.
//!
//! The geometry is generic over the scalar type (`T: Real`); the aliases at
//! the crate root fix `T = f64`.

pub mod corpus;
pub mod error;
pub mod fd;
pub mod flat;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod torus;
pub mod verify;

pub use error::{Error, Result};
pub use report::{SlackTracker, VerificationReport};
pub use scalar::{ExactField, Real};
pub use torus::DistanceMethod;

pub type Complex = num_complex::Complex<f64>;
pub type TorusPoint = torus::TorusPoint<f64>;
pub type TorusFoliation = torus::TorusFoliation<f64>;
pub type TorusQuadDiff = torus::TorusQuadDiff<f64>;
pub type TorusTangent = torus::TorusTangent<f64>;
pub type GluingData = flat::GluingData<f64>;
pub type FlatSurface = flat::FlatSurface<f64>;
pub type DoubleCover = flat::DoubleCover<f64>;
pub type Periods = flat::Periods<f64>;
pub type TeichDisk = flat::TeichDisk<f64>;

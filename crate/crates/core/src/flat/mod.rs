//! Half-translation surfaces from polygon gluings, their orientation double
//! covers, odd homology and periods.

pub mod cover;
pub mod deform;
pub mod gluing;
pub mod homology;
pub mod periods;

pub use cover::{build_double_cover, CoverStatus, DoubleCover};
pub use deform::{
    hm_scale, teich_disk_deform, teich_disk_ext_closed_form, teich_disk_ext_jet, vertical_preserving_shear, TeichDisk,
};
pub use gluing::{
    build, check_generic, ConePoint, Corner, EdgeRef, FlatSurface, Genericity, GluingData, Pairing, VERTEX_TOLERANCE,
};
pub use homology::{homology_basis, intersection, odd_homology, odd_symplectic_basis, Chain, HomologyBasis, Parity};
pub use periods::{chain_period, ext_bilinear, periods, Periods};

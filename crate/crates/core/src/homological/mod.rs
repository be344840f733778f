//! Projective covers and resolutions, Ext and Tor, the Auslander–Reiten
//! translate, and the τ⁻-closure roster.

mod cover;
mod ext;
mod roster;
mod tau;
mod tor;

pub use cover::{
    is_projective, min_presentation, proj_dim, projective_cover, projective_resolution, radical,
    syzygy, top, ProjectiveCover, ProjectivePresentation, ProjectiveResolution,
};
pub use ext::{
    ext1, ext_k, realize_cocycle, realize_extension, universal_extension, ExtSpace,
    UniversalExtension,
};
pub use roster::{enumerate_roster, Provenance, Roster};
pub use tau::{tau, tau_inverse, transpose};
pub use tor::{tensor, tensor_map, tor1_right, Tensor};

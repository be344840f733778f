//! Exact computations with finite-dimensional bound quiver algebras over the
//! rationals: representations, homological algebra, tilting theory, and the
//! recollement attached to a triangular vertex split.

pub mod algebra;
pub mod error;
pub mod examples;
pub mod gluing;
pub mod homological;
pub mod io;
pub mod linalg;
pub mod recollement;
pub mod rep;
pub mod tilting;

pub use algebra::{BoundQuiverAlgebra, Path, Quiver, Relation, DEFAULT_LENGTH_CAP};
pub use error::{Error, Result};
pub use gluing::{
    check_restriction_hypotheses, glue_tilting, glued_membership, glued_pair_is_tilting,
    restrict_left, restrict_right, restricted_pair, GlueCertificate, GluedPairSpec,
    RestrictionCertificate, Side,
};
pub use homological::{enumerate_roster, ext1, proj_dim, tau, tau_inverse, Roster};
pub use linalg::{Mat, Rational};
pub use recollement::{ExactnessReport, IdentityReport, RecollementContext};
pub use rep::{decompose, hom_dim, is_isomorphic, Morphism, Representation, Ses};
pub use tilting::{
    is_tilting, is_torsion_pair, partition_roster, Membership, RosterPartition, TiltingCertificate,
};

//! The running example algebra, its two corners, a non-exact variant, and
//! a helper for thin modules.

use std::sync::Arc;

use crate::algebra::{BoundQuiverAlgebra, Quiver, Relation, DEFAULT_LENGTH_CAP};
use crate::error::{Error, Result};
use crate::linalg::{q, Mat};
use crate::rep::Representation;

/// Vertices 1..5, arrows `δ:1→2, ε:3→1, γ:4→2, α:3→4, β:4→5`, relations
/// `γα = δε` and `βα = 0`. Dimension 11.
pub fn lambda() -> Arc<BoundQuiverAlgebra> {
    let quiver = Quiver::new(
        &["1", "2", "3", "4", "5"],
        &[
            ("delta", "1", "2"),
            ("epsilon", "3", "1"),
            ("gamma", "4", "2"),
            ("alpha", "3", "4"),
            ("beta", "4", "5"),
        ],
    )
    .expect("valid quiver");
    let rels = vec![
        Relation::from_names(
            &quiver,
            &[
                (q(1), vec!["alpha", "gamma"]),
                (q(-1), vec!["epsilon", "delta"]),
            ],
        )
        .expect("valid relation"),
        Relation::from_names(&quiver, &[(q(1), vec!["alpha", "beta"])]).expect("valid relation"),
    ];
    BoundQuiverAlgebra::build(quiver, rels, DEFAULT_LENGTH_CAP).expect("finite dimensional")
}

/// `1 → 2`, dimension 3.
pub fn lambda_prime() -> Arc<BoundQuiverAlgebra> {
    let quiver = Quiver::new(&["1", "2"], &[("delta", "1", "2")]).expect("valid quiver");
    BoundQuiverAlgebra::build(quiver, vec![], DEFAULT_LENGTH_CAP).expect("finite dimensional")
}

/// `3 → 4 → 5` with `βα = 0`, dimension 5.
pub fn lambda_dprime() -> Arc<BoundQuiverAlgebra> {
    let quiver = Quiver::new(&["3", "4", "5"], &[("alpha", "3", "4"), ("beta", "4", "5")])
        .expect("valid quiver");
    let rel =
        Relation::from_names(&quiver, &[(q(1), vec!["alpha", "beta"])]).expect("valid relation");
    BoundQuiverAlgebra::build(quiver, vec![rel], DEFAULT_LENGTH_CAP).expect("finite dimensional")
}

/// `α: 3 → 4`, `γ: 4 → 1` with `γα = 0`. Split off `{3, 4}`, the functor
/// `j_!` is not exact.
pub fn mutated() -> Arc<BoundQuiverAlgebra> {
    let quiver = Quiver::new(
        &["1", "3", "4"],
        &[("alpha", "3", "4"), ("gamma", "4", "1")],
    )
    .expect("valid quiver");
    let rel =
        Relation::from_names(&quiver, &[(q(1), vec!["alpha", "gamma"])]).expect("valid relation");
    BoundQuiverAlgebra::build(quiver, vec![rel], DEFAULT_LENGTH_CAP).expect("finite dimensional")
}

/// A module with every vertex space of dimension 0 or 1 and the listed
/// arrows acting by 1 (all others by 0).
pub fn thin_module(
    algebra: &Arc<BoundQuiverAlgebra>,
    dims: &[usize],
    arrows: &[&str],
) -> Result<Representation> {
    if dims.iter().any(|&d| d > 1) {
        return Err(Error::InvalidInput(
            "thin modules have dimensions 0 or 1".into(),
        ));
    }
    let quiver = algebra.quiver();
    for name in arrows {
        if quiver.arrow_index(name).is_none() {
            return Err(Error::InvalidInput(format!("unknown arrow {name}")));
        }
    }
    let maps = quiver
        .arrows()
        .iter()
        .map(|a| {
            let mut m = Mat::zeros(dims[a.target], dims[a.source]);
            if arrows.contains(&a.name.as_str()) {
                if m.shape() != (1, 1) {
                    return Err(Error::InvalidInput(format!(
                        "arrow {} acts between zero spaces",
                        a.name
                    )));
                }
                m.set(0, 0, q(1));
            }
            Ok(m)
        })
        .collect::<Result<Vec<_>>>()?;
    Representation::new(algebra, dims.to_vec(), maps)
}

/// The fifteen indecomposable modules over [`lambda`], named by their
/// `(Λ′-part, Λ″-part)` and given as thin modules (dimensions over vertices
/// 1..5, arrows acting by 1).
pub const LAMBDA_INDECOMPOSABLES: [(&str, [usize; 5], &[&str]); 15] = [
    ("(0,P5)", [0, 0, 0, 0, 1], &[]),
    ("(S2,P4)", [0, 1, 0, 1, 1], &["gamma", "beta"]),
    ("(S2,0)", [0, 1, 0, 0, 0], &[]),
    ("(S2,S4)", [0, 1, 0, 1, 0], &["gamma"]),
    ("(P1,P4)", [1, 1, 0, 1, 1], &["delta", "gamma", "beta"]),
    ("(P1,0)", [1, 1, 0, 0, 0], &["delta"]),
    ("(P1,S4)", [1, 1, 0, 1, 0], &["delta", "gamma"]),
    (
        "(P1,P3)",
        [1, 1, 1, 1, 0],
        &["delta", "gamma", "epsilon", "alpha"],
    ),
    ("(0,S4)", [0, 0, 0, 1, 0], &[]),
    ("(0,P4)", [0, 0, 0, 1, 1], &["beta"]),
    ("(S1,0)", [1, 0, 0, 0, 0], &[]),
    ("(S1,P3)", [1, 0, 1, 1, 0], &["epsilon", "alpha"]),
    ("(S1,S3)", [1, 0, 1, 0, 0], &["epsilon"]),
    ("(0,P3)", [0, 0, 1, 1, 0], &["alpha"]),
    ("(0,S3)", [0, 0, 1, 0, 0], &[]),
];

/// One of [`LAMBDA_INDECOMPOSABLES`] by name.
pub fn lambda_module(algebra: &Arc<BoundQuiverAlgebra>, name: &str) -> Option<Representation> {
    LAMBDA_INDECOMPOSABLES
        .iter()
        .find(|(n, _, _)| *n == name)
        .map(|(_, dims, arrows)| thin_module(algebra, dims, arrows).expect("valid thin module"))
}

/// Direct sum of named modules from [`LAMBDA_INDECOMPOSABLES`].
pub fn lambda_sum(algebra: &Arc<BoundQuiverAlgebra>, names: &[&str]) -> Option<Representation> {
    let parts = names
        .iter()
        .map(|n| lambda_module(algebra, n))
        .collect::<Option<Vec<_>>>()?;
    Some(crate::rep::direct_sum(algebra, &parts).ok()?.module)
}

/// Glued tilting module for `T′ = P(1)⊕S(1)`, `T″ = P(5)⊕P(4)⊕P(3)`.
pub const CASE1_T: [&str; 5] = ["(0,P5)", "(S2,P4)", "(P1,P3)", "(P1,P4)", "(P1,0)"];
/// Glued tilting module for `T′ = P(1)⊕S(1)`, `T″ = P(3)⊕P(4)⊕S(4)`.
pub const CASE2_T: [&str; 5] = ["(P1,P3)", "(S2,P4)", "(S2,S4)", "(P1,P4)", "(P1,0)"];
/// A tilting module whose restricted pair is not a torsion pair.
pub const CASE3_T: [&str; 5] = ["(S2,S4)", "(P1,P4)", "(0,P4)", "(P1,S4)", "(P1,P3)"];
/// A tilting module satisfying the restriction hypotheses.
pub const CASE4_T: [&str; 5] = ["(S2,S4)", "(S2,P4)", "(P1,P4)", "(0,P4)", "(P1,P3)"];

/// `Λ′ × Λ″` as a disjoint union of quivers: the split with outer part
/// `{3, 4, 5}` has zero bimodule.
pub fn product() -> Arc<BoundQuiverAlgebra> {
    let quiver = Quiver::new(
        &["1", "2", "3", "4", "5"],
        &[("delta", "1", "2"), ("alpha", "3", "4"), ("beta", "4", "5")],
    )
    .expect("valid quiver");
    let rel =
        Relation::from_names(&quiver, &[(q(1), vec!["alpha", "beta"])]).expect("valid relation");
    BoundQuiverAlgebra::build(quiver, vec![rel], DEFAULT_LENGTH_CAP).expect("finite dimensional")
}

//! Modules over a bound quiver algebra as representations: one vector space
//! per vertex and one matrix per arrow, satisfying the relations.

mod construct;
mod decompose;
mod hom;
pub(crate) mod standard;

pub use construct::{
    cokernel, direct_sum, generated_subrepresentation, image, kernel, pushout,
    quotient_representation, sub_representation, DirectSum, Pushout, QuotientRep,
};
pub use decompose::{
    add_equal, basic, decompose, find_summand, in_add, is_indecomposable, is_isomorphic,
    iso_classes, Decomposition, ISO_SAMPLES,
};
pub use hom::{hom_basis, hom_dim, HomSpace};
pub use standard::{dual, injective, projective, right_projective, simple};

use std::fmt;
use std::sync::Arc;

use crate::algebra::{BoundQuiverAlgebra, Path};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, Mat, Rational};

struct RepInner {
    algebra: Arc<BoundQuiverAlgebra>,
    dims: Vec<usize>,
    maps: Vec<Mat>,
}

/// A finite-dimensional representation. Cheap to clone.
#[derive(Clone)]
pub struct Representation(Arc<RepInner>);

impl Representation {
    /// Validates matrix shapes and that every relation evaluates to zero.
    pub fn new(
        algebra: &Arc<BoundQuiverAlgebra>,
        dims: Vec<usize>,
        maps: Vec<Mat>,
    ) -> Result<Self> {
        let q = algebra.quiver();
        if dims.len() != q.num_vertices() {
            return Err(Error::InvalidRepresentation(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                q.num_vertices()
            )));
        }
        if maps.len() != q.arrows().len() {
            return Err(Error::InvalidRepresentation(format!(
                "{} maps for {} arrows",
                maps.len(),
                q.arrows().len()
            )));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(Error::InvalidRepresentation(format!(
                    "map for arrow {} has shape {:?}, expected {:?}",
                    a.name,
                    m.shape(),
                    (dims[a.target], dims[a.source])
                )));
            }
        }
        let rep = Representation(Arc::new(RepInner {
            algebra: algebra.clone(),
            dims,
            maps,
        }));
        for rel in algebra.relations() {
            let mut sum = Mat::zeros(rep.dim(rel.target()), rep.dim(rel.source()));
            for (c, p) in &rel.terms {
                sum = &sum + &rep.eval_path(p).scale(c);
            }
            if !sum.is_zero() {
                return Err(Error::InvalidRepresentation(format!(
                    "relation starting with {} does not vanish",
                    algebra.describe_path(&rel.terms[0].1)
                )));
            }
        }
        Ok(rep)
    }

    pub fn zero(algebra: &Arc<BoundQuiverAlgebra>) -> Self {
        let q = algebra.quiver();
        let maps = q.arrows().iter().map(|_| Mat::zeros(0, 0)).collect();
        Representation(Arc::new(RepInner {
            algebra: algebra.clone(),
            dims: vec![0; q.num_vertices()],
            maps,
        }))
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.0.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.0.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.0.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.0.dims.iter().sum()
    }

    pub fn maps(&self) -> &[Mat] {
        &self.0.maps
    }

    pub fn map(&self, arrow: usize) -> &Mat {
        &self.0.maps[arrow]
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Action of a path: `dims[target] × dims[source]`.
    pub fn eval_path(&self, p: &Path) -> Mat {
        let mut acc = Mat::identity(self.dim(p.source));
        for &a in &p.arrows {
            acc = self.map(a) * &acc;
        }
        acc
    }

    /// Action of the basis element `i` of the algebra.
    pub fn eval_basis(&self, i: usize) -> Mat {
        self.eval_path(&self.algebra().basis()[i])
    }

    pub fn same_algebra(&self, other: &Representation) -> bool {
        self.algebra().same_as(other.algebra())
    }

    pub(crate) fn check_same_algebra(&self, other: &Representation) -> Result<()> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch(
                "modules live over different algebras".into(),
            ))
        }
    }

    /// Sort key used for canonical orderings: total dimension, dimension
    /// vector, then the matrix entries as text.
    pub fn canonical_key(&self) -> (usize, Vec<usize>, Vec<Vec<String>>) {
        (
            self.total_dim(),
            self.dims().to_vec(),
            self.maps()
                .iter()
                .map(|m| m.entries().iter().map(format_rational).collect())
                .collect(),
        )
    }

    /// Dimension vector keyed by vertex label, e.g. `1:1 2:0 3:1`.
    pub fn dims_label(&self) -> String {
        let q = self.algebra().quiver();
        q.vertices()
            .iter()
            .zip(self.dims())
            .map(|(v, d)| format!("{v}:{d}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other) && self.dims() == other.dims() && self.maps() == other.maps()
    }
}

impl Eq for Representation {}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rep[{}]", self.dims_label())
    }
}

/// A module homomorphism: one matrix per vertex, commuting with the arrows.
#[derive(Clone, PartialEq, Eq)]
pub struct Morphism {
    source: Representation,
    target: Representation,
    components: Vec<Mat>,
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Morphism")
            .field("source", &self.source)
            .field("target", &self.target)
            .field("components", &self.components)
            .finish()
    }
}

impl Morphism {
    pub fn new(
        source: &Representation,
        target: &Representation,
        components: Vec<Mat>,
    ) -> Result<Self> {
        source.check_same_algebra(target)?;
        let f = Morphism::new_unchecked(source, target, components);
        f.validate()?;
        Ok(f)
    }

    pub(crate) fn new_unchecked(
        source: &Representation,
        target: &Representation,
        components: Vec<Mat>,
    ) -> Self {
        Morphism {
            source: source.clone(),
            target: target.clone(),
            components,
        }
    }

    fn validate(&self) -> Result<()> {
        let n = self.source.dims().len();
        if self.components.len() != n {
            return Err(Error::InvalidMorphism(format!(
                "{} components for {n} vertices",
                self.components.len()
            )));
        }
        for v in 0..n {
            if self.components[v].shape() != (self.target.dim(v), self.source.dim(v)) {
                return Err(Error::InvalidMorphism(format!(
                    "component {v} has the wrong shape"
                )));
            }
        }
        for (ai, a) in self.source.algebra().quiver().arrows().iter().enumerate() {
            let lhs = self.target.map(ai) * &self.components[a.source];
            let rhs = &self.components[a.target] * self.source.map(ai);
            if lhs != rhs {
                return Err(Error::InvalidMorphism(format!(
                    "does not commute with arrow {}",
                    a.name
                )));
            }
        }
        Ok(())
    }

    pub fn identity(m: &Representation) -> Self {
        let comps = m.dims().iter().map(|&d| Mat::identity(d)).collect();
        Morphism::new_unchecked(m, m, comps)
    }

    pub fn zero(source: &Representation, target: &Representation) -> Self {
        let comps = source
            .dims()
            .iter()
            .zip(target.dims())
            .map(|(&s, &t)| Mat::zeros(t, s))
            .collect();
        Morphism::new_unchecked(source, target, comps)
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn components(&self) -> &[Mat] {
        &self.components
    }

    pub fn component(&self, v: usize) -> &Mat {
        &self.components[v]
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &Morphism) -> Morphism {
        assert_eq!(
            first.target.dims(),
            self.source.dims(),
            "composition mismatch"
        );
        let comps = self
            .components
            .iter()
            .zip(&first.components)
            .map(|(g, f)| g * f)
            .collect();
        Morphism::new_unchecked(&first.source, &self.target, comps)
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        let comps = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a + b)
            .collect();
        Morphism::new_unchecked(&self.source, &self.target, comps)
    }

    pub fn scale(&self, k: &Rational) -> Morphism {
        let comps = self.components.iter().map(|m| m.scale(k)).collect();
        Morphism::new_unchecked(&self.source, &self.target, comps)
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Mat::is_zero)
    }

    pub fn is_injective(&self) -> bool {
        self.components.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.components.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.components.iter().all(Mat::is_invertible)
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(Mat::rank).sum()
    }

    /// Entries of all components, vertex by vertex, row-major.
    pub fn flatten(&self) -> Vec<Rational> {
        self.components
            .iter()
            .flat_map(|m| m.entries().iter().cloned())
            .collect()
    }
}

/// A short exact sequence `0 → left → middle → right → 0`.
#[derive(Clone, Debug)]
pub struct Ses {
    pub inject: Morphism,
    pub project: Morphism,
}

impl Ses {
    /// Checks exactness vertex by vertex: `inject` injective, `project`
    /// surjective, `project ∘ inject = 0` and ranks adding up.
    pub fn new(inject: Morphism, project: Morphism) -> Result<Self> {
        if inject.target() != project.source() {
            return Err(Error::NotExact("maps are not composable".into()));
        }
        for v in 0..inject.components.len() {
            let i = inject.component(v);
            let p = project.component(v);
            let mid = inject.target().dim(v);
            if i.rank() != i.cols() {
                return Err(Error::NotExact(format!(
                    "left map not injective at vertex {v}"
                )));
            }
            if p.rank() != p.rows() {
                return Err(Error::NotExact(format!(
                    "right map not surjective at vertex {v}"
                )));
            }
            if !(p * i).is_zero() || i.cols() + p.rows() != mid {
                return Err(Error::NotExact(format!(
                    "not exact in the middle at vertex {v}"
                )));
            }
        }
        Ok(Ses { inject, project })
    }

    pub fn left(&self) -> &Representation {
        self.inject.source()
    }

    pub fn middle(&self) -> &Representation {
        self.inject.target()
    }

    pub fn right(&self) -> &Representation {
        self.project.target()
    }

    /// True when `project` has a section.
    pub fn is_split(&self) -> bool {
        let hom = HomSpace::new(self.right(), self.middle());
        let targets: Vec<Vec<Rational>> = hom
            .basis()
            .iter()
            .map(|h| self.project.after(h).flatten())
            .collect();
        let id = Morphism::identity(self.right()).flatten();
        if id.is_empty() {
            return true;
        }
        let a = Mat::from_columns(id.len(), &targets);
        a.solve(&Mat::column_vector(id)).is_some()
    }
}

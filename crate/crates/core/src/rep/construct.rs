//! Kernels, images, cokernels, sums and pushouts, all with their structure
//! maps.

use std::sync::Arc;

use num_traits::One;

use super::{Morphism, Representation};
use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Mat, Rational};

/// `M_1 ⊕ … ⊕ M_k` with canonical injections and projections.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: Representation,
    pub injections: Vec<Morphism>,
    pub projections: Vec<Morphism>,
}

pub fn direct_sum(
    algebra: &Arc<BoundQuiverAlgebra>,
    parts: &[Representation],
) -> Result<DirectSum> {
    for p in parts {
        if !p.algebra().same_as(algebra) {
            return Err(Error::AlgebraMismatch(
                "summand over a different algebra".into(),
            ));
        }
    }
    let nv = algebra.num_vertices();
    let dims: Vec<usize> = (0..nv)
        .map(|v| parts.iter().map(|p| p.dim(v)).sum())
        .collect();
    let maps = algebra
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, _)| {
            let blocks: Vec<&Mat> = parts.iter().map(|p| p.map(ai)).collect();
            Mat::block_diag(&blocks)
        })
        .collect();
    let module = Representation::new(algebra, dims.clone(), maps)?;
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    let mut offsets = vec![0; nv];
    for p in parts {
        let mut inj = Vec::new();
        let mut proj = Vec::new();
        for v in 0..nv {
            let mut i = Mat::zeros(dims[v], p.dim(v));
            i.set_block(offsets[v], 0, &Mat::identity(p.dim(v)));
            proj.push(i.transpose());
            inj.push(i);
            offsets[v] += p.dim(v);
        }
        injections.push(Morphism::new_unchecked(p, &module, inj));
        projections.push(Morphism::new_unchecked(&module, p, proj));
    }
    Ok(DirectSum {
        module,
        injections,
        projections,
    })
}

/// The submodule whose vertex spaces are spanned by the columns of `bases`,
/// together with its inclusion. Dependent columns are dropped.
pub fn sub_representation(m: &Representation, bases: &[Mat]) -> Result<(Representation, Morphism)> {
    let bases: Vec<Mat> = bases.iter().map(Mat::column_space_basis).collect();
    let mut maps = Vec::new();
    for (ai, a) in m.algebra().quiver().arrows().iter().enumerate() {
        let image = m.map(ai) * &bases[a.source];
        let x = bases[a.target].solve(&image).ok_or_else(|| {
            Error::InvalidRepresentation(format!("subspace not closed under arrow {}", a.name))
        })?;
        maps.push(x);
    }
    let dims = bases.iter().map(Mat::cols).collect();
    let sub = Representation::new(m.algebra(), dims, maps)?;
    let inc = Morphism::new_unchecked(&sub, m, bases);
    Ok((sub, inc))
}

/// The submodule generated by the given vectors (columns of `gens[v]`).
pub fn generated_subrepresentation(
    m: &Representation,
    gens: &[Mat],
) -> Result<(Representation, Morphism)> {
    let mut span: Vec<Mat> = gens.iter().map(Mat::column_space_basis).collect();
    let arrows = m.algebra().quiver().arrows();
    loop {
        let mut changed = false;
        for (ai, a) in arrows.iter().enumerate() {
            let img = m.map(ai) * &span[a.source];
            if !span[a.target].spans(&img) {
                let t = a.target;
                span[t] = Mat::hstack(m.dim(t), &[&span[t], &img]).column_space_basis();
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    sub_representation(m, &span)
}

/// `M / S` with the projection and, per vertex, a linear section of it.
#[derive(Clone, Debug)]
pub struct QuotientRep {
    pub module: Representation,
    pub projection: Morphism,
    pub sections: Vec<Mat>,
}

impl QuotientRep {
    /// The map out of the quotient induced by `f: M → X` vanishing on `S`.
    pub fn descend(&self, f: &Morphism) -> Result<Morphism> {
        let comps = f
            .components()
            .iter()
            .zip(&self.sections)
            .map(|(c, s)| c * s)
            .collect();
        let g = Morphism::new(&self.module, f.target(), comps)?;
        if g.after(&self.projection) != *f {
            return Err(Error::InvalidMorphism(
                "map does not vanish on the submodule".into(),
            ));
        }
        Ok(g)
    }
}

/// Quotient of `m` by the submodule spanned by `subspaces`.
pub fn quotient_representation(m: &Representation, subspaces: &[Mat]) -> Result<QuotientRep> {
    let quots: Vec<_> = subspaces
        .iter()
        .enumerate()
        .map(|(v, s)| Mat::quotient(m.dim(v), s))
        .collect();
    let mut maps = Vec::new();
    for (ai, a) in m.algebra().quiver().arrows().iter().enumerate() {
        let leak = &(&quots[a.target].projection * m.map(ai)) * &subspaces[a.source];
        if !leak.is_zero() {
            return Err(Error::InvalidRepresentation(format!(
                "quotient by a subspace not closed under arrow {}",
                a.name
            )));
        }
        maps.push(&(&quots[a.target].projection * m.map(ai)) * &quots[a.source].section);
    }
    let module = Representation::new(m.algebra(), quots.iter().map(|q| q.dim).collect(), maps)?;
    let projection = Morphism::new_unchecked(
        m,
        &module,
        quots.iter().map(|q| q.projection.clone()).collect(),
    );
    Ok(QuotientRep {
        module,
        projection,
        sections: quots.into_iter().map(|q| q.section).collect(),
    })
}

pub fn kernel(f: &Morphism) -> Result<(Representation, Morphism)> {
    let bases: Vec<Mat> = f.components().iter().map(Mat::kernel_basis).collect();
    sub_representation(f.source(), &bases)
}

pub fn image(f: &Morphism) -> Result<(Representation, Morphism)> {
    let bases: Vec<Mat> = f.components().iter().map(Mat::column_space_basis).collect();
    sub_representation(f.target(), &bases)
}

pub fn cokernel(f: &Morphism) -> Result<QuotientRep> {
    let bases: Vec<Mat> = f.components().iter().map(Mat::column_space_basis).collect();
    quotient_representation(f.target(), &bases)
}

/// Pushout of `f: A → B` and `g: A → C`: `(B ⊕ C) / {(f a, −g a)}` with its
/// two legs `B → P` and `C → P`.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub module: Representation,
    pub from_left: Morphism,
    pub from_right: Morphism,
}

pub fn pushout(f: &Morphism, g: &Morphism) -> Result<Pushout> {
    if f.source() != g.source() {
        return Err(Error::InvalidMorphism(
            "pushout legs have different sources".into(),
        ));
    }
    let alg = f.source().algebra().clone();
    let sum = direct_sum(&alg, &[f.target().clone(), g.target().clone()])?;
    let minus = -Rational::one();
    let rel: Vec<Mat> = f
        .components()
        .iter()
        .zip(g.components())
        .map(|(a, b)| Mat::vstack(a.cols(), &[a, &b.scale(&minus)]))
        .collect();
    let q = quotient_representation(&sum.module, &rel)?;
    Ok(Pushout {
        from_left: q.projection.after(&sum.injections[0]),
        from_right: q.projection.after(&sum.injections[1]),
        module: q.module,
    })
}

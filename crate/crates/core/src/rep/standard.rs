//! Simples, indecomposable projectives and injectives, and the duality
//! `D = Hom_k(−, k)`.

use std::sync::Arc;

use super::Representation;
use crate::algebra::{BoundQuiverAlgebra, Path};
use crate::linalg::Mat;

pub fn simple(algebra: &Arc<BoundQuiverAlgebra>, v: usize) -> Representation {
    let nv = algebra.num_vertices();
    let dims: Vec<usize> = (0..nv).map(|w| usize::from(w == v)).collect();
    let maps = algebra
        .quiver()
        .arrows()
        .iter()
        .map(|a| Mat::zeros(dims[a.target], dims[a.source]))
        .collect();
    Representation::new(algebra, dims, maps).expect("simple modules satisfy every relation")
}

/// Basis indices of `P(v) = A e_v` grouped by end vertex.
pub(crate) fn projective_layout(algebra: &BoundQuiverAlgebra, v: usize) -> Vec<Vec<usize>> {
    let mut layout = vec![Vec::new(); algebra.num_vertices()];
    for i in algebra.basis_from(v) {
        layout[algebra.basis()[i].target].push(i);
    }
    layout
}

/// Position of the generator `e_v` inside `P(v)_v`.
pub(crate) fn projective_generator(algebra: &BoundQuiverAlgebra, v: usize) -> usize {
    projective_layout(algebra, v)[v]
        .iter()
        .position(|&i| algebra.basis()[i].is_trivial())
        .expect("e_v is a basis element")
}

fn arrow_path(algebra: &BoundQuiverAlgebra, ai: usize) -> Path {
    let a = &algebra.quiver().arrows()[ai];
    Path {
        source: a.source,
        target: a.target,
        arrows: vec![ai],
    }
}

/// `P(v) = A e_v`: paths starting at `v`, arrows acting by left
/// multiplication.
pub fn projective(algebra: &Arc<BoundQuiverAlgebra>, v: usize) -> Representation {
    let layout = projective_layout(algebra, v);
    let dims: Vec<usize> = layout.iter().map(Vec::len).collect();
    let maps = (0..algebra.quiver().arrows().len())
        .map(|ai| {
            let ap = arrow_path(algebra, ai);
            let (s, t) = (ap.source, ap.target);
            let mut m = Mat::zeros(dims[t], dims[s]);
            for (col, &b) in layout[s].iter().enumerate() {
                let p = algebra.basis()[b].then(&ap).expect("composable");
                for (k, c) in algebra.reduce(&p) {
                    let row = layout[t].iter().position(|&x| x == k).expect("same source");
                    m.set(row, col, c);
                }
            }
            m
        })
        .collect();
    Representation::new(algebra, dims, maps).expect("projective modules satisfy every relation")
}

/// `e_v A` as a representation of the opposite algebra: at vertex `w` the
/// paths `w → v`, the reversed arrow `a` acting by `y ↦ y·a`.
pub fn right_projective(algebra: &Arc<BoundQuiverAlgebra>, v: usize) -> Representation {
    let op = algebra.opposite();
    let nv = algebra.num_vertices();
    let layout: Vec<Vec<usize>> = (0..nv).map(|w| algebra.basis_between(w, v)).collect();
    let dims: Vec<usize> = layout.iter().map(Vec::len).collect();
    let maps = (0..algebra.quiver().arrows().len())
        .map(|ai| {
            // In the opposite algebra this arrow runs target → source.
            let ap = arrow_path(algebra, ai);
            let (from, to) = (ap.target, ap.source);
            let mut m = Mat::zeros(dims[to], dims[from]);
            for (col, &y) in layout[from].iter().enumerate() {
                let p = ap.then(&algebra.basis()[y]).expect("composable");
                for (k, c) in algebra.reduce(&p) {
                    let row = layout[to]
                        .iter()
                        .position(|&x| x == k)
                        .expect("same target");
                    m.set(row, col, c);
                }
            }
            m
        })
        .collect();
    Representation::new(&op, dims, maps).expect("right projectives satisfy every relation")
}

/// `I(v) = D(e_v A)`.
pub fn injective(algebra: &Arc<BoundQuiverAlgebra>, v: usize) -> Representation {
    dual(&right_projective(algebra, v))
}

/// `D M`, a representation of the opposite algebra: transposed matrices.
pub fn dual(m: &Representation) -> Representation {
    let op = m.algebra().opposite();
    let maps = m.maps().iter().map(Mat::transpose).collect();
    Representation::new(&op, m.dims().to_vec(), maps).expect("duals satisfy the reversed relations")
}

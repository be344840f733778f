use num_traits::Zero;

use super::{Morphism, Representation};
use crate::linalg::{Mat, Rational};

/// `Hom(M, N)` with a fixed basis and coordinates.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: Representation,
    target: Representation,
    basis: Vec<Morphism>,
    /// Flattened basis morphisms as columns.
    matrix: Mat,
}

impl HomSpace {
    pub fn new(source: &Representation, target: &Representation) -> Self {
        let basis = hom_basis(source, target);
        let len = flat_len(source, target);
        let cols: Vec<Vec<Rational>> = basis.iter().map(Morphism::flatten).collect();
        HomSpace {
            source: source.clone(),
            target: target.clone(),
            matrix: Mat::from_columns(len, &cols),
            basis,
        }
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Morphism] {
        &self.basis
    }

    /// Flattened basis as columns.
    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    /// Coordinates of `f` in the basis, `None` when `f` is not a homomorphism
    /// between these modules.
    pub fn coords(&self, f: &Morphism) -> Option<Vec<Rational>> {
        let v = f.flatten();
        if v.len() != self.matrix.rows() {
            return None;
        }
        self.matrix
            .solve(&Mat::column_vector(v))
            .map(|x| x.column(0))
    }

    pub fn combine(&self, coeffs: &[Rational]) -> Morphism {
        assert_eq!(coeffs.len(), self.basis.len());
        let mut acc = Morphism::zero(&self.source, &self.target);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                acc = acc.add(&b.scale(c));
            }
        }
        acc
    }
}

fn flat_len(m: &Representation, n: &Representation) -> usize {
    m.dims().iter().zip(n.dims()).map(|(a, b)| a * b).sum()
}

/// A basis of `Hom(M, N)`: the null space of the intertwining system
/// `N(a)·X_s − X_t·M(a) = 0`, unknowns ordered vertex by vertex, row-major.
pub fn hom_basis(m: &Representation, n: &Representation) -> Vec<Morphism> {
    assert!(
        m.same_algebra(n),
        "hom between modules over different algebras"
    );
    let nv = m.dims().len();
    let mut offset = vec![0; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
    }
    let unknowns = offset[nv];
    if unknowns == 0 {
        return Vec::new();
    }
    let arrows = m.algebra().quiver().arrows();
    let eqs: usize = arrows
        .iter()
        .map(|a| n.dim(a.target) * m.dim(a.source))
        .sum();
    let mut sys = Mat::zeros(eqs, unknowns);
    let mut row = 0;
    for (ai, a) in arrows.iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (na, ma) = (n.map(ai), m.map(ai));
        // X_v is n.dim(v) × m.dim(v); entry (r, c) at offset[v] + r*m.dim(v) + c.
        for r in 0..n.dim(t) {
            for c in 0..m.dim(s) {
                for k in 0..n.dim(s) {
                    let x = na.get(r, k);
                    if !x.is_zero() {
                        let col = offset[s] + k * m.dim(s) + c;
                        let cur = sys.get(row, col) + x;
                        sys.set(row, col, cur);
                    }
                }
                for k in 0..m.dim(t) {
                    let x = ma.get(k, c);
                    if !x.is_zero() {
                        let col = offset[t] + r * m.dim(t) + k;
                        let cur = sys.get(row, col) - x;
                        sys.set(row, col, cur);
                    }
                }
                row += 1;
            }
        }
    }
    let ker = sys.kernel_basis();
    (0..ker.cols())
        .map(|j| {
            let col = ker.column(j);
            let comps = (0..nv)
                .map(|v| Mat::from_vec(n.dim(v), m.dim(v), col[offset[v]..offset[v + 1]].to_vec()))
                .collect();
            Morphism::new_unchecked(m, n, comps)
        })
        .collect()
}

pub fn hom_dim(m: &Representation, n: &Representation) -> usize {
    hom_basis(m, n).len()
}

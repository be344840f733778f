use num_traits::One;

use super::cover::projective_resolution;
use crate::error::{Error, Result};
use crate::linalg::{Mat, Quotient, Rational};
use crate::rep::{Morphism, Representation};

/// `N ⊗_A X` for a right module `N` (a representation of the opposite
/// algebra) and a left module `X`: the quotient of `⊕_v N_v ⊗ X_v` by
/// `(n·a) ⊗ x − n ⊗ (a·x)`.
#[derive(Clone, Debug)]
pub struct Tensor {
    /// Start of `N_v ⊗ X_v` inside the direct sum; one extra final entry.
    pub offsets: Vec<usize>,
    pub quotient: Quotient,
}

impl Tensor {
    pub fn dim(&self) -> usize {
        self.quotient.dim
    }
}

fn check_pair(n: &Representation, x: &Representation) -> Result<()> {
    if !n.algebra().is_opposite_of(x.algebra()) {
        return Err(Error::AlgebraMismatch(
            "tensor needs a module over the opposite algebra".into(),
        ));
    }
    Ok(())
}

pub fn tensor(n: &Representation, x: &Representation) -> Result<Tensor> {
    check_pair(n, x)?;
    let nv = x.dims().len();
    let mut offsets = vec![0; nv + 1];
    for v in 0..nv {
        offsets[v + 1] = offsets[v] + n.dim(v) * x.dim(v);
    }
    let total = offsets[nv];
    let mut blocks = Vec::new();
    for (ai, a) in x.algebra().quiver().arrows().iter().enumerate() {
        // a: i → j acts on X; its reverse acts on N as N_j → N_i.
        let (i, j) = (a.source, a.target);
        let cols = n.dim(j) * x.dim(i);
        let mut rel = Mat::zeros(total, cols);
        rel.set_block(offsets[i], 0, &n.map(ai).kron(&Mat::identity(x.dim(i))));
        let right = Mat::identity(n.dim(j))
            .kron(x.map(ai))
            .scale(&-Rational::one());
        let prev = rel.block(offsets[j], 0, right.rows(), cols);
        rel.set_block(offsets[j], 0, &(&prev + &right));
        blocks.push(rel);
    }
    let refs: Vec<&Mat> = blocks.iter().collect();
    let rels = Mat::hstack(total, &refs);
    Ok(Tensor {
        quotient: Mat::quotient(total, &rels),
        offsets,
    })
}

/// Matrix of `N ⊗ f` between the given tensor products.
pub fn tensor_map(n: &Representation, f: &Morphism, src: &Tensor, dst: &Tensor) -> Mat {
    let blocks: Vec<Mat> = f
        .components()
        .iter()
        .enumerate()
        .map(|(v, c)| Mat::identity(n.dim(v)).kron(c))
        .collect();
    let refs: Vec<&Mat> = blocks.iter().collect();
    let whole = Mat::block_diag(&refs);
    &(&dst.quotient.projection * &whole) * &src.quotient.section
}

/// `dim Tor₁^A(N, X)` from `P2 → P1 → P0 → X`.
pub fn tor1_right(n: &Representation, x: &Representation) -> Result<usize> {
    check_pair(n, x)?;
    let res = projective_resolution(x, 2)?;
    let Some(p1) = res.term(1) else {
        return Ok(0);
    };
    let t0 = tensor(n, &res.terms[0])?;
    let t1 = tensor(n, p1)?;
    let d1 = tensor_map(n, &res.differentials[0], &t1, &t0);
    let kernel = t1.dim() - d1.rank();
    let image = match (res.term(2), res.differentials.get(1)) {
        (Some(p2), Some(d2)) => {
            let t2 = tensor(n, p2)?;
            tensor_map(n, d2, &t2, &t1).rank()
        }
        _ => 0,
    };
    Ok(kernel - image)
}

use num_traits::Zero;

use super::cover::min_presentation;
use crate::error::Result;
use crate::linalg::Mat;
use crate::rep::standard::{projective_generator, projective_layout};
use crate::rep::{cokernel, direct_sum, dual, right_projective, Morphism, Representation};

/// Auslander–Bridger transpose: `coker(Hom(P0, A) → Hom(P1, A))` for a
/// minimal presentation `P1 → P0 → M`, a module over the opposite algebra.
/// Projective modules give zero.
pub fn transpose(m: &Representation) -> Result<Representation> {
    let alg = m.algebra();
    let op = alg.opposite();
    let pres = min_presentation(m)?;
    let Some(second) = &pres.second else {
        return Ok(Representation::zero(&op));
    };
    let p0 = &pres.cover;
    let d1 = pres.differential();
    let (vs, us) = (&p0.vertices, &second.vertices);
    // x[k][l]: the image of the l-th generator of P1 in the k-th summand of
    // P0, as coefficients on the basis paths v_k → u_l.
    let mut x: Vec<Vec<Vec<(usize, crate::linalg::Rational)>>> =
        vec![vec![Vec::new(); us.len()]; vs.len()];
    for (l, &u) in us.iter().enumerate() {
        let col = second.offset(l, u) + projective_generator(alg, u);
        let image = d1.component(u).column(col);
        for (k, &v) in vs.iter().enumerate() {
            let off = p0.offset(k, u);
            for (pos, &b) in projective_layout(alg, v)[u].iter().enumerate() {
                let c = &image[off + pos];
                if !c.is_zero() {
                    x[k][l].push((b, c.clone()));
                }
            }
        }
    }
    let src_parts: Vec<Representation> = vs.iter().map(|&v| right_projective(alg, v)).collect();
    let dst_parts: Vec<Representation> = us.iter().map(|&u| right_projective(alg, u)).collect();
    let src = direct_sum(&op, &src_parts)?.module;
    let dst = direct_sum(&op, &dst_parts)?.module;
    let comps = (0..alg.num_vertices())
        .map(|w| {
            let src_paths: Vec<Vec<usize>> = vs.iter().map(|&v| alg.basis_between(w, v)).collect();
            let dst_paths: Vec<Vec<usize>> = us.iter().map(|&u| alg.basis_between(w, u)).collect();
            let mut mat = Mat::zeros(dst.dim(w), src.dim(w));
            let mut col0 = 0;
            for (k, ys) in src_paths.iter().enumerate() {
                for (ci, &y) in ys.iter().enumerate() {
                    let mut row0 = 0;
                    for (l, targets) in dst_paths.iter().enumerate() {
                        for (b, c) in &x[k][l] {
                            let p = alg.basis()[y].then(&alg.basis()[*b]).expect("composable");
                            for (i, coef) in alg.reduce(&p) {
                                let r = row0
                                    + targets.iter().position(|&t| t == i).expect("path w → u");
                                let cur = mat.get(r, col0 + ci) + &(c * &coef);
                                mat.set(r, col0 + ci, cur);
                            }
                        }
                        row0 += targets.len();
                    }
                }
                col0 += ys.len();
            }
            mat
        })
        .collect();
    let f = Morphism::new(&src, &dst, comps)?;
    Ok(cokernel(&f)?.module)
}

/// `τ M = D Tr M`; zero for projectives.
pub fn tau(m: &Representation) -> Result<Representation> {
    Ok(dual(&transpose(m)?))
}

/// `τ⁻ M = Tr D M`; zero for injectives.
pub fn tau_inverse(m: &Representation) -> Result<Representation> {
    transpose(&dual(m))
}

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::rep::standard::projective_layout;
use crate::rep::{
    direct_sum, kernel, projective, quotient_representation, sub_representation, Morphism,
    QuotientRep, Representation,
};

/// Vertex spaces of `rad M`: the sum of the images of the incoming arrows.
fn radical_bases(m: &Representation) -> Vec<Mat> {
    let alg = m.algebra();
    (0..alg.num_vertices())
        .map(|v| {
            let imgs: Vec<&Mat> = alg
                .quiver()
                .arrows()
                .iter()
                .enumerate()
                .filter(|(_, a)| a.target == v)
                .map(|(ai, _)| m.map(ai))
                .collect();
            Mat::hstack(m.dim(v), &imgs).column_space_basis()
        })
        .collect()
}

pub fn radical(m: &Representation) -> Result<(Representation, Morphism)> {
    sub_representation(m, &radical_bases(m))
}

/// `M / rad M` with its projection and a section per vertex.
pub fn top(m: &Representation) -> Result<QuotientRep> {
    quotient_representation(m, &radical_bases(m))
}

/// `⊕ P(v_k) ↠ M`, one summand per top basis vector.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub module: Representation,
    pub map: Morphism,
    /// Vertex of each indecomposable summand, in order.
    pub vertices: Vec<usize>,
}

impl ProjectiveCover {
    /// Row offset of summand `k` inside the vertex space at `w`.
    pub fn offset(&self, k: usize, w: usize) -> usize {
        let alg = self.module.algebra();
        self.vertices[..k]
            .iter()
            .map(|&v| projective_layout(alg, v)[w].len())
            .sum()
    }
}

pub fn projective_cover(m: &Representation) -> Result<ProjectiveCover> {
    let alg = m.algebra();
    let t = top(m)?;
    let mut vertices = Vec::new();
    let mut parts = Vec::new();
    // columns of the cover map at each vertex, summand by summand
    let mut columns: Vec<Vec<Mat>> = vec![Vec::new(); alg.num_vertices()];
    for v in 0..alg.num_vertices() {
        let layout = projective_layout(alg, v);
        for k in 0..t.sections[v].cols() {
            let g = t.sections[v].select_cols(&[k]);
            for (w, paths) in layout.iter().enumerate() {
                let cols: Vec<Mat> = paths.iter().map(|&b| &m.eval_basis(b) * &g).collect();
                let refs: Vec<&Mat> = cols.iter().collect();
                columns[w].push(Mat::hstack(m.dim(w), &refs));
            }
            vertices.push(v);
            parts.push(projective(alg, v));
        }
    }
    let sum = direct_sum(alg, &parts)?.module;
    let comps = columns
        .iter()
        .enumerate()
        .map(|(w, blocks)| {
            let refs: Vec<&Mat> = blocks.iter().collect();
            Mat::hstack(m.dim(w), &refs)
        })
        .collect();
    let map = Morphism::new(&sum, m, comps)?;
    if !map.is_surjective() {
        return Err(Error::Internal("projective cover is not surjective".into()));
    }
    Ok(ProjectiveCover {
        module: sum,
        map,
        vertices,
    })
}

pub fn is_projective(m: &Representation) -> Result<bool> {
    Ok(projective_cover(m)?.module.total_dim() == m.total_dim())
}

/// `P1 → P0 → M → 0` with the syzygy `Ω = ker(P0 → M)`.
#[derive(Clone, Debug)]
pub struct ProjectivePresentation {
    pub module: Representation,
    pub cover: ProjectiveCover,
    pub syzygy: Representation,
    pub inclusion: Morphism,
    /// Projective cover of the syzygy, absent when the syzygy is zero.
    pub second: Option<ProjectiveCover>,
}

impl ProjectivePresentation {
    /// `P1 → P0`, the zero map from the zero module when `Ω = 0`.
    pub fn differential(&self) -> Morphism {
        match &self.second {
            Some(c) => self.inclusion.after(&c.map),
            None => Morphism::zero(&self.syzygy, &self.cover.module),
        }
    }
}

pub fn syzygy(m: &Representation) -> Result<(Representation, Morphism)> {
    kernel(&projective_cover(m)?.map)
}

pub fn min_presentation(m: &Representation) -> Result<ProjectivePresentation> {
    let cover = projective_cover(m)?;
    let (syzygy, inclusion) = kernel(&cover.map)?;
    let second = if syzygy.is_zero() {
        None
    } else {
        Some(projective_cover(&syzygy)?)
    };
    Ok(ProjectivePresentation {
        module: m.clone(),
        cover,
        syzygy,
        inclusion,
        second,
    })
}

/// Projective dimension, searching at most `cap` syzygies.
pub fn proj_dim(m: &Representation, cap: usize) -> Result<usize> {
    let mut cur = m.clone();
    for i in 0..=cap {
        let cover = projective_cover(&cur)?;
        if cover.module.total_dim() == cur.total_dim() {
            return Ok(i);
        }
        cur = kernel(&cover.map)?.0;
    }
    Err(Error::CapExceeded {
        what: "projective resolution".into(),
        cap,
    })
}

/// Minimal projective resolution `… → P1 → P0 → M`.
#[derive(Clone, Debug)]
pub struct ProjectiveResolution {
    pub module: Representation,
    /// `P_0, P_1, …`; stops at the first zero syzygy or at the requested length.
    pub terms: Vec<Representation>,
    /// `d_i: P_i → P_{i−1}` for `i ≥ 1`, stored at index `i − 1`.
    pub differentials: Vec<Morphism>,
    pub augmentation: Morphism,
    /// True when the last computed syzygy was zero.
    pub complete: bool,
}

impl ProjectiveResolution {
    /// `P_i`, or `None` beyond the computed range.
    pub fn term(&self, i: usize) -> Option<&Representation> {
        self.terms.get(i)
    }
}

/// Computes `P_0, …, P_{len}` (fewer if the resolution terminates).
pub fn projective_resolution(m: &Representation, len: usize) -> Result<ProjectiveResolution> {
    let cover = projective_cover(m)?;
    let mut terms = vec![cover.module.clone()];
    let mut differentials = Vec::new();
    let augmentation = cover.map.clone();
    let (mut omega, mut inc) = kernel(&cover.map)?;
    let mut complete = omega.is_zero();
    while !complete && terms.len() <= len {
        let c = projective_cover(&omega)?;
        differentials.push(inc.after(&c.map));
        terms.push(c.module.clone());
        let (o, i) = kernel(&c.map)?;
        omega = o;
        inc = i;
        complete = omega.is_zero();
    }
    Ok(ProjectiveResolution {
        module: m.clone(),
        terms,
        differentials,
        augmentation,
        complete,
    })
}

use num_traits::{One, Zero};

use super::cover::{min_presentation, projective_resolution, ProjectivePresentation};
use crate::error::{Error, Result};
use crate::linalg::{Mat, Quotient, Rational};
use crate::rep::{direct_sum, quotient_representation, HomSpace, Morphism, Representation, Ses};

/// `Ext¹(M, N)` as `coker(Hom(P0, N) → Hom(Ω, N))`, with cocycles `Ω → N`
/// representing a basis.
#[derive(Clone, Debug)]
pub struct ExtSpace {
    presentation: ProjectivePresentation,
    coefficient: Representation,
    hom_omega: HomSpace,
    classes: Quotient,
    cocycles: Vec<Morphism>,
}

pub fn ext1(m: &Representation, n: &Representation) -> Result<ExtSpace> {
    m.check_same_algebra(n)?;
    let presentation = min_presentation(m)?;
    let hom_omega = HomSpace::new(&presentation.syzygy, n);
    let restricted: Vec<Vec<Rational>> = HomSpace::new(&presentation.cover.module, n)
        .basis()
        .iter()
        .map(|f| {
            hom_omega
                .coords(&f.after(&presentation.inclusion))
                .expect("restriction of a homomorphism is a homomorphism")
        })
        .collect();
    let image = Mat::from_columns(hom_omega.dim(), &restricted);
    let classes = Mat::quotient(hom_omega.dim(), &image);
    let cocycles = (0..classes.dim)
        .map(|k| hom_omega.combine(&classes.section.column(k)))
        .collect();
    Ok(ExtSpace {
        presentation,
        coefficient: n.clone(),
        hom_omega,
        classes,
        cocycles,
    })
}

impl ExtSpace {
    pub fn dim(&self) -> usize {
        self.classes.dim
    }

    pub fn source(&self) -> &Representation {
        &self.presentation.module
    }

    pub fn coefficient(&self) -> &Representation {
        &self.coefficient
    }

    pub fn presentation(&self) -> &ProjectivePresentation {
        &self.presentation
    }

    pub fn cocycles(&self) -> &[Morphism] {
        &self.cocycles
    }

    /// The cocycle `Σ c_k e_k`.
    pub fn cocycle(&self, coeffs: &[Rational]) -> Result<Morphism> {
        if coeffs.len() != self.dim() {
            return Err(Error::InvalidInput(format!(
                "{} coefficients for an Ext space of dimension {}",
                coeffs.len(),
                self.dim()
            )));
        }
        let mut acc = Morphism::zero(&self.presentation.syzygy, &self.coefficient);
        for (c, e) in coeffs.iter().zip(&self.cocycles) {
            if !c.is_zero() {
                acc = acc.add(&e.scale(c));
            }
        }
        Ok(acc)
    }

    /// Coordinates of the class of a cocycle `Ω → N`.
    pub fn class_of(&self, cocycle: &Morphism) -> Option<Vec<Rational>> {
        let c = self.hom_omega.coords(cocycle)?;
        Some((&self.classes.projection * &Mat::column_vector(c)).column(0))
    }

    pub fn realize(&self, coeffs: &[Rational]) -> Result<Ses> {
        realize_cocycle(&self.presentation, &self.cocycle(coeffs)?)
    }
}

pub fn realize_extension(e: &ExtSpace, coeffs: &[Rational]) -> Result<Ses> {
    e.realize(coeffs)
}

/// The pushout of `0 → Ω → P0 → M → 0` along `c: Ω → X`, giving
/// `0 → X → E → M → 0`.
pub fn realize_cocycle(pres: &ProjectivePresentation, c: &Morphism) -> Result<Ses> {
    let alg = pres.module.algebra();
    let x = c.target();
    let p0 = &pres.cover.module;
    let sum = direct_sum(alg, &[x.clone(), p0.clone()])?;
    let minus = -Rational::one();
    let rel: Vec<Mat> = c
        .components()
        .iter()
        .zip(pres.inclusion.components())
        .map(|(cv, iv)| Mat::vstack(cv.cols(), &[cv, &iv.scale(&minus)]))
        .collect();
    let q = quotient_representation(&sum.module, &rel)?;
    let inject = q.projection.after(&sum.injections[0]);
    let project = q.descend(&pres.cover.map.after(&sum.projections[1]))?;
    Ses::new(inject, project)
}

/// `0 → Bⁿ → E → A → 0` realizing the whole cocycle basis of `Ext¹(A, B)`
/// at once; afterwards `Ext¹(E, B) = 0` whenever `Ext¹(B, B) = 0`.
#[derive(Clone, Debug)]
pub struct UniversalExtension {
    pub n: usize,
    pub ses: Ses,
}

pub fn universal_extension(a: &Representation, b: &Representation) -> Result<UniversalExtension> {
    let e = ext1(a, b)?;
    let n = e.dim();
    let copies = vec![b.clone(); n];
    let bn = direct_sum(a.algebra(), &copies)?.module;
    let omega = &e.presentation.syzygy;
    let comps = (0..omega.dims().len())
        .map(|v| {
            let blocks: Vec<&Mat> = e.cocycles.iter().map(|c| c.component(v)).collect();
            Mat::vstack(omega.dim(v), &blocks)
        })
        .collect();
    let c = Morphism::new(omega, &bn, comps)?;
    let ses = realize_cocycle(&e.presentation, &c)?;
    Ok(UniversalExtension { n, ses })
}

/// `dim Ext^k(M, N)` from the minimal projective resolution.
pub fn ext_k(m: &Representation, n: &Representation, k: usize, cap: usize) -> Result<usize> {
    m.check_same_algebra(n)?;
    if k > cap {
        return Err(Error::CapExceeded {
            what: "projective resolution".into(),
            cap,
        });
    }
    let res = projective_resolution(m, k + 1)?;
    let Some(pk) = res.term(k) else {
        return Ok(0);
    };
    let hk = HomSpace::new(pk, n);
    // rank of d_{k+1}^*: Hom(P_k, N) → Hom(P_{k+1}, N)
    let out_rank = match res.differentials.get(k) {
        Some(d) => pullback_rank(&hk, d),
        None => 0,
    };
    // rank of d_k^*: Hom(P_{k−1}, N) → Hom(P_k, N)
    let in_rank = if k == 0 {
        0
    } else {
        let prev = HomSpace::new(&res.terms[k - 1], n);
        pullback_rank(&prev, &res.differentials[k - 1])
    };
    Ok(hk.dim() - out_rank - in_rank)
}

fn pullback_rank(hom: &HomSpace, d: &Morphism) -> usize {
    let cols: Vec<Vec<Rational>> = hom.basis().iter().map(|f| f.after(d).flatten()).collect();
    let len = d
        .source()
        .dims()
        .iter()
        .zip(hom.target().dims())
        .map(|(a, b)| a * b)
        .sum();
    Mat::from_columns(len, &cols).rank()
}

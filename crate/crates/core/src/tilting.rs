//! Tilting modules and the torsion pairs they induce.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::homological::{ext1, proj_dim, Roster};
use crate::linalg::Mat;
use crate::rep::{
    cokernel, decompose, direct_sum, hom_basis, in_add, injective, iso_classes, projective,
    sub_representation, Morphism, Representation, Ses,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartialTiltingCertificate {
    pub pd: usize,
    pub ext1_dim: usize,
    pub passes: bool,
}

/// (T1) `pd T ≤ 1` and (T2) `Ext¹(T, T) = 0`.
pub fn is_partial_tilting(t: &Representation, cap: usize) -> Result<PartialTiltingCertificate> {
    let pd = proj_dim(t, cap)?;
    let ext1_dim = ext1(t, t)?.dim();
    Ok(PartialTiltingCertificate {
        pd,
        ext1_dim,
        passes: pd <= 1 && ext1_dim == 0,
    })
}

#[derive(Clone, Debug)]
pub struct TiltingCertificate {
    pub partial: PartialTiltingCertificate,
    /// One representative per isomorphism class of indecomposable summands.
    pub summands: Vec<Representation>,
    pub basic: Representation,
    pub vertex_count: usize,
    pub count_criterion: bool,
    /// `0 → Λ → T0 → T1 → 0` when (T1), (T2) hold.
    pub approximation: Option<Ses>,
    pub t3: bool,
    pub is_tilting: bool,
}

/// Indecomposable summands of `m`, one per isomorphism class.
pub fn basic_summands(m: &Representation, seed: u64) -> Result<Vec<Representation>> {
    let summands = decompose(m, seed)?.summands;
    Ok(iso_classes(&summands, seed)?
        .into_iter()
        .map(|(r, _)| r)
        .collect())
}

/// `Λ → ⊕ T_i^{dim Hom(P(v), T_i)}` through a basis of each Hom space.
fn regular_approximation(
    algebra: &Arc<BoundQuiverAlgebra>,
    summands: &[Representation],
) -> Result<Morphism> {
    let projectives: Vec<Representation> = (0..algebra.num_vertices())
        .map(|v| projective(algebra, v))
        .collect();
    let lam = direct_sum(algebra, &projectives)?;
    let mut maps: Vec<(usize, Morphism)> = Vec::new();
    for (v, p) in projectives.iter().enumerate() {
        for s in summands {
            for f in hom_basis(p, s) {
                maps.push((v, f));
            }
        }
    }
    let copies: Vec<Representation> = maps.iter().map(|(_, f)| f.target().clone()).collect();
    let t0 = direct_sum(algebra, &copies)?;
    let mut total = Morphism::zero(&lam.module, &t0.module);
    for (k, (v, f)) in maps.iter().enumerate() {
        total = total.add(&t0.injections[k].after(f).after(&lam.projections[*v]));
    }
    Ok(total)
}

/// (T1)–(T3). (T3) is checked constructively and against the count of
/// summands; disagreement is an internal error.
pub fn is_tilting(t: &Representation, cap: usize, seed: u64) -> Result<TiltingCertificate> {
    let algebra = t.algebra().clone();
    let partial = is_partial_tilting(t, cap)?;
    let summands = basic_summands(t, seed)?;
    let basic = direct_sum(&algebra, &summands)?.module;
    let vertex_count = algebra.num_vertices();
    let count_criterion = summands.len() == vertex_count;
    let mut approximation = None;
    let mut t3 = false;
    if partial.passes {
        let f = regular_approximation(&algebra, &summands)?;
        if f.is_injective() {
            let c = cokernel(&f)?;
            if in_add(&c.module, &summands, seed)? {
                t3 = true;
            }
            approximation = Some(Ses::new(f, c.projection)?);
        }
        if t3 != count_criterion {
            return Err(Error::Internal(format!(
                "(T3) by construction is {t3} but the summand count gives {count_criterion}"
            )));
        }
    }
    Ok(TiltingCertificate {
        is_tilting: partial.passes && t3,
        partial,
        summands,
        basic,
        vertex_count,
        count_criterion,
        approximation,
        t3,
    })
}

/// The trace of `T` in `M`: the sum of the images of all maps `T → M`.
pub fn trace(t: &Representation, m: &Representation) -> Result<(Representation, Morphism)> {
    t.check_same_algebra(m)?;
    let homs = hom_basis(t, m);
    let bases: Vec<Mat> = (0..m.dims().len())
        .map(|v| {
            let blocks: Vec<&Mat> = homs.iter().map(|f| f.component(v)).collect();
            Mat::hstack(m.dim(v), &blocks)
        })
        .collect();
    sub_representation(m, &bases)
}

pub fn gen_member(t: &Representation, m: &Representation) -> Result<bool> {
    Ok(trace(t, m)?.0.total_dim() == m.total_dim())
}

pub fn perp_member(t: &Representation, m: &Representation) -> Result<bool> {
    t.check_same_algebra(m)?;
    Ok(hom_basis(t, m).is_empty())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Membership {
    Torsion,
    Free,
    Neither,
}

/// Classification in `(Gen T, T^⊥)`; the zero module counts as torsion.
pub fn classify(t: &Representation, m: &Representation) -> Result<Membership> {
    if gen_member(t, m)? {
        Ok(Membership::Torsion)
    } else if perp_member(t, m)? {
        Ok(Membership::Free)
    } else {
        Ok(Membership::Neither)
    }
}

/// `0 → tr_T M → M → M / tr_T M → 0`, both ends checked.
pub fn torsion_decompose(t: &Representation, m: &Representation) -> Result<Ses> {
    let (tr, inc) = trace(t, m)?;
    let c = cokernel(&inc)?;
    if !gen_member(t, &tr)? {
        return Err(Error::Internal("trace not generated by T".into()));
    }
    if !perp_member(t, &c.module)? {
        return Err(Error::HypothesisFailed {
            culprit: "tilting".into(),
            detail: "quotient by the trace still receives maps from T".into(),
        });
    }
    Ses::new(inc, c.projection)
}

/// A tilting module with its induced torsion pair `(Gen T, T^⊥)`.
#[derive(Clone, Debug)]
pub struct TorsionProfile {
    pub tilting: Representation,
    pub certificate: TiltingCertificate,
}

impl TorsionProfile {
    pub fn new(t: &Representation, cap: usize, seed: u64) -> Result<Self> {
        let certificate = is_tilting(t, cap, seed)?;
        if !certificate.is_tilting {
            return Err(Error::HypothesisFailed {
                culprit: "tilting".into(),
                detail: "module is not tilting".into(),
            });
        }
        Ok(TorsionProfile {
            tilting: certificate.basic.clone(),
            certificate,
        })
    }

    pub fn classify(&self, m: &Representation) -> Result<Membership> {
        classify(&self.tilting, m)
    }
}

/// Roster indices by class.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RosterPartition {
    pub torsion: Vec<usize>,
    pub free: Vec<usize>,
    pub neither: Vec<usize>,
}

impl RosterPartition {
    pub fn push(&mut self, i: usize, m: Membership) {
        match m {
            Membership::Torsion => self.torsion.push(i),
            Membership::Free => self.free.push(i),
            Membership::Neither => self.neither.push(i),
        }
    }
}

pub fn partition_roster(t: &Representation, roster: &Roster) -> Result<RosterPartition> {
    let mut part = RosterPartition::default();
    for (i, m) in roster.modules.iter().enumerate() {
        part.push(i, classify(t, m)?);
    }
    Ok(part)
}

/// True when `Gen T` contains every indecomposable injective.
pub fn is_tilting_torsion_pair(t: &Representation) -> Result<bool> {
    let alg = t.algebra();
    for v in 0..alg.num_vertices() {
        if !gen_member(t, &injective(alg, v))? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug)]
pub enum TorsionPairWitness {
    /// A nonzero map from a torsion-class module to a free-class module.
    NonzeroHom {
        torsion: usize,
        free: usize,
        map: Morphism,
    },
    /// A roster module whose trace sequence leaves the classes.
    NoSequence { roster_index: usize, detail: String },
}

/// Checks `Hom(T, F) = 0` and that every roster module sits in a sequence
/// `0 → X → M → Y → 0` with `X ∈ add T`, `Y ∈ add F`. Returns the first
/// failure.
pub fn is_torsion_pair(
    tclass: &[Representation],
    fclass: &[Representation],
    roster: &Roster,
    seed: u64,
) -> Result<Option<TorsionPairWitness>> {
    for (i, x) in tclass.iter().enumerate() {
        for (j, y) in fclass.iter().enumerate() {
            if let Some(f) = hom_basis(x, y).into_iter().next() {
                return Ok(Some(TorsionPairWitness::NonzeroHom {
                    torsion: i,
                    free: j,
                    map: f,
                }));
            }
        }
    }
    let tsum = direct_sum(&roster.algebra, tclass)?.module;
    for (k, m) in roster.modules.iter().enumerate() {
        let (tr, inc) = trace(&tsum, m)?;
        if !in_add(&tr, tclass, seed)? {
            return Ok(Some(TorsionPairWitness::NoSequence {
                roster_index: k,
                detail: "trace is not in the torsion class".into(),
            }));
        }
        let quot = cokernel(&inc)?.module;
        if !in_add(&quot, fclass, seed)? {
            return Ok(Some(TorsionPairWitness::NoSequence {
                roster_index: k,
                detail: "quotient by the trace is not in the free class".into(),
            }));
        }
    }
    Ok(None)
}

/// One copy of each indecomposable `M` in the class with `Ext¹(M, X) = 0`
/// for every `X` in the class.
pub fn ext_projectives(
    algebra: &Arc<BoundQuiverAlgebra>,
    class: &[Representation],
    seed: u64,
) -> Result<Representation> {
    let mut indecs = Vec::new();
    for m in class {
        indecs.extend(decompose(m, seed)?.summands);
    }
    let reps: Vec<Representation> = iso_classes(&indecs, seed)?
        .into_iter()
        .map(|(r, _)| r)
        .collect();
    let mut keep = Vec::new();
    'outer: for m in &reps {
        for x in class {
            if ext1(m, x)?.dim() != 0 {
                continue 'outer;
            }
        }
        keep.push(m.clone());
    }
    Ok(direct_sum(algebra, &keep)?.module)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::*;
    use crate::homological::enumerate_roster;
    use crate::rep::{is_isomorphic, simple};

    fn regular(alg: &Arc<BoundQuiverAlgebra>) -> Representation {
        let ps: Vec<Representation> = (0..alg.num_vertices())
            .map(|v| projective(alg, v))
            .collect();
        direct_sum(alg, &ps).unwrap().module
    }

    #[test]
    fn regular_modules_are_tilting() {
        for alg in [lambda(), lambda_prime(), lambda_dprime()] {
            let c = is_tilting(&regular(&alg), 20, 0).unwrap();
            assert!(c.is_tilting);
            assert!(c.count_criterion && c.t3);
            assert_eq!(c.partial.pd, 0);
        }
    }

    #[test]
    fn small_tilting_modules() {
        let a2 = lambda_prime();
        let t1 = direct_sum(&a2, &[projective(&a2, 0), simple(&a2, 0)])
            .unwrap()
            .module;
        assert!(is_tilting(&t1, 10, 0).unwrap().is_tilting);
        let l2 = lambda_dprime();
        let t2 = direct_sum(
            &l2,
            &[projective(&l2, 0), projective(&l2, 1), simple(&l2, 1)],
        )
        .unwrap()
        .module;
        assert!(is_tilting(&t2, 10, 0).unwrap().is_tilting);
        let s3 = is_partial_tilting(&simple(&l2, 0), 10).unwrap();
        assert_eq!(s3.pd, 2);
        assert!(!s3.passes);
        let p5 = is_tilting(&projective(&l2, 2), 10, 0).unwrap();
        assert!(p5.partial.passes && !p5.is_tilting && !p5.t3);
        // repeated summands do not count twice
        let doubled = direct_sum(&l2, &[t2.clone(), simple(&l2, 1)])
            .unwrap()
            .module;
        let c = is_tilting(&doubled, 10, 0).unwrap();
        assert!(c.is_tilting);
        assert_eq!(c.summands.len(), 3);
    }

    #[test]
    fn membership_over_a2() {
        let a2 = lambda_prime();
        let t1 = direct_sum(&a2, &[projective(&a2, 0), simple(&a2, 0)])
            .unwrap()
            .module;
        assert!(perp_member(&t1, &simple(&a2, 1)).unwrap());
        assert!(gen_member(&t1, &projective(&a2, 0)).unwrap());
        assert!(!gen_member(&t1, &simple(&a2, 1)).unwrap());
        let ses = torsion_decompose(&t1, &regular(&a2)).unwrap();
        assert!(is_isomorphic(ses.right(), &simple(&a2, 1), 0)
            .unwrap()
            .is_some());
        assert!(is_tilting_torsion_pair(&t1).unwrap());
        let l2 = lambda_dprime();
        assert!(!is_tilting_torsion_pair(&projective(&l2, 2)).unwrap());
    }

    #[test]
    fn ext_projectives_over_a2() {
        let a2 = lambda_prime();
        let all = vec![simple(&a2, 0), simple(&a2, 1), projective(&a2, 0)];
        let p = ext_projectives(&a2, &all, 0).unwrap();
        let expected = direct_sum(&a2, &[projective(&a2, 0), projective(&a2, 1)])
            .unwrap()
            .module;
        assert!(is_isomorphic(&p, &expected, 0).unwrap().is_some());
        let some = vec![simple(&a2, 0), projective(&a2, 0)];
        let p = ext_projectives(&a2, &some, 0).unwrap();
        assert_eq!(p.total_dim(), 3);
    }

    #[test]
    fn the_four_example_modules_are_tilting_and_gen_is_ext_orthogonal() {
        let alg = lambda();
        let roster = enumerate_roster(&alg, 50, 0).unwrap();
        for names in [CASE1_T, CASE2_T, CASE3_T, CASE4_T] {
            let t = lambda_sum(&alg, &names).unwrap();
            let c = is_tilting(&t, 20, 0).unwrap();
            assert!(c.is_tilting, "{names:?}");
            assert!(is_tilting_torsion_pair(&t).unwrap());
            for m in &roster.modules {
                assert_eq!(gen_member(&t, m).unwrap(), ext1(&t, m).unwrap().dim() == 0);
                let (tr, _) = trace(&t, m).unwrap();
                assert_eq!(trace(&t, &tr).unwrap().0.total_dim(), tr.total_dim());
                let ses = torsion_decompose(&t, m).unwrap();
                assert_eq!(
                    ses.left().total_dim() + ses.right().total_dim(),
                    m.total_dim()
                );
            }
            let part = partition_roster(&t, &roster).unwrap();
            let tclass: Vec<Representation> = part
                .torsion
                .iter()
                .map(|&i| roster.modules[i].clone())
                .collect();
            let fclass: Vec<Representation> = part
                .free
                .iter()
                .map(|&i| roster.modules[i].clone())
                .collect();
            assert!(is_torsion_pair(&tclass, &fclass, &roster, 0)
                .unwrap()
                .is_none());
            let ep = ext_projectives(&alg, &tclass, 0).unwrap();
            assert!(crate::rep::add_equal(&[ep], &[t], 0).unwrap());
        }
    }

    #[test]
    fn restricted_pairs_of_cases_three_and_four() {
        let l2 = lambda_dprime();
        let roster = enumerate_roster(&l2, 50, 0).unwrap();
        let (s3, s4) = (simple(&l2, 0), simple(&l2, 1));
        let (p3, p4, p5) = (projective(&l2, 0), projective(&l2, 1), projective(&l2, 2));
        let tclass = vec![s4, p4.clone(), p3, s3];
        let w = is_torsion_pair(&tclass, &[p5.clone(), p4], &roster, 0).unwrap();
        match w {
            Some(TorsionPairWitness::NonzeroHom { map, .. }) => assert!(!map.is_zero()),
            other => panic!("expected a Hom witness, got {other:?}"),
        }
        assert!(is_torsion_pair(&tclass, &[p5], &roster, 0)
            .unwrap()
            .is_none());
    }
}

//! Gluing tilting modules and torsion pairs along a recollement, and
//! restricting them back to the two parts.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homological::{ext1, universal_extension, Roster};
use crate::recollement::RecollementContext;
use crate::rep::{
    add_equal, basic, decompose, direct_sum, find_summand, injective, iso_classes, Representation,
    Ses,
};
use crate::tilting::{
    basic_summands, classify, ext_projectives, gen_member, is_tilting, partition_roster,
    perp_member, Membership, RosterPartition, TiltingCertificate,
};

/// A recollement with a tilting module on each side.
#[derive(Clone, Debug)]
pub struct GluedPairSpec {
    pub context: RecollementContext,
    /// Over `Λ′`.
    pub inner: Representation,
    /// Over `Λ″`.
    pub outer: Representation,
}

impl GluedPairSpec {
    pub fn new(
        context: RecollementContext,
        inner: Representation,
        outer: Representation,
    ) -> Result<Self> {
        if !inner.algebra().same_as(context.lambda_prime())
            || !outer.algebra().same_as(context.lambda_dprime())
        {
            return Err(Error::AlgebraMismatch(
                "inner module must be over Λ′ and outer module over Λ″".into(),
            ));
        }
        Ok(GluedPairSpec {
            context,
            inner,
            outer,
        })
    }
}

/// Membership in the glued pair: torsion iff `i^*M ∈ Gen T′` and
/// `j^*M ∈ Gen T″`; free iff `i^!M ∈ T′^⊥` and `j^*M ∈ T″^⊥`. Zero is torsion.
pub fn glued_membership(spec: &GluedPairSpec, m: &Representation) -> Result<Membership> {
    let ctx = &spec.context;
    let outer = ctx.j_star_upper(m)?;
    if gen_member(&spec.inner, &ctx.i_upper_star(m)?)? && gen_member(&spec.outer, &outer)? {
        return Ok(Membership::Torsion);
    }
    if perp_member(&spec.inner, &ctx.i_shriek(m)?)? && perp_member(&spec.outer, &outer)? {
        return Ok(Membership::Free);
    }
    Ok(Membership::Neither)
}

pub fn glued_partition(spec: &GluedPairSpec, roster: &Roster) -> Result<RosterPartition> {
    let mut p = RosterPartition::default();
    for (i, m) in roster.modules.iter().enumerate() {
        p.push(i, glued_membership(spec, m)?);
    }
    Ok(p)
}

/// Every indecomposable injective `Λ`-module is glued-torsion.
pub fn glued_pair_is_tilting(spec: &GluedPairSpec) -> Result<bool> {
    let lam = spec.context.lambda();
    for v in 0..lam.num_vertices() {
        if glued_membership(spec, &injective(lam, v))? != Membership::Torsion {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug)]
pub struct GlueCertificate {
    /// Basic glued tilting module.
    pub tilting: Representation,
    pub summands: Vec<Representation>,
    /// `dim Ext¹(i_* T′, j_! T″)`.
    pub n: usize,
    /// `0 → (j_! T″)ⁿ → M → i_* T′ → 0`.
    pub universal: Ses,
    pub ext1_middle_outer: usize,
    pub t1: bool,
    pub t2: bool,
    pub t3: bool,
    pub certificate: TiltingCertificate,
    pub partition: RosterPartition,
    pub glued_partition: RosterPartition,
    pub partition_equal: bool,
    pub ext_projective_equal: bool,
    pub passes: bool,
}

fn hypothesis(culprit: &str, detail: impl Into<String>) -> Error {
    Error::HypothesisFailed {
        culprit: culprit.into(),
        detail: detail.into(),
    }
}

/// `T = basic(j_! T″ ⊕ M)` for the universal extension `M` of `i_* T′` by
/// copies of `j_! T″`, with every step certified.
pub fn glue_tilting(
    spec: &GluedPairSpec,
    roster: &Roster,
    cap: usize,
    seed: u64,
) -> Result<GlueCertificate> {
    let ctx = &spec.context;
    let lam = ctx.lambda();
    if !roster.algebra.same_as(lam) {
        return Err(Error::AlgebraMismatch("roster must be over Λ".into()));
    }
    let exactness = ctx.check_exactness()?;
    for f in [&exactness.i_shriek, &exactness.j_shriek] {
        if !f.exact {
            let vs: Vec<String> = f
                .tor_witnesses
                .iter()
                .map(|w| format!("Tor_1 = {} at simple {}", w.tor1_dim, w.vertex))
                .collect();
            return Err(hypothesis(
                &f.functor,
                format!("not exact: {}", vs.join(", ")),
            ));
        }
    }
    if !is_tilting(&spec.inner, cap, seed)?.is_tilting {
        return Err(hypothesis("T′", "inner module is not tilting"));
    }
    if !is_tilting(&spec.outer, cap, seed)?.is_tilting {
        return Err(hypothesis("T″", "outer module is not tilting"));
    }

    let left = ctx.i_star(&spec.inner)?;
    let right = ctx.j_shriek(&spec.outer)?;
    let ue = universal_extension(&left, &right)?;
    let middle = ue.ses.middle().clone();
    let ext1_middle_outer = ext1(&middle, &right)?.dim();
    if ext1_middle_outer != 0 {
        return Err(Error::Internal(format!(
            "universal extension leaves Ext¹(M, j_! T″) of dimension {ext1_middle_outer}"
        )));
    }
    let raw = direct_sum(lam, &[right, middle])?.module;
    let summands = basic_summands(&raw, seed)?;
    let tilting = direct_sum(lam, &summands)?.module;

    let certificate = is_tilting(&tilting, cap, seed)?;
    let t1 = certificate.partial.pd <= 1;
    let t2 = certificate.partial.ext1_dim == 0;
    let t3 = certificate.t3;
    let partition = partition_roster(&tilting, roster)?;
    let glued = glued_partition(spec, roster)?;
    let partition_equal = partition == glued;
    let torsion: Vec<Representation> = glued
        .torsion
        .iter()
        .map(|&i| roster.modules[i].clone())
        .collect();
    let ext_proj = ext_projectives(lam, &torsion, seed)?;
    let ext_projective_equal = add_equal(&decompose(&ext_proj, seed)?.summands, &summands, seed)?;
    let passes =
        t1 && t2 && t3 && certificate.is_tilting && partition_equal && ext_projective_equal;
    Ok(GlueCertificate {
        tilting,
        summands,
        n: ue.n,
        universal: ue.ses,
        ext1_middle_outer,
        t1,
        t2,
        t3,
        certificate,
        partition,
        glued_partition: glued,
        partition_equal,
        ext_projective_equal,
        passes,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

/// Indecomposable images of the two classes of `(Gen T, T^⊥)`, one per
/// isomorphism class, zero dropped.
#[derive(Clone, Debug)]
pub struct RestrictedPair {
    pub side: Side,
    pub torsion: Vec<Representation>,
    pub free: Vec<Representation>,
}

fn indecomposable_classes(mods: &[Representation], seed: u64) -> Result<Vec<Representation>> {
    let mut indecs = Vec::new();
    for m in mods {
        indecs.extend(decompose(m, seed)?.summands);
    }
    let mut out: Vec<Representation> = iso_classes(&indecs, seed)?
        .into_iter()
        .map(|(r, _)| r)
        .collect();
    out.sort_by_cached_key(Representation::canonical_key);
    Ok(out)
}

/// Left: `(i^* 𝒯, i^! ℱ)`; right: `(j^* 𝒯, j^* ℱ)`.
pub fn restricted_pair(
    ctx: &RecollementContext,
    t: &Representation,
    roster: &Roster,
    side: Side,
    seed: u64,
) -> Result<RestrictedPair> {
    let part = partition_roster(t, roster)?;
    let mut torsion = Vec::new();
    let mut free = Vec::new();
    for &i in &part.torsion {
        let m = &roster.modules[i];
        torsion.push(match side {
            Side::Left => ctx.i_upper_star(m)?,
            Side::Right => ctx.j_star_upper(m)?,
        });
    }
    for &i in &part.free {
        let m = &roster.modules[i];
        free.push(match side {
            Side::Left => ctx.i_shriek(m)?,
            Side::Right => ctx.j_star_upper(m)?,
        });
    }
    Ok(RestrictedPair {
        side,
        torsion: indecomposable_classes(&torsion, seed)?,
        free: indecomposable_classes(&free, seed)?,
    })
}

/// A roster module `M` whose `j_* j^* M` leaves its class.
#[derive(Clone, Debug)]
pub struct ClosureWitness {
    pub roster_index: usize,
    pub image: Representation,
    pub membership: Membership,
}

#[derive(Clone, Debug)]
pub struct RestrictionHypotheses {
    /// `j_* j^* ℱ ⊆ ℱ`.
    pub free_closed: bool,
    pub free_witness: Option<ClosureWitness>,
    /// `j_* j^* 𝒯 ⊆ 𝒯`.
    pub torsion_closed: bool,
    pub torsion_witness: Option<ClosureWitness>,
    /// Extension by zero is always exact here.
    pub j_star_lower_exact: bool,
    pub passes: bool,
}

pub fn check_restriction_hypotheses(
    ctx: &RecollementContext,
    t: &Representation,
    roster: &Roster,
) -> Result<RestrictionHypotheses> {
    let part = partition_roster(t, roster)?;
    let first_violation = |indices: &[usize], want: Membership| -> Result<Option<ClosureWitness>> {
        for &i in indices {
            let image = ctx.j_star_lower(&ctx.j_star_upper(&roster.modules[i])?)?;
            let membership = classify(t, &image)?;
            let inside = membership == want || (want == Membership::Free && image.is_zero());
            if !inside {
                return Ok(Some(ClosureWitness {
                    roster_index: i,
                    image,
                    membership,
                }));
            }
        }
        Ok(None)
    };
    let free_witness = first_violation(&part.free, Membership::Free)?;
    let torsion_witness = first_violation(&part.torsion, Membership::Torsion)?;
    let free_closed = free_witness.is_none();
    let torsion_closed = torsion_witness.is_none();
    Ok(RestrictionHypotheses {
        free_closed,
        free_witness,
        torsion_closed,
        torsion_witness,
        j_star_lower_exact: true,
        passes: free_closed && torsion_closed,
    })
}

#[derive(Clone, Debug)]
pub struct RestrictionCertificate {
    pub side: Side,
    /// Basic restricted module.
    pub module: Representation,
    pub certificate: TiltingCertificate,
    /// Whether the hypotheses guaranteeing tilting-ness hold; when false the
    /// tilting verdict is computed but not implied.
    pub hypotheses_hold: bool,
    pub hypothesis_failures: Vec<String>,
    pub restricted: RestrictedPair,
    /// Restricted pair equals `(Gen T̄, T̄^⊥)` on the part roster.
    pub partition_equal: bool,
}

fn same_classes(a: &[Representation], b: &[Representation], seed: u64) -> Result<bool> {
    if a.len() != b.len() {
        return Ok(false);
    }
    for x in a {
        if find_summand(x, b, seed)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[allow(clippy::too_many_arguments)]
fn restrict(
    ctx: &RecollementContext,
    t: &Representation,
    roster: &Roster,
    part_roster: &Roster,
    side: Side,
    hypothesis_failures: Vec<String>,
    cap: usize,
    seed: u64,
) -> Result<RestrictionCertificate> {
    let image = match side {
        Side::Left => ctx.i_upper_star(t)?,
        Side::Right => ctx.j_star_upper(t)?,
    };
    let module = basic(&image, seed)?;
    let certificate = is_tilting(&module, cap, seed)?;
    let restricted = restricted_pair(ctx, t, roster, side, seed)?;
    let part = partition_roster(&module, part_roster)?;
    let pick = |ix: &[usize]| -> Vec<Representation> {
        ix.iter()
            .map(|&i| part_roster.modules[i].clone())
            .filter(|m| !m.is_zero())
            .collect()
    };
    let partition_equal = part.neither.is_empty()
        && same_classes(&restricted.torsion, &pick(&part.torsion), seed)?
        && same_classes(&restricted.free, &pick(&part.free), seed)?;
    Ok(RestrictionCertificate {
        side,
        module,
        certificate,
        hypotheses_hold: hypothesis_failures.is_empty(),
        hypothesis_failures,
        restricted,
        partition_equal,
    })
}

/// `basic(j^* T)`. Never fails on hypotheses; failures are reported.
pub fn restrict_right(
    ctx: &RecollementContext,
    t: &Representation,
    roster: &Roster,
    part_roster: &Roster,
    cap: usize,
    seed: u64,
) -> Result<RestrictionCertificate> {
    let hyp = check_restriction_hypotheses(ctx, t, roster)?;
    let mut failures = Vec::new();
    if !hyp.free_closed {
        failures.push("j_* j^* F is not contained in F".to_string());
    }
    if !hyp.torsion_closed {
        failures.push("j_* j^* T is not contained in T".to_string());
    }
    restrict(
        ctx,
        t,
        roster,
        part_roster,
        Side::Right,
        failures,
        cap,
        seed,
    )
}

/// `basic(i^* T)`; when `i^*` is not exact the tilting verdict is only
/// computed, not guaranteed.
pub fn restrict_left(
    ctx: &RecollementContext,
    t: &Representation,
    roster: &Roster,
    part_roster: &Roster,
    cap: usize,
    seed: u64,
) -> Result<RestrictionCertificate> {
    let exactness = ctx.check_exactness()?;
    let mut failures = Vec::new();
    if !exactness.i_upper_star.exact {
        failures.push("i^* is not exact".to_string());
    }
    restrict(ctx, t, roster, part_roster, Side::Left, failures, cap, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::*;
    use crate::homological::enumerate_roster;
    use crate::rep::{is_isomorphic, projective, simple};
    use std::sync::Arc;

    const CAP: usize = 10;

    struct Setup {
        ctx: RecollementContext,
        lam: Arc<crate::algebra::BoundQuiverAlgebra>,
        roster: Roster,
        dprime_roster: Roster,
    }

    fn setup() -> Setup {
        let lam = lambda();
        let ctx = RecollementContext::split(&lam, &["3", "4", "5"]).unwrap();
        let roster = enumerate_roster(&lam, 100, 0).unwrap();
        let dprime_roster = enumerate_roster(ctx.lambda_dprime(), 100, 0).unwrap();
        Setup {
            ctx,
            lam,
            roster,
            dprime_roster,
        }
    }

    fn case_spec(ctx: &RecollementContext, second: bool) -> GluedPairSpec {
        let lp = ctx.lambda_prime().clone();
        let ld = ctx.lambda_dprime().clone();
        let inner = direct_sum(&lp, &[projective(&lp, 0), simple(&lp, 0)])
            .unwrap()
            .module;
        // Λ″ vertices are 3, 4, 5 in that order
        let outer = if second {
            vec![projective(&ld, 0), projective(&ld, 1), simple(&ld, 1)]
        } else {
            vec![projective(&ld, 2), projective(&ld, 1), projective(&ld, 0)]
        };
        let outer = direct_sum(&ld, &outer).unwrap().module;
        GluedPairSpec::new(ctx.clone(), inner, outer).unwrap()
    }

    fn names_of(s: &Setup, idx: &[usize]) -> Vec<String> {
        idx.iter()
            .map(|&i| {
                let m = &s.roster.modules[i];
                LAMBDA_INDECOMPOSABLES
                    .iter()
                    .find(|(n, _, _)| {
                        is_isomorphic(&lambda_module(&s.lam, n).unwrap(), m, 0)
                            .unwrap()
                            .is_some()
                    })
                    .unwrap()
                    .0
                    .to_string()
            })
            .collect()
    }

    fn matches_names(
        summands: &[Representation],
        lam: &Arc<crate::algebra::BoundQuiverAlgebra>,
        names: &[&str],
    ) -> bool {
        let expected: Vec<Representation> = names
            .iter()
            .map(|n| lambda_module(lam, n).unwrap())
            .collect();
        add_equal(summands, &expected, 0).unwrap() && summands.len() == names.len()
    }

    #[test]
    fn glue_case_one() {
        let s = setup();
        let spec = case_spec(&s.ctx, false);
        let cert = glue_tilting(&spec, &s.roster, CAP, 0).unwrap();
        assert!(cert.passes);
        assert!(matches_names(&cert.summands, &s.lam, &CASE1_T));
        assert_eq!(
            (cert.partition.torsion.len(), cert.partition.free.len()),
            (14, 1)
        );
        assert_eq!(names_of(&s, &cert.partition.free), ["(S2,0)"]);
        assert!(glued_pair_is_tilting(&spec).unwrap());
    }

    #[test]
    fn glue_case_two() {
        let s = setup();
        let spec = case_spec(&s.ctx, true);
        let cert = glue_tilting(&spec, &s.roster, CAP, 0).unwrap();
        assert!(cert.passes);
        assert!(matches_names(&cert.summands, &s.lam, &CASE2_T));
        assert_eq!(
            (cert.partition.torsion.len(), cert.partition.free.len()),
            (13, 2)
        );
        let mut free = names_of(&s, &cert.partition.free);
        free.sort();
        assert_eq!(free, ["(0,P5)", "(S2,0)"]);
    }

    #[test]
    fn glue_round_trip() {
        let s = setup();
        for second in [false, true] {
            let spec = case_spec(&s.ctx, second);
            let cert = glue_tilting(&spec, &s.roster, CAP, 0).unwrap();
            let back =
                restrict_right(&s.ctx, &cert.tilting, &s.roster, &s.dprime_roster, CAP, 0).unwrap();
            let outer = basic_summands(&spec.outer, 0).unwrap();
            assert!(add_equal(&decompose(&back.module, 0).unwrap().summands, &outer, 0).unwrap());
            let left = s.ctx.i_upper_star(&cert.tilting).unwrap();
            let inner = basic_summands(&spec.inner, 0).unwrap();
            assert!(add_equal(&basic_summands(&left, 0).unwrap(), &inner, 0).unwrap());
        }
    }

    #[test]
    fn product_gluing_is_trivial() {
        let p = product();
        let ctx = RecollementContext::split(&p, &["3", "4", "5"]).unwrap();
        let lp = ctx.lambda_prime().clone();
        let ld = ctx.lambda_dprime().clone();
        let inner = direct_sum(&lp, &[projective(&lp, 0), projective(&lp, 1)])
            .unwrap()
            .module;
        let outer = direct_sum(
            &ld,
            &[projective(&ld, 0), projective(&ld, 1), projective(&ld, 2)],
        )
        .unwrap()
        .module;
        let spec = GluedPairSpec::new(ctx.clone(), inner.clone(), outer.clone()).unwrap();
        let roster = enumerate_roster(&p, 100, 0).unwrap();
        let cert = glue_tilting(&spec, &roster, CAP, 0).unwrap();
        assert_eq!(cert.n, 0);
        assert!(cert.passes);
        let expected = direct_sum(
            &p,
            &[ctx.i_star(&inner).unwrap(), ctx.j_shriek(&outer).unwrap()],
        )
        .unwrap()
        .module;
        assert!(is_isomorphic(&cert.tilting, &expected, 0)
            .unwrap()
            .is_some());
        assert!(glued_pair_is_tilting(&spec).unwrap());
        let ld_roster = enumerate_roster(&ld, 100, 0).unwrap();
        let lp_roster = enumerate_roster(&lp, 100, 0).unwrap();
        let right = restrict_right(&ctx, &cert.tilting, &roster, &ld_roster, CAP, 0).unwrap();
        assert!(is_isomorphic(&right.module, &outer, 0).unwrap().is_some());
        let left = restrict_left(&ctx, &cert.tilting, &roster, &lp_roster, CAP, 0).unwrap();
        assert!(left.hypotheses_hold);
        assert!(is_isomorphic(&left.module, &inner, 0).unwrap().is_some());
    }

    #[test]
    fn mutated_context_fails_on_j_shriek() {
        let m = mutated();
        let ctx = RecollementContext::split(&m, &["3", "4"]).unwrap();
        let lp = ctx.lambda_prime().clone();
        let ld = ctx.lambda_dprime().clone();
        let inner = projective(&lp, 0);
        let outer = direct_sum(&ld, &[projective(&ld, 0), projective(&ld, 1)])
            .unwrap()
            .module;
        let spec = GluedPairSpec::new(ctx, inner, outer).unwrap();
        let roster = enumerate_roster(&m, 100, 0).unwrap();
        match glue_tilting(&spec, &roster, CAP, 0) {
            Err(Error::HypothesisFailed { culprit, .. }) => assert_eq!(culprit, "j_!"),
            other => panic!("expected a j_! failure, got {other:?}"),
        }
    }

    #[test]
    fn glued_membership_examples() {
        let s = setup();
        let one = case_spec(&s.ctx, false);
        let two = case_spec(&s.ctx, true);
        let s2 = lambda_module(&s.lam, "(S2,0)").unwrap();
        let p5 = lambda_module(&s.lam, "(0,P5)").unwrap();
        assert_eq!(glued_membership(&one, &s2).unwrap(), Membership::Free);
        assert_eq!(glued_membership(&two, &p5).unwrap(), Membership::Free);
        let zero = Representation::zero(&s.lam);
        assert_eq!(glued_membership(&one, &zero).unwrap(), Membership::Torsion);
    }

    #[test]
    fn case_three_restriction() {
        let s = setup();
        let t = lambda_sum(&s.lam, &CASE3_T).unwrap();
        let hyp = check_restriction_hypotheses(&s.ctx, &t, &s.roster).unwrap();
        assert!(!hyp.passes);
        let w = hyp.free_witness.unwrap();
        let p4 = lambda_module(&s.lam, "(0,P4)").unwrap();
        assert!(is_isomorphic(&w.image, &p4, 0).unwrap().is_some());
        let r = restrict_right(&s.ctx, &t, &s.roster, &s.dprime_roster, CAP, 0).unwrap();
        assert!(r.certificate.is_tilting);
        assert!(!r.partition_equal);
        assert_eq!(r.restricted.torsion.len(), 4);
        assert_eq!(r.restricted.free.len(), 2);
    }

    #[test]
    fn case_four_restriction() {
        let s = setup();
        let t = lambda_sum(&s.lam, &CASE4_T).unwrap();
        let hyp = check_restriction_hypotheses(&s.ctx, &t, &s.roster).unwrap();
        assert!(hyp.passes);
        let r = restrict_right(&s.ctx, &t, &s.roster, &s.dprime_roster, CAP, 0).unwrap();
        assert!(r.certificate.is_tilting);
        assert!(r.partition_equal);
        assert_eq!(r.restricted.free.len(), 1);
        let ld = s.ctx.lambda_dprime();
        let expected = [simple(ld, 1), projective(ld, 1), projective(ld, 0)];
        assert!(add_equal(&decompose(&r.module, 0).unwrap().summands, &expected, 0).unwrap());
    }

    #[test]
    fn regular_module_restricts_trivially() {
        let s = setup();
        let reg: Vec<Representation> = (0..5).map(|v| projective(&s.lam, v)).collect();
        let t = direct_sum(&s.lam, &reg).unwrap().module;
        let hyp = check_restriction_hypotheses(&s.ctx, &t, &s.roster).unwrap();
        assert!(hyp.passes);
        let pair = restricted_pair(&s.ctx, &t, &s.roster, Side::Left, 0).unwrap();
        assert_eq!(pair.torsion.len(), 3);
        assert!(pair.free.is_empty());
    }
}

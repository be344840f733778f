//! Krull–Schmidt decomposition and isomorphism testing.
//!
//! Splitting uses Fitting's lemma: for an endomorphism `x` and a rational
//! eigenvalue `λ` that is not its only eigenvalue, `M = ker (x−λ)^N ⊕ im (x−λ)^N`.
//! Candidates are the basis of `End(M)` followed by seeded random
//! combinations. `End/rad` is measured through the trace form, which is
//! nondegenerate exactly on the semisimple quotient in characteristic zero.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{direct_sum, hom_basis, sub_representation, HomSpace, Morphism, Representation};
use crate::error::{Error, Result};
use crate::linalg::poly::Poly;
use crate::linalg::{q, Mat, Rational};

/// Number of random combinations tried by the randomized searches.
pub const ISO_SAMPLES: usize = 64;

const COEFF_RANGE: i64 = 50;

/// `M = ⊕ summands`, each summand indecomposable, with inclusions into `M`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub module: Representation,
    pub summands: Vec<Representation>,
    pub inclusions: Vec<Morphism>,
}

impl Decomposition {
    /// Projections `M → summand` dual to the inclusions.
    pub fn projections(&self) -> Vec<Morphism> {
        let nv = self.module.dims().len();
        let mut per_vertex: Vec<Vec<Mat>> = vec![Vec::new(); self.summands.len()];
        for v in 0..nv {
            let blocks: Vec<&Mat> = self.inclusions.iter().map(|i| i.component(v)).collect();
            let b = Mat::hstack(self.module.dim(v), &blocks);
            let inv = b.inverse().expect("inclusions span the module");
            let mut row = 0;
            for (k, s) in self.summands.iter().enumerate() {
                per_vertex[k].push(inv.block(row, 0, s.dim(v), self.module.dim(v)));
                row += s.dim(v);
            }
        }
        self.summands
            .iter()
            .zip(per_vertex)
            .map(|(s, comps)| Morphism::new_unchecked(&self.module, s, comps))
            .collect()
    }
}

fn random_coeffs(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n)
        .map(|_| q(rng.random_range(-COEFF_RANGE..=COEFF_RANGE)))
        .collect()
}

fn combine(basis: &[Morphism], coeffs: &[Rational]) -> Morphism {
    let mut acc = Morphism::zero(basis[0].source(), basis[0].target());
    for (c, b) in coeffs.iter().zip(basis) {
        if !c.is_zero() {
            acc = acc.add(&b.scale(c));
        }
    }
    acc
}

/// Basis elements first, then `ISO_SAMPLES` random combinations.
fn candidates<'a>(
    basis: &'a [Morphism],
    rng: &'a mut ChaCha8Rng,
) -> impl Iterator<Item = Morphism> + 'a {
    let n = basis.len();
    basis.iter().cloned().chain((0..ISO_SAMPLES).map(move |_| {
        let c = random_coeffs(rng, n);
        combine(basis, &c)
    }))
}

/// Dimension of `End(M)/rad End(M)`: the rank of the trace form.
fn top_dim(end: &[Morphism]) -> usize {
    let n = end.len();
    let mut gram = Mat::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let t = end[i]
                .components()
                .iter()
                .zip(end[j].components())
                .fold(Rational::zero(), |acc, (a, b)| acc + a.trace_of_product(b));
            gram.set(i, j, t.clone());
            gram.set(j, i, t);
        }
    }
    gram.rank()
}

/// Fitting split along some rational eigenvalue of `x`, as vertex bases of
/// the two summands.
fn fitting_split(m: &Representation, x: &Morphism) -> Option<(Vec<Mat>, Vec<Mat>)> {
    let mut roots: Vec<Rational> = Vec::new();
    for c in x.components() {
        if c.rows() == 0 {
            continue;
        }
        for r in Poly::charpoly(c).rational_roots() {
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
    }
    roots.sort();
    for lambda in roots {
        let shifted: Vec<Mat> = x
            .components()
            .iter()
            .map(|c| (c - &Mat::identity(c.rows()).scale(&lambda)).pow(c.rows()))
            .collect();
        let ker: Vec<Mat> = shifted.iter().map(Mat::kernel_basis).collect();
        let kdim: usize = ker.iter().map(Mat::cols).sum();
        if kdim == 0 || kdim == m.total_dim() {
            continue;
        }
        let im = shifted.iter().map(Mat::column_space_basis).collect();
        return Some((ker, im));
    }
    None
}

/// Splits `m` into two nonzero summands, or reports it indecomposable.
fn split(m: &Representation, rng: &mut ChaCha8Rng) -> Result<Option<(Vec<Mat>, Vec<Mat>)>> {
    if m.total_dim() <= 1 {
        return Ok(None);
    }
    let end = hom_basis(m, m);
    if end.len() <= 1 {
        return Ok(None);
    }
    let top = top_dim(&end);
    if top <= 1 {
        return Ok(None);
    }
    for x in candidates(&end, rng) {
        if let Some(s) = fitting_split(m, &x) {
            return Ok(Some(s));
        }
    }
    Err(Error::PossibleDivisionAlgebra {
        dims: m.dims().to_vec(),
        top_dim: top,
    })
}

/// Decomposes `m` into indecomposables, summands in canonical order.
pub fn decompose(m: &Representation, seed: u64) -> Result<Decomposition> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done: Vec<(Representation, Vec<Mat>)> = Vec::new();
    let ident: Vec<Mat> = m.dims().iter().map(|&d| Mat::identity(d)).collect();
    let mut stack = vec![(m.clone(), ident)];
    while let Some((piece, basis)) = stack.pop() {
        if piece.is_zero() {
            continue;
        }
        match split(&piece, &mut rng)? {
            None => done.push((piece, basis)),
            Some((a, b)) => {
                for part in [a, b] {
                    let (sub, inc) = sub_representation(&piece, &part)?;
                    let in_m = basis
                        .iter()
                        .zip(inc.components())
                        .map(|(outer, inner)| outer * inner)
                        .collect();
                    stack.push((sub, in_m));
                }
            }
        }
    }
    done.sort_by_cached_key(|(s, _)| s.canonical_key());
    let (summands, inclusions) = done
        .into_iter()
        .map(|(s, b)| {
            let inc = Morphism::new_unchecked(&s, m, b);
            (s, inc)
        })
        .unzip();
    Ok(Decomposition {
        module: m.clone(),
        summands,
        inclusions,
    })
}

pub fn is_indecomposable(m: &Representation, seed: u64) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(split(m, &mut rng)?.is_none())
}

/// Randomized search for an isomorphism inside `Hom(M, N)`.
fn search_iso(m: &Representation, n: &Representation, rng: &mut ChaCha8Rng) -> Option<Morphism> {
    if m.dims() != n.dims() {
        return None;
    }
    if m.is_zero() {
        return Some(Morphism::zero(m, n));
    }
    let hom = hom_basis(m, n);
    if hom.is_empty() {
        return None;
    }
    let found = candidates(&hom, rng).find(Morphism::is_isomorphism);
    found
}

/// An isomorphism `M → N` if one exists.
///
/// The random search is conclusive for indecomposables (non-isomorphisms
/// form a proper subspace of `Hom(M, N)` then). Otherwise the two modules
/// are decomposed and their summands matched.
pub fn is_isomorphic(
    m: &Representation,
    n: &Representation,
    seed: u64,
) -> Result<Option<Morphism>> {
    m.check_same_algebra(n)?;
    if m.dims() != n.dims() {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hom_mn = HomSpace::new(m, n);
    if !m.is_zero() && hom_mn.dim() != hom_basis(m, m).len() {
        return Ok(None);
    }
    if let Some(f) = search_iso(m, n, &mut rng) {
        return Ok(Some(f));
    }
    let dm = decompose(m, seed)?;
    let dn = decompose(n, seed)?;
    if dm.summands.len() != dn.summands.len() {
        return Ok(None);
    }
    let mut used = vec![false; dn.summands.len()];
    let mut pieces = Vec::new();
    for (k, s) in dm.summands.iter().enumerate() {
        let mut hit = None;
        for (l, t) in dn.summands.iter().enumerate() {
            if used[l] {
                continue;
            }
            if let Some(f) = search_iso(s, t, &mut rng) {
                hit = Some((l, f));
                break;
            }
        }
        let Some((l, f)) = hit else {
            return Ok(None);
        };
        used[l] = true;
        pieces.push((k, l, f));
    }
    let proj = dm.projections();
    let mut total = Morphism::zero(m, n);
    for (k, l, f) in pieces {
        total = total.add(&dn.inclusions[l].after(&f).after(&proj[k]));
    }
    if !total.is_isomorphism() {
        return Err(Error::Internal("assembled isomorphism is singular".into()));
    }
    Ok(Some(total))
}

/// Groups modules into isomorphism classes, keeping first representatives.
pub fn iso_classes(mods: &[Representation], seed: u64) -> Result<Vec<(Representation, usize)>> {
    let mut classes: Vec<(Representation, usize)> = Vec::new();
    for m in mods {
        let mut found = false;
        for (rep, count) in classes.iter_mut() {
            if is_isomorphic(rep, m, seed)?.is_some() {
                *count += 1;
                found = true;
                break;
            }
        }
        if !found {
            classes.push((m.clone(), 1));
        }
    }
    Ok(classes)
}

fn indecomposables(mods: &[Representation], seed: u64) -> Result<Vec<Representation>> {
    let mut out = Vec::new();
    for m in mods {
        out.extend(decompose(m, seed)?.summands);
    }
    Ok(out)
}

/// The basic module with the same indecomposable summands as `m`.
pub fn basic(m: &Representation, seed: u64) -> Result<Representation> {
    let summands = decompose(m, seed)?.summands;
    let reps: Vec<Representation> = iso_classes(&summands, seed)?
        .into_iter()
        .map(|(r, _)| r)
        .collect();
    Ok(direct_sum(m.algebra(), &reps)?.module)
}

/// Index of the first entry of `list` isomorphic to `x`.
pub fn find_summand(
    x: &Representation,
    list: &[Representation],
    seed: u64,
) -> Result<Option<usize>> {
    for (i, y) in list.iter().enumerate() {
        if is_isomorphic(x, y, seed)?.is_some() {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// True when every indecomposable summand of `m` is isomorphic to a summand
/// of one of `gens`.
pub fn in_add(m: &Representation, gens: &[Representation], seed: u64) -> Result<bool> {
    let pool = indecomposables(gens, seed)?;
    for s in decompose(m, seed)?.summands {
        if find_summand(&s, &pool, seed)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True when `add(⊕a) = add(⊕b)`.
pub fn add_equal(a: &[Representation], b: &[Representation], seed: u64) -> Result<bool> {
    let ia = indecomposables(a, seed)?;
    let ib = indecomposables(b, seed)?;
    for x in &ia {
        if find_summand(x, &ib, seed)?.is_none() {
            return Ok(false);
        }
    }
    for y in &ib {
        if find_summand(y, &ia, seed)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

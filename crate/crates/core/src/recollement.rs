//! The recollement of module categories induced by splitting the vertices
//! of a triangular algebra `Λ = [[Λ′, N], [0, Λ″]]` into an inner part `V′`
//! and an outer part `V″`, with no nonzero path from `V′` to `V″`.
//!
//! A `Λ`-module is a triple `(X, Y, f: N ⊗ Y → X)`; here it is simply a
//! representation whose restriction to `V′` is `X` and to `V″` is `Y`.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{BoundQuiverAlgebra, Path, Quiver, Relation};
use crate::error::{Error, Result};
use crate::homological::{min_presentation, tor1_right};
use crate::linalg::{Mat, Rational};
use crate::rep::{
    direct_sum, generated_subrepresentation, hom_dim, is_isomorphic, quotient_representation,
    right_projective, simple, Morphism, Representation, Ses,
};

#[derive(Clone, Debug)]
pub struct RecollementContext {
    lambda: Arc<BoundQuiverAlgebra>,
    lambda_prime: Arc<BoundQuiverAlgebra>,
    lambda_dprime: Arc<BoundQuiverAlgebra>,
    /// Λ-vertex of each Λ′-vertex.
    inner: Vec<usize>,
    /// Λ-vertex of each Λ″-vertex.
    outer: Vec<usize>,
    inner_arrows: Vec<usize>,
    outer_arrows: Vec<usize>,
    /// Arrows from `V″` to `V′`.
    cross_arrows: Vec<usize>,
}

/// The full subquiver on `vertices` with the relations supported there.
fn corner(
    lambda: &BoundQuiverAlgebra,
    vertices: &[usize],
    arrows: &[usize],
) -> Result<Arc<BoundQuiverAlgebra>> {
    let q = lambda.quiver();
    let local = |v: usize| {
        vertices
            .iter()
            .position(|&x| x == v)
            .expect("vertex in part")
    };
    let labels: Vec<&str> = vertices.iter().map(|&v| q.vertices()[v].as_str()).collect();
    let arrow_specs: Vec<(&str, &str, &str)> = arrows
        .iter()
        .map(|&a| {
            let arr = &q.arrows()[a];
            (
                arr.name.as_str(),
                q.vertices()[arr.source].as_str(),
                q.vertices()[arr.target].as_str(),
            )
        })
        .collect();
    let sub = Quiver::new(&labels, &arrow_specs)?;
    let relations = lambda
        .relations()
        .iter()
        .filter(|r| vertices.contains(&r.source()) && vertices.contains(&r.target()))
        .map(|r| Relation {
            terms: r
                .terms
                .iter()
                .map(|(c, p)| (c.clone(), remap_path(p, &local, arrows)))
                .collect(),
        })
        .collect();
    BoundQuiverAlgebra::build(sub, relations, lambda.length_cap())
}

fn remap_path(p: &Path, local: &dyn Fn(usize) -> usize, arrows: &[usize]) -> Path {
    Path {
        source: local(p.source),
        target: local(p.target),
        arrows: p
            .arrows
            .iter()
            .map(|a| {
                arrows
                    .iter()
                    .position(|x| x == a)
                    .expect("arrow inside the part")
            })
            .collect(),
    }
}

impl RecollementContext {
    /// Splits off the outer vertices (given by label).
    pub fn split<S: AsRef<str>>(
        lambda: &Arc<BoundQuiverAlgebra>,
        outer_labels: &[S],
    ) -> Result<Self> {
        let q = lambda.quiver();
        let mut outer_set = BTreeSet::new();
        for l in outer_labels {
            let v = q
                .vertex_index(l.as_ref())
                .ok_or_else(|| Error::InvalidInput(format!("unknown vertex {}", l.as_ref())))?;
            outer_set.insert(v);
        }
        let outer: Vec<usize> = (0..q.num_vertices())
            .filter(|v| outer_set.contains(v))
            .collect();
        let inner: Vec<usize> = (0..q.num_vertices())
            .filter(|v| !outer_set.contains(v))
            .collect();
        for (ai, a) in q.arrows().iter().enumerate() {
            if !outer_set.contains(&a.source) && outer_set.contains(&a.target) {
                let p = Path {
                    source: a.source,
                    target: a.target,
                    arrows: vec![ai],
                };
                return Err(Error::NotTriangular {
                    path: lambda.describe_path(&p),
                });
            }
        }
        for p in lambda.basis() {
            if !outer_set.contains(&p.source) && outer_set.contains(&p.target) {
                return Err(Error::NotTriangular {
                    path: lambda.describe_path(p),
                });
            }
        }
        let in_part = |a: &crate::algebra::Arrow, part: &[usize]| {
            part.contains(&a.source) && part.contains(&a.target)
        };
        let arrows_in = |part: &[usize]| -> Vec<usize> {
            (0..q.arrows().len())
                .filter(|&a| in_part(&q.arrows()[a], part))
                .collect()
        };
        let inner_arrows = arrows_in(&inner);
        let outer_arrows = arrows_in(&outer);
        let cross_arrows = (0..q.arrows().len())
            .filter(|&a| {
                outer_set.contains(&q.arrows()[a].source)
                    && !outer_set.contains(&q.arrows()[a].target)
            })
            .collect();
        let lambda_prime = corner(lambda, &inner, &inner_arrows)?;
        let lambda_dprime = corner(lambda, &outer, &outer_arrows)?;
        let ctx = RecollementContext {
            lambda: lambda.clone(),
            lambda_prime,
            lambda_dprime,
            inner,
            outer,
            inner_arrows,
            outer_arrows,
            cross_arrows,
        };
        ctx.check_corner_bases()?;
        Ok(ctx)
    }

    /// The corner bases must be the Λ-basis paths inside each part.
    fn check_corner_bases(&self) -> Result<()> {
        for (alg, verts, arrows) in [
            (&self.lambda_prime, &self.inner, &self.inner_arrows),
            (&self.lambda_dprime, &self.outer, &self.outer_arrows),
        ] {
            let lifted: BTreeSet<Path> = alg
                .basis()
                .iter()
                .map(|p| Path {
                    source: verts[p.source],
                    target: verts[p.target],
                    arrows: p.arrows.iter().map(|&a| arrows[a]).collect(),
                })
                .collect();
            let inside: BTreeSet<Path> = self
                .lambda
                .basis()
                .iter()
                .filter(|p| verts.contains(&p.source) && verts.contains(&p.target))
                .cloned()
                .collect();
            if lifted != inside {
                return Err(Error::Internal(
                    "corner algebra basis differs from the paths inside the part".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn lambda(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.lambda
    }

    pub fn lambda_prime(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.lambda_prime
    }

    pub fn lambda_dprime(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.lambda_dprime
    }

    pub fn inner(&self) -> &[usize] {
        &self.inner
    }

    pub fn outer(&self) -> &[usize] {
        &self.outer
    }

    /// Λ-arrows from `V″` to `V′`.
    pub fn cross_arrows(&self) -> &[usize] {
        &self.cross_arrows
    }

    pub fn outer_labels(&self) -> Vec<String> {
        self.outer
            .iter()
            .map(|&v| self.lambda.quiver().vertices()[v].clone())
            .collect()
    }

    /// Dimension of the bimodule `N = eΛf`.
    pub fn bimodule_dim(&self) -> usize {
        self.lambda
            .basis()
            .iter()
            .filter(|p| self.outer.contains(&p.source) && self.inner.contains(&p.target))
            .count()
    }

    fn extend(&self, m: &Representation, verts: &[usize], arrows: &[usize]) -> Representation {
        let q = self.lambda.quiver();
        let mut dims = vec![0; q.num_vertices()];
        for (k, &v) in verts.iter().enumerate() {
            dims[v] = m.dim(k);
        }
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| match arrows.iter().position(|&x| x == ai) {
                Some(k) => m.map(k).clone(),
                None => Mat::zeros(dims[a.target], dims[a.source]),
            })
            .collect();
        Representation::new(&self.lambda, dims, maps).expect("extension by zero")
    }

    fn restrict(
        &self,
        m: &Representation,
        alg: &Arc<BoundQuiverAlgebra>,
        verts: &[usize],
        arrows: &[usize],
    ) -> Representation {
        let dims = verts.iter().map(|&v| m.dim(v)).collect();
        let maps = arrows.iter().map(|&a| m.map(a).clone()).collect();
        Representation::new(alg, dims, maps).expect("restriction to a full subquiver")
    }

    fn expect_over(
        &self,
        m: &Representation,
        alg: &Arc<BoundQuiverAlgebra>,
        what: &str,
    ) -> Result<()> {
        if m.algebra().same_as(alg) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch(format!(
                "{what} expects a module over another algebra"
            )))
        }
    }

    /// `i_*`: extension by zero from `Λ′`.
    pub fn i_star(&self, x: &Representation) -> Result<Representation> {
        self.expect_over(x, &self.lambda_prime, "i_*")?;
        Ok(self.extend(x, &self.inner, &self.inner_arrows))
    }

    /// `j_*`: extension by zero from `Λ″`.
    pub fn j_star_lower(&self, y: &Representation) -> Result<Representation> {
        self.expect_over(y, &self.lambda_dprime, "j_*")?;
        Ok(self.extend(y, &self.outer, &self.outer_arrows))
    }

    /// `i^!`: the `V′`-part, a submodule.
    pub fn i_shriek(&self, m: &Representation) -> Result<Representation> {
        self.expect_over(m, &self.lambda, "i^!")?;
        Ok(self.restrict(m, &self.lambda_prime, &self.inner, &self.inner_arrows))
    }

    /// `j^*`: the `V″`-part.
    pub fn j_star_upper(&self, m: &Representation) -> Result<Representation> {
        self.expect_over(m, &self.lambda, "j^*")?;
        Ok(self.restrict(m, &self.lambda_dprime, &self.outer, &self.outer_arrows))
    }

    /// Quotient of `M` by the submodule generated by its `V″`-part.
    fn outer_quotient(&self, m: &Representation) -> Result<crate::rep::QuotientRep> {
        let gens: Vec<Mat> = (0..m.dims().len())
            .map(|v| {
                if self.outer.contains(&v) {
                    Mat::identity(m.dim(v))
                } else {
                    Mat::zeros(m.dim(v), 0)
                }
            })
            .collect();
        let (_, inc) = generated_subrepresentation(m, &gens)?;
        quotient_representation(m, inc.components())
    }

    /// `i^*`: `Coker(N ⊗ Y → X)`.
    pub fn i_upper_star(&self, m: &Representation) -> Result<Representation> {
        self.expect_over(m, &self.lambda, "i^*")?;
        let q = self.outer_quotient(m)?;
        Ok(self.restrict(
            &q.module,
            &self.lambda_prime,
            &self.inner,
            &self.inner_arrows,
        ))
    }

    /// `i^*` on morphisms.
    pub fn i_upper_star_map(&self, f: &Morphism) -> Result<Morphism> {
        let qs = self.outer_quotient(f.source())?;
        let qt = self.outer_quotient(f.target())?;
        let src = self.restrict(
            &qs.module,
            &self.lambda_prime,
            &self.inner,
            &self.inner_arrows,
        );
        let dst = self.restrict(
            &qt.module,
            &self.lambda_prime,
            &self.inner,
            &self.inner_arrows,
        );
        let comps = self
            .inner
            .iter()
            .map(|&v| &(qt.projection.component(v) * f.component(v)) * &qs.sections[v])
            .collect();
        Morphism::new(&src, &dst, comps)
    }

    /// Basis paths from `w` (outer) to `v` (inner), Λ-basis indices.
    fn n_paths(&self, w: usize, v: usize) -> Vec<usize> {
        self.lambda.basis_between(w, v)
    }

    /// `j_!(Y) = (N ⊗_{Λ″} Y, Y)` with identity structure map.
    pub fn j_shriek(&self, y: &Representation) -> Result<Representation> {
        self.expect_over(y, &self.lambda_dprime, "j_!")?;
        let lam = &self.lambda;
        let q = lam.quiver();
        let no = self.outer.len();
        // generator layout at inner vertex v: (outer k, path index, y index)
        let layout = |v: usize| -> Vec<(usize, usize, usize)> {
            let mut out = Vec::new();
            for k in 0..no {
                for &p in &self.n_paths(self.outer[k], v) {
                    for i in 0..y.dim(k) {
                        out.push((k, p, i));
                    }
                }
            }
            out
        };
        let layouts: Vec<Vec<(usize, usize, usize)>> = (0..q.num_vertices())
            .map(|v| {
                if self.inner.contains(&v) {
                    layout(v)
                } else {
                    Vec::new()
                }
            })
            .collect();
        let pos = |v: usize, k: usize, p: usize, i: usize| {
            layouts[v]
                .iter()
                .position(|&g| g == (k, p, i))
                .expect("generator")
        };
        let mut quots = Vec::new();
        for &v in &self.inner {
            let gen = layouts[v].len();
            let mut rels: Vec<Vec<Rational>> = Vec::new();
            // (p·b) ⊗ y − p ⊗ b·y for b: w → w' inside V″, p: w' → v
            for (bk, &b) in self.outer_arrows.iter().enumerate() {
                let arr = &q.arrows()[b];
                let kw = self.outer.iter().position(|&x| x == arr.source).unwrap();
                let kw2 = self.outer.iter().position(|&x| x == arr.target).unwrap();
                let bpath = Path {
                    source: arr.source,
                    target: arr.target,
                    arrows: vec![b],
                };
                for &p in &self.n_paths(arr.target, v) {
                    let pb = lam.reduce(&bpath.then(&lam.basis()[p]).expect("composable"));
                    for i in 0..y.dim(kw) {
                        let mut vec = vec![Rational::zero(); gen];
                        for (r, c) in &pb {
                            vec[pos(v, kw, *r, i)] += c;
                        }
                        let by = y.map(bk).column(i);
                        for (j, c) in by.iter().enumerate() {
                            if !c.is_zero() {
                                vec[pos(v, kw2, p, j)] -= c;
                            }
                        }
                        rels.push(vec);
                    }
                }
            }
            quots.push(Mat::quotient(gen, &Mat::from_columns(gen, &rels)));
        }
        let qidx = |v: usize| self.inner.iter().position(|&x| x == v).unwrap();
        let mut dims = vec![0; q.num_vertices()];
        for (k, &w) in self.outer.iter().enumerate() {
            dims[w] = y.dim(k);
        }
        for &v in &self.inner {
            dims[v] = quots[qidx(v)].dim;
        }
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                if let Some(k) = self.outer_arrows.iter().position(|&x| x == ai) {
                    return y.map(k).clone();
                }
                let apath = Path {
                    source: a.source,
                    target: a.target,
                    arrows: vec![ai],
                };
                let (qs, qt) = (a.source, a.target);
                if self.inner_arrows.contains(&ai) {
                    // p ⊗ y ↦ (a·p) ⊗ y
                    let (ls, lt) = (&layouts[qs], &layouts[qt]);
                    let mut m = Mat::zeros(lt.len(), ls.len());
                    for (col, &(k, p, i)) in ls.iter().enumerate() {
                        for (r, c) in lam.reduce(&lam.basis()[p].then(&apath).expect("composable"))
                        {
                            m.set(pos(qt, k, r, i), col, c);
                        }
                    }
                    &(&quots[qidx(qt)].projection * &m) * &quots[qidx(qs)].section
                } else {
                    // cross arrow w → v: y ↦ [a] ⊗ y
                    let k = self.outer.iter().position(|&x| x == qs).unwrap();
                    let lt = &layouts[qt];
                    let mut m = Mat::zeros(lt.len(), y.dim(k));
                    for (r, c) in lam.reduce(&apath) {
                        for i in 0..y.dim(k) {
                            m.set(pos(qt, k, r, i), i, c.clone());
                        }
                    }
                    &quots[qidx(qt)].projection * &m
                }
            })
            .collect();
        Representation::new(lam, dims, maps)
    }

    /// `N = eΛf` as a right `Λ″`-module: at outer vertex `w` the paths from
    /// `w` into `V′`.
    pub fn bimodule_right(&self) -> Representation {
        let lam = &self.lambda;
        let q = lam.quiver();
        let op = self.lambda_dprime.opposite();
        let layout: Vec<Vec<usize>> = self
            .outer
            .iter()
            .map(|&w| {
                (0..lam.dim())
                    .filter(|&i| {
                        lam.basis()[i].source == w && self.inner.contains(&lam.basis()[i].target)
                    })
                    .collect()
            })
            .collect();
        let dims: Vec<usize> = layout.iter().map(Vec::len).collect();
        let maps = self
            .outer_arrows
            .iter()
            .map(|&b| {
                let arr = &q.arrows()[b];
                let from = self.outer.iter().position(|&x| x == arr.target).unwrap();
                let to = self.outer.iter().position(|&x| x == arr.source).unwrap();
                let bpath = Path {
                    source: arr.source,
                    target: arr.target,
                    arrows: vec![b],
                };
                let mut m = Mat::zeros(dims[to], dims[from]);
                for (col, &p) in layout[from].iter().enumerate() {
                    for (r, c) in lam.reduce(&bpath.then(&lam.basis()[p]).expect("composable")) {
                        let row = layout[to]
                            .iter()
                            .position(|&x| x == r)
                            .expect("path into V′");
                        m.set(row, col, c);
                    }
                }
                m
            })
            .collect();
        Representation::new(&op, dims, maps).expect("bimodule satisfies the relations")
    }

    /// `Λ / ΛfΛ` as a right `Λ`-module.
    pub fn idempotent_quotient_right(&self) -> Result<Representation> {
        let lam = &self.lambda;
        let op = lam.opposite();
        let parts: Vec<Representation> = (0..lam.num_vertices())
            .map(|v| right_projective(lam, v))
            .collect();
        let reg = direct_sum(&op, &parts)?.module;
        let gens: Vec<Mat> = (0..reg.dims().len())
            .map(|v| {
                if self.outer.contains(&v) {
                    Mat::identity(reg.dim(v))
                } else {
                    Mat::zeros(reg.dim(v), 0)
                }
            })
            .collect();
        let (_, inc) = generated_subrepresentation(&reg, &gens)?;
        Ok(quotient_representation(&reg, inc.components())?.module)
    }

    /// `0 → i_* i^! M → M → j_* j^* M → 0`.
    pub fn canonical_sequence(&self, m: &Representation) -> Result<Ses> {
        let left = self.i_star(&self.i_shriek(m)?)?;
        let right = self.j_star_lower(&self.j_star_upper(m)?)?;
        let nv = m.dims().len();
        let inc = (0..nv)
            .map(|v| {
                if self.inner.contains(&v) {
                    Mat::identity(m.dim(v))
                } else {
                    Mat::zeros(m.dim(v), 0)
                }
            })
            .collect();
        let proj = (0..nv)
            .map(|v| {
                if self.outer.contains(&v) {
                    Mat::identity(m.dim(v))
                } else {
                    Mat::zeros(0, m.dim(v))
                }
            })
            .collect();
        Ses::new(
            Morphism::new(&left, m, inc)?,
            Morphism::new(m, &right, proj)?,
        )
    }

    /// Exactness of the six functors.
    pub fn check_exactness(&self) -> Result<ExactnessReport> {
        let lq = self.lambda.quiver();
        let dq = self.lambda_dprime.quiver();
        let n = self.bimodule_right();
        let mut j_witnesses = Vec::new();
        for w in 0..self.outer.len() {
            let t = tor1_right(&n, &simple(&self.lambda_dprime, w))?;
            if t != 0 {
                j_witnesses.push(TorWitness {
                    vertex: dq.vertices()[w].clone(),
                    tor1_dim: t,
                });
            }
        }
        let r = self.idempotent_quotient_right()?;
        let mut i_witnesses = Vec::new();
        for v in 0..lq.num_vertices() {
            let t = tor1_right(&r, &simple(&self.lambda, v))?;
            if t != 0 {
                i_witnesses.push(TorWitness {
                    vertex: lq.vertices()[v].clone(),
                    tor1_dim: t,
                });
            }
        }
        let i_upper_star_kernel = match i_witnesses.first() {
            Some(w) => Some(self.left_exactness_witness(&w.vertex)?),
            None => None,
        };
        let structural = |name: &str, reason: &str| FunctorExactness {
            functor: name.into(),
            exact: true,
            reason: reason.into(),
            tor_witnesses: Vec::new(),
        };
        Ok(ExactnessReport {
            i_star: structural("i_*", "extension by zero"),
            i_shriek: structural("i^!", "restriction to the inner vertices"),
            j_star_upper: structural("j^*", "restriction to the outer vertices"),
            j_star_lower: structural("j_*", "extension by zero"),
            j_shriek: FunctorExactness {
                functor: "j_!".into(),
                exact: j_witnesses.is_empty(),
                reason: "Tor_1 of the bimodule against every simple outer module".into(),
                tor_witnesses: j_witnesses,
            },
            i_upper_star: FunctorExactness {
                functor: "i^*".into(),
                exact: i_witnesses.is_empty(),
                reason: "Tor_1 of the quotient by the outer idempotent ideal against every simple"
                    .into(),
                tor_witnesses: i_witnesses,
            },
            i_upper_star_kernel,
        })
    }

    /// Applies `i^*` to `0 → Ω → P → S(v) → 0`; the kernel of the image of
    /// `Ω → P` is the failure of left exactness.
    fn left_exactness_witness(&self, vertex: &str) -> Result<LeftExactnessWitness> {
        let v = self.lambda.quiver().vertex_index(vertex).expect("vertex");
        let pres = min_presentation(&simple(&self.lambda, v))?;
        let f = self.i_upper_star_map(&pres.inclusion)?;
        let kernel_dim = f.source().total_dim() - f.rank();
        Ok(LeftExactnessWitness {
            simple: vertex.to_string(),
            syzygy_dims: pres.syzygy.dims().to_vec(),
            kernel_dim,
        })
    }

    /// All identities between the six functors on the given samples.
    pub fn verify_identities(
        &self,
        lambda_samples: &[Representation],
        prime_samples: &[Representation],
        dprime_samples: &[Representation],
        seed: u64,
    ) -> Result<IdentityReport> {
        let mut report = IdentityReport::default();
        let iso = |a: &Representation, b: &Representation| -> Result<bool> {
            Ok(is_isomorphic(a, b, seed)?.is_some())
        };
        for (k, y) in dprime_samples.iter().enumerate() {
            let js = self.j_shriek(y)?;
            let jl = self.j_star_lower(y)?;
            report.record("i^* j_! = 0", k, self.i_upper_star(&js)?.is_zero());
            report.record("i^! j_* = 0", k, self.i_shriek(&jl)?.is_zero());
            report.record("j^* j_! = 1", k, iso(&self.j_star_upper(&js)?, y)?);
            report.record("j^* j_* = 1", k, iso(&self.j_star_upper(&jl)?, y)?);
            for m in lambda_samples {
                let ju = self.j_star_upper(m)?;
                report.record(
                    "Hom(j_! Y, M) = Hom(Y, j^* M)",
                    k,
                    hom_dim(&js, m) == hom_dim(y, &ju),
                );
                report.record(
                    "Hom(j^* M, Y) = Hom(M, j_* Y)",
                    k,
                    hom_dim(&ju, y) == hom_dim(m, &jl),
                );
            }
        }
        for (k, x) in prime_samples.iter().enumerate() {
            let is = self.i_star(x)?;
            report.record("i^* i_* = 1", k, iso(&self.i_upper_star(&is)?, x)?);
            report.record("i^! i_* = 1", k, iso(&self.i_shriek(&is)?, x)?);
            for m in lambda_samples {
                report.record(
                    "Hom(i^* M, X) = Hom(M, i_* X)",
                    k,
                    hom_dim(&self.i_upper_star(m)?, x) == hom_dim(m, &is),
                );
                report.record(
                    "Hom(i_* X, M) = Hom(X, i^! M)",
                    k,
                    hom_dim(&is, m) == hom_dim(x, &self.i_shriek(m)?),
                );
            }
        }
        for (k, m) in lambda_samples.iter().enumerate() {
            report.record(
                "canonical sequence exact",
                k,
                self.canonical_sequence(m).is_ok(),
            );
        }
        Ok(report)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorWitness {
    pub vertex: String,
    pub tor1_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FunctorExactness {
    pub functor: String,
    pub exact: bool,
    pub reason: String,
    pub tor_witnesses: Vec<TorWitness>,
}

/// `i^*(Ω) → i^*(P)` for the presentation of a simple, with its kernel.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeftExactnessWitness {
    pub simple: String,
    pub syzygy_dims: Vec<usize>,
    pub kernel_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessReport {
    pub i_star: FunctorExactness,
    pub i_upper_star: FunctorExactness,
    pub i_shriek: FunctorExactness,
    pub j_shriek: FunctorExactness,
    pub j_star_upper: FunctorExactness,
    pub j_star_lower: FunctorExactness,
    pub i_upper_star_kernel: Option<LeftExactnessWitness>,
}

impl ExactnessReport {
    pub fn all(&self) -> [&FunctorExactness; 6] {
        [
            &self.i_upper_star,
            &self.i_star,
            &self.i_shriek,
            &self.j_shriek,
            &self.j_star_upper,
            &self.j_star_lower,
        ]
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub checked: usize,
    /// Sample indices that failed.
    pub failures: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    fn record(&mut self, identity: &str, sample: usize, ok: bool) {
        let idx = match self.checks.iter().position(|c| c.identity == identity) {
            Some(i) => i,
            None => {
                self.checks.push(IdentityCheck {
                    identity: identity.into(),
                    ..Default::default()
                });
                self.checks.len() - 1
            }
        };
        let c = &mut self.checks[idx];
        c.checked += 1;
        if !ok && !c.failures.contains(&sample) {
            c.failures.push(sample);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures.is_empty())
    }
}

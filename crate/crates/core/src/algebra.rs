//! Bound quiver algebras: a finite quiver modulo an admissible ideal given by
//! parallel-path relations.
//!
//! Composition convention: for arrows `α: i → j` and `β: j → k` the product
//! written `βα` is the path "first α, then β". [`Path`] stores arrows in
//! application order and [`Path::then`] is the only place that concatenates;
//! algebra multiplication `x · y` means "apply `y`, then `x`".

use std::cmp::Reverse;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, Weak};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Mat, Rational};

/// Cap on path length used when none is given.
pub const DEFAULT_LENGTH_CAP: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Arrows are `(name, source label, target label)`.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::InvalidQuiver(format!(
                    "duplicate vertex label {v:?}"
                )));
            }
        }
        let mut out = Quiver {
            vertices,
            arrows: Vec::new(),
        };
        for (name, s, t) in arrows {
            let name = name.as_ref().to_string();
            if out.arrow_index(&name).is_some() {
                return Err(Error::InvalidQuiver(format!(
                    "duplicate arrow name {name:?}"
                )));
            }
            let lookup = |l: &str| {
                out.vertex_index(l).ok_or_else(|| {
                    Error::InvalidQuiver(format!("arrow {name:?} uses undeclared vertex {l:?}"))
                })
            };
            let (source, target) = (lookup(s.as_ref())?, lookup(t.as_ref())?);
            out.arrows.push(Arrow {
                name,
                source,
                target,
            });
        }
        Ok(out)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// The quiver with every arrow reversed; names and order are kept.
    pub fn reversed(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }
}

/// A path, arrows listed in application order (first applied first).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `next`; in algebra notation this is `next · self`.
    pub fn then(&self, next: &Path) -> Option<Path> {
        if self.target != next.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&next.arrows);
        Some(Path {
            source: self.source,
            target: next.target,
            arrows,
        })
    }

    /// Written in algebra notation, last-applied arrow first (`beta*alpha`).
    pub fn word(&self, quiver: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e_{}", quiver.vertices[self.source]);
        }
        self.arrows
            .iter()
            .rev()
            .map(|&a| quiver.arrows[a].name.as_str())
            .collect::<Vec<_>>()
            .join("*")
    }

    fn name_key(&self, quiver: &Quiver) -> Vec<String> {
        self.arrows
            .iter()
            .map(|&a| quiver.arrows[a].name.clone())
            .collect()
    }
}

/// A linear combination of parallel paths of length at least two.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub terms: Vec<(Rational, Path)>,
}

impl Relation {
    /// Terms are `(coefficient, arrow names in application order)`.
    pub fn from_names(quiver: &Quiver, terms: &[(Rational, Vec<&str>)]) -> Result<Self> {
        let mut out = Vec::new();
        for (c, names) in terms {
            let mut arrows = Vec::new();
            for n in names {
                arrows.push(
                    quiver
                        .arrow_index(n)
                        .ok_or_else(|| Error::RelationIllFormed(format!("unknown arrow {n:?}")))?,
                );
            }
            let path = path_from_arrows(quiver, &arrows)?;
            out.push((c.clone(), path));
        }
        let rel = Relation { terms: out };
        rel.validate(quiver)?;
        Ok(rel)
    }

    fn validate(&self, quiver: &Quiver) -> Result<()> {
        let first = self
            .terms
            .first()
            .ok_or_else(|| Error::RelationIllFormed("relation without terms".into()))?;
        for (c, p) in &self.terms {
            if c.is_zero() {
                return Err(Error::RelationIllFormed(format!(
                    "zero coefficient on {}",
                    p.word(quiver)
                )));
            }
            if p.len() < 2 {
                return Err(Error::RelationIllFormed(format!(
                    "path {} has length < 2",
                    p.word(quiver)
                )));
            }
            if p.source != first.1.source || p.target != first.1.target {
                return Err(Error::RelationIllFormed(format!(
                    "terms {} and {} are not parallel",
                    first.1.word(quiver),
                    p.word(quiver)
                )));
            }
        }
        Ok(())
    }

    pub fn source(&self) -> usize {
        self.terms[0].1.source
    }

    pub fn target(&self) -> usize {
        self.terms[0].1.target
    }

    pub fn reversed(&self) -> Relation {
        Relation {
            terms: self
                .terms
                .iter()
                .map(|(c, p)| {
                    let mut arrows = p.arrows.clone();
                    arrows.reverse();
                    (
                        c.clone(),
                        Path {
                            source: p.target,
                            target: p.source,
                            arrows,
                        },
                    )
                })
                .collect(),
        }
    }
}

/// Checks composability of an arrow sequence given in application order.
pub fn path_from_arrows(quiver: &Quiver, arrows: &[usize]) -> Result<Path> {
    let Some(&first) = arrows.first() else {
        return Err(Error::RelationIllFormed("empty path".into()));
    };
    let mut target = quiver.arrows[first].target;
    for w in arrows.windows(2) {
        let (a, b) = (&quiver.arrows[w[0]], &quiver.arrows[w[1]]);
        if a.target != b.source {
            return Err(Error::RelationIllFormed(format!(
                "{} cannot be followed by {}",
                a.name, b.name
            )));
        }
        target = b.target;
    }
    Ok(Path {
        source: quiver.arrows[first].source,
        target,
        arrows: arrows.to_vec(),
    })
}

/// Sparse combination of basis elements.
pub type Combination = Vec<(usize, Rational)>;

/// A finite-dimensional quotient of a path algebra, with a basis of path
/// classes and its structure constants.
pub struct BoundQuiverAlgebra {
    quiver: Quiver,
    relations: Vec<Relation>,
    length_cap: usize,
    /// Every path of length ≥ this lies in the ideal.
    vanishing_length: usize,
    /// Basis elements, each a normal-form path.
    basis: Vec<Path>,
    /// Normal form of every path of length below `vanishing_length`.
    reductions: HashMap<(usize, Vec<usize>), Combination>,
    /// `products[i][j]` is `basis[i] · basis[j]`.
    products: Vec<Vec<Combination>>,
    opposite: OnceLock<Arc<BoundQuiverAlgebra>>,
    opposite_of: Weak<BoundQuiverAlgebra>,
}

impl fmt::Debug for BoundQuiverAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BoundQuiverAlgebra")
            .field("vertices", &self.quiver.vertices)
            .field("arrows", &self.quiver.arrows.len())
            .field("relations", &self.relations.len())
            .field("dim", &self.basis.len())
            .finish()
    }
}

impl PartialEq for BoundQuiverAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver && self.relations == other.relations
    }
}

impl BoundQuiverAlgebra {
    /// Builds `kQ / I` where `I` is generated by `relations`.
    ///
    /// The smallest `L ≤ length_cap` such that every path of length `L` lies in
    /// the span of the products `u·r·v` (all terms of length ≤ `L`) certifies
    /// that `I` contains all paths of length ≥ `L`. The basis is then read off
    /// from paths shorter than `L` modulo the truncated products.
    pub fn build(quiver: Quiver, relations: Vec<Relation>, length_cap: usize) -> Result<Arc<Self>> {
        Self::build_inner(quiver, relations, length_cap, Weak::new())
    }

    fn build_inner(
        quiver: Quiver,
        relations: Vec<Relation>,
        length_cap: usize,
        opposite_of: Weak<BoundQuiverAlgebra>,
    ) -> Result<Arc<Self>> {
        if length_cap == 0 {
            return Err(Error::InvalidInput("length cap must be at least 1".into()));
        }
        for r in &relations {
            r.validate(&quiver)?;
        }
        let vanishing_length = (1..=length_cap)
            .find(|&l| long_paths_vanish(&quiver, &relations, l))
            .ok_or_else(|| Error::CapExceeded {
                what: "path length (a nonzero path class reaches the cap)".into(),
                cap: length_cap,
            })?;

        let paths = enumerate_paths(&quiver, vanishing_length - 1);
        let mut columns: Vec<usize> = (0..paths.len()).collect();
        columns.sort_by_key(|&i| {
            (
                Reverse(paths[i].len()),
                paths[i].name_key(&quiver),
                paths[i].source,
            )
        });
        let col_of: HashMap<&Path, usize> = columns
            .iter()
            .enumerate()
            .map(|(c, &i)| (&paths[i], c))
            .collect();
        let gens = ideal_products(&relations, &paths, vanishing_length, true);
        let mut m = Mat::zeros(gens.len(), paths.len());
        for (r, g) in gens.iter().enumerate() {
            for (c, p) in g {
                let col = col_of[p];
                let cur = m.get(r, col).clone();
                m.set(r, col, cur + c);
            }
        }
        let (rref, pivots) = m.rref();
        let free: Vec<usize> = (0..paths.len()).filter(|c| !pivots.contains(c)).collect();
        // Basis in a readable order: by length, then source, then names.
        let mut basis_cols = free.clone();
        basis_cols.sort_by_key(|&c| {
            let p = &paths[columns[c]];
            (p.len(), p.source, p.target, p.name_key(&quiver))
        });
        let basis: Vec<Path> = basis_cols
            .iter()
            .map(|&c| paths[columns[c]].clone())
            .collect();
        let basis_pos: HashMap<usize, usize> = basis_cols
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i))
            .collect();

        let mut reductions = HashMap::new();
        for (c, &pi) in columns.iter().enumerate() {
            let p = &paths[pi];
            let comb: Combination = if let Some(&b) = basis_pos.get(&c) {
                vec![(b, Rational::one())]
            } else {
                let row = pivots.iter().position(|&pc| pc == c).unwrap();
                let mut comb: Combination = free
                    .iter()
                    .filter_map(|&fc| {
                        let x = rref.get(row, fc);
                        (!x.is_zero()).then(|| (basis_pos[&fc], -x))
                    })
                    .collect();
                comb.sort_by_key(|(b, _)| *b);
                comb
            };
            reductions.insert((p.source, p.arrows.clone()), comb);
        }

        let mut alg = BoundQuiverAlgebra {
            quiver,
            relations,
            length_cap,
            vanishing_length,
            basis,
            reductions,
            products: Vec::new(),
            opposite: OnceLock::new(),
            opposite_of,
        };
        let n = alg.basis.len();
        let mut products = vec![vec![Vec::new(); n]; n];
        for (i, row) in products.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                if let Some(p) = alg.basis[j].then(&alg.basis[i]) {
                    *slot = alg.reduce(&p);
                }
            }
        }
        alg.products = products;
        Ok(Arc::new(alg))
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn length_cap(&self) -> usize {
        self.length_cap
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    /// Length from which all paths vanish.
    pub fn vanishing_length(&self) -> usize {
        self.vanishing_length
    }

    /// Normal form of a path as a combination of basis elements.
    pub fn reduce(&self, p: &Path) -> Combination {
        if p.len() >= self.vanishing_length {
            return Vec::new();
        }
        self.reductions
            .get(&(p.source, p.arrows.clone()))
            .cloned()
            .unwrap_or_default()
    }

    /// Basis indices of path classes from `source` to `target`.
    pub fn basis_between(&self, source: usize, target: usize) -> Vec<usize> {
        (0..self.basis.len())
            .filter(|&i| self.basis[i].source == source && self.basis[i].target == target)
            .collect()
    }

    /// Basis indices of path classes starting at `v`.
    pub fn basis_from(&self, v: usize) -> Vec<usize> {
        (0..self.basis.len())
            .filter(|&i| self.basis[i].source == v)
            .collect()
    }

    /// Basis indices of path classes ending at `v`.
    pub fn basis_to(&self, v: usize) -> Vec<usize> {
        (0..self.basis.len())
            .filter(|&i| self.basis[i].target == v)
            .collect()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &Combination {
        &self.products[i][j]
    }

    /// Dense coordinates of the idempotent `e_v`.
    pub fn idempotent(&self, v: usize) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.dim()];
        let i = self
            .basis
            .iter()
            .position(|p| *p == Path::trivial(v))
            .unwrap();
        x[i] = Rational::one();
        x
    }

    pub fn one(&self) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.dim()];
        for v in 0..self.num_vertices() {
            for (a, b) in x.iter_mut().zip(self.idempotent(v)) {
                *a += b;
            }
        }
        x
    }

    /// `x · y` on dense coordinates ("apply `y`, then `x`").
    pub fn multiply(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in &self.products[i][j] {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    /// Exhaustive associativity check on basis triples.
    pub fn is_associative(&self) -> bool {
        let n = self.dim();
        let unit = |i: usize| {
            let mut v = vec![Rational::zero(); n];
            v[i] = Rational::one();
            v
        };
        for i in 0..n {
            for j in 0..n {
                let ij = self.multiply(&unit(i), &unit(j));
                for k in 0..n {
                    let left = self.multiply(&ij, &unit(k));
                    let right = self.multiply(&unit(i), &self.multiply(&unit(j), &unit(k)));
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The opposite algebra: arrows and relation paths reversed. Cached, and
    /// the opposite of the opposite is `self` again.
    pub fn opposite(self: &Arc<Self>) -> Arc<Self> {
        if let Some(orig) = self.opposite_of.upgrade() {
            return orig;
        }
        self.opposite
            .get_or_init(|| {
                Self::build_inner(
                    self.quiver.reversed(),
                    self.relations.iter().map(Relation::reversed).collect(),
                    self.length_cap,
                    Arc::downgrade(self),
                )
                .expect("reversal preserves admissibility and the vanishing length")
            })
            .clone()
    }

    /// True when both carry the same quiver and relations.
    pub fn same_as(&self, other: &BoundQuiverAlgebra) -> bool {
        std::ptr::eq(self, other) || self == other
    }

    /// True when `other` is this algebra's opposite (same vertices, arrows
    /// reversed, relations reversed).
    pub fn is_opposite_of(&self, other: &BoundQuiverAlgebra) -> bool {
        self.quiver == other.quiver.reversed()
            && self.relations.len() == other.relations.len()
            && self
                .relations
                .iter()
                .zip(&other.relations)
                .all(|(a, b)| *a == b.reversed())
    }

    pub fn describe_path(&self, p: &Path) -> String {
        p.word(&self.quiver)
    }
}

/// All paths of length ≤ `max_len`, trivial paths included.
fn enumerate_paths(quiver: &Quiver, max_len: usize) -> Vec<Path> {
    let mut out: Vec<Path> = (0..quiver.num_vertices()).map(Path::trivial).collect();
    let mut frontier = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            for (ai, a) in quiver.arrows.iter().enumerate() {
                if a.source == p.target {
                    let mut arrows = p.arrows.clone();
                    arrows.push(ai);
                    next.push(Path {
                        source: p.source,
                        target: a.target,
                        arrows,
                    });
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Elements `u·r·v` as lists of `(coefficient, path)`.
///
/// With `truncate = false` only products whose terms all have length ≤
/// `window` are kept. With `truncate = true` terms of length ≥ `window` are
/// dropped (they lie in the ideal once the window is certified) and every
/// product with a surviving term is kept.
fn ideal_products(
    relations: &[Relation],
    paths: &[Path],
    window: usize,
    truncate: bool,
) -> Vec<Vec<(Rational, Path)>> {
    let mut out = Vec::new();
    for r in relations {
        let min_len = r.terms.iter().map(|(_, p)| p.len()).min().unwrap();
        let max_len = r.terms.iter().map(|(_, p)| p.len()).max().unwrap();
        let budget = if truncate {
            (window - 1).saturating_sub(min_len)
        } else {
            window.saturating_sub(max_len)
        };
        if (truncate && min_len >= window) || (!truncate && max_len > window) {
            continue;
        }
        let befores: Vec<&Path> = paths
            .iter()
            .filter(|v| v.target == r.source() && v.len() <= budget)
            .collect();
        let afters: Vec<&Path> = paths
            .iter()
            .filter(|u| u.source == r.target() && u.len() <= budget)
            .collect();
        for v in &befores {
            for u in &afters {
                if v.len() + u.len() > budget {
                    continue;
                }
                let mut terms = Vec::new();
                for (c, t) in &r.terms {
                    let p = v.then(t).and_then(|vt| vt.then(u)).unwrap();
                    if truncate && p.len() >= window {
                        continue;
                    }
                    terms.push((c.clone(), p));
                }
                if !terms.is_empty() {
                    out.push(terms);
                }
            }
        }
    }
    out
}

/// True when every path of length exactly `len` lies in the span of the
/// untruncated products `u·r·v` with all terms of length ≤ `len`.
fn long_paths_vanish(quiver: &Quiver, relations: &[Relation], len: usize) -> bool {
    let paths = enumerate_paths(quiver, len);
    let longest: Vec<usize> = (0..paths.len())
        .filter(|&i| paths[i].len() == len)
        .collect();
    if longest.is_empty() {
        return true;
    }
    let index: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let gens = ideal_products(relations, &paths, len, false);
    let mut m = Mat::zeros(gens.len(), paths.len());
    for (r, g) in gens.iter().enumerate() {
        for (c, p) in g {
            let col = index[p];
            let cur = m.get(r, col).clone();
            m.set(r, col, cur + c);
        }
    }
    let base_rank = m.rank();
    let mut units = Mat::zeros(longest.len(), paths.len());
    for (r, &c) in longest.iter().enumerate() {
        units.set(r, c, Rational::one());
    }
    Mat::vstack(paths.len(), &[&m, &units]).rank() == base_rank
}

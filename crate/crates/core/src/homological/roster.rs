use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::tau::tau_inverse;
use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::rep::{decompose, is_isomorphic, projective, Representation};

/// Where a roster entry came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    Projective {
        vertex: String,
    },
    /// A summand of `τ⁻` of entry `parent`; `generation` counts τ⁻ steps
    /// from a projective.
    TauInverse {
        parent: usize,
        generation: usize,
    },
    /// Supplied from a file.
    Given,
}

/// The indecomposables found by τ⁻-closure of the projectives, in
/// canonical order.
#[derive(Clone, Debug)]
pub struct Roster {
    pub algebra: Arc<BoundQuiverAlgebra>,
    pub modules: Vec<Representation>,
    pub provenance: Vec<Provenance>,
}

impl Roster {
    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    /// Index of the entry isomorphic to `m`.
    pub fn position(&self, m: &Representation, seed: u64) -> Result<Option<usize>> {
        for (i, r) in self.modules.iter().enumerate() {
            if is_isomorphic(r, m, seed)?.is_some() {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// A roster from an explicit module list, sorted canonically.
    pub fn from_modules(
        algebra: &Arc<BoundQuiverAlgebra>,
        mut modules: Vec<Representation>,
    ) -> Self {
        modules.sort_by_cached_key(Representation::canonical_key);
        let provenance = vec![Provenance::Given; modules.len()];
        Roster {
            algebra: algebra.clone(),
            modules,
            provenance,
        }
    }
}

fn find(
    found: &[(Representation, Provenance, usize)],
    m: &Representation,
    seed: u64,
) -> Result<Option<usize>> {
    for (i, (r, _, _)) in found.iter().enumerate() {
        if r.dims() == m.dims() && is_isomorphic(r, m, seed)?.is_some() {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

pub fn enumerate_roster(
    algebra: &Arc<BoundQuiverAlgebra>,
    cap: usize,
    seed: u64,
) -> Result<Roster> {
    let exceeded = || Error::CapExceeded {
        what: "roster enumeration".into(),
        cap,
    };
    // (module, provenance, generation)
    let mut found: Vec<(Representation, Provenance, usize)> = Vec::new();
    for v in 0..algebra.num_vertices() {
        let p = projective(algebra, v);
        if find(&found, &p, seed)?.is_none() {
            let vertex = algebra.quiver().vertices()[v].clone();
            found.push((p, Provenance::Projective { vertex }, 0));
        }
    }
    let mut next = 0;
    while next < found.len() {
        let (m, _, generation) = found[next].clone();
        let t = tau_inverse(&m)?;
        for s in decompose(&t, seed)?.summands {
            if find(&found, &s, seed)?.is_none() {
                if found.len() >= cap {
                    return Err(exceeded());
                }
                found.push((
                    s,
                    Provenance::TauInverse {
                        parent: next,
                        generation: generation + 1,
                    },
                    generation + 1,
                ));
            }
        }
        next += 1;
    }
    // canonical order, parent indices remapped
    let mut order: Vec<usize> = (0..found.len()).collect();
    order.sort_by_cached_key(|&i| found[i].0.canonical_key());
    let mut new_index = vec![0; found.len()];
    for (pos, &i) in order.iter().enumerate() {
        new_index[i] = pos;
    }
    let (modules, provenance) = order
        .iter()
        .map(|&i| {
            let (m, p, _) = &found[i];
            let p = match p {
                Provenance::TauInverse { parent, generation } => Provenance::TauInverse {
                    parent: new_index[*parent],
                    generation: *generation,
                },
                other => other.clone(),
            };
            (m.clone(), p)
        })
        .unzip();
    Ok(Roster {
        algebra: algebra.clone(),
        modules,
        provenance,
    })
}

//! JSON renderings of certificates. Modules are labelled by the first
//! isomorphic named module (file-defined, then `P(v)`, `S(v)`, `I(v)`).

use std::sync::Arc;

use rectilt_core::gluing::{ClosureWitness, RestrictionHypotheses};
use rectilt_core::io::{module_json, LoadedAlgebra, ModuleSpec};
use rectilt_core::rep::{injective, projective, simple};
use rectilt_core::{
    BoundQuiverAlgebra, GlueCertificate, Representation, RestrictionCertificate, Result, Roster,
    RosterPartition, TiltingCertificate,
};
use serde_json::{json, Value};

pub struct Labeler {
    named: Vec<(String, Representation)>,
    seed: u64,
}

impl Labeler {
    pub fn standard(alg: &Arc<BoundQuiverAlgebra>, seed: u64) -> Self {
        let mut named = Vec::new();
        let labels = alg.quiver().vertices();
        for (v, l) in labels.iter().enumerate() {
            named.push((format!("P({l})"), projective(alg, v)));
        }
        for (v, l) in labels.iter().enumerate() {
            named.push((format!("S({l})"), simple(alg, v)));
        }
        for (v, l) in labels.iter().enumerate() {
            named.push((format!("I({l})"), injective(alg, v)));
        }
        Labeler { named, seed }
    }

    /// Explicit named modules of the file first, then the standard ones.
    pub fn for_file(loaded: &LoadedAlgebra, seed: u64) -> Result<Self> {
        let resolver = rectilt_core::io::ModuleResolver::new(loaded);
        let mut named = Vec::new();
        for (name, spec) in &loaded.file.modules {
            if matches!(spec, ModuleSpec::Explicit { .. }) {
                named.push((name.clone(), resolver.resolve(name)?));
            }
        }
        named.extend(Labeler::standard(&loaded.algebra, seed).named);
        Ok(Labeler { named, seed })
    }

    pub fn label(&self, m: &Representation) -> Result<Option<String>> {
        for (name, r) in &self.named {
            if r.dims() == m.dims() && rectilt_core::is_isomorphic(r, m, self.seed)?.is_some() {
                return Ok(Some(name.clone()));
            }
        }
        Ok(None)
    }

    /// `module_json` with a `"label"` entry (null when unnamed).
    pub fn module(&self, m: &Representation) -> Result<Value> {
        let mut v = module_json(m);
        v["label"] = json!(self.label(m)?);
        Ok(v)
    }

    /// Labels, falling back to the dimension vector.
    pub fn names(&self, mods: &[Representation]) -> Result<Vec<String>> {
        mods.iter()
            .map(|m| Ok(self.label(m)?.unwrap_or_else(|| m.dims_label())))
            .collect()
    }
}

pub fn roster_entries(roster: &Roster, labels: &Labeler, idx: &[usize]) -> Result<Value> {
    let mut out = Vec::new();
    for &i in idx {
        let m = &roster.modules[i];
        out.push(json!({
            "index": i,
            "label": labels.label(m)?,
            "dims": m.dims(),
        }));
    }
    Ok(Value::Array(out))
}

pub fn partition(roster: &Roster, labels: &Labeler, p: &RosterPartition) -> Result<Value> {
    Ok(json!({
        "counts": {
            "torsion": p.torsion.len(),
            "free": p.free.len(),
            "neither": p.neither.len(),
        },
        "torsion": roster_entries(roster, labels, &p.torsion)?,
        "free": roster_entries(roster, labels, &p.free)?,
        "neither": roster_entries(roster, labels, &p.neither)?,
    }))
}

pub fn tilting(cert: &TiltingCertificate, labels: &Labeler) -> Result<Value> {
    let summands: Result<Vec<Value>> = cert.summands.iter().map(|s| labels.module(s)).collect();
    let approximation = match &cert.approximation {
        Some(ses) => json!({
            "t0_dims": ses.middle().dims(),
            "t1_dims": ses.right().dims(),
            "t1_summands": labels.names(&rectilt_core::decompose(ses.right(), 0)?.summands)?,
        }),
        None => Value::Null,
    };
    Ok(json!({
        "is_tilting": cert.is_tilting,
        "t1_pd_at_most_one": cert.partial.pd <= 1,
        "pd": cert.partial.pd,
        "t2_ext1_dim": cert.partial.ext1_dim,
        "t3": cert.t3,
        "count_criterion": cert.count_criterion,
        "vertex_count": cert.vertex_count,
        "summand_labels": labels.names(&cert.summands)?,
        "summands": summands?,
        "approximation": approximation,
    }))
}

pub fn glue(cert: &GlueCertificate, roster: &Roster, labels: &Labeler) -> Result<Value> {
    let summands: Result<Vec<Value>> = cert.summands.iter().map(|s| labels.module(s)).collect();
    Ok(json!({
        "passes": cert.passes,
        "n": cert.n,
        "summand_labels": labels.names(&cert.summands)?,
        "summands": summands?,
        "universal_extension": {
            "left_dims": cert.universal.left().dims(),
            "middle": module_json(cert.universal.middle()),
            "right_dims": cert.universal.right().dims(),
            "ext1_middle_outer": cert.ext1_middle_outer,
        },
        "checks": {
            "t1": cert.t1,
            "t2": cert.t2,
            "t3": cert.t3,
            "is_tilting": cert.certificate.is_tilting,
            "partition_equal": cert.partition_equal,
            "ext_projective_equal": cert.ext_projective_equal,
        },
        "partition": partition(roster, labels, &cert.partition)?,
        "glued_partition": partition(roster, labels, &cert.glued_partition)?,
    }))
}

fn witness(w: &Option<ClosureWitness>, roster: &Roster, labels: &Labeler) -> Result<Value> {
    Ok(match w {
        Some(w) => json!({
            "roster_index": w.roster_index,
            "source": labels.label(&roster.modules[w.roster_index])?,
            "image": labels.module(&w.image)?,
            "image_membership": w.membership,
        }),
        None => Value::Null,
    })
}

pub fn hypotheses(h: &RestrictionHypotheses, roster: &Roster, labels: &Labeler) -> Result<Value> {
    Ok(json!({
        "passes": h.passes,
        "free_closed": h.free_closed,
        "free_witness": witness(&h.free_witness, roster, labels)?,
        "torsion_closed": h.torsion_closed,
        "torsion_witness": witness(&h.torsion_witness, roster, labels)?,
        "j_star_lower_exact": h.j_star_lower_exact,
    }))
}

pub fn restriction(cert: &RestrictionCertificate, part_labels: &Labeler) -> Result<Value> {
    Ok(json!({
        "side": cert.side,
        "module": part_labels.module(&cert.module)?,
        "summand_labels": part_labels.names(&cert.certificate.summands)?,
        "is_tilting": cert.certificate.is_tilting,
        "tilting": tilting(&cert.certificate, part_labels)?,
        "hypotheses_hold": cert.hypotheses_hold,
        "hypothesis_failures": cert.hypothesis_failures,
        "restricted_pair": {
            "torsion": part_labels.names(&cert.restricted.torsion)?,
            "free": part_labels.names(&cert.restricted.free)?,
        },
        "partition_equal": cert.partition_equal,
    }))
}

//! JSON formats for algebras, modules and rosters.
//!
//! Matrices are arrays of rows of rational strings (`"-3/2"`, `"0"`, `"7"`).
//! Module expressions name standard modules `P(v)`, `S(v)`, `I(v)`, entries
//! of an algebra file's `"modules"` table, or module files, joined by `+`.

use std::collections::BTreeMap;
use std::path::{Path as FsPath, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::algebra::{BoundQuiverAlgebra, Quiver, Relation, DEFAULT_LENGTH_CAP};
use crate::error::{Error, Result};
use crate::homological::{Provenance, Roster};
use crate::linalg::{format_rational, parse_rational, Mat, Rational};
use crate::rep::{direct_sum, injective, projective, simple, Morphism, Representation};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArrowSpec {
    pub name: String,
    pub source: String,
    pub target: String,
}

/// A coefficient may be written as a JSON integer or a rational string.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Int(i64),
    Text(String),
}

impl Coeff {
    fn value(&self) -> Result<Rational> {
        match self {
            Coeff::Int(k) => Ok(Rational::from_integer((*k).into())),
            Coeff::Text(s) => parse_rational(s)
                .ok_or_else(|| Error::InvalidInput(format!("bad coefficient {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermSpec {
    pub coeff: Coeff,
    /// Arrow names, first applied first.
    pub path: Vec<String>,
}

/// A module given explicitly, or as a sum of module expressions.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ModuleSpec {
    Sum(Vec<String>),
    Explicit {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        algebra: Option<String>,
        dims: BTreeMap<String, usize>,
        #[serde(default)]
        maps: BTreeMap<String, Vec<Vec<String>>>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub relations: Vec<Vec<TermSpec>>,
    /// Named modules, addressable from module expressions.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub modules: BTreeMap<String, ModuleSpec>,
}

/// An algebra together with its named modules and the directory module
/// file paths are resolved against.
#[derive(Clone, Debug)]
pub struct LoadedAlgebra {
    pub algebra: Arc<BoundQuiverAlgebra>,
    pub file: AlgebraFile,
    pub base: PathBuf,
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, origin: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("{origin}: {e}")))
}

fn read(path: &FsPath) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

impl AlgebraFile {
    pub fn build(&self, cap: usize) -> Result<Arc<BoundQuiverAlgebra>> {
        let arrows: Vec<(&str, &str, &str)> = self
            .arrows
            .iter()
            .map(|a| (a.name.as_str(), a.source.as_str(), a.target.as_str()))
            .collect();
        let quiver = Quiver::new(
            &self.vertices.iter().map(String::as_str).collect::<Vec<_>>(),
            &arrows,
        )?;
        let mut rels = Vec::new();
        for terms in &self.relations {
            let mut parsed = Vec::new();
            for t in terms {
                parsed.push((
                    t.coeff.value()?,
                    t.path.iter().map(String::as_str).collect::<Vec<_>>(),
                ));
            }
            rels.push(Relation::from_names(&quiver, &parsed)?);
        }
        BoundQuiverAlgebra::build(quiver, rels, cap)
    }

    /// The file describing `alg` (no named modules).
    pub fn of(alg: &BoundQuiverAlgebra) -> Self {
        let q = alg.quiver();
        AlgebraFile {
            vertices: q.vertices().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| ArrowSpec {
                    name: a.name.clone(),
                    source: q.vertices()[a.source].clone(),
                    target: q.vertices()[a.target].clone(),
                })
                .collect(),
            relations: alg
                .relations()
                .iter()
                .map(|r| {
                    r.terms
                        .iter()
                        .map(|(c, p)| TermSpec {
                            coeff: Coeff::Text(format_rational(c)),
                            path: p
                                .arrows
                                .iter()
                                .map(|&a| q.arrows()[a].name.clone())
                                .collect(),
                        })
                        .collect()
                })
                .collect(),
            modules: BTreeMap::new(),
        }
    }
}

pub fn parse_algebra(text: &str, origin: &str, cap: usize) -> Result<LoadedAlgebra> {
    let file: AlgebraFile = parse_json(text, origin)?;
    let algebra = file.build(cap)?;
    let base = FsPath::new(origin)
        .parent()
        .map(FsPath::to_path_buf)
        .unwrap_or_default();
    Ok(LoadedAlgebra {
        algebra,
        file,
        base,
    })
}

pub fn load_algebra(path: impl AsRef<FsPath>) -> Result<LoadedAlgebra> {
    load_algebra_with_cap(path, DEFAULT_LENGTH_CAP)
}

pub fn load_algebra_with_cap(path: impl AsRef<FsPath>, cap: usize) -> Result<LoadedAlgebra> {
    let path = path.as_ref();
    parse_algebra(&read(path)?, &path.display().to_string(), cap)
}

/// The algebra description with its computed basis.
pub fn algebra_json(alg: &BoundQuiverAlgebra) -> Value {
    let q = alg.quiver();
    let mut v = serde_json::to_value(AlgebraFile::of(alg)).expect("serializable");
    let basis: Vec<Value> = alg
        .basis()
        .iter()
        .map(|p| {
            json!({
                "source": q.vertices()[p.source],
                "target": q.vertices()[p.target],
                "path": p.arrows.iter().map(|&a| q.arrows()[a].name.clone()).collect::<Vec<_>>(),
            })
        })
        .collect();
    v["dim"] = json!(alg.dim());
    v["basis"] = Value::Array(basis);
    v
}

pub fn matrix_json(m: &Mat) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| {
                Value::Array(
                    m.row(i)
                        .iter()
                        .map(|x| Value::String(format_rational(x)))
                        .collect(),
                )
            })
            .collect(),
    )
}

pub fn matrix_from_strings(rows: usize, cols: usize, data: &[Vec<String>]) -> Result<Mat> {
    if data.len() != rows || data.iter().any(|r| r.len() != cols) {
        return Err(Error::InvalidInput(format!(
            "expected a {rows}x{cols} matrix"
        )));
    }
    let mut out = Vec::with_capacity(rows * cols);
    for row in data {
        for s in row {
            out.push(
                parse_rational(s)
                    .ok_or_else(|| Error::InvalidInput(format!("bad matrix entry {s:?}")))?,
            );
        }
    }
    Ok(Mat::from_vec(rows, cols, out))
}

/// `{"dims": {vertex: n}, "maps": {arrow: matrix}}`.
pub fn module_json(m: &Representation) -> Value {
    let q = m.algebra().quiver();
    let mut dims = Map::new();
    for (v, label) in q.vertices().iter().enumerate() {
        dims.insert(label.clone(), json!(m.dim(v)));
    }
    let mut maps = Map::new();
    for (a, arrow) in q.arrows().iter().enumerate() {
        maps.insert(arrow.name.clone(), matrix_json(m.map(a)));
    }
    json!({ "dims": dims, "maps": maps })
}

pub fn morphism_json(f: &Morphism) -> Value {
    let q = f.source().algebra().quiver();
    let mut comps = Map::new();
    for (v, label) in q.vertices().iter().enumerate() {
        comps.insert(label.clone(), matrix_json(f.component(v)));
    }
    Value::Object(comps)
}

/// An explicit module over `alg`; missing vertices have dimension 0 and
/// missing arrows act by zero.
pub fn module_from_parts(
    alg: &Arc<BoundQuiverAlgebra>,
    dims: &BTreeMap<String, usize>,
    maps: &BTreeMap<String, Vec<Vec<String>>>,
) -> Result<Representation> {
    let q = alg.quiver();
    for label in dims.keys() {
        if q.vertex_index(label).is_none() {
            return Err(Error::InvalidInput(format!("unknown vertex {label}")));
        }
    }
    for name in maps.keys() {
        if q.arrow_index(name).is_none() {
            return Err(Error::InvalidInput(format!("unknown arrow {name}")));
        }
    }
    let dv: Vec<usize> = q
        .vertices()
        .iter()
        .map(|l| dims.get(l).copied().unwrap_or(0))
        .collect();
    let mut mats = Vec::new();
    for a in q.arrows() {
        let (r, c) = (dv[a.target], dv[a.source]);
        mats.push(match maps.get(&a.name) {
            Some(data) => matrix_from_strings(r, c, data)
                .map_err(|e| Error::InvalidInput(format!("arrow {}: {e}", a.name)))?,
            None => Mat::zeros(r, c),
        });
    }
    Representation::new(alg, dv, mats)
}

/// Resolves module expressions against an algebra.
pub struct ModuleResolver<'a> {
    pub algebra: &'a Arc<BoundQuiverAlgebra>,
    pub named: &'a BTreeMap<String, ModuleSpec>,
    pub base: &'a FsPath,
}

impl<'a> ModuleResolver<'a> {
    pub fn new(loaded: &'a LoadedAlgebra) -> Self {
        ModuleResolver {
            algebra: &loaded.algebra,
            named: &loaded.file.modules,
            base: &loaded.base,
        }
    }

    /// Standard modules only, plus module files.
    pub fn bare(
        algebra: &'a Arc<BoundQuiverAlgebra>,
        named: &'a BTreeMap<String, ModuleSpec>,
    ) -> Self {
        ModuleResolver {
            algebra,
            named,
            base: FsPath::new(""),
        }
    }

    pub fn resolve(&self, expr: &str) -> Result<Representation> {
        self.resolve_depth(expr, 0)
    }

    fn resolve_depth(&self, expr: &str, depth: usize) -> Result<Representation> {
        if depth > 32 {
            return Err(Error::InvalidInput(format!(
                "module definitions nest too deeply at {expr:?}"
            )));
        }
        let parts: Vec<&str> = expr
            .split('+')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        if parts.len() != 1 {
            if parts.is_empty() {
                return Err(Error::InvalidInput("empty module expression".into()));
            }
            let mods = parts
                .iter()
                .map(|p| self.resolve_depth(p, depth + 1))
                .collect::<Result<Vec<_>>>()?;
            return Ok(direct_sum(self.algebra, &mods)?.module);
        }
        let name = parts[0];
        if let Some(m) = self.standard(name)? {
            return Ok(m);
        }
        if let Some(spec) = self.named.get(name) {
            return self.build_spec(spec, depth);
        }
        if name.ends_with(".json") {
            let path = if FsPath::new(name).is_absolute() || FsPath::new(name).exists() {
                PathBuf::from(name)
            } else {
                self.base.join(name)
            };
            let spec: ModuleSpec = parse_json(&read(&path)?, &path.display().to_string())?;
            return self.build_spec(&spec, depth);
        }
        Err(Error::InvalidInput(format!("unknown module {name:?}")))
    }

    fn standard(&self, name: &str) -> Result<Option<Representation>> {
        let Some(inner) = name.strip_suffix(')') else {
            return Ok(None);
        };
        let (kind, label) = match inner.split_once('(') {
            Some((k, l)) if ["P", "S", "I"].contains(&k) => (k, l),
            _ => return Ok(None),
        };
        let v = self
            .algebra
            .quiver()
            .vertex_index(label)
            .ok_or_else(|| Error::InvalidInput(format!("unknown vertex {label} in {name}")))?;
        Ok(Some(match kind {
            "P" => projective(self.algebra, v),
            "S" => simple(self.algebra, v),
            _ => injective(self.algebra, v),
        }))
    }

    fn build_spec(&self, spec: &ModuleSpec, depth: usize) -> Result<Representation> {
        match spec {
            ModuleSpec::Sum(names) => {
                let mods = names
                    .iter()
                    .map(|n| self.resolve_depth(n, depth + 1))
                    .collect::<Result<Vec<_>>>()?;
                Ok(direct_sum(self.algebra, &mods)?.module)
            }
            ModuleSpec::Explicit { dims, maps, .. } => module_from_parts(self.algebra, dims, maps),
        }
    }
}

fn provenance_json(p: &Provenance) -> Value {
    serde_json::to_value(p).expect("serializable")
}

/// `{"count": n, "modules": [{"index", "dims", "maps", "provenance"}]}`.
pub fn roster_json(roster: &Roster) -> Value {
    let modules: Vec<Value> = roster
        .modules
        .iter()
        .zip(&roster.provenance)
        .enumerate()
        .map(|(i, (m, p))| {
            let mut v = module_json(m);
            v["index"] = json!(i);
            v["provenance"] = provenance_json(p);
            v
        })
        .collect();
    json!({ "count": roster.len(), "modules": modules })
}

#[derive(Deserialize)]
struct RosterEntry {
    dims: BTreeMap<String, usize>,
    #[serde(default)]
    maps: BTreeMap<String, Vec<Vec<String>>>,
    provenance: Option<Provenance>,
}

#[derive(Deserialize)]
struct RosterFile {
    modules: Vec<RosterEntry>,
}

/// Reads a roster file, keeping its order and provenance.
pub fn parse_roster(alg: &Arc<BoundQuiverAlgebra>, text: &str, origin: &str) -> Result<Roster> {
    let file: RosterFile = parse_json(text, origin)?;
    let mut modules = Vec::new();
    let mut provenance = Vec::new();
    for e in file.modules {
        modules.push(module_from_parts(alg, &e.dims, &e.maps)?);
        provenance.push(e.provenance.unwrap_or(Provenance::Given));
    }
    Ok(Roster {
        algebra: alg.clone(),
        modules,
        provenance,
    })
}

pub fn load_roster(alg: &Arc<BoundQuiverAlgebra>, path: impl AsRef<FsPath>) -> Result<Roster> {
    let path = path.as_ref();
    parse_roster(alg, &read(path)?, &path.display().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::lambda;
    use crate::homological::enumerate_roster;
    use crate::rep::is_isomorphic;

    const LAMBDA: &str = r#"{
        "vertices": ["1", "2", "3", "4", "5"],
        "arrows": [
            {"name": "delta", "source": "1", "target": "2"},
            {"name": "epsilon", "source": "3", "target": "1"},
            {"name": "gamma", "source": "4", "target": "2"},
            {"name": "alpha", "source": "3", "target": "4"},
            {"name": "beta", "source": "4", "target": "5"}
        ],
        "relations": [
            [{"coeff": 1, "path": ["alpha", "gamma"]}, {"coeff": "-1", "path": ["epsilon", "delta"]}],
            [{"coeff": 1, "path": ["alpha", "beta"]}]
        ],
        "modules": {
            "X": {"dims": {"3": 1, "4": 1}, "maps": {"alpha": [["1"]]}},
            "T": ["X", "P(1)", "S(2)"]
        }
    }"#;

    #[test]
    fn algebra_round_trip() {
        let loaded = parse_algebra(LAMBDA, "lambda.json", DEFAULT_LENGTH_CAP).unwrap();
        assert_eq!(loaded.algebra.dim(), 11);
        let again = AlgebraFile::of(&loaded.algebra)
            .build(DEFAULT_LENGTH_CAP)
            .unwrap();
        assert_eq!(again.basis(), loaded.algebra.basis());
        assert_eq!(algebra_json(&loaded.algebra)["dim"], json!(11));
    }

    #[test]
    fn module_expressions() {
        let loaded = parse_algebra(LAMBDA, "lambda.json", DEFAULT_LENGTH_CAP).unwrap();
        let r = ModuleResolver::new(&loaded);
        assert_eq!(r.resolve("T").unwrap().dims(), &[1, 2, 1, 1, 0]);
        assert_eq!(r.resolve("P(3) + S(5)").unwrap().dims(), &[1, 1, 1, 1, 1]);
        assert!(matches!(r.resolve("Q(1)"), Err(Error::InvalidInput(_))));
        assert!(matches!(r.resolve("P(9)"), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn module_json_round_trip() {
        let alg = lambda();
        let m = projective(&alg, 2);
        let v = module_json(&m);
        let spec: ModuleSpec = serde_json::from_value(v).unwrap();
        let named = BTreeMap::new();
        let back = ModuleResolver::bare(&alg, &named)
            .build_spec(&spec, 0)
            .unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn roster_round_trip() {
        let alg = lambda();
        let roster = enumerate_roster(&alg, 100, 0).unwrap();
        let text = serde_json::to_string(&roster_json(&roster)).unwrap();
        let back = parse_roster(&alg, &text, "roster.json").unwrap();
        assert_eq!(back.provenance, roster.provenance);
        for (a, b) in back.modules.iter().zip(&roster.modules) {
            assert!(is_isomorphic(a, b, 0).unwrap().is_some());
        }
    }

    #[test]
    fn malformed_input_reports_location() {
        let err = parse_algebra("{\"vertices\": [", "bad.json", DEFAULT_LENGTH_CAP).unwrap_err();
        assert!(err.to_string().contains("bad.json"), "{err}");
        assert!(err.to_string().contains("line"), "{err}");
    }
}

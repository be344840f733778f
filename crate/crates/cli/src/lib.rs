//! The `rectilt` command line: JSON on standard output, a short human
//! summary on standard error. Exit codes: 0 success, 1 a mathematical
//! verdict of false (with witness), 2 input or hypothesis errors.

pub mod golden;
pub mod report;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use rectilt_core::homological::{ext1, ext_k};
use rectilt_core::io::{
    algebra_json, load_algebra_with_cap, load_roster, morphism_json, roster_json, LoadedAlgebra,
    ModuleResolver,
};
use rectilt_core::rep::{decompose, hom_basis, is_isomorphic};
use rectilt_core::tilting::{
    classify, gen_member, perp_member, torsion_decompose, TorsionPairWitness,
};
use rectilt_core::{
    check_restriction_hypotheses, enumerate_roster, glue_tilting, is_tilting, is_torsion_pair,
    partition_roster, restrict_left, restrict_right, BoundQuiverAlgebra, Error, GluedPairSpec,
    RecollementContext, Representation, Roster, Side,
};
use serde_json::{json, Value};

use report::Labeler;

#[derive(Debug, Parser)]
#[command(
    name = "rectilt",
    version,
    about = "Tilting modules and recollements over bound quiver algebras"
)]
pub struct Cli {
    /// Seed for every randomized search.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Cap on projective resolution length.
    #[arg(long, global = true, default_value_t = 10)]
    pub cap: usize,
    /// Cap on the number of roster modules.
    #[arg(long, global = true, default_value_t = 500)]
    pub roster_cap: usize,
    /// Cap on path length while building algebras.
    #[arg(long, global = true, default_value_t = rectilt_core::DEFAULT_LENGTH_CAP)]
    pub length_cap: usize,
    /// Also write the JSON output to this file.
    #[arg(short = 'o', long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Algebra files.
    Algebra {
        #[command(subcommand)]
        cmd: AlgebraCmd,
    },
    /// Single modules and pairs of modules.
    Module {
        #[command(subcommand)]
        cmd: ModuleCmd,
    },
    /// Auslander–Reiten theory.
    Ar {
        #[command(subcommand)]
        cmd: ArCmd,
    },
    /// Tilting certificates.
    Tilting {
        #[command(subcommand)]
        cmd: TiltingCmd,
    },
    /// Torsion pairs and torsion sequences.
    Torsion {
        #[command(subcommand)]
        cmd: TorsionCmd,
    },
    /// The recollement of a triangular vertex split.
    Rec {
        #[command(subcommand)]
        cmd: RecCmd,
    },
    /// Golden output files.
    Golden {
        #[command(subcommand)]
        cmd: GoldenCmd,
    },
}

#[derive(Debug, Subcommand)]
pub enum AlgebraCmd {
    /// Quiver, relations and computed basis.
    Info { algebra: PathBuf },
    /// Builds the algebra and checks associativity of the multiplication table.
    Check { algebra: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum ModuleCmd {
    /// Dimension of Hom(M, N).
    Hom {
        algebra: PathBuf,
        source: String,
        target: String,
    },
    /// Dimension of Ext^n(M, N).
    Ext {
        algebra: PathBuf,
        source: String,
        target: String,
        #[arg(long, default_value_t = 1)]
        degree: usize,
    },
    /// Indecomposable summands.
    Decompose {
        algebra: PathBuf,
        module: String,
    },
    /// Isomorphism test with an explicit isomorphism.
    Iso {
        algebra: PathBuf,
        first: String,
        second: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum ArCmd {
    /// Indecomposables reachable from the projectives by τ⁻.
    Roster { algebra: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum TiltingCmd {
    /// Checks the tilting axioms and reports the summands.
    Check { algebra: PathBuf, module: String },
}

#[derive(Debug, Subcommand)]
pub enum TorsionCmd {
    /// Classifies the roster into (Gen T, T-perp).
    Partition {
        algebra: PathBuf,
        tilting: String,
        #[arg(long)]
        roster: Option<PathBuf>,
    },
    /// The torsion sequence of a module.
    Decompose {
        algebra: PathBuf,
        tilting: String,
        module: String,
    },
    /// Checks whether two classes of modules form a torsion pair. Repeat
    /// `--torsion` / `--free` once per module.
    Pair {
        algebra: PathBuf,
        #[arg(long)]
        torsion: Vec<String>,
        #[arg(long)]
        free: Vec<String>,
        #[arg(long)]
        roster: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Debug, Subcommand)]
pub enum RecCmd {
    /// The corner algebras Λ′ (inner) and Λ″ (outer).
    Split {
        algebra: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        outer: Vec<String>,
    },
    /// Applies one of `i*`, `i_*`, `i!`, `j_!`, `j*`, `j_*`.
    Apply {
        algebra: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        outer: Vec<String>,
        functor: String,
        module: String,
    },
    /// Exactness of the six functors and the recollement identities on rosters.
    Check {
        algebra: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        outer: Vec<String>,
    },
    /// Glues tilting modules over Λ′ and Λ″ into one over Λ.
    Glue {
        algebra: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        outer: Vec<String>,
        #[arg(long)]
        inner_tilting: String,
        #[arg(long)]
        outer_tilting: String,
    },
    /// Restricts a tilting module over Λ to one side.
    Restrict {
        algebra: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        outer: Vec<String>,
        #[arg(long)]
        tilting: String,
        #[arg(long, value_enum)]
        side: SideArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum GoldenCmd {
    /// Rewrites the golden outputs under `<fixtures>/golden`.
    Regen {
        #[arg(long, default_value = "fixtures")]
        fixtures: PathBuf,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub code: i32,
    pub json: Value,
    pub summary: String,
    /// Where `-o` asked the JSON to be written.
    pub output: Option<PathBuf>,
}

impl Outcome {
    fn ok(json: Value, summary: impl Into<String>) -> Self {
        Outcome {
            code: 0,
            json,
            summary: summary.into(),
            output: None,
        }
    }

    fn verdict(pass: bool, json: Value, summary: impl Into<String>) -> Self {
        Outcome {
            code: if pass { 0 } else { 1 },
            json,
            summary: summary.into(),
            output: None,
        }
    }

    pub fn from_error(e: &Error) -> Self {
        let (kind, culprit) = match e {
            Error::HypothesisFailed { culprit, .. } => ("hypothesis_failed", Some(culprit.clone())),
            Error::CapExceeded { .. } => ("cap_exceeded", None),
            Error::RelationIllFormed(_) => ("relation_ill_formed", None),
            Error::InvalidQuiver(_) => ("invalid_quiver", None),
            Error::PossibleDivisionAlgebra { .. } => ("possible_division_algebra", None),
            Error::NotTriangular { .. } => ("not_triangular", None),
            Error::AlgebraMismatch(_) => ("algebra_mismatch", None),
            Error::InvalidRepresentation(_) => ("invalid_representation", None),
            Error::InvalidMorphism(_) => ("invalid_morphism", None),
            Error::NotExact(_) => ("not_exact", None),
            Error::InvalidInput(_) => ("invalid_input", None),
            Error::Internal(_) => ("internal", None),
        };
        Outcome {
            code: 2,
            json: json!({ "error": kind, "culprit": culprit, "message": e.to_string() }),
            summary: format!("error: {e}"),
            output: None,
        }
    }

    /// Pretty JSON with a trailing newline.
    pub fn rendered(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
        s.push('\n');
        s
    }
}

/// Parses arguments (including the program name) and runs the command.
pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            Outcome {
                code,
                json: if code == 0 {
                    Value::Null
                } else {
                    json!({ "error": "usage", "message": e.to_string() })
                },
                summary: e.to_string(),
                output: None,
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let mut out = match dispatch(cli) {
        Ok(o) => o,
        Err(e) => Outcome::from_error(&e),
    };
    out.output = cli.output.clone();
    out
}

type R<T> = rectilt_core::Result<T>;

struct Env<'a> {
    cli: &'a Cli,
}

impl Env<'_> {
    fn load(&self, path: &Path) -> R<LoadedAlgebra> {
        load_algebra_with_cap(path, self.cli.length_cap)
    }

    fn roster(&self, alg: &Arc<BoundQuiverAlgebra>, file: Option<&Path>) -> R<Roster> {
        match file {
            Some(p) => load_roster(alg, p),
            None => enumerate_roster(alg, self.cli.roster_cap, self.cli.seed),
        }
    }

    fn context(&self, loaded: &LoadedAlgebra, outer: &[String]) -> R<RecollementContext> {
        RecollementContext::split(&loaded.algebra, outer)
    }
}

fn dispatch(cli: &Cli) -> R<Outcome> {
    let env = Env { cli };
    let seed = cli.seed;
    match &cli.command {
        Command::Algebra { cmd } => match cmd {
            AlgebraCmd::Info { algebra } => {
                let loaded = env.load(algebra)?;
                let mut v = algebra_json(&loaded.algebra);
                v["modules"] = json!(loaded.file.modules.keys().collect::<Vec<_>>());
                let summary = format!(
                    "{} vertices, {} arrows, dimension {}",
                    loaded.algebra.num_vertices(),
                    loaded.algebra.quiver().arrows().len(),
                    loaded.algebra.dim()
                );
                Ok(Outcome::ok(v, summary))
            }
            AlgebraCmd::Check { algebra } => {
                let loaded = env.load(algebra)?;
                let resolver = ModuleResolver::new(&loaded);
                let mut names = Vec::new();
                for name in loaded.file.modules.keys() {
                    resolver.resolve(name)?;
                    names.push(name.clone());
                }
                let assoc = loaded.algebra.is_associative();
                let v = json!({
                    "dim": loaded.algebra.dim(),
                    "associative": assoc,
                    "modules_checked": names,
                });
                Ok(Outcome::verdict(
                    assoc,
                    v,
                    format!("dimension {}, associative: {assoc}", loaded.algebra.dim()),
                ))
            }
        },
        Command::Module { cmd } => module_cmd(&env, cmd),
        Command::Ar {
            cmd: ArCmd::Roster { algebra },
        } => {
            let loaded = env.load(algebra)?;
            let roster = env.roster(&loaded.algebra, None)?;
            let labels = Labeler::for_file(&loaded, seed)?;
            let mut v = roster_json(&roster);
            for (i, m) in roster.modules.iter().enumerate() {
                v["modules"][i]["label"] = json!(labels.label(m)?);
            }
            Ok(Outcome::ok(v, format!("{} indecomposables", roster.len())))
        }
        Command::Tilting {
            cmd: TiltingCmd::Check { algebra, module },
        } => {
            let loaded = env.load(algebra)?;
            let t = ModuleResolver::new(&loaded).resolve(module)?;
            let cert = is_tilting(&t, cli.cap, seed)?;
            let labels = Labeler::for_file(&loaded, seed)?;
            let v = report::tilting(&cert, &labels)?;
            let summary = format!(
                "pd {}, dim Ext1(T,T) = {}, {} of {} summands: tilting {}",
                cert.partial.pd,
                cert.partial.ext1_dim,
                cert.summands.len(),
                cert.vertex_count,
                cert.is_tilting
            );
            Ok(Outcome::verdict(cert.is_tilting, v, summary))
        }
        Command::Torsion { cmd } => torsion_cmd(&env, cmd),
        Command::Rec { cmd } => rec_cmd(&env, cmd),
        Command::Golden {
            cmd: GoldenCmd::Regen { fixtures },
        } => {
            let written = golden::regenerate(fixtures, seed)?;
            let names: Vec<String> = written.iter().map(|p| p.display().to_string()).collect();
            Ok(Outcome::ok(
                json!({ "written": names }),
                format!("{} golden files", names.len()),
            ))
        }
    }
}

fn module_cmd(env: &Env, cmd: &ModuleCmd) -> R<Outcome> {
    let seed = env.cli.seed;
    match cmd {
        ModuleCmd::Hom {
            algebra,
            source,
            target,
        } => {
            let loaded = env.load(algebra)?;
            let r = ModuleResolver::new(&loaded);
            let (m, n) = (r.resolve(source)?, r.resolve(target)?);
            let basis = hom_basis(&m, &n);
            let v = json!({
                "dim": basis.len(),
                "basis": basis.iter().map(morphism_json).collect::<Vec<_>>(),
            });
            Ok(Outcome::ok(v, format!("dim Hom = {}", basis.len())))
        }
        ModuleCmd::Ext {
            algebra,
            source,
            target,
            degree,
        } => {
            let loaded = env.load(algebra)?;
            let r = ModuleResolver::new(&loaded);
            let (m, n) = (r.resolve(source)?, r.resolve(target)?);
            let v = if *degree == 1 {
                let e = ext1(&m, &n)?;
                let middles: Vec<Value> = (0..e.dim())
                    .map(|k| {
                        let mut coeffs =
                            vec![rectilt_core::Rational::from_integer(0.into()); e.dim()];
                        coeffs[k] = rectilt_core::Rational::from_integer(1.into());
                        let ses = e.realize(&coeffs)?;
                        Ok(json!({
                            "middle_dims": ses.middle().dims(),
                            "split": ses.is_split(),
                        }))
                    })
                    .collect::<R<_>>()?;
                json!({ "degree": 1, "dim": e.dim(), "basis_extensions": middles })
            } else {
                json!({ "degree": degree, "dim": ext_k(&m, &n, *degree, env.cli.cap)? })
            };
            let summary = format!("dim Ext^{degree} = {}", v["dim"]);
            Ok(Outcome::ok(v, summary))
        }
        ModuleCmd::Decompose { algebra, module } => {
            let loaded = env.load(algebra)?;
            let m = ModuleResolver::new(&loaded).resolve(module)?;
            let labels = Labeler::for_file(&loaded, seed)?;
            let mut summands = decompose(&m, seed)?.summands;
            summands.sort_by_cached_key(Representation::canonical_key);
            let v = json!({
                "count": summands.len(),
                "labels": labels.names(&summands)?,
                "summands": summands.iter().map(|s| labels.module(s)).collect::<R<Vec<_>>>()?,
            });
            Ok(Outcome::ok(
                v,
                format!("{} indecomposable summands", summands.len()),
            ))
        }
        ModuleCmd::Iso {
            algebra,
            first,
            second,
        } => {
            let loaded = env.load(algebra)?;
            let r = ModuleResolver::new(&loaded);
            let (m, n) = (r.resolve(first)?, r.resolve(second)?);
            let iso = is_isomorphic(&m, &n, seed)?;
            let v = json!({
                "isomorphic": iso.is_some(),
                "witness": iso.as_ref().map(morphism_json),
            });
            let found = iso.is_some();
            Ok(Outcome::verdict(found, v, format!("isomorphic: {found}")))
        }
    }
}

fn torsion_cmd(env: &Env, cmd: &TorsionCmd) -> R<Outcome> {
    let seed = env.cli.seed;
    let require_tilting = |t: &Representation| -> R<()> {
        if is_tilting(t, env.cli.cap, seed)?.is_tilting {
            Ok(())
        } else {
            Err(Error::HypothesisFailed {
                culprit: "T".into(),
                detail: "not tilting".into(),
            })
        }
    };
    match cmd {
        TorsionCmd::Partition {
            algebra,
            tilting,
            roster,
        } => {
            let loaded = env.load(algebra)?;
            let t = ModuleResolver::new(&loaded).resolve(tilting)?;
            require_tilting(&t)?;
            let roster = env.roster(&loaded.algebra, roster.as_deref())?;
            let part = partition_roster(&t, &roster)?;
            let labels = Labeler::for_file(&loaded, seed)?;
            let v = report::partition(&roster, &labels, &part)?;
            let summary = format!(
                "{} torsion, {} free, {} neither",
                part.torsion.len(),
                part.free.len(),
                part.neither.len()
            );
            Ok(Outcome::ok(v, summary))
        }
        TorsionCmd::Decompose {
            algebra,
            tilting,
            module,
        } => {
            let loaded = env.load(algebra)?;
            let r = ModuleResolver::new(&loaded);
            let (t, m) = (r.resolve(tilting)?, r.resolve(module)?);
            require_tilting(&t)?;
            let ses = torsion_decompose(&t, &m)?;
            let labels = Labeler::for_file(&loaded, seed)?;
            let v = json!({
                "membership": classify(&t, &m)?,
                "torsion_part": labels.module(ses.left())?,
                "free_part": labels.module(ses.right())?,
                "torsion_part_in_gen": gen_member(&t, ses.left())?,
                "free_part_in_perp": perp_member(&t, ses.right())?,
            });
            let summary = format!(
                "torsion part {}, free part {}",
                ses.left().dims_label(),
                ses.right().dims_label()
            );
            Ok(Outcome::ok(v, summary))
        }
        TorsionCmd::Pair {
            algebra,
            torsion,
            free,
            roster,
        } => {
            let loaded = env.load(algebra)?;
            let r = ModuleResolver::new(&loaded);
            let tclass = torsion
                .iter()
                .map(|s| r.resolve(s))
                .collect::<R<Vec<_>>>()?;
            let fclass = free.iter().map(|s| r.resolve(s)).collect::<R<Vec<_>>>()?;
            let roster = env.roster(&loaded.algebra, roster.as_deref())?;
            let labels = Labeler::for_file(&loaded, seed)?;
            let witness = match is_torsion_pair(&tclass, &fclass, &roster, seed)? {
                None => Value::Null,
                Some(TorsionPairWitness::NonzeroHom {
                    torsion: i,
                    free: j,
                    map,
                }) => json!({
                    "kind": "nonzero_hom",
                    "torsion": torsion[i],
                    "free": free[j],
                    "map": morphism_json(&map),
                }),
                Some(TorsionPairWitness::NoSequence {
                    roster_index,
                    detail,
                }) => json!({
                    "kind": "no_sequence",
                    "roster_index": roster_index,
                    "module": labels.label(&roster.modules[roster_index])?,
                    "detail": detail,
                }),
            };
            let pass = witness.is_null();
            let v = json!({ "torsion_pair": pass, "witness": witness });
            Ok(Outcome::verdict(pass, v, format!("torsion pair: {pass}")))
        }
    }
}

fn rec_cmd(env: &Env, cmd: &RecCmd) -> R<Outcome> {
    let seed = env.cli.seed;
    let cap = env.cli.cap;
    match cmd {
        RecCmd::Split { algebra, outer } => {
            let loaded = env.load(algebra)?;
            let ctx = env.context(&loaded, outer)?;
            let q = loaded.algebra.quiver();
            let names = |vs: &[usize]| {
                vs.iter()
                    .map(|&v| q.vertices()[v].clone())
                    .collect::<Vec<_>>()
            };
            let v = json!({
                "lambda_dim": loaded.algebra.dim(),
                "inner": names(ctx.inner()),
                "outer": names(ctx.outer()),
                "lambda_prime": algebra_json(ctx.lambda_prime()),
                "lambda_dprime": algebra_json(ctx.lambda_dprime()),
                "bimodule_dim": ctx.bimodule_dim(),
                "cross_arrows": ctx.cross_arrows().iter().map(|&a| q.arrows()[a].name.clone()).collect::<Vec<_>>(),
            });
            let summary = format!(
                "dim Λ = {} = {} + {} + {}",
                loaded.algebra.dim(),
                ctx.lambda_prime().dim(),
                ctx.bimodule_dim(),
                ctx.lambda_dprime().dim()
            );
            Ok(Outcome::ok(v, summary))
        }
        RecCmd::Apply {
            algebra,
            outer,
            functor,
            module,
        } => {
            let loaded = env.load(algebra)?;
            let ctx = env.context(&loaded, outer)?;
            let empty = BTreeMap::new();
            let over_lambda = || ModuleResolver::new(&loaded).resolve(module);
            let (input, image) = match functor.as_str() {
                "i*" | "i^*" => {
                    let m = over_lambda()?;
                    (m.clone(), ctx.i_upper_star(&m)?)
                }
                "i!" | "i^!" => {
                    let m = over_lambda()?;
                    (m.clone(), ctx.i_shriek(&m)?)
                }
                "j*" | "j^*" => {
                    let m = over_lambda()?;
                    (m.clone(), ctx.j_star_upper(&m)?)
                }
                "i_*" => {
                    let m = ModuleResolver::bare(ctx.lambda_prime(), &empty).resolve(module)?;
                    (m.clone(), ctx.i_star(&m)?)
                }
                "j_!" => {
                    let m = ModuleResolver::bare(ctx.lambda_dprime(), &empty).resolve(module)?;
                    (m.clone(), ctx.j_shriek(&m)?)
                }
                "j_*" => {
                    let m = ModuleResolver::bare(ctx.lambda_dprime(), &empty).resolve(module)?;
                    (m.clone(), ctx.j_star_lower(&m)?)
                }
                other => {
                    return Err(Error::InvalidInput(format!(
                        "unknown functor {other:?}; expected one of i*, i_*, i!, j_!, j*, j_*"
                    )))
                }
            };
            let labeler = |m: &Representation| -> R<Labeler> {
                if m.algebra().same_as(&loaded.algebra) {
                    Labeler::for_file(&loaded, seed)
                } else {
                    Ok(Labeler::standard(m.algebra(), seed))
                }
            };
            let v = json!({
                "functor": functor,
                "input": labeler(&input)?.module(&input)?,
                "output": labeler(&image)?.module(&image)?,
            });
            let summary = format!(
                "{functor}: {} -> {}",
                input.dims_label(),
                image.dims_label()
            );
            Ok(Outcome::ok(v, summary))
        }
        RecCmd::Check { algebra, outer } => {
            let loaded = env.load(algebra)?;
            let ctx = env.context(&loaded, outer)?;
            let exactness = ctx.check_exactness()?;
            let rl = env.roster(ctx.lambda(), None)?;
            let rp = env.roster(ctx.lambda_prime(), None)?;
            let rd = env.roster(ctx.lambda_dprime(), None)?;
            let identities = ctx.verify_identities(&rl.modules, &rp.modules, &rd.modules, seed)?;
            let pass = identities.all_passed();
            let inexact: Vec<&str> = exactness
                .all()
                .iter()
                .filter(|f| !f.exact)
                .map(|f| f.functor.as_str())
                .collect();
            let v = json!({
                "exactness": exactness,
                "identities": identities,
                "roster_sizes": { "lambda": rl.len(), "lambda_prime": rp.len(), "lambda_dprime": rd.len() },
            });
            let summary = format!(
                "not exact: [{}]; identities {}",
                inexact.join(", "),
                if pass { "hold" } else { "FAIL" }
            );
            Ok(Outcome::verdict(pass, v, summary))
        }
        RecCmd::Glue {
            algebra,
            outer,
            inner_tilting,
            outer_tilting,
        } => {
            let loaded = env.load(algebra)?;
            let ctx = env.context(&loaded, outer)?;
            let empty = BTreeMap::new();
            let inner = ModuleResolver::bare(ctx.lambda_prime(), &empty).resolve(inner_tilting)?;
            let outer_t =
                ModuleResolver::bare(ctx.lambda_dprime(), &empty).resolve(outer_tilting)?;
            let spec = GluedPairSpec::new(ctx.clone(), inner, outer_t)?;
            let roster = env.roster(ctx.lambda(), None)?;
            let cert = glue_tilting(&spec, &roster, cap, seed)?;
            let labels = Labeler::for_file(&loaded, seed)?;
            let v = report::glue(&cert, &roster, &labels)?;
            let summary = format!(
                "n = {}, T = {}; partition {} torsion / {} free; certified {}",
                cert.n,
                labels.names(&cert.summands)?.join(" + "),
                cert.partition.torsion.len(),
                cert.partition.free.len(),
                cert.passes
            );
            Ok(Outcome::verdict(cert.passes, v, summary))
        }
        RecCmd::Restrict {
            algebra,
            outer,
            tilting,
            side,
        } => {
            let loaded = env.load(algebra)?;
            let ctx = env.context(&loaded, outer)?;
            let t = ModuleResolver::new(&loaded).resolve(tilting)?;
            let roster = env.roster(ctx.lambda(), None)?;
            let labels = Labeler::for_file(&loaded, seed)?;
            let (cert, part_alg, hyp) = match side {
                SideArg::Left => {
                    let rp = env.roster(ctx.lambda_prime(), None)?;
                    (
                        restrict_left(&ctx, &t, &roster, &rp, cap, seed)?,
                        ctx.lambda_prime(),
                        None,
                    )
                }
                SideArg::Right => {
                    let rd = env.roster(ctx.lambda_dprime(), None)?;
                    let hyp = check_restriction_hypotheses(&ctx, &t, &roster)?;
                    (
                        restrict_right(&ctx, &t, &roster, &rd, cap, seed)?,
                        ctx.lambda_dprime(),
                        Some(hyp),
                    )
                }
            };
            debug_assert_eq!(
                cert.side,
                if matches!(side, SideArg::Left) {
                    Side::Left
                } else {
                    Side::Right
                }
            );
            let part_labels = Labeler::standard(part_alg, seed);
            let mut v = report::restriction(&cert, &part_labels)?;
            v["restriction_hypotheses"] = match &hyp {
                Some(h) => report::hypotheses(h, &roster, &labels)?,
                None => Value::Null,
            };
            let summary = format!(
                "restricted module {} tilting {}; hypotheses hold {}; partition equality {}",
                part_labels.names(&cert.certificate.summands)?.join(" + "),
                cert.certificate.is_tilting,
                cert.hypotheses_hold,
                cert.partition_equal
            );
            Ok(Outcome::verdict(cert.certificate.is_tilting, v, summary))
        }
    }
}

//! Command-line surface: argument parsing, dispatch, result caching, and
//! JSON reporting.
//!
//! Every subcommand prints one JSON document to stdout and exits 0 when the
//! command ran, whether or not the mathematical verdict inside is favorable.
//! Exit code 2 means the arguments were unusable. Reports are deterministic
//! for a fixed seed, so `--cache` can replay them byte for byte.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::bounds::{
    bound_binary_sv, bound_flag, bound_g2n, bound_grassmannian, bound_lagrangian_spinor,
    bound_moments, bound_powers, bound_segre_veronese, bound_toric, IsotropicEmbedding,
};
use crate::certify::certify;
use crate::descriptor::VarietySpec;
use crate::error::{Error, Result};
use crate::field::DEFAULT_PRIMES;
use crate::lattice::{sublattice_report, toric_bound, LatticePolytope};
use crate::sample::{resolve_seed, RankOptions};
use crate::secant::secant_dim;
use crate::tangency::{contact_locus_dim, gauss_rank};
use crate::variety::make_toric;
use crate::witness::{rnc_tangential_projection_seeded, decomposition_witnesses, verify_counterexample};
use crate::SCHEMA_VERSION;

#[derive(Parser)]
#[command(
    name = "terracini",
    version,
    about = "Exact-arithmetic toolkit for secant dimensions, tangential degeneracy, \
             and identifiability of parametrized projective varieties"
)]
pub struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Common {
    /// Seed for randomized sampling; overrides the TERRACINI_SEED variable.
    #[arg(long)]
    seed: Option<u64>,
    /// Independent trials per prime for randomized rank estimates.
    #[arg(long, default_value_t = 3)]
    trials: u64,
    /// JSONL result cache; hits replay the stored report verbatim.
    #[arg(long)]
    cache: Option<PathBuf>,
}

impl Common {
    fn opts(&self) -> RankOptions {
        RankOptions {
            seed: resolve_seed(self.seed),
            trials: self.trials,
            primes: DEFAULT_PRIMES.to_vec(),
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Certify h-identifiability via the three-check pipeline.
    Certify {
        /// Variety descriptor, e.g. veronese:2:5 or secant:rnc:11:2.
        #[arg(long)]
        variety: String,
        #[arg(long)]
        h: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Decide h-defectiveness: actual vs expected secant dimension.
    Defect {
        #[arg(long)]
        variety: String,
        #[arg(long)]
        h: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Rank of the map sending a general point to its tangent plane.
    Gauss {
        #[arg(long)]
        variety: String,
        #[command(flatten)]
        common: Common,
    },
    /// Dimension of the tangential contact locus for h general points.
    Contact {
        #[arg(long)]
        variety: String,
        #[arg(long)]
        h: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Closed-form identifiability bounds for named families.
    Bound {
        /// One of: segre-veronese, binary-sv, flag, grassmannian, g2n,
        /// lagrangian-spinor, moments, powers, toric.
        #[arg(long)]
        family: String,
        /// Dimension parameter(s); a comma list for product families.
        #[arg(long, value_delimiter = ',')]
        n: Option<Vec<u64>>,
        /// Degree parameter(s); a comma list for product families.
        #[arg(long, value_delimiter = ',')]
        d: Option<Vec<u64>>,
        /// Flag steps, comma separated.
        #[arg(long, value_delimiter = ',')]
        k: Option<Vec<u64>>,
        /// Plane dimension for grassmannian.
        #[arg(long)]
        r: Option<u64>,
        /// Inner exponent for powers.
        #[arg(long)]
        a: Option<u64>,
        /// Embedding tag for lagrangian-spinor: lagrangian, spinor-pluecker,
        /// or spinor-minimal.
        #[arg(long)]
        embedding: Option<String>,
        /// Polytope file for the toric family.
        #[arg(long)]
        polytope: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Exact rational witnesses: decompositions, projections, dossiers.
    Witness {
        /// Base variety X: emit decompositions refuting h-identifiability
        /// of the r-th secant of X. Requires --r and --h.
        #[arg(long)]
        variety: Option<String>,
        /// Secant index of the base variety, or the block size for
        /// --counterexample.
        #[arg(long)]
        r: Option<usize>,
        /// Identifiability level being refuted.
        #[arg(long)]
        h: Option<usize>,
        /// Verify the full counterexample dossier for the degree-N curve.
        #[arg(long)]
        counterexample: bool,
        /// Project the degree-N curve from t tangent lines and report the
        /// image.
        #[arg(long)]
        projection: bool,
        /// Curve degree N for --counterexample and --projection.
        #[arg(long)]
        n: Option<usize>,
        /// Number of tangent lines for --projection.
        #[arg(long)]
        t: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Inspect a lattice polytope file: points, ranks, toric variety data.
    Polytope {
        /// Path to a whitespace-separated lattice point file.
        #[arg(long)]
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

fn usage_error(kind: &Error) -> bool {
    matches!(kind, Error::Parse(_) | Error::InvalidInput(_) | Error::Io(_))
}

/// Entry point used by the binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    run_cmd(&cli.cmd)
}

/// Prints to stdout, treating a closed pipe (e.g. `| head`) as a clean stop.
fn emit(text: &str) -> bool {
    use std::io::ErrorKind;
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{text}").and_then(|()| out.flush()) {
        Ok(()) => true,
        Err(e) if e.kind() == ErrorKind::BrokenPipe => false,
        Err(e) => {
            eprintln!("error: could not write report: {e}");
            false
        }
    }
}

fn run_cmd(cmd: &Cmd) -> i32 {
    let common = common_of(cmd);
    let key = cache_key(cmd, common);
    if let Some(path) = &common.cache {
        if let Some(hit) = cache_lookup(path, &key) {
            emit(&hit);
            return 0;
        }
    }
    let out = match dispatch(cmd, common) {
        Ok(out) => out,
        Err(e) if usage_error(&e) => {
            eprintln!("error: {e}");
            eprintln!("run `terracini <command> --help` for usage");
            return 2;
        }
        Err(Error::HypothesisFailed(msg)) => {
            // Refusals are verdicts about the input, not tool failures; they
            // are reported in JSON and cached like any other outcome.
            render(&json!({
                "schema_version": SCHEMA_VERSION,
                "refused": msg,
            }))
        }
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    if !emit(&out) {
        return 0;
    }
    if let Some(path) = &common.cache {
        if let Err(e) = cache_append(path, &key, &out) {
            eprintln!("warning: could not update result cache: {e}");
        }
    }
    0
}

fn common_of(cmd: &Cmd) -> &Common {
    match cmd {
        Cmd::Certify { common, .. }
        | Cmd::Defect { common, .. }
        | Cmd::Gauss { common, .. }
        | Cmd::Contact { common, .. }
        | Cmd::Bound { common, .. }
        | Cmd::Witness { common, .. }
        | Cmd::Polytope { common, .. } => common,
    }
}

fn list_arg(v: &Option<Vec<u64>>) -> String {
    v.as_ref()
        .map(|xs| xs.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
        .unwrap_or_default()
}

/// Canonical cache key: command, canonical arguments, seed, primes, trials.
fn cache_key(cmd: &Cmd, common: &Common) -> String {
    let args = match cmd {
        Cmd::Certify { variety, h, .. } => format!("certify|variety={variety}|h={h}"),
        Cmd::Defect { variety, h, .. } => format!("defect|variety={variety}|h={h}"),
        Cmd::Gauss { variety, .. } => format!("gauss|variety={variety}"),
        Cmd::Contact { variety, h, .. } => format!("contact|variety={variety}|h={h}"),
        Cmd::Bound { family, n, d, k, r, a, embedding, polytope, .. } => format!(
            "bound|family={family}|n={}|d={}|k={}|r={}|a={}|embedding={}|polytope={}",
            list_arg(n),
            list_arg(d),
            list_arg(k),
            r.map(|v| v.to_string()).unwrap_or_default(),
            a.map(|v| v.to_string()).unwrap_or_default(),
            embedding.clone().unwrap_or_default(),
            polytope.as_ref().map(|p| p.display().to_string()).unwrap_or_default(),
        ),
        Cmd::Witness { variety, r, h, counterexample, projection, n, t, .. } => format!(
            "witness|variety={}|r={}|h={}|counterexample={counterexample}|projection={projection}|n={}|t={}",
            variety.clone().unwrap_or_default(),
            r.map(|v| v.to_string()).unwrap_or_default(),
            h.map(|v| v.to_string()).unwrap_or_default(),
            n.map(|v| v.to_string()).unwrap_or_default(),
            t.map(|v| v.to_string()).unwrap_or_default(),
        ),
        Cmd::Polytope { file, .. } => format!("polytope|file={}", file.display()),
    };
    let primes =
        DEFAULT_PRIMES.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
    format!(
        "{args}|seed={}|trials={}|primes={primes}",
        resolve_seed(common.seed),
        common.trials
    )
}

fn render<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn canonical_spec(raw: &str) -> Result<VarietySpec> {
    VarietySpec::parse(raw)
}

fn dispatch(cmd: &Cmd, common: &Common) -> Result<String> {
    let opts = common.opts();
    match cmd {
        Cmd::Certify { variety, h, .. } => {
            let spec = canonical_spec(variety)?;
            Ok(render(&certify(&spec, *h, &opts)?))
        }
        Cmd::Defect { variety, h, .. } => {
            let x = canonical_spec(variety)?.resolve()?;
            Ok(render(&secant_dim(&x, *h, &opts)?))
        }
        Cmd::Gauss { variety, .. } => {
            let x = canonical_spec(variety)?.resolve()?;
            Ok(render(&gauss_rank(&x, &opts)?))
        }
        Cmd::Contact { variety, h, .. } => {
            let x = canonical_spec(variety)?.resolve()?;
            Ok(render(&contact_locus_dim(&x, *h, &opts)?))
        }
        Cmd::Bound { family, n, d, k, r, a, embedding, polytope, .. } => {
            bound_dispatch(family, n, d, k, *r, *a, embedding.as_deref(), polytope.as_deref())
        }
        Cmd::Witness { variety, r, h, counterexample, projection, n, t, .. } => {
            witness_dispatch(
                variety.as_deref(),
                *r,
                *h,
                *counterexample,
                *projection,
                *n,
                *t,
                &opts,
            )
        }
        Cmd::Polytope { file, .. } => polytope_inspect(file),
    }
}

fn need<T: Copy>(flag: &str, v: Option<T>) -> Result<T> {
    v.ok_or_else(|| Error::InvalidInput(format!("missing required argument --{flag}")))
}

fn need_list<'a>(flag: &str, v: &'a Option<Vec<u64>>) -> Result<&'a [u64]> {
    match v {
        Some(xs) if !xs.is_empty() => Ok(xs),
        _ => Err(Error::InvalidInput(format!("missing required argument --{flag}"))),
    }
}

fn need_scalar(flag: &str, v: &Option<Vec<u64>>) -> Result<u64> {
    let xs = need_list(flag, v)?;
    if xs.len() != 1 {
        return Err(Error::InvalidInput(format!("--{flag} takes a single value here")));
    }
    Ok(xs[0])
}

#[allow(clippy::too_many_arguments)]
fn bound_dispatch(
    family: &str,
    n: &Option<Vec<u64>>,
    d: &Option<Vec<u64>>,
    k: &Option<Vec<u64>>,
    r: Option<u64>,
    a: Option<u64>,
    embedding: Option<&str>,
    polytope: Option<&Path>,
) -> Result<String> {
    let report = match family {
        "segre-veronese" | "sv" => {
            bound_segre_veronese(need_list("n", n)?, need_list("d", d)?)?
        }
        "binary-sv" => bound_binary_sv(need_list("d", d)?)?,
        "flag" => bound_flag(need_list("k", k)?, need_scalar("n", n)?)?,
        "grassmannian" | "grass" => {
            bound_grassmannian(need("r", r)?, need_scalar("n", n)?)?
        }
        "g2n" => bound_g2n(need_scalar("n", n)?)?,
        "lagrangian-spinor" => bound_lagrangian_spinor(
            need_scalar("n", n)?,
            IsotropicEmbedding::parse(embedding.unwrap_or("lagrangian"))?,
        )?,
        "moments" => bound_moments(need_scalar("d", d)?)?,
        "powers" => {
            bound_powers(need("a", a)?, need_scalar("d", d)?, need_scalar("n", n)?)?
        }
        "toric" => {
            let path = polytope
                .ok_or_else(|| Error::InvalidInput("missing required argument --polytope".into()))?;
            bound_toric(&LatticePolytope::load(path)?)?
        }
        other => {
            return Err(Error::InvalidInput(format!("unknown bound family {other:?}")));
        }
    };
    Ok(render(&report))
}

#[allow(clippy::too_many_arguments)]
fn witness_dispatch(
    variety: Option<&str>,
    r: Option<usize>,
    h: Option<usize>,
    counterexample: bool,
    projection: bool,
    n: Option<usize>,
    t: Option<usize>,
    opts: &RankOptions,
) -> Result<String> {
    let modes = usize::from(counterexample) + usize::from(projection) + usize::from(variety.is_some());
    if modes != 1 {
        return Err(Error::InvalidInput(
            "pick exactly one of --counterexample, --projection, or --variety".into(),
        ));
    }
    if counterexample {
        let dossier = verify_counterexample(need("n", n)?, need("r", r)?, opts)?;
        return Ok(render(&dossier));
    }
    if projection {
        let report = rnc_tangential_projection_seeded(need("n", n)?, need("t", t)?, opts)?;
        return Ok(render(&report));
    }
    let x = canonical_spec(variety.expect("mode checked"))?.resolve()?;
    let report = decomposition_witnesses(&x, need("r", r)?, need("h", h)?, opts)?;
    Ok(render(&report))
}

fn polytope_inspect(file: &Path) -> Result<String> {
    let poly = LatticePolytope::load(file)?;
    let sub = sublattice_report(&poly);
    let data = toric_bound(&poly);
    let variety = make_toric(&format!("polytope:{}", file.display()), &poly)?;
    Ok(render(&json!({
        "schema_version": SCHEMA_VERSION,
        "file": file.display().to_string(),
        "points": poly.points(),
        "npoints": poly.npoints(),
        "ambient_lattice_rank": poly.ambient(),
        "affine_rank": poly.affine_rank(),
        "difference_sublattice": {
            "rho": sub.rho,
            "quotient_rank": sub.quotient_rank,
            "divisors": sub.divisors.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
            "bset_size": sub.bset_size,
        },
        "identifiability_bound": {
            "npoints": data.npoints,
            "max_hyperplane_points": data.m,
            "dim": data.n,
            "bound": data.bound,
        },
        "variety": {
            "name": variety.name(),
            "dim": variety.dim(),
            "ambient": variety.ambient(),
        },
    })))
}

fn cache_lookup(path: &Path, key: &str) -> Option<String> {
    let text = fs::read_to_string(path).ok()?;
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let parsed: Option<(String, String)> = serde_json::from_str::<serde_json::Value>(line)
            .ok()
            .and_then(|v| {
                Some((
                    v.get("key")?.as_str()?.to_string(),
                    v.get("output")?.as_str()?.to_string(),
                ))
            });
        let Some((k, out)) = parsed else {
            eprintln!(
                "warning: result cache {} is corrupt; ignoring it for this run",
                path.display()
            );
            return None;
        };
        if k == key {
            return Some(out);
        }
    }
    None
}

fn cache_append(path: &Path, key: &str, output: &str) -> std::io::Result<()> {
    let line = serde_json::to_string(&json!({ "key": key, "output": output }))
        .expect("cache line serializes");
    let mut f = fs::OpenOptions::new().create(true).append(true).open(path)?;
    writeln!(f, "{line}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cache_round_trip_and_corruption() {
        let dir = std::env::temp_dir().join(format!("terracini-cache-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cache.jsonl");
        let _ = fs::remove_file(&path);
        assert!(cache_lookup(&path, "k").is_none());
        cache_append(&path, "k", "{\"x\": 1}").unwrap();
        cache_append(&path, "k2", "{\"x\": 2}").unwrap();
        assert_eq!(cache_lookup(&path, "k").as_deref(), Some("{\"x\": 1}"));
        assert_eq!(cache_lookup(&path, "k2").as_deref(), Some("{\"x\": 2}"));
        fs::write(&path, "not json\n").unwrap();
        assert!(cache_lookup(&path, "k").is_none());
        fs::remove_file(&path).unwrap();
    }

    #[test]
    fn bound_dispatch_matches_direct_calls() {
        let out = bound_dispatch(
            "binary-sv",
            &None,
            &Some(vec![3, 3, 3]),
            &None,
            None,
            None,
            None,
            None,
        )
        .unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["h_bound"], 16);
        assert!(bound_dispatch("binary-sv", &None, &None, &None, None, None, None, None).is_err());
        assert!(bound_dispatch("nope", &None, &None, &None, None, None, None, None).is_err());
    }

    #[test]
    fn witness_dispatch_requires_one_mode() {
        let opts = RankOptions::with_seed(1);
        assert!(witness_dispatch(None, None, None, false, false, None, None, &opts).is_err());
        assert!(
            witness_dispatch(Some("rnc:7"), Some(2), Some(2), true, false, Some(7), None, &opts)
                .is_err()
        );
    }
}

//! `young` — command-line front end for p-Kostka numbers, Young module
//! decompositions, and the indecomposability classification.
//!
//! Output schema (versioned by the crate version stamped into cached
//! entries): every numeric answer carries the list of rule names that
//! produced it, `--format json` emits one canonical JSON document on stdout.
//! Exit codes: 0 success, 2 unresolved (budget refusal), 1 input error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use young::character::{block_split, permutation_character};
use young::engine::{pkostka, two_part_pkostka};
use young::indec::{indecomposable_partitions, is_indecomposable};
use young::oracle::{Oracle, OracleConfig};
use young::partition::partitions_of;
use young::{Partition, YoungError, ENGINE_VERSION};

#[derive(Parser)]
#[command(name = "young", version, about = "p-Kostka numbers and Young permutation modules")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Accept unsorted partition input and sort it decreasingly
    #[arg(long, global = true)]
    compose: bool,
    /// Master seed for every randomized oracle step
    #[arg(long, global = true, default_value_t = 0x59a0)]
    seed: u64,
    /// Cache directory; overrides the YOUNG_CACHE_DIR environment variable
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the p-Kostka number [M^λ : Y^μ]
    Pkostka {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        /// Cap on the dimension of any module the base oracle builds
        #[arg(long, default_value_t = 3000)]
        budget: u64,
    },
    /// Classify indecomposability: all of degree R, or one λ
    Indec {
        #[arg(long)]
        p: u32,
        #[arg(long, conflicts_with = "lambda", required_unless_present = "lambda")]
        degree: Option<u64>,
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Ordinary character of M^λ, optionally split into p-blocks
    Character {
        #[arg(long)]
        lambda: String,
        /// Split the character by p-block for this prime
        #[arg(long)]
        blocks: Option<u32>,
    },
    /// Direct access to the brute-force decomposition oracle
    Oracle {
        #[command(subcommand)]
        cmd: OracleCmd,
    },
    /// Run a named verification suite and print a pass/fail table
    Verify { suite: String },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Decompose M^λ over F_p into labeled Young modules
    Decompose {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        lambda: String,
    },
    /// The full table [M^λ : Y^μ] for all λ ⊢ R
    Table {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        degree: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    let cache = CacheStore::open(cli);
    match &cli.cmd {
        Command::Pkostka { p, lambda, mu, budget } => {
            let lam = parse_partition(lambda, cli.compose)?;
            let m = parse_partition(mu, cli.compose)?;
            let key = CacheKey::new("pkostka", *p, format!("{lam}|{m}|b{budget}"), cli.seed);
            let value = cache.get_or_compute(&key, || {
                let res = pkostka(&lam, &m, *p, *budget).map_err(show)?;
                let rules: Vec<&str> = res.trace.iter().map(|s| s.rule).collect();
                Ok(serde_json::json!({
                    "multiplicity": res.value,
                    "kind": res.kind,
                    "trace": rules,
                }))
            })?;
            let unresolved = value["kind"] == "unresolved";
            match cli.format {
                Format::Json => println!("{value}"),
                Format::Text => {
                    let trace: Vec<String> = value["trace"]
                        .as_array()
                        .unwrap_or(&Vec::new())
                        .iter()
                        .map(|v| v.as_str().unwrap_or("?").to_string())
                        .collect();
                    match value["multiplicity"].as_u64() {
                        Some(v) => println!(
                            "[M^{lam} : Y^{m}] = {v} ({})",
                            value["kind"].as_str().unwrap_or("?")
                        ),
                        None => println!("[M^{lam} : Y^{m}] unresolved within budget {budget}"),
                    }
                    println!("trace: {}", trace.join(", "));
                }
            }
            Ok(ExitCode::from(if unresolved { 2 } else { 0 }))
        }
        Command::Indec { p, degree, lambda } => match (degree, lambda) {
            (Some(r), None) => {
                let list = indecomposable_partitions(*r, *p).map_err(show)?;
                match cli.format {
                    Format::Json => {
                        let parts: Vec<&[u32]> = list.iter().map(|l| l.parts()).collect();
                        println!(
                            "{}",
                            serde_json::json!({ "p": p, "degree": r, "indecomposable": parts })
                        );
                    }
                    Format::Text => {
                        for lam in &list {
                            println!("{lam}");
                        }
                    }
                }
                Ok(ExitCode::SUCCESS)
            }
            (None, Some(l)) => {
                let lam = parse_partition(l, cli.compose)?;
                let verdict = is_indecomposable(&lam, *p).map_err(show)?;
                match cli.format {
                    Format::Json => {
                        let mut v = verdict.to_json();
                        v["lambda"] = serde_json::json!(lam.parts());
                        v["p"] = serde_json::json!(p);
                        println!("{v}");
                    }
                    Format::Text => {
                        if verdict.indecomposable {
                            println!("M^{lam} is indecomposable over F_{p} (rule {})", verdict.rule);
                        } else {
                            print!("M^{lam} is decomposable over F_{p} (rule {})", verdict.rule);
                            match &verdict.witness {
                                Some(w) => println!("; witness summand Y^{w}"),
                                None => println!(),
                            }
                        }
                    }
                }
                Ok(ExitCode::SUCCESS)
            }
            _ => Err("indec needs exactly one of --degree or --lambda".into()),
        },
        Command::Character { lambda, blocks } => {
            let lam = parse_partition(lambda, cli.compose)?;
            let xi = permutation_character(&lam);
            match blocks {
                None => match cli.format {
                    Format::Json => println!(
                        "{}",
                        serde_json::json!({ "lambda": lam.parts(), "character": xi.to_json() })
                    ),
                    Format::Text => {
                        for (mu, mult) in xi.iter_desc() {
                            println!("{mult} · χ^{mu}");
                        }
                    }
                },
                Some(p) => {
                    if let Err(e) = young::error::check_prime(*p) {
                        return Err(show(e));
                    }
                    let split = block_split(&xi, *p);
                    match cli.format {
                        Format::Json => {
                            let items: Vec<serde_json::Value> = split
                                .iter()
                                .map(|(label, v)| {
                                    serde_json::json!({
                                        "core": label.core.parts(),
                                        "weight": label.weight,
                                        "character": v.to_json(),
                                    })
                                })
                                .collect();
                            println!(
                                "{}",
                                serde_json::json!({
                                    "lambda": lam.parts(), "p": p, "blocks": items
                                })
                            );
                        }
                        Format::Text => {
                            for (label, v) in &split {
                                println!("block core ({}) weight {}:", label.core, label.weight);
                                for (mu, mult) in v.iter_desc() {
                                    println!("  {mult} · χ^{mu}");
                                }
                            }
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { cmd } => {
            let oracle = Oracle::new(OracleConfig { seed: cli.seed, ..OracleConfig::desk_scale() });
            match cmd {
                OracleCmd::Decompose { p, lambda } => {
                    let lam = parse_partition(lambda, cli.compose)?;
                    let key =
                        CacheKey::new("oracle-decompose", *p, lam.to_string(), cli.seed);
                    let value = cache.get_or_compute(&key, || {
                        let rec = oracle.decompose(&lam, *p).map_err(show)?;
                        serde_json::to_value(&rec).map_err(|e| e.to_string())
                    })?;
                    match cli.format {
                        Format::Json => println!("{value}"),
                        Format::Text => {
                            println!(
                                "M^{lam} over F_{p} (dim {}):",
                                value["dimension"].as_u64().unwrap_or(0)
                            );
                            for s in value["summands"].as_array().unwrap_or(&Vec::new()) {
                                let mu: Vec<u64> = s["mu"]
                                    .as_array()
                                    .unwrap_or(&Vec::new())
                                    .iter()
                                    .filter_map(|v| v.as_u64())
                                    .collect();
                                let mu_str: Vec<String> =
                                    mu.iter().map(u64::to_string).collect();
                                println!(
                                    "  Y^({}) dim {} × {}",
                                    mu_str.join(","),
                                    s["dim"].as_u64().unwrap_or(0),
                                    s["mult"].as_u64().unwrap_or(0)
                                );
                            }
                        }
                    }
                    Ok(ExitCode::SUCCESS)
                }
                OracleCmd::Table { p, degree } => {
                    let key = CacheKey::new("oracle-table", *p, format!("r{degree}"), cli.seed);
                    let value = cache.get_or_compute(&key, || {
                        let table =
                            oracle.young_label_table(*degree, *p).map_err(show)?;
                        serde_json::to_value(&table).map_err(|e| e.to_string())
                    })?;
                    match cli.format {
                        Format::Json => println!("{value}"),
                        Format::Text => {
                            for row in value["rows"].as_array().unwrap_or(&Vec::new()) {
                                let lam = join_u64(&row["lambda"]);
                                let cols: Vec<String> = row["summands"]
                                    .as_array()
                                    .unwrap_or(&Vec::new())
                                    .iter()
                                    .map(|s| {
                                        format!(
                                            "Y^({})×{}",
                                            join_u64(&s["mu"]),
                                            s["mult"].as_u64().unwrap_or(0)
                                        )
                                    })
                                    .collect();
                                println!("M^({lam}) = {}", cols.join(" ⊕ "));
                            }
                        }
                    }
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
        Command::Verify { suite } => verify(suite, cli.seed),
    }
}

fn join_u64(v: &serde_json::Value) -> String {
    v.as_array()
        .unwrap_or(&Vec::new())
        .iter()
        .filter_map(|x| x.as_u64())
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn show(e: YoungError) -> String {
    e.to_string()
}

/// Parses a comma-separated partition. Decreasing order is required unless
/// `compose` is set, in which case the parts are sorted.
fn parse_partition(s: &str, compose: bool) -> Result<Partition, String> {
    let mut parts = Vec::new();
    for tok in s.split(',') {
        let tok = tok.trim();
        let v: u32 = tok
            .parse()
            .map_err(|_| format!("malformed partition part '{tok}' in '{s}'"))?;
        parts.push(v);
    }
    if compose {
        parts.sort_unstable_by(|a, b| b.cmp(a));
    } else if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
        return Err(format!(
            "partition '{s}' is not decreasing at part '{}' (use --compose to sort)",
            w[1]
        ));
    }
    parts.retain(|&x| x > 0);
    Partition::new(parts).map_err(|e| e.to_string())
}

/// One stored result: the command key, the engine version and seed it was
/// computed under, and the serialized value. Version or seed mismatch
/// invalidates the entry.
#[derive(Serialize, Deserialize)]
struct CacheEntry {
    kind: String,
    p: u32,
    args: String,
    version: String,
    seed: u64,
    timestamp: u64,
    value: serde_json::Value,
}

struct CacheKey {
    kind: &'static str,
    p: u32,
    args: String,
    seed: u64,
}

impl CacheKey {
    fn new(kind: &'static str, p: u32, args: String, seed: u64) -> Self {
        CacheKey { kind, p, args, seed }
    }

    fn file_name(&self) -> String {
        let safe: String = self
            .args
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
            .collect();
        format!("{}-p{}-{}-s{:x}.json", self.kind, self.p, safe, self.seed)
    }
}

/// Disk cache: flag wins over YOUNG_CACHE_DIR; unusable directories disable
/// caching with a warning and the computation proceeds.
struct CacheStore {
    dir: Option<PathBuf>,
}

impl CacheStore {
    fn open(cli: &Cli) -> CacheStore {
        let dir = cli
            .cache_dir
            .clone()
            .or_else(|| std::env::var_os("YOUNG_CACHE_DIR").map(PathBuf::from));
        let dir = dir.and_then(|d| {
            if let Err(e) = fs::create_dir_all(&d) {
                eprintln!("warning: cache directory {} unusable ({e}); caching disabled", d.display());
                return None;
            }
            Some(d)
        });
        CacheStore { dir }
    }

    fn get_or_compute<F>(&self, key: &CacheKey, compute: F) -> Result<serde_json::Value, String>
    where
        F: FnOnce() -> Result<serde_json::Value, String>,
    {
        if let Some(hit) = self.load(key) {
            return Ok(hit);
        }
        let value = compute()?;
        self.store(key, &value);
        Ok(value)
    }

    fn load(&self, key: &CacheKey) -> Option<serde_json::Value> {
        let dir = self.dir.as_ref()?;
        let path = dir.join(key.file_name());
        let bytes = fs::read(&path).ok()?;
        match serde_json::from_slice::<CacheEntry>(&bytes) {
            Ok(entry) if entry.version == ENGINE_VERSION && entry.seed == key.seed => {
                Some(entry.value)
            }
            Ok(_) => None,
            Err(_) => {
                eprintln!("warning: corrupted cache entry {} ignored", path.display());
                None
            }
        }
    }

    fn store(&self, key: &CacheKey, value: &serde_json::Value) {
        let Some(dir) = self.dir.as_ref() else { return };
        let entry = CacheEntry {
            kind: key.kind.to_string(),
            p: key.p,
            args: key.args.clone(),
            version: ENGINE_VERSION.to_string(),
            seed: key.seed,
            timestamp: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            value: value.clone(),
        };
        if let Err(e) = write_atomic(&dir.join(key.file_name()), &entry) {
            eprintln!("warning: cache write failed ({e}); continuing");
        }
    }
}

fn write_atomic(path: &Path, entry: &CacheEntry) -> std::io::Result<()> {
    let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
    fs::write(&tmp, serde_json::to_vec(entry)?)?;
    fs::rename(&tmp, path)
}

/// Named verification suites; each prints one pass/fail line per check.
fn verify(suite: &str, seed: u64) -> Result<ExitCode, String> {
    let mut all_ok = true;
    let mut check = |name: &str, ok: bool| {
        println!("{} {name}", if ok { "PASS" } else { "FAIL" });
        all_ok &= ok;
    };
    match suite {
        "thm-1-1" => {
            // the oracle multiplicity is invariant under scaling both
            // partitions by p, at desk scale
            let oracle = Oracle::new(OracleConfig { seed, ..OracleConfig::desk_scale() });
            for (p, r) in [(2u32, 2u32), (2, 3), (3, 2)] {
                let mut ok = true;
                for lam in partitions_of(r) {
                    for mu in partitions_of(r) {
                        let small = oracle.pkostka(&lam, &mu, p).map_err(show)?;
                        let big =
                            oracle.pkostka(&lam.scale(p), &mu.scale(p), p).map_err(show)?;
                        ok &= small == big;
                    }
                }
                check(&format!("scale-invariance p={p} r={r}"), ok);
            }
        }
        "thm-addingp" => {
            // shifting a two-part query by (a·2^n, 0) / (a·2^n, 0) preserves
            // the parity-formula value when 2^n dominates both 2^s and λ_2
            let mut cases = 0u64;
            let mut ok = true;
            for r in (2u64..=20).step_by(2) {
                for j in 1..=r / 2 {
                    for s in 0..=j.min(3) {
                        for n in 1..=4u32 {
                            if (1u64 << n) <= (1 << s) || (1u64 << n) <= j {
                                continue;
                            }
                            for a in 1..=3u64 {
                                let base = two_part_pkostka(r, j, s, 2).map_err(show)?;
                                let shift = a << n;
                                let moved =
                                    two_part_pkostka(r + shift, j, s, 2).map_err(show)?;
                                ok &= base == moved;
                                cases += 1;
                            }
                        }
                    }
                }
            }
            check(&format!("two-part shift invariance ({cases} cases)"), ok && cases >= 1000);
        }
        "classification" => {
            let list = indecomposable_partitions(126, 2).map_err(show)?;
            let expected: Vec<Vec<u32>> = vec![
                vec![126],
                vec![125, 1],
                vec![123, 3],
                vec![119, 7],
                vec![111, 15],
                vec![95, 31],
                vec![63, 63],
            ];
            let got: Vec<Vec<u32>> = list.iter().map(|l| l.parts().to_vec()).collect();
            check("degree-126 list", got == expected);
            let mut ok = true;
            for n in 1..=6u32 {
                let r = 1u64 << n;
                let list = indecomposable_partitions(r, 2).map_err(show)?;
                let mut expected: Vec<Vec<u32>> = vec![vec![r as u32]];
                for i in 0..n {
                    let k = 1u32 << i;
                    expected.push(vec![r as u32 - k, k]);
                }
                let got: Vec<Vec<u32>> = list.iter().map(|l| l.parts().to_vec()).collect();
                ok &= got == expected;
            }
            check("power-of-two lists", ok);
            let oracle = Oracle::new(OracleConfig { seed, ..OracleConfig::desk_scale() });
            let mut ok = true;
            for p in [2u32, 3] {
                for r in 1..=4u32 {
                    for lam in partitions_of(r) {
                        let rec = oracle.decompose(&lam, p).map_err(show)?;
                        let count: u64 = rec.summands.iter().map(|s| s.mult).sum();
                        let verdict = is_indecomposable(&lam, p).map_err(show)?;
                        ok &= verdict.indecomposable == (count == 1);
                    }
                }
            }
            check("classifier vs oracle (r ≤ 4)", ok);
        }
        other => {
            return Err(format!(
                "unknown suite '{other}' (available: thm-1-1, thm-addingp, classification)"
            ))
        }
    }
    Ok(if all_ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

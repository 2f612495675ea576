//! Clustering and labeling of indecomposable summands: summands of all M^κ
//! with κ ⊵ λ are grouped into isomorphism classes, and labels Y^κ are
//! assigned in dominance-descending order — at each step the unique
//! not-yet-labeled class occurring in M^κ (with multiplicity one) is Y^κ.
//! Unitriangularity is checked, not assumed: any ambiguity is a hard error.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::Path;
use std::sync::Mutex;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{check_prime, YoungError};
use crate::oracle::decompose::{decompose_end, Summand};
use crate::oracle::homspace::EndAlgebra;
use crate::oracle::iso::modules_isomorphic;
use crate::oracle::tabloids::PermutationModule;
use crate::oracle::OracleConfig;
use crate::par_map;
use crate::partition::{dominates, partitions_of, Partition};

/// Everything the oracle keeps per decomposed module.
struct ModuleData {
    module: PermutationModule,
    end: EndAlgebra,
    summands: Vec<Summand>,
    /// isomorphism class id of each summand
    classes: Vec<usize>,
}

struct ClassInfo {
    dim: usize,
    label: Option<Partition>,
    /// representative: which module and which of its summands
    rep_lambda: Partition,
    rep_index: usize,
}

#[derive(Default)]
struct TableState {
    modules: BTreeMap<Partition, ModuleData>,
    classes: Vec<ClassInfo>,
}

/// One labeled isomorphism type inside a decomposition row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandEntry {
    pub mu: Vec<u32>,
    pub dim: u64,
    pub mult: u64,
}

/// The decomposition of a single M^λ into labeled Young modules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionRecord {
    pub lambda: Vec<u32>,
    pub degree: u64,
    pub p: u32,
    pub dimension: u64,
    pub summands: Vec<SummandEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelRow {
    pub lambda: Vec<u32>,
    pub summands: Vec<SummandEntry>,
}

/// The full multiplicity table [M^λ : Y^μ] for all λ ⊢ r at a prime p.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelTable {
    pub version: u32,
    pub p: u32,
    pub r: u64,
    pub rows: Vec<LabelRow>,
}

pub const TABLE_FORMAT_VERSION: u32 = 1;

impl LabelTable {
    /// Writes the table as JSON via a temp file in the same directory plus an
    /// atomic rename, so readers never observe a torn file.
    pub fn write_atomic(&self, path: &Path) -> Result<(), YoungError> {
        let body = serde_json::to_string_pretty(self)
            .map_err(|e| YoungError::Internal(format!("table serialization failed: {e}")))?;
        let mut tmp = path.as_os_str().to_owned();
        tmp.push(".tmp");
        let tmp = std::path::PathBuf::from(tmp);
        fs::write(&tmp, body)
            .map_err(|e| YoungError::Internal(format!("cannot write {}: {e}", tmp.display())))?;
        fs::rename(&tmp, path)
            .map_err(|e| YoungError::Internal(format!("cannot rename into {}: {e}", path.display())))
    }

    pub fn read(path: &Path) -> Result<LabelTable, YoungError> {
        let body = fs::read_to_string(path)
            .map_err(|e| YoungError::Internal(format!("cannot read {}: {e}", path.display())))?;
        let table: LabelTable = serde_json::from_str(&body)
            .map_err(|e| YoungError::Internal(format!("corrupted table {}: {e}", path.display())))?;
        if table.version != TABLE_FORMAT_VERSION {
            return Err(YoungError::Internal(format!(
                "unsupported table version {} in {}",
                table.version,
                path.display()
            )));
        }
        Ok(table)
    }

    pub fn multiplicity(&self, lambda: &Partition, mu: &Partition) -> Option<u64> {
        let row = self.rows.iter().find(|row| row.lambda == lambda.parts())?;
        Some(
            row.summands
                .iter()
                .find(|s| s.mu == mu.parts())
                .map(|s| s.mult)
                .unwrap_or(0),
        )
    }
}

/// Deterministic per-module seed stream derived from the master seed.
fn derived_seed(base: u64, lambda: &Partition, p: u32, salt: u64) -> u64 {
    let mut h = 0xcbf29ce484222325u64 ^ base;
    let mut eat = |x: u64| {
        h ^= x;
        h = h.wrapping_mul(0x100000001b3);
    };
    eat(p as u64);
    eat(salt);
    for &part in lambda.parts() {
        eat(part as u64 + 1);
    }
    h
}

/// The summand-labeling oracle. Holds per-(r, p) table state so repeated
/// queries reuse every decomposition and isomorphism test already done.
pub struct Oracle {
    cfg: OracleConfig,
    states: Mutex<HashMap<(u64, u32), TableState>>,
}

impl Oracle {
    pub fn new(cfg: OracleConfig) -> Self {
        Oracle { cfg, states: Mutex::new(HashMap::new()) }
    }

    pub fn with_defaults() -> Self {
        Oracle::new(OracleConfig::default())
    }

    pub fn config(&self) -> &OracleConfig {
        &self.cfg
    }

    /// Exact multiplicity [M^λ : Y^μ] by table lookup; zero whenever μ does
    /// not dominate λ.
    pub fn pkostka(&self, lambda: &Partition, mu: &Partition, p: u32) -> Result<u64, YoungError> {
        check_prime(p)?;
        if !dominates(mu, lambda)? {
            return Ok(0);
        }
        let mut states = self.states.lock().unwrap();
        let state = states.entry((lambda.degree(), p)).or_default();
        self.process(state, lambda.degree(), p, Some(lambda))?;
        let data = &state.modules[lambda];
        let count = data
            .classes
            .iter()
            .filter(|&&cid| state.classes[cid].label.as_ref() == Some(mu))
            .count();
        Ok(count as u64)
    }

    /// Decomposition of M^λ into labeled Young modules with multiplicities.
    pub fn decompose(&self, lambda: &Partition, p: u32) -> Result<DecompositionRecord, YoungError> {
        check_prime(p)?;
        let mut states = self.states.lock().unwrap();
        let state = states.entry((lambda.degree(), p)).or_default();
        self.process(state, lambda.degree(), p, Some(lambda))?;
        Ok(row_record(state, lambda, p))
    }

    /// The full table for all λ ⊢ r: every module decomposed, every summand
    /// labeled.
    pub fn young_label_table(&self, r: u64, p: u32) -> Result<LabelTable, YoungError> {
        check_prime(p)?;
        let mut states = self.states.lock().unwrap();
        let state = states.entry((r, p)).or_default();
        self.process(state, r, p, None)?;
        let rows = partitions_of(r as u32)
            .map(|kappa| {
                let rec = row_record(state, &kappa, p);
                LabelRow { lambda: rec.lambda, summands: rec.summands }
            })
            .collect();
        Ok(LabelTable { version: TABLE_FORMAT_VERSION, p, r, rows })
    }

    /// Dimension of the Jacobson radical of End(M^λ) over F_p.
    pub fn end_radical_dim(&self, lambda: &Partition, p: u32) -> Result<usize, YoungError> {
        check_prime(p)?;
        let module = PermutationModule::new(lambda, p, self.cfg.max_tabloids)?;
        let end = EndAlgebra::new(&module, self.cfg.max_end_dim)?;
        let alg = end.structure_algebra(self.cfg.max_end_dim)?;
        Ok(alg.radical().len())
    }

    /// Decomposes and labels every not-yet-processed κ ⊵ λ (or all κ ⊢ r when
    /// no filter is given), in dominance-descending (lex-descending) order.
    /// Module construction and splitting run independently per κ; the
    /// clustering/labeling pass is sequential.
    fn process(
        &self,
        state: &mut TableState,
        r: u64,
        p: u32,
        filter: Option<&Partition>,
    ) -> Result<(), YoungError> {
        let mut needed = Vec::new();
        for kappa in partitions_of(r as u32) {
            if state.modules.contains_key(&kappa) {
                continue;
            }
            if let Some(lambda) = filter {
                if !dominates(&kappa, lambda)? {
                    continue;
                }
            }
            needed.push(kappa);
        }
        if needed.is_empty() {
            return Ok(());
        }
        let cfg = &self.cfg;
        let built = par_map(needed, |kappa| {
            let data = build_module(&kappa, p, cfg);
            (kappa, data)
        });
        for (kappa, data) in built {
            let (module, end, summands) = data?;
            self.classify_and_label(state, &kappa, p, module, end, summands)?;
        }
        Ok(())
    }

    /// Assigns each summand of M^κ to an isomorphism class, then labels the
    /// unique fresh class Y^κ. Every previously labeled class occurring here
    /// must strictly dominate κ.
    fn classify_and_label(
        &self,
        state: &mut TableState,
        kappa: &Partition,
        p: u32,
        module: PermutationModule,
        end: EndAlgebra,
        summands: Vec<Summand>,
    ) -> Result<(), YoungError> {
        let mut classes = Vec::with_capacity(summands.len());
        for (i, summand) in summands.iter().enumerate() {
            let mut assigned = None;
            for (cid, info) in state.classes.iter().enumerate() {
                if info.dim != summand.dim {
                    continue;
                }
                let (rep_mod, rep_end, rep_sum) = if info.rep_lambda == *kappa {
                    (&module, &end, &summands[info.rep_index])
                } else {
                    let rep = &state.modules[&info.rep_lambda];
                    (&rep.module, &rep.end, &rep.summands[info.rep_index])
                };
                let seed = derived_seed(self.cfg.seed, kappa, p, (i as u64) << 20 | cid as u64);
                if modules_isomorphic(&module, &end, summand, rep_mod, rep_end, rep_sum, &self.cfg, seed)? {
                    assigned = Some(cid);
                    break;
                }
            }
            let cid = assigned.unwrap_or_else(|| {
                state.classes.push(ClassInfo {
                    dim: summand.dim,
                    label: None,
                    rep_lambda: kappa.clone(),
                    rep_index: i,
                });
                state.classes.len() - 1
            });
            classes.push(cid);
        }
        // labeling step: exactly one unlabeled class, with multiplicity one
        let mut fresh: Vec<usize> = classes
            .iter()
            .copied()
            .filter(|&cid| state.classes[cid].label.is_none())
            .collect();
        fresh.sort_unstable();
        fresh.dedup();
        let fresh_mult = classes
            .iter()
            .filter(|&&cid| state.classes[cid].label.is_none())
            .count();
        if fresh.len() != 1 || fresh_mult != 1 {
            return Err(YoungError::Internal(format!(
                "labeling ambiguity at M^{kappa} over F_{p}: {} fresh classes, total multiplicity {fresh_mult}",
                fresh.len()
            )));
        }
        state.classes[fresh[0]].label = Some(kappa.clone());
        // unitriangularity check: every other label strictly dominates κ
        for &cid in &classes {
            if cid == fresh[0] {
                continue;
            }
            let label = state.classes[cid]
                .label
                .as_ref()
                .expect("non-fresh classes are labeled")
                .clone();
            if label == *kappa || !dominates(&label, kappa)? {
                return Err(YoungError::Internal(format!(
                    "label {label} in M^{kappa} does not strictly dominate it"
                )));
            }
        }
        state.modules.insert(kappa.clone(), ModuleData { module, end, summands, classes });
        Ok(())
    }
}

fn build_module(
    kappa: &Partition,
    p: u32,
    cfg: &OracleConfig,
) -> Result<(PermutationModule, EndAlgebra, Vec<Summand>), YoungError> {
    let module = PermutationModule::new(kappa, p, cfg.max_tabloids)?;
    let end = EndAlgebra::new(&module, cfg.max_end_dim)?;
    let mut rng = ChaCha8Rng::seed_from_u64(derived_seed(cfg.seed, kappa, p, 1));
    let summands = decompose_end(&end, cfg, &mut rng)?;
    Ok((module, end, summands))
}

fn row_record(state: &TableState, lambda: &Partition, p: u32) -> DecompositionRecord {
    let data = &state.modules[lambda];
    let mut grouped: BTreeMap<Partition, (u64, u64)> = BTreeMap::new();
    for (i, &cid) in data.classes.iter().enumerate() {
        let label = state.classes[cid].label.clone().expect("processed rows are fully labeled");
        let entry = grouped.entry(label).or_insert((data.summands[i].dim as u64, 0));
        entry.1 += 1;
    }
    let summands = grouped
        .into_iter()
        .rev()
        .map(|(mu, (dim, mult))| SummandEntry { mu: mu.parts().to_vec(), dim, mult })
        .collect();
    DecompositionRecord {
        lambda: lambda.parts().to_vec(),
        degree: lambda.degree(),
        p,
        dimension: data.module.dim as u64,
        summands,
    }
}

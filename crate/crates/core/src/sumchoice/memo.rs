use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::{Mutex, RwLock};

use serde::{Deserialize, Serialize};

use super::{greedy_bound, Extended, Route, SumChoiceError, SumChoiceRecord, Transcript};
use crate::choosability::SizeFunction;
use crate::graph::{canonical_labeling, parse_graph6, CanonicalKey, FamilySpec, Graph};

/// Environment variable naming the default cache file.
pub const CACHE_ENV: &str = "SUMCHOICE_CACHE";

/// One line of the persistent cache.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct CacheLine {
    canonical_graph6: String,
    chi_sc: u32,
    gb: u32,
    optimal_f: SizeFunction,
    rho: Option<Extended>,
    tau: Option<Extended>,
}

/// Sum choice records keyed by canonical form, stored in canonical
/// labeling. A key is written at most once.
pub struct MemoStore {
    records: RwLock<HashMap<CanonicalKey, SumChoiceRecord>>,
    file: Option<Mutex<File>>,
    path: Option<PathBuf>,
    /// Canonical forms of graphs known not to be sc-greedy, smallest first.
    non_greedy: RwLock<Vec<Graph>>,
}

impl MemoStore {
    pub fn in_memory() -> Self {
        let k23 = FamilySpec::CompleteBipartite(2, 3).generate().expect("valid family");
        let seed = canonical_labeling(&k23).expect("small graph").graph;
        MemoStore { records: RwLock::new(HashMap::new()), file: None, path: None, non_greedy: RwLock::new(vec![seed]) }
    }

    /// Loads every record in `path` (if it exists) and appends new ones to it.
    pub fn open(path: impl AsRef<Path>) -> Result<Self, SumChoiceError> {
        let path = path.as_ref();
        let mut store = MemoStore::in_memory();
        if path.exists() {
            let reader = BufReader::new(File::open(path).map_err(|e| cache_err(path, e))?);
            for (i, line) in reader.lines().enumerate() {
                let line = line.map_err(|e| cache_err(path, e))?;
                if line.trim().is_empty() {
                    continue;
                }
                let parsed: CacheLine = serde_json::from_str(&line).map_err(|e| SumChoiceError::Cache(format!("{}:{}: {e}", path.display(), i + 1)))?;
                let (key, rec) = from_line(parsed).map_err(|e| SumChoiceError::Cache(format!("{}:{}: {e}", path.display(), i + 1)))?;
                let mut map = store.records.write().unwrap();
                if let Some(old) = map.get(&key) {
                    check_equal(&key, old, &rec);
                } else {
                    map.insert(key, rec);
                }
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(path).map_err(|e| cache_err(path, e))?;
        store.file = Some(Mutex::new(file));
        store.path = Some(path.to_path_buf());
        let non_greedy: Vec<Graph> = {
            let map = store.records.read().unwrap();
            let mut v: Vec<(CanonicalKey, Graph)> = map
                .iter()
                .filter(|(_, r)| !r.sc_greedy)
                .filter_map(|(k, _)| parse_graph6(k.as_str()).ok().map(|g| (k.clone(), g)))
                .collect();
            v.sort_by(|a, b| (a.1.order(), &a.0).cmp(&(b.1.order(), &b.0)));
            v.into_iter().map(|(_, g)| g).collect()
        };
        for g in non_greedy {
            store.add_non_greedy(&g)?;
        }
        Ok(store)
    }

    /// Persistent store at `$SUMCHOICE_CACHE` if set, in memory otherwise.
    pub fn from_env() -> Result<Self, SumChoiceError> {
        match std::env::var_os(CACHE_ENV) {
            Some(p) if !p.is_empty() => MemoStore::open(PathBuf::from(p)),
            _ => Ok(MemoStore::in_memory()),
        }
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn len(&self) -> usize {
        self.records.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, key: &CanonicalKey) -> Option<SumChoiceRecord> {
        self.records.read().unwrap().get(key).cloned()
    }

    /// Stores `rec` under `key` unless a record is already present, in which
    /// case the values must agree. Returns the stored record.
    pub fn insert(&self, key: CanonicalKey, rec: SumChoiceRecord) -> Result<SumChoiceRecord, SumChoiceError> {
        let mut map = self.records.write().unwrap();
        if let Some(old) = map.get(&key) {
            check_equal(&key, old, &rec);
            return Ok(old.clone());
        }
        if let Some(file) = &self.file {
            let line = CacheLine {
                canonical_graph6: key.0.clone(),
                chi_sc: rec.chi_sc,
                gb: rec.greedy_bound,
                optimal_f: rec.optimal_f.clone(),
                rho: rec.rho,
                tau: rec.tau,
            };
            let mut text = serde_json::to_string(&line).map_err(|e| SumChoiceError::Cache(e.to_string()))?;
            text.push('\n');
            let mut f = file.lock().unwrap();
            f.write_all(text.as_bytes()).and_then(|_| f.flush()).map_err(|e| SumChoiceError::Cache(e.to_string()))?;
        }
        map.insert(key, rec.clone());
        Ok(rec)
    }

    /// Canonical keys with their records, sorted by key.
    pub fn entries(&self) -> Vec<(CanonicalKey, SumChoiceRecord)> {
        let mut v: Vec<_> = self.records.read().unwrap().iter().map(|(k, r)| (k.clone(), r.clone())).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub(crate) fn add_non_greedy(&self, g: &Graph) -> Result<(), SumChoiceError> {
        let c = canonical_labeling(g)?.graph;
        let mut list = self.non_greedy.write().unwrap();
        if !list.contains(&c) {
            list.push(c);
            list.sort_by_key(|h| (h.order(), h.edge_count()));
        }
        Ok(())
    }

    /// Whether a stored non-sc-greedy graph with fewer vertices is an
    /// induced subgraph of `g`.
    pub(crate) fn contains_non_greedy_induced(&self, g: &Graph) -> Result<bool, SumChoiceError> {
        let list = self.non_greedy.read().unwrap().clone();
        for h in list.iter().filter(|h| h.order() < g.order()) {
            if has_induced_copy(g, h)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

impl Default for MemoStore {
    fn default() -> Self {
        MemoStore::in_memory()
    }
}

fn cache_err(path: &Path, e: std::io::Error) -> SumChoiceError {
    SumChoiceError::Cache(format!("{}: {e}", path.display()))
}

fn check_equal(key: &CanonicalKey, old: &SumChoiceRecord, new: &SumChoiceRecord) {
    assert!(
        old.chi_sc == new.chi_sc && old.greedy_bound == new.greedy_bound,
        "conflicting records for {}: chi_sc {} vs {}",
        key.0,
        old.chi_sc,
        new.chi_sc
    );
}

fn from_line(line: CacheLine) -> Result<(CanonicalKey, SumChoiceRecord), String> {
    let g = parse_graph6(&line.canonical_graph6).map_err(|e| e.to_string())?;
    let key = canonical_labeling(&g).map_err(|e| e.to_string())?.key;
    if key.0 != line.canonical_graph6 {
        return Err(format!("{} is not in canonical form", line.canonical_graph6));
    }
    if line.gb != greedy_bound(&g) || line.optimal_f.len() != g.order() || line.optimal_f.total() != line.chi_sc || line.chi_sc > line.gb {
        return Err(format!("inconsistent record for {}", line.canonical_graph6));
    }
    let rec = SumChoiceRecord {
        chi_sc: line.chi_sc,
        greedy_bound: line.gb,
        sc_greedy: line.chi_sc == line.gb,
        optimal_f: line.optimal_f,
        rho: line.rho,
        tau: line.tau,
        rho_vertex: None,
        route: Route::Cached,
        transcript: Transcript::default(),
    };
    Ok((key, rec))
}

fn has_induced_copy(g: &Graph, h: &Graph) -> Result<bool, SumChoiceError> {
    let k = h.order();
    let hkey = canonical_labeling(h)?.key;
    let m = h.edge_count();
    let mut found = false;
    for_each_subset(g.order(), k, &mut |set| {
        if found {
            return;
        }
        let sub = g.induced(set);
        if sub.edge_count() == m {
            if let Ok(lab) = canonical_labeling(&sub) {
                found = lab.key == hkey;
            }
        }
    });
    Ok(found)
}

/// Calls `visit` with every `k`-subset of `0..n` as a bit set.
fn for_each_subset(n: usize, k: usize, visit: &mut dyn FnMut(u32)) {
    fn rec(n: usize, k: usize, start: usize, set: u32, visit: &mut dyn FnMut(u32)) {
        if k == 0 {
            visit(set);
            return;
        }
        for v in start..=n - k {
            rec(n, k - 1, v + 1, set | 1 << v, visit);
        }
    }
    if k <= n {
        rec(n, k, 0, 0, visit);
    }
}

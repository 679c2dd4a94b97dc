//! Batch runner for enumeration experiments.
//!
//! A run matrix is the cross product of datasets, support thresholds and
//! algorithms. Every coordinate is encoded, enumerated under a wall-clock
//! timeout and summarized as one CSV row, ready for cactus plots.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Duration;

use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::cdcl;
use crate::cnf::{Assignment, CnfFormula};
use crate::dpll;
use crate::encoder::{self, SidecarMap, Variant};
use crate::error::{Error, Result};
use crate::mining::{Itemset, TransactionDb};
use crate::oracle;
use crate::stats::{Budget, EnumerationStats, Heuristic};

pub const CSV_HEADER: &str =
    "dataset,variant,threshold,algorithm,seed,models,conflicts,decisions,propagations,peak_clauses,elapsed_ms,status";

/// Environment variable holding the default timeout in seconds.
pub const TIMEOUT_ENV: &str = "SATMINE_TIMEOUT";

/// Fifteen minutes.
pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(15 * 60);

/// Seed used by `dpll-rand` when none is given.
pub const DEFAULT_SEED: u64 = 7;

/// The default timeout, honoring `SATMINE_TIMEOUT` when it parses.
pub fn default_timeout() -> Duration {
    std::env::var(TIMEOUT_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<f64>().ok())
        .filter(|s| *s > 0.0)
        .map(Duration::from_secs_f64)
        .unwrap_or(DEFAULT_TIMEOUT)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Cdcl,
    DpllVsids,
    DpllJw,
    DpllRand { seed: u64 },
}

impl Algorithm {
    pub const NAMES: [&'static str; 4] = ["cdcl", "dpll-vsids", "dpll-jw", "dpll-rand"];

    /// All four algorithms, the random one seeded with `seed`.
    pub fn all(seed: u64) -> Vec<Algorithm> {
        vec![
            Algorithm::Cdcl,
            Algorithm::DpllVsids,
            Algorithm::DpllJw,
            Algorithm::DpllRand { seed },
        ]
    }

    pub fn parse(name: &str, seed: u64) -> Result<Algorithm> {
        match name {
            "cdcl" => Ok(Algorithm::Cdcl),
            "dpll-vsids" => Ok(Algorithm::DpllVsids),
            "dpll-jw" => Ok(Algorithm::DpllJw),
            "dpll-rand" => Ok(Algorithm::DpllRand { seed }),
            _ => Err(Error::Config(format!(
                "unknown algorithm {name:?}, expected one of {}",
                Algorithm::NAMES.join(", ")
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Cdcl => "cdcl",
            Algorithm::DpllVsids => "dpll-vsids",
            Algorithm::DpllJw => "dpll-jw",
            Algorithm::DpllRand { .. } => "dpll-rand",
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            Algorithm::DpllRand { seed } => Some(*seed),
            _ => None,
        }
    }

    fn heuristic(&self) -> Option<Heuristic> {
        match *self {
            Algorithm::Cdcl => None,
            Algorithm::DpllVsids => Some(Heuristic::VsidsWeightsOnly),
            Algorithm::DpllJw => Some(Heuristic::JeroslowWang),
            Algorithm::DpllRand { seed } => Some(Heuristic::Random { seed }),
        }
    }

    /// Enumerates the models of `formula` projected onto `projection`.
    pub fn enumerate<F: FnMut(&Assignment)>(
        &self,
        formula: &CnfFormula,
        projection: &[crate::cnf::Var],
        budget: &Budget,
        on_model: F,
    ) -> EnumerationStats {
        match self.heuristic() {
            None => cdcl::enumerate_blocking(formula, projection, budget, on_model),
            Some(h) => dpll::enumerate(formula, projection, h, budget, on_model),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A minimum support, absolute or relative to the number of transactions.
#[derive(Copy, Clone, Debug, PartialEq)]
pub enum Threshold {
    Absolute(usize),
    /// In `[0, 1]`; resolved by rounding `fraction * m` up.
    Fraction(f64),
}

impl Threshold {
    pub fn resolve(&self, num_transactions: usize) -> usize {
        match *self {
            Threshold::Absolute(n) => n,
            Threshold::Fraction(f) => {
                let exact = f * num_transactions as f64;
                // absorb representation error such as 0.1 * 30 = 3.0000000000000004
                (exact - 1e-9).ceil().max(0.0) as usize
            }
        }
    }
}

impl FromStr for Threshold {
    type Err = Error;

    /// `N` is absolute, `x%` a percentage and `0.x` a fraction.
    fn from_str(s: &str) -> Result<Threshold> {
        let s = s.trim();
        let bad = || Error::Threshold(s.to_string());
        if let Some(pct) = s.strip_suffix('%') {
            let p: f64 = pct.trim().parse().map_err(|_| bad())?;
            if !(0.0..=100.0).contains(&p) {
                return Err(bad());
            }
            return Ok(Threshold::Fraction(p / 100.0));
        }
        if let Ok(n) = s.parse::<usize>() {
            return Ok(Threshold::Absolute(n));
        }
        let f: f64 = s.parse().map_err(|_| bad())?;
        if (0.0..=1.0).contains(&f) {
            Ok(Threshold::Fraction(f))
        } else {
            Err(bad())
        }
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Threshold::Absolute(n) => write!(f, "{n}"),
            Threshold::Fraction(x) => write!(f, "{}%", x * 100.0),
        }
    }
}

/// One experiment matrix.
#[derive(Clone, Debug)]
pub struct RunSpec {
    pub datasets: Vec<PathBuf>,
    pub variant: Variant,
    pub thresholds: Vec<Threshold>,
    pub algorithms: Vec<Algorithm>,
    pub timeout: Duration,
    pub exclude_empty: bool,
    /// Worker threads; each runs one enumerator at a time.
    pub jobs: usize,
    /// When set, the itemsets found by each run are written below it.
    pub dump_dir: Option<PathBuf>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawThreshold {
    Int(usize),
    Float(f64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    datasets: Vec<PathBuf>,
    #[serde(default)]
    variant: Option<String>,
    thresholds: Vec<RawThreshold>,
    #[serde(default)]
    algorithms: Option<Vec<String>>,
    #[serde(default)]
    seed: Option<u64>,
    #[serde(default)]
    timeout_secs: Option<f64>,
    #[serde(default)]
    include_empty: Option<bool>,
    #[serde(default)]
    jobs: Option<usize>,
    #[serde(default)]
    dump_dir: Option<PathBuf>,
}

impl RunSpec {
    /// Parses a TOML matrix description. Relative dataset paths are taken
    /// relative to `base_dir`.
    ///
    /// ```toml
    /// datasets = ["table1.dat"]
    /// variant = "cfim"
    /// thresholds = [2, "50%"]
    /// algorithms = ["cdcl", "dpll-vsids", "dpll-jw", "dpll-rand"]
    /// seed = 7
    /// timeout_secs = 60
    /// ```
    pub fn from_toml(text: &str, base_dir: &Path) -> Result<RunSpec> {
        let raw: RawSpec = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        let seed = raw.seed.unwrap_or(DEFAULT_SEED);
        let thresholds = raw
            .thresholds
            .into_iter()
            .map(|t| match t {
                RawThreshold::Int(n) => Ok(Threshold::Absolute(n)),
                RawThreshold::Float(f) => f.to_string().parse(),
                RawThreshold::Text(s) => s.parse(),
            })
            .collect::<Result<Vec<_>>>()?;
        let algorithms = match raw.algorithms {
            None => Algorithm::all(seed),
            Some(names) => names
                .iter()
                .map(|n| Algorithm::parse(n, seed))
                .collect::<Result<Vec<_>>>()?,
        };
        let timeout = match raw.timeout_secs {
            Some(s) if s > 0.0 => Duration::from_secs_f64(s),
            Some(_) => return Err(Error::Config("timeout_secs must be positive".into())),
            None => default_timeout(),
        };
        let spec = RunSpec {
            datasets: raw.datasets.into_iter().map(|p| base_dir.join(p)).collect(),
            variant: raw.variant.as_deref().unwrap_or("cfim").parse()?,
            thresholds,
            algorithms,
            timeout,
            exclude_empty: !raw.include_empty.unwrap_or(false),
            jobs: raw.jobs.unwrap_or(1).max(1),
            dump_dir: raw.dump_dir.map(|p| base_dir.join(p)),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn from_file(path: &Path) -> Result<RunSpec> {
        let text = fs::read_to_string(path)?;
        RunSpec::from_toml(&text, path.parent().unwrap_or(Path::new(".")))
    }

    pub fn validate(&self) -> Result<()> {
        if self.thresholds.is_empty() {
            return Err(Error::Config("at least one threshold is required".into()));
        }
        if self.algorithms.is_empty() {
            return Err(Error::Config("at least one algorithm is required".into()));
        }
        if self.timeout.is_zero() {
            return Err(Error::Config("timeout must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RunStatus {
    Complete,
    Timeout,
    Error(String),
}

impl RunStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            RunStatus::Complete => "complete",
            RunStatus::Timeout => "timeout",
            RunStatus::Error(_) => "error",
        }
    }
}

/// Order-independent fingerprint of a set of itemsets. Two runs that found
/// the same itemsets have equal digests whatever the enumeration order.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ModelDigest {
    pub count: u64,
    sum: u64,
    xor: u64,
}

impl ModelDigest {
    pub fn add(&mut self, itemset: &Itemset) {
        let mut hasher = Sha256::new();
        for a in itemset.iter() {
            hasher.update(a.to_le_bytes());
        }
        let bytes = hasher.finalize();
        let h = u64::from_le_bytes(bytes[..8].try_into().expect("8 bytes"));
        self.count += 1;
        self.sum = self.sum.wrapping_add(h);
        self.xor ^= h.rotate_left(17);
    }
}

impl fmt::Display for ModelDigest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{:016x}{:016x}", self.count, self.sum, self.xor)
    }
}

/// One matrix coordinate and its outcome.
#[derive(Clone, Debug)]
pub struct RunRecord {
    pub dataset: String,
    pub variant: Variant,
    /// Resolved absolute threshold, or the raw one if the dataset could not
    /// be read.
    pub threshold: String,
    pub algorithm: Algorithm,
    pub stats: EnumerationStats,
    pub digest: ModelDigest,
    pub status: RunStatus,
}

impl RunRecord {
    pub fn models(&self) -> u64 {
        self.stats.models_found
    }

    fn csv_fields(&self) -> [String; 12] {
        [
            self.dataset.clone(),
            self.variant.to_string(),
            self.threshold.clone(),
            self.algorithm.name().to_string(),
            self.algorithm.seed().map(|s| s.to_string()).unwrap_or_default(),
            self.stats.models_found.to_string(),
            self.stats.conflicts.to_string(),
            self.stats.decisions.to_string(),
            self.stats.propagations.to_string(),
            self.stats.peak_stored_clauses.to_string(),
            format!("{:.3}", self.stats.elapsed.as_secs_f64() * 1000.0),
            self.status.as_str().to_string(),
        ]
    }

    /// The record as a CSV row without the elapsed time, for comparing
    /// repeated runs.
    pub fn fingerprint(&self) -> String {
        let mut fields = self.csv_fields();
        fields[10].clear();
        fields.join(",")
    }
}

fn dataset_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

/// Encodes and enumerates one coordinate on an already loaded database.
/// `sink` receives every itemset found.
#[allow(clippy::too_many_arguments)]
pub fn run_on_db(
    db: &TransactionDb,
    dataset: &str,
    variant: Variant,
    threshold: usize,
    algorithm: Algorithm,
    exclude_empty: bool,
    budget: &Budget,
    mut sink: impl FnMut(Itemset),
) -> RunRecord {
    let instance = encoder::encode(db, threshold, variant, exclude_empty);
    let mut digest = ModelDigest::default();
    let stats = algorithm.enumerate(&instance.formula, &instance.projection(), budget, |model| {
        let itemset = instance.decode_itemset(model);
        digest.add(&itemset);
        sink(itemset);
    });
    let status = if stats.completed {
        RunStatus::Complete
    } else {
        RunStatus::Timeout
    };
    RunRecord {
        dataset: dataset.to_string(),
        variant,
        threshold: threshold.to_string(),
        algorithm,
        stats,
        digest,
        status,
    }
}

/// A single matrix coordinate.
#[derive(Clone, Debug)]
pub struct Coordinate {
    pub dataset: PathBuf,
    pub variant: Variant,
    pub threshold: Threshold,
    pub algorithm: Algorithm,
    pub timeout: Duration,
    pub exclude_empty: bool,
}

fn error_record(c: &Coordinate, msg: String) -> RunRecord {
    RunRecord {
        dataset: dataset_name(&c.dataset),
        variant: c.variant,
        threshold: c.threshold.to_string(),
        algorithm: c.algorithm,
        stats: EnumerationStats::default(),
        digest: ModelDigest::default(),
        status: RunStatus::Error(msg),
    }
}

fn dump_path(dir: &Path, c: &Coordinate, threshold: usize) -> PathBuf {
    let seed = c.algorithm.seed().map(|s| format!("-{s}")).unwrap_or_default();
    dir.join(format!(
        "{}-{}-{}-{}{}.txt",
        dataset_name(&c.dataset),
        c.variant,
        threshold,
        c.algorithm.name(),
        seed
    ))
}

fn run_coordinate(c: &Coordinate, db: &TransactionDb, dump_dir: Option<&Path>) -> RunRecord {
    let n = c.threshold.resolve(db.num_transactions());
    let budget = Budget::with_timeout(c.timeout);
    let mut dumped: Vec<Itemset> = Vec::new();
    let keep = dump_dir.is_some();
    let record = run_on_db(
        db,
        &dataset_name(&c.dataset),
        c.variant,
        n,
        c.algorithm,
        c.exclude_empty,
        &budget,
        |itemset| {
            if keep {
                dumped.push(itemset);
            }
        },
    );
    if let Some(dir) = dump_dir {
        if let Err(e) = write_itemsets(&dump_path(dir, c, n), db, &mut dumped) {
            return RunRecord {
                status: RunStatus::Error(e.to_string()),
                ..record
            };
        }
    }
    record
}

/// Writes itemsets one per line, labels separated by spaces, in sorted
/// order. The empty itemset is written as `{}`.
pub fn write_itemsets(path: &Path, db: &TransactionDb, itemsets: &mut [Itemset]) -> Result<()> {
    itemsets.sort();
    let mut out = std::io::BufWriter::new(fs::File::create(path)?);
    for set in itemsets.iter() {
        writeln!(out, "{}", db.display(set))?;
    }
    out.flush()?;
    Ok(())
}

/// Loads the dataset and runs one coordinate. Read failures become an
/// error record.
pub fn run_single(c: &Coordinate, dump_dir: Option<&Path>) -> RunRecord {
    match TransactionDb::from_file(&c.dataset) {
        Ok(db) => run_coordinate(c, &db, dump_dir),
        Err(e) => error_record(c, e.to_string()),
    }
}

/// Runs the whole cross product. Rows come back in dataset, threshold,
/// algorithm order whatever the number of workers; failures are recorded
/// per row and never abort the matrix.
pub fn run_matrix(spec: &RunSpec) -> Result<Vec<RunRecord>> {
    spec.validate()?;
    if let Some(dir) = &spec.dump_dir {
        fs::create_dir_all(dir)?;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.jobs.max(1))
        .build()
        .map_err(|e| Error::Config(e.to_string()))?;

    let mut records = Vec::new();
    for path in &spec.datasets {
        let coords: Vec<Coordinate> = spec
            .thresholds
            .iter()
            .flat_map(|&threshold| {
                spec.algorithms.iter().map(move |&algorithm| Coordinate {
                    dataset: path.clone(),
                    variant: spec.variant,
                    threshold,
                    algorithm,
                    timeout: spec.timeout,
                    exclude_empty: spec.exclude_empty,
                })
            })
            .collect();
        let db = match TransactionDb::from_file(path) {
            Ok(db) => db,
            Err(e) => {
                records.extend(coords.iter().map(|c| error_record(c, e.to_string())));
                continue;
            }
        };
        let dump_dir = spec.dump_dir.as_deref();
        let rows: Vec<RunRecord> = pool.install(|| {
            use rayon::prelude::*;
            coords
                .par_iter()
                .map(|c| run_coordinate(c, &db, dump_dir))
                .collect()
        });
        records.extend(rows);
    }
    Ok(records)
}

/// Writes the records as CSV under [`CSV_HEADER`].
pub fn write_csv<W: Write>(records: &[RunRecord], out: W) -> Result<()> {
    let mut writer = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    writer.write_record(CSV_HEADER.split(','))?;
    for r in records {
        writer.write_record(r.csv_fields())?;
    }
    writer.flush()?;
    Ok(())
}

/// Files written by [`export_instance`].
#[derive(Clone, Debug)]
pub struct ExportedFiles {
    pub cnf: PathBuf,
    pub var_map: PathBuf,
}

/// Path of the variable-map sidecar that goes with a DIMACS file.
pub fn sidecar_path(cnf_path: &Path) -> PathBuf {
    let mut s = cnf_path.as_os_str().to_owned();
    s.push(".map");
    PathBuf::from(s)
}

/// Writes the encoding as DIMACS at `out_path` and its variable map next
/// to it (`<out_path>.map`).
pub fn export_instance(
    db: &TransactionDb,
    variant: Variant,
    n: usize,
    exclude_empty: bool,
    out_path: &Path,
) -> Result<ExportedFiles> {
    let instance = encoder::encode(db, n, variant, exclude_empty);
    fs::write(out_path, instance.formula.write_dimacs())?;
    let map_path = sidecar_path(out_path);
    fs::write(&map_path, instance.write_var_map())?;
    Ok(ExportedFiles {
        cnf: out_path.to_path_buf(),
        var_map: map_path,
    })
}

/// Reads back a DIMACS file and its sidecar.
pub fn import_instance(cnf_path: &Path) -> Result<(CnfFormula, SidecarMap)> {
    let formula = CnfFormula::parse_dimacs(&fs::read_to_string(cnf_path)?)?;
    let map = SidecarMap::parse(&fs::read_to_string(sidecar_path(cnf_path))?)?;
    Ok((formula, map))
}

/// One line of an oracle cross-check.
#[derive(Clone, Debug)]
pub struct CheckLine {
    pub variant: Variant,
    pub threshold: usize,
    pub algorithm: Algorithm,
    pub expected: usize,
    pub found: u64,
    pub duplicates: u64,
    pub passed: bool,
}

/// Compares every algorithm against the exhaustive miner for every
/// threshold `1..=m+1` and both variants.
pub fn cross_check(db: &TransactionDb, exclude_empty: bool, algorithms: &[Algorithm]) -> Result<Vec<CheckLine>> {
    let mut lines = Vec::new();
    for variant in [Variant::Fim, Variant::Cfim] {
        for n in 1..=db.num_transactions() + 1 {
            let expected = match variant {
                Variant::Fim => oracle::mine_frequent(db, n)?,
                Variant::Cfim => oracle::mine_closed(db, n, exclude_empty)?,
            }
            .itemsets();
            for &algorithm in algorithms {
                let mut found = Vec::new();
                let record = run_on_db(db, "check", variant, n, algorithm, exclude_empty, &Budget::unlimited(), |s| {
                    found.push(s)
                });
                let total = found.len() as u64;
                found.sort();
                found.dedup();
                let duplicates = total - found.len() as u64;
                let passed = record.status == RunStatus::Complete
                    && duplicates == 0
                    && found.iter().cloned().eq(expected.iter().cloned());
                lines.push(CheckLine {
                    variant,
                    threshold: n,
                    algorithm,
                    expected: expected.len(),
                    found: total,
                    duplicates,
                    passed,
                });
            }
        }
    }
    Ok(lines)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threshold_parsing() {
        assert_eq!("12".parse::<Threshold>().unwrap(), Threshold::Absolute(12));
        assert_eq!("50%".parse::<Threshold>().unwrap(), Threshold::Fraction(0.5));
        assert_eq!("0.25".parse::<Threshold>().unwrap(), Threshold::Fraction(0.25));
        assert!("150%".parse::<Threshold>().is_err());
        assert!("abc".parse::<Threshold>().is_err());
        assert!("1.5".parse::<Threshold>().is_err());
    }

    #[test]
    fn fractions_round_up() {
        assert_eq!(Threshold::Fraction(0.5).resolve(7), 4);
        assert_eq!(Threshold::Fraction(0.1).resolve(30), 3);
        assert_eq!(Threshold::Fraction(0.0).resolve(30), 0);
        assert_eq!(Threshold::Fraction(1.0).resolve(30), 30);
        assert_eq!(Threshold::Absolute(9).resolve(3), 9);
    }

    #[test]
    fn algorithm_names() {
        for name in Algorithm::NAMES {
            assert_eq!(Algorithm::parse(name, 1).unwrap().name(), name);
        }
        assert!(Algorithm::parse("minisat", 1).is_err());
        assert_eq!(Algorithm::parse("dpll-rand", 9).unwrap().seed(), Some(9));
    }

    #[test]
    fn spec_from_toml() {
        let spec = RunSpec::from_toml(
            "datasets = [\"a.dat\"]\nthresholds = [2, \"50%\", 0.25]\nalgorithms = [\"cdcl\", \"dpll-rand\"]\nseed = 3\ntimeout_secs = 5\n",
            Path::new("/data"),
        )
        .unwrap();
        assert_eq!(spec.datasets, vec![PathBuf::from("/data/a.dat")]);
        assert_eq!(spec.variant, Variant::Cfim);
        assert_eq!(
            spec.thresholds,
            vec![Threshold::Absolute(2), Threshold::Fraction(0.5), Threshold::Fraction(0.25)]
        );
        assert_eq!(spec.algorithms, vec![Algorithm::Cdcl, Algorithm::DpllRand { seed: 3 }]);
        assert_eq!(spec.timeout, Duration::from_secs(5));
        assert!(spec.exclude_empty);

        assert!(RunSpec::from_toml("datasets = []\nthresholds = []\n", Path::new(".")).is_err());
        assert!(RunSpec::from_toml("datasets = []\nthresholds = [1]\nbogus = 1\n", Path::new(".")).is_err());
        assert!(RunSpec::from_toml("datasets = []\nthresholds = [1]\ntimeout_secs = 0\n", Path::new(".")).is_err());
    }

    #[test]
    fn digest_ignores_order() {
        let a: Itemset = [0, 2].into_iter().collect();
        let b: Itemset = [1].into_iter().collect();
        let mut x = ModelDigest::default();
        x.add(&a);
        x.add(&b);
        let mut y = ModelDigest::default();
        y.add(&b);
        y.add(&a);
        assert_eq!(x, y);
        let mut z = ModelDigest::default();
        z.add(&a);
        assert_ne!(x, z);
    }

    #[test]
    fn sidecar_naming() {
        assert_eq!(sidecar_path(Path::new("/tmp/x.cnf")), PathBuf::from("/tmp/x.cnf.map"));
    }
}

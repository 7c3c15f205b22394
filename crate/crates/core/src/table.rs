//! Table generation: enumeration of canonical symbols, the line format and the
//! file writer behind the `sixj` command.
//!
//! A table line is
//!
//! ```text
//! 2J1 2J2 2J3 2j1 2j2 2j3 [<a>|<b>|<g>] e2 e3 … e53 &m [p^e …]
//! ```
//!
//! where the parity marker is present only for super tables and the tail is a
//! [`RotenbergLine`].

use std::collections::BTreeMap;
use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::arith::{RotenbergLine, SqrtRationalValue};
use crate::error::{Error, Result};
use crate::orbit::{classify, classify_oracle, is_canonical, regge_star, OrbitReport, PartitionClass};
use crate::spin::{HalfInt, Mode, SixJSymbol};
use crate::superj::{eval, parity_of, Parity};

#[derive(Clone, Debug)]
pub struct TableConfig {
    pub max_spin: HalfInt,
    pub mode: Mode,
    pub classify: bool,
    pub output_dir: PathBuf,
    pub workers: usize,
}

impl TableConfig {
    pub fn new(max_spin: HalfInt, mode: Mode, output_dir: impl Into<PathBuf>) -> Self {
        TableConfig { max_spin, mode, classify: false, output_dir: output_dir.into(), workers: 1 }
    }

    fn validate(&self) -> Result<()> {
        if self.max_spin.twice() < 0 {
            return Err(Error::NegativeSpin { index: 0, twice: self.max_spin.twice() });
        }
        if self.workers == 0 {
            return Err(Error::Parse("workers must be at least 1".into()));
        }
        Ok(())
    }

    fn pool(&self) -> Result<rayon::ThreadPool> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .map_err(|e| Error::Io(format!("cannot start worker pool: {e}")))
    }
}

#[inline]
fn triad(a: i64, b: i64, c: i64, integral: bool) -> bool {
    (a - b).abs() <= c && c <= a + b && (!integral || (a + b + c) % 2 == 0)
}

/// Canonical symbols whose first spin is `a0` and second `a1`, in lexicographic order.
fn enumerate_prefix(a0: i64, a1: i64, max: i64, mode: Mode) -> Vec<SixJSymbol> {
    let integral = mode == Mode::Standard;
    let mut out = Vec::new();
    for a2 in a0..=max {
        if !triad(a0, a1, a2, integral) {
            continue;
        }
        for b1 in a0..=max {
            for b2 in a0..=max {
                if !triad(b1, b2, a2, integral) {
                    continue;
                }
                for b3 in a0..=max {
                    if !triad(a0, b2, b3, integral) || !triad(b1, a1, b3, integral) {
                        continue;
                    }
                    let s = SixJSymbol::from_twice_unchecked([a0, a1, a2, b1, b2, b3]);
                    if s.is_valid(mode) && is_canonical(&s) {
                        out.push(s);
                    }
                }
            }
        }
    }
    out
}

fn prefixes(max: i64) -> Vec<(i64, i64)> {
    (0..=max).flat_map(|a0| (a0..=max).map(move |a1| (a0, a1))).collect()
}

/// Every valid symbol with all spins `<= max_spin`, once, as its canonical form,
/// in lexicographic order of the doubled tuple.
pub fn enumerate_symbols(config: &TableConfig) -> Result<Vec<SixJSymbol>> {
    config.validate()?;
    let max = config.max_spin.twice();
    let mode = config.mode;
    let chunks: Vec<Vec<SixJSymbol>> = config
        .pool()?
        .install(|| prefixes(max).into_par_iter().map(|(a0, a1)| enumerate_prefix(a0, a1, max, mode)).collect());
    Ok(chunks.into_iter().flatten().collect())
}

/// Renders one table line. `parity` is printed only when given (super tables).
pub fn render_line(symbol: &SixJSymbol, value: &SqrtRationalValue, parity: Option<Parity>) -> String {
    let rot = RotenbergLine::encode(value);
    match parity {
        Some(p) => format!("{} {} {}", symbol.to_doubled_string(), p.marker(), rot),
        None => format!("{} {}", symbol.to_doubled_string(), rot),
    }
}

/// A parsed table line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub symbol: SixJSymbol,
    pub parity: Option<Parity>,
    pub value: SqrtRationalValue,
}

pub fn parse_line(line: &str) -> Result<TableEntry> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() < 6 + 17 {
        return Err(Error::Parse(format!("short table line {line:?}")));
    }
    let symbol: SixJSymbol = toks[..6].join(" ").parse()?;
    let (parity, rest) = match Parity::from_marker(toks[6]) {
        Some(p) => (Some(p), &toks[7..]),
        None => (None, &toks[6..]),
    };
    let rot: RotenbergLine = rest.join(" ").parse()?;
    Ok(TableEntry { symbol, parity, value: rot.decode() })
}

/// Classification report line: doubled symbol, optional parity marker, class,
/// closure size and number of representatives.
pub fn render_classification(symbol: &SixJSymbol, parity: Option<Parity>, report: &OrbitReport) -> String {
    let marker = parity.map(|p| format!(" {}", p.marker())).unwrap_or_default();
    format!(
        "{}{} {} {} {}",
        symbol.to_doubled_string(),
        marker,
        report.class,
        report.closure_size,
        report.representatives.len()
    )
}

pub fn table_file_name(mode: Mode) -> String {
    format!("{}table.txt", mode.name())
}

pub fn class_file_name(mode: Mode, parity: Parity, class: PartitionClass) -> String {
    format!("{}{}{}.txt", mode.name(), parity.letter(), class.index())
}

/// `(parity, class)` pairs that get a class file in `mode`.
pub fn class_files(mode: Mode) -> Vec<(Parity, PartitionClass)> {
    let parities: &[Parity] = match mode {
        Mode::Standard => &[Parity::Alpha],
        Mode::Super => &Parity::ALL,
    };
    parities.iter().flat_map(|&p| PartitionClass::reachable(p).iter().map(move |&c| (p, c))).collect()
}

struct Row {
    line: String,
    class: Option<(Parity, PartitionClass, String)>,
}

fn process(symbol: &SixJSymbol, mode: Mode, with_class: bool) -> Result<Row> {
    let value = eval(symbol, mode)?;
    let parity = match mode {
        Mode::Standard => Parity::Alpha,
        Mode::Super => parity_of(symbol)?,
    };
    let marker = (mode == Mode::Super).then_some(parity);
    let line = render_line(symbol, &value, marker);
    let class = if with_class {
        let predicted = classify(symbol, mode)?;
        let oracle = classify_oracle(symbol, mode)?;
        let report = regge_star(symbol, mode)?;
        if predicted != oracle || report.class != oracle {
            return Err(Error::Consistency(format!(
                "{symbol}: predicate {predicted}, closure {}, oracle {oracle}",
                report.class
            )));
        }
        Some((parity, oracle, render_classification(symbol, marker, &report)))
    } else {
        None
    };
    Ok(Row { line, class })
}

/// What [`run`] wrote.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunSummary {
    pub symbols: usize,
    pub files: Vec<PathBuf>,
    pub class_counts: BTreeMap<(Parity, PartitionClass), usize>,
}

const CHUNK: usize = 4096;

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path).map(BufWriter::new).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Writes the full table and, when `classify` is set, one file per
/// `(parity, class)` pair. Output bytes do not depend on `workers`.
pub fn run(config: &TableConfig) -> Result<RunSummary> {
    config.validate()?;
    let dir = &config.output_dir;
    fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
    let symbols = enumerate_symbols(config)?;
    let pool = config.pool()?;

    let mut summary = RunSummary { symbols: symbols.len(), ..Default::default() };
    let table_path = dir.join(table_file_name(config.mode));
    let mut table = create(&table_path)?;
    summary.files.push(table_path);

    let mut class_writers = BTreeMap::new();
    if config.classify {
        for (p, c) in class_files(config.mode) {
            let path = dir.join(class_file_name(config.mode, p, c));
            class_writers.insert((p, c), create(&path)?);
            summary.class_counts.insert((p, c), 0);
            summary.files.push(path);
        }
    }

    for chunk in symbols.chunks(CHUNK) {
        let rows: Vec<Row> =
            pool.install(|| chunk.par_iter().map(|s| process(s, config.mode, config.classify)).collect::<Result<_>>())?;
        for row in rows {
            writeln!(table, "{}", row.line)?;
            if let Some((p, c, text)) = row.class {
                let w = class_writers
                    .get_mut(&(p, c))
                    .ok_or_else(|| Error::Consistency(format!("no class file for {p}/{c}")))?;
                writeln!(w, "{text}")?;
                *summary.class_counts.get_mut(&(p, c)).unwrap() += 1;
            }
        }
    }
    table.flush()?;
    for w in class_writers.values_mut() {
        w.flush()?;
    }
    Ok(summary)
}

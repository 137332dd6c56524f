//! Command implementations behind the `sects` binary.
//!
//! Every command renders its whole output to a `String` first so the binary
//! can write it once, either to stdout or to `--output`.

use serde::Serialize;
use sects_core::{
    build_poset, clan_count, delannoy_to_lattice, dense_sect_bounded, enumerate_clans_bounded,
    is_upper_order_ideal, parse_delannoy, sect_of_clan, sect_partition_bounded,
    verify_dense_iso_bounded, BasisSubset, IsoReport, LatticePath, PosetJson, SectJson,
    DEFAULT_MAX_N,
};
use std::fmt::{self, Write as _};
use std::path::{Path, PathBuf};

/// Node colors for `hasse --color-by-sect`, indexed by the colex rank of the
/// sect's subset modulo 12.
pub const PALETTE: [&str; 12] = [
    "#e6194b", "#f58231", "#4363d8", "#f032e6", "#911eb4", "#469990", "#3cb44b", "#9a6324",
    "#800000", "#000075", "#808000", "#42d4f4",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Dot,
    Text,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Json => "json",
            OutputFormat::Dot => "dot",
            OutputFormat::Text => "text",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub p: usize,
    pub q: usize,
    pub output_format: OutputFormat,
    pub color_by_sect: bool,
    /// Upper bound on `p + q`.
    pub limit_n: usize,
    pub output_path: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(p: usize, q: usize, output_format: OutputFormat) -> Self {
        RunConfig {
            p,
            q,
            output_format,
            color_by_sect: false,
            limit_n: DEFAULT_MAX_N,
            output_path: None,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] sects_core::Error),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("`{command}` has no {format} output")]
    UnsupportedFormat {
        command: &'static str,
        format: OutputFormat,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.kind(),
            CliError::Io { .. } => "IoError",
            CliError::UnsupportedFormat { .. } => "UnsupportedFormat",
            CliError::Usage(_) => "UsageError",
        }
    }

    /// `{"error":{"kind":..,"message":..}}`
    pub fn to_json(&self) -> String {
        serde_json::json!({"error": {"kind": self.kind(), "message": self.to_string()}}).to_string()
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn unsupported(command: &'static str, format: OutputFormat) -> CliError {
    CliError::UnsupportedFormat { command, format }
}

#[derive(Serialize)]
struct EnumerateJson {
    p: usize,
    q: usize,
    count: usize,
    clans: Vec<String>,
}

pub fn cmd_enumerate(cfg: &RunConfig) -> CliResult<String> {
    let clans = enumerate_clans_bounded(cfg.p, cfg.q, cfg.limit_n)?;
    debug_assert_eq!(clans.len() as u128, clan_count(cfg.p, cfg.q));
    match cfg.output_format {
        OutputFormat::Text => {
            let mut out = format!("{}\n", clans.len());
            for c in &clans {
                writeln!(out, "{c}").unwrap();
            }
            Ok(out)
        }
        OutputFormat::Json => Ok(to_json(&EnumerateJson {
            p: cfg.p,
            q: cfg.q,
            count: clans.len(),
            clans: clans.iter().map(ToString::to_string).collect(),
        })),
        f => Err(unsupported("enumerate", f)),
    }
}

#[derive(Serialize)]
struct HasseJson {
    #[serde(flatten)]
    poset: PosetJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    sects: Option<Vec<BasisSubset>>,
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn cmd_hasse(cfg: &RunConfig) -> CliResult<String> {
    let clans = enumerate_clans_bounded(cfg.p, cfg.q, cfg.limit_n)?;
    let poset = build_poset(clans)?;
    match cfg.output_format {
        OutputFormat::Dot => {
            let mut out = format!("digraph \"C({},{})\" {{\n", cfg.p, cfg.q);
            out.push_str("  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n");
            for (i, c) in poset.elements().iter().enumerate() {
                let label = dot_escape(&c.to_string());
                if cfg.color_by_sect {
                    let key = sect_of_clan(c);
                    let color = PALETTE[key.colex_rank() % PALETTE.len()];
                    writeln!(
                        out,
                        "  n{i} [label=\"{label}\", color=\"{color}\", fontcolor=\"{color}\", tooltip=\"I = {key}\"];"
                    )
                    .unwrap();
                } else {
                    writeln!(out, "  n{i} [label=\"{label}\"];").unwrap();
                }
            }
            for &(lo, hi) in poset.covers() {
                writeln!(out, "  n{lo} -> n{hi};").unwrap();
            }
            out.push_str("}\n");
            Ok(out)
        }
        OutputFormat::Json => {
            let sects = cfg
                .color_by_sect
                .then(|| poset.elements().iter().map(sect_of_clan).collect());
            Ok(to_json(&HasseJson {
                poset: poset.to_json(),
                sects,
            }))
        }
        f => Err(unsupported("hasse", f)),
    }
}

#[derive(Serialize)]
struct SectsJson {
    p: usize,
    q: usize,
    sects: Vec<SectJson>,
}

pub fn cmd_sects(cfg: &RunConfig) -> CliResult<String> {
    let parts = sect_partition_bounded(cfg.p, cfg.q, cfg.limit_n)?;
    match cfg.output_format {
        OutputFormat::Json => Ok(to_json(&SectsJson {
            p: cfg.p,
            q: cfg.q,
            sects: parts.values().map(|s| s.to_json()).collect(),
        })),
        OutputFormat::Text => {
            let mut out = String::new();
            for (key, sect) in &parts {
                let members: Vec<String> = sect.members().iter().map(ToString::to_string).collect();
                writeln!(out, "{key} {} [{}] {}", sect.base(), sect.len(), members.join(" ")).unwrap();
            }
            Ok(out)
        }
        f => Err(unsupported("sects", f)),
    }
}

#[derive(Serialize)]
struct DenseJson {
    p: usize,
    q: usize,
    #[serde(rename = "I")]
    subset: BasisSubset,
    path: LatticePath,
    min: String,
    max: String,
    size: usize,
    ideal: bool,
    members: Vec<String>,
}

pub fn cmd_dense(cfg: &RunConfig) -> CliResult<String> {
    let dense = dense_sect_bounded(cfg.p, cfg.q, cfg.limit_n)?;
    let poset = build_poset(enumerate_clans_bounded(cfg.p, cfg.q, cfg.limit_n)?)?;
    let ideal = is_upper_order_ideal(dense.sect.members(), &poset)?;
    let report = DenseJson {
        p: cfg.p,
        q: cfg.q,
        subset: dense.sect.subset().clone(),
        path: sects_core::lattice_path(dense.sect.subset()),
        min: dense.min.to_string(),
        max: dense.max.to_string(),
        size: dense.sect.len(),
        ideal,
        members: dense.sect.members().iter().map(ToString::to_string).collect(),
    };
    match cfg.output_format {
        OutputFormat::Json => Ok(to_json(&report)),
        OutputFormat::Text => Ok(format!(
            "I = {}\nmin {}\nmax {}\nsize {}\nideal {}\n",
            report.subset, report.min, report.max, report.size, report.ideal
        )),
        f => Err(unsupported("dense", f)),
    }
}

/// Runs the rook-monoid check for `cfg.p` and returns the rendered report
/// together with whether the map is an isomorphism.
pub fn cmd_iso(cfg: &RunConfig) -> CliResult<(String, bool)> {
    let report: IsoReport = verify_dense_iso_bounded(cfg.p, cfg.limit_n)?;
    let ok = report.is_isomorphism();
    let out = match cfg.output_format {
        OutputFormat::Json => to_json(&report),
        OutputFormat::Text => format!(
            "p {}\ndense {}\nrooks {}\nbijective {}\norder_preserving {}\norder_reflecting {}\n",
            report.p,
            report.dense_size,
            report.rook_count,
            report.bijective,
            report.order_preserving,
            report.order_reflecting
        ),
        f => return Err(unsupported("iso", f)),
    };
    Ok((out, ok))
}

#[derive(Serialize)]
struct DelannoyJson {
    input: String,
    p: usize,
    q: usize,
    path: LatticePath,
}

pub fn cmd_delannoy(tokens: &str, format: OutputFormat) -> CliResult<String> {
    let path = delannoy_to_lattice(&parse_delannoy(tokens)?)?;
    match format {
        OutputFormat::Text => Ok(format!("{path}\n")),
        OutputFormat::Json => Ok(to_json(&DelannoyJson {
            input: tokens.to_string(),
            p: path.p(),
            q: path.q(),
            path,
        })),
        f => Err(unsupported("delannoy", f)),
    }
}

/// Writes `text` to `path`, or to stdout when there is none.
pub fn emit(text: &str, path: Option<&Path>) -> CliResult<()> {
    use std::io::Write;
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

//! Command-line front end: reference tables, single tilings and `p` sweeps
//! rendered as CSV or Markdown.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, ValueEnum};
use prismcover::covering::{sweep_with_unit, table, Table};
use prismcover::{
    covering_density_with_unit, CoveringResult, CoxeterSymbol, QuadratureConfig, SweepRow,
};
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID_TILING: i32 = 3;
pub const EXIT_NUMERIC: i32 = 4;

const VALUE_COLUMNS: [&str; 4] = ["h", "vol_S", "vol_H", "delta_min"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Markdown,
}

/// Least dense hyperball coverings of regular prism tilings in H^3, H^4, H^5.
#[derive(Debug, Parser)]
#[command(name = "prismcover", version)]
#[command(group(ArgGroup::new("mode").required(true).args(["table", "symbol", "sweep"])))]
pub struct Cli {
    /// Reproduce reference table N (1-7).
    #[arg(long, value_name = "N")]
    pub table: Option<u32>,

    /// Evaluate one tiling, e.g. "[7,3,3]" or "[7.5,3,3]".
    #[arg(long, value_name = "SYMBOL", allow_hyphen_values = true)]
    pub symbol: Option<String>,

    /// Sample the [p,q,r] family over a range of real p.
    #[arg(long, requires_all = ["q", "r", "p_min", "p_max", "step"])]
    pub sweep: bool,

    #[arg(long, requires = "sweep")]
    pub q: Option<f64>,

    #[arg(long, requires = "sweep")]
    pub r: Option<f64>,

    #[arg(long = "p-min", requires = "sweep")]
    pub p_min: Option<f64>,

    #[arg(long = "p-max", requires = "sweep")]
    pub p_max: Option<f64>,

    #[arg(long, requires = "sweep")]
    pub step: Option<f64>,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Decimal places (1-15).
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u8).range(1..=15))]
    pub precision: u8,

    /// Natural length unit k.
    #[arg(long = "unit-k", default_value_t = 1.0)]
    pub unit_k: f64,

    /// Absolute tolerance of the 5-dimensional volume quadrature.
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,

    /// Write to FILE instead of standard output.
    #[arg(long, short, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] prismcover::Error),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use prismcover::Error as E;
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io { .. } => EXIT_IO,
            CliError::Compute(e) => match e {
                E::InvalidSymbol(_) | E::UnknownTable(_) | E::InvalidConfig(_) => EXIT_USAGE,
                E::InvalidTiling { .. } => EXIT_INVALID_TILING,
                _ => EXIT_NUMERIC,
            },
        }
    }
}

/// Output format and precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OutputSpec {
    pub format: Format,
    pub precision: usize,
}

impl OutputSpec {
    pub fn new(format: Format, precision: usize) -> Result<Self, CliError> {
        if !(1..=15).contains(&precision) {
            return Err(CliError::Usage(format!(
                "precision must be between 1 and 15, got {precision}"
            )));
        }
        Ok(Self { format, precision })
    }
}

impl Default for OutputSpec {
    fn default() -> Self {
        Self {
            format: Format::Csv,
            precision: 8,
        }
    }
}

/// Rendered rows: a label column followed by the four value columns.
struct Rendered<'a> {
    title: Option<String>,
    label_header: &'a str,
    rows: Vec<(String, [f64; 4])>,
}

impl Rendered<'_> {
    fn render(&self, out: OutputSpec) -> String {
        let prec = out.precision;
        let mut s = String::new();
        match out.format {
            Format::Csv => {
                s.push_str(self.label_header);
                for c in VALUE_COLUMNS {
                    s.push(',');
                    s.push_str(c);
                }
                s.push('\n');
                for (label, values) in &self.rows {
                    s.push_str(label);
                    for v in values {
                        write!(s, ",{v:.prec$}").unwrap();
                    }
                    s.push('\n');
                }
            }
            Format::Markdown => {
                if let Some(title) = &self.title {
                    writeln!(s, "**{title}**\n").unwrap();
                }
                write!(s, "| {} |", self.label_header).unwrap();
                for c in VALUE_COLUMNS {
                    write!(s, " {c} |").unwrap();
                }
                s.push_str("\n|---|");
                s.push_str(&"---:|".repeat(VALUE_COLUMNS.len()));
                s.push('\n');
                for (label, values) in &self.rows {
                    write!(s, "| {label} |").unwrap();
                    for v in values {
                        write!(s, " {v:.prec$} |").unwrap();
                    }
                    s.push('\n');
                }
            }
        }
        s
    }
}

fn values(r: &CoveringResult) -> [f64; 4] {
    [r.h, r.vol_s, r.vol_h, r.delta_min]
}

pub fn render_table(t: &Table, out: OutputSpec) -> String {
    Rendered {
        title: Some(t.title.clone()),
        label_header: t.label_header,
        rows: t
            .rows
            .iter()
            .map(|row| (row.label.to_string(), values(&row.result)))
            .collect(),
    }
    .render(out)
}

pub fn render_density(r: &CoveringResult, out: OutputSpec) -> String {
    Rendered {
        title: None,
        label_header: "tiling",
        rows: vec![(r.symbol.to_string(), values(r))],
    }
    .render(out)
}

pub fn render_sweep(rows: &[SweepRow], out: OutputSpec) -> String {
    Rendered {
        title: None,
        label_header: "p",
        rows: rows
            .iter()
            .map(|r| (format!("{}", r.p), [r.h, r.vol_s, r.vol_h, r.delta_min]))
            .collect(),
    }
    .render(out)
}

pub fn cmd_table(
    id: u32,
    cfg: &QuadratureConfig,
    unit_k: f64,
    out: OutputSpec,
) -> Result<String, CliError> {
    Ok(render_table(&table(id, cfg, unit_k)?, out))
}

pub fn cmd_density(
    symbol_text: &str,
    cfg: &QuadratureConfig,
    unit_k: f64,
    out: OutputSpec,
) -> Result<String, CliError> {
    let symbol: CoxeterSymbol = symbol_text.parse()?;
    if !symbol.is_p_limit() && symbol.dim() > 3 && !symbol.is_integral() {
        return Err(CliError::Usage(format!(
            "{symbol_text}: only 3-dimensional symbols may have a real-valued p"
        )));
    }
    if symbol.params()[1..].iter().any(|k| k.fract() != 0.0) {
        return Err(CliError::Usage(format!(
            "{symbol_text}: only the first parameter may be real-valued"
        )));
    }
    Ok(render_density(
        &covering_density_with_unit(&symbol, cfg, unit_k)?,
        out,
    ))
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_sweep(
    q: f64,
    r: f64,
    p_min: f64,
    p_max: f64,
    step: f64,
    unit_k: f64,
    out: OutputSpec,
) -> Result<String, CliError> {
    Ok(render_sweep(
        &sweep_with_unit(q, r, p_min, p_max, step, unit_k)?,
        out,
    ))
}

/// Runs the parsed command and returns the rendered output.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let out = OutputSpec::new(cli.format, usize::from(cli.precision))?;
    let cfg = QuadratureConfig::with_abs_tol(cli.tol);
    cfg.validate()?;
    if let Some(id) = cli.table {
        cmd_table(id, &cfg, cli.unit_k, out)
    } else if let Some(text) = &cli.symbol {
        cmd_density(text, &cfg, cli.unit_k, out)
    } else {
        let need = |v: Option<f64>, name: &str| {
            v.ok_or_else(|| CliError::Usage(format!("--sweep requires --{name}")))
        };
        cmd_sweep(
            need(cli.q, "q")?,
            need(cli.r, "r")?,
            need(cli.p_min, "p-min")?,
            need(cli.p_max, "p-max")?,
            need(cli.step, "step")?,
            cli.unit_k,
            out,
        )
    }
}

/// Executes and writes the output; returns the process exit code.
pub fn run(cli: &Cli) -> Result<(), CliError> {
    let text = execute(cli)?;
    match &cli.output {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

use clap::{Args, Parser, Subcommand};
use sects_cli::{
    cmd_delannoy, cmd_dense, cmd_enumerate, cmd_hasse, cmd_iso, cmd_sects, emit, CliError,
    OutputFormat, RunConfig,
};
use sects_core::DEFAULT_MAX_N;
use std::path::PathBuf;
use std::process::ExitCode;

/// Clans, Bruhat order, sects and the rook monoid.
#[derive(Parser)]
#[command(name = "sects", version)]
struct Cli {
    /// Largest allowed p + q.
    #[arg(long, env = "SECTS_LIMIT_N", default_value_t = DEFAULT_MAX_N, global = true)]
    limit_n: usize,
    /// Write output to this file instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    /// Output format. Each command has its own default.
    #[arg(long, value_enum, global = true)]
    format: Option<OutputFormat>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Shape {
    #[arg(short)]
    p: usize,
    #[arg(short)]
    q: usize,
}

#[derive(Subcommand)]
enum Command {
    /// List all (p,q)-clans (default: text).
    Enumerate(Shape),
    /// Hasse diagram of the Bruhat order (default: dot).
    Hasse {
        #[command(flatten)]
        shape: Shape,
        /// Color nodes by the Schubert cell of their base clan.
        #[arg(long)]
        color_by_sect: bool,
    },
    /// Sect decomposition (default: json).
    Sects(Shape),
    /// The big sect, its extremes and the order-ideal check (default: json).
    Dense(Shape),
    /// Check Dense(p,p) against the rook monoid R_p (default: json).
    Iso {
        #[arg(short)]
        p: usize,
    },
    /// Convert a weighted Delannoy path such as "N D:1 E" (default: json).
    Delannoy { tokens: String },
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let config = |p, q, default| RunConfig {
        p,
        q,
        output_format: cli.format.unwrap_or(default),
        color_by_sect: false,
        limit_n: cli.limit_n,
        output_path: cli.output.clone(),
    };
    let (text, ok) = match &cli.command {
        Command::Enumerate(s) => (cmd_enumerate(&config(s.p, s.q, OutputFormat::Text))?, true),
        Command::Hasse { shape, color_by_sect } => {
            let mut cfg = config(shape.p, shape.q, OutputFormat::Dot);
            cfg.color_by_sect = *color_by_sect;
            (cmd_hasse(&cfg)?, true)
        }
        Command::Sects(s) => (cmd_sects(&config(s.p, s.q, OutputFormat::Json))?, true),
        Command::Dense(s) => (cmd_dense(&config(s.p, s.q, OutputFormat::Json))?, true),
        Command::Iso { p } => cmd_iso(&config(*p, *p, OutputFormat::Json))?,
        Command::Delannoy { tokens } => {
            (cmd_delannoy(tokens, cli.format.unwrap_or(OutputFormat::Json))?, true)
        }
    };
    emit(&text, cli.output.as_deref())?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.render().to_string();
            let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ");
            eprintln!("{}", CliError::Usage(first.to_string()).to_json());
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(2)
        }
    }
}

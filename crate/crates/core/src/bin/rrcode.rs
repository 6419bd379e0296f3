use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use rrcode::analysis::{self, capacity_1d_lq, capacity_1d_rr, capacity_2d_rr, capacity_gap_exact};
use rrcode::bits::{bits_to_bytes, bytes_to_bits};
use rrcode::experiment::{run_stats, ExperimentConfig};
use rrcode::rr::PageGrid;
use rrcode::stream::{PageStream, StreamCode};
use rrcode::{Direction, Error, GrayMap, GridLayout, LevelGrid, PatternSet, Scheme};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DATA: u8 = 3;

#[derive(Parser)]
#[command(
    name = "rrcode",
    version,
    about = "Read-and-run constrained coding for multi-level Flash"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Gray mapping, one "level bits" pair per line.
    Ragm {
        #[arg(long)]
        q: u32,
    },
    /// Print the capacity and rate tables.
    Tables {
        #[arg(long)]
        json: bool,
    },
    /// Print the normalized capacities for one level count.
    Capacity {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        json: bool,
    },
    /// Encode a file through a scheme.
    Encode(EncodeArgs),
    /// Decode the output of `encode`.
    Decode {
        /// Stream file, or the output prefix used with `encode` for grid schemes.
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
    },
    /// Scan a level grid for forbidden patterns; exits 1 if any are found.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Expected level count; must match the grid header.
        #[arg(long)]
        q: Option<u32>,
        #[arg(long, default_value = "both", value_parser = parse_direction)]
        direction: Direction,
    },
    /// Generate a seeded random grid through a scheme and report statistics.
    Stats {
        #[arg(long, default_value_t = 8)]
        q: u32,
        #[arg(long, default_value_t = 21)]
        m: usize,
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long, value_parser = parse_scheme)]
        scheme: Scheme,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct EncodeArgs {
    /// One of uncoded, rr1d-wordline, rr1d-bitline, rr2d, rll-interleaved,
    /// or the raw page streams loco and rll.
    #[arg(long)]
    scheme: String,
    #[arg(long, default_value_t = 8)]
    q: u32,
    #[arg(long, default_value_t = 7)]
    m: usize,
    /// Grid rows; the coded dimension for rr1d-bitline, computed from the input otherwise.
    #[arg(long)]
    rows: Option<usize>,
    /// Grid columns; the coded dimension for wordline schemes.
    #[arg(long)]
    cols: Option<usize>,
    #[arg(long)]
    input: PathBuf,
    /// Output file for streams, output prefix for grid schemes.
    #[arg(long)]
    output: PathBuf,
}

/// Sidecar written next to the grid files so that `decode` can undo the
/// layout and drop padding.
#[derive(Serialize, Deserialize)]
struct GridMeta {
    layout: GridLayout,
    nbits: usize,
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::Config(_)
            | Error::InvalidLevelCount { .. }
            | Error::InvalidCodeLength(_)
            | Error::InvalidRllParams { .. } => EXIT_USAGE,
            _ => EXIT_DATA,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn io_failure(path: &Path, err: std::io::Error) -> Failure {
    Failure {
        code: EXIT_DATA,
        message: format!("{}: {err}", path.display()),
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn parse_direction(s: &str) -> Result<Direction, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_scheme(s: &str) -> Result<Scheme, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| io_failure(path, e))
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| io_failure(path, e))
}

fn write(path: &Path, contents: impl AsRef<[u8]>) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| io_failure(path, e))
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut name = prefix.as_os_str().to_owned();
    name.push(suffix);
    PathBuf::from(name)
}

fn cmd_encode(args: EncodeArgs) -> Result<(), Failure> {
    let data = bytes_to_bits(&read(&args.input)?);
    let stream_code = match args.scheme.as_str() {
        "loco" => Some(StreamCode::Loco { m: args.m }),
        "rll" => Some(StreamCode::Rll { n: 18, k: 12 }),
        _ => None,
    };
    if let Some(code) = stream_code {
        let stream = PageStream::encode(code, &data)?;
        return write(&args.output, stream.to_text()?);
    }

    let scheme: Scheme = args
        .scheme
        .parse()
        .map_err(|e: Error| usage(e.to_string()))?;
    let coded_dim = if scheme == Scheme::Rr1dBitline {
        args.rows
            .ok_or_else(|| usage("--rows is required for rr1d-bitline"))?
    } else {
        args.cols.ok_or_else(|| usage("--cols is required"))?
    };
    let seed_layout = GridLayout {
        scheme,
        q: args.q,
        m: args.m,
        rows: coded_dim,
        cols: coded_dim,
    };
    seed_layout.validate()?;
    let mut layout = seed_layout.fit(data.len())?;
    let fixed_lines = if scheme == Scheme::Rr1dBitline {
        args.cols
    } else {
        args.rows
    };
    if let Some(lines) = fixed_lines {
        if scheme == Scheme::Rr1dBitline {
            layout.cols = lines;
        } else {
            layout.rows = lines;
        }
    }
    let capacity = layout.capacity()?;
    if capacity < data.len() {
        return Err(usage(format!(
            "input needs {} bits but a {}x{} grid holds {capacity}",
            data.len(),
            layout.rows,
            layout.cols
        )));
    }
    let mut payload = data.clone();
    payload.resize(capacity, false);
    let grid = layout.encode(&payload)?;
    let pages = PageGrid::from_levels(&grid, &GrayMap::new(layout.q)?)?;

    write(&with_suffix(&args.output, ".levels"), grid.to_text())?;
    write(&with_suffix(&args.output, ".pages"), pages.to_text())?;
    let meta = GridMeta {
        layout,
        nbits: data.len(),
    };
    write(
        &with_suffix(&args.output, ".meta.json"),
        serde_json::to_string_pretty(&meta).expect("meta serializes") + "\n",
    )
}

fn cmd_decode(input: &Path, output: &Path) -> Result<(), Failure> {
    let data = if input.is_file() {
        PageStream::parse_text(&read_text(input)?)?.decode()?
    } else {
        let meta_path = with_suffix(input, ".meta.json");
        let meta: GridMeta =
            serde_json::from_str(&read_text(&meta_path)?).map_err(|e| Failure {
                code: EXIT_DATA,
                message: format!("{}: {e}", meta_path.display()),
            })?;
        let grid = LevelGrid::parse_text(&read_text(&with_suffix(input, ".levels"))?)?;
        let mut bits = meta.layout.decode(&grid)?;
        if bits.len() < meta.nbits {
            return Err(Failure {
                code: EXIT_DATA,
                message: "grid holds fewer bits than the recorded payload".into(),
            });
        }
        bits.truncate(meta.nbits);
        bits
    };
    write(output, bits_to_bytes(&data))
}

fn cmd_verify(input: &Path, q: Option<u32>, direction: Direction) -> Result<bool, Failure> {
    let grid = LevelGrid::parse_text(&read_text(input)?)?;
    if let Some(q) = q {
        if q != grid.q() {
            return Err(usage(format!("--q {q} does not match grid q={}", grid.q())));
        }
    }
    let report = PatternSet::forbidden(grid.q())?.scan_grid(&grid, direction)?;
    println!("{}", report.to_json());
    Ok(report.is_clean())
}

#[derive(Serialize)]
struct CapacityReport {
    q: u32,
    c1d_lq: f64,
    c1d_rr: f64,
    c2d_rr: f64,
    gap_percent: f64,
    r2d_rr: f64,
}

fn cmd_capacity(q: u32, json: bool) -> Result<(), Failure> {
    let r = CapacityReport {
        q,
        c1d_lq: capacity_1d_lq(q)?,
        c1d_rr: capacity_1d_rr(q as u64)?,
        c2d_rr: capacity_2d_rr(q as u64)?,
        gap_percent: capacity_gap_exact(q)?,
        r2d_rr: analysis::rate_2d_rr(q as u64)?,
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&r).expect("serializes"));
    } else {
        println!("q       {}", r.q);
        println!("C1D_Lq  {:.4}", r.c1d_lq);
        println!("C1D_RR  {:.4}", r.c1d_rr);
        println!("C2D_RR  {:.4}", r.c2d_rr);
        println!("gap%    {:.3}", r.gap_percent);
        println!("R2D_RR  {:.4}", r.r2d_rr);
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Ragm { q } => print!("{}", GrayMap::new(q)?.to_table()),
        Command::Tables { json } => {
            let tables = analysis::make_tables()?;
            if json {
                println!("{}", tables.to_json());
            } else {
                print!("{}", tables.to_text());
            }
        }
        Command::Capacity { q, json } => cmd_capacity(q, json)?,
        Command::Encode(args) => cmd_encode(args)?,
        Command::Decode { input, output } => cmd_decode(&input, &output)?,
        Command::Verify {
            input,
            q,
            direction,
        } => {
            if !cmd_verify(&input, q, direction)? {
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
        Command::Stats {
            q,
            m,
            rows,
            cols,
            scheme,
            seed,
            output,
        } => {
            let config = ExperimentConfig {
                q,
                m,
                rows,
                cols,
                scheme,
                seed,
            };
            let json = run_stats(config)?.to_json() + "\n";
            match output {
                Some(path) => write(&path, json)?,
                None => print!("{json}"),
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("rrcode: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::Value;

use salemforge::format::{parse_precision, read_text, ConstructFile, SpecFile};
use salemforge::{
    apply_degree_cap, render_json, run, table, verify, BoundRequest, CliError, ConstructTarget, NumberRef, Request,
};

#[derive(Parser)]
#[command(
    name = "salemforge",
    version,
    about = "Certified Mahler measures, multiplicative relations and length checks"
)]
struct Cli {
    /// Target width of certified intervals, as a rational (`1e-30`, `1/1000`).
    #[arg(long, global = true, default_value = "1e-30")]
    precision: String,
    /// Largest exponent tried when searching for multiplicative relations.
    #[arg(long, global = true, default_value_t = 32)]
    max_exp: u32,
    /// Print a plain-text table instead of JSON.
    #[arg(long, global = true)]
    table: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Mahler measure of an integer polynomial.
    Mahler {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Salem/unit classification of a root of a polynomial.
    Classify {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        index: usize,
        /// Require degree at least 4 for Salem numbers.
        #[arg(long)]
        strict: bool,
    },
    /// Search for a^m b^n = 1 with |m|, |n| <= max-exp.
    Dependence {
        #[arg(allow_hyphen_values = true)]
        poly_a: String,
        index_a: usize,
        #[arg(allow_hyphen_values = true)]
        poly_b: String,
        index_b: usize,
    },
    /// Cocycle table and the product construction for a number or element.
    ConstructSalem {
        /// A polynomial, or a JSON file holding an element spec or a number.
        #[arg(allow_hyphen_values = true)]
        target: String,
        /// Root index when the target is a polynomial.
        index: Option<usize>,
        /// Polynomial whose splitting field acts; defaults to the minimal polynomial.
        #[arg(long, allow_hyphen_values = true)]
        context: Option<String>,
        /// Base field polynomial; defaults to `x`.
        #[arg(long, allow_hyphen_values = true)]
        base: Option<String>,
    },
    /// Length, root values, height comparisons and rank of an element.
    Length { spec: PathBuf },
    /// Pairwise cyclicity of squared lengths.
    Spectrum {
        #[arg(required = true, num_args = 2..)]
        specs: Vec<PathBuf>,
        #[arg(long)]
        c1: Option<String>,
        #[arg(long)]
        c2: Option<String>,
    },
    /// Bound calculators; all constants are supplied by the caller.
    Bound {
        #[command(subcommand)]
        which: BoundCmd,
    },
    /// Recheck a saved report (`-` reads standard input).
    Verify { report: PathBuf },
}

#[derive(Subcommand)]
enum BoundCmd {
    Kappa {
        n: u64,
    },
    AmorosoDavid {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        c_n: String,
    },
    Cor35 {
        #[arg(long)]
        deg: u64,
        #[arg(long)]
        c1: String,
        #[arg(long)]
        c2: String,
    },
    ThmD {
        #[arg(long)]
        deg: u64,
        #[arg(long)]
        c1: String,
        #[arg(long)]
        c2: String,
    },
    TwoLength {
        #[arg(long)]
        deg: u64,
        #[arg(long)]
        c1: String,
        #[arg(long)]
        c2: String,
    },
}

fn construct_target(
    target: &str,
    index: Option<usize>,
    context: Option<String>,
    base: Option<String>,
) -> Result<ConstructTarget, CliError> {
    let path = Path::new(target);
    if target.ends_with(".json") {
        let v: Value =
            serde_json::from_str(&read_text(path)?).map_err(|e| CliError::parse(format!("{target}: {e}")))?;
        if v.get("matrix").is_some() {
            let spec: SpecFile = serde_json::from_value(v).map_err(|e| CliError::parse(format!("{target}: {e}")))?;
            return Ok(ConstructTarget::Element { spec });
        }
        let f: ConstructFile = serde_json::from_value(v).map_err(|e| CliError::parse(format!("{target}: {e}")))?;
        return Ok(ConstructTarget::Number(f));
    }
    let index = index.ok_or_else(|| CliError::parse("a root index is required with a polynomial target"))?;
    Ok(ConstructTarget::Number(ConstructFile { name: None, poly: target.into(), index, context, base }))
}

fn request(cli: Cli) -> Result<Option<Request>, CliError> {
    let precision = parse_precision(&cli.precision)?.to_string();
    let max_exp = cli.max_exp;
    Ok(Some(match cli.cmd {
        Cmd::Mahler { poly } => Request::Mahler { poly, precision },
        Cmd::Classify { poly, index, strict } => Request::Classify { poly, index, strict, precision },
        Cmd::Dependence { poly_a, index_a, poly_b, index_b } => Request::Dependence {
            a: NumberRef { poly: poly_a, index: index_a },
            b: NumberRef { poly: poly_b, index: index_b },
            max_exp,
        },
        Cmd::ConstructSalem { target, index, context, base } => {
            Request::ConstructSalem { target: construct_target(&target, index, context, base)?, max_exp }
        }
        Cmd::Length { spec } => Request::Length { spec: SpecFile::read(&spec)?, precision, max_exp },
        Cmd::Spectrum { specs, c1, c2 } => Request::Spectrum {
            specs: specs.iter().map(|p| SpecFile::read(p)).collect::<Result<_, _>>()?,
            precision,
            max_exp,
            c1,
            c2,
        },
        Cmd::Bound { which } => Request::Bound {
            bound: match which {
                BoundCmd::Kappa { n } => BoundRequest::Kappa { n },
                BoundCmd::AmorosoDavid { n, d, c_n } => BoundRequest::AmorosoDavid { n, d, c_n, precision },
                BoundCmd::Cor35 { deg, c1, c2 } => BoundRequest::Cor35 { deg, c1, c2, precision },
                BoundCmd::ThmD { deg, c1, c2 } => BoundRequest::ThmD { deg, c1, c2, precision },
                BoundCmd::TwoLength { deg, c1, c2 } => BoundRequest::TwoLength { deg, c1, c2, precision },
            },
        },
        Cmd::Verify { .. } => return Ok(None),
    }))
}

fn read_report(path: &Path) -> Result<Value, CliError> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::parse(format!("stdin: {e}")))?;
        s
    } else {
        read_text(path)?
    };
    serde_json::from_str(&text).map_err(|e| CliError::parse(format!("report: {e}")))
}

fn execute(cli: Cli) -> Result<Value, CliError> {
    apply_degree_cap(std::env::var("SALEMFORGE_DEGREE_CAP").ok().as_deref())?;
    if let Cmd::Verify { report } = &cli.cmd {
        return verify::verify(&read_report(report)?);
    }
    let req = request(cli)?.expect("not verify");
    run(&req)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let as_table = cli.table;
    let print = |v: &Value| {
        if as_table {
            print!("{}", table::render(v));
        } else {
            print!("{}", render_json(v));
        }
    };
    match execute(cli) {
        Ok(v) => {
            print(&v);
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let Some(v) = &e.partial {
                print(v);
            }
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code as u8)
        }
    }
}

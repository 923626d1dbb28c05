//! `hsbetti`: Betti numbers, resolutions and invariants of hypersurface
//! singularities from the command line.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hsbetti::Error;

mod files;
mod verify;

#[derive(Parser)]
#[command(
    name = "hsbetti",
    version,
    about = "Minimal bigraded resolutions for hypersurface singularities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Betti numbers, shifts and reg_F of the annihilator module.
    Betti {
        #[arg(long)]
        poly: String,
        /// Comma-separated fractions, one per variable.
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<String>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        max_length: Option<usize>,
    },
    /// Free resolution of the quotient by an ideal read from a JSON file.
    Resolve {
        #[arg(long)]
        ideal: std::path::PathBuf,
        /// Minimalize and report the Betti table.
        #[arg(long)]
        minimal: bool,
        #[arg(long)]
        json: bool,
    },
    /// Milnor and Tjurina numbers and the quasi-homogeneity verdict.
    Classify {
        #[arg(long)]
        poly: String,
        /// Number of variables; defaults to the largest index in the polynomial.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Kernel of the Rees map and whether it is generated in degree one.
    Rees {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        n: Option<usize>,
        /// Include the variable `s` mapped to `f T`.
        #[arg(long)]
        with_s: bool,
        #[arg(long)]
        json: bool,
    },
    /// Build a Koszul or generalized Koszul complex.
    Complex {
        #[arg(long, value_enum)]
        kind: ComplexKind,
        /// JSON object, or `@FILE` to read it from a file.
        #[arg(long)]
        params: String,
        #[arg(long)]
        json: bool,
    },
    /// Compare computed Betti numbers with the closed forms.
    Verify {
        #[arg(value_enum)]
        what: verify::Check,
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ComplexKind {
    Koszul,
    Genkoszul,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", describe(&e));
            ExitCode::from(1)
        }
    }
}

fn describe(e: &Error) -> String {
    match e {
        Error::InfiniteDimensional => {
            "the singularity is not isolated at the origin (infinite Milnor number)".into()
        }
        Error::MissingWeights => "quasi-homogeneous weights are required (--weights)".into(),
        other => other.to_string(),
    }
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string(v).expect("serializable"));
}

fn run(cmd: Command) -> hsbetti::Result<bool> {
    match cmd {
        Command::Betti {
            poly,
            weights,
            json,
            max_length,
        } => {
            let inp = files::germ(&poly, None, Some(&weights))?;
            let r = hsbetti::singularity::resolve_nf(&inp, max_length)?;
            if json {
                print_json(&r.table.to_json());
            } else {
                println!("betti: {:?}", r.table.betti());
                println!("{}", r.table);
            }
        }
        Command::Resolve {
            ideal,
            minimal,
            json,
        } => {
            let gens = files::read_ideal(&ideal)?;
            let out = files::resolve_ideal(&gens, minimal)?;
            if json {
                print_json(&out);
            } else {
                files::print_resolution(&out);
            }
        }
        Command::Classify { poly, n, json } => {
            let inp = files::germ(&poly, n, None)?;
            let v = hsbetti::singularity::classify_quasi_homogeneous(&inp)?;
            if json {
                print_json(&serde_json::to_value(&v).expect("serializable"));
            } else {
                println!("mu = {}", v.milnor);
                println!("tau = {}", v.tjurina);
                println!("quasi_homogeneous = {}", v.quasi_homogeneous);
            }
        }
        Command::Rees {
            poly,
            n,
            with_s,
            json,
        } => {
            let inp = files::germ(&poly, n, None)?;
            let kernel = hsbetti::singularity::rees_kernel(&inp, with_s)?;
            let linear = hsbetti::singularity::is_linear_type(&kernel)?;
            let gens: Vec<String> = kernel.iter().map(ToString::to_string).collect();
            if json {
                print_json(&serde_json::json!({ "kernel": gens, "linear_type": linear }));
            } else {
                for g in &gens {
                    println!("{g}");
                }
                println!("linear_type = {linear}");
            }
        }
        Command::Complex { kind, params, json } => {
            let c = files::build_complex(matches!(kind, ComplexKind::Genkoszul), &params)?;
            let maps: Vec<_> = c.maps().iter().map(|m| m.to_json()).collect();
            if json {
                print_json(&serde_json::json!({ "ranks": c.ranks(), "maps": maps }));
            } else {
                println!("ranks: {:?}", c.ranks());
                for (i, m) in c.maps().iter().enumerate() {
                    println!("d_{}:", i + 1);
                    print!("{m}");
                }
            }
        }
        Command::Verify { what, n } => return Ok(verify::run(what, &n)),
    }
    Ok(true)
}

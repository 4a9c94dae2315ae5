//! Command-line interface: verify a full arrangement, or run individual
//! stages (graded basis, characteristic variety, plethysm chain, Lie
//! representation utilities).
//!
//! Exit codes: 0 = all expectations met, 1 = computation mismatch,
//! 2 = input rejected.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use eightplanes::arrangement::{
    arrangement_from_json, default_order, reference_arrangement, vandermonde_arrangement,
    ArrangementData, ArrangementMatrix, NV,
};
use eightplanes::certificate::{build_certificate, reference_checks, to_json};
use eightplanes::charvar::{characteristic_ideal, characteristic_invariants, NZ};
use eightplanes::lie::{
    classify_symplectic, cocharacter_weights, decompose_character, parse_weight_spec,
    sym2_character, tensor_character, wedge2_character, weight_system, Component,
};
use eightplanes::plethysm::{block_sizes, iterated_image_dims, sym2_operators};
use eightplanes::poly::{var_names, MonomialOrder};
use eightplanes::rational::{format_rational, parse_rational, Rational};
use eightplanes::Error;

#[derive(Parser)]
#[command(name = "eightplanes", version, about = "Exact certificates for eight-plane arrangement invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct ArrangementArgs {
    /// Vandermonde parameters: eight distinct nonzero rationals, comma-separated
    #[arg(long, value_name = "L1,..,L8", conflicts_with = "matrix")]
    vandermonde: Option<String>,

    /// JSON arrangement file: {"vandermonde":[..]} or {"matrix":[[..]x4]}
    #[arg(long, value_name = "FILE")]
    matrix: Option<String>,

    /// Monomial order: comma-separated variable names, decreasing precedence
    #[arg(long, value_name = "VAR_LIST")]
    order: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline and compare against the expected-value fixture
    Verify {
        #[command(flatten)]
        arrangement: ArrangementArgs,
        /// Write the JSON certificate to FILE instead of stdout
        #[arg(long, value_name = "FILE")]
        out: Option<String>,
    },
    /// Print the invariant monomial basis in one graded piece
    Basis {
        #[command(flatten)]
        arrangement: ArrangementArgs,
        /// Graded piece index, 0..=3
        #[arg(long)]
        p: usize,
    },
    /// Generators and Hilbert invariants of a characteristic ideal
    CharVariety {
        #[command(flatten)]
        arrangement: ArrangementArgs,
        /// Which characteristic ideal, 1 or 2
        #[arg(long)]
        k: usize,
    },
    /// Iterated symmetric-square image dimensions
    Plethysm {
        #[command(flatten)]
        arrangement: ArrangementArgs,
    },
    /// Lie representation utilities
    Reps {
        #[command(subcommand)]
        command: RepsCommand,
    },
}

#[derive(Subcommand)]
enum RepsCommand {
    /// Dimension of an irreducible, e.g. A5:[0,0,1,0,0]
    Dim { spec: String },
    /// Decompose the symmetric square
    Sym2 { spec: String },
    /// Decompose the exterior square
    Wedge2 { spec: String },
    /// Decompose a tensor product of two irreducibles of one algebra
    Tensor { left: String, right: String },
    /// Cocharacter weight multiplicities under a functional, e.g. 1,2,3,2,1
    Center {
        spec: String,
        #[arg(long, value_name = "VALUES")]
        functional: String,
    },
    /// All semisimple irreducibles of the given dimension with an invariant
    /// symplectic form (dimension capped at 64)
    Classify {
        #[arg(long)]
        dim: usize,
        /// Restrict to representations carrying an invariant symplectic form
        #[arg(long)]
        symplectic: bool,
    },
}

fn parse_order(text: &str) -> Result<MonomialOrder, Error> {
    let names = var_names(NV);
    let mut precedence = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        let idx = names
            .iter()
            .position(|n| n == part)
            .ok_or_else(|| Error::Input(format!("unknown variable {part:?}")))?;
        precedence.push(idx);
    }
    if precedence.len() != NV {
        return Err(Error::Input(format!(
            "order must list all {NV} variables, got {}",
            precedence.len()
        )));
    }
    MonomialOrder::with_precedence(precedence)
}

fn load_arrangement(args: &ArrangementArgs) -> Result<ArrangementMatrix, Error> {
    match (&args.vandermonde, &args.matrix) {
        (Some(vs), None) => {
            let lambda: Result<Vec<Rational>, Error> = vs
                .split(',')
                .map(|s| parse_rational(s.trim()).map_err(Error::Input))
                .collect();
            vandermonde_arrangement(&lambda?)
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Input(format!("cannot read {path}: {e}")))?;
            arrangement_from_json(&text)
        }
        (None, None) => Ok(reference_arrangement()),
        (Some(_), Some(_)) => Err(Error::Input(
            "pass at most one of --vandermonde and --matrix".into(),
        )),
    }
}

fn build_data(args: &ArrangementArgs) -> Result<ArrangementData, Error> {
    let matrix = load_arrangement(args)?;
    let order = match &args.order {
        Some(text) => parse_order(text)?,
        None => default_order(),
    };
    ArrangementData::with_order(matrix, order)
}

fn print_components(cs: &[Component]) {
    for c in cs {
        let ws: Vec<String> = c.highest_weight.iter().map(|x| x.to_string()).collect();
        println!("[{}]  dim {}  multiplicity {}", ws.join(","), c.dimension, c.multiplicity);
    }
}

fn run() -> Result<bool, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { arrangement, out } => {
            let data = build_data(&arrangement)?;
            let cert = build_certificate(&data)?;
            let checks = reference_checks(&cert)?;
            let json = to_json(&cert);
            match &out {
                Some(path) => std::fs::write(path, &json)
                    .map_err(|e| Error::Input(format!("cannot write {path}: {e}")))?,
                None => println!("{json}"),
            }
            let mut all_pass = true;
            for c in &checks {
                let status = if c.pass { "ok" } else { "MISMATCH" };
                eprintln!("{status:8} {}", c.name);
                if !c.pass {
                    eprintln!("         expected {}", c.expected);
                    eprintln!("         computed {}", c.computed);
                    all_pass = false;
                }
            }
            Ok(all_pass)
        }
        Command::Basis { arrangement, p } => {
            if p > 3 {
                return Err(Error::Input(format!("p must be 0..=3, got {p}")));
            }
            let data = build_data(&arrangement)?;
            for m in data.basis(p).display() {
                println!("{m}");
            }
            Ok(true)
        }
        Command::CharVariety { arrangement, k } => {
            let data = build_data(&arrangement)?;
            let ci = characteristic_ideal(&data, k)?;
            let names = var_names(NZ);
            for g in &ci.generators {
                println!("{}", g.display(&names));
            }
            let h = characteristic_invariants(&ci)?;
            let poly: Vec<String> = h.polynomial.iter().map(format_rational).collect();
            println!("hilbert polynomial coefficients: [{}]", poly.join(", "));
            println!("dimension: {}", h.dimension);
            println!("arithmetic genus: {}", h.arithmetic_genus);
            Ok(true)
        }
        Command::Plethysm { arrangement } => {
            let data = build_data(&arrangement)?;
            let ops = sym2_operators(&data)?;
            let chain = iterated_image_dims(&ops)?;
            println!("block sizes: {:?}", block_sizes());
            println!("image dimensions: {:?}", chain.dims);
            println!("cumulative: {}", chain.dims.iter().sum::<usize>());
            println!("final image fingerprint: {}", chain.final_fingerprint);
            Ok(true)
        }
        Command::Reps { command } => {
            match command {
                RepsCommand::Dim { spec } => {
                    let (alg, w) = parse_weight_spec(&spec)?;
                    println!("{}", alg.weyl_dim(&w)?);
                }
                RepsCommand::Sym2 { spec } => {
                    let (alg, w) = parse_weight_spec(&spec)?;
                    let ch = weight_system(&alg, &w)?;
                    print_components(&decompose_character(&sym2_character(&ch))?);
                }
                RepsCommand::Wedge2 { spec } => {
                    let (alg, w) = parse_weight_spec(&spec)?;
                    let ch = weight_system(&alg, &w)?;
                    print_components(&decompose_character(&wedge2_character(&ch))?);
                }
                RepsCommand::Tensor { left, right } => {
                    let (alg1, w1) = parse_weight_spec(&left)?;
                    let (alg2, w2) = parse_weight_spec(&right)?;
                    if alg1 != alg2 {
                        return Err(Error::Input(
                            "tensor factors must share one algebra".into(),
                        ));
                    }
                    let c1 = weight_system(&alg1, &w1)?;
                    let c2 = weight_system(&alg2, &w2)?;
                    print_components(&decompose_character(&tensor_character(&c1, &c2)?)?);
                }
                RepsCommand::Center { spec, functional } => {
                    let (alg, w) = parse_weight_spec(&spec)?;
                    let f: Result<Vec<Rational>, Error> = functional
                        .split(',')
                        .map(|s| parse_rational(s.trim()).map_err(Error::Input))
                        .collect();
                    let ch = weight_system(&alg, &w)?;
                    let weights: BTreeMap<i64, u64> = cocharacter_weights(&ch, &f?)?;
                    for (v, m) in weights {
                        println!("{v}: {m}");
                    }
                }
                RepsCommand::Classify { dim, symplectic } => {
                    if !symplectic {
                        return Err(Error::Input(
                            "only --symplectic classification is implemented".into(),
                        ));
                    }
                    for e in classify_symplectic(dim)? {
                        println!("{}  (dim {})", e.display(), e.dimension);
                    }
                }
            }
            Ok(true)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_parsing() {
        let ord = parse_order("x8,x1,x2,x3,x4,x5,x6,x7,y1,y2,y3,y4").unwrap();
        assert_eq!(ord.precedence()[0], 7);
        assert!(parse_order("x8,x1").is_err());
        assert!(parse_order("x8,x8,x1,x2,x3,x4,x5,x6,y1,y2,y3,y4").is_err());
        assert!(parse_order("z1,x1,x2,x3,x4,x5,x6,x7,y1,y2,y3,y4").is_err());
    }

    #[test]
    fn arrangement_loading() {
        let args = ArrangementArgs {
            vandermonde: None,
            matrix: None,
            order: None,
        };
        assert!(load_arrangement(&args).unwrap().is_reference());

        let args = ArrangementArgs {
            vandermonde: Some("1,2,3,4,5,6,7,8".into()),
            matrix: None,
            order: None,
        };
        assert!(load_arrangement(&args).unwrap().is_reference());

        // repeated parameter: degenerate, rejected
        let args = ArrangementArgs {
            vandermonde: Some("1,1,3,4,5,6,7,8".into()),
            matrix: None,
            order: None,
        };
        assert!(matches!(load_arrangement(&args), Err(Error::Input(_))));

        // malformed rational
        let args = ArrangementArgs {
            vandermonde: Some("1,2,x,4,5,6,7,8".into()),
            matrix: None,
            order: None,
        };
        assert!(matches!(load_arrangement(&args), Err(Error::Input(_))));
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(Error::Input(msg)) => {
            eprintln!("input rejected: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

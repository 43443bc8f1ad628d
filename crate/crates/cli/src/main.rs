use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use proj40::constructions::{self, certify, BinaryMatrix, DIM, LEN};
use proj40::decoders::DecoderRegistry;
use proj40::fuzz::{self, FuzzConfig};
use proj40::quaternary::{build_b10, build_e10, OrbitClassifier};
use proj40::transcript::Transcript;
use proj40::{Array4x10, BWord, CodeVariant, DecodeOutcome, Error};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INVARIANT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "proj40",
    version,
    about = "Encode, corrupt and decode words of the E10-projected [40,20,8] codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Code {
    De,
    Se,
}

impl From<Code> for CodeVariant {
    fn from(c: Code) -> Self {
        match c {
            Code::De => CodeVariant::DoublyEven,
            Code::Se => CodeVariant::SinglyEven,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Builtin {
    /// printed generator of the doubly-even code
    De,
    /// printed generator of the singly-even code
    Se,
    /// printed generator of the second doubly-even code
    De2,
    RhoA,
    RhoB,
    RhoC,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply a 20-bit message by the generator matrix.
    Encode {
        /// 20 bits (first bit selects row 1) or a 0x-prefixed hex number
        message: String,
        #[arg(long, value_enum, default_value = "de")]
        code: Code,
    },
    /// Flip bits of a 40-bit word.
    Corrupt {
        /// 40 bits or 10 hex digits
        word: String,
        /// comma-separated 1-based positions, at most three
        #[arg(long, value_delimiter = ',', conflicts_with = "weight")]
        flip: Vec<usize>,
        /// flip this many random distinct positions instead
        #[arg(long, requires = "seed")]
        weight: Option<u32>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Decode a received word.
    Decode {
        /// 40 bits or 10 hex digits
        #[arg(required_unless_present = "array")]
        word: Option<String>,
        /// read the word from a file holding a 4x10 bit array
        #[arg(long, conflicts_with = "word")]
        array: Option<PathBuf>,
        #[arg(long, default_value = "repr")]
        algorithm: String,
        #[arg(long, value_enum, default_value = "de")]
        code: Code,
        /// print the array, parities, case and corrected array
        #[arg(long, short)]
        verbose: bool,
    },
    /// Enumerate a binary code and report its parameters.
    Certify {
        /// text file with 20 rows of 40 bits
        #[arg(required_unless_present = "builtin")]
        matrix: Option<PathBuf>,
        #[arg(long, value_enum, conflicts_with = "matrix")]
        builtin: Option<Builtin>,
    },
    /// Compare both projection decoders with the oracle on random trials.
    Fuzz {
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_weight: u32,
        #[arg(long, value_enum, default_value = "de")]
        code: Code,
    },
    /// Count nonzero E10 codewords of each orbit type.
    Census,
    /// Print the quaternary and binary generator matrices.
    Tables,
}

/// A failure that maps to a specific exit code.
struct Exit(u8, String);

impl From<anyhow::Error> for Exit {
    fn from(e: anyhow::Error) -> Self {
        let code = match e.downcast_ref::<Error>() {
            Some(Error::Invariant(_)) => EXIT_INVARIANT,
            _ => EXIT_USAGE,
        };
        Exit(code, format!("error: {e:#}"))
    }
}

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        anyhow::Error::from(e).into()
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Exit(code, msg)) => {
            if code == EXIT_FAILURE {
                print!("{msg}");
            } else {
                eprintln!("{msg}");
            }
            ExitCode::from(code)
        }
    }
}

fn run(command: Command) -> Result<String, Exit> {
    match command {
        Command::Encode { message, code } => {
            let m = parse_message(&message)?;
            let c = CodeVariant::from(code).generator().encode(m)?;
            Ok(format!("{c}\n{}\n", c.to_hex()))
        }
        Command::Corrupt {
            word,
            flip,
            weight,
            seed,
        } => {
            let w: BWord = word.parse()?;
            let e = match (weight, seed) {
                (Some(weight), Some(seed)) => {
                    if weight as usize > LEN {
                        return Err(usage(format!("weight {weight} exceeds {LEN}")));
                    }
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    fuzz::random_error(&mut rng, weight)
                }
                _ => error_from_positions(&flip)?,
            };
            let v = w ^ e;
            Ok(format!("{v}\n{}\n", v.to_hex()))
        }
        Command::Decode {
            word,
            array,
            algorithm,
            code,
            verbose,
        } => {
            let v = match (word, array) {
                (Some(w), _) => w.parse::<BWord>()?,
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(&path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    text.parse::<Array4x10>()?.word()
                }
                (None, None) => unreachable!("clap requires one input"),
            };
            let variant = CodeVariant::from(code);
            let registry = DecoderRegistry::with_defaults(variant);
            let decoder = registry.get(&algorithm)?;
            let report = decoder.decode(v)?;
            let t = Transcript::new(decoder.name(), variant, report);
            let text = if verbose {
                t.render_verbose()
            } else {
                t.render_plain() + "\n"
            };
            match t.outcome() {
                DecodeOutcome::Corrected { .. } => Ok(text),
                DecodeOutcome::Failure => Err(Exit(EXIT_FAILURE, text)),
            }
        }
        Command::Certify { matrix, builtin } => {
            let g = match (matrix, builtin) {
                (Some(path), _) => {
                    let text = std::fs::read_to_string(&path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    BinaryMatrix::parse(&text)?
                }
                (None, Some(b)) => builtin_matrix(b)?,
                (None, None) => unreachable!("clap requires one input"),
            };
            let rank = g.rank();
            if g.rows().len() != DIM || rank != DIM {
                return Err(Error::RankDeficient {
                    rank,
                    expected: DIM,
                }
                .into());
            }
            Ok(certify(&g).to_string())
        }
        Command::Fuzz {
            trials,
            seed,
            max_weight,
            code,
        } => {
            if trials == 0 {
                return Err(usage("trials must be positive".into()));
            }
            let summary = fuzz::run(&FuzzConfig {
                trials,
                seed,
                max_weight,
                variant: code.into(),
            })?;
            let text = format!("{summary}\n");
            if summary.mismatches > 0 {
                return Err(Exit(EXIT_FAILURE, text));
            }
            Ok(text)
        }
        Command::Census => {
            let classifier = OrbitClassifier::global();
            let counts = classifier.census()?;
            let mut out = String::from("type  weight  count  expected  representative\n");
            for (t, n) in classifier.types().iter().zip(counts) {
                let _ = writeln!(
                    out,
                    "{:<4}  {:>6}  {:>5}  {:>8}  {}",
                    t.id, t.weight, n, t.expected_count, t.representative
                );
            }
            let _ = writeln!(out, "total {:>13}", counts.iter().sum::<usize>());
            Ok(out)
        }
        Command::Tables => {
            let mut out = String::new();
            for (name, m) in [("E10", build_e10()), ("B10", build_b10())] {
                let _ = writeln!(out, "# G({name})");
                for r in m.rows() {
                    let _ = writeln!(out, "{r}");
                }
                out.push('\n');
            }
            for (name, g) in [
                ("C40,1 DE (printed)", constructions::printed_de_matrix()),
                ("C40 SE (printed)", constructions::printed_se_matrix()),
                ("C40,2 DE (printed)", constructions::printed_de2_matrix()),
            ] {
                let _ = writeln!(out, "# G({name})");
                out.push_str(&g.to_text());
                out.push('\n');
            }
            Ok(out.trim_end().to_string() + "\n")
        }
    }
}

fn usage(msg: String) -> Exit {
    Exit(EXIT_USAGE, format!("error: {msg}"))
}

fn builtin_matrix(b: Builtin) -> Result<BinaryMatrix, Error> {
    let e10 = build_e10();
    Ok(match b {
        Builtin::De => constructions::printed_de_matrix(),
        Builtin::Se => constructions::printed_se_matrix(),
        Builtin::De2 => constructions::printed_de2_matrix(),
        Builtin::RhoA => constructions::rho_a(&e10)?,
        Builtin::RhoB => constructions::rho_b(&e10)?,
        Builtin::RhoC => constructions::rho_c(&e10)?,
    })
}

fn parse_message(s: &str) -> anyhow::Result<u64> {
    let s = s.trim();
    let m = if let Some(hex) = s.strip_prefix("0x") {
        u64::from_str_radix(hex, 16).context("bad hex message")?
    } else {
        if s.len() != DIM || !s.chars().all(|c| c == '0' || c == '1') {
            bail!("message must be {DIM} bits or 0x-prefixed hex, got {s:?}");
        }
        u64::from_str_radix(s, 2)?
    };
    if m >> DIM != 0 {
        bail!("message {s} is wider than {DIM} bits");
    }
    Ok(m)
}

fn error_from_positions(positions: &[usize]) -> Result<BWord, Exit> {
    if positions.len() > 3 {
        return Err(usage(format!(
            "at most three positions may be flipped, got {}",
            positions.len()
        )));
    }
    let mut e = BWord::ZERO;
    for &p in positions {
        if !(1..=LEN).contains(&p) {
            return Err(Error::InvalidPositions(format!("{p} is outside 1..={LEN}")).into());
        }
        if e.bit(p) {
            return Err(Error::InvalidPositions(format!("{p} appears twice")).into());
        }
        e = e.flip(p);
    }
    Ok(e)
}

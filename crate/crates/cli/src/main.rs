//! `symhodge`: mixed Hodge polynomials of symmetric products from the command
//! line.
//!
//! Exit codes: 0 on success, 1 on domain errors (bad presentation, not a
//! subgroup, disagreeing methods, failed identity), 2 on usage errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use symhodge::hodgecore::{self, compact_duality, hodge_table, mhp};
use symhodge::identities::{check_betti_identity, check_cheahfls, check_combgl, IdentityReport};
use symhodge::symprod::{
    self, equivariant_class_function, isotypic_multiplicity, parse_subgroup, quotient_by_subgroup, sym_epoly,
    sym_poincare,
};
use symhodge::{ExteriorPresentation, Method, Partition, Preset, Support, TriPoly};

#[derive(Parser)]
#[command(name = "symhodge", version, about = "Mixed Hodge polynomials of symmetric products")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Render polynomials with Unicode superscripts.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct Source {
    /// Named preset: torus, cstar, gl, lag, lie.
    #[arg(long)]
    preset: Option<String>,

    /// Presentation JSON file.
    #[arg(long, conflicts_with = "preset")]
    file: Option<PathBuf>,

    /// torus: complex dimension.
    #[arg(long)]
    d: Option<u32>,

    /// cstar: rank; lag: comma-separated multiplicities r_1,…,r_m.
    #[arg(long)]
    r: Option<String>,

    /// gl: matrix size.
    #[arg(long)]
    m: Option<u32>,

    /// lie: generator families as degree:multiplicity, e.g. 3:1,5:1.
    #[arg(long)]
    gens: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Det,
    Partition,
    Cheah,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Mixed Hodge polynomial (or Hodge table) of X.
    Mhp {
        #[command(flatten)]
        source: Source,
        /// Print the table of Hodge numbers instead.
        #[arg(long)]
        table: bool,
    },
    /// Mixed Hodge polynomial of Sym^n X.
    Sym {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "det")]
        method: MethodArg,
    },
    /// Character of S_n on the cohomology of X^n, class by class.
    Equivariant {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        n: usize,
    },
    /// Graded multiplicity of the irreducible representation λ.
    Isotypic {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        n: usize,
        /// Partition of n, e.g. 2,1.
        #[arg(long)]
        lambda: String,
    },
    /// Mixed Hodge polynomial of X^n / H for a subgroup H of S_n.
    Quotient {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        n: usize,
        /// File with one permutation per line, e.g. [2,3,1].
        #[arg(long)]
        subgroup: PathBuf,
    },
    /// Poincaré polynomial of X, or of Sym^n X with --n.
    Poincare {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        n: Option<usize>,
    },
    /// E-polynomial of X, or of Sym^n X with --n.
    Epoly {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Generating series of Sym^n X up to z^order.
    Cheah {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        order: usize,
        /// Use compactly supported Hodge numbers, obtained by duality.
        #[arg(long)]
        compact: bool,
        /// Complex dimension for the duality (defaults to the preset's).
        #[arg(long)]
        dim: Option<u32>,
    },
    /// Check a generating-function identity up to z^order.
    Identity {
        #[command(subcommand)]
        which: IdentityCommand,
    },
    /// Print a presentation.
    Preset {
        #[command(flatten)]
        source: Source,
    },
}

#[derive(Subcommand)]
enum IdentityCommand {
    /// Determinant average with I - t^{2i-1} M against distinct-odd-part counts.
    Combgl {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        order: usize,
    },
    /// Poincaré generating series against Betti numbers.
    Betti {
        #[arg(long)]
        r: String,
        #[arg(long)]
        order: usize,
    },
    /// Two-variable (t, x) series against diagonal Hodge numbers.
    Cheahfls {
        #[arg(long)]
        r: String,
        #[arg(long)]
        order: usize,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Domain(String),
}

impl From<symhodge::Error> for CliError {
    fn from(e: symhodge::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn parse_list(s: &str, what: &str) -> CliResult<Vec<u32>> {
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| CliError::Usage(format!("bad {what} list {s:?}"))))
        .collect()
}

fn need<T>(v: Option<T>, flag: &str, preset: &str) -> CliResult<T> {
    v.ok_or_else(|| CliError::Usage(format!("preset {preset} needs --{flag}")))
}

impl Source {
    fn preset(&self) -> CliResult<Option<Preset>> {
        let Some(name) = self.preset.as_deref() else {
            return Ok(None);
        };
        let p = match name {
            "torus" => Preset::Torus { d: need(self.d, "d", name)? },
            "cstar" => {
                let r = parse_list(&need(self.r.clone(), "r", name)?, "r")?;
                match r.as_slice() {
                    [r] => Preset::Cstar { r: *r },
                    _ => return Err(CliError::Usage("cstar takes a single --r".into())),
                }
            }
            "gl" => Preset::Gl { m: need(self.m, "m", name)? },
            "lag" => Preset::Lag {
                r: parse_list(&need(self.r.clone(), "r", name)?, "r")?,
            },
            "lie" => {
                let spec = need(self.gens.clone(), "gens", name)?;
                let gens = spec
                    .split(',')
                    .map(|g| {
                        let (d, r) = g
                            .split_once(':')
                            .ok_or_else(|| CliError::Usage(format!("bad generator {g:?}, expected d:r")))?;
                        let num = |x: &str| {
                            x.trim()
                                .parse::<u32>()
                                .map_err(|_| CliError::Usage(format!("bad generator {g:?}")))
                        };
                        Ok((num(d)?, num(r)?))
                    })
                    .collect::<CliResult<Vec<_>>>()?;
                Preset::Lie { gens }
            }
            other => return Err(CliError::Usage(format!("unknown preset {other:?}"))),
        };
        Ok(Some(p))
    }

    fn load(&self) -> CliResult<ExteriorPresentation> {
        if let Some(p) = self.preset()? {
            return Ok(p.presentation()?);
        }
        match &self.file {
            Some(path) => load_presentation(path),
            None => Err(CliError::Usage("give a presentation with --preset or --file".into())),
        }
    }

    fn is_weightless(&self) -> bool {
        self.preset.as_deref() == Some("lie")
    }
}

fn load_presentation(path: &PathBuf) -> CliResult<ExteriorPresentation> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Domain(format!("cannot read {}: {e}", path.display())))?;
    Ok(ExteriorPresentation::from_json(&text)?)
}

struct Out {
    json: bool,
    pretty: bool,
}

impl Out {
    fn poly(&self, p: &TriPoly) -> String {
        if self.pretty {
            p.pretty()
        } else {
            p.to_string()
        }
    }
}

fn note_formal(source: &Source) {
    if source.is_weightless() {
        eprintln!("note: topological presentation; u, v exponents are formal, only the Poincaré polynomial is meaningful");
    }
}

fn report(out: &Out, r: &IdentityReport) -> CliResult<()> {
    if out.json {
        println!("{}", r.to_json());
    } else {
        println!("{}", r.summary());
    }
    if r.equal {
        Ok(())
    } else {
        Err(CliError::Domain("identity check failed".into()))
    }
}

fn run(cli: Cli) -> CliResult<()> {
    let out = Out {
        json: cli.json,
        pretty: cli.pretty,
    };
    match cli.command {
        Command::Mhp { source, table } => {
            let pres = source.load()?;
            note_formal(&source);
            if table {
                let t = hodge_table(&pres);
                println!("{}", if out.json { t.to_json() } else { t.to_string() });
            } else {
                let p = mhp(&pres);
                println!("{}", if out.json { json!(p).to_string() } else { out.poly(&p) });
            }
        }
        Command::Sym { source, n, method } => {
            let pres = source.load()?;
            note_formal(&source);
            let methods: Vec<Method> = match method {
                MethodArg::Det => vec![Method::Det],
                MethodArg::Partition => vec![Method::Partition],
                MethodArg::Cheah => vec![Method::Cheah],
                MethodArg::All => Method::ALL.to_vec(),
            };
            let results = methods
                .iter()
                .map(|&m| symprod::sym_mhp(&pres, n, m))
                .collect::<Result<Vec<_>, _>>()?;
            if out.json {
                if results.len() == 1 {
                    println!("{}", results[0].to_json());
                } else {
                    println!("{}", json!(results));
                }
            } else if results.len() == 1 {
                println!("{}", out.poly(&results[0].poly));
            } else {
                for r in &results {
                    println!("{}: {}", r.method, out.poly(&r.poly));
                }
            }
            if results.windows(2).any(|w| w[0].poly != w[1].poly) {
                return Err(CliError::Domain("methods disagree".into()));
            }
        }
        Command::Equivariant { source, n } => {
            let pres = source.load()?;
            let cf = equivariant_class_function(&pres, n)?;
            symprod::dimension_check(&cf, &pres)?;
            if out.json {
                println!("{}", json!(cf));
            } else {
                for (c, v) in cf.iter() {
                    println!("{}: {}", c.to_partition(), out.poly(v));
                }
            }
        }
        Command::Isotypic { source, n, lambda } => {
            let pres = source.load()?;
            let lam: Partition = lambda
                .parse()
                .map_err(|_| CliError::Usage(format!("bad partition {lambda:?}")))?;
            if lam.n() != n {
                return Err(CliError::Usage(format!("λ = {lam} is not a partition of {n}")));
            }
            let cf = equivariant_class_function(&pres, n)?;
            let p = isotypic_multiplicity(&cf, &lam)?;
            if out.json {
                println!("{}", json!({"n": n, "lambda": lam.to_string(), "poly": p}));
            } else {
                println!("{}", out.poly(&p));
            }
        }
        Command::Quotient { source, n, subgroup } => {
            let pres = source.load()?;
            let text = fs::read_to_string(&subgroup)
                .map_err(|e| CliError::Domain(format!("cannot read {}: {e}", subgroup.display())))?;
            let h = parse_subgroup(&text)?;
            let p = quotient_by_subgroup(&pres, n, &h)?;
            if out.json {
                println!("{}", json!({"n": n, "order": h.len(), "poly": p}));
            } else {
                println!("{}", out.poly(&p));
            }
        }
        Command::Poincare { source, n } => {
            let pres = source.load()?;
            let p = match n {
                Some(n) => sym_poincare(&pres, n)?,
                None => hodgecore::poincare(&pres),
            };
            if out.json {
                println!("{}", json!({"n": n, "poly": p}));
            } else {
                println!("{}", out.poly(&p));
            }
        }
        Command::Epoly { source, n } => {
            let pres = source.load()?;
            note_formal(&source);
            let p = match n {
                Some(n) => sym_epoly(&pres, n)?,
                None => hodgecore::e_poly(&pres),
            };
            if out.json {
                println!("{}", json!({"n": n, "poly": p}));
            } else {
                println!("{}", out.poly(&p));
            }
        }
        Command::Cheah {
            source,
            order,
            compact,
            dim,
        } => {
            let pres = source.load()?;
            note_formal(&source);
            let mut table = hodge_table(&pres);
            let support = if compact {
                let d = dim
                    .or(source.preset()?.and_then(|p| p.complex_dim()))
                    .ok_or_else(|| CliError::Usage("--compact needs --dim for this presentation".into()))?;
                table = compact_duality(&table, d)?;
                Support::Compact
            } else {
                Support::Ordinary
            };
            let series = symprod::cheah_series(&table, order, support)?;
            if out.json {
                println!("{}", json!({"order": order, "support": support, "coeffs": series.coeffs()}));
            } else {
                for (k, c) in series.coeffs().iter().enumerate() {
                    println!("z^{k}: {}", out.poly(c));
                }
            }
        }
        Command::Identity { which } => {
            let r = match which {
                IdentityCommand::Combgl { m, order } => check_combgl(m, order)?,
                IdentityCommand::Betti { r, order } => check_betti_identity(&parse_list(&r, "r")?, order)?,
                IdentityCommand::Cheahfls { r, order } => check_cheahfls(&parse_list(&r, "r")?, order)?,
            };
            report(&out, &r)?;
        }
        Command::Preset { source } => {
            let pres = source.load()?;
            if out.json {
                println!("{}", pres.to_json());
            } else {
                if let Some(label) = pres.label() {
                    println!("{label}");
                }
                for f in pres.families() {
                    println!("({};{},{}) x {}", f.d, f.p, f.q, f.r);
                }
            }
        }
    }
    Ok(())
}

fn configure_threads() -> CliResult<()> {
    let Ok(value) = std::env::var("SYMHODGE_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .parse()
        .map_err(|_| CliError::Usage(format!("SYMHODGE_THREADS must be a number, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|_| run(cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

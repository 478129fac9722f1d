use clap::{Parser, Subcommand, ValueEnum};
use resolving::classify::{
    gcf_validate, gcf_witness, hyper_phi, pd0_witness, phi_dominant, phi_pd, GcfVerdict,
    ResolvingDescriptor, WitnessResult,
};
use resolving::error::Error;
use resolving::gring::GradedRing;
use resolving::io::{
    parse_chain_levels, parse_descriptor, parse_module, parse_ring, render_betti,
    render_descriptor, render_module,
};
use resolving::module::ModulePresentation;
use resolving::spectrum::{codepth_profile, ipd_locus, nonfree_locus, pd_profile};
use resolving::stable::lci_split;
use resolving::verify::{run_suite, SUITES};
use std::path::{Path, PathBuf};
use std::sync::Arc;

/// Exact invariants of graded modules and the resolving-subcategory
/// classifications built on them.
#[derive(Parser)]
#[command(name = "resolving", version, about)]
struct Cli {
    /// Worker threads (accepted for interface stability; output is
    /// byte-identical for any value)
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileKind {
    Pd,
    Codepth,
}

#[derive(Clone, Copy, ValueEnum)]
enum PhiKind {
    Pd,
    Dominant,
    Hyper,
}

#[derive(Subcommand)]
enum Command {
    /// Print the minimal free resolution as Betti rows
    Resolve {
        #[arg(long)]
        ring: PathBuf,
        #[arg(long)]
        module: PathBuf,
        /// Resolution steps (default: depth R + 1)
        #[arg(long)]
        steps: Option<usize>,
    },
    /// Print pd, depth, nonfree locus and infinite-pd locus
    Invariants {
        #[arg(long)]
        ring: PathBuf,
        #[arg(long)]
        module: PathBuf,
    },
    /// Print the pd or codepth profile chain
    Profile {
        #[arg(long)]
        ring: PathBuf,
        #[arg(long)]
        module: PathBuf,
        #[arg(long, value_enum, default_value = "pd")]
        kind: ProfileKind,
    },
    /// Check that a chain file encodes a grade consistent function
    GcfValidate {
        #[arg(long)]
        ring: PathBuf,
        #[arg(long)]
        chain: PathBuf,
    },
    /// Compute the descriptor of the subcategory generated by modules
    Phi {
        #[arg(long)]
        ring: PathBuf,
        #[arg(long, required = true, num_args = 1..)]
        module: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "pd")]
        kind: PhiKind,
    },
    /// Decide membership of a module in a described subcategory
    Member {
        #[arg(long)]
        ring: PathBuf,
        #[arg(long)]
        module: PathBuf,
        #[arg(long)]
        descriptor: PathBuf,
    },
    /// Produce generator witnesses: either for a grade consistent
    /// function, or the n-th finite-length filtration generator
    Witness {
        #[arg(long)]
        ring: PathBuf,
        /// Chain file of the target function
        #[arg(long, conflicts_with = "pd0")]
        gcf: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        budget: u32,
        /// Filtration stage (1-based)
        #[arg(long)]
        pd0: Option<u32>,
    },
    /// Split a module into a finite-pd part and an MCM part
    Split {
        #[arg(long)]
        ring: PathBuf,
        #[arg(long)]
        module: PathBuf,
    },
    /// Run a verification suite
    Verify {
        #[arg(long)]
        suite: Option<String>,
        /// Run every suite
        #[arg(long, conflicts_with = "suite")]
        all: bool,
    },
}

fn load_ring(path: &Path) -> Result<Arc<GradedRing>, Error> {
    let text = std::fs::read_to_string(path)?;
    parse_ring(&text)
}

fn load_module(path: &Path, ring: &Arc<GradedRing>) -> Result<ModulePresentation, Error> {
    let text = std::fs::read_to_string(path)?;
    parse_module(&text, ring)
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Resolve { ring, module, steps } => {
            let r = load_ring(&ring)?;
            let m = load_module(&module, &r)?;
            let steps = steps.unwrap_or(r.depth as usize + 1);
            let res = m.free_resolution(steps);
            print!("{}", render_betti(&res));
            println!("minimal: {}", res.is_minimal());
            println!("truncated: {}", res.truncated);
            Ok(0)
        }
        Command::Invariants { ring, module } => {
            let r = load_ring(&ring)?;
            let m = load_module(&module, &r)?;
            println!("pd {}", m.pd());
            println!("depth {}", m.depth());
            println!("NF {}", nonfree_locus(&m)?.render());
            println!("IPD {}", ipd_locus(&m)?.render());
            Ok(0)
        }
        Command::Profile { ring, module, kind } => {
            let r = load_ring(&ring)?;
            let m = load_module(&module, &r)?;
            let chain = match kind {
                ProfileKind::Pd => pd_profile(&m)?,
                ProfileKind::Codepth => codepth_profile(&m)?,
            };
            print!("{}", chain.render());
            Ok(0)
        }
        Command::GcfValidate { ring, chain } => {
            let r = load_ring(&ring)?;
            let text = std::fs::read_to_string(&chain)?;
            let levels = parse_chain_levels(&text, &r)?;
            match gcf_validate(&r, levels)? {
                GcfVerdict::Valid(_) => println!("VALID"),
                GcfVerdict::Violation { level, reason } => {
                    println!("INVALID level {}: {}", level, reason)
                }
            }
            Ok(0)
        }
        Command::Phi { ring, module, kind } => {
            let r = load_ring(&ring)?;
            let gens = module
                .iter()
                .map(|p| load_module(p, &r))
                .collect::<Result<Vec<_>, _>>()?;
            let desc = match kind {
                PhiKind::Pd => ResolvingDescriptor::FinPd(phi_pd(&gens)?),
                PhiKind::Dominant => ResolvingDescriptor::Dominant(phi_dominant(&gens)?),
                PhiKind::Hyper => {
                    let (w, f) = hyper_phi(&gens)?;
                    ResolvingDescriptor::Hyper(w, f)
                }
            };
            print!("{}", render_descriptor(&desc));
            Ok(0)
        }
        Command::Member { ring, module, descriptor } => {
            let r = load_ring(&ring)?;
            let m = load_module(&module, &r)?;
            let text = std::fs::read_to_string(&descriptor)?;
            let base = descriptor.parent().unwrap_or(Path::new("."));
            let desc = parse_descriptor(&text, &r, base)?;
            let v = desc.member(&m)?;
            if v.member {
                println!("MEMBER");
            } else {
                println!("NON-MEMBER");
                println!("{}", v.detail);
            }
            Ok(0)
        }
        Command::Witness { ring, gcf, budget, pd0 } => {
            let r = load_ring(&ring)?;
            if let Some(n) = pd0 {
                let w = pd0_witness(&r, n)?;
                print!("{}", render_betti(&w.resolution));
                print!("{}", render_module(&w.module));
                return Ok(0);
            }
            let chain = gcf.ok_or_else(|| {
                Error::Invalid("witness needs either --gcf <file> or --pd0 <n>".into())
            })?;
            let text = std::fs::read_to_string(&chain)?;
            let levels = parse_chain_levels(&text, &r)?;
            let f = match gcf_validate(&r, levels)? {
                GcfVerdict::Valid(f) => f,
                GcfVerdict::Violation { level, reason } => {
                    return Err(Error::Invalid(format!(
                        "chain is not grade consistent at level {}: {}",
                        level, reason
                    )))
                }
            };
            match gcf_witness(&f, budget)? {
                WitnessResult::Found(ms) => {
                    println!("FOUND {}", ms.len());
                    for (i, m) in ms.iter().enumerate() {
                        println!("# witness {}", i + 1);
                        print!("{}", render_module(m));
                    }
                }
                WitnessResult::NotFound { uncovered_level } => {
                    println!("NOT-FOUND uncovered level {}", uncovered_level);
                }
            }
            Ok(0)
        }
        Command::Split { ring, module } => {
            let r = load_ring(&ring)?;
            let m = load_module(&module, &r)?;
            let s = lci_split(&m)?;
            println!("# finite-pd part (pd {})", s.pd_part.pd());
            print!("{}", render_module(&s.pd_part));
            println!("# MCM part");
            print!("{}", render_module(&s.mcm_part));
            Ok(0)
        }
        Command::Verify { suite, all } => {
            let names: Vec<&str> = if all {
                SUITES.to_vec()
            } else {
                match &suite {
                    Some(s) => vec![s.as_str()],
                    None => SUITES.to_vec(),
                }
            };
            let mut failed = 0usize;
            for name in names {
                let results = run_suite(name)?;
                let passed = results.iter().filter(|r| r.pass).count();
                for r in &results {
                    if r.pass {
                        println!("PASS {}", r.name);
                    } else {
                        println!("FAIL {}: {}", r.name, r.detail);
                        failed += 1;
                    }
                }
                println!("suite {}: {}/{} checks passed", name, passed, results.len());
            }
            Ok(if failed == 0 { 0 } else { 1 })
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {}", e);
            std::process::exit(e.exit_code());
        }
    }
}

//! `ideallab`: classify ideals, scan families, run the theorem verifiers and
//! the two constructions.
//!
//! Exit status: 0 on success, 1 when a verifier reports a violation, 2 on
//! usage, parse or precondition errors.

mod output;

use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use ideallab::theorems::{construct_pm, construct_xm, Mutation};
use ideallab::{
    enumerate_ideals, verify_theorem, Classifier, Error, FamilyBounds, Ideal, IdealFamily, MonomialBounds,
    RingHandle, Scope, TheoremId,
};
use output::Format;

#[derive(Parser, Debug)]
#[command(name = "ideallab", version, about = "Decide and explore 1-absorbing primary ideals")]
struct Cli {
    /// Worker threads; defaults to IDEALLAB_THREADS, then the number of CPUs.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify one ideal.
    Classify {
        /// Ring spec: Z, Z/12, Z/4xZ/9, Zloc:5, Zinv:2, kxy.
        #[arg(long)]
        ring: String,
        /// Ideal spec: (12), (4)x(9), p^3, x^2,x*y.
        #[arg(long)]
        ideal: String,
        /// Degree bound of the kxy searches.
        #[arg(long, default_value_t = 4)]
        degree: u32,
    },
    /// Classify every ideal of a bounded family, one row per ideal.
    Scan {
        #[arg(long, value_enum)]
        family: ScanFamily,
        /// Inclusive modulus range `a..b` for zmod and int.
        #[arg(long, value_parser = parse_range)]
        n_range: Option<RangeInclusive<u64>>,
        /// Left component modulus for prod.
        #[arg(long)]
        left: Option<u64>,
        /// Right component modulus for prod.
        #[arg(long)]
        right: Option<u64>,
        /// Generator degree for kxy families, also the search degree.
        #[arg(long, default_value_t = 2)]
        degree: u32,
    },
    /// Run theorem verifiers.
    Verify {
        /// `all` or a comma-separated list of ids.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        theorem: Vec<String>,
        /// Bound for Z/n and for the moduli of Z and Z[1/s].
        #[arg(long)]
        max_n: Option<u64>,
        /// Component bound for Z/n x Z/m.
        #[arg(long)]
        prod_max: Option<u64>,
        /// kxy search degree.
        #[arg(long)]
        degree: Option<u32>,
        /// Replace a true statement by a false one; `2abs-implies-1abs`.
        #[arg(long)]
        mutate: Option<String>,
        /// Include elapsed time per report.
        #[arg(long)]
        timings: bool,
    },
    /// Build xM or PM in a quasilocal ring.
    Construct {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        ring: String,
        /// The element x for xm.
        #[arg(long)]
        elem: Option<String>,
        /// The prime ideal P for pm.
        #[arg(long)]
        prime: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ScanFamily {
    Zmod,
    Int,
    Prod,
    Kxy,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Xm,
    Pm,
}

fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let (a, b) = s.split_once("..=").or_else(|| s.split_once("..")).ok_or(format!("expected a..b, got `{s}`"))?;
    let a: u64 = a.trim().parse().map_err(|_| format!("bad range start `{a}`"))?;
    let b: u64 = b.trim().parse().map_err(|_| format!("bad range end `{b}`"))?;
    if a > b {
        return Err(format!("empty range `{s}`"));
    }
    Ok(a..=b)
}

enum Failure {
    Usage(String),
    Violations,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli
        .threads
        .or_else(|| std::env::var("IDEALLAB_THREADS").ok().and_then(|s| s.trim().parse().ok()))
        .unwrap_or(0);
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(cli.command, cli.format) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Violations) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, format: Option<Format>) -> Result<String, Failure> {
    match command {
        Command::Classify { ring, ideal, degree } => {
            let ring: RingHandle = ring.parse()?;
            let ideal = Ideal::parse(&ring, &ideal)?;
            let report = classifier(degree).report(&ideal)?;
            Ok(output::reports(&[report], format.unwrap_or(Format::Text)))
        }
        Command::Scan { family, n_range, left, right, degree } => {
            let families = scan_families(family, n_range, left, right, degree)?;
            let classifier = classifier(degree.max(1));
            let mut ideals = Vec::new();
            for f in &families {
                ideals.extend(enumerate_ideals(f)?);
            }
            let rows = ideals
                .par_iter()
                .map(|i| if i.is_proper() { classifier.report(i) } else { Ok(output::improper_report(i)) })
                .collect::<Result<Vec<_>, Error>>()?;
            Ok(output::reports(&rows, format.unwrap_or(Format::Csv)))
        }
        Command::Verify { theorem, max_n, prod_max, degree, mutate, timings } => {
            let ids = theorem_ids(&theorem)?;
            let mut scope = Scope::default();
            if let Some(n) = max_n {
                scope = scope.with_max_n(n);
            }
            if let Some(p) = prod_max {
                scope.prod_max = p;
            }
            if let Some(d) = degree {
                scope.monloc_degree = d;
            }
            scope.mutation = mutate.map(|m| m.parse::<Mutation>()).transpose()?;
            scope.validate()?;
            let mut reports = Vec::new();
            for id in ids {
                let mut r = verify_theorem(id, &scope)?;
                if !timings {
                    r.elapsed_ms = None;
                }
                reports.push(r);
            }
            let text = output::verification(&reports, format.unwrap_or(Format::Text));
            if reports.iter().all(|r| r.passed()) {
                Ok(text)
            } else {
                print!("{text}");
                Err(Failure::Violations)
            }
        }
        Command::Construct { kind, ring, elem, prime } => {
            let ring: RingHandle = ring.parse()?;
            let c = match kind {
                Kind::Xm => {
                    let elem = elem.ok_or(Failure::Usage("construct --kind xm needs --elem".into()))?;
                    construct_xm(&ring, &ring.parse_element(&elem)?)?
                }
                Kind::Pm => {
                    let prime = prime.ok_or(Failure::Usage("construct --kind pm needs --prime".into()))?;
                    construct_pm(&ring, &Ideal::parse(&ring, &prime)?)?
                }
            };
            Ok(output::construction(&ring, &c, format.unwrap_or(Format::Text)))
        }
    }
}

fn classifier(degree: u32) -> Classifier {
    Classifier::new(MonomialBounds { degree, ..MonomialBounds::default() })
}

fn scan_families(
    family: ScanFamily,
    n_range: Option<RangeInclusive<u64>>,
    left: Option<u64>,
    right: Option<u64>,
    degree: u32,
) -> Result<Vec<IdealFamily>, Failure> {
    let need_range = |name: &str| Failure::Usage(format!("scan --family {name} needs --n-range a..b"));
    Ok(match family {
        ScanFamily::Zmod => {
            let range = n_range.ok_or_else(|| need_range("zmod"))?;
            range
                .map(|n| Ok(IdealFamily::new(RingHandle::zmod(n)?, FamilyBounds::Exhaustive)))
                .collect::<Result<_, Error>>()?
        }
        ScanFamily::Int => {
            let range = n_range.ok_or_else(|| need_range("int"))?;
            vec![IdealFamily::new(RingHandle::Int, FamilyBounds::Moduli(range))]
        }
        ScanFamily::Prod => {
            let (Some(l), Some(r)) = (left, right) else {
                return Err(Failure::Usage("scan --family prod needs --left and --right".into()));
            };
            let ring = RingHandle::prod(RingHandle::zmod(l)?, RingHandle::zmod(r)?)?;
            vec![IdealFamily::new(ring, FamilyBounds::Exhaustive)]
        }
        ScanFamily::Kxy => vec![IdealFamily::new(RingHandle::MonLoc, FamilyBounds::Degree(degree))],
    })
}

fn theorem_ids(args: &[String]) -> Result<Vec<TheoremId>, Failure> {
    if args.iter().any(|a| a.trim().eq_ignore_ascii_case("all")) {
        return Ok(TheoremId::ALL.to_vec());
    }
    let mut ids = Vec::new();
    for a in args {
        let id: TheoremId = a.parse()?;
        if !ids.contains(&id) {
            ids.push(id);
        }
    }
    Ok(ids)
}

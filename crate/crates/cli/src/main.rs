//! `mhres`: determinantal degree vectors, dimensions and resultant matrices
//! for multihomogeneous systems.

mod report;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mhres_core::builders::{build_bezout_matrix, build_sylvester, GenericSystem};
use mhres_core::cohomology::{complex, complex_term};
use mhres_core::degree_vectors::{
    bezout_vector, enumerate_determinantal, find_bezout, find_sylvester, is_determinantal, m_pi_determinantal,
    min_sylvester, pk_sets, sylvester_vector, DefectBound,
};
use mhres_core::oracle::{random_system, rng, verify_system};
use mhres_core::{Error, Permutation, SystemData};

use report::Out;

#[derive(Parser)]
#[command(name = "mhres", version, about = "Resultant matrices for multihomogeneous systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Group sizes l_1,...,l_r
    #[arg(long, value_delimiter = ',', required = true)]
    l: Vec<u32>,
    /// Degrees d_1,...,d_r
    #[arg(long, value_delimiter = ',', required = true)]
    d: Vec<u32>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for random specializations
    #[arg(long, env = "MHRES_SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct Degree {
    /// Degree vector m_1,...,m_r
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    m: Vec<i64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    /// Determinantal vector valid for defects at most 2
    Det,
    /// Determinantal vector valid for defects at most 1
    Det1,
    /// Sylvester vector
    Sylvester,
    /// Bezout vector
    Bezout,
}

#[derive(Subcommand)]
enum Command {
    /// Dimensions of the terms K_nu(m)
    Dims {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        degree: Degree,
        /// Single term; all nonzero terms when omitted
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<i64>,
    },
    /// Whether K(m) has exactly two nonzero terms K_1, K_0
    IsDet {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        degree: Degree,
    },
    /// Every determinantal degree vector, smallest matrices first
    EnumDet {
        #[command(flatten)]
        common: Common,
    },
    /// Explicit degree vectors m^pi
    CompM {
        #[command(flatten)]
        common: Common,
        /// Permutation in one-line notation, e.g. 2,1,3; all when omitted
        #[arg(long, value_delimiter = ',')]
        perm: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value_t = Kind::Det)]
        kind: Kind,
    },
    /// Pure Sylvester degree vectors
    FindSyl {
        #[command(flatten)]
        common: Common,
    },
    /// Smallest Sylvester formula for each permutation
    MinSyl {
        #[command(flatten)]
        common: Common,
    },
    /// Pure Bezout degree vectors
    FindBez {
        #[command(flatten)]
        common: Common,
    },
    /// Sylvester matrix in degree m
    BuildSyl {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        degree: Degree,
        /// Random rational coefficients instead of indeterminates
        #[arg(long)]
        random: bool,
    },
    /// Bezout matrix for a permutation
    BuildBez {
        #[command(flatten)]
        common: Common,
        /// Permutation in one-line notation, e.g. 2,1
        #[arg(long, value_delimiter = ',', required = true)]
        perm: Vec<usize>,
        /// Random rational coefficients instead of indeterminates
        #[arg(long)]
        random: bool,
    },
    /// Randomized checks of every matrix formula of the system
    Verify {
        #[command(flatten)]
        common: Common,
        /// Forced common roots per Bezout matrix
        #[arg(long, default_value_t = 3)]
        roots: usize,
    },
    /// The sets P_k(m)
    PkSets {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        degree: Degree,
    },
}

/// Malformed input (exit 2) or a domain error (exit 1). A reader that
/// stops early, as in `mhres enum-det ... | head`, is not an error.
enum Failure {
    Input(String),
    Domain(String),
    Closed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidSystem(_) | Error::LengthMismatch { .. } | Error::InvalidPermutation(_) => {
                Failure::Input(e.to_string())
            }
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            Failure::Closed
        } else {
            Failure::Domain(e.to_string())
        }
    }
}


fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) | Err(Failure::Closed) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn system(common: &Common) -> Result<SystemData, Failure> {
    Ok(SystemData::new(common.l.clone(), common.d.clone())?)
}

fn vector(sys: &SystemData, m: &[i64]) -> Result<(), Failure> {
    Ok(sys.check_vector(m)?)
}

fn permutation(one_line: &[usize]) -> Result<Permutation, Failure> {
    Ok(Permutation::from_one_line(one_line)?)
}

fn run(command: Command, w: &mut impl Write) -> Result<(), Failure> {
    match command {
        Command::Dims { common, degree, nu } => {
            let sys = system(&common)?;
            vector(&sys, &degree.m)?;
            let out = Out::new(common.format == Format::Text, w);
            match nu {
                Some(nu) => out.term(&complex_term(&sys, &degree.m, nu))?,
                None => out.complex(&degree.m, &complex(&sys, &degree.m))?,
            }
        }
        Command::IsDet { common, degree } => {
            let sys = system(&common)?;
            vector(&sys, &degree.m)?;
            let det = is_determinantal(&sys, &degree.m);
            let k1 = complex_term(&sys, &degree.m, 1);
            let k0 = complex_term(&sys, &degree.m, 0);
            Out::new(common.format == Format::Text, w).determinantal(&degree.m, det, &k1, &k0)?;
        }
        Command::EnumDet { common } => {
            let sys = system(&common)?;
            let mut out = Out::new(common.format == Format::Text, w);
            let records = enumerate_determinantal(&sys);
            for rec in &records {
                out.det_record(rec)?;
            }
            out.det_summary(records.len())?;
        }
        Command::CompM { common, perm, kind } => {
            let sys = system(&common)?;
            let perms = match perm {
                Some(p) => vec![permutation(&p)?],
                None => Permutation::all(sys.r())?,
            };
            let mut rows = Vec::with_capacity(perms.len());
            for pi in perms {
                let m = match kind {
                    Kind::Det => m_pi_determinantal(&sys, &pi, DefectBound::AtMostTwo)?,
                    Kind::Det1 => m_pi_determinantal(&sys, &pi, DefectBound::AtMostOne)?,
                    Kind::Sylvester => sylvester_vector(&sys, &pi),
                    Kind::Bezout => bezout_vector(&sys, &pi),
                };
                let k1 = complex_term(&sys, &m, 1).total_dim;
                let k0 = complex_term(&sys, &m, 0).total_dim;
                rows.push((pi, m, k1, k0));
            }
            Out::new(common.format == Format::Text, w).comp_m(&rows)?;
        }
        Command::FindSyl { common } => {
            let sys = system(&common)?;
            let search = find_sylvester(&sys)?;
            Out::new(common.format == Format::Text, w).search(&search)?;
        }
        Command::MinSyl { common } => {
            let sys = system(&common)?;
            let rows = min_sylvester(&sys)?;
            Out::new(common.format == Format::Text, w).min_syl(&rows)?;
        }
        Command::FindBez { common } => {
            let sys = system(&common)?;
            let search = find_bezout(&sys);
            Out::new(common.format == Format::Text, w).search(&search)?;
        }
        Command::BuildSyl { common, degree, random } => {
            let sys = system(&common)?;
            vector(&sys, &degree.m)?;
            let out = Out::new(common.format == Format::Text, w);
            if random {
                let gs = random_system(&sys, &mut rng(common.seed));
                out.rational_matrix(&sys, &build_sylvester(&gs, &degree.m)?)?;
            } else {
                let gs = GenericSystem::generic(&sys);
                out.generic_matrix(&gs, &build_sylvester(&gs, &degree.m)?)?;
            }
        }
        Command::BuildBez { common, perm, random } => {
            let sys = system(&common)?;
            let pi = permutation(&perm)?;
            let out = Out::new(common.format == Format::Text, w);
            if random {
                let gs = random_system(&sys, &mut rng(common.seed));
                out.rational_matrix(&sys, &build_bezout_matrix(&gs, &pi)?)?;
            } else {
                let gs = GenericSystem::generic(&sys);
                out.generic_matrix(&gs, &build_bezout_matrix(&gs, &pi)?)?;
            }
        }
        Command::Verify { common, roots } => {
            let sys = system(&common)?;
            let report = verify_system(&sys, roots, common.seed)?;
            Out::new(common.format == Format::Text, w).verify(&report)?;
            if !report.passed() {
                return Err(Failure::Domain("verification failed".into()));
            }
        }
        Command::PkSets { common, degree } => {
            let sys = system(&common)?;
            vector(&sys, &degree.m)?;
            Out::new(common.format == Format::Text, w).pk_sets(&degree.m, &pk_sets(&sys, &degree.m))?;
        }
    }
    Ok(())
}

//! `hkmoduli`: reports on moduli spaces of polarized hyperkähler manifolds.
//!
//! Exit codes: 0 success, 1 usage error, 2 internal inconsistency (the
//! non-emptiness criterion and the component count disagree, or the
//! brute-force oracle disagrees with the formulas).

mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hkmoduli_core::oracle::{enumerate_witnesses, SearchBounds};
use hkmoduli_core::{moduli, BundleSpec, Error, Family, ModuliQuery, SurfaceKind};

use render::{CheckOutput, KvaOutput, OracleCheck, OutputFormat, TableRow, WitnessOutput};

const ORACLE_ENV: &str = "HK_ORACLE_BOUNDS";

#[derive(Parser)]
#[command(
    name = "hkmoduli",
    version,
    about = "Non-emptiness, connected components and positivity thresholds for moduli of \
             polarized hyperkähler manifolds",
    after_help = "Queries are written (family, n, d, t): K3^[n]-type (k3n) or Kum^n-type (kum), \
                  polarization square 2d and divisibility t. Literature that writes the space \
                  with n and t swapped (Σ^t_{d,n}) denotes the same space.\n\n\
                  Exit codes: 0 success, 1 usage error, 2 internal inconsistency."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one moduli space.
    Check {
        #[command(flatten)]
        query: QueryArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Human)]
        format: OutputFormat,
        /// Cross-check non-emptiness by brute-force lattice search
        /// (bounds widened by HK_ORACLE_BOUNDS="max_a,max_b,max_e").
        #[arg(long)]
        oracle: bool,
    },
    /// Explicit class t·L + b·δ realizing the polarization type.
    Witness {
        #[command(flatten)]
        query: QueryArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Human)]
        format: OutputFormat,
        /// Also list every class found by brute-force search.
        #[arg(long)]
        oracle: bool,
    },
    /// One row per (t, d) over a range of d and a list of t.
    Table {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: i64,
        /// Inclusive range `lo..hi`, or a single value.
        #[arg(long)]
        d_range: String,
        /// Comma-separated divisibilities.
        #[arg(long)]
        t: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// k-very ampleness of L^a on a Picard-rank-one K3 or abelian surface
    /// with L² = 2e.
    Kva {
        #[arg(long, value_enum)]
        surface: SurfaceArg,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        e: i64,
        /// Also evaluate a·L_n − δ on S^[n] (K3) or a·L_{n+1} − δ on Kum^n(T).
        #[arg(long)]
        n: Option<i64>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Human)]
        format: OutputFormat,
    },
}

#[derive(Args)]
struct QueryArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    n: i64,
    #[arg(long)]
    d: i64,
    #[arg(long)]
    t: i64,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    /// K3^[n]-type.
    K3n,
    /// Kum^n-type.
    Kum,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::K3n => Family::K3Hilb,
            FamilyArg::Kum => Family::Kummer,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SurfaceArg {
    K3,
    Abelian,
}

impl From<SurfaceArg> for SurfaceKind {
    fn from(s: SurfaceArg) -> Self {
        match s {
            SurfaceArg::K3 => SurfaceKind::K3Surface,
            SurfaceArg::Abelian => SurfaceKind::AbelianSurface,
        }
    }
}

enum Failure {
    Usage(String),
    Inconsistent(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InternalInconsistency { .. } => Failure::Inconsistent(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl QueryArgs {
    fn query(&self) -> Result<ModuliQuery, Failure> {
        Ok(ModuliQuery::new(self.family.into(), self.n, self.d, self.t)?)
    }
}

fn oracle_bounds(q: &ModuliQuery) -> Result<SearchBounds, Failure> {
    let defaults = SearchBounds::for_query(q)?;
    match std::env::var(ORACLE_ENV) {
        Ok(raw) => {
            let extra: SearchBounds =
                raw.parse().map_err(|e: Error| Failure::Usage(format!("{ORACLE_ENV}: {e}")))?;
            Ok(defaults.widen(extra))
        }
        Err(_) => Ok(defaults),
    }
}

/// `lo..hi` (inclusive) or a single integer.
fn parse_d_range(raw: &str) -> Result<Vec<i64>, Failure> {
    let bad = || Failure::Usage(format!("malformed --d-range {raw:?}, expected lo..hi"));
    let parse = |s: &str| s.trim().parse::<i64>().map_err(|_| bad());
    let (lo, hi) = match raw.split_once("..") {
        Some((lo, hi)) => (parse(lo)?, parse(hi.trim_start_matches('='))?),
        None => {
            let d = parse(raw)?;
            (d, d)
        }
    };
    if lo < 1 || hi < lo {
        return Err(bad());
    }
    Ok((lo..=hi).collect())
}

fn parse_t_list(raw: &str) -> Result<Vec<i64>, Failure> {
    let mut ts = raw
        .split(',')
        .map(|s| s.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure::Usage(format!("malformed --t {raw:?}, expected e.g. 1,2,3")))?;
    ts.sort_unstable();
    if ts.windows(2).any(|w| w[0] == w[1]) {
        return Err(Failure::Usage(format!("repeated divisibility in --t {raw:?}")));
    }
    Ok(ts)
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Check { query, format, oracle } => {
            let q = query.query()?;
            let report = moduli::report(&q)?;
            let oracle = if oracle {
                let found = enumerate_witnesses(&q, oracle_bounds(&q)?)?;
                Some(OracleCheck::new(&report, &found))
            } else {
                None
            };
            let agrees = oracle.as_ref().is_none_or(|o| o.agrees);
            let out = CheckOutput { report, oracle };
            let text = render::check(&out, format);
            if !agrees {
                return Err(Failure::Inconsistent(format!("{text}oracle disagrees with the formulas for {q}")));
            }
            Ok(text)
        }
        Command::Witness { query, format, oracle } => {
            let q = query.query()?;
            let found = if oracle { Some(enumerate_witnesses(&q, oracle_bounds(&q)?)?) } else { None };
            let out = WitnessOutput { query: q, witness: moduli::witness(&q)?, oracle_witnesses: found };
            Ok(render::witness(&out, format))
        }
        Command::Table { family, n, d_range, t, format } => {
            let ds = parse_d_range(&d_range)?;
            let ts = parse_t_list(&t)?;
            let mut rows = Vec::with_capacity(ds.len() * ts.len());
            for &t in &ts {
                for &d in &ds {
                    let q = ModuliQuery::new(family.into(), n, d, t)?;
                    rows.push(TableRow::from(moduli::report(&q)?));
                }
            }
            Ok(render::table(&rows, format))
        }
        Command::Kva { surface, a, e, n, format } => {
            let spec = BundleSpec::new(surface.into(), a, e)?;
            let k_max = spec.max_k_very_ample()?;
            let induced = n.map(|n| spec.induced_status(n)).transpose()?;
            let out = KvaOutput { surface: spec.surface, a, e, k_max, base_point_free: k_max >= 0, n, induced };
            Ok(render::kva(&out, format))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Inconsistent(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d_range_forms() {
        assert_eq!(parse_d_range("1..3").ok(), Some(vec![1, 2, 3]));
        assert_eq!(parse_d_range("1..=3").ok(), Some(vec![1, 2, 3]));
        assert_eq!(parse_d_range("5..5").ok(), Some(vec![5]));
        assert_eq!(parse_d_range("7").ok(), Some(vec![7]));
        assert!(parse_d_range("3..1").is_err());
        assert!(parse_d_range("0..4").is_err());
        assert!(parse_d_range("a..4").is_err());
    }

    #[test]
    fn inconsistency_maps_to_its_own_failure() {
        let q = ModuliQuery::new(Family::K3Hilb, 2, 3, 2).unwrap();
        let err = Error::InternalInconsistency { query: q, non_empty: true, components: 0 };
        assert!(matches!(Failure::from(err), Failure::Inconsistent(_)));
        assert!(matches!(Failure::from(Error::Overflow("2d")), Failure::Usage(_)));
    }

    #[test]
    fn t_list_is_sorted_and_unique() {
        assert_eq!(parse_t_list("2, 1,6").ok(), Some(vec![1, 2, 6]));
        assert!(parse_t_list("2,2").is_err());
        assert!(parse_t_list("").is_err());
        assert!(parse_t_list("1,x").is_err());
    }
}

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use compstat::comp::{macmahon_image, macmahon_inverse, Composition};
use compstat::dist::{h_k_hooksum, DistTable};
use compstat::oeis::{cross_check, BFile, FixtureMeta, SequenceSpec};
use compstat::verify::{run_suite, Scale, Suite};
use compstat::Error;

const MAX_HK: u32 = 8;

#[derive(Parser)]
#[command(
    name = "compstat",
    version,
    about = "Inversion and descent statistics on integer compositions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print H_k(p,q), the joint distribution of (maj, inv) over S_k
    Hk {
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = PolyFormat::Text)]
        format: PolyFormat,
    },
    /// Print the ic_r(n) or dc_r(n) triangle
    Table {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        max_n: u32,
        /// restrict to compositions with exactly k parts
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// csv: also list zero entries
        #[arg(long)]
        dense: bool,
        /// grid: last column shown (default: the largest r present)
        #[arg(long)]
        max_r: Option<u32>,
    },
    /// Show MacMahon's bijection on a composition such as 4,2,1,2,1,5,3
    Bij { composition: String },
    /// Run verification suites
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        cap: Option<u32>,
        #[arg(long)]
        max_n: Option<u32>,
    },
    /// Cross-check an OEIS b-file against computed values
    Oeis {
        #[arg(long)]
        seq: String,
        /// local b-file; sequences.json next to it supplies the layout
        #[arg(long, required_unless_present = "fetch", conflicts_with = "fetch")]
        bfile: Option<PathBuf>,
        /// download the b-file from oeis.org instead
        #[arg(long)]
        fetch: bool,
        #[arg(long, default_value_t = 16)]
        max_n: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Ic,
    Dc,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
    Grid,
}

/// Why a command did not succeed.
enum Failure {
    /// a check ran and disagreed (exit 1)
    Check(String),
    /// bad input or a request that cannot be served (exit 2)
    Usage(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    // A closed pipe is not worth a panic.
    let _ = io::stdout().write_all(out.as_bytes());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command, out: &mut String) -> Result<(), Failure> {
    match cmd {
        Command::Hk { k, format } => {
            if k > MAX_HK {
                return Err(Error::TooLarge {
                    what: "k",
                    value: k as usize,
                    max: MAX_HK as usize,
                }
                .into());
            }
            let h = h_k_hooksum(k);
            match format {
                PolyFormat::Text => out.push_str(&h.to_string()),
                PolyFormat::Json => out.push_str(&h.to_json_string()),
            }
            out.push('\n');
        }
        Command::Table {
            kind,
            max_n,
            k,
            format,
            dense,
            max_r,
        } => {
            let table = match kind {
                Kind::Ic => DistTable::inversions(max_n, k)?,
                Kind::Dc => DistTable::descents(max_n, k)?,
            };
            match format {
                TableFormat::Csv => out.push_str(&table.to_csv(dense)),
                TableFormat::Json => {
                    out.push_str(&table.to_json());
                    out.push('\n');
                }
                TableFormat::Grid => out.push_str(&table.to_grid(max_r)),
            }
        }
        Command::Bij { composition } => bij(&composition, out)?,
        Command::Verify {
            suite,
            k,
            cap,
            max_n,
        } => {
            let suite: Suite = suite.parse()?;
            let outcomes = run_suite(suite, &Scale { k, cap, max_n })?;
            for o in &outcomes {
                let status = if o.passed() { "ok" } else { "FAIL" };
                out.push_str(&format!("{status:4} {} ({} cases)\n", o.name, o.cases));
            }
            if let Some(bad) = outcomes.iter().find(|o| !o.passed()) {
                let cx = bad
                    .failure
                    .as_ref()
                    .expect("failed outcome has a counterexample");
                return Err(Failure::Check(format!("{} failed\n{cx}", bad.name)));
            }
        }
        Command::Oeis {
            seq,
            bfile,
            fetch,
            max_n,
        } => oeis(&seq, bfile, fetch, max_n, out)?,
    }
    Ok(())
}

fn bij(literal: &str, out: &mut String) -> Result<(), Failure> {
    let sigma: Composition = literal.parse()?;
    let img = macmahon_image(&sigma);
    let maj = img.perm.maj();
    let size = img.partition.size();
    let back = macmahon_inverse(&img.perm, &img.partition)?;
    let mu: Vec<String> = img.mu.iter().map(u32::to_string).collect();
    out.push_str(&format!("sigma      {sigma}\n"));
    out.push_str(&format!("pi         {}\n", img.perm));
    out.push_str(&format!("mu         {}\n", mu.join(",")));
    out.push_str(&format!("lambda     {}\n", img.partition));
    out.push_str(&format!("maj(pi)    {maj}\n"));
    out.push_str(&format!("|lambda|   {size}\n"));
    out.push_str(&format!("|sigma|    {}\n", sigma.sum()));
    out.push_str(&format!("round trip {back}\n"));
    if size + maj != sigma.sum() || back != sigma {
        return Err(Failure::Check(format!(
            "bijection check failed for {sigma}"
        )));
    }
    Ok(())
}

fn oeis(
    seq: &str,
    bfile: Option<PathBuf>,
    fetch: bool,
    max_n: u32,
    out: &mut String,
) -> Result<(), Failure> {
    // Reject unknown ids before touching the file system or network.
    let mut spec = SequenceSpec::builtin(seq)?;
    let parsed = if fetch {
        BFile::parse(seq, &download(seq)?)?
    } else {
        let path = bfile.expect("clap requires --bfile without --fetch");
        let meta = path.with_file_name("sequences.json");
        if meta.exists() {
            if let Some(s) = FixtureMeta::read(&meta)?.find(seq) {
                spec = s.clone();
            }
        }
        BFile::read(seq, &path)?
    };
    let report = cross_check(&spec, &parsed, max_n)?;
    out.push_str(&format!(
        "{}: {} of {} entries agree for n <= {}",
        report.sequence_id, report.agreed, report.compared, report.max_n
    ));
    if report.skipped > 0 {
        out.push_str(&format!(", {} beyond range", report.skipped));
    }
    if report.missing > 0 {
        out.push_str(&format!(", {} not in b-file", report.missing));
    }
    out.push('\n');
    if let Some(m) = &report.first_mismatch {
        return Err(Failure::Check(format!(
            "first mismatch at index {} (n = {}): expected {}, b-file has {}",
            m.index, m.n, m.expected, m.found
        )));
    }
    if !report.passed() {
        return Err(Failure::Check("no b-file entries fall within range".into()));
    }
    Ok(())
}

fn download(seq: &str) -> Result<String, Error> {
    let url = format!("https://oeis.org/{seq}/b{}.txt", &seq[1..]);
    let unavailable = |e: ureq::Error| Error::NetworkUnavailable(format!("{url}: {e}"));
    ureq::get(&url)
        .call()
        .map_err(unavailable)?
        .body_mut()
        .read_to_string()
        .map_err(unavailable)
}

//! The `semirings` command line.
//!
//! Exit codes: 0 success, 1 failed validation or I/O, 2 usage error,
//! 3 capability error (a census outside the engine's reach).

use std::ffi::OsString;
use std::fs::{self, File};
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cache::CACHE_DIR_ENV;
use crate::census::{Census, CensusQuery, Filter};
use crate::error::Error;
use crate::records::{check_jsonl, write_jsonl, LineVerdict};
use crate::report::{Format, TableDocument};
use crate::semigroups::Reach;
use crate::table::Equivalence;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPABILITY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "semirings", version, about = "Count and list finite semirings")]
pub struct Cli {
    #[command(flatten)]
    pub engine: EngineArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct EngineArgs {
    /// Worker threads (defaults to one per core).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Directory for cached semigroup censuses.
    #[arg(long, global = true, env = CACHE_DIR_ENV)]
    pub cache_dir: Option<PathBuf>,

    /// Allow censuses beyond the default reach; these can take hours.
    #[arg(long, global = true)]
    pub long_run: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count semirings of one order.
    Count(QueryArgs),
    /// Reproduce one of the four reference tables.
    Table(TableArgs),
    /// Write every semiring of one order as JSONL.
    Enumerate {
        #[command(flatten)]
        query: QueryArgs,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify the semiring axioms for each record of a JSONL file.
    Check {
        /// JSONL file of `{"n", "add", "mul"}` records.
        input: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EquivArg {
    /// Up to isomorphism.
    Iso,
    /// Up to isomorphism or anti-isomorphism.
    Anti,
}

#[derive(Debug, Args)]
pub struct QueryArgs {
    #[arg(short = 'n', long)]
    pub order: usize,
    #[arg(long, value_enum, default_value = "iso")]
    pub equiv: EquivArg,
    /// Additively idempotent: x + x = x.
    #[arg(long)]
    pub ai: bool,
    /// An additive identity that is multiplicatively absorbing.
    #[arg(long)]
    pub with_zero: bool,
    /// A multiplicative identity.
    #[arg(long)]
    pub with_one: bool,
    /// Commutative multiplication.
    #[arg(long)]
    pub commutative: bool,
}

impl QueryArgs {
    pub fn query(&self) -> CensusQuery {
        CensusQuery::new(
            self.order,
            match self.equiv {
                EquivArg::Iso => Equivalence::Iso,
                EquivArg::Anti => Equivalence::IsoOrAnti,
            },
            Filter {
                with_zero: self.with_zero,
                with_one: self.with_one,
                ai: self.ai,
                commutative_mul: self.commutative,
            },
        )
    }
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    pub table: u8,
    #[arg(long, default_value_t = 4)]
    pub max_order: usize,
    #[arg(long, value_enum, default_value = "markdown")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `args` (program name first) and runs the command, writing normal
/// output to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let census = Census::new()
        .reach(if cli.engine.long_run {
            Reach::LongRun
        } else {
            Reach::Standard
        })
        .cache_dir(cli.engine.cache_dir.clone());
    let result = match cli.engine.threads {
        Some(threads) => match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => {
                // Output handles need not be `Send`, so buffer inside the pool.
                let (mut obuf, mut ebuf) = (Vec::new(), Vec::new());
                let result = pool.install(|| execute(&cli.command, &census, &mut obuf, &mut ebuf));
                let _ = err.write_all(&ebuf);
                match out.write_all(&obuf) {
                    Ok(()) => result,
                    Err(e) => result.and(Err(Error::io("<stdout>", e))),
                }
            }
            Err(e) => {
                let _ = writeln!(err, "error: cannot start {threads} threads: {e}");
                return EXIT_USAGE;
            }
        },
        None => execute(&cli.command, &census, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Unsupported(_) => EXIT_CAPABILITY,
                Error::OrderOutOfRange(_) => EXIT_USAGE,
                _ => EXIT_INVALID,
            }
        }
    }
}

fn execute(
    command: &Command,
    census: &Census,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> crate::Result<i32> {
    let stdout = |e| Error::io("<stdout>", e);
    match command {
        Command::Count(args) => {
            let result = census.count(&args.query())?;
            let p = result.provenance;
            writeln!(out, "{}", result.count).map_err(stdout)?;
            writeln!(
                out,
                "additive_classes={} multiplicative_classes={} double_cosets_tested={} distributive_hits={}",
                p.additive_classes, p.multiplicative_classes, p.double_cosets_tested, p.distributive_hits
            )
            .map_err(stdout)?;
            Ok(EXIT_OK)
        }
        Command::Table(args) => {
            let doc = TableDocument::compute(census, args.table, args.max_order)?;
            let text = doc.render(args.format);
            match &args.out {
                Some(path) => write_atomically(path, |w| w.write_all(text.as_bytes()))?,
                None => out.write_all(text.as_bytes()).map_err(stdout)?,
            }
            Ok(EXIT_OK)
        }
        Command::Enumerate { query, out: path } => {
            let q = query.query();
            let result = census.enumerate(&q)?;
            let pairs = result.semirings.as_deref().unwrap_or_default();
            match path {
                Some(path) => write_atomically(path, |w| write_jsonl(w, &q, pairs))?,
                None => write_jsonl(&mut *out, &q, pairs).map_err(stdout)?,
            }
            Ok(EXIT_OK)
        }
        Command::Check { input } => {
            let file = File::open(input).map_err(|e| Error::io(input, e))?;
            let summary = check_jsonl(BufReader::new(file)).map_err(|e| Error::io(input, e))?;
            for r in &summary.reports {
                match &r.verdict {
                    LineVerdict::Valid => writeln!(out, "line {}: ok", r.line),
                    LineVerdict::Invalid(report) => writeln!(out, "line {}: invalid: {report}", r.line),
                    LineVerdict::Malformed(msg) => {
                        let _ = writeln!(err, "line {}: malformed: {msg}", r.line);
                        writeln!(out, "line {}: malformed", r.line)
                    }
                }
                .map_err(stdout)?;
            }
            for &(line, claimed) in &summary.claimed {
                if claimed != summary.records as u64 {
                    let _ = writeln!(
                        err,
                        "line {line}: summary claims {claimed} records, found {}",
                        summary.records
                    );
                }
            }
            writeln!(out, "{} records, {} invalid", summary.records, summary.invalid).map_err(stdout)?;
            Ok(if summary.all_valid() { EXIT_OK } else { EXIT_INVALID })
        }
    }
}

/// Writes to a sibling temporary file and renames it into place, so a failed
/// write never leaves a partial file at `path`.
fn write_atomically(
    path: &Path,
    write: impl FnOnce(&mut BufWriter<File>) -> io::Result<()>,
) -> crate::Result<()> {
    let mut tmp_name = path.file_name().unwrap_or_default().to_os_string();
    tmp_name.push(".partial");
    let tmp = path.with_file_name(tmp_name);
    let result = File::create(&tmp).and_then(|f| {
        let mut w = BufWriter::new(f);
        write(&mut w)?;
        w.into_inner().map_err(|e| e.into_error())?.sync_all()
    });
    if let Err(e) = result.and_then(|()| fs::rename(&tmp, path)) {
        let _ = fs::remove_file(&tmp);
        return Err(Error::io(path, e));
    }
    Ok(())
}

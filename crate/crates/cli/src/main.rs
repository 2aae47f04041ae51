use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use partition_genus::algebra::rat;
use partition_genus::config::{Config, DEFAULT_BRUTE_LIMIT, DEFAULT_ORDER, WORKERS_ENV};
use partition_genus::enumerate::{
    census, enumerate_catalogue, enumerate_primitive, enumerate_semiprimitive, read_catalogue,
    write_catalogue, CatalogueEntry, SearchOptions,
};
use partition_genus::pipeline::{
    count_from_full, full_gf, genus_zero_full, reduced_gf, series_of, FullGF, ReducedGF,
};
use partition_genus::primitive::{primitive_form, semiprimitive_form};
use partition_genus::reduction::{reduce, to_matching, ReductionKind};
use partition_genus::verify::{Suite, Verifier};
use partition_genus::{Error, Partition, Permutation};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "pgenus",
    version,
    about = "Genus of set partitions and their generating functions"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Permit catalogue searches for genus 3 and above.
    #[arg(long = "allow-genus-ge-3", global = true)]
    allow_large_genus: bool,
    /// Worker threads.
    #[arg(long, global = true, env = WORKERS_ENV)]
    workers: Option<usize>,
    /// Series truncation order.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER)]
    order: i32,
    /// Largest n for brute-force counting.
    #[arg(long, global = true, default_value_t = DEFAULT_BRUTE_LIMIT)]
    brute_limit: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Stage {
    Reduced,
    Full,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Series,
    Brute,
    /// Every method, failing unless they agree.
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Primitive,
    Semiprimitive,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Tables,
    Identities,
    Confluence,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Genus, cycle counts and back points of a permutation.
    Genus {
        /// Cycle notation `(1,3)(2,4)` or one-line images `3 4 1 2`.
        perm: String,
        /// Size of the ground set for cycle notation.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Reduced form and the reductions applied.
    Reduce {
        perm: String,
        #[arg(long)]
        n: Option<usize>,
        /// Show the bicolored matching before and after reduction.
        #[arg(long)]
        matching: bool,
    },
    /// Primitive form of a partition (reduced first).
    Primitive {
        perm: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Semiprimitive form of a partition (reduced first).
    Semiprimitive {
        perm: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Primitive and semiprimitive catalogue as JSON lines.
    Catalogue {
        #[arg(long)]
        genus: u32,
        #[arg(long, value_enum, default_value_t = Kind::All)]
        kind: Kind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reduced or full generating function.
    Genfun {
        #[arg(long)]
        genus: u32,
        #[arg(long, value_enum, default_value_t = Stage::Full)]
        stage: Stage,
        /// Read the catalogue from a file instead of searching.
        #[arg(long)]
        catalogue: Option<PathBuf>,
    },
    /// Number of partitions of n elements with k blocks and the given genus.
    Count {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
        #[arg(long)]
        catalogue: Option<PathBuf>,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

enum Failure {
    Usage(String),
    Runtime(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Malformed(_)
            | Error::DuplicateElement(_)
            | Error::OutOfRange { .. }
            | Error::NotBijection(_)
            | Error::NotPartition
            | Error::LimitExceeded { .. }
            | Error::GenusLimit { .. }
            | Error::InvalidConfig(_)
            | Error::Catalogue { .. } => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn parse_perm(text: &str, n: Option<usize>) -> Result<Permutation, Error> {
    if !text.contains('(') {
        return Permutation::parse_one_line(text);
    }
    let n = match n {
        Some(n) => n,
        None => text
            .split(|c: char| !c.is_ascii_digit())
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
            .unwrap_or(0),
    };
    Permutation::parse(text, n)
}

fn parse_partition(text: &str, n: Option<usize>) -> Result<Partition, Error> {
    Partition::try_from(parse_perm(text, n)?)
}

struct App {
    cfg: Config,
    format: Format,
    opts: SearchOptions,
}

impl App {
    fn emit(&self, text: &str, value: serde_json::Value, csv: Option<String>) -> Outcome {
        let mut out = io::stdout().lock();
        match self.format {
            Format::Text => writeln!(out, "{text}")?,
            Format::Json => writeln!(out, "{}", value)?,
            Format::Csv => match csv {
                Some(c) => write!(out, "{c}")?,
                None => writeln!(out, "{text}")?,
            },
        }
        Ok(())
    }

    fn catalogue(
        &self,
        genus: u32,
        path: Option<&PathBuf>,
    ) -> Result<Vec<CatalogueEntry>, Failure> {
        match path {
            Some(p) => {
                let file =
                    File::open(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
                Ok(read_catalogue(BufReader::new(file))?)
            }
            None => Ok(enumerate_catalogue(genus, &self.opts)?),
        }
    }

    fn reduced(&self, genus: u32, path: Option<&PathBuf>) -> Result<ReducedGF, Failure> {
        Ok(reduced_gf(&self.catalogue(genus, path)?, genus)?)
    }

    fn full(&self, genus: u32, path: Option<&PathBuf>) -> Result<FullGF, Failure> {
        if genus == 0 {
            return Ok(genus_zero_full());
        }
        Ok(full_gf(&self.reduced(genus, path)?))
    }

    fn genus(&self, perm: &str, n: Option<usize>) -> Outcome {
        let alpha = parse_perm(perm, n)?;
        let (g, z, zd) = (alpha.genus().0, alpha.z(), alpha.dual().z());
        let (bp, dbp) = (alpha.back_points(), alpha.dual().back_points());
        let text = format!(
            "permutation: {alpha}\nn: {}\ngenus: {g}\nz(alpha): {z}\nz(alpha^-1 zeta): {zd}\nback points: {bp:?}\ndual back points: {dbp:?}",
            alpha.len()
        );
        let value = json!({
            "permutation": alpha.to_string(),
            "n": alpha.len(),
            "genus": g,
            "z": z,
            "z_dual": zd,
            "back_points": bp,
            "dual_back_points": dbp,
        });
        let csv = format!("n,genus,z,z_dual\n{},{g},{z},{zd}\n", alpha.len());
        self.emit(&text, value, Some(csv))
    }

    fn reduce(&self, perm: &str, n: Option<usize>, matching: bool) -> Outcome {
        let alpha = parse_perm(perm, n)?;
        let (reduced, trace) = reduce(&alpha);
        let steps: Vec<String> = trace
            .steps
            .iter()
            .map(|s| match s.kind {
                ReductionKind::FixedPoint => format!("fixed-point:{}", s.label),
                ReductionKind::DualFixedPoint => format!("dual-fixed-point:{}", s.label),
            })
            .collect();
        let mut text = format!(
            "reduced: {reduced}\nn: {}\ntrace: {}",
            reduced.len(),
            if steps.is_empty() {
                "-".to_string()
            } else {
                steps.join(" ")
            }
        );
        let mut value = json!({
            "reduced": reduced.to_string(),
            "n": reduced.len(),
            "trace": serde_json::from_str::<serde_json::Value>(&trace.to_json())
                .map_err(|e| Failure::Runtime(e.to_string()))?,
        });
        if matching {
            let mu = to_matching(&alpha);
            let r = mu.reduce();
            text.push_str(&format!("\nmatching: {mu}\nreduced matching: {r}"));
            value["matching"] = json!(mu.to_string());
            value["reduced_matching"] = json!(r.to_string());
        }
        self.emit(&text, value, None)
    }

    fn project(&self, perm: &str, n: Option<usize>, primitive: bool) -> Outcome {
        let alpha = parse_partition(perm, n)?;
        let reduced = Partition::try_from(reduce(&alpha).0)?;
        let form = if primitive {
            primitive_form(&reduced)?
        } else {
            semiprimitive_form(&reduced)?
        };
        let label = if primitive {
            "primitive"
        } else {
            "semiprimitive"
        };
        let text = format!("reduced: {reduced}\n{label}: {form}\nn: {}", form.len());
        let value =
            json!({ "reduced": reduced.to_string(), label: form.to_string(), "n": form.len() });
        self.emit(&text, value, None)
    }

    fn write_catalogue(&self, genus: u32, kind: Kind, out: Option<&PathBuf>) -> Outcome {
        let entries = match kind {
            Kind::Primitive => enumerate_primitive(genus, &self.opts)?,
            Kind::Semiprimitive => enumerate_semiprimitive(genus, &self.opts)?,
            Kind::All => enumerate_catalogue(genus, &self.opts)?,
        };
        match out {
            Some(p) => write_catalogue(&entries, File::create(p)?)?,
            None => write_catalogue(&entries, io::stdout().lock())?,
        }
        Ok(())
    }

    fn genfun(&self, genus: u32, stage: Stage, path: Option<&PathBuf>) -> Outcome {
        let (stage_name, text) = match stage {
            Stage::Reduced if genus == 0 => {
                return Err(Failure::Usage(
                    "genus 0 has no reduced stage; use --stage full".into(),
                ))
            }
            Stage::Reduced => ("reduced", self.reduced(genus, path)?.to_string()),
            Stage::Full => ("full", self.full(genus, path)?.to_string()),
        };
        let value = json!({ "genus": genus, "stage": stage_name, "form": text });
        self.emit(&text, value, None)
    }

    fn count(
        &self,
        genus: u32,
        n: usize,
        k: usize,
        method: Method,
        path: Option<&PathBuf>,
    ) -> Outcome {
        let formula = || -> Result<String, Failure> {
            Ok(count_from_full(&self.full(genus, path)?, n, k)?.to_string())
        };
        let series = || -> Result<String, Failure> {
            let s = series_of(&self.full(genus, path)?, n as i32)?;
            let c = s.coeff(n as i32, k as i32);
            if !c.is_integer() || c < rat(0) {
                return Err(Failure::Runtime(format!(
                    "series coefficient {c} is not a count"
                )));
            }
            Ok(c.to_integer().to_string())
        };
        let brute = || -> Result<String, Failure> {
            if n == 0 {
                return Ok(((k == 0 && genus == 0) as u8).to_string());
            }
            Ok(census(n, genus, self.cfg.brute_limit)?
                .get(n, k, genus)
                .to_string())
        };
        let (value, by_method) = match method {
            Method::Formula => (formula()?, None),
            Method::Series => (series()?, None),
            Method::Brute => (brute()?, None),
            Method::All => {
                let f = formula()?;
                let s = series()?;
                let b = if n <= self.cfg.brute_limit {
                    Some(brute()?)
                } else {
                    None
                };
                if s != f || b.as_ref().is_some_and(|b| *b != f) {
                    eprintln!("methods disagree: formula {f}, series {s}, brute {b:?}");
                    return Err(Failure::Verification);
                }
                (
                    f.clone(),
                    Some(json!({ "formula": f, "series": s, "brute": b })),
                )
            }
        };
        let mut obj = json!({ "genus": genus, "n": n, "k": k, "count": value });
        if let Some(m) = by_method {
            obj["methods"] = m;
        }
        let csv = format!("n,k,count\n{n},{k},{value}\n");
        self.emit(&value, obj, Some(csv))
    }

    fn verify(&self, suite: SuiteArg) -> Outcome {
        let suite = match suite {
            SuiteArg::Tables => Suite::Tables,
            SuiteArg::Identities => Suite::Identities,
            SuiteArg::Confluence => Suite::Confluence,
            SuiteArg::All => Suite::All,
        };
        let outcomes = Verifier::new(self.cfg.clone()).run(suite);
        let failed = outcomes.iter().filter(|o| !o.passed).count();
        let lines: Vec<String> = outcomes.iter().map(|o| o.to_string()).collect();
        let text = format!(
            "{}\n{} passed, {failed} failed",
            lines.join("\n"),
            outcomes.len() - failed
        );
        let value = json!(outcomes
            .iter()
            .map(|o| json!({
                "id": o.id,
                "title": o.title,
                "passed": o.passed,
                "detail": o.detail,
                "seconds": o.elapsed.as_secs_f64(),
            }))
            .collect::<Vec<_>>());
        let csv = std::iter::once("id,passed,seconds\n".to_string())
            .chain(
                outcomes
                    .iter()
                    .map(|o| format!("{},{},{:.3}\n", o.id, o.passed, o.elapsed.as_secs_f64())),
            )
            .collect();
        self.emit(&text, value, Some(csv))?;
        if failed > 0 {
            return Err(Failure::Verification);
        }
        Ok(())
    }

    fn run(&self, command: &Command) -> Outcome {
        match command {
            Command::Genus { perm, n } => self.genus(perm, *n),
            Command::Reduce { perm, n, matching } => self.reduce(perm, *n, *matching),
            Command::Primitive { perm, n } => self.project(perm, *n, true),
            Command::Semiprimitive { perm, n } => self.project(perm, *n, false),
            Command::Catalogue { genus, kind, out } => {
                self.write_catalogue(*genus, *kind, out.as_ref())
            }
            Command::Genfun {
                genus,
                stage,
                catalogue,
            } => self.genfun(*genus, *stage, catalogue.as_ref()),
            Command::Count {
                genus,
                n,
                k,
                method,
                catalogue,
            } => self.count(*genus, *n, *k, *method, catalogue.as_ref()),
            Command::Verify { suite } => self.verify(*suite),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = Config {
        brute_limit: cli.brute_limit,
        order: cli.order,
        workers: cli.workers,
        genus_limit: if cli.allow_large_genus {
            u32::MAX
        } else {
            Config::default().genus_limit
        },
        ..Config::default()
    };
    if let Err(e) = cfg.validate() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    cfg.install_workers();
    let app = App {
        opts: SearchOptions {
            allow_large_genus: cli.allow_large_genus,
            ..SearchOptions::default()
        },
        cfg,
        format: cli.format,
    };
    match app.run(&cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification) => ExitCode::from(1),
    }
}

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use spectral_delta::depth::{depth_capped, depth_from_table, hochster_betti_table_capped, DEFAULT_VERTEX_CAP};
use spectral_delta::fixtures::reisner_rp2;
use spectral_delta::format::{
    complex_to_json, parse_complex, parse_input, primes_to_json, render_complex, render_primes, Input,
};
use spectral_delta::theorems::{
    rp2_fixture_suite, sweep, CheckId, CheckOutcome, Status, Subject, SweepConfig, SweepMode,
    MAX_EXHAUSTIVE_N,
};
use spectral_delta::{
    delta_of_complex, delta_of_primes, minimal_primes, nerve, reduced_homology, relative_homology,
    sr_generators, Error, FieldSpec, Simplex, SimplicialComplex,
};

#[derive(Parser)]
#[command(name = "spectral-delta", version, about = "Homology, depth and nerve checks for Stanley-Reisner rings")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Largest vertex count for which full Hochster tables are computed.
    #[arg(long, global = true, default_value_t = DEFAULT_VERTEX_CAP)]
    max_n: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FieldArg {
    /// Coefficients: z, q, f2, f3 or fp:<prime>.
    #[arg(long)]
    field: Option<FieldSpec>,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced homology of a complex, or homology of a pair with --sub.
    Homology {
        file: PathBuf,
        #[command(flatten)]
        field: FieldArg,
        /// Subcomplex file; computes H(FILE, SUB) instead.
        #[arg(long)]
        sub: Option<PathBuf>,
    },
    /// Depth, projective dimension and Cohen-Macaulayness of the Stanley-Reisner ring.
    Depth {
        file: PathBuf,
        #[command(flatten)]
        field: FieldArg,
        /// Print the nonzero multigraded Betti numbers as well.
        #[arg(long)]
        table: bool,
    },
    /// Complex on the minimal primes (from a complex or a prime file).
    Delta { file: PathBuf },
    /// Alexander dual.
    Dual { file: PathBuf },
    /// Nerve of the facets.
    Nerve { file: PathBuf },
    /// Minimal generators and minimal primes of the Stanley-Reisner ideal.
    Sr { file: PathBuf },
    /// Link of a face, relabelled onto the remaining vertices.
    Link {
        file: PathBuf,
        /// Face as a comma or space separated vertex list.
        #[arg(long)]
        face: String,
    },
    /// Run checks on one complex, or the bundled fixture suite.
    Check {
        #[arg(required_unless_present = "fixture", conflicts_with = "fixture")]
        file: Option<PathBuf>,
        #[arg(long, value_enum)]
        fixture: Option<Fixture>,
        /// Comma separated coefficient list.
        #[arg(long, default_value = "q,f2,f3,z")]
        fields: String,
        #[arg(long, default_value = "all")]
        checks: String,
    },
    /// Exhaustive or sampled sweep of checks.
    Sweep {
        #[arg(short = 'n', long = "vertices")]
        n: usize,
        /// Defaults to exhaustive for n <= 5 and random otherwise.
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value = "q,f2,f3")]
        fields: String,
        #[arg(long, default_value = "all")]
        checks: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Fixture {
    Rp2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Random,
}

/// Failure classes mapped onto exit codes.
enum Failure {
    Usage(String),
    Unexpected,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn with_path<T>(path: &Path, r: spectral_delta::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_complex(path: &Path) -> Result<SimplicialComplex, Failure> {
    let parsed = with_path(path, parse_complex(&read(path)?))?;
    for n in &parsed.notices {
        eprintln!("{}: {n}", path.display());
    }
    Ok(parsed.value)
}

fn parse_fields(s: &str) -> Result<Vec<FieldSpec>, Failure> {
    let fields = s
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(str::parse::<FieldSpec>)
        .collect::<spectral_delta::Result<Vec<_>>>()?;
    if fields.is_empty() {
        return Err(Failure::Usage(format!("empty field list `{s}`")));
    }
    Ok(fields)
}

fn parse_face(s: &str, n: usize) -> Result<Simplex, Failure> {
    let mut vs = Vec::new();
    for tok in s.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        let v: usize = tok
            .parse()
            .map_err(|_| Failure::Usage(format!("--face: `{tok}` is not a vertex")))?;
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange { vertex: v, n }.into());
        }
        vs.push(v);
    }
    Ok(Simplex::new(vs))
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn print(json_mode: bool, text: impl FnOnce() -> String, value: impl FnOnce() -> Value) {
    let mut body = if json_mode {
        serde_json::to_string_pretty(&value()).expect("json value")
    } else {
        text()
    };
    if !body.ends_with('\n') {
        body.push('\n');
    }
    let _ = std::io::stdout().lock().write_all(body.as_bytes());
}

fn outcome_line(o: &CheckOutcome) -> String {
    let status = match o.status {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::NotApplicable => "n/a",
    };
    let field = o.field.map_or("-".to_string(), |f| f.to_string());
    let mut line = format!("{:<18} {:<6} {:<5}", o.check.name(), field, status);
    if o.unexpected() {
        line.push_str(" UNEXPECTED");
    } else if o.status == Status::Fail {
        line.push_str(" (expected)");
    }
    if let Some(w) = &o.witness {
        line.push_str(&format!(" {w}"));
    }
    if let Some(n) = &o.note {
        line.push_str(&format!(" ({n})"));
    }
    line
}

fn run_checks(k: &SimplicialComplex, fields: &[FieldSpec], checks: &[CheckId], cap: usize) -> Vec<CheckOutcome> {
    let subject = Subject::with_vertex_cap(k, cap);
    let mut out = Vec::new();
    for &c in checks {
        match c {
            CheckId::DeltaIsoNerve => out.push(subject.delta_iso_nerve()),
            CheckId::Uct => {
                let mut primes: Vec<u32> = vec![2, 3];
                for f in fields {
                    if let FieldSpec::PrimeField(p) = *f {
                        if !primes.contains(&p) {
                            primes.push(p);
                        }
                    }
                }
                out.extend(primes.into_iter().map(|p| subject.uct(p)));
            }
            _ => out.extend(fields.iter().map(|&f| subject.run(c, f))),
        }
    }
    out
}

fn run(cli: Cli) -> Outcome {
    let json_mode = cli.json;
    let cap = cli.max_n;
    match cli.command {
        Command::Homology { file, field, sub } => {
            let k = load_complex(&file)?;
            let f = field.field.unwrap_or(FieldSpec::Integers);
            let h = match sub {
                Some(sub) => {
                    let l = load_complex(&sub)?;
                    relative_homology(&k, &l, f)?
                }
                None => reduced_homology(&k, f),
            };
            print(json_mode, || h.to_string(), || serde_json::to_value(&h).expect("profile"));
        }
        Command::Depth { file, field, table } => {
            let k = load_complex(&file)?;
            let f = field.field.unwrap_or(FieldSpec::Rationals);
            if table {
                let t = hochster_betti_table_capped(&k, f, cap)?;
                let d = depth_from_table(&k, &t);
                print(
                    json_mode,
                    || format!("{d}\n{t}"),
                    || json!({"depth": d, "betti": t}),
                );
            } else {
                let d = depth_capped(&k, f, cap)?;
                print(json_mode, || d.to_string(), || serde_json::to_value(&d).expect("report"));
            }
        }
        Command::Delta { file } => {
            let parsed = with_path(&file, parse_input(&read(&file)?))?;
            for n in &parsed.notices {
                eprintln!("{}: {n}", file.display());
            }
            let delta = match parsed.value {
                Input::Complex(k) => delta_of_complex(&k)?,
                Input::Primes(p) => delta_of_primes(&p),
            };
            print(json_mode, || render_complex(&delta), || complex_to_json(&delta));
        }
        Command::Dual { file } => {
            let k = load_complex(&file)?;
            let d = k.alexander_dual();
            if d.degenerate {
                eprintln!("warning: dual of a void complex or full simplex is degenerate");
            }
            print(json_mode, || render_complex(&d.complex), || complex_to_json(&d.complex));
        }
        Command::Nerve { file } => {
            let k = load_complex(&file)?;
            let nv = nerve(k.facets())?;
            print(json_mode, || render_complex(&nv), || complex_to_json(&nv));
        }
        Command::Sr { file } => {
            let k = load_complex(&file)?;
            let g = sr_generators(&k)?;
            let p = minimal_primes(&k)?;
            let gens: Vec<Vec<usize>> = g.generators().iter().map(|s| s.vertices().to_vec()).collect();
            print(
                json_mode,
                || {
                    let mut s = String::new();
                    for m in g.generators() {
                        let monomial: Vec<String> = m.vertices().iter().map(|v| format!("x{v}")).collect();
                        s.push_str(&format!("generator {}\n", monomial.join("*")));
                    }
                    s + &render_primes(&p)
                },
                || json!({"n": k.n(), "generators": gens, "minimal_primes": primes_to_json(&p)["primes"]}),
            );
        }
        Command::Link { file, face } => {
            let k = load_complex(&file)?;
            let s = parse_face(&face, k.n())?;
            let l = k.link(&s)?;
            print(json_mode, || render_complex(&l), || complex_to_json(&l));
        }
        Command::Check { file, fixture, fields, checks } => {
            let fields = parse_fields(&fields)?;
            let checks = CheckId::parse_list(&checks)?;
            let (claims, outcomes) = match (file, fixture) {
                (_, Some(Fixture::Rp2)) => {
                    let suite = rp2_fixture_suite();
                    let outcomes = if checks.len() == CheckId::ALL.len() {
                        suite.outcomes
                    } else {
                        run_checks(&reisner_rp2(), &fields, &checks, cap)
                    };
                    (suite.claims, outcomes)
                }
                (Some(file), None) => (Vec::new(), run_checks(&load_complex(&file)?, &fields, &checks, cap)),
                (None, None) => return Err(Failure::Usage("check needs FILE or --fixture".into())),
            };
            let ok = claims.iter().all(|c| c.passed) && outcomes.iter().all(|o| !o.unexpected());
            print(
                json_mode,
                || {
                    let mut s = String::new();
                    for c in &claims {
                        let mark = if c.passed { "ok  " } else { "FAIL" };
                        s.push_str(&format!("{mark} {}: {}\n", c.name, c.detail));
                    }
                    for o in &outcomes {
                        s.push_str(&outcome_line(o));
                        s.push('\n');
                    }
                    s.push_str(if ok { "all expectations met\n" } else { "unexpected results\n" });
                    s
                },
                || json!({"claims": claims, "outcomes": outcomes, "all_expectations_met": ok}),
            );
            if !ok {
                return Err(Failure::Unexpected);
            }
        }
        Command::Sweep { n, mode, seed, count, fields, checks } => {
            let mode = match mode {
                Some(Mode::Exhaustive) => SweepMode::Exhaustive,
                Some(Mode::Random) => SweepMode::Random { seed, count },
                None if n <= MAX_EXHAUSTIVE_N => SweepMode::Exhaustive,
                None => SweepMode::Random { seed, count },
            };
            let mut cfg = SweepConfig::new(n, mode);
            cfg.fields = parse_fields(&fields)?;
            cfg.checks = CheckId::parse_list(&checks)?;
            cfg.vertex_cap = cap;
            for f in &cfg.fields {
                if let FieldSpec::PrimeField(p) = *f {
                    if !cfg.uct_primes.contains(&p) {
                        cfg.uct_primes.push(p);
                    }
                }
            }
            let report = sweep(&cfg)?;
            print(json_mode, || report.to_string(), || report.to_json());
            if !report.all_expectations_met() {
                return Err(Failure::Unexpected);
            }
        }
    }
    Ok(())
}

fn configure_threads() {
    let Ok(raw) = std::env::var("SPECTRAL_DELTA_THREADS") else {
        return;
    };
    match raw.trim().parse::<usize>() {
        Ok(n) if n > 0 => {
            if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
                eprintln!("warning: could not size thread pool: {e}");
            }
        }
        _ => eprintln!("warning: ignoring SPECTRAL_DELTA_THREADS={raw:?}"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Unexpected) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

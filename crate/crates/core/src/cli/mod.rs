//! The `ptolemy` command line.
//!
//! Exit codes: 0 when everything checked holds, 1 when a check fails, 2 for
//! unreadable input. The last line of every report is a `# summary v1`
//! line of `key=value` pairs.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::cohomology::{change_coefficients, class_from_lifts_in, CoefficientMap, Coefficients, LiftData};
use crate::opalgebra::{parse_word, ScalarGroup};
use crate::quantize::{lift_exponent, LiftMethod, QuantizeError, RelationInstance, TwistWord};
use crate::rewrite::{check_script, Script, DEFAULT_BUDGET};
use crate::surface::{chain_torus, parse_triangulation, random_scenes, relation_suite, DecoratedTriangulation, RelationReport};

/// Overrides the default search budget.
pub const BUDGET_ENV: &str = "PTOLEMY_BUDGET";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "ptolemy", version, about = "Checks for the decorated Ptolemy groupoid and its quantization")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the groupoid relations on scenes.
    CheckGroupoid {
        /// A bundled scene name (`chain_torus`) or a scene file. Repeatable.
        #[arg(long)]
        scene: Vec<String>,
        /// Number of random scenes to check.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Replay a script, or establish the lift of a relation file (`.rel`).
    Replay {
        file: PathBuf,
        /// Start word, instead of the script's `start:` line.
        #[arg(long)]
        start: Option<String>,
        /// Expected word, instead of the script's `expect:` line.
        #[arg(long)]
        expect: Option<String>,
        /// For a relation file: search instead of replaying its script.
        #[arg(long)]
        search: bool,
        /// Search budget in states.
        #[arg(long)]
        budget: Option<usize>,
        /// Only print the outcome, not every step.
        #[arg(long)]
        quiet: bool,
    },
    /// Print the extension class of a set of lift exponents.
    Class {
        /// Exponent of z in the chain relation lift.
        #[arg(long, default_value_t = 12, allow_negative_numbers = true)]
        chain: i64,
        /// Exponents of z in the puncture relation lifts, comma separated.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        punctures: Vec<i64>,
        #[arg(long)]
        g: u32,
        /// Order of ζ; omitted means ζ is generic.
        #[arg(long)]
        zeta_order: Option<u64>,
        /// Push the class into a divisible coefficient group.
        #[arg(long)]
        divisible: bool,
        /// Reduce the coefficients mod N.
        #[arg(long)]
        reduce: Option<u64>,
    },
}

struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

/// Runs the command line `args` (program name first), writing the report to
/// `out` and errors to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_INPUT;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    let res = match cli.command {
        Command::CheckGroupoid { scene, random, seed } => check_groupoid(&scene, random, seed, out),
        Command::Replay { file, start, expect, search, budget, quiet } => {
            replay(&file, start.as_deref(), expect.as_deref(), search, budget, quiet, out)
        }
        Command::Class { chain, punctures, g, zeta_order, divisible, reduce } => {
            class(chain, punctures, g, zeta_order, divisible, reduce, out)
        }
    };
    match res {
        Ok(code) => code,
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

fn budget(flag: Option<usize>) -> Result<usize, InputError> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| InputError(format!("{BUDGET_ENV}={v} is not a number"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn load_scene(name: &str) -> Result<DecoratedTriangulation, InputError> {
    if name == "chain_torus" {
        return Ok(chain_torus());
    }
    let src = std::fs::read_to_string(name).map_err(|e| InputError(format!("{name}: {e}")))?;
    parse_triangulation(&src).map_err(|e| InputError(format!("{name}: {e}")))
}

fn check_groupoid(scenes: &[String], random: Option<usize>, seed: u64, out: &mut dyn Write) -> Result<i32, InputError> {
    let mut jobs: Vec<(String, Vec<DecoratedTriangulation>)> = Vec::new();
    for s in scenes {
        jobs.push((format!("scene {s}"), vec![load_scene(s)?]));
    }
    if let Some(n) = random {
        jobs.push((format!("random {n} scenes, seed {seed}"), random_scenes(n, seed)));
    }
    if jobs.is_empty() {
        jobs.push(("scene chain_torus".into(), vec![chain_torus()]));
    }
    let mut ok = true;
    let mut total = 0;
    for (name, tris) in jobs {
        let mut rep = RelationReport::default();
        for t in &tris {
            rep.merge(relation_suite(t));
        }
        if let [t] = tris.as_slice() {
            writeln!(out, "{name}: genus {}, {} punctures, {} triangles", t.genus(), t.punctures(), t.triangle_count())?;
        } else {
            writeln!(out, "{name}")?;
        }
        writeln!(out, "{rep}")?;
        ok &= rep.passed();
        total += rep.total();
    }
    let status = if ok { "pass" } else { "fail" };
    writeln!(out, "{status}")?;
    writeln!(out, "# summary v1 command=check-groupoid status={status} instances={total}")?;
    Ok(if ok { EXIT_OK } else { EXIT_FAILED })
}

fn replay(
    file: &Path,
    start: Option<&str>,
    expect: Option<&str>,
    search: bool,
    budget_flag: Option<usize>,
    quiet: bool,
    out: &mut dyn Write,
) -> Result<i32, InputError> {
    if file.extension().is_some_and(|e| e == "rel") {
        if start.is_some() || expect.is_some() {
            return Err(InputError("--start and --expect apply to scripts, not relation files".into()));
        }
        return replay_relation(file, search, budget_flag, out);
    }
    let src = std::fs::read_to_string(file).map_err(|e| InputError(format!("{}: {e}", file.display())))?;
    let script = Script::parse(&src).map_err(|e| InputError(format!("{}: {e}", file.display())))?;
    let word = |w: Option<&str>, fallback: &Option<crate::opalgebra::OperatorWord>, what: &str| {
        match w {
            Some(s) => parse_word(s, script.size).map_err(|e| InputError(format!("{what}: {e}"))),
            None => fallback.clone().ok_or_else(|| InputError(format!("no {what} word given"))),
        }
    };
    let start = word(start, &script.start, "start")?;
    let expected = word(expect, &script.expected, "expected")?;
    let report = check_script(&start, &script, &expected);
    if !quiet {
        for r in &report.records {
            writeln!(out, "{:>5}  line {:>4}  ζ^{:<3} {:>3} letters  {}", r.index, r.line, r.zeta, r.letters, r.step)?;
        }
    }
    writeln!(out, "{} steps, {} checkpoints", report.records.len(), report.assertions_checked)?;
    if let Some(f) = &report.failure {
        writeln!(out, "step {} (line {}) failed: {}", f.step_index, f.line, f.message)?;
    }
    writeln!(out, "final: {}", report.final_word)?;
    writeln!(out, "final scalar exponent: {}", report.final_word.zeta)?;
    writeln!(
        out,
        "inversions: {} forward, {} backward",
        report.forward_inversions, report.backward_inversions
    )?;
    let status = if report.passed() { "pass" } else { "fail" };
    if report.failure.is_none() && !report.expected_matches {
        writeln!(out, "expected: {expected}")?;
    }
    writeln!(out, "{status}")?;
    writeln!(
        out,
        "# summary v1 command=replay status={status} steps={} zeta={}",
        report.records.len(),
        report.final_word.zeta
    )?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAILED })
}

fn replay_relation(file: &Path, search: bool, budget_flag: Option<usize>, out: &mut dyn Write) -> Result<i32, InputError> {
    let rel = RelationInstance::load(file)?;
    let script = if search { None } else { rel.read_script()? };
    let method = match &script {
        Some(s) => LiftMethod::Script(s),
        None => LiftMethod::Search { budget: budget(budget_flag)? },
    };
    let how = if script.is_some() { "script" } else { "search" };
    writeln!(out, "{} relation: {} = {} ({how})", rel.kind, rel.lhs.join(" "), rel.rhs.join(" "))?;
    match lift_exponent(&rel, method, TwistWord::DEFAULT_NORMALIZATION) {
        Ok(l) => {
            writeln!(out, "lift: {l}")?;
            writeln!(out, "pass")?;
            let z = l.z.map_or("none".to_string(), |z| z.to_string());
            writeln!(out, "# summary v1 command=replay status=pass raw={} fbar={} z={z}", l.raw, l.fbar)?;
            Ok(EXIT_OK)
        }
        Err(e @ QuantizeError::NotEstablished(_)) => {
            writeln!(out, "{e}")?;
            writeln!(out, "fail")?;
            writeln!(out, "# summary v1 command=replay status=fail")?;
            Ok(EXIT_FAILED)
        }
        Err(e) => Err(e.into()),
    }
}

fn class(
    chain: i64,
    punctures: Vec<i64>,
    g: u32,
    zeta_order: Option<u64>,
    divisible: bool,
    reduce: Option<u64>,
    out: &mut dyn Write,
) -> Result<i32, InputError> {
    if zeta_order == Some(0) {
        return Err(InputError("--zeta-order must be positive".into()));
    }
    let scalars = zeta_order.map_or(ScalarGroup::GENERIC, ScalarGroup::finite);
    let a = Coefficients::of_scalars(scalars);
    let s = punctures.len();
    let mut c = class_from_lifts_in(&LiftData::new(chain, punctures), g, s, a)?;
    if let Some(n) = reduce {
        c = change_coefficients(&c, CoefficientMap::Reduce(n))?;
    }
    if divisible {
        c = change_coefficients(&c, CoefficientMap::Divisible)?;
    }
    writeln!(out, "{c}")?;
    match c.chi_order() {
        Some(m) => writeln!(out, "chi order {m}")?,
        None => writeln!(out, "chi order infinite")?,
    }
    match c.coefficients.order {
        Some(n) => writeln!(out, "A = Z/{n}")?,
        None => writeln!(out, "A = Z")?,
    }
    writeln!(
        out,
        "# summary v1 command=class g={g} s={s} chi={} euler={}",
        c.chi_coeff,
        c.euler_coeffs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    )?;
    Ok(EXIT_OK)
}

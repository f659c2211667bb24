//! `semitrace` command line: inspect semigroups, profile ideals, run the
//! theorem suites, reproduce the counterexample, and search for more.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use semitrace::verifier::{self, CounterexampleReport, SearchFilters, SweepReport, MONOMIAL_SCOPE};
use semitrace::{
    parse_exponents, Error, Limits, NumericalSemigroup, ProfileReport, SemigroupReport, ValueIdeal,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "semitrace",
    version,
    about = "Trace ideals and reflexivity over numerical semigroup rings"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Ceiling on the genus of enumerated semigroups.
    #[arg(long, env = "SEMITRACE_MAX_GENUS", default_value_t = 24, global = true)]
    pub genus_ceiling: u32,

    /// Ceiling on the membership window of a single semigroup.
    #[arg(long, env = "SEMITRACE_MAX_WINDOW", default_value_t = 1 << 20, global = true)]
    pub window_ceiling: i64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Frobenius number, conductor, genus, l(R/C) and minimal multiplicity.
    Info {
        /// Comma separated generators, e.g. 7,8,9,11
        semigroup: String,
    },
    /// Dual, double dual, trace, closure and verdicts for one ideal.
    Ideal {
        semigroup: String,
        /// Comma separated exponents of monomial generators, e.g. 8,9,21
        #[arg(long, allow_hyphen_values = true)]
        gens: String,
    },
    /// Run every theorem suite over all semigroups up to a genus.
    Verify {
        #[arg(long, default_value_t = 9)]
        max_genus: u32,
    },
    /// Reflexive ideals whose trace is not reflexive.
    Search {
        #[arg(long, default_value_t = 9)]
        max_genus: u32,
        /// Only rings of minimal multiplicity.
        #[arg(long)]
        min_mult: bool,
        /// Only rings with exactly this l(R/C).
        #[arg(long)]
        colength: Option<usize>,
        /// Only rings with l(R/C) at most this.
        #[arg(long)]
        max_colength: Option<usize>,
    },
    /// Recompute the k[[t^7,t^8,t^9,t^11]] counterexample and check every value set.
    #[command(visible_alias = "reproduce")]
    ReproducePaper,
}

/// Outcome of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
        }
    }
}

impl CliConfig {
    pub fn limits(&self) -> Limits {
        Limits {
            max_genus: self.genus_ceiling,
            max_window: self.window_ceiling,
        }
    }

    fn semigroup(&self, text: &str) -> Result<NumericalSemigroup> {
        let gens = parse_exponents(text)?;
        Ok(NumericalSemigroup::with_limits(&gens, &self.limits())?)
    }
}

/// Executes `config`, writing the report to `out` (or to `--output`).
pub fn run(config: &CliConfig, out: &mut dyn Write) -> Result<Status> {
    match &config.output {
        Some(path) => {
            let file =
                File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
            let mut w = BufWriter::new(file);
            let status = dispatch(config, &mut w)?;
            w.flush()?;
            writeln!(out, "report written to {}", path.display())?;
            Ok(status)
        }
        None => dispatch(config, out),
    }
}

fn dispatch(config: &CliConfig, out: &mut dyn Write) -> Result<Status> {
    match &config.command {
        Command::Info { semigroup } => info(config, semigroup, out),
        Command::Ideal { semigroup, gens } => ideal(config, semigroup, gens, out),
        Command::Verify { max_genus } => verify(config, *max_genus, out),
        Command::Search {
            max_genus,
            min_mult,
            colength,
            max_colength,
        } => {
            let filters = SearchFilters {
                minimal_multiplicity: *min_mult,
                colength: *colength,
                max_colength: *max_colength,
            };
            search(config, *max_genus, &filters, out)
        }
        Command::ReproducePaper => reproduce(config, out),
    }
}

fn reject_csv(config: &CliConfig) -> Result<()> {
    if config.format == Format::Csv {
        bail!("--format csv is only available for `search`");
    }
    Ok(())
}

#[derive(Serialize)]
struct InfoReport {
    #[serde(flatten)]
    semigroup: SemigroupReport,
    gaps: Vec<i64>,
    multiplicity: i64,
    embedding_dimension: usize,
    #[serde(rename = "colength_R_mod_C")]
    colength_r_mod_c: usize,
    minimal_multiplicity: Option<bool>,
}

fn info(config: &CliConfig, text: &str, out: &mut dyn Write) -> Result<Status> {
    reject_csv(config)?;
    let s = config.semigroup(text)?;
    let report = InfoReport {
        semigroup: (&s).into(),
        gaps: s.gaps(),
        multiplicity: s.multiplicity(),
        embedding_dimension: s.embedding_dimension(),
        colength_r_mod_c: s.conductor_colength(),
        minimal_multiplicity: s.is_minimal_multiplicity().ok(),
    };
    if config.format == Format::Json {
        writeln!(out, "{}", serde_json::to_string(&report)?)?;
        return Ok(Status::Pass);
    }
    let list = |v: &[i64]| {
        v.iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    writeln!(out, "semigroup            {s}")?;
    writeln!(out, "v(R)                 {}", s.values())?;
    writeln!(out, "frobenius            {}", s.frobenius())?;
    writeln!(out, "conductor            {}", s.conductor())?;
    writeln!(out, "genus                {}", s.genus())?;
    writeln!(out, "gaps                 {{{}}}", list(&report.gaps))?;
    writeln!(out, "multiplicity         {}", report.multiplicity)?;
    writeln!(out, "embedding_dimension  {}", report.embedding_dimension)?;
    writeln!(out, "colength_R_mod_C     {}", report.colength_r_mod_c)?;
    match report.minimal_multiplicity {
        Some(m) => writeln!(out, "minimal_multiplicity {m}")?,
        None => writeln!(out, "minimal_multiplicity n/a (regular ring)")?,
    }
    Ok(Status::Pass)
}

fn ideal(config: &CliConfig, ring: &str, gens: &str, out: &mut dyn Write) -> Result<Status> {
    reject_csv(config)?;
    let s = config.semigroup(ring)?;
    let exps = parse_exponents(gens)?;
    let profile = ValueIdeal::from_exponents(&s, &exps)?.profile();
    let report = ProfileReport::from(&profile);
    if config.format == Format::Json {
        writeln!(out, "{}", serde_json::to_string(&report)?)?;
        return Ok(Status::Pass);
    }
    let with_gens = |i: &ValueIdeal| {
        let g: Vec<String> = i
            .minimal_generators()
            .iter()
            .map(|e| e.to_string())
            .collect();
        format!("{i}  generators ({})", g.join(","))
    };
    let opt = |b: Option<bool>| b.map_or("n/a".to_string(), |b| b.to_string());
    writeln!(out, "ring                    {s}")?;
    writeln!(out, "I                       {}", with_gens(&profile.ideal))?;
    writeln!(out, "I*                      {}", with_gens(&profile.dual))?;
    writeln!(
        out,
        "I**                     {}",
        with_gens(&profile.double_dual)
    )?;
    writeln!(out, "tr(I)                   {}", with_gens(&profile.trace))?;
    match &profile.closure {
        Some(c) => writeln!(out, "closure                 {}", with_gens(c))?,
        None => writeln!(out, "closure                 n/a (I not inside R)")?,
    }
    match profile.colength_in_ring {
        Some(l) => writeln!(out, "colength_in_R           {l}")?,
        None => writeln!(out, "colength_in_R           n/a")?,
    }
    writeln!(out, "is_reflexive            {}", profile.is_reflexive)?;
    writeln!(
        out,
        "is_trace_ideal          {}",
        opt(profile.is_trace_ideal)
    )?;
    writeln!(
        out,
        "is_integrally_closed    {}",
        opt(profile.is_integrally_closed)
    )?;
    writeln!(
        out,
        "partial_trace_criterion {}",
        opt(profile.partial_trace_criterion)
    )?;
    writeln!(out, "is_stable               {}", profile.is_stable)?;
    Ok(Status::Pass)
}

#[derive(Serialize)]
struct SuiteSummary {
    name: &'static str,
    rings_applicable: usize,
    ideals_checked: usize,
    failures: usize,
}

#[derive(Serialize)]
struct VerifySummary {
    scope: &'static str,
    max_genus: u32,
    rings: usize,
    counterexample_reproduced: bool,
    example_reproduced: bool,
    suites: Vec<SuiteSummary>,
    passed: bool,
}

/// The `⟨5,6,7⟩`, `(t^5, t^7)` example: a trace ideal that is not reflexive.
fn example_holds() -> Result<bool> {
    let s = NumericalSemigroup::new(&[5, 6, 7])?;
    let r = CounterexampleReport::compute(&s, &[5, 7])?;
    Ok(r.trace == r.ideal
        && !r.ideal_reflexive
        && r.conductor_colength == 4
        && !r.minimal_multiplicity)
}

fn verify(config: &CliConfig, max_genus: u32, out: &mut dyn Write) -> Result<Status> {
    reject_csv(config)?;
    let reproduced = match verifier::reproduce_counterexample() {
        Ok(_) => Ok(()),
        Err(e @ Error::AssertionFailure { .. }) => Err(e.to_string()),
        Err(e) => return Err(e.into()),
    };
    let example = example_holds()?;
    let sweep: SweepReport = verifier::run_theorem_suites(max_genus, &config.limits())?;
    let suites = vec![
        (
            "small_colength_trace_reflexive",
            &sweep.small_colength_traces,
        ),
        ("trace_of_reflexive_reflexive", &sweep.traces_of_reflexives),
        (
            "closed_over_conductor_reflexive_trace",
            &sweep.closed_over_conductor,
        ),
    ];
    let passed = reproduced.is_ok() && example && sweep.passed();
    if config.format == Format::Json {
        let summary = VerifySummary {
            scope: MONOMIAL_SCOPE,
            max_genus,
            rings: sweep.rings,
            counterexample_reproduced: reproduced.is_ok(),
            example_reproduced: example,
            suites: suites
                .iter()
                .map(|(name, t)| SuiteSummary {
                    name,
                    rings_applicable: t.rings_applicable,
                    ideals_checked: t.ideals_checked,
                    failures: t.failures.len(),
                })
                .collect(),
            passed,
        };
        writeln!(out, "{}", serde_json::to_string(&summary)?)?;
    } else {
        writeln!(out, "# {MONOMIAL_SCOPE}")?;
        writeln!(out, "semigroups of genus 1..={max_genus}: {}", sweep.rings)?;
        let mark = |ok: bool| if ok { "PASS" } else { "FAIL" };
        match &reproduced {
            Ok(()) => writeln!(out, "{} counterexample_reproduction", mark(true))?,
            Err(e) => writeln!(out, "{} counterexample_reproduction: {e}", mark(false))?,
        }
        writeln!(out, "{} trace_ideal_not_reflexive_example", mark(example))?;
        for (name, tally) in &suites {
            writeln!(
                out,
                "{} {name}: {} rings in scope, {} ideals checked, {} failures",
                mark(tally.failures.is_empty()),
                tally.rings_applicable,
                tally.ideals_checked,
                tally.failures.len()
            )?;
            for f in &tally.failures {
                writeln!(out, "  failing: {}", serde_json::to_string(f)?)?;
            }
        }
        writeln!(out, "{}", mark(passed))?;
    }
    Ok(if passed { Status::Pass } else { Status::Fail })
}

fn search(
    config: &CliConfig,
    max_genus: u32,
    filters: &SearchFilters,
    out: &mut dyn Write,
) -> Result<Status> {
    let limits = config.limits();
    match config.format {
        Format::Csv => {
            let rows = verifier::survey_all(max_genus, filters, &limits)?;
            let mut w = csv::Writer::from_writer(out);
            for row in rows {
                w.serialize(row)?;
            }
            w.flush()?;
        }
        Format::Json => {
            for rec in verifier::search_counterexamples_with(max_genus, filters, &limits)? {
                writeln!(out, "{}", serde_json::to_string(&rec)?)?;
            }
        }
        Format::Text => {
            writeln!(out, "# {MONOMIAL_SCOPE}")?;
            let records = verifier::search_counterexamples_with(max_genus, filters, &limits)?;
            for rec in &records {
                let gens = |v: &[i64]| {
                    v.iter()
                        .map(|g| g.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                };
                writeln!(
                    out,
                    "<{}>  I=({})  genus={}  l(R/C)={}  min_mult={}",
                    gens(&rec.semigroup),
                    gens(&rec.ideal),
                    rec.genus,
                    rec.colength_r_mod_c,
                    rec.minimal_multiplicity
                )?;
            }
            writeln!(
                out,
                "{} reflexive ideals with non-reflexive trace",
                records.len()
            )?;
        }
    }
    Ok(Status::Pass)
}

fn reproduce(config: &CliConfig, out: &mut dyn Write) -> Result<Status> {
    reject_csv(config)?;
    let outcome = verifier::reproduce_counterexample();
    let ring = NumericalSemigroup::new(&[7, 8, 9, 11])?;
    let report = CounterexampleReport::compute(&ring, &[8, 9, 21])?;
    let failure = match outcome {
        Ok(_) => None,
        Err(e @ Error::AssertionFailure { .. }) => Some(e.to_string()),
        Err(e) => return Err(e.into()),
    };
    if config.format == Format::Json {
        #[derive(Serialize)]
        struct Json<'a> {
            passed: bool,
            failure: Option<&'a str>,
            conductor_colength: usize,
            minimal_multiplicity: bool,
            conductor: semitrace::IdealReport,
            ideal: semitrace::IdealReport,
            dual: semitrace::IdealReport,
            double_dual: semitrace::IdealReport,
            trace: semitrace::IdealReport,
            trace_dual: semitrace::IdealReport,
            trace_double_dual: semitrace::IdealReport,
            ideal_reflexive: bool,
            trace_reflexive: bool,
        }
        let j = Json {
            passed: failure.is_none(),
            failure: failure.as_deref(),
            conductor_colength: report.conductor_colength,
            minimal_multiplicity: report.minimal_multiplicity,
            conductor: (&report.conductor).into(),
            ideal: (&report.ideal).into(),
            dual: (&report.dual).into(),
            double_dual: (&report.double_dual).into(),
            trace: (&report.trace).into(),
            trace_dual: (&report.trace_dual).into(),
            trace_double_dual: (&report.trace_double_dual).into(),
            ideal_reflexive: report.ideal_reflexive,
            trace_reflexive: report.trace_reflexive,
        };
        writeln!(out, "{}", serde_json::to_string(&j)?)?;
    } else {
        write!(out, "{}", report.render_text())?;
        match &failure {
            None => writeln!(out, "PASS")?,
            Some(e) => writeln!(out, "FAIL {e}")?,
        }
    }
    Ok(if failure.is_none() {
        Status::Pass
    } else {
        Status::Fail
    })
}

//! Parallel sweeps over all semigroups up to a genus bound.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{enumerate_semigroups_with, Limits, NumericalSemigroup};
use crate::verifier::enumerate::{enumerate_monomial_ideals_with, IdealQuery};
use crate::verifier::suites::{
    check_integrally_closed_containing_conductor, check_trace_of_reflexive,
    check_trace_reflexive_smallcolength, classify, CheckOutcome, SearchRecord,
};

/// Restrictions on which rings a counterexample search visits.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchFilters {
    pub minimal_multiplicity: bool,
    pub max_colength: Option<usize>,
    pub colength: Option<usize>,
}

impl SearchFilters {
    pub fn admits(&self, ring: &NumericalSemigroup) -> bool {
        let l = ring.conductor_colength();
        self.max_colength.is_none_or(|m| l <= m)
            && self.colength.is_none_or(|x| l == x)
            && (!self.minimal_multiplicity || ring.is_minimal_multiplicity().unwrap_or(false))
    }
}

/// Non-regular semigroups of genus `1..=max_genus`, ordered by genus and
/// then by minimal generators.
pub fn sorted_semigroups(max_genus: u32, limits: &Limits) -> Result<Vec<NumericalSemigroup>> {
    let mut all: Vec<_> = enumerate_semigroups_with(max_genus, limits)?
        .filter(|s| !s.is_regular())
        .collect();
    all.sort_by(|a, b| {
        (a.genus(), a.minimal_generators()).cmp(&(b.genus(), b.minimal_generators()))
    });
    Ok(all)
}

/// Ideals `I ⊆ R` (least value at most `c`) that are reflexive while
/// `tr(I)` is not. Every shift class is represented, possibly several times.
pub fn counterexamples_in(ring: &NumericalSemigroup, limits: &Limits) -> Result<Vec<SearchRecord>> {
    let query = IdealQuery::proper().reflexive();
    Ok(enumerate_monomial_ideals_with(ring, &query, limits)?
        .iter()
        .filter(|i| !i.trace_ideal().is_reflexive())
        .map(classify)
        .collect())
}

pub fn search_counterexamples(
    max_genus: u32,
    filters: &SearchFilters,
) -> Result<Vec<SearchRecord>> {
    search_counterexamples_with(max_genus, filters, &Limits::default())
}

pub fn search_counterexamples_with(
    max_genus: u32,
    filters: &SearchFilters,
    limits: &Limits,
) -> Result<Vec<SearchRecord>> {
    if max_genus < 1 {
        return Err(Error::PreconditionFailed(
            "max genus must be at least 1".into(),
        ));
    }
    let rings: Vec<_> = sorted_semigroups(max_genus, limits)?
        .into_iter()
        .filter(|s| filters.admits(s))
        .collect();
    let per_ring: Vec<Vec<SearchRecord>> = rings
        .par_iter()
        .map(|s| counterexamples_in(s, limits))
        .collect::<Result<_>>()?;
    Ok(per_ring.into_iter().flatten().collect())
}

/// One line of the summary CSV.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub generators: String,
    pub genus: usize,
    #[serde(rename = "colength_R_mod_C")]
    pub colength_r_mod_c: usize,
    pub min_mult: bool,
    pub n_ideals: usize,
    pub n_reflexive: usize,
    pub n_trace: usize,
    pub n_counterexamples: usize,
}

/// Counts over the proper ideals of `ring` with least value at most `c`.
pub fn survey(ring: &NumericalSemigroup, limits: &Limits) -> Result<SurveyRow> {
    let ideals = enumerate_monomial_ideals_with(ring, &IdealQuery::proper(), limits)?;
    let mut row = SurveyRow {
        generators: ring
            .minimal_generators()
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(" "),
        genus: ring.genus(),
        colength_r_mod_c: ring.conductor_colength(),
        min_mult: ring.is_minimal_multiplicity()?,
        n_ideals: ideals.len(),
        n_reflexive: 0,
        n_trace: 0,
        n_counterexamples: 0,
    };
    for ideal in &ideals {
        let trace = ideal.trace_ideal();
        let reflexive = ideal.is_reflexive();
        row.n_reflexive += reflexive as usize;
        row.n_trace += (trace == *ideal) as usize;
        row.n_counterexamples += (reflexive && !trace.is_reflexive()) as usize;
    }
    Ok(row)
}

pub fn survey_all(
    max_genus: u32,
    filters: &SearchFilters,
    limits: &Limits,
) -> Result<Vec<SurveyRow>> {
    sorted_semigroups(max_genus, limits)?
        .into_par_iter()
        .filter(|s| filters.admits(s))
        .map(|s| survey(&s, limits))
        .collect()
}

/// Aggregate of one suite across a sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteTally {
    pub rings_applicable: usize,
    pub ideals_checked: usize,
    pub failures: Vec<SearchRecord>,
}

impl SuiteTally {
    fn add(&mut self, outcome: CheckOutcome) {
        self.rings_applicable += outcome.applicable as usize;
        self.ideals_checked += outcome.checked;
        self.failures.extend(outcome.failures);
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub rings: usize,
    pub small_colength_traces: SuiteTally,
    pub traces_of_reflexives: SuiteTally,
    pub closed_over_conductor: SuiteTally,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.small_colength_traces.failures.is_empty()
            && self.traces_of_reflexives.failures.is_empty()
            && self.closed_over_conductor.failures.is_empty()
    }
}

/// Runs all three theorem suites on every non-regular semigroup of genus at
/// most `max_genus`.
pub fn run_theorem_suites(max_genus: u32, limits: &Limits) -> Result<SweepReport> {
    let rings = sorted_semigroups(max_genus, limits)?;
    let outcomes: Vec<(CheckOutcome, CheckOutcome, CheckOutcome)> = rings
        .par_iter()
        .map(|s| {
            Ok((
                check_trace_reflexive_smallcolength(s)?,
                check_trace_of_reflexive(s)?,
                check_integrally_closed_containing_conductor(s)?,
            ))
        })
        .collect::<Result<_>>()?;
    let mut report = SweepReport {
        rings: rings.len(),
        ..SweepReport::default()
    };
    for (a, b, c) in outcomes {
        report.small_colength_traces.add(a);
        report.traces_of_reflexives.add(b);
        report.closed_over_conductor.add(c);
    }
    Ok(report)
}

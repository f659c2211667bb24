//! Theorem suites and counterexample search over enumerated semigroups and
//! their monomial ideals.

pub mod counterexample;
pub mod enumerate;
pub mod search;
pub mod suites;

pub use counterexample::{reproduce_counterexample, CounterexampleReport};
pub use enumerate::{
    enumerate_monomial_ideals, enumerate_monomial_ideals_with, shift_classes, IdealQuery,
};
pub use search::{
    counterexamples_in, run_theorem_suites, search_counterexamples, search_counterexamples_with,
    sorted_semigroups, survey, survey_all, SearchFilters, SuiteTally, SurveyRow, SweepReport,
};
pub use suites::{
    check_integrally_closed_containing_conductor, check_trace_of_reflexive,
    check_trace_reflexive_smallcolength, classify, Check, CheckOutcome, SearchRecord,
    MONOMIAL_SCOPE,
};

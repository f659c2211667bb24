//! Theorem checks over all monomial ideals of one semigroup ring.
//!
//! The quantifiers here range over monomial ideals only, so a clean run
//! corroborates the statements on this class; it cannot prove them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::ideal::ValueIdeal;
use crate::semigroup::NumericalSemigroup;
use crate::verifier::enumerate::{enumerate_monomial_ideals, IdealQuery};

/// Banner attached to every report produced from these suites.
pub const MONOMIAL_SCOPE: &str =
    "scope: monomial ideals only; a clean sweep corroborates, it does not prove";

/// Registry of verdict names carried by a [`SearchRecord`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Reflexive,
    TraceIdeal,
    TraceReflexive,
    IntegrallyClosed,
    ContainsConductor,
    /// Proper trace ideals are reflexive when `ℓ(R/C) ≤ 3`, or `ℓ(R/C) = 4`
    /// with minimal multiplicity.
    SmallColengthTraceReflexive,
    /// Traces of reflexive ideals are reflexive when `ℓ(R/C) = 4`, or
    /// `ℓ(R/C) = 5` with minimal multiplicity.
    TraceOfReflexiveReflexive,
    /// Integrally closed ideals containing `C` are reflexive trace ideals.
    ClosedOverConductorReflexiveTrace,
    /// Minimal multiplicity: a proper trace ideal with `Ī = m` is `m`.
    MinMultClosureMaximal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub semigroup: Vec<i64>,
    /// Minimal generator exponents of the ideal, ascending.
    pub ideal: Vec<i64>,
    pub verdicts: BTreeMap<Check, bool>,
    #[serde(rename = "colength_R_mod_C")]
    pub colength_r_mod_c: usize,
    pub minimal_multiplicity: bool,
    pub genus: usize,
}

impl Check {
    /// Theorem verdicts; the rest only describe the ideal.
    pub fn is_assertion(self) -> bool {
        matches!(
            self,
            Check::SmallColengthTraceReflexive
                | Check::TraceOfReflexiveReflexive
                | Check::ClosedOverConductorReflexiveTrace
                | Check::MinMultClosureMaximal
        )
    }
}

impl SearchRecord {
    /// True unless some theorem verdict failed.
    pub fn passed(&self) -> bool {
        self.verdicts
            .iter()
            .all(|(check, &ok)| ok || !check.is_assertion())
    }
}

/// Basic verdicts for `ideal`: reflexive, trace ideal, trace reflexive,
/// integrally closed, contains `C`.
pub fn classify(ideal: &ValueIdeal) -> SearchRecord {
    let ring = ideal.ring();
    let mut verdicts = BTreeMap::new();
    verdicts.insert(Check::Reflexive, ideal.is_reflexive());
    let trace = ideal.trace_ideal();
    verdicts.insert(Check::TraceReflexive, trace.is_reflexive());
    if ideal.is_integral() {
        verdicts.insert(Check::TraceIdeal, trace == *ideal);
        verdicts.insert(
            Check::IntegrallyClosed,
            ideal.is_integrally_closed().expect("integral"),
        );
    }
    verdicts.insert(
        Check::ContainsConductor,
        ideal.stable_bound() <= ring.conductor(),
    );
    SearchRecord {
        semigroup: ring.minimal_generators().to_vec(),
        ideal: ideal.minimal_generators(),
        verdicts,
        colength_r_mod_c: ring.conductor_colength(),
        minimal_multiplicity: ring.is_minimal_multiplicity().unwrap_or(false),
        genus: ring.genus(),
    }
}

/// Result of one suite on one ring.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckOutcome {
    /// Whether the ring satisfies the statement's hypotheses at all.
    pub applicable: bool,
    /// Ideals on which an assertion was evaluated.
    pub checked: usize,
    pub failures: Vec<SearchRecord>,
}

impl CheckOutcome {
    fn absorb(&mut self, record: SearchRecord) {
        self.checked += 1;
        if !record.passed() {
            self.failures.push(record);
        }
    }
}

/// Every proper regular trace ideal is reflexive if `ℓ(R/C) ≤ 3`, or if
/// `ℓ(R/C) = 4` and `R` has minimal multiplicity.
pub fn check_trace_reflexive_smallcolength(ring: &NumericalSemigroup) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::default();
    if ring.is_regular() {
        return Ok(out);
    }
    let colength = ring.conductor_colength();
    out.applicable = colength <= 3 || (colength == 4 && ring.is_minimal_multiplicity()?);
    if !out.applicable {
        return Ok(out);
    }
    let query = IdealQuery::containing_conductor().and_proper().trace();
    for ideal in enumerate_monomial_ideals(ring, &query)? {
        let mut record = classify(&ideal);
        record
            .verdicts
            .insert(Check::SmallColengthTraceReflexive, ideal.is_reflexive());
        out.absorb(record);
    }
    Ok(out)
}

/// The trace of every reflexive regular ideal is reflexive if `ℓ(R/C) = 4`,
/// or if `ℓ(R/C) = 5` and `R` has minimal multiplicity.
pub fn check_trace_of_reflexive(ring: &NumericalSemigroup) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::default();
    if ring.is_regular() {
        return Ok(out);
    }
    let colength = ring.conductor_colength();
    out.applicable = colength == 4 || (colength == 5 && ring.is_minimal_multiplicity()?);
    if !out.applicable {
        return Ok(out);
    }
    let query = IdealQuery::proper().reflexive().normalized();
    for ideal in enumerate_monomial_ideals(ring, &query)? {
        let mut record = classify(&ideal);
        record.verdicts.insert(
            Check::TraceOfReflexiveReflexive,
            ideal.trace_ideal().is_reflexive(),
        );
        out.absorb(record);
    }
    Ok(out)
}

/// Integrally closed ideals containing `C` are reflexive trace ideals; with
/// minimal multiplicity, a proper trace ideal whose closure is `m` is `m`.
pub fn check_integrally_closed_containing_conductor(
    ring: &NumericalSemigroup,
) -> Result<CheckOutcome> {
    let mut out = CheckOutcome {
        applicable: !ring.is_regular(),
        ..CheckOutcome::default()
    };
    if ring.is_regular() {
        return Ok(out);
    }
    let maximal = ValueIdeal::maximal(ring);
    let min_mult = ring.is_minimal_multiplicity()?;
    for ideal in enumerate_monomial_ideals(ring, &IdealQuery::containing_conductor())? {
        let closed = ideal.is_integrally_closed()?;
        let is_trace = ideal.trace_ideal() == ideal;
        let closes_to_maximal = ideal.integral_closure()? == maximal;
        let maximal_closure_case = min_mult && ideal.is_proper() && is_trace && closes_to_maximal;
        if !closed && !maximal_closure_case {
            continue;
        }
        let mut record = classify(&ideal);
        if closed {
            record.verdicts.insert(
                Check::ClosedOverConductorReflexiveTrace,
                ideal.is_reflexive() && is_trace,
            );
        }
        if maximal_closure_case {
            record
                .verdicts
                .insert(Check::MinMultClosureMaximal, ideal == maximal);
        }
        out.absorb(record);
    }
    Ok(out)
}

//! The reflexive ideal with non-reflexive trace over `k[[t^7,t^8,t^9,t^11]]`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ideal::ValueIdeal;
use crate::semigroup::NumericalSemigroup;
use crate::valueset::ValueSet;

/// Every value set involved in testing whether `tr(I)` of a reflexive `I`
/// stays reflexive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleReport {
    pub semigroup: NumericalSemigroup,
    pub ideal_generators: Vec<i64>,
    pub conductor: ValueIdeal,
    pub conductor_colength: usize,
    pub minimal_multiplicity: bool,
    /// `x₁R :_R m` with `x₁ = t^{e}`.
    pub maximal_reduction_colon: ValueIdeal,
    pub ideal: ValueIdeal,
    pub dual: ValueIdeal,
    pub dual_generators: Vec<i64>,
    pub double_dual: ValueIdeal,
    pub ideal_reflexive: bool,
    pub trace: ValueIdeal,
    pub trace_generators: Vec<i64>,
    pub trace_is_trace_ideal: bool,
    pub trace_dual: ValueIdeal,
    pub trace_double_dual: ValueIdeal,
    pub trace_reflexive: bool,
}

impl CounterexampleReport {
    pub fn compute(semigroup: &NumericalSemigroup, ideal_generators: &[i64]) -> Result<Self> {
        let ideal = ValueIdeal::from_exponents(semigroup, ideal_generators)?;
        let maximal = ValueIdeal::maximal(semigroup);
        let conductor = ValueIdeal::conductor(semigroup);
        let dual = ideal.dual();
        let double_dual = dual.dual();
        let trace = ideal.trace_ideal();
        let trace_dual = trace.dual();
        let trace_double_dual = trace_dual.dual();
        Ok(CounterexampleReport {
            semigroup: semigroup.clone(),
            ideal_generators: ideal_generators.to_vec(),
            conductor_colength: ValueIdeal::unit(semigroup).colength(&conductor)?,
            minimal_multiplicity: semigroup.is_minimal_multiplicity()?,
            maximal_reduction_colon: maximal.reduction_colon(),
            conductor,
            ideal_reflexive: double_dual == ideal,
            dual_generators: dual.minimal_generators(),
            trace_generators: trace.minimal_generators(),
            trace_is_trace_ideal: trace.trace_ideal() == trace,
            trace_reflexive: trace_double_dual == trace,
            ideal,
            dual,
            double_dual,
            trace,
            trace_dual,
            trace_double_dual,
        })
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let gens = |v: &[i64]| {
            v.iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let _ = writeln!(s, "R = semigroup ring of {}", self.semigroup);
        let _ = writeln!(s, "v(R)      = {}", self.semigroup.values());
        let _ = writeln!(s, "v(C)      = {}", self.conductor);
        let _ = writeln!(s, "l(R/C)    = {}", self.conductor_colength);
        let _ = writeln!(s, "min mult  = {}", self.minimal_multiplicity);
        let _ = writeln!(s, "v(xR:m)   = {}", self.maximal_reduction_colon);
        let _ = writeln!(s, "I         = ({})", gens(&self.ideal_generators));
        let _ = writeln!(s, "v(I)      = {}", self.ideal);
        let _ = writeln!(
            s,
            "v(I*)     = {}  generators ({})",
            self.dual,
            gens(&self.dual_generators)
        );
        let _ = writeln!(
            s,
            "v(I**)    = {}  generators ({})",
            self.double_dual,
            gens(&self.double_dual.minimal_generators())
        );
        let _ = writeln!(s, "I reflexive        = {}", self.ideal_reflexive);
        let _ = writeln!(
            s,
            "v(tr I)   = {}  generators ({})",
            self.trace,
            gens(&self.trace_generators)
        );
        let _ = writeln!(s, "v(tr I*)  = {}", self.trace_dual);
        let _ = writeln!(s, "v(tr I**) = {}", self.trace_double_dual);
        let _ = writeln!(s, "tr I reflexive     = {}", self.trace_reflexive);
        s
    }
}

fn expect_set(check: &str, actual: &ValueIdeal, expected: ValueSet) -> Result<()> {
    if *actual.values() == expected {
        Ok(())
    } else {
        Err(Error::AssertionFailure {
            check: check.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        })
    }
}

fn expect<T: PartialEq + std::fmt::Debug>(check: &str, actual: T, expected: T) -> Result<()> {
    if actual == expected {
        Ok(())
    } else {
        Err(Error::AssertionFailure {
            check: check.into(),
            expected: format!("{expected:?}"),
            actual: format!("{actual:?}"),
        })
    }
}

/// Recomputes the counterexample over `⟨7,8,9,11⟩` with `I = (t^8, t^9, t^21)`
/// and checks every value set against the known answer, stopping at the
/// first mismatch.
pub fn reproduce_counterexample() -> Result<CounterexampleReport> {
    let ring = NumericalSemigroup::new(&[7, 8, 9, 11])?;
    let report = CounterexampleReport::compute(&ring, &[8, 9, 21])?;

    // ring data
    expect_set("v(C)", &report.conductor, ValueSet::at_least(14))?;
    expect("l(R/C)", report.conductor_colength, 5)?;
    expect(
        "v(R) below the conductor",
        ring.values().members().collect::<Vec<_>>(),
        vec![0, 7, 8, 9, 11],
    )?;
    expect(
        "t^8 in x1R :_R m",
        report.maximal_reduction_colon.contains(8),
        false,
    )?;
    expect("minimal multiplicity", report.minimal_multiplicity, false)?;

    // I = J** for J = (t^8, t^9), and I is reflexive
    let j = ValueIdeal::from_exponents(&ring, &[8, 9])?;
    expect_set("v(J*)", &j.dual(), ValueSet::from_elements([-1, 0], 6))?;
    expect(
        "J* generators",
        j.dual().minimal_generators(),
        vec![-1, 0, 12],
    )?;
    expect_set(
        "v(J**)",
        &j.double_dual(),
        ValueSet::from_elements([8, 9], 15),
    )?;
    expect("J** = I", j.double_dual() == report.ideal, true)?;
    expect_set("v(I*)", &report.dual, ValueSet::from_elements([-1, 0], 6))?;
    expect(
        "I* generators",
        report.dual_generators.clone(),
        vec![-1, 0, 12],
    )?;
    expect_set(
        "v(I**)",
        &report.double_dual,
        ValueSet::from_elements([8, 9], 15),
    )?;
    expect("I reflexive", report.ideal_reflexive, true)?;

    // tr(I) = (t^7, t^8, t^9)
    expect_set(
        "v(tr I)",
        &report.trace,
        ValueSet::from_elements([7, 8, 9], 14),
    )?;
    expect(
        "tr I generators",
        report.trace_generators.clone(),
        vec![7, 8, 9],
    )?;
    expect("11 in v(tr I)", report.trace.contains(11), false)?;

    // tr(I) is not reflexive
    expect_set(
        "v(tr I*)",
        &report.trace_dual,
        ValueSet::from_elements([0], 7),
    )?;
    expect(
        "11 in v(tr I**)",
        report.trace_double_dual.contains(11),
        true,
    )?;
    expect_set(
        "v(tr I**)",
        &report.trace_double_dual,
        ValueSet::from_elements([7, 8, 9, 11], 14),
    )?;
    expect(
        "tr I** = m",
        report.trace_double_dual == ValueIdeal::maximal(&ring),
        true,
    )?;
    expect("tr I reflexive", report.trace_reflexive, false)?;
    Ok(report)
}

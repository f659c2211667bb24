//! Machine-readable report forms.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::ValueIdeal;
use crate::semigroup::NumericalSemigroup;
use crate::trace::IdealProfile;
use crate::valueset::ValueSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupReport {
    pub generators: Vec<i64>,
    pub frobenius: i64,
    pub genus: usize,
    pub conductor: i64,
}

impl From<&NumericalSemigroup> for SemigroupReport {
    fn from(s: &NumericalSemigroup) -> Self {
        SemigroupReport {
            generators: s.minimal_generators().to_vec(),
            frobenius: s.frobenius(),
            genus: s.genus(),
            conductor: s.conductor(),
        }
    }
}

/// `{"min":m₀,"stable":b,"members":[…],"generators":[…]}`, where `members`
/// lists the values in `[min, stable)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealReport {
    pub min: i64,
    pub stable: i64,
    pub members: Vec<i64>,
    pub generators: Vec<i64>,
}

impl From<&ValueIdeal> for IdealReport {
    fn from(i: &ValueIdeal) -> Self {
        IdealReport {
            min: i.min_value(),
            stable: i.stable_bound(),
            members: i.values().members().collect(),
            generators: i.minimal_generators(),
        }
    }
}

impl IdealReport {
    /// Rebuilds the ideal from its generators and checks the rest of the
    /// report agrees with it.
    pub fn to_ideal(&self, ring: &NumericalSemigroup) -> Result<ValueIdeal> {
        let ideal = ValueIdeal::from_exponents(ring, &self.generators)?;
        let listed = ValueSet::from_elements(self.members.iter().copied(), self.stable);
        if *ideal.values() != listed || ideal.min_value() != self.min {
            return Err(Error::AssertionFailure {
                check: "ideal report consistency".into(),
                expected: ideal.to_string(),
                actual: listed.to_string(),
            });
        }
        Ok(ideal)
    }
}

/// Flat JSON form of an [`IdealProfile`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileReport {
    pub semigroup: SemigroupReport,
    pub ideal: IdealReport,
    pub dual: IdealReport,
    pub double_dual: IdealReport,
    pub trace: IdealReport,
    pub closure: Option<IdealReport>,
    pub is_reflexive: bool,
    pub is_trace_ideal: Option<bool>,
    pub is_integrally_closed: Option<bool>,
    #[serde(rename = "colength_in_R")]
    pub colength_in_ring: Option<usize>,
    pub partial_trace_criterion: Option<bool>,
    pub is_stable: bool,
}

impl From<&IdealProfile> for ProfileReport {
    fn from(p: &IdealProfile) -> Self {
        ProfileReport {
            semigroup: p.ideal.ring().into(),
            ideal: (&p.ideal).into(),
            dual: (&p.dual).into(),
            double_dual: (&p.double_dual).into(),
            trace: (&p.trace).into(),
            closure: p.closure.as_ref().map(Into::into),
            is_reflexive: p.is_reflexive,
            is_trace_ideal: p.is_trace_ideal,
            is_integrally_closed: p.is_integrally_closed,
            colength_in_ring: p.colength_in_ring,
            partial_trace_criterion: p.partial_trace_criterion,
            is_stable: p.is_stable,
        }
    }
}

//! Exhaustive enumeration of the monomial ideals of a semigroup ring.
//!
//! Every monomial fractional ideal is `t^a E` for a unique value set `E` with
//! `v(R) ⊆ E ⊆ ℕ` and `0 ∈ E`: its shift class. Such an `E` is fixed by
//! which gaps of `v(R)` it contains, subject to closure under adding
//! `v(R)`. The ideals of `R` whose least value is at most `c` are the
//! shifts `a + E ⊆ v(R)` with `0 ≤ a ≤ c`; every shift class has at least
//! one of them (`a = c`), and every ideal containing `C` is among them.

use crate::error::{Error, Result};
use crate::ideal::ValueIdeal;
use crate::semigroup::{Limits, NumericalSemigroup};
use crate::valueset::ValueSet;

/// Filters for [`enumerate_monomial_ideals`]. All filters combine with AND.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct IdealQuery {
    /// Only ideals inside `m`.
    pub proper: bool,
    pub containing_conductor: bool,
    pub reflexive_only: bool,
    pub trace_only: bool,
    pub principal_only: bool,
    /// Keep one ideal per shift class: the surviving shift of least
    /// colength `ℓ(R/I)`, ties to the least value.
    pub shift_normalize: bool,
}

impl IdealQuery {
    /// Every ideal `I ⊆ R` with `min v(I) ≤ c`.
    pub fn all() -> Self {
        Self::default()
    }

    pub fn proper() -> Self {
        IdealQuery {
            proper: true,
            ..Self::default()
        }
    }

    pub fn containing_conductor() -> Self {
        IdealQuery {
            containing_conductor: true,
            ..Self::default()
        }
    }

    pub fn reflexive(mut self) -> Self {
        self.reflexive_only = true;
        self
    }

    pub fn trace(mut self) -> Self {
        self.trace_only = true;
        self
    }

    pub fn principal(mut self) -> Self {
        self.principal_only = true;
        self
    }

    pub fn normalized(mut self) -> Self {
        self.shift_normalize = true;
        self
    }

    pub fn and_proper(mut self) -> Self {
        self.proper = true;
        self
    }
}

/// All shift classes `E` (`v(R) ⊆ E ⊆ ℕ`, `E + v(R) ⊆ E`), in no particular order.
pub fn shift_classes(ring: &NumericalSemigroup) -> Vec<ValueSet> {
    let gaps = ring.gaps();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(gaps.len());
    walk_classes(ring, &gaps, 0, &mut chosen, &mut out);
    out
}

fn walk_classes(
    ring: &NumericalSemigroup,
    gaps: &[i64],
    next: usize,
    chosen: &mut Vec<i64>,
    out: &mut Vec<ValueSet>,
) {
    let Some(&gap) = gaps.get(next) else {
        let members = ring.values().members().chain(chosen.iter().copied());
        out.push(ValueSet::from_elements(members, ring.conductor()));
        return;
    };
    // A chosen smaller gap plus an element of v(R) landing here forces it in.
    let forced = chosen.iter().any(|&x| ring.contains(gap - x));
    if !forced {
        walk_classes(ring, gaps, next + 1, chosen, out);
    }
    chosen.push(gap);
    walk_classes(ring, gaps, next + 1, chosen, out);
    chosen.pop();
}

pub fn enumerate_monomial_ideals(
    ring: &NumericalSemigroup,
    query: &IdealQuery,
) -> Result<Vec<ValueIdeal>> {
    enumerate_monomial_ideals_with(ring, query, &Limits::default())
}

/// Ideals matching `query`, sorted by their minimal generator tuples.
pub fn enumerate_monomial_ideals_with(
    ring: &NumericalSemigroup,
    query: &IdealQuery,
    limits: &Limits,
) -> Result<Vec<ValueIdeal>> {
    if ring.is_regular() {
        return Err(Error::RegularRing);
    }
    if ring.genus() > limits.max_genus as usize {
        return Err(Error::ResourceLimit {
            what: "genus for ideal enumeration",
            requested: ring.genus() as i64,
            ceiling: limits.max_genus as i64,
        });
    }
    let unit = ValueIdeal::unit(ring);
    let c = ring.conductor();
    let first = if query.proper { 1 } else { 0 };
    let mut found: Vec<(Vec<i64>, ValueIdeal)> = Vec::new();
    for class in shift_classes(ring) {
        if query.principal_only && class != *ring.values() {
            continue;
        }
        let mut best: Option<(usize, ValueIdeal)> = None;
        for a in first..=c {
            if !ring.contains(a) {
                continue;
            }
            let shifted = class.shift(a);
            if !shifted.is_subset(ring.values()) {
                continue;
            }
            if query.containing_conductor && shifted.stable() > c {
                continue;
            }
            let ideal = ValueIdeal::from_values_unchecked(ring, shifted);
            if query.reflexive_only && !ideal.is_reflexive() {
                continue;
            }
            if query.trace_only && ideal.trace_ideal() != ideal {
                continue;
            }
            if query.shift_normalize {
                let colength = unit.colength(&ideal).expect("ideal lies in R");
                if best.as_ref().is_none_or(|(l, _)| colength < *l) {
                    best = Some((colength, ideal));
                }
            } else {
                found.push((ideal.minimal_generators(), ideal));
            }
        }
        if let Some((_, ideal)) = best {
            found.push((ideal.minimal_generators(), ideal));
        }
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(found.into_iter().map(|(_, i)| i).collect())
}

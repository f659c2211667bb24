//! Monomial fractional ideals of a numerical semigroup ring, represented by
//! their value sets `v(I) = {r ∈ ℤ : t^r ∈ I}`.
//!
//! For monomial ideals the value set determines the ideal, and the ideal
//! operations become set operations on `ℤ`:
//!
//! | ideal      | value set                                   |
//! |------------|---------------------------------------------|
//! | `I + J`    | `v(I) ∪ v(J)`                               |
//! | `I ∩ J`    | `v(I) ∩ v(J)`                               |
//! | `I·J`      | `v(I) + v(J)` (Minkowski sum)               |
//! | `I : J`    | `⋂_{g} (v(I) − g)`, `g` over generators of J |
//! | `t^a I`    | `a + v(I)`                                  |
//!
//! The colon formula follows from `J = Σ t^g R` and
//! `R : t^g L = t^{-g}(R : L)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use crate::valueset::ValueSet;

/// A nonzero monomial fractional ideal over a fixed numerical semigroup ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ValueIdeal {
    ring: NumericalSemigroup,
    values: ValueSet,
}

impl ValueIdeal {
    /// The ideal generated by `t^e` for each `e` in `exps`.
    pub fn from_exponents(ring: &NumericalSemigroup, exps: &[i64]) -> Result<Self> {
        let (&first, rest) = exps.split_first().ok_or(Error::EmptyGenerators)?;
        let base = ring.values();
        let values = rest
            .iter()
            .fold(base.shift(first), |acc, &e| acc.union(&base.shift(e)));
        Ok(ValueIdeal {
            ring: ring.clone(),
            values,
        })
    }

    /// Wraps an arbitrary value set after checking it is closed under the
    /// action of `v(R)`.
    pub fn from_values(ring: &NumericalSemigroup, values: ValueSet) -> Result<Self> {
        let closed = ring
            .minimal_generators()
            .iter()
            .all(|&g| values.shift(g).is_subset(&values));
        if !closed {
            return Err(Error::ClosureViolation(values.to_string()));
        }
        Ok(ValueIdeal {
            ring: ring.clone(),
            values,
        })
    }

    pub(crate) fn from_values_unchecked(ring: &NumericalSemigroup, values: ValueSet) -> Self {
        ValueIdeal {
            ring: ring.clone(),
            values,
        }
    }

    /// `t^a R`.
    pub fn principal(ring: &NumericalSemigroup, a: i64) -> Self {
        Self::from_values_unchecked(ring, ring.values().shift(a))
    }

    /// `R` itself.
    pub fn unit(ring: &NumericalSemigroup) -> Self {
        Self::principal(ring, 0)
    }

    /// The maximal ideal `m`, with `v(m) = v(R) \ {0}`.
    pub fn maximal(ring: &NumericalSemigroup) -> Self {
        Self::from_values_unchecked(ring, ring.values().without(0))
    }

    /// The conductor `C = R : R̄`, with `v(C) = [c, ∞)`.
    pub fn conductor(ring: &NumericalSemigroup) -> Self {
        Self::from_values_unchecked(ring, ValueSet::at_least(ring.conductor()))
    }

    /// `R̄ = k[[t]]` as a fractional ideal of `R`.
    pub fn normalization(ring: &NumericalSemigroup) -> Self {
        Self::from_values_unchecked(ring, ValueSet::at_least(0))
    }

    pub fn ring(&self) -> &NumericalSemigroup {
        &self.ring
    }

    pub fn values(&self) -> &ValueSet {
        &self.values
    }

    /// `min v(I)`.
    pub fn min_value(&self) -> i64 {
        self.values.min()
    }

    /// Least `b` with `[b, ∞) ⊆ v(I)`.
    pub fn stable_bound(&self) -> i64 {
        self.values.stable()
    }

    pub fn contains(&self, n: i64) -> bool {
        self.values.contains(n)
    }

    pub fn is_subset(&self, other: &ValueIdeal) -> bool {
        self.values.is_subset(&other.values)
    }

    /// True when `I ⊆ R`.
    pub fn is_integral(&self) -> bool {
        self.values.is_subset(self.ring.values())
    }

    /// True when `I ⊆ m`.
    pub fn is_proper(&self) -> bool {
        self.is_integral() && self.min_value() > 0
    }

    pub fn is_principal(&self) -> bool {
        self.values == self.ring.values().shift(self.min_value())
    }

    fn same_ring(&self, other: &ValueIdeal) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn with_values(&self, values: ValueSet) -> ValueIdeal {
        ValueIdeal {
            ring: self.ring.clone(),
            values,
        }
    }

    /// `t^a I`.
    pub fn shift(&self, a: i64) -> ValueIdeal {
        self.with_values(self.values.shift(a))
    }

    pub fn sum(&self, other: &ValueIdeal) -> Result<ValueIdeal> {
        self.same_ring(other)?;
        Ok(self.with_values(self.values.union(&other.values)))
    }

    pub fn intersect(&self, other: &ValueIdeal) -> Result<ValueIdeal> {
        self.same_ring(other)?;
        Ok(self.with_values(self.values.intersection(&other.values)))
    }

    /// `I·J`: the union of `g + v(J)` over the generators `g` of `I`.
    pub fn product(&self, other: &ValueIdeal) -> Result<ValueIdeal> {
        self.same_ring(other)?;
        let gens = self.minimal_generators();
        let values = gens[1..]
            .iter()
            .fold(other.values.shift(gens[0]), |acc, &g| {
                acc.union(&other.values.shift(g))
            });
        Ok(self.with_values(values))
    }

    /// `I : J = {α : αJ ⊆ I}`.
    pub fn colon(&self, other: &ValueIdeal) -> Result<ValueIdeal> {
        self.same_ring(other)?;
        let gens = other.minimal_generators();
        let values = gens[1..]
            .iter()
            .fold(self.values.shift(-gens[0]), |acc, &g| {
                acc.intersection(&self.values.shift(-g))
            });
        Ok(self.with_values(values))
    }

    /// `I* = R : I`.
    pub fn dual(&self) -> ValueIdeal {
        ValueIdeal::unit(&self.ring)
            .colon(self)
            .expect("same ring by construction")
    }

    /// `I** = R : (R : I)`.
    pub fn double_dual(&self) -> ValueIdeal {
        self.dual().dual()
    }

    /// Exponents of a minimal monomial generating set: members of `v(I)`
    /// not in `v(I) + v(m)`.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let decomposable = self
            .ring
            .minimal_generators()
            .iter()
            .map(|&g| self.values.shift(g))
            .reduce(|acc, s| acc.union(&s));
        match decomposable {
            Some(d) => self.values.difference_elements(&d),
            None => vec![self.min_value()],
        }
    }

    /// `ℓ(I/J) = |v(I) \ v(J)|` for `J ⊆ I`.
    pub fn colength(&self, sub: &ValueIdeal) -> Result<usize> {
        self.same_ring(sub)?;
        if !sub.is_subset(self) {
            return Err(Error::NotContained);
        }
        Ok(self.values.count_difference(&sub.values))
    }

    /// `Ī = I R̄ ∩ R`, i.e. `v(R) ∩ [min v(I), ∞)`.
    pub fn integral_closure(&self) -> Result<ValueIdeal> {
        if !self.is_integral() {
            return Err(Error::NotIntegral);
        }
        let tail = ValueSet::at_least(self.min_value());
        Ok(self.with_values(self.ring.values().intersection(&tail)))
    }

    pub fn is_integrally_closed(&self) -> Result<bool> {
        Ok(self.integral_closure()? == *self)
    }

    /// True when `other = t^a · self` for some integer `a`.
    pub fn is_shift_equivalent(&self, other: &ValueIdeal) -> bool {
        self.ring == other.ring
            && self.values.shift(other.min_value() - self.min_value()) == other.values
    }
}

impl fmt::Debug for ValueIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.values, self.ring)
    }
}

impl fmt::Display for ValueIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.values, f)
    }
}

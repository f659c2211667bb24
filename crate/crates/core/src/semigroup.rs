//! Numerical semigroups: the value semigroups `v(R)` of rings
//! `k[[t^{a₁},…,t^{aₙ}]]`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::valueset::ValueSet;

/// Resource ceilings shared by construction and enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest genus `enumerate_semigroups` will walk to.
    pub max_genus: u32,
    /// Largest membership window (`≈` conductor) a semigroup may need.
    pub max_window: i64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_genus: 24,
            max_window: 1 << 20,
        }
    }
}

#[derive(PartialEq, Eq, Hash)]
struct Inner {
    generators: Vec<i64>,
    minimal_generators: Vec<i64>,
    values: ValueSet,
    genus: usize,
}

/// A numerical semigroup `S ⊆ ℕ` with finite complement.
///
/// Cloning is cheap; the data is shared and immutable.
#[derive(Clone)]
pub struct NumericalSemigroup(Arc<Inner>);

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

impl NumericalSemigroup {
    pub fn new(gens: &[i64]) -> Result<Self> {
        Self::with_limits(gens, &Limits::default())
    }

    pub fn with_limits(gens: &[i64], limits: &Limits) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&bad) = gens.iter().find(|&&g| g < 1) {
            return Err(Error::NonPositiveGenerator(bad));
        }
        let mut generators = gens.to_vec();
        generators.sort_unstable();
        generators.dedup();
        let g = generators.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::GcdNotOne {
                gens: generators,
                gcd: g,
            });
        }
        let smallest = generators[0];
        let largest = *generators.last().unwrap();
        // Schur's bound on the Frobenius number.
        let bound = (smallest - 1).saturating_mul(largest - 1);
        if bound > limits.max_window {
            return Err(Error::ResourceLimit {
                what: "membership window",
                requested: bound,
                ceiling: limits.max_window,
            });
        }

        // Grow the membership table until `smallest` consecutive members
        // appear; everything beyond is then a member too.
        let mut member: Vec<bool> = Vec::new();
        let mut run = 0;
        let mut n = 0i64;
        while run < smallest {
            let is = n == 0
                || generators
                    .iter()
                    .any(|&g| g <= n && member[(n - g) as usize]);
            member.push(is);
            run = if is { run + 1 } else { 0 };
            n += 1;
        }
        let conductor = n - run;
        let values = ValueSet::from_fn(0, conductor, |k| member[k as usize]);
        Ok(Self::build(generators, values))
    }

    /// The semigroup whose members are `values`; the caller guarantees
    /// `0 ∈ values ⊆ ℕ` and additive closure.
    pub(crate) fn from_values(values: ValueSet) -> Self {
        debug_assert_eq!(values.min(), 0);
        let mult = values.without(0).min();
        let spanning: Vec<i64> = values
            .members()
            .chain(values.stable()..values.stable() + mult)
            .filter(|&e| e > 0 && e < values.stable() + mult)
            .collect();
        let minimal = minimal_generators_of(&values, &spanning);
        Self::build(minimal, values)
    }

    fn build(generators: Vec<i64>, values: ValueSet) -> Self {
        let minimal_generators = minimal_generators_of(&values, &generators);
        let genus = values.holes().count();
        NumericalSemigroup(Arc::new(Inner {
            generators,
            minimal_generators,
            values,
            genus,
        }))
    }

    /// Generators as supplied (sorted, deduplicated).
    pub fn generators(&self) -> &[i64] {
        &self.0.generators
    }

    /// The unique minimal generating set, ascending.
    pub fn minimal_generators(&self) -> &[i64] {
        &self.0.minimal_generators
    }

    /// `v(R)` as a value set.
    pub fn values(&self) -> &ValueSet {
        &self.0.values
    }

    pub fn contains(&self, n: i64) -> bool {
        self.0.values.contains(n)
    }

    /// Largest gap, `-1` for `ℕ`.
    pub fn frobenius(&self) -> i64 {
        self.0.values.stable() - 1
    }

    /// Conductor exponent `c`: `t^{c+i} ∈ R` for all `i ≥ 0` and `c - 1` is a gap.
    pub fn conductor(&self) -> i64 {
        self.0.values.stable()
    }

    pub fn genus(&self) -> usize {
        self.0.genus
    }

    pub fn gaps(&self) -> Vec<i64> {
        self.0.values.holes().collect()
    }

    /// `e(R)`, the smallest positive member.
    pub fn multiplicity(&self) -> i64 {
        self.0.minimal_generators[0]
    }

    /// `μ(m)`, the number of minimal generators.
    pub fn embedding_dimension(&self) -> usize {
        self.0.minimal_generators.len()
    }

    /// `ℓ(R/C)`: members below the conductor.
    pub fn conductor_colength(&self) -> usize {
        (self.conductor() - self.genus() as i64) as usize
    }

    /// True for `ℕ`, i.e. `R = k[[t]]`.
    pub fn is_regular(&self) -> bool {
        self.0.values.min() == 0 && self.0.values.stable() == 0
    }

    /// Membership table over `[0, c]`.
    pub fn membership_window(&self) -> Vec<bool> {
        (0..=self.conductor()).map(|n| self.contains(n)).collect()
    }

    pub fn ptr_eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

/// Members of `m = S \ {0}` outside `m + m`, where `spanning` generates `S`.
fn minimal_generators_of(values: &ValueSet, spanning: &[i64]) -> Vec<i64> {
    let maximal = values.without(0);
    let mut decomposable: Option<ValueSet> = None;
    for &g in spanning {
        let shifted = maximal.shift(g);
        decomposable = Some(match decomposable {
            None => shifted,
            Some(acc) => acc.union(&shifted),
        });
    }
    match decomposable {
        Some(d) => maximal.difference_elements(&d),
        None => vec![1],
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.ptr_eq(other) || self.0.values == other.0.values
    }
}

impl Eq for NumericalSemigroup {}

impl std::hash::Hash for NumericalSemigroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.values.hash(state)
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .minimal_generators()
            .iter()
            .map(|g| g.to_string())
            .collect();
        write!(f, "⟨{}⟩", gens.join(","))
    }
}

/// Parses the comma separated exponent syntax, e.g. `"7,8,9,11"` or `"-1,0,12"`.
pub fn parse_exponents(input: &str) -> Result<Vec<i64>> {
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    trimmed
        .split(',')
        .map(|tok| {
            tok.trim().parse::<i64>().map_err(|e| Error::Parse {
                input: input.to_string(),
                reason: format!("{:?}: {e}", tok.trim()),
            })
        })
        .collect()
}

/// Depth-first walk of the semigroup tree rooted at `ℕ`.
///
/// The children of `S` are `S \ {g}` for each minimal generator `g > F(S)`,
/// visited in ascending order of `g`. Every numerical semigroup of genus at
/// most `max_genus` is produced exactly once.
pub struct SemigroupTree {
    stack: Vec<NumericalSemigroup>,
    max_genus: usize,
}

impl Iterator for SemigroupTree {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<NumericalSemigroup> {
        let s = self.stack.pop()?;
        if s.genus() < self.max_genus {
            let f = s.frobenius();
            for &g in s.minimal_generators().iter().rev().filter(|&&g| g > f) {
                self.stack
                    .push(NumericalSemigroup::from_values(s.values().without(g)));
            }
        }
        Some(s)
    }
}

pub fn enumerate_semigroups(max_genus: u32) -> Result<SemigroupTree> {
    enumerate_semigroups_with(max_genus, &Limits::default())
}

pub fn enumerate_semigroups_with(max_genus: u32, limits: &Limits) -> Result<SemigroupTree> {
    if max_genus > limits.max_genus {
        return Err(Error::ResourceLimit {
            what: "max genus",
            requested: max_genus as i64,
            ceiling: limits.max_genus as i64,
        });
    }
    Ok(SemigroupTree {
        stack: vec![NumericalSemigroup::new(&[1]).expect("ℕ is a semigroup")],
        max_genus: max_genus as usize,
    })
}

//! Trace ideals, reflexivity, minimal multiplicity, partial traces and
//! birational extensions, all evaluated on value sets.

use crate::error::{Error, Result};
use crate::ideal::ValueIdeal;
use crate::semigroup::NumericalSemigroup;
use crate::valueset::ValueSet;

/// A monomial birational extension `R ⊆ T ⊆ R̄`: a value set containing
/// `v(R)`, contained in `ℕ`, and closed under addition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionRing {
    carrier: ValueIdeal,
}

impl ExtensionRing {
    pub fn new(carrier: ValueIdeal) -> Result<Self> {
        let values = carrier.values();
        let ring_values = carrier.ring().values();
        let closed = values.min() == 0
            && ring_values.is_subset(values)
            && values
                .members()
                .filter(|&t| t > 0)
                .all(|t| values.shift(t).is_subset(values));
        if !closed {
            return Err(Error::ClosureViolation(values.to_string()));
        }
        Ok(ExtensionRing { carrier })
    }

    /// `R̄ = k[[t]]`.
    pub fn normalization(ring: &NumericalSemigroup) -> Self {
        ExtensionRing {
            carrier: ValueIdeal::normalization(ring),
        }
    }

    /// `R` as an extension of itself.
    pub fn base(ring: &NumericalSemigroup) -> Self {
        ExtensionRing {
            carrier: ValueIdeal::unit(ring),
        }
    }

    pub fn carrier(&self) -> &ValueIdeal {
        &self.carrier
    }

    /// The value semigroup of the extension itself.
    pub fn semigroup(&self) -> NumericalSemigroup {
        NumericalSemigroup::from_values(self.carrier.values().clone())
    }

    /// `C_R(T) = R : T`.
    pub fn conductor(&self) -> ValueIdeal {
        self.carrier.dual()
    }
}

/// The best monomial homomorphism `t^shift : I → R`, minimizing `ℓ(R/t^shift I)`.
///
/// `colength` is an upper bound for `h(I)`; it is exact when the shifted
/// ideal satisfies [`ValueIdeal::partial_trace_criterion`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartialTrace {
    pub shift: i64,
    pub colength: usize,
}

/// Everything computed for one ideal by [`ValueIdeal::profile`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealProfile {
    pub ideal: ValueIdeal,
    pub dual: ValueIdeal,
    pub double_dual: ValueIdeal,
    pub trace: ValueIdeal,
    /// Integral closure; only defined for ideals contained in `R`.
    pub closure: Option<ValueIdeal>,
    pub is_reflexive: bool,
    pub is_trace_ideal: Option<bool>,
    pub is_integrally_closed: Option<bool>,
    /// `ℓ(R/I)` for ideals contained in `R`.
    pub colength_in_ring: Option<usize>,
    pub partial_trace_criterion: Option<bool>,
    /// `I² = t^{min v(I)} I`.
    pub is_stable: bool,
}

impl ValueIdeal {
    /// `tr_R(I) = (R : I) I`.
    pub fn trace_ideal(&self) -> ValueIdeal {
        self.dual()
            .product(self)
            .expect("dual lives over the same ring")
    }

    pub fn is_reflexive(&self) -> bool {
        self.double_dual() == *self
    }

    pub fn is_trace_ideal(&self) -> Result<bool> {
        if !self.is_integral() {
            return Err(Error::NotIntegral);
        }
        Ok(self.trace_ideal() == *self)
    }

    /// `xR :_R I` with `x = t^{x_exp}`, requiring `x_exp ∈ v(I)`.
    pub fn colon_in_ring(&self, x_exp: i64) -> Result<ValueIdeal> {
        if !self.contains(x_exp) {
            return Err(Error::NotMember(x_exp));
        }
        Ok(self.reduction_colon_unchecked(x_exp))
    }

    /// `xR :_R I` for the minimal reduction `x = t^{min v(I)}`.
    pub fn reduction_colon(&self) -> ValueIdeal {
        self.reduction_colon_unchecked(self.min_value())
    }

    fn reduction_colon_unchecked(&self, x_exp: i64) -> ValueIdeal {
        let ring = ValueIdeal::unit(self.ring());
        ValueIdeal::principal(self.ring(), x_exp)
            .colon(self)
            .and_then(|c| c.intersect(&ring))
            .expect("same ring by construction")
    }

    /// `R : I ⊆ R̄`, i.e. `min v(I*) ≥ 0`. When true, `h(I) = ℓ(R/I)`.
    pub fn partial_trace_criterion(&self) -> Result<bool> {
        if !self.is_integral() {
            return Err(Error::NotIntegral);
        }
        Ok(self.dual().min_value() >= 0)
    }

    /// Scans `t^a` for `a ∈ v(I*)` up to the point where `t^a I ⊆ C`, past
    /// which the colength only grows. Ties go to the smallest `a`.
    pub fn monomial_partial_trace(&self) -> Result<PartialTrace> {
        if !self.is_integral() {
            return Err(Error::NotIntegral);
        }
        let dual = self.dual();
        let ring = ValueIdeal::unit(self.ring());
        let last = self.ring().conductor() - self.min_value();
        let mut best: Option<PartialTrace> = None;
        for a in dual.min_value()..=last.max(dual.min_value()) {
            if !dual.contains(a) {
                continue;
            }
            let colength = ring
                .colength(&self.shift(a))
                .expect("a ∈ v(I*) puts t^a I inside R");
            if best.is_none_or(|b| colength < b.colength) {
                best = Some(PartialTrace { shift: a, colength });
            }
        }
        Ok(best.expect("min v(I*) is always scanned"))
    }

    /// `End_R(I) = I : I`.
    pub fn endomorphism_ring(&self) -> Result<ExtensionRing> {
        ExtensionRing::new(self.colon(self)?)
    }

    /// `I² = x I` with `x = t^{min v(I)}`.
    pub fn is_stable(&self) -> bool {
        self.product(self).expect("same ring") == self.shift(self.min_value())
    }

    /// Evaluates each link of the chain
    ///
    /// `C ⊆ xR:_R Ī = xR:_R cl(tr I) ⊆ xR:_R tr I ⊆ xR:_R I ⊆ tr I ⊆ cl(tr I) = Ī ⊆ m`
    ///
    /// with `x = t^{min v(I)}`, for a proper ideal `I` satisfying the
    /// partial trace criterion.
    pub fn chain_links(&self) -> Result<Vec<(&'static str, bool)>> {
        if !self.is_proper() {
            return Err(Error::PreconditionFailed(format!(
                "{self} is not a proper ideal of R"
            )));
        }
        if !self.partial_trace_criterion()? {
            return Err(Error::PreconditionFailed(format!(
                "R : I is not contained in R̄ for I = {self}"
            )));
        }
        let ring = self.ring();
        let x = self.min_value();
        let closure = self.integral_closure()?;
        let trace = self.trace_ideal();
        let trace_closure = trace.integral_closure()?;
        let on_closure = closure.reduction_colon_unchecked(x);
        let on_trace_closure = trace_closure.reduction_colon_unchecked(x);
        let on_trace = trace.reduction_colon_unchecked(x);
        let on_ideal = self.reduction_colon_unchecked(x);
        Ok(vec![
            (
                "C ⊆ xR:Ī",
                ValueIdeal::conductor(ring).is_subset(&on_closure),
            ),
            ("xR:Ī = xR:cl(tr I)", on_closure == on_trace_closure),
            (
                "xR:cl(tr I) ⊆ xR:tr I",
                on_trace_closure.is_subset(&on_trace),
            ),
            ("xR:tr I ⊆ xR:I", on_trace.is_subset(&on_ideal)),
            ("xR:I ⊆ tr I", on_ideal.is_subset(&trace)),
            ("tr I ⊆ cl(tr I)", trace.is_subset(&trace_closure)),
            ("cl(tr I) = Ī", trace_closure == closure),
            ("Ī ⊆ m", closure.is_subset(&ValueIdeal::maximal(ring))),
        ])
    }

    pub fn verify_chain(&self) -> Result<bool> {
        Ok(self.chain_links()?.iter().all(|(_, ok)| *ok))
    }

    pub fn profile(&self) -> IdealProfile {
        let dual = self.dual();
        let double_dual = dual.dual();
        let trace = dual.product(self).expect("same ring");
        let integral = self.is_integral();
        let closure = self.integral_closure().ok();
        let ring = ValueIdeal::unit(self.ring());
        IdealProfile {
            is_reflexive: double_dual == *self,
            is_trace_ideal: integral.then(|| trace == *self),
            is_integrally_closed: closure.as_ref().map(|c| c == self),
            colength_in_ring: integral.then(|| ring.colength(self).expect("I ⊆ R")),
            partial_trace_criterion: integral.then(|| dual.min_value() >= 0),
            is_stable: self.is_stable(),
            ideal: self.clone(),
            dual,
            double_dual,
            trace,
            closure,
        }
    }
}

impl NumericalSemigroup {
    /// `xR :_R m = m` for the minimal reduction `x = t^{e}` of `m`.
    pub fn is_minimal_multiplicity(&self) -> Result<bool> {
        if self.is_regular() {
            return Err(Error::RegularRing);
        }
        let maximal = ValueIdeal::maximal(self);
        let by_colon = maximal.reduction_colon() == maximal;
        debug_assert_eq!(
            by_colon,
            self.multiplicity() == self.embedding_dimension() as i64,
            "colon test and e = μ disagree on {self}"
        );
        Ok(by_colon)
    }
}

/// `v(T)` for a value set `T` that should be an overring of `R`.
pub fn extension_from_values(ring: &NumericalSemigroup, values: ValueSet) -> Result<ExtensionRing> {
    ExtensionRing::new(ValueIdeal::from_values(ring, values)?)
}

//! Cofinite sets of integers stored as a bit window.
//!
//! Every value set handled by this crate (the semigroup of a ring, the values
//! of a fractional ideal, an overring) is bounded below and contains every
//! integer past some point. A [`ValueSet`] keeps the least element `min`, the
//! least `stable` such that `[stable, ∞)` is contained in the set, and the
//! membership bits for `[min, stable)` packed into `u64` words.
//!
//! The representation is canonical, so derived equality is set equality.

use std::fmt;

const WORD: i64 = 64;

/// A nonempty set of integers that is bounded below and contains a tail `[b, ∞)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ValueSet {
    min: i64,
    stable: i64,
    // Bits for [min, stable); bits past `stable - min` in the last word are ones.
    words: Vec<u64>,
}

/// Extracts the 64 bits starting at relative position `r` of the infinite
/// sequence `0…0 words 1…1` (zeros before index 0, ones after the last word).
#[inline]
fn extract(words: &[u64], r: i64) -> u64 {
    let len = words.len() as i64 * WORD;
    if r >= len {
        return !0;
    }
    if r <= -WORD {
        return 0;
    }
    let raw = |q: i64| -> u64 {
        if q < 0 {
            0
        } else if q >= words.len() as i64 {
            !0
        } else {
            words[q as usize]
        }
    };
    let q = r.div_euclid(WORD);
    let s = r.rem_euclid(WORD) as u32;
    if s == 0 {
        raw(q)
    } else {
        (raw(q) >> s) | (raw(q + 1) << (64 - s))
    }
}

#[inline]
fn words_for(span: i64) -> usize {
    debug_assert!(span >= 0);
    ((span + WORD - 1) / WORD) as usize
}

impl ValueSet {
    /// The half line `[start, ∞)`.
    pub fn at_least(start: i64) -> Self {
        ValueSet {
            min: start,
            stable: start,
            words: Vec::new(),
        }
    }

    /// `{n ∈ [lo, hi) : keep(n)} ∪ [hi, ∞)`.
    pub fn from_fn(lo: i64, hi: i64, mut keep: impl FnMut(i64) -> bool) -> Self {
        let hi = hi.max(lo);
        let mut words = vec![!0u64; words_for(hi - lo)];
        for n in lo..hi {
            if !keep(n) {
                let i = (n - lo) as usize;
                words[i / 64] &= !(1u64 << (i % 64));
            }
        }
        Self::canonical(lo, words)
    }

    /// `elems ∪ [hi, ∞)`, elements at or above `hi` being redundant.
    pub fn from_elements(elems: impl IntoIterator<Item = i64>, hi: i64) -> Self {
        let elems: Vec<i64> = elems.into_iter().filter(|&e| e < hi).collect();
        let lo = elems.iter().copied().min().unwrap_or(hi);
        let mut words = vec![0u64; words_for(hi - lo)];
        let span = hi - lo;
        // pad the tail of the last word with ones
        if span % WORD != 0 {
            let last = words.len() - 1;
            words[last] = !0u64 << (span % WORD);
        }
        for e in elems {
            let i = (e - lo) as usize;
            words[i / 64] |= 1u64 << (i % 64);
        }
        Self::canonical(lo, words)
    }

    /// Normalizes a raw window anchored at `lo` (ones past the end).
    fn canonical(lo: i64, words: Vec<u64>) -> Self {
        let first_one = words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i as i64 * WORD + w.trailing_zeros() as i64)
            .unwrap_or(words.len() as i64 * WORD);
        let last_zero = words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, w)| **w != !0)
            .map(|(i, w)| i as i64 * WORD + 63 - (!w).leading_zeros() as i64);
        let min = lo + first_one;
        let stable = match last_zero {
            Some(z) if z > first_one => lo + z + 1,
            _ => min,
        };
        if min == lo && words.len() == words_for(stable - min) {
            let mut words = words;
            Self::pad(&mut words, stable - min);
            return ValueSet { min, stable, words };
        }
        let n = words_for(stable - min);
        let mut out: Vec<u64> = (0..n)
            .map(|k| extract(&words, first_one + k as i64 * WORD))
            .collect();
        Self::pad(&mut out, stable - min);
        ValueSet {
            min,
            stable,
            words: out,
        }
    }

    fn pad(words: &mut [u64], span: i64) {
        if span % WORD != 0 {
            if let Some(last) = words.last_mut() {
                *last |= !0u64 << (span % WORD);
            }
        }
    }

    /// 64 membership bits starting at `start`.
    #[inline]
    fn bits_from(&self, start: i64) -> u64 {
        extract(&self.words, start - self.min)
    }

    pub fn min(&self) -> i64 {
        self.min
    }

    /// Least `b` such that every integer `n ≥ b` is a member.
    pub fn stable(&self) -> i64 {
        self.stable
    }

    pub fn contains(&self, n: i64) -> bool {
        if n >= self.stable {
            true
        } else if n < self.min {
            false
        } else {
            let i = (n - self.min) as usize;
            self.words[i / 64] >> (i % 64) & 1 == 1
        }
    }

    /// Translate every element by `by`.
    pub fn shift(&self, by: i64) -> Self {
        ValueSet {
            min: self.min + by,
            stable: self.stable + by,
            words: self.words.clone(),
        }
    }

    fn combine(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Self {
        let lo = self.min.min(other.min);
        let hi = self.stable.max(other.stable);
        let words = (0..words_for(hi - lo))
            .map(|k| {
                let at = lo + k as i64 * WORD;
                op(self.bits_from(at), other.bits_from(at))
            })
            .collect();
        Self::canonical(lo, words)
    }

    pub fn union(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a & b)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        if self.min < other.min {
            return false;
        }
        let lo = self.min;
        let hi = self.stable.max(other.stable);
        (0..words_for(hi - lo)).all(|k| {
            let at = lo + k as i64 * WORD;
            self.bits_from(at) & !other.bits_from(at) == 0
        })
    }

    /// `|self \ other|`, always finite for two cofinite sets.
    pub fn count_difference(&self, other: &Self) -> usize {
        let lo = self.min;
        let hi = self.stable.max(other.stable);
        (0..words_for(hi - lo))
            .map(|k| {
                let at = lo + k as i64 * WORD;
                (self.bits_from(at) & !other.bits_from(at)).count_ones() as usize
            })
            .sum()
    }

    /// Elements of `self \ other`, ascending.
    pub fn difference_elements(&self, other: &Self) -> Vec<i64> {
        let lo = self.min;
        let hi = self.stable.max(other.stable);
        let mut out = Vec::new();
        for k in 0..words_for(hi - lo) {
            let at = lo + k as i64 * WORD;
            let mut w = self.bits_from(at) & !other.bits_from(at);
            while w != 0 {
                let b = w.trailing_zeros() as i64;
                out.push(at + b);
                w &= w - 1;
            }
        }
        out
    }

    /// Members below `stable`, ascending.
    pub fn members(&self) -> impl Iterator<Item = i64> + '_ {
        (self.min..self.stable).filter(move |&n| self.contains(n))
    }

    /// Integers in `[min, stable)` that are not members.
    pub fn holes(&self) -> impl Iterator<Item = i64> + '_ {
        (self.min..self.stable).filter(move |&n| !self.contains(n))
    }

    /// The set with `n` removed. Removing the least element is allowed.
    pub fn without(&self, n: i64) -> Self {
        let hi = self.stable.max(n + 1);
        Self::from_fn(self.min, hi, |k| k != n && self.contains(k))
    }
}

impl fmt::Display for ValueSet {
    /// `{8,9}∪[15,∞)`, or `[14,∞)` for a bare half line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members: Vec<String> = self.members().map(|m| m.to_string()).collect();
        if members.is_empty() {
            write!(f, "[{},∞)", self.stable)
        } else {
            write!(f, "{{{}}}∪[{},∞)", members.join(","), self.stable)
        }
    }
}

impl fmt::Debug for ValueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

//! Integer linear combinations over an ordered symbol set.

use alloc::collections::btree_map::{self, BTreeMap};
use core::ops::{Add, AddAssign, Neg, Sub};

/// A finite `Z`-linear combination of symbols. Zero coefficients are never
/// stored, so two sums are equal iff their maps are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FormalSum<S: Ord> {
    terms: BTreeMap<S, i64>,
}

impl<S: Ord> Default for FormalSum<S> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<S: Ord> FormalSum<S> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn singleton(symbol: S, coefficient: i64) -> Self {
        let mut s = Self::zero();
        s.add_term(symbol, coefficient);
        s
    }

    pub fn add_term(&mut self, symbol: S, coefficient: i64) {
        if coefficient == 0 {
            return;
        }
        match self.terms.entry(symbol) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coefficient);
            }
            btree_map::Entry::Occupied(mut e) => {
                let c = *e.get() + coefficient;
                if c == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = c;
                }
            }
        }
    }

    pub fn coefficient(&self, symbol: &S) -> i64 {
        self.terms.get(symbol).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of symbols with a nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&S, i64)> {
        self.terms.iter().map(|(s, &c)| (s, c))
    }

    pub fn scaled(self, factor: i64) -> Self {
        if factor == 0 {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .into_iter()
                .map(|(s, c)| (s, c * factor))
                .collect(),
        }
    }
}

impl<S: Ord> FromIterator<(S, i64)> for FormalSum<S> {
    fn from_iter<I: IntoIterator<Item = (S, i64)>>(iter: I) -> Self {
        let mut s = Self::zero();
        for (sym, c) in iter {
            s.add_term(sym, c);
        }
        s
    }
}

impl<S: Ord> AddAssign for FormalSum<S> {
    fn add_assign(&mut self, rhs: Self) {
        for (sym, c) in rhs.terms {
            self.add_term(sym, c);
        }
    }
}

impl<S: Ord> Add for FormalSum<S> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<S: Ord> Neg for FormalSum<S> {
    type Output = Self;

    fn neg(self) -> Self {
        self.scaled(-1)
    }
}

impl<S: Ord> Sub for FormalSum<S> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

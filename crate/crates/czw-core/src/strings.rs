//! Partial bitstrings over sets of qubit indices.
//!
//! A "string" here is a 0/1 assignment on an arbitrary subset of the
//! qubit indices 1..=n. Full-domain strings label computational basis
//! states; strings with smaller domains arise as restrictions to one side
//! of a bipartition. Two strings with disjoint domains can be unioned
//! back into one, and a string restricted to the two sides of a
//! bipartition of its domain reassembles exactly.
//!
//! Qubit indices are 1-based. When a string on a domain is mapped to a
//! basis-state index, the domain's members are taken in ascending order
//! with the smallest index as the most significant bit, so for a full
//! string the leftmost character of its bitstring form is qubit 1.

use std::fmt;

use thiserror::Error;

use crate::tolerance::MAX_QUBITS;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StringError {
    /// A qubit index outside 1..=MAX_QUBITS.
    #[error("qubit index {0} out of range 1..={MAX_QUBITS}")]
    IndexOutOfRange(usize),

    /// Restriction target is not contained in the string's domain.
    #[error("restriction target {target} is not a subset of the domain {domain}")]
    NotSubset { target: QubitSet, domain: QubitSet },

    /// Union of strings whose domains overlap.
    #[error("domains {0} and {1} overlap")]
    OverlappingDomains(QubitSet, QubitSet),

    /// The ones of a partial string must lie inside its domain.
    #[error("assigned bits {ones} stray outside the domain {domain}")]
    BitsOutsideDomain { ones: QubitSet, domain: QubitSet },

    /// A pair of sets that was expected to bipartition a domain does not.
    #[error("{a} and {b} do not bipartition {whole}")]
    InvalidBipartition {
        a: QubitSet,
        b: QubitSet,
        whole: QubitSet,
    },
}

/// A set of 1-based qubit indices, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct QubitSet(u32);

impl QubitSet {
    pub const EMPTY: QubitSet = QubitSet(0);

    /// The set {1, ..., n}.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_QUBITS, "qubit count {n} exceeds cap {MAX_QUBITS}");
        if n == 0 {
            QubitSet(0)
        } else {
            QubitSet(u32::MAX >> (32 - n))
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Result<Self, StringError> {
        let mut bits = 0u32;
        for i in indices {
            if i == 0 || i > MAX_QUBITS {
                return Err(StringError::IndexOutOfRange(i));
            }
            bits |= 1 << (i - 1);
        }
        Ok(QubitSet(bits))
    }

    pub fn singleton(i: usize) -> Self {
        Self::from_indices([i]).expect("index in range")
    }

    pub fn contains(&self, i: usize) -> bool {
        (1..=MAX_QUBITS).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn union(&self, other: QubitSet) -> QubitSet {
        QubitSet(self.0 | other.0)
    }

    pub fn intersection(&self, other: QubitSet) -> QubitSet {
        QubitSet(self.0 & other.0)
    }

    pub fn difference(&self, other: QubitSet) -> QubitSet {
        QubitSet(self.0 & !other.0)
    }

    /// Complement inside {1, ..., n}.
    pub fn complement_within(&self, n: usize) -> QubitSet {
        Self::full(n).difference(*self)
    }

    pub fn is_subset_of(&self, other: QubitSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint_from(&self, other: QubitSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    pub fn min_index(&self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }

    pub fn max_index(&self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(32 - self.0.leading_zeros() as usize)
        }
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=MAX_QUBITS).filter(move |&i| self.contains(i))
    }

    /// Position of member `i` within the ascending member list.
    pub fn rank_of(&self, i: usize) -> Option<usize> {
        if !self.contains(i) {
            return None;
        }
        Some((self.0 & ((1 << (i - 1)) - 1)).count_ones() as usize)
    }
}

impl fmt::Display for QubitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for QubitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A 0/1 assignment on a subset of qubit indices.
///
/// Equality is domain plus bits; the empty-domain string is a legal value
/// and is the identity for [`PartialString::union`].
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PartialString {
    domain: QubitSet,
    ones: QubitSet,
}

impl PartialString {
    /// Build from a domain and the set of positions holding 1.
    pub fn new(domain: QubitSet, ones: QubitSet) -> Result<Self, StringError> {
        if !ones.is_subset_of(domain) {
            return Err(StringError::BitsOutsideDomain { ones, domain });
        }
        Ok(PartialString { domain, ones })
    }

    pub fn empty() -> Self {
        PartialString {
            domain: QubitSet::EMPTY,
            ones: QubitSet::EMPTY,
        }
    }

    pub fn all_ones(domain: QubitSet) -> Self {
        PartialString {
            domain,
            ones: domain,
        }
    }

    pub fn all_zeros(domain: QubitSet) -> Self {
        PartialString {
            domain,
            ones: QubitSet::EMPTY,
        }
    }

    pub fn domain(&self) -> QubitSet {
        self.domain
    }

    /// Positions assigned 1.
    pub fn ones(&self) -> QubitSet {
        self.ones
    }

    pub fn bit(&self, i: usize) -> Option<bool> {
        if self.domain.contains(i) {
            Some(self.ones.contains(i))
        } else {
            None
        }
    }

    /// The restriction to `target`, which must lie inside the domain.
    pub fn restrict(&self, target: QubitSet) -> Result<PartialString, StringError> {
        if !target.is_subset_of(self.domain) {
            return Err(StringError::NotSubset {
                target,
                domain: self.domain,
            });
        }
        Ok(PartialString {
            domain: target,
            ones: self.ones.intersection(target),
        })
    }

    /// The unique string on the union of the two (disjoint) domains that
    /// extends both.
    pub fn union(&self, other: &PartialString) -> Result<PartialString, StringError> {
        if !self.domain.is_disjoint_from(other.domain) {
            return Err(StringError::OverlappingDomains(self.domain, other.domain));
        }
        Ok(PartialString {
            domain: self.domain.union(other.domain),
            ones: self.ones.union(other.ones),
        })
    }

    /// True when, for every nonempty set in `quads`, some index in that
    /// set is assigned 0. All quads must lie inside the domain.
    pub fn is_test_string(&self, quads: &[QubitSet]) -> bool {
        quads.iter().all(|&q| {
            debug_assert!(q.is_subset_of(self.domain));
            q.is_empty() || self.ones.intersection(q) != q
        })
    }

    /// Basis-state position of this string among the basis states of
    /// `carrier` (ascending members, smallest index most significant).
    /// `None` unless the domain equals `carrier`.
    pub fn index_in(&self, carrier: QubitSet) -> Option<usize> {
        if self.domain != carrier {
            return None;
        }
        let width = carrier.len();
        let mut idx = 0usize;
        for (rank, i) in carrier.iter().enumerate() {
            if self.ones.contains(i) {
                idx |= 1 << (width - 1 - rank);
            }
        }
        Some(idx)
    }

    /// Inverse of [`PartialString::index_in`].
    pub fn from_index_in(carrier: QubitSet, index: usize) -> Self {
        let width = carrier.len();
        debug_assert!(index < (1usize << width));
        let mut ones = QubitSet::EMPTY;
        for (rank, i) in carrier.iter().enumerate() {
            if index & (1 << (width - 1 - rank)) != 0 {
                ones = ones.union(QubitSet::singleton(i));
            }
        }
        PartialString {
            domain: carrier,
            ones,
        }
    }

    /// Parse a full-domain string from its bitstring form (leftmost
    /// character is qubit 1).
    pub fn from_bitstring(text: &str) -> Result<Self, StringError> {
        let n = text.len();
        if n > MAX_QUBITS {
            return Err(StringError::IndexOutOfRange(n));
        }
        let domain = QubitSet::full(n);
        let mut ones = QubitSet::EMPTY;
        for (k, ch) in text.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => ones = ones.union(QubitSet::singleton(k + 1)),
                _ => return Err(StringError::IndexOutOfRange(k + 1)),
            }
        }
        Ok(PartialString { domain, ones })
    }
}

impl fmt::Display for PartialString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Contiguous domains starting at 1 print as plain bitstrings;
        // anything else as an explicit map.
        let n = self.domain.len();
        if self.domain == QubitSet::full(n) {
            for i in 1..=n {
                write!(f, "{}", if self.ones.contains(i) { '1' } else { '0' })?;
            }
            Ok(())
        } else {
            write!(f, "{{")?;
            for (k, i) in self.domain.iter().enumerate() {
                if k > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{i}:{}", if self.ones.contains(i) { 1 } else { 0 })?;
            }
            write!(f, "}}")
        }
    }
}

impl fmt::Debug for PartialString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One side of the two bipartitions feeding a [`StringFamily`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Region {
    A,
    B,
    C,
    D,
}

impl Region {
    pub const ALL: [Region; 4] = [Region::A, Region::B, Region::C, Region::D];

    fn slot(self) -> usize {
        match self {
            Region::A => 0,
            Region::B => 1,
            Region::C => 2,
            Region::D => 3,
        }
    }
}

/// The sixteen strings x^R_{jk} derived from a base string `x` and an
/// overlay string `u` under two bipartitions (A,B) and (C,D) of the same
/// domain.
///
/// For R on the first bipartition the indices (j,k) select x or u on R∩C
/// and R∩D; for R on the second they select over R∩A and R∩B. Index 0
/// keeps `x`, index 1 swaps in `u`. Consequently x^R_00 = x∣R and
/// x^R_11 = u∣R, and the sides recombine as
///
/// ```text
/// x^A_jk ∪ x^B_ℓm  =  x^C_jℓ ∪ x^D_km      for all j,k,ℓ,m
/// ```
///
/// which in particular reassembles `x` itself at all-zero indices.
#[derive(Clone)]
pub struct StringFamily {
    entries: [[[PartialString; 2]; 2]; 4],
}

impl StringFamily {
    /// Build the family. `x` and `u` must share a domain that both (a,b)
    /// and (c,d) bipartition.
    pub fn build(
        x: &PartialString,
        u: &PartialString,
        a: QubitSet,
        b: QubitSet,
        c: QubitSet,
        d: QubitSet,
    ) -> Result<Self, StringError> {
        let whole = x.domain();
        if u.domain() != whole {
            return Err(StringError::NotSubset {
                target: u.domain(),
                domain: whole,
            });
        }
        for (p, q) in [(a, b), (c, d)] {
            if !p.is_disjoint_from(q) || p.union(q) != whole {
                return Err(StringError::InvalidBipartition { a: p, b: q, whole });
            }
        }

        let pick = |flag: bool| if flag { u } else { x };
        let make = |region: QubitSet, first: QubitSet, second: QubitSet, j: bool, k: bool| {
            let left = pick(j)
                .restrict(region.intersection(first))
                .expect("intersection lies inside the domain");
            let right = pick(k)
                .restrict(region.intersection(second))
                .expect("intersection lies inside the domain");
            left.union(&right).expect("sides of a region are disjoint")
        };

        let mut entries = [[[PartialString::empty(); 2]; 2]; 4];
        for (slot, (region, first, second)) in [(a, c, d), (b, c, d), (c, a, b), (d, a, b)]
            .into_iter()
            .enumerate()
        {
            for j in 0..2 {
                for k in 0..2 {
                    entries[slot][j][k] = make(region, first, second, j == 1, k == 1);
                }
            }
        }
        Ok(StringFamily { entries })
    }

    pub fn get(&self, region: Region, j: usize, k: usize) -> &PartialString {
        &self.entries[region.slot()][j][k]
    }
}

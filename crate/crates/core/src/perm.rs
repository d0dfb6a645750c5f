//! Permutations in one-line and standard cycle notation, the four statistics,
//! and the involution predicate.
//!
//! Everything here is 1-based: a permutation of size n maps positions 1..=n
//! to values 1..=n. Cycle notation is canonical — each cycle is rotated so
//! its minimum comes first and cycles are sorted by ascending minimum — so
//! decompositions compare by equality.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// A permutation of {1, ..., n} in one-line notation.
///
/// `values[i]` is the image of position `i + 1`. The empty permutation
/// (n = 0) is permitted; it is the base case of the series expansions.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    values: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from one-line values, validating that they are
    /// a rearrangement of 1..=n.
    pub fn from_one_line(values: &[u8]) -> Result<Self> {
        let n = values.len();
        if n > u8::MAX as usize {
            return Err(Error::InvalidOneLine);
        }
        let mut seen = [false; 256];
        for &v in values {
            let v = v as usize;
            if v < 1 || v > n || seen[v] {
                return Err(Error::InvalidOneLine);
            }
            seen[v] = true;
        }
        Ok(Permutation {
            values: values.to_vec(),
        })
    }

    /// The identity permutation of size n.
    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize);
        Permutation {
            values: (1..=n as u8).collect(),
        }
    }

    /// The empty permutation (n = 0).
    pub fn empty() -> Self {
        Permutation { values: Vec::new() }
    }

    pub(crate) fn from_values_unchecked(values: Vec<u8>) -> Self {
        debug_assert!(Permutation::from_one_line(&values).is_ok());
        Permutation { values }
    }

    /// Size of the underlying set.
    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// Image of position `i` (1-based). Panics if `i` is out of 1..=n.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1] as usize
    }

    /// Raw one-line values (0-based slice of 1-based values).
    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// Canonical cycle decomposition.
    pub fn to_cycles(&self) -> CycleDecomposition {
        let n = self.n();
        let mut seen = alloc::vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = alloc::vec![start as u8];
            seen[start] = true;
            let mut j = self.at(start);
            while j != start {
                cycle.push(j as u8);
                seen[j] = true;
                j = self.at(j);
            }
            cycles.push(cycle);
        }
        CycleDecomposition { n, cycles }
    }

    /// Rebuilds a permutation of size n from a list of cycles.
    ///
    /// The cycles need not be canonical but must partition 1..=n.
    pub fn from_cycles(cycles: &[Vec<u8>], n: usize) -> Result<Self> {
        if n > u8::MAX as usize {
            return Err(Error::InvalidOneLine);
        }
        let mut values = alloc::vec![0u8; n];
        for cycle in cycles {
            for (i, &c) in cycle.iter().enumerate() {
                let c = c as usize;
                if c < 1 || c > n {
                    return Err(Error::MalformedCycles { element: c });
                }
                if values[c - 1] != 0 {
                    return Err(Error::MalformedCycles { element: c });
                }
                let next = cycle[(i + 1) % cycle.len()];
                values[c - 1] = next;
            }
        }
        if let Some(missing) = values.iter().position(|&v| v == 0) {
            return Err(Error::MalformedCycles {
                element: missing + 1,
            });
        }
        Ok(Permutation { values })
    }

    /// The four statistics (cyc, fix, exc, inv).
    pub fn stats(&self) -> StatVector {
        let v = &self.values;
        let cyc = cycle_count_values(v);
        let mut fix = 0u16;
        let mut exc = 0u16;
        for (i, &pi) in v.iter().enumerate() {
            let pi = pi as usize;
            if pi == i + 1 {
                fix += 1;
            } else if pi > i + 1 {
                exc += 1;
            }
        }
        StatVector {
            cyc,
            fix,
            exc,
            inv: inversions(v),
        }
    }

    /// True iff the permutation is its own inverse (all cycles of length <= 2).
    pub fn is_involution(&self) -> bool {
        is_involution_values(&self.values)
    }
}

/// Inversion count by the defining double loop.
pub(crate) fn inversions(v: &[u8]) -> u16 {
    let mut inv = 0u16;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                inv += 1;
            }
        }
    }
    inv
}

pub(crate) fn is_involution_values(v: &[u8]) -> bool {
    (0..v.len()).all(|i| v[v[i] as usize - 1] as usize == i + 1)
}

pub(crate) fn cycle_count_values(v: &[u8]) -> u16 {
    let n = v.len();
    let mut seen = alloc::vec![false; n];
    let mut count = 0u16;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = v[j] as usize - 1;
        }
    }
    count
}

impl fmt::Display for Permutation {
    /// One-line rendering: digits concatenated for n <= 9, space-separated
    /// decimal otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for &v in &self.values {
                write!(f, "{v}")?;
            }
        } else {
            for (i, &v) in self.values.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Inverse of `Display`: whitespace-separated decimal if the string
    /// contains whitespace, otherwise one digit per value.
    fn from_str(s: &str) -> Result<Self> {
        let mut values: Vec<u8> = Vec::new();
        if s.trim().is_empty() {
            return Ok(Permutation::empty());
        }
        if s.contains(char::is_whitespace) {
            for tok in s.split_whitespace() {
                let v: u8 = tok.parse().map_err(|_| Error::Parse("one-line value"))?;
                values.push(v);
            }
        } else {
            for ch in s.chars() {
                let d = ch.to_digit(10).ok_or(Error::Parse("one-line digit"))?;
                values.push(d as u8);
            }
        }
        Permutation::from_one_line(&values)
    }
}

/// A permutation written as a product of disjoint cycles, in canonical form:
/// minimum first within each cycle, cycles sorted by ascending minimum.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleDecomposition {
    n: usize,
    cycles: Vec<Vec<u8>>,
}

impl CycleDecomposition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cycles(&self) -> &[Vec<u8>] {
        &self.cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// Round-trips back to one-line notation.
    pub fn to_permutation(&self) -> Permutation {
        Permutation::from_cycles(&self.cycles, self.n)
            .expect("canonical decomposition always rebuilds")
    }
}

impl fmt::Display for CycleDecomposition {
    /// `(1 3 5 4 8 7 6)(2)` style; digits are concatenated for n <= 9 to
    /// match the one-line rule.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            write!(f, "(")?;
            for (i, &c) in cycle.iter().enumerate() {
                if self.n > 9 && i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// The statistic tuple (cyc, fix, exc, inv) of a permutation.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct StatVector {
    pub cyc: u16,
    pub fix: u16,
    pub exc: u16,
    pub inv: u16,
}

//! Classical pattern containment and the two pattern classes of interest,
//! Av(312, 4321) and Av(321, 4123), together with their restricted subsets
//! S' and S'' used by the bijections.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::perm::Permutation;
use crate::{Error, Result};

/// A pattern is just a (small) permutation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Pattern(Permutation);

impl Pattern {
    pub fn new(p: Permutation) -> Self {
        Pattern(p)
    }

    pub fn perm(&self) -> &Permutation {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.n()
    }

    pub fn is_empty(&self) -> bool {
        self.0.n() == 0
    }
}

impl FromStr for Pattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Pattern(s.parse()?))
    }
}

/// The two permutation classes treated by this crate.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum ClassId {
    /// Av(312, 4321)
    Av312_4321,
    /// Av(321, 4123)
    Av321_4123,
}

impl ClassId {
    pub const ALL: [ClassId; 2] = [ClassId::Av312_4321, ClassId::Av321_4123];

    /// The two forbidden patterns of the class.
    pub fn patterns(self) -> (Pattern, Pattern) {
        let (a, b) = self.pattern_values();
        (
            Pattern(Permutation::from_one_line(a).unwrap()),
            Pattern(Permutation::from_one_line(b).unwrap()),
        )
    }

    pub(crate) fn pattern_values(self) -> (&'static [u8], &'static [u8]) {
        match self {
            ClassId::Av312_4321 => (&[3, 1, 2], &[4, 3, 2, 1]),
            ClassId::Av321_4123 => (&[3, 2, 1], &[4, 1, 2, 3]),
        }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassId::Av312_4321 => write!(f, "312,4321"),
            ClassId::Av321_4123 => write!(f, "321,4123"),
        }
    }
}

impl FromStr for ClassId {
    type Err = Error;

    /// Accepts exactly the two literal pattern lists `312,4321` and `321,4123`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "312,4321" => Ok(ClassId::Av312_4321),
            "321,4123" => Ok(ClassId::Av321_4123),
            _ => Err(Error::Parse("class must be 312,4321 or 321,4123")),
        }
    }
}

/// True iff `p` contains the pattern: some subsequence of `p` is
/// order-isomorphic to it.
pub fn contains(p: &Permutation, pattern: &Pattern) -> bool {
    contains_values(p.values(), pattern.perm().values())
}

/// All occurrences of the pattern in `p`, as strictly increasing 1-based
/// index tuples in lexicographic order. Empty iff `contains` is false.
pub fn occurrences(p: &Permutation, pattern: &Pattern) -> Vec<Vec<usize>> {
    let v = p.values();
    let pat = pattern.perm().values();
    let mut found = Vec::new();
    if pat.len() > v.len() {
        return found;
    }
    if pat.is_empty() {
        found.push(Vec::new());
        return found;
    }
    let mut chosen = Vec::with_capacity(pat.len());
    search_occurrences(v, pat, 0, &mut chosen, &mut Some(&mut found));
    found
}

/// True iff `p` avoids both patterns of the class.
pub fn in_class(p: &Permutation, class: ClassId) -> bool {
    in_class_values(p.values(), class)
}

/// Membership in the restricted set used by case 4 of the bijections.
///
/// For Av(312, 4321) this is S': class members of size m whose last entry
/// is not a fixed point. For Av(321, 4123) it is S'': class members of size
/// m with the value m not in position m - 1.
pub fn in_restricted(p: &Permutation, class: ClassId) -> Result<bool> {
    let m = p.n();
    let need = match class {
        ClassId::Av312_4321 => 1,
        ClassId::Av321_4123 => 2,
    };
    if m < need {
        return Err(Error::SizeTooSmall { need, got: m });
    }
    Ok(in_class(p, class)
        && match class {
            ClassId::Av312_4321 => p.at(m) != m,
            ClassId::Av321_4123 => p.at(m - 1) != m,
        })
}

/// Whether the maximum value n sits in one of the last three positions.
/// Both classes force this for every member.
pub fn max_position_check(p: &Permutation) -> bool {
    max_position_ok(p.values())
}

pub(crate) fn max_position_ok(v: &[u8]) -> bool {
    let n = v.len();
    if n <= 3 {
        return true;
    }
    let pos = v.iter().position(|&x| x as usize == n).unwrap();
    pos + 1 >= n - 2
}

pub(crate) fn in_class_values(v: &[u8], class: ClassId) -> bool {
    let (a, b) = class.pattern_values();
    !contains_values(v, a) && !contains_values(v, b)
}

/// Definitional subsequence search: depth-first over candidate index tuples
/// in ascending order, checking order-isomorphism against every index chosen
/// so far. With `out` set, collects all embeddings instead of stopping at
/// the first.
fn search_occurrences(
    v: &[u8],
    pat: &[u8],
    start: usize,
    chosen: &mut Vec<usize>,
    out: &mut Option<&mut Vec<Vec<usize>>>,
) -> bool {
    let depth = chosen.len();
    if depth == pat.len() {
        if let Some(found) = out {
            found.push(chosen.iter().map(|&i| i + 1).collect());
            return false; // keep searching
        }
        return true;
    }
    let remaining = pat.len() - depth;
    if start + remaining > v.len() {
        return false;
    }
    for i in start..=v.len() - remaining {
        let consistent = chosen
            .iter()
            .enumerate()
            .all(|(d, &ci)| (pat[d] < pat[depth]) == (v[ci] < v[i]));
        if consistent {
            chosen.push(i);
            if search_occurrences(v, pat, i + 1, chosen, out) {
                chosen.pop();
                return true;
            }
            chosen.pop();
        }
    }
    false
}

pub(crate) fn contains_values(v: &[u8], pat: &[u8]) -> bool {
    if pat.len() > v.len() {
        return false;
    }
    if pat.is_empty() {
        return true;
    }
    let mut chosen = Vec::with_capacity(pat.len());
    search_occurrences(v, pat, 0, &mut chosen, &mut None)
}

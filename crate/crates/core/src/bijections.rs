//! The two four-case bijections onto Av_n(312, 4321) and Av_n(321, 4123).
//!
//! For n >= 4 each class of size-n permutations is the image of a multiset
//! of smaller class members: two copies of the size n-1 class, one copy of
//! the size n-2 class, and the restricted size n-2 set (S' or S''). The
//! four cases rewrite the tail of the one-line notation:
//!
//! * case 1: `.. a` becomes `.. n a`
//! * case 2: `..` becomes `.. n`
//! * case 3: `.. a` becomes `.. n (n-1) a` under phi, `.. n a (n-1)` under psi
//! * case 4: `.. a b` becomes `.. (n-1) n a b`
//!
//! Equivalently each case splices the new values into the cycle notation
//! without reordering anything else, which is why the statistic deltas below
//! are forced. The deltas are validated exhaustively against direct
//! recomputation in the test suite.

use alloc::vec::Vec;
use core::fmt;

use crate::oracle::{enumerate_class, DistributionQuery};
use crate::patterns::{in_class, in_restricted, ClassId};
use crate::perm::{Permutation, StatVector};
use crate::{Error, Result};

/// Which of the four rewrite rules produced (or will produce) a permutation.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum CaseTag {
    Case1,
    Case2,
    Case3,
    Case4,
}

impl CaseTag {
    pub const ALL: [CaseTag; 4] = [CaseTag::Case1, CaseTag::Case2, CaseTag::Case3, CaseTag::Case4];
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self {
            CaseTag::Case1 => 1,
            CaseTag::Case2 => 2,
            CaseTag::Case3 => 3,
            CaseTag::Case4 => 4,
        };
        write!(f, "case {k}")
    }
}

/// Selects one of the two bijections.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BijectionMap {
    /// Maps onto Av(312, 4321).
    Phi,
    /// Maps onto Av(321, 4123).
    Psi,
}

impl BijectionMap {
    pub fn class(self) -> ClassId {
        match self {
            BijectionMap::Phi => ClassId::Av312_4321,
            BijectionMap::Psi => ClassId::Av321_4123,
        }
    }

    pub fn apply(self, e: &CaseTaggedPreimage) -> Result<Permutation> {
        match self {
            BijectionMap::Phi => phi_apply(e),
            BijectionMap::Psi => psi_apply(e),
        }
    }

    pub fn invert(self, p: &Permutation) -> Result<CaseTaggedPreimage> {
        match self {
            BijectionMap::Phi => phi_invert(p),
            BijectionMap::Psi => psi_invert(p),
        }
    }
}

impl fmt::Display for BijectionMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BijectionMap::Phi => write!(f, "phi"),
            BijectionMap::Psi => write!(f, "psi"),
        }
    }
}

/// An element of the multiset M_n: a smaller class member plus the case tag
/// saying how it maps to size `target_size`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CaseTaggedPreimage {
    pub tag: CaseTag,
    pub perm: Permutation,
    pub target_size: usize,
}

impl CaseTaggedPreimage {
    pub fn new(tag: CaseTag, perm: Permutation, target_size: usize) -> Self {
        CaseTaggedPreimage {
            tag,
            perm,
            target_size,
        }
    }

    /// Size the preimage permutation must have under its case rule.
    pub fn expected_size(&self) -> usize {
        match self.tag {
            CaseTag::Case1 | CaseTag::Case2 => self.target_size - 1,
            CaseTag::Case3 | CaseTag::Case4 => self.target_size - 2,
        }
    }
}

/// Statistic changes (cyc, fix, exc, inv) from preimage to image.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StatDelta {
    pub d_cyc: i16,
    pub d_fix: i16,
    pub d_exc: i16,
    pub d_inv: i16,
}

impl StatDelta {
    /// Componentwise difference of two stat vectors.
    pub fn between(from: StatVector, to: StatVector) -> StatDelta {
        StatDelta {
            d_cyc: to.cyc as i16 - from.cyc as i16,
            d_fix: to.fix as i16 - from.fix as i16,
            d_exc: to.exc as i16 - from.exc as i16,
            d_inv: to.inv as i16 - from.inv as i16,
        }
    }
}

fn validate(map: BijectionMap, e: &CaseTaggedPreimage) -> Result<()> {
    let n = e.target_size;
    if n < 4 {
        return Err(Error::TargetTooSmall { n });
    }
    let expected = e.expected_size();
    if e.perm.n() != expected {
        return Err(Error::SizeMismatch {
            expected,
            got: e.perm.n(),
        });
    }
    let ok = match e.tag {
        CaseTag::Case4 => in_restricted(&e.perm, map.class())?,
        _ => in_class(&e.perm, map.class()),
    };
    if !ok {
        return Err(Error::OutsideClass);
    }
    Ok(())
}

/// Applies phi: rewrites the tail per the case rule, landing in Av_n(312, 4321).
pub fn phi_apply(e: &CaseTaggedPreimage) -> Result<Permutation> {
    validate(BijectionMap::Phi, e)?;
    let n = e.target_size as u8;
    let v = e.perm.values();
    let m = v.len();
    let mut out: Vec<u8> = Vec::with_capacity(n as usize);
    match e.tag {
        CaseTag::Case1 => {
            out.extend_from_slice(&v[..m - 1]);
            out.push(n);
            out.push(v[m - 1]);
        }
        CaseTag::Case2 => {
            out.extend_from_slice(v);
            out.push(n);
        }
        CaseTag::Case3 => {
            out.extend_from_slice(&v[..m - 1]);
            out.push(n);
            out.push(n - 1);
            out.push(v[m - 1]);
        }
        CaseTag::Case4 => {
            out.extend_from_slice(&v[..m - 2]);
            out.push(n - 1);
            out.push(n);
            out.push(v[m - 2]);
            out.push(v[m - 1]);
        }
    }
    Ok(Permutation::from_one_line(&out).expect("rewrite preserves permutation"))
}

/// Applies psi: like phi except case 3 appends `n a (n-1)` instead of
/// `n (n-1) a`, landing in Av_n(321, 4123).
pub fn psi_apply(e: &CaseTaggedPreimage) -> Result<Permutation> {
    validate(BijectionMap::Psi, e)?;
    let n = e.target_size as u8;
    let v = e.perm.values();
    let m = v.len();
    let mut out: Vec<u8> = Vec::with_capacity(n as usize);
    match e.tag {
        CaseTag::Case1 => {
            out.extend_from_slice(&v[..m - 1]);
            out.push(n);
            out.push(v[m - 1]);
        }
        CaseTag::Case2 => {
            out.extend_from_slice(v);
            out.push(n);
        }
        CaseTag::Case3 => {
            out.extend_from_slice(&v[..m - 1]);
            out.push(n);
            out.push(v[m - 1]);
            out.push(n - 1);
        }
        CaseTag::Case4 => {
            out.extend_from_slice(&v[..m - 2]);
            out.push(n - 1);
            out.push(n);
            out.push(v[m - 2]);
            out.push(v[m - 1]);
        }
    }
    Ok(Permutation::from_one_line(&out).expect("rewrite preserves permutation"))
}

/// Inverts phi by the position of n: last position means case 2, second to
/// last means case 1, and in position n-2 the value at n-1 decides between
/// cases 3 and 4.
pub fn phi_invert(p: &Permutation) -> Result<CaseTaggedPreimage> {
    let n = p.n();
    if n < 4 {
        return Err(Error::TargetTooSmall { n });
    }
    if !in_class(p, ClassId::Av312_4321) {
        return Err(Error::OutsideClass);
    }
    let v = p.values();
    let e = if p.at(n) == n {
        preimage(CaseTag::Case2, &v[..n - 1], &[], n)
    } else if p.at(n - 1) == n {
        preimage(CaseTag::Case1, &v[..n - 2], &[v[n - 1]], n)
    } else {
        debug_assert_eq!(p.at(n - 2), n);
        if p.at(n - 1) == n - 1 {
            preimage(CaseTag::Case3, &v[..n - 3], &[v[n - 1]], n)
        } else {
            debug_assert_eq!(p.at(n - 3), n - 1);
            preimage(CaseTag::Case4, &v[..n - 4], &[v[n - 2], v[n - 1]], n)
        }
    };
    debug_assert!(validate(BijectionMap::Phi, &e).is_ok());
    Ok(e)
}

/// Inverts psi; with n in position n-2, the last value distinguishes case 3
/// (it is n-1) from case 4.
pub fn psi_invert(p: &Permutation) -> Result<CaseTaggedPreimage> {
    let n = p.n();
    if n < 4 {
        return Err(Error::TargetTooSmall { n });
    }
    if !in_class(p, ClassId::Av321_4123) {
        return Err(Error::OutsideClass);
    }
    let v = p.values();
    let e = if p.at(n) == n {
        preimage(CaseTag::Case2, &v[..n - 1], &[], n)
    } else if p.at(n - 1) == n {
        preimage(CaseTag::Case1, &v[..n - 2], &[v[n - 1]], n)
    } else {
        debug_assert_eq!(p.at(n - 2), n);
        if p.at(n) == n - 1 {
            preimage(CaseTag::Case3, &v[..n - 3], &[v[n - 2]], n)
        } else {
            debug_assert_eq!(p.at(n - 3), n - 1);
            preimage(CaseTag::Case4, &v[..n - 4], &[v[n - 2], v[n - 1]], n)
        }
    };
    debug_assert!(validate(BijectionMap::Psi, &e).is_ok());
    Ok(e)
}

fn preimage(tag: CaseTag, head: &[u8], tail: &[u8], target_size: usize) -> CaseTaggedPreimage {
    let mut values = Vec::with_capacity(head.len() + tail.len());
    values.extend_from_slice(head);
    values.extend_from_slice(tail);
    CaseTaggedPreimage {
        tag,
        perm: Permutation::from_one_line(&values).expect("tail removal preserves permutation"),
        target_size,
    }
}

/// Materializes the full multiset M_n for a class: case 1 block, case 2
/// block, case 3 block, case 4 block, lexicographic within each block.
/// Its cardinality equals |Av_n| by the bijection.
pub fn build_multiset(class: ClassId, n: usize) -> Result<Vec<CaseTaggedPreimage>> {
    build_multiset_capped(class, n, crate::oracle::DEFAULT_SIZE_CAP)
}

/// [`build_multiset`] with an explicit enumeration cap for the preimage
/// scans.
pub fn build_multiset_capped(
    class: ClassId,
    n: usize,
    size_cap: usize,
) -> Result<Vec<CaseTaggedPreimage>> {
    if n < 4 {
        return Err(Error::TargetTooSmall { n });
    }
    let mut out = Vec::new();
    for tag in CaseTag::ALL {
        let size = match tag {
            CaseTag::Case1 | CaseTag::Case2 => n - 1,
            CaseTag::Case3 | CaseTag::Case4 => n - 2,
        };
        let q = DistributionQuery::class(class, size).with_size_cap(size_cap);
        for perm in enumerate_class(&q)? {
            if tag == CaseTag::Case4 && !in_restricted(&perm, class)? {
                continue;
            }
            out.push(CaseTaggedPreimage {
                tag,
                perm,
                target_size: n,
            });
        }
    }
    Ok(out)
}

/// The statistic delta table. Writing m for the preimage size and v for its
/// values, "last fixed" means `v[m] = m`:
///
/// | map | case | d_cyc | d_fix                           | d_exc                      | d_inv |
/// |-----|------|-------|---------------------------------|----------------------------|-------|
/// | phi | 1    | 0     | -1 if last fixed                | +1                         | +1    |
/// | phi | 2    | +1    | +1                              | 0                          | 0     |
/// | phi | 3    | +1    | 0 if last fixed else +1         | +1                         | +3    |
/// | phi | 4    | 0     | -1 if `v[m-1] = m-1`            | +1 if `v[m-1] = m` else +2 | +4    |
/// | psi | 1    | 0     | -1 if last fixed                | +1                         | +1    |
/// | psi | 2    | +1    | +1                              | 0                          | 0     |
/// | psi | 3    | 0     | -1 if last fixed                | +1                         | +2    |
/// | psi | 4    | 0     | -[`v[m-1] = m-1`] - [`v[m] = m`]| +2                         | +4    |
///
/// Each entry satisfies stats(apply(e)) = stats(e.perm) + delta; the test
/// suite recomputes this exhaustively.
pub fn stat_delta(map: BijectionMap, e: &CaseTaggedPreimage) -> Result<StatDelta> {
    validate(map, e)?;
    let v = e.perm.values();
    let m = v.len();
    let last_fixed = m >= 1 && v[m - 1] as usize == m;
    let delta = match (map, e.tag) {
        (_, CaseTag::Case1) => StatDelta {
            d_cyc: 0,
            d_fix: if last_fixed { -1 } else { 0 },
            d_exc: 1,
            d_inv: 1,
        },
        (_, CaseTag::Case2) => StatDelta {
            d_cyc: 1,
            d_fix: 1,
            d_exc: 0,
            d_inv: 0,
        },
        (BijectionMap::Phi, CaseTag::Case3) => StatDelta {
            d_cyc: 1,
            d_fix: if last_fixed { 0 } else { 1 },
            d_exc: 1,
            d_inv: 3,
        },
        (BijectionMap::Psi, CaseTag::Case3) => StatDelta {
            d_cyc: 0,
            d_fix: if last_fixed { -1 } else { 0 },
            d_exc: 1,
            d_inv: 2,
        },
        (BijectionMap::Phi, CaseTag::Case4) => {
            // S' forbids v[m] = m; the second-to-last value decides the rest.
            let a = v[m - 2] as usize;
            StatDelta {
                d_cyc: 0,
                d_fix: if a == m - 1 { -1 } else { 0 },
                d_exc: if a == m { 1 } else { 2 },
                d_inv: 4,
            }
        }
        (BijectionMap::Psi, CaseTag::Case4) => {
            // S'' forbids v[m-1] = m, so position m-1 is never an excedance.
            let a = v[m - 2] as usize;
            StatDelta {
                d_cyc: 0,
                d_fix: -i16::from(a == m - 1) - i16::from(last_fixed),
                d_exc: 2,
                d_inv: 4,
            }
        }
    };
    Ok(delta)
}
